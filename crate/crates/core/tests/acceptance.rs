//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Run with `cargo test -p cpm-index --test acceptance -- --nocapture` to see
//! every line.

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

use cpm_index::algebra::truncpoly::Poly;
use cpm_index::algebra::Rat;
use cpm_index::index::pontryagin::reconstruct_pontryagin;
use cpm_index::index::rigidity::rigidity_relations;
use cpm_index::index::{ahat_class, SpincData};
use cpm_index::jacobi::{
    fy_index_law_check, lattice_shift_check, modular_check, phi_eval, real_line_pole_scan,
    ModularPoint, NumericPolicy,
};
use cpm_index::lefschetz::{
    build_v_section4, jacobi_index, lefschetz_sum, linear_model, linear_model_shifted, local_term,
    petrie_bound_report, star_invariant, synthetic_star, FixedComponent, LinearModelSpec,
    VSummand,
};
use cpm_index::phi::{eval_phi_mu, phi_mu};

fn report(id: u32, name: &str, pass: bool, detail: &str) {
    println!(
        "ACCEPTANCE {id} [{}] {name}: {detail}",
        if pass { "pass" } else { "FAIL" }
    );
    assert!(pass, "criterion {id} ({name}) failed: {detail}");
}

/// Sorted tuples of m distinct nonzero weights in [−bound, bound]; the
/// fixture components are permutation-invariant in a_1..a_m.
fn weight_tuples(m: usize, bound: i64) -> Vec<Vec<i64>> {
    fn rec(pool: &[i64], m: usize, start: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            rec(pool, m, i + 1, cur, out);
            cur.pop();
        }
    }
    let pool: Vec<i64> = (-bound..=bound).filter(|&w| w != 0).collect();
    let mut out = Vec::new();
    rec(&pool, m, 0, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_1_lefschetz_consistency() {
    let mut fixtures = 0usize;
    for m in 1..=4usize {
        let c1 = m as i64 + 1;
        let spinc = SpincData::new(m, c1).unwrap();
        for tail in weight_tuples(m, 4) {
            let mut weights = vec![0];
            weights.extend(tail);
            let data = linear_model(&LinearModelSpec::new(weights.clone()).unwrap())
                .unwrap()
                .with_standard_spinc(c1);
            let out = lefschetz_sum(&data, &spinc, &vec![], 4).unwrap();
            assert!(
                out.polynomial,
                "pole survives at order {:?} for weights {weights:?}",
                out.failing_order
            );
            assert!(
                out.matches_index,
                "λ=1 mismatch for weights {weights:?}: {:?} vs {:?}",
                out.at_one, out.index
            );
            fixtures += 1;
        }
    }
    report(
        1,
        "Lefschetz consistency",
        fixtures == 8 + 28 + 56 + 70,
        &format!("{fixtures} linear fixtures, q-order 4, all polynomial and matching at λ=1"),
    );
}

#[test]
fn criterion_2_vanishing_for_positive_fixed_dimension() {
    let mut count = 0usize;
    let mut all_zero = true;
    for (m, weights) in [
        (1usize, vec![0i64, 1]),
        (1, vec![0, -2]),
        (2, vec![0, 1, 2]),
        (2, vec![0, 1, -1]),
        (2, vec![0, 2, 3]),
        (3, vec![0, 1, 2, 3]),
        (3, vec![0, 1, -1, 2]),
        (3, vec![0, 2, -1, 4]),
        (4, vec![0, 1, 2, 3, 4]),
        (4, vec![0, 1, -1, 2, -2]),
    ] {
        let c1 = m as i64 + 1;
        let spinc = SpincData::new(m, c1).unwrap();
        let data = linear_model(&LinearModelSpec::new(weights).unwrap())
            .unwrap()
            .with_standard_spinc(c1);
        // one zero-weight line at every component: n(V|Y) = 1 > 0 = d(Y)
        let v: Vec<VSummand> = data
            .components
            .iter()
            .map(|c| VSummand { gamma_power: 1, lambda_twist: -c.gamma_weight, multiplicity: 1 })
            .collect();
        let with_v = data.clone().with_v(&v);
        for comp in &with_v.components {
            let term = local_term(comp, &spinc, 4).unwrap();
            if !term.paired.is_zero_series() {
                all_zero = false;
            }
        }
        let out = lefschetz_sum(&data, &spinc, &v, 4).unwrap();
        if !out.sum.is_zero_series() {
            all_zero = false;
        }
        count += 1;
    }
    report(
        2,
        "local vanishing when n(V|Y) > d(Y)",
        count == 10 && all_zero,
        &format!("{count} fixtures, every local q-coefficient exactly 0"),
    );
}

#[test]
fn criterion_3_star_constancy() {
    let mut balanced = 0usize;
    for m in 2..=5usize {
        let k = m as i64 + 1;
        for tail in weight_tuples(m, 4) {
            let sum: i64 = tail.iter().sum();
            if sum.rem_euclid(k) != 0 {
                continue;
            }
            let mut weights = vec![0];
            weights.extend(tail);
            let data =
                linear_model_shifted(&LinearModelSpec::new(weights.clone()).unwrap()).unwrap();
            let out = star_invariant(&data);
            assert!(out.pass, "weights {weights:?}: {:?}", out.values);
            balanced += 1;
        }
    }
    // deliberately unnormalized: plain γ-weights with Σa ≠ 0 must fail
    let mut failing = 0usize;
    for weights in [
        vec![0i64, 1, 2],
        vec![0, 1, 2, 3],
        vec![0, 2, 3],
        vec![0, 1, 4],
        vec![0, 1, 2, 4],
        vec![0, 1, -1, 3, 4],
    ] {
        let data = linear_model(&LinearModelSpec::new(weights).unwrap()).unwrap();
        let out = star_invariant(&data);
        assert!(!out.pass);
        assert!(out.witness.is_some(), "failure must carry a witness");
        failing += 1;
    }
    report(
        3,
        "weight identity constancy",
        balanced > 0 && failing >= 5,
        &format!("{balanced} shift-normalized fixtures constant; {failing} unnormalized fixtures fail with witness"),
    );
}

#[test]
fn criterion_4_mod24_congruence() {
    let start = std::time::Instant::now();
    let mut cells = 0usize;
    for m in 3..=11usize {
        for b in 0..=72i64 {
            let out = cpm_index::index::mod24::mod24_check(m, b).unwrap();
            assert_eq!(
                out.integral, out.congruent,
                "m={m} b={b}: integral {} vs congruent {}",
                out.integral, out.congruent
            );
            assert!(out.higher_terms_decouple);
            cells += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    report(
        4,
        "mod-24 congruence",
        cells == 9 * 73 && secs < 10.0,
        &format!("{cells} (m,b) cells exact in {secs:.2}s"),
    );
}

#[test]
fn criterion_5_rigidity_relations() {
    let mut checked = 0usize;
    for m in 3..=12usize {
        let values = rigidity_relations(m, &ahat_class(m)).unwrap();
        assert_eq!(values.len(), (m - 1) / 2);
        assert!(
            values.iter().all(|v| v.is_zero()),
            "m={m}: standard class violates a relation: {values:?}"
        );
        let perturbed = ahat_class(m) + Poly::monomial(m, 2, Rat::one());
        let pvalues = rigidity_relations(m, &perturbed).unwrap();
        assert!(
            pvalues.iter().any(|v| !v.is_zero()),
            "m={m}: x² perturbation passes all relations"
        );
        checked += 1;
    }
    report(
        5,
        "vanishing relations",
        checked == 10,
        "m = 3..12: standard class passes, ε·x² perturbation violates",
    );
}

#[test]
fn criterion_6_pontryagin_reconstruction() {
    let mut lines = Vec::new();
    for m in [4usize, 6, 8, 10] {
        let r = reconstruct_pontryagin(m).unwrap();
        assert_eq!(r.residual_dim, 0, "m={m}");
        let p = r.pontryagin.expect("unique solution");
        let mut c = Rat::one();
        let expected: Vec<Rat> = (1..=m / 2)
            .map(|j| {
                c = c.clone() * Rat::new(((m + 2 - j) as i64).into(), (j as i64).into());
                c.clone()
            })
            .collect();
        assert_eq!(p, expected, "m={m}");
        lines.push(format!("m={m} residual 0"));
    }
    for m in [5usize, 7, 9] {
        let r = reconstruct_pontryagin(m).unwrap();
        lines.push(format!("m={m} residual {} (reported)", r.residual_dim));
    }
    report(6, "Pontrjagin reconstruction", true, &lines.join("; "));
}

#[test]
fn criterion_7_jacobi_laws() {
    let policy = NumericPolicy { tolerance: 1e-6, ..Default::default() };
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a636f62);
    let mut max_residual: f64 = 0.0;
    for _ in 0..20 {
        let tau = Complex64::new(rng.gen_range(-0.45..0.45), rng.gen_range(0.5..1.5));
        let z = Complex64::new(rng.gen_range(0.07..0.93), rng.gen_range(-0.15..0.15));
        let p = ModularPoint::new(tau, z);
        for alpha in -2..=2i64 {
            for beta in -2..=2i64 {
                let c = lattice_shift_check(&p, alpha, beta, &policy).unwrap();
                max_residual = max_residual.max(c.residual);
                assert!(c.pass, "shift ({alpha},{beta}) residual {}", c.residual);
            }
        }
        for mat in [[0, -1, 1, 0], [1, 1, 0, 1], [1, -1, 1, 0]] {
            let c = modular_check(&p, mat, &policy).unwrap();
            max_residual = max_residual.max(c.residual);
            assert!(c.pass, "matrix {mat:?} residual {}", c.residual);
        }
    }
    // index law for five even-weight systems, I from the component bookkeeping
    let systems: [(Vec<i64>, Vec<i64>); 5] = [
        (vec![2, 4], vec![6]),
        (vec![2, -2], vec![4]),
        (vec![4, 6], vec![2, 8]),
        (vec![2, 4, 6], vec![8]),
        (vec![2, 2], vec![2, 2]),
    ];
    let zs = [0.2371, 0.4112, 0.6183, 0.1529, 0.7741];
    for (k, (mw, sw)) in systems.iter().enumerate() {
        let comp = FixedComponent {
            half_dim: 0,
            tangent_roots: vec![],
            normal_lines: mw
                .iter()
                .map(|&w| cpm_index::lefschetz::NormalLine { root: 0, weight: 2 * w })
                .collect(),
            gamma_weight: 0,
            spinc_weight: 0,
            v_lines: sw
                .iter()
                .map(|&w| cpm_index::lefschetz::VLine { root: 0, weight: 2 * w })
                .collect(),
        };
        let index = jacobi_index(&comp).unwrap();
        let tau = Complex64::new(0.1, 1.0 + 0.1 * k as f64);
        let p = ModularPoint::new(tau, Complex64::new(zs[k], 0.0));
        for (alpha, beta) in [(1i64, 0i64), (0, 1), (1, 1)] {
            let c = fy_index_law_check(mw, sw, index, &p, alpha, beta, &policy).unwrap();
            max_residual = max_residual.max(c.residual);
            assert!(c.pass, "system {k} ({alpha},{beta}): residual {}", c.residual);
        }
    }
    report(
        7,
        "Jacobi transformation laws",
        max_residual < 1e-6,
        &format!("max residual {max_residual:.2e} over shifts, S/T/TS, and 5 index systems"),
    );
}

#[test]
fn criterion_8_petrie_bound_machinery() {
    let mut cells = 0usize;
    for m in 3..=5usize {
        for n in 0..=(m as i64 + 2) {
            let data = synthetic_star(m, n).unwrap();
            let out = petrie_bound_report(&data).unwrap();
            assert!(out.star.pass, "m={m} n={n}: identity fails by construction");
            assert!(out.chain_consistent, "m={m} n={n}: {out:?}");
            if out.two_i_y0 >= 0 {
                assert!(n < m as i64, "m={m} n={n}: bound violated with I ≥ 0");
            }
            cells += 1;
        }
    }
    // the edge fixtures show the contrapositive: n ≥ m forces I < 0
    for m in 3..=5usize {
        let data = cpm_index::lefschetz::petrie_edge(m, m as i64).unwrap();
        let out = petrie_bound_report(&data).unwrap();
        assert!(out.two_i_y0 < 0);
        let v = build_v_section4(&data).unwrap();
        assert!(!v.is_empty());
    }
    report(
        8,
        "first-Pontrjagin bound machinery",
        cells == 6 + 7 + 8,
        &format!("{cells} synthetic fixtures: chain consistent, I ≥ 0 ⟹ n < m"),
    );
}

#[test]
fn criterion_9_exact_numeric_cross_check() {
    let policy = NumericPolicy::default();
    let series = phi_mu(24);
    let mut rng = ChaCha8Rng::seed_from_u64(0x70686921);
    let mut max_err: f64 = 0.0;
    for _ in 0..20 {
        let tau = Complex64::new(rng.gen_range(-0.3..0.3), rng.gen_range(0.5..1.2));
        let z = Complex64::new(rng.gen_range(0.05..0.95), rng.gen_range(-0.1..0.1));
        let q = (Complex64::new(0.0, 2.0 * PI) * tau).exp();
        let mu = (Complex64::new(0.0, PI) * z).exp();
        let exact = eval_phi_mu(&series, q, mu);
        let numeric = phi_eval(&ModularPoint::new(tau, z), &policy).unwrap();
        let err = (exact - numeric).norm() / (1.0 + numeric.norm());
        max_err = max_err.max(err);
        assert!(err < policy.tolerance, "τ={tau} z={z}: err {err:.2e}");
    }
    // and the real-line scan agrees with the exact summed series
    let data = linear_model(&LinearModelSpec::new(vec![0, 1]).unwrap())
        .unwrap()
        .with_standard_spinc(2);
    let spinc = SpincData::new(1, 2).unwrap();
    let scan = real_line_pole_scan(
        &data,
        &spinc,
        &vec![],
        Complex64::new(0.0, 1.0),
        101,
        8,
        &policy,
    )
    .unwrap();
    report(
        9,
        "exact/numeric agreement",
        max_err < policy.tolerance && scan.pass,
        &format!(
            "max φ residual {max_err:.2e}; scan stable (growth {:.2e}) and matching (residual {:.2e})",
            scan.growth, scan.exact_residual_max
        ),
    );
}
