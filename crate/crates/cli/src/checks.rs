//! Check runners: each command builds a deterministic list of reports.

use std::fmt;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use cpm_index::algebra::truncpoly::Poly;
use cpm_index::algebra::{rat_i, Rat};
use cpm_index::fixture::{self, Fixture, FixtureError};
use cpm_index::index::mod24::mod24_check;
use cpm_index::index::pontryagin::reconstruct_pontryagin;
use cpm_index::index::rigidity::rigidity_relations;
use cpm_index::index::{ahat_class, IndexError, SpincData};
use cpm_index::jacobi::{
    fy_index_law_check, lattice_shift_check, modular_check, phi_eval, real_line_pole_scan,
    write_scan_csv, ModularPoint, NumericPolicy,
};
use cpm_index::lefschetz::{
    jacobi_index, lefschetz_sum, linear_model, linear_model_shifted, petrie_bound_report,
    petrie_edge, star_invariant, synthetic_star, FixedComponent, LefschetzError, LinearModelSpec,
    NormalLine, VLine,
};
use cpm_index::phi::{eval_phi_mu, phi_mu};
use cpm_index::report::{rat_vec_json, VerificationReport};

use crate::Family;

#[derive(Debug)]
pub enum RunError {
    Fixture(FixtureError),
    Lefschetz(LefschetzError),
    Index(IndexError),
    Io(std::io::Error),
    Numeric(String),
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Fixture(e) => write!(f, "{e}"),
            RunError::Lefschetz(e) => write!(f, "{e}"),
            RunError::Index(e) => write!(f, "{e}"),
            RunError::Io(e) => write!(f, "{e}"),
            RunError::Numeric(e) => write!(f, "{e}"),
        }
    }
}

impl From<FixtureError> for RunError {
    fn from(e: FixtureError) -> Self {
        RunError::Fixture(e)
    }
}
impl From<LefschetzError> for RunError {
    fn from(e: LefschetzError) -> Self {
        RunError::Lefschetz(e)
    }
}
impl From<IndexError> for RunError {
    fn from(e: IndexError) -> Self {
        RunError::Index(e)
    }
}
impl From<std::io::Error> for RunError {
    fn from(e: std::io::Error) -> Self {
        RunError::Io(e)
    }
}

pub type RunResult = Result<(Value, Vec<VerificationReport>), RunError>;

pub fn run_lefschetz(path: &Path, q_order: Option<usize>) -> RunResult {
    let fx = fixture::load(path)?;
    let resolved = fixture::resolve(&fx)?;
    let order = q_order.unwrap_or(resolved.q_order);
    let out = lefschetz_sum(&resolved.data, &resolved.spinc, &resolved.v, order)?;
    let label = path.file_stem().and_then(|s| s.to_str()).unwrap_or("fixture");
    Ok((
        json!({ "fixture": path.display().to_string(), "qOrder": order }),
        vec![out.to_report(label)],
    ))
}

pub fn run_star(path: &Path) -> RunResult {
    let fx = fixture::load(path)?;
    let resolved = fixture::resolve(&fx)?;
    let label = path.file_stem().and_then(|s| s.to_str()).unwrap_or("fixture");
    Ok((
        json!({ "fixture": path.display().to_string() }),
        vec![star_invariant(&resolved.data).to_report(label)],
    ))
}

pub fn run_mod24(m: usize, (lo, hi): (i64, i64)) -> RunResult {
    let outcomes: Vec<_> = (lo..hi)
        .into_par_iter()
        .map(|b| mod24_check(m, b))
        .collect::<Result<_, _>>()?;
    let integral: Vec<i64> = outcomes.iter().filter(|o| o.integral).map(|o| o.b).collect();
    let mut reports: Vec<VerificationReport> =
        outcomes.iter().map(|o| o.to_report()).collect();
    let residue = (m as i64 + 1).rem_euclid(24);
    let pass = integral.iter().all(|b| b.rem_euclid(24) == residue);
    reports.push(VerificationReport::exact(
        format!("mod24/m{m}/summary"),
        pass,
        json!({ "m": m, "bRange": [lo, hi] }),
        if pass { Value::Null } else { json!({ "integralB": integral.clone() }) },
        json!({ "integralB": integral, "residueClass": residue }),
    ));
    Ok((json!({ "m": m, "bRange": [lo, hi] }), reports))
}

pub fn run_rigidity(m: usize, seed: u64) -> RunResult {
    let mut reports = Vec::new();
    let standard = rigidity_relations(m, &ahat_class(m))?;
    let zeros = standard.iter().all(|v| v.is_zero());
    reports.push(VerificationReport::exact(
        format!("rigidity/m{m}/standard"),
        zeros,
        json!({ "m": m }),
        if zeros { Value::Null } else { rat_vec_json(&standard) },
        json!({ "relations": rat_vec_json(&standard) }),
    ));
    let perturbed = rigidity_relations(m, &(ahat_class(m) + Poly::monomial(m, 2, Rat::one())))?;
    let violated = perturbed.iter().any(|v| !v.is_zero());
    reports.push(VerificationReport::exact(
        format!("rigidity/m{m}/perturbation-witness"),
        violated,
        json!({ "m": m, "epsilon": 1 }),
        if violated { Value::Null } else { json!({ "relations": rat_vec_json(&perturbed) }) },
        json!({ "relations": rat_vec_json(&perturbed) }),
    ));
    // seeded superposition suite: values are linear in the class
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut linear = true;
    for _ in 0..5 {
        let c2 = rat_i(rng.gen_range(-20i64..20)) / rat_i(rng.gen_range(1i64..9));
        let c4 = rat_i(rng.gen_range(-20i64..20)) / rat_i(rng.gen_range(1i64..9));
        let p2 = Poly::monomial(m, 2, c2);
        let p4 = Poly::monomial(m, 4, c4);
        let total = rigidity_relations(m, &(ahat_class(m) + p2.clone() + p4.clone()))?;
        let parts: Vec<Rat> = rigidity_relations(m, &ahat_class(m))?
            .iter()
            .zip(rigidity_relations(m, &p2)?.iter())
            .zip(rigidity_relations(m, &p4)?.iter())
            .map(|((a, b), c)| a.clone() + b.clone() + c.clone())
            .collect();
        if total != parts {
            linear = false;
        }
    }
    reports.push(VerificationReport::exact(
        format!("rigidity/m{m}/superposition"),
        linear,
        json!({ "m": m, "seed": seed, "rounds": 5 }),
        if linear { Value::Null } else { json!({ "linear": false }) },
        Value::Null,
    ));
    Ok((json!({ "m": m, "seed": seed }), reports))
}

pub fn run_petrie(path: &Path) -> RunResult {
    let fx = fixture::load(path)?;
    let resolved = fixture::resolve(&fx)?;
    let out = petrie_bound_report(&resolved.data)?;
    Ok((
        json!({ "fixture": path.display().to_string() }),
        vec![out.to_report()],
    ))
}

pub fn run_reconstruct(m: usize) -> RunResult {
    let r = reconstruct_pontryagin(m)?;
    Ok((json!({ "m": m }), vec![r.to_report()]))
}

pub fn run_jacobi(tolerance: f64, seed: u64, csv: Option<&Path>) -> RunResult {
    let policy = NumericPolicy { tolerance, ..Default::default() };
    let mut reports = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_shift: f64 = 0.0;
    let mut max_modular: f64 = 0.0;
    for _ in 0..8 {
        let tau = Complex64::new(rng.gen_range(-0.4..0.4), rng.gen_range(0.5..1.4));
        let z = Complex64::new(rng.gen_range(0.07..0.93), rng.gen_range(-0.15..0.15));
        let p = ModularPoint::new(tau, z);
        for alpha in -2..=2i64 {
            for beta in -2..=2i64 {
                let c = lattice_shift_check(&p, alpha, beta, &policy)
                    .map_err(|e| RunError::Numeric(e.to_string()))?;
                max_shift = max_shift.max(c.residual);
            }
        }
        for mat in [[0, -1, 1, 0], [1, 1, 0, 1], [1, -1, 1, 0]] {
            let c = modular_check(&p, mat, &policy)
                .map_err(|e| RunError::Numeric(e.to_string()))?;
            max_modular = max_modular.max(c.residual);
        }
    }
    reports.push(VerificationReport::numeric(
        "jacobi/lattice-shifts",
        max_shift < tolerance,
        json!({ "tolerance": tolerance, "seed": seed, "points": 8, "alphaBeta": "[-2,2]^2" }),
        if max_shift < tolerance { Value::Null } else { json!({ "maxResidual": max_shift }) },
        json!({ "maxResidual": max_shift }),
    ));
    reports.push(VerificationReport::numeric(
        "jacobi/modular-laws",
        max_modular < tolerance,
        json!({ "tolerance": tolerance, "seed": seed, "matrices": ["S", "T", "TS"] }),
        if max_modular < tolerance { Value::Null } else { json!({ "maxResidual": max_modular }) },
        json!({ "maxResidual": max_modular }),
    ));

    // index law on even-weight systems with I from the component bookkeeping
    let systems: [(Vec<i64>, Vec<i64>); 3] =
        [(vec![2, 4], vec![6]), (vec![2, -2], vec![4]), (vec![4, 6], vec![2, 8])];
    let mut max_index_law: f64 = 0.0;
    for (k, (mw, sw)) in systems.iter().enumerate() {
        let comp = FixedComponent {
            half_dim: 0,
            tangent_roots: vec![],
            normal_lines: mw.iter().map(|&w| NormalLine { root: 0, weight: 2 * w }).collect(),
            gamma_weight: 0,
            spinc_weight: 0,
            v_lines: sw.iter().map(|&w| VLine { root: 0, weight: 2 * w }).collect(),
        };
        let index = jacobi_index(&comp)?;
        let p = ModularPoint::new(
            Complex64::new(0.05, 1.0 + 0.2 * k as f64),
            Complex64::new(0.2371 + 0.11 * k as f64, 0.0),
        );
        for (alpha, beta) in [(1i64, 0i64), (0, 1), (1, 1)] {
            let c = fy_index_law_check(mw, sw, index, &p, alpha, beta, &policy)
                .map_err(|e| RunError::Numeric(e.to_string()))?;
            max_index_law = max_index_law.max(c.residual);
        }
    }
    reports.push(VerificationReport::numeric(
        "jacobi/index-law",
        max_index_law < tolerance,
        json!({ "tolerance": tolerance, "systems": systems.len() }),
        if max_index_law < tolerance { Value::Null } else { json!({ "maxResidual": max_index_law }) },
        json!({ "maxResidual": max_index_law }),
    ));

    // exact q-series vs truncated product at seeded points
    let series = phi_mu(24);
    let mut max_cross: f64 = 0.0;
    for _ in 0..8 {
        let tau = Complex64::new(rng.gen_range(-0.3..0.3), rng.gen_range(0.5..1.2));
        let z = Complex64::new(rng.gen_range(0.05..0.95), rng.gen_range(-0.1..0.1));
        let q = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * tau).exp();
        let mu = (Complex64::new(0.0, std::f64::consts::PI) * z).exp();
        let exact = eval_phi_mu(&series, q, mu);
        let numeric =
            phi_eval(&ModularPoint::new(tau, z), &policy).map_err(|e| RunError::Numeric(e.to_string()))?;
        max_cross = max_cross.max((exact - numeric).norm() / (1.0 + numeric.norm()));
    }
    reports.push(VerificationReport::numeric(
        "jacobi/exact-numeric-cross-check",
        max_cross < tolerance,
        json!({ "tolerance": tolerance, "seed": seed, "seriesOrder": 24 }),
        if max_cross < tolerance { Value::Null } else { json!({ "maxResidual": max_cross }) },
        json!({ "maxResidual": max_cross }),
    ));

    // real-line scan on the smallest linear model
    let data = linear_model(&LinearModelSpec::new(vec![0, 1]).unwrap())?
        .with_standard_spinc(2);
    let spinc = SpincData::new(1, 2)?;
    let scan = real_line_pole_scan(
        &data,
        &spinc,
        &vec![],
        Complex64::new(0.0, 1.0),
        101,
        8,
        &policy,
    )?;
    if let Some(csv_path) = csv {
        let file = std::fs::File::create(csv_path)?;
        write_scan_csv(file, &scan.rows)?;
    }
    reports.push(scan.to_report("cp1"));
    Ok((json!({ "tolerance": tolerance, "seed": seed }), reports))
}

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

fn weight_label(weights: &[i64]) -> String {
    weights
        .iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join("_")
}

pub fn run_all(q_order: usize, tolerance: f64, max_weight: i64, seed: u64) -> RunResult {
    let mut reports = Vec::new();

    // pole cancellation + λ=1 over the linear battery
    let mut battery = Vec::new();
    for m in 1..=3usize {
        for tail in weight_tuples(m, max_weight) {
            let mut weights = vec![0i64];
            weights.extend(tail);
            battery.push((m, weights));
        }
    }
    let lef_reports: Vec<VerificationReport> = battery
        .par_iter()
        .map(|(m, weights)| {
            let c1 = *m as i64 + 1;
            let spinc = SpincData::new(*m, c1).expect("parity");
            let data = linear_model(&LinearModelSpec::new(weights.clone()).expect("distinct"))
                .expect("valid model")
                .with_standard_spinc(c1);
            let out = lefschetz_sum(&data, &spinc, &vec![], q_order).expect("computable");
            out.to_report(&format!("m{m}/w{}", weight_label(weights)))
        })
        .collect();
    reports.extend(lef_reports);

    // weight-identity battery on shift-normalized models
    for m in 2..=4usize {
        let k = m as i64 + 1;
        for tail in weight_tuples(m, max_weight) {
            if tail.iter().sum::<i64>().rem_euclid(k) != 0 {
                continue;
            }
            let mut weights = vec![0i64];
            weights.extend(tail);
            let data =
                linear_model_shifted(&LinearModelSpec::new(weights.clone()).expect("distinct"))?;
            reports.push(star_invariant(&data).to_report(&format!("m{m}/w{}", weight_label(&weights))));
        }
    }

    let (_, mod24_reports) = run_mod24(4, (0, 48))?;
    reports.extend(mod24_reports);
    for m in [5usize, 7] {
        let (_, r) = run_mod24(m, (0, 24))?;
        reports.extend(r);
    }

    for m in 3..=10usize {
        let (_, r) = run_rigidity(m, seed)?;
        reports.extend(r);
    }

    for m in [4usize, 5, 6] {
        let (_, r) = run_reconstruct(m)?;
        reports.extend(r);
    }

    for m in 3..=4usize {
        for n in 0..=(m as i64 + 1) {
            let data = synthetic_star(m, n)?;
            reports.push(petrie_bound_report(&data)?.to_report());
        }
    }

    let (_, jacobi_reports) = run_jacobi(tolerance, seed, None)?;
    reports.extend(jacobi_reports);

    Ok((
        json!({
            "qOrder": q_order,
            "tolerance": tolerance,
            "maxWeight": max_weight,
            "seed": seed,
        }),
        reports,
    ))
}

pub fn run_gen_fixtures(
    family: Family,
    m: usize,
    n: Option<i64>,
    max_weight: i64,
    out_dir: &Path,
) -> RunResult {
    std::fs::create_dir_all(out_dir)?;
    let mut files: Vec<String> = Vec::new();
    let mut write = |name: String, fx: &Fixture| -> Result<(), RunError> {
        let path: PathBuf = out_dir.join(name);
        fixture::save(&path, fx)?;
        files.push(path.display().to_string());
        Ok(())
    };
    match family {
        Family::Linear => {
            let k = m as i64 + 1;
            for tail in weight_tuples(m, max_weight) {
                if tail.iter().sum::<i64>().rem_euclid(k) != 0 {
                    continue;
                }
                let mut weights = vec![0i64];
                weights.extend(tail);
                let mut fx = Fixture::linear(m, weights.clone(), m as i64 + 1);
                fx.shift_normalize = true;
                write(format!("linear_m{m}_w{}.json", weight_label(&weights)), &fx)?;
            }
            if files.is_empty() {
                return Err(RunError::Lefschetz(LefschetzError::InfeasibleParams(
                    format!("no admissible weight vectors for m = {m}, bound {max_weight}"),
                )));
            }
        }
        Family::SyntheticStar => {
            let n = n.ok_or_else(|| {
                RunError::Lefschetz(LefschetzError::InfeasibleParams("--n is required".into()))
            })?;
            let data = synthetic_star(m, n)?;
            let fx = Fixture::from_data(&data, m as i64 + 1);
            write(format!("synthetic-star_m{m}_n{n}.json"), &fx)?;
        }
        Family::PetrieEdge => {
            let n = n.unwrap_or(m as i64);
            let data = petrie_edge(m, n)?;
            let fx = Fixture::from_data(&data, m as i64 + 1);
            write(format!("petrie-edge_m{m}_n{n}.json"), &fx)?;
        }
    }
    let count = files.len();
    Ok((
        json!({ "m": m, "n": n, "maxWeight": max_weight, "outDir": out_dir.display().to_string() }),
        vec![VerificationReport::exact(
            "gen-fixtures",
            true,
            json!({ "m": m }),
            Value::Null,
            json!({ "files": files, "count": count }),
        )],
    ))
}
