//! Exact local terms of the fixed point formula and their summation.
//!
//! The local datum of a component Y is
//!
//!   A(q,λ) = e^{(c−Σv_j)/2} · λ^{(l_Y−Σs_j)/2} · ∏_{m_i=0} x_i/φ(q,e^{x_i})
//!            · ∏_{m_i≠0} 1/φ(q,e^{x_i}λ^{m_i}) · ∏_j φ(q,e^{v_j}λ^{s_j}),
//!
//! paired against the fundamental class of Y per q-order. For isolated
//! points the computation stays in a factored form — polynomial numerator
//! series over one scalar denominator ∏(λ^{m_i/2} − λ^{−m_i/2}) — so the
//! pole-cancellation check of the summed terms reduces to one exact division
//! per q-order.

use num_traits::{One, Zero};

use crate::algebra::laurent::LaurentPoly;
use crate::algebra::qseries::QSeries;
use crate::algebra::rational_fn::LaurentRational;
use crate::algebra::truncpoly::{EqPoly, Poly};
use crate::algebra::{rat, Rat};
use crate::classes::{twist_uv, RootBundle};
use crate::index::{index_series, SpincData};
use crate::phi::phi_mu;

use super::vbundle::{v_root_bundle, VAssignment};
use super::{FixedComponent, FixedPointData, LefschetzError};

/// The full cohomology-valued local datum and its pairing ⟨·, μ_Y⟩.
#[derive(Debug, Clone)]
pub struct LocalTerm {
    pub full: QSeries<EqPoly>,
    pub paired: QSeries<LaurentRational>,
}

struct PhiContext {
    /// φ in the half-variable μ.
    phi: QSeries<LaurentPoly>,
    /// φ/(μ − μ⁻¹); unit q-series.
    psi: QSeries<LaurentPoly>,
}

impl PhiContext {
    fn new(order: usize) -> Self {
        let phi = phi_mu(order);
        let u = LaurentPoly::monomial(1, Rat::one()) - LaurentPoly::monomial(-1, Rat::one());
        let psi = phi.map(|c| {
            c.div_exact(&u)
                .expect("every q-coefficient of φ vanishes at μ = ±1")
        });
        PhiContext { phi, psi }
    }
}

/// Substitute μ ↦ λ^{w/2} (w pre-doubled).
fn subst_weight(s: &QSeries<LaurentPoly>, w: i64) -> QSeries<LaurentPoly> {
    debug_assert!(w % 2 == 0);
    let half = w / 2;
    s.map(|p| LaurentPoly::from_terms(p.terms().map(|(e, c)| (e * half, c.clone()))))
}

/// Substitute μ ↦ e^{r·x/2} into the μ-series, in Q[x]/(x^{cap+1}).
fn subst_root(s: &QSeries<LaurentPoly>, r: i64, cap: usize) -> QSeries<Poly> {
    s.map(|p| {
        let mut acc = Poly::constant(cap, Rat::zero());
        for (e, c) in p.terms() {
            let exp = Poly::x(cap).scale(&rat(e * r, 2)).exp().expect("nilpotent");
            acc = acc + exp.scale(c);
        }
        acc
    })
}

/// Substitute μ ↦ e^{r·x/2}·λ^{w/2} into the μ-series.
fn subst_root_weight(s: &QSeries<LaurentPoly>, r: i64, w: i64, cap: usize) -> QSeries<EqPoly> {
    debug_assert!(w % 2 == 0);
    let half = w / 2;
    s.map(|p| {
        let mut acc = EqPoly::constant(cap, LaurentRational::zero());
        for (e, c) in p.terms() {
            let exp = Poly::x(cap).scale(&rat(e * r, 2)).exp().expect("nilpotent");
            let lam = LaurentRational::from_poly(LaurentPoly::monomial(e * half, c.clone()));
            acc = acc + exp.to_eq().scale_by(&lam);
        }
        acc
    })
}

/// Isolated-point local term in factored form: λ^{shift}·numer/denom.
struct FactoredTerm {
    shift: i64,
    numer: QSeries<LaurentPoly>,
    denom: LaurentPoly,
}

fn isolated_factored(
    ctx: &PhiContext,
    comp: &FixedComponent,
    order: usize,
) -> Result<FactoredTerm, LefschetzError> {
    let mut numer = QSeries::<LaurentPoly>::one(order);
    let mut denom = LaurentPoly::one();
    for line in &comp.normal_lines {
        if line.weight == 0 {
            return Err(LefschetzError::ZeroNormalWeight);
        }
        let half = line.weight / 2;
        let u = LaurentPoly::monomial(half, Rat::one()) - LaurentPoly::monomial(-half, Rat::one());
        let unit = subst_weight(&ctx.psi, line.weight);
        numer = numer * unit.invert().expect("unit q-series");
        denom = denom * u;
    }
    let mut s_sum = 0;
    for line in &comp.v_lines {
        s_sum += line.weight;
        numer = numer * subst_weight(&ctx.phi, line.weight);
    }
    Ok(FactoredTerm {
        shift: (comp.spinc_weight - s_sum) / 2,
        numer,
        denom,
    })
}

fn factored_to_series(t: &FactoredTerm) -> QSeries<LaurentRational> {
    let coeffs = (0..=t.numer.order())
        .map(|n| {
            LaurentRational::new(t.numer.coeff(n).shifted(t.shift), t.denom.clone())
                .expect("nonzero denominator")
        })
        .collect();
    QSeries::from_coeffs(coeffs)
}

fn extended_term(
    ctx: &PhiContext,
    comp: &FixedComponent,
    spinc: &SpincData,
    order: usize,
) -> Result<LocalTerm, LefschetzError> {
    let d = comp.half_dim;
    let mut acc: QSeries<EqPoly> = QSeries::one(order).map(|c: &EqPoly| c.with_cap(d));
    for &r in &comp.tangent_roots {
        if r == 0 {
            return Err(LefschetzError::InvalidData(
                "tangent roots must be nonzero multiples of x".into(),
            ));
        }
        // x_i/φ(q, e^{x_i}) = 1/(φ(q,e^{rx})/(r·x)), a unit series
        let sub = subst_root(&ctx.phi, r, d + 1);
        let divided = sub.map(|p| {
            p.div_by_x()
                .expect("φ(q,e^x) vanishes at x = 0")
                .scale(&(Rat::one() / rat(r, 1)))
        });
        let inv = divided.invert().map_err(LefschetzError::Algebra)?;
        acc = acc * inv.map(|p| p.to_eq());
    }
    for line in &comp.normal_lines {
        if line.weight == 0 {
            return Err(LefschetzError::ZeroNormalWeight);
        }
        let sub = subst_root_weight(&ctx.phi, line.root, line.weight, d);
        acc = acc * sub.invert().map_err(LefschetzError::Algebra)?;
    }
    let mut s_sum = 0;
    let mut v_root_sum = 0;
    for line in &comp.v_lines {
        s_sum += line.weight;
        v_root_sum += line.root;
        acc = acc * subst_root_weight(&ctx.phi, line.root, line.weight, d);
    }
    // e^{(c − Σ v_j)/2}, restricted to Y
    let pre = Poly::x(d)
        .scale(&rat(spinc.c1 - v_root_sum, 2))
        .exp()
        .expect("nilpotent");
    let lam_shift = LaurentRational::lambda_pow((comp.spinc_weight - s_sum) / 2);
    let full = acc.map(|p| (pre.to_eq() * p.clone()).scale_by(&lam_shift));
    let paired = full.map(|p| p.with_cap(d).pair_fundamental());
    Ok(LocalTerm { full, paired })
}

/// The local datum of one component as a q-series over H*(Y; C(λ)), together
/// with its pairing against μ_Y.
pub fn local_term(
    comp: &FixedComponent,
    spinc: &SpincData,
    order: usize,
) -> Result<LocalTerm, LefschetzError> {
    let ctx = PhiContext::new(order);
    if comp.half_dim == 0 {
        let f = isolated_factored(&ctx, comp, order)?;
        let paired = factored_to_series(&f);
        let full = paired.map(|r| EqPoly::constant(0, r.clone()));
        Ok(LocalTerm { full, paired })
    } else {
        extended_term(&ctx, comp, spinc, order)
    }
}

/// Result of summing the local terms over all fixed components.
#[derive(Debug, Clone)]
pub struct LefschetzOutcome {
    pub q_order: usize,
    pub sum: QSeries<LaurentRational>,
    /// Every q-coefficient reduced to denominator 1.
    pub polynomial: bool,
    pub failing_order: Option<usize>,
    /// λ=1 values per q-order (when the sum is pole-free there).
    pub at_one: Option<Vec<Rat>>,
    /// The non-equivariant index series of the same operator.
    pub index: Vec<Rat>,
    pub matches_index: bool,
}

/// Sum the local terms, check pole cancellation, and compare the λ=1 values
/// with the non-equivariant index series computed from the global model.
pub fn lefschetz_sum(
    data: &FixedPointData,
    spinc: &SpincData,
    v: &VAssignment,
    order: usize,
) -> Result<LefschetzOutcome, LefschetzError> {
    data.validate()?;
    if spinc.m != data.m {
        return Err(LefschetzError::InvalidData(format!(
            "Spin^c dimension {} does not match fixture dimension {}",
            spinc.m, data.m
        )));
    }
    let data = data.clone().with_v(v);
    let ctx = PhiContext::new(order);
    let sum = if data.components.iter().all(|c| c.half_dim == 0) {
        let terms: Vec<FactoredTerm> = data
            .components
            .iter()
            .map(|c| isolated_factored(&ctx, c, order))
            .collect::<Result<_, _>>()?;
        // numerators over the common denominator ∏ denom_i via cofactors
        let k = terms.len();
        let mut prefix = vec![LaurentPoly::one(); k + 1];
        for i in 0..k {
            prefix[i + 1] = prefix[i].clone() * terms[i].denom.clone();
        }
        let mut suffix = vec![LaurentPoly::one(); k + 1];
        for i in (0..k).rev() {
            suffix[i] = suffix[i + 1].clone() * terms[i].denom.clone();
        }
        let big_d = prefix[k].clone();
        let coeffs = (0..=order)
            .map(|n| {
                let mut num = LaurentPoly::zero();
                for (i, t) in terms.iter().enumerate() {
                    let cof = prefix[i].clone() * suffix[i + 1].clone();
                    num = num + t.numer.coeff(n).shifted(t.shift) * cof;
                }
                LaurentRational::new(num, big_d.clone()).expect("nonzero denominator")
            })
            .collect();
        QSeries::from_coeffs(coeffs)
    } else {
        let mut acc = QSeries::<LaurentRational>::zero(order);
        for comp in &data.components {
            let term = if comp.half_dim == 0 {
                factored_to_series(&isolated_factored(&ctx, comp, order)?)
            } else {
                extended_term(&ctx, comp, spinc, order)?.paired
            };
            acc = acc + term;
        }
        acc
    };

    let failing_order = (0..=order).find(|&n| !sum.coeff(n).is_polynomial());
    let polynomial = failing_order.is_none();
    let tm = RootBundle::cp_tangent_stable(data.m);
    let twist = twist_uv(&tm, &v_root_bundle(v), data.m, order)
        .map_err(|e| LefschetzError::InvalidData(e.to_string()))?;
    let index: Vec<Rat> = index_series(spinc, &twist).coeffs().to_vec();
    let at_one: Option<Vec<Rat>> = (0..=order)
        .map(|n| sum.coeff(n).eval_rat(&Rat::one()).ok())
        .collect();
    let matches_index = at_one.as_deref() == Some(index.as_slice());
    Ok(LefschetzOutcome {
        q_order: order,
        sum,
        polynomial,
        failing_order,
        at_one,
        index,
        matches_index,
    })
}
