//! Twist series: the q-expansions of symmetric/exterior-power towers whose
//! Dirac indices generalize elliptic genera.

use num_traits::One;

use crate::algebra::qseries::QSeries;
use crate::algebra::truncpoly::Poly;
use crate::algebra::{rat, rat_i, CoeffRing};

use super::bundle::{BundleKind, RootBundle};
use super::genus::pow_unit;
use super::ClassError;

fn exp_cx(c: i64, m: usize) -> Poly {
    Poly::x(m).scale(&rat_i(c)).exp().expect("nilpotent")
}

/// ch Λ_{−1}(V*) = ∏_j (1 − e^{−v_j})^{multiplicity}.
///
/// Negative multiplicities divide; the division is performed with the x-adic
/// valuation made explicit, and fails when the virtual bundle has no
/// well-defined exterior-power factor (e.g. negative trivial summands).
fn lambda_minus_one_dual(v: &RootBundle, m: usize) -> Result<Poly, ClassError> {
    let neg_val: i64 = v
        .summands
        .iter()
        .filter(|s| s.multiplicity < 0)
        .map(|s| -s.multiplicity)
        .sum();
    let delta = neg_val as usize;
    let cap = m + delta;
    let mut num = Poly::one().with_cap(cap);
    let mut den = Poly::one().with_cap(cap);
    for s in &v.summands {
        let factor = Poly::one().with_cap(cap) - exp_cx(-s.root, cap);
        if s.multiplicity > 0 {
            num = num * pow_unit_or_nilpotent(&factor, s.multiplicity as u64);
        } else {
            if s.root == 0 {
                return Err(ClassError::NotInvertible);
            }
            den = den * pow_unit_or_nilpotent(&factor, (-s.multiplicity) as u64);
        }
    }
    if delta == 0 {
        return Ok(num.with_cap(m));
    }
    // den = x^δ · unit
    let mut unit = den;
    for _ in 0..delta {
        unit = unit.div_by_x().ok_or(ClassError::NotInvertible)?;
    }
    let unit_inv = unit.try_inverse().ok_or(ClassError::NotInvertible)?;
    let mut q = num * unit_inv.with_cap(cap);
    for _ in 0..delta {
        q = q.div_by_x().ok_or(ClassError::NotInvertible)?;
    }
    Ok(q.with_cap(m))
}

fn pow_unit_or_nilpotent(p: &Poly, mut n: u64) -> Poly {
    let mut acc = Poly::one().with_cap(p.cap());
    let mut b = p.clone();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * b.clone();
        }
        n >>= 1;
        if n > 0 {
            b = b.clone() * b;
        }
    }
    acc
}

/// 1 + sign · q^n · u as a q-series over the cohomology ring.
fn line_factor(order: usize, n: usize, u: Poly, sign: i64) -> QSeries<Poly> {
    QSeries::one(order) + QSeries::monomial(order, n, u.scale(&rat_i(sign)))
}

/// ch of ⊗_{n≥1} S_{q^n}(T̃M⊗C) ⊗ Λ_{−1}(V*) ⊗ ⊗_{n≥1} Λ_{−q^n}(Ṽ⊗C),
/// truncated at q^order. Reduced bundles appear as the (1−q^n)^rank
/// normalizing factors.
pub fn twist_uv(
    tm: &RootBundle,
    v: &RootBundle,
    m: usize,
    order: usize,
) -> Result<QSeries<Poly>, ClassError> {
    if !tm.is_paired() {
        return Err(ClassError::UnpairedRoots);
    }
    if v.kind != BundleKind::Complex {
        return Err(ClassError::UnpairedRoots);
    }
    let t2 = 2 * tm.virtual_rank();
    let s2 = 2 * v.virtual_rank();
    let mut acc = QSeries::constant(order, lambda_minus_one_dual(v, m)?);
    for n in 1..=order {
        let one_minus_qn = line_factor(order, n, Poly::one().with_cap(m), -1);
        acc = acc * one_minus_qn.pow(t2 - s2).expect("unit series");
        for s in &tm.summands {
            let f = line_factor(order, n, exp_cx(s.root, m), -1)
                * line_factor(order, n, exp_cx(-s.root, m), -1);
            acc = acc * f.pow(-s.multiplicity).expect("unit series");
        }
        for s in &v.summands {
            let f = line_factor(order, n, exp_cx(s.root, m), -1)
                * line_factor(order, n, exp_cx(-s.root, m), -1);
            acc = acc * f.pow(s.multiplicity).expect("unit series");
        }
    }
    Ok(acc)
}

/// twist_uv ⊗ Δ(W̃) ⊗ ⊗_{n≥1} Λ_{q^n}(W̃⊗C).
///
/// Δ(W̃) carries the reduced normalization 2^{−t} per the dimension of the
/// spinor module of a trivial bundle.
pub fn twist_uvw(
    tm: &RootBundle,
    v: &RootBundle,
    w: &RootBundle,
    m: usize,
    order: usize,
) -> Result<QSeries<Poly>, ClassError> {
    if w.kind != BundleKind::SpinPaired {
        return Err(ClassError::UnpairedRoots);
    }
    let mut acc = twist_uv(tm, v, m, order)?;
    // Δ(W̃) = 2^{−t} ∏ (e^{w/2} + e^{−w/2})
    let t = w.virtual_rank();
    let mut spin = Poly::one().with_cap(m);
    for s in &w.summands {
        if s.weight % 2 != 0 {
            return Err(ClassError::OddHalfWeight);
        }
        let factor = Poly::x(m).scale(&rat(s.root, 2)).exp().expect("nilpotent")
            + Poly::x(m).scale(&rat(-s.root, 2)).exp().expect("nilpotent");
        spin = spin * pow_unit(&factor, s.multiplicity);
    }
    let half_pow = if t >= 0 {
        rat(1, 2i64.pow(t as u32))
    } else {
        rat_i(2i64.pow((-t) as u32))
    };
    acc = acc.scale(&spin.scale(&half_pow));
    let t2 = 2 * t;
    for n in 1..=order {
        let one_plus_qn = line_factor(order, n, Poly::one().with_cap(m), 1);
        acc = acc * one_plus_qn.pow(-t2).expect("unit series");
        for s in &w.summands {
            let f = line_factor(order, n, exp_cx(s.root, m), 1)
                * line_factor(order, n, exp_cx(-s.root, m), 1);
            acc = acc * f.pow(s.multiplicity).expect("unit series");
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_twist_is_one() {
        let tm = RootBundle::zero(BundleKind::RealPaired);
        let v = RootBundle::zero(BundleKind::Complex);
        let s = twist_uv(&tm, &v, 3, 4).unwrap();
        assert_eq!(s, QSeries::one(4));
    }

    #[test]
    fn v_zero_q0_is_one() {
        let tm = RootBundle::cp_tangent_stable(2);
        let v = RootBundle::zero(BundleKind::Complex);
        let s = twist_uv(&tm, &v, 2, 3).unwrap();
        assert_eq!(s.coeff(0), Poly::one().with_cap(2));
    }

    #[test]
    fn q0_is_exterior_power_of_dual() {
        let tm = RootBundle::cp_tangent_stable(3);
        let v = RootBundle::complex(vec![(1, 0, 2), (2, 0, 1)]);
        let s = twist_uv(&tm, &v, 3, 2).unwrap();
        let expect = lambda_minus_one_dual(&v, 3).unwrap();
        assert_eq!(s.coeff(0), expect);
    }

    #[test]
    fn q1_of_bare_tangent_is_reduced_complexification() {
        // single pair with root 2x (the honest T CP¹ convention)
        let tm = RootBundle::real_paired(vec![(2, 0, 1)]);
        let v = RootBundle::zero(BundleKind::Complex);
        let s = twist_uv(&tm, &v, 1, 2).unwrap();
        let expect = exp_cx(2, 1) + exp_cx(-2, 1) - Poly::one().with_cap(1).scale(&rat_i(2));
        assert_eq!(s.coeff(1), expect);
        // cross-check on CP² with the stable model: ch(T̃M⊗C) = p₁ + O(x⁴) = 3x²
        let tm2 = RootBundle::cp_tangent_stable(2);
        let s2 = twist_uv(&tm2, &v, 2, 1).unwrap();
        assert_eq!(s2.coeff(1), Poly::monomial(2, 2, rat_i(3)));
    }

    #[test]
    fn uvw_with_zero_w_degenerates() {
        let tm = RootBundle::cp_tangent_stable(2);
        let v = RootBundle::complex(vec![(1, 0, 1)]);
        let w = RootBundle::zero(BundleKind::SpinPaired);
        assert_eq!(
            twist_uvw(&tm, &v, &w, 2, 3).unwrap(),
            twist_uv(&tm, &v, 2, 3).unwrap()
        );
    }

    #[test]
    fn rank_bookkeeping_on_zero_roots() {
        let tm = RootBundle::cp_tangent_stable(2);
        // V with two zero-root lines kills the q^0 constant term
        let v = RootBundle::complex(vec![(0, 2, 2)]);
        let w = RootBundle::spin_paired(vec![(0, 0, 3)]);
        let s = twist_uvw(&tm, &v, &w, 2, 1).unwrap();
        assert_eq!(s.coeff(0).coeff(0), rat_i(0));
        // with V = 0 the spinor normalization gives exactly 2^{-t}·2^t = 1
        let v0 = RootBundle::zero(BundleKind::Complex);
        let s0 = twist_uvw(&tm, &v0, &w, 2, 1).unwrap();
        assert_eq!(s0.coeff(0).coeff(0), rat_i(1));
    }

    #[test]
    fn virtual_v_with_honest_quotient() {
        // γ² − γ: Λ_{−1}(V*) = (1 − e^{−2x})/(1 − e^{−x}) = 1 + e^{−x}
        let v = RootBundle::complex(vec![(2, 0, 1), (1, 0, -1)]);
        let got = lambda_minus_one_dual(&v, 4).unwrap();
        let expect = Poly::one().with_cap(4) + exp_cx(-1, 4);
        assert_eq!(got, expect);
    }

    #[test]
    fn virtual_v_with_trivial_denominator_fails() {
        let v = RootBundle::complex(vec![(1, 0, 1), (0, 0, -1)]);
        assert_eq!(lambda_minus_one_dual(&v, 3), Err(ClassError::NotInvertible));
    }
}
