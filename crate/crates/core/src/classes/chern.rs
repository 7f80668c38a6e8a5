//! Chern character, Euler class and spinor characters.

use num_traits::{One, Zero};

use crate::algebra::rational_fn::LaurentRational;
use crate::algebra::truncpoly::{EqPoly, Poly};
use crate::algebra::{rat, rat_i, CoeffRing, Rat};

use super::bundle::{BundleKind, RootBundle};
use super::genus::pow_unit;
use super::ClassError;

fn exp_cx(c: i64, m: usize) -> Poly {
    Poly::x(m).scale(&rat_i(c)).exp().expect("nilpotent")
}

fn exp_cx_half(c: i64, m: usize) -> Poly {
    Poly::x(m).scale(&rat(c, 2)).exp().expect("nilpotent")
}

/// Σ multiplicity · e^{c·x}; paired kinds contribute both signs of each pair.
pub fn chern_character(bundle: &RootBundle, m: usize) -> Poly {
    let mut acc = Poly::constant(m, Rat::zero());
    for s in &bundle.summands {
        let mut term = exp_cx(s.root, m);
        if bundle.is_paired() {
            term = term + exp_cx(-s.root, m);
        }
        acc = acc + term.scale(&rat_i(s.multiplicity));
    }
    acc.with_cap(m)
}

/// Equivariant Chern character Σ multiplicity · e^{c·x} λ^{w}.
pub fn chern_character_eq(bundle: &RootBundle, m: usize) -> EqPoly {
    let mut acc = EqPoly::constant(m, LaurentRational::zero());
    for s in &bundle.summands {
        let mut term = exp_cx(s.root, m)
            .to_eq()
            .scale_by(&LaurentRational::lambda_pow(s.weight));
        if bundle.is_paired() {
            term = term
                + exp_cx(-s.root, m)
                    .to_eq()
                    .scale_by(&LaurentRational::lambda_pow(-s.weight));
        }
        acc = acc + term.scale_by(&LaurentRational::from_rat(rat_i(s.multiplicity)));
    }
    acc.with_cap(m)
}

/// Product of the chosen positive roots.
pub fn euler_class(bundle: &RootBundle, m: usize) -> Result<Poly, ClassError> {
    if !bundle.is_paired() {
        return Err(ClassError::UnpairedRoots);
    }
    let mut acc = Poly::one().with_cap(m);
    for s in &bundle.summands {
        if s.multiplicity < 0 {
            return Err(ClassError::NegativeMultiplicity);
        }
        for _ in 0..s.multiplicity {
            acc = acc * Poly::x(m).scale(&rat_i(s.root));
        }
    }
    Ok(acc)
}

/// Full complex spinor character ∏ (e^{c·x/2} λ^{w/2} + e^{−c·x/2} λ^{−w/2}),
/// non-equivariant shadow (λ = 1).
pub fn spinor_character(w: &RootBundle, m: usize) -> Result<Poly, ClassError> {
    if w.kind != BundleKind::SpinPaired {
        return Err(ClassError::UnpairedRoots);
    }
    let mut acc = Poly::one().with_cap(m);
    for s in &w.summands {
        if s.weight % 2 != 0 {
            return Err(ClassError::OddHalfWeight);
        }
        let factor = exp_cx_half(s.root, m) + exp_cx_half(-s.root, m);
        acc = acc * pow_unit(&factor, s.multiplicity);
    }
    Ok(acc)
}

/// Equivariant spinor character; pre-doubled weights keep λ-exponents integral.
pub fn spinor_character_eq(w: &RootBundle, m: usize) -> Result<EqPoly, ClassError> {
    if w.kind != BundleKind::SpinPaired {
        return Err(ClassError::UnpairedRoots);
    }
    let mut acc = EqPoly::one().with_cap(m);
    for s in &w.summands {
        if s.weight % 2 != 0 {
            return Err(ClassError::OddHalfWeight);
        }
        let factor = exp_cx_half(s.root, m)
            .to_eq()
            .scale_by(&LaurentRational::lambda_pow(s.weight / 2))
            + exp_cx_half(-s.root, m)
                .to_eq()
                .scale_by(&LaurentRational::lambda_pow(-s.weight / 2));
        let powed = if s.multiplicity < 0 {
            let inv = factor.try_inverse().ok_or(ClassError::NotInvertible)?;
            eq_pow(&inv, s.multiplicity.unsigned_abs())
        } else {
            eq_pow(&factor, s.multiplicity as u64)
        };
        acc = acc * powed;
    }
    Ok(acc)
}

fn eq_pow(p: &EqPoly, mut n: u64) -> EqPoly {
    let mut acc = EqPoly::one().with_cap(p.cap());
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_line_is_one() {
        let b = RootBundle::complex(vec![(0, 0, 1)]);
        assert_eq!(chern_character(&b, 3), Poly::one().with_cap(3));
    }

    #[test]
    fn hyperplane_ch_on_cp2() {
        let b = RootBundle::complex(vec![(1, 0, 1)]);
        let ch = chern_character(&b, 2);
        assert_eq!(ch.coeff(0), rat_i(1));
        assert_eq!(ch.coeff(1), rat_i(1));
        assert_eq!(ch.coeff(2), rat(1, 2));
    }

    #[test]
    fn virtual_square_ch_is_exponential_square() {
        // (γ − 1)² = γ² − 2γ + 1 has ch = (e^x − 1)²
        let b = RootBundle::complex(vec![(2, 0, 1), (1, 0, -2), (0, 0, 1)]);
        let m = 4;
        let ch = chern_character(&b, m);
        let ex1 = exp_cx(1, m) - Poly::one().with_cap(m);
        assert_eq!(ch, ex1.clone() * ex1);
    }

    #[test]
    fn ch_additive_and_multiplicative() {
        let m = 5;
        let a = RootBundle::complex(vec![(1, 0, 2)]);
        let b = RootBundle::complex(vec![(3, 0, 1)]);
        let sum = RootBundle::complex(vec![(1, 0, 2), (3, 0, 1)]);
        assert_eq!(
            chern_character(&sum, m),
            chern_character(&a, m) + chern_character(&b, m)
        );
        // line ⊗ line multiplies characters: γ^1 ⊗ γ^3 = γ^4
        let prod = RootBundle::complex(vec![(4, 0, 1)]);
        assert_eq!(
            chern_character(&prod, m),
            exp_cx(1, m) * exp_cx(3, m)
        );
    }

    #[test]
    fn euler_examples() {
        let m = 3;
        assert_eq!(
            euler_class(&RootBundle::zero(BundleKind::RealPaired), m).unwrap(),
            Poly::one().with_cap(m)
        );
        // T(CP¹) as a single pair with root 2x
        let t = RootBundle::real_paired(vec![(2, 0, 1)]);
        assert_eq!(euler_class(&t, 1).unwrap(), Poly::x(1).scale(&rat_i(2)));
        // rank-d bundle with all roots x
        let v = RootBundle::real_paired(vec![(1, 0, 3)]);
        assert_eq!(euler_class(&v, m).unwrap(), Poly::monomial(m, 3, rat_i(1)));
        assert_eq!(
            euler_class(&RootBundle::complex(vec![(1, 0, 1)]), m),
            Err(ClassError::UnpairedRoots)
        );
    }

    #[test]
    fn spinor_examples() {
        let m = 4;
        assert_eq!(
            spinor_character(&RootBundle::zero(BundleKind::SpinPaired), m).unwrap(),
            Poly::one().with_cap(m)
        );
        let one_pair = RootBundle::spin_paired(vec![(1, 0, 1)]);
        let expected = exp_cx_half(1, m) + exp_cx_half(-1, m);
        assert_eq!(spinor_character(&one_pair, m).unwrap(), expected.clone());
        // 2k copies give the 2k-th power
        let k = 2;
        let many = RootBundle::spin_paired(vec![(1, 0, 2 * k)]);
        assert_eq!(
            spinor_character(&many, m).unwrap(),
            pow_unit(&expected, 2 * k)
        );
    }

    #[test]
    fn spinor_rejects_odd_weights() {
        let w = RootBundle::spin_paired(vec![(1, 3, 1)]);
        assert_eq!(spinor_character(&w, 2), Err(ClassError::OddHalfWeight));
    }

    #[test]
    fn equivariant_line_character() {
        // a single line contributes e^{c·x}·λ^w
        let b = RootBundle::complex(vec![(2, 6, 1)]);
        let ch = chern_character_eq(&b, 2);
        let expect = exp_cx(2, 2)
            .to_eq()
            .scale_by(&LaurentRational::lambda_pow(6));
        assert_eq!(ch, expect);
        // λ = 1 recovers the non-equivariant character
        let at_one = ch.map_coeffs(|r| r.eval_rat(&rat_i(1)).unwrap());
        assert_eq!(at_one, chern_character(&b, 2));
    }

    #[test]
    fn equivariant_spinor_pair() {
        let w = RootBundle::spin_paired(vec![(1, 4, 1)]);
        let s = spinor_character_eq(&w, 3).unwrap();
        let expect = exp_cx_half(1, 3)
            .to_eq()
            .scale_by(&LaurentRational::lambda_pow(2))
            + exp_cx_half(-1, 3)
                .to_eq()
                .scale_by(&LaurentRational::lambda_pow(-2));
        assert_eq!(s, expect);
    }
}
