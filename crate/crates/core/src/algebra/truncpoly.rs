//! Truncated polynomials: the cohomology-ring model Q[x]/(x^{m+1}) and its
//! equivariant variant with rational-function coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational_fn::LaurentRational;
use super::ring::CoeffRing;
use super::{rat_i, AlgebraError, Rat};

/// Degree bound used by plain constants, which truncate only when they meet a
/// capped value.
pub const UNCAPPED: usize = usize::MAX;

/// A polynomial in `x` truncated at `x^{cap+1} = 0`, coefficients in `C`.
///
/// For the cohomology model of CP^m the cap is `m`. Values produced by
/// `Zero::zero` / `One::one` carry the sentinel cap [`UNCAPPED`]; binary
/// operations take the minimum of the two caps, so constants adapt to
/// whatever capped ring they are combined with. Coefficients are kept
/// trimmed (no trailing zeros) and equality compares coefficients only.
#[derive(Debug, Clone)]
pub struct TruncPoly<C> {
    cap: usize,
    coeffs: Vec<C>,
}

/// Non-equivariant cohomology classes: rational coefficients.
pub type Poly = TruncPoly<Rat>;
/// Equivariant classes: coefficients rational in the circle variable λ.
pub type EqPoly = TruncPoly<LaurentRational>;

impl<C: CoeffRing> TruncPoly<C> {
    /// Polynomial with the given coefficients in Q[x]/(x^{m+1}).
    pub fn new(m: usize, coeffs: Vec<C>) -> Self {
        let mut coeffs = coeffs;
        coeffs.truncate(m + 1);
        let mut p = TruncPoly { cap: m, coeffs };
        p.trim();
        p
    }

    pub fn constant(m: usize, c: C) -> Self {
        Self::new(m, vec![c])
    }

    pub fn monomial(m: usize, k: usize, c: C) -> Self {
        if k > m {
            return Self::new(m, vec![]);
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self::new(m, coeffs)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Degree of the highest stored (nonzero) coefficient; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of the top degree `cap` — the pairing against the
    /// fundamental class of the model.
    pub fn pair_fundamental(&self) -> C {
        debug_assert!(self.cap != UNCAPPED, "pairing needs a capped polynomial");
        self.coeff(self.cap)
    }

    /// Re-truncate to a new cap.
    pub fn with_cap(&self, cap: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        if cap != UNCAPPED {
            coeffs.truncate(cap + 1);
        }
        let mut p = TruncPoly { cap, coeffs };
        p.trim();
        p
    }

    pub fn scale_by(&self, c: &C) -> Self {
        let mut p = TruncPoly {
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        };
        p.trim();
        p
    }

    /// Substitute x ↦ c·x.
    pub fn subst_scale(&self, c: &C) -> Self {
        let mut pow = C::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                pow = pow * c.clone();
            }
            coeffs.push(a.clone() * pow.clone());
        }
        let mut p = TruncPoly { cap: self.cap, coeffs };
        p.trim();
        p
    }

    pub fn map_coeffs<D: CoeffRing>(&self, f: impl Fn(&C) -> D) -> TruncPoly<D> {
        let mut p = TruncPoly {
            cap: self.cap,
            coeffs: self.coeffs.iter().map(f).collect(),
        };
        p.trim();
        p
    }

    /// Exact division by `x`. Requires a vanishing constant term.
    ///
    /// The result is only determined up to degree `cap − 1`, so the cap drops
    /// by one.
    pub fn div_by_x(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if !self.coeff(0).is_zero() || self.cap == 0 {
            return None;
        }
        let cap = if self.cap == UNCAPPED { UNCAPPED } else { self.cap - 1 };
        let mut p = TruncPoly {
            cap,
            coeffs: self.coeffs[1..].to_vec(),
        };
        p.trim();
        Some(p)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn min_cap(&self, other: &Self) -> usize {
        self.cap.min(other.cap)
    }
}

impl Poly {
    /// The generator `x` of Q[x]/(x^{m+1}).
    pub fn x(m: usize) -> Self {
        Self::monomial(m, 1, Rat::one())
    }

    pub fn scale(&self, r: &Rat) -> Self {
        self.scale_by(r)
    }

    /// Exact exponential Σ_{k≤cap} a^k/k! of a nilpotent element.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        if !self.coeff(0).is_zero() {
            return Err(AlgebraError::NonNilpotentInput);
        }
        if self.is_zero() {
            return Ok(Self::one());
        }
        if self.cap == UNCAPPED {
            return Err(AlgebraError::NonNilpotentInput);
        }
        let mut sum = Self::constant(self.cap, Rat::one());
        let mut term = Self::constant(self.cap, Rat::one());
        for k in 1..=self.cap {
            term = (term * self.clone()).scale(&(Rat::one() / rat_i(k as i64)));
            if term.is_zero() {
                break;
            }
            sum = sum + term.clone();
        }
        Ok(sum)
    }

    /// Embed into the equivariant ring (λ-constant coefficients).
    pub fn to_eq(&self) -> EqPoly {
        self.map_coeffs(|r| LaurentRational::from_rat(r.clone()))
    }
}

impl<C: CoeffRing> PartialEq for TruncPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<C: CoeffRing> Add for TruncPoly<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let cap = self.min_cap(&rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            if cap != UNCAPPED && k > cap {
                break;
            }
            let a = self.coeffs.get(k).cloned().unwrap_or_else(C::zero);
            let b = rhs.coeffs.get(k).cloned().unwrap_or_else(C::zero);
            coeffs.push(a + b);
        }
        let mut p = TruncPoly { cap, coeffs };
        p.trim();
        p
    }
}

impl<C: CoeffRing> Sub for TruncPoly<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: CoeffRing> Neg for TruncPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        TruncPoly {
            cap: self.cap,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<C: CoeffRing> Mul for TruncPoly<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let cap = self.min_cap(&rhs);
        if self.is_zero() || rhs.is_zero() {
            return TruncPoly { cap, coeffs: vec![] };
        }
        let deg = self.coeffs.len() + rhs.coeffs.len() - 2;
        let top = if cap == UNCAPPED { deg } else { deg.min(cap) };
        let mut coeffs = vec![C::zero(); top + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > top || a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > top {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        let mut p = TruncPoly { cap, coeffs };
        p.trim();
        p
    }
}

impl<C: CoeffRing> Zero for TruncPoly<C> {
    fn zero() -> Self {
        TruncPoly { cap: UNCAPPED, coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: CoeffRing> One for TruncPoly<C> {
    fn one() -> Self {
        TruncPoly { cap: UNCAPPED, coeffs: vec![C::one()] }
    }
}

impl<C: CoeffRing> CoeffRing for TruncPoly<C> {
    /// Inverse via the geometric series over the nilpotent part; the constant
    /// coefficient must itself be a unit in `C`.
    fn try_inverse(&self) -> Option<Self> {
        let c0 = self.coeff(0);
        let c0_inv = c0.try_inverse()?;
        if self.coeffs.len() <= 1 {
            return Some(TruncPoly { cap: self.cap, coeffs: vec![c0_inv] });
        }
        if self.cap == UNCAPPED {
            return None; // genuinely non-constant and unbounded: not a unit
        }
        // self = c0 (1 + u) with u nilpotent: inverse = c0^{-1} Σ (-u)^k.
        let u = self.scale_by(&c0_inv) - Self::one().with_cap(self.cap);
        let mut sum = Self::one().with_cap(self.cap);
        let mut term = Self::one().with_cap(self.cap);
        for _ in 1..=self.cap {
            term = -(term * u.clone());
            if term.is_zero() {
                break;
            }
            sum = sum + term.clone();
        }
        Some(sum.scale_by(&c0_inv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn x(m: usize) -> Poly {
        Poly::x(m)
    }

    #[test]
    fn product_truncates_at_cap() {
        let p = x(2) + Poly::one();
        let q = p.clone() * p.clone() * p.clone();
        // (1+x)^3 = 1 + 3x + 3x^2 in Q[x]/(x^3)
        assert_eq!(q.coeff(0), rat_i(1));
        assert_eq!(q.coeff(1), rat_i(3));
        assert_eq!(q.coeff(2), rat_i(3));
        assert_eq!(q.degree(), 2);
    }

    #[test]
    fn exp_of_zero_is_one() {
        assert_eq!(Poly::zero().exp().unwrap(), Poly::one());
    }

    #[test]
    fn exp_of_x_mod_x3() {
        let e = x(2).exp().unwrap();
        assert_eq!(e.coeff(0), rat_i(1));
        assert_eq!(e.coeff(1), rat_i(1));
        assert_eq!(e.coeff(2), rat(1, 2));
    }

    #[test]
    fn exp_of_2x_mod_x3() {
        let e = x(2).scale(&rat_i(2)).exp().unwrap();
        assert_eq!(e.coeff(0), rat_i(1));
        assert_eq!(e.coeff(1), rat_i(2));
        assert_eq!(e.coeff(2), rat_i(2));
    }

    #[test]
    fn exp_rejects_constant_term() {
        let p = Poly::constant(3, rat_i(1));
        assert_eq!(p.exp(), Err(AlgebraError::NonNilpotentInput));
    }

    #[test]
    fn pair_fundamental_examples() {
        let m = 2;
        assert_eq!(Poly::monomial(m, m, Rat::one()).pair_fundamental(), rat_i(1));
        assert_eq!(Poly::constant(m, rat_i(1)).pair_fundamental(), rat_i(0));
        let p = (x(m) + Poly::one()) * (x(m) + Poly::one()) * (x(m) + Poly::one());
        assert_eq!(p.pair_fundamental(), rat_i(3));
    }

    #[test]
    fn inverse_of_unit() {
        let p = Poly::one().with_cap(4) - x(4);
        let inv = p.clone().try_inverse().unwrap();
        assert_eq!(p * inv, Poly::one().with_cap(4));
    }

    #[test]
    fn inverse_requires_unit_constant() {
        assert!(x(3).try_inverse().is_none());
    }
}
