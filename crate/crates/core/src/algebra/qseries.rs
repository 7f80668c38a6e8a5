//! Truncated q-power series over a pluggable coefficient ring.

use std::ops::{Add, Mul, Neg, Sub};


use super::ring::CoeffRing;
use super::AlgebraError;

/// Σ_{n=0}^{order} c_n q^n. Arithmetic on two series truncates to the smaller
/// order, which is recorded on the result.
#[derive(Debug, Clone, PartialEq)]
pub struct QSeries<C> {
    coeffs: Vec<C>,
}

impl<C: CoeffRing> QSeries<C> {
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a q-series stores at least the q^0 term");
        QSeries { coeffs }
    }

    pub fn constant(order: usize, c: C) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = c;
        QSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, C::one())
    }

    pub fn zero(order: usize) -> Self {
        QSeries { coeffs: vec![C::zero(); order + 1] }
    }

    /// c·q^n (zero when n exceeds the order).
    pub fn monomial(order: usize, n: usize, c: C) -> Self {
        let mut s = Self::zero(order);
        if n <= order {
            s.coeffs[n] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero_series(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncated(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(C::zero());
        }
        QSeries { coeffs }
    }

    pub fn map<D: CoeffRing>(&self, f: impl Fn(&C) -> D) -> QSeries<D> {
        QSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplicative inverse up to the stored order.
    ///
    /// The q^0 coefficient must be a unit of `C`.
    pub fn invert(&self) -> Result<Self, AlgebraError> {
        let a0_inv = self.coeffs[0]
            .try_inverse()
            .ok_or(AlgebraError::NonUnitConstantTerm)?;
        let order = self.order();
        let mut out = Vec::with_capacity(order + 1);
        out.push(a0_inv.clone());
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                acc = acc + self.coeffs[k].clone() * out[n - k].clone();
            }
            out.push(-(a0_inv.clone() * acc));
        }
        Ok(QSeries { coeffs: out })
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self, AlgebraError> {
        let order = self.order();
        if e == 0 {
            return Ok(Self::one(order));
        }
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one(order);
        let mut b = base;
        loop {
            if n & 1 == 1 {
                acc = acc * b.clone();
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            b = b.clone() * b;
        }
        Ok(acc)
    }
}

/// Spec-level alias for [`QSeries::invert`].
pub fn series_invert<C: CoeffRing>(a: &QSeries<C>) -> Result<QSeries<C>, AlgebraError> {
    a.invert()
}

impl<C: CoeffRing> Add for QSeries<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            coeffs.push(self.coeffs[n].clone() + rhs.coeffs[n].clone());
        }
        QSeries { coeffs }
    }
}

impl<C: CoeffRing> Sub for QSeries<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: CoeffRing> Neg for QSeries<C> {
    type Output = Self;
    fn neg(self) -> Self {
        QSeries { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<C: CoeffRing> Mul for QSeries<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        QSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat_i, Rat};
    use num_traits::One;

    fn geom_input(order: usize) -> QSeries<Rat> {
        // 1 − q
        QSeries::one(order) - QSeries::monomial(order, 1, Rat::one())
    }

    #[test]
    fn invert_one_minus_q() {
        let inv = geom_input(3).invert().unwrap();
        for n in 0..=3 {
            assert_eq!(inv.coeff(n), rat_i(1));
        }
    }

    #[test]
    fn invert_one() {
        let one: QSeries<Rat> = QSeries::one(2);
        assert_eq!(one.invert().unwrap(), one);
    }

    #[test]
    fn invert_euler_like_product() {
        // ∏_{n=1}^{3} (1 − q^n)², inverted, multiplies back to 1 termwise
        let order = 6;
        let mut p: QSeries<Rat> = QSeries::one(order);
        for n in 1..=3usize {
            let f = QSeries::one(order) - QSeries::monomial(order, n, Rat::one());
            p = p * f.clone() * f;
        }
        let inv = p.invert().unwrap();
        assert_eq!(p * inv, QSeries::one(order));
    }

    #[test]
    fn invert_rejects_non_units() {
        let q: QSeries<Rat> = QSeries::monomial(2, 1, Rat::one());
        assert_eq!(q.invert(), Err(AlgebraError::NonUnitConstantTerm));
    }

    #[test]
    fn min_order_rule() {
        let a: QSeries<Rat> = QSeries::one(5);
        let b: QSeries<Rat> = QSeries::one(3);
        assert_eq!((a.clone() + b.clone()).order(), 3);
        assert_eq!((a * b).order(), 3);
    }
}
