//! Rational functions in λ in a canonical form: structural equality is
//! semantic equality, and "no pole" is literally "denominator = 1".

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::{int_poly_gcd, poly_div_exact_rat, LaurentPoly};
use super::ring::CoeffRing;
use super::{AlgebraError, Int, Rat};

/// num/den with den an ordinary polynomial in λ (lowest exponent 0), monic,
/// and coprime to num after clearing λ-powers. Zero is stored as 0/1.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentRational {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentRational {
    /// Canonicalize num/den; fails on a zero denominator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return LaurentRational { num, den: LaurentPoly::one() };
        }
        let (nlo, nv) = num.dense();
        let (dlo, dv) = den.dense();
        let shift = nlo - dlo;
        // fast path: exact division (the generic case in pole-cancellation sums)
        if let Some(q) = poly_div_exact_rat(&nv, &dv) {
            return LaurentRational {
                num: LaurentPoly::from_dense(shift, &q),
                den: LaurentPoly::one(),
            };
        }
        let (ns, ni) = to_primitive_int(&nv);
        let (ds, di) = to_primitive_int(&dv);
        let g = int_poly_gcd(ni.clone(), di.clone());
        let gr: Vec<Rat> = g.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let nr: Vec<Rat> = ni.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let dr: Vec<Rat> = di.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let nq = poly_div_exact_rat(&nr, &gr).expect("gcd divides numerator");
        let dq = poly_div_exact_rat(&dr, &gr).expect("gcd divides denominator");
        let lead = dq.last().expect("nonzero denominator").clone();
        let scalar = ns / (ds * lead.clone());
        let num_out: Vec<Rat> = nq.into_iter().map(|c| c * scalar.clone()).collect();
        let den_out: Vec<Rat> = dq.into_iter().map(|c| c / lead.clone()).collect();
        LaurentRational {
            num: LaurentPoly::from_dense(shift, &num_out),
            den: LaurentPoly::from_dense(0, &den_out),
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        LaurentRational { num: LaurentPoly::constant(r), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        LaurentRational { num: p, den: LaurentPoly::one() }
    }

    /// λ^k.
    pub fn lambda_pow(k: i64) -> Self {
        LaurentRational {
            num: LaurentPoly::monomial(k, Rat::one()),
            den: LaurentPoly::one(),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// True when the canonical denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Exact evaluation; fails at poles and at λ=0 with negative exponents.
    pub fn eval_rat(&self, x: &Rat) -> Result<Rat, AlgebraError> {
        let d = self.den.eval_rat(x).ok_or(AlgebraError::PoleAtEvaluationPoint)?;
        if d.is_zero() {
            return Err(AlgebraError::PoleAtEvaluationPoint);
        }
        let n = self.num.eval_rat(x).ok_or(AlgebraError::PoleAtEvaluationPoint)?;
        Ok(n / d)
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        self.num.eval_complex(x) / self.den.eval_complex(x)
    }
}

/// v = scalar · primitive, with primitive integral, content-free, positive leading coefficient.
fn to_primitive_int(v: &[Rat]) -> (Rat, Vec<Int>) {
    let mut lcm = Int::one();
    for c in v {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<Int> = v.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut content = Int::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if ints.last().is_some_and(|c| c.is_negative()) {
        content = -content;
    }
    let prim: Vec<Int> = ints.iter().map(|c| c / &content).collect();
    (Rat::new(content, lcm), prim)
}

impl Add for LaurentRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.num.is_zero() {
            return rhs;
        }
        if rhs.num.is_zero() {
            return self;
        }
        let num = self.num * rhs.den.clone() + rhs.num * self.den.clone();
        Self::reduced(num, self.den * rhs.den)
    }
}

impl Sub for LaurentRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for LaurentRational {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentRational { num: -self.num, den: self.den }
    }
}

impl Mul for LaurentRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::zero();
        }
        Self::reduced(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Zero for LaurentRational {
    fn zero() -> Self {
        LaurentRational { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for LaurentRational {
    fn one() -> Self {
        LaurentRational { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }
}

impl CoeffRing for LaurentRational {
    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::reduced(self.den.clone(), self.num.clone()))
    }
}

impl fmt::Display for LaurentRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat_i, Rat};

    fn lam(e: i64) -> LaurentPoly {
        LaurentPoly::monomial(e, Rat::one())
    }

    fn rf(num: LaurentPoly, den: LaurentPoly) -> LaurentRational {
        LaurentRational::new(num, den).unwrap()
    }

    #[test]
    fn reduce_common_factor() {
        // (λ² − 1)/(λ − 1) = λ + 1
        let r = rf(lam(2) - lam(0), lam(1) - lam(0));
        assert!(r.is_polynomial());
        assert_eq!(*r.numerator(), lam(1) + lam(0));
    }

    #[test]
    fn reduce_with_negative_exponents() {
        // (1 − λ²)/(λ − λ⁻¹) = −λ
        let r = rf(lam(0) - lam(2), lam(1) - lam(-1));
        assert!(r.is_polynomial());
        assert_eq!(*r.numerator(), -lam(1));
    }

    #[test]
    fn zero_numerator() {
        let r = rf(LaurentPoly::zero(), lam(1) - lam(0));
        assert!(r.is_zero());
        assert!(r.is_polynomial());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            LaurentRational::new(lam(1), LaurentPoly::zero()),
            Err(AlgebraError::ZeroDenominator)
        );
    }

    #[test]
    fn canonical_den_is_monic_based_at_zero() {
        // 1/(2λ − 2λ⁻¹): den must become λ² − 1 (monic, lowest exp 0)
        let r = rf(lam(0), (lam(1) - lam(-1)).scale(&rat_i(2)));
        assert_eq!(*r.denominator(), lam(2) - lam(0));
        assert_eq!(r.numerator().coeff(1), Rat::new(1.into(), 2.into()));
    }

    #[test]
    fn eval_after_reduce() {
        // (λ³ − λ⁻³)/(λ − λ⁻¹) = λ² + 1 + λ⁻² → 3 at λ = 1
        let r = rf(lam(3) - lam(-3), lam(1) - lam(-1));
        assert!(r.is_polynomial());
        assert_eq!(r.eval_rat(&rat_i(1)).unwrap(), rat_i(3));
    }

    #[test]
    fn eval_at_pole_fails() {
        let r = rf(lam(0), lam(1) - lam(0));
        assert_eq!(r.eval_rat(&rat_i(1)), Err(AlgebraError::PoleAtEvaluationPoint));
    }

    #[test]
    fn inverse_roundtrip() {
        let r = rf(lam(2) + lam(0), lam(1) - lam(-1));
        let inv = r.clone().try_inverse().unwrap();
        assert!(Zero::is_zero(&(r * inv - LaurentRational::one())));
    }
}
