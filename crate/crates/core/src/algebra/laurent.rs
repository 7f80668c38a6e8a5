//! Finite Laurent polynomials in the circle variable λ over Q.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ring::CoeffRing;
use super::{Int, Rat};

/// Σ c_k λ^k with integer exponents; no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn monomial(exp: i64, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rat)>) -> Self {
        let mut p = LaurentPoly::default();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.terms.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiply by λ^k.
    pub fn shifted(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return LaurentPoly::default();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.clone() * r.clone())).collect(),
        }
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval_rat(&self, x: &Rat) -> Option<Rat> {
        if x.is_zero() {
            // only meaningful when no negative exponents occur
            if self.min_exp().is_some_and(|e| e < 0) {
                return None;
            }
            return Some(self.coeff(0));
        }
        let mut acc = Rat::zero();
        let x_inv = Rat::one() / x.clone();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                pow_rat(x, *e as u64)
            } else {
                pow_rat(&x_inv, (-*e) as u64)
            };
            acc += c.clone() * p;
        }
        Some(acc)
    }

    /// Numeric evaluation at a nonzero complex point.
    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let cf = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            acc += cf * x.powi(*e as i32);
        }
        acc
    }

    /// Dense rational coefficients of λ^{min_exp..=max_exp}; empty for zero.
    pub fn dense(&self) -> (i64, Vec<Rat>) {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return (0, vec![]);
        };
        let mut v = vec![Rat::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub fn from_dense(lo: i64, coeffs: &[Rat]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, c)| (lo + i as i64, c.clone())))
    }

    /// Exact division, `None` when the remainder is nonzero.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::default());
        }
        let (nlo, nv) = self.dense();
        let (dlo, dv) = d.dense();
        let q = poly_div_exact_rat(&nv, &dv)?;
        Some(LaurentPoly::from_dense(nlo - dlo, &q))
    }
}

fn pow_rat(x: &Rat, mut n: u64) -> Rat {
    let mut base = x.clone();
    let mut acc = Rat::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= base.clone();
        }
        n >>= 1;
        if n > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

impl Add for LaurentPoly {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for LaurentPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for LaurentPoly {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = LaurentPoly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(Rat::one())
    }
}

impl CoeffRing for LaurentPoly {
    /// Only monomials are units.
    fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Some(Self::monomial(-e, Rat::one() / c.clone()))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*L")?,
                _ => write!(f, "{c}*L^{e}")?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// dense ordinary-polynomial helpers (ascending coefficients, over Z or Q)
// ---------------------------------------------------------------------------

fn trim_int(v: &mut Vec<Int>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Remove the integer content and make the leading coefficient positive.
pub(crate) fn primitive_part(mut v: Vec<Int>) -> Vec<Int> {
    trim_int(&mut v);
    if v.is_empty() {
        return v;
    }
    let mut g = Int::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        g = -g;
    }
    for c in &mut v {
        *c = &*c / &g;
    }
    v
}

/// Pseudo-remainder of `a` by `b` (leading(b)^k · a mod b).
fn pseudo_rem(mut a: Vec<Int>, b: &[Int]) -> Vec<Int> {
    let db = b.len() - 1;
    let lb = b[db].clone();
    while a.len() > db {
        let da = a.len() - 1;
        let la = a[da].clone();
        for c in a.iter_mut() {
            *c = &*c * &lb;
        }
        for j in 0..db {
            a[da - db + j] = &a[da - db + j] - &(la.clone() * &b[j]);
        }
        a.truncate(da);
        trim_int(&mut a);
        if a.is_empty() {
            break;
        }
    }
    a
}

/// Gcd of primitive integer polynomials (primitive pseudo-remainder sequence).
pub(crate) fn int_poly_gcd(a: Vec<Int>, b: Vec<Int>) -> Vec<Int> {
    let mut a = primitive_part(a);
    let mut b = primitive_part(b);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive_part(pseudo_rem(a.clone(), &b));
        a = b;
        b = r;
    }
    a
}

/// Exact polynomial division over Q; `None` when the remainder is nonzero.
pub(crate) fn poly_div_exact_rat(num: &[Rat], den: &[Rat]) -> Option<Vec<Rat>> {
    let dd = den.len() - 1;
    if num.len() < den.len() {
        return if num.iter().all(|c| c.is_zero()) {
            Some(vec![])
        } else {
            None
        };
    }
    let mut rem: Vec<Rat> = num.to_vec();
    let mut quot = vec![Rat::zero(); num.len() - dd];
    let lead = den[dd].clone();
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone() / lead.clone();
        if !c.is_zero() {
            for j in 0..=dd {
                rem[k + j] = rem[k + j].clone() - c.clone() * den[j].clone();
            }
        }
        quot[k] = c;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(quot)
    } else {
        None
    }
}
