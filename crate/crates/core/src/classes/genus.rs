//! Multiplicative sequences generated from their defining power series.

use num_traits::One;

use crate::algebra::truncpoly::Poly;
use crate::algebra::{rat, rat_i, CoeffRing};

use super::bundle::RootBundle;
use super::ClassError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Genus {
    AHat,
    L,
}

/// The genus factor g(y) mod y^{cap+1}, computed from its defining series:
/// y/(e^{y/2} − e^{−y/2}) for Â and y/tanh(y) for L. No coefficient tables.
pub fn genus_factor(genus: Genus, cap: usize) -> Poly {
    let y = Poly::x(cap + 1);
    match genus {
        Genus::AHat => {
            let sinh2 = y.scale(&rat(1, 2)).exp().unwrap() - y.scale(&rat(-1, 2)).exp().unwrap();
            let unit = sinh2.div_by_x().expect("odd series");
            unit.try_inverse().expect("unit constant term")
        }
        Genus::L => {
            let ep = y.exp().unwrap();
            let em = y.scale(&rat_i(-1)).exp().unwrap();
            let cosh = (ep.clone() + em.clone()).scale(&rat(1, 2));
            let sinh_over_y = (ep - em).scale(&rat(1, 2)).div_by_x().expect("odd series");
            cosh.with_cap(cap) * sinh_over_y.try_inverse().expect("unit constant term")
        }
    }
}

/// ∏ over root pairs of g(c·x)^multiplicity in Q[x]/(x^{m+1}).
pub fn multiplicative_class(
    genus: Genus,
    bundle: &RootBundle,
    m: usize,
) -> Result<Poly, ClassError> {
    if !bundle.is_paired() {
        return Err(ClassError::UnpairedRoots);
    }
    let g = genus_factor(genus, m);
    let mut acc = Poly::one().with_cap(m);
    for s in &bundle.summands {
        let factor = g.subst_scale(&rat_i(s.root));
        let powed = pow_unit(&factor, s.multiplicity);
        acc = acc * powed;
    }
    Ok(acc)
}

/// Integer power of a unit polynomial (constant term nonzero).
pub(crate) fn pow_unit(p: &Poly, e: i64) -> Poly {
    let base = if e < 0 {
        p.try_inverse().expect("unit polynomial")
    } else {
        p.clone()
    };
    let mut n = e.unsigned_abs();
    let mut acc = Poly::one();
    let mut b = base;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * b.clone();
        }
        n >>= 1;
        if n > 0 {
            b = b.clone() * b;
        }
    }
    acc.with_cap(p.cap())
}
