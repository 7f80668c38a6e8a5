//! The vanishing relations satisfied by Â of the model: pairings of
//! Â·(e^x−e^{−x})·(e^{x/2}−e^{−x/2})^{m−3−2k}·(e^{x/2}+e^{−x/2})^{2k}.


use crate::algebra::truncpoly::Poly;
use crate::algebra::{rat, rat_i, Rat};

use super::IndexError;

/// The relation factor (e^x−e^{−x})·(e^{x/2}−e^{−x/2})^{m−3−2k}·(e^{x/2}+e^{−x/2})^{2k}.
pub fn relation_factor(m: usize, k: usize) -> Poly {
    let x = Poly::x(m);
    let sinh2 = x.exp().unwrap() - x.scale(&rat_i(-1)).exp().unwrap();
    let a = x.scale(&rat(1, 2)).exp().unwrap() - x.scale(&rat(-1, 2)).exp().unwrap();
    let b = x.scale(&rat(1, 2)).exp().unwrap() + x.scale(&rat(-1, 2)).exp().unwrap();
    let mut acc = sinh2;
    for _ in 0..(m - 3 - 2 * k) {
        acc = acc * a.clone();
    }
    for _ in 0..2 * k {
        acc = acc * b.clone();
    }
    acc
}

/// All ⌊(m−1)/2⌋ pairing values ⟨aroof·relation_factor(m,k), μ⟩, k = 0..⌊(m−3)/2⌋.
pub fn rigidity_relations(m: usize, aroof: &Poly) -> Result<Vec<Rat>, IndexError> {
    if m < 3 {
        return Err(IndexError::DimensionTooSmall(m));
    }
    let kmax = (m - 3) / 2;
    let mut out = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let f = relation_factor(m, k);
        out.push((aroof.clone().with_cap(m) * f).pair_fundamental());
    }
    Ok(out)
}
