//! The mod-24 congruence for the coefficient of x² in the first Pontrjagin
//! class, via the index of the Dirac operator twisted with (γ−1)^{m−2}.

use num_integer::Integer;
use num_traits::One;

use crate::algebra::truncpoly::Poly;
use crate::algebra::{rat, Int, Rat};
#[cfg(test)]
use crate::algebra::rat_i;

use super::IndexError;

/// Exact outcome of one (m, b) congruence cell.
#[derive(Debug, Clone, PartialEq)]
pub struct Mod24Outcome {
    pub m: usize,
    pub b: i64,
    /// ⟨e^{(m+1)x/2}·(1 − b/24·x²)·(e^x−1)^{m−2}, μ⟩ — only the Â-components
    /// shown can reach the top degree.
    pub index: Rat,
    /// The b-independent part Q (top coefficient of the b-free integrand).
    pub q_const: Rat,
    pub integral: bool,
    /// b ≡ m+1 (mod 24): the congruence the verdict must match.
    pub congruent: bool,
    /// Certificate that no higher Â-component couples: the b-free integrand
    /// has zero coefficients strictly below degree m−2.
    pub higher_terms_decouple: bool,
}

/// Check integrality of the twisted index with hypothetical p₁ = b·x².
pub fn mod24_check(m: usize, b: i64) -> Result<Mod24Outcome, IndexError> {
    if m < 3 {
        return Err(IndexError::DimensionTooSmall(m));
    }
    // P = e^{(m+1)x/2}·(e^x − 1)^{m−2}
    let x = Poly::x(m);
    let half_c = x.scale(&rat(m as i64 + 1, 2)).exp().expect("nilpotent");
    let e_minus_one = x.exp().expect("nilpotent") - Poly::one().with_cap(m);
    let mut p = half_c;
    for _ in 0..m - 2 {
        p = p * e_minus_one.clone();
    }
    let mut higher_terms_decouple = true;
    for k in 0..m.saturating_sub(2) {
        if !p.coeff(k).is_zero() {
            higher_terms_decouple = false;
        }
    }
    debug_assert_eq!(p.coeff(m - 2), Rat::one());
    let q_const = p.coeff(m);
    // Â contributes 1 in degree 0 and −b/24·x² in degree 4; nothing else reaches x^m.
    let index = q_const.clone() - rat(b, 24) * p.coeff(m - 2);
    let integral = index.denom().is_one();
    let congruent = (Int::from(b) - Int::from(m as i64 + 1)).mod_floor(&Int::from(24)) == Int::from(0);
    Ok(Mod24Outcome {
        m,
        b,
        index,
        q_const,
        integral,
        congruent,
        higher_terms_decouple,
    })
}

use num_traits::Zero;
