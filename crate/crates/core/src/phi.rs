//! The Weierstrass φ-function as an exact q-series.
//!
//! φ(q, ν) = (ν^{1/2} − ν^{−1/2}) · ∏_{n≥1} (1 − q^n ν)(1 − q^n ν^{−1}) / (1 − q^n)².
//!
//! The series is stored in the half-variable μ = ν^{1/2}, so every exponent is
//! an integer. Weight substitutions ν = λ^w with even (pre-doubled) w keep all
//! λ-exponents integral.

use num_complex::Complex64;
use num_traits::{One, ToPrimitive};

use crate::algebra::laurent::LaurentPoly;
use crate::algebra::qseries::QSeries;
use crate::algebra::Rat;

/// φ as a q-series with Laurent-polynomial coefficients in μ = ν^{1/2}.
pub fn phi_mu(order: usize) -> QSeries<LaurentPoly> {
    let mu = |e: i64| LaurentPoly::monomial(e, Rat::one());
    let mut s = QSeries::constant(order, mu(1) - mu(-1));
    for n in 1..=order {
        let up = QSeries::one(order) - QSeries::monomial(order, n, mu(2));
        let dn = QSeries::one(order) - QSeries::monomial(order, n, mu(-2));
        let scalar = QSeries::one(order) - QSeries::monomial(order, n, LaurentPoly::one());
        let scalar_sq_inv = (scalar.clone() * scalar).invert().expect("unit series");
        s = s * up * dn * scalar_sq_inv;
    }
    s
}

/// φ(q, λ^w) for an even pre-doubled weight w, as Laurent polynomials in λ.
pub fn phi_at_weight(weight: i64, order: usize) -> QSeries<LaurentPoly> {
    assert!(weight % 2 == 0, "weights must be pre-doubled (even)");
    let half = weight / 2;
    phi_mu(order).map(|p| LaurentPoly::from_terms(p.terms().map(|(e, c)| (e * half, c.clone()))))
}

/// Evaluate the exact series numerically at μ = e^{πiz}, q = e^{2πiτ}.
pub fn eval_phi_mu(series: &QSeries<LaurentPoly>, q: Complex64, mu: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut qn = Complex64::new(1.0, 0.0);
    for n in 0..=series.order() {
        let mut cn = Complex64::new(0.0, 0.0);
        for (e, c) in series.coeff(n).terms() {
            cn += Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0) * mu.powi(*e as i32);
        }
        acc += cn * qn;
        qn *= q;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_i;

    #[test]
    fn leading_terms_match_product_expansion() {
        // φ = (μ − μ⁻¹)(1 + q(2 − μ² − μ⁻²) + O(q²))
        let s = phi_mu(2);
        let q0 = s.coeff(0);
        assert_eq!(q0.coeff(1), rat_i(1));
        assert_eq!(q0.coeff(-1), rat_i(-1));
        // q^1 coefficient is −(μ − μ⁻¹)³ = −μ³ + 3μ − 3μ⁻¹ + μ⁻³
        let q1 = s.coeff(1);
        assert_eq!(q1.coeff(3), rat_i(-1));
        assert_eq!(q1.coeff(1), rat_i(3));
        assert_eq!(q1.coeff(-1), rat_i(-3));
        assert_eq!(q1.coeff(-3), rat_i(1));
    }

    #[test]
    fn oddness_in_mu() {
        // φ(q, ν⁻¹) = −φ(q, ν): exponent flip negates every coefficient
        let s = phi_mu(4);
        for n in 0..=4 {
            let c = s.coeff(n);
            let flipped =
                LaurentPoly::from_terms(c.terms().map(|(e, r)| (-e, r.clone())));
            assert_eq!(flipped, -c);
        }
    }

    #[test]
    fn weight_substitution() {
        let s = phi_at_weight(4, 1);
        // q^0 term: λ² − λ⁻²
        assert_eq!(s.coeff(0).coeff(2), rat_i(1));
        assert_eq!(s.coeff(0).coeff(-2), rat_i(-1));
    }
}
