//! Transformation laws: lattice shifts, the modular action, and the index
//! law of the weight-product functions F_Y.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::{lattice_distance, phi_eval, JacobiError, ModularPoint, NumericPolicy};

/// One verified identity: both sides and their relative residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LawCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub residual: f64,
    pub pass: bool,
}

fn law_check(lhs: Complex64, rhs: Complex64, tolerance: f64) -> LawCheck {
    let scale = lhs.norm().max(rhs.norm()).max(1.0);
    let residual = (lhs - rhs).norm() / scale;
    LawCheck { lhs, rhs, residual, pass: residual < tolerance }
}

/// Φ(τ, z+ατ+β) = Φ(τ,z)·e^{−πi(α²τ+2αz)}·(−1)^{α+β}.
pub fn lattice_shift_check(
    p: &ModularPoint,
    alpha: i64,
    beta: i64,
    policy: &NumericPolicy,
) -> Result<LawCheck, JacobiError> {
    let shifted = ModularPoint::new(p.tau, p.z + (alpha as f64) * p.tau + beta as f64);
    let lhs = phi_eval(&shifted, policy)?;
    let base = phi_eval(p, policy)?;
    let a = alpha as f64;
    let factor = (Complex64::new(0.0, -PI) * (a * a * p.tau + 2.0 * a * p.z)).exp();
    let sign = if (alpha + beta).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    Ok(law_check(lhs, base * factor * sign, policy.tolerance))
}

/// Φ((aτ+b)/(cτ+d), z/(cτ+d)) = Φ(τ,z)·(cτ+d)^{−1}·e^{πi·c·z²/(cτ+d)}.
pub fn modular_check(
    p: &ModularPoint,
    mat: [i64; 4],
    policy: &NumericPolicy,
) -> Result<LawCheck, JacobiError> {
    let [a, b, c, d] = mat;
    let det = a * d - b * c;
    if det != 1 {
        return Err(JacobiError::MatrixNotUnimodular(det));
    }
    let (af, bf, cf, df) = (a as f64, b as f64, c as f64, d as f64);
    let denom = cf * p.tau + df;
    let tau2 = (af * p.tau + bf) / denom;
    if tau2.im <= 0.0 {
        return Err(JacobiError::TailBoundViolation(format!(
            "transformed τ = {tau2} leaves the upper half-plane"
        )));
    }
    let lhs = phi_eval(&ModularPoint::new(tau2, p.z / denom), policy)?;
    let base = phi_eval(p, policy)?;
    let factor = (Complex64::new(0.0, PI) * cf * p.z * p.z / denom).exp();
    Ok(law_check(lhs, base / denom * factor, policy.tolerance))
}

/// F(τ,z) = ∏_{m≠0} 1/Φ(τ, m·z) · ∏_{s≠0} Φ(τ, s·z).
///
/// Weights are plain integers here (the caller chooses the normalization;
/// the index law below is character-free exactly for even weights).
pub fn fy_eval(
    tangent_weights: &[i64],
    v_weights: &[i64],
    p: &ModularPoint,
    policy: &NumericPolicy,
) -> Result<Complex64, JacobiError> {
    let mut acc = Complex64::new(1.0, 0.0);
    for &w in tangent_weights {
        assert!(w != 0, "denominator weights must be nonzero");
        let arg = (w as f64) * p.z;
        let dist = lattice_distance(arg, p.tau);
        if dist < policy.pole_threshold {
            return Err(JacobiError::PoleProximity { weight: w, arg, dist });
        }
        acc /= phi_eval(&ModularPoint::new(p.tau, arg), policy)?;
    }
    for &s in v_weights {
        if s == 0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        acc *= phi_eval(&ModularPoint::new(p.tau, (s as f64) * p.z), policy)?;
    }
    Ok(acc)
}

/// F(τ, z+ατ+β) = F(τ,z)·e^{−2πi·I·(α²τ+2αz)} with I = ½(Σs² − Σm²).
pub fn fy_index_law_check(
    tangent_weights: &[i64],
    v_weights: &[i64],
    index: i64,
    p: &ModularPoint,
    alpha: i64,
    beta: i64,
    policy: &NumericPolicy,
) -> Result<LawCheck, JacobiError> {
    let shifted = ModularPoint::new(p.tau, p.z + (alpha as f64) * p.tau + beta as f64);
    let lhs = fy_eval(tangent_weights, v_weights, &shifted, policy)?;
    let base = fy_eval(tangent_weights, v_weights, p, policy)?;
    let a = alpha as f64;
    let factor =
        (Complex64::new(0.0, -2.0 * PI) * (index as f64) * (a * a * p.tau + 2.0 * a * p.z)).exp();
    Ok(law_check(lhs, base * factor, policy.tolerance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt(tau: Complex64, z: Complex64) -> ModularPoint {
        ModularPoint::new(tau, z)
    }

    #[test]
    fn trivial_shift_is_exact() {
        let p = pt(Complex64::new(0.0, 1.0), Complex64::new(0.3, 0.1));
        let c = lattice_shift_check(&p, 0, 0, &NumericPolicy::default()).unwrap();
        assert!(c.residual < 1e-14);
    }

    #[test]
    fn unit_tau_shift_at_reference_point() {
        let p = pt(Complex64::new(0.0, 1.0), Complex64::new(0.3, 0.0));
        let c = lattice_shift_check(&p, 1, 0, &NumericPolicy::default()).unwrap();
        assert!(c.pass, "residual {}", c.residual);
        assert!(c.residual < 1e-9);
    }

    #[test]
    fn larger_shifts_pass() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let policy = NumericPolicy { tolerance: 1e-8, ..Default::default() };
        for _ in 0..5 {
            let tau = Complex64::new(rng.gen_range(-0.3..0.3), rng.gen_range(0.8..1.4));
            let z = Complex64::new(rng.gen_range(0.1..0.9), rng.gen_range(-0.1..0.1));
            let c = lattice_shift_check(&pt(tau, z), 2, 3, &policy).unwrap();
            assert!(c.pass, "residual {}", c.residual);
        }
    }

    #[test]
    fn modular_identity_matrix_is_exact() {
        let p = pt(Complex64::new(0.2, 0.9), Complex64::new(0.25, 0.0));
        let c = modular_check(&p, [1, 0, 0, 1], &NumericPolicy::default()).unwrap();
        assert!(c.residual < 1e-14);
    }

    #[test]
    fn inversion_and_translation() {
        let policy = NumericPolicy { tolerance: 1e-6, ..Default::default() };
        let p = pt(Complex64::new(0.0, 2.0), Complex64::new(0.2, 0.0));
        let s = modular_check(&p, [0, -1, 1, 0], &policy).unwrap();
        assert!(s.pass, "S residual {}", s.residual);
        let t = modular_check(&p, [1, 1, 0, 1], &policy).unwrap();
        assert!(t.pass, "T residual {}", t.residual);
    }

    #[test]
    fn non_unimodular_rejected() {
        let p = pt(Complex64::new(0.0, 1.0), Complex64::new(0.2, 0.0));
        assert!(matches!(
            modular_check(&p, [2, 0, 0, 1], &NumericPolicy::default()),
            Err(JacobiError::MatrixNotUnimodular(2))
        ));
    }

    #[test]
    fn matched_weights_cancel_to_one() {
        let p = pt(Complex64::new(0.1, 1.1), Complex64::new(0.21, 0.0));
        let w = [2i64, -4, 6];
        let v = fy_eval(&w, &w, &p, &NumericPolicy::default()).unwrap();
        assert!((v - 1.0).norm() < 1e-9);
    }

    #[test]
    fn fixed_component_product_is_finite_on_the_real_line() {
        // the weight pattern of the distinguished component of the (0,1,2)
        // model with its twist: denominators {1,2}, numerators {−1,−2}
        let policy = NumericPolicy::default();
        let tau = Complex64::new(0.0, 1.0);
        for k in 0..40 {
            let z = Complex64::new((k as f64 + 0.2718) / 40.0, 0.0);
            let v = fy_eval(&[1, 2], &[-1, -2], &pt(tau, z), &policy).unwrap();
            assert!(v.norm().is_finite());
            // oddness makes this particular product exactly 1
            assert!((v - 1.0).norm() < 1e-8, "z={z}: {v}");
        }
    }

    #[test]
    fn index_law_for_even_weights() {
        // tangent {2,4}, twist {6}: I = ½(36 − 20) = 8
        let policy = NumericPolicy { tolerance: 1e-6, ..Default::default() };
        let p = pt(Complex64::new(0.0, 1.3), Complex64::new(0.37, 0.0));
        for (alpha, beta) in [(1, 0), (0, 1), (1, 1)] {
            let c = fy_index_law_check(&[2, 4], &[6], 8, &p, alpha, beta, &policy).unwrap();
            assert!(c.pass, "({alpha},{beta}): residual {}", c.residual);
        }
    }

    #[test]
    fn pole_proximity_detected() {
        let p = pt(Complex64::new(0.0, 1.0), Complex64::new(0.5, 0.0));
        // weight 2: argument 2z = 1 sits on the lattice
        assert!(matches!(
            fy_eval(&[2], &[], &p, &NumericPolicy::default()),
            Err(JacobiError::PoleProximity { .. })
        ));
    }
}
