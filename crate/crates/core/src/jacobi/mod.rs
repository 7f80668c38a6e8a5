//! Complex-numeric evaluation of the Weierstrass φ-function with explicit
//! truncation control, and verification of its transformation laws.

pub mod laws;
pub mod scan;

pub use laws::{fy_eval, fy_index_law_check, lattice_shift_check, modular_check, LawCheck};
pub use scan::{real_line_pole_scan, scan_grid, write_scan_csv, ScanOutcome};

use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum JacobiError {
    #[error("cannot meet the tail bound: {0}")]
    TailBoundViolation(String),
    #[error("matrix is not in SL2(Z) (det = {0})")]
    MatrixNotUnimodular(i64),
    #[error("argument {arg} of weight {weight} is within {dist:.3e} of the lattice")]
    PoleProximity { weight: i64, arg: Complex64, dist: f64 },
    #[error("sum grows under grid refinement near z = {0}")]
    CancellationFailure(f64),
}

/// A point (τ, z) with Im τ > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModularPoint {
    pub tau: Complex64,
    pub z: Complex64,
}

impl ModularPoint {
    pub fn new(tau: Complex64, z: Complex64) -> Self {
        assert!(tau.im > 0.0, "Im τ must be positive");
        ModularPoint { tau, z }
    }
}

/// Truncation policy: the product is cut once the geometric tail estimate
/// drops below tolerance/10.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericPolicy {
    pub tolerance: f64,
    pub max_product_terms: usize,
    /// Minimal admissible distance of an evaluation argument to the lattice.
    pub pole_threshold: f64,
}

impl Default for NumericPolicy {
    fn default() -> Self {
        NumericPolicy {
            tolerance: 1e-9,
            max_product_terms: 6000,
            pole_threshold: 1e-7,
        }
    }
}

impl NumericPolicy {
    /// Number of product terms needed at |q| = r, |λ|-spread l, and the tail
    /// bound achieved there.
    pub fn resolve_terms(&self, r: f64, l: f64) -> Result<(usize, f64), JacobiError> {
        if r >= 1.0 {
            return Err(JacobiError::TailBoundViolation(format!("|q| = {r} ≥ 1")));
        }
        let bound = |n: usize| -> f64 {
            // Σ_{k>n} |log((1−q^kλ^{±1})/(1−q^k)²)| ≤ 8(l+1)·r^{n+1}/(1−r)
            // valid once r^{n+1}·l ≤ 1/2
            8.0 * (l + 1.0) * r.powi(n as i32 + 1) / (1.0 - r)
        };
        for n in 1..=self.max_product_terms {
            if r.powi(n as i32 + 1) * l <= 0.5 && bound(n) <= self.tolerance / 10.0 {
                return Ok((n, bound(n)));
            }
        }
        Err(JacobiError::TailBoundViolation(format!(
            "need more than {} product terms at |q| = {r}",
            self.max_product_terms
        )))
    }
}

/// φ(q,λ) = (λ^{1/2} − λ^{−1/2})·∏_{n≥1} (1−q^nλ)(1−q^nλ^{−1})/(1−q^n)²
/// with q = e^{2πiτ}, λ = e^{2πiz}, and λ^{1/2} = e^{πiz} taken from z.
pub fn phi_eval(p: &ModularPoint, policy: &NumericPolicy) -> Result<Complex64, JacobiError> {
    let i2pi = Complex64::new(0.0, 2.0 * PI);
    let q = (i2pi * p.tau).exp();
    let lam = (i2pi * p.z).exp();
    let sqrt_lam = (Complex64::new(0.0, PI) * p.z).exp();
    let r = q.norm();
    let l = lam.norm().max(1.0 / lam.norm());
    let (terms, _bound) = policy.resolve_terms(r, l)?;
    let mut acc = sqrt_lam - 1.0 / sqrt_lam;
    let mut qn = Complex64::new(1.0, 0.0);
    for _ in 1..=terms {
        qn *= q;
        let denom = 1.0 - qn;
        acc *= (1.0 - qn * lam) * (1.0 - qn / lam) / (denom * denom);
    }
    Ok(acc)
}

/// Distance of w to the lattice Zτ + Z.
pub(crate) fn lattice_distance(w: Complex64, tau: Complex64) -> f64 {
    let alpha = w.im / tau.im;
    let beta = w.re - alpha * tau.re;
    let da = alpha - alpha.round();
    let db = beta - beta.round();
    (da * tau + Complex64::new(db, 0.0)).norm()
}
