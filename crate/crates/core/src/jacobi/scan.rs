//! Real-line scans of the summed local data: individual terms may blow up at
//! rational points, the sum must stay bounded and match the exact q-series.

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;

use crate::algebra::qseries::QSeries;
use crate::algebra::rational_fn::LaurentRational;
use crate::index::SpincData;
use crate::lefschetz::{lefschetz_sum, FixedPointData, LefschetzError, VAssignment};

use super::{phi_eval, JacobiError, ModularPoint, NumericPolicy};

/// Sample grid on (0,1) with an irrational offset, so no sample hits a
/// small-denominator rational where individual terms have poles.
pub fn scan_grid(n: usize) -> Vec<f64> {
    let offset = std::f64::consts::E / 10.0;
    (0..n).map(|k| (k as f64 + offset) / n as f64).collect()
}

/// One sample row: (z, re, im, abs).
pub type ScanRow = (f64, f64, f64, f64);

#[derive(Debug, Clone)]
pub struct ScanOutcome {
    pub tau: Complex64,
    pub grid_size: usize,
    pub max_abs: f64,
    pub refined_max_abs: f64,
    /// Relative growth of the maximum under 10× refinement.
    pub growth: f64,
    /// Largest |numeric sum − exact q-series at λ = e^{2πiz}| over the grid.
    pub exact_residual_max: f64,
    pub stable: bool,
    pub pass: bool,
    /// (z, re, im, abs) rows of the coarse scan.
    pub rows: Vec<ScanRow>,
}

/// ν_Y(τ,z) for one isolated component, from its weights.
fn component_value(
    normal_weights: &[i64],
    v_weights: &[i64],
    spinc_weight: i64,
    tau: Complex64,
    z: Complex64,
    policy: &NumericPolicy,
) -> Result<Complex64, JacobiError> {
    let s_sum: i64 = v_weights.iter().sum();
    let mut acc = (Complex64::new(0.0, PI) * ((spinc_weight - s_sum) as f64) * z).exp();
    for &w in normal_weights {
        let val = phi_eval(&ModularPoint::new(tau, (w as f64) * z), policy)?;
        acc /= val;
    }
    for &s in v_weights {
        if s == 0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        acc *= phi_eval(&ModularPoint::new(tau, (s as f64) * z), policy)?;
    }
    Ok(acc)
}

fn numeric_sum(
    data: &FixedPointData,
    tau: Complex64,
    z: f64,
    policy: &NumericPolicy,
) -> Result<Complex64, JacobiError> {
    let zc = Complex64::new(z, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for comp in &data.components {
        let normals: Vec<i64> = comp.normal_lines.iter().map(|l| l.weight).collect();
        let vs: Vec<i64> = comp.v_lines.iter().map(|l| l.weight).collect();
        acc += component_value(&normals, &vs, comp.spinc_weight, tau, zc, policy)?;
    }
    Ok(acc)
}

fn exact_sum_at(series: &QSeries<LaurentRational>, q: Complex64, lam: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut qn = Complex64::new(1.0, 0.0);
    for n in 0..=series.order() {
        acc += series.coeff(n).eval_complex(lam) * qn;
        qn *= q;
    }
    acc
}

/// Scan the summed local data over a real-z grid at fixed τ.
///
/// Pass requires (a) the maximum stays stable under 10× grid refinement and
/// (b) the numeric sum matches the exact Lefschetz series within the policy
/// tolerance scaled by the observed magnitude (the q-tail at Im τ ≥ 1 is far
/// below it).
pub fn real_line_pole_scan(
    data: &FixedPointData,
    spinc: &SpincData,
    v: &VAssignment,
    tau: Complex64,
    grid_size: usize,
    q_order: usize,
    policy: &NumericPolicy,
) -> Result<ScanOutcome, LefschetzError> {
    let exact = lefschetz_sum(data, spinc, v, q_order)?;
    let data = data.clone().with_v(v);
    if data.components.iter().any(|c| c.half_dim > 0) {
        return Err(LefschetzError::InvalidData(
            "real-line scans support isolated fixed points only".into(),
        ));
    }
    let q = (Complex64::new(0.0, 2.0 * PI) * tau).exp();
    let eval_grid = |grid: &[f64]| -> Result<(f64, Vec<ScanRow>), JacobiError> {
        let mut max_abs: f64 = 0.0;
        let mut rows = Vec::with_capacity(grid.len());
        for &z in grid {
            let v = numeric_sum(&data, tau, z, policy)?;
            max_abs = max_abs.max(v.norm());
            rows.push((z, v.re, v.im, v.norm()));
        }
        Ok((max_abs, rows))
    };
    let coarse = scan_grid(grid_size);
    let (max_abs, rows) = eval_grid(&coarse).map_err(to_lef)?;
    let (refined_max_abs, _) = eval_grid(&scan_grid(grid_size * 10)).map_err(to_lef)?;
    let growth = (refined_max_abs - max_abs) / max_abs.max(1.0);
    let stable = growth <= 0.05;

    let mut exact_residual_max: f64 = 0.0;
    for &(z, re, im, _) in &rows {
        let lam = (Complex64::new(0.0, 2.0 * PI) * z).exp();
        let predicted = exact_sum_at(&exact.sum, q, lam);
        exact_residual_max =
            exact_residual_max.max((Complex64::new(re, im) - predicted).norm());
    }
    let scale = max_abs.max(1.0);
    let pass = stable && exact_residual_max <= policy.tolerance.max(1e-9) * scale * 10.0;
    Ok(ScanOutcome {
        tau,
        grid_size,
        max_abs,
        refined_max_abs,
        growth,
        exact_residual_max,
        stable,
        pass,
        rows,
    })
}

fn to_lef(e: JacobiError) -> LefschetzError {
    LefschetzError::InvalidData(e.to_string())
}

/// CSV emission of scan rows; columns z, re, im, abs.
pub fn write_scan_csv(mut out: impl Write, rows: &[ScanRow]) -> std::io::Result<()> {
    writeln!(out, "z,re,im,abs")?;
    for (z, re, im, abs) in rows {
        writeln!(out, "{z},{re},{im},{abs}")?;
    }
    Ok(())
}

/// A single isolated term blows up near a zero of its denominator weights —
/// expected behavior, used by tests to confirm the scan detects it.
pub fn single_term_magnitude(
    normal_weights: &[i64],
    tau: Complex64,
    z: f64,
    policy: &NumericPolicy,
) -> Result<f64, JacobiError> {
    component_value(normal_weights, &[], 0, tau, Complex64::new(z, 0.0), policy)
        .map(|v| v.norm())
}
