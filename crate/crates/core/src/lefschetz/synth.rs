//! Synthetic fixed-point data built to satisfy the weight identity by
//! construction: isolated components whose normal weights realize a common
//! value of Σ m² + n·a².

use super::{FixedComponent, FixedPointData, LefschetzError};

/// Decompose t into exactly k nonzero squares, largest first.
fn sum_of_squares(t: i64, k: usize) -> Option<Vec<i64>> {
    if (t as i128) < k as i128 {
        return None;
    }
    if k == 0 {
        return if t == 0 { Some(vec![]) } else { None };
    }
    if k == 1 {
        let r = (t as f64).sqrt().round() as i64;
        for c in [r - 1, r, r + 1] {
            if c >= 1 && c * c == t {
                return Some(vec![c]);
            }
        }
        return None;
    }
    let mut c = ((t - (k as i64 - 1)) as f64).sqrt().floor() as i64;
    while c >= 1 {
        if let Some(mut rest) = sum_of_squares(t - c * c, k - 1) {
            let mut out = vec![c];
            out.append(&mut rest);
            return Some(out);
        }
        c -= 1;
    }
    None
}

/// Distinct γ-weights 0, 1, −1, 2, −2, … (m+1 of them).
fn gamma_weights(count: usize) -> Vec<i64> {
    let mut out = vec![0i64];
    let mut k = 1;
    while out.len() < count {
        out.push(k);
        if out.len() < count {
            out.push(-k);
        }
        k += 1;
    }
    out
}

/// Build isolated fixed-point data on a cohomology CP^m with the given n ≥ 0
/// satisfying Σ m_{Y,i}² + n·a_Y² = const exactly, by solving for the normal
/// weights component by component.
pub fn synthetic_star(m: usize, n: i64) -> Result<FixedPointData, LefschetzError> {
    synthetic_with_scale(m, n, 1)
}

fn synthetic_with_scale(m: usize, n: i64, min_scale: i64) -> Result<FixedPointData, LefschetzError> {
    if n < 0 {
        return Err(LefschetzError::InfeasibleParams("n must be non-negative".into()));
    }
    let gammas = gamma_weights(m + 1);
    'scale: for scale in min_scale..=min_scale + 64 {
        // component 0: weights scale·(1..m), value C = scale²·Σ j²
        let base: Vec<i64> = (1..=m as i64).map(|j| scale * j).collect();
        let c_value: i64 = base.iter().map(|w| w * w).sum();
        let mut components = vec![FixedComponent::isolated(
            base.iter().map(|w| 2 * w).collect(),
            0,
            0,
        )];
        for &a in gammas.iter().skip(1) {
            let target = c_value - n * a * a;
            let Some(weights) = sum_of_squares(target, m) else {
                continue 'scale;
            };
            components.push(FixedComponent::isolated(
                weights.iter().map(|w| 2 * w).collect(),
                2 * a,
                0,
            ));
        }
        let data = FixedPointData { m, components, n };
        data.validate()?;
        return Ok(data);
    }
    Err(LefschetzError::InfeasibleParams(format!(
        "no star-identity fixture found for m = {m}, n = {n}"
    )))
}

/// A fixture on which the twist bundle's Jacobi index at the fixed component
/// is strictly negative.
pub fn petrie_edge(m: usize, n: i64) -> Result<FixedPointData, LefschetzError> {
    for scale in 1..=64 {
        let data = synthetic_with_scale(m, n, scale)?;
        let v = super::vbundle::build_v_section4(&data)?;
        let with_v = data.clone().with_v(&v);
        let s2: i64 = with_v.components[0]
            .v_lines
            .iter()
            .map(|l| (l.weight / 2) * (l.weight / 2))
            .sum();
        let m2: i64 = data.components[0]
            .normal_lines
            .iter()
            .map(|l| (l.weight / 2) * (l.weight / 2))
            .sum();
        if s2 - m2 < 0 {
            return Ok(data);
        }
    }
    Err(LefschetzError::InfeasibleParams(format!(
        "no negative-index fixture found for m = {m}, n = {n}"
    )))
}
