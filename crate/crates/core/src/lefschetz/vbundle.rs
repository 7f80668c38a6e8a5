//! Global twist bundles assembled from powers of γ, their restrictions to
//! fixed components, and the Jacobi index attached to one component.

use serde::{Deserialize, Serialize};

use crate::classes::RootBundle;

use super::{FixedComponent, FixedPointData, LefschetzError, VLine};

/// One summand γ^{gamma_power} ⊗ λ^{lambda_twist} with multiplicity ≥ 1.
/// The twist is stored pre-doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VSummand {
    pub gamma_power: i64,
    pub lambda_twist: i64,
    pub multiplicity: i64,
}

pub type VAssignment = Vec<VSummand>;

/// Restriction of the assignment to one fixed component: one line per copy,
/// root = γ-power (the root restricts along x ↦ x|_Y), weight =
/// power·a_Y + twist.
pub fn v_restriction(v: &VAssignment, comp: &FixedComponent) -> Vec<VLine> {
    let mut out = Vec::new();
    for s in v {
        for _ in 0..s.multiplicity.max(0) {
            out.push(VLine {
                root: s.gamma_power,
                weight: s.gamma_power * comp.gamma_weight + s.lambda_twist,
            });
        }
    }
    out
}

/// The non-equivariant shadow of the assignment, for the global index route.
///
/// The bundle restricting with weights +p·a_Y is the p-th power of the line
/// whose Chern root is −x in the generator the fundamental-class pairing is
/// positive on, so γ^p contributes the root −p.
pub fn v_root_bundle(v: &VAssignment) -> RootBundle {
    RootBundle::complex(
        v.iter()
            .map(|s| (-s.gamma_power, s.lambda_twist, s.multiplicity))
            .collect(),
    )
}

/// Number of zero-weight lines of V restricted to the component.
pub fn fixed_sub_dim(v: &VAssignment, comp: &FixedComponent) -> usize {
    v_restriction(v, comp).iter().filter(|l| l.weight == 0).count()
}

/// I_Y = ½(Σ_j s_{Y,j}² − Σ_i m_{Y,i}²) in the un-doubled normalization.
pub fn jacobi_index(comp: &FixedComponent) -> Result<i64, LefschetzError> {
    let s2: i64 = comp.v_lines.iter().map(|l| l.weight * l.weight).sum();
    let m2: i64 = comp.normal_lines.iter().map(|l| l.weight * l.weight).sum();
    let diff = s2 - m2;
    if diff % 8 != 0 {
        return Err(LefschetzError::NonIntegralIndex);
    }
    Ok(diff / 8)
}

/// V := d(Y_0)·γ + Σ_{i≥1} (d(Y_i)+1)·γ⊗λ^{−a_{Y_i}}.
///
/// Requires the fixed-point normalization a_{Y_0} = 0 and verifies that the
/// fixed-subspace dimensions come out as d(Y_0) and d(Y_i)+1.
pub fn build_v_section4(data: &FixedPointData) -> Result<VAssignment, LefschetzError> {
    let first = data
        .components
        .first()
        .ok_or_else(|| LefschetzError::InvalidData("no components".into()))?;
    if first.gamma_weight != 0 {
        return Err(LefschetzError::MissingNormalization);
    }
    let mut v = VAssignment::new();
    if first.half_dim > 0 {
        v.push(VSummand {
            gamma_power: 1,
            lambda_twist: 0,
            multiplicity: first.half_dim as i64,
        });
    }
    for comp in data.components.iter().skip(1) {
        v.push(VSummand {
            gamma_power: 1,
            lambda_twist: -comp.gamma_weight,
            multiplicity: comp.half_dim as i64 + 1,
        });
    }
    for (i, comp) in data.components.iter().enumerate() {
        let expected = if i == 0 { comp.half_dim } else { comp.half_dim + 1 };
        let got = fixed_sub_dim(&v, comp);
        if got != expected {
            return Err(LefschetzError::InvalidData(format!(
                "n(V|Y_{i}) = {got}, expected {expected}"
            )));
        }
    }
    Ok(v)
}
