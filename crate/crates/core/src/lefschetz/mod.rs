//! Fixed-point data for circle actions on cohomology CP^m models and the
//! exact Lefschetz machinery built on it.
//!
//! All weights are stored pre-doubled (the action is replaced by its two-fold
//! cover at fixture-construction time), so every λ-exponent in the local
//! terms stays integral.

pub mod local;
pub mod petrie;
pub mod star;
pub mod synth;
pub mod vbundle;

pub use local::{lefschetz_sum, local_term, LefschetzOutcome, LocalTerm};
pub use petrie::{petrie_bound_report, PetrieOutcome};
pub use star::{star_invariant, StarOutcome};
pub use synth::{petrie_edge, synthetic_star};
pub use vbundle::{build_v_section4, jacobi_index, VAssignment, VSummand};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LefschetzError {
    #[error("ambient weights must be pairwise distinct")]
    DuplicateWeights,
    #[error("normal weights must be nonzero")]
    ZeroNormalWeight,
    #[error("Jacobi index is not integral; weight conventions are inconsistent")]
    NonIntegralIndex,
    #[error("component 0 must carry γ-weight 0 (fixed-point normalization)")]
    MissingNormalization,
    #[error("invalid fixed-point data: {0}")]
    InvalidData(String),
    #[error("no fixture with the requested parameters: {0}")]
    InfeasibleParams(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// One line of the normal bundle: root c·x and nonzero pre-doubled weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalLine {
    pub root: i64,
    pub weight: i64,
}

/// One line of the restriction of V: root multiple and pre-doubled weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VLine {
    pub root: i64,
    pub weight: i64,
}

/// A connected fixed component Y: a cohomology CP^{d(Y)} with its equivariant
/// normal data, the γ- and Spin^c-weights, and the restriction of the twist
/// bundle V.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedComponent {
    /// d(Y) = dim(Y)/2.
    pub half_dim: usize,
    /// Chosen positive tangent roots c·x of TY; their product is the Euler
    /// class of TY and fixes the orientation.
    pub tangent_roots: Vec<i64>,
    pub normal_lines: Vec<NormalLine>,
    /// Weight a_Y of the lifted γ, pre-doubled.
    pub gamma_weight: i64,
    /// Weight l_Y of the Spin^c line bundle, pre-doubled.
    pub spinc_weight: i64,
    pub v_lines: Vec<VLine>,
}

impl FixedComponent {
    pub fn isolated(normal_weights: Vec<i64>, gamma_weight: i64, spinc_weight: i64) -> Self {
        FixedComponent {
            half_dim: 0,
            tangent_roots: vec![],
            normal_lines: normal_weights
                .into_iter()
                .map(|w| NormalLine { root: 0, weight: w })
                .collect(),
            gamma_weight,
            spinc_weight,
            v_lines: vec![],
        }
    }
}

/// Fixed-point data of one S^1-action on a cohomology CP^m with
/// p₁(M) = −n·x².
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointData {
    pub m: usize,
    pub components: Vec<FixedComponent>,
    pub n: i64,
}

impl FixedPointData {
    /// Check the structural invariants of the data model.
    pub fn validate(&self) -> Result<(), LefschetzError> {
        let dim_sum: usize = self.components.iter().map(|c| c.half_dim + 1).sum();
        if dim_sum != self.m + 1 {
            return Err(LefschetzError::InvalidData(format!(
                "Σ(m_i+1) = {dim_sum} ≠ m+1 = {}",
                self.m + 1
            )));
        }
        for (i, a) in self.components.iter().enumerate() {
            if a.tangent_roots.len() != a.half_dim {
                return Err(LefschetzError::InvalidData(format!(
                    "component {i}: {} tangent roots for half-dimension {}",
                    a.tangent_roots.len(),
                    a.half_dim
                )));
            }
            if a.normal_lines.len() != self.m - a.half_dim {
                return Err(LefschetzError::InvalidData(format!(
                    "component {i}: {} normal lines, expected {}",
                    a.normal_lines.len(),
                    self.m - a.half_dim
                )));
            }
            if a.normal_lines.iter().any(|l| l.weight == 0) {
                return Err(LefschetzError::ZeroNormalWeight);
            }
            let even = a
                .normal_lines
                .iter()
                .map(|l| l.weight)
                .chain(a.v_lines.iter().map(|l| l.weight))
                .chain([a.gamma_weight, a.spinc_weight]);
            for w in even {
                if w % 2 != 0 {
                    return Err(LefschetzError::InvalidData(format!(
                        "component {i}: weight {w} is not pre-doubled"
                    )));
                }
            }
            for (j, b) in self.components.iter().enumerate() {
                if i < j && a.gamma_weight == b.gamma_weight {
                    return Err(LefschetzError::DuplicateWeights);
                }
            }
        }
        Ok(())
    }

    /// True when the component containing the group-fixed point is first and
    /// normalized (a_{Y_0} = 0).
    pub fn is_normalized(&self) -> bool {
        self.components.first().is_some_and(|c| c.gamma_weight == 0)
    }

    /// Assign the standard Spin^c weights l_Y = −c1·a_Y for the lift of the
    /// determinant line of c = c1·x on a linear model.
    pub fn with_standard_spinc(mut self, c1: i64) -> Self {
        for comp in &mut self.components {
            comp.spinc_weight = -c1 * comp.gamma_weight;
        }
        self
    }

    /// Replace every component's V-restriction by the one induced from a
    /// global assignment of γ-power line bundles.
    pub fn with_v(mut self, v: &vbundle::VAssignment) -> Self {
        for comp in &mut self.components {
            comp.v_lines = vbundle::v_restriction(v, comp);
        }
        self
    }
}

/// Ambient-weight description of a linear circle action on CP^m.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearModelSpec {
    pub m: usize,
    /// Pairwise distinct raw (un-doubled) weights (a_0, …, a_m) with a_0 = 0.
    pub ambient_weights: Vec<i64>,
}

impl LinearModelSpec {
    pub fn new(ambient_weights: Vec<i64>) -> Result<Self, LefschetzError> {
        if ambient_weights.is_empty() || ambient_weights[0] != 0 {
            return Err(LefschetzError::InvalidData("a_0 must be 0".into()));
        }
        for (i, a) in ambient_weights.iter().enumerate() {
            for b in ambient_weights.iter().skip(i + 1) {
                if a == b {
                    return Err(LefschetzError::DuplicateWeights);
                }
            }
        }
        Ok(LinearModelSpec { m: ambient_weights.len() - 1, ambient_weights })
    }
}

fn model_components(spec: &LinearModelSpec, gamma_shift: i64) -> Vec<FixedComponent> {
    let a = &spec.ambient_weights;
    (0..=spec.m)
        .map(|i| {
            let normals = a
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, aj)| 2 * (aj - a[i]))
                .collect();
            FixedComponent::isolated(normals, 2 * (a[i] - gamma_shift), 0)
        })
        .collect()
}

/// The standard linear fixture: m+1 isolated fixed points with tangent
/// weights {a_j − a_i}, γ-weights a_i − a_0 = a_i, everything doubled, and
/// n = −(m+1).
pub fn linear_model(spec: &LinearModelSpec) -> Result<FixedPointData, LefschetzError> {
    let data = FixedPointData {
        m: spec.m,
        components: model_components(spec, 0),
        n: -(spec.m as i64 + 1),
    };
    data.validate()?;
    Ok(data)
}

/// Linear fixture with γ-weights shifted by −Σa_j/(m+1); requires the sum to
/// be divisible so the shifted weights stay integral.
pub fn linear_model_shifted(spec: &LinearModelSpec) -> Result<FixedPointData, LefschetzError> {
    let s: i64 = spec.ambient_weights.iter().sum();
    let k = spec.m as i64 + 1;
    if s % k != 0 {
        return Err(LefschetzError::InfeasibleParams(format!(
            "Σa = {s} is not divisible by m+1 = {k}"
        )));
    }
    let data = FixedPointData {
        m: spec.m,
        components: model_components(spec, s / k),
        n: -k,
    };
    data.validate()?;
    Ok(data)
}
