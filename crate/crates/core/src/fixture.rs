//! JSON fixture format.
//!
//! A fixture either names a linear model through `ambientWeights` or lists
//! explicit `components`. All weights in fixture files are raw (un-doubled);
//! doubling happens on load.
//!
//! ```json
//! {
//!   "m": 2,
//!   "ambientWeights": [0, 1, -1],
//!   "spincC1": 3,
//!   "qOrder": 4,
//!   "v": { "kind": "section4" }
//! }
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::index::{IndexError, SpincData};
use crate::lefschetz::{
    build_v_section4, linear_model, linear_model_shifted, FixedComponent, FixedPointData,
    LefschetzError, LinearModelSpec, NormalLine, VAssignment, VLine, VSummand,
};

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("cannot read fixture: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot parse fixture: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid fixture: {0}")]
    Lefschetz(#[from] LefschetzError),
    #[error("invalid fixture: {0}")]
    Index(#[from] IndexError),
    #[error("invalid fixture: {0}")]
    Invalid(String),
}

pub const DEFAULT_Q_ORDER: usize = 8;

fn default_q_order() -> usize {
    DEFAULT_Q_ORDER
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VSpec {
    #[default]
    None,
    /// d(Y_0)·γ + Σ (d(Y_i)+1)·γ⊗λ^{−a_{Y_i}}.
    Section4,
    Summands { summands: Vec<VSummandSpec> },
}

/// γ^{gammaPower} ⊗ λ^{lambdaTwist} (raw twist), with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VSummandSpec {
    pub gamma_power: i64,
    pub lambda_twist: i64,
    pub multiplicity: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentSpec {
    #[serde(default)]
    pub d_y: usize,
    #[serde(default)]
    pub tangent_roots: Vec<i64>,
    /// (root, raw weight) of the normal lines.
    pub normal_roots: Vec<(i64, i64)>,
    pub gamma_weight: i64,
    #[serde(default)]
    pub spinc_weight: i64,
    /// Per-component twist restriction, used by the weight-bookkeeping
    /// checks. Lefschetz sums take the global `v` instead, which overwrites
    /// these restrictions.
    #[serde(default)]
    pub v_roots: Vec<(i64, i64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Fixture {
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient_weights: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    pub spinc_c1: i64,
    #[serde(default = "default_q_order")]
    pub q_order: usize,
    #[serde(default)]
    pub v: VSpec,
    /// Shift γ-weights by −Σa/(m+1) (linear models only).
    #[serde(default)]
    pub shift_normalize: bool,
}

impl Fixture {
    pub fn linear(m: usize, ambient_weights: Vec<i64>, spinc_c1: i64) -> Self {
        Fixture {
            m,
            ambient_weights: Some(ambient_weights),
            components: None,
            n: None,
            spinc_c1,
            q_order: DEFAULT_Q_ORDER,
            v: VSpec::None,
            shift_normalize: false,
        }
    }

    pub fn from_data(data: &FixedPointData, spinc_c1: i64) -> Self {
        Fixture {
            m: data.m,
            ambient_weights: None,
            components: Some(
                data.components
                    .iter()
                    .map(|c| ComponentSpec {
                        d_y: c.half_dim,
                        tangent_roots: c.tangent_roots.clone(),
                        normal_roots: c.normal_lines.iter().map(|l| (l.root, l.weight / 2)).collect(),
                        gamma_weight: c.gamma_weight / 2,
                        spinc_weight: c.spinc_weight / 2,
                        v_roots: c.v_lines.iter().map(|l| (l.root, l.weight / 2)).collect(),
                    })
                    .collect(),
            ),
            n: Some(data.n),
            spinc_c1,
            q_order: DEFAULT_Q_ORDER,
            v: VSpec::None,
            shift_normalize: false,
        }
    }
}

/// Fully materialized fixture: doubled weights, resolved V, Spin^c data.
#[derive(Debug, Clone)]
pub struct ResolvedFixture {
    pub data: FixedPointData,
    pub spinc: SpincData,
    pub v: VAssignment,
    pub q_order: usize,
}

pub fn resolve(fx: &Fixture) -> Result<ResolvedFixture, FixtureError> {
    let spinc = SpincData::new(fx.m, fx.spinc_c1)?;
    let mut data = match (&fx.ambient_weights, &fx.components) {
        (Some(weights), None) => {
            let spec = LinearModelSpec::new(weights.clone())?;
            if spec.m != fx.m {
                return Err(FixtureError::Invalid(format!(
                    "{} ambient weights for m = {}",
                    weights.len(),
                    fx.m
                )));
            }
            let model = if fx.shift_normalize {
                linear_model_shifted(&spec)?
            } else {
                linear_model(&spec)?
            };
            model.with_standard_spinc(fx.spinc_c1)
        }
        (None, Some(components)) => {
            let comps = components
                .iter()
                .map(|c| FixedComponent {
                    half_dim: c.d_y,
                    tangent_roots: c.tangent_roots.clone(),
                    normal_lines: c
                        .normal_roots
                        .iter()
                        .map(|&(root, w)| NormalLine { root, weight: 2 * w })
                        .collect(),
                    gamma_weight: 2 * c.gamma_weight,
                    spinc_weight: 2 * c.spinc_weight,
                    v_lines: c
                        .v_roots
                        .iter()
                        .map(|&(root, w)| VLine { root, weight: 2 * w })
                        .collect(),
                })
                .collect();
            let n = fx.n.ok_or_else(|| {
                FixtureError::Invalid("explicit components require n".into())
            })?;
            FixedPointData { m: fx.m, components: comps, n }
        }
        _ => {
            return Err(FixtureError::Invalid(
                "exactly one of ambientWeights / components is required".into(),
            ))
        }
    };
    if let Some(n) = fx.n {
        data.n = n;
    }
    data.validate()?;
    let v: VAssignment = match &fx.v {
        VSpec::None => vec![],
        VSpec::Section4 => build_v_section4(&data)?,
        VSpec::Summands { summands } => summands
            .iter()
            .map(|s| VSummand {
                gamma_power: s.gamma_power,
                lambda_twist: 2 * s.lambda_twist,
                multiplicity: s.multiplicity,
            })
            .collect(),
    };
    Ok(ResolvedFixture { data, spinc, v, q_order: fx.q_order })
}

pub fn load(path: impl AsRef<Path>) -> Result<Fixture, FixtureError> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn save(path: impl AsRef<Path>, fx: &Fixture) -> Result<(), FixtureError> {
    let text = serde_json::to_string_pretty(fx)?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}
