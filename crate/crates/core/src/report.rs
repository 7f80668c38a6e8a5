//! Machine-readable verification reports.
//!
//! Schema: `{check, status, params, witness, value}` with every exact
//! rational rendered as `{"num": "...", "den": "..."}` in decimal strings.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::Rat;
use crate::index::mod24::Mod24Outcome;
use crate::index::pontryagin::Reconstruction;
use crate::jacobi::{LawCheck, ScanOutcome};
use crate::lefschetz::{LefschetzOutcome, PetrieOutcome, StarOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NumericPass,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub status: CheckStatus,
    pub params: Value,
    pub witness: Value,
    pub value: Value,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        matches!(self.status, CheckStatus::Pass | CheckStatus::NumericPass)
    }

    pub fn exact(check: impl Into<String>, pass: bool, params: Value, witness: Value, value: Value) -> Self {
        VerificationReport {
            check: check.into(),
            status: if pass { CheckStatus::Pass } else { CheckStatus::Fail },
            params,
            witness,
            value,
        }
    }

    pub fn numeric(check: impl Into<String>, pass: bool, params: Value, witness: Value, value: Value) -> Self {
        VerificationReport {
            check: check.into(),
            status: if pass { CheckStatus::NumericPass } else { CheckStatus::Fail },
            params,
            witness,
            value,
        }
    }
}

/// `{"num": "...", "den": "..."}` with bit-exact decimal strings.
pub fn rat_json(r: &Rat) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

pub fn rat_vec_json(rs: &[Rat]) -> Value {
    Value::Array(rs.iter().map(rat_json).collect())
}

impl StarOutcome {
    pub fn to_report(&self, label: &str) -> VerificationReport {
        let witness = match self.witness {
            Some((i, j)) => json!({
                "components": [i, j],
                "values": [self.values[i], self.values[j]],
            }),
            None => Value::Null,
        };
        VerificationReport::exact(
            format!("star-invariant/{label}"),
            self.pass,
            json!({ "n": self.n }),
            witness,
            json!({ "values": self.values, "constant": self.constant }),
        )
    }
}

impl Mod24Outcome {
    pub fn to_report(&self) -> VerificationReport {
        let pass = self.integral == self.congruent && self.higher_terms_decouple;
        VerificationReport::exact(
            format!("mod24/m{}/b{}", self.m, self.b),
            pass,
            json!({ "m": self.m, "b": self.b }),
            if pass { Value::Null } else { json!({ "index": rat_json(&self.index) }) },
            json!({
                "index": rat_json(&self.index),
                "qConst": rat_json(&self.q_const),
                "integral": self.integral,
                "congruent": self.congruent,
                "higherTermsDecouple": self.higher_terms_decouple,
            }),
        )
    }
}

impl LefschetzOutcome {
    pub fn to_report(&self, label: &str) -> VerificationReport {
        let pass = self.polynomial && self.matches_index;
        let witness = if pass {
            Value::Null
        } else {
            json!({
                "failingOrder": self.failing_order,
                "coefficient": self
                    .failing_order
                    .map(|n| self.sum.coeff(n).to_string()),
                "atOne": self.at_one.as_ref().map(|v| rat_vec_json(v)),
                "index": rat_vec_json(&self.index),
            })
        };
        VerificationReport::exact(
            format!("lefschetz/{label}"),
            pass,
            json!({ "qOrder": self.q_order }),
            witness,
            json!({
                "polynomial": self.polynomial,
                "indexSeries": rat_vec_json(&self.index),
                "coefficients": (0..=self.q_order)
                    .map(|n| self.sum.coeff(n).to_string())
                    .collect::<Vec<_>>(),
            }),
        )
    }
}

impl PetrieOutcome {
    pub fn to_report(&self) -> VerificationReport {
        VerificationReport::exact(
            format!("petrie-bound/m{}/n{}", self.m, self.n),
            self.pass,
            json!({ "m": self.m, "n": self.n, "nNonnegative": self.n_nonnegative }),
            if self.pass {
                Value::Null
            } else {
                json!({ "twoIY0": self.two_i_y0, "lhs": self.lhs, "rhs": self.rhs })
            },
            json!({
                "twoIY0": self.two_i_y0,
                "maxComponent": self.max_component,
                "lhs": self.lhs,
                "rhs": self.rhs,
                "impliedNBound": self.implied_n_bound,
                "chainConsistent": self.chain_consistent,
                "boundHolds": self.bound_holds,
                "starPass": self.star.pass,
            }),
        )
    }
}

impl Reconstruction {
    pub fn to_report(&self) -> VerificationReport {
        // residual dimension 0 is asserted for even m only
        let pass = self.m % 2 == 1 || self.residual_dim == 0;
        VerificationReport::exact(
            format!("reconstruct/m{}", self.m),
            pass,
            json!({ "m": self.m }),
            if pass {
                Value::Null
            } else {
                json!({ "residualDim": self.residual_dim })
            },
            json!({
                "unknowns": self.unknowns,
                "relationCount": self.relation_count,
                "relationRank": self.relation_rank,
                "dimAfterRelations": self.dim_after_relations,
                "residualDim": self.residual_dim,
                "signatureUsed": self.signature_used,
                "pontryagin": self.pontryagin.as_ref().map(|p| rat_vec_json(p)),
            }),
        )
    }
}

impl LawCheck {
    pub fn to_report(&self, check: impl Into<String>, params: Value) -> VerificationReport {
        VerificationReport::numeric(
            check,
            self.pass,
            params,
            if self.pass {
                Value::Null
            } else {
                json!({ "lhs": [self.lhs.re, self.lhs.im], "rhs": [self.rhs.re, self.rhs.im] })
            },
            json!({ "residual": self.residual }),
        )
    }
}

impl ScanOutcome {
    pub fn to_report(&self, label: &str) -> VerificationReport {
        VerificationReport::numeric(
            format!("real-line-scan/{label}"),
            self.pass,
            json!({
                "tau": [self.tau.re, self.tau.im],
                "gridSize": self.grid_size,
            }),
            if self.pass {
                Value::Null
            } else {
                json!({ "growth": self.growth, "exactResidualMax": self.exact_residual_max })
            },
            json!({
                "maxAbs": self.max_abs,
                "refinedMaxAbs": self.refined_max_abs,
                "growth": self.growth,
                "exactResidualMax": self.exact_residual_max,
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn rational_serialization_is_decimal_strings() {
        let v = rat_json(&rat(-22, 7));
        assert_eq!(v, json!({ "num": "-22", "den": "7" }));
    }

    #[test]
    fn status_strings() {
        let r = VerificationReport::numeric("x", true, Value::Null, Value::Null, Value::Null);
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"numeric-pass\""));
    }
}
