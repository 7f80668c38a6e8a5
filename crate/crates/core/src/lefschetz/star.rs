//! Component-independence of Σ m_{Y,i}² + n·a_Y², the weight identity coming
//! from the vanishing of p₁(TM + n·γ).

use super::FixedPointData;

/// Per-component values of the invariant, in doubled-weight units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarOutcome {
    pub n: i64,
    pub values: Vec<i64>,
    pub pass: bool,
    /// The common value when the check passes.
    pub constant: Option<i64>,
    /// Indices of two components witnessing a failure.
    pub witness: Option<(usize, usize)>,
}

pub fn star_invariant(data: &FixedPointData) -> StarOutcome {
    let values: Vec<i64> = data
        .components
        .iter()
        .map(|c| {
            let m2: i64 = c.normal_lines.iter().map(|l| l.weight * l.weight).sum();
            m2 + data.n * c.gamma_weight * c.gamma_weight
        })
        .collect();
    let mut witness = None;
    for i in 1..values.len() {
        if values[i] != values[0] {
            witness = Some((0, i));
            break;
        }
    }
    StarOutcome {
        n: data.n,
        pass: witness.is_none(),
        constant: if witness.is_none() { values.first().copied() } else { None },
        values,
        witness,
    }
}
