//! Root-and-weight descriptions of equivariant vector bundles over the CP^m
//! cohomology model.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BundleKind {
    /// Honest complex bundle: one entry per line summand.
    Complex,
    /// Complexified oriented real bundle: one entry per ±(c·x + w·z) pair.
    RealPaired,
    /// Spin bundle: paired entries, weights must stay even after doubling.
    SpinPaired,
}

/// One line summand (or root pair, for the paired kinds).
///
/// `root` is the integer c in the Chern root c·x; `weight` is the rotation
/// number of the circle action on the summand, stored pre-doubled.
/// Multiplicities may be negative for virtual bundles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineSummand {
    pub root: i64,
    pub weight: i64,
    pub multiplicity: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootBundle {
    pub kind: BundleKind,
    pub summands: Vec<LineSummand>,
}

impl RootBundle {
    pub fn complex(summands: Vec<(i64, i64, i64)>) -> Self {
        Self::build(BundleKind::Complex, summands)
    }

    pub fn real_paired(summands: Vec<(i64, i64, i64)>) -> Self {
        Self::build(BundleKind::RealPaired, summands)
    }

    pub fn spin_paired(summands: Vec<(i64, i64, i64)>) -> Self {
        Self::build(BundleKind::SpinPaired, summands)
    }

    fn build(kind: BundleKind, summands: Vec<(i64, i64, i64)>) -> Self {
        let summands = summands
            .into_iter()
            .filter(|(_, _, m)| *m != 0)
            .map(|(root, weight, multiplicity)| LineSummand { root, weight, multiplicity })
            .collect();
        RootBundle { kind, summands }
    }

    pub fn zero(kind: BundleKind) -> Self {
        RootBundle { kind, summands: vec![] }
    }

    pub fn is_paired(&self) -> bool {
        matches!(self.kind, BundleKind::RealPaired | BundleKind::SpinPaired)
    }

    /// Virtual complex rank: Σ multiplicities (pairs count once).
    pub fn virtual_rank(&self) -> i64 {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }

    /// Stable tangent model of CP^m: TM ⊕ 1 = (m+1)·γ, i.e. m+1 pairs with
    /// root x compensated by one virtual trivial pair. Reproduces
    /// p(CP^m) = (1+x²)^{m+1} and all multiplicative classes of the model.
    pub fn cp_tangent_stable(m: usize) -> Self {
        Self::real_paired(vec![(1, 0, m as i64 + 1), (0, 0, -1)])
    }
}
