//! Non-equivariant twisted Spin^c indices on the CP^m cohomology model.

pub mod mod24;
pub mod pontryagin;
pub mod rigidity;

use num_traits::One;
use thiserror::Error;

use crate::algebra::qseries::QSeries;
use crate::algebra::truncpoly::Poly;
use crate::algebra::{rat, Rat};
use crate::classes::{chern_character, multiplicative_class, Genus, RootBundle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("dimension too small for this check (m = {0})")]
    DimensionTooSmall(usize),
    #[error("c1 = {c1} is not characteristic for m = {m} (needs c1 ≡ m+1 mod 2)")]
    SpincParity { m: usize, c1: i64 },
    #[error("linear system is underdetermined (residual dimension {0})")]
    UnderdeterminedSystem(usize),
    #[error("linear system has no solution")]
    NoSolution,
}

/// Spin^c datum on the model: c = c1·x with c1 ≡ m+1 mod 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpincData {
    pub m: usize,
    pub c1: i64,
}

impl SpincData {
    pub fn new(m: usize, c1: i64) -> Result<Self, IndexError> {
        if (c1 - (m as i64 + 1)) % 2 != 0 {
            return Err(IndexError::SpincParity { m, c1 });
        }
        Ok(SpincData { m, c1 })
    }
}

/// Â of the model, from the stable tangent multiset.
pub fn ahat_class(m: usize) -> Poly {
    multiplicative_class(Genus::AHat, &RootBundle::cp_tangent_stable(m), m)
        .expect("stable tangent model is paired")
}

/// e^{c/2} · Â(M) — the twist-independent part of every index integrand.
pub fn index_prefactor(spinc: &SpincData) -> Poly {
    let half_c = Poly::x(spinc.m).scale(&rat(spinc.c1, 2));
    half_c.exp().expect("nilpotent") * ahat_class(spinc.m)
}

/// ind(∂_c ⊗ V) = ⟨e^{c/2}·Â(M)·ch(V), μ_M⟩, exact.
pub fn index_twisted(spinc: &SpincData, v: &RootBundle) -> Rat {
    let ch = if v.summands.is_empty() {
        Poly::one().with_cap(spinc.m)
    } else {
        chern_character(v, spinc.m)
    };
    (index_prefactor(spinc) * ch).pair_fundamental()
}

/// Per-q-order application of the index integrand to a twist series.
pub fn index_series(spinc: &SpincData, twist: &QSeries<Poly>) -> QSeries<Rat> {
    let pre = index_prefactor(spinc);
    twist.map(|c| (pre.clone() * c.clone()).pair_fundamental())
}
