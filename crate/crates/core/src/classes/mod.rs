//! Characteristic-class calculus from formal roots.
//!
//! Bundles are described by their (equivariant) roots c·x + w·z as
//! [`bundle::RootBundle`] values; the operations expand multiplicative
//! sequences, Chern characters, spinor characters and the twist series built
//! from symmetric and exterior powers, all exactly in Q[x]/(x^{m+1}).

pub mod bundle;
pub mod chern;
pub mod genus;
pub mod twist;

pub use bundle::{BundleKind, LineSummand, RootBundle};
pub use chern::{chern_character, chern_character_eq, euler_class, spinor_character, spinor_character_eq};
pub use genus::{genus_factor, multiplicative_class, Genus};
pub use twist::{twist_uv, twist_uvw};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("operation requires a bundle with paired roots")]
    UnpairedRoots,
    #[error("spinor weight is not even; weights must be pre-doubled")]
    OddHalfWeight,
    #[error("negative multiplicity has no Euler class")]
    NegativeMultiplicity,
    #[error("twist factor is not invertible for this virtual bundle")]
    NotInvertible,
}
