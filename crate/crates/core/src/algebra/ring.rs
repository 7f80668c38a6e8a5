//! Coefficient-ring abstraction for the series types.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rat;

/// A commutative coefficient ring with a partial inverse.
///
/// `try_inverse` returns `None` on non-units; series inversion uses it on the
/// q^0 coefficient.
pub trait CoeffRing:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn try_inverse(&self) -> Option<Self>;
}

impl CoeffRing for Rat {
    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }
}
