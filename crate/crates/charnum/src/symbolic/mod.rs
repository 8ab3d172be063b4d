//! Exact truncated power series, polynomials in the genus variable `y`,
//! and the symmetric-function reduction behind multiplicative sequences.

mod rational;
mod series;
mod sympoly;
mod ypoly;

pub use rational::{parse_rat, rat, ratio, Rat};
pub use series::{chi_y_series, expm1_over_arg, specialize_y, TruncatedSeries};
pub use sympoly::{multiplicative_sequence_term, MultiSymmetricPoly};
pub use ypoly::YPoly;

use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

/// Coefficient ring shared by the series and symmetric-function kernels:
/// plain rationals for specialized genera, polynomials in `y` for the full
/// chi_y expansion.
pub trait Coeff:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Zero
    + One
    + Sub<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplication by a rational scalar.
    fn scale(&self, factor: &Rat) -> Self;
}

impl Coeff for Rat {
    fn scale(&self, factor: &Rat) -> Self {
        self * factor
    }
}
