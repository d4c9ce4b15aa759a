//! Exact arbitrary-precision rational arithmetic, real intervals with
//! rational endpoints and complex boxes.
//!
//! Every operation here is exact: interval endpoints are rationals and no
//! rounding error is ever introduced. Where rationals threaten to grow
//! without bound, callers can widen outward to a dyadic grid with
//! [`RealInterval::outward_dyadic`]; widening is always sound.

mod complex;
mod interval;
mod rational;

pub use complex::ComplexBox;
pub use interval::RealInterval;
pub use complex::rational_between_sqrt_and;
pub use rational::{
    ceil_log2, ceil_log2_abs, dyadic_ceil, dyadic_floor, parse_rational, pow2, rational_from_int,
    rational_to_string, serde_rational, Rational,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Output accuracy request: an answer of precision `p` has width at most
/// `2^-p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Precision(pub u32);

impl Precision {
    pub fn width_bound(self) -> Rational {
        rational::pow2(-(self.0 as i64))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("interval division by an interval containing zero")]
    DivisorStraddlesZero,
}
