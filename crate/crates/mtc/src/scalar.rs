//! Scalar abstraction for the floating-point layers.

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};
use std::fmt::{Debug, Display};

use crate::liealg::Rat;

/// Floating-point scalar used for all transcendental evaluation.
///
/// Implemented by `f32` and `f64`. Everything that needs trigonometry or
/// square roots is generic over this trait; exact root-system arithmetic
/// never touches it.
pub trait Real:
    Float + FloatConst + NumAssign + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Converts a compile-time `f64` constant (tolerances, literals).
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant must convert to scalar")
    }

    /// Converts an exact rational. The numerator and denominator are
    /// converted separately so the rounding error is one division.
    fn of_rat(r: Rat) -> Self {
        let n = Self::from_i64(*r.numer()).expect("numerator must convert to scalar");
        let d = Self::from_i64(*r.denom()).expect("denominator must convert to scalar");
        n / d
    }

    /// Lossy view as `f64`, for reporting residuals.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar must convert to f64")
    }
}

impl<T> Real for T where
    T: Float
        + FloatConst
        + NumAssign
        + FromPrimitive
        + ToPrimitive
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}
