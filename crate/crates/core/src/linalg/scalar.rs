use std::fmt::Debug;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Float, Signed};

/// Floating-point scalar accepted by the dense eigensolver.
pub trait RealScalar: Float + Debug + Send + Sync + 'static {
    fn from_f64(x: f64) -> Self;
}

impl RealScalar for f32 {
    fn from_f64(x: f64) -> Self {
        x as f32
    }
}

impl RealScalar for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
}

/// Exact integer ring for fraction-free elimination.
///
/// The checked operations report overflow for fixed-width types; the
/// arbitrary-precision type never overflows.
pub trait ExactInt:
    Integer + Signed + Clone + Debug + CheckedAdd + CheckedSub + CheckedMul + CheckedDiv + From<i64>
{
}

impl<T> ExactInt for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + CheckedDiv
        + From<i64>
{
}
