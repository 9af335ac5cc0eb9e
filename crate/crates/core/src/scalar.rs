//! Scalar abstraction for the floating-point kernels.
//!
//! Everything spectral (eigensolver, idempotents, multiplicity tables) is
//! generic over [`Scalar`] so the same code runs in `f32` or `f64`. The
//! crate-root aliases fix `f64` as the default precision.

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
    /// Lift an `f64` constant into this scalar type.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("f64 constant representable")
    }

    /// Lift a vertex/cell count into this scalar type.
    fn of_usize(v: usize) -> Self {
        Self::from_usize(v).expect("usize representable")
    }

    /// Lift an exact integer matrix entry into this scalar type.
    fn of_i64(v: i64) -> Self {
        Self::from_i64(v).expect("i64 representable")
    }

    /// Lossy view as `f64`, used only for error reporting.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
