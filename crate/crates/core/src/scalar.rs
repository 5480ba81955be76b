//! Floating point scalars the numerical routines are generic over.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// A real floating point type (`f32` or `f64`).
pub trait Scalar: Float + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static {
    /// Relative residual `‖Dx − ρx‖∞ / max(1, ρ)` the eigensolver must reach.
    const RESIDUAL_TOL: f64;

    /// Convert from `f64`, panicking is impossible for finite inputs.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 converts to any float")
    }

    #[inline]
    fn of_usize(x: usize) -> Self {
        Self::from_usize(x).expect("usize converts to any float")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const RESIDUAL_TOL: f64 = 1e-9;
}

impl Scalar for f32 {
    const RESIDUAL_TOL: f64 = 1e-4;
}
