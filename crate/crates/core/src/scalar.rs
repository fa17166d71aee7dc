use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real scalar used by the spectral and optimization code.
///
/// Blanket-implemented for every float type that `num-traits` knows about,
/// so `f32` and `f64` both work. Tolerances are expressed in the scalar type,
/// which means callers running in `f32` have to pass looser ones.
pub trait Scalar: Float + FromPrimitive + ToPrimitive + Debug + Display + Sum + Send + Sync + 'static {
    /// Converts an `f64` literal, panicking only if the type cannot represent it at all.
    #[inline]
    fn lit(value: f64) -> Self {
        Self::from_f64(value).expect("literal not representable in scalar type")
    }

    #[inline]
    fn of_usize(value: usize) -> Self {
        Self::from_usize(value).expect("integer not representable in scalar type")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Scalar for T where T: Float + FromPrimitive + ToPrimitive + Debug + Display + Sum + Send + Sync + 'static {}

/// Integer power for small non-negative exponents (hypergraph uniformity).
#[inline]
pub(crate) fn powu<T: Scalar>(x: T, exp: usize) -> T {
    x.powi(exp as i32)
}
