//! Scalar abstraction: everything numeric in this crate is generic over a
//! floating-point type implementing [`Scalar`].

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, NumAssignOps, ToPrimitive};

/// Floating-point scalar usable throughout the crate (`f32` or `f64`).
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + NumAssignOps + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal (tolerances, coefficients) into `Self`.
    fn real(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal converts to scalar")
    }

    /// Widens to `f64` for text serialization and reporting.
    fn to_real(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
