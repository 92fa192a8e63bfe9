//! Floating-point scalar abstraction: the numeric core is generic over f32/f64.

use num_traits::{Float, FromPrimitive};
use std::fmt::{Debug, Display};

/// Floating scalar the numeric layer is generic over (`f32` or `f64`).
pub trait Scalar:
    Float + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Shorthand for lossy conversion from `f64` constants.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 converts to any float scalar")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
