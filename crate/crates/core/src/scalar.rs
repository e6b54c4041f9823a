//! Scalar traits the algebra is generic over.
//!
//! Everything in [`crate::poly`], [`crate::companion`] and [`crate::sequence`]
//! works over any exact integer ring implementing [`Int`]; the floating-point
//! oracle works over any [`Real`]. The root driver fixes the ring to
//! [`num_bigint::BigInt`] because sequence terms grow like `|λ|^j`.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Float, FloatConst, FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer ring: `i64`, `i128` or [`BigInt`].
///
/// Fixed-width implementations overflow quickly once sequences are iterated;
/// they are useful for small polynomials and tests.
pub trait Int:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync
{
    fn from_small(v: i64) -> Self {
        Self::from_i64(v).expect("small integer fits every ring")
    }

    fn ten() -> Self {
        Self::from_small(10)
    }
}

impl Int for i64 {}
impl Int for i128 {}
impl Int for BigInt {}

/// Floating-point scalar used by the oracle: `f32` or `f64`.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync {}

impl Real for f32 {}
impl Real for f64 {}
