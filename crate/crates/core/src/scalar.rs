//! Scalar traits the exact algorithms are written against.
//!
//! Everything in this crate is generic over a coefficient type. The concrete
//! aliases at the crate root pick arbitrary-precision integers and rationals;
//! fixed-width integers (`i64`, `i128`) also satisfy the bounds and are handy
//! for small experiments, at the cost of overflow on large inputs. Floating
//! point types satisfy [`Ring`]/[`Field`] too, but equality tests on them are
//! only as good as the rounding allows.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// A commutative ring with signed elements and small-integer embedding.
///
/// `Num` brings `Div`; algorithms only divide when the quotient is known to be
/// exact (Bareiss elimination, Faddeev-LeVerrier traces).
pub trait Ring: Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive {}

impl<T> Ring for T where T: Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive {}

/// Euclidean integer-like ring: gcd, exact division, integer square roots.
pub trait IntegerRing: Ring + Integer + Roots + Eq + Ord + Hash {}

impl<T> IntegerRing for T where T: Ring + Integer + Roots + Eq + Ord + Hash {}

/// A field: every nonzero element is invertible.
pub trait Field: Ring {}

impl<T> Field for Ratio<T> where T: IntegerRing, Ratio<T>: Ring {}
impl Field for f32 {}
impl Field for f64 {}

/// Embeds a small integer constant into `T`.
pub fn from_i64<T: Ring>(k: i64) -> T {
    T::from_i64(k).expect("small integer constants embed in every supported scalar")
}
