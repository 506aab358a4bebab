//! Real scalar abstraction: the whole library is generic over the underlying
//! floating-point type through this trait.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the library is built on: `f32` or `f64`.
///
/// Besides the usual float operations this pins down the two tolerance
/// knobs the algorithms depend on, so that both precisions get values
/// proportionate to their machine epsilon.
pub trait Scalar:
    Float
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + Sum
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Relative tolerance under which a magnitude counts as zero.
    ///
    /// Drives zero-divisor detection (a component `c` of `Z` is zero when
    /// `|c| <= rel_tol() * (1 + |Z|)`) and the `Equal` arm of the hyperbolic
    /// partial order.
    fn rel_tol() -> Self;

    /// Convergence tolerance for iterative computations (operator norms).
    fn iter_tol() -> Self;

    /// Conversion from an `f64` literal; panics if the value is not
    /// representable (never the case for the constants used here).
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal not representable in this scalar type")
    }

    /// Conversion from a sequence index.
    fn from_index(n: usize) -> Self {
        Self::from_usize(n).expect("index not representable in this scalar type")
    }
}

impl Scalar for f64 {
    fn rel_tol() -> Self {
        1e-14
    }
    fn iter_tol() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    fn rel_tol() -> Self {
        1e-5
    }
    fn iter_tol() -> Self {
        1e-5
    }
}
