//! Bicomplex numbers and the function spaces built on them.
//!
//! The library implements, over a generic real scalar (`f32` or `f64`):
//!
//! - bicomplex and hyperbolic arithmetic with the three conjugations, the
//!   Euclidean and hyperbolic (𝔻-valued) norms, idempotent decomposition and
//!   the partial order on 𝔻 ([`Bicomplex`], [`Hyperbolic`]);
//! - bicomplex matrices with involution, 𝔻-valued operator norm, quotient
//!   norms modulo the ideals `e1·𝔹ℂ`/`e2·𝔹ℂ`, and the ring homomorphisms of
//!   𝔹ℂ, each exposed as a checkable computation ([`BcMatrix`], [`cstar`]);
//! - weighted Hardy spaces of power series with hyperbolic weights, their
//!   reproducing kernels in series and closed form ([`SeriesFunction`],
//!   [`Weights`]);
//! - composition operators on those spaces, with norm bounds for disc
//!   automorphisms and general holomorphic self-maps ([`DiscAutomorphism`],
//!   [`HoloSelfMap`]);
//! - a seeded, deterministic property-verification suite covering all of the
//!   identities above ([`verify`]).
//!
//! Concrete type aliases for the common precision live at the crate root
//! (`Bc64`, `Hyp64`, ...).

pub mod bicomplex;
pub mod cstar;
pub mod error;
pub mod hardy;
pub mod hyperbolic;
pub mod matrix;
pub mod operators;
pub mod scalar;
pub mod verify;

pub use bicomplex::{Bicomplex, Conjugation, Modulus, NumberClass};
pub use error::{Error, Result};
pub use hyperbolic::{Hyperbolic, OrderRelation};
pub use matrix::{BcMatrix, ComplexMatrix};
pub use scalar::Scalar;

pub use num_complex::Complex;

/// Default truncation degree for series computations.
pub const DEFAULT_TRUNCATION: usize = 256;

/// `f64` bicomplex number.
pub type Bc64 = Bicomplex<f64>;
/// `f32` bicomplex number.
pub type Bc32 = Bicomplex<f32>;
/// `f64` hyperbolic number.
pub type Hyp64 = Hyperbolic<f64>;
/// `f32` hyperbolic number.
pub type Hyp32 = Hyperbolic<f32>;
/// `f64` complex number.
pub type C64 = Complex<f64>;
/// `f64` bicomplex matrix.
pub type BcMatrix64 = BcMatrix<f64>;
/// `f64` series function.
pub type Series64 = hardy::SeriesFunction<f64>;
