use thiserror::Error;

/// Errors surfaced by the numeric operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inverse of the zero element requested.
    #[error("zero is not invertible")]
    Zero,
    /// Inverse of a zero divisor requested (exactly one idempotent component vanishes).
    #[error("zero divisor is not invertible")]
    ZeroDivisor,
    /// Input lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Two series over different weight sequences were combined.
    #[error("series weight sequences do not match")]
    WeightMismatch,
    /// A component matrix is numerically singular.
    #[error("matrix component is numerically singular")]
    Singular,
    /// The matrix fails the unitarity precondition.
    #[error("matrix is not unitary")]
    NotUnitary,
    /// The series constant term does not lie inside the unit disc componentwise.
    #[error("series does not define a self map: constant term outside the unit disc")]
    NotSelfMap,
    /// A Möbius denominator component vanished.
    #[error("degenerate Möbius evaluation: denominator component vanished")]
    Degenerate,
    /// Requested verification property does not exist.
    #[error("unknown property: {0}")]
    UnknownProperty(String),
}

pub type Result<T> = std::result::Result<T, Error>;
