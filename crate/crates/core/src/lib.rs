//! Finite fields, linear and explicit codes over them, and the rate bounds
//! for perfect k-hash codes that can be checked numerically or by brute force.

pub mod bounds;
pub mod codes;
pub mod galois;
pub mod solvers;
pub mod verify;

pub use bounds::BoundError;
pub use codes::{CodeError, Distance, ExplicitCode, LinearCode};
pub use galois::{Field, FieldElement, FieldError};
pub use solvers::SolveError;
pub use verify::VerifyError;

/// Any error raised by this crate.
#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}
