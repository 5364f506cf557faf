//! Hahn discrete orthogonal polynomials and discrete spectral projection.
//!
//! The polynomials live on the grid `0..=N`. [`hahn`] evaluates them,
//! [`calculus`] provides the difference operators and the self-adjoint
//! operator whose eigenfunctions they are, and [`expansion`] projects grid
//! functions onto them and reports the coefficient-decay bound.

pub mod calculus;
pub mod cli;
mod dd;
pub mod error;
pub mod expansion;
pub mod functions;
pub mod hahn;
pub mod legendre;
pub mod params;
pub mod specfun;
pub mod verify;

pub use dd::{dot, CompensatedSum, DoubleDouble};
pub use error::{HahnError, Result};
pub use params::HahnParams;
