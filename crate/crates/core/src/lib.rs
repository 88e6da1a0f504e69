//! Exact computations with Jacobi diagrams, Lie superalgebra weight systems
//! and Vogel's character calculus.

pub mod arith;
mod error;
pub mod diagram;
pub mod kricker;
pub mod lie;
pub mod vogel;
pub mod weight;

pub use error::{Error, Result};
