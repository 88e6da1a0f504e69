//! Exact scalar tower: rationals, multivariate polynomials, rational
//! functions and sparse linear algebra over them.

pub mod linalg;
pub mod poly;
pub mod ratfun;
pub mod rational;
pub mod univariate;

pub use linalg::{solve_linear_system, Echelon, LinearSolution, SparseVec};
pub use poly::{Monomial, MultiPoly, Var};
pub use ratfun::{Field, RationalFunction};
pub use rational::{frac, rat, Rational};
