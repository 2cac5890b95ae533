//! Exact polynomial arithmetic over the integers.
//!
//! Multivariate polynomials are sparse and ordered by graded lexicographic
//! order over the global [`VarId`] order. Univariate polynomials are dense and
//! only serve as restrictions of multivariate ones to lines.

mod det;
mod matrix;
mod monomial;
mod polynomial;
mod univariate;
mod var;

pub use det::{bareiss, determinant, determinant_bareiss};
pub use matrix::{Cell, StructuredMatrix};
pub use monomial::Monomial;
pub use polynomial::{PolyDisplay, Polynomial};
pub use univariate::UniPoly;
pub use var::{IndexSet, VarId};
