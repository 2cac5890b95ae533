//! Exact symbolic toolkit for the anti-canonical divisor of type-A partial
//! flag varieties `Fl(n•; n)`.
//!
//! The crate is `no_std` and only needs `alloc`. It contains
//!
//! * [`weyl`]: permutations, Bruhat and parabolic Bruhat order, minimal coset
//!   representatives and the `Γ(v)` sets;
//! * [`poly`]: sparse multivariate polynomials over big integers, univariate
//!   gcd, structured matrices and their determinants;
//! * [`blockdet`]: the generic block matrices `M(i•; j•)` and the structure of
//!   the top homogeneous component of their determinants;
//! * [`divisor`]: Schubert-cell coordinates, Plücker minors and the equations
//!   of every component of `-K`;
//! * [`verify`]: Monte Carlo square-freeness and coprimality checks and the
//!   fundamental-group rank tables.
//!
//! Permutations compose as functions: `(u * v)(i) = u(v(i))`.

#![no_std]

extern crate alloc;

pub mod blockdet;
pub mod divisor;
mod error;
pub mod poly;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
