//! Exact computation of generators of finite W-algebras `U(g, f)` for
//! `gl_N`, `so_N` and `sp_N` when the Dynkin grading of `f` is even.
//!
//! The crate is organised bottom-up:
//!
//! * [`pyramid`]: partitions, pyramids and the weight function on boxes.
//! * [`linalg`]: small dense matrices over the rationals.
//! * [`liealg`]: realizations of the classical Lie algebras in the basis
//!   adapted to the pyramid, brackets, invariant form, duals, truncations
//!   and centralizer elements.
//! * [`uea`]: PBW arithmetic in `U(g)`, reduction modulo the left ideal
//!   generated by `m - <f|m>` and the loop filtration.
//! * [`laurent`]: matrices of truncated Laurent polynomials in `z^{1/2}`
//!   with `U(g)` coefficients and the operators built from them.
//! * [`lax`]: the Lax type operators, their explicit path-sum expansions
//!   and generator extraction.
//! * [`verify`]: executable checks of membership, graded symbols,
//!   generation and the operator identities.

pub mod error;
pub mod laurent;
pub mod lax;
pub mod liealg;
pub mod linalg;
pub mod pyramid;
pub mod scalar;
pub mod uea;
pub mod verify;

pub use error::{Error, Result};
pub use liealg::{Kind, Realization};
pub use pyramid::{Half, Partition, Pyramid};
pub use scalar::Q;
