//! Exact arithmetic for the big -1 Jacobi polynomials and their operator algebra.
//!
//! The big -1 Jacobi polynomials are the polynomial eigenfunctions of a first-order
//! differential-difference operator of Dunkl type (it involves the reflection
//! `R f(x) = f(-x)`). This crate builds that operator and everything attached to it
//! over exact rational arithmetic:
//!
//! * sparse Laurent polynomials and plain polynomials over arbitrary-precision
//!   rationals ([`laurent`], [`poly`]),
//! * a normal-form algebra of operators `sum a(x) * d^k/dx^k * R^e` with exact
//!   composition and application ([`dunkl`]),
//! * the polynomial family itself: eigenvalue operator, three-term recurrence,
//!   canonical basis, two-interval weight and exact moments ([`family`]),
//! * the anticommutator algebra realization with generators X, Y, Z, its Casimir,
//!   intertwiners and structure relations ([`jordan`]),
//! * parameter-shifting lowering/raising operators and Christoffel transforms
//!   ([`ladder`]),
//! * Gaussian quadrature rules for the two-interval weight and a tanh-sinh mass
//!   integrator — the only module that touches floating point ([`quad`]).
//!
//! Every operator identity is checked exactly: operators are held in a unique
//! normal form, so identity verification is structural equality of rationals.

pub mod dunkl;
pub mod error;
pub mod family;
pub mod jordan;
pub mod ladder;
pub mod laurent;
pub mod poly;
pub mod quad;
pub mod rational;
pub mod verify;

pub use dunkl::DunklOperator;
pub use error::{Error, Result};
pub use family::{MonicPolySeq, Params};
pub use laurent::LaurentPoly;
pub use poly::Poly;
pub use rational::{int, parse_rational, rat, Rational};
