//! Exact q-series arithmetic for experimenting with the Rogers-Ramanujan
//! continued fraction and the two identities that fall out of it.
//!
//! Everything here works over arbitrary-precision integers with an explicit
//! truncation order, so identities are checked coefficient by coefficient
//! with no rounding anywhere. The only floating-point value in the crate is
//! the diagnostic [`cfrac::golden_error`].
//!
//! The crate is `no_std` and needs only `alloc`. IO, JSON and the command
//! line live in the `qdiscover-cli` companion crate.
//!
//! Modules, roughly in the order they build on each other:
//!
//! - [`fps`]: truncated power series in `q` ([`QSeries`]).
//! - [`zpoly`]: polynomials in `z` over [`QSeries`] ([`ZPolynomial`]).
//! - [`sumside`]: q-Pochhammer factors and the two sum sides.
//! - [`cfrac`]: golden-mean and Rogers-Ramanujan convergents.
//! - [`prodmake`]: turn a series into a conjectured product by stripping.
//! - [`dirichlet`]: the same stripping over Dirichlet series, which finds the primes.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod cfrac;
pub mod dirichlet;
mod error;
pub mod fps;
pub mod prodmake;
pub mod sumside;
pub mod zpoly;

pub use cfrac::BigRational;
pub use dirichlet::DirichletSeries;
pub use error::{Error, Result};
pub use fps::QSeries;
pub use prodmake::{ProductForm, ResiduePattern};
pub use sumside::Identity;
pub use zpoly::ZPolynomial;

pub use num_bigint::BigInt;
