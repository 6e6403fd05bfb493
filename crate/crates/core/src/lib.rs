//! Exact arithmetic for the moduli of degree-2 K3 surfaces with four `D4`
//! rational double points.
//!
//! Everything here is `no_std` (with `alloc`) and uses arbitrary precision
//! integers and rationals only. IO, text/JSON formats and the command line
//! live in the `k3lat` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod exactmath;
pub mod gradedring;
pub mod lattice;
pub mod modulimap;
pub mod multipoly;
pub mod sextic;
pub mod unipoly;
pub mod weierstrass;

pub use error::{Error, Result};
pub use exactmath::{IntMatrix, RatMatrix};
pub use lattice::Lattice;
pub use multipoly::{MultiPoly, Vars};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
