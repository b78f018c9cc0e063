//! Kneser graphs of spherical buildings over small prime fields, their
//! apartment subgraphs, and an exhaustive decision procedure for the unique
//! coclique extension property.
//!
//! All geometry is generic over a [`PrimeField`]; the concrete fields are
//! [`F2`], [`F3`], [`F5`] and [`F7`].

pub mod algebra;
pub mod buildings;
pub mod coclique;
pub mod coxeter;
pub mod crossval;
pub mod error;
pub mod exterior;
pub mod field;
pub mod graph;
pub mod matroid;

pub use error::{Error, Result};
pub use field::{Fp, PrimeField, SUPPORTED_PRIMES};

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
