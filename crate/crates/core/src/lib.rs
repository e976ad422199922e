//! Exact verification of contiguity relations for the finite families of the
//! hypergeometric and basic hypergeometric orthogonal polynomials.
//!
//! Everything is computed over arbitrary-precision rationals; a relation is
//! accepted only when every residual is exactly zero.

#![no_std]

extern crate alloc;

pub mod banita;
pub mod catalog;
pub mod error;
pub mod expr;
pub mod constraints;
pub mod contiguity;
pub mod families;
pub mod oracle;
pub mod sampling;
pub mod report;
pub mod scalar;
pub mod search;
pub mod spectral;

pub use error::{Error, Result};
pub use families::{FamilyId, Param, ParameterSet};
pub use scalar::Scalar;
