//! Binary and ternary linear codes generated by weight matrices of modules
//! over the simple Lie algebras sl(n), o(2m), F4, E6, E7 and E8, with an
//! exhaustive verifier for their parameters.

pub mod cli;
pub mod error;
pub mod fieldcodes;
pub mod repweights;
pub mod rootsys;
pub mod verify;

pub use error::{Error, Result};
