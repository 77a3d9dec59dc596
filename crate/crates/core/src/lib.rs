//! Exact generation and verification of the special polynomials attached to
//! rational solutions of the second and third Painlevé equations.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod exactpoly;
pub mod ratfun;
pub mod recurrences;
pub mod tables;
pub mod verify;
pub mod wronskian;

pub use error::{Error, Result};
pub use exactpoly::{BiPoly, Valuation};
