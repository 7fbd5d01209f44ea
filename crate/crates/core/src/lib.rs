//! Exact construction and verification of Beltrami vector fields with
//! icosahedral symmetry, together with a numeric layer for orbits and zeros.

pub mod construct;
pub mod dynamics;
pub mod error;
pub mod exactnum;
pub mod linalg;
pub mod ratfunc;
pub mod trigexpr;
pub mod verify;

pub use error::{Error, Result};
