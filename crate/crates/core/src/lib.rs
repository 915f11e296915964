//! Exact multipoint Okounkov bodies, Seshadri constants and Zariski
//! decompositions for smooth toric surfaces and threefolds and for blow-ups
//! of the projective plane.

pub mod error;
pub mod check;
pub mod cli;
pub mod geometry;
pub mod semigroup;
pub mod seshadri;
pub mod surface;
pub mod toric;
pub mod valuation;

pub use error::{Error, ErrorKind, Result};
