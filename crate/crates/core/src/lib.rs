//! Exact Kauffman brackets, Jones polynomials and SO(3) quantum invariants at
//! odd prime roots of unity, with periodicity criteria for links and
//! integral homology spheres built on them.

pub mod bracket;
pub mod cyclotomic;
pub mod error;
pub mod laurent;
pub mod link;
pub mod periodicity;
pub mod so3;

pub use error::{Error, Result};
