//! Solomon-Stiffler and simplex codes over GF(p^m): constructions, exact
//! support weight distributions, weight enumerators of lifted codes, and
//! weight hierarchies, with brute-force oracles for cross-checking.

pub mod closedform;
pub mod construct;
pub mod error;
pub mod field;
pub mod matrix;
pub mod oracle;
mod poly;
pub mod qcombin;
pub mod render;

pub use error::{Error, Result};
