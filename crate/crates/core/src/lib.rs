//! Exact sparse elimination over the integers.

pub mod error;
pub mod examples;
pub mod linalg;
pub mod modp;
pub mod poly;
pub mod polytope;
pub mod resultant;
pub mod rur;
pub mod dimension;
pub mod bounds;
pub mod density;
pub mod univariate;
pub mod util;

pub use error::{Error, Result};
