//! Arithmetic modulo word-size primes: fields, dense matrices, polynomials, CRT.

pub mod crt;
pub mod field;
pub mod matrix;
pub mod poly;

pub use crt::{rational_reconstruct, rational_reconstruct_bounded, CrtVec};
pub use field::{inv_mod, is_prime, mul_mod, pow_mod, LargePrimes, Mont};
pub use matrix::MatP;
