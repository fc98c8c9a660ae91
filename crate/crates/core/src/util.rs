//! Small numeric helpers shared across modules.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Natural log of |x|; `0.0` for zero so that height conventions stay finite.
pub fn log_abs(x: &BigInt) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let bits = x.bits();
    if bits <= 1000 {
        x.abs().to_f64().unwrap().ln()
    } else {
        let shift = bits - 64;
        let top = (x.abs() >> shift).to_f64().unwrap();
        top.ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// ln C(n, k) computed through ln-gamma sums; exact enough for bound formulas.
pub fn ln_binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    let k = k.min(n - k);
    (0..k).map(|j| ((n - j) as f64).ln() - ((j + 1) as f64).ln()).sum()
}

pub fn binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// Number of decimal digits of |x| (1 for zero).
pub fn decimal_digits(x: &BigInt) -> usize {
    let s = x.abs().to_str_radix(10);
    s.len()
}

/// Bits needed to write |x|, at least one.
pub fn bit_size(x: &BigInt) -> u64 {
    x.bits().max(1)
}

/// gcd, reducing the larger operand modulo the smaller one first.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut x, mut y) = if a.bits() >= b.bits() { (a.abs(), b.abs()) } else { (b.abs(), a.abs()) };
    while !y.is_zero() && x.bits() > y.bits() + 64 {
        let r = &x % &y;
        x = y;
        y = r;
    }
    num_integer::Integer::gcd(&x, &y)
}

/// TORIC_THREADS if set to a positive integer, else the available parallelism.
pub fn worker_threads() -> usize {
    std::env::var("TORIC_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&t: &usize| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|x| x.get()).unwrap_or(1))
}
