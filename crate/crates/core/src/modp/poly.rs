//! Univariate polynomials over Z/pZ, plain residues, ascending coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::field::{add_mod, inv_mod, mul_mod, sub_mod};

pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree, or `None` for the zero polynomial.
pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn reduce(coeffs: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    trim(
        coeffs
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect(),
    )
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| add_mod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
            .collect(),
    )
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| sub_mod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
            .collect(),
    )
}

pub fn scale(a: &[u64], k: u64, p: u64) -> Vec<u64> {
    trim(a.iter().map(|&c| mul_mod(c, k, p)).collect())
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    let pp = p as u128;
    let limit = u128::MAX - pp * pp;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let slot = &mut acc[i + j];
            *slot += x as u128 * y as u128;
            if *slot > limit {
                *slot %= pp;
            }
        }
    }
    trim(acc.into_iter().map(|v| (v % pp) as u64).collect())
}

pub fn monic(a: &[u64], p: u64) -> Vec<u64> {
    match degree(a) {
        None => Vec::new(),
        Some(d) => scale(&a[..=d], inv_mod(a[d], p), p),
    }
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = degree(b).expect("division by zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let inv = inv_mod(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = mul_mod(r[dr], inv, p);
        q[dr - db] = c;
        for j in 0..=db {
            r[dr - db + j] = sub_mod(r[dr - db + j], mul_mod(c, b[j], p), p);
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    divrem(a, b, p).1
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

/// Returns (g, s) with s·a ≡ g (mod b), g = gcd(a, b) monic.
pub fn gcdex(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r0 = trim(b.to_vec());
    let mut r1 = rem(a, b, p);
    let mut s0: Vec<u64> = Vec::new();
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    match degree(&r0) {
        None => (Vec::new(), Vec::new()),
        Some(d) => {
            let inv = inv_mod(r0[d], p);
            (scale(&r0, inv, p), scale(&s0, inv, p))
        }
    }
}

/// Inverse of `a` modulo `f` when gcd(a, f) = 1.
pub fn inverse_mod(a: &[u64], f: &[u64], p: u64) -> Option<Vec<u64>> {
    let (g, s) = gcdex(a, f, p);
    (g == vec![1]).then(|| rem(&s, f, p))
}

pub fn mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), f, p)
}

pub fn derivative(a: &[u64], p: u64) -> Vec<u64> {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, (i as u64) % p, p))
            .collect(),
    )
}

pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

/// base^e mod f.
pub fn powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut r = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(&r, &b, f, p);
        }
        b = mulmod(&b, &b, f, p);
        e >>= 1;
    }
    r
}

/// Number of distinct roots in Z/pZ of a nonzero polynomial.
pub fn distinct_root_count(f: &[u64], p: u64) -> usize {
    let f = trim(f.to_vec());
    match degree(&f) {
        None => panic!("zero polynomial has every residue as a root"),
        Some(0) => 0,
        Some(_) => {
            let xp = powmod(&[0, 1], p, &f, p);
            let g = gcd(&sub(&xp, &[0, 1], p), &f, p);
            degree(&g).unwrap_or(0)
        }
    }
}

/// All distinct roots in Z/pZ, sorted.
pub fn roots(f: &[u64], p: u64) -> Vec<u64> {
    let f = monic(f, p);
    let Some(d) = degree(&f) else {
        panic!("zero polynomial has every residue as a root");
    };
    if d == 0 {
        return Vec::new();
    }
    if p < 64 || (p as u128) < 8 * d as u128 {
        return (0..p).filter(|&x| eval(&f, x, p) == 0).collect();
    }
    let xp = powmod(&[0, 1], p, &f, p);
    let g = gcd(&sub(&xp, &[0, 1], p), &f, p);
    let mut out = Vec::new();
    let mut shift = 1u64;
    split_linear(g, p, &mut shift, &mut out);
    out.sort_unstable();
    out
}

fn split_linear(g: Vec<u64>, p: u64, shift: &mut u64, out: &mut Vec<u64>) {
    match degree(&g) {
        None | Some(0) => {}
        Some(1) => out.push(sub_mod(0, mul_mod(g[0], inv_mod(g[1], p), p), p)),
        Some(d) => loop {
            // deterministic sequence of shifts (x + a)^((p-1)/2) - 1
            let a = *shift % p;
            *shift = shift.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407) >> 1;
            let h = powmod(&[a, 1], (p - 1) / 2, &g, p);
            let h = sub(&h, &[1], p);
            let c = gcd(&h, &g, p);
            let dc = degree(&c).unwrap_or(0);
            if dc > 0 && dc < d {
                let (q, _) = divrem(&g, &c, p);
                split_linear(c, p, shift, out);
                split_linear(monic(&q, p), p, shift, out);
                return;
            }
        },
    }
}

/// Interpolating polynomial through (xs[i], ys[i]) with distinct xs (Newton form).
pub fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = sub_mod(coef[i], coef[i - 1], p);
            let den = sub_mod(xs[i], xs[i - j], p);
            coef[i] = mul_mod(num, inv_mod(den, p), p);
        }
    }
    let mut out = vec![0u64; 1];
    for i in (0..n).rev() {
        // out = out * (x - xs[i]) + coef[i]
        let shifted = mul(&out, &[sub_mod(0, xs[i] % p, p), 1], p);
        out = add(&shifted, &[coef[i]], p);
    }
    trim(out)
}

/// f(x + c).
pub fn taylor_shift(f: &[u64], c: u64, p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    for &a in f.iter().rev() {
        out = add(&mul(&out, &[c % p, 1], p), &[a], p);
    }
    out
}

pub fn is_squarefree(f: &[u64], p: u64) -> bool {
    let d = derivative(f, p);
    if d.is_empty() {
        return degree(f).unwrap_or(0) == 0;
    }
    degree(&gcd(f, &d, p)) == Some(0)
}

/// Resultant of a and b over Z/pZ, with the formal degrees taken as the true degrees.
pub fn resultant(a: &[u64], b: &[u64], p: u64) -> u64 {
    let (Some(mut da), Some(mut db)) = (degree(a), degree(b)) else {
        return 0;
    };
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    let mut acc = 1u64;
    loop {
        if db == 0 {
            return mul_mod(acc, super::field::pow_mod(b[0], da as u64, p), p);
        }
        let r = rem(&a, &b, p);
        let Some(dr) = degree(&r) else {
            return 0;
        };
        if (da * db) % 2 == 1 {
            acc = sub_mod(0, acc, p);
        }
        acc = mul_mod(acc, super::field::pow_mod(b[db], (da - dr) as u64, p), p);
        a = b;
        b = r;
        da = db;
        db = dr;
    }
}
