//! Dense univariate integer polynomials: gcd, square-free parts, discriminants,
//! first subresultants, real and rational root counts.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{det_bareiss, ExactRing, IntMatrix};
use crate::modp::{self, is_prime, rational_reconstruct_bounded, CrtVec, LargePrimes};

/// Ascending coefficient list; the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The polynomial t.
    pub fn t() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// t - r for an integer r.
    pub fn linear_root(r: impl Into<BigInt>) -> Self {
        Self::new(vec![-r.into(), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn tc(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: c }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * x + BigRational::from_integer(c.clone())
            })
    }

    /// Sign-exact test of f(n/d) = 0 without fractions.
    pub fn vanishes_at(&self, x: &BigRational) -> bool {
        let (n, d) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        let mut terms = vec![BigInt::zero(); self.coeffs.len()];
        for i in (0..self.coeffs.len()).rev() {
            terms[i] = dpow.clone();
            dpow *= d;
        }
        let mut npow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * &npow * &terms[i];
            npow *= n;
        }
        acc.is_zero()
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = crate::util::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    /// Natural log of the largest coefficient magnitude.
    pub fn height(&self) -> f64 {
        crate::util::log_abs(&self.max_abs_coeff())
    }

    /// Euclidean norm of the coefficient vector, as log2.
    pub fn log2_norm(&self) -> f64 {
        let s: BigInt = self.coeffs.iter().map(|c| c * c).sum();
        crate::util::log_abs(&s) / std::f64::consts::LN_2 / 2.0
    }

    pub fn reverse(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// f(t + c).
    pub fn taylor_shift(&self, c: &BigInt) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        if c.is_one() {
            for i in 0..n {
                for j in (i..n - 1).rev() {
                    let (lo, hi) = a.split_at_mut(j + 1);
                    lo[j] += &hi[0];
                }
            }
            return Self::new(a);
        }
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let add = &a[j + 1] * c;
                a[j] += add;
            }
        }
        Self::new(a)
    }

    /// f(k t).
    pub fn scale_variable(&self, k: &BigInt) -> Self {
        let mut pw = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw *= k;
        }
        Self::new(out)
    }

    /// f(a t + b).
    pub fn compose_linear(&self, a: &BigInt, b: &BigInt) -> Self {
        let lin = UniPoly::new(vec![b.clone(), a.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(), |acc, c| acc.mul(&lin).add(&UniPoly::constant(c.clone())))
    }

    /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a = q b + r.
    pub fn prem(&self, b: &Self) -> Self {
        self.pdivrem(b).1
    }

    /// Pseudo-division with the full power lc(b)^(deg a - deg b + 1).
    pub fn pdivrem(&self, b: &Self) -> (Self, Self) {
        let db = b.degree().expect("pseudo-division by zero polynomial");
        let Some(da) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if da < db {
            return (Self::zero(), self.clone());
        }
        let lb = b.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let lead = r[k + db].clone();
            for c in q.iter_mut() {
                *c *= &lb;
            }
            q[k] += &lead;
            for c in r.iter_mut().take(k + db + 1) {
                *c *= &lb;
            }
            if !lead.is_zero() {
                for (j, bc) in b.coeffs.iter().enumerate() {
                    r[k + j] -= &lead * bc;
                }
            }
            r.truncate(k + db);
        }
        (Self::new(q), Self::new(r))
    }

    /// Exact quotient over Z, or None when b does not divide self.
    pub fn div_exact(&self, b: &Self) -> Option<Self> {
        let db = b.degree()?;
        let Some(da) = self.degree() else {
            return Some(Self::zero());
        };
        if da < db {
            return None;
        }
        let lb = b.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let (qk, rem) = r[k + db].div_rem(&lb);
            if !rem.is_zero() {
                return None;
            }
            if !qk.is_zero() {
                for (j, bc) in b.coeffs.iter().enumerate() {
                    r[k + j] -= &qk * bc;
                }
            }
            q[k] = qk;
        }
        r.iter().all(|c| c.is_zero()).then(|| Self::new(q))
    }

    pub fn div_scalar_exact(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c / k).collect())
    }

    pub fn reduce_mod(&self, p: u64) -> Vec<u64> {
        modp::poly::reduce(&self.coeffs, p)
    }

    pub fn fmt_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{}^{}", var, i),
            };
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{}*{}", a, mono));
            }
        }
        s
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_in("t"))
    }
}

impl ExactRing for UniPoly {
    fn ring_zero() -> Self {
        UniPoly::zero()
    }
    fn ring_one() -> Self {
        UniPoly::one()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn ring_neg(&self) -> Self {
        self.neg()
    }
    fn div_exact(&self, other: &Self) -> Self {
        UniPoly::div_exact(self, other).expect("inexact polynomial division in elimination")
    }
}

/// A large prime not dividing any of the given integers.
fn good_prime(avoid: &[&BigInt], skip: usize) -> u64 {
    LargePrimes::new()
        .filter(|&p| {
            let pb = BigInt::from(p);
            avoid.iter().all(|a| !a.is_multiple_of(&pb))
        })
        .nth(skip)
        .expect("prime supply exhausted")
}

/// Greatest common divisor, primitive with positive leading coefficient
/// (times the gcd of the contents).
pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
    if a.is_zero() {
        return b.primitive().scale(&b.content());
    }
    if b.is_zero() {
        return a.primitive().scale(&a.content());
    }
    let cont = a.content().gcd(&b.content());
    let (mut x, mut y) = if a.deg() >= b.deg() {
        (a.primitive(), b.primitive())
    } else {
        (b.primitive(), a.primitive())
    };
    if y.deg() == 0 {
        return UniPoly::constant(cont);
    }
    // one modular image with trivial gcd certifies coprimality
    let p = good_prime(&[&x.lc(), &y.lc()], 0);
    let gp = modp::poly::gcd(&x.reduce_mod(p), &y.reduce_mod(p), p);
    if modp::poly::degree(&gp) == Some(0) {
        return UniPoly::constant(cont);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = x.deg() - y.deg();
        let r = x.prem(&y);
        if r.is_zero() {
            break;
        }
        if r.deg() == 0 {
            return UniPoly::constant(cont);
        }
        let div = &g * num_traits::pow(h.clone(), delta);
        x = y;
        y = r.div_scalar_exact(&div);
        g = x.lc();
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1)
        };
    }
    y.primitive().scale(&cont)
}

pub fn is_squarefree(f: &UniPoly) -> bool {
    f.deg() == 0 || gcd(f, &f.derivative()).deg() == 0
}

/// f / gcd(f, f'), primitive with positive leading coefficient.
pub fn squarefree_part(f: &UniPoly) -> Result<UniPoly> {
    if f.is_zero() {
        return Err(Error::Invalid("square-free part of the zero polynomial".into()));
    }
    let f = f.primitive();
    if f.deg() == 0 {
        return Ok(UniPoly::one());
    }
    let g = gcd(&f, &f.derivative());
    if g.deg() == 0 {
        return Ok(f);
    }
    let q = f
        .div_exact(&g.primitive())
        .ok_or_else(|| Error::invariant("gcd does not divide its argument"))?;
    Ok(q.primitive())
}

/// The (2D-1)×(2D-1) matrix whose first D-1 rows carry f and last D rows carry f',
/// coefficients in ascending order.
pub fn discriminant_matrix(f: &UniPoly) -> Result<IntMatrix> {
    let d = f.degree().filter(|&d| d >= 1).ok_or_else(|| {
        Error::Invalid("discriminant needs degree at least 1".into())
    })?;
    let n = 2 * d - 1;
    let fp = f.derivative();
    let mut m = IntMatrix::zeros(n, n);
    for r in 0..d - 1 {
        for (j, c) in f.coeffs().iter().enumerate() {
            m.set(r, r + j, c.clone());
        }
    }
    for r in 0..d {
        for (j, c) in fp.coeffs().iter().enumerate() {
            m.set(d - 1 + r, r + j, c.clone());
        }
    }
    Ok(m)
}

fn disc_sign(d: usize) -> bool {
    (d * (d - 1) / 2) % 2 == 1
}

/// Discriminant via Bareiss elimination on the displayed matrix.
pub fn discriminant_by_matrix(f: &UniPoly) -> Result<BigInt> {
    let m = discriminant_matrix(f)?;
    let det = crate::linalg::det_exact(&m)?;
    let d = f.deg();
    let (q, r) = det.div_rem(&f.lc());
    if !r.is_zero() {
        return Err(Error::invariant("leading coefficient does not divide the determinant"));
    }
    Ok(if disc_sign(d) { -q } else { q })
}

/// Discriminant through resultants modulo word-size primes and CRT.
pub fn discriminant_modular(f: &UniPoly) -> Result<BigInt> {
    let d = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::Invalid("discriminant needs degree at least 1".into()))?;
    if d == 1 {
        return Ok(BigInt::one());
    }
    let fp = f.derivative();
    // Hadamard bound on the matrix determinant bounds |Δ| as well
    let bits = (d - 1) as f64 * f.log2_norm() + d as f64 * fp.log2_norm() + 2.0;
    let lc = f.lc();
    let dlc = &lc * BigInt::from(d);
    let mut crt = CrtVec::new(1);
    let mut primes = LargePrimes::new();
    while (crt.bits() as f64) < bits + 1.0 {
        let p = primes.next().expect("prime supply exhausted");
        if dlc.is_multiple_of(&BigInt::from(p)) {
            continue;
        }
        let res = modp::poly::resultant(&f.reduce_mod(p), &fp.reduce_mod(p), p);
        let lcp = lc.mod_floor(&BigInt::from(p)).to_u64().unwrap();
        let mut v = modp::mul_mod(res, modp::inv_mod(lcp, p), p);
        if disc_sign(d) {
            v = (p - v) % p;
        }
        crt.add(&[v], p);
    }
    Ok(crt.symmetric().remove(0))
}

pub fn discriminant(f: &UniPoly) -> Result<BigInt> {
    if f.deg() <= 24 {
        discriminant_by_matrix(f)
    } else {
        discriminant_modular(f)
    }
}

/// Resultant via the Sylvester matrix (rows of a first, ascending columns).
pub fn resultant(a: &UniPoly, b: &UniPoly) -> BigInt {
    let (m, n) = (a.deg(), b.deg());
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    if m + n == 0 {
        return BigInt::one();
    }
    let k = m + n;
    let mut mat = vec![BigInt::zero(); k * k];
    for r in 0..n {
        for (j, c) in a.coeffs().iter().enumerate() {
            mat[r * k + r + j] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in b.coeffs().iter().enumerate() {
            mat[(n + r) * k + r + j] = c.clone();
        }
    }
    // ascending columns reverse the usual layout; undo the sign of that reversal
    let det: BigInt = det_bareiss(k, mat);
    let flips = (n * (n.saturating_sub(1)) / 2 + m * (m.saturating_sub(1)) / 2 + k * (k - 1) / 2) % 2;
    if flips == 1 {
        -det
    } else {
        det
    }
}

/// Rows of the (d1+d2-2)×(d1+d2-1) first-subresultant matrix: d1-1 rows of g's
/// coefficients followed by d2-1 rows of f's, each shifted one column to the right.
pub fn first_subresultant_rows<T: Clone>(f: &[T], g: &[T], zero: T) -> Vec<Vec<T>> {
    let d1 = f.len() - 1;
    let d2 = g.len() - 1;
    let cols = d1 + d2 - 1;
    let mut rows = Vec::with_capacity(d1 + d2 - 2);
    for r in 0..d1 - 1 {
        let mut row = vec![zero.clone(); cols];
        for (j, c) in g.iter().enumerate() {
            row[r + j] = c.clone();
        }
        rows.push(row);
    }
    for r in 0..d2 - 1 {
        let mut row = vec![zero.clone(); cols];
        for (j, c) in f.iter().enumerate() {
            row[r + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinants with the given column removed.
pub fn minor_without_column<T: ExactRing>(rows: &[Vec<T>], col: usize) -> T {
    let n = rows.len();
    let mut data = Vec::with_capacity(n * n);
    for row in rows {
        for (j, v) in row.iter().enumerate() {
            if j != col {
                data.push(v.clone());
            }
        }
    }
    det_bareiss(n, data)
}

/// R_0 (second-to-last column deleted) and R_1 (last column deleted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubresultantPair {
    pub r0: BigInt,
    pub r1: BigInt,
}

impl SubresultantPair {
    /// The common root -R_1/R_0 when the pair determines one.
    pub fn common_root(&self) -> Option<BigRational> {
        (!self.r0.is_zero()).then(|| BigRational::new(-self.r1.clone(), self.r0.clone()))
    }
}

pub fn first_subresultant(f: &UniPoly, g: &UniPoly) -> Result<SubresultantPair> {
    let (d1, d2) = (f.deg(), g.deg());
    if d1 < 2 || d2 < 2 {
        return Err(Error::Invalid(format!(
            "first subresultant needs degrees at least 2, got {} and {}",
            d1, d2
        )));
    }
    let rows = first_subresultant_rows(f.coeffs(), g.coeffs(), BigInt::zero());
    let cols = d1 + d2 - 1;
    Ok(SubresultantPair {
        r0: minor_without_column(&rows, cols - 2),
        r1: minor_without_column(&rows, cols - 1),
    })
}

/// Sturm chain f, f', -rem, ... with contents removed (signs preserved).
pub fn sturm_sequence(f: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![f.clone()];
    if f.deg() == 0 {
        return seq;
    }
    let d = f.derivative();
    let c = d.content();
    seq.push(d.div_scalar_exact(&c));
    loop {
        let n = seq.len();
        let (a, b) = (&seq[n - 2], &seq[n - 1]);
        if b.deg() == 0 {
            break;
        }
        let delta = a.deg() - b.deg();
        let r = a.prem(b);
        if r.is_zero() {
            break;
        }
        // prem carries lc(b)^(delta+1); keep the sign of the true remainder, negated
        let flip = b.lc().is_negative() && delta % 2 == 0;
        let c = r.content();
        let mut next = r.div_scalar_exact(&c);
        if !flip {
            next = next.neg();
        }
        seq.push(next);
    }
    seq
}

fn sign_changes<I: Iterator<Item = i8>>(signs: I) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

fn sgn(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Distinct real roots by Sturm's theorem on (-inf, +inf).
pub fn sturm_real_root_count(f: &UniPoly) -> usize {
    if f.deg() == 0 {
        return 0;
    }
    let seq = sturm_sequence(f);
    let at_pos = sign_changes(seq.iter().map(|p| sgn(&p.lc())));
    let at_neg = sign_changes(seq.iter().map(|p| {
        let s = sgn(&p.lc());
        if p.deg() % 2 == 1 {
            -s
        } else {
            s
        }
    }));
    at_neg - at_pos
}

/// Divide out every factor t.
fn strip_zero_roots(f: &UniPoly) -> (UniPoly, usize) {
    let k = f.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
    (UniPoly::new(f.coeffs()[k..].to_vec()), k)
}

/// Roots of a square-free g in the open interval (0, 1) by Descartes bisection.
fn roots_in_unit_interval(g: UniPoly) -> usize {
    let one = BigInt::one();
    let mut count = 0;
    let mut stack = vec![g];
    while let Some(q) = stack.pop() {
        if q.deg() == 0 {
            continue;
        }
        let t = q.reverse().taylor_shift(&one);
        let v = sign_changes(t.coeffs().iter().map(sgn));
        if v == 0 {
            continue;
        }
        if v == 1 {
            count += 1;
            continue;
        }
        let d = q.deg();
        // left half: 2^d q(t/2), right half: that shifted by one
        let mut left = UniPoly::new(
            q.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| c << (d - i))
                .collect(),
        );
        let mut right = left.taylor_shift(&one);
        if right.tc().is_zero() {
            count += 1;
            right = strip_zero_roots(&right).0;
            left = left
                .div_exact(&UniPoly::linear_root(1))
                .expect("midpoint root divides");
        }
        stack.push(left.primitive());
        stack.push(right.primitive());
    }
    count
}

fn positive_root_count(f: &UniPoly) -> usize {
    if f.deg() == 0 {
        return 0;
    }
    // |z| <= 2 max_i |a_{d-i}/a_d|^{1/i} < 2^b
    let d = f.deg();
    let lcb = f.lc().bits() as i64 - 1;
    let mut e = 0i64;
    for i in 1..=d {
        let a = &f.coeffs()[d - i];
        if a.is_zero() {
            continue;
        }
        let num = a.bits() as i64 - lcb;
        e = e.max((num + i as i64 - 1).div_euclid(i as i64));
    }
    let b = (e + 1).max(1) as usize;
    let scaled = UniPoly::new(
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c << (b * i))
            .collect(),
    );
    roots_in_unit_interval(scaled.primitive())
}

/// Distinct real roots by Descartes' rule with bisection.
pub fn descartes_real_root_count(f: &UniPoly) -> usize {
    if f.deg() == 0 {
        return 0;
    }
    let g = squarefree_part(f).expect("nonzero");
    let (g, k) = strip_zero_roots(&g);
    let neg = UniPoly::new(
        g.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect(),
    );
    usize::from(k > 0) + positive_root_count(&g) + positive_root_count(&neg)
}

/// Number of distinct real roots. Sturm chains for moderate degree, Descartes
/// bisection when coefficient growth in the chain would dominate.
pub fn real_root_count(f: &UniPoly) -> usize {
    if f.deg() <= 40 {
        sturm_real_root_count(f)
    } else {
        descartes_real_root_count(f)
    }
}

fn small_prime_factors(n: &BigInt) -> Option<Vec<(BigInt, u32)>> {
    let mut n = n.abs().to_u64()?;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((BigInt::from(p), e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((BigInt::from(n), 1));
    }
    Some(out)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let fac = small_prime_factors(n)?;
    let mut ds = vec![BigInt::one()];
    for (p, e) in fac {
        let mut next = Vec::new();
        for d in &ds {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pw);
                pw *= &p;
            }
        }
        ds = next;
    }
    Some(ds)
}

const DIVISOR_TEST_LIMIT: u64 = 1 << 40;

/// Rational roots by the divisor test on trailing and leading coefficients.
pub fn rational_roots_by_divisors(f: &UniPoly) -> Option<Vec<BigRational>> {
    let g = squarefree_part(f).ok()?;
    let (g, k) = strip_zero_roots(&g);
    let mut out = Vec::new();
    if k > 0 {
        out.push(BigRational::zero());
    }
    if g.deg() > 0 {
        let limit = BigInt::from(DIVISOR_TEST_LIMIT);
        if g.tc().abs() > limit || g.lc().abs() > limit {
            return None;
        }
        let nums = divisors(&g.tc())?;
        let dens = divisors(&g.lc())?;
        for a in &nums {
            for b in &dens {
                for s in [a.clone(), -a.clone()] {
                    if !s.gcd(b).is_one() {
                        continue;
                    }
                    let x = BigRational::new(s, b.clone());
                    if g.vanishes_at(&x) {
                        out.push(x);
                    }
                }
            }
        }
    }
    out.sort();
    Some(out)
}

/// Rational roots by p-adic lifting of the roots modulo a good prime.
pub fn rational_roots_by_lifting(f: &UniPoly) -> Vec<BigRational> {
    let g = squarefree_part(f).expect("nonzero polynomial");
    let (g, k) = strip_zero_roots(&g);
    let mut out = Vec::new();
    if k > 0 {
        out.push(BigRational::zero());
    }
    if g.deg() == 0 {
        return out;
    }
    let gp = g.derivative();
    let num_bound = g.tc().abs();
    let den_bound = g.lc().abs();
    let target: BigInt = BigInt::from(2) * &num_bound * &den_bound;
    let mut ell = 1_000_003u64;
    let ell = loop {
        if is_prime(ell) {
            let r = g.reduce_mod(ell);
            if modp::poly::degree(&r) == Some(g.deg()) && modp::poly::is_squarefree(&r, ell) {
                break ell;
            }
        }
        ell += 2;
    };
    for r in modp::poly::roots(&g.reduce_mod(ell), ell) {
        let mut m = BigInt::from(ell);
        let mut x = BigInt::from(r);
        while m <= target {
            m = &m * &m;
            let fx = g.eval(&x).mod_floor(&m);
            let dx = gp.eval(&x).mod_floor(&m);
            let inv = mod_inverse(&dx, &m).expect("simple root has invertible derivative");
            x = (&x - fx * inv).mod_floor(&m);
        }
        if let Some(q) = rational_reconstruct_bounded(&x, &m, &num_bound, &den_bound) {
            if g.vanishes_at(&q) {
                out.push(q);
            }
        }
    }
    out.sort();
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// All rational roots, sorted.
pub fn rational_roots(f: &UniPoly) -> Vec<BigRational> {
    if f.deg() == 0 {
        return Vec::new();
    }
    rational_roots_by_divisors(f).unwrap_or_else(|| rational_roots_by_lifting(f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModpRoots {
    Count(usize),
    /// f vanishes identically modulo p.
    Degenerate,
}

pub fn modp_distinct_roots(f: &UniPoly, p: u64) -> Result<ModpRoots> {
    if !is_prime(p) {
        return Err(Error::Invalid(format!("{} is not prime", p)));
    }
    let r = f.reduce_mod(p);
    if r.is_empty() {
        return Ok(ModpRoots::Degenerate);
    }
    Ok(ModpRoots::Count(modp::poly::distinct_root_count(&r, p)))
}

/// sqrt(D+1) 2^D c: bound on the coefficients of any divisor.
pub fn mignotte_bound(d: u32, c: f64) -> f64 {
    ((d + 1) as f64).sqrt() * 2f64.powi(d as i32) * c
}

/// Natural log of the Mignotte bound for large degrees.
pub fn ln_mignotte_bound(d: u64, ln_c: f64) -> f64 {
    0.5 * ((d + 1) as f64).ln() + d as f64 * std::f64::consts::LN_2 + ln_c
}

/// 1 + max|a_i| / |a_D| over i < D.
pub fn cauchy_root_bound(f: &UniPoly) -> Result<f64> {
    let d = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::Invalid("root bound needs degree at least 1".into()))?;
    let m = f.coeffs()[..d].iter().map(|c| c.abs()).max().unwrap_or_default();
    let ratio = BigRational::new(m, f.lc().abs());
    Ok(1.0 + ratio.to_f64().unwrap_or(f64::INFINITY))
}

/// D' (D log 2 + log(D'+1) + log c): bound on log|Δ_g| for the square-free part g.
pub fn disc_of_squarefree_bound(d: u64, d_sqfree: u64, c: f64) -> f64 {
    d_sqfree as f64
        * (d as f64 * std::f64::consts::LN_2 + ((d_sqfree + 1) as f64).ln() + c.ln())
}
