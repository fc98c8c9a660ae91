//! Exact determinants of integer and parametric matrices.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::modp::{is_prime, MatP, Mont};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        assert_eq!(data.len(), rows * cols);
        IntMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.iter().flat_map(|row| row.iter().cloned().map(Into::into)).collect();
        Self::new(r, c, data)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Copy without the listed column.
    pub fn without_column(&self, col: usize) -> IntMatrix {
        let mut data = Vec::with_capacity(self.rows * (self.cols - 1));
        for i in 0..self.rows {
            for (j, v) in self.row(i).iter().enumerate() {
                if j != col {
                    data.push(v.clone());
                }
            }
        }
        IntMatrix::new(self.rows, self.cols - 1, data)
    }

    pub fn reduce_mod(&self, m: &Mont) -> MatP {
        let pb = BigInt::from(m.p);
        let plain: Vec<u64> = self
            .data
            .iter()
            .map(|x| x.mod_floor(&pb).to_u64().unwrap())
            .collect();
        MatP::from_residues(m, self.rows, self.cols, &plain)
    }
}

/// Commutative ring with exact division, enough for fraction-free elimination.
pub trait ExactRing: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// `self / other`, where the division is known to be exact.
    fn div_exact(&self, other: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

/// Bareiss elimination on a row-major n×n array.
pub fn det_bareiss<T: ExactRing>(n: usize, mut a: Vec<T>) -> T {
    assert_eq!(a.len(), n * n);
    if n == 0 {
        return T::ring_one();
    }
    let mut sign = false;
    let mut prev = T::ring_one();
    for k in 0..n {
        if a[k * n + k].ring_is_zero() {
            let Some(piv) = (k + 1..n).find(|&i| !a[i * n + k].ring_is_zero()) else {
                return T::ring_zero();
            };
            for c in 0..n {
                a.swap(k * n + c, piv * n + c);
            }
            sign = !sign;
        }
        let akk = a[k * n + k].clone();
        for i in k + 1..n {
            let aik = a[i * n + k].clone();
            for j in k + 1..n {
                let v = akk
                    .ring_mul(&a[i * n + j])
                    .ring_sub(&aik.ring_mul(&a[k * n + j]))
                    .div_exact(&prev);
                a[i * n + j] = v;
            }
            a[i * n + k] = T::ring_zero();
        }
        prev = akk;
    }
    let d = a[n * n - 1].clone();
    if sign {
        d.ring_neg()
    } else {
        d
    }
}

/// Fraction-free (Bareiss) determinant.
pub fn det_exact(m: &IntMatrix) -> Result<BigInt> {
    if m.rows != m.cols {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    Ok(det_bareiss(m.rows, m.data.clone()))
}

/// Determinant reduced modulo a prime, in [0, p).
pub fn det_mod_p(m: &IntMatrix, p: u64) -> Result<u64> {
    if m.rows != m.cols {
        return Err(Error::Dimension("determinant of a non-square matrix".into()));
    }
    if !is_prime(p) {
        return Err(Error::Invalid(format!("{} is not prime", p)));
    }
    if p == 2 {
        let mut bits: Vec<Vec<bool>> = (0..m.rows)
            .map(|i| m.row(i).iter().map(|x| x.is_odd()).collect())
            .collect();
        let n = m.rows;
        for k in 0..n {
            let Some(piv) = (k..n).find(|&i| bits[i][k]) else {
                return Ok(0);
            };
            bits.swap(k, piv);
            for i in k + 1..n {
                if bits[i][k] {
                    for j in k..n {
                        bits[i][j] ^= bits[k][j];
                    }
                }
            }
        }
        return Ok(1);
    }
    let mont = Mont::new(p);
    let a = m.reduce_mod(&mont);
    Ok(mont.from_mont(crate::modp::matrix::det(&mont, &a)))
}

/// Product of Euclidean row norms.
pub fn hadamard_bound(m: &IntMatrix) -> f64 {
    hadamard_log2(m).exp2()
}

/// log2 of the Hadamard bound, usable when the bound itself overflows a double.
pub fn hadamard_log2(m: &IntMatrix) -> f64 {
    (0..m.rows)
        .map(|i| {
            let s: BigInt = m.row(i).iter().map(|x| x * x).sum();
            if s.is_zero() {
                f64::NEG_INFINITY
            } else {
                crate::util::log_abs(&s) / std::f64::consts::LN_2 / 2.0
            }
        })
        .sum()
}

/// Integer polynomial in two parameters (s, u0): map (deg_s, deg_u) -> coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiPoly {
    pub coeffs: BTreeMap<(usize, usize), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(0, 0, c)
    }

    pub fn term(ds: usize, du: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert((ds, du), c);
        }
        BiPoly { coeffs }
    }

    pub fn add_term(&mut self, ds: usize, du: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry((ds, du)).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&(ds, du));
        }
    }

    pub fn eval(&self, s: &BigInt, u: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .map(|(&(i, j), c)| c * num_traits::pow(s.clone(), i) * num_traits::pow(u.clone(), j))
            .sum()
    }

    pub fn degree_s(&self) -> Option<usize> {
        self.coeffs.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_u(&self) -> Option<usize> {
        self.coeffs.keys().map(|&(_, j)| j).max()
    }

    /// The coefficient polynomial in u0 of s^k, ascending.
    pub fn s_coefficient(&self, k: usize) -> Vec<BigInt> {
        let du = self.degree_u().unwrap_or(0);
        let mut out = vec![BigInt::zero(); du + 1];
        for (&(i, j), c) in &self.coeffs {
            if i == k {
                out[j] = c.clone();
            }
        }
        while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
            out.pop();
        }
        out
    }

    /// Smallest power of s with a nonzero coefficient.
    pub fn lowest_s_degree(&self) -> Option<usize> {
        self.coeffs.keys().map(|&(i, _)| i).min()
    }
}

/// Square matrix whose entries are polynomials in (s, u0).
#[derive(Clone, Debug)]
pub struct ParamMatrix {
    n: usize,
    entries: Vec<BiPoly>,
}

impl ParamMatrix {
    pub fn new(n: usize, entries: Vec<BiPoly>) -> Self {
        assert_eq!(entries.len(), n * n);
        ParamMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BiPoly {
        &self.entries[i * self.n + j]
    }

    pub fn instantiate(&self, s: &BigInt, u: &BigInt) -> IntMatrix {
        IntMatrix::new(
            self.n,
            self.n,
            self.entries.iter().map(|e| e.eval(s, u)).collect(),
        )
    }
}

/// Coefficients (ascending) of the polynomial of degree ≤ values.len()-1 through (k, values[k]).
pub fn interpolate_at_naturals(values: &[BigRational]) -> Vec<BigRational> {
    let n = values.len();
    let mut dd = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(BigInt::from(j));
        }
    }
    let mut out = vec![BigRational::zero()];
    for i in (0..n).rev() {
        let mut next = vec![BigRational::zero(); out.len() + 1];
        let shift = BigRational::from_integer(BigInt::from(i));
        for (k, c) in out.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &shift;
        }
        next[0] += &dd[i];
        out = next;
    }
    while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// Exact determinant polynomial by evaluation on the grid {0..cap_s} × {0..cap_u}.
pub fn det_parametric(m: &ParamMatrix, cap_s: usize, cap_u: usize) -> Result<BiPoly> {
    let mut by_s: Vec<Vec<BigRational>> = Vec::with_capacity(cap_s + 1);
    for s in 0..=cap_s {
        let sv = BigInt::from(s);
        let vals: Vec<BigRational> = (0..=cap_u)
            .map(|u| det_exact(&m.instantiate(&sv, &BigInt::from(u))).map(BigRational::from_integer))
            .collect::<Result<_>>()?;
        let mut c = interpolate_at_naturals(&vals);
        c.resize(cap_u + 1, BigRational::zero());
        by_s.push(c);
    }
    let mut out = BiPoly::zero();
    for j in 0..=cap_u {
        let column: Vec<BigRational> = by_s.iter().map(|c| c[j].clone()).collect();
        let cs = interpolate_at_naturals(&column);
        for (i, c) in cs.into_iter().enumerate() {
            if !c.is_integer() {
                return Err(Error::Invalid(
                    "parametric determinant exceeded its degree caps".into(),
                ));
            }
            out.add_term(i, j, c.to_integer());
        }
    }
    let check_s = BigInt::from(cap_s + 1);
    let check_u = BigInt::from(cap_u + 1);
    if det_exact(&m.instantiate(&check_s, &check_u))? != out.eval(&check_s, &check_u) {
        return Err(Error::Invalid(
            "parametric determinant exceeded its degree caps".into(),
        ));
    }
    Ok(out)
}

/// Naive cofactor expansion; exponential, test-sized inputs only.
pub fn det_cofactor(m: &IntMatrix) -> BigInt {
    fn rec(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> BigInt {
        if rows.is_empty() {
            return BigInt::one();
        }
        let r = rows[0];
        let mut acc = BigInt::zero();
        for (k, &c) in cols.iter().enumerate() {
            let v = m.get(r, c);
            if v.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let t = v * rec(m, &rows[1..], &rest);
            if k % 2 == 0 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        acc
    }
    let rows: Vec<usize> = (0..m.rows).collect();
    let cols: Vec<usize> = (0..m.cols).collect();
    rec(m, &rows, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn small_determinants() {
        assert_eq!(det_exact(&IntMatrix::identity(5)).unwrap(), bi(1));
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(det_exact(&m).unwrap(), bi(1));
        assert_eq!(det_mod_p(&m, 2).unwrap(), 1);
        assert_eq!(det_mod_p(&IntMatrix::identity(4), 7).unwrap(), 1);
        let sing = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(det_mod_p(&sing, 13).unwrap(), 0);
        assert!(det_mod_p(&m, 9).is_err());
        assert!(det_exact(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn hadamard_examples() {
        assert!((hadamard_bound(&IntMatrix::identity(7)) - 1.0).abs() < 1e-12);
        let m = IntMatrix::from_rows(&[vec![3, 4], vec![0, 5]]);
        assert!((hadamard_bound(&m) - 25.0).abs() < 1e-9);
        assert_eq!(det_exact(&m).unwrap(), bi(15));
    }

    #[test]
    fn parametric_examples() {
        // diag(s, s)
        let e = vec![BiPoly::term(1, 0, 1), BiPoly::zero(), BiPoly::zero(), BiPoly::term(1, 0, 1)];
        let d = det_parametric(&ParamMatrix::new(2, e), 2, 0).unwrap();
        assert_eq!(d, BiPoly::term(2, 0, 1));
        // [[u, 1], [1, u]]
        let e = vec![BiPoly::term(0, 1, 1), BiPoly::constant(1), BiPoly::constant(1), BiPoly::term(0, 1, 1)];
        let d = det_parametric(&ParamMatrix::new(2, e), 0, 2).unwrap();
        let mut want = BiPoly::term(0, 2, 1);
        want.add_term(0, 0, bi(-1));
        assert_eq!(d, want);
        // cap too small is reported
        let e = vec![BiPoly::term(0, 1, 1), BiPoly::constant(1), BiPoly::constant(1), BiPoly::term(0, 1, 1)];
        assert!(det_parametric(&ParamMatrix::new(2, e), 0, 1).is_err());
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = IntMatrix> {
        proptest::collection::vec(-9i64..=9, n * n)
            .prop_map(move |v| IntMatrix::new(n, n, v.into_iter().map(BigInt::from).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]

        #[test]
        fn bareiss_matches_cofactor(m in (1usize..=6).prop_flat_map(small_matrix)) {
            let d = det_exact(&m).unwrap();
            prop_assert_eq!(&d, &det_cofactor(&m));
            prop_assert!(crate::util::log_abs(&d) <= hadamard_log2(&m) * std::f64::consts::LN_2 + 1e-9 || d.is_zero());
        }

        #[test]
        fn modular_det_agrees(m in (1usize..=6).prop_flat_map(small_matrix), pi in 0usize..6) {
            let p = [2u64, 3, 5, 7, 1_000_003, 4_611_686_018_427_387_847][pi];
            let d = det_exact(&m).unwrap();
            let want = d.mod_floor(&BigInt::from(p)).to_u64().unwrap();
            prop_assert_eq!(det_mod_p(&m, p).unwrap(), want);
        }

        #[test]
        fn parametric_agrees_with_instances(
            a in proptest::collection::vec(-5i64..=5, 9),
            b in proptest::collection::vec(-5i64..=5, 9),
            s in 0i64..6, u in -4i64..5,
        ) {
            // entries a + s*b, with u0 on the diagonal
            let entries: Vec<BiPoly> = (0..9).map(|k| {
                let mut e = BiPoly::constant(a[k]);
                e.add_term(1, 0, BigInt::from(b[k]));
                if k % 4 == 0 { e.add_term(0, 1, BigInt::one()); }
                e
            }).collect();
            let pm = ParamMatrix::new(3, entries);
            let d = det_parametric(&pm, 3, 3).unwrap();
            let inst = pm.instantiate(&BigInt::from(s), &BigInt::from(u));
            prop_assert_eq!(d.eval(&BigInt::from(s), &BigInt::from(u)), det_exact(&inst).unwrap());
        }
    }
}
