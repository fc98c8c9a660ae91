//! Dense matrices over a word-size prime field, entries kept in Montgomery form.

use super::field::Mont;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatP {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<u64>,
}

impl MatP {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatP {
            rows,
            cols,
            a: vec![0; rows * cols],
        }
    }

    pub fn identity(m: &Mont, n: usize) -> Self {
        let mut out = Self::zeros(n, n);
        let one = m.one();
        for i in 0..n {
            out.a[i * n + i] = one;
        }
        out
    }

    /// Builds from plain residues, converting to Montgomery form.
    pub fn from_residues(m: &Mont, rows: usize, cols: usize, plain: &[u64]) -> Self {
        assert_eq!(plain.len(), rows * cols);
        MatP {
            rows,
            cols,
            a: plain.iter().map(|&x| m.to_mont(x)).collect(),
        }
    }

    pub fn to_residues(&self, m: &Mont) -> Vec<u64> {
        self.a.iter().map(|&x| m.from_mont(x)).collect()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.a[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.a[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.a.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn mul(&self, m: &Mont, other: &MatP) -> MatP {
        assert_eq!(self.cols, other.rows);
        let mut out = MatP::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let orow = &mut out.a[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let x = self.a[i * self.cols + k];
                if x == 0 {
                    continue;
                }
                let brow = &other.a[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    *o = m.add(*o, m.mul(x, b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, m: &Mont, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| m.add(acc, m.mul(a, b)))
            })
            .collect()
    }

    pub fn add_scaled(&mut self, m: &Mont, other: &MatP, k: u64) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (x, &y) in self.a.iter_mut().zip(&other.a) {
            *x = m.add(*x, m.mul(k, y));
        }
    }

    pub fn scaled(&self, m: &Mont, k: u64) -> MatP {
        MatP {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().map(|&x| m.mul(x, k)).collect(),
        }
    }

    pub fn sub_block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> MatP {
        let mut out = MatP::zeros(r1 - r0, c1 - c0);
        for i in r0..r1 {
            out.a[(i - r0) * (c1 - c0)..(i - r0 + 1) * (c1 - c0)]
                .copy_from_slice(&self.a[i * self.cols + c0..i * self.cols + c1]);
        }
        out
    }
}

/// Row-pivoted LU factorization of a nonsingular square matrix.
pub struct Lu {
    n: usize,
    lu: Vec<u64>,
    perm: Vec<usize>,
    odd: bool,
}

pub fn lu(m: &Mont, a: &MatP) -> Option<Lu> {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    let mut w = a.a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut odd = false;
    for k in 0..n {
        let piv = (k..n).find(|&i| w[i * n + k] != 0)?;
        if piv != k {
            for c in 0..n {
                w.swap(piv * n + c, k * n + c);
            }
            perm.swap(piv, k);
            odd = !odd;
        }
        let inv = m.inv(w[k * n + k]);
        for i in k + 1..n {
            let f = w[i * n + k];
            if f == 0 {
                continue;
            }
            let f = m.mul(f, inv);
            w[i * n + k] = f;
            let (top, bottom) = w.split_at_mut(i * n);
            let krow = &top[k * n + k + 1..k * n + n];
            let irow = &mut bottom[k + 1..n];
            for (x, &y) in irow.iter_mut().zip(krow) {
                *x = m.sub(*x, m.mul(f, y));
            }
        }
    }
    Some(Lu { n, lu: w, perm, odd })
}

impl Lu {
    pub fn det(&self, m: &Mont) -> u64 {
        let mut d = m.one();
        for i in 0..self.n {
            d = m.mul(d, self.lu[i * self.n + i]);
        }
        if self.odd {
            m.neg(d)
        } else {
            d
        }
    }

    /// Solves A X = B.
    pub fn solve(&self, m: &Mont, b: &MatP) -> MatP {
        let n = self.n;
        assert_eq!(b.rows, n);
        let k = b.cols;
        let mut x = MatP::zeros(n, k);
        for i in 0..n {
            x.a[i * k..(i + 1) * k].copy_from_slice(b.row(self.perm[i]));
        }
        for i in 0..n {
            for j in 0..i {
                let f = self.lu[i * n + j];
                if f == 0 {
                    continue;
                }
                let (top, bottom) = x.a.split_at_mut(i * k);
                let src = &top[j * k..(j + 1) * k];
                for (d, &s) in bottom[..k].iter_mut().zip(src) {
                    *d = m.sub(*d, m.mul(f, s));
                }
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let f = self.lu[i * n + j];
                if f == 0 {
                    continue;
                }
                let (top, bottom) = x.a.split_at_mut(j * k);
                let dst = &mut top[i * k..(i + 1) * k];
                for (d, &s) in dst.iter_mut().zip(&bottom[..k]) {
                    *d = m.sub(*d, m.mul(f, s));
                }
            }
            let inv = m.inv(self.lu[i * n + i]);
            for d in &mut x.a[i * k..(i + 1) * k] {
                *d = m.mul(*d, inv);
            }
        }
        x
    }
}

pub fn det(m: &Mont, a: &MatP) -> u64 {
    match lu(m, a) {
        Some(f) => f.det(m),
        None => 0,
    }
}

pub fn rank(m: &Mont, a: &MatP) -> usize {
    let (rows, cols) = (a.rows, a.cols);
    let mut w = a.a.clone();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| w[i * cols + c] != 0) else {
            continue;
        };
        for cc in 0..cols {
            w.swap(piv * cols + cc, r * cols + cc);
        }
        let inv = m.inv(w[r * cols + c]);
        for i in r + 1..rows {
            let f = w[i * cols + c];
            if f == 0 {
                continue;
            }
            let f = m.mul(f, inv);
            for cc in c..cols {
                let v = m.mul(f, w[r * cols + cc]);
                w[i * cols + cc] = m.sub(w[i * cols + cc], v);
            }
        }
        r += 1;
    }
    r
}

/// Characteristic polynomial det(xI - A), ascending coefficients in Montgomery form.
pub fn charpoly(m: &Mont, a: &MatP) -> Vec<u64> {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    let mut h = a.a.clone();
    // similarity reduction to upper Hessenberg form
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[i * n + j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            for c in 0..n {
                h.swap(piv * n + c, (j + 1) * n + c);
            }
            for r in 0..n {
                h.swap(r * n + piv, r * n + j + 1);
            }
        }
        let inv = m.inv(h[(j + 1) * n + j]);
        for i in j + 2..n {
            let u = h[i * n + j];
            if u == 0 {
                continue;
            }
            let u = m.mul(u, inv);
            for c in 0..n {
                let v = m.mul(u, h[(j + 1) * n + c]);
                h[i * n + c] = m.sub(h[i * n + c], v);
            }
            for r in 0..n {
                let v = m.mul(u, h[r * n + i]);
                h[r * n + j + 1] = m.add(h[r * n + j + 1], v);
            }
        }
    }
    // p_k(x) = (x - h_kk) p_{k-1} - sum_{i<k} h_{ik} (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
    let one = m.one();
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![one]);
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = m.add(next[d + 1], c);
            next[d] = m.sub(next[d], m.mul(h[k * n + k], c));
        }
        let mut prod = one;
        for i in (0..k).rev() {
            prod = m.mul(prod, h[(i + 1) * n + i]);
            if prod == 0 {
                break;
            }
            let coef = m.mul(h[i * n + k], prod);
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = m.sub(next[d], m.mul(coef, c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}
