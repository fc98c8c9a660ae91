//! Support tuples and the segment condition.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poly::PolySystem;
use crate::polytope::{rank_i64, Point};

/// How the supports of the system polynomials are chosen for the resultant matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SupportPolicy {
    /// Each polynomial keeps its own support; only roots in the torus are seen.
    Toric,
    /// Every polynomial gets {O, e_i} together with the union of all supports,
    /// which makes roots with vanishing coordinates visible.
    Fill,
}

impl SupportPolicy {
    pub fn name(&self) -> &'static str {
        match self {
            SupportPolicy::Toric => "toric",
            SupportPolicy::Fill => "fill",
        }
    }
}

impl std::str::FromStr for SupportPolicy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "toric" => Ok(SupportPolicy::Toric),
            "fill" => Ok(SupportPolicy::Fill),
            other => Err(Error::Invalid(format!("unknown support policy `{other}`"))),
        }
    }
}

/// An ordered tuple of m+1 finite supports in Z^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportTuple {
    n: usize,
    supports: Vec<Vec<Point>>,
}

impl SupportTuple {
    pub fn new(n: usize, supports: Vec<Vec<Point>>) -> Result<Self> {
        if supports.len() < 2 {
            return Err(Error::Invalid("a support tuple needs at least two supports".into()));
        }
        let mut clean = Vec::with_capacity(supports.len());
        for s in supports {
            if s.is_empty() {
                return Err(Error::Invalid("empty support".into()));
            }
            if s.iter().any(|p| p.len() != n) {
                return Err(Error::Dimension(format!("support point outside Z^{n}")));
            }
            let set: BTreeSet<Point> = s.into_iter().collect();
            clean.push(set.into_iter().collect::<Vec<_>>());
        }
        if !segment_condition(n, &clean) {
            return Err(Error::Degenerate(
                "supports admit no segments spanning a full-dimensional simplex".into(),
            ));
        }
        Ok(SupportTuple {
            n,
            supports: clean,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.supports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.supports.is_empty()
    }

    pub fn supports(&self) -> &[Vec<Point>] {
        &self.supports
    }

    pub fn support(&self, i: usize) -> &[Point] {
        &self.supports[i]
    }

    pub fn index_of(&self, i: usize, p: &[i64]) -> Option<usize> {
        self.supports[i].binary_search_by(|q| q.as_slice().cmp(p)).ok()
    }
}

/// True when one segment [v_i, w_i] can be picked in each support so that the
/// differences w_i - v_i have rank m (m+1 = number of supports).
///
/// By Rado's theorem on independent transversals this holds iff every subfamily J
/// satisfies rank(union of the difference sets over J) >= |J| - 1.
pub fn segment_condition(n: usize, supports: &[Vec<Point>]) -> bool {
    let k = supports.len();
    let m = k - 1;
    if m > n {
        return false;
    }
    let diffs: Vec<Vec<Vec<i64>>> = supports
        .iter()
        .map(|s| {
            s.iter()
                .skip(1)
                .map(|p| p.iter().zip(&s[0]).map(|(a, b)| a - b).collect())
                .collect()
        })
        .collect();
    for mask in 1u64..(1u64 << k) {
        let size = mask.count_ones() as usize;
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for (j, d) in diffs.iter().enumerate() {
            if mask >> j & 1 == 1 {
                rows.extend(d.iter().cloned());
            }
        }
        let r = if rows.is_empty() { 0 } else { rank_i64(&rows) };
        if r + 1 < size {
            return false;
        }
    }
    true
}

/// Supports of the system polynomials under a policy.
pub fn system_supports(f: &PolySystem, policy: SupportPolicy) -> Vec<Vec<Point>> {
    let n = f.nvars();
    match policy {
        SupportPolicy::Toric => f
            .polys()
            .iter()
            .map(|p| p.support().iter().map(|e| e.to_i64()).collect())
            .collect(),
        SupportPolicy::Fill => {
            let mut union: BTreeSet<Point> = BTreeSet::new();
            for p in f.polys() {
                union.extend(p.support().iter().map(|e| e.to_i64()));
            }
            union.insert(vec![0; n]);
            (0..f.len())
                .map(|i| {
                    let mut s = union.clone();
                    let mut e = vec![0; n];
                    e[i % n] = 1;
                    s.insert(e);
                    s.into_iter().collect()
                })
                .collect()
        }
    }
}

/// {O, e_1, ..., e_n}.
pub fn simplex_support(n: usize) -> Vec<Point> {
    let mut out = vec![vec![0; n]];
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        out.push(e);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_condition_examples() {
        let lin = vec![vec![0], vec![1]];
        assert!(segment_condition(1, &[lin.clone(), lin.clone()]));
        // two polynomials in x1 only, inside Z^2, plus a linear form
        let x1 = vec![vec![0, 0], vec![1, 0]];
        assert!(!segment_condition(2, &[x1.clone(), x1.clone(), x1.clone()]));
        assert!(segment_condition(2, &[x1.clone(), x1.clone(), simplex_support(2)]));
        // a point support can never contribute a segment
        let pt = vec![vec![3, 4]];
        assert!(!segment_condition(2, &[pt.clone(), pt, simplex_support(2)]));
        assert!(SupportTuple::new(2, vec![x1.clone(), x1, vec![vec![0, 0], vec![0, 1]]]).is_ok());
    }
}
