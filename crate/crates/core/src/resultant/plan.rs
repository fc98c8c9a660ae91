//! Resultant matrix plans: which multiple of which polynomial fills each row.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lp;
use super::support::SupportTuple;
use crate::error::{Error, Result};
use crate::linalg::{det_exact, IntMatrix};
use crate::polytope::{convex_hull, minkowski_sum_all, LatticePolytope, Point};

/// Row `x^shift * f_poly`; `entries` lists (column, support index) pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSpec {
    pub poly: usize,
    pub shift: Point,
    pub entries: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlanKind {
    /// Mixed-subdivision row content; `attempts` counts liftings tried.
    CannyEmiris { attempts: usize },
    /// Dense Macaulay matrix for the degree-padded supports.
    Macaulay,
}

#[derive(Clone, Debug)]
pub struct ResultantMatrixPlan {
    supports: SupportTuple,
    columns: Vec<Point>,
    rows: Vec<RowSpec>,
    kind: PlanKind,
}

impl ResultantMatrixPlan {
    pub fn supports(&self) -> &SupportTuple {
        &self.supports
    }

    pub fn columns(&self) -> &[Point] {
        &self.columns
    }

    pub fn rows(&self) -> &[RowSpec] {
        &self.rows
    }

    pub fn kind(&self) -> PlanKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Number of rows carrying polynomial `i`.
    pub fn rows_of(&self, i: usize) -> usize {
        self.rows.iter().filter(|r| r.poly == i).count()
    }

    /// Instantiates the matrix; `coeffs[i][k]` is the coefficient of support point k of polynomial i.
    pub fn instantiate(&self, coeffs: &[Vec<BigInt>]) -> Result<IntMatrix> {
        if coeffs.len() != self.supports.len()
            || coeffs
                .iter()
                .zip(self.supports.supports())
                .any(|(c, s)| c.len() != s.len())
        {
            return Err(Error::Dimension("coefficient assignment does not match the supports".into()));
        }
        let n = self.size();
        let mut m = IntMatrix::zeros(n, n);
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, k) in &row.entries {
                m.set(r, c, coeffs[row.poly][k].clone());
            }
        }
        Ok(m)
    }
}

/// m_F = e^{1/8} e^n / sqrt(n+1) * V_F.
pub fn size_constant(n: usize, v_f: u64) -> f64 {
    (0.125f64).exp() * (n as f64).exp() / ((n + 1) as f64).sqrt() * v_f as f64
}

const MAX_ATTEMPTS: usize = 8;

/// Canny-Emiris construction. Fails with `Error::Degenerate` when no generic
/// lifting is found; see [`build_matrix_or_dense`].
pub fn build_matrix(tuple: &SupportTuple, seed: u64) -> Result<ResultantMatrixPlan> {
    let n = tuple.n();
    if tuple.len() != n + 1 {
        return Err(Error::Dimension(format!(
            "a resultant matrix needs n+1 = {} supports, got {}",
            n + 1,
            tuple.len()
        )));
    }
    // internal order: the last support first
    let order: Vec<usize> = std::iter::once(n).chain(0..n).collect();
    let hulls: Vec<LatticePolytope> = order
        .iter()
        .map(|&i| convex_hull(tuple.support(i), n))
        .collect();
    let refs: Vec<&LatticePolytope> = hulls.iter().collect();
    let sum = minkowski_sum_all(&refs)?;
    if !sum.is_full_dimensional() {
        return Err(Error::Degenerate("Minkowski sum is not full-dimensional".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=MAX_ATTEMPTS {
        let den: i64 = 1_000_003;
        let delta: Vec<i64> = (0..n).map(|_| rng.gen_range(1..100_000)).collect();
        let lifts: Vec<Vec<i64>> = order
            .iter()
            .map(|&i| (0..tuple.support(i).len()).map(|_| rng.gen_range(0..1 << 16)).collect())
            .collect();
        if let Some(plan) = try_subdivision(tuple, &order, &sum, &delta, den, &lifts) {
            let mut plan = plan;
            plan.kind = PlanKind::CannyEmiris { attempts: attempt };
            return Ok(plan);
        }
    }
    Err(Error::Degenerate("no generic lifting found for the mixed subdivision".into()))
}

fn try_subdivision(
    tuple: &SupportTuple,
    order: &[usize],
    sum: &LatticePolytope,
    delta: &[i64],
    den: i64,
    lifts: &[Vec<i64>],
) -> Option<ResultantMatrixPlan> {
    let n = tuple.n();
    let (lo, hi) = sum.bounding_box();
    let mut columns = Vec::new();
    let mut cur = lo.clone();
    'outer: loop {
        let num: Vec<i64> = cur.iter().zip(delta).map(|(p, d)| p * den - d).collect();
        if sum.contains_rational(&num, den) {
            columns.push(cur.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                break 'outer;
            }
            if cur[k] < hi[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = lo[k];
            k += 1;
        }
    }
    columns.sort();
    let index: HashMap<Point, usize> = columns.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

    // constraint matrix: n coordinate rows, then one convexity row per support
    let mut var_owner = Vec::new();
    let mut var_point: Vec<&Point> = Vec::new();
    let mut cost = Vec::new();
    for (k, &i) in order.iter().enumerate() {
        for (j, a) in tuple.support(i).iter().enumerate() {
            var_owner.push(k);
            var_point.push(a);
            cost.push(BigRational::from_integer(BigInt::from(lifts[k][j])));
        }
    }
    let nv = var_owner.len();
    let mut a_mat = vec![vec![BigRational::zero(); nv]; 2 * n + 1];
    for v in 0..nv {
        for c in 0..n {
            a_mat[c][v] = BigRational::from_integer(BigInt::from(var_point[v][c]));
        }
        a_mat[n + var_owner[v]][v] = BigRational::from_integer(BigInt::from(1));
    }
    let dq = BigInt::from(den);
    let mut rows = Vec::with_capacity(columns.len());
    for p in &columns {
        let mut b: Vec<BigRational> = (0..n)
            .map(|c| BigRational::new(BigInt::from(p[c] * den - delta[c]), dq.clone()))
            .collect();
        b.extend((0..=n).map(|_| BigRational::from_integer(BigInt::from(1))));
        let sol = lp::minimize(&a_mat, &b, &cost)?;
        let positive: Vec<usize> = (0..nv).filter(|&v| sol.x[v].is_positive()).collect();
        if positive.len() != 2 * n + 1 || !sol.unique {
            return None;
        }
        let mut piece_sizes = vec![0usize; n + 1];
        for &v in &positive {
            piece_sizes[var_owner[v]] += 1;
        }
        // content: the largest internal index whose piece is a vertex
        let k = (0..=n).rev().find(|&k| piece_sizes[k] == 1)?;
        let v = *positive.iter().find(|&&v| var_owner[v] == k)?;
        let poly = order[k];
        let shift: Point = p.iter().zip(var_point[v]).map(|(x, y)| x - y).collect();
        let mut entries = Vec::with_capacity(tuple.support(poly).len());
        for (j, bpt) in tuple.support(poly).iter().enumerate() {
            let q: Point = shift.iter().zip(bpt).map(|(x, y)| x + y).collect();
            entries.push((*index.get(&q)?, j));
        }
        rows.push(RowSpec {
            poly,
            shift,
            entries,
        });
    }
    Some(ResultantMatrixPlan {
        supports: tuple.clone(),
        columns,
        rows,
        kind: PlanKind::Macaulay,
    })
}

/// Dense Macaulay matrix. The last polynomial is paired with the last variable,
/// so the extraneous minor does not involve its coefficients.
pub fn macaulay_plan(tuple: &SupportTuple) -> Result<ResultantMatrixPlan> {
    let n = tuple.n();
    if tuple.len() != n + 1 {
        return Err(Error::Dimension("a Macaulay matrix needs n+1 supports".into()));
    }
    if tuple.supports().iter().flatten().flatten().any(|&e| e < 0) {
        return Err(Error::Invalid("Macaulay matrices need nonnegative exponents".into()));
    }
    let degs: Vec<i64> = tuple
        .supports()
        .iter()
        .map(|s| s.iter().map(|p| p.iter().sum::<i64>()).max().unwrap_or(0).max(1))
        .collect();
    let big_d: i64 = degs.iter().map(|d| d - 1).sum::<i64>() + 1;
    let mut columns: Vec<Point> = Vec::new();
    let mut cur = vec![0i64; n];
    loop {
        if cur.iter().sum::<i64>() <= big_d {
            columns.push(cur.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                columns.sort();
                return finish_macaulay(tuple, columns, &degs, big_d);
            }
            if cur[k] < big_d {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

fn finish_macaulay(
    tuple: &SupportTuple,
    columns: Vec<Point>,
    degs: &[i64],
    big_d: i64,
) -> Result<ResultantMatrixPlan> {
    let n = tuple.n();
    let index: HashMap<Point, usize> = columns.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut rows = Vec::with_capacity(columns.len());
    for col in &columns {
        // homogeneous exponent (x_0 = slack, x_1..x_n)
        let slack = big_d - col.iter().sum::<i64>();
        let k = (0..=n)
            .find(|&k| {
                let e = if k == 0 { slack } else { col[k - 1] };
                e >= degs[k]
            })
            .ok_or_else(|| Error::invariant("Macaulay monomial not reduced by any variable"))?;
        let mut shift = col.clone();
        if k > 0 {
            shift[k - 1] -= degs[k];
        }
        let mut entries = Vec::new();
        for (j, b) in tuple.support(k).iter().enumerate() {
            let q: Point = shift.iter().zip(b).map(|(x, y)| x + y).collect();
            let c = index
                .get(&q)
                .ok_or_else(|| Error::invariant("Macaulay row leaves the column set"))?;
            entries.push((*c, j));
        }
        rows.push(RowSpec {
            poly: k,
            shift,
            entries,
        });
    }
    Ok(ResultantMatrixPlan {
        supports: tuple.clone(),
        columns,
        rows,
        kind: PlanKind::Macaulay,
    })
}

/// Canny-Emiris plan, or the Macaulay plan when the subdivision degenerates.
pub fn build_matrix_or_dense(tuple: &SupportTuple, seed: u64) -> Result<ResultantMatrixPlan> {
    match build_matrix(tuple, seed) {
        Ok(p) => Ok(p),
        Err(Error::Degenerate(_)) => macaulay_plan(tuple),
        Err(e) => Err(e),
    }
}

/// Determinant of the instantiated matrix: a multiple of the sparse resultant.
pub fn eval_resultant(plan: &ResultantMatrixPlan, coeffs: &[Vec<BigInt>]) -> Result<BigInt> {
    det_exact(&plan.instantiate(coeffs)?)
}
