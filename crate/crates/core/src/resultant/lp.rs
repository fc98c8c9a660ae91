//! Dense exact simplex method over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub(crate) struct LpSolution {
    pub x: Vec<BigRational>,
    /// True when every nonbasic reduced cost is strictly positive.
    pub unique: bool,
}

/// Minimizes `cost · x` subject to `a x = b`, `x >= 0`. Returns None when infeasible.
/// Unbounded problems cannot occur for the bounded polytopes used here and are
/// reported as None as well.
pub(crate) fn minimize(a: &[Vec<BigRational>], b: &[BigRational], cost: &[BigRational]) -> Option<LpSolution> {
    let m = a.len();
    let nv = cost.len();
    // tableau columns: nv structural, m artificial, then rhs
    let width = nv + m + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for i in 0..m {
        let neg = b[i].is_negative();
        let mut row = Vec::with_capacity(width);
        for j in 0..nv {
            row.push(if neg { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i { one() } else { BigRational::zero() });
        }
        row.push(if neg { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (nv..nv + m).collect();

    // phase one: minimize the sum of artificials
    let mut c1 = vec![BigRational::zero(); nv + m];
    for c in c1.iter_mut().skip(nv) {
        *c = one();
    }
    run(&mut t, &mut basis, &c1, nv + m);
    let infeas: BigRational = basis
        .iter()
        .enumerate()
        .filter(|(_, &j)| j >= nv)
        .map(|(i, _)| t[i][width - 1].clone())
        .sum();
    if !infeas.is_zero() {
        return None;
    }
    // drive remaining artificials out of the basis
    for i in 0..m {
        if basis[i] < nv {
            continue;
        }
        if let Some(j) = (0..nv).find(|&j| !t[i][j].is_zero()) {
            pivot(&mut t, &mut basis, i, j);
        }
    }
    // phase two, artificials barred from entering
    let mut c2 = cost.to_vec();
    c2.extend(std::iter::repeat(BigRational::zero()).take(m));
    run(&mut t, &mut basis, &c2, nv);

    let mut x = vec![BigRational::zero(); nv];
    for (i, &j) in basis.iter().enumerate() {
        if j < nv {
            x[j] = t[i][width - 1].clone();
        }
    }
    let rc = reduced_costs(&t, &basis, &c2);
    let unique = (0..nv).all(|j| basis.contains(&j) || rc[j].is_positive());
    Some(LpSolution { x, unique })
}

fn one() -> BigRational {
    BigRational::from_integer(BigInt::from(1))
}

fn reduced_costs(t: &[Vec<BigRational>], basis: &[usize], c: &[BigRational]) -> Vec<BigRational> {
    let mut rc = c.to_vec();
    for (i, &bj) in basis.iter().enumerate() {
        if c[bj].is_zero() {
            continue;
        }
        for (j, r) in rc.iter_mut().enumerate() {
            if !t[i][j].is_zero() {
                *r -= &c[bj] * &t[i][j];
            }
        }
    }
    rc
}

/// Primal simplex with Bland's rule; columns >= `allowed` never enter.
fn run(t: &mut [Vec<BigRational>], basis: &mut [usize], c: &[BigRational], allowed: usize) {
    let width = t.first().map_or(0, |r| r.len());
    loop {
        let rc = reduced_costs(t, basis, c);
        let Some(enter) = (0..allowed).find(|&j| !basis.contains(&j) && rc[j].is_negative()) else {
            return;
        };
        let mut best: Option<(usize, BigRational)> = None;
        for i in 0..t.len() {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][width - 1] / &t[i][enter];
            let better = match &best {
                None => true,
                Some((bi, br)) => ratio < *br || (ratio == *br && basis[i] < basis[*bi]),
            };
            if better {
                best = Some((i, ratio));
            }
        }
        let Some((leave, _)) = best else {
            return;
        };
        pivot(t, basis, leave, enter);
    }
}

fn pivot(t: &mut [Vec<BigRational>], basis: &mut [usize], r: usize, c: usize) {
    let p = t[r][c].clone();
    for v in t[r].iter_mut() {
        *v /= &p;
    }
    let prow = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, pv) in row.iter_mut().zip(&prow) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
    basis[r] = c;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn small_program() {
        // min -x - y s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
        let a = vec![
            vec![q(1), q(2), q(1), q(0)],
            vec![q(3), q(1), q(0), q(1)],
        ];
        let sol = minimize(&a, &[q(4), q(6)], &[q(-1), q(-1), q(0), q(0)]).unwrap();
        assert_eq!(sol.x[0], BigRational::new(8.into(), 5.into()));
        assert_eq!(sol.x[1], BigRational::new(6.into(), 5.into()));
        assert!(sol.unique);
    }

    #[test]
    fn infeasible_program() {
        let a = vec![vec![q(1), q(1)]];
        assert!(minimize(&a, &[q(-1)], &[q(0), q(0)]).is_none());
    }
}
