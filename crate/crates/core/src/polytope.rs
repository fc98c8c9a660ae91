//! Lattice polytopes: hulls, normalized volumes, Minkowski sums, mixed volumes.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{ExponentVector, PolySystem};

pub type Point = Vec<i64>;

/// Inequality `normal · x <= offset` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    pub fn value(&self, x: &[i64]) -> i128 {
        dot(&self.normal, x)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// Fraction-free determinant of a small integer matrix.
pub fn det_i64(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(piv) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, piv);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[k][k]
                    .checked_mul(a[i][j])
                    .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                    .expect("determinant overflow: coordinates too large");
                a[i][j] = v / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Rank of an integer matrix (rows of equal length).
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        for i in r + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[r][c];
            for j in c..cols {
                let v = &f * &a[r][j];
                a[i][j] -= v;
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// Primitive integer normal of the hyperplane through n affinely independent points in Z^n.
fn hyperplane_normal(pts: &[&Point]) -> Vec<i64> {
    let n = pts[0].len();
    let diffs: Vec<Vec<i64>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(pts[0]).map(|(a, b)| a - b).collect())
        .collect();
    let mut normal: Vec<i128> = (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = diffs
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                .collect();
            let d = det_i64(&minor);
            if j % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect();
    let g = normal.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in normal.iter_mut() {
            *x /= g;
        }
    }
    normal
        .into_iter()
        .map(|x| i64::try_from(x).expect("facet normal overflow"))
        .collect()
}

/// Convex hull of a lattice point set, with its placing triangulation.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    n: usize,
    points: Vec<Point>,
    vertices: Vec<Point>,
    dim: usize,
    /// Facets in the ambient space (full-dimensional case) or in the projected
    /// coordinates (lower-dimensional case).
    facets: Vec<Facet>,
    /// Affine hull equations `normal · x = offset` when dim < n.
    equations: Vec<Facet>,
    /// Coordinates kept by the injective projection of the affine hull.
    projection: Vec<usize>,
    /// Normalized volume of the projected polytope in dimension `dim`.
    relative_volume: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeResult {
    pub normalized_volume: u64,
    pub euclidean_volume: BigRational,
}

struct Placing {
    volume: u64,
    facets: Vec<Facet>,
    vertices: Vec<usize>,
}

/// Placing triangulation of a full-dimensional point set in Z^d.
fn placing(pts: &[Point], d: usize) -> Placing {
    // initial simplex
    let mut simplex = vec![0usize];
    for i in 1..pts.len() {
        if simplex.len() == d + 1 {
            break;
        }
        let mut rows: Vec<Vec<i64>> = simplex[1..]
            .iter()
            .map(|&j| pts[j].iter().zip(&pts[0]).map(|(a, b)| a - b).collect())
            .collect();
        rows.push(pts[i].iter().zip(&pts[0]).map(|(a, b)| a - b).collect());
        if rank_i64(&rows) == rows.len() {
            simplex.push(i);
        }
    }
    assert_eq!(simplex.len(), d + 1, "point set is not full-dimensional");
    // interior reference, scaled by d+1
    let mut interior = vec![0i64; d];
    for &i in &simplex {
        for (c, x) in interior.iter_mut().zip(&pts[i]) {
            *c += x;
        }
    }
    let scale = (d + 1) as i128;
    let orient = |idx: &[usize]| -> Facet {
        let refs: Vec<&Point> = idx.iter().map(|&i| &pts[i]).collect();
        let mut normal = hyperplane_normal(&refs);
        let mut offset = dot(&normal, refs[0]);
        if dot(&normal, &interior) > offset * scale {
            normal.iter_mut().for_each(|x| *x = -*x);
            offset = -offset;
        }
        Facet {
            normal,
            offset: i64::try_from(offset).expect("facet offset overflow"),
        }
    };
    let simplex_volume = |idx: &[usize]| -> u64 {
        let rows: Vec<Vec<i64>> = idx[1..]
            .iter()
            .map(|&j| pts[j].iter().zip(&pts[idx[0]]).map(|(a, b)| a - b).collect())
            .collect();
        det_i64(&rows).unsigned_abs() as u64
    };

    let mut volume = simplex_volume(&simplex);
    let mut boundary: HashMap<Vec<usize>, Facet> = HashMap::new();
    for skip in 0..=d {
        let mut f: Vec<usize> = simplex
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != skip)
            .map(|(_, &v)| v)
            .collect();
        f.sort_unstable();
        let h = orient(&f);
        boundary.insert(f, h);
    }
    let in_simplex: BTreeSet<usize> = simplex.iter().copied().collect();
    for p in 0..pts.len() {
        if in_simplex.contains(&p) {
            continue;
        }
        let visible: Vec<Vec<usize>> = boundary
            .iter()
            .filter(|(_, h)| h.value(&pts[p]) > h.offset as i128)
            .map(|(f, _)| f.clone())
            .collect();
        if visible.is_empty() {
            continue;
        }
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for f in &visible {
            for skip in 0..f.len() {
                let r: Vec<usize> = f
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                *ridges.entry(r).or_default() += 1;
            }
            let mut s = f.clone();
            s.push(p);
            volume += simplex_volume(&s);
        }
        for f in &visible {
            boundary.remove(f);
        }
        for (r, c) in ridges {
            if c == 1 {
                let mut f = r;
                f.push(p);
                f.sort_unstable();
                let h = orient(&f);
                boundary.insert(f, h);
            }
        }
    }
    // merge coplanar boundary simplices into facets
    let mut facets: BTreeMap<Facet, BTreeSet<usize>> = BTreeMap::new();
    for (f, h) in boundary {
        facets.entry(h).or_default().extend(f);
    }
    let facet_list: Vec<Facet> = facets.keys().cloned().collect();
    // vertices: points whose incident facet normals have full rank
    let mut vertices = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        let normals: Vec<Vec<i64>> = facet_list
            .iter()
            .filter(|h| h.value(p) == h.offset as i128)
            .map(|h| h.normal.clone())
            .collect();
        if normals.len() >= d && rank_i64(&normals) == d {
            vertices.push(i);
        }
    }
    Placing {
        volume,
        facets: facet_list,
        vertices,
    }
}

/// Integer basis of the orthogonal complement of the row space.
fn integer_kernel(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    // rational RREF, then clear denominators for each free variable
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(piv) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        let inv = a[r][c].clone();
        for j in 0..n {
            a[r][j] = &a[r][j] / &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..n {
                    let v = &f * &a[r][j];
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![BigRational::zero(); n];
            v[fc] = BigRational::from_integer(1.into());
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[k][fc].clone();
            }
            let l = v.iter().fold(BigInt::from(1), |l, x| l.lcm(x.denom()));
            let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
            let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            ints.iter().map(|x| (x / &g).to_i64().unwrap()).collect()
        })
        .collect()
}

impl LatticePolytope {
    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.n
    }

    /// Generators after deduplication.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Facet inequalities; only meaningful for full-dimensional polytopes.
    pub fn facets(&self) -> &[Facet] {
        if self.is_full_dimensional() {
            &self.facets
        } else {
            &[]
        }
    }

    fn project(&self, x: &[i64]) -> Vec<i64> {
        self.projection.iter().map(|&c| x[c]).collect()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        if self.equations.iter().any(|e| e.value(x) != e.offset as i128) {
            return false;
        }
        let y = self.project(x);
        self.facets.iter().all(|h| h.value(&y) <= h.offset as i128)
    }

    /// Membership of num/den (componentwise numerators over a positive common denominator).
    pub fn contains_rational(&self, num: &[i64], den: i64) -> bool {
        assert!(den > 0);
        let d = den as i128;
        if self
            .equations
            .iter()
            .any(|e| e.value(num) != e.offset as i128 * d)
        {
            return false;
        }
        let y = self.project(num);
        self.facets.iter().all(|h| h.value(&y) <= h.offset as i128 * d)
    }

    /// Componentwise bounding box of the vertices.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for v in &self.vertices {
            for c in 0..self.n {
                lo[c] = lo[c].min(v[c]);
                hi[c] = hi[c].max(v[c]);
            }
        }
        (lo, hi)
    }

    pub fn translate(&self, t: &[i64]) -> LatticePolytope {
        let pts: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(t).map(|(a, b)| a + b).collect())
            .collect();
        convex_hull(&pts, self.n)
    }
}

pub fn convex_hull(points: &[Point], n: usize) -> LatticePolytope {
    assert!(!points.is_empty(), "convex hull of an empty set");
    let set: BTreeSet<Point> = points.iter().cloned().collect();
    let pts: Vec<Point> = set.into_iter().collect();
    assert!(pts.iter().all(|p| p.len() == n), "point of wrong dimension");
    let diffs: Vec<Vec<i64>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(&pts[0]).map(|(a, b)| a - b).collect())
        .collect();
    let dim = rank_i64(&diffs);
    if dim == 0 {
        return LatticePolytope {
            n,
            vertices: vec![pts[0].clone()],
            points: pts.clone(),
            dim: 0,
            facets: Vec::new(),
            equations: (0..n)
                .map(|c| {
                    let mut normal = vec![0; n];
                    normal[c] = 1;
                    Facet {
                        normal,
                        offset: pts[0][c],
                    }
                })
                .collect(),
            projection: Vec::new(),
            relative_volume: 1,
        };
    }
    let (projection, equations) = if dim == n {
        ((0..n).collect(), Vec::new())
    } else {
        // coordinates on which the direction space projects injectively
        let mut chosen: Vec<usize> = Vec::new();
        for c in 0..n {
            let mut cand = chosen.clone();
            cand.push(c);
            let sub: Vec<Vec<i64>> = diffs
                .iter()
                .map(|r| cand.iter().map(|&k| r[k]).collect())
                .collect();
            if rank_i64(&sub) == cand.len() {
                chosen = cand;
            }
            if chosen.len() == dim {
                break;
            }
        }
        let eqs = integer_kernel(&diffs, n)
            .into_iter()
            .map(|normal| {
                let offset = dot(&normal, &pts[0]) as i64;
                Facet { normal, offset }
            })
            .collect();
        (chosen, eqs)
    };
    let projected: Vec<Point> = pts
        .iter()
        .map(|p| projection.iter().map(|&c| p[c]).collect())
        .collect();
    let pl = placing(&projected, dim);
    LatticePolytope {
        n,
        vertices: pl.vertices.iter().map(|&i| pts[i].clone()).collect(),
        points: pts,
        dim,
        facets: pl.facets,
        equations,
        projection,
        relative_volume: pl.volume,
    }
}

pub fn convex_hull_of_exponents(points: &[ExponentVector], n: usize) -> LatticePolytope {
    let pts: Vec<Point> = points.iter().map(|e| e.to_i64()).collect();
    convex_hull(&pts, n)
}

pub fn normalized_volume(p: &LatticePolytope) -> VolumeResult {
    let v = if p.is_full_dimensional() {
        p.relative_volume
    } else {
        0
    };
    let fact: BigInt = (1..=p.n as u64).map(BigInt::from).product();
    VolumeResult {
        normalized_volume: v,
        euclidean_volume: BigRational::new(BigInt::from(v), fact),
    }
}

/// Normalized volume of P inside its own affine hull, measured in the projected lattice.
pub fn relative_volume(p: &LatticePolytope) -> u64 {
    p.relative_volume
}

/// Hull of {O, e_1..e_n} together with every exponent vector of F.
pub fn q_polytope(f: &PolySystem) -> LatticePolytope {
    let n = f.nvars();
    let mut pts: Vec<Point> = vec![vec![0; n]];
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        pts.push(e);
    }
    pts.extend(f.exponent_set().iter().map(|e| e.to_i64()));
    convex_hull(&pts, n)
}

/// V_F, the normalized volume of Q_F.
pub fn v_f(f: &PolySystem) -> u64 {
    normalized_volume(&q_polytope(f)).normalized_volume
}

pub fn minkowski_sum(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    if p.n != q.n {
        return Err(Error::Dimension(format!(
            "Minkowski sum of polytopes in dimensions {} and {}",
            p.n, q.n
        )));
    }
    let mut pts = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in &p.vertices {
        for b in &q.vertices {
            pts.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
        }
    }
    Ok(convex_hull(&pts, p.n))
}

pub fn minkowski_sum_all(ps: &[&LatticePolytope]) -> Result<LatticePolytope> {
    let mut acc = ps[0].clone();
    for p in &ps[1..] {
        acc = minkowski_sum(&acc, p)?;
    }
    Ok(acc)
}

/// Mixed volume normalized so that MV(P, ..., P) is the normalized volume of P,
/// by inclusion-exclusion over Minkowski sums.
pub fn mixed_volume(ps: &[LatticePolytope]) -> Result<u64> {
    let n = ps.first().map(|p| p.n).unwrap_or(0);
    if ps.len() != n || n == 0 {
        return Err(Error::Dimension(format!(
            "mixed volume needs exactly n polytopes in dimension n, got {} in dimension {}",
            ps.len(),
            n
        )));
    }
    if ps.iter().any(|p| p.n != n) {
        return Err(Error::Dimension("polytopes of mixed ambient dimension".into()));
    }
    let mut total: i128 = 0;
    for mask in 1u32..(1 << n) {
        let chosen: Vec<&LatticePolytope> = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| &ps[i])
            .collect();
        let sum = minkowski_sum_all(&chosen)?;
        let v = normalized_volume(&sum).normalized_volume as i128;
        if (n - chosen.len()) % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    // with normalized volumes the alternating sum carries an extra factor n!
    let fact: i128 = (1..=n as i128).product();
    if total < 0 || total % fact != 0 {
        return Err(Error::invariant("inclusion-exclusion sum is not a nonnegative multiple of n!"));
    }
    Ok((total / fact) as u64)
}

/// Mixed volume of the Newton polytopes of a square system.
pub fn newton_mixed_volume(f: &PolySystem) -> Result<u64> {
    let polys: Vec<LatticePolytope> = f
        .polys()
        .iter()
        .map(|p| {
            let s = p.support();
            if s.is_empty() {
                Err(Error::Invalid("Newton polytope of the zero polynomial".into()))
            } else {
                Ok(convex_hull_of_exponents(&s, f.nvars()))
            }
        })
        .collect::<Result<_>>()?;
    mixed_volume(&polys)
}

/// All lattice points of P.
pub fn lattice_points(p: &LatticePolytope) -> Vec<Point> {
    let (lo, hi) = p.bounding_box();
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        if p.contains(&cur) {
            out.push(cur.clone());
        }
        let mut k = 0;
        loop {
            if k == p.n {
                return out;
            }
            if cur[k] < hi[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = lo[k];
            k += 1;
        }
    }
}

/// Normalized volume of the simplex conv{O, rows}.
pub fn simplex_normalized_volume(rows: &[Vec<i64>]) -> u64 {
    det_i64(rows).unsigned_abs() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn simplex(n: usize, scale: i64) -> LatticePolytope {
        let mut pts = vec![vec![0; n]];
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = scale;
            pts.push(e);
        }
        convex_hull(&pts, n)
    }

    #[test]
    fn square_and_segment() {
        let sq = convex_hull(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]], 2);
        assert_eq!(sq.vertices().len(), 4);
        assert_eq!(normalized_volume(&sq).normalized_volume, 2);
        assert_eq!(sq.facets().len(), 4);
        let seg = convex_hull(&[vec![0], vec![1], vec![2]], 1);
        assert_eq!(seg.vertices(), &[vec![0], vec![2]]);
        assert_eq!(normalized_volume(&seg).normalized_volume, 2);
        assert_eq!(lattice_points(&convex_hull(&[vec![0], vec![3]], 1)).len(), 4);
    }

    #[test]
    fn simplices_and_cube() {
        for n in 1..=5 {
            assert_eq!(normalized_volume(&simplex(n, 1)).normalized_volume, 1);
        }
        assert_eq!(lattice_points(&simplex(2, 1)).len(), 3);
        let mut cube = Vec::new();
        for m in 0..8 {
            cube.push(vec![m & 1, (m >> 1) & 1, (m >> 2) & 1]);
        }
        let c = convex_hull(&cube, 3);
        assert_eq!(lattice_points(&c).len(), 8);
        assert_eq!(normalized_volume(&c).normalized_volume, 6);
        assert_eq!(normalized_volume(&c).euclidean_volume, BigRational::from_integer(1.into()));
        assert_eq!(c.vertices().len(), 8);
    }

    #[test]
    fn lower_dimensional_hulls() {
        // a segment and a triangle in R^3
        let seg = convex_hull(&[vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]], 3);
        assert_eq!(seg.dim(), 1);
        assert_eq!(seg.vertices().len(), 2);
        assert_eq!(normalized_volume(&seg).normalized_volume, 0);
        assert!(seg.contains(&[1, 1, 1]));
        assert!(!seg.contains(&[1, 1, 0]));
        assert_eq!(lattice_points(&seg).len(), 3);
        let tri = convex_hull(&[vec![0, 0, 5], vec![2, 0, 5], vec![0, 2, 5], vec![1, 1, 5]], 3);
        assert_eq!(tri.dim(), 2);
        assert_eq!(tri.vertices().len(), 3);
        assert_eq!(lattice_points(&tri).len(), 6);
        let pt = convex_hull(&[vec![3, 4]], 2);
        assert_eq!(pt.dim(), 0);
        assert!(pt.contains(&[3, 4]) && !pt.contains(&[3, 5]));
    }

    #[test]
    fn minkowski_examples() {
        let e1 = convex_hull(&[vec![0, 0], vec![1, 0]], 2);
        let e2 = convex_hull(&[vec![0, 0], vec![0, 1]], 2);
        let sq = minkowski_sum(&e1, &e2).unwrap();
        assert_eq!(normalized_volume(&sq).normalized_volume, 2);
        assert_eq!(mixed_volume(&[e1.clone(), e2.clone()]).unwrap(), 1);
        let pt = convex_hull(&[vec![5, -1]], 2);
        let moved = minkowski_sum(&sq, &pt).unwrap();
        assert!(moved.contains(&[6, 0]) && !moved.contains(&[0, 0]));
        let d = simplex(2, 1);
        let dd = minkowski_sum(&d, &d).unwrap();
        assert_eq!(normalized_volume(&dd).normalized_volume, 4);
        assert_eq!(dd.vertices().len(), 3);
        assert!(minkowski_sum(&d, &simplex(3, 1)).is_err());
        assert!(mixed_volume(&[e1]).is_err());
    }

    #[test]
    fn worked_system_volumes() {
        let f = crate::examples::system1();
        assert_eq!(v_f(&f), 243);
        assert_eq!(newton_mixed_volume(&f).unwrap(), 145);
    }

    #[test]
    fn bezout_number_as_mixed_volume() {
        let d = simplex(3, 24);
        assert_eq!(mixed_volume(&[d.clone(), d.clone(), d]).unwrap(), 13824);
    }

    fn poly_pts(n: usize) -> impl Strategy<Value = Vec<Point>> {
        proptest::collection::vec(proptest::collection::vec(0i64..4, n), n + 1..n + 6)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn volume_invariances(pts in poly_pts(3), t in proptest::collection::vec(-5i64..5, 3)) {
            let p = convex_hull(&pts, 3);
            let v = normalized_volume(&p).normalized_volume;
            let moved: Vec<Point> = pts.iter().map(|x| x.iter().zip(&t).map(|(a, b)| a + b).collect()).collect();
            prop_assert_eq!(normalized_volume(&convex_hull(&moved, 3)).normalized_volume, v);
            // unimodular shear (x, y, z) -> (x + 2y - z, y + z, z)
            let sheared: Vec<Point> = pts.iter().map(|x| vec![x[0] + 2 * x[1] - x[2], x[1] + x[2], x[2]]).collect();
            prop_assert_eq!(normalized_volume(&convex_hull(&sheared, 3)).normalized_volume, v);
            for q in &pts {
                prop_assert!(p.contains(q));
            }
            for w in p.vertices() {
                prop_assert!(pts.contains(w));
            }
        }

        #[test]
        fn mixed_volume_properties(a in poly_pts(2), b in poly_pts(2), extra in proptest::collection::vec(0i64..4, 2)) {
            let p = convex_hull(&a, 2);
            let q = convex_hull(&b, 2);
            let mv = mixed_volume(&[p.clone(), q.clone()]).unwrap();
            prop_assert_eq!(mv, mixed_volume(&[q.clone(), p.clone()]).unwrap());
            prop_assert_eq!(mixed_volume(&[p.clone(), p.clone()]).unwrap(), normalized_volume(&p).normalized_volume);
            let mut bigger = b.clone();
            bigger.push(extra);
            let q2 = convex_hull(&bigger, 2);
            prop_assert!(mixed_volume(&[p, q2]).unwrap() >= mv);
        }
    }
}
