//! Complex dimension of the zero set by majority votes over generic affine flats.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{ExponentVector, PolySystem, SparsePoly};
use crate::resultant::{ReductionOptions, SupportPolicy};
use crate::rur::feasibility_check_with;
use crate::univariate::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProbeStrategy {
    /// Coordinates drawn uniformly from 1..=range by a seeded generator.
    Seeded { seed: u64, range: u64 },
    /// v(j) = (j, j^(d+1), j^((d+1)^2), ...).
    Kronecker { d: u64 },
}

impl Default for ProbeStrategy {
    fn default() -> Self {
        ProbeStrategy::Seeded {
            seed: 0xd1_3e57,
            range: 64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeSequence {
    pub points: Vec<Vec<BigInt>>,
    pub k: usize,
    pub strategy: ProbeStrategy,
    r: usize,
    /// Next index to draw from when a point has to be replaced.
    next: u64,
    rng_state: Option<u64>,
}

impl ProbeSequence {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Another point of the same construction, distinct from all previous ones.
    pub fn extra_point(&mut self) -> Vec<BigInt> {
        let r = self.r;
        loop {
            let p = match &self.strategy {
                ProbeStrategy::Seeded { range, .. } => {
                    let state = self.rng_state.unwrap_or(0);
                    let mut rng = ChaCha8Rng::seed_from_u64(state);
                    let p: Vec<BigInt> = (0..r).map(|_| BigInt::from(rng.gen_range(1..=*range))).collect();
                    self.rng_state = Some(rng.gen());
                    p
                }
                ProbeStrategy::Kronecker { d } => {
                    self.next += 1;
                    kronecker_point(self.next, *d, r)
                }
            };
            if !self.points.contains(&p) {
                self.points.push(p.clone());
                return p;
            }
        }
    }
}

fn kronecker_point(j: u64, d: u64, r: usize) -> Vec<BigInt> {
    let mut e = BigInt::one();
    let base = BigInt::from(d + 1);
    let jb = BigInt::from(j);
    (0..r)
        .map(|_| {
            let v = num_traits::pow::Pow::pow(&jb, num_bigint::BigUint::try_from(&e).unwrap());
            e *= &base;
            v
        })
        .collect()
}

pub fn probe_sequence(k: usize, r: usize) -> ProbeSequence {
    probe_sequence_with(k, r, ProbeStrategy::default())
}

/// 2k+1 pairwise distinct points of Z^r.
pub fn probe_sequence_with(k: usize, r: usize, strategy: ProbeStrategy) -> ProbeSequence {
    let k = k.max(1);
    let r = r.max(1);
    let mut seq = ProbeSequence {
        points: Vec::new(),
        k,
        r,
        strategy: strategy.clone(),
        next: 0,
        rng_state: match strategy {
            ProbeStrategy::Seeded { seed, .. } => Some(seed),
            _ => None,
        },
    };
    while seq.points.len() < 2 * k + 1 {
        seq.extra_point();
    }
    seq
}

/// Row t: ε_t f_1 + ... + ε_t^m f_m + ε_t^(m+1) l_1 + ... + ε_t^(m+i) l_i with
/// l_s = ε_(s,1) x_1 + ... + ε_(s,n) x_n; the point is (ε_1..ε_n, ε_(1,1)..ε_(i,n)).
pub fn build_probe_system(f: &PolySystem, i: usize, point: &[BigInt]) -> Result<PolySystem> {
    let n = f.nvars();
    if i >= n.max(1) && n > 0 {
        return Err(Error::Dimension(format!("probe level {i} must be below n = {n}")));
    }
    if point.len() != (i + 1) * n {
        return Err(Error::Dimension(format!(
            "probe point has length {}, expected {}",
            point.len(),
            (i + 1) * n
        )));
    }
    let forms: Vec<SparsePoly> = (0..i)
        .map(|s| {
            let mut l = SparsePoly::zero(n);
            for j in 0..n {
                l.add_term(ExponentVector::unit(n, j), point[n + s * n + j].clone());
            }
            l
        })
        .collect();
    let rows = (0..n)
        .map(|t| {
            let e = &point[t];
            let mut acc = SparsePoly::zero(n);
            let mut w = e.clone();
            for p in f.polys().iter().chain(&forms) {
                acc = acc.add(&p.scale(&w));
                w *= e;
            }
            acc
        })
        .collect();
    PolySystem::new(n, rows)
}

/// F restricted to {x : ε_t·x = 1, t = 1..i}, in the n - i free variables,
/// or None when the i forms are dependent.
pub fn restrict_to_flat(f: &PolySystem, forms: &[Vec<BigInt>]) -> Result<Option<PolySystem>> {
    let n = f.nvars();
    let i = forms.len();
    if i == 0 {
        return Ok(Some(f.clone()));
    }
    if i > n || forms.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("flat equations do not fit the variables".into()));
    }
    let q = |x: &BigInt| BigRational::from_integer(x.clone());
    // reduced row echelon form of [A | 1]
    let mut a: Vec<Vec<BigRational>> = forms
        .iter()
        .map(|r| r.iter().map(q).chain(std::iter::once(BigRational::one())).collect())
        .collect();
    let mut pivots = Vec::with_capacity(i);
    let mut row = 0;
    for col in 0..n {
        if row == i {
            break;
        }
        let Some(pr) = (row..i).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, pr);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..i {
            if r != row && !a[r][col].is_zero() {
                let k = a[r][col].clone();
                for c in 0..=n {
                    let v = &a[row][c] * &k;
                    a[r][c] = &a[r][c] - v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if pivots.len() < i {
        return Ok(None);
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let nf = free.len();
    // x_pivot = rhs - sum_free a x_free, over a common denominator
    let den = a
        .iter()
        .flat_map(|r| r.iter())
        .fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let scaled = |x: &BigRational| (x * BigRational::from_integer(den.clone())).to_integer();
    let mut subst: Vec<SparsePoly> = vec![SparsePoly::zero(nf); n];
    for (k, &c) in free.iter().enumerate() {
        subst[c] = SparsePoly::var(nf, k).scale(&den);
    }
    for (r, &c) in pivots.iter().enumerate() {
        let mut l = SparsePoly::constant(nf, scaled(&a[r][n]));
        for (k, &fc) in free.iter().enumerate() {
            let v = scaled(&a[r][fc]);
            if !v.is_zero() {
                l.add_term(ExponentVector::unit(nf, k), -v);
            }
        }
        subst[c] = l;
    }
    // f(subst / den) * den^deg
    let polys = f
        .polys()
        .iter()
        .map(|p| {
            let mut acc = SparsePoly::zero(nf);
            for (e, c) in p.terms() {
                let mut t = SparsePoly::constant(nf, c.clone());
                for (j, &x) in e.0.iter().enumerate() {
                    if x > 0 {
                        t = t.mul(&subst[j].pow(x));
                    }
                }
                let pad = p.total_degree() - e.degree();
                if pad > 0 {
                    t = t.scale(&num_traits::pow(den.clone(), pad as usize));
                }
                acc = acc.add(&t);
            }
            let g = acc.content();
            if g.is_zero() || g.is_one() {
                acc
            } else {
                SparsePoly::from_terms(nf, acc.terms().map(|(e, c)| (e.clone(), c / &g)))
            }
        })
        .collect();
    Ok(Some(PolySystem::new(nf, polys)?))
}

#[derive(Clone, Debug)]
pub struct DimensionOptions {
    /// Majority over 2k+1 probes.
    pub k: usize,
    pub strategy: ProbeStrategy,
    pub reduction: ReductionOptions,
}

impl Default for DimensionOptions {
    fn default() -> Self {
        DimensionOptions {
            k: 1,
            strategy: ProbeStrategy::default(),
            reduction: ReductionOptions {
                policy: Some(SupportPolicy::Fill),
                ..Default::default()
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelTally {
    pub level: usize,
    pub feasible: usize,
    pub infeasible: usize,
    /// Probes replaced because their flat equations were dependent.
    pub resampled: usize,
}

#[derive(Clone, Debug)]
pub struct DimensionResult {
    /// -1 for the empty set.
    pub dimension: i64,
    pub tallies: Vec<LevelTally>,
    /// Verified factor of the level-0 representation, when that level was reached.
    pub certificate: Option<UniPoly>,
}

pub fn compute_dimension(f: &PolySystem, opts: &DimensionOptions) -> Result<DimensionResult> {
    let n = f.nvars();
    if f.all_zero() {
        return Ok(DimensionResult {
            dimension: n as i64,
            tallies: Vec::new(),
            certificate: None,
        });
    }
    if f.polys().iter().any(|p| p.as_constant().is_some_and(|c| !c.is_zero())) {
        return Ok(DimensionResult {
            dimension: -1,
            tallies: Vec::new(),
            certificate: Some(UniPoly::one()),
        });
    }
    let mut tallies = Vec::new();
    for i in (1..n).rev() {
        let mut seq = probe_sequence_with(opts.k, i * n, opts.strategy.clone());
        let mut tally = LevelTally {
            level: i,
            feasible: 0,
            infeasible: 0,
            resampled: 0,
        };
        let need = opts.k + 1;
        let mut idx = 0;
        while tally.feasible < need && tally.infeasible < need {
            let point = if idx < seq.len() {
                seq.points[idx].clone()
            } else {
                seq.extra_point()
            };
            idx += 1;
            let forms: Vec<Vec<BigInt>> = point.chunks(n).map(|c| c.to_vec()).collect();
            let Some(g) = restrict_to_flat(f, &forms)? else {
                tally.resampled += 1;
                if tally.resampled > 64 {
                    return Err(Error::Degenerate("probe flats keep degenerating".into()));
                }
                continue;
            };
            if feasibility_check_with(&g, &opts.reduction)?.feasible {
                tally.feasible += 1;
            } else {
                tally.infeasible += 1;
            }
        }
        let hit = tally.feasible >= need;
        tallies.push(tally);
        if hit {
            return Ok(DimensionResult {
                dimension: i as i64,
                tallies,
                certificate: None,
            });
        }
    }
    let rep = feasibility_check_with(f, &opts.reduction)?;
    let cert = rep.verified_factor().cloned().unwrap_or_else(UniPoly::one);
    Ok(DimensionResult {
        dimension: if rep.feasible { 0 } else { -1 },
        tallies,
        certificate: Some(cert),
    })
}

/// Positive and negative coordinates are both allowed in hand-made probes.
pub fn probe_is_degenerate(point: &[BigInt]) -> bool {
    point.iter().any(|x| x.is_zero()) || point.iter().all(|x| x.is_negative())
}
