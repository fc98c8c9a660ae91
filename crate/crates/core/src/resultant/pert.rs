//! The perturbed resultant: lowest s-order coefficient of det M(F - sF*, u_0 - ...),
//! computed modulo word-size primes and lifted by Chinese remaindering.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::plan::{build_matrix_or_dense, ResultantMatrixPlan};
use super::support::{simplex_support, system_supports, SupportPolicy, SupportTuple};
use crate::error::{Error, Result};
use crate::modp::matrix::{charpoly, lu};
use crate::modp::{self, rational_reconstruct, CrtVec, LargePrimes, MatP, Mont};
use crate::poly::{ExponentVector, PolySystem};
use crate::polytope::Point;
use crate::univariate::UniPoly;

/// The added polynomial u_0 - (...) whose resultant with F is taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eliminant {
    /// u_0 - u_1 x_1 - ... - u_n x_n.
    Linear(Vec<BigInt>),
    /// u_0 - x^mono.
    Monomial(Point),
}

impl Eliminant {
    pub fn linear_i64(u: &[i64]) -> Self {
        Eliminant::Linear(u.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn support(&self, n: usize) -> Vec<Point> {
        match self {
            Eliminant::Linear(_) => simplex_support(n),
            Eliminant::Monomial(m) => {
                let mut s = vec![vec![0; n], m.clone()];
                s.sort();
                s
            }
        }
    }

    /// Constant coefficient of every support point; the origin (the u_0 slot) gets 0.
    fn constants(&self, support: &[Point]) -> Vec<BigInt> {
        support
            .iter()
            .map(|p| {
                if p.iter().all(|&x| x == 0) {
                    return BigInt::zero();
                }
                match self {
                    Eliminant::Linear(u) => {
                        let j = p.iter().position(|&x| x == 1).expect("unit vector");
                        -u[j].clone()
                    }
                    Eliminant::Monomial(_) => BigInt::from(-1),
                }
            })
            .collect()
    }

    fn same_support(&self, other: &Eliminant) -> bool {
        match (self, other) {
            (Eliminant::Linear(_), Eliminant::Linear(_)) => true,
            (Eliminant::Monomial(a), Eliminant::Monomial(b)) => a == b,
            _ => false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PertOptions {
    /// Seed for the lifting, F* and probes.
    pub seed: u64,
    /// Largest number of primes for which the Hadamard bound is honoured; above it
    /// the result is accepted once rational reconstruction stabilises.
    pub max_rigorous_primes: usize,
    /// Hard cap on primes in any mode.
    pub max_primes: usize,
}

impl Default for PertOptions {
    fn default() -> Self {
        PertOptions {
            seed: 0x5eed,
            max_rigorous_primes: 400,
            max_primes: 4000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct PertResult {
    /// Primitive, positive leading coefficient.
    pub h: UniPoly,
    /// The lowest s-order coefficient itself, when lifted under the Hadamard bound.
    pub raw: Option<UniPoly>,
    /// Its s-order.
    pub nu: usize,
    /// All images came from the Schur complement at s = 0.
    pub fast_path: bool,
    pub rigorous: bool,
    pub primes: usize,
    pub bound_bits: f64,
}

/// Schur complement data at s = 0 modulo one prime: det M = det_scaled * det(u_0 I + sum c_b S_b).
#[derive(Clone, Debug)]
pub struct SchurData {
    pub mont: Mont,
    /// Sign times det of the system block, Montgomery form.
    pub det_scaled: u64,
    /// One matrix per point of the added support (zero matrix at the origin slot).
    pub mats: Vec<MatP>,
}

impl SchurData {
    /// -sum_b c_b S_b, whose eigenvalues are the values of the eliminant at the roots.
    pub fn operator(&self, consts: &[u64]) -> MatP {
        let m = &self.mont;
        let k = self.mats[0].rows;
        let mut out = MatP::zeros(k, k);
        for (mat, &c) in self.mats.iter().zip(consts) {
            if c == 0 {
                continue;
            }
            out.add_scaled(m, mat, m.neg(m.to_mont(c)));
        }
        out
    }

    /// Image of det M(0, u_0), ascending plain residues.
    pub fn image(&self, consts: &[u64]) -> Vec<u64> {
        let m = &self.mont;
        let cp = charpoly(m, &self.operator(consts));
        cp.iter().map(|&c| m.from_mont(m.mul(c, self.det_scaled))).collect()
    }
}

struct FastLayout {
    /// u_0 column of each f_0 row.
    k_cols: Vec<usize>,
    /// position of each column inside K (Some) or L (None -> l_pos).
    k_pos: Vec<Option<usize>>,
    l_pos: Vec<Option<usize>>,
    sign: bool,
}

pub struct PertEngine {
    n: usize,
    policy: SupportPolicy,
    plan: ResultantMatrixPlan,
    /// coefficients of the system polynomials on their plan supports
    sys_coeffs: Vec<Vec<BigInt>>,
    fstar: Vec<Vec<i64>>,
    added_support: Vec<Point>,
    origin: usize,
    f0_rows: Vec<usize>,
    sys_rows: Vec<usize>,
    row_sign: bool,
    fast: Option<FastLayout>,
    opts: PertOptions,
}

fn perm_parity(order: &[usize]) -> bool {
    let mut seen = vec![false; order.len()];
    let mut odd = false;
    for i in 0..order.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = order[j];
            len += 1;
        }
        if len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

impl PertEngine {
    pub fn new(
        f: &PolySystem,
        policy: SupportPolicy,
        eliminant: &Eliminant,
        opts: &PertOptions,
    ) -> Result<Self> {
        let n = f.nvars();
        if f.len() != n {
            return Err(Error::Dimension(format!(
                "perturbed resultant needs a square system, got {} polynomials in {} variables",
                f.len(),
                n
            )));
        }
        if f.polys().iter().any(|p| p.is_zero()) {
            return Err(Error::Invalid("zero polynomial in a square system".into()));
        }
        let mut supports = system_supports(f, policy);
        let added_support = eliminant.support(n);
        supports.push(added_support.clone());
        let tuple = SupportTuple::new(n, supports)?;
        let plan = build_matrix_or_dense(&tuple, opts.seed)?;
        let added_support: Vec<Point> = tuple.support(n).to_vec();
        let origin = added_support
            .iter()
            .position(|p| p.iter().all(|&x| x == 0))
            .ok_or_else(|| Error::Invalid("added polynomial must contain a constant term".into()))?;
        let sys_coeffs: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                tuple
                    .support(i)
                    .iter()
                    .map(|pt| f.poly(i).coeff(&ExponentVector::from_i64(pt)))
                    .collect()
            })
            .collect();
        let f0_rows: Vec<usize> = (0..plan.size()).filter(|&r| plan.rows()[r].poly == n).collect();
        let sys_rows: Vec<usize> = (0..plan.size()).filter(|&r| plan.rows()[r].poly != n).collect();
        let order: Vec<usize> = f0_rows.iter().chain(&sys_rows).copied().collect();
        let row_sign = perm_parity(&order);

        let fast = {
            let mut k_cols = Vec::with_capacity(f0_rows.len());
            for &r in &f0_rows {
                let c = plan.rows()[r]
                    .entries
                    .iter()
                    .find(|e| e.1 == origin)
                    .map(|e| e.0)
                    .ok_or_else(|| Error::invariant("f0 row without a u0 entry"))?;
                k_cols.push(c);
            }
            let size = plan.size();
            let mut k_pos = vec![None; size];
            let mut distinct = true;
            for (i, &c) in k_cols.iter().enumerate() {
                if k_pos[c].is_some() {
                    distinct = false;
                }
                k_pos[c] = Some(i);
            }
            if distinct {
                let mut l_pos = vec![None; size];
                let mut next = 0;
                let mut col_order = k_cols.clone();
                for c in 0..size {
                    if k_pos[c].is_none() {
                        l_pos[c] = Some(next);
                        next += 1;
                        col_order.push(c);
                    }
                }
                // col_order[i] = original column at new position i
                Some(FastLayout {
                    k_cols,
                    k_pos,
                    l_pos,
                    sign: perm_parity(&col_order),
                })
            } else {
                None
            }
        };

        let mut engine = PertEngine {
            n,
            policy,
            plan,
            sys_coeffs,
            fstar: Vec::new(),
            added_support,
            origin,
            f0_rows,
            sys_rows,
            row_sign,
            fast,
            opts: opts.clone(),
        };
        engine.choose_fstar()?;
        Ok(engine)
    }

    /// Small pseudo-random positive coefficients on the plan supports, redrawn until
    /// det M(F*, f_0) is nonzero at a random f_0.
    fn choose_fstar(&mut self) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.opts.seed ^ 0xf5_7a12);
        let p = LargePrimes::new().nth(7).unwrap();
        let m = Mont::new(p);
        for _ in 0..16 {
            let fstar: Vec<Vec<i64>> = (0..self.n)
                .map(|i| {
                    (0..self.plan.supports().support(i).len())
                        .map(|_| rng.gen_range(1..=9))
                        .collect()
                })
                .collect();
            let consts: Vec<u64> = (0..self.added_support.len()).map(|_| rng.gen_range(1..p)).collect();
            let u0 = rng.gen_range(1..p);
            let mut mat = MatP::zeros(self.plan.size(), self.plan.size());
            for (r, row) in self.plan.rows().iter().enumerate() {
                for &(c, k) in &row.entries {
                    let v = if row.poly == self.n {
                        if k == self.origin {
                            u0
                        } else {
                            consts[k]
                        }
                    } else {
                        fstar[row.poly][k] as u64
                    };
                    mat.set(r, c, m.to_mont(v));
                }
            }
            if modp::matrix::det(&m, &mat) != 0 {
                self.fstar = fstar;
                return Ok(());
            }
        }
        Err(Error::Degenerate("no perturbation system with nonvanishing resultant matrix found".into()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn policy(&self) -> SupportPolicy {
        self.policy
    }

    pub fn plan(&self) -> &ResultantMatrixPlan {
        &self.plan
    }

    pub fn fstar(&self) -> &[Vec<i64>] {
        &self.fstar
    }

    pub fn f0_rows(&self) -> usize {
        self.f0_rows.len()
    }

    pub fn has_fast_layout(&self) -> bool {
        self.fast.is_some()
    }

    pub fn added_support(&self) -> &[Point] {
        &self.added_support
    }

    fn check_eliminant(&self, e: &Eliminant) -> Result<Vec<BigInt>> {
        let mut sup = e.support(self.n);
        sup.sort();
        if sup != self.added_support {
            return Err(Error::Invalid("eliminant support differs from the engine's".into()));
        }
        if let Eliminant::Linear(u) = e {
            if u.len() != self.n {
                return Err(Error::Dimension("weight vector length differs from n".into()));
            }
        }
        Ok(e.constants(&self.added_support))
    }

    /// log2 of prod over rows of (|M0 row| + |M1 row| + |M2 row|).
    fn bound_bits(&self, consts: &[BigInt]) -> f64 {
        let norm = |v: &mut dyn Iterator<Item = f64>| v.map(|x| x * x).sum::<f64>().sqrt();
        let mut bits = 0.0;
        for i in 0..self.n {
            let a = norm(&mut self.sys_coeffs[i].iter().map(big_to_f64));
            let b = norm(&mut self.fstar[i].iter().map(|&x| x as f64));
            bits += self.plan.rows_of(i) as f64 * (a + b).log2();
        }
        let c = norm(&mut consts.iter().map(big_to_f64));
        bits += self.f0_rows.len() as f64 * (c + 1.0).log2();
        bits
    }

    /// Schur complement data modulo p when the system block is invertible.
    pub fn schur(&self, p: u64) -> Option<SchurData> {
        let layout = self.fast.as_ref()?;
        let m = Mont::new(p);
        let r0 = self.f0_rows.len();
        let r1 = self.sys_rows.len();
        let mut a = MatP::zeros(r1, r1);
        let mut bk = MatP::zeros(r1, r0);
        for (i, &r) in self.sys_rows.iter().enumerate() {
            let row = &self.plan.rows()[r];
            for &(c, k) in &row.entries {
                let v = to_mont_big(&m, &self.sys_coeffs[row.poly][k]);
                if let Some(lp) = layout.l_pos[c] {
                    a.set(i, lp, v);
                } else {
                    bk.set(i, layout.k_pos[c].unwrap(), v);
                }
            }
        }
        let f = lu(&m, &a)?;
        let w = f.solve(&m, &bk);
        let mut det_scaled = f.det(&m);
        if layout.sign != self.row_sign {
            det_scaled = m.neg(det_scaled);
        }
        let one = m.one();
        let mut mats = vec![MatP::zeros(r0, r0); self.added_support.len()];
        for (ri, &r) in self.f0_rows.iter().enumerate() {
            for &(c, k) in &self.plan.rows()[r].entries {
                if k == self.origin {
                    continue;
                }
                let mat = &mut mats[k];
                if let Some(kp) = layout.k_pos[c] {
                    let v = m.add(mat.get(ri, kp), one);
                    mat.set(ri, kp, v);
                } else {
                    let lp = layout.l_pos[c].unwrap();
                    for j in 0..r0 {
                        let v = m.sub(mat.get(ri, j), w.get(lp, j));
                        mat.set(ri, j, v);
                    }
                }
            }
        }
        debug_assert_eq!(layout.k_cols.len(), r0);
        Some(SchurData {
            mont: m,
            det_scaled,
            mats,
        })
    }

    /// (s-order, coefficient of that order as a polynomial in u_0) modulo p, through
    /// evaluation at u_0 = 0..=r0, column compression of the f_0 rows and a
    /// characteristic polynomial of the remaining pencil. None when det M vanishes
    /// identically modulo p.
    pub fn slow_image(&self, p: u64, consts: &[u64]) -> Option<(usize, Vec<u64>)> {
        let m = Mont::new(p);
        let size = self.plan.size();
        let r0 = self.f0_rows.len();
        let r1 = self.sys_rows.len();
        let mut f0_base = vec![vec![0u64; size]; r0];
        for (ri, &r) in self.f0_rows.iter().enumerate() {
            for &(c, k) in &self.plan.rows()[r].entries {
                if k != self.origin {
                    f0_base[ri][c] = m.add(f0_base[ri][c], m.to_mont(consts[k]));
                }
            }
        }
        let u0_col: Vec<usize> = self
            .f0_rows
            .iter()
            .map(|&r| {
                self.plan.rows()[r]
                    .entries
                    .iter()
                    .find(|e| e.1 == self.origin)
                    .unwrap()
                    .0
            })
            .collect();
        let mut y0_base = vec![vec![0u64; size]; r1];
        let mut y1_base = vec![vec![0u64; size]; r1];
        for (i, &r) in self.sys_rows.iter().enumerate() {
            let row = &self.plan.rows()[r];
            for &(c, k) in &row.entries {
                y0_base[i][c] = to_mont_big(&m, &self.sys_coeffs[row.poly][k]);
                y1_base[i][c] = m.neg(m.to_mont(self.fstar[row.poly][k] as u64));
            }
        }

        let mut values: Vec<Vec<u64>> = Vec::with_capacity(r0 + 1);
        for cval in 0..=r0 as u64 {
            let mut f0 = f0_base.clone();
            for (ri, &c) in u0_col.iter().enumerate() {
                f0[ri][c] = m.add(f0[ri][c], m.to_mont(cval));
            }
            let mut y0 = y0_base.clone();
            let mut y1 = y1_base.clone();
            let mut pivot = vec![false; size];
            let mut pivots = Vec::with_capacity(r0);
            let mut scale = m.one();
            let mut singular = false;
            for j in 0..r0 {
                let Some(q) = (0..size).find(|&k| !pivot[k] && f0[j][k] != 0) else {
                    singular = true;
                    break;
                };
                pivot[q] = true;
                pivots.push(q);
                scale = m.mul(scale, f0[j][q]);
                let inv = m.inv(f0[j][q]);
                let rhat: Vec<(usize, u64)> = (0..size)
                    .filter(|&k| !pivot[k] && f0[j][k] != 0)
                    .map(|k| (k, m.mul(f0[j][k], inv)))
                    .collect();
                if rhat.is_empty() {
                    continue;
                }
                let update = |row: &mut Vec<u64>| {
                    let t = row[q];
                    if t != 0 {
                        for &(k, rh) in &rhat {
                            row[k] = m.sub(row[k], m.mul(t, rh));
                        }
                    }
                };
                for row in f0.iter_mut().skip(j + 1) {
                    update(row);
                }
                for row in y0.iter_mut().chain(y1.iter_mut()) {
                    update(row);
                }
            }
            if singular {
                values.push(vec![0; r1 + 1]);
                continue;
            }
            let rest: Vec<usize> = (0..size).filter(|&k| !pivot[k]).collect();
            let col_order: Vec<usize> = pivots.iter().chain(&rest).copied().collect();
            let mut a0 = MatP::zeros(r1, r1);
            let mut a1 = MatP::zeros(r1, r1);
            for i in 0..r1 {
                for (jj, &c) in rest.iter().enumerate() {
                    a0.set(i, jj, y0[i][c]);
                    a1.set(i, jj, y1[i][c]);
                }
            }
            let mut poly = pencil_det(&m, &a0, &a1);
            if perm_parity(&col_order) != self.row_sign {
                scale = m.neg(scale);
            }
            for c in poly.iter_mut() {
                *c = m.from_mont(m.mul(*c, scale));
            }
            poly.resize(r1 + 1, 0);
            values.push(poly);
        }
        let xs: Vec<u64> = (0..=r0 as u64).collect();
        for j in 0..=r1 {
            let ys: Vec<u64> = values.iter().map(|v| v[j]).collect();
            if ys.iter().all(|&y| y == 0) {
                continue;
            }
            let mut coeffs = modp::poly::interpolate(&xs, &ys, p);
            coeffs.resize(r0 + 1, 0);
            return Some((j, coeffs));
        }
        None
    }

    pub fn pert(&self, e: &Eliminant) -> Result<PertResult> {
        Ok(self.pert_many(std::slice::from_ref(e))?.remove(0))
    }

    /// Perturbed resultants for several eliminants sharing this engine's support.
    pub fn pert_many(&self, elims: &[Eliminant]) -> Result<Vec<PertResult>> {
        if let Some(e) = elims.iter().find(|e| !e.same_support(&elims[0])) {
            return Err(Error::Invalid(format!("mixed eliminant supports: {e:?}")));
        }
        let consts: Vec<Vec<BigInt>> = elims.iter().map(|e| self.check_eliminant(e)).collect::<Result<_>>()?;
        let bounds: Vec<f64> = consts.iter().map(|c| self.bound_bits(c)).collect();
        let r0 = self.f0_rows.len();
        let mut images: Vec<Vec<(u64, usize, Vec<u64>)>> = vec![Vec::new(); elims.len()];
        let mut done: Vec<Option<PertResult>> = vec![None; elims.len()];
        let mut fast_failures = 0;
        let mut primes = LargePrimes::new();
        let mut used = 0usize;
        let mut all_fast = vec![true; elims.len()];
        while done.iter().any(|d| d.is_none()) {
            if used >= self.opts.max_primes {
                return Err(Error::Budget(format!(
                    "perturbed resultant did not stabilise within {} primes",
                    self.opts.max_primes
                )));
            }
            let p = primes.next().ok_or_else(|| Error::invariant("ran out of primes"))?;
            used += 1;
            let schur = if self.fast.is_some() && fast_failures < 2 {
                let s = self.schur(p);
                if s.is_none() {
                    fast_failures += 1;
                }
                s
            } else {
                None
            };
            for (ei, c) in consts.iter().enumerate() {
                if done[ei].is_some() {
                    continue;
                }
                let cres: Vec<u64> = c.iter().map(|x| mod_big(x, p)).collect();
                let img = match &schur {
                    Some(s) => Some((0usize, s.image(&cres))),
                    None => {
                        all_fast[ei] = false;
                        self.slow_image(p, &cres)
                    }
                };
                let Some((nu, mut coeffs)) = img else {
                    // det M identically zero modulo p: either p is unlucky or F* failed
                    if images[ei].is_empty() && used > 3 {
                        return Err(Error::Degenerate(
                            "resultant matrix of F - sF* vanishes identically".into(),
                        ));
                    }
                    continue;
                };
                coeffs.resize(r0 + 1, 0);
                images[ei].push((p, nu, coeffs));
                done[ei] = self.try_finish(&images[ei], bounds[ei], all_fast[ei])?;
            }
        }
        Ok(done.into_iter().map(|d| d.unwrap()).collect())
    }

    fn try_finish(
        &self,
        images: &[(u64, usize, Vec<u64>)],
        bound_bits: f64,
        fast: bool,
    ) -> Result<Option<PertResult>> {
        let nu = images.iter().map(|x| x.1).min().unwrap();
        let len = images[0].2.len();
        let total_bits: f64 = images.iter().map(|x| (x.0 as f64).log2()).sum();
        let rigorous_possible = (bound_bits + 1.0) / 61.9 <= self.opts.max_rigorous_primes as f64;
        if rigorous_possible {
            if total_bits <= bound_bits + 1.0 {
                return Ok(None);
            }
            let crt = self.lift(images, nu, len);
            let raw = UniPoly::new(crt.symmetric());
            if raw.is_zero() {
                return Err(Error::Degenerate("perturbed resultant lifted to zero".into()));
            }
            let h = normalize(&raw);
            return Ok(Some(PertResult {
                h,
                raw: Some(raw),
                nu,
                fast_path: fast,
                rigorous: true,
                primes: images.len(),
                bound_bits,
            }));
        }
        // stabilisation: reconstruct the monic normalisation every few primes
        if images.len() < 4 || images.len() % 3 != 0 {
            return Ok(None);
        }
        let crt = self.lift(images, nu, len);
        let cur = monic_reconstruct(&crt);
        let prev_imgs = &images[..images.len() - 3];
        let prev_nu = prev_imgs.iter().map(|x| x.1).min().unwrap();
        if prev_nu != nu {
            return Ok(None);
        }
        let prev = monic_reconstruct(&self.lift(prev_imgs, nu, len));
        match (cur, prev) {
            (Some(a), Some(b)) if a == b => Ok(Some(PertResult {
                h: a,
                raw: None,
                nu,
                fast_path: fast,
                rigorous: false,
                primes: images.len(),
                bound_bits,
            })),
            _ => Ok(None),
        }
    }

    fn lift(&self, images: &[(u64, usize, Vec<u64>)], nu: usize, len: usize) -> CrtVec {
        let mut crt = CrtVec::new(len);
        let zero = vec![0u64; len];
        for (p, pnu, c) in images {
            crt.add(if *pnu == nu { c } else { &zero }, *p);
        }
        crt
    }
}

/// det(Y0 + s Y1) as ascending Montgomery coefficients.
fn pencil_det(m: &Mont, y0: &MatP, y1: &MatP) -> Vec<u64> {
    let k = y0.rows;
    if k == 0 {
        return vec![m.one()];
    }
    if let Some(f) = lu(m, y1) {
        let z = f.solve(m, y0);
        let d = f.det(m);
        let cp = charpoly(m, &z.scaled(m, m.neg(m.one())));
        return cp.iter().map(|&c| m.mul(c, d)).collect();
    }
    for sigma in 1..=(k as u64 + 1) {
        let sm = m.to_mont(sigma);
        let mut r = y0.clone();
        r.add_scaled(m, y1, sm);
        let Some(f) = lu(m, &r) else {
            continue;
        };
        let kk = f.solve(m, y1);
        let d = f.det(m);
        let cp = charpoly(m, &kk.scaled(m, m.neg(m.one())));
        // det(I + tK) = sum c_j t^(k-j), then t = s - sigma
        let rev: Vec<u64> = cp.iter().rev().map(|&c| m.from_mont(m.mul(c, d))).collect();
        let shifted = modp::poly::taylor_shift(&rev, m.p - sigma, m.p);
        let mut out: Vec<u64> = shifted.iter().map(|&c| m.to_mont(c)).collect();
        out.resize(k + 1, 0);
        return out;
    }
    vec![0; k + 1]
}

fn big_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::MAX).abs()
}

fn mod_big(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

fn to_mont_big(m: &Mont, x: &BigInt) -> u64 {
    m.to_mont(mod_big(x, m.p))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn normalize(f: &UniPoly) -> UniPoly {
    let p = f.primitive();
    if p.lc().is_negative() {
        p.neg()
    } else {
        p
    }
}

fn monic_reconstruct(crt: &CrtVec) -> Option<UniPoly> {
    let vals = &crt.values;
    let deg = vals.iter().rposition(|v| !v.is_zero())?;
    let m = &crt.modulus;
    let ext = vals[deg].extended_gcd(m);
    if !ext.gcd.is_one() {
        return None;
    }
    let inv = ext.x.mod_floor(m);
    let mut rats: Vec<BigRational> = Vec::with_capacity(deg + 1);
    for v in &vals[..=deg] {
        let a = (v * &inv).mod_floor(m);
        rats.push(rational_reconstruct(&a, m)?);
    }
    let den = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * &den).to_integer()).collect();
    Some(normalize(&UniPoly::new(ints)))
}
