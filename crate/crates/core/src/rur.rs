//! Rational univariate representations, root verification and root counts.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::modp::matrix::{det as det_p, lu};
use crate::modp::{self, rational_reconstruct, CrtVec, LargePrimes, MatP, Mont};
use crate::poly::{PolySystem, SparsePoly};
use crate::resultant::reduction::UnivariateReduction;
use crate::resultant::{
    default_square_up_set, square_up, univariate_reduction, Eliminant, PertEngine, ReductionOptions,
    SupportPolicy,
};
use crate::univariate::{
    first_subresultant_rows, gcd, rational_roots, real_root_count, squarefree_part, UniPoly,
};

/// num(θ)/den, an element of Q[θ] reduced modulo some polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Frac {
    num: UniPoly,
    den: BigInt,
}

impl Frac {
    fn new(num: UniPoly, den: BigInt) -> Self {
        if num.is_zero() {
            return Frac {
                num,
                den: BigInt::one(),
            };
        }
        let mut g = crate::util::gcd(&num.content(), &den);
        if den.is_negative() {
            g = -g;
        }
        Frac {
            num: UniPoly::new(num.coeffs().iter().map(|c| c / &g).collect()),
            den: den / g,
        }
    }

    fn poly(p: UniPoly) -> Self {
        Frac::new(p, BigInt::one())
    }

    fn zero() -> Self {
        Frac::poly(UniPoly::zero())
    }

    /// Remainder modulo a monic v.
    fn reduce(self, v: &UniPoly) -> Self {
        debug_assert!(v.lc().is_one());
        if self.num.deg() < v.deg() || self.num.is_zero() {
            return self;
        }
        Frac::new(self.num.prem(v), self.den)
    }

    fn mul(&self, o: &Frac, v: &UniPoly) -> Frac {
        Frac::new(self.num.mul(&o.num), &self.den * &o.den).reduce(v)
    }

    fn add(&self, o: &Frac) -> Frac {
        Frac::new(
            self.num.scale(&o.den).add(&o.num.scale(&self.den)),
            &self.den * &o.den,
        )
    }

    fn scale(&self, k: &BigInt) -> Frac {
        Frac::new(self.num.scale(k), self.den.clone())
    }

    fn residues(&self, p: u64, len: usize) -> Option<Vec<u64>> {
        let d = modp::poly::reduce(std::slice::from_ref(&self.den), p);
        let dinv = *d.first().filter(|&&x| x != 0)?;
        let dinv = modp::field::inv_mod(dinv, p);
        let mut r = modp::poly::scale(&self.num.reduce_mod(p), dinv, p);
        if r.len() < len {
            r.resize(len, 0);
        }
        Some(r)
    }
}

/// Change of variable φ = lc(v)·θ, which makes the modulus monic.
struct Monic {
    lc: BigInt,
    v: UniPoly,
}

impl Monic {
    fn new(v: &UniPoly) -> Self {
        let d = v.deg();
        let lc = v.lc();
        let c: Vec<BigInt> = (0..=d)
            .map(|k| {
                if k == d {
                    BigInt::one()
                } else {
                    &v.coeffs()[k] * num_traits::pow(lc.clone(), d - 1 - k)
                }
            })
            .collect();
        Monic {
            lc,
            v: UniPoly::new(c),
        }
    }

    /// A(θ) rewritten in φ and reduced.
    fn to_phi(&self, a: &Frac) -> Frac {
        if a.num.is_zero() {
            return Frac::zero();
        }
        let k = a.num.deg();
        let c: Vec<BigInt> = a
            .num
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, x)| x * num_traits::pow(self.lc.clone(), k - i))
            .collect();
        Frac::new(UniPoly::new(c), &a.den * num_traits::pow(self.lc.clone(), k)).reduce(&self.v)
    }

    fn from_phi(&self, a: &Frac) -> Frac {
        Frac::new(a.num.scale_variable(&self.lc), a.den.clone())
    }
}

/// Numerators N_i with ζ_i = N_i(θ)/v'(θ) at every root θ of `factor`.
#[derive(Clone, Debug)]
pub(crate) struct Branch {
    factor: UniPoly,
    numer: Vec<Frac>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoordinateMethod {
    /// No roots, or one variable.
    Direct,
    /// Simultaneous eigenvectors of the Schur complement operators.
    Krylov,
    /// First subresultants of perturbed resultants at u ∓ αe_i.
    Subresultant,
}

#[derive(Clone, Debug)]
pub(crate) struct Coordinates {
    branches: Vec<Branch>,
    method: CoordinateMethod,
    retries: usize,
}

const MAX_LIFT_PRIMES: usize = 20000;

fn suitable_prime(v: &UniPoly, p: u64) -> Option<Vec<u64>> {
    let vp = v.reduce_mod(p);
    if modp::poly::degree(&vp) != Some(v.deg()) || !modp::poly::is_squarefree(&vp, p) {
        return None;
    }
    Some(vp)
}

fn reconstruct(crt: &CrtVec) -> Option<Frac> {
    let m = &crt.modulus;
    let half = m >> 1usize;
    let bound = half.sqrt();
    let mut den = BigInt::one();
    let mut nums: Vec<BigInt> = Vec::with_capacity(crt.values.len());
    for a in &crt.values {
        let mut x = (a * &den).mod_floor(m);
        if x > half {
            x -= m;
        }
        if x.abs() <= bound {
            nums.push(x);
            continue;
        }
        let r = rational_reconstruct(&x, m)?;
        if &den * r.denom() > bound {
            return None;
        }
        for c in nums.iter_mut() {
            *c *= r.denom();
        }
        nums.push(r.numer().clone());
        den *= r.denom();
    }
    Some(Frac::new(UniPoly::new(nums), den))
}

/// Lifts k polynomials of degree < deg v from images modulo many primes; the
/// closure returns None for unlucky primes. Reconstruction is attempted on a
/// geometric schedule and a candidate is accepted once the next prime's
/// images agree with it.
fn lift_images<F>(v: &UniPoly, k: usize, mut image: F) -> Result<Vec<Frac>>
where
    F: FnMut(u64, &[u64]) -> Option<Vec<Vec<u64>>>,
{
    let d = v.deg();
    let mut crts: Vec<CrtVec> = (0..k).map(|_| CrtVec::new(d)).collect();
    let mut cand: Option<Vec<Frac>> = None;
    let mut next_check = 1;
    let mut misses = 0;
    let mut used = 0;
    for p in LargePrimes::new() {
        let Some(vp) = suitable_prime(v, p) else {
            continue;
        };
        let Some(mut imgs) = image(p, &vp) else {
            misses += 1;
            if misses > 24 && used < misses {
                return Err(Error::Degenerate("too many unlucky primes while lifting".into()));
            }
            continue;
        };
        for g in imgs.iter_mut() {
            g.resize(d, 0);
        }
        if let Some(c) = &cand {
            if c.iter().zip(&imgs).all(|(x, g)| x.residues(p, d).is_some_and(|r| &r == g)) {
                return Ok(cand.unwrap());
            }
            cand = None;
        }
        for (c, g) in crts.iter_mut().zip(&imgs) {
            c.add(g, p);
        }
        used += 1;
        if used >= next_check {
            cand = crts.iter().map(reconstruct).collect();
            next_check = used + used / 4 + 1;
        }
        if used > MAX_LIFT_PRIMES {
            break;
        }
    }
    Err(Error::Budget(format!(
        "coordinate lifting did not stabilise within {MAX_LIFT_PRIMES} primes"
    )))
}

fn numerator_images(gs: Vec<Vec<u64>>, vp: &[u64], p: u64) -> Vec<Vec<u64>> {
    let dv = modp::poly::derivative(vp, p);
    gs.iter().map(|g| modp::poly::mulmod(g, &dv, vp, p)).collect()
}

fn linear_consts(engine: &PertEngine, w: &[BigInt], p: u64) -> Vec<u64> {
    engine
        .added_support()
        .iter()
        .map(|pt| match pt.iter().position(|&x| x != 0) {
            Some(j) => {
                let r = modp::poly::reduce(std::slice::from_ref(&w[j]), p);
                let r = r.first().copied().unwrap_or(0);
                (p - r) % p
            }
            None => 0,
        })
        .collect()
}

/// g_j mod p with X_j = g_j(T), T the Schur operator of u and X_j that of e_j.
fn krylov_image(engine: &PertEngine, u: &[BigInt], p: u64, k: usize, rng: &mut ChaCha8Rng) -> Option<Vec<Vec<u64>>> {
    let s = engine.schur(p)?;
    let m = s.mont;
    let t = s.operator(&linear_consts(engine, u, p));
    if t.rows != k {
        return None;
    }
    let n = engine.n();
    let xs: Vec<MatP> = (0..n)
        .map(|j| {
            let e: Vec<BigInt> = (0..n).map(|i| BigInt::from((i == j) as u8)).collect();
            s.operator(&linear_consts(engine, &e, p))
        })
        .collect();
    for x in &xs {
        if x.mul(&m, &t).a != t.mul(&m, x).a {
            return None;
        }
    }
    let v0: Vec<u64> = (0..k).map(|_| m.to_mont(rng.gen_range(1..p))).collect();
    let mut kry = MatP::zeros(k, k);
    let mut cur = v0.clone();
    for c in 0..k {
        for (r, &x) in cur.iter().enumerate() {
            kry.set(r, c, x);
        }
        cur = t.mul_vec(&m, &cur);
    }
    let f = lu(&m, &kry)?;
    let mut b = MatP::zeros(k, n);
    for (j, x) in xs.iter().enumerate() {
        for (r, y) in x.mul_vec(&m, &v0).into_iter().enumerate() {
            b.set(r, j, y);
        }
    }
    let sol = f.solve(&m, &b);
    Some(
        (0..n)
            .map(|j| (0..k).map(|r| m.from_mont(sol.get(r, j))).collect())
            .collect(),
    )
}

pub(crate) fn krylov_coordinates(engine: &PertEngine, u: &[BigInt], h: &UniPoly) -> Result<Option<Coordinates>> {
    let k = h.deg();
    let mut rng = ChaCha8Rng::seed_from_u64(0x4b72_796c);
    let mut failures = 0;
    let mut probe_ok = false;
    for p in LargePrimes::new().take(8) {
        if suitable_prime(h, p).is_none() {
            continue;
        }
        if krylov_image(engine, u, p, k, &mut rng).is_some() {
            probe_ok = true;
            break;
        }
        failures += 1;
        if failures >= 3 {
            break;
        }
    }
    if !probe_ok {
        return Ok(None);
    }
    let numer = lift_images(h, engine.n(), |p, vp| {
        krylov_image(engine, u, p, k, &mut rng).map(|g| numerator_images(g, vp, p))
    })?;
    Ok(Some(Coordinates {
        branches: vec![Branch {
            factor: h.clone(),
            numer,
        }],
        method: CoordinateMethod::Krylov,
        retries: 0,
    }))
}

/// (α, c): weights u ∓ αe_i and the shift t ↦ t + c.
const RETRIES: [(u64, u64); 5] = [(1, 0), (1, 1), (1, 2), (2, 0), (3, 0)];

struct CoordPlan {
    alpha: u64,
    shift: u64,
    qm: UniPoly,
    qs: UniPoly,
}

enum Image {
    Ok(Vec<u64>),
    /// gcd(R_0, v) modulo p, monic.
    Singular(Vec<u64>),
    Unlucky,
}

fn minor_p(m: &Mont, rows: &[Vec<u64>], col: usize) -> u64 {
    let k = rows.len();
    let mut mat = MatP::zeros(k, k);
    for (i, row) in rows.iter().enumerate() {
        let mut jj = 0;
        for (j, &x) in row.iter().enumerate() {
            if j != col {
                mat.set(i, jj, m.to_mont(x));
                jj += 1;
            }
        }
    }
    m.from_mont(det_p(m, &mat))
}

/// ζ_i mod (v, p) from the first subresultant of q^-(t + c) and q^*(2θ - t - c):
/// their common root is t* = θ - αζ_i - c = -R_1/R_0.
fn subres_image(plan: &CoordPlan, vp: &[u64], p: u64) -> Image {
    let qm = plan.qm.reduce_mod(p);
    let qs = plan.qs.reduce_mod(p);
    let (d1, d2) = (plan.qm.deg(), plan.qs.deg());
    if modp::poly::degree(&qm) != Some(d1) || modp::poly::degree(&qs) != Some(d2) {
        return Image::Unlucky;
    }
    if d1 == 0 || d2 == 0 {
        return Image::Singular(modp::poly::monic(vp, p));
    }
    let m = Mont::new(p);
    let c = plan.shift % p;
    let mut f = modp::poly::taylor_shift(&qm, c, p);
    f.resize(d1 + 1, 0);
    let dd = if d1 == 1 {
        0
    } else if d2 == 1 {
        1
    } else {
        (d1 - 1) * d2
    };
    let mut r0s = Vec::with_capacity(dd + 1);
    let mut r1s = Vec::with_capacity(dd + 1);
    for th in 0..=dd as u64 {
        let a = (2 * th % p + p - c) % p;
        let mut g = modp::poly::taylor_shift(&qs, a, p);
        g.resize(d2 + 1, 0);
        for (j, x) in g.iter_mut().enumerate() {
            if j % 2 == 1 {
                *x = (p - *x) % p;
            }
        }
        let (r0, r1) = if d1 == 1 {
            (f[1], f[0])
        } else if d2 == 1 {
            (g[1], g[0])
        } else {
            let rows = first_subresultant_rows(&f, &g, 0u64);
            let cols = d1 + d2 - 1;
            (minor_p(&m, &rows, cols - 2), minor_p(&m, &rows, cols - 1))
        };
        r0s.push(r0);
        r1s.push(r1);
    }
    let xs: Vec<u64> = (0..=dd as u64).collect();
    let r0 = modp::poly::rem(&modp::poly::interpolate(&xs, &r0s, p), vp, p);
    let r1 = modp::poly::rem(&modp::poly::interpolate(&xs, &r1s, p), vp, p);
    let Some(inv) = modp::poly::inverse_mod(&r0, vp, p) else {
        return Image::Singular(modp::poly::monic(&modp::poly::gcd(&r0, vp, p), p));
    };
    let tstar = modp::poly::sub(&[], &modp::poly::mulmod(&r1, &inv, vp, p), p);
    // θ - c - t*
    let lin = modp::poly::sub(&modp::poly::trim(vec![(p - c) % p, 1]), &tstar, p);
    let ainv = modp::field::inv_mod(plan.alpha % p, p);
    Image::Ok(modp::poly::rem(&modp::poly::scale(&lin, ainv, p), vp, p))
}

struct SubresContext<'a> {
    engine: &'a PertEngine,
    u: &'a [BigInt],
    cache: HashMap<(usize, u64), (UniPoly, UniPoly)>,
    retries: usize,
}

impl SubresContext<'_> {
    fn q_pair(&mut self, i: usize, alpha: u64) -> Result<(UniPoly, UniPoly)> {
        if let Some(q) = self.cache.get(&(i, alpha)) {
            return Ok(q.clone());
        }
        let shifted = |sign: i64| -> Vec<BigInt> {
            let mut w = self.u.to_vec();
            w[i] += BigInt::from(sign * alpha as i64);
            w
        };
        let pm = self.engine.pert(&Eliminant::Linear(shifted(-1)))?;
        let ps = self.engine.pert(&Eliminant::Linear(shifted(1)))?;
        let sq = |h: &UniPoly| -> Result<UniPoly> {
            if h.deg() == 0 {
                Ok(UniPoly::one())
            } else {
                squarefree_part(h)
            }
        };
        let pair = (sq(&pm.h)?, sq(&ps.h)?);
        self.cache.insert((i, alpha), pair.clone());
        Ok(pair)
    }

    fn probe_primes(v: &UniPoly) -> Vec<(u64, Vec<u64>)> {
        LargePrimes::new()
            .filter_map(|p| suitable_prime(v, p).map(|vp| (p, vp)))
            .take(2)
            .collect()
    }

    /// Branches covering the roots of v, or None when a collision cannot be resolved.
    fn resolve(&mut self, v: &UniPoly) -> Result<Option<Vec<Branch>>> {
        let n = self.engine.n();
        let probes = Self::probe_primes(v);
        let mut plans: Vec<CoordPlan> = Vec::with_capacity(n);
        for i in 0..n {
            let mut chosen = None;
            let mut singular: Vec<(CoordPlan, usize)> = Vec::new();
            for (k, &(alpha, shift)) in RETRIES.iter().enumerate() {
                let (qm, qs) = self.q_pair(i, alpha)?;
                let plan = CoordPlan {
                    alpha,
                    shift,
                    qm,
                    qs,
                };
                let mut gdeg = None;
                let mut ok = false;
                for (p, vp) in &probes {
                    match subres_image(&plan, vp, *p) {
                        Image::Ok(_) => ok = true,
                        Image::Singular(g) => gdeg = gdeg.or(modp::poly::degree(&g)),
                        Image::Unlucky => {}
                    }
                }
                if ok {
                    self.retries += k;
                    chosen = Some(plan);
                    break;
                }
                if let Some(d) = gdeg {
                    singular.push((plan, d));
                }
            }
            let Some(plan) = chosen else {
                return self.resolve_failed(v, i, singular);
            };
            plans.push(plan);
        }
        let numer = lift_images(v, n, |p, vp| {
            let mut gs = Vec::with_capacity(n);
            for plan in &plans {
                match subres_image(plan, vp, p) {
                    Image::Ok(g) => gs.push(g),
                    _ => return None,
                }
            }
            Some(numerator_images(gs, vp, p))
        })?;
        Ok(Some(vec![Branch {
            factor: v.clone(),
            numer,
        }]))
    }

    /// Coordinate i failed for every retry on v. Roots where q^-(t) and q^*(2θ - t)
    /// share no root cannot be roots of F and are dropped; otherwise v is split
    /// along the factor where R_0 vanishes.
    fn resolve_failed(&mut self, v: &UniPoly, i: usize, singular: Vec<(CoordPlan, usize)>) -> Result<Option<Vec<Branch>>> {
        let (qm, qs) = self.q_pair(i, 1)?;
        let plan = CoordPlan {
            alpha: 1,
            shift: 0,
            qm,
            qs,
        };
        let probe = Self::probe_primes(v)
            .into_iter()
            .find_map(|(p, vp)| common_root_gcd(&plan, &vp, p).map(|g| modp::poly::degree(&g).unwrap_or(0)));
        if let Some(dc) = probe {
            if dc == 0 {
                return Ok(Some(Vec::new()));
            }
            if dc < v.deg() {
                if let Some(w) = lift_factor(v, dc, |p, vp| common_root_gcd(&plan, vp, p))? {
                    return self.resolve(&w);
                }
            }
        }
        for (plan, d) in singular {
            if d == 0 || d >= v.deg() {
                continue;
            }
            let w = lift_factor(v, d, |p, vp| match subres_image(&plan, vp, p) {
                Image::Singular(g) => Some(g),
                _ => None,
            })?;
            if let Some(w) = w {
                let rest = v
                    .div_exact(&w)
                    .ok_or_else(|| Error::invariant("split factor does not divide"))?
                    .primitive();
                let mut out = Vec::new();
                for piece in [w, rest] {
                    match self.resolve(&piece)? {
                        Some(b) => out.extend(b),
                        None => return Ok(None),
                    }
                }
                return Ok(Some(out));
            }
        }
        Ok(None)
    }
}

/// Monic gcd of v and Res_t(q^-(t), q^*(2θ - t)) modulo p.
fn common_root_gcd(plan: &CoordPlan, vp: &[u64], p: u64) -> Option<Vec<u64>> {
    let qm = plan.qm.reduce_mod(p);
    let qs = plan.qs.reduce_mod(p);
    let (d1, d2) = (plan.qm.deg(), plan.qs.deg());
    if modp::poly::degree(&qm) != Some(d1) || modp::poly::degree(&qs) != Some(d2) {
        return None;
    }
    if d1 == 0 || d2 == 0 {
        return Some(vec![1]);
    }
    let dd = d1 * d2;
    let xs: Vec<u64> = (0..=dd as u64).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&th| {
            let mut g = modp::poly::taylor_shift(&qs, 2 * th % p, p);
            for (j, x) in g.iter_mut().enumerate() {
                if j % 2 == 1 {
                    *x = (p - *x) % p;
                }
            }
            modp::poly::resultant(&qm, &g, p)
        })
        .collect();
    let r = modp::poly::rem(&modp::poly::interpolate(&xs, &ys, p), vp, p);
    Some(modp::poly::monic(&modp::poly::gcd(&r, vp, p), p))
}

/// A degree-d factor of v lifted from monic modular images.
fn lift_factor<F>(v: &UniPoly, d: usize, mut image: F) -> Result<Option<UniPoly>>
where
    F: FnMut(u64, &[u64]) -> Option<Vec<u64>>,
{
    let mut crt = CrtVec::new(d + 1);
    let mut used = 0;
    for p in LargePrimes::new().take(400) {
        let Some(vp) = suitable_prime(v, p) else {
            continue;
        };
        let Some(g) = image(p, &vp) else {
            continue;
        };
        if modp::poly::degree(&g) != Some(d) {
            continue;
        }
        crt.add(&g, p);
        used += 1;
        if let Some(fr) = reconstruct(&crt) {
            let w = fr.num.primitive();
            if w.deg() == d && v.div_exact(&w).is_some() {
                return Ok(Some(w));
            }
        }
        if used > 60 {
            break;
        }
    }
    Ok(None)
}

/// Coordinates of the roots of hbar through first subresultants, splitting hbar
/// where R_0 is not invertible. None signals a collision of the weight vector.
pub(crate) fn subresultant_coordinates(engine: &PertEngine, u: &[BigInt], hbar: &UniPoly) -> Result<Option<Coordinates>> {
    let mut ctx = SubresContext {
        engine,
        u,
        cache: HashMap::new(),
        retries: 0,
    };
    Ok(ctx.resolve(hbar)?.map(|branches| Coordinates {
        branches,
        method: CoordinateMethod::Subresultant,
        retries: ctx.retries,
    }))
}

/// ζ_1 = θ/u_1 for one variable.
fn direct_coordinates(u: &[BigInt], hbar: &UniPoly) -> Coordinates {
    if hbar.deg() == 0 {
        return Coordinates {
            branches: Vec::new(),
            method: CoordinateMethod::Direct,
            retries: 0,
        };
    }
    let mono = Monic::new(hbar);
    let th = Frac::new(UniPoly::t(), u[0].clone());
    let d = Frac::poly(hbar.derivative());
    let prod = mono.to_phi(&th).mul(&mono.to_phi(&d), &mono.v);
    Coordinates {
        branches: vec![Branch {
            factor: hbar.clone(),
            numer: vec![mono.from_phi(&prod)],
        }],
        method: CoordinateMethod::Direct,
        retries: 0,
    }
}

/// True when no root of F has a vanishing coordinate.
pub(crate) fn no_roots_off_torus(f: &PolySystem) -> Result<bool> {
    let n = f.nvars();
    let zero = BigInt::zero();
    for j in 0..n {
        let polys: Vec<SparsePoly> = f
            .polys()
            .iter()
            .map(|p| p.substitute_value(j, &zero).remove_variable(j))
            .collect();
        if n == 1 {
            if polys.iter().all(|p| p.is_zero()) {
                return Ok(false);
            }
            continue;
        }
        let g = PolySystem::new(n - 1, polys)?;
        let opts = ReductionOptions {
            policy: Some(SupportPolicy::Fill),
            ..Default::default()
        };
        if feasibility_check_with(&g, &opts)?.feasible {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact checks cost roughly deg² · (bits in the monic domain) · (total degree);
/// above this the checks run modulo random primes.
const EXACT_VERIFY_LIMIT: f64 = 2e9;

fn exact_verification_cost(f: &PolySystem, b: &Branch) -> f64 {
    let d = b.factor.deg() as f64;
    let lc_bits = b.factor.lc().bits() as f64;
    let bits = b
        .numer
        .iter()
        .map(|x| x.num.max_abs_coeff().bits() + x.den.bits())
        .max()
        .unwrap_or(1) as f64
        + d * lc_bits;
    let total = f.polys().iter().map(|p| p.total_degree()).max().unwrap_or(1).max(1) as f64;
    d * d * bits * total
}

/// Roots of b at which (N_1/b', ..., N_n/b') is a root of F with u·ζ = θ, and
/// whether the answer was reached in exact arithmetic.
fn verified_part(f: &PolySystem, u: &[BigInt], b: &Branch) -> Result<(UniPoly, bool)> {
    if exact_verification_cost(f, b) <= EXACT_VERIFY_LIMIT {
        Ok((exact_verified_part(f, u, b)?, true))
    } else {
        Ok((modular_verified_part(f, u, b)?, false))
    }
}

fn exact_verified_part(f: &PolySystem, u: &[BigInt], b: &Branch) -> Result<UniPoly> {
    let n = f.nvars();
    let mono = Monic::new(&b.factor);
    let v = &mono.v;
    let d = mono.to_phi(&Frac::poly(b.factor.derivative()));
    let numer: Vec<Frac> = b.numer.iter().map(|x| mono.to_phi(x)).collect();
    let mut checks: Vec<UniPoly> = Vec::with_capacity(f.len() + 1);
    let th = mono.to_phi(&Frac::poly(UniPoly::t()));
    let mut p0 = th.mul(&d, v).scale(&BigInt::from(-1));
    for (i, x) in numer.iter().enumerate() {
        p0 = p0.add(&x.scale(&u[i]));
    }
    checks.push(p0.reduce(v).num);

    let mut max_deg = vec![0usize; n];
    let mut max_total = 0usize;
    for p in f.polys() {
        max_total = max_total.max(p.total_degree() as usize);
        for (e, _) in p.terms() {
            for (i, &x) in e.0.iter().enumerate() {
                max_deg[i] = max_deg[i].max(x as usize);
            }
        }
    }
    let powers = |base: &Frac, k: usize| -> Vec<Frac> {
        let mut out = vec![Frac::poly(UniPoly::one())];
        for _ in 0..k {
            let next = out.last().unwrap().mul(base, v);
            out.push(next);
        }
        out
    };
    let npow: Vec<Vec<Frac>> = numer.iter().zip(&max_deg).map(|(x, &k)| powers(x, k)).collect();
    let dpow = powers(&d, max_total);
    for p in f.polys() {
        let total = p.total_degree() as usize;
        let mut acc = Frac::zero();
        for (e, c) in p.terms() {
            let mut term = Frac::new(UniPoly::constant(c.clone()), BigInt::one());
            for (i, &x) in e.0.iter().enumerate() {
                if x > 0 {
                    term = term.mul(&npow[i][x as usize], v);
                }
            }
            term = term.mul(&dpow[total - e.degree() as usize], v);
            acc = acc.add(&term);
        }
        checks.push(acc.reduce(v).num);
    }
    let mut w = v.clone();
    for c in checks {
        if w.deg() == 0 {
            break;
        }
        if !c.is_zero() {
            w = gcd(&w, &c);
        }
    }
    if w.deg() == 0 {
        return Ok(UniPoly::one());
    }
    Ok(mono.from_phi(&Frac::poly(w)).num.primitive())
}

/// P_0 = Σ u_i N_i − θ v' and P_k = v'^{deg f_k} f_k(N/v') modulo (v, p).
fn check_images(f: &PolySystem, u: &[BigInt], numer: &[Frac], p: u64, vp: &[u64]) -> Option<Vec<Vec<u64>>> {
    use modp::poly as mp;
    let dv = mp::rem(&mp::derivative(vp, p), vp, p);
    let xs: Vec<Vec<u64>> = numer
        .iter()
        .map(|x| x.residues(p, 0).map(|r| mp::rem(&r, vp, p)))
        .collect::<Option<_>>()?;
    let th = mp::rem(&[0, 1], vp, p);
    let mut p0 = mp::sub(&[], &mp::mulmod(&th, &dv, vp, p), p);
    for (x, ui) in xs.iter().zip(u) {
        let c = mp::reduce(std::slice::from_ref(ui), p).first().copied().unwrap_or(0);
        p0 = mp::add(&p0, &mp::scale(x, c, p), p);
    }
    let mut out = vec![mp::trim(p0)];
    let powers = |base: &[u64], k: usize| -> Vec<Vec<u64>> {
        let mut acc = vec![vec![1u64]];
        for _ in 0..k {
            let next = mp::mulmod(acc.last().unwrap(), base, vp, p);
            acc.push(next);
        }
        acc
    };
    let n = xs.len();
    let mut max_deg = vec![0usize; n];
    let mut max_total = 0;
    for q in f.polys() {
        max_total = max_total.max(q.total_degree() as usize);
        for (e, _) in q.terms() {
            for (i, &k) in e.0.iter().enumerate() {
                max_deg[i] = max_deg[i].max(k as usize);
            }
        }
    }
    let xpow: Vec<Vec<Vec<u64>>> = xs.iter().zip(&max_deg).map(|(x, &k)| powers(x, k)).collect();
    let dpow = powers(&dv, max_total);
    for q in f.polys() {
        let total = q.total_degree() as usize;
        let mut acc: Vec<u64> = Vec::new();
        for (e, c) in q.terms() {
            let cm = mp::reduce(std::slice::from_ref(c), p).first().copied().unwrap_or(0);
            let mut term = mp::scale(&dpow[total - e.degree() as usize], cm, p);
            for (i, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    term = mp::mulmod(&term, &xpow[i][k as usize], vp, p);
                }
            }
            acc = mp::add(&acc, &term, p);
        }
        out.push(mp::trim(acc));
    }
    Some(out)
}

fn verification_gcd(checks: Vec<Vec<u64>>, vp: &[u64], p: u64) -> Vec<u64> {
    let mut g = modp::poly::monic(vp, p);
    for c in checks {
        if modp::poly::degree(&g) == Some(0) {
            break;
        }
        if !c.is_empty() {
            g = modp::poly::gcd(&g, &c, p);
        }
    }
    g
}

/// Primes drawn for modular verification.
const VERIFY_PRIMES: usize = 4;

fn random_prime(rng: &mut ChaCha8Rng) -> u64 {
    loop {
        let c = rng.gen_range((1u64 << 61)..(1u64 << 62)) | 1;
        if modp::is_prime(c) {
            return c;
        }
    }
}

/// The verified part from images modulo seeded random 62-bit primes: a
/// nonzero check survives a random prime only if the prime divides its
/// numerator content, which has at most (bits / 61) prime factors.
fn modular_verified_part(f: &PolySystem, u: &[BigInt], b: &Branch) -> Result<UniPoly> {
    let v = &b.factor;
    let mut rng = ChaCha8Rng::seed_from_u64(0x7665_7269_6679);
    let image = |p: u64, vp: &[u64]| check_images(f, u, &b.numer, p, vp).map(|c| verification_gcd(c, vp, p));
    let mut degs = Vec::new();
    for _ in 0..64 {
        let p = random_prime(&mut rng);
        let Some(vp) = suitable_prime(v, p) else {
            continue;
        };
        if let Some(g) = image(p, &vp) {
            degs.push(modp::poly::degree(&g).unwrap_or(0));
            if degs.len() == VERIFY_PRIMES {
                break;
            }
        }
    }
    let Some(&d) = degs.iter().min() else {
        return Err(Error::Degenerate("no prime admits a modular verification".into()));
    };
    if d == v.deg() {
        return Ok(v.primitive());
    }
    if d == 0 {
        return Ok(UniPoly::one());
    }
    let w = lift_factor(v, d, image)?
        .ok_or_else(|| Error::Degenerate("the verified factor could not be lifted".into()))?;
    let mut confirmed = 0;
    for _ in 0..64 {
        let p = random_prime(&mut rng);
        let (Some(vp), Some(wp)) = (suitable_prime(v, p), suitable_prime(&w, p)) else {
            continue;
        };
        let Some(checks) = check_images(f, u, &b.numer, p, &vp) else {
            continue;
        };
        if checks.iter().any(|c| !modp::poly::rem(c, &wp, p).is_empty()) {
            return Err(Error::invariant("lifted verified factor fails a modular check"));
        }
        confirmed += 1;
        if confirmed == VERIFY_PRIMES {
            return Ok(w);
        }
    }
    Err(Error::Degenerate("no prime confirms the verified factor".into()))
}

/// g_i = N_i / b' modulo w as h_i / a_i.
fn conversion_check_cost(gs: &[Frac], w: &UniPoly) -> f64 {
    let d = w.deg() as f64;
    let bits = gs.iter().map(|g| g.num.max_abs_coeff().bits() + g.den.bits()).max().unwrap_or(1) as f64
        + d * w.lc().bits() as f64;
    d * d * bits
}

fn convert(numer: &[Frac], factor: &UniPoly, w: &UniPoly) -> Result<RationalForm> {
    let n = numer.len();
    if w.deg() == 0 {
        return Ok(RationalForm {
            h_i: vec![UniPoly::zero(); n],
            a_i: vec![BigInt::one(); n],
        });
    }
    let d = factor.derivative();
    let gs = lift_images(w, n, |p, wp| {
        let dp = modp::poly::rem(&d.reduce_mod(p), wp, p);
        let inv = modp::poly::inverse_mod(&dp, wp, p)?;
        let mut out = Vec::with_capacity(n);
        for x in numer {
            let np = modp::poly::rem(&x.residues(p, 0)?, wp, p);
            out.push(modp::poly::mulmod(&np, &inv, wp, p));
        }
        Some(out)
    })?;
    if conversion_check_cost(&gs, w) <= EXACT_VERIFY_LIMIT {
        let mono = Monic::new(w);
        let dphi = mono.to_phi(&Frac::poly(d));
        for (g, x) in gs.iter().zip(numer) {
            let lhs = mono.to_phi(g).mul(&dphi, &mono.v);
            let rhs = mono.to_phi(x);
            let diff = lhs.add(&rhs.scale(&BigInt::from(-1))).reduce(&mono.v);
            if !diff.num.is_zero() {
                return Err(Error::invariant("lifted coordinate fails the exact check"));
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x636f_6e76);
        let mut checked = 0;
        for _ in 0..64 {
            let p = random_prime(&mut rng);
            let Some(wp) = suitable_prime(w, p) else {
                continue;
            };
            let dp = modp::poly::rem(&d.reduce_mod(p), &wp, p);
            for (g, x) in gs.iter().zip(numer) {
                let (Some(gp), Some(xp)) = (g.residues(p, 0), x.residues(p, 0)) else {
                    continue;
                };
                let lhs = modp::poly::mulmod(&modp::poly::rem(&gp, &wp, p), &dp, &wp, p);
                let rhs = modp::poly::rem(&xp, &wp, p);
                if modp::poly::sub(&lhs, &rhs, p).iter().any(|&c| c != 0) {
                    return Err(Error::invariant("lifted coordinate fails the modular check"));
                }
            }
            checked += 1;
            if checked == VERIFY_PRIMES {
                break;
            }
        }
        if checked < VERIFY_PRIMES {
            return Err(Error::Degenerate("no prime admits a check of the lifted coordinates".into()));
        }
    }
    let mut h_i = Vec::with_capacity(n);
    let mut a_i = Vec::with_capacity(n);
    for g in gs {
        h_i.push(g.num);
        a_i.push(g.den);
    }
    Ok(RationalForm { h_i, a_i })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalForm {
    pub h_i: Vec<UniPoly>,
    pub a_i: Vec<BigInt>,
}

#[derive(Clone, Debug)]
pub struct RurBranch {
    /// Square-free factor of h whose roots this branch parametrises.
    pub factor: UniPoly,
    /// Roots of `factor` that are genuine roots of F.
    pub verified: UniPoly,
    numer: Vec<Frac>,
    form: OnceLock<std::result::Result<RationalForm, Error>>,
}

impl RurBranch {
    /// ζ_i = h_i(θ)/a_i at every root θ of `verified`, computed on first use.
    pub fn rational_form(&self) -> Result<&RationalForm> {
        self.form
            .get_or_init(|| convert(&self.numer, &self.factor, &self.verified))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// ζ = N(θ)/factor'(θ) at a rational root θ of `factor`.
    pub fn point_at(&self, theta: &BigRational) -> Option<Vec<BigRational>> {
        let dv = self.factor.derivative().eval_rational(theta);
        if dv.is_zero() {
            return None;
        }
        Some(
            self.numer
                .iter()
                .map(|x| x.num.eval_rational(theta) / (BigRational::from_integer(x.den.clone()) * &dv))
                .collect(),
        )
    }

    /// ζ modulo p at a root θ of the factor modulo p; None when p meets a denominator.
    pub fn point_mod(&self, theta: u64, p: u64) -> Option<Vec<u64>> {
        use modp::poly as mp;
        let dv = mp::eval(&mp::derivative(&self.factor.reduce_mod(p), p), theta, p);
        if dv == 0 {
            return None;
        }
        let inv = modp::field::inv_mod(dv, p);
        self.numer
            .iter()
            .map(|x| {
                x.residues(p, 0)
                    .map(|r| modp::field::mul_mod(mp::eval(&r, theta, p), inv, p))
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct RurData {
    pub u: Vec<BigInt>,
    pub h: UniPoly,
    pub hbar: UniPoly,
    pub v_f: u64,
    pub epsilon: u64,
    pub policy: SupportPolicy,
    pub method: CoordinateMethod,
    pub retries: usize,
    pub branches: Vec<RurBranch>,
    pub verified_factor: UniPoly,
    /// Every verified factor was certified in exact arithmetic rather than
    /// modulo random primes.
    pub exact_verification: bool,
    /// Every root of F was seen (lowest s-order zero).
    pub finite_certificate: bool,
}

impl RurData {
    /// The branch with the largest verified factor.
    pub fn main_branch(&self) -> Option<&RurBranch> {
        self.branches.iter().max_by_key(|b| b.verified.deg())
    }

    /// Exact coordinates at a rational root θ of the verified factor.
    pub fn point_at(&self, theta: &BigRational) -> Option<Vec<BigRational>> {
        let b = self.branches.iter().find(|b| b.verified.vanishes_at(theta))?;
        b.point_at(theta)
    }
}

fn rur_from_reduction(check: &PolySystem, red: &UnivariateReduction) -> Result<RurData> {
    let n = check.nvars();

    let coords = if red.hbar.deg() == 0 || n == 1 {
        direct_coordinates(&red.u, &red.hbar)
    } else if let Some(c) = &red.coordinates {
        c.clone()
    } else {
        let k = if red.simple {
            krylov_coordinates(red.engine(), &red.u, &red.hbar)?
        } else {
            None
        };
        match k {
            Some(k) => k,
            None => subresultant_coordinates(red.engine(), &red.u, &red.hbar)?
                .ok_or_else(|| Error::invariant("weight vector collides on the chosen epsilon"))?,
        }
    };
    let mut branches = Vec::with_capacity(coords.branches.len());
    let mut verified_factor = UniPoly::one();
    let mut exact = true;
    for b in &coords.branches {
        let (w, ex) = verified_part(check, &red.u, b)?;
        exact &= ex;

        verified_factor = verified_factor.mul(&w);
        branches.push(RurBranch {
            factor: b.factor.clone(),
            verified: w,
            numer: b.numer.clone(),
            form: OnceLock::new(),
        });
    }
    let finite = red.pert.nu == 0
        && (red.policy == SupportPolicy::Fill || no_roots_off_torus(check).unwrap_or(false));
    Ok(RurData {
        u: red.u.clone(),
        h: red.h.clone(),
        hbar: red.hbar.clone(),
        v_f: red.v_f,
        epsilon: red.epsilon,
        policy: red.policy,
        method: coords.method,
        retries: coords.retries,
        branches,
        verified_factor: verified_factor.primitive(),
        exact_verification: exact,
        finite_certificate: finite,
    })
}

/// Rational univariate representation of a square system.
pub fn compute_rur(f: &PolySystem, opts: &ReductionOptions) -> Result<RurData> {
    let red = univariate_reduction(f, opts)?;
    rur_from_reduction(f, &red)
}

/// Recomputes the verified factor of r against F.
pub fn verify_roots(f: &PolySystem, r: &RurData) -> Result<UniPoly> {
    let mut out = UniPoly::one();
    for b in &r.branches {
        let br = Branch {
            factor: b.factor.clone(),
            numer: b.numer.clone(),
        };
        out = out.mul(&verified_part(f, &r.u, &br)?.0);
    }
    Ok(out.primitive())
}

/// Checks h_i(θ)/a_i against F directly, modulo each branch's verified factor.
pub fn verify_representation(f: &PolySystem, r: &RurData) -> Result<bool> {
    for b in &r.branches {
        if b.verified.deg() == 0 {
            continue;
        }
        let form = b.rational_form()?;
        let mono = Monic::new(&b.verified);
        let v = &mono.v;
        let coords: Vec<Frac> = form
            .h_i
            .iter()
            .zip(&form.a_i)
            .map(|(h, a)| mono.to_phi(&Frac::new(h.clone(), a.clone())))
            .collect();
        for p in f.polys() {
            let mut acc = Frac::zero();
            for (e, c) in p.terms() {
                let mut term = Frac::poly(UniPoly::constant(c.clone()));
                for (i, &x) in e.0.iter().enumerate() {
                    for _ in 0..x {
                        term = term.mul(&coords[i], v);
                    }
                }
                acc = acc.add(&term);
            }
            if !acc.reduce(v).num.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct FeasibilityReport {
    pub feasible: bool,
    /// Why the answer was reached without a representation, if so.
    pub shortcut: Option<&'static str>,
    /// The square system that was reduced.
    pub squared: Option<PolySystem>,
    pub rur: Option<RurData>,
}

impl FeasibilityReport {
    pub fn verified_factor(&self) -> Option<&UniPoly> {
        self.rur.as_ref().map(|r| &r.verified_factor)
    }
}

pub fn feasibility_check(f: &PolySystem) -> Result<FeasibilityReport> {
    feasibility_check_with(f, &ReductionOptions::default())
}

/// Square-up offsets tried before giving up.
const SQUARE_UP_TRIES: usize = 4;

pub fn feasibility_check_with(f: &PolySystem, opts: &ReductionOptions) -> Result<FeasibilityReport> {
    let n = f.nvars();
    let polys: Vec<SparsePoly> = f.polys().iter().filter(|p| !p.is_zero()).cloned().collect();
    if polys.is_empty() {
        return Ok(FeasibilityReport {
            feasible: true,
            shortcut: Some("all polynomials vanish"),
            squared: None,
            rur: None,
        });
    }
    if polys.iter().any(|p| p.as_constant().is_some()) {
        return Ok(FeasibilityReport {
            feasible: false,
            shortcut: Some("nonzero constant polynomial"),
            squared: None,
            rur: None,
        });
    }
    let g = PolySystem::new(n, polys)?;
    let tries = if g.len() > n { SQUARE_UP_TRIES } else { 1 };
    let set = default_square_up_set(&g);
    let mut last_err = None;
    for offset in 0..tries {
        let mut s = set.clone();
        // later attempts extend the value set so every offset has n values
        s.extend((set.len() as i64 + 1)..=(set.len() + offset) as i64);
        let attempt = square_up(&g, &s, offset).and_then(|sq| {
            let red = univariate_reduction(&sq, opts)?;
            Ok((rur_from_reduction(&g, &red)?, sq))
        });
        match attempt {
            Ok((rur, sq)) => {
                return Ok(FeasibilityReport {
                    feasible: rur.verified_factor.deg() > 0,
                    shortcut: None,
                    squared: Some(sq),
                    rur: Some(rur),
                })
            }
            Err(e @ (Error::Degenerate(_) | Error::Invariant(_))) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.unwrap())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCounts {
    pub complex: usize,
    pub real: usize,
    pub rational: usize,
}

/// Distinct complex, real and rational roots of a system with finitely many roots.
/// `finite` is consulted when the representation itself does not certify finiteness.
pub fn count_roots_with<D>(f: &PolySystem, opts: &ReductionOptions, finite: D) -> Result<(RootCounts, FeasibilityReport)>
where
    D: FnOnce(&PolySystem) -> Result<bool>,
{
    let rep = feasibility_check_with(f, opts)?;
    let Some(rur) = &rep.rur else {
        if rep.feasible {
            return Err(Error::Invalid("every point is a root".into()));
        }
        return Ok((
            RootCounts {
                complex: 0,
                real: 0,
                rational: 0,
            },
            rep,
        ));
    };
    let certified = rur.finite_certificate && f.is_square();
    if !certified && rur.verified_factor.deg() > 0 && !finite(f)? {
        return Err(Error::Invalid("the system has infinitely many roots".into()));
    }
    let v = &rur.verified_factor;
    let complex = v.deg();
    let real = if complex == 0 { 0 } else { real_root_count(v) };
    let mut rational = 0;
    if complex > 0 {
        for th in rational_roots(v) {
            let pt = rur
                .point_at(&th)
                .ok_or_else(|| Error::invariant("rational root outside every branch"))?;
            if f.evaluate(&pt).iter().any(|x| !x.is_zero()) {
                return Err(Error::invariant("rational point does not satisfy the system"));
            }
            rational += 1;
        }
    }
    Ok((
        RootCounts {
            complex,
            real,
            rational,
        },
        rep,
    ))
}

/// Root counts; positive-dimensional inputs are detected with the dimension module.
pub fn count_roots(f: &PolySystem) -> Result<RootCounts> {
    Ok(count_roots_with(f, &ReductionOptions::default(), |g| {
        Ok(crate::dimension::compute_dimension(g, &Default::default())?.dimension <= 0)
    })?
    .0)
}

#[derive(Clone, Debug)]
pub struct RurHeightReport {
    /// Natural-log bound on log a_i and σ(h_i).
    pub bound: f64,
    pub max_log_a: f64,
    pub max_sigma_h: f64,
    pub sigma_h_f: f64,
    pub max_deg_h_i: usize,
    pub holds: bool,
}

/// Compares log a_i and σ(h_i) with
/// V_F((V_F-1)(log(V_F (V_F+1)^4 64^V_F) + 2σ(h_F)) + σ(h_F)) + σ(h_F) + log V_F.
pub fn rur_height_report(r: &RurData) -> Result<RurHeightReport> {
    let sigma = |p: &UniPoly| crate::util::log_abs(&p.max_abs_coeff());
    let vf = r.v_f.max(1) as f64;
    let s = sigma(&r.h);
    let inner = (vf.ln() + 4.0 * (vf + 1.0).ln() + vf * 64f64.ln()) + 2.0 * s;
    let bound = vf * ((vf - 1.0) * inner + s) + s + vf.ln();
    let mut max_log_a = 0.0f64;
    let mut max_sigma = 0.0f64;
    let mut max_deg = 0;
    for b in &r.branches {
        let form = b.rational_form()?;
        for (h, a) in form.h_i.iter().zip(&form.a_i) {
            max_log_a = max_log_a.max(crate::util::log_abs(a));
            if !h.is_zero() {
                max_sigma = max_sigma.max(sigma(h));
                max_deg = max_deg.max(h.deg());
            }
        }
    }
    let slack = 1.0 + 1e-9;
    let holds = max_log_a <= bound * slack && max_sigma <= bound * slack && max_deg as u64 <= r.v_f;
    let rep = RurHeightReport {
        bound,
        max_log_a,
        max_sigma_h: max_sigma,
        sigma_h_f: s,
        max_deg_h_i: max_deg,
        holds,
    };
    if !holds {
        return Err(Error::invariant(format!("representation height bound violated: {rep:?}")));
    }
    Ok(rep)
}

/// a is the least positive integer with a·g integral: no prime factor can be removed.
pub fn denominators_minimal(r: &RurData) -> Result<bool> {
    for b in &r.branches {
        let form = b.rational_form()?;
        let ok = form.h_i.iter().zip(&form.a_i).all(|(h, a)| {
            a.is_positive() && (h.is_zero() && a.is_one() || h.content().gcd(a).is_one())
        });
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_system;

    fn sys(t: &str, n: usize) -> PolySystem {
        parse_system(t, n).unwrap()
    }

    #[test]
    fn frac_reduction_is_exact() {
        let v = UniPoly::from_i64(&[-2, 0, 1]);
        let a = Frac::poly(UniPoly::from_i64(&[0, 1]));
        let sq = a.mul(&a, &v);
        assert_eq!(sq, Frac::poly(UniPoly::from_i64(&[2])));
    }

    #[test]
    fn monic_change_of_variable_round_trips() {
        let v = UniPoly::from_i64(&[3, -1, 2]);
        let m = Monic::new(&v);
        assert!(m.v.lc().is_one());
        let a = Frac::poly(UniPoly::from_i64(&[1, 5]));
        assert_eq!(m.from_phi(&m.to_phi(&a)), a);
    }

    #[test]
    fn one_variable() {
        let r = compute_rur(&sys("x1^2 - 3*x1 + 2", 1), &Default::default()).unwrap();
        assert_eq!(r.verified_factor.deg(), 2);
        let form = r.main_branch().unwrap().rational_form().unwrap();
        assert_eq!(form.h_i, vec![UniPoly::t()]);
        assert_eq!(form.a_i, vec![BigInt::one()]);
    }

    #[test]
    fn two_points() {
        let f = sys("x1 - 2\nx2 - 3", 2);
        let r = compute_rur(&f, &Default::default()).unwrap();
        assert_eq!(r.verified_factor.deg(), 1);
        let th = rational_roots(&r.verified_factor)[0].clone();
        let pt = r.point_at(&th).unwrap();
        assert_eq!(pt, vec![BigRational::from_integer(2.into()), BigRational::from_integer(3.into())]);
        assert!(verify_representation(&f, &r).unwrap());
    }

    #[test]
    fn infeasible_examples() {
        for t in ["x1\nx1 - 1", "x1 + x2 - 1\nx1 + x2 - 2"] {
            let f = sys(t, 2);
            assert!(!feasibility_check(&f).unwrap().feasible, "{t}");
        }
        assert!(!feasibility_check(&sys("x1\nx1 - 1", 1)).unwrap().feasible);
        assert!(feasibility_check(&sys("x1^2 - 1\nx1 - 1", 1)).unwrap().feasible);
    }

    #[test]
    fn counts() {
        let c = count_roots(&sys("x1^2 - 3*x1 + 2", 1)).unwrap();
        assert_eq!((c.complex, c.real, c.rational), (2, 2, 2));
        let c = count_roots(&sys("x1^2 + 1", 1)).unwrap();
        assert_eq!((c.complex, c.real, c.rational), (2, 0, 0));
        let c = count_roots(&sys("x1^2 - 2\nx2 - 1", 2)).unwrap();
        assert_eq!((c.complex, c.real, c.rational), (2, 2, 0));
    }
}
