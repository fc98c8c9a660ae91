//! Reduction modulo primes: explicit density constants, prime windows, root
//! counts over Z/pZ and a prime-window feasibility tester.

use std::f64::consts::LN_2;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::SystemStats;
use crate::error::{Error, Result};
use crate::modp::poly as mp;
use crate::poly::PolySystem;
use crate::rur::{feasibility_check, RurData};
use crate::univariate::{discriminant, is_squarefree, modp_distinct_roots, ModpRoots, UniPoly};
use crate::util::{decimal_digits, log_abs};

/// 1 + 2(n+1)^3 D V_F [σ + log m + 2^{2n+4} D log(D+1)].
pub fn compute_af(n: usize, m: usize, d: u64, v_f: u64, sigma: f64) -> f64 {
    1.0 + nullstellensatz_bound(n, m, d, v_f, sigma)
}

/// Upper bound on log a for a certificate g_1 f_1 + ... + g_m f_m = a.
pub fn nullstellensatz_bound(n: usize, m: usize, d: u64, v_f: u64, sigma: f64) -> f64 {
    let n1 = (n + 1) as f64;
    let d = d as f64;
    let inner = sigma + (m.max(1) as f64).ln() + 2f64.powi(2 * n as i32 + 4) * d * (d + 1.0).ln();
    2.0 * n1.powi(3) * d * v_f as f64 * inner
}

pub fn compute_af_of(f: &PolySystem) -> f64 {
    let s = SystemStats::of(f);
    compute_af(s.n, s.m, s.d, s.v_f, s.sigma)
}

/// 1296((1+log 3)/3 + log 1296)^4.
pub fn t0() -> f64 {
    1296.0 * ((1.0 + 3f64.ln()) / 3.0 + 1296f64.ln()).powi(4)
}

/// Least integer t covered by the window guarantee.
pub const T_THRESHOLD: u64 = 4963041;

#[derive(Clone, Debug, PartialEq)]
pub struct DensityInputs {
    pub n: usize,
    pub m: usize,
    pub d: u64,
    pub v_f: u64,
    pub sigma: f64,
    pub log_disc_g: f64,
    pub sum_log_ai: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityConstants {
    pub a_f: Option<f64>,
    pub big_a_f: BigInt,
    pub b_f: f64,
    pub c_f: f64,
    pub d_f: f64,
    pub t0: f64,
    pub inputs: DensityInputs,
}

pub fn compute_big_af(v_f: u64, log_disc_g: f64, sum_log_ai: f64, n: usize) -> DensityConstants {
    let k = 3f64.sqrt() * (1.0 + 2f64.sqrt());
    let b = 72.0 * k * v_f as f64;
    let c = 24.0 * k * log_disc_g + 2.0;
    let d = 12.0 * v_f as f64 * (log_disc_g + sum_log_ai + n as f64) + 13.0;
    let value = 1296.0 * b * b * b.ln().powi(4) + 36.0 * c * c * c.ln().powi(2) + 2.0 * d * d.ln();
    DensityConstants {
        a_f: None,
        big_a_f: BigInt::from_f64_ceil(value),
        b_f: b,
        c_f: c,
        d_f: d,
        t0: t0(),
        inputs: DensityInputs {
            n,
            m: 0,
            d: 0,
            v_f,
            sigma: 0.0,
            log_disc_g,
            sum_log_ai,
        },
    }
}

trait CeilBig {
    fn from_f64_ceil(x: f64) -> BigInt;
}

impl CeilBig for BigInt {
    fn from_f64_ceil(x: f64) -> BigInt {
        num_traits::FromPrimitive::from_f64(x.ceil()).unwrap_or_default()
    }
}

/// log|Δ_g| for the square-free part g of degree D' of a degree-D polynomial:
/// exact up to degree 60, otherwise D'(D log 2 + log(D'+1) + σ).
pub fn log_disc_squarefree(g: &UniPoly, d: usize) -> Result<f64> {
    if g.deg() == 0 {
        return Ok(0.0);
    }
    if g.deg() <= 60 {
        return Ok(log_abs(&discriminant(g)?));
    }
    let dp = g.deg() as f64;
    Ok(dp * (d as f64 * LN_2 + (dp + 1.0).ln() + log_abs(&g.max_abs_coeff())))
}

/// Both constants for a feasible system with a representation.
pub fn density_constants(f: &PolySystem, r: &RurData) -> Result<DensityConstants> {
    let s = SystemStats::of(f);
    let log_disc = log_disc_squarefree(&r.verified_factor, r.h.deg())?;
    let sum_log_a: f64 = max_log_a(r)?.iter().sum();
    let mut c = compute_big_af(s.v_f, log_disc, sum_log_a, s.n);
    c.a_f = Some(compute_af(s.n, s.m, s.d, s.v_f, s.sigma));
    c.inputs.m = s.m;
    c.inputs.d = s.d;
    c.inputs.sigma = s.sigma;
    Ok(c)
}

fn max_log_a(r: &RurData) -> Result<Vec<f64>> {
    let n = r.u.len();
    let mut out = vec![0.0f64; n];
    for b in r.branches.iter().filter(|b| b.verified.deg() > 0) {
        for (o, a) in out.iter_mut().zip(&b.rational_form()?.a_i) {
            *o = o.max(log_abs(a));
        }
    }
    Ok(out)
}

/// p is coprime to the leading coefficient and to every a_i.
fn representation_defined(r: &RurData, p: u64) -> bool {
    let pb = BigInt::from(p);
    if r.verified_factor.lc().is_multiple_of(&pb) {
        return false;
    }
    r.branches.iter().filter(|b| b.verified.deg() > 0).all(|b| {
        b.rational_form()
            .is_ok_and(|f| f.a_i.iter().all(|a| !a.is_multiple_of(&pb)))
    })
}

pub fn small_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let mut comp = vec![false; limit as usize + 1];
    let mut out = Vec::new();
    for i in 2..=limit as usize {
        if !comp[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= limit as usize {
                comp[j] = true;
                j += i;
            }
        }
    }
    out
}

const SEGMENT: u64 = 1 << 20;

fn sieve_segment(lo: u64, hi: u64, base: &[u64]) -> Vec<u64> {
    let mut mark = vec![true; (hi - lo + 1) as usize];
    for &q in base {
        if q * q > hi {
            break;
        }
        let start = (q * q).max(lo.div_ceil(q) * q);
        let mut j = start;
        while j <= hi {
            mark[(j - lo) as usize] = false;
            j += q;
        }
    }
    mark.iter()
        .enumerate()
        .filter(|(i, &m)| m && lo + *i as u64 >= 2)
        .map(|(i, _)| lo + i as u64)
        .collect()
}

/// Primes in [lo, hi], sieved in independent segments across threads.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < lo || hi < 2 {
        return Vec::new();
    }
    let base = small_primes((hi as f64).sqrt() as u64 + 1);
    let segs: Vec<(u64, u64)> = (0..)
        .map(|k| lo + k * SEGMENT)
        .take_while(|&a| a <= hi)
        .map(|a| (a, (a + SEGMENT - 1).min(hi)))
        .collect();
    let threads = crate::util::worker_threads().min(segs.len().max(1));
    let chunk = segs.len().div_ceil(threads);
    let parts: Vec<Vec<u64>> = std::thread::scope(|sc| {
        let handles: Vec<_> = segs
            .chunks(chunk.max(1))
            .map(|c| {
                let base = &base;
                sc.spawn(move || c.iter().flat_map(|&(a, b)| sieve_segment(a, b, base)).collect::<Vec<u64>>())
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sieve thread")).collect()
    });
    parts.concat()
}

pub fn prime_pi(t: u64) -> u64 {
    primes_in(2, t).len() as u64
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeWindow {
    pub lo: BigInt,
    pub hi: BigInt,
    pub primes_found: Option<u64>,
}

impl PrimeWindow {
    /// {A t^3, ..., A(t+1)^3 - 1}.
    pub fn new(a: &BigInt, t: &BigInt) -> Self {
        let t1 = t + 1u32;
        PrimeWindow {
            lo: a * t * t * t,
            hi: a * &t1 * &t1 * &t1 - 1u32,
            primes_found: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowCount {
    pub window: PrimeWindow,
    pub count: u64,
    pub lemma_bound: u64,
    /// A, t > e^5.
    pub lemma_applies: bool,
}

/// floor(A t^2 / (12 (log t + log A))).
pub fn window_lemma_bound(a: u64, t: u64) -> u64 {
    let (af, tf) = (a as f64, t as f64);
    (af * tf * tf / (12.0 * (tf.ln() + af.ln()))).floor() as u64
}

/// Primes in the open interval (A t^3, A (t+1)^3).
pub fn prime_window_count(a: u64, t: u64, budget: u64) -> Result<WindowCount> {
    if a == 0 || t == 0 {
        return Err(Error::Invalid("window needs A, t >= 1".into()));
    }
    let mut w = PrimeWindow::new(&BigInt::from(a), &BigInt::from(t));
    let (Some(lo), Some(hi)) = (w.lo.to_u64(), w.hi.to_u64()) else {
        return Err(Error::Budget("window endpoints exceed 64 bits".into()));
    };
    if hi - lo + 1 > budget {
        return Err(Error::Budget(format!("window of width {} exceeds budget {budget}", hi - lo + 1)));
    }
    let count = primes_in(lo + 1, hi).len() as u64;
    w.primes_found = Some(count);
    let e5 = 5f64.exp();
    Ok(WindowCount {
        window: w,
        count,
        lemma_bound: if a >= 2 && t >= 2 { window_lemma_bound(a, t) } else { 0 },
        lemma_applies: a as f64 > e5 && t as f64 > e5,
    })
}

/// Σ over primes p ≤ t of the number of distinct roots of f mod p; primes
/// where f vanishes identically are skipped.
pub fn count_nf(f: &UniPoly, t: u64) -> Result<u64> {
    if f.is_zero() {
        return Err(Error::Invalid("zero polynomial".into()));
    }
    let mut total = 0;
    for p in primes_in(2, t) {
        if let ModpRoots::Count(k) = modp_distinct_roots(f, p)? {
            total += k as u64;
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChebotarevReport {
    pub t: u64,
    pub degree: usize,
    pub i_f: usize,
    pub pi_t: u64,
    pub n_f: u64,
    pub log_disc: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
}

/// |i_f π(t) − N_f(t)| against 2 sqrt(t)(D log t + log|Δ_f|) + D log|Δ_f|.
/// The inequality is conditional on GRH; a failure means GRH is false or a bug.
pub fn chebotarev_check(f: &UniPoly, i_f: usize, t: u64) -> Result<ChebotarevReport> {
    if f.deg() == 0 {
        return Err(Error::Invalid("constant polynomial".into()));
    }
    if !is_squarefree(f) {
        return Err(Error::Invalid("polynomial is not square-free".into()));
    }
    if t <= 2 {
        return Err(Error::Invalid("t must exceed 2".into()));
    }
    let pi_t = prime_pi(t);
    let n_f = count_nf(f, t)?;
    let d = f.deg() as f64;
    let log_disc = log_abs(&discriminant(f)?);
    let tf = t as f64;
    let lhs = (i_f as f64 * pi_t as f64 - n_f as f64).abs();
    let rhs = 2.0 * tf.sqrt() * (d * tf.ln() + log_disc) + d * log_disc;
    Ok(ChebotarevReport {
        t,
        degree: f.deg(),
        i_f,
        pi_t,
        n_f,
        log_disc,
        lhs,
        rhs,
        slack: rhs - lhs,
        holds: lhs < rhs,
    })
}

/// Number of roots of F in (Z/pZ)^n by enumeration, stopping after `stop` roots.
pub fn brute_force_roots(f: &PolySystem, p: u64, stop: Option<u64>) -> u64 {
    let n = f.nvars();
    let mut x = vec![0u64; n];
    let mut found = 0;
    loop {
        if f.polys().iter().all(|g| g.eval_mod(&x, p) == 0) {
            found += 1;
            if stop == Some(found) {
                return found;
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return found;
            }
            x[i] += 1;
            if x[i] < p {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// Primes among `primes` at which F mod p has a root.
pub fn bad_primes(f: &PolySystem, primes: &[u64]) -> Vec<u64> {
    primes
        .iter()
        .copied()
        .filter(|&p| brute_force_roots(f, p, Some(1)) > 0)
        .collect()
}

fn enumeration_size(p: u64, n: usize) -> Option<u64> {
    p.checked_pow(n as u32)
}

/// Coordinates of the point over θ modulo p, when every denominator is a unit.
fn lift_point(r: &RurData, theta: u64, p: u64) -> Option<Vec<u64>> {
    r.branches
        .iter()
        .filter(|b| b.verified.deg() > 0 && mp::eval(&b.verified.reduce_mod(p), theta, p) == 0)
        .find_map(|b| b.point_mod(theta, p))
}

#[derive(Clone, Debug, PartialEq)]
pub struct NfCount {
    pub t: u64,
    pub count: u64,
    /// Roots of the verified factor modulo every p ≤ t.
    pub n_h: u64,
    /// Primes counted by enumeration.
    pub excluded: Vec<u64>,
    /// V_F Σ (log a_i + 1).
    pub correction_bound: f64,
    pub consistent: bool,
}

/// Σ over p ≤ t of the roots of F mod p: through the representation when p is
/// coprime to the leading coefficient and every denominator and the verified factor stays square-free mod
/// p, by enumeration of (Z/pZ)^n otherwise (always, when F has no roots).
pub fn count_nf_system(f: &PolySystem, r: &RurData, t: u64, budget: u64) -> Result<NfCount> {
    let v = &r.verified_factor;
    let n = f.nvars();
    let mut count = 0;
    let mut n_h = 0;
    let mut excluded = Vec::new();
    for p in primes_in(2, t) {
        let vp = v.reduce_mod(p);
        if v.deg() > 0 && !vp.is_empty() {
            let k = mp::distinct_root_count(&vp, p) as u64;
            n_h += k;
            if representation_defined(r, p) && mp::is_squarefree(&vp, p) {
                count += k;
                continue;
            }
        }
        match enumeration_size(p, n) {
            Some(s) if s <= budget => {
                excluded.push(p);
                count += brute_force_roots(f, p, None);
            }
            _ => return Err(Error::Budget(format!("enumeration modulo {p} exceeds budget"))),
        }
    }
    let correction_bound = r.v_f as f64 * max_log_a(r)?.iter().map(|l| l + 1.0).sum::<f64>();
    let consistent = (count as f64 - n_h as f64).abs() <= crate::bounds::with_slack(correction_bound);
    Ok(NfCount {
        t,
        count,
        n_h,
        excluded,
        correction_bound,
        consistent,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KoiranMode {
    /// Searches the window prime by prime.
    Desk,
    /// Reports the window and the digit count of its largest candidate only.
    Report,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoiranConfig {
    pub mode: KoiranMode,
    pub a: BigInt,
    pub t_lo: BigInt,
    pub t_hi: BigInt,
    pub seed: u64,
    /// Largest window width searched in desk mode.
    pub budget: u64,
    /// Enumerate (Z/pZ)^n when p^n is at most this.
    pub enumerate_below: u64,
}

impl KoiranConfig {
    pub fn desk(a: u64, t_lo: u64, t_hi: u64, seed: u64) -> Self {
        KoiranConfig {
            mode: KoiranMode::Desk,
            a: BigInt::from(a),
            t_lo: BigInt::from(t_lo),
            t_hi: BigInt::from(t_hi),
            seed,
            budget: 50_000_000,
            enumerate_below: 1 << 16,
        }
    }

    /// A = 8·10^20 and t ∈ {10^7, ..., 10^7 + 2·10^11}, large enough for the 3×3 example; report only.
    pub fn example_report() -> Self {
        let ten = BigInt::from(10);
        KoiranConfig {
            mode: KoiranMode::Report,
            a: BigInt::from(8) * ten.pow(20),
            t_lo: ten.pow(7),
            t_hi: ten.pow(7) + BigInt::from(2) * ten.pow(11),
            seed: 0,
            budget: 0,
            enumerate_below: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct KoiranVerdict {
    pub mode: KoiranMode,
    pub t: BigInt,
    pub window: PrimeWindow,
    pub primes_tested: u64,
    pub witness: Option<u64>,
    /// None in report mode.
    pub feasible: Option<bool>,
    /// Digits of A (t_hi + 1)^3 - 1, the largest candidate over the whole t range.
    pub max_candidate_digits: usize,
}

fn uniform_big(rng: &mut ChaCha8Rng, lo: &BigInt, hi: &BigInt) -> BigInt {
    let span = hi - lo + 1u32;
    let bits = span.bits() + 64;
    let mut x = BigInt::zero();
    let mut got = 0;
    while got < bits {
        x = (x << 32) + BigInt::from(rng.gen::<u32>());
        got += 32;
    }
    lo + x.mod_floor(&span)
}

/// Decides whether F mod p has a root: a root θ of the verified factor lifted
/// through the representation and checked against F, or enumeration for
/// small p.
pub fn has_root_mod(f: &PolySystem, r: Option<&RurData>, p: u64, enumerate_below: u64) -> bool {
    if enumeration_size(p, f.nvars()).is_some_and(|s| s <= enumerate_below) {
        return brute_force_roots(f, p, Some(1)) > 0;
    }
    let Some(r) = r else {
        return false;
    };
    if r.verified_factor.deg() == 0 {
        return false;
    }
    let vp = r.verified_factor.reduce_mod(p);
    if vp.is_empty() {
        return false;
    }
    mp::roots(&vp, p).into_iter().any(|th| {
        lift_point(r, th, p).is_some_and(|x| f.polys().iter().all(|g| g.eval_mod(&x, p) == 0))
    })
}

pub fn koiran_test(f: &PolySystem, cfg: &KoiranConfig) -> Result<KoiranVerdict> {
    if cfg.t_lo > cfg.t_hi {
        return Err(Error::Invalid("empty t range".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let t = uniform_big(&mut rng, &cfg.t_lo, &cfg.t_hi);
    let window = PrimeWindow::new(&cfg.a, &t);
    let max_candidate_digits = decimal_digits(&PrimeWindow::new(&cfg.a, &cfg.t_hi).hi);
    if cfg.mode == KoiranMode::Report {
        return Ok(KoiranVerdict {
            mode: cfg.mode,
            t,
            window,
            primes_tested: 0,
            witness: None,
            feasible: None,
            max_candidate_digits,
        });
    }
    let (Some(lo), Some(hi)) = (window.lo.to_u64(), window.hi.to_u64()) else {
        return Err(Error::Budget("desk window endpoints exceed 64 bits".into()));
    };
    if hi - lo + 1 > cfg.budget {
        return Err(Error::Budget(format!("window of width {} exceeds budget", hi - lo + 1)));
    }
    let rep = feasibility_check(f)?;
    if rep.rur.is_none() && rep.feasible {
        // every polynomial vanishes: any prime works
        let p = primes_in(lo, hi).first().copied();
        return Ok(KoiranVerdict {
            mode: cfg.mode,
            t,
            window,
            primes_tested: p.is_some() as u64,
            witness: p,
            feasible: Some(p.is_some()),
            max_candidate_digits,
        });
    }
    let mut tested = 0;
    let mut witness = None;
    let mut start = lo;
    'outer: while start <= hi {
        let end = (start + SEGMENT - 1).min(hi);
        for p in primes_in(start, end) {
            tested += 1;
            if has_root_mod(f, rep.rur.as_ref(), p, cfg.enumerate_below) {
                witness = Some(p);
                break 'outer;
            }
        }
        start = end + 1;
    }
    let mut window = window;
    window.primes_found = Some(tested);
    Ok(KoiranVerdict {
        mode: cfg.mode,
        t,
        window,
        primes_tested: tested,
        witness,
        feasible: Some(witness.is_some()),
        max_candidate_digits,
    })
}

/// Checks g_1 f_1 + ... + g_m f_m = a exactly.
pub fn verify_certificate(f: &PolySystem, g: &[crate::poly::SparsePoly], a: &BigInt) -> bool {
    if g.len() != f.len() || a.is_zero() {
        return false;
    }
    let n = f.nvars();
    let mut acc = crate::poly::SparsePoly::zero(n);
    for (gi, fi) in g.iter().zip(f.polys()) {
        acc = acc.add(&gi.mul(fi));
    }
    acc.as_constant().is_some_and(|c| &c == a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_system;

    #[test]
    fn af_values() {
        let v = compute_af(1, 2, 1, 1, 3f64.ln());
        assert!((v - (1.0 + 16.0 * (3f64.ln() + 2f64.ln() + 64.0 * 2f64.ln()))).abs() < 1e-9);
        assert!((v - 739.4).abs() < 0.1);
        assert!((compute_af(1, 1, 1, 1, 0.0) - 710.7).abs() < 0.1);
        let big = compute_af(3, 3, 24, 243, 144f64.ln());
        assert!(big.is_finite() && big > compute_af(3, 3, 24, 242, 144f64.ln()));
        assert!((nullstellensatz_bound(1, 2, 1, 1, 0.0) + 1.0 - compute_af(1, 2, 1, 1, 0.0)).abs() < 1e-9);
    }

    #[test]
    fn big_af_values() {
        let c = compute_big_af(1, 0.0, 0.0, 1);
        assert!((c.b_f - 301.07).abs() < 0.01);
        assert_eq!(c.c_f, 2.0);
        assert_eq!(c.d_f, 25.0);
        let direct = 1296.0 * c.b_f.powi(2) * c.b_f.ln().powi(4) + 36.0 * 4.0 * 2f64.ln().powi(2) + 50.0 * 25f64.ln();
        assert_eq!(c.big_a_f, BigInt::from(direct.ceil() as u64));
        assert!((c.t0 - 4963040.506).abs() < 0.01);
        assert_eq!(c.t0.ceil() as u64, T_THRESHOLD);
        let d = compute_big_af(2, 0.0, 0.0, 1);
        assert!(d.b_f.powi(2) * d.b_f.ln().powi(4) > 4.0 * c.b_f.powi(2) * c.b_f.ln().powi(4));
    }

    #[test]
    fn sieve_matches_trial_division() {
        let p = primes_in(1_000_000, 1_003_000);
        let q: Vec<u64> = (1_000_000..=1_003_000).filter(|&x| crate::modp::field::is_prime(x)).collect();
        assert_eq!(p, q);
        assert_eq!(prime_pi(100), 25);
        assert_eq!(prime_pi(1000), 168);
        assert_eq!(primes_in(0, 10), vec![2, 3, 5, 7]);
    }

    #[test]
    fn small_window() {
        let w = prime_window_count(2, 2, 1000).unwrap();
        assert_eq!(w.count, 10);
        assert!(!w.lemma_applies);
        assert!(prime_window_count(150, 150, 10).is_err());
    }

    #[test]
    fn nf_counts() {
        assert_eq!(count_nf(&UniPoly::from_i64(&[1, 0, 1]), 10).unwrap(), 3);
        assert_eq!(count_nf(&UniPoly::from_i64(&[-1, 1]), 10).unwrap(), 4);
        assert_eq!(count_nf(&UniPoly::from_i64(&[1, 0, 1]), 100).unwrap(), 23);
    }

    #[test]
    fn chebotarev_examples() {
        let r = chebotarev_check(&UniPoly::from_i64(&[1, 0, 1]), 1, 100).unwrap();
        assert_eq!(r.lhs, 2.0);
        assert!((r.rhs - (20.0 * (2.0 * 100f64.ln() + 4f64.ln()) + 2.0 * 4f64.ln())).abs() < 1e-9);
        assert!(r.holds);
        let r = chebotarev_check(&UniPoly::from_i64(&[-1, 1]), 1, 100).unwrap();
        assert_eq!(r.lhs, 0.0);
        assert!(chebotarev_check(&UniPoly::from_i64(&[1, 2, 1]), 1, 100).is_err());
    }

    #[test]
    fn system_counts() {
        let f = parse_system("x1 - 2", 1).unwrap();
        let r = feasibility_check(&f).unwrap().rur.unwrap();
        assert_eq!(count_nf_system(&f, &r, 10, 1 << 20).unwrap().count, 4);
        let f = parse_system("x1^2\nx1", 1).unwrap();
        let r = feasibility_check(&f).unwrap().rur.unwrap();
        let c = count_nf_system(&f, &r, 10, 1 << 20).unwrap();
        assert_eq!(c.count, 4);
        assert!(c.consistent);
        let f = parse_system("x1 - 2\nx1 - 3", 1).unwrap();
        let r = feasibility_check(&f).unwrap().rur.unwrap();
        assert_eq!(count_nf_system(&f, &r, 100, 1 << 20).unwrap().count, 0);
    }

    #[test]
    fn koiran_small() {
        let f = parse_system("x1^2\nx1", 1).unwrap();
        let v = koiran_test(&f, &KoiranConfig::desk(2, 10, 20, 1)).unwrap();
        assert_eq!(v.feasible, Some(true));
        let f = parse_system("x1 - 2\nx1 - 3", 1).unwrap();
        let v = koiran_test(&f, &KoiranConfig::desk(2, 10, 20, 1)).unwrap();
        assert_eq!(v.feasible, Some(false));
        let rep = koiran_test(&f, &KoiranConfig::example_report()).unwrap();
        assert_eq!(rep.max_candidate_digits, 55);
        assert_eq!(rep.feasible, None);
    }

    #[test]
    fn certificates() {
        let f = parse_system("x1 - 2\nx1 - 3", 1).unwrap();
        let g = parse_system("1\n-1", 1).unwrap();
        assert!(verify_certificate(&f, g.polys(), &BigInt::from(1)));
        assert!(bad_primes(&f, &small_primes(100)).is_empty());
        let f = parse_system("2*x1 - 1\n2*x1 + 1", 1).unwrap();
        assert_eq!(bad_primes(&f, &small_primes(100)), Vec::<u64>::new());
    }
}
