//! Univariate reduction h_F, monomial reduction and squaring up.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::pert::{Eliminant, PertEngine, PertOptions, PertResult};
use super::support::SupportPolicy;
use crate::error::{Error, Result};
use crate::poly::{PolySystem, SparsePoly};
use crate::polytope::v_f;
use crate::rur::{self, Coordinates};
use crate::univariate::{squarefree_part, UniPoly};

#[derive(Clone, Debug, Default)]
pub struct ReductionOptions {
    /// None picks the toric supports when they provably see every root, else fill.
    pub policy: Option<SupportPolicy>,
    pub pert: PertOptions,
}

/// Input of [`compute_pert`].
#[derive(Clone, Debug)]
pub struct PertConfig {
    pub system: PolySystem,
    pub policy: SupportPolicy,
    pub eliminant: Eliminant,
    pub options: PertOptions,
}

pub fn compute_pert(cfg: &PertConfig) -> Result<PertResult> {
    let engine = PertEngine::new(&cfg.system, cfg.policy, &cfg.eliminant, &cfg.options)?;
    let r = engine.pert(&cfg.eliminant)?;
    check_degree(&r.h, &cfg.system)?;
    Ok(r)
}

fn check_degree(h: &UniPoly, f: &PolySystem) -> Result<u64> {
    let vf = v_f(f);
    if h.deg() as u64 > vf {
        return Err(Error::invariant(format!(
            "degree {} of the eliminant exceeds V_F = {}",
            h.deg(),
            vf
        )));
    }
    Ok(vf)
}

pub struct UnivariateReduction {
    /// Perturbed resultant at u, primitive with positive leading coefficient.
    pub h: UniPoly,
    /// Square-free part of h.
    pub hbar: UniPoly,
    pub u: Vec<BigInt>,
    pub epsilon: u64,
    /// 1 + C(V_F, 2).
    pub epsilon_bound: u64,
    pub v_f: u64,
    pub policy: SupportPolicy,
    pub pert: PertResult,
    /// h came from the Schur complement with full degree and no repeated roots,
    /// so u separates the roots without further checks.
    pub simple: bool,
    pub(crate) engine: Arc<PertEngine>,
    pub(crate) coordinates: Option<Coordinates>,
}

impl fmt::Debug for UnivariateReduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UnivariateReduction")
            .field("h", &self.h)
            .field("u", &self.u)
            .field("epsilon", &self.epsilon)
            .field("policy", &self.policy)
            .field("simple", &self.simple)
            .finish()
    }
}

impl UnivariateReduction {
    pub fn engine(&self) -> &PertEngine {
        &self.engine
    }
}

/// Chooses the support policy: toric when the Schur route applies and no root
/// has a vanishing coordinate, fill otherwise.
pub(crate) fn resolve_policy(f: &PolySystem, opts: &ReductionOptions, elim: &Eliminant) -> Result<(SupportPolicy, PertEngine)> {
    if let Some(p) = opts.policy {
        return Ok((p, PertEngine::new(f, p, elim, &opts.pert)?));
    }
    if let Ok(engine) = PertEngine::new(f, SupportPolicy::Toric, elim, &opts.pert) {
        let fast = engine.has_fast_layout()
            && crate::modp::LargePrimes::new()
                .take(2)
                .any(|p| engine.schur(p).is_some());
        if fast && rur::no_roots_off_torus(f)? {
            return Ok((SupportPolicy::Toric, engine));
        }
    }
    Ok((
        SupportPolicy::Fill,
        PertEngine::new(f, SupportPolicy::Fill, elim, &opts.pert)?,
    ))
}

pub fn univariate_reduction(f: &PolySystem, opts: &ReductionOptions) -> Result<UnivariateReduction> {
    let n = f.nvars();
    if !f.is_square() {
        return Err(Error::Dimension(format!(
            "univariate reduction needs a square system; square it up first ({} polynomials, {} variables)",
            f.len(),
            n
        )));
    }
    let vf = v_f(f);
    let bound = 1 + vf * vf.saturating_sub(1) / 2;
    let probe = Eliminant::Linear(vec![BigInt::one(); n]);
    let (policy, engine) = resolve_policy(f, opts, &probe)?;
    let engine = Arc::new(engine);
    for eps in 1..=bound {
        let u: Vec<BigInt> = (1..=n as u32).map(|i| num_traits::pow(BigInt::from(eps), i as usize)).collect();
        let pr = engine.pert(&Eliminant::Linear(u.clone()))?;
        check_degree(&pr.h, f)?;
        let hbar = if pr.h.deg() == 0 {
            pr.h.clone()
        } else {
            squarefree_part(&pr.h)?
        };
        let simple = pr.fast_path && pr.h.deg() == engine.f0_rows() && hbar.deg() == pr.h.deg();
        let mut out = UnivariateReduction {
            h: pr.h.clone(),
            hbar: hbar.clone(),
            u: u.clone(),
            epsilon: eps,
            epsilon_bound: bound,
            v_f: vf,
            policy,
            pert: pr,
            simple,
            engine: engine.clone(),
            coordinates: None,
        };
        if hbar.deg() == 0 || n == 1 || simple {
            return Ok(out);
        }
        if let Some(c) = rur::subresultant_coordinates(&engine, &u, &hbar)? {
            out.coordinates = Some(c);
            return Ok(out);
        }
    }
    Err(Error::invariant(format!(
        "every epsilon up to {bound} produced a collision"
    )))
}

/// Perturbed resultant with last polynomial u_0 - x^mono; its roots are the values
/// of x^mono at the roots of F in the torus.
pub fn monomial_reduction(f: &PolySystem, mono: &[i64], opts: &ReductionOptions) -> Result<PertResult> {
    if mono.len() != f.nvars() {
        return Err(Error::Dimension("monomial exponent length differs from n".into()));
    }
    let policy = opts.policy.unwrap_or(SupportPolicy::Toric);
    compute_pert(&PertConfig {
        system: f.clone(),
        policy,
        eliminant: Eliminant::Monomial(mono.to_vec()),
        options: opts.pert.clone(),
    })
}

/// n combinations f_1 + e f_2 + ... + e^(m-1) f_m with e running through `s`
/// from position `offset` (m > n), or padding with copies of the last polynomial (m < n).
pub fn square_up(f: &PolySystem, s: &[i64], offset: usize) -> Result<PolySystem> {
    let n = f.nvars();
    let m = f.len();
    if m == n {
        return Ok(f.clone());
    }
    if m < n {
        let mut polys = f.polys().to_vec();
        let last = polys.last().cloned().unwrap();
        polys.resize(n, last);
        return PolySystem::new(n, polys);
    }
    let vf = v_f(f);
    let need = m as u64 * vf + 1;
    let mut set: Vec<i64> = s.to_vec();
    set.sort_unstable();
    set.dedup();
    if (set.len() as u64) < need {
        return Err(Error::Invalid(format!(
            "square-up needs at least mV_F + 1 = {need} distinct values, got {}",
            set.len()
        )));
    }
    if offset + n > set.len() {
        return Err(Error::Invalid("square-up offset leaves too few values".into()));
    }
    let polys: Vec<SparsePoly> = set[offset..offset + n]
        .iter()
        .map(|&e| {
            let mut acc = SparsePoly::zero(n);
            let mut w = BigInt::one();
            for p in f.polys() {
                if !w.is_zero() {
                    acc = acc.add(&p.scale(&w));
                }
                w *= e;
            }
            acc
        })
        .collect();
    if polys.iter().any(|p| p.is_zero()) {
        return Err(Error::Degenerate("a square-up combination vanishes".into()));
    }
    PolySystem::new(n, polys)
}

/// The default value set {1, ..., mV_F + 1}.
pub fn default_square_up_set(f: &PolySystem) -> Vec<i64> {
    let need = f.len() as u64 * v_f(f) + 1;
    (1..=need as i64).collect()
}
