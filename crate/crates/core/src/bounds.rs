//! Explicit size estimates for the elimination pipeline, in natural-log form.
//!
//! Every quantity that would overflow a double (4^{m_F}, binomials of V_F) is
//! returned as its natural logarithm; comparisons apply a relative slack of
//! 1e-9 on the bound side.

use std::f64::consts::{LN_2, PI};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{height_stats, PolySystem};
use crate::polytope::{self, LatticePolytope, Point};
use crate::resultant::reduction::UnivariateReduction;
use crate::rur::RurData;
use crate::univariate::UniPoly;
use crate::util::{ln_binomial, log_abs};

const SLACK: f64 = 1e-9;

/// Upper side used for every comparison.
pub fn with_slack(bound: f64) -> f64 {
    bound + bound.abs() * SLACK
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub name: &'static str,
    pub inputs: Vec<(&'static str, f64)>,
    pub value: f64,
    pub checked_against: Option<f64>,
    pub holds: Option<bool>,
}

impl BoundReport {
    pub fn new(name: &'static str, inputs: Vec<(&'static str, f64)>, value: f64) -> Self {
        BoundReport {
            name,
            inputs,
            value,
            checked_against: None,
            holds: None,
        }
    }

    pub fn check(mut self, actual: f64) -> Self {
        self.checked_against = Some(actual);
        self.holds = Some(actual <= with_slack(self.value));
        self
    }

    /// Turns a failed comparison into an invariant error.
    pub fn require(self) -> Result<Self> {
        if self.holds == Some(false) {
            return Err(Error::invariant(format!("bound {} violated: {:?}", self.name, self)));
        }
        Ok(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MatrixConstants {
    /// e^{1/8} e^n / sqrt(n+1) V_F.
    pub m_f: f64,
    /// (n+1) V_F.
    pub r_f: u64,
}

pub fn matrix_constants(n: usize, v_f: u64) -> MatrixConstants {
    let nf = n as f64;
    MatrixConstants {
        m_f: (0.125 + nf).exp() / (nf + 1.0).sqrt() * v_f as f64,
        r_f: (n as u64 + 1) * v_f,
    }
}

/// Quantities of a system that enter the bound formulas.
#[derive(Clone, Debug, PartialEq)]
pub struct SystemStats {
    pub n: usize,
    pub m: usize,
    /// Maximum total degree.
    pub d: u64,
    pub v_f: u64,
    /// Maximum number of terms in one polynomial.
    pub mu: usize,
    /// Maximum absolute coefficient.
    pub c: f64,
    /// max log|c|.
    pub sigma: f64,
}

impl SystemStats {
    pub fn of(f: &PolySystem) -> Self {
        let hs = height_stats(f);
        SystemStats {
            n: f.nvars(),
            m: f.len(),
            d: hs.degree,
            v_f: polytope::v_f(f),
            mu: f.polys().iter().map(|p| p.num_terms()).max().unwrap_or(0),
            c: hs.sigma.exp(),
            sigma: hs.sigma,
        }
    }

    pub fn m_f(&self) -> f64 {
        matrix_constants(self.n, self.v_f).m_f
    }
}

/// ln of (e^{13/12}/sqrt(π)) sqrt(m_F+1) 4^{m_F-i/2} ‖u‖^{V_F-i} (sqrt(μ)(c+c*))^{m_F} C(V_F, i).
pub fn growth_bound(m_f: f64, v_f: u64, i: u64, norm_u: f64, mu: f64, c: f64, c_star: f64) -> f64 {
    let lead = 13.0 / 12.0 - 0.5 * PI.ln();
    let u_part = if i >= v_f { 0.0 } else { (v_f - i) as f64 * norm_u.ln() };
    lead + 0.5 * (m_f + 1.0).ln()
        + (m_f - i as f64 / 2.0) * 2.0 * LN_2
        + u_part
        + m_f * (0.5 * mu.ln() + (c + c_star).ln())
        + ln_binomial(v_f, i)
}

fn size_expression(s: &SystemStats, ln_root_two_part: f64) -> f64 {
    let m_f = s.m_f();
    let vf = s.v_f as f64;
    let last = if s.m <= s.n {
        (s.c + 1.0).ln()
    } else {
        let m = s.m as f64;
        (m * (m * vf + 1.0).powf(m - 1.0) * s.c + 1.0).ln()
    };
    13.0 / 6.0 - PI.ln()
        + 0.5 * (m_f + 1.0).ln()
        + vf * LN_2
        + m_f * 2.0 * LN_2
        + vf * ln_root_two_part
        + m_f * 0.5 * (s.mu as f64).ln()
        + m_f * last
}

/// Bound on |log|x_i|| for a point on each component; the m > n variant is
/// selected from the stats.
pub fn root_size_bound(s: &SystemStats) -> f64 {
    size_expression(s, 0.5 * LN_2)
}

/// Bound on σ(h_F): the root size expression with sqrt(2) replaced by
/// sqrt(n) (C(V_F,2)+1)^n.
pub fn hf_height_bound(s: &SystemStats) -> f64 {
    let pairs = ln_binomial(s.v_f, 2).exp();
    let part = 0.5 * (s.n as f64).ln() + s.n as f64 * (pairs + 1.0).ln();
    size_expression(s, part)
}

/// Records log(1+|u_i|) and checks ε ≤ 1 + C(V_F, 2).
pub fn u_height_check(u: &[BigInt], n: usize, d: u64, epsilon: u64, v_f: u64) -> BoundReport {
    let max_log = u
        .iter()
        .map(|x| (log_abs(x).exp() + 1.0).ln())
        .fold(0.0f64, f64::max);
    let limit = 1.0 + ln_binomial(v_f, 2).exp().round();
    BoundReport::new(
        "epsilon_search",
        vec![
            ("n", n as f64),
            ("D", d as f64),
            ("max_log_1_plus_u", max_log),
            ("n2_log_d", (n * n) as f64 * (d.max(2) as f64).ln()),
        ],
        limit,
    )
    .check(epsilon as f64)
}

fn norm(u: &[BigInt]) -> f64 {
    let top = u.iter().map(log_abs).fold(0.0f64, f64::max);
    let s: f64 = u.iter().map(|x| (2.0 * (log_abs(x) - top)).exp()).sum();
    (top + 0.5 * s.ln()).exp()
}

/// Compares every coefficient of h with the growth bound for its power of u_0.
pub fn growth_report(f: &PolySystem, red: &UnivariateReduction) -> BoundReport {
    let s = SystemStats::of(f);
    let c_star = red
        .engine()
        .fstar()
        .iter()
        .flatten()
        .map(|c| c.unsigned_abs() as f64)
        .fold(0.0, f64::max);
    let m_f = s.m_f();
    let nu = norm(&red.u);
    let mut worst = (f64::NEG_INFINITY, 0.0, 0.0);
    for (i, a) in red.h.coeffs().iter().enumerate() {
        if a == &BigInt::from(0) {
            continue;
        }
        let b = growth_bound(m_f, red.v_f, i as u64, nu, s.mu as f64, s.c, c_star);
        let actual = log_abs(a);
        if actual - b > worst.0 {
            worst = (actual - b, actual, b);
        }
    }
    BoundReport::new(
        "growth",
        vec![
            ("m_F", m_f),
            ("V_F", red.v_f as f64),
            ("norm_u", nu),
            ("mu", s.mu as f64),
            ("c", s.c),
            ("c_star", c_star),
        ],
        worst.2,
    )
    .check(worst.1)
}

fn sigma(p: &UniPoly) -> f64 {
    log_abs(&p.max_abs_coeff())
}

pub fn hf_report(f: &PolySystem, h: &UniPoly) -> BoundReport {
    let s = SystemStats::of(f);
    BoundReport::new(
        "hF_height",
        vec![("V_F", s.v_f as f64), ("n", s.n as f64), ("mu", s.mu as f64), ("c", s.c)],
        hf_height_bound(&s),
    )
    .check(sigma(h))
}

/// max |log|x_i|| over the nonzero coordinates of the given points.
pub fn root_size_report(f: &PolySystem, points: &[Vec<f64>]) -> BoundReport {
    let s = SystemStats::of(f);
    let actual = points
        .iter()
        .flat_map(|p| p.iter())
        .filter(|x| **x != 0.0)
        .map(|x| x.abs().ln().abs())
        .fold(0.0f64, f64::max);
    BoundReport::new(
        "root_size",
        vec![("V_F", s.v_f as f64), ("m", s.m as f64), ("n", s.n as f64), ("c", s.c)],
        root_size_bound(&s),
    )
    .check(actual)
}

pub fn degree_report(r: &RurData) -> BoundReport {
    BoundReport::new("deg_h", vec![("V_F", r.v_f as f64)], r.v_f as f64).check(r.h.deg() as f64)
}

/// Total degree of the sparse resultant of n+1 supports: the sum over i of the
/// mixed volume of the other n hulls.
pub fn resultant_degree(n: usize, supports: &[Vec<Point>]) -> Result<u64> {
    if supports.len() != n + 1 {
        return Err(Error::Dimension("resultant degree needs n+1 supports".into()));
    }
    let hulls: Vec<LatticePolytope> = supports.iter().map(|s| polytope::convex_hull(s, n)).collect();
    let mut total = 0;
    for i in 0..=n {
        let rest: Vec<LatticePolytope> = (0..=n).filter(|&j| j != i).map(|j| hulls[j].clone()).collect();
        total += polytope::mixed_volume(&rest)?;
    }
    Ok(total)
}

pub fn r_f_report(n: usize, v_f: u64, supports: &[Vec<Point>]) -> Result<BoundReport> {
    let mc = matrix_constants(n, v_f);
    let r = resultant_degree(n, supports)?;
    Ok(BoundReport::new("r_F", vec![("n", n as f64), ("V_F", v_f as f64)], mc.r_f as f64).check(r as f64))
}

/// The full table printed by the command-line `bounds` command.
pub fn bound_table(f: &PolySystem, red: &UnivariateReduction, rur: Option<&RurData>) -> Vec<BoundReport> {
    let s = SystemStats::of(f);
    let mc = matrix_constants(s.n, s.v_f);
    let mut out = Vec::new();
    if let Ok(r) = r_f_report(s.n, s.v_f, red.engine().plan().supports().supports()) {
        out.push(r);
    }
    out.extend([
        BoundReport::new("m_F", vec![("n", s.n as f64), ("V_F", s.v_f as f64)], mc.m_f),
        growth_report(f, red),
        hf_report(f, &red.h),
        u_height_check(&red.u, s.n, s.d, red.epsilon, s.v_f),
        BoundReport::new(
            "root_size",
            vec![("V_F", s.v_f as f64), ("m", s.m as f64)],
            root_size_bound(&s),
        ),
    ]);
    if let Some(r) = rur {
        out.push(degree_report(r));
        if let Ok(h) = crate::rur::rur_height_report(r) {
            out.push(
                BoundReport::new("rur_height", vec![("V_F", r.v_f as f64)], h.bound)
                    .check(h.max_log_a.max(h.max_sigma_h)),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_system;

    #[test]
    fn matrix_constant_values() {
        let c = matrix_constants(1, 2);
        assert!((c.m_f - 0.125f64.exp() * 1f64.exp() / 2f64.sqrt() * 2.0).abs() < 1e-12);
        assert!((c.m_f - 4.3566).abs() < 1e-3);
        assert_eq!(c.r_f, 4);
        assert_eq!(matrix_constants(3, 243).r_f, 972);
        let a = matrix_constants(2, 5).m_f;
        let b = matrix_constants(2, 10).m_f;
        assert!((b - 2.0 * a).abs() < 1e-9);
    }

    #[test]
    fn growth_at_top_degree_drops_u() {
        let m_f = 4.0;
        let b = growth_bound(m_f, 3, 3, 1e6, 2.0, 3.0, 9.0);
        let direct = (13.0f64 / 12.0).exp() / PI.sqrt()
            * 5f64.sqrt()
            * 4f64.powf(m_f - 1.5)
            * (2f64.sqrt() * 12.0).powf(m_f);
        assert!((b - direct.ln()).abs() < 1e-9);
        assert!((13.0f64 / 12.0).exp() / PI.sqrt() <= 1.66691);
    }

    #[test]
    fn size_bounds_order() {
        let f = parse_system("x1^2 - 3*x1 + 2", 1).unwrap();
        let s = SystemStats::of(&f);
        assert!(2f64.ln() <= root_size_bound(&s));
        let mut wide = s.clone();
        wide.m = 2;
        assert!(root_size_bound(&wide) > root_size_bound(&s));
        let mut big = s.clone();
        big.v_f += 1;
        assert!(hf_height_bound(&big) > hf_height_bound(&s));
        big.c *= 2.0;
        assert!(hf_height_bound(&big) > hf_height_bound(&s));
    }

    #[test]
    fn slack_is_relative() {
        let r = BoundReport::new("x", vec![], 1e6).check(1e6 * (1.0 + 1e-10));
        assert_eq!(r.holds, Some(true));
        let r = BoundReport::new("x", vec![], 1e6).check(1e6 * (1.0 + 1e-8));
        assert_eq!(r.holds, Some(false));
        assert!(r.require().is_err());
    }
}
