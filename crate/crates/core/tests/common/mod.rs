#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toric::modp;
use toric::poly::{parse_system, PolySystem};
use toric::univariate::UniPoly;

/// Complex-coefficient system: per polynomial, (exponents, coefficient).
pub type CSystem = Vec<Vec<(Vec<u32>, Complex64)>>;

pub fn to_complex(f: &PolySystem) -> CSystem {
    f.polys()
        .iter()
        .map(|p| {
            p.terms()
                .map(|(e, c)| {
                    let e = e.to_i64().iter().map(|&x| x as u32).collect();
                    (e, Complex64::new(c.to_f64().unwrap(), 0.0))
                })
                .collect()
        })
        .collect()
}

fn eval_poly(p: &[(Vec<u32>, Complex64)], x: &[Complex64]) -> Complex64 {
    p.iter()
        .map(|(e, c)| e.iter().zip(x).fold(*c, |acc, (&k, xi)| acc * xi.powu(k)))
        .sum()
}

fn eval_grad(p: &[(Vec<u32>, Complex64)], x: &[Complex64]) -> Vec<Complex64> {
    let n = x.len();
    let mut g = vec![Complex64::zero(); n];
    for (e, c) in p {
        for j in 0..n {
            if e[j] == 0 {
                continue;
            }
            let mut t = *c * e[j] as f64;
            for (k, xk) in x.iter().enumerate() {
                let pw = if k == j { e[k] - 1 } else { e[k] };
                t *= xk.powu(pw);
            }
            g[j] += t;
        }
    }
    g
}

fn solve(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))?;
        if a[piv][col].norm() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                let v = a[col][c];
                a[r][c] -= f * v;
            }
            let v = b[col];
            b[r] -= f * v;
        }
    }
    let mut x = vec![Complex64::zero(); n];
    for r in (0..n).rev() {
        let s: Complex64 = (r + 1..n).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    Some(x)
}

fn norm(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

struct Homotopy<'a> {
    f: &'a CSystem,
    degs: Vec<u32>,
    gamma: Complex64,
}

impl Homotopy<'_> {
    fn start(&self, x: &[Complex64], i: usize) -> Complex64 {
        x[i].powu(self.degs[i]) - 1.0
    }

    fn value(&self, x: &[Complex64], t: f64) -> Vec<Complex64> {
        (0..x.len())
            .map(|i| self.gamma * (1.0 - t) * self.start(x, i) + t * eval_poly(&self.f[i], x))
            .collect()
    }

    fn jac(&self, x: &[Complex64], t: f64) -> Vec<Vec<Complex64>> {
        (0..x.len())
            .map(|i| {
                let mut row: Vec<Complex64> = eval_grad(&self.f[i], x).into_iter().map(|g| g * t).collect();
                let d = self.degs[i];
                row[i] += self.gamma * (1.0 - t) * x[i].powu(d - 1) * d as f64;
                row
            })
            .collect()
    }

    fn dt(&self, x: &[Complex64]) -> Vec<Complex64> {
        (0..x.len())
            .map(|i| eval_poly(&self.f[i], x) - self.gamma * self.start(x, i))
            .collect()
    }

    fn newton(&self, x: &mut Vec<Complex64>, t: f64, iters: usize, tol: f64) -> bool {
        for _ in 0..iters {
            let h = self.value(x, t);
            let Some(dx) = solve(self.jac(x, t), h) else {
                return false;
            };
            for (xi, d) in x.iter_mut().zip(&dx) {
                *xi -= d;
            }
            if norm(&dx) <= tol * (1.0 + norm(x)) {
                return true;
            }
        }
        false
    }

    fn track(&self, mut x: Vec<Complex64>) -> Option<Vec<Complex64>> {
        let mut t = 0.0;
        let mut h: f64 = 0.02;
        while t < 1.0 {
            let step = h.min(1.0 - t);
            let v = solve(self.jac(&x, t), self.dt(&x).into_iter().map(|z| -z).collect())?;
            let mut y: Vec<Complex64> = x.iter().zip(&v).map(|(a, b)| a + b * step).collect();
            if self.newton(&mut y, t + step, 4, 1e-10) && norm(&y) < 1e9 {
                t += step;
                x = y;
                h = (h * 1.5).min(0.05);
            } else {
                h /= 2.0;
                if h < 1e-13 {
                    return None;
                }
            }
            if norm(&x) > 1e8 {
                return None;
            }
        }
        self.newton(&mut x, 1.0, 30, 1e-14).then_some(x)
    }
}

/// Isolated complex roots of a square system by total-degree homotopy
/// continuation; paths that diverge or stall are dropped, and of four runs
/// with different γ the largest root set is kept.
pub fn numeric_roots(f: &CSystem, n: usize, seed: u64) -> Vec<Vec<Complex64>> {
    assert_eq!(f.len(), n);
    let degs: Vec<u32> = f
        .iter()
        .map(|p| p.iter().map(|(e, _)| e.iter().sum::<u32>()).max().unwrap_or(0).max(1))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<Vec<Vec<Complex64>>> = None;
    for _attempt in 0..4 {
        let gamma = Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
        let hom = Homotopy { f, degs: degs.clone(), gamma };
        let mut ends = Vec::new();
        let total: u32 = degs.iter().product();
        for k in 0..total {
            let mut r = k;
            let start: Vec<Complex64> = degs
                .iter()
                .map(|&d| {
                    let j = r % d;
                    r /= d;
                    Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / d as f64)
                })
                .collect();
            if let Some(x) = hom.track(start) {
                ends.push(x);
            }
        }
        let roots = dedup(ends);
        if best.as_ref().map_or(true, |b| roots.len() > b.len()) {
            best = Some(roots);
        }
    }
    best.unwrap()
}

fn dedup(ends: Vec<Vec<Complex64>>) -> Vec<Vec<Complex64>> {
    let mut out: Vec<Vec<Complex64>> = Vec::new();
    for x in ends {
        let close = out.iter().any(|y| {
            let d = x.iter().zip(y).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
            d < 1e-6 * (1.0 + norm(y))
        });
        if !close {
            out.push(x);
        }
    }
    out
}

pub fn in_torus(x: &[Complex64]) -> bool {
    x.iter().all(|z| z.norm() > 1e-8)
}

fn join_terms(terms: &[(i64, String)]) -> String {
    let mut out = String::from("0");
    for (c, m) in terms {
        let sign = if *c < 0 { '-' } else { '+' };
        out.push_str(&format!(" {sign} {}*{m}", c.abs()));
    }
    out
}

pub fn random_univariate(rng: &mut ChaCha8Rng, max_deg: usize) -> PolySystem {
    let d = rng.gen_range(1..=max_deg);
    let mut terms: Vec<(i64, String)> = (0..d).map(|i| (rng.gen_range(-9..=9), format!("x1^{i}"))).collect();
    let mut lc = 0;
    while lc == 0 {
        lc = rng.gen_range(-9..=9);
    }
    terms.push((lc, format!("x1^{d}")));
    parse_system(&join_terms(&terms), 1).unwrap()
}

/// Random square system in two variables with 2 to 4 terms per polynomial, a
/// constant term in each and total degree at most 3.
pub fn random_bivariate(rng: &mut ChaCha8Rng) -> PolySystem {
    let mono: Vec<(u32, u32)> = (0..=3).flat_map(|a| (0..=3 - a).map(move |b| (a, b))).collect();
    let mut lines = Vec::new();
    for _ in 0..2 {
        let k = rng.gen_range(2..=4);
        let mut picked: Vec<(u32, u32)> = vec![(0, 0)];
        while picked.len() < k {
            let m = mono[rng.gen_range(0..mono.len())];
            if !picked.contains(&m) {
                picked.push(m);
            }
        }
        let terms: Vec<(i64, String)> = picked
            .iter()
            .map(|&(a, b)| {
                let mut c = 0;
                while c == 0 {
                    c = rng.gen_range(-7..=7);
                }
                (c, format!("x1^{a}*x2^{b}"))
            })
            .collect();
        lines.push(join_terms(&terms));
    }
    parse_system(&lines.join("\n"), 2).unwrap()
}

/// F(h_1/a_1, ..., h_n/a_n) ≡ 0 and Σ u_i h_i/a_i ≡ θ in F_p[θ]/(v(θ)).
pub fn representation_holds_mod(
    f: &PolySystem,
    u: &[BigInt],
    v: &UniPoly,
    h: &[UniPoly],
    a: &[BigInt],
    p: u64,
) -> Option<bool> {
    let vp = v.reduce_mod(p);
    if modp::poly::degree(&vp) != Some(v.deg()) || v.deg() == 0 {
        return None;
    }
    let mut coords = Vec::with_capacity(h.len());
    for (hi, ai) in h.iter().zip(a) {
        let ap = modp::poly::reduce(std::slice::from_ref(ai), p);
        let ainv = modp::inv_mod(*ap.first().filter(|&&x| x != 0)?, p);
        coords.push(modp::poly::rem(&modp::poly::scale(&hi.reduce_mod(p), ainv, p), &vp, p));
    }
    for poly in f.polys() {
        let mut acc = vec![0u64];
        for (e, c) in poly.terms() {
            let mut term = modp::poly::reduce(std::slice::from_ref(c), p);
            for (x, &k) in coords.iter().zip(&e.to_i64()) {
                let pw = modp::poly::powmod(x, k as u64, &vp, p);
                term = modp::poly::mulmod(&term, &pw, &vp, p);
            }
            acc = modp::poly::add(&acc, &term, p);
        }
        if modp::poly::degree(&modp::poly::trim(acc)).is_some() {
            return Some(false);
        }
    }
    let mut lin = vec![0u64];
    for (x, ui) in coords.iter().zip(u) {
        let up = modp::poly::reduce(std::slice::from_ref(ui), p).first().copied().unwrap_or(0);
        lin = modp::poly::add(&lin, &modp::poly::scale(x, up, p), p);
    }
    let theta = modp::poly::rem(&[0, 1], &vp, p);
    Some(modp::poly::degree(&modp::poly::trim(modp::poly::sub(&lin, &theta, p))).is_none())
}
