use std::fmt::Display;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use toric::bounds::bound_table;
use toric::density::{
    compute_af_of, density_constants, koiran_test, prime_window_count, KoiranConfig, KoiranMode,
};
use toric::dimension::{compute_dimension, DimensionOptions, ProbeStrategy};
use toric::poly::{infer_nvars, parse_system, PolySystem};
use toric::polytope::{newton_mixed_volume, normalized_volume, q_polytope};
use toric::resultant::{monomial_reduction, univariate_reduction, ReductionOptions, SupportPolicy};
use toric::rur::{compute_rur, count_roots_with, feasibility_check_with, RurData};
use toric::univariate::UniPoly;
use toric::Error;

#[derive(Parser)]
#[command(name = "toric", version, about = "Exact sparse elimination for polynomial systems over the integers")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// System file, one polynomial per line ("-" reads standard input).
    #[arg(global = true, default_value = "-")]
    input: PathBuf,

    /// Number of variables; defaults to the largest index that appears.
    #[arg(long, global = true)]
    nvars: Option<usize>,

    /// Supports used for the resultant matrices (default: toric when it provably sees every root).
    #[arg(long, global = true, value_enum)]
    supports: Option<Supports>,

    /// Seed for the perturbation, probes and prime sampling.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Supports {
    Toric,
    Fill,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Desk,
    Report,
}

#[derive(Subcommand)]
enum Command {
    /// V_F, the normalized volume of Q_F, and the Bézout number.
    Volume,
    /// Mixed volume of the Newton polytopes of a square system.
    Mixedvol,
    /// Univariate reduction h_F (or the eliminant of a monomial with --monomial).
    Reduce {
        /// Exponent vector of the monomial to eliminate, e.g. 1,1,1.
        #[arg(long, value_delimiter = ',')]
        monomial: Option<Vec<i64>>,
    },
    /// Rational univariate representation.
    Rur,
    /// Dimension of the complex zero set.
    Dim {
        /// Majority over 2k+1 probes per level.
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Decides whether the system has a complex root.
    Feasible,
    /// Distinct complex, real and rational roots.
    Count,
    /// Prime-window feasibility test and density constants.
    Density {
        #[arg(long, value_enum, default_value = "desk")]
        mode: Mode,
        /// Window constant A.
        #[arg(long = "A")]
        a: Option<String>,
        /// Range of t as lo..hi.
        #[arg(long)]
        t_range: Option<String>,
        /// Largest window width searched.
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
        /// Also compute A_F, which needs the rational form of the representation.
        #[arg(long)]
        constants: bool,
    },
    /// Prime count in (A t^3, A (t+1)^3) against its lower bound.
    Window {
        #[arg(long = "A")]
        a: u64,
        #[arg(long)]
        t: u64,
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
    },
    /// Explicit size bounds checked against a computed reduction.
    Bounds,
}

struct Out {
    lines: Vec<String>,
}

impl Out {
    fn kv(&mut self, k: &str, v: impl Display) {
        self.lines.push(format!("{k} = {v}"));
    }

    fn poly(&mut self, k: &str, p: &UniPoly) {
        let c: Vec<String> = p.coeffs().iter().map(|x| x.to_string()).collect();
        self.kv(k, c.join(" "));
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Dimension(_) | Error::Invalid(_) => 2,
        Error::Budget(_) => 3,
        Error::Invariant(_) => 4,
        Error::Degenerate(_) => 1,
    }
}

fn read_system(cli: &Cli) -> Result<PolySystem, Error> {
    let mut text = String::new();
    if cli.input.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Invalid(format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(&cli.input)
            .map_err(|e| Error::Invalid(format!("reading {}: {e}", cli.input.display())))?;
    }
    let n = cli.nvars.unwrap_or_else(|| infer_nvars(&text));
    parse_system(&text, n)
}

fn options(cli: &Cli) -> ReductionOptions {
    let mut o = ReductionOptions {
        policy: cli.supports.map(|s| match s {
            Supports::Toric => SupportPolicy::Toric,
            Supports::Fill => SupportPolicy::Fill,
        }),
        ..Default::default()
    };
    if let Some(s) = cli.seed {
        o.pert.seed = s;
    }
    o
}

fn parse_big(s: &str) -> Result<BigInt, Error> {
    let t = s.replace('_', "");
    if let Some((m, e)) = t.split_once('e') {
        let m: BigInt = m.parse().map_err(|_| Error::Invalid(format!("bad integer {s}")))?;
        let e: u32 = e.parse().map_err(|_| Error::Invalid(format!("bad exponent in {s}")))?;
        return Ok(m * BigInt::from(10).pow(e));
    }
    t.parse().map_err(|_| Error::Invalid(format!("bad integer {s}")))
}

fn parse_range(s: &str) -> Result<(BigInt, BigInt), Error> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| Error::Invalid("t range must look like lo..hi".into()))?;
    Ok((parse_big(a)?, parse_big(b)?))
}

fn rur_lines(out: &mut Out, r: &RurData) -> Result<(), Error> {
    out.kv("epsilon", r.epsilon);
    out.kv("u", r.u.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
    out.kv("policy", r.policy.name());
    out.kv("method", format!("{:?}", r.method).to_lowercase());
    out.poly("h", &r.h);
    out.poly("verified", &r.verified_factor);
    out.kv("exact_verification", r.exact_verification);
    out.kv("finite_certificate", r.finite_certificate);
    out.kv("branches", r.branches.len());
    for (j, b) in r.branches.iter().enumerate() {
        out.poly(&format!("branch{j}.factor"), &b.factor);
        out.poly(&format!("branch{j}.verified"), &b.verified);
        if b.verified.deg() == 0 {
            continue;
        }
        let form = b.rational_form()?;
        for (i, (h, a)) in form.h_i.iter().zip(&form.a_i).enumerate() {
            out.poly(&format!("branch{j}.h{}", i + 1), h);
            out.kv(&format!("branch{j}.a{}", i + 1), a);
        }
    }
    Ok(())
}

fn run(cli: &Cli, out: &mut Out) -> Result<String, Error> {
    if let Command::Window { a, t, budget } = &cli.command {
        let w = prime_window_count(*a, *t, *budget)?;
        out.kv("window.lo", &w.window.lo);
        out.kv("window.hi", &w.window.hi);
        out.kv("count", w.count);
        out.kv("lemma_bound", w.lemma_bound);
        out.kv("lemma_applies", w.lemma_applies);
        out.kv("holds", w.count >= w.lemma_bound);
        return Ok(format!("{} primes in the window, lower bound {}", w.count, w.lemma_bound));
    }
    let f = read_system(cli)?;
    let opts = options(cli);
    out.kv("n", f.nvars());
    out.kv("m", f.len());
    match &cli.command {
        Command::Volume => {
            let q = q_polytope(&f);
            let v = normalized_volume(&q).normalized_volume;
            let bezout: BigInt = f.polys().iter().map(|p| BigInt::from(p.total_degree())).product();
            out.kv("V_F", v);
            out.kv("vertices", q.vertices().len());
            out.kv("bezout", &bezout);
            Ok(format!("V_F = {v}, Bézout number {bezout}"))
        }
        Command::Mixedvol => {
            let mv = newton_mixed_volume(&f)?;
            out.kv("mixed_volume", mv);
            Ok(format!("mixed volume {mv}"))
        }
        Command::Reduce { monomial } => {
            if let Some(e) = monomial {
                let r = monomial_reduction(&f, e, &opts)?;
                out.kv("degree", r.h.deg());
                out.kv("nu", r.nu);
                out.kv("rigorous", r.rigorous);
                out.poly("h", &r.h);
                return Ok(format!("eliminant of degree {}", r.h.deg()));
            }
            let r = univariate_reduction(&f, &opts)?;
            out.kv("epsilon", r.epsilon);
            out.kv("u", r.u.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
            out.kv("policy", r.policy.name());
            out.kv("V_F", r.v_f);
            out.kv("degree", r.h.deg());
            out.kv("nu", r.pert.nu);
            out.poly("h", &r.h);
            out.poly("hbar", &r.hbar);
            Ok(format!("h_F of degree {} (square-free part {})", r.h.deg(), r.hbar.deg()))
        }
        Command::Rur => {
            let r = compute_rur(&f, &opts)?;
            rur_lines(out, &r)?;
            Ok(format!("{} verified roots", r.verified_factor.deg()))
        }
        Command::Dim { k } => {
            let d = compute_dimension(
                &f,
                &DimensionOptions {
                    k: *k,
                    strategy: cli
                        .seed
                        .map(|seed| ProbeStrategy::Seeded { seed, range: 64 })
                        .unwrap_or_default(),
                    reduction: ReductionOptions {
                        policy: Some(opts.policy.unwrap_or(SupportPolicy::Fill)),
                        ..opts.clone()
                    },
                },
            )?;
            out.kv("dim", d.dimension);
            for t in &d.tallies {
                out.kv(
                    &format!("level{}", t.level),
                    format!("feasible {} infeasible {} resampled {}", t.feasible, t.infeasible, t.resampled),
                );
            }
            Ok(format!("dimension {}", d.dimension))
        }
        Command::Feasible => {
            let rep = feasibility_check_with(&f, &opts)?;
            out.kv("feasible", rep.feasible);
            if let Some(s) = rep.shortcut {
                out.kv("shortcut", s);
            }
            if let Some(v) = rep.verified_factor() {
                out.poly("verified", v);
            }
            Ok(if rep.feasible { "feasible".into() } else { "infeasible".into() })
        }
        Command::Count => {
            let dim_opts = DimensionOptions::default();
            let (c, _) = count_roots_with(&f, &opts, |g| Ok(compute_dimension(g, &dim_opts)?.dimension <= 0))?;
            out.kv("complex", c.complex);
            out.kv("real", c.real);
            out.kv("rational", c.rational);
            Ok(format!("{} complex, {} real, {} rational roots", c.complex, c.real, c.rational))
        }
        Command::Density {
            mode,
            a,
            t_range,
            budget,
            constants,
        } => {
            out.kv("a_F", format!("{:.6}", compute_af_of(&f)));
            let mut cfg = match mode {
                Mode::Report => KoiranConfig::example_report(),
                Mode::Desk => KoiranConfig::desk(150, 150, 160, 0),
            };
            if let Some(s) = cli.seed {
                cfg.seed = s;
            }
            cfg.budget = *budget;
            if let Some(a) = a {
                cfg.a = parse_big(a)?;
            }
            if let Some(r) = t_range {
                (cfg.t_lo, cfg.t_hi) = parse_range(r)?;
            }
            if *constants {
                let rep = feasibility_check_with(&f, &opts)?;
                match rep.rur.as_ref().filter(|_| rep.feasible) {
                    Some(r) => {
                        let c = density_constants(&f, r)?;
                        out.kv("A_F", &c.big_a_f);
                        out.kv("B_F", format!("{:.6}", c.b_f));
                        out.kv("C_F", format!("{:.6}", c.c_f));
                        out.kv("D_F", format!("{:.6}", c.d_f));
                        out.kv("t0", format!("{:.3}", c.t0));
                    }
                    None => out.kv("A_F", "none (no verified roots)"),
                }
            }
            let v = koiran_test(&f, &cfg)?;
            out.kv("mode", if v.mode == KoiranMode::Desk { "desk" } else { "report" });
            out.kv("A", &cfg.a);
            out.kv("t", &v.t);
            out.kv("window.lo", &v.window.lo);
            out.kv("window.hi", &v.window.hi);
            out.kv("max_candidate_digits", v.max_candidate_digits);
            if v.mode == KoiranMode::Desk {
                out.kv("primes_tested", v.primes_tested);
                out.kv("witness", v.witness.map(|p| p.to_string()).unwrap_or_else(|| "none".into()));
                out.kv("feasible", v.feasible.unwrap_or(false));
                Ok(format!(
                    "{} after {} primes",
                    if v.feasible == Some(true) { "feasible" } else { "infeasible" },
                    v.primes_tested
                ))
            } else {
                Ok(format!("largest candidate prime has at most {} digits", v.max_candidate_digits))
            }
        }
        Command::Bounds => {
            let red = univariate_reduction(&f, &opts)?;
            let rur = if f.is_square() { compute_rur(&f, &opts).ok() } else { None };
            let table = bound_table(&f, &red, rur.as_ref());
            let mut violated = 0;
            for b in &table {
                out.kv(&format!("{}.value", b.name), format!("{:.6}", b.value));
                if let Some(c) = b.checked_against {
                    out.kv(&format!("{}.actual", b.name), format!("{c:.6}"));
                }
                if let Some(h) = b.holds {
                    out.kv(&format!("{}.holds", b.name), h);
                    violated += usize::from(!h);
                }
            }
            if violated > 0 {
                return Err(Error::Invariant(format!("{violated} bounds violated")));
            }
            Ok(format!("{} bounds evaluated, all hold", table.len()))
        }
        Command::Window { .. } => unreachable!(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out { lines: Vec::new() };
    let res = run(&cli, &mut out);
    for l in &out.lines {
        println!("{l}");
    }
    match res {
        Ok(summary) => {
            eprintln!("{summary}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
