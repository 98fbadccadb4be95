//! Command-line surface: one subcommand per library operation, certified
//! JSON reports, and the exit-code contract
//! 0 = all checks pass, 1 = a check failed or a counterexample was found,
//! 2 = usage or configuration error, 3 = inconclusive at the precision cap.

use crate::binomial::{lemma4_check, DeltaParams};
use crate::bounds::{
    chain_check_section6, chain_check_theorem_derivations, constants, default_sweep_degrees,
    measure_bound, theorem1_log_bound, theorem5_log_bound, MeasureForm, MeasureQuery, Target,
    Theorem5Hypothesis, Theorem5Kind, TheoremChain,
};
use crate::error::{Error, Result};
use crate::heights::{height_of_minpoly, length, liouville_bound, LiouvilleContext};
use crate::interdet::{
    derive_params, lemma3_rhs, toy_rank_check, vanishing_order_check, BoundParams, Lemma3Config,
    ToyConfig, VanishingOrderCase,
};
use crate::numerics::expr::ThetaExpr;
use crate::numerics::{
    e_const, ln_rat, parse_rational, pi, rat, CertifiedComplex, CertifiedReal, PrecisionCeiling,
};
use crate::poly::IntPolynomial;
use crate::report::{ComplexIntervalJson, IntervalJson, RunReport};
use crate::search::{
    append_run_record, enumerate_min_alg_approx, enumerate_min_poly_value, verify_against_bound,
    RunRecord, SearchSpace, DEFAULT_CAP,
};
use crate::zeroest::{lemma2_check, Lemma2Verdict, ZeroEstimateInstance};
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde_json::json;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser, Debug)]
#[command(
    name = "transmeasure",
    version,
    about = "Exact-arithmetic verification of effective transcendence-measure machinery"
)]
pub struct Cli {
    /// Target interval width for certified results (e.g. 1e-30)
    #[arg(long, global = true)]
    precision: Option<String>,

    /// Maximum working precision in bits before giving up as inconclusive
    #[arg(long, global = true)]
    max_precision: Option<u32>,

    /// Worker threads for the search sweeps (default: available parallelism)
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Candidate cap for exhaustive searches
    #[arg(long, global = true)]
    cap: Option<u128>,

    /// Key=value config file mirroring the flags
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Write the JSON report to this path as well as stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Absolute logarithmic Weil height of the number with this minimal polynomial
    Height {
        /// comma-separated integer coefficients, leading first (x^2-2 is 1,0,-2)
        #[arg(long)]
        minpoly: String,
    },
    /// Log-scale lower bound of a transcendence measure
    MeasureBound {
        #[arg(long)]
        target: String,
        #[arg(long)]
        form: String,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        length: String,
    },
    /// The main approximation lower bound exponent for |e^th - a| + |th - b|
    Theorem1 {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        log_a: String,
        #[arg(long)]
        log_b: String,
        /// E as an expression, e.g. "e", "e^2", "7/2"
        #[arg(long)]
        e_expr: String,
        /// theta as an expression, e.g. "1", "pi*i", "log(2)"
        #[arg(long)]
        theta: String,
    },
    /// The exp/log approximation lower bound exponent
    Theorem5 {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        log_a: String,
        #[arg(long)]
        h_beta: String,
        #[arg(long)]
        e_expr: String,
        #[arg(long)]
        h_alpha: Option<String>,
        #[arg(long)]
        abs_beta: Option<String>,
    },
    /// Integrality and size checks for scaled binomial-polynomial derivatives
    Lemma4Verify {
        #[arg(long)]
        x: i64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        h: u64,
        #[arg(long)]
        sigma: u64,
        /// optional grid sweep "nmax,hmax,sigmamax,xmax" instead of one point
        #[arg(long)]
        grid: Option<String>,
    },
    /// Exact-rank verifier for the multiplicity estimate
    ZeroEstimate {
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        d0: Option<u32>,
        #[arg(long)]
        d1: Option<u32>,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        beta: Option<String>,
        /// semicolon-separated pairs: "0,1;1,2;2,4"
        #[arg(long)]
        points: Option<String>,
    },
    /// Toy interpolation matrix: exact rank and a nonzero minor witness
    InterpDemo {
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        s1: Option<u64>,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        t1: Option<u64>,
        #[arg(long)]
        h: Option<u64>,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
    },
    /// The analytic determinant per-row bound
    Lemma3Bound {
        #[arg(long)]
        l: u64,
        #[arg(long)]
        e_expr: String,
        #[arg(long)]
        m: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        epsilon: String,
    },
    /// Vanishing order of the monomial-case determinant at the origin
    VanishingOrder {
        #[arg(long)]
        exponents: String,
        #[arg(long)]
        orders: String,
        #[arg(long)]
        points: String,
    },
    /// Certified verification of the displayed inequality chains
    ChainVerify {
        /// thm2 | thm3 | thm4 | thm5 (runs the degree sweep unless --d is given)
        #[arg(long)]
        theorem: Option<String>,
        /// run the determinant-comparison chain of this section (6)
        #[arg(long)]
        section: Option<u32>,
        /// preset parameter pack for --section 6: thm2 | thm3 | thm4
        #[arg(long)]
        preset: Option<String>,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Exhaustive search for the minimal |P(target)| or closest approximant
    Search {
        #[arg(long)]
        target: String,
        #[arg(long)]
        dmax: u32,
        #[arg(long)]
        lmax: u32,
        /// value | approx
        #[arg(long, default_value = "value")]
        mode: String,
        /// append one structured record to this run log
        #[arg(long)]
        log: Option<PathBuf>,
    },
    /// The Liouville lower bound on log |f(alpha_1, ..., alpha_n)|
    Liouville {
        #[arg(long)]
        length_f: String,
        /// comma-separated degree bounds, one per variable
        #[arg(long)]
        degrees: String,
        /// comma-separated rational height bounds, one per point
        #[arg(long)]
        heights: String,
        #[arg(long)]
        field_degree: u32,
        #[arg(long)]
        real: bool,
    },
}

#[derive(Clone, Debug)]
struct Settings {
    width: BigRational,
    ceiling: PrecisionCeiling,
    cap: u128,
}

fn load_settings(cli: &Cli) -> Result<Settings> {
    let mut width: Option<BigRational> = None;
    let mut max_bits: Option<u32> = None;
    let mut cap: Option<u128> = None;
    let mut workers: Option<usize> = None;
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path)?;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("config: expected key=value, got `{line}`")))?;
            match k.trim() {
                "precision" => width = Some(parse_rational(v)?),
                "max-precision" => {
                    max_bits = Some(
                        v.trim()
                            .parse()
                            .map_err(|e| Error::Parse(format!("config: {e}")))?,
                    )
                }
                "workers" => {
                    workers = Some(
                        v.trim()
                            .parse()
                            .map_err(|e| Error::Parse(format!("config: {e}")))?,
                    )
                }
                "cap" => {
                    cap = Some(
                        v.trim()
                            .parse()
                            .map_err(|e| Error::Parse(format!("config: {e}")))?,
                    )
                }
                other => return Err(Error::Parse(format!("config: unknown key `{other}`"))),
            }
        }
    }
    if let Some(p) = &cli.precision {
        width = Some(parse_rational(p)?);
    }
    if let Some(b) = cli.max_precision {
        max_bits = Some(b);
    }
    if let Some(c) = cli.cap {
        cap = Some(c);
    }
    if let Some(w) = cli.workers.or(workers) {
        // a failure here just means a pool already exists (fine for tests)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global();
    }
    let width = match width {
        Some(w) if w.is_positive() => w,
        Some(_) => return Err(Error::Parse("precision must be positive".into())),
        None => parse_rational("1e-30")?,
    };
    let ceiling = match max_bits {
        Some(bits) => PrecisionCeiling {
            max_bits: bits.max(32),
        },
        None => PrecisionCeiling::from_env(),
    };
    Ok(Settings {
        width,
        ceiling,
        cap: cap.unwrap_or(DEFAULT_CAP),
    })
}

/// Entry point used by both the binary and the tests.
pub fn dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return 2;
        }
    };
    let settings = match load_settings(&cli) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let out = cli.out.clone();
    match run_command(cli.command, &settings) {
        Ok(report) => {
            println!("{}", report.to_json());
            if let Some(path) = out {
                if let Err(e) = report.write_to(&path) {
                    eprintln!("error writing report: {e}");
                    return 2;
                }
            }
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn eval_real_expr(text: &str, bits: u32) -> Result<CertifiedReal> {
    let v = ThetaExpr::parse(text)?.eval(bits)?;
    if !v.is_real_certain() {
        return Err(Error::Parse(format!("`{text}` must be a real expression")));
    }
    Ok(v.re)
}

fn run_command(command: Command, settings: &Settings) -> Result<RunReport> {
    let started = Instant::now();
    let ceiling = settings.ceiling;
    let mut report = match command {
        Command::Height { minpoly } => {
            let p = IntPolynomial::parse(&minpoly)?;
            let h = height_of_minpoly(&p, &settings.width, &ceiling)?;
            RunReport::new("height", json!({"minpoly": p.to_string()})).with_results(json!({
                "degree": p.degree(),
                "length": length(&p).to_string(),
                "height": IntervalJson::of(&h),
            }))
        }
        Command::MeasureBound {
            target,
            form,
            d,
            length,
        } => {
            let q = MeasureQuery::new(
                target.parse::<Target>()?,
                form.parse::<MeasureForm>()?,
                d,
                parse_rational(&length)?,
            )?;
            let bits = crate::numerics::bits_for_width(&settings.width).max(96);
            let bound = measure_bound(&q, bits)?;
            RunReport::new(
                "measure-bound",
                json!({"target": target, "form": form, "d": d, "length": length}),
            )
            .with_results(json!({"log_lower_bound": IntervalJson::of(&bound)}))
        }
        Command::Theorem1 {
            d,
            log_a,
            log_b,
            e_expr,
            theta,
        } => {
            let bits = 256;
            let log_a = CertifiedReal::exact(parse_rational(&log_a)?);
            let log_b = CertifiedReal::exact(parse_rational(&log_b)?);
            let e_param = eval_real_expr(&e_expr, bits)?;
            let theta_v = ThetaExpr::parse(&theta)?.eval(bits)?;
            let params = derive_params(d, &log_a, &log_b, &e_param, &theta_v, &ceiling)?;
            let bound = theorem1_log_bound(&params, bits)?;
            let mut r = RunReport::new("theorem1", json!({"d": d, "e": e_expr, "theta": theta}))
                .with_results(json!({
                    "log_lower_bound": IntervalJson::of(&bound),
                    "params": params_json(&params),
                }));
            push_param_checks(&mut r, &params);
            r
        }
        Command::Theorem5 {
            kind,
            d,
            log_a,
            h_beta,
            e_expr,
            h_alpha,
            abs_beta,
        } => {
            let bits = 192;
            let kind_v: Theorem5Kind = kind.parse()?;
            let log_a = CertifiedReal::exact(parse_rational(&log_a)?);
            let h_beta = CertifiedReal::exact(parse_rational(&h_beta)?);
            let e_param = eval_real_expr(&e_expr, bits)?;
            let hyp = match (h_alpha, abs_beta) {
                (Some(ha), Some(ab)) => Some(Theorem5Hypothesis {
                    h_alpha: CertifiedReal::exact(parse_rational(&ha)?),
                    abs_beta: CertifiedReal::exact(parse_rational(&ab)?),
                }),
                _ => None,
            };
            let bound =
                theorem5_log_bound(kind_v, d, &log_a, &h_beta, &e_param, hyp.as_ref(), bits)?;
            RunReport::new("theorem5", json!({"kind": kind, "d": d}))
                .with_results(json!({"log_lower_bound": IntervalJson::of(&bound)}))
        }
        Command::Lemma4Verify {
            x,
            n,
            h,
            sigma,
            grid,
        } => {
            let mut r = RunReport::new(
                "lemma4-verify",
                json!({"x": x, "n": n, "h": h, "sigma": sigma, "grid": grid}),
            );
            let mut cells = 0u64;
            let mut failures = Vec::new();
            let mut check_cell = |x: i64, n: u64, h: u64, sigma: u64| -> Result<()> {
                let p = DeltaParams::new(n, h)?;
                let rep = lemma4_check(&BigInt::from(x), &p, sigma, &ceiling)?;
                cells += 1;
                if !rep.all_pass() {
                    failures.push(json!({
                        "x": x, "n": n, "h": h, "sigma": sigma,
                        "integrality": rep.integrality,
                        "bound_42": rep.bound_42,
                        "bound_43": rep.bound_43,
                    }));
                }
                Ok(())
            };
            if let Some(g) = grid {
                let parts: Vec<u64> = g
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse()
                            .map_err(|e| Error::Parse(format!("{t}: {e}")))
                    })
                    .collect::<Result<_>>()?;
                if parts.len() != 4 {
                    return Err(Error::Parse("grid needs nmax,hmax,sigmamax,xmax".into()));
                }
                for n in 1..=parts[0] {
                    for h in 1..=parts[1] {
                        for sigma in 0..=parts[2] {
                            for x in -(parts[3] as i64)..=parts[3] as i64 {
                                check_cell(x, n, h, sigma)?;
                            }
                        }
                    }
                }
            } else {
                check_cell(x, n, h, sigma)?;
            }
            let pass = failures.is_empty();
            r = r.with_results(json!({"cells": cells, "failures": failures}));
            let flag = if pass {
                CertifiedReal::one()
            } else {
                CertifiedReal::zero()
            };
            r.push_check("all cells pass", &flag, &CertifiedReal::one(), false, pass);
            r
        }
        Command::ZeroEstimate {
            file,
            d0,
            d1,
            s,
            m,
            beta,
            points,
        } => {
            let inst = match file {
                Some(path) => ZeroEstimateInstance::parse(&std::fs::read_to_string(path)?)?,
                None => {
                    let missing = || Error::Parse("either --file or all inline flags".into());
                    let points_text = points.ok_or_else(missing)?;
                    let pts = points_text
                        .split(';')
                        .map(|pair| {
                            let (x, y) = pair
                                .split_once(',')
                                .ok_or_else(|| Error::Parse("point needs x,y".into()))?;
                            Ok((parse_rational(x)?, parse_rational(y)?))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let inst = ZeroEstimateInstance {
                        d0: d0.ok_or_else(missing)?,
                        d1: d1.ok_or_else(missing)?,
                        s: s.ok_or_else(missing)?,
                        m: m.ok_or_else(missing)?,
                        beta: parse_rational(&beta.ok_or_else(missing)?)?,
                        points: pts,
                    };
                    inst.validate()?;
                    inst
                }
            };
            let rep = lemma2_check(&inst)?;
            let mut r = RunReport::new(
                "zero-estimate",
                json!({
                    "d0": inst.d0, "d1": inst.d1, "s": inst.s, "m": inst.m,
                    "beta": inst.beta.to_string(),
                }),
            )
            .with_results(json!({
                "condition": rep.condition_21,
                "rank": rep.rank,
                "kernel_dim": rep.kernel_dim,
                "verdict": match rep.verdict {
                    Lemma2Verdict::ConsistentWithLemma => "consistent-with-lemma",
                    Lemma2Verdict::Counterexample => "COUNTEREXAMPLE",
                },
                "kernel_witness": rep.kernel_witness.as_ref().map(|(v, p)| json!({
                    "coefficients": v.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "polynomial": p.to_string(),
                })),
            }));
            let consistent = rep.verdict == Lemma2Verdict::ConsistentWithLemma;
            let flag = if consistent {
                CertifiedReal::one()
            } else {
                CertifiedReal::zero()
            };
            r.push_check(
                "no counterexample",
                &flag,
                &CertifiedReal::one(),
                false,
                consistent,
            );
            r
        }
        Command::InterpDemo {
            file,
            s,
            s1,
            t,
            t1,
            h,
            alpha,
            beta,
        } => {
            let cfg = match file {
                Some(path) => ToyConfig::parse(&std::fs::read_to_string(path)?)?,
                None => {
                    let missing = || Error::Parse("either --file or all inline flags".into());
                    ToyConfig::new(
                        s.ok_or_else(missing)?,
                        s1.ok_or_else(missing)?,
                        t.ok_or_else(missing)?,
                        t1.ok_or_else(missing)?,
                        h.ok_or_else(missing)?,
                        parse_rational(&alpha.ok_or_else(missing)?)?,
                        parse_rational(&beta.ok_or_else(missing)?)?,
                    )
                }
            };
            let rep = toy_rank_check(&cfg)?;
            let full = rep.rank == rep.cols;
            let mut r = RunReport::new(
                "interp-demo",
                json!({
                    "s": cfg.s, "s1": cfg.s1, "t": cfg.t, "t1": cfg.t1, "h": cfg.h,
                    "alpha": cfg.alpha.to_string(), "beta": cfg.beta.to_string(),
                }),
            )
            .with_results(json!({
                "l": rep.l,
                "rows": rep.rows,
                "rank": rep.rank,
                "selected_rows": rep.selected_rows,
                "minor": rep.minor.as_ref().map(|m| m.to_string()),
                "kernel": rep.kernel.as_ref().map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
            }));
            let flag = if full {
                CertifiedReal::one()
            } else {
                CertifiedReal::zero()
            };
            r.push_check("rank equals L", &flag, &CertifiedReal::one(), false, full);
            r
        }
        Command::Lemma3Bound {
            l,
            e_expr,
            m,
            s,
            epsilon,
        } => {
            let bits = 160;
            let cfg = Lemma3Config {
                l,
                e_param: eval_real_expr(&e_expr, bits)?,
                m: CertifiedReal::exact(parse_rational(&m)?),
                s: CertifiedReal::exact(parse_rational(&s)?),
                epsilon: CertifiedReal::exact(parse_rational(&epsilon)?),
            };
            let v = lemma3_rhs(&cfg, bits, &ceiling)?;
            RunReport::new("lemma3-bound", json!({"l": l, "e": e_expr, "m": m, "s": s}))
                .with_results(json!({"per_row_bound": IntervalJson::of(&v)}))
        }
        Command::VanishingOrder {
            exponents,
            orders,
            points,
        } => {
            let parse_u64_list = |text: &str| -> Result<Vec<u64>> {
                text.split(',')
                    .map(|t| {
                        t.trim()
                            .parse()
                            .map_err(|e| Error::Parse(format!("{t}: {e}")))
                    })
                    .collect()
            };
            let case = VanishingOrderCase {
                exponents: parse_u64_list(&exponents)?,
                orders: parse_u64_list(&orders)?,
                points: points
                    .split(',')
                    .map(parse_rational)
                    .collect::<Result<Vec<_>>>()?,
            };
            let rep = vanishing_order_check(&case)?;
            let mut r = RunReport::new(
                "vanishing-order",
                json!({"exponents": case.exponents, "orders": case.orders}),
            )
            .with_results(json!({
                "computed_ord": rep.computed_ord,
                "lower_bound": rep.lower_bound,
                "identically_zero": rep.computed_ord.is_none(),
            }));
            let flag = if rep.pass {
                CertifiedReal::one()
            } else {
                CertifiedReal::zero()
            };
            r.push_check(
                "order meets the bound",
                &flag,
                &CertifiedReal::one(),
                false,
                rep.pass,
            );
            r
        }
        Command::ChainVerify {
            theorem,
            section,
            preset,
            d,
        } => {
            let mut r = RunReport::new(
                "chain-verify",
                json!({"theorem": theorem, "section": section, "preset": preset, "d": d}),
            );
            match (theorem, section) {
                (Some(t), None) => {
                    let which: TheoremChain = t.parse()?;
                    let degrees = match d {
                        Some(one) => vec![one],
                        None => default_sweep_degrees(),
                    };
                    for deg in degrees {
                        let chain = chain_check_theorem_derivations(which, deg, &ceiling)?;
                        r.push_chain(&chain);
                    }
                }
                (None, Some(6)) => {
                    let name = preset.as_deref().unwrap_or("thm2");
                    let params = preset_params(name, &ceiling)?;
                    let chain = chain_check_section6(&params, &ceiling)?;
                    r.push_chain(&chain);
                    r = r.with_results(json!({
                        "params": params_json(&params),
                        "constants": constants::table().iter().map(|e| json!({
                            "name": e.name,
                            "value": e.value.to_string(),
                            "role": e.role,
                        })).collect::<Vec<_>>(),
                    }));
                }
                (None, Some(n)) => {
                    return Err(Error::Parse(format!("no chain for section {n}")));
                }
                _ => {
                    return Err(Error::Parse(
                        "choose either --theorem <name> or --section 6".into(),
                    ));
                }
            }
            r
        }
        Command::Search {
            target,
            dmax,
            lmax,
            mode,
            log,
        } => {
            let target_v: Target = target.parse()?;
            let mut space = SearchSpace::new(target_v, dmax, lmax);
            space.cap = settings.cap;
            // desk searches certify to at least 1e-6
            let width = std::cmp::min(settings.width.clone(), parse_rational("1e-6")?);
            let mut r = RunReport::new(
                "search",
                json!({"target": target, "dmax": dmax, "lmax": lmax, "mode": mode}),
            );
            let record;
            match mode.as_str() {
                "value" => {
                    let out = enumerate_min_poly_value(&space, &width, &ceiling)?;
                    let q = MeasureQuery::new(
                        target_v,
                        MeasureForm::Polynomial,
                        dmax,
                        BigRational::from_integer(BigInt::from(lmax)),
                    )?;
                    let cmp = verify_against_bound(&out.value, &q, 160)?;
                    r = r.with_results(json!({
                        "best": out.best.to_string(),
                        "value": IntervalJson::of(&out.value),
                        "candidates": out.candidates.to_string(),
                        "log_min": IntervalJson::of(&cmp.log_min),
                        "bound": IntervalJson::of(&cmp.bound),
                        "margin": IntervalJson::of(&cmp.margin),
                    }));
                    r.push_check(
                        "log(min) >= bound",
                        &cmp.bound,
                        &cmp.log_min,
                        false,
                        cmp.pass,
                    );
                    record = RunRecord {
                        target: target.clone(),
                        d_max: dmax,
                        l_max: lmax,
                        mode: mode.clone(),
                        witness: out.best.to_string(),
                        value_lo: out.value.lo().to_string(),
                        value_hi: out.value.hi().to_string(),
                        candidates: out.candidates,
                        pass: Some(cmp.pass),
                    };
                }
                "approx" => {
                    let out = enumerate_min_alg_approx(&space, &width, &ceiling)?;
                    let q = MeasureQuery::new(
                        target_v,
                        MeasureForm::AlgebraicApprox,
                        dmax,
                        BigRational::from_integer(BigInt::from(lmax)),
                    )?;
                    let cmp = verify_against_bound(&out.distance, &q, 160)?;
                    r = r.with_results(json!({
                        "best": out.best.to_string(),
                        "root": IntervalJson::of(&out.root),
                        "distance": IntervalJson::of(&out.distance),
                        "candidates": out.candidates.to_string(),
                        "margin": IntervalJson::of(&cmp.margin),
                    }));
                    r.push_check(
                        "log(dist) >= bound",
                        &cmp.bound,
                        &cmp.log_min,
                        false,
                        cmp.pass,
                    );
                    record = RunRecord {
                        target: target.clone(),
                        d_max: dmax,
                        l_max: lmax,
                        mode: mode.clone(),
                        witness: out.best.to_string(),
                        value_lo: out.distance.lo().to_string(),
                        value_hi: out.distance.hi().to_string(),
                        candidates: out.candidates,
                        pass: Some(cmp.pass),
                    };
                }
                other => return Err(Error::Parse(format!("unknown mode `{other}`"))),
            }
            if let Some(path) = log {
                append_run_record(&path, &record)?;
            }
            r
        }
        Command::Liouville {
            length_f,
            degrees,
            heights,
            field_degree,
            real,
        } => {
            let len = parse_rational(&length_f)?;
            if !len.is_integer() {
                return Err(Error::Parse("length must be an integer".into()));
            }
            let degree_bounds: Vec<u64> = degrees
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|e| Error::Parse(format!("{t}: {e}")))
                })
                .collect::<Result<_>>()?;
            let height_vals: Vec<CertifiedReal> = heights
                .split(',')
                .map(|t| parse_rational(t).map(CertifiedReal::exact))
                .collect::<Result<_>>()?;
            let ctx = LiouvilleContext {
                field_degree,
                is_real_field: real,
            };
            let bound =
                liouville_bound(&len.to_integer(), &degree_bounds, &height_vals, &ctx, 160)?;
            RunReport::new(
                "liouville",
                json!({"length_f": length_f, "degrees": degrees, "field_degree": field_degree, "real": real}),
            )
            .with_results(json!({"log_lower_bound": IntervalJson::of(&bound)}))
        }
    };
    report.timing_ms = started.elapsed().as_millis();
    report.max_bits = settings.ceiling.max_bits;
    Ok(report)
}

fn params_json(p: &BoundParams) -> serde_json::Value {
    json!({
        "d": p.d,
        "u": IntervalJson::of(&p.u),
        "v": IntervalJson::of(&p.v),
        "w": IntervalJson::of(&p.w),
        "log_e": IntervalJson::of(&p.log_e),
        "theta": ComplexIntervalJson::of(&p.theta),
        "s": p.s, "s1": p.s1, "t": p.t, "t1": p.t1, "h": p.h, "l": p.l,
        "checks": p.checks.iter().map(|c| json!({"label": c.label, "pass": c.pass})).collect::<Vec<_>>(),
    })
}

fn push_param_checks(report: &mut RunReport, params: &BoundParams) {
    for c in &params.checks {
        let flag = if c.pass {
            CertifiedReal::one()
        } else {
            CertifiedReal::zero()
        };
        report.push_check(&c.label, &flag, &CertifiedReal::one(), false, c.pass);
    }
}

/// Named parameter packs reproducing the measure-derivation instantiations.
pub fn preset_params(name: &str, ceiling: &PrecisionCeiling) -> Result<BoundParams> {
    let bits = 256;
    match name {
        // theta = pi i, E = e^2, log A = 1/D, witness xi = 3 (so D = 2,
        // log B = h(3i) = log 3)
        "thm2" => derive_params(
            2,
            &CertifiedReal::exact(rat(1, 2)),
            &ln_rat(&rat(3, 1), bits)?,
            &e_const(bits).powi(2),
            &CertifiedComplex::new(CertifiedReal::zero(), pi(bits)),
            ceiling,
        ),
        // theta = log 2, E = e d, A = e, witness xi = sqrt(3) of degree 2
        // (log B = h(xi) = (log 3)/2). Degree 1 would put E = e exactly on
        // the E >= e boundary, where the chain line U <= 1 + 3.3 D log(D+2)
        // degenerates to an equality no interval precision can separate.
        "thm3" => derive_params(
            2,
            &CertifiedReal::one(),
            &ln_rat(&rat(3, 1), bits)?.scale(&rat(1, 2)),
            &e_const(bits).scale(&rat(2, 1)),
            &CertifiedComplex::from_real(crate::numerics::ln2(bits)),
            ceiling,
        ),
        // theta = 1, B = 1, log A = 1 + log L at d = 1, L = 10, E = e d log A
        "thm4" => {
            let log_a = ln_rat(&rat(10, 1), bits)?.add(&CertifiedReal::one());
            let e_param = e_const(bits).mul(&log_a);
            derive_params(
                1,
                &log_a,
                &CertifiedReal::zero(),
                &e_param,
                &CertifiedComplex::exact_rational(&rat(1, 1)),
                ceiling,
            )
        }
        other => Err(Error::Parse(format!("unknown preset `{other}`"))),
    }
}
