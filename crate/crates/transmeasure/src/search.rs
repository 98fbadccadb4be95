//! Exhaustive empirical verification: enumerate every nonzero integer
//! polynomial of bounded degree and length (leading coefficient positive),
//! find the certified minimum of |P(target)| or the closest real algebraic
//! approximant, and compare against the explicit lower bounds.

use crate::bounds::{measure_bound, MeasureQuery, Target};
use crate::error::{Error, Result};
use crate::numerics::{bits_for_width, roots, CertifiedReal, PrecisionCeiling};
use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug)]
pub struct SearchSpace {
    pub target: Target,
    pub d_max: u32,
    pub l_max: u32,
    pub cap: u128,
}

pub const DEFAULT_CAP: u128 = 100_000_000;

impl SearchSpace {
    pub fn new(target: Target, d_max: u32, l_max: u32) -> Self {
        SearchSpace {
            target,
            d_max,
            l_max,
            cap: DEFAULT_CAP,
        }
    }
}

/// Number of signed integer vectors of length m with |x|_1 <= b.
fn signed_vectors_count(m: u32, b: u32) -> u128 {
    let mut dp = vec![0u128; b as usize + 1];
    for cell in dp.iter_mut() {
        *cell = 1; // m = 0
    }
    for _ in 0..m {
        let mut next = vec![0u128; b as usize + 1];
        for (budget, slot) in next.iter_mut().enumerate() {
            // one new coordinate of absolute value v <= budget, sign counted
            let mut acc = dp[budget]; // v = 0
            for v in 1..=budget {
                acc += 2 * dp[budget - v];
            }
            *slot = acc;
        }
        dp = next;
    }
    dp[b as usize]
}

/// Exact size of the search space: nonzero P, deg <= d_max, L(P) <= l_max,
/// leading coefficient positive.
pub fn space_size(d_max: u32, l_max: u32) -> u128 {
    let mut total = 0u128;
    for deg in 0..=d_max {
        for lead in 1..=l_max {
            total += signed_vectors_count(deg, l_max - lead);
        }
    }
    total
}

/// Work units partition the space by (degree, leading coefficient).
fn work_units(d_max: u32, l_max: u32) -> Vec<(u32, u32)> {
    (0..=d_max)
        .flat_map(|deg| (1..=l_max).map(move |lead| (deg, lead)))
        .collect()
}

/// Enumerate the candidates of one work unit in a deterministic order.
fn for_each_candidate(deg: u32, lead: u32, budget: u32, f: &mut impl FnMut(&IntPolynomial)) {
    let mut coeffs = vec![0i64; deg as usize + 1];
    coeffs[deg as usize] = lead as i64;
    fn rec(coeffs: &mut Vec<i64>, pos: usize, budget: i64, f: &mut impl FnMut(&IntPolynomial)) {
        if pos == coeffs.len() - 1 {
            let poly =
                IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect());
            f(&poly);
            return;
        }
        for v in -budget..=budget {
            coeffs[pos] = v;
            rec(coeffs, pos + 1, budget - v.abs(), f);
        }
        coeffs[pos] = 0;
    }
    rec(&mut coeffs, 0, budget as i64, f);
}

#[derive(Clone, Debug)]
pub struct ValueSearchOutcome {
    pub best: IntPolynomial,
    /// certified |P(target)|, strictly positive
    pub value: CertifiedReal,
    pub candidates: u128,
}

/// Leading-first coefficient key for deterministic tie reporting.
fn lex_key(p: &IntPolynomial) -> (usize, Vec<BigInt>) {
    (p.degree().unwrap_or(0), p.leading_first())
}

fn eval_abs(p: &IntPolynomial, t: &CertifiedReal) -> CertifiedReal {
    p.eval_interval(t).abs()
}

/// Exact minimizer of |P(target)| over the space, certified by two-phase
/// interval evaluation with precision escalation until the winner is
/// separated from every competitor.
pub fn enumerate_min_poly_value(
    space: &SearchSpace,
    value_width: &BigRational,
    ceiling: &PrecisionCeiling,
) -> Result<ValueSearchOutcome> {
    let size = space_size(space.d_max, space.l_max);
    if size > space.cap {
        return Err(Error::CapExceeded {
            size,
            cap: space.cap,
        });
    }
    let units = work_units(space.d_max, space.l_max);
    let bits0 = 96u32;
    let t0 = space.target.value(bits0);

    // phase one: a coarse certified upper bound on the minimum
    let min_hi = units
        .par_iter()
        .map(|&(deg, lead)| {
            let mut local: Option<BigRational> = None;
            for_each_candidate(deg, lead, space.l_max - lead, &mut |p| {
                let hi = eval_abs(p, &t0).hi().clone();
                if local.as_ref().is_none_or(|m| &hi < m) {
                    local = Some(hi);
                }
            });
            local
        })
        .reduce(
            || None,
            |a, b| match (a, b) {
                (Some(x), Some(y)) => Some(std::cmp::min(x, y)),
                (x, None) => x,
                (None, y) => y,
            },
        )
        .ok_or_else(|| Error::InvalidInstance("empty search space".into()))?;

    // survivors: everything whose coarse interval reaches below min_hi
    let mut survivors: Vec<IntPolynomial> = units
        .par_iter()
        .map(|&(deg, lead)| {
            let mut local = Vec::new();
            for_each_candidate(deg, lead, space.l_max - lead, &mut |p| {
                if eval_abs(p, &t0).lo() <= &min_hi {
                    local.push(p.clone());
                }
            });
            local
        })
        .reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            a
        });
    survivors.sort_by_key(lex_key);

    // phase two: escalate until a single winner is separated, positive, and
    // meets the width target
    let width_bits = bits_for_width(value_width) + 4;
    let mut bits = bits0.max(width_bits);
    loop {
        let t = space.target.value(bits);
        let vals: Vec<CertifiedReal> = survivors.iter().map(|p| eval_abs(p, &t)).collect();
        for v in &vals {
            if v.hi().is_zero() {
                return Err(Error::CheckFailed(
                    "a candidate evaluated to a certified zero at the target".into(),
                ));
            }
        }
        let best_idx = vals
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.hi().cmp(b.hi()))
            .map(|(i, _)| i)
            .unwrap();
        let best_hi = vals[best_idx].hi().clone();
        let remaining: Vec<usize> = (0..survivors.len())
            .filter(|&i| vals[i].lo() <= &best_hi)
            .collect();
        let separated = remaining.len() == 1
            && vals[best_idx].certainly_positive()
            && &vals[best_idx].width() <= value_width;
        if separated {
            return Ok(ValueSearchOutcome {
                best: survivors[best_idx].clone(),
                value: vals[best_idx].clone(),
                candidates: size,
            });
        }
        if bits >= ceiling.max_bits {
            let ambiguous: Vec<String> = remaining
                .iter()
                .map(|&i| survivors[i].to_string())
                .collect();
            return Err(Error::InconclusivePrecision {
                context: format!("winner not separated; ambiguous set {ambiguous:?}"),
                max_bits: ceiling.max_bits,
            });
        }
        // prune and escalate
        survivors = remaining
            .into_iter()
            .map(|i| survivors[i].clone())
            .collect();
        survivors.sort_by_key(lex_key);
        bits = bits.saturating_mul(2).min(ceiling.max_bits);
    }
}

#[derive(Clone, Debug)]
pub struct ApproxSearchOutcome {
    pub best: IntPolynomial,
    /// certified bracket of the witness real root
    pub root: CertifiedReal,
    /// certified |target - root|, strictly positive
    pub distance: CertifiedReal,
    pub candidates: u128,
}

/// Certified minimum of |target - xi| over real roots xi of irreducible
/// polynomials in the space. Realness comes from exact Sturm isolation.
pub fn enumerate_min_alg_approx(
    space: &SearchSpace,
    distance_width: &BigRational,
    ceiling: &PrecisionCeiling,
) -> Result<ApproxSearchOutcome> {
    let size = space_size(space.d_max, space.l_max);
    if size > space.cap {
        return Err(Error::CapExceeded {
            size,
            cap: space.cap,
        });
    }
    let units = work_units(space.d_max, space.l_max);

    // gather (minimal polynomial, isolating bracket) pairs; distinct source
    // polynomials can carry the same algebraic number (2x - 6 and x - 3), so
    // candidates are keyed by the normalized minimal polynomial
    let mut candidates: Vec<(IntPolynomial, (BigRational, BigRational))> = units
        .par_iter()
        .map(|&(deg, lead)| {
            let mut local = Vec::new();
            for_each_candidate(deg, lead, space.l_max - lead, &mut |p| {
                if p.degree().is_none_or(|d| d == 0) {
                    return;
                }
                match roots::is_irreducible(p, ceiling) {
                    Ok(true) => {
                        let minimal = p.normalized();
                        for bracket in minimal.isolate_real_roots() {
                            local.push((minimal.clone(), bracket));
                        }
                    }
                    Ok(false) => {}
                    Err(_) => {}
                }
            });
            local
        })
        .reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            a
        });
    candidates.sort_by(|a, b| lex_key(&a.0).cmp(&lex_key(&b.0)).then(a.1 .0.cmp(&b.1 .0)));
    candidates.dedup();
    if candidates.is_empty() {
        return Err(Error::InvalidInstance(
            "no real algebraic numbers in the space".into(),
        ));
    }

    let width_bits = bits_for_width(distance_width) + 4;
    let mut bits = 96u32.max(width_bits);
    loop {
        let t = space.target.value(bits);
        let root_width = BigRational::new(BigInt::one(), BigInt::one() << bits);
        let entries: Vec<(CertifiedReal, CertifiedReal)> = candidates
            .iter()
            .map(|(p, bracket)| {
                let (lo, hi) = p.refine_real_root(bracket.clone(), &root_width);
                let root = CertifiedReal::new(lo, hi);
                let dist = t.sub(&root).abs();
                (root, dist)
            })
            .collect();
        let best_idx = entries
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.1.hi().cmp(b.1.hi()))
            .map(|(i, _)| i)
            .unwrap();
        let best_hi = entries[best_idx].1.hi().clone();
        let remaining: Vec<usize> = (0..candidates.len())
            .filter(|&i| entries[i].1.lo() <= &best_hi)
            .collect();
        let separated = remaining.len() == 1
            && entries[best_idx].1.certainly_positive()
            && &entries[best_idx].1.width() <= distance_width;
        if separated {
            return Ok(ApproxSearchOutcome {
                best: candidates[best_idx].0.clone(),
                root: entries[best_idx].0.clone(),
                distance: entries[best_idx].1.clone(),
                candidates: size,
            });
        }
        if bits >= ceiling.max_bits {
            return Err(Error::InconclusivePrecision {
                context: "closest approximant not separated".into(),
                max_bits: ceiling.max_bits,
            });
        }
        candidates = remaining
            .into_iter()
            .map(|i| candidates[i].clone())
            .collect();
        candidates.sort_by(|a, b| lex_key(&a.0).cmp(&lex_key(&b.0)).then(a.1 .0.cmp(&b.1 .0)));
        bits = bits.saturating_mul(2).min(ceiling.max_bits);
    }
}

/// Comparison of a certified search minimum against the matching lower bound.
#[derive(Clone, Debug)]
pub struct BoundComparison {
    pub log_min: CertifiedReal,
    pub bound: CertifiedReal,
    pub margin: CertifiedReal,
    pub pass: bool,
}

/// pass iff certified log(min) >= bound.
pub fn verify_against_bound(
    min_value: &CertifiedReal,
    q: &MeasureQuery,
    bits: u32,
) -> Result<BoundComparison> {
    let log_min = crate::numerics::ln_interval(min_value, bits)?;
    let bound = measure_bound(q, bits)?;
    let margin = log_min.sub(&bound);
    let pass = log_min.certainly_ge(&bound);
    Ok(BoundComparison {
        log_min,
        bound,
        margin,
        pass,
    })
}

/// One structured record per (target, d, L) cell, appended to a run log so
/// sweeps can resume.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunRecord {
    pub target: String,
    pub d_max: u32,
    pub l_max: u32,
    pub mode: String,
    pub witness: String,
    pub value_lo: String,
    pub value_hi: String,
    pub candidates: u128,
    pub pass: Option<bool>,
}

pub fn append_run_record(path: &std::path::Path, record: &RunRecord) -> Result<()> {
    use std::io::Write;
    let mut file = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)?;
    let line = serde_json::to_string(record)
        .map_err(|e| Error::InvalidInstance(format!("serialize run record: {e}")))?;
    writeln!(file, "{line}")?;
    Ok(())
}
