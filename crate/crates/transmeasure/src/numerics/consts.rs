//! Certified evaluation of the transcendental quantities the crate needs:
//! pi, e, log 2, exp, log, sqrt, sin/cos. Everything is computed with exact
//! rational series plus explicit tail bounds, so the returned interval is a
//! true enclosure at any requested working precision.

use super::interval::{dyadic_floor, CertifiedReal};
use crate::error::{Error, Result};
use num_bigint::BigInt;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

/// Escalation ceiling for working precision, in bits of dyadic grid.
#[derive(Clone, Copy, Debug)]
pub struct PrecisionCeiling {
    pub max_bits: u32,
}

pub const DEFAULT_MAX_BITS: u32 = 1 << 14;
pub const ENV_MAX_BITS: &str = "TRANSMEASURE_MAX_BITS";

impl Default for PrecisionCeiling {
    fn default() -> Self {
        PrecisionCeiling {
            max_bits: DEFAULT_MAX_BITS,
        }
    }
}

impl PrecisionCeiling {
    /// Honors the `TRANSMEASURE_MAX_BITS` environment variable.
    pub fn from_env() -> Self {
        match std::env::var(ENV_MAX_BITS) {
            Ok(v) => match v.trim().parse::<u32>() {
                Ok(bits) if bits >= 32 => PrecisionCeiling { max_bits: bits },
                _ => PrecisionCeiling::default(),
            },
            Err(_) => PrecisionCeiling::default(),
        }
    }

    /// Run `f` at doubling precision until it reports a decided answer.
    pub fn escalate<T>(
        &self,
        start_bits: u32,
        context: &str,
        mut f: impl FnMut(u32) -> Option<T>,
    ) -> Result<T> {
        let mut bits = start_bits.max(16).min(self.max_bits);
        loop {
            if let Some(v) = f(bits) {
                return Ok(v);
            }
            if bits >= self.max_bits {
                return Err(Error::InconclusivePrecision {
                    context: context.to_string(),
                    max_bits: self.max_bits,
                });
            }
            bits = bits.saturating_mul(2).min(self.max_bits);
        }
    }
}

/// Bits needed so the dyadic grid is finer than `width`.
pub fn bits_for_width(width: &BigRational) -> u32 {
    assert!(width.is_positive(), "width target must be positive");
    // smallest b with 2^-b <= width  =>  b >= log2(1/width)
    let inv = width.recip();
    let n_bits = inv.numer().abs().bits() as i64;
    let d_bits = inv.denom().bits() as i64;
    (n_bits - d_bits + 2).max(1) as u32
}

fn two_pow(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

// ---------------------------------------------------------------------------
// elementary certified routines
// ---------------------------------------------------------------------------

/// arctan(1/q) for integer q >= 2, via the alternating Gregory series.
fn atan_recip(q: i64, bits: u32) -> CertifiedReal {
    assert!(q >= 2);
    let tol = two_pow(bits + 4);
    let q2 = BigRational::from_integer(BigInt::from(q) * BigInt::from(q));
    let mut term = BigRational::new(BigInt::one(), BigInt::from(q));
    let mut sum = BigRational::zero();
    let mut k: u64 = 0;
    let grain = bits + 32;
    loop {
        let contrib = &term / BigRational::from_integer(BigInt::from(2 * k + 1));
        if contrib < tol {
            // alternating with decreasing terms: the exact partial sum lies in
            // [sum, sum + drift] with drift = k * 2^-grain from the floor
            // roundings, and truth is within the next term of the partial sum
            let drift = drift_bound(k, grain);
            let (lo, hi) = if k % 2 == 0 {
                (&sum - &drift, &sum + &contrib + &drift)
            } else {
                (&sum - &contrib - &drift, &sum + &drift)
            };
            return CertifiedReal::new(lo, hi).round_out(bits);
        }
        if k % 2 == 0 {
            sum += &contrib;
        } else {
            sum -= &contrib;
        }
        term /= &q2;
        k += 1;
        sum = dyadic_floor(&sum, grain);
    }
}

/// Symmetric bound on the drift of a running sum that was floored onto the
/// 2^-grain grid `steps` times, with a factor 3 covering the propagation of
/// term roundings through series whose term ratio is at most 1/2.
fn drift_bound(steps: u64, grain: u32) -> BigRational {
    BigRational::new(
        BigInt::from(3) * BigInt::from(steps + 1),
        BigInt::one() << grain,
    )
}

/// pi by the Machin formula 16 atan(1/5) - 4 atan(1/239).
fn compute_pi(bits: u32) -> CertifiedReal {
    let guard = bits + 24;
    let a = atan_recip(5, guard).scale(&BigRational::from_integer(BigInt::from(16)));
    let b = atan_recip(239, guard).scale(&BigRational::from_integer(BigInt::from(4)));
    a.sub(&b).round_out(bits)
}

/// An independent route to pi: 4 (atan(1/2) + atan(1/3)). Used by tests as a
/// cross-check oracle, never by the main path.
pub fn pi_second_method(bits: u32) -> CertifiedReal {
    let guard = bits + 24;
    let a = atan_recip(2, guard);
    let b = atan_recip(3, guard);
    a.add(&b)
        .scale(&BigRational::from_integer(BigInt::from(4)))
        .round_out(bits)
}

/// log 2 = 2 atanh(1/3), a positive series with a geometric tail bound.
fn compute_ln2(bits: u32) -> CertifiedReal {
    atanh_recip_times2(3, bits)
}

/// 2 atanh(1/q) = log((q+1)/(q-1)) for integer q >= 2.
fn atanh_recip_times2(q: i64, bits: u32) -> CertifiedReal {
    let guard = bits + 16;
    let grain = guard + 32;
    let tol = two_pow(guard);
    let q2 = BigRational::from_integer(BigInt::from(q) * BigInt::from(q));
    let mut term = BigRational::new(BigInt::from(2), BigInt::from(q));
    let mut sum = BigRational::zero();
    let mut k: u64 = 0;
    loop {
        let contrib = &term / BigRational::from_integer(BigInt::from(2 * k + 1));
        if contrib < tol {
            // remaining tail < contrib * q^2/(q^2-1)
            let tail = &contrib * &q2 / (&q2 - BigRational::one());
            let drift = drift_bound(k, grain);
            return CertifiedReal::new(&sum - &drift, &sum + &tail + &drift).round_out(bits);
        }
        sum += &contrib;
        sum = dyadic_floor(&sum, grain);
        term /= &q2;
        k += 1;
    }
}

/// Second route to log 2 for tests: sum 1/(k 2^k).
pub fn ln2_second_method(bits: u32) -> CertifiedReal {
    let tol = two_pow(bits + 8);
    let mut sum = BigRational::zero();
    let mut pow = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut k: u64 = 1;
    loop {
        let contrib = &pow / BigRational::from_integer(BigInt::from(k));
        if contrib < tol {
            // remaining sum_{j>=k} 1/(j 2^j) <= (1/k) sum_{j>=k} 2^-j = 2 pow / k
            let tail = BigRational::new(BigInt::from(2), BigInt::from(k)) * &pow;
            return CertifiedReal::new(sum.clone(), &sum + &tail).round_out(bits);
        }
        sum += &contrib;
        pow /= BigRational::from_integer(BigInt::from(2));
        k += 1;
    }
}

/// e as sum of inverse factorials, tail < 2/(J+1)!.
fn compute_e(bits: u32) -> CertifiedReal {
    let tol = two_pow(bits + 8);
    let mut sum = BigRational::one();
    let mut term = BigRational::one();
    let mut j: u64 = 1;
    loop {
        term /= BigRational::from_integer(BigInt::from(j));
        if term < tol {
            let tail = &term * BigRational::from_integer(BigInt::from(2));
            return CertifiedReal::new(sum.clone(), &sum + &tail).round_out(bits);
        }
        sum += &term;
        j += 1;
    }
}

struct ConstCache {
    slot: RwLock<Option<(u32, CertifiedReal)>>,
}

impl ConstCache {
    const fn new() -> Self {
        ConstCache {
            slot: RwLock::new(None),
        }
    }

    fn get(&self, bits: u32, compute: impl Fn(u32) -> CertifiedReal) -> CertifiedReal {
        if let Some((cached_bits, v)) = self.slot.read().unwrap().as_ref() {
            if *cached_bits >= bits {
                return v.round_out(bits);
            }
        }
        let v = compute(bits);
        let mut w = self.slot.write().unwrap();
        match w.as_ref() {
            Some((cached_bits, _)) if *cached_bits >= bits => {}
            _ => *w = Some((bits, v.clone())),
        }
        v
    }
}

static PI_CACHE: ConstCache = ConstCache::new();
static E_CACHE: ConstCache = ConstCache::new();
static LN2_CACHE: ConstCache = ConstCache::new();

pub fn pi(bits: u32) -> CertifiedReal {
    PI_CACHE.get(bits, compute_pi)
}

pub fn e_const(bits: u32) -> CertifiedReal {
    E_CACHE.get(bits, compute_e)
}

pub fn ln2(bits: u32) -> CertifiedReal {
    LN2_CACHE.get(bits, compute_ln2)
}

/// exp of an exact rational, by scaling into [-1/2, 1/2], a Taylor sum with a
/// tail bound, and repeated interval squaring.
pub fn exp_rat(x: &BigRational, bits: u32) -> CertifiedReal {
    if x.is_zero() {
        return CertifiedReal::one();
    }
    // choose k with |x| / 2^k <= 1/2
    let mut k: u32 = 0;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut mag = x.abs();
    while mag > half {
        mag /= BigRational::from_integer(BigInt::from(2));
        k += 1;
    }
    let guard = bits + 8 + 2 * k;
    let grain = guard + 32;
    let y = x / BigRational::from_integer(BigInt::one() << k);
    let tol = two_pow(guard + 4);
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    let mut j: u64 = 1;
    loop {
        term = &term * &y / BigRational::from_integer(BigInt::from(j));
        let bound = term.abs();
        if bound < tol {
            let tail = &bound * BigRational::from_integer(BigInt::from(2));
            let pad = &tail + drift_bound(j, grain);
            let mut acc = CertifiedReal::new(&sum - &pad, &sum + &pad);
            for _ in 0..k {
                acc = acc.mul(&acc).round_out(guard);
            }
            return acc.round_out(bits);
        }
        sum += &term;
        sum = dyadic_floor(&sum, grain);
        term = dyadic_floor(&term, grain);
        j += 1;
    }
}

/// Monotone interval version of exp.
pub fn exp_interval(x: &CertifiedReal, bits: u32) -> CertifiedReal {
    let lo = exp_rat(x.lo(), bits);
    let hi = exp_rat(x.hi(), bits);
    CertifiedReal::new(lo.lo().clone(), hi.hi().clone())
}

/// Natural log of a positive exact rational.
///
/// Argument reduction x = m 2^e with m in [1/2, 2], then the atanh series at
/// y = (m-1)/(m+1), |y| <= 1/3.
pub fn ln_rat(x: &BigRational, bits: u32) -> Result<CertifiedReal> {
    if !x.is_positive() {
        return Err(Error::InvalidInstance(format!(
            "log of non-positive value {x}"
        )));
    }
    if x.is_one() {
        return Ok(CertifiedReal::zero());
    }
    let guard = bits + 16;
    let e_shift = x.numer().bits() as i64 - x.denom().bits() as i64;
    let m = if e_shift >= 0 {
        x / BigRational::from_integer(BigInt::one() << (e_shift as u32))
    } else {
        x * BigRational::from_integer(BigInt::one() << ((-e_shift) as u32))
    };
    // m in (1/2, 2): y in (-1/3, 1/3)
    let y = (&m - BigRational::one()) / (&m + BigRational::one());
    let y2 = &y * &y;
    let grain = guard + 32;
    let tol = two_pow(guard + 4);
    let mut term = &y * BigRational::from_integer(BigInt::from(2));
    let mut sum = BigRational::zero();
    let mut k: u64 = 0;
    let series = loop {
        let contrib = &term / BigRational::from_integer(BigInt::from(2 * k + 1));
        let bound = contrib.abs();
        if bound < tol {
            // |tail| < bound * y^2/(1-y^2) <= (9/8) bound
            let tail = &bound * BigRational::new(BigInt::from(9), BigInt::from(8));
            let pad = &tail + drift_bound(k, grain);
            break CertifiedReal::new(&sum - &pad, &sum + &pad);
        }
        sum += &contrib;
        sum = dyadic_floor(&sum, grain);
        term = &term * &y2;
        term = dyadic_floor(&term, grain);
        k += 1;
    };
    let shift_part = ln2(guard).scale(&BigRational::from_integer(BigInt::from(e_shift)));
    Ok(series.add(&shift_part).round_out(bits))
}

/// Directed interval log; requires a certainly positive interval.
pub fn ln_interval(x: &CertifiedReal, bits: u32) -> Result<CertifiedReal> {
    if !x.certainly_positive() {
        return Err(Error::InvalidInstance(format!(
            "log over an interval not certainly positive: {x}"
        )));
    }
    let lo = ln_rat(x.lo(), bits)?;
    let hi = ln_rat(x.hi(), bits)?;
    Ok(CertifiedReal::new(lo.lo().clone(), hi.hi().clone()))
}

pub fn ln_int(n: &BigInt, bits: u32) -> Result<CertifiedReal> {
    ln_rat(&BigRational::from_integer(n.clone()), bits)
}

/// sqrt of a non-negative exact rational via integer square roots.
pub fn sqrt_rat(x: &BigRational, bits: u32) -> Result<CertifiedReal> {
    if x.is_negative() {
        return Err(Error::InvalidInstance(format!(
            "sqrt of negative value {x}"
        )));
    }
    if x.is_zero() {
        return Ok(CertifiedReal::zero());
    }
    // sqrt(n/d) = sqrt(n d)/d; scale by 4^bits for the dyadic grid
    let nd = x.numer() * x.denom();
    let scaled: BigInt = nd << (2 * bits);
    let s = scaled.sqrt();
    let denom = BigRational::from_integer(x.denom() * (BigInt::one() << bits));
    let lo = BigRational::from_integer(s.clone()) / &denom;
    let hi = BigRational::from_integer(s + BigInt::one()) / denom;
    Ok(CertifiedReal::new(lo, hi))
}

pub fn sqrt_interval(x: &CertifiedReal, bits: u32) -> Result<CertifiedReal> {
    let lo_clamped = if x.lo().is_negative() {
        BigRational::zero()
    } else {
        x.lo().clone()
    };
    if x.hi().is_negative() {
        return Err(Error::InvalidInstance(format!(
            "sqrt over negative interval {x}"
        )));
    }
    let lo = sqrt_rat(&lo_clamped, bits)?;
    let hi = sqrt_rat(x.hi(), bits)?;
    Ok(CertifiedReal::new(lo.lo().clone(), hi.hi().clone()))
}

/// Simultaneous certified sin and cos over an interval argument.
///
/// The argument is reduced modulo 2 pi before the Taylor sums, so the series
/// length stays bounded regardless of the input magnitude.
pub fn sin_cos(x: &CertifiedReal, bits: u32) -> (CertifiedReal, CertifiedReal) {
    let guard = bits + 16;
    let two_pi = pi(guard + 8).scale(&BigRational::from_integer(BigInt::from(2)));
    let approx = x.mid().to_f64().unwrap_or(0.0);
    let turns = (approx / (2.0 * std::f64::consts::PI)).round() as i64;
    let reduced = x.sub(&two_pi.scale(&BigRational::from_integer(BigInt::from(turns))));

    // |reduced| <= ~3.5 + width; find a rational magnitude bound
    let mag = reduced.abs();
    let bound = mag.hi().clone();

    let tol = two_pow(guard + 4);
    let mut cos_acc = CertifiedReal::one();
    let mut sin_acc = reduced.clone();
    // term_k for cos: (-1)^k y^{2k}/(2k)!; for sin: (-1)^k y^{2k+1}/(2k+1)!
    let y2 = reduced.mul(&reduced).round_out(guard + 16);
    let mut cos_term = CertifiedReal::one();
    let mut sin_term = reduced.clone();
    let mut bound_term = BigRational::one(); // bound^{2k}/(2k)!
    let mut k: u64 = 1;
    loop {
        cos_term = cos_term
            .mul(&y2)
            .scale(&BigRational::new(
                BigInt::one(),
                BigInt::from(2 * k - 1) * BigInt::from(2 * k),
            ))
            .round_out(guard + 16);
        sin_term = sin_term
            .mul(&y2)
            .scale(&BigRational::new(
                BigInt::one(),
                BigInt::from(2 * k) * BigInt::from(2 * k + 1),
            ))
            .round_out(guard + 16);
        let sign = if k % 2 == 1 { -1 } else { 1 };
        cos_acc = cos_acc.add(&cos_term.scale(&BigRational::from_integer(BigInt::from(sign))));
        sin_acc = sin_acc.add(&sin_term.scale(&BigRational::from_integer(BigInt::from(sign))));
        bound_term = &bound_term * &bound * &bound
            / BigRational::from_integer(BigInt::from(2 * k - 1) * BigInt::from(2 * k));
        // remainder bounds: next term magnitude, once terms are decreasing
        let cos_rem = &bound_term * &bound * &bound
            / BigRational::from_integer(BigInt::from(2 * k + 1) * BigInt::from(2 * k + 2));
        let sin_rem = &cos_rem * &bound / BigRational::from_integer(BigInt::from(2 * k + 3));
        let decreasing = &bound * &bound
            < BigRational::from_integer(BigInt::from(2 * k + 1) * BigInt::from(2 * k + 2));
        if decreasing && cos_rem < tol && sin_rem < tol {
            let cos_pad = CertifiedReal::centered(BigRational::zero(), cos_rem);
            let sin_pad = CertifiedReal::centered(BigRational::zero(), sin_rem);
            let cos_out = cos_acc.add(&cos_pad).round_out(bits);
            let sin_out = sin_acc.add(&sin_pad).round_out(bits);
            // clamp into [-1, 1]: valid since |sin|,|cos| <= 1
            let unit = CertifiedReal::new(
                BigRational::from_integer(BigInt::from(-1)),
                BigRational::one(),
            );
            return (
                sin_out.intersect(&unit).unwrap_or(sin_out),
                cos_out.intersect(&unit).unwrap_or(cos_out),
            );
        }
        k += 1;
    }
}

// ---------------------------------------------------------------------------
// named constants at a requested width
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstName {
    Pi,
    E,
    Log2,
}

impl FromStr for ConstName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "pi" => Ok(ConstName::Pi),
            "e" => Ok(ConstName::E),
            "log2" | "ln2" => Ok(ConstName::Log2),
            other => Err(Error::UnknownConstant(other.to_string())),
        }
    }
}

/// Enclosure of a named constant with width at most `width`.
pub fn const_eval(
    name: ConstName,
    width: &BigRational,
    ceiling: &PrecisionCeiling,
) -> Result<CertifiedReal> {
    if !width.is_positive() {
        return Err(Error::InvalidInstance("precision must be positive".into()));
    }
    let start = bits_for_width(width) + 4;
    ceiling.escalate(start, &format!("const {name:?} to width {width}"), |bits| {
        let v = match name {
            ConstName::Pi => pi(bits),
            ConstName::E => e_const(bits),
            ConstName::Log2 => ln2(bits),
        };
        if &v.width() <= width {
            Some(v)
        } else {
            None
        }
    })
}

/// Parse "1e-30", "0.125", "3/4", "7" into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if let Some((n, d)) = s.split_once('/') {
        let numer = BigInt::from_str(n.trim()).map_err(|e| Error::Parse(e.to_string()))?;
        let denom = BigInt::from_str(d.trim()).map_err(|e| Error::Parse(e.to_string()))?;
        if denom.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        return Ok(BigRational::new(numer, denom));
    }
    let (mantissa, exp) = match s.to_ascii_lowercase().split_once('e') {
        Some((m, e)) => {
            let exp: i64 = e
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {s}")))?;
            (m.to_string(), exp)
        }
        None => (s.to_string(), 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i.to_string(), f.to_string()),
        None => (mantissa, String::new()),
    };
    let digits = format!("{int_part}{frac_part}");
    let digits_trimmed: String = if digits.starts_with('-') || digits.starts_with('+') {
        digits.clone()
    } else {
        digits.clone()
    };
    let numer = BigInt::from_str(&digits_trimmed).map_err(|e| Error::Parse(format!("{s}: {e}")))?;
    let scale = frac_part.len() as i64 - exp;
    let ten = BigInt::from(10u32);
    Ok(if scale >= 0 {
        BigRational::new(numer, ten.pow(scale as u32))
    } else {
        BigRational::from_integer(numer * ten.pow((-scale) as u32))
    })
}

// small memo for e^n at integer n, used heavily by the bound sweeps
static EXP_INT_CACHE: OnceLock<RwLock<HashMap<(i64, u32), CertifiedReal>>> = OnceLock::new();

/// Cached exp(n) for integer n.
pub fn exp_int(n: i64, bits: u32) -> CertifiedReal {
    let cache = EXP_INT_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = cache.read().unwrap().get(&(n, bits)) {
        return v.clone();
    }
    let v = exp_rat(&BigRational::from_integer(BigInt::from(n)), bits);
    cache.write().unwrap().insert((n, bits), v.clone());
    v
}
