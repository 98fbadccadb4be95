//! Binomial polynomials Delta(z, N, H) with controlled denominators.
//!
//! For N = qH + r with 1 <= r <= H,
//!
//! ```text
//! Delta(z, N, H) = (z(z+1)...(z+H-1)/H!)^q * (z(z+1)...(z+r-1)/r!)
//! ```
//!
//! and Delta(z, 0, H) = 1. The scaled derivatives d_sigma Delta^(u)(x) with
//! d_sigma = lcm(1..H)^sigma are integers at integer x; `lemma4_check` verifies
//! that integrality together with the two certified size bounds
//! log d_sigma < (107/103) sigma H and
//! sum_u C(sigma,u) |Delta^(u)(x)| < sigma^sigma e^(N+H) (1+|x|/H)^N.

use crate::error::{Error, Result};
use crate::numerics::{exp_int, ln_int, CertifiedReal, PrecisionCeiling};
use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

/// lcm(1, 2, ..., k).
pub fn nu(k: u64) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::InvalidInstance("nu(0) is undefined".into()));
    }
    let mut acc = BigInt::one();
    for m in 2..=k {
        acc = acc.lcm(&BigInt::from(m));
    }
    Ok(acc)
}

/// Shape parameters of Delta(z, N, H): N = qH + r with 1 <= r <= H when
/// N >= 1; for N = 0 the polynomial is the constant 1 (q = r = 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DeltaParams {
    pub n: u64,
    pub h: u64,
    pub q: u64,
    pub r: u64,
}

impl DeltaParams {
    pub fn new(n: u64, h: u64) -> Result<Self> {
        if h == 0 {
            return Err(Error::InvalidInstance("H must be positive".into()));
        }
        if n == 0 {
            return Ok(DeltaParams { n, h, q: 0, r: 0 });
        }
        let q = (n - 1) / h;
        let r = n - q * h;
        debug_assert!(1 <= r && r <= h);
        Ok(DeltaParams { n, h, q, r })
    }
}

/// Exact expanded form: `numer / denom` with integer coefficients and
/// denom = (H!)^q * r!.
#[derive(Clone, Debug)]
pub struct DeltaPoly {
    pub numer: IntPolynomial,
    pub denom: BigInt,
}

impl DeltaPoly {
    pub fn degree(&self) -> usize {
        self.numer.degree().unwrap_or(0)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.numer.eval_rational(x) / BigRational::from_integer(self.denom.clone())
    }

    /// Exact u-th derivative value at x.
    pub fn derivative_at(&self, x: &BigRational, u: u64) -> BigRational {
        let mut p = self.numer.clone();
        for _ in 0..u {
            p = p.derivative();
        }
        p.eval_rational(x) / BigRational::from_integer(self.denom.clone())
    }
}

fn factorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for m in 2..=k {
        acc *= BigInt::from(m);
    }
    acc
}

/// C(n, k) as a BigInt.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn rising_factorial_poly(len: u64) -> IntPolynomial {
    // z (z+1) ... (z+len-1)
    let mut acc = IntPolynomial::constant(BigInt::one());
    for j in 0..len {
        acc = acc.mul(&IntPolynomial::from_coeffs(vec![
            BigInt::from(j),
            BigInt::one(),
        ]));
    }
    acc
}

fn expand_delta(p: &DeltaParams) -> DeltaPoly {
    if p.n == 0 {
        return DeltaPoly {
            numer: IntPolynomial::constant(BigInt::one()),
            denom: BigInt::one(),
        };
    }
    let base = rising_factorial_poly(p.h);
    let mut numer = IntPolynomial::constant(BigInt::one());
    for _ in 0..p.q {
        numer = numer.mul(&base);
    }
    numer = numer.mul(&rising_factorial_poly(p.r));
    let mut denom = BigInt::one();
    let hf = factorial(p.h);
    for _ in 0..p.q {
        denom *= &hf;
    }
    denom *= factorial(p.r);
    DeltaPoly { numer, denom }
}

static DELTA_CACHE: OnceLock<RwLock<HashMap<(u64, u64), Arc<DeltaPoly>>>> = OnceLock::new();

/// Cached expanded coefficients for (N, H).
pub fn delta_poly(p: &DeltaParams) -> Arc<DeltaPoly> {
    let cache = DELTA_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = cache.read().unwrap().get(&(p.n, p.h)) {
        return v.clone();
    }
    let v = Arc::new(expand_delta(p));
    cache
        .write()
        .unwrap()
        .entry((p.n, p.h))
        .or_insert_with(|| v.clone())
        .clone()
}

/// Exact value of Delta(x, N, H) by the product form (no expansion needed).
pub fn delta_eval(x: &BigRational, p: &DeltaParams) -> BigRational {
    if p.n == 0 {
        return BigRational::one();
    }
    let block = |len: u64| -> BigRational {
        let mut acc = BigRational::one();
        for j in 0..len {
            acc *= x + BigRational::from_integer(BigInt::from(j));
        }
        acc / BigRational::from_integer(factorial(len))
    };
    let mut acc = BigRational::one();
    let base = block(p.h);
    for _ in 0..p.q {
        acc *= &base;
    }
    acc * block(p.r)
}

/// Exact derivative values Delta^(u)(x, N, H) for u = 0..=sigma.
pub fn delta_derivatives(x: &BigRational, p: &DeltaParams, sigma: u64) -> Vec<BigRational> {
    let poly = delta_poly(p);
    let mut out = Vec::with_capacity(sigma as usize + 1);
    let mut current = poly.numer.clone();
    let denom = BigRational::from_integer(poly.denom.clone());
    for _u in 0..=sigma {
        out.push(current.eval_rational(x) / &denom);
        current = current.derivative();
    }
    out
}

/// d_sigma = nu(H)^sigma.
#[derive(Clone, Debug)]
pub struct DenominatorPower {
    pub h: u64,
    pub sigma: u64,
    pub value: BigInt,
}

pub fn d_sigma(h: u64, sigma: u64) -> Result<DenominatorPower> {
    let base = nu(h)?;
    let mut value = BigInt::one();
    for _ in 0..sigma {
        value *= &base;
    }
    Ok(DenominatorPower { h, sigma, value })
}

/// Outcome of the integrality and size checks at one grid point.
#[derive(Clone, Debug)]
pub struct ScaledDerivativeReport {
    pub integrality: bool,
    pub bound_42: bool,
    pub bound_43: bool,
    /// the integers d_sigma * Delta^(u)(x), u = 0..=sigma, when integral
    pub witnesses: Vec<BigInt>,
}

impl ScaledDerivativeReport {
    pub fn all_pass(&self) -> bool {
        self.integrality && self.bound_42 && self.bound_43
    }
}

/// Integrality of d_sigma Delta^(u)(x) for u <= sigma, plus the certified
/// bounds on log d_sigma and on the binomial-weighted derivative sum.
///
/// The log d_sigma bound is strict; at sigma = 0 both sides are zero and the
/// comparison is treated as vacuously passing.
pub fn lemma4_check(
    x: &BigInt,
    p: &DeltaParams,
    sigma: u64,
    ceiling: &PrecisionCeiling,
) -> Result<ScaledDerivativeReport> {
    if p.n == 0 {
        return Err(Error::InvalidInstance("N must be at least 1 here".into()));
    }
    let xq = BigRational::from_integer(x.clone());
    let derivs = delta_derivatives(&xq, p, sigma);
    let d_sig = d_sigma(p.h, sigma)?.value;

    let mut integrality = true;
    let mut witnesses = Vec::with_capacity(derivs.len());
    for d in &derivs {
        let scaled = d * BigRational::from_integer(d_sig.clone());
        if scaled.is_integer() {
            witnesses.push(scaled.to_integer());
        } else {
            integrality = false;
        }
    }

    // (4.2): log d_sigma < (107/103) sigma H, strict; sigma = 0 is vacuous
    let bound_42 = if sigma == 0 {
        true
    } else if d_sig.is_one() {
        // log 1 = 0 < positive right side
        true
    } else {
        let rhs = BigRational::new(
            BigInt::from(107u32) * BigInt::from(sigma) * BigInt::from(p.h),
            BigInt::from(103u32),
        );
        ceiling.escalate(64, "log d_sigma bound", |bits| {
            let log_d = ln_int(&d_sig, bits).ok()?;
            if log_d.hi() < &rhs {
                Some(true)
            } else if log_d.lo() >= &rhs {
                Some(false)
            } else {
                None
            }
        })?
    };

    // (4.3): sum_u C(sigma,u) |Delta^(u)(x)| < sigma^sigma e^(N+H) (1+|x|/H)^N
    let mut lhs = BigRational::zero();
    for (u, d) in derivs.iter().enumerate() {
        lhs += BigRational::from_integer(binomial(sigma, u as u64)) * d.abs();
    }
    let sigma_pow = if sigma == 0 {
        BigRational::one()
    } else {
        let mut acc = BigInt::one();
        for _ in 0..sigma {
            acc *= BigInt::from(sigma);
        }
        BigRational::from_integer(acc)
    };
    let growth = {
        let base = BigRational::one() + BigRational::new(x.abs(), BigInt::from(p.h));
        let mut acc = BigRational::one();
        for _ in 0..p.n {
            acc *= &base;
        }
        acc
    };
    let rational_factor = sigma_pow * growth;
    let bound_43 = ceiling.escalate(64, "derivative sum bound", |bits| {
        let e_pow = exp_int((p.n + p.h) as i64, bits);
        let rhs = e_pow.scale(&rational_factor);
        if &lhs < rhs.lo() {
            Some(true)
        } else if &lhs >= rhs.hi() {
            Some(false)
        } else {
            None
        }
    })?;

    Ok(ScaledDerivativeReport {
        integrality,
        bound_42,
        bound_43,
        witnesses,
    })
}

/// Certified interval for log d_sigma, used by bound assemblies elsewhere.
pub fn log_d_sigma(h: u64, sigma: u64, bits: u32) -> Result<CertifiedReal> {
    let d = d_sigma(h, sigma)?.value;
    if d.is_one() {
        return Ok(CertifiedReal::zero());
    }
    ln_int(&d, bits)
}
