//! Real intervals with arbitrary-precision rational endpoints.
//!
//! Every operation returns an enclosure of the exact result. Field operations
//! on rationals are themselves exact, so rounding only ever happens through
//! [`CertifiedReal::round_out`], which widens outward onto a dyadic grid to
//! keep denominators from blowing up inside iterative algorithms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Shorthand for a small rational constant.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Largest dyadic rational `q/2^bits` with `q/2^bits <= x`.
pub fn dyadic_floor(x: &BigRational, bits: u32) -> BigRational {
    let scaled_numer: BigInt = x.numer() << bits;
    let q = scaled_numer.div_floor(x.denom());
    BigRational::new(q, BigInt::one() << bits)
}

/// Smallest dyadic rational `q/2^bits` with `q/2^bits >= x`.
pub fn dyadic_ceil(x: &BigRational, bits: u32) -> BigRational {
    let scaled_numer: BigInt = x.numer() << bits;
    let q = scaled_numer.div_ceil(x.denom());
    BigRational::new(q, BigInt::one() << bits)
}

/// A closed interval `[lo, hi]` guaranteed to contain the exact value it
/// stands for.
#[derive(Clone, PartialEq, Eq)]
pub struct CertifiedReal {
    lo: BigRational,
    hi: BigRational,
}

impl CertifiedReal {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        CertifiedReal { lo, hi }
    }

    pub fn exact(x: BigRational) -> Self {
        CertifiedReal {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::exact(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Self::exact(BigRational::from_integer(n.clone()))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `[mid - radius, mid + radius]`.
    pub fn centered(mid: BigRational, radius: BigRational) -> Self {
        assert!(!radius.is_negative());
        CertifiedReal {
            lo: &mid - &radius,
            hi: mid + radius,
        }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Widen outward onto the dyadic grid `2^-bits`.
    pub fn round_out(&self, bits: u32) -> Self {
        CertifiedReal {
            lo: dyadic_floor(&self.lo, bits),
            hi: dyadic_ceil(&self.hi, bits),
        }
    }

    pub fn neg(&self) -> Self {
        CertifiedReal {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        CertifiedReal {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        CertifiedReal {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        CertifiedReal { lo, hi }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_negative() {
            CertifiedReal {
                lo: &self.hi * c,
                hi: &self.lo * c,
            }
        } else {
            CertifiedReal {
                lo: &self.lo * c,
                hi: &self.hi * c,
            }
        }
    }

    pub fn add_rational(&self, c: &BigRational) -> Self {
        CertifiedReal {
            lo: &self.lo + c,
            hi: &self.hi + c,
        }
    }

    /// None when the interval contains 0.
    pub fn recip(&self) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        Some(CertifiedReal {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.recip().map(|r| self.mul(&r))
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let hi = std::cmp::max(-self.lo.clone(), self.hi.clone());
            CertifiedReal {
                lo: BigRational::zero(),
                hi,
            }
        }
    }

    pub fn powi(&self, n: u32) -> Self {
        if n == 0 {
            return Self::one();
        }
        let lo_pow = pow_rat(&self.lo, n);
        let hi_pow = pow_rat(&self.hi, n);
        if n % 2 == 1 {
            CertifiedReal {
                lo: lo_pow,
                hi: hi_pow,
            }
        } else if !self.lo.is_negative() {
            CertifiedReal {
                lo: lo_pow,
                hi: hi_pow,
            }
        } else if !self.hi.is_positive() {
            CertifiedReal {
                lo: hi_pow,
                hi: lo_pow,
            }
        } else {
            CertifiedReal {
                lo: BigRational::zero(),
                hi: std::cmp::max(lo_pow, hi_pow),
            }
        }
    }

    /// Enclosure of `max(value, other)`.
    pub fn max_with(&self, other: &Self) -> Self {
        CertifiedReal {
            lo: std::cmp::max(self.lo.clone(), other.lo.clone()),
            hi: std::cmp::max(self.hi.clone(), other.hi.clone()),
        }
    }

    pub fn min_with(&self, other: &Self) -> Self {
        CertifiedReal {
            lo: std::cmp::min(self.lo.clone(), other.lo.clone()),
            hi: std::cmp::min(self.hi.clone(), other.hi.clone()),
        }
    }

    /// Enclosure of `max(1, value)`.
    pub fn max1(&self) -> Self {
        self.max_with(&Self::one())
    }

    pub fn hull(&self, other: &Self) -> Self {
        CertifiedReal {
            lo: std::cmp::min(self.lo.clone(), other.lo.clone()),
            hi: std::cmp::max(self.hi.clone(), other.hi.clone()),
        }
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = std::cmp::max(self.lo.clone(), other.lo.clone());
        let hi = std::cmp::min(self.hi.clone(), other.hi.clone());
        if lo <= hi {
            Some(CertifiedReal { lo, hi })
        } else {
            None
        }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains_interval(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// True when every point of `self` is `<=` every point of `other`.
    pub fn certainly_le(&self, other: &Self) -> bool {
        self.hi <= other.lo
    }

    pub fn certainly_lt(&self, other: &Self) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_ge(&self, other: &Self) -> bool {
        other.certainly_le(self)
    }

    pub fn certainly_gt(&self, other: &Self) -> bool {
        other.certainly_lt(self)
    }

    pub fn certainly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn certainly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn certainly_nonnegative(&self) -> bool {
        !self.lo.is_negative()
    }

    /// `Some(ordering)` against a rational threshold when decided.
    pub fn decided_cmp(&self, threshold: &BigRational) -> Option<Ordering> {
        if &self.hi < threshold {
            Some(Ordering::Less)
        } else if &self.lo > threshold {
            Some(Ordering::Greater)
        } else if self.is_exact() && &self.lo == threshold {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Floor shared by every point of the interval, if the interval does not
    /// straddle an integer.
    pub fn decided_floor(&self) -> Option<BigInt> {
        let f_lo = self.lo.floor().to_integer();
        let f_hi = self.hi.floor().to_integer();
        // hi exactly an integer is still fine as long as hi is not attained
        // past the shared floor; be conservative and require equality.
        if f_lo == f_hi {
            Some(f_lo)
        } else {
            None
        }
    }

    /// Outward decimal endpoints with `digits` fractional digits.
    pub fn to_decimal_pair(&self, digits: u32) -> (String, String) {
        (
            decimal_str(&self.lo, digits, false),
            decimal_str(&self.hi, digits, true),
        )
    }
}

fn pow_rat(x: &BigRational, n: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = x.clone();
    let mut k = n;
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// Decimal rendering rounded toward -inf (`ceil=false`) or +inf (`ceil=true`).
pub fn decimal_str(x: &BigRational, digits: u32, ceil: bool) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled_numer = x.numer() * &scale;
    let q = if ceil {
        scaled_numer.div_ceil(x.denom())
    } else {
        scaled_numer.div_floor(x.denom())
    };
    let neg = q.is_negative();
    let q_abs = q.abs().to_string();
    let digits = digits as usize;
    let s = if q_abs.len() <= digits {
        format!("0.{}{}", "0".repeat(digits - q_abs.len()), q_abs)
    } else {
        let split = q_abs.len() - digits;
        if digits == 0 {
            q_abs
        } else {
            format!("{}.{}", &q_abs[..split], &q_abs[split..])
        }
    };
    if neg {
        format!("-{s}")
    } else {
        s
    }
}

impl fmt::Debug for CertifiedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_decimal_pair(12);
        write!(f, "[{lo}, {hi}]")
    }
}

impl fmt::Display for CertifiedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_decimal_pair(12);
        write!(f, "[{lo}, {hi}]")
    }
}

impl Add for &CertifiedReal {
    type Output = CertifiedReal;
    fn add(self, rhs: &CertifiedReal) -> CertifiedReal {
        CertifiedReal::add(self, rhs)
    }
}

impl Sub for &CertifiedReal {
    type Output = CertifiedReal;
    fn sub(self, rhs: &CertifiedReal) -> CertifiedReal {
        CertifiedReal::sub(self, rhs)
    }
}

impl Mul for &CertifiedReal {
    type Output = CertifiedReal;
    fn mul(self, rhs: &CertifiedReal) -> CertifiedReal {
        CertifiedReal::mul(self, rhs)
    }
}

impl Neg for &CertifiedReal {
    type Output = CertifiedReal;
    fn neg(self) -> CertifiedReal {
        CertifiedReal::neg(self)
    }
}
