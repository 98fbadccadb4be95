//! Rectangular complex intervals and exact rational complex numbers.

use super::consts::{exp_interval, sin_cos, sqrt_interval};
use super::interval::CertifiedReal;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;

/// An exact complex rational, used where arithmetic must stay lossless
/// (root refinement midpoints, search witnesses).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QComplex {
    pub re: BigRational,
    pub im: BigRational,
}

impl QComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        QComplex { re, im }
    }

    pub fn zero() -> Self {
        QComplex {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn from_rational(re: BigRational) -> Self {
        QComplex {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        QComplex {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        QComplex {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        QComplex {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// None for division by zero.
    pub fn recip(&self) -> Option<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return None;
        }
        Some(QComplex {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        o.recip().map(|r| self.mul(&r))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QComplex {
            re: &self.re * c,
            im: &self.im * c,
        }
    }
}

/// A rectangle `[re] x [im]` in the complex plane enclosing an exact value.
#[derive(Clone, PartialEq, Eq)]
pub struct CertifiedComplex {
    pub re: CertifiedReal,
    pub im: CertifiedReal,
}

impl CertifiedComplex {
    pub fn new(re: CertifiedReal, im: CertifiedReal) -> Self {
        CertifiedComplex { re, im }
    }

    pub fn from_real(re: CertifiedReal) -> Self {
        CertifiedComplex {
            re,
            im: CertifiedReal::zero(),
        }
    }

    pub fn exact(z: &QComplex) -> Self {
        CertifiedComplex {
            re: CertifiedReal::exact(z.re.clone()),
            im: CertifiedReal::exact(z.im.clone()),
        }
    }

    pub fn exact_rational(x: &BigRational) -> Self {
        CertifiedComplex {
            re: CertifiedReal::exact(x.clone()),
            im: CertifiedReal::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_real(CertifiedReal::zero())
    }

    pub fn one() -> Self {
        Self::from_real(CertifiedReal::one())
    }

    pub fn add(&self, o: &Self) -> Self {
        CertifiedComplex {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        CertifiedComplex {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn neg(&self) -> Self {
        CertifiedComplex {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        CertifiedComplex {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        CertifiedComplex {
            re: self.re.scale(c),
            im: self.im.scale(c),
        }
    }

    pub fn scale_real(&self, c: &CertifiedReal) -> Self {
        CertifiedComplex {
            re: self.re.mul(c),
            im: self.im.mul(c),
        }
    }

    pub fn conj(&self) -> Self {
        CertifiedComplex {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    /// Exact interval of `re^2 + im^2`.
    pub fn norm_sq(&self) -> CertifiedReal {
        self.re.powi(2).add(&self.im.powi(2))
    }

    /// Certified modulus.
    pub fn modulus(&self, bits: u32) -> Result<CertifiedReal> {
        sqrt_interval(&self.norm_sq(), bits)
    }

    /// None when the rectangle might contain 0.
    pub fn recip(&self) -> Option<Self> {
        let n = self.norm_sq();
        if !n.certainly_positive() {
            return None;
        }
        let inv = n.recip()?;
        Some(CertifiedComplex {
            re: self.re.mul(&inv),
            im: self.im.neg().mul(&inv),
        })
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        o.recip().map(|r| self.mul(&r))
    }

    /// Integer power; negative exponents go through `recip`.
    pub fn powi(&self, n: i64) -> Result<Self> {
        if n < 0 {
            let r = self.recip().ok_or_else(|| {
                Error::InvalidInstance("negative power of an interval containing 0".into())
            })?;
            return r.powi(-n);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = n as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    pub fn round_out(&self, bits: u32) -> Self {
        CertifiedComplex {
            re: self.re.round_out(bits),
            im: self.im.round_out(bits),
        }
    }

    pub fn width(&self) -> BigRational {
        std::cmp::max(self.re.width(), self.im.width())
    }

    pub fn mid(&self) -> QComplex {
        QComplex {
            re: self.re.mid(),
            im: self.im.mid(),
        }
    }

    pub fn contains(&self, z: &QComplex) -> bool {
        self.re.contains(&z.re) && self.im.contains(&z.im)
    }

    pub fn contains_box(&self, o: &Self) -> bool {
        self.re.contains_interval(&o.re) && self.im.contains_interval(&o.im)
    }

    /// Strict interior containment, componentwise.
    pub fn contains_box_interior(&self, o: &Self) -> bool {
        self.re.lo() < o.re.lo()
            && o.re.hi() < self.re.hi()
            && self.im.lo() < o.im.lo()
            && o.im.hi() < self.im.hi()
    }

    pub fn overlaps(&self, o: &Self) -> bool {
        self.re.overlaps(&o.re) && self.im.overlaps(&o.im)
    }

    pub fn is_disjoint(&self, o: &Self) -> bool {
        !self.overlaps(o)
    }

    pub fn intersect(&self, o: &Self) -> Option<Self> {
        Some(CertifiedComplex {
            re: self.re.intersect(&o.re)?,
            im: self.im.intersect(&o.im)?,
        })
    }

    pub fn is_real_certain(&self) -> bool {
        self.im.is_exact() && self.im.lo().is_zero()
    }
}

/// exp over a complex rectangle: `exp(re) (cos im + i sin im)`.
pub fn exp_complex(z: &CertifiedComplex, bits: u32) -> CertifiedComplex {
    let guard = bits + 8;
    let radial = exp_interval(&z.re, guard);
    if z.im.is_exact() && z.im.lo().is_zero() {
        return CertifiedComplex::from_real(radial.round_out(bits));
    }
    let (s, c) = sin_cos(&z.im, guard);
    CertifiedComplex {
        re: radial.mul(&c),
        im: radial.mul(&s),
    }
    .round_out(bits)
}

impl fmt::Debug for CertifiedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

impl fmt::Display for CertifiedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

/// Convenience: theta = t i with rational t.
pub fn imaginary(t: BigRational) -> CertifiedComplex {
    CertifiedComplex {
        re: CertifiedReal::zero(),
        im: CertifiedReal::exact(t),
    }
}

#[allow(dead_code)]
fn _assert_send_sync() {
    fn check<T: Send + Sync>() {}
    check::<CertifiedComplex>();
    check::<QComplex>();
    let _ = BigInt::from(0);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::consts::pi;
    use crate::numerics::interval::rat;

    #[test]
    fn complex_mul_matches_exact() {
        let a = QComplex::new(rat(3, 2), rat(-1, 3));
        let b = QComplex::new(rat(-2, 5), rat(7, 4));
        let prod = a.mul(&b);
        let ai = CertifiedComplex::exact(&a).round_out(30);
        let bi = CertifiedComplex::exact(&b).round_out(30);
        assert!(ai.mul(&bi).contains(&prod));
    }

    #[test]
    fn exp_of_pi_i_is_minus_one() {
        let theta = CertifiedComplex::new(CertifiedReal::zero(), pi(128));
        let v = exp_complex(&theta, 96);
        assert!(v.re.contains(&rat(-1, 1)));
        assert!(v.im.contains(&rat(0, 1)));
        assert!(v.width() < rat(1, 1 << 20));
    }

    #[test]
    fn powi_negative_through_recip() {
        let z = CertifiedComplex::exact(&QComplex::new(rat(2, 1), rat(0, 1)));
        let inv2 = z.powi(-2).unwrap();
        assert!(inv2.re.contains(&rat(1, 4)));
        assert!(inv2.im.contains(&rat(0, 1)));
    }

    #[test]
    fn modulus_of_unit() {
        let z = CertifiedComplex::exact(&QComplex::new(rat(3, 5), rat(4, 5)));
        let m = z.modulus(80).unwrap();
        assert!(m.contains(&rat(1, 1)));
    }
}
