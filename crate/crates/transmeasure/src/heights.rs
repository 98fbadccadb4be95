//! Algebraic-number bookkeeping: lengths, absolute logarithmic Weil heights,
//! the height-length inequality h(alpha) <= log(L)/d, and the Liouville lower
//! bound for integer polynomials that do not vanish at an algebraic point.

use crate::error::{Error, Result};
use crate::numerics::{
    bits_for_width, ln_int, ln_interval, roots, CertifiedReal, PrecisionCeiling, RootEnclosure,
};
use crate::poly::IntPolynomial;
use num_bigint::BigInt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An algebraic number: a primitive irreducible minimal polynomial plus one
/// certified root enclosure selecting the root in question.
#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    minpoly: IntPolynomial,
    which_root: RootEnclosure,
}

impl AlgebraicNumber {
    /// Validates irreducibility and returns one number per root of `minpoly`.
    pub fn all_roots(
        minpoly: &IntPolynomial,
        ceiling: &PrecisionCeiling,
    ) -> Result<Vec<AlgebraicNumber>> {
        let p = minpoly.normalized();
        if !roots::is_irreducible(&p, ceiling)? {
            return Err(Error::Reducible(p.to_string()));
        }
        let width = BigRational::new(BigInt::one(), BigInt::from(1u64 << 32));
        let enclosures = roots::root_enclosures(&p, &width, ceiling)?;
        Ok(enclosures
            .into_iter()
            .map(|which_root| AlgebraicNumber {
                minpoly: p.clone(),
                which_root,
            })
            .collect())
    }

    /// The first root (heights do not depend on the choice).
    pub fn any_root(
        minpoly: &IntPolynomial,
        ceiling: &PrecisionCeiling,
    ) -> Result<AlgebraicNumber> {
        let mut v = Self::all_roots(minpoly, ceiling)?;
        if v.is_empty() {
            return Err(Error::InvalidInstance("constant polynomial".into()));
        }
        Ok(v.remove(0))
    }

    /// A rational number p/q as a degree-1 algebraic number.
    pub fn rational(x: &BigRational) -> AlgebraicNumber {
        // minimal polynomial q X - p, primitive with positive leading
        let minpoly = IntPolynomial::from_coeffs(vec![-x.numer().clone(), x.denom().clone()]);
        let which_root = RootEnclosure {
            root: crate::numerics::CertifiedComplex::exact_rational(x),
            multiplicity: 1,
        };
        AlgebraicNumber {
            minpoly,
            which_root,
        }
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.minpoly
    }

    pub fn which_root(&self) -> &RootEnclosure {
        &self.which_root
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap_or(0)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.degree() == 1 {
            Some(BigRational::new(
                -self.minpoly.coeff(0),
                self.minpoly.coeff(1),
            ))
        } else {
            None
        }
    }

    /// 1/alpha, by coefficient reversal of the minimal polynomial.
    pub fn reciprocal(&self, ceiling: &PrecisionCeiling) -> Result<AlgebraicNumber> {
        if self.minpoly.coeff(0).is_zero() {
            return Err(Error::InvalidInstance("reciprocal of zero".into()));
        }
        let mut rev = self.minpoly.leading_first();
        rev.reverse();
        let p = IntPolynomial::from_leading_coeffs(rev).normalized();
        Self::any_root(&p, ceiling)
    }
}

/// L(P): sum of the absolute values of the integer coefficients.
pub fn length(p: &IntPolynomial) -> BigInt {
    p.length()
}

/// Absolute logarithmic Weil height of the number with this minimal
/// polynomial: (1/d) (log |a_0| + sum log max(1, |alpha_i|)), computed across
/// all conjugates.
pub fn height(
    alpha: &AlgebraicNumber,
    width: &BigRational,
    ceiling: &PrecisionCeiling,
) -> Result<CertifiedReal> {
    height_of_minpoly_unchecked(&alpha.minpoly, width, ceiling)
}

/// Height from a minimal polynomial, validating irreducibility first.
pub fn height_of_minpoly(
    p: &IntPolynomial,
    width: &BigRational,
    ceiling: &PrecisionCeiling,
) -> Result<CertifiedReal> {
    let p = p.normalized();
    if !roots::is_irreducible(&p, ceiling)? {
        return Err(Error::Reducible(p.to_string()));
    }
    height_of_minpoly_unchecked(&p, width, ceiling)
}

fn height_of_minpoly_unchecked(
    p: &IntPolynomial,
    width: &BigRational,
    ceiling: &PrecisionCeiling,
) -> Result<CertifiedReal> {
    let d = p
        .degree()
        .ok_or_else(|| Error::InvalidInstance("zero polynomial".into()))?;
    if d == 0 {
        return Err(Error::InvalidInstance(
            "constant polynomial has no height".into(),
        ));
    }
    if d == 1 {
        // h(p/q) = log max(|p|, |q|), exactly
        let numer = p.coeff(0).abs();
        let denom = p.coeff(1).abs();
        let m = std::cmp::max(numer, denom);
        if m.is_one() {
            return Ok(CertifiedReal::zero());
        }
        let bits = bits_for_width(width) + 4;
        return ceiling.escalate(bits, "rational height", |b| {
            let v = ln_int(&m, b).ok()?;
            (&v.width() <= width).then_some(v)
        });
    }

    // h = (1/(2d)) log( a0^2 * prod max(1, |alpha_i|^2) )
    let lead_sq = BigRational::from_integer(p.leading().unwrap() * p.leading().unwrap());
    let start_bits = bits_for_width(width) + 8;
    ceiling.escalate(start_bits, &format!("height of {p}"), |bits| {
        let root_width = BigRational::new(BigInt::one(), BigInt::one() << bits);
        let enclosures = roots::root_enclosures(p, &root_width, ceiling).ok()?;
        let mut mahler_sq = CertifiedReal::exact(lead_sq.clone());
        for enc in &enclosures {
            let mod_sq = enc.root.norm_sq().max1();
            for _ in 0..enc.multiplicity {
                mahler_sq = mahler_sq.mul(&mod_sq);
            }
        }
        let log_m2 = ln_interval(&mahler_sq, bits).ok()?;
        let h = log_m2.scale(&BigRational::new(BigInt::one(), BigInt::from(2 * d)));
        (&h.width() <= width).then_some(h)
    })
}

/// Verdict of the height-length comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// Certified check of h(alpha) <= (1/d) log L(P) for an irreducible P.
pub fn check_height_length(p: &IntPolynomial, ceiling: &PrecisionCeiling) -> Result<Verdict> {
    let p = p.normalized();
    let d = p
        .degree()
        .ok_or_else(|| Error::InvalidInstance("zero polynomial".into()))?;
    if d == 0 {
        return Err(Error::InvalidInstance("degree must be at least 1".into()));
    }
    if !roots::is_irreducible(&p, ceiling)? {
        return Err(Error::Reducible(p.to_string()));
    }
    if d == 1 {
        // exact: max(|p|,|q|) <= |p| + |q|
        let m = std::cmp::max(p.coeff(0).abs(), p.coeff(1).abs());
        return Ok(if m <= p.length() {
            Verdict::Pass
        } else {
            Verdict::Fail
        });
    }
    let len = p.length();
    let mut width = BigRational::new(BigInt::one(), BigInt::from(1u64 << 24));
    loop {
        let h = height_of_minpoly_unchecked(&p, &width, ceiling)?;
        let bits = bits_for_width(&width) + 8;
        let bound = ln_int(&len, bits)?.scale(&BigRational::new(BigInt::one(), BigInt::from(d)));
        if h.hi() <= bound.lo() {
            return Ok(Verdict::Pass);
        }
        if h.lo() > bound.hi() {
            return Ok(Verdict::Fail);
        }
        if bits >= ceiling.max_bits {
            return Ok(Verdict::Inconclusive);
        }
        width = &width * &width;
    }
}

/// Degree data for the Liouville bound: the field degree D of a number field
/// containing all the points, and whether that field is real.
#[derive(Clone, Copy, Debug)]
pub struct LiouvilleContext {
    pub field_degree: u32,
    pub is_real_field: bool,
}

impl LiouvilleContext {
    /// D' = D for a real field, D/2 otherwise (D must then be even).
    pub fn d_prime(&self) -> Result<u32> {
        if self.field_degree == 0 {
            return Err(Error::InvalidInstance(
                "field degree must be positive".into(),
            ));
        }
        if self.is_real_field {
            Ok(self.field_degree)
        } else if self.field_degree % 2 == 0 {
            Ok(self.field_degree / 2)
        } else {
            Err(Error::InvalidInstance(
                "a non-real field has even degree over the rationals".into(),
            ))
        }
    }
}

/// Log-scale Liouville lower bound
/// `-(D'-1) log L(f) - D' sum_i N_i h(alpha_i)`
/// for an integer polynomial f of degree at most N_i in the i-th variable and
/// length L(f), not vanishing at the point. The nonvanishing hypothesis is the
/// caller's responsibility.
pub fn liouville_bound(
    length_f: &BigInt,
    degree_bounds: &[u64],
    heights: &[CertifiedReal],
    ctx: &LiouvilleContext,
    bits: u32,
) -> Result<CertifiedReal> {
    if length_f < &BigInt::one() {
        return Err(Error::InvalidInstance(
            "polynomial length must be at least 1".into(),
        ));
    }
    if degree_bounds.len() != heights.len() {
        return Err(Error::InvalidInstance(
            "one degree bound per height is required".into(),
        ));
    }
    let d_prime = ctx.d_prime()?;
    let log_len = ln_int(length_f, bits)?;
    let mut acc = log_len.scale(&BigRational::from_integer(-BigInt::from(d_prime - 1)));
    for (n_i, h_i) in degree_bounds.iter().zip(heights) {
        let term = h_i.scale(&BigRational::from_integer(
            BigInt::from(*n_i) * BigInt::from(d_prime),
        ));
        acc = acc.sub(&term);
    }
    Ok(acc)
}
