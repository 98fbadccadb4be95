//! Dense integer-coefficient univariate polynomials: exact arithmetic, gcd,
//! squarefree decomposition, Sturm-based real root isolation, and small-prime
//! irreducibility fast paths.
//!
//! Coefficients are stored low degree first; the text format used on the
//! command line and in files lists the leading coefficient first, e.g.
//! `1,0,-2` for x^2 - 2.

use crate::error::{Error, Result};
use crate::numerics::{CertifiedComplex, CertifiedReal, QComplex};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    /// coeffs[k] is the coefficient of x^k; empty means the zero polynomial.
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// From low-degree-first coefficients.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// From leading-coefficient-first order (the text format order).
    pub fn from_leading_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut v = coeffs;
        v.reverse();
        Self::from_coeffs(v)
    }

    pub fn from_i64(coeffs_leading_first: &[i64]) -> Self {
        Self::from_leading_coeffs(
            coeffs_leading_first
                .iter()
                .map(|&c| BigInt::from(c))
                .collect(),
        )
    }

    /// Parse the comma-separated leading-first format, e.g. `1,0,-2`.
    pub fn parse(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| BigInt::from_str(t.trim()).map_err(|e| Error::Parse(format!("{t}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        Ok(Self::from_leading_coeffs(coeffs))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Low-degree-first view.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Leading-first coefficient list (the a_0..a_d display order).
    pub fn leading_first(&self) -> Vec<BigInt> {
        let mut v = self.coeffs.clone();
        v.reverse();
        v
    }

    /// Sum of absolute values of the coefficients; 0 for the zero polynomial.
    pub fn length(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_interval(&self, x: &CertifiedReal) -> CertifiedReal {
        let mut acc = CertifiedReal::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&CertifiedReal::from_bigint(c));
        }
        acc
    }

    pub fn eval_qcomplex(&self, z: &QComplex) -> QComplex {
        let mut acc = QComplex::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(z)
                .add(&QComplex::from_rational(BigRational::from_integer(
                    c.clone(),
                )));
        }
        acc
    }

    pub fn eval_complex_interval(&self, z: &CertifiedComplex) -> CertifiedComplex {
        let mut acc = CertifiedComplex::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(z)
                .add(&CertifiedComplex::from_real(CertifiedReal::from_bigint(c)));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Positive gcd of the coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divide out the content; keeps the sign of the leading coefficient.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Primitive with positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.primitive_part();
        match p.leading() {
            Some(l) if l.is_negative() => p.neg(),
            _ => p,
        }
    }

    /// Exact division over the integers; None if it does not divide.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = divisor.degree().unwrap();
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        let dl = divisor.leading().unwrap();
        for k in (0..=nd - dd).rev() {
            let lead = rem[k + dd].clone();
            if lead.is_zero() {
                continue;
            }
            let (q, r) = lead.div_rem(dl);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let delta = &q * dc;
                rem[k + j] -= delta;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Pseudo-remainder: lc(d)^(deg n - deg d + 1) * n = q d + r.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("pseudo_rem by zero");
        let mut rem = self.clone();
        let dl = divisor.leading().unwrap().clone();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            let lead = rem.leading().unwrap().clone();
            let mut coeffs = vec![BigInt::zero(); rem.coeffs.len()];
            for (k, c) in rem.coeffs.iter().enumerate() {
                coeffs[k] = c * &dl;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                coeffs[shift + j] -= &lead * dc;
            }
            rem = Self::from_coeffs(coeffs);
        }
        rem
    }

    /// Primitive, positive-leading gcd via the primitive PRS.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let mut a = self.normalized();
        let mut b = other.normalized();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).normalized();
            a = b;
            b = r;
        }
        a.normalized()
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            Some(1) => true,
            _ => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Squarefree part (product of distinct irreducible factors), primitive
    /// with positive leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.normalized();
        }
        self.normalized()
            .exact_div(&g)
            .expect("gcd must divide")
            .normalized()
    }

    /// Squarefree decomposition: pairwise-coprime primitive factors with their
    /// multiplicities, so that the product of factor^multiplicity equals the
    /// normalized input.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPolynomial, u32)> {
        let f = self.normalized();
        let Some(d) = f.degree() else { return vec![] };
        if d == 0 {
            return vec![];
        }
        let mut result = Vec::new();
        let mut g = f.gcd(&f.derivative());
        let mut c = f.exact_div(&g).expect("gcd divides").normalized();
        let mut i: u32 = 1;
        while c.degree().is_some_and(|d| d > 0) {
            let y = g.gcd(&c);
            let z = c.exact_div(&y).expect("gcd divides").normalized();
            if z.degree().is_some_and(|d| d > 0) {
                result.push((z, i));
            }
            i += 1;
            c = y;
            if c.degree().is_some_and(|d| d > 0) {
                g = g.exact_div(&c).expect("gcd divides").normalized();
            }
        }
        debug_assert_eq!(
            result
                .iter()
                .map(|(p, m)| p.degree().unwrap() * *m as usize)
                .sum::<usize>(),
            d
        );
        result
    }

    /// Cauchy-type bound: all roots have modulus < 1 + max |a_i| / |a_d|.
    pub fn root_bound(&self) -> BigRational {
        let Some(lead) = self.leading() else {
            return BigRational::one();
        };
        let max_abs = self
            .coeffs
            .iter()
            .take(self.coeffs.len() - 1)
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        BigRational::one() + BigRational::new(max_abs, lead.abs())
    }

    // -- Sturm machinery ----------------------------------------------------

    /// Sturm chain of the squarefree part.
    pub fn sturm_chain(&self) -> Vec<IntPolynomial> {
        let p0 = self.squarefree_part();
        let p1 = p0.derivative();
        let mut chain = vec![p0, p1];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                return chain;
            }
            // -rem(p_{n-2}, p_{n-1}) scaled by a positive constant
            let rem = signed_rem(&chain[n - 2], &chain[n - 1]);
            chain.push(rem);
        }
    }

    /// Number of distinct real roots in the open interval (a, b); endpoints
    /// must not be roots.
    pub fn count_real_roots_between(
        chain: &[IntPolynomial],
        a: &BigRational,
        b: &BigRational,
    ) -> usize {
        sign_variations(chain, a) - sign_variations(chain, b)
    }

    /// Isolating intervals for the distinct real roots of the squarefree part.
    /// Exact rational roots come back as degenerate intervals.
    pub fn isolate_real_roots(&self) -> Vec<(BigRational, BigRational)> {
        let f = self.squarefree_part();
        let Some(d) = f.degree() else { return vec![] };
        if d == 0 {
            return vec![];
        }
        let chain = f.sturm_chain();
        let bound = f.root_bound() + BigRational::one();
        let mut out = Vec::new();
        let mut stack = vec![(-bound.clone(), bound.clone())];
        while let Some((a, b)) = stack.pop() {
            let n = Self::count_real_roots_between(&chain, &a, &b);
            if n == 0 {
                continue;
            }
            if n == 1 {
                out.push((a, b));
                continue;
            }
            let half = BigRational::new(BigInt::one(), BigInt::from(2));
            let mut m = (&a + &b) * &half;
            // nudge off a root: the chain head is squarefree, so finitely many
            while f.eval_rational(&m).is_zero() {
                out.push((m.clone(), m.clone()));
                // remove the exact root by shifting the midpoint slightly
                let quarter = (&b - &a) * BigRational::new(BigInt::one(), BigInt::from(4));
                m = &m + &quarter * BigRational::new(BigInt::one(), BigInt::from(3));
                if f.eval_rational(&m).is_zero() {
                    m = (&a + &b) * BigRational::new(BigInt::from(7), BigInt::from(16));
                }
            }
            stack.push((a, m.clone()));
            stack.push((m, b));
        }
        // split may record the same exact root twice when it lands on a probe
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out.dedup();
        out
    }

    /// Shrink an isolating interval for a single root below `width` by
    /// bisection. The interval must contain exactly one root of the
    /// squarefree part and the endpoints must not be roots (exact-root
    /// degenerate intervals pass through unchanged).
    pub fn refine_real_root(
        &self,
        bracket: (BigRational, BigRational),
        width: &BigRational,
    ) -> (BigRational, BigRational) {
        let f = self.squarefree_part();
        let (mut a, mut b) = bracket;
        if a == b {
            return (a, b);
        }
        // the sign at the kept endpoint never changes during bisection
        let sign_a = f.eval_rational(&a).is_positive();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        while &(&b - &a) > width {
            let m = (&a + &b) * &half;
            let fm = f.eval_rational(&m);
            if fm.is_zero() {
                return (m.clone(), m);
            }
            if fm.is_positive() == sign_a {
                a = m;
            } else {
                b = m;
            }
        }
        (a, b)
    }

    // -- small-prime reduction ----------------------------------------------

    /// `Some(true)` is a proof of irreducibility over the rationals; `Some(false)`
    /// and `None` are inconclusive about the rationals (`None` when the leading
    /// coefficient vanishes mod p).
    pub fn irreducible_mod_p(&self, p: u64) -> Option<bool> {
        let d = self.degree()?;
        if d == 0 {
            return Some(false);
        }
        let lead = self.leading().unwrap();
        if (lead % BigInt::from(p)).is_zero() {
            return None;
        }
        let f = PolyModP::reduce(self, p);
        Some(f.is_irreducible())
    }
}

fn signed_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    // pseudo_rem multiplies by lc(b)^k which may flip signs when lc(b) < 0 and
    // k is odd; Sturm needs the sign of the true remainder, so force the
    // multiplier positive by squaring the divisor's leading sign first.
    let dd = b.degree().expect("rem by zero");
    let nd = match a.degree() {
        Some(n) if n >= dd => n,
        _ => return a.neg().primitive_part(),
    };
    let k = nd - dd + 1;
    let mut r = a.pseudo_rem(b);
    let lead_neg = b.leading().unwrap().is_negative();
    if lead_neg && k % 2 == 1 {
        r = r.neg();
    }
    r.neg().primitive_part()
}

fn sign_of(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_variations(chain: &[IntPolynomial], x: &BigRational) -> usize {
    let mut prev: i8 = 0;
    let mut count = 0;
    for p in chain {
        let s = sign_of(&p.eval_rational(x));
        if s != 0 {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
    }
    count
}

// ---------------------------------------------------------------------------
// arithmetic mod a small prime
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
struct PolyModP {
    p: u64,
    coeffs: Vec<u64>, // low first, trimmed
}

impl PolyModP {
    fn reduce(f: &IntPolynomial, p: u64) -> Self {
        let pp = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| {
                let m = c.mod_floor(&pp);
                let digits = m.to_u64_digits().1;
                digits.first().copied().unwrap_or(0)
            })
            .collect();
        PolyModP {
            p,
            coeffs: Self::trim(coeffs),
        }
    }

    fn trim(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    fn rem_by(&self, divisor: &PolyModP) -> PolyModP {
        let p = self.p;
        let dd = divisor.degree().unwrap();
        let dl = divisor.coeffs[dd];
        let dl_inv = mod_inv(dl, p);
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let lead = rem[rem.len() - 1] % p;
            if lead != 0 {
                let q = lead * dl_inv % p;
                let shift = rem.len() - 1 - dd;
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    let sub = q * dc % p;
                    let idx = shift + j;
                    rem[idx] = (rem[idx] + p - sub) % p;
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        PolyModP {
            p,
            coeffs: Self::trim(rem),
        }
    }

    /// Trial division by every monic polynomial of degree <= deg/2.
    fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        let p = self.p;
        for k in 1..=d / 2 {
            // enumerate monic degree-k polynomials as base-p counters
            let total = p.pow(k as u32);
            for idx in 0..total {
                let mut coeffs = Vec::with_capacity(k + 1);
                let mut v = idx;
                for _ in 0..k {
                    coeffs.push(v % p);
                    v /= p;
                }
                coeffs.push(1);
                let divisor = PolyModP { p, coeffs };
                if self.rem_by(&divisor).coeffs.is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is prime; Fermat
    let mut result: u64 = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.leading_first().iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    #[test]
    fn parse_display_roundtrip() {
        let f = IntPolynomial::parse("1,0,-2").unwrap();
        assert_eq!(f.degree(), Some(2));
        assert_eq!(f.coeff(0), BigInt::from(-2));
        assert_eq!(f.coeff(2), BigInt::from(1));
        assert_eq!(f.to_string(), "1,0,-2");
        assert!(IntPolynomial::parse("1,,2").is_err());
    }

    #[test]
    fn length_examples() {
        assert_eq!(p(&[1, 0, -2]).length(), BigInt::from(3));
        assert_eq!(p(&[2, -1]).length(), BigInt::from(3));
        assert_eq!(p(&[5]).length(), BigInt::from(5));
        assert_eq!(IntPolynomial::zero().length(), BigInt::from(0));
    }

    #[test]
    fn exact_div_and_gcd() {
        let a = p(&[1, -3, 2]); // (x-1)(x-2)
        let b = p(&[1, -1]);
        assert_eq!(a.exact_div(&b).unwrap(), p(&[1, -2]));
        assert!(p(&[1, 0, 1]).exact_div(&b).is_none());
        let g = a.gcd(&p(&[1, -4, 3])); // common factor x-1... (x-1)(x-3)
        assert_eq!(g, p(&[1, -1]));
        let c = p(&[6, -6]).gcd(&p(&[4, -4]));
        assert_eq!(c, p(&[1, -1]));
    }

    #[test]
    fn squarefree_decomposition_structure() {
        // (x-1)^2 (x+2) (x^2+1)^3
        let f = p(&[1, -1])
            .mul(&p(&[1, -1]))
            .mul(&p(&[1, 2]))
            .mul(&p(&[1, 0, 1]).mul(&p(&[1, 0, 1])).mul(&p(&[1, 0, 1])));
        let decomp = f.squarefree_decomposition();
        let mut found = std::collections::HashMap::new();
        for (g, m) in &decomp {
            found.insert(g.to_string(), *m);
        }
        assert_eq!(found.get("1,2"), Some(&1));
        assert_eq!(found.get("1,-1"), Some(&2));
        assert_eq!(found.get("1,0,1"), Some(&3));
    }

    #[test]
    fn sturm_counts_roots() {
        let f = p(&[1, 0, -2]); // roots +-sqrt(2)
        let chain = f.sturm_chain();
        assert_eq!(
            IntPolynomial::count_real_roots_between(&chain, &rat(-3, 1), &rat(3, 1)),
            2
        );
        assert_eq!(
            IntPolynomial::count_real_roots_between(&chain, &rat(0, 1), &rat(3, 1)),
            1
        );
        let g = p(&[1, 0, 1]);
        let chain_g = g.sturm_chain();
        assert_eq!(
            IntPolynomial::count_real_roots_between(&chain_g, &rat(-10, 1), &rat(10, 1)),
            0
        );
    }

    #[test]
    fn isolation_and_refinement() {
        let f = p(&[1, 0, -2]);
        let roots = f.isolate_real_roots();
        assert_eq!(roots.len(), 2);
        let target = rat(1, 1_000_000);
        for r in roots {
            let (a, b) = f.refine_real_root(r, &target);
            assert!(&b - &a <= target);
            // must bracket +-sqrt(2): check square is near 2
            let m = (&a + &b) / rat(2, 1);
            let sq = &m * &m;
            assert!((sq - rat(2, 1)).abs() < rat(1, 1000));
        }
        // exact rational root comes out degenerate
        let g = p(&[2, -3]); // root 3/2
        let roots = g.isolate_real_roots();
        assert_eq!(roots.len(), 1);
        let (a, b) = g.refine_real_root(roots[0].clone(), &rat(1, 1 << 20));
        assert!(&b - &a <= rat(1, 1 << 20));
        assert!(a <= rat(3, 2) && rat(3, 2) <= b);
    }

    #[test]
    fn mod_p_irreducibility_fast_path() {
        // x^2 + x + 1 irreducible mod 2
        assert_eq!(p(&[1, 1, 1]).irreducible_mod_p(2), Some(true));
        // x^2 - 2 reducible mod 2 (== x^2), inconclusive for Q
        assert_eq!(p(&[1, 0, -2]).irreducible_mod_p(2), Some(false));
        // x^2 - 2 irreducible mod 3
        assert_eq!(p(&[1, 0, -2]).irreducible_mod_p(3), Some(true));
        // leading coefficient divisible by p
        assert_eq!(p(&[3, 1, 1]).irreducible_mod_p(3), None);
    }

    #[test]
    fn eval_matches_rational() {
        let f = p(&[3, -1, 4, -1]);
        let x = rat(7, 5);
        let exact = f.eval_rational(&x);
        let iv = f.eval_interval(&CertifiedReal::exact(x.clone()).round_out(24));
        assert!(iv.contains(&exact));
    }
}
