//! The derivation delta = d/dX + beta Y d/dY on polynomials in X, Y, Y^-1,
//! and an exact-linear-algebra verifier for the multiplicity estimate: when
//! SM > (D0 + M)(D1 + 1), no nonzero polynomial of bidegree (D0, D1) can
//! satisfy delta^sigma P(xi_mu, eta_mu) = 0 for all mu <= M, sigma < S.

use crate::error::{Error, Result};
use crate::matrix::{PivotRule, QMatrix};
use crate::numerics::{parse_rational, CertifiedComplex};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exact-rational polynomial in X and Y, Y^-1: a sparse map from
/// (X exponent, Y exponent) to coefficient, with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentBiPoly {
    terms: BTreeMap<(u32, i64), BigRational>,
}

impl LaurentBiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(i: u32, j: i64, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        LaurentBiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, i64), &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: i64) -> BigRational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|(i, _)| *i).max()
    }

    pub fn y_max(&self) -> Option<i64> {
        self.terms.keys().map(|(_, j)| *j).max()
    }

    pub fn y_min(&self) -> Option<i64> {
        self.terms.keys().map(|(_, j)| *j).min()
    }

    fn insert_add(&mut self, key: (u32, i64), c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_add(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentBiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &other.terms {
                out.insert_add((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    /// One application of delta = d/dX + beta Y d/dY.
    pub fn delta(&self, beta: &BigRational) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            if *i > 0 {
                out.insert_add((i - 1, *j), c * BigRational::from_integer(BigInt::from(*i)));
            }
            if *j != 0 {
                out.insert_add(
                    (*i, *j),
                    c * beta * BigRational::from_integer(BigInt::from(*j)),
                );
            }
        }
        out
    }

    /// delta^order.
    pub fn delta_pow(&self, beta: &BigRational, order: u32) -> Self {
        let mut acc = self.clone();
        for _ in 0..order {
            acc = acc.delta(beta);
        }
        acc
    }

    /// Exact evaluation; y must be nonzero when negative Y powers occur.
    pub fn eval(&self, x: &BigRational, y: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for ((i, j), c) in &self.terms {
            let xi = pow_rat(x, *i as i64)?;
            let yj = pow_rat(y, *j)?;
            acc += c * xi * yj;
        }
        Ok(acc)
    }

    /// Certified evaluation over complex rectangles.
    pub fn eval_complex(
        &self,
        x: &CertifiedComplex,
        y: &CertifiedComplex,
    ) -> Result<CertifiedComplex> {
        let mut acc = CertifiedComplex::zero();
        for ((i, j), c) in &self.terms {
            let xi = x.powi(*i as i64)?;
            let yj = y.powi(*j)?;
            acc = acc.add(&xi.mul(&yj).scale(c));
        }
        Ok(acc)
    }

    /// True iff every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

fn pow_rat(x: &BigRational, n: i64) -> Result<BigRational> {
    if n == 0 {
        return Ok(BigRational::one());
    }
    if n < 0 && x.is_zero() {
        return Err(Error::InvalidInstance("negative power of zero".into()));
    }
    let mut acc = BigRational::one();
    let mut base = if n < 0 { x.recip() } else { x.clone() };
    let mut k = n.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc *= &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    Ok(acc)
}

impl fmt::Debug for LaurentBiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((i, j), c)| format!("{c}*X^{i}*Y^{j}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Display for LaurentBiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// multiplicity-estimate verifier
// ---------------------------------------------------------------------------

/// One instance of the multiplicity estimate: bidegree bounds, derivative
/// count S, points with pairwise distinct first coordinates and nonzero
/// second coordinates, and the nonzero derivation parameter beta.
#[derive(Clone, Debug)]
pub struct ZeroEstimateInstance {
    pub d0: u32,
    pub d1: u32,
    pub s: u32,
    pub m: u32,
    pub beta: BigRational,
    pub points: Vec<(BigRational, BigRational)>,
}

impl ZeroEstimateInstance {
    pub fn validate(&self) -> Result<()> {
        if self.d0 == 0 && self.d1 == 0 {
            // degree bounds zero are allowed (constant polynomials)
        }
        if self.s == 0 || self.m == 0 {
            return Err(Error::InvalidInstance("S and M must be positive".into()));
        }
        if self.points.len() != self.m as usize {
            return Err(Error::InvalidInstance(format!(
                "expected {} points, got {}",
                self.m,
                self.points.len()
            )));
        }
        if self.beta.is_zero() {
            return Err(Error::InvalidInstance("beta must be nonzero".into()));
        }
        for (_, eta) in &self.points {
            if eta.is_zero() {
                return Err(Error::InvalidInstance("eta must be nonzero".into()));
            }
        }
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                if self.points[i].0 == self.points[j].0 {
                    return Err(Error::InvalidInstance(
                        "xi coordinates must be pairwise distinct".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// SM > (D0 + M)(D1 + 1).
    pub fn condition_21(&self) -> bool {
        let sm = BigInt::from(self.s) * BigInt::from(self.m);
        let rhs = (BigInt::from(self.d0) + BigInt::from(self.m)) * (BigInt::from(self.d1) + 1);
        sm > rhs
    }

    /// Monomial basis X^i Y^j, 0 <= i <= D0, 0 <= j <= D1, in graded order
    /// (total degree, then Y exponent).
    pub fn monomials(&self) -> Vec<(u32, u32)> {
        let mut v: Vec<(u32, u32)> = (0..=self.d0)
            .flat_map(|i| (0..=self.d1).map(move |j| (i, j)))
            .collect();
        v.sort_by_key(|&(i, j)| (i + j, j));
        v
    }

    /// Row keys (mu, sigma), mu-major.
    pub fn row_keys(&self) -> Vec<(u32, u32)> {
        (0..self.m)
            .flat_map(|mu| (0..self.s).map(move |sig| (mu, sig)))
            .collect()
    }

    /// Parse the key-value instance format:
    /// `d0=..`, `d1=..`, `s=..`, `m=..`, `beta=p/q`, and one `point=x,y` per point.
    pub fn parse(text: &str) -> Result<Self> {
        let mut d0 = None;
        let mut d1 = None;
        let mut s = None;
        let mut m = None;
        let mut beta = None;
        let mut points = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{line}`")))?;
            let value = value.trim();
            match key.trim() {
                "d0" => {
                    d0 = Some(
                        value
                            .parse::<u32>()
                            .map_err(|e| Error::Parse(e.to_string()))?,
                    )
                }
                "d1" => {
                    d1 = Some(
                        value
                            .parse::<u32>()
                            .map_err(|e| Error::Parse(e.to_string()))?,
                    )
                }
                "s" => {
                    s = Some(
                        value
                            .parse::<u32>()
                            .map_err(|e| Error::Parse(e.to_string()))?,
                    )
                }
                "m" => {
                    m = Some(
                        value
                            .parse::<u32>()
                            .map_err(|e| Error::Parse(e.to_string()))?,
                    )
                }
                "beta" => beta = Some(parse_rational(value)?),
                "point" => {
                    let (x, y) = value
                        .split_once(',')
                        .ok_or_else(|| Error::Parse("point needs two coordinates".into()))?;
                    points.push((parse_rational(x)?, parse_rational(y)?));
                }
                other => return Err(Error::Parse(format!("unknown key `{other}`"))),
            }
        }
        let inst = ZeroEstimateInstance {
            d0: d0.ok_or_else(|| Error::Parse("missing d0".into()))?,
            d1: d1.ok_or_else(|| Error::Parse("missing d1".into()))?,
            s: s.ok_or_else(|| Error::Parse("missing s".into()))?,
            m: m.ok_or_else(|| Error::Parse("missing m".into()))?,
            beta: beta.ok_or_else(|| Error::Parse("missing beta".into()))?,
            points,
        };
        inst.validate()?;
        Ok(inst)
    }
}

/// Matrix of delta^sigma(X^i Y^j)(xi_mu, eta_mu): rows (mu, sigma) mu-major,
/// columns the graded monomial basis.
pub fn constraint_matrix(inst: &ZeroEstimateInstance) -> Result<QMatrix> {
    inst.validate()?;
    let monos = inst.monomials();
    let rows = inst.row_keys();
    // for each monomial, precompute delta^sigma for sigma < S
    let mut derived: Vec<Vec<LaurentBiPoly>> = Vec::with_capacity(monos.len());
    for &(i, j) in &monos {
        let mut chain = Vec::with_capacity(inst.s as usize);
        let mut current = LaurentBiPoly::monomial(i, j as i64, BigRational::one());
        for _sig in 0..inst.s {
            chain.push(current.clone());
            current = current.delta(&inst.beta);
        }
        derived.push(chain);
    }
    let mut entries = Vec::with_capacity(rows.len() * monos.len());
    for &(mu, sig) in &rows {
        let (xi, eta) = &inst.points[mu as usize];
        for chain in &derived {
            entries.push(chain[sig as usize].eval(xi, eta)?);
        }
    }
    Ok(QMatrix::from_fn(rows.len(), monos.len(), |r, c| {
        entries[r * monos.len() + c].clone()
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma2Verdict {
    ConsistentWithLemma,
    /// The degree condition held yet a nonzero kernel vector exists. This
    /// must never happen; treat as a fatal finding.
    Counterexample,
}

#[derive(Clone, Debug)]
pub struct Lemma2Report {
    pub condition_21: bool,
    pub rank: usize,
    pub kernel_dim: usize,
    pub verdict: Lemma2Verdict,
    /// coefficients (in the graded monomial order) of a nonzero annihilated
    /// polynomial, when the kernel is nontrivial
    pub kernel_witness: Option<(Vec<BigRational>, LaurentBiPoly)>,
}

/// Exact rank/kernel check of one instance.
pub fn lemma2_check(inst: &ZeroEstimateInstance) -> Result<Lemma2Report> {
    let matrix = constraint_matrix(inst)?;
    let rank = matrix.rank();
    let kernel_dim = matrix.cols() - rank;
    let condition_21 = inst.condition_21();
    let verdict = if condition_21 && kernel_dim > 0 {
        Lemma2Verdict::Counterexample
    } else {
        Lemma2Verdict::ConsistentWithLemma
    };
    let kernel_witness = if kernel_dim > 0 {
        let v = matrix
            .kernel_vector()
            .ok_or_else(|| Error::InvalidInstance("kernel extraction failed".into()))?;
        debug_assert!(matrix.apply(&v).iter().all(|x| x.is_zero()));
        let monos = inst.monomials();
        let mut poly = LaurentBiPoly::zero();
        for (coeff, &(i, j)) in v.iter().zip(&monos) {
            poly = poly.add(&LaurentBiPoly::monomial(i, j as i64, coeff.clone()));
        }
        Some((v, poly))
    } else {
        None
    };
    Ok(Lemma2Report {
        condition_21,
        rank,
        kernel_dim,
        verdict,
        kernel_witness,
    })
}

/// Deterministic full-rank row selection, used by the interpolation toys.
pub fn select_full_rank_rows(matrix: &QMatrix) -> (usize, Vec<usize>) {
    let e = matrix.eliminate(PivotRule::MaxAbsThenLowest);
    let mut rows = e.pivot_rows.clone();
    rows.sort_unstable();
    (e.rank, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    #[test]
    fn delta_basics() {
        let beta = rat(1, 1);
        let x = LaurentBiPoly::monomial(1, 0, rat(1, 1));
        assert_eq!(x.delta(&beta), LaurentBiPoly::constant(rat(1, 1)));
        // Y^t is an eigenvector: delta^sigma Y^t = (beta t)^sigma Y^t
        let beta2 = rat(3, 2);
        for t in [-2i64, 1, 4] {
            let yt = LaurentBiPoly::monomial(0, t, rat(1, 1));
            let d3 = yt.delta_pow(&beta2, 3);
            let factor = pow_rat(&(&beta2 * rat(t, 1)), 3).unwrap();
            assert_eq!(d3, yt.scale(&factor));
        }
        // product rule spot check: delta(XY) = Y + beta XY at beta = 2
        let beta3 = rat(2, 1);
        let xy = LaurentBiPoly::monomial(1, 1, rat(1, 1));
        let expect =
            LaurentBiPoly::monomial(0, 1, rat(1, 1)).add(&LaurentBiPoly::monomial(1, 1, rat(2, 1)));
        assert_eq!(xy.delta(&beta3), expect);
    }

    #[test]
    fn leibniz_and_commutation() {
        let beta = rat(5, 3);
        let p = LaurentBiPoly::monomial(2, -1, rat(3, 4))
            .add(&LaurentBiPoly::monomial(0, 2, rat(-2, 1)))
            .add(&LaurentBiPoly::constant(rat(1, 7)));
        let q = LaurentBiPoly::monomial(1, 1, rat(2, 5)).add(&LaurentBiPoly::monomial(
            3,
            -2,
            rat(1, 2),
        ));
        let left = p.mul(&q).delta(&beta);
        let right = p.delta(&beta).mul(&q).add(&p.mul(&q.delta(&beta)));
        assert_eq!(left, right);
        let a = p.delta_pow(&beta, 2).delta_pow(&beta, 3);
        let b = p.delta_pow(&beta, 5);
        assert_eq!(a, b);
    }

    fn inst(
        d0: u32,
        d1: u32,
        s: u32,
        m: u32,
        beta: (i64, i64),
        pts: &[((i64, i64), (i64, i64))],
    ) -> ZeroEstimateInstance {
        ZeroEstimateInstance {
            d0,
            d1,
            s,
            m,
            beta: rat(beta.0, beta.1),
            points: pts
                .iter()
                .map(|&((a, b), (c, d))| (rat(a, b), rat(c, d)))
                .collect(),
        }
    }

    #[test]
    fn constraint_matrix_single_point() {
        // point (0,1), beta = 1, D0 = D1 = 1, S = 2
        let i = inst(1, 1, 2, 1, (1, 1), &[((0, 1), (1, 1))]);
        let m = constraint_matrix(&i).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 4));
        // basis order: 1, X, Y, XY
        let row0: Vec<BigRational> = m.row(0).to_vec();
        assert_eq!(row0, vec![rat(1, 1), rat(0, 1), rat(1, 1), rat(0, 1)]);
        let row1: Vec<BigRational> = m.row(1).to_vec();
        assert_eq!(row1, vec![rat(0, 1), rat(1, 1), rat(1, 1), rat(1, 1)]);
    }

    #[test]
    fn degenerate_single_column() {
        // D0 = D1 = 0: the only monomial is 1, whose sigma = 0 rows are 1 and
        // all higher derivative rows vanish
        let i = inst(0, 0, 3, 2, (1, 1), &[((0, 1), (1, 1)), ((5, 1), (2, 1))]);
        let m = constraint_matrix(&i).unwrap();
        assert_eq!((m.rows(), m.cols()), (6, 1));
        for (r, &(_, sig)) in i.row_keys().iter().enumerate() {
            let expected = if sig == 0 { rat(1, 1) } else { rat(0, 1) };
            assert_eq!(m.at(r, 0), &expected);
        }
    }

    #[test]
    fn row_zero_is_plain_evaluation() {
        let i = inst(2, 1, 2, 2, (2, 3), &[((1, 2), (3, 1)), ((-2, 1), (1, 4))]);
        let m = constraint_matrix(&i).unwrap();
        let monos = i.monomials();
        for (mu, (xi, eta)) in i.points.iter().enumerate() {
            let r = mu * i.s as usize; // sigma = 0 row
            for (c, &(a, b)) in monos.iter().enumerate() {
                let expected = pow_rat(xi, a as i64).unwrap() * pow_rat(eta, b as i64).unwrap();
                assert_eq!(m.at(r, c), &expected);
            }
        }
    }

    #[test]
    fn evaluation_identity_random_polynomial() {
        let i = inst(
            2,
            2,
            3,
            3,
            (1, 2),
            &[((0, 1), (1, 1)), ((1, 1), (2, 1)), ((3, 1), (1, 3))],
        );
        let m = constraint_matrix(&i).unwrap();
        let monos = i.monomials();
        // coefficient vector of a random polynomial in the graded basis
        let coeffs: Vec<BigRational> = (0..monos.len())
            .map(|k| rat((k as i64 * 7 - 10) % 9, 1 + (k as i64 % 3)))
            .collect();
        let mut p = LaurentBiPoly::zero();
        for (c, &(a, b)) in coeffs.iter().zip(&monos) {
            p = p.add(&LaurentBiPoly::monomial(a, b as i64, c.clone()));
        }
        let matvec = m.apply(&coeffs);
        let mut idx = 0;
        for (xi, eta) in &i.points {
            for sig in 0..i.s {
                let direct = p.delta_pow(&i.beta, sig).eval(xi, eta).unwrap();
                assert_eq!(matvec[idx], direct);
                idx += 1;
            }
        }
    }

    #[test]
    fn check_examples() {
        // condition holds (12 > 8), kernel must vanish
        let i = inst(
            1,
            1,
            4,
            3,
            (1, 1),
            &[((0, 1), (1, 1)), ((1, 1), (2, 1)), ((2, 1), (4, 1))],
        );
        let r = lemma2_check(&i).unwrap();
        assert!(r.condition_21);
        assert_eq!(r.kernel_dim, 0);
        assert_eq!(r.verdict, Lemma2Verdict::ConsistentWithLemma);

        // condition fails (2 < 8): kernel at least 2, witness verified
        let i = inst(1, 1, 1, 2, (1, 1), &[((0, 1), (1, 1)), ((1, 1), (2, 1))]);
        let r = lemma2_check(&i).unwrap();
        assert!(!r.condition_21);
        assert!(r.kernel_dim >= 2);
        let (v, poly) = r.kernel_witness.unwrap();
        assert!(v.iter().any(|x| !x.is_zero()));
        // the witness polynomial is annihilated at all points up to order S
        for (xi, eta) in &i.points {
            for sig in 0..i.s {
                assert_eq!(
                    poly.delta_pow(&i.beta, sig).eval(xi, eta).unwrap(),
                    rat(0, 1)
                );
            }
        }
    }

    #[test]
    fn parse_instance_format() {
        let text = "# demo\n d0 = 1\n d1=1\n s=4\n m=3\n beta = 1\n point = 0, 1\n point=1,2\n point = 2, 4\n";
        let i = ZeroEstimateInstance::parse(text).unwrap();
        assert_eq!((i.d0, i.d1, i.s, i.m), (1, 1, 4, 3));
        assert_eq!(i.points[2], (rat(2, 1), rat(4, 1)));
        assert!(ZeroEstimateInstance::parse("d0=1").is_err());
        // duplicate xi rejected
        let bad = "d0=1\nd1=1\ns=2\nm=2\nbeta=1\npoint=1,1\npoint=1,2\n";
        assert!(ZeroEstimateInstance::parse(bad).is_err());
    }
}
