//! The interpolation-determinant construction at configurable (toy) scale:
//! parameter derivation with decided floors, analytic entries gamma and their
//! algebraic polynomial forms q, exact rank witnesses, the analytic
//! determinant upper bound, and the vanishing-order check behind it.

use crate::binomial::{binomial, d_sigma, delta_derivatives, DeltaParams};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::numerics::{
    exp_complex, ln_interval, parse_rational, rat, CertifiedComplex, CertifiedReal,
    PrecisionCeiling,
};
use crate::zeroest::{select_full_rank_rows, LaurentBiPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A recorded certified parameter check.
#[derive(Clone, Debug)]
pub struct ParamCheck {
    pub label: String,
    pub pass: bool,
}

/// The full parameter pack: certified U, V, W and the decided integer
/// parameters S, S1, T, T1, H, L.
#[derive(Clone, Debug)]
pub struct BoundParams {
    pub d: u32,
    pub log_a: CertifiedReal,
    pub log_b: CertifiedReal,
    pub e_param: CertifiedReal,
    pub theta: CertifiedComplex,
    pub abs_theta: CertifiedReal,
    pub theta_plus: CertifiedReal,
    pub log_e: CertifiedReal,
    pub u: CertifiedReal,
    pub v: CertifiedReal,
    pub w: CertifiedReal,
    pub s: u64,
    pub s1: u64,
    pub t: u64,
    pub t1: u64,
    pub h: u64,
    pub l: u64,
    pub checks: Vec<ParamCheck>,
}

fn decided_floor_of(v: &CertifiedReal) -> Option<u64> {
    let f = v.decided_floor()?;
    if f.is_negative() {
        return None;
    }
    let (_, digits) = f.to_u64_digits();
    digits.first().copied().or(Some(0))
}

/// Derive U, V, W and the integer parameters from (D, log A, log B, E, theta).
///
/// U = (3.3 D log(D+2) + log E)/log E,
/// V = (2 E |theta| + D log A + 6 log E)/log E,
/// W = (log B + log log A + 4 log D + 2 log(E |theta|_+) + 10)/log E,
/// S = [10.5 U V], S1 = [12 D W + 0.5], T = [20.2 D V W],
/// T1 = [4.2 U + 0.5], H = [1.5 W log E], L = (T+1)(2 T1 + 1).
///
/// Floors must be decided (the interval may not straddle an integer); an
/// undecidable floor at the precision ceiling is a hard error.
pub fn derive_params(
    d: u32,
    log_a: &CertifiedReal,
    log_b: &CertifiedReal,
    e_param: &CertifiedReal,
    theta: &CertifiedComplex,
    ceiling: &PrecisionCeiling,
) -> Result<BoundParams> {
    if d == 0 {
        return Err(Error::InvalidInstance("D must be positive".into()));
    }
    // Precondition E >= e. Equality is allowed (E = e is a common choice) and
    // two enclosures of the same number can never be separated, so only a
    // certain violation is rejected: undecided-after-512-bits counts as
    // satisfied.
    let mut bits = 64u32;
    loop {
        let e_const = crate::numerics::e_const(bits);
        if e_param.lo() >= e_const.hi() {
            break;
        }
        if e_param.hi() < e_const.lo() {
            return Err(Error::CheckFailed("E >= e".into()));
        }
        if bits >= 512 {
            break;
        }
        bits *= 2;
    }
    let inv_d = rat(1, d as i64);
    if log_a.hi() < &inv_d {
        return Err(Error::CheckFailed("log A >= 1/D".into()));
    }
    if log_a.lo() < &inv_d {
        return Err(Error::InconclusivePrecision {
            context: "log A >= 1/D undecided".into(),
            max_bits: ceiling.max_bits,
        });
    }

    let d_big = rat(d as i64, 1);
    // a decided check failure must abort immediately (its floors may not even
    // be well defined), so the escalation closure carries a Result
    ceiling.escalate(96, "derive parameter pack", |bits| {
        let log_e = ln_interval(e_param, bits).ok()?;
        if !log_e.certainly_positive() {
            return None;
        }
        let abs_theta = theta.modulus(bits).ok()?;
        let theta_plus = abs_theta.max1();
        let log_d2 = ln_interval(&CertifiedReal::exact(rat(d as i64 + 2, 1)), bits).ok()?;
        let log_d = if d == 1 {
            CertifiedReal::zero()
        } else {
            ln_interval(&CertifiedReal::exact(d_big.clone()), bits).ok()?
        };
        let log_log_a = ln_interval(log_a, bits).ok()?;
        let log_e_theta_plus = ln_interval(&e_param.mul(&theta_plus), bits).ok()?;

        let u_num = log_d2.scale(&(rat(33, 10) * &d_big)).add(&log_e);
        let v_num = e_param
            .mul(&abs_theta)
            .scale(&rat(2, 1))
            .add(&log_a.scale(&d_big))
            .add(&log_e.scale(&rat(6, 1)));
        let w_num = log_b
            .add(&log_log_a)
            .add(&log_d.scale(&rat(4, 1)))
            .add(&log_e_theta_plus.scale(&rat(2, 1)))
            .add(&CertifiedReal::from_int(10));
        let u = u_num.div(&log_e)?;
        let v = v_num.div(&log_e)?;
        let w = w_num.div(&log_e)?;

        // recorded checks come first: the floors below only make sense for
        // packs that pass the gates
        let mut checks = Vec::new();
        let gates = [
            ("U >= 1", cmp_ge(&u, &CertifiedReal::one())),
            ("V >= 6", cmp_ge(&v, &CertifiedReal::from_int(6))),
            ("W >= 2", cmp_ge(&w, &CertifiedReal::from_int(2))),
        ];
        for (label, decided) in gates {
            match decided {
                None => return None,
                Some(false) => return Some(Err(Error::CheckFailed(label.into()))),
                Some(true) => checks.push(ParamCheck {
                    label: label.into(),
                    pass: true,
                }),
            }
        }

        let s = decided_floor_of(&u.mul(&v).scale(&rat(21, 2)))?;
        let s1 = decided_floor_of(&w.scale(&(rat(12, 1) * &d_big)).add_rational(&rat(1, 2)))?;
        let t = decided_floor_of(&v.mul(&w).scale(&(rat(101, 5) * &d_big)))?;
        let t1 = decided_floor_of(&u.scale(&rat(21, 5)).add_rational(&rat(1, 2)))?;
        let h = decided_floor_of(&w.mul(&log_e).scale(&rat(3, 2)))?;
        let l = (t + 1) * (2 * t1 + 1);

        let l_cap = u.mul(&v).mul(&w).scale(&(rat(211, 1) * &d_big));
        match cmp_lt(&CertifiedReal::exact(rat(l as i64, 1)), &l_cap) {
            None => return None,
            Some(false) => return Some(Err(Error::CheckFailed("L < 211 D U V W".into()))),
            Some(true) => checks.push(ParamCheck {
                label: "L < 211 D U V W".into(),
                pass: true,
            }),
        }

        Some(Ok(BoundParams {
            d,
            log_a: log_a.clone(),
            log_b: log_b.clone(),
            e_param: e_param.clone(),
            theta: theta.clone(),
            abs_theta,
            theta_plus,
            log_e,
            u,
            v,
            w,
            s,
            s1,
            t,
            t1,
            h,
            l,
            checks,
        }))
    })?
}

fn cmp_ge(a: &CertifiedReal, b: &CertifiedReal) -> Option<bool> {
    if a.certainly_ge(b) {
        Some(true)
    } else if a.certainly_lt(b) {
        Some(false)
    } else {
        None
    }
}

fn cmp_lt(a: &CertifiedReal, b: &CertifiedReal) -> Option<bool> {
    if a.certainly_lt(b) {
        Some(true)
    } else if a.certainly_ge(b) {
        Some(false)
    } else {
        None
    }
}

/// Index of one entry of the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EntryIndex {
    pub tau: u64,
    pub t: i64,
    pub sigma: u64,
    pub s: i64,
}

/// The analytic entry: the sigma-th derivative of Delta(z, tau, H) e^(theta t z)
/// at z = s,
/// `sum_k C(sigma,k) Delta^(k)(s, tau, H) (t theta)^(sigma-k) e^(theta t s)`.
pub fn gamma_entry(
    idx: &EntryIndex,
    h_param: u64,
    theta: &CertifiedComplex,
    bits: u32,
) -> Result<CertifiedComplex> {
    let params = DeltaParams::new(idx.tau, h_param)?;
    let kmax = idx.tau.min(idx.sigma);
    let s_rat = rat(idx.s, 1);
    let derivs = delta_derivatives(&s_rat, &params, kmax);
    let exp_factor = exp_complex(&theta.scale(&rat(idx.t * idx.s, 1)), bits);
    let mut sum = CertifiedComplex::zero();
    for k in 0..=kmax {
        let coeff = BigRational::from_integer(binomial(idx.sigma, k)) * &derivs[k as usize];
        if coeff.is_zero() {
            continue;
        }
        let pow = idx.sigma - k;
        let t_pow = pow_int(idx.t, pow);
        let theta_pow = theta.powi(pow as i64)?;
        sum = sum.add(&theta_pow.scale(&(coeff * BigRational::from_integer(t_pow))));
    }
    Ok(sum.mul(&exp_factor).round_out(bits))
}

fn pow_int(t: i64, n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..n {
        acc *= BigInt::from(t);
    }
    acc
}

/// The algebraic entry as an integer-coefficient polynomial in X and Y, Y^-1:
/// `q = d_sigma sum_k C(sigma,k) Delta^(k)(s, tau, H) (t X)^(sigma-k) Y^(t s)`.
///
/// Integrality of every coefficient is guaranteed by the binomial-denominator
/// lemma; a non-integer coefficient after clearing is a fatal inconsistency.
pub fn a_entry_poly(idx: &EntryIndex, h_param: u64) -> Result<LaurentBiPoly> {
    let params = DeltaParams::new(idx.tau, h_param)?;
    let kmax = idx.tau.min(idx.sigma);
    let s_rat = rat(idx.s, 1);
    let derivs = delta_derivatives(&s_rat, &params, kmax);
    let d_sig = BigRational::from_integer(d_sigma(h_param, idx.sigma)?.value);
    let y_exp = idx.t * idx.s;
    let mut out = LaurentBiPoly::zero();
    for k in 0..=kmax {
        let coeff = &d_sig
            * BigRational::from_integer(binomial(idx.sigma, k))
            * &derivs[k as usize]
            * BigRational::from_integer(pow_int(idx.t, idx.sigma - k));
        if coeff.is_zero() {
            continue;
        }
        if !coeff.is_integer() {
            return Err(Error::IntegralityViolation(format!(
                "entry (tau={}, t={}, sigma={}, s={}), k={k}: {coeff}",
                idx.tau, idx.t, idx.sigma, idx.s
            )));
        }
        out = out.add(&LaurentBiPoly::monomial(
            (idx.sigma - k) as u32,
            y_exp,
            coeff,
        ));
    }
    Ok(out)
}

/// Dual-route consistency of one entry: the polynomial form evaluated at
/// (X, Y) = (theta, e^theta) against d_sigma times the analytic entry.
#[derive(Clone, Debug)]
pub struct EntryConsistency {
    pub overlaps: bool,
    pub contained: bool,
    pub poly_path: CertifiedComplex,
    pub gamma_scaled: CertifiedComplex,
}

impl EntryConsistency {
    pub fn pass(&self) -> bool {
        self.overlaps
    }
}

/// `exp_theta`: exact value of e^theta when known (e.g. theta = log 2),
/// otherwise it is computed as a certified enclosure.
///
/// The polynomial path is evaluated with extra working precision so that it
/// not only overlaps but in practice lands inside the analytic interval.
pub fn entry_consistency_check(
    idx: &EntryIndex,
    h_param: u64,
    theta: &CertifiedComplex,
    exp_theta: Option<&BigRational>,
    bits: u32,
) -> Result<EntryConsistency> {
    let poly = a_entry_poly(idx, h_param)?;
    let tight_bits = bits + 64;
    let y = match exp_theta {
        Some(v) => CertifiedComplex::exact_rational(v),
        None => exp_complex(theta, tight_bits),
    };
    let poly_path = poly.eval_complex(theta, &y)?;
    let d_sig = BigRational::from_integer(d_sigma(h_param, idx.sigma)?.value);
    let gamma_scaled = gamma_entry(idx, h_param, &theta.round_out(bits), bits)?.scale(&d_sig);
    // when cancellation collapses the analytic side to an exact point, the
    // certifiable reading of "lies in" flips: the point must lie in the
    // polynomial-path enclosure
    let gamma_is_point = gamma_scaled.re.is_exact() && gamma_scaled.im.is_exact();
    let contained = gamma_scaled.contains_box(&poly_path)
        || (gamma_is_point && poly_path.contains(&gamma_scaled.mid()));
    Ok(EntryConsistency {
        overlaps: poly_path.overlaps(&gamma_scaled),
        contained,
        poly_path,
        gamma_scaled,
    })
}

// ---------------------------------------------------------------------------
// toy rank witness
// ---------------------------------------------------------------------------

/// Small overridden parameters for desk-scale matrices.
#[derive(Clone, Debug)]
pub struct ToyConfig {
    pub s: u64,
    pub s1: u64,
    pub t: u64,
    pub t1: u64,
    pub h: u64,
    pub alpha: BigRational,
    pub beta: BigRational,
    /// refuse to materialize matrices with more than this many columns
    pub l_cap: u64,
}

impl ToyConfig {
    pub fn new(
        s: u64,
        s1: u64,
        t: u64,
        t1: u64,
        h: u64,
        alpha: BigRational,
        beta: BigRational,
    ) -> Self {
        ToyConfig {
            s,
            s1,
            t,
            t1,
            h,
            alpha,
            beta,
            l_cap: 2000,
        }
    }

    pub fn l(&self) -> u64 {
        (self.t + 1) * (2 * self.t1 + 1)
    }

    /// Key-value format: s, s1, t, t1, h integers and alpha, beta fractions.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vals = std::collections::HashMap::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{line}`")))?;
            vals.insert(k.trim().to_string(), v.trim().to_string());
        }
        let int = |k: &str| -> Result<u64> {
            vals.get(k)
                .ok_or_else(|| Error::Parse(format!("missing {k}")))?
                .parse()
                .map_err(|e| Error::Parse(format!("{k}: {e}")))
        };
        let frac = |k: &str| -> Result<BigRational> {
            parse_rational(
                vals.get(k)
                    .ok_or_else(|| Error::Parse(format!("missing {k}")))?,
            )
        };
        Ok(ToyConfig::new(
            int("s")?,
            int("s1")?,
            int("t")?,
            int("t1")?,
            int("h")?,
            frac("alpha")?,
            frac("beta")?,
        ))
    }
}

#[derive(Clone, Debug)]
pub struct ToyRankReport {
    pub l: u64,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// (sigma, s) labels of the selected rows, lexicographically sorted
    pub selected_rows: Vec<(u64, i64)>,
    /// exact nonzero determinant of the selected square submatrix
    pub minor: Option<BigRational>,
    /// a kernel vector over the (tau, t) columns when rank < L
    pub kernel: Option<Vec<BigRational>>,
}

/// Build the ((S+1)(S1+1)) x L matrix of algebraic entries at (beta, alpha)
/// and compute its exact rank; a full-rank outcome yields a deterministic
/// nonzero minor witness.
pub fn toy_rank_check(cfg: &ToyConfig) -> Result<ToyRankReport> {
    if cfg.alpha.is_zero() {
        return Err(Error::InvalidInstance("alpha must be nonzero".into()));
    }
    let l = cfg.l();
    if l > cfg.l_cap {
        return Err(Error::CapExceeded {
            size: l as u128,
            cap: cfg.l_cap as u128,
        });
    }
    let rows: Vec<(u64, i64)> = (0..=cfg.s)
        .flat_map(|sigma| (0..=cfg.s1 as i64).map(move |s| (sigma, s)))
        .collect();
    let cols: Vec<(u64, i64)> = (0..=cfg.t)
        .flat_map(|tau| (-(cfg.t1 as i64)..=cfg.t1 as i64).map(move |t| (tau, t)))
        .collect();
    debug_assert_eq!(cols.len() as u64, l);
    // fewer rows than columns is legal: the report comes back under-determined
    let mut entries = Vec::with_capacity(rows.len() * cols.len());
    for &(sigma, s) in &rows {
        for &(tau, t) in &cols {
            let idx = EntryIndex { tau, t, sigma, s };
            let poly = a_entry_poly(&idx, cfg.h)?;
            entries.push(poly.eval(&cfg.beta, &cfg.alpha)?);
        }
    }
    let matrix = QMatrix::from_fn(rows.len(), cols.len(), |r, c| {
        entries[r * cols.len() + c].clone()
    });
    let (rank, selected) = select_full_rank_rows(&matrix);
    if rank == cols.len() {
        let sub = matrix.select_rows(&selected);
        let minor = sub.det().expect("square");
        if minor.is_zero() {
            return Err(Error::InvalidInstance(
                "selected rows produced a zero minor".into(),
            ));
        }
        Ok(ToyRankReport {
            l,
            rows: rows.len(),
            cols: cols.len(),
            rank,
            selected_rows: selected.iter().map(|&r| rows[r]).collect(),
            minor: Some(minor),
            kernel: None,
        })
    } else {
        Ok(ToyRankReport {
            l,
            rows: rows.len(),
            cols: cols.len(),
            rank,
            selected_rows: selected.iter().map(|&r| rows[r]).collect(),
            minor: None,
            kernel: matrix.kernel_vector(),
        })
    }
}

// ---------------------------------------------------------------------------
// analytic determinant bound
// ---------------------------------------------------------------------------

/// Inputs of the analytic determinant bound.
#[derive(Clone, Debug)]
pub struct Lemma3Config {
    pub l: u64,
    pub e_param: CertifiedReal,
    pub m: CertifiedReal,
    pub s: CertifiedReal,
    pub epsilon: CertifiedReal,
}

/// The per-row bound on (1/L) log |D|:
/// `-(L/2) log E + M + S log E + log(2 L E)`.
///
/// Requires 0 < epsilon < E^-L, certified.
pub fn lemma3_rhs(
    cfg: &Lemma3Config,
    bits: u32,
    ceiling: &PrecisionCeiling,
) -> Result<CertifiedReal> {
    if cfg.l == 0 {
        return Err(Error::InvalidInstance("L must be positive".into()));
    }
    if !cfg.epsilon.certainly_positive() {
        return Err(Error::InvalidInstance(
            "epsilon must be certainly positive".into(),
        ));
    }
    // epsilon * E^L < 1, certified
    let eps_ok = ceiling.escalate(bits, "epsilon < E^-L", |b| {
        let e_pow = cfg.e_param.round_out(b).powi(cfg.l as u32);
        let prod = e_pow.mul(&cfg.epsilon);
        if prod.hi() < &BigRational::one() {
            Some(true)
        } else if prod.lo() >= &BigRational::one() {
            Some(false)
        } else {
            None
        }
    })?;
    if !eps_ok {
        return Err(Error::InvalidInstance("epsilon >= E^-L".into()));
    }
    let log_e = ln_interval(&cfg.e_param, bits)?;
    let log_2le = ln_interval(&cfg.e_param.scale(&rat(2 * cfg.l as i64, 1)), bits)?;
    Ok(log_e
        .scale(&rat(-(cfg.l as i64), 2))
        .add(&cfg.m)
        .add(&cfg.s.mul(&log_e))
        .add(&log_2le))
}

/// Determinant of a complex interval matrix by minor expansion with a memo
/// over column subsets (fine for the toy sizes used here).
pub fn det_complex_interval(m: &[Vec<CertifiedComplex>]) -> CertifiedComplex {
    let n = m.len();
    assert!(n <= 20, "toy determinants only");
    assert!(m.iter().all(|row| row.len() == n));
    let mut memo: std::collections::HashMap<u32, CertifiedComplex> =
        std::collections::HashMap::new();
    fn rec(
        m: &[Vec<CertifiedComplex>],
        row: usize,
        cols: u32,
        memo: &mut std::collections::HashMap<u32, CertifiedComplex>,
    ) -> CertifiedComplex {
        let n = m.len();
        if row == n {
            return CertifiedComplex::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = CertifiedComplex::zero();
        let mut sign = false;
        for c in 0..n {
            if cols & (1 << c) != 0 {
                continue;
            }
            let sub = rec(m, row + 1, cols | (1 << c), memo);
            let term = m[row][c].mul(&sub);
            acc = if sign { acc.sub(&term) } else { acc.add(&term) };
            sign = !sign;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    rec(m, 0, 0, &mut memo)
}

// ---------------------------------------------------------------------------
// vanishing order of the monomial-case determinant
// ---------------------------------------------------------------------------

/// One case: distinct exponents n_lambda, derivative orders sigma_mu, and
/// nonzero rational points zeta_mu (|I| = |J|).
#[derive(Clone, Debug)]
pub struct VanishingOrderCase {
    pub exponents: Vec<u64>,
    pub orders: Vec<u64>,
    pub points: Vec<BigRational>,
}

#[derive(Clone, Debug)]
pub struct VanishingOrderReport {
    /// None when the determinant is identically zero
    pub computed_ord: Option<u64>,
    pub lower_bound: i64,
    pub pass: bool,
}

/// Forms `det( C(n_l, s_m) s_m! (z zeta_m)^(n_l - s_m) )` symbolically as an
/// exact polynomial in z and compares its order of vanishing at the origin
/// with `|I|(|I|-1)/2 - sum s_m`. An identically zero determinant passes by
/// the zero branch (repeated exponents take that route).
pub fn vanishing_order_check(case: &VanishingOrderCase) -> Result<VanishingOrderReport> {
    let n = case.exponents.len();
    if case.orders.len() != n || case.points.len() != n {
        return Err(Error::InvalidInstance("|I| = |J| is required".into()));
    }
    if n == 0 || n > 16 {
        return Err(Error::InvalidInstance(
            "size must be between 1 and 16".into(),
        ));
    }
    for z in &case.points {
        if z.is_zero() {
            return Err(Error::InvalidInstance("points must be nonzero".into()));
        }
    }
    let factorial = |k: u64| -> BigInt {
        let mut acc = BigInt::one();
        for i in 2..=k {
            acc *= BigInt::from(i);
        }
        acc
    };
    // entry (l, m) = C(n_l, s_m) s_m! zeta_m^(n_l - s_m) z^(n_l - s_m)
    let entries: Vec<Vec<RatPoly>> = case
        .exponents
        .iter()
        .map(|&nl| {
            case.orders
                .iter()
                .zip(&case.points)
                .map(|(&sm, zeta)| {
                    if sm > nl {
                        return RatPoly::zero();
                    }
                    let coeff = BigRational::from_integer(binomial(nl, sm) * factorial(sm))
                        * zeta_pow(zeta, nl - sm);
                    RatPoly::monomial((nl - sm) as usize, coeff)
                })
                .collect()
        })
        .collect();
    let det = det_rat_poly(&entries);
    let computed_ord = det.order_at_zero();
    let size = n as i64;
    let lower_bound = size * (size - 1) / 2 - case.orders.iter().map(|&s| s as i64).sum::<i64>();
    let pass = match computed_ord {
        None => true,
        Some(o) => (o as i64) >= lower_bound,
    };
    Ok(VanishingOrderReport {
        computed_ord,
        lower_bound,
        pass,
    })
}

fn zeta_pow(z: &BigRational, n: u64) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..n {
        acc *= z;
    }
    acc
}

/// Minimal dense rational polynomial for the symbolic determinant.
#[derive(Clone, Debug, PartialEq)]
struct RatPoly {
    coeffs: Vec<BigRational>, // low first, trimmed
}

impl RatPoly {
    fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    fn one() -> Self {
        RatPoly {
            coeffs: vec![BigRational::one()],
        }
    }

    fn monomial(k: usize, c: BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        RatPoly { coeffs }
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                let a = self
                    .coeffs
                    .get(k)
                    .cloned()
                    .unwrap_or_else(BigRational::zero);
                let b = o.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero);
                a + b
            })
            .collect();
        RatPoly { coeffs }.trim()
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn neg(&self) -> Self {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly { coeffs }.trim()
    }

    fn order_at_zero(&self) -> Option<u64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|k| k as u64)
    }
}

fn det_rat_poly(m: &[Vec<RatPoly>]) -> RatPoly {
    let n = m.len();
    assert!(n <= 16);
    fn rec(
        m: &[Vec<RatPoly>],
        row: usize,
        cols: u32,
        memo: &mut std::collections::HashMap<u32, RatPoly>,
    ) -> RatPoly {
        let n = m.len();
        if row == n {
            return RatPoly::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = RatPoly::zero();
        let mut sign = false;
        for c in 0..n {
            if cols & (1 << c) != 0 {
                continue;
            }
            if !m[row][c].is_zero() {
                let sub = rec(m, row + 1, cols | (1 << c), memo);
                let term = m[row][c].mul(&sub);
                acc = if sign { acc.sub(&term) } else { acc.add(&term) };
            }
            sign = !sign;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    rec(m, 0, 0, &mut std::collections::HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{e_const, ln2, pi, rat};

    fn ceiling() -> PrecisionCeiling {
        PrecisionCeiling::default()
    }

    #[test]
    fn derive_params_basic_instance() {
        // D=1, logA=1, logB=1, E=e, theta=1
        let e = e_const(256);
        let theta = CertifiedComplex::exact_rational(&rat(1, 1));
        let p = derive_params(
            1,
            &CertifiedReal::one(),
            &CertifiedReal::one(),
            &e,
            &theta,
            &ceiling(),
        )
        .unwrap();
        // U = 3.3 log 3 + 1 ~ 4.6254, V = 2e + 7 ~ 12.4366, W = 13
        assert!(
            p.u.contains(&crate::numerics::parse_rational("4.62541").unwrap())
                || p.u.overlaps(&CertifiedReal::centered(
                    crate::numerics::parse_rational("4.62541").unwrap(),
                    rat(1, 10000)
                ))
        );
        assert!(p.v.overlaps(&CertifiedReal::centered(
            crate::numerics::parse_rational("12.43656").unwrap(),
            rat(1, 10000)
        )));
        assert!(p.w.contains(&rat(13, 1)));
        assert_eq!(p.h, 19); // [1.5 * 13] = [19.5]
        assert_eq!(p.s1, 156); // [12*13 + 0.5]
        assert_eq!(p.l, (p.t + 1) * (2 * p.t1 + 1));
        assert!(p.checks.iter().all(|c| c.pass));
    }

    #[test]
    fn derive_params_second_instance() {
        // D=2, E=e^2, theta=pi i, logA=1/2: V = (2 e^2 pi + 1 + 12)/2 ~ 29.716
        let e2 = e_const(256).powi(2);
        let theta = CertifiedComplex::new(CertifiedReal::zero(), pi(256));
        let log_b = ln_interval(&CertifiedReal::exact(rat(3, 1)), 256).unwrap();
        let p = derive_params(
            2,
            &CertifiedReal::exact(rat(1, 2)),
            &log_b,
            &e2,
            &theta,
            &ceiling(),
        )
        .unwrap();
        assert!(p.v.overlaps(&CertifiedReal::centered(
            crate::numerics::parse_rational("29.713404").unwrap(),
            rat(1, 100_000)
        )));
        assert!(p.checks.iter().all(|c| c.pass));
    }

    #[test]
    fn derive_params_rejects_bad_inputs() {
        let theta = CertifiedComplex::exact_rational(&rat(1, 1));
        // E < e
        let err = derive_params(
            1,
            &CertifiedReal::one(),
            &CertifiedReal::one(),
            &CertifiedReal::exact(rat(2, 1)),
            &theta,
            &ceiling(),
        );
        assert!(matches!(err, Err(Error::CheckFailed(_))));
        // log A < 1/D
        let err = derive_params(
            1,
            &CertifiedReal::exact(rat(1, 3)),
            &CertifiedReal::one(),
            &e_const(128),
            &theta,
            &ceiling(),
        );
        assert!(matches!(err, Err(Error::CheckFailed(_))));
        // a nonsensical log B drives W below 2: the recorded check refuses
        let err = derive_params(
            1,
            &CertifiedReal::one(),
            &CertifiedReal::from_int(-20),
            &e_const(128),
            &theta,
            &ceiling(),
        );
        match err {
            Err(Error::CheckFailed(label)) => assert!(label.contains("W >= 2")),
            other => panic!("expected a W >= 2 refusal, got {other:?}"),
        }
    }

    #[test]
    fn gamma_entry_examples() {
        // tau=0, t=0, sigma=0, s=0 -> 1
        let idx = EntryIndex {
            tau: 0,
            t: 0,
            sigma: 0,
            s: 0,
        };
        let g = gamma_entry(&idx, 2, &CertifiedComplex::exact_rational(&rat(1, 1)), 96).unwrap();
        assert!(g.re.contains(&rat(1, 1)) && g.im.contains(&rat(0, 1)));
        // tau=0, sigma>=1, t=0 -> 0
        let idx = EntryIndex {
            tau: 0,
            t: 0,
            sigma: 2,
            s: 3,
        };
        let g = gamma_entry(&idx, 2, &CertifiedComplex::exact_rational(&rat(1, 1)), 96).unwrap();
        assert!(g.re.contains(&rat(0, 1)) && g.im.contains(&rat(0, 1)));
        assert!(g.width() < rat(1, 1000));
        // tau=3, H=2, t=1, sigma=1, s=1, theta=1 -> (5/2 + 1) e ~ 9.514
        let idx = EntryIndex {
            tau: 3,
            t: 1,
            sigma: 1,
            s: 1,
        };
        let g = gamma_entry(&idx, 2, &CertifiedComplex::exact_rational(&rat(1, 1)), 128).unwrap();
        let expected = e_const(160).scale(&rat(7, 2));
        assert!(g.re.overlaps(&expected));
        assert!(g.im.contains(&rat(0, 1)));
    }

    #[test]
    fn a_entry_poly_examples() {
        // identity entry
        let idx = EntryIndex {
            tau: 0,
            t: 0,
            sigma: 0,
            s: 0,
        };
        let q = a_entry_poly(&idx, 2).unwrap();
        assert_eq!(q, LaurentBiPoly::constant(rat(1, 1)));
        // tau=3, H=2, t=2, sigma=1, s=1 -> 5 Y^2 + 4 X Y^2
        let idx = EntryIndex {
            tau: 3,
            t: 2,
            sigma: 1,
            s: 1,
        };
        let q = a_entry_poly(&idx, 2).unwrap();
        assert_eq!(q.coeff(0, 2), rat(5, 1));
        assert_eq!(q.coeff(1, 2), rat(4, 1));
        assert_eq!(q.terms().count(), 2);
        // pure negative Laurent term
        let idx = EntryIndex {
            tau: 0,
            t: -1,
            sigma: 0,
            s: 2,
        };
        let q = a_entry_poly(&idx, 2).unwrap();
        assert_eq!(q, LaurentBiPoly::monomial(0, -2, rat(1, 1)));
    }

    #[test]
    fn entry_consistency_dual_route() {
        let theta_one = CertifiedComplex::exact_rational(&rat(1, 1));
        let idx = EntryIndex {
            tau: 0,
            t: 0,
            sigma: 0,
            s: 0,
        };
        let c = entry_consistency_check(&idx, 2, &theta_one, None, 96).unwrap();
        assert!(c.pass() && c.contained);

        let idx = EntryIndex {
            tau: 3,
            t: 1,
            sigma: 1,
            s: 1,
        };
        let c = entry_consistency_check(&idx, 2, &theta_one, None, 96).unwrap();
        assert!(c.pass());

        // theta = log 2, exact Y = 2
        let theta_log2 = CertifiedComplex::from_real(ln2(192));
        for (tau, t, sigma, s) in [(2u64, 1i64, 1u64, 1i64), (1, -1, 2, 2), (3, 2, 2, 0)] {
            let idx = EntryIndex { tau, t, sigma, s };
            let c = entry_consistency_check(&idx, 2, &theta_log2, Some(&rat(2, 1)), 96).unwrap();
            assert!(c.pass(), "overlap failed at {idx:?}");
        }
    }

    #[test]
    fn toy_rank_full_witness() {
        let cfg = ToyConfig::new(2, 2, 1, 1, 2, rat(2, 1), rat(1, 1));
        let report = toy_rank_check(&cfg).unwrap();
        assert_eq!(report.l, 6);
        assert_eq!((report.rows, report.cols), (9, 6));
        assert_eq!(report.rank, 6);
        let minor = report.minor.clone().unwrap();
        assert!(!minor.is_zero());
        assert_eq!(report.selected_rows.len(), 6);
        // selected rows pairwise distinct
        let mut sorted = report.selected_rows.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
    }

    #[test]
    fn toy_rank_underdetermined() {
        // single row, L = 6: rank <= 1 < L, reported with a kernel witness
        let cfg = ToyConfig::new(0, 0, 1, 1, 2, rat(2, 1), rat(1, 1));
        let report = toy_rank_check(&cfg).unwrap();
        assert_eq!(report.l, 6);
        assert!(report.rank <= 1);
        assert!(report.minor.is_none());
        assert!(report.kernel.is_some());
        // selected rows stay pairwise distinct in every outcome
        let mut sorted = report.selected_rows.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), report.selected_rows.len());
    }

    #[test]
    fn lemma3_rhs_examples() {
        // L=4, E=e, M=1, S=1 -> 1 + log 8
        let cfg = Lemma3Config {
            l: 4,
            e_param: e_const(160),
            m: CertifiedReal::one(),
            s: CertifiedReal::one(),
            epsilon: CertifiedReal::exact(rat(1, 1_000_000)),
        };
        let v = lemma3_rhs(&cfg, 128, &ceiling()).unwrap();
        let expected = crate::numerics::ln_rat(&rat(8, 1), 160)
            .unwrap()
            .add(&CertifiedReal::one());
        assert!(v.overlaps(&expected));

        // L=2, E=e, M=0, S=0 -> log 4
        let cfg = Lemma3Config {
            l: 2,
            e_param: e_const(160),
            m: CertifiedReal::zero(),
            s: CertifiedReal::zero(),
            epsilon: CertifiedReal::exact(rat(1, 100)),
        };
        let v = lemma3_rhs(&cfg, 128, &ceiling()).unwrap();
        let expected = crate::numerics::ln_rat(&rat(4, 1), 160).unwrap();
        assert!(v.overlaps(&expected));

        // affine in M: shifting M by c shifts the result by exactly c
        let cfg_shift = Lemma3Config {
            l: 2,
            e_param: e_const(160),
            m: CertifiedReal::exact(rat(5, 2)),
            s: CertifiedReal::zero(),
            epsilon: CertifiedReal::exact(rat(1, 100)),
        };
        let v2 = lemma3_rhs(&cfg_shift, 128, &ceiling()).unwrap();
        assert!(v2.sub(&v).contains(&rat(5, 2)));

        // epsilon >= E^-L rejected
        let bad = Lemma3Config {
            l: 2,
            e_param: e_const(160),
            m: CertifiedReal::zero(),
            s: CertifiedReal::zero(),
            epsilon: CertifiedReal::exact(rat(1, 2)),
        };
        assert!(lemma3_rhs(&bad, 128, &ceiling()).is_err());
    }

    #[test]
    fn vanishing_order_examples() {
        // Vandermonde-like: n = (0,1,2), sigma = 0, ord = 3... the determinant
        // is z^(0+1+2) times a nonzero constant, so ord = 3 >= 3
        let case = VanishingOrderCase {
            exponents: vec![0, 1, 2],
            orders: vec![0, 0, 0],
            points: vec![rat(1, 1), rat(2, 1), rat(3, 1)],
        };
        let r = vanishing_order_check(&case).unwrap();
        assert_eq!(r.computed_ord, Some(3));
        assert_eq!(r.lower_bound, 3);
        assert!(r.pass);

        // negative bound is vacuous
        let case = VanishingOrderCase {
            exponents: vec![0, 1],
            orders: vec![1, 1],
            points: vec![rat(1, 1), rat(2, 1)],
        };
        let r = vanishing_order_check(&case).unwrap();
        assert_eq!(r.lower_bound, -1);
        assert!(r.pass);

        // repeated exponents force an identically zero determinant
        let case = VanishingOrderCase {
            exponents: vec![2, 2],
            orders: vec![0, 0],
            points: vec![rat(1, 1), rat(3, 1)],
        };
        let r = vanishing_order_check(&case).unwrap();
        assert_eq!(r.computed_ord, None);
        assert!(r.pass);
    }

    #[test]
    fn det_interval_matches_exact() {
        let m = vec![
            vec![
                CertifiedComplex::exact_rational(&rat(1, 1)),
                CertifiedComplex::exact_rational(&rat(2, 1)),
            ],
            vec![
                CertifiedComplex::exact_rational(&rat(3, 1)),
                CertifiedComplex::exact_rational(&rat(4, 1)),
            ],
        ];
        let d = det_complex_interval(&m);
        assert!(d.re.contains(&rat(-2, 1)));
        assert!(d.im.contains(&rat(0, 1)));
    }
}
