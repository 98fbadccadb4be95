//! Certified complex root enclosures for integer polynomials.
//!
//! Strategy: exact squarefree decomposition first, floating-point
//! Aberth-Ehrlich iteration to seed one approximation per distinct root, then
//! exact rational Newton polishing and a Krawczyk contraction test that proves
//! each box contains exactly one root. Disjointness and the degree count are
//! checked exactly, so a wrong float seed can only cost retries, never a wrong
//! answer.

use super::complex::{CertifiedComplex, QComplex};
use super::consts::PrecisionCeiling;
use super::interval::{dyadic_ceil, dyadic_floor, CertifiedReal};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// A complex box certified to contain exactly `multiplicity` roots of the
/// source polynomial (counted with multiplicity). Boxes returned together are
/// pairwise disjoint.
#[derive(Clone, Debug)]
pub struct RootEnclosure {
    pub root: CertifiedComplex,
    pub multiplicity: u32,
}

/// Enclosures of all roots of `p`, each box with max-side diameter at most
/// `width`, pairwise disjoint, multiplicities summing to deg(p).
pub fn root_enclosures(
    p: &IntPolynomial,
    width: &BigRational,
    ceiling: &PrecisionCeiling,
) -> Result<Vec<RootEnclosure>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(vec![]);
    }
    let decomp = p.squarefree_decomposition();
    let mut all: Vec<RootEnclosure> = Vec::new();
    for (factor, mult) in &decomp {
        for root in certified_roots_squarefree(factor, width, ceiling)? {
            all.push(RootEnclosure {
                root,
                multiplicity: *mult,
            });
        }
    }
    // roots of coprime factors are distinct; shrink until the boxes say so
    let mut target = width.clone();
    loop {
        let mut overlap = None;
        'outer: for i in 0..all.len() {
            for j in i + 1..all.len() {
                if all[i].root.overlaps(&all[j].root) {
                    overlap = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = overlap else { break };
        target = &target / BigRational::from_integer(BigInt::from(16));
        let fi = factor_of(&decomp, &all[i]);
        let fj = factor_of(&decomp, &all[j]);
        all[i].root = tighten_box(&fi, &all[i].root, &target, ceiling)?;
        all[j].root = tighten_box(&fj, &all[j].root, &target, ceiling)?;
    }
    debug_assert_eq!(
        all.iter().map(|r| r.multiplicity as usize).sum::<usize>(),
        p.degree().unwrap()
    );
    Ok(all)
}

fn factor_of(decomp: &[(IntPolynomial, u32)], enc: &RootEnclosure) -> IntPolynomial {
    decomp
        .iter()
        .find(|(_, m)| *m == enc.multiplicity)
        .map(|(f, _)| f.clone())
        .expect("enclosure factor")
}

/// All roots of a squarefree polynomial as certified disjoint boxes.
pub fn certified_roots_squarefree(
    f: &IntPolynomial,
    width: &BigRational,
    ceiling: &PrecisionCeiling,
) -> Result<Vec<CertifiedComplex>> {
    let d = f.degree().unwrap_or(0);
    if d == 0 {
        return Ok(vec![]);
    }
    if d == 1 {
        // exact rational root -a0/a1
        let root = BigRational::new(-f.coeff(0), f.coeff(1));
        return Ok(vec![CertifiedComplex::exact_rational(&root)]);
    }
    let fp = f.derivative();
    let mut attempt: u32 = 0;
    loop {
        let seeds = aberth_seeds(f, attempt);
        let mut boxes = Vec::with_capacity(d);
        let mut ok = true;
        for seed in &seeds {
            match certify_root(f, &fp, seed, width, ceiling) {
                Ok(b) => boxes.push(b),
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            // disjointness among this factor's roots
            if let Some(boxes) = make_disjoint(f, &fp, boxes, width, ceiling)? {
                if boxes.len() == d {
                    return Ok(boxes);
                }
            }
        }
        attempt += 1;
        if attempt > 4 {
            return Err(Error::InconclusivePrecision {
                context: format!("root isolation for {f}"),
                max_bits: ceiling.max_bits,
            });
        }
    }
}

fn make_disjoint(
    f: &IntPolynomial,
    fp: &IntPolynomial,
    mut boxes: Vec<CertifiedComplex>,
    width: &BigRational,
    ceiling: &PrecisionCeiling,
) -> Result<Option<Vec<CertifiedComplex>>> {
    let mut target = width.clone();
    for _round in 0..12 {
        let mut overlap = None;
        'outer: for i in 0..boxes.len() {
            for j in i + 1..boxes.len() {
                if boxes[i].overlaps(&boxes[j]) {
                    overlap = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = overlap else {
            return Ok(Some(boxes));
        };
        target = &target / BigRational::from_integer(BigInt::from(16));
        for k in [i, j] {
            boxes[k] = match tighten_box_inner(f, fp, &boxes[k], &target, ceiling) {
                Ok(b) => b,
                Err(_) => return Ok(None), // probably duplicate seeds; retry Aberth
            };
        }
    }
    Ok(None)
}

/// Shrink an already-certified box below `width` by Krawczyk contraction.
pub fn tighten_box(
    f: &IntPolynomial,
    boxed: &CertifiedComplex,
    width: &BigRational,
    ceiling: &PrecisionCeiling,
) -> Result<CertifiedComplex> {
    tighten_box_inner(f, &f.derivative(), boxed, width, ceiling)
}

fn tighten_box_inner(
    f: &IntPolynomial,
    fp: &IntPolynomial,
    boxed: &CertifiedComplex,
    width: &BigRational,
    ceiling: &PrecisionCeiling,
) -> Result<CertifiedComplex> {
    if &boxed.width() <= width {
        return Ok(boxed.clone());
    }
    let seed = boxed.mid();
    certify_root_near(f, fp, &seed, Some(boxed), width, ceiling)
}

fn certify_root(
    f: &IntPolynomial,
    fp: &IntPolynomial,
    seed: &QComplex,
    width: &BigRational,
    ceiling: &PrecisionCeiling,
) -> Result<CertifiedComplex> {
    certify_root_near(f, fp, seed, None, width, ceiling)
}

/// Newton-polish a seed and certify a unique root near it. When `must_stay`
/// is given, the result must remain inside that box (used for tightening).
fn certify_root_near(
    f: &IntPolynomial,
    fp: &IntPolynomial,
    seed: &QComplex,
    must_stay: Option<&CertifiedComplex>,
    width: &BigRational,
    ceiling: &PrecisionCeiling,
) -> Result<CertifiedComplex> {
    let width_bits = super::consts::bits_for_width(width) + 8;
    ceiling.escalate(
        width_bits.max(64),
        &format!("certify root of {f}"),
        |bits| {
            let z = newton_polish(f, fp, seed, bits);
            // initial radius: a few ulps above the last Newton step size
            let mut radius = BigRational::new(BigInt::one(), BigInt::one() << (bits / 2));
            for _ in 0..6 {
                let boxed = box_around(&z, &radius, bits);
                if let Some(mut k) = krawczyk_step(f, fp, &boxed) {
                    // contract until the width target is met
                    for _ in 0..64 {
                        if &k.width() <= width {
                            if let Some(outer) = must_stay {
                                if !outer.contains_box(&k) {
                                    return None;
                                }
                            }
                            return Some(k);
                        }
                        let m = k.mid();
                        let zz = newton_polish_from(f, fp, &m, bits, 2);
                        let r = std::cmp::max(
                            k.width() / BigRational::from_integer(BigInt::from(8)),
                            BigRational::new(
                                BigInt::one(),
                                BigInt::one() << bits.saturating_sub(4),
                            ),
                        );
                        let candidate = box_around(&zz, &r, bits);
                        match krawczyk_step(f, fp, &candidate) {
                            Some(next) => k = next,
                            None => break,
                        }
                    }
                    return None;
                }
                radius = &radius * BigRational::from_integer(BigInt::from(4));
            }
            None
        },
    )
}

fn box_around(z: &QComplex, radius: &BigRational, bits: u32) -> CertifiedComplex {
    let re = CertifiedReal::new(
        dyadic_floor(&(&z.re - radius), bits + 8),
        dyadic_ceil(&(&z.re + radius), bits + 8),
    );
    let im = CertifiedReal::new(
        dyadic_floor(&(&z.im - radius), bits + 8),
        dyadic_ceil(&(&z.im + radius), bits + 8),
    );
    CertifiedComplex::new(re, im)
}

/// One Krawczyk test: K = m - c f(m) + (1 - c f'(Z)) (Z - m). If K lies in the
/// interior of Z there is exactly one root in Z, and it lies in K.
fn krawczyk_step(
    f: &IntPolynomial,
    fp: &IntPolynomial,
    z_box: &CertifiedComplex,
) -> Option<CertifiedComplex> {
    let m = z_box.mid();
    let fm = f.eval_qcomplex(&m);
    let fpm = fp.eval_qcomplex(&m);
    let c = fpm.recip()?;
    let g = fp.eval_complex_interval(z_box);
    let one = CertifiedComplex::one();
    let contraction = one.sub(&CertifiedComplex::exact(&c).mul(&g));
    let center = CertifiedComplex::exact(&m.sub(&c.mul(&fm)));
    let spread = z_box.sub(&CertifiedComplex::exact(&m));
    let k = center.add(&contraction.mul(&spread));
    if z_box.contains_box_interior(&k) {
        k.intersect(z_box)
    } else {
        None
    }
}

fn newton_polish(f: &IntPolynomial, fp: &IntPolynomial, seed: &QComplex, bits: u32) -> QComplex {
    newton_polish_from(f, fp, seed, bits, 40)
}

fn newton_polish_from(
    f: &IntPolynomial,
    fp: &IntPolynomial,
    seed: &QComplex,
    bits: u32,
    max_steps: u32,
) -> QComplex {
    let mut z = round_qc(seed, bits + 16);
    let tol = BigRational::new(BigInt::one(), BigInt::one() << (bits + 4));
    for _ in 0..max_steps {
        let fz = f.eval_qcomplex(&z);
        if fz.is_zero() {
            return z;
        }
        let fpz = fp.eval_qcomplex(&z);
        let Some(step) = fz.div(&fpz) else { return z };
        let next = round_qc(&z.sub(&step), bits + 16);
        let moved = step.norm_sq();
        z = next;
        if moved < &tol * &tol {
            break;
        }
    }
    z
}

fn round_qc(z: &QComplex, bits: u32) -> QComplex {
    QComplex::new(dyadic_floor(&z.re, bits), dyadic_floor(&z.im, bits))
}

// ---------------------------------------------------------------------------
// float Aberth-Ehrlich seeds
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug)]
struct C64 {
    re: f64,
    im: f64,
}

impl C64 {
    fn new(re: f64, im: f64) -> Self {
        C64 { re, im }
    }
    fn add(self, o: C64) -> C64 {
        C64::new(self.re + o.re, self.im + o.im)
    }
    fn sub(self, o: C64) -> C64 {
        C64::new(self.re - o.re, self.im - o.im)
    }
    fn mul(self, o: C64) -> C64 {
        C64::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
    fn div(self, o: C64) -> C64 {
        let d = o.re * o.re + o.im * o.im;
        C64::new(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )
    }
    fn norm(self) -> f64 {
        self.re.hypot(self.im)
    }
}

fn coeffs_f64(f: &IntPolynomial) -> Vec<f64> {
    let max_bits = f.coeffs().iter().map(|c| c.bits()).max().unwrap_or(0);
    let shift = max_bits.saturating_sub(512) as u32;
    f.coeffs()
        .iter()
        .map(|c| {
            let scaled: BigInt = c >> shift;
            scaled.to_f64().unwrap_or(0.0)
        })
        .collect()
}

fn eval_f64(coeffs: &[f64], z: C64) -> (C64, C64) {
    let mut v = C64::new(0.0, 0.0);
    let mut dv = C64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dv = dv.mul(z).add(v);
        v = v.mul(z).add(C64::new(*c, 0.0));
    }
    (v, dv)
}

fn aberth_seeds(f: &IntPolynomial, attempt: u32) -> Vec<QComplex> {
    let coeffs = coeffs_f64(f);
    let d = coeffs.len() - 1;
    let r0 = {
        let lead = coeffs[d].abs().max(f64::MIN_POSITIVE);
        let tail = coeffs[0].abs().max(f64::MIN_POSITIVE);
        (tail / lead).powf(1.0 / d as f64).clamp(1e-3, 1e6)
    };
    let phase = 0.37 + 0.61 * attempt as f64;
    let mut zs: Vec<C64> = (0..d)
        .map(|k| {
            let ang = 2.0 * std::f64::consts::PI * (k as f64 + phase) / d as f64;
            let r = r0 * (1.0 + 0.08 * ((k + attempt as usize) % 3) as f64);
            C64::new(r * ang.cos(), r * ang.sin())
        })
        .collect();
    for _iter in 0..400 {
        let mut max_step = 0.0f64;
        for k in 0..d {
            let z = zs[k];
            let (v, dv) = eval_f64(&coeffs, z);
            if v.norm() == 0.0 {
                continue;
            }
            let newton = if dv.norm() == 0.0 {
                C64::new(1e-8, 1e-8)
            } else {
                v.div(dv)
            };
            let mut sum = C64::new(0.0, 0.0);
            for (j, other) in zs.iter().enumerate() {
                if j != k {
                    let diff = z.sub(*other);
                    if diff.norm() > 0.0 {
                        sum = sum.add(C64::new(1.0, 0.0).div(diff));
                    }
                }
            }
            let denom = C64::new(1.0, 0.0).sub(newton.mul(sum));
            let step = if denom.norm() < 1e-300 {
                newton
            } else {
                newton.div(denom)
            };
            zs[k] = z.sub(step);
            max_step = max_step.max(step.norm() / (1.0 + zs[k].norm()));
        }
        if max_step < 1e-13 {
            break;
        }
    }
    zs.iter()
        .map(|z| QComplex::new(f64_to_rational(z.re), f64_to_rational(z.im)))
        .collect()
}

fn f64_to_rational(x: f64) -> BigRational {
    if !x.is_finite() {
        return BigRational::zero();
    }
    BigRational::from_float(x).unwrap_or_else(BigRational::zero)
}

// ---------------------------------------------------------------------------
// irreducibility over Q, certified through root enclosures
// ---------------------------------------------------------------------------

/// Exact irreducibility over the rationals (for the primitive part).
///
/// Small-prime reduction proves most random inputs irreducible immediately;
/// otherwise every proper subset of roots is tested for forming an integer
/// factor, with interval coefficients refined until each subset either
/// excludes all integer candidates or yields a candidate that is checked by
/// exact division.
pub fn is_irreducible(p: &IntPolynomial, ceiling: &PrecisionCeiling) -> Result<bool> {
    let f = p.normalized();
    let Some(d) = f.degree() else {
        return Ok(false);
    };
    if d == 0 {
        return Ok(false);
    }
    if d == 1 {
        return Ok(true);
    }
    if !f.is_squarefree() {
        return Ok(false);
    }
    for prime in [2u64, 3, 5, 7] {
        if f.irreducible_mod_p(prime) == Some(true) {
            return Ok(true);
        }
    }
    // certified root-subset factor search
    let lead = f.leading().unwrap().clone();
    let mut width = BigRational::new(BigInt::one(), BigInt::from(1u64 << 24));
    loop {
        let roots = certified_roots_squarefree(&f, &width, ceiling)?;
        match factor_from_root_subsets(&f, &lead, &roots) {
            SubsetOutcome::Irreducible => return Ok(true),
            SubsetOutcome::Factor(_g) => return Ok(false),
            SubsetOutcome::NeedsRefinement => {
                let bits_now = super::consts::bits_for_width(&width);
                if bits_now >= ceiling.max_bits {
                    return Err(Error::InconclusivePrecision {
                        context: format!("irreducibility of {f}"),
                        max_bits: ceiling.max_bits,
                    });
                }
                width = &width * &width; // double the bit budget
            }
        }
    }
}

enum SubsetOutcome {
    Irreducible,
    Factor(IntPolynomial),
    NeedsRefinement,
}

fn factor_from_root_subsets(
    f: &IntPolynomial,
    lead: &BigInt,
    roots: &[CertifiedComplex],
) -> SubsetOutcome {
    let d = roots.len();
    let mut needs_refinement = false;
    for size in 1..=d / 2 {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            match try_subset(f, lead, roots, &combo) {
                SubsetTry::Factor(g) => return SubsetOutcome::Factor(g),
                SubsetTry::Ambiguous => needs_refinement = true,
                SubsetTry::NotAFactor => {}
            }
            // next combination
            let mut i = size;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if combo[i] != i + d - size {
                    combo[i] += 1;
                    for j in i + 1..size {
                        combo[j] = combo[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    combo.clear();
                    break;
                }
            }
            if combo.is_empty() || combo[size - 1] >= d {
                break;
            }
        }
    }
    if needs_refinement {
        SubsetOutcome::NeedsRefinement
    } else {
        SubsetOutcome::Irreducible
    }
}

enum SubsetTry {
    Factor(IntPolynomial),
    NotAFactor,
    Ambiguous,
}

fn try_subset(
    f: &IntPolynomial,
    lead: &BigInt,
    roots: &[CertifiedComplex],
    combo: &[usize],
) -> SubsetTry {
    // expand lead * prod (x - alpha_i) with interval coefficients
    let mut coeffs: Vec<CertifiedComplex> = vec![CertifiedComplex::from_real(
        CertifiedReal::from_bigint(lead),
    )];
    for &idx in combo {
        let alpha = &roots[idx];
        let mut next = vec![CertifiedComplex::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].sub(&c.mul(alpha));
        }
        coeffs = next;
    }
    let mut ints: Vec<BigInt> = Vec::with_capacity(coeffs.len());
    for c in &coeffs {
        if !c.im.contains_zero() {
            return SubsetTry::NotAFactor;
        }
        let lo = c.re.lo().ceil().to_integer();
        let hi = c.re.hi().floor().to_integer();
        if lo > hi {
            return SubsetTry::NotAFactor;
        }
        if lo != hi {
            return SubsetTry::Ambiguous;
        }
        ints.push(lo);
    }
    let candidate = IntPolynomial::from_coeffs(ints).normalized();
    if candidate.degree().map_or(true, |deg| deg == 0) {
        return SubsetTry::NotAFactor;
    }
    if f.exact_div(&candidate).is_some() {
        SubsetTry::Factor(candidate)
    } else {
        SubsetTry::NotAFactor
    }
}
