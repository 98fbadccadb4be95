//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Every threshold is pinned here; nothing is deferred to later calibration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use transmeasure::binomial::{lemma4_check, DeltaParams};
use transmeasure::bounds::{
    chain_check_section6, chain_check_theorem_derivations, MeasureForm, MeasureQuery, Target,
    TheoremChain,
};
use transmeasure::heights::{
    check_height_length, height_of_minpoly, liouville_bound, LiouvilleContext, Verdict,
};
use transmeasure::interdet::{
    a_entry_poly, derive_params, entry_consistency_check, toy_rank_check, vanishing_order_check,
    EntryIndex, ToyConfig, VanishingOrderCase,
};
use transmeasure::numerics::{
    exp_rat, ln2, ln_rat, parse_rational, rat, CertifiedComplex, CertifiedReal, PrecisionCeiling,
};
use transmeasure::poly::IntPolynomial;
use transmeasure::search::{enumerate_min_poly_value, verify_against_bound, SearchSpace};
use transmeasure::zeroest::{lemma2_check, Lemma2Verdict, ZeroEstimateInstance};

fn ceiling() -> PrecisionCeiling {
    PrecisionCeiling::default()
}

/// Criteria 1 and 2 share the full grid sweep: integrality of the scaled
/// derivatives and both certified size bounds, N <= 20, H <= 10, sigma <= 10,
/// |x| <= 30, zero failures.
#[test]
fn criterion_01_02_binomial_sweep() {
    use rayon::prelude::*;
    let cells: Vec<(u64, u64)> = (1..=20u64)
        .flat_map(|n| (1..=10u64).map(move |h| (n, h)))
        .collect();
    let c = ceiling();
    let failures: Vec<String> = cells
        .par_iter()
        .map(|&(n, h)| {
            let p = DeltaParams::new(n, h).unwrap();
            let mut local = Vec::new();
            for x in -30i64..=30 {
                for sigma in 0..=10u64 {
                    let rep = lemma4_check(&BigInt::from(x), &p, sigma, &c).unwrap();
                    if !rep.integrality {
                        local.push(format!("integrality N={n} H={h} x={x} sigma={sigma}"));
                    }
                    if !rep.bound_42 {
                        local.push(format!("bound_42 N={n} H={h} x={x} sigma={sigma}"));
                    }
                    if !rep.bound_43 {
                        local.push(format!("bound_43 N={n} H={h} x={x} sigma={sigma}"));
                    }
                }
            }
            local
        })
        .reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            a
        });
    assert!(failures.is_empty(), "failures: {failures:?}");
    println!("ACCEPTANCE 1 (scaled-derivative integrality sweep, 20x10x11x61 grid): PASS");
    println!("ACCEPTANCE 2 (certified size bounds on the same grid, sigma=0 vacuous case documented): PASS");
}

fn random_instance(rng: &mut StdRng, d0: u32, d1: u32, s: u32, m: u32) -> ZeroEstimateInstance {
    let beta = loop {
        let v = rat(rng.random_range(-9..=9), rng.random_range(1..=4));
        if !v.is_zero() {
            break v;
        }
    };
    let mut xis: Vec<BigRational> = Vec::new();
    while xis.len() < m as usize {
        let v = rat(rng.random_range(-20..=20), rng.random_range(1..=5));
        if !xis.contains(&v) {
            xis.push(v);
        }
    }
    let points = xis
        .into_iter()
        .map(|xi| {
            let eta = loop {
                let v = rat(rng.random_range(-9..=9), rng.random_range(1..=4));
                if !v.is_zero() {
                    break v;
                }
            };
            (xi, eta)
        })
        .collect();
    ZeroEstimateInstance {
        d0,
        d1,
        s,
        m,
        beta,
        points,
    }
}

/// Criterion 3: exact kernel dimension 0 for every parameter tuple satisfying
/// the degree condition (50 random instances each), and explicit kernel
/// witnesses for at least 5 undersized instances.
#[test]
fn criterion_03_multiplicity_estimate() {
    use rayon::prelude::*;
    let mut tuples = Vec::new();
    for d0 in 1..=5u32 {
        for d1 in 1..=5u32 {
            for s in 1..=5u32 {
                for m in 1..=5u32 {
                    if s * m > (d0 + m) * (d1 + 1) {
                        tuples.push((d0, d1, s, m));
                    }
                }
            }
        }
    }
    assert!(!tuples.is_empty());
    let counterexamples: Vec<String> = tuples
        .par_iter()
        .map(|&(d0, d1, s, m)| {
            let mut rng = StdRng::seed_from_u64(
                0x5eed_0000u64
                    ^ ((d0 as u64) << 12)
                    ^ ((d1 as u64) << 8)
                    ^ ((s as u64) << 4)
                    ^ (m as u64),
            );
            let mut local = Vec::new();
            for trial in 0..50 {
                let inst = random_instance(&mut rng, d0, d1, s, m);
                let rep = lemma2_check(&inst).unwrap();
                if rep.verdict == Lemma2Verdict::Counterexample || rep.kernel_dim != 0 {
                    local.push(format!("({d0},{d1},{s},{m}) trial {trial}"));
                }
            }
            local
        })
        .reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            a
        });
    assert!(
        counterexamples.is_empty(),
        "counterexamples: {counterexamples:?}"
    );

    // undersized instances must exhibit a verified nonzero kernel element
    let mut rng = StdRng::seed_from_u64(0xdead_beef);
    let undersized = [
        (1u32, 1u32, 1u32, 2u32),
        (2, 1, 1, 3),
        (1, 2, 1, 2),
        (2, 2, 1, 3),
        (3, 1, 1, 3),
    ];
    for (d0, d1, s, m) in undersized {
        assert!(s * m < (d0 + 1) * (d1 + 1), "not undersized");
        let inst = random_instance(&mut rng, d0, d1, s, m);
        let rep = lemma2_check(&inst).unwrap();
        assert!(rep.kernel_dim > 0);
        let (coeffs, poly) = rep.kernel_witness.expect("kernel witness");
        assert!(coeffs.iter().any(|c| !c.is_zero()));
        for (xi, eta) in &inst.points {
            for sigma in 0..inst.s {
                assert_eq!(
                    poly.delta_pow(&inst.beta, sigma).eval(xi, eta).unwrap(),
                    BigRational::zero()
                );
            }
        }
    }
    println!(
        "ACCEPTANCE 3 (multiplicity estimate: {} tuples x 50 exact-rank runs, 5 kernel exhibits): PASS",
        tuples.len()
    );
}

/// Criterion 4: closed-form heights within width 1e-30 and the height-length
/// inequality on 500 random irreducible polynomials.
#[test]
fn criterion_04_heights() {
    let c = ceiling();
    let w30 = parse_rational("1e-30").unwrap();

    let cases: Vec<(IntPolynomial, CertifiedReal)> = vec![
        (IntPolynomial::from_i64(&[1, -2]), ln2(160)),
        (IntPolynomial::from_i64(&[1, 0, 1]), CertifiedReal::zero()),
        (
            IntPolynomial::from_i64(&[1, 0, -2]),
            ln2(160).scale(&rat(1, 2)),
        ),
        (
            IntPolynomial::from_i64(&[2, -3]),
            ln_rat(&rat(3, 1), 160).unwrap(),
        ),
    ];
    for (p, closed_form) in cases {
        let h = height_of_minpoly(&p, &w30, &c).unwrap();
        assert!(h.width() <= w30, "width for {p}");
        assert!(h.overlaps(&closed_form), "closed form for {p}");
    }

    let mut rng = StdRng::seed_from_u64(41);
    let mut checked = 0;
    while checked < 500 {
        let deg = rng.random_range(1..=5usize);
        let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.random_range(-50..=50)).collect();
        if coeffs[0] == 0 {
            coeffs[0] = 1;
        }
        let p = IntPolynomial::from_i64(&coeffs);
        match check_height_length(&p, &c) {
            Ok(Verdict::Pass) => checked += 1,
            Ok(Verdict::Fail) => panic!("height-length inequality failed for {p}"),
            Ok(Verdict::Inconclusive) => panic!("inconclusive for {p}"),
            Err(transmeasure::Error::Reducible(_)) => continue,
            Err(e) => panic!("{e}"),
        }
    }
    println!("ACCEPTANCE 4 (closed-form heights at 1e-30; height-length inequality on 500 random irreducibles): PASS");
}

// -- exact quadratic-field arithmetic for the Liouville property ------------

/// a + b sqrt(m) with m squarefree, m != 0, 1; m < 0 gives a complex quadratic.
#[derive(Clone, Debug, PartialEq)]
struct QuadExt {
    a: BigRational,
    b: BigRational,
    m: i64,
}

impl QuadExt {
    fn rational(a: BigRational, m: i64) -> Self {
        QuadExt {
            a,
            b: BigRational::zero(),
            m,
        }
    }

    fn add(&self, o: &Self) -> Self {
        QuadExt {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            m: self.m,
        }
    }

    fn mul(&self, o: &Self) -> Self {
        let m = rat(self.m, 1);
        QuadExt {
            a: &self.a * &o.a + &self.b * &o.b * &m,
            b: &self.a * &o.b + &self.b * &o.a,
            m: self.m,
        }
    }

    fn scale_int(&self, c: i64) -> Self {
        QuadExt {
            a: &self.a * rat(c, 1),
            b: &self.b * rat(c, 1),
            m: self.m,
        }
    }

    fn pow(&self, k: u32) -> Self {
        let mut acc = QuadExt::rational(BigRational::one(), self.m);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// |x| >= r for rational r >= 0, decided exactly.
    fn abs_ge(&self, r: &BigRational) -> bool {
        if self.m < 0 {
            // modulus squared is rational
            let norm = &self.a * &self.a + &self.b * &self.b * rat(-self.m, 1);
            return norm >= r * r;
        }
        // real case: x >= r or -x >= r
        let ge_zero = |u: &BigRational, v: &BigRational| -> bool {
            // sign of u + v sqrt(m) >= 0
            if v.is_zero() {
                return !u.is_negative();
            }
            if u.is_zero() {
                return v.is_positive();
            }
            match (u.is_positive(), v.is_positive()) {
                (true, true) => true,
                (false, false) => false,
                (false, true) => v * v * rat(self.m, 1) >= u * u,
                (true, false) => u * u >= v * v * rat(self.m, 1),
            }
        };
        let shifted_pos = QuadExt {
            a: &self.a - r,
            b: self.b.clone(),
            m: self.m,
        };
        let shifted_neg = QuadExt {
            a: -&self.a - r,
            b: -&self.b.clone(),
            m: self.m,
        };
        ge_zero(&shifted_pos.a, &shifted_pos.b) || ge_zero(&shifted_neg.a, &shifted_neg.b)
    }

    /// Minimal polynomial over the integers (degree 1 when b = 0).
    fn minpoly(&self) -> IntPolynomial {
        if self.b.is_zero() {
            return IntPolynomial::from_coeffs(vec![
                -self.a.numer().clone(),
                self.a.denom().clone(),
            ]);
        }
        // x^2 - 2a x + (a^2 - b^2 m), cleared of denominators
        let two_a = &self.a * rat(2, 1);
        let norm = &self.a * &self.a - &self.b * &self.b * rat(self.m, 1);
        let lcm = two_a.denom().lcm(norm.denom());
        let scale = BigRational::from_integer(lcm);
        let c1 = (&two_a * &scale).to_integer();
        let c0 = (&norm * &scale).to_integer();
        IntPolynomial::from_coeffs(vec![c0, -c1, scale.to_integer()]).normalized()
    }
}

/// sparse integer polynomial in up to 2 variables: (exponents, coefficient)
type MultiPoly = Vec<(Vec<u32>, i64)>;

fn eval_multi(f: &MultiPoly, points: &[QuadExt]) -> QuadExt {
    let m = points[0].m;
    let mut acc = QuadExt::rational(BigRational::zero(), m);
    for (exps, c) in f {
        let mut term = QuadExt::rational(BigRational::one(), m);
        for (x, &e) in points.iter().zip(exps.iter()) {
            term = term.mul(&x.pow(e));
        }
        acc = acc.add(&term.scale_int(*c));
    }
    acc
}

fn multi_length(f: &MultiPoly) -> BigInt {
    f.iter().map(|(_, c)| BigInt::from(c.abs())).sum()
}

fn multi_degrees(f: &MultiPoly, n: usize) -> Vec<u64> {
    (0..n)
        .map(|i| f.iter().map(|(e, _)| e[i] as u64).max().unwrap_or(0))
        .collect()
}

/// Criterion 5: 200 random nonvanishing (f, point) pairs over Q, real
/// quadratic fields, and the Gaussian field satisfy the exact comparison
/// |f(point)| >= exp(upper end of the certified bound).
#[test]
fn criterion_05_liouville_property() {
    let c = ceiling();
    let w = parse_rational("1e-25").unwrap();
    let mut rng = StdRng::seed_from_u64(1729);
    let mut passes = 0;
    let mut attempts = 0;
    while passes < 200 {
        attempts += 1;
        assert!(attempts < 2000, "too many vanishing samples");
        let m = [2i64, 3, 5, -1, 0][rng.random_range(0..5usize)]; // 0 marks plain Q
        let n_vars = rng.random_range(1..=2usize);
        // random sparse polynomial, degree <= 3 per variable
        let n_terms = rng.random_range(1..=5usize);
        let f: MultiPoly = (0..n_terms)
            .map(|_| {
                (
                    (0..n_vars)
                        .map(|_| rng.random_range(0..=3u32))
                        .collect::<Vec<_>>(),
                    rng.random_range(-9..=9i64),
                )
            })
            .filter(|(_, c)| *c != 0)
            .collect();
        if f.is_empty() {
            continue;
        }
        let field_m = if m == 0 { 2 } else { m };
        let points: Vec<QuadExt> = (0..n_vars)
            .map(|_| {
                let a = rat(rng.random_range(-6..=6), rng.random_range(1..=3));
                let b = if m == 0 {
                    BigRational::zero()
                } else {
                    rat(rng.random_range(-6..=6), rng.random_range(1..=3))
                };
                QuadExt { a, b, m: field_m }
            })
            .collect();
        let value = eval_multi(&f, &points);
        if value.is_zero() {
            continue;
        }
        // heights of the points and the field data
        let quadratic = points.iter().any(|p| !p.b.is_zero());
        let (field_degree, is_real) = if quadratic { (2, m > 0) } else { (1, true) };
        let heights: Vec<CertifiedReal> = points
            .iter()
            .map(|p| {
                let mp = p.minpoly();
                height_of_minpoly(&mp, &w, &c).unwrap()
            })
            .collect();
        let ctx = LiouvilleContext {
            field_degree,
            is_real_field: is_real,
        };
        let degrees = multi_degrees(&f, n_vars);
        let length = multi_length(&f);
        let bound = liouville_bound(&length, &degrees, &heights, &ctx, 160).unwrap();
        // threshold: a rational certainly >= exp(true bound)
        let threshold = exp_rat(bound.hi(), 160).hi().clone();
        assert!(
            value.abs_ge(&threshold),
            "Liouville violation: field m={m}, f={f:?}, points={points:?}"
        );
        passes += 1;
    }
    println!("ACCEPTANCE 5 (Liouville lower bound on 200 exact nonvanishing pairs): PASS");
}

/// Criterion 6: every displayed inequality of the four derivations across the
/// degree sweep, and the determinant-comparison chain on 12 random valid
/// parameter packs.
#[test]
fn criterion_06_chain_verification() {
    let c = ceiling();
    let mut degrees: Vec<u32> = (1..=10).collect();
    degrees.extend([100, 10_000]);
    for which in [
        TheoremChain::Thm2,
        TheoremChain::Thm3,
        TheoremChain::Thm4,
        TheoremChain::Thm5,
    ] {
        for &d in &degrees {
            let report = chain_check_theorem_derivations(which, d, &c).unwrap();
            assert!(
                report.all_pass(),
                "{which:?} at d={d}: {:?}",
                report
                    .checks
                    .iter()
                    .filter(|ck| !ck.pass)
                    .map(|ck| &ck.label)
                    .collect::<Vec<_>>()
            );
        }
    }
    // the genuinely tight line: 1 + 2 e^2 pi + 12 <= 59.5 with margin < 0.08
    let thm2 = chain_check_theorem_derivations(TheoremChain::Thm2, 1, &c).unwrap();
    let tight = thm2
        .checks
        .iter()
        .find(|ck| ck.label.contains("59.5"))
        .unwrap();
    assert!(tight.pass);
    let margin = tight.rhs.sub(&tight.lhs);
    assert!(margin.hi() < &rat(8, 100) && margin.lo() > &rat(0, 1));

    // 12 random valid parameter packs: D in 1..=6, E in [e, e^4], |theta| in [1/4, 8]
    let mut rng = StdRng::seed_from_u64(271828);
    let mut packs = 0;
    while packs < 12 {
        let d = rng.random_range(1..=6u32);
        let e_param = CertifiedReal::exact(rat(rng.random_range(28..=540), 10)); // [2.8, 54]
        let (re, im) = loop {
            let re = rat(rng.random_range(-60..=60), 10);
            let im = rat(rng.random_range(-60..=60), 10);
            let norm = &re * &re + &im * &im;
            if norm >= rat(1, 16) && norm <= rat(64, 1) {
                break (re, im);
            }
        };
        let theta = CertifiedComplex::new(CertifiedReal::exact(re), CertifiedReal::exact(im));
        let log_a = CertifiedReal::exact(rat(rng.random_range(1..=3i64), 1) + rat(1, d as i64));
        let log_b = CertifiedReal::exact(rat(rng.random_range(0..=3i64), 1));
        let params = derive_params(d, &log_a, &log_b, &e_param, &theta, &c).unwrap();
        let report = chain_check_section6(&params, &c).unwrap();
        assert!(
            report.all_pass(),
            "pack D={d}: {:?}",
            report
                .checks
                .iter()
                .filter(|ck| !ck.pass)
                .map(|ck| &ck.label)
                .collect::<Vec<_>>()
        );
        packs += 1;
    }

    // the same verification through the command-line surface
    let run = |args: &[&str]| {
        let mut argv = vec!["transmeasure"];
        argv.extend_from_slice(args);
        transmeasure::cli::dispatch(argv)
    };
    for theorem in ["thm2", "thm3", "thm4", "thm5"] {
        assert_eq!(
            run(&["chain-verify", "--theorem", theorem, "--d", "1"]),
            0,
            "{theorem}"
        );
    }
    assert_eq!(
        run(&["chain-verify", "--section", "6", "--preset", "thm2"]),
        0
    );

    println!("ACCEPTANCE 6 (derivation chains over 12 degrees x 4 derivations; determinant chain on 12 random packs; chain-verify CLI): PASS");
}

/// Criterion 7: the toy witness at T=1, T1=1, S=2, S1=2, H=2, alpha=2, beta=1.
#[test]
fn criterion_07_interpolation_toy_witness() {
    let cfg = ToyConfig::new(2, 2, 1, 1, 2, rat(2, 1), rat(1, 1));
    // entry integrality for every entry of the 9 x 6 matrix
    for sigma in 0..=2u64 {
        for s in 0..=2i64 {
            for tau in 0..=1u64 {
                for t in -1i64..=1 {
                    let idx = EntryIndex { tau, t, sigma, s };
                    let poly = a_entry_poly(&idx, 2).unwrap();
                    assert!(poly.has_integer_coeffs());
                }
            }
        }
    }
    let report = toy_rank_check(&cfg).unwrap();
    assert_eq!(report.l, 6);
    assert_eq!((report.rows, report.cols), (9, 6));
    assert_eq!(report.rank, 6);
    let minor = report.minor.expect("nonzero minor witness");
    assert!(!minor.is_zero());
    assert_eq!(report.selected_rows.len(), 6);
    println!(
        "ACCEPTANCE 7 (toy interpolation witness: rank 6 of the 9x6 matrix, nonzero minor {}): PASS",
        minor
    );
}

/// Criterion 8: the polynomial form evaluated at (theta, e^theta) lies inside
/// d_sigma times the analytic entry, for theta in {1, log 2, 1/2} across a
/// 100-index random sample.
#[test]
fn criterion_08_entry_consistency() {
    let mut rng = StdRng::seed_from_u64(6174);
    let bits = 128;
    let thetas: Vec<(&str, CertifiedComplex, Option<BigRational>)> = vec![
        ("1", CertifiedComplex::exact_rational(&rat(1, 1)), None),
        (
            "log2",
            CertifiedComplex::from_real(ln2(bits + 96)),
            Some(rat(2, 1)),
        ),
        ("1/2", CertifiedComplex::exact_rational(&rat(1, 2)), None),
    ];
    let mut sampled = 0;
    while sampled < 100 {
        let idx = EntryIndex {
            tau: rng.random_range(0..=4u64),
            t: rng.random_range(-3..=3i64),
            sigma: rng.random_range(0..=4u64),
            s: rng.random_range(-4..=4i64),
        };
        let h = rng.random_range(1..=3u64);
        for (name, theta, exp_theta) in &thetas {
            let verdict =
                entry_consistency_check(&idx, h, theta, exp_theta.as_ref(), bits).unwrap();
            assert!(
                verdict.overlaps,
                "overlap failed at {idx:?} h={h} theta={name}"
            );
            assert!(
                verdict.contained,
                "containment failed at {idx:?} h={h} theta={name}"
            );
        }
        sampled += 1;
    }
    println!(
        "ACCEPTANCE 8 (dual-route entry consistency over 100 random indices x 3 thetas): PASS"
    );
}

/// Criterion 9: the vanishing-order claim on 25 randomized cases.
#[test]
fn criterion_09_vanishing_order() {
    let mut rng = StdRng::seed_from_u64(355);
    for case_no in 0..25 {
        let n = rng.random_range(2..=6usize);
        let mut exps: Vec<u64> = Vec::new();
        while exps.len() < n {
            let e = rng.random_range(0..=12u64);
            if !exps.contains(&e) {
                exps.push(e);
            }
        }
        let orders: Vec<u64> = (0..n).map(|_| rng.random_range(0..=4u64)).collect();
        let points: Vec<BigRational> = (0..n)
            .map(|_| loop {
                let v = rat(rng.random_range(-8..=8), rng.random_range(1..=3));
                if !v.is_zero() {
                    break v;
                }
            })
            .collect();
        let case = VanishingOrderCase {
            exponents: exps,
            orders,
            points,
        };
        let rep = vanishing_order_check(&case).unwrap();
        assert!(rep.pass, "case {case_no}: {case:?} -> {rep:?}");
    }
    println!("ACCEPTANCE 9 (vanishing-order claim on 25 randomized symbolic determinants): PASS");
}

/// Criterion 10: the exhaustive minima against the polynomial-form bounds for
/// every (target, d <= 2, 3 <= L <= 8), plus the three desk values at
/// |p| + |q| <= 10 certified to 1e-6.
#[test]
fn criterion_10_empirical_bound_sanity() {
    let c = ceiling();
    let w6 = parse_rational("1e-6").unwrap();
    for target in [Target::Pi, Target::Log2, Target::E] {
        for d in 1..=2u32 {
            for l in 3..=8u32 {
                let space = SearchSpace::new(target, d, l);
                let out = enumerate_min_poly_value(&space, &w6, &c).unwrap();
                let q = MeasureQuery::new(
                    target,
                    MeasureForm::Polynomial,
                    d,
                    BigRational::from_integer(BigInt::from(l)),
                )
                .unwrap();
                let cmp = verify_against_bound(&out.value, &q, 160).unwrap();
                assert!(cmp.pass, "{target:?} d={d} L={l}");
            }
        }
    }

    // desk numbers at d = 1, L = 10
    let desk = [
        (Target::Pi, "1,-3", "0.141592653589793"),
        (Target::Log2, "3,-2", "0.079441541679836"),
        (Target::E, "1,-3", "0.281718171540955"),
    ];
    for (target, witness, value) in desk {
        let out = enumerate_min_poly_value(&SearchSpace::new(target, 1, 10), &w6, &c).unwrap();
        assert_eq!(out.best.to_string(), witness);
        assert!(out.value.width() <= w6);
        let window = CertifiedReal::centered(parse_rational(value).unwrap(), rat(1, 1_000_000_000));
        assert!(out.value.overlaps(&window), "{target:?}");
        let q = MeasureQuery::new(target, MeasureForm::Polynomial, 1, rat(10, 1)).unwrap();
        let cmp = verify_against_bound(&out.value, &q, 160).unwrap();
        assert!(cmp.pass && cmp.margin.certainly_positive());
    }
    println!("ACCEPTANCE 10 (exhaustive minima vs bounds on 36 cells; desk witnesses at L=10 certified to 1e-6): PASS");
}

/// Criterion 11: the d = 2, L = 8 search returns identical witnesses at
/// 1, 4, and 8 workers.
#[test]
fn criterion_11_determinism() {
    let c = ceiling();
    let w6 = parse_rational("1e-6").unwrap();
    for target in [Target::Pi, Target::Log2, Target::E] {
        let mut outcomes = Vec::new();
        for workers in [1usize, 4, 8] {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .unwrap();
            let out = pool.install(|| {
                enumerate_min_poly_value(&SearchSpace::new(target, 2, 8), &w6, &c).unwrap()
            });
            outcomes.push((
                out.best.to_string(),
                out.value.lo().clone(),
                out.value.hi().clone(),
            ));
        }
        assert_eq!(outcomes[0], outcomes[1], "{target:?} 1 vs 4 workers");
        assert_eq!(outcomes[1], outcomes[2], "{target:?} 4 vs 8 workers");
    }
    println!(
        "ACCEPTANCE 11 (identical witnesses at 1, 4, 8 workers for the d=2, L=8 searches): PASS"
    );
}
