//! Randomized property tests: enclosure soundness of the interval layer and
//! the exact-arithmetic identities the rest of the crate leans on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use transmeasure::binomial::{delta_eval, delta_poly, DeltaParams};
use transmeasure::numerics::{exp_rat, ln_rat, rat, sqrt_rat, CertifiedReal};
use transmeasure::poly::IntPolynomial;
use transmeasure::zeroest::LaurentBiPoly;

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-200i64..=200, 1i64..=40).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Exact rational arithmetic always lands inside the interval result,
    /// even after outward rounding of the operands.
    #[test]
    fn interval_ops_enclose_exact_values(
        a in small_rational(),
        b in small_rational(),
        c in small_rational(),
        bits in 8u32..40,
    ) {
        let ia = CertifiedReal::exact(a.clone()).round_out(bits);
        let ib = CertifiedReal::exact(b.clone()).round_out(bits);
        let ic = CertifiedReal::exact(c.clone()).round_out(bits);
        let expr = ia.mul(&ib).add(&ic.powi(3)).sub(&ia.abs()).mul(&ib.max1());
        let exact = (&a * &b + &c * &c * &c - a.abs())
            * std::cmp::max(b.clone(), BigRational::from_integer(BigInt::from(1)));
        prop_assert!(expr.contains(&exact));
    }

    /// log(exp(x)) re-encloses x; exp stays positive.
    #[test]
    fn exp_ln_roundtrip(x in (-60i64..=60, 1i64..=9).prop_map(|(n, d)| rat(n, d))) {
        let e = exp_rat(&x, 96);
        prop_assert!(e.certainly_positive());
        let back = ln_rat(&e.mid(), 128).unwrap();
        // widths: |ln(mid) - x| <= width(e)/min(e), generously padded
        let slack = CertifiedReal::centered(x.clone(), rat(1, 1 << 20));
        prop_assert!(back.overlaps(&slack));
    }

    /// sqrt(x)^2 encloses x.
    #[test]
    fn sqrt_squares_back(x in (0i64..=5000, 1i64..=50).prop_map(|(n, d)| rat(n, d))) {
        let s = sqrt_rat(&x, 80).unwrap();
        prop_assert!(s.powi(2).contains(&x));
    }

    /// The product form and the cached expansion of the binomial polynomial
    /// agree exactly at rational points.
    #[test]
    fn binomial_product_equals_expansion(
        n in 1u64..=9,
        h in 1u64..=4,
        x in small_rational(),
    ) {
        let p = DeltaParams::new(n, h).unwrap();
        prop_assert_eq!(delta_poly(&p).eval(&x), delta_eval(&x, &p));
    }

    /// The derivation is a derivation: exact Leibniz rule on random
    /// two-variable Laurent polynomials.
    #[test]
    fn derivation_satisfies_leibniz(
        terms_p in proptest::collection::vec(((0u32..4, -3i64..=3), -9i64..=9), 1..5),
        terms_q in proptest::collection::vec(((0u32..4, -3i64..=3), -9i64..=9), 1..5),
        beta_n in 1i64..=7,
        beta_d in 1i64..=3,
    ) {
        let beta = rat(beta_n, beta_d);
        let build = |terms: &[((u32, i64), i64)]| {
            let mut poly = LaurentBiPoly::zero();
            for ((i, j), c) in terms {
                poly = poly.add(&LaurentBiPoly::monomial(*i, *j, rat(*c, 1)));
            }
            poly
        };
        let p = build(&terms_p);
        let q = build(&terms_q);
        let left = p.mul(&q).delta(&beta);
        let right = p.delta(&beta).mul(&q).add(&p.mul(&q.delta(&beta)));
        prop_assert_eq!(left, right);
    }

    /// Length is invariant under sign flips and the parse/display round trip.
    #[test]
    fn polynomial_length_and_roundtrip(coeffs in proptest::collection::vec(-99i64..=99, 1..7)) {
        let p = IntPolynomial::from_i64(&coeffs);
        prop_assert_eq!(p.length(), p.neg().length());
        if !p.is_zero() {
            let reparsed = IntPolynomial::parse(&p.to_string()).unwrap();
            prop_assert_eq!(reparsed, p);
        }
    }

    /// Squarefree decomposition reassembles to the normalized input.
    #[test]
    fn squarefree_decomposition_reassembles(
        coeffs in proptest::collection::vec(-9i64..=9, 2..5),
        square in proptest::collection::vec(-4i64..=4, 2..4),
    ) {
        let a = IntPolynomial::from_i64(&coeffs);
        let b = IntPolynomial::from_i64(&square);
        if a.is_zero() || b.is_zero() || b.degree() == Some(0) {
            return Ok(());
        }
        let f = a.mul(&b).mul(&b);
        if f.degree().is_none_or(|d| d == 0) {
            return Ok(());
        }
        let mut product = IntPolynomial::constant(BigInt::from(1));
        for (factor, mult) in f.squarefree_decomposition() {
            for _ in 0..mult {
                product = product.mul(&factor);
            }
        }
        prop_assert_eq!(product.normalized(), f.normalized());
    }

    /// Exact evaluation respects the ring operations on Laurent polynomials.
    #[test]
    fn laurent_eval_is_a_homomorphism(
        terms in proptest::collection::vec(((0u32..3, -2i64..=2), -6i64..=6), 1..4),
        x in small_rational(),
        y_n in 1i64..=9,
        y_d in 1i64..=4,
    ) {
        let y = rat(y_n, y_d); // nonzero
        let mut p = LaurentBiPoly::zero();
        for ((i, j), c) in &terms {
            p = p.add(&LaurentBiPoly::monomial(*i, *j, rat(*c, 1)));
        }
        let sum = p.add(&p).eval(&x, &y).unwrap();
        let twice = p.eval(&x, &y).unwrap() * rat(2, 1);
        prop_assert_eq!(sum, twice);
        let sq = p.mul(&p).eval(&x, &y).unwrap();
        let val = p.eval(&x, &y).unwrap();
        prop_assert_eq!(sq, &val * &val);
    }
}

/// The derivative entries of the expansion vanish above the degree.
#[test]
fn derivatives_vanish_above_degree() {
    for (n, h) in [(1u64, 1u64), (4, 2), (6, 3)] {
        let p = DeltaParams::new(n, h).unwrap();
        let derivs = transmeasure::binomial::delta_derivatives(&rat(7, 3), &p, n + 3);
        for (u, d) in derivs.iter().enumerate() {
            if u as u64 > n {
                assert!(d.is_zero());
            }
        }
        assert!(
            !derivs[n as usize].is_zero(),
            "top derivative is n! times the leading coefficient"
        );
    }
}
