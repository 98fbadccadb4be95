//! The Liouville lower bound: certified bound values against exact
//! evaluations at rational and quadratic points.
//!
//! Run with: cargo run --example liouville

use num_bigint::BigInt;
use transmeasure::heights::{
    height, height_of_minpoly, liouville_bound, AlgebraicNumber, LiouvilleContext,
};
use transmeasure::numerics::{exp_rat, parse_rational, rat, PrecisionCeiling};
use transmeasure::poly::IntPolynomial;

fn main() -> transmeasure::Result<()> {
    let ceiling = PrecisionCeiling::from_env();
    let width = parse_rational("1e-25")?;

    // f = x^2 - 2 at 3/2 over the rationals: |f(3/2)| = 1/4
    let h = height(&AlgebraicNumber::rational(&rat(3, 2)), &width, &ceiling)?;
    let ctx = LiouvilleContext {
        field_degree: 1,
        is_real_field: true,
    };
    let bound = liouville_bound(&BigInt::from(3), &[2], &[h], &ctx, 160)?;
    println!("f = x^2 - 2 at 3/2:");
    println!("  log-scale bound: {bound}");
    println!("  exp(bound) hi    = {}", exp_rat(bound.hi(), 160).hi());
    println!("  exact |f(3/2)|   = 1/4  (>= the bound, as the lemma promises)");

    // same f at sqrt(3) in the real quadratic field: |f(sqrt 3)| = 1
    let h = height_of_minpoly(&IntPolynomial::from_i64(&[1, 0, -3]), &width, &ceiling)?;
    let ctx = LiouvilleContext {
        field_degree: 2,
        is_real_field: true,
    };
    let bound = liouville_bound(&BigInt::from(3), &[2], &[h], &ctx, 160)?;
    println!("\nf = x^2 - 2 at sqrt(3), field degree 2:");
    println!("  log-scale bound: {bound}");
    println!("  exact |f(sqrt 3)| = 1");

    // a degenerate no-variable case: f = 7
    let ctx = LiouvilleContext {
        field_degree: 4,
        is_real_field: false,
    };
    let bound = liouville_bound(&BigInt::from(7), &[], &[], &ctx, 96)?;
    println!("\nconstant f = 7 over a degree-4 complex field (D' = 2):");
    println!("  bound = -log 7 = {bound}");
    Ok(())
}
