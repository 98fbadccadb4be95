//! Weil heights: closed-form cases, the height-length inequality, and the
//! reciprocal invariance h(alpha) = h(1/alpha).
//!
//! Run with: cargo run --example heights

use transmeasure::heights::{check_height_length, height, AlgebraicNumber, Verdict};
use transmeasure::numerics::{parse_rational, rat, PrecisionCeiling};
use transmeasure::poly::IntPolynomial;

fn main() -> transmeasure::Result<()> {
    let ceiling = PrecisionCeiling::from_env();
    let width = parse_rational("1e-30")?;

    for (label, coeffs) in [
        ("2", vec![1i64, -2]),
        ("i", vec![1, 0, 1]),
        ("sqrt(2)", vec![1, 0, -2]),
        ("3/2", vec![2, -3]),
        ("golden ratio", vec![1, -1, -1]),
    ] {
        let p = IntPolynomial::from_i64(&coeffs);
        let alpha = AlgebraicNumber::any_root(&p, &ceiling)?;
        let h = height(&alpha, &width, &ceiling)?;
        println!("h({label}) = {h}   (minpoly {p}, length {})", p.length());
    }

    // h(alpha) = h(1/alpha) for the silver ratio 1 + sqrt(2)
    let alpha = AlgebraicNumber::any_root(&IntPolynomial::from_i64(&[1, -2, -1]), &ceiling)?;
    let inv = alpha.reciprocal(&ceiling)?;
    println!(
        "\nreciprocal invariance: h = {} vs {}",
        height(&alpha, &width, &ceiling)?,
        height(&inv, &width, &ceiling)?
    );

    // the height-length inequality h <= log(L)/d on a few polynomials
    println!("\nheight vs log(length)/degree:");
    for coeffs in [vec![1i64, 0, -2], vec![3, 1, -5], vec![1, 7, -2, 9]] {
        let p = IntPolynomial::from_i64(&coeffs);
        match check_height_length(&p, &ceiling) {
            Ok(Verdict::Pass) => println!("  {p}: pass"),
            Ok(v) => println!("  {p}: {v:?}"),
            Err(e) => println!("  {p}: {e}"),
        }
    }
    let _ = rat(1, 2);
    Ok(())
}
