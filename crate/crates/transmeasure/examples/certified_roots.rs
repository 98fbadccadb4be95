//! Tour of the certified numerics layer: named constants at a requested
//! width, and complex root enclosures with exact multiplicities.
//!
//! Run with: cargo run --example certified_roots

use transmeasure::numerics::{
    const_eval, parse_rational, root_enclosures, ConstName, PrecisionCeiling,
};
use transmeasure::poly::IntPolynomial;

fn main() -> transmeasure::Result<()> {
    let ceiling = PrecisionCeiling::from_env();
    let width = parse_rational("1e-30")?;

    for name in [ConstName::Pi, ConstName::E, ConstName::Log2] {
        let v = const_eval(name, &width, &ceiling)?;
        println!("{name:?} = {v}");
    }

    // (x^2 - 2)^2 (x - 3) (x^2 + 1): five distinct roots, one of them double
    let a = IntPolynomial::from_i64(&[1, 0, -2]);
    let p = a
        .mul(&a)
        .mul(&IntPolynomial::from_i64(&[1, -3]))
        .mul(&IntPolynomial::from_i64(&[1, 0, 1]));
    println!("\nroots of {p} (degree {}):", p.degree().unwrap());
    for enc in root_enclosures(&p, &parse_rational("1e-20")?, &ceiling)? {
        println!("  multiplicity {}: {}", enc.multiplicity, enc.root);
    }
    Ok(())
}
