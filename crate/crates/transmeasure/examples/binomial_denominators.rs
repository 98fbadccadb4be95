//! Binomial polynomials Delta(z, N, H): exact derivative values, the
//! denominator-clearing powers d_sigma = lcm(1..H)^sigma, and the certified
//! size bounds.
//!
//! Run with: cargo run --example binomial_denominators

use num_bigint::BigInt;
use transmeasure::binomial::{d_sigma, delta_derivatives, lemma4_check, nu, DeltaParams};
use transmeasure::numerics::{rat, PrecisionCeiling};

fn main() -> transmeasure::Result<()> {
    let ceiling = PrecisionCeiling::from_env();

    for k in [1u64, 2, 6, 10, 20] {
        println!("lcm(1..{k}) = {}", nu(k)?);
    }

    let p = DeltaParams::new(3, 2)?;
    println!(
        "\nDelta(z, 3, 2) = z^2 (z+1) / 2  (q = {}, r = {})",
        p.q, p.r
    );
    let derivs = delta_derivatives(&rat(1, 1), &p, 2);
    let show = |vals: &[num_rational::BigRational]| {
        vals.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    println!("derivatives at z = 1: [{}]", show(&derivs));
    let d2 = d_sigma(2, 2)?;
    let scaled: Vec<num_rational::BigRational> = derivs
        .iter()
        .map(|v| v * num_rational::BigRational::from_integer(d2.value.clone()))
        .collect();
    println!(
        "scaled by d_2 = {}: [{}]  (integers, as promised)",
        d2.value,
        show(&scaled)
    );

    println!("\nintegrality and size checks on a small grid:");
    let mut all = true;
    for n in 1..=6u64 {
        for h in 1..=3u64 {
            for x in -5i64..=5 {
                let rep = lemma4_check(&BigInt::from(x), &DeltaParams::new(n, h)?, 3, &ceiling)?;
                all &= rep.all_pass();
            }
        }
    }
    println!(
        "6 x 3 x 11 grid at sigma = 3: {}",
        if all { "all pass" } else { "FAILURES" }
    );
    Ok(())
}
