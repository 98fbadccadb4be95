//! The explicit transcendence-measure bounds as plain numbers, plus the
//! transfer from an approximation measure to a polynomial measure.
//!
//! Run with: cargo run --example measure_bounds

use num_bigint::BigInt;
use transmeasure::bounds::{lemma1_transfer, measure_bound, MeasureForm, MeasureQuery, Target};
use transmeasure::numerics::{decimal_str, rat};

fn main() -> transmeasure::Result<()> {
    println!("log-scale lower bounds at degree d and length bound L:\n");
    for target in [Target::Pi, Target::Log2, Target::E] {
        for (d, l) in [(1u32, 10i64), (2, 100)] {
            let alg = measure_bound(
                &MeasureQuery::new(target, MeasureForm::AlgebraicApprox, d, rat(l, 1))?,
                96,
            )?;
            let poly = measure_bound(
                &MeasureQuery::new(target, MeasureForm::Polynomial, d, rat(l, 1))?,
                96,
            )?;
            println!(
                "{:<5} d={d} L={l:<4} approx {:<22} polynomial {}",
                target.name(),
                decimal_str(&alg.mid(), 1, false),
                decimal_str(&poly.mid(), 1, false),
            );
        }
    }

    // transfer: an approximation measure phi produces a polynomial measure
    let q = MeasureQuery::new(Target::Pi, MeasureForm::AlgebraicApprox, 1, rat(6, 1))?;
    let phi = measure_bound(&q, 128)?.neg();
    let transferred = lemma1_transfer(&phi, 1, 1, &BigInt::from(3), 128)?;
    let direct = measure_bound(
        &MeasureQuery::new(Target::Pi, MeasureForm::Polynomial, 1, rat(3, 1))?,
        128,
    )?;
    println!("\ntransfer at (N, M) = (1, 3):");
    println!("  via the approximation measure: {transferred}");
    println!("  direct polynomial bound:       {direct}");
    Ok(())
}
