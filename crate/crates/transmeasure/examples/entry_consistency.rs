//! Dual-route check of one matrix entry: the integer-coefficient polynomial
//! form evaluated at (theta, e^theta) against the analytic derivative value.
//!
//! Run with: cargo run --example entry_consistency

use transmeasure::interdet::{a_entry_poly, entry_consistency_check, gamma_entry, EntryIndex};
use transmeasure::numerics::{ln2, rat, CertifiedComplex};

fn main() -> transmeasure::Result<()> {
    let idx = EntryIndex {
        tau: 3,
        t: 1,
        sigma: 1,
        s: 1,
    };
    let h = 2;

    let poly = a_entry_poly(&idx, h)?;
    println!("polynomial form q(X, Y) = {poly}");

    let theta = CertifiedComplex::exact_rational(&rat(1, 1));
    let gamma = gamma_entry(&idx, h, &theta, 128)?;
    println!("analytic entry at theta = 1: {gamma}");

    for (name, theta, exp_theta) in [
        ("1", CertifiedComplex::exact_rational(&rat(1, 1)), None),
        (
            "log 2",
            CertifiedComplex::from_real(ln2(224)),
            Some(rat(2, 1)),
        ),
        ("1/2", CertifiedComplex::exact_rational(&rat(1, 2)), None),
    ] {
        let verdict = entry_consistency_check(&idx, h, &theta, exp_theta.as_ref(), 128)?;
        println!(
            "theta = {name}: overlap {}, containment {}",
            verdict.overlaps, verdict.contained
        );
    }
    Ok(())
}
