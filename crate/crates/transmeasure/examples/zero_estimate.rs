//! The multiplicity estimate in action: a condition-satisfying instance with
//! trivial kernel, and an undersized instance with an explicit annihilated
//! polynomial.
//!
//! Run with: cargo run --example zero_estimate

use transmeasure::numerics::rat;
use transmeasure::zeroest::{lemma2_check, Lemma2Verdict, ZeroEstimateInstance};

fn main() -> transmeasure::Result<()> {
    // S M = 12 > (D0 + M)(D1 + 1) = 8: no annihilated polynomial can exist
    let inst = ZeroEstimateInstance {
        d0: 1,
        d1: 1,
        s: 4,
        m: 3,
        beta: rat(1, 1),
        points: vec![
            (rat(0, 1), rat(1, 1)),
            (rat(1, 1), rat(2, 1)),
            (rat(2, 1), rat(4, 1)),
        ],
    };
    let rep = lemma2_check(&inst)?;
    println!(
        "condition holds: {}, rank = {}, kernel dimension = {}, verdict = {:?}",
        rep.condition_21, rep.rank, rep.kernel_dim, rep.verdict
    );
    assert_eq!(rep.verdict, Lemma2Verdict::ConsistentWithLemma);

    // undersized: one derivative at two points cannot pin down a bicubic
    let small = ZeroEstimateInstance {
        d0: 1,
        d1: 1,
        s: 1,
        m: 2,
        beta: rat(1, 1),
        points: vec![(rat(0, 1), rat(1, 1)), (rat(1, 1), rat(2, 1))],
    };
    let rep = lemma2_check(&small)?;
    println!(
        "\nundersized instance: rank = {}, kernel dimension = {}",
        rep.rank, rep.kernel_dim
    );
    if let Some((_, poly)) = rep.kernel_witness {
        println!("annihilated polynomial: {poly}");
        for (xi, eta) in &small.points {
            println!("  value at ({xi}, {eta}) = {}", poly.eval(xi, eta)?);
        }
    }
    Ok(())
}
