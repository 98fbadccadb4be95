//! Symbolic vanishing order of the monomial-case determinants at the origin.
//!
//! Run with: cargo run --example vanishing_order

use transmeasure::interdet::{vanishing_order_check, VanishingOrderCase};
use transmeasure::numerics::rat;

fn main() -> transmeasure::Result<()> {
    let cases = [
        (
            "Vandermonde-like",
            vec![0u64, 1, 2],
            vec![0u64, 0, 0],
            vec![1i64, 2, 3],
        ),
        (
            "with derivatives",
            vec![1, 3, 5],
            vec![1, 0, 2],
            vec![1, -2, 3],
        ),
        ("vacuous bound", vec![0, 1], vec![1, 1], vec![1, 2]),
        ("repeated exponents", vec![2, 2], vec![0, 0], vec![1, 3]),
    ];
    for (label, exponents, orders, points) in cases {
        let case = VanishingOrderCase {
            exponents,
            orders,
            points: points.into_iter().map(|p| rat(p, 1)).collect(),
        };
        let rep = vanishing_order_check(&case)?;
        match rep.computed_ord {
            Some(ord) => println!(
                "{label:<20} order {ord} >= bound {}: {}",
                rep.lower_bound,
                if rep.pass { "pass" } else { "FAIL" }
            ),
            None => println!("{label:<20} determinant identically zero: pass"),
        }
    }
    Ok(())
}
