//! The desk-scale interpolation matrix: exact rank, the deterministic row
//! selection, and the certified nonzero minor witness.
//!
//! Run with: cargo run --example interpolation_toy

use transmeasure::interdet::{toy_rank_check, ToyConfig};
use transmeasure::numerics::rat;

fn main() -> transmeasure::Result<()> {
    let cfg = ToyConfig::new(2, 2, 1, 1, 2, rat(2, 1), rat(1, 1));
    println!(
        "toy parameters: S={} S1={} T={} T1={} H={}, alpha={}, beta={}",
        cfg.s, cfg.s1, cfg.t, cfg.t1, cfg.h, cfg.alpha, cfg.beta
    );
    let report = toy_rank_check(&cfg)?;
    println!(
        "matrix is {} x {} with L = {}; exact rank = {}",
        report.rows, report.cols, report.l, report.rank
    );
    println!("selected rows (sigma, s): {:?}", report.selected_rows);
    match report.minor {
        Some(minor) => println!("nonzero {l} x {l} minor: {minor}", l = report.l),
        None => println!("rank-deficient; kernel: {:?}", report.kernel),
    }
    Ok(())
}
