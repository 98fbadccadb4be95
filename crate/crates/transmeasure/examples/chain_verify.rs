//! Certified verification of the displayed inequality chains: the four
//! measure derivations across degrees, and the determinant-comparison chain
//! on a derived parameter pack.
//!
//! Run with: cargo run --example chain_verify

use transmeasure::bounds::{
    chain_check_section6, chain_check_theorem_derivations, theorem1_log_bound, TheoremChain,
};
use transmeasure::interdet::derive_params;
use transmeasure::numerics::{
    e_const, ln_rat, pi, rat, CertifiedComplex, CertifiedReal, PrecisionCeiling,
};

fn main() -> transmeasure::Result<()> {
    let ceiling = PrecisionCeiling::from_env();

    for which in [
        TheoremChain::Thm2,
        TheoremChain::Thm3,
        TheoremChain::Thm4,
        TheoremChain::Thm5,
    ] {
        for d in [1u32, 4, 100] {
            let report = chain_check_theorem_derivations(which, d, &ceiling)?;
            let status = if report.all_pass() { "pass" } else { "FAIL" };
            println!("{:<40} {status}", report.title);
        }
    }

    // the pi-measure instantiation at xi = 3, spelled out
    let params = derive_params(
        2,
        &CertifiedReal::exact(rat(1, 2)),
        &ln_rat(&rat(3, 1), 256)?,
        &e_const(256).powi(2),
        &CertifiedComplex::new(CertifiedReal::zero(), pi(256)),
        &ceiling,
    )?;
    println!(
        "\nderived pack: D={} S={} S1={} T={} T1={} H={} L={}",
        params.d, params.s, params.s1, params.t, params.t1, params.h, params.l
    );
    println!("main bound exponent: {}", theorem1_log_bound(&params, 160)?);

    let chain = chain_check_section6(&params, &ceiling)?;
    println!("\n{}:", chain.title);
    for check in &chain.checks {
        println!(
            "  [{}] {}",
            if check.pass { "ok" } else { "FAIL" },
            check.label
        );
    }
    Ok(())
}
