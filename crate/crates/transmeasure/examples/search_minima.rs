//! Exhaustive desk searches: the minimal |P(target)| over bounded integer
//! polynomials, compared against the explicit lower bounds.
//!
//! Run with: cargo run --example search_minima

use num_rational::BigRational;
use transmeasure::bounds::{MeasureForm, MeasureQuery, Target};
use transmeasure::numerics::{parse_rational, PrecisionCeiling};
use transmeasure::search::{
    enumerate_min_poly_value, space_size, verify_against_bound, SearchSpace,
};

fn main() -> transmeasure::Result<()> {
    let ceiling = PrecisionCeiling::from_env();
    let width = parse_rational("1e-6")?;

    for target in [Target::Pi, Target::Log2, Target::E] {
        let space = SearchSpace::new(target, 1, 10);
        let out = enumerate_min_poly_value(&space, &width, &ceiling)?;
        let q = MeasureQuery::new(
            target,
            MeasureForm::Polynomial,
            1,
            BigRational::from_integer(10.into()),
        )?;
        let cmp = verify_against_bound(&out.value, &q, 160)?;
        println!(
            "{:<5} over {} candidates: winner {} with |P| = {}",
            target.name(),
            space_size(1, 10),
            out.best,
            out.value
        );
        println!(
            "      log(min) = {}  vs bound {}  -> {}",
            cmp.log_min,
            cmp.bound,
            if cmp.pass {
                "pass (with enormous margin)"
            } else {
                "FAIL"
            }
        );
    }
    Ok(())
}
