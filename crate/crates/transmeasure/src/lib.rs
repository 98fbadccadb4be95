//! Exact-arithmetic machinery for effective transcendence measures.
//!
//! The crate verifies, at desk scale and with certified interval arithmetic,
//! the building blocks behind explicit lower bounds for quantities like
//! |e^theta - alpha| + |theta - beta| and |P(pi)|: Weil heights and lengths,
//! binomial polynomials with controlled denominators, a multiplicity estimate
//! for the derivation d/dX + beta Y d/dY, interpolation-determinant toys, the
//! Liouville inequality, and the fully explicit constant chains of the main
//! bounds. Every pass/fail decision is made on certified enclosures; nothing
//! is ever decided on floating point.
//!
//! Start with the runnable examples (`cargo run --example heights`, etc.) or
//! the `transmeasure` binary, whose subcommands map one-to-one onto the
//! library modules.

pub mod binomial;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod heights;
pub mod interdet;
pub mod matrix;
pub mod numerics;
pub mod poly;
pub mod report;
pub mod search;
pub mod zeroest;

pub use error::{Error, Result};
