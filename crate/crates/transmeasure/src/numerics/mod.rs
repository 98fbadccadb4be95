//! Certified arbitrary-precision arithmetic: rational-endpoint intervals,
//! complex rectangles, transcendental constants with explicit tail bounds,
//! and certified root enclosures for integer polynomials.
//!
//! All values are immutable after construction; operations are pure functions
//! of their inputs plus a working precision, so everything here is safe to
//! share across threads.

pub mod complex;
pub mod consts;
pub mod expr;
pub mod interval;
pub mod roots;

pub use complex::{exp_complex, CertifiedComplex, QComplex};
pub use consts::{
    bits_for_width, const_eval, e_const, exp_int, exp_interval, exp_rat, ln2, ln_int, ln_interval,
    ln_rat, parse_rational, pi, sin_cos, sqrt_interval, sqrt_rat, ConstName, PrecisionCeiling,
    DEFAULT_MAX_BITS, ENV_MAX_BITS,
};
pub use interval::{decimal_str, rat, CertifiedReal};
pub use roots::{root_enclosures, RootEnclosure};
