//! Sharp two-sided Stirling-type bounds for the gamma function, derived,
//! evaluated, and checked end to end.
//!
//! The crate has three layers:
//!
//! * an exact layer ([`kernel`], [`correction`]) that manipulates
//!   polynomials, rational functions, and truncated asymptotic series over
//!   arbitrary-precision rationals, and solves for the correction constants
//!   of four approximant families;
//! * a rigorous numeric layer ([`interval`], [`oracle`]) providing
//!   directed-rounding big floats, outward-rounded interval arithmetic, and
//!   a reference enclosure of ln Γ;
//! * an analysis layer ([`approx`], [`analysis`]) that evaluates the
//!   approximants, measures error decay rates, verifies strict inequalities
//!   by interval disjointness, and produces sign certificates for
//!   second-difference numerators.
//!
//! The `gamma-sharp` binary exposes all of it as a CLI with
//! machine-readable JSON output.

pub mod analysis;
pub mod approx;
pub mod cli;
pub mod correction;
pub mod interval;
pub mod kernel;
pub mod oracle;

/// Schema tag stamped into every JSON document the crate emits.
pub const SCHEMA_VERSION: &str = "1";
