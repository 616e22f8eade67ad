//! Exact computer-algebra substrate: rationals, polynomials, rational
//! functions, and truncated asymptotic series.

pub mod poly;
pub mod ratfn;
pub mod rational;
pub mod series;

pub use poly::Poly;
pub use ratfn::{RatFn, RatFnError};
pub use rational::{parse_rat, rat, rat_int, rat_pow, rat_string, Rat};
pub use series::{base_difference, log_ratio_shift, ratio_series, Series, SeriesError};
