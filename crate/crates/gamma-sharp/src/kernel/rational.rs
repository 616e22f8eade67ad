//! Exact rational scalars.
//!
//! All symbolic work in the crate is carried out over arbitrary-precision
//! rationals. JSON output renders them as `"p/q"` strings so no value ever
//! passes through floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub type Rat = BigRational;

/// Shorthand for a rational from two machine integers.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`. Whitespace is not accepted.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
    let d = BigInt::from_str(den).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rat::new(n, d))
}

/// Renders as `"p/q"`, or `"p"` when the denominator is one.
pub fn rat_string(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// q^n for signed integer n.
pub fn rat_pow(q: &Rat, n: i64) -> Rat {
    if n >= 0 {
        num_traits::pow::pow(q.clone(), n as usize)
    } else {
        num_traits::pow::pow(q.clone(), (-n) as usize).recip()
    }
}

pub fn rat_abs(q: &Rat) -> Rat {
    q.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in ["1/72", "-11/240", "481937/3735270", "5", "-3"] {
            let q = parse_rat(s).unwrap();
            assert_eq!(rat_string(&q), s);
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(parse_rat("90/8712").unwrap(), rat(5, 484));
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn signed_power() {
        assert_eq!(rat_pow(&rat(2, 3), -2), rat(9, 4));
        assert_eq!(rat_pow(&rat(2, 1), 10), rat_int(1024));
    }
}
