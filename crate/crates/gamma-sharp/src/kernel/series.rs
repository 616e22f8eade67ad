//! Truncated asymptotic series in powers of 1/x with exact rational
//! coefficients.
//!
//! A `Series` stores coefficients for orders `min_order ..= trunc_order`;
//! nothing is claimed about higher orders. Ring operations propagate the
//! justified truncation order, never inventing coefficients.

use super::poly::Poly;
use super::ratfn::RatFn;
use super::rational::{rat, rat_pow, Rat};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("reciprocal of a series with zero leading coefficient")]
    ZeroLeading,
    #[error("log1p requires a series with min order >= 1")]
    ConstantTerm,
    #[error("no 1/x expansion exists for this input")]
    NoExpansion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    min_order: i64,
    /// coefficient of x^-(min_order + i) at index i
    coeffs: Vec<Rat>,
    trunc_order: i64,
}

impl Series {
    pub fn new(min_order: i64, coeffs: Vec<Rat>, trunc_order: i64) -> Self {
        assert_eq!(
            coeffs.len() as i64,
            (trunc_order - min_order + 1).max(0),
            "coefficient count must match order window"
        );
        let mut s = Series {
            min_order,
            coeffs,
            trunc_order,
        };
        s.normalize();
        s
    }

    /// The zero series, known to the given truncation order.
    pub fn zero(trunc_order: i64) -> Self {
        Series {
            min_order: trunc_order + 1,
            coeffs: vec![],
            trunc_order,
        }
    }

    fn normalize(&mut self) {
        while !self.coeffs.is_empty() && self.coeffs[0].is_zero() {
            self.coeffs.remove(0);
            self.min_order += 1;
        }
    }

    pub fn min_order(&self) -> i64 {
        self.min_order
    }

    pub fn trunc_order(&self) -> i64 {
        self.trunc_order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Coefficient of x^-m; zero outside the stored window (only valid to
    /// query for m <= trunc_order).
    pub fn coeff(&self, m: i64) -> Rat {
        if m < self.min_order || m > self.trunc_order {
            return Rat::zero();
        }
        self.coeffs[(m - self.min_order) as usize].clone()
    }

    /// Lowest order with a nonzero known coefficient, with that coefficient.
    pub fn leading(&self) -> Option<(i64, Rat)> {
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                return Some((self.min_order + i as i64, c.clone()));
            }
        }
        None
    }

    pub fn truncate(&self, n: i64) -> Series {
        let n = n.min(self.trunc_order);
        let keep = ((n - self.min_order + 1).max(0)) as usize;
        Series::new(
            self.min_order.min(n + 1),
            self.coeffs[..keep.min(self.coeffs.len())].to_vec(),
            n,
        )
    }

    pub fn add(&self, rhs: &Series) -> Series {
        let trunc = self.trunc_order.min(rhs.trunc_order);
        let lo = self.min_order.min(rhs.min_order).min(trunc + 1);
        let mut coeffs = Vec::new();
        for m in lo..=trunc {
            coeffs.push(self.coeff(m) + rhs.coeff(m));
        }
        Series::new(lo, coeffs, trunc)
    }

    pub fn sub(&self, rhs: &Series) -> Series {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Series {
        Series {
            min_order: self.min_order,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            trunc_order: self.trunc_order,
        }
    }

    pub fn scale(&self, c: &Rat) -> Series {
        if c.is_zero() {
            return Series::zero(self.trunc_order);
        }
        Series {
            min_order: self.min_order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            trunc_order: self.trunc_order,
        }
    }

    /// Product truncation: order n of the product needs every split
    /// i + j = n with both factors known, so the result is justified to
    /// min(ta + mb, tb + ma).
    pub fn mul(&self, rhs: &Series) -> Series {
        let trunc = (self.trunc_order + rhs.min_order).min(rhs.trunc_order + self.min_order);
        if self.is_zero() || rhs.is_zero() {
            return Series::zero(trunc);
        }
        let lo = self.min_order + rhs.min_order;
        if lo > trunc {
            return Series::zero(trunc);
        }
        let mut coeffs = vec![Rat::zero(); (trunc - lo + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let oa = self.min_order + i as i64;
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let o = oa + rhs.min_order + j as i64;
                if o > trunc {
                    break;
                }
                coeffs[(o - lo) as usize] += a * b;
            }
        }
        Series::new(lo, coeffs, trunc)
    }

    /// 1/s for a series with nonzero leading coefficient.
    pub fn reciprocal(&self) -> Result<Series, SeriesError> {
        let (m, c0) = self.leading().ok_or(SeriesError::ZeroLeading)?;
        if m != self.min_order {
            // hidden leading zeros reduce what we can justify; renormalize
            let mut s = self.clone();
            s.min_order = m;
            s.coeffs.drain(..(m - self.min_order) as usize);
            return s.reciprocal();
        }
        // s = c0 u^m (1 + t); 1/s = u^-m / c0 * sum (-t)^k
        let trunc = self.trunc_order - 2 * m;
        let lo = -m;
        let k = (self.trunc_order - m) as usize + 1 - 1; // number of tail coefficients
        let _ = k;
        let mut out = vec![Rat::zero(); (trunc - lo + 1).max(0) as usize];
        if out.is_empty() {
            return Ok(Series::zero(trunc));
        }
        // recurrence: sum_{i} s_{m+i} * r_{-m + n - i} = [n == 0]
        // solve r coefficients in increasing order
        let width = out.len();
        for n in 0..width {
            let mut acc = if n == 0 { Rat::from(num_bigint::BigInt::from(1)) } else { Rat::zero() };
            for i in 1..=n {
                let s_i = self.coeff(m + i as i64);
                if s_i.is_zero() {
                    continue;
                }
                acc -= s_i * &out[n - i];
            }
            out[n] = acc / &c0;
        }
        Ok(Series::new(lo, out, trunc))
    }

    /// ln(1 + s) = s - s^2/2 + s^3/3 - ... for s with min order >= 1.
    pub fn log1p(&self) -> Result<Series, SeriesError> {
        if self.min_order < 1 {
            if let Some((m, _)) = self.leading() {
                if m < 1 {
                    return Err(SeriesError::ConstantTerm);
                }
            } else if self.min_order <= 0 && !self.coeffs.is_empty() {
                // all-zero window reaching order <= 0 is still the zero series
            }
        }
        let trunc = self.trunc_order;
        let mut out = Series::zero(trunc);
        let mut power = self.truncate(trunc);
        let mut m = 1i64;
        while !power.is_zero() && power.min_order() <= trunc {
            let sign = if m % 2 == 1 { rat(1, m) } else { rat(-1, m) };
            out = out.add(&power.scale(&sign));
            power = power.mul(self).truncate(trunc);
            m += 1;
        }
        // `out` carries trunc from add-chain; pin it explicitly
        Ok(out.truncate(trunc))
    }

    /// Partial sum at a rational point.
    pub fn eval_partial(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let m = self.min_order + i as i64;
            acc += c * rat_pow(x, -m);
        }
        acc
    }
}

/// Series of -1 + x ln(1 + 1/x) to order n: the correction-independent part
/// of every difference equation. Coefficient of x^-m is (-1)^m/(m+1).
pub fn base_difference(n: i64) -> Series {
    assert!(n >= 1);
    let coeffs = (1..=n)
        .map(|m| if m % 2 == 0 { rat(1, m + 1) } else { rat(-1, m + 1) })
        .collect();
    Series::new(1, coeffs, n)
}

/// Expansion of a(x)/b(x) in powers of 1/x, exact to order n.
/// Requires deg a <= deg b (otherwise a polynomial part remains).
pub fn ratio_series(a: &Poly, b: &Poly, n: i64) -> Result<Series, SeriesError> {
    if b.is_zero() {
        return Err(SeriesError::ZeroLeading);
    }
    if a.is_zero() {
        return Ok(Series::zero(n));
    }
    let da = a.degree();
    let db = b.degree();
    if da > db {
        return Err(SeriesError::NoExpansion);
    }
    let shift = db - da;
    // reverse coefficients: a(1/u) u^da etc.; divide power series
    let arev: Vec<Rat> = (0..=da).rev().map(|i| a.coeff(i as usize)).collect();
    let brev: Vec<Rat> = (0..=db).rev().map(|i| b.coeff(i as usize)).collect();
    let lead = brev[0].clone();
    let terms = (n - shift + 1).max(0) as usize;
    let mut q = vec![Rat::zero(); terms];
    for i in 0..terms {
        let mut acc = arev.get(i).cloned().unwrap_or_else(Rat::zero);
        for k in 1..=i {
            if let Some(bk) = brev.get(k) {
                if !bk.is_zero() {
                    acc -= bk * &q[i - k];
                }
            }
        }
        q[i] = acc / &lead;
    }
    Ok(Series::new(shift, q, n))
}

/// Series of ln(P(x+1)/P(x)) for a nonzero polynomial P, exact to order n.
pub fn log_shift_ratio_poly(p: &Poly, n: i64) -> Result<Series, SeriesError> {
    if p.is_zero() {
        return Err(SeriesError::NoExpansion);
    }
    let diff = p.taylor_shift(&Rat::from(num_bigint::BigInt::from(1))).sub(p);
    if diff.is_zero() {
        return Ok(Series::zero(n));
    }
    ratio_series(&diff, p, n)?.log1p()
}

/// Series of ln(R(x+1)/R(x)) for a nonzero rational function, exact to order n.
pub fn log_ratio_shift(r: &RatFn, n: i64) -> Result<Series, SeriesError> {
    if r.is_zero() {
        return Err(SeriesError::NoExpansion);
    }
    Ok(log_shift_ratio_poly(r.num(), n)?.sub(&log_shift_ratio_poly(r.den(), n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{rat, rat_int};

    #[test]
    fn base_difference_small() {
        // N=3: -(1/2)x^-1 + (1/3)x^-2 - (1/4)x^-3
        let s = base_difference(3);
        assert_eq!(s.coeff(1), rat(-1, 2));
        assert_eq!(s.coeff(2), rat(1, 3));
        assert_eq!(s.coeff(3), rat(-1, 4));
        assert_eq!(s.coeff(0), rat(0, 1)); // constant term absent
        let s1 = base_difference(1);
        assert_eq!(s1.coeff(1), rat(-1, 2));
        assert_eq!(s1.trunc_order(), 1);
    }

    #[test]
    fn base_difference_closed_form() {
        let n = 12;
        let s = base_difference(n);
        for m in 1..=n {
            let expect = if m % 2 == 0 { rat(1, m + 1) } else { rat(-1, m + 1) };
            assert_eq!(s.coeff(m), expect, "order {m}");
        }
    }

    #[test]
    fn log1p_mercator() {
        // log1p(x^-1) = x^-1 - x^-2/2 + x^-3/3
        let s = Series::new(1, vec![rat_int(1), rat_int(0), rat_int(0)], 3)
            .log1p()
            .unwrap();
        assert_eq!(s.coeff(1), rat(1, 1));
        assert_eq!(s.coeff(2), rat(-1, 2));
        assert_eq!(s.coeff(3), rat(1, 3));
    }

    #[test]
    fn log1p_rejects_constant_term() {
        let s = Series::new(0, vec![rat_int(1), rat_int(1)], 1);
        assert_eq!(s.log1p(), Err(SeriesError::ConstantTerm));
    }

    #[test]
    fn mul_orders() {
        let a = Series::new(1, vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0), rat_int(0)], 5); // x^-1
        let b = Series::new(2, vec![rat_int(1), rat_int(0), rat_int(0), rat_int(0)], 5); // x^-2
        let p = a.mul(&b);
        assert_eq!(p.coeff(3), rat_int(1));
        // product justified to min(5+2, 5+1) = 6
        assert_eq!(p.trunc_order(), 6);
    }

    #[test]
    fn add_cancels() {
        let a = base_difference(6);
        assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn reciprocal_round_trip() {
        let a = Series::new(1, vec![rat_int(2), rat(1, 3), rat(-4, 7), rat_int(0), rat(5, 2)], 5);
        let r = a.reciprocal().unwrap();
        let prod = a.mul(&r);
        assert_eq!(prod.coeff(0), rat_int(1));
        for m in 1..=prod.trunc_order() {
            assert_eq!(prod.coeff(m), rat_int(0), "order {m}");
        }
    }

    #[test]
    fn reciprocal_of_zero_fails() {
        assert_eq!(Series::zero(5).reciprocal(), Err(SeriesError::ZeroLeading));
    }

    #[test]
    fn log_ratio_of_x() {
        // R = x: ln(1+1/x) = x^-1 - x^-2/2 + x^-3/3 - ...
        let r = RatFn::from_poly(Poly::x());
        let s = log_ratio_shift(&r, 5).unwrap();
        for m in 1..=5 {
            let expect = if m % 2 == 1 { rat(1, m) } else { rat(-1, m) };
            assert_eq!(s.coeff(m), expect);
        }
    }

    #[test]
    fn log_ratio_of_shifted_x() {
        // R = x + 1/6: leading coefficient of x^-1 is 1
        let r = RatFn::from_poly(Poly::new(vec![rat(1, 6), rat_int(1)]));
        let s = log_ratio_shift(&r, 4).unwrap();
        assert_eq!(s.coeff(1), rat_int(1));
        // independent check at x=10, 100: partial sum vs high-order partial sum
        // is covered by the series/numeric consistency test in tests/kernel.rs
    }

    #[test]
    fn log_ratio_of_constant() {
        let r = RatFn::constant(rat(7, 2));
        assert!(log_ratio_shift(&r, 6).unwrap().is_zero());
    }

    #[test]
    fn ratio_series_degree_gate() {
        // (x^2+1)/x has a polynomial part: no 1/x expansion
        let a = Poly::new(vec![rat_int(1), rat_int(0), rat_int(1)]);
        assert_eq!(ratio_series(&a, &Poly::x(), 4), Err(SeriesError::NoExpansion));
    }
}
