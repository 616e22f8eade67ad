//! Arbitrary-precision floats with directed rounding and outward-rounded
//! interval enclosures.
//!
//! A `BigFloat` is `mant * 2^exp` with an arbitrary-precision mantissa.
//! Every `Iv` operation returns an interval containing the exact
//! mathematical result; working precision is an explicit per-call
//! parameter, never global state. Elementary functions (ln, exp) use
//! argument reduction plus a series with an explicit tail bound, so the
//! containment contract holds with a documented slack, not correct
//! rounding.

use crate::kernel::Rat;
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Mutex;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IvError {
    #[error("division by an interval containing zero")]
    DivisionByZero,
    #[error("domain violation: {0}")]
    Domain(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    Down,
    Up,
}

/// mant * 2^exp; not normalized between operations, rounded on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
}

impl BigFloat {
    pub fn zero() -> Self {
        BigFloat {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        BigFloat {
            mant: BigInt::from(n),
            exp: 0,
        }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        BigFloat { mant: n, exp: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    fn bits(&self) -> u64 {
        self.mant.magnitude().bits()
    }

    /// Directed rounding to p mantissa bits.
    pub fn round(&self, p: u32, dir: Dir) -> BigFloat {
        let bits = self.bits();
        if bits <= p as u64 {
            return self.clone();
        }
        let shift = bits - p as u64;
        let mag = self.mant.magnitude();
        let q = mag >> shift;
        let lost = !(mag & ((BigUint::from(1u32) << shift) - BigUint::from(1u32))).is_zero();
        let neg = self.mant.is_negative();
        let bump = lost
            && match dir {
                Dir::Up => !neg,
                Dir::Down => neg,
            };
        let q = if bump { q + BigUint::from(1u32) } else { q };
        let mant = BigInt::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, q);
        BigFloat {
            mant,
            exp: self.exp + shift as i64,
        }
    }

    pub fn neg(&self) -> BigFloat {
        BigFloat {
            mant: -self.mant.clone(),
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> BigFloat {
        BigFloat {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    /// Exact addition (mantissa growth bounded by exponent alignment).
    pub fn add_exact(&self, rhs: &BigFloat) -> BigFloat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let exp = self.exp.min(rhs.exp);
        let a = &self.mant << (self.exp - exp) as u64;
        let b = &rhs.mant << (rhs.exp - exp) as u64;
        BigFloat { mant: a + b, exp }
    }

    pub fn sub_exact(&self, rhs: &BigFloat) -> BigFloat {
        self.add_exact(&rhs.neg())
    }

    pub fn mul_exact(&self, rhs: &BigFloat) -> BigFloat {
        BigFloat {
            mant: &self.mant * &rhs.mant,
            exp: self.exp + rhs.exp,
        }
    }

    /// 2^k scaling, exact.
    pub fn scale2(&self, k: i64) -> BigFloat {
        if self.is_zero() {
            return self.clone();
        }
        BigFloat {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    /// Directed division to at least p significant bits.
    pub fn div_dir(&self, rhs: &BigFloat, p: u32, dir: Dir) -> BigFloat {
        assert!(!rhs.is_zero(), "division by zero BigFloat");
        if self.is_zero() {
            return BigFloat::zero();
        }
        let extra = (p as i64 + 2 + rhs.bits() as i64 - self.bits() as i64).max(0) as u64;
        let na = self.mant.magnitude() << extra;
        let nb = rhs.mant.magnitude();
        let q = &na / nb;
        let lost = !(&na % nb).is_zero();
        let neg = self.mant.is_negative() != rhs.mant.is_negative();
        let bump = lost
            && match dir {
                Dir::Up => !neg,
                Dir::Down => neg,
            };
        let q = if bump { q + BigUint::from(1u32) } else { q };
        let mant = BigInt::from_biguint(if neg { Sign::Minus } else { Sign::Plus }, q);
        BigFloat {
            mant,
            exp: self.exp - rhs.exp - extra as i64,
        }
        .round(p, dir)
    }

    /// Directed conversion from an exact rational.
    pub fn from_rat(q: &Rat, p: u32, dir: Dir) -> BigFloat {
        BigFloat::from_bigint(q.numer().clone()).div_dir(
            &BigFloat::from_bigint(q.denom().clone()),
            p,
            dir,
        )
    }

    /// Directed square root (input must be >= 0).
    pub fn sqrt_dir(&self, p: u32, dir: Dir) -> BigFloat {
        assert!(!self.is_negative(), "sqrt of negative BigFloat");
        if self.is_zero() {
            return BigFloat::zero();
        }
        // scale so the exponent is even and the mantissa has ~2p+4 bits
        let want = 2 * p as u64 + 4;
        let mut shift = want.saturating_sub(self.bits());
        if (self.exp - shift as i64) % 2 != 0 {
            shift += 1;
        }
        let m = self.mant.magnitude() << shift;
        let r = m.sqrt();
        let exact = &r * &r == m;
        let r = match dir {
            Dir::Down => r,
            Dir::Up => {
                if exact {
                    r
                } else {
                    r + BigUint::from(1u32)
                }
            }
        };
        BigFloat {
            mant: BigInt::from(r),
            exp: (self.exp - shift as i64) / 2,
        }
        .round(p, dir)
    }

    pub fn cmp_val(&self, rhs: &BigFloat) -> Ordering {
        let sa = self.mant.sign();
        let sb = rhs.mant.sign();
        if sa != sb {
            return match (sa, sb) {
                (Sign::Minus, _) => Ordering::Less,
                (_, Sign::Minus) => Ordering::Greater,
                (Sign::NoSign, Sign::Plus) => Ordering::Less,
                (Sign::Plus, Sign::NoSign) => Ordering::Greater,
                _ => Ordering::Equal,
            };
        }
        self.sub_exact(rhs).mant.sign().partial_cmp(&Sign::NoSign).map_or(Ordering::Equal, |o| o)
    }

    /// Lossy conversion for diagnostics and slope fitting.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.bits();
        let drop = bits.saturating_sub(53);
        let top = (self.mant.magnitude() >> drop).to_f64().unwrap_or(f64::MAX);
        let sign = if self.mant.is_negative() { -1.0 } else { 1.0 };
        sign * top * 2f64.powi((self.exp + drop as i64).clamp(i32::MIN as i64, i32::MAX as i64) as i32)
    }

    /// log2 of |value|, approximately (for scaling decisions).
    pub fn log2_approx(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        // keep the fractional part: log2|m·2^e| = log2(top 53 bits) + shift + e
        let bits = self.bits();
        let shift = bits.saturating_sub(53);
        let top = (self.mant.magnitude() >> shift)
            .to_f64()
            .unwrap_or(1.0);
        top.log2() + shift as f64 + self.exp as f64
    }

    /// Decimal rendering with `digits` significant digits, rounded in the
    /// given direction.
    pub fn to_decimal(&self, digits: u32, dir: Dir) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let log10 = self.log2_approx() * std::f64::consts::LOG10_2;
        let e10 = log10.floor() as i64;
        // scale so the integer part has `digits` digits: v * 10^n
        let n = digits as i64 - 1 - e10;
        let ten_n_num: BigUint = BigUint::from(10u32).pow(n.max(0) as u32);
        let ten_n_den: BigUint = BigUint::from(10u32).pow((-n).max(0) as u32);
        // i = v * 10^n = mant * 2^exp * 10^n
        let mag = self.mant.magnitude() * &ten_n_num;
        let neg = self.mant.is_negative();
        let (int, lost) = if self.exp >= 0 {
            let v = (mag << self.exp as u64) / &ten_n_den;
            let rem = !((self.mant.magnitude() * &ten_n_num << self.exp as u64) % &ten_n_den).is_zero();
            (v, rem)
        } else {
            let den = &ten_n_den << (-self.exp) as u64;
            let v = &mag / &den;
            (v.clone(), !(&mag % &den).is_zero())
        };
        let bump = lost
            && match dir {
                Dir::Up => !neg,
                Dir::Down => neg,
            };
        let int = if bump { int + BigUint::from(1u32) } else { int };
        let s = int.to_string();
        let e10 = s.len() as i64 - 1 - n;
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(&s[..1]);
        if s.len() > 1 {
            out.push('.');
            out.push_str(&s[1..]);
        }
        out.push('e');
        out.push_str(&e10.to_string());
        out
    }
}

/// Outward-rounded enclosure: every operation returns an interval
/// containing the exact result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Iv {
    lo: BigFloat,
    hi: BigFloat,
}

impl Iv {
    pub fn new(lo: BigFloat, hi: BigFloat) -> Self {
        debug_assert!(lo.cmp_val(&hi) != Ordering::Greater, "inverted interval");
        Iv { lo, hi }
    }

    pub fn point(v: BigFloat) -> Self {
        Iv {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Iv::point(BigFloat::from_int(n))
    }

    pub fn from_rat(q: &Rat, p: u32) -> Self {
        Iv {
            lo: BigFloat::from_rat(q, p, Dir::Down),
            hi: BigFloat::from_rat(q, p, Dir::Up),
        }
    }

    pub fn lo(&self) -> &BigFloat {
        &self.lo
    }

    pub fn hi(&self) -> &BigFloat {
        &self.hi
    }

    pub fn is_zero_width(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains_rat(&self, q: &Rat) -> bool {
        // compare exactly: lo <= q <= hi  <=>  lo*den <= num <= hi*den (den > 0)
        let den = BigFloat::from_bigint(q.denom().clone());
        let num = BigFloat::from_bigint(q.numer().clone());
        self.lo.mul_exact(&den).cmp_val(&num) != Ordering::Greater
            && num.cmp_val(&self.hi.mul_exact(&den)) != Ordering::Greater
    }

    pub fn contains(&self, other: &Iv) -> bool {
        self.lo.cmp_val(&other.lo) != Ordering::Greater
            && other.hi.cmp_val(&self.hi) != Ordering::Greater
    }

    /// Strict order between disjoint intervals; None when they overlap.
    pub fn strict_cmp(&self, other: &Iv) -> Option<Ordering> {
        if self.hi.cmp_val(&other.lo) == Ordering::Less {
            Some(Ordering::Less)
        } else if other.hi.cmp_val(&self.lo) == Ordering::Less {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    pub fn width(&self, p: u32) -> BigFloat {
        self.hi.sub_exact(&self.lo).round(p, Dir::Up)
    }

    pub fn midpoint(&self) -> BigFloat {
        self.lo.add_exact(&self.hi).scale2(-1)
    }

    pub fn neg(&self) -> Iv {
        Iv {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
        }
    }

    pub fn abs_hi(&self) -> BigFloat {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a.cmp_val(&b) == Ordering::Greater {
            a
        } else {
            b
        }
    }

    pub fn add(&self, rhs: &Iv, p: u32) -> Iv {
        Iv {
            lo: self.lo.add_exact(&rhs.lo).round(p, Dir::Down),
            hi: self.hi.add_exact(&rhs.hi).round(p, Dir::Up),
        }
    }

    pub fn sub(&self, rhs: &Iv, p: u32) -> Iv {
        self.add(&rhs.neg(), p)
    }

    pub fn mul(&self, rhs: &Iv, p: u32) -> Iv {
        let cands = [
            self.lo.mul_exact(&rhs.lo),
            self.lo.mul_exact(&rhs.hi),
            self.hi.mul_exact(&rhs.lo),
            self.hi.mul_exact(&rhs.hi),
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if c.cmp_val(&lo) == Ordering::Less {
                lo = c.clone();
            }
            if c.cmp_val(&hi) == Ordering::Greater {
                hi = c.clone();
            }
        }
        Iv {
            lo: lo.round(p, Dir::Down),
            hi: hi.round(p, Dir::Up),
        }
    }

    pub fn div(&self, rhs: &Iv, p: u32) -> Result<Iv, IvError> {
        if rhs.contains_zero() {
            return Err(IvError::DivisionByZero);
        }
        let lo_c = [
            self.lo.div_dir(&rhs.lo, p, Dir::Down),
            self.lo.div_dir(&rhs.hi, p, Dir::Down),
            self.hi.div_dir(&rhs.lo, p, Dir::Down),
            self.hi.div_dir(&rhs.hi, p, Dir::Down),
        ];
        let hi_c = [
            self.lo.div_dir(&rhs.lo, p, Dir::Up),
            self.lo.div_dir(&rhs.hi, p, Dir::Up),
            self.hi.div_dir(&rhs.lo, p, Dir::Up),
            self.hi.div_dir(&rhs.hi, p, Dir::Up),
        ];
        let mut lo = lo_c[0].clone();
        let mut hi = hi_c[0].clone();
        for c in &lo_c[1..] {
            if c.cmp_val(&lo) == Ordering::Less {
                lo = c.clone();
            }
        }
        for c in &hi_c[1..] {
            if c.cmp_val(&hi) == Ordering::Greater {
                hi = c.clone();
            }
        }
        Ok(Iv { lo, hi })
    }

    pub fn scale2(&self, k: i64) -> Iv {
        Iv {
            lo: self.lo.scale2(k),
            hi: self.hi.scale2(k),
        }
    }

    /// Widens by [-slack, slack].
    pub fn widen(&self, slack: &BigFloat) -> Iv {
        debug_assert!(!slack.is_negative());
        Iv {
            lo: self.lo.sub_exact(slack),
            hi: self.hi.add_exact(slack),
        }
    }

    pub fn sqrt(&self, p: u32) -> Result<Iv, IvError> {
        if self.lo.is_negative() {
            return Err(IvError::Domain("sqrt of interval reaching below zero"));
        }
        Ok(Iv {
            lo: self.lo.sqrt_dir(p, Dir::Down),
            hi: self.hi.sqrt_dir(p, Dir::Up),
        })
    }

    /// Natural log; requires lo > 0. Monotone, so endpoints suffice.
    pub fn ln(&self, p: u32) -> Result<Iv, IvError> {
        if !self.lo.is_positive() {
            return Err(IvError::Domain("ln requires a strictly positive interval"));
        }
        Ok(Iv {
            lo: ln_point(&self.lo, p, Dir::Down),
            hi: ln_point(&self.hi, p, Dir::Up),
        })
    }

    pub fn exp(&self, p: u32) -> Iv {
        Iv {
            lo: exp_point(&self.lo, p, Dir::Down),
            hi: exp_point(&self.hi, p, Dir::Up),
        }
    }

    /// a^b = exp(b ln a); requires a > 0.
    pub fn pow(&self, b: &Iv, p: u32) -> Result<Iv, IvError> {
        let g = p + 16;
        Ok(self.ln(g)?.mul(b, g).exp(p))
    }

    /// Sixth root via exp(ln(a)/6); requires a > 0.
    pub fn root6(&self, p: u32) -> Result<Iv, IvError> {
        let g = p + 16;
        Ok(self
            .ln(g)?
            .div(&Iv::from_int(6), g)
            .expect("nonzero divisor")
            .exp(p))
    }

    pub fn to_json(&self, digits: u32) -> serde_json::Value {
        serde_json::json!({
            "lo": self.lo.to_decimal(digits, Dir::Down),
            "hi": self.hi.to_decimal(digits, Dir::Up),
            "width": self.width(32).to_decimal(3, Dir::Up),
        })
    }

    /// Human-readable midpoint with explicit width annotation.
    pub fn display(&self, digits: u32) -> String {
        format!(
            "{} ± {}",
            self.midpoint().to_decimal(digits, Dir::Up),
            self.width(32).to_decimal(3, Dir::Up)
        )
    }
}

fn guard(p: u32) -> u32 {
    p + 24
}

/// ln of a single positive BigFloat, rounded in the given direction.
fn ln_point(x: &BigFloat, p: u32, dir: Dir) -> BigFloat {
    let g = guard(p);
    // reduce to m in [1, 2): x = m * 2^e2
    let e2 = x.bits() as i64 + x.exp - 1;
    let m = Iv::point(x.scale2(-e2));
    // z = (m-1)/(m+1) in [0, 1/3); ln m = 2 atanh z
    let one = Iv::from_int(1);
    let z = m
        .sub(&one, g)
        .div(&m.add(&one, g), g)
        .expect("m + 1 > 0");
    let atanh = atanh_series(&z, g);
    let lnm = atanh.scale2(1);
    let result = if e2 == 0 {
        lnm
    } else {
        lnm.add(&ln2(g).mul(&Iv::from_int(e2), g), g)
    };
    match dir {
        Dir::Down => result.lo.round(p, Dir::Down),
        Dir::Up => result.hi.round(p, Dir::Up),
    }
}

/// atanh on a small interval (|z| <= 1/2 required for the tail bound),
/// with an explicit geometric tail enclosure.
fn atanh_series(z: &Iv, p: u32) -> Iv {
    let half = BigFloat::from_int(1).scale2(-1);
    assert!(
        z.abs_hi().cmp_val(&half) != Ordering::Greater,
        "atanh argument reduction failed"
    );
    let z2 = z.mul(z, p);
    let mut term = z.clone(); // z^(2k+1)
    let mut sum = Iv::from_int(0);
    let mut k = 0i64;
    let tiny = BigFloat::from_int(1).scale2(-(p as i64));
    loop {
        sum = sum.add(
            &term.div(&Iv::from_int(2 * k + 1), p).expect("odd divisor"),
            p,
        );
        term = term.mul(&z2, p);
        k += 1;
        let mag = term.abs_hi();
        if mag.cmp_val(&tiny.mul_exact(&sum.abs_hi().add_exact(&BigFloat::from_int(1))))
            == Ordering::Less
        {
            // tail <= |z|^(2k+1) * sum_{j>=0} |z|^(2j) <= mag * 4/3 < 2*mag
            let tail = mag.scale2(1);
            return sum.widen(&tail);
        }
        assert!(k < 4 * p as i64, "atanh series failed to converge");
    }
}

/// exp of a single BigFloat, rounded in the given direction.
fn exp_point(x: &BigFloat, p: u32, dir: Dir) -> BigFloat {
    let g = guard(p);
    // range reduce: x = k ln2 + r with |r| <~ 1/2
    let k = (x.to_f64() / std::f64::consts::LN_2).round();
    assert!(k.abs() < 9e15, "exp argument out of range");
    let k = k as i64;
    let r = Iv::point(x.clone()).sub(&ln2(g).mul(&Iv::from_int(k), g), g);
    assert!(
        r.abs_hi().cmp_val(&BigFloat::from_int(2)) == Ordering::Less,
        "exp reduction failed"
    );
    // Taylor sum of exp(r)
    let mut term = Iv::from_int(1);
    let mut sum = Iv::from_int(1);
    let mut n = 1i64;
    let tiny = BigFloat::from_int(1).scale2(-(g as i64) + 4);
    loop {
        term = term
            .mul(&r, g)
            .div(&Iv::from_int(n), g)
            .expect("nonzero factorial step");
        sum = sum.add(&term, g);
        n += 1;
        let mag = term.abs_hi();
        if mag.cmp_val(&tiny) == Ordering::Less && n > 4 {
            // ratio of successive terms is < 1/2 here, so tail < 2*mag
            sum = sum.widen(&mag.scale2(1));
            break;
        }
        assert!(n < 4 * g as i64 + 64, "exp series failed to converge");
    }
    let result = sum.scale2(k);
    match dir {
        Dir::Down => result.lo.round(p, Dir::Down),
        Dir::Up => result.hi.round(p, Dir::Up),
    }
}

static LN2_CACHE: Mutex<Option<HashMap<u32, Iv>>> = Mutex::new(None);
static PI_CACHE: Mutex<Option<HashMap<u32, Iv>>> = Mutex::new(None);

/// ln 2 = 2 atanh(1/3).
pub fn ln2(p: u32) -> Iv {
    {
        let cache = LN2_CACHE.lock().unwrap();
        if let Some(map) = cache.as_ref() {
            if let Some(v) = map.get(&p) {
                return v.clone();
            }
        }
    }
    let g = p + 8;
    let third = Iv::from_int(1).div(&Iv::from_int(3), g).expect("3 != 0");
    let v = atanh_series(&third, g).scale2(1);
    let v = Iv::new(v.lo().round(p, Dir::Down), v.hi().round(p, Dir::Up));
    let mut cache = LN2_CACHE.lock().unwrap();
    cache.get_or_insert_with(HashMap::new).insert(p, v.clone());
    v
}

/// pi by Machin's formula: 16 atan(1/5) - 4 atan(1/239).
pub fn pi(p: u32) -> Iv {
    {
        let cache = PI_CACHE.lock().unwrap();
        if let Some(map) = cache.as_ref() {
            if let Some(v) = map.get(&p) {
                return v.clone();
            }
        }
    }
    let g = p + 16;
    let v = atan_inv(5, g)
        .scale2(4)
        .sub(&atan_inv(239, g).scale2(2), g);
    let v = Iv::new(v.lo().round(p, Dir::Down), v.hi().round(p, Dir::Up));
    let mut cache = PI_CACHE.lock().unwrap();
    cache.get_or_insert_with(HashMap::new).insert(p, v.clone());
    v
}

/// e = exp(1).
pub fn euler_e(p: u32) -> Iv {
    Iv::from_int(1).exp(p)
}

/// atan(1/n) for integer n >= 2 by the alternating arctangent series;
/// the tail is bounded by the first omitted term.
fn atan_inv(n: i64, p: u32) -> Iv {
    let ninv = Iv::from_int(1).div(&Iv::from_int(n), p).expect("n >= 2");
    let n2inv = ninv.mul(&ninv, p);
    let mut power = ninv.clone(); // (1/n)^(2k+1)
    let mut sum = Iv::from_int(0);
    let mut k = 0i64;
    let tiny = BigFloat::from_int(1).scale2(-(p as i64) - 4);
    loop {
        let term = power.div(&Iv::from_int(2 * k + 1), p).expect("odd divisor");
        sum = if k % 2 == 0 {
            sum.add(&term, p)
        } else {
            sum.sub(&term, p)
        };
        power = power.mul(&n2inv, p);
        k += 1;
        let next = power.abs_hi();
        if next.cmp_val(&tiny) == Ordering::Less {
            return sum.widen(&next);
        }
        assert!(k < 2 * p as i64, "atan series failed to converge");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::parse_rat;

    fn q(s: &str) -> Rat {
        parse_rat(s).unwrap()
    }

    #[test]
    fn point_arithmetic() {
        let p = 64;
        let a = Iv::from_int(1).add(&Iv::from_int(2), p);
        assert!(a.contains_rat(&q("3")));
        assert!(a.is_zero_width());
    }

    #[test]
    fn mul_endpoint_analysis() {
        let p = 64;
        let a = Iv::new(BigFloat::from_int(1), BigFloat::from_int(2));
        let b = Iv::new(BigFloat::from_int(-1), BigFloat::from_int(1));
        let c = a.mul(&b, p);
        assert_eq!(c.lo().cmp_val(&BigFloat::from_int(-2)), Ordering::Equal);
        assert_eq!(c.hi().cmp_val(&BigFloat::from_int(2)), Ordering::Equal);
    }

    #[test]
    fn div_containment_and_width() {
        let p = 128;
        let c = Iv::from_int(1).div(&Iv::from_int(3), p).unwrap();
        assert!(c.contains_rat(&q("1/3")));
        // width <= 2 * 2^(-p+1)
        let bound = BigFloat::from_int(1).scale2(-(p as i64) + 2);
        assert!(c.width(64).cmp_val(&bound) != Ordering::Greater);
    }

    #[test]
    fn div_by_zero_interval() {
        let z = Iv::new(BigFloat::from_int(-1), BigFloat::from_int(1));
        assert_eq!(Iv::from_int(1).div(&z, 64), Err(IvError::DivisionByZero));
    }

    #[test]
    fn exp_of_zero() {
        let e = Iv::from_int(0).exp(96);
        assert!(e.contains_rat(&q("1")));
    }

    #[test]
    fn ln_exp_round_trip() {
        let p = 128;
        let x = Iv::from_int(1).exp(p).ln(p).unwrap();
        assert!(x.contains_rat(&q("1")));
    }

    #[test]
    fn root6_of_64() {
        let r = Iv::from_int(64).root6(128).unwrap();
        assert!(r.contains_rat(&q("2")));
    }

    #[test]
    fn sqrt_exact_square() {
        let r = Iv::from_int(144).sqrt(96).unwrap();
        assert!(r.contains_rat(&q("12")));
    }

    #[test]
    fn from_rat_relative_width() {
        let p = 128;
        let iv = Iv::from_rat(&q("1/3"), p);
        assert!(iv.contains_rat(&q("1/3")));
        let bound = BigFloat::from_int(1).scale2(-(p as i64) + 2);
        // relative width: value ~ 1/3, so absolute bound is conservative
        assert!(iv.width(64).cmp_val(&bound) != Ordering::Greater);
    }

    /// Checks that the interval lies inside the 1-ulp decimal bracket
    /// [d/scale, (d+1)/scale] around a truncated reference constant.
    fn assert_in_bracket(iv: &Iv, truncated: &str, scale: &str) {
        let lo = q(truncated) / q(scale);
        let hi = (q(truncated) + q("1")) / q(scale);
        let bracket = Iv::new(
            BigFloat::from_rat(&lo, 192, Dir::Down),
            BigFloat::from_rat(&hi, 192, Dir::Up),
        );
        assert!(bracket.contains(iv), "{truncated}/{scale}: {:?}", iv.to_json(25));
    }

    #[test]
    fn pi_value() {
        assert_in_bracket(&pi(96), "314159265358979323846", "100000000000000000000");
    }

    #[test]
    fn e_value() {
        assert_in_bracket(&euler_e(96), "271828182845904523536", "100000000000000000000");
    }

    #[test]
    fn ln2_value() {
        assert_in_bracket(&ln2(96), "693147180559945309417", "1000000000000000000000");
    }

    #[test]
    fn refinement_monotonic() {
        for s in ["7/5", "355/113", "1/1000", "123456789/1024"] {
            let x = q(s);
            let coarse = Iv::from_rat(&x, 64).ln(64).unwrap();
            let fine = Iv::from_rat(&x, 128).ln(128).unwrap();
            assert!(coarse.contains(&fine), "ln refinement at {s}");
            let ce = Iv::from_rat(&x, 64).exp(64);
            let fe = Iv::from_rat(&x, 128).exp(128);
            assert!(ce.contains(&fe), "exp refinement at {s}");
        }
    }

    #[test]
    fn pow_matches_repeated_mul(){
        let p = 128;
        let a = Iv::from_rat(&q("7/3"), p);
        let direct = a.mul(&a, p).mul(&a, p);
        let via_pow = a.pow(&Iv::from_int(3), p).unwrap();
        // both contain the exact value and intersect
        assert!(direct.contains_rat(&q("343/27")));
        assert!(via_pow.contains_rat(&q("343/27")));
    }

    #[test]
    fn decimal_rendering() {
        let v = BigFloat::from_rat(&q("3598695/1000"), 96, Dir::Down);
        let s = v.to_decimal(8, Dir::Down);
        assert!(s.starts_with("3.5986949") || s.starts_with("3.5986950"), "{s}");
        assert!(s.ends_with("e3"), "{s}");
    }
}
