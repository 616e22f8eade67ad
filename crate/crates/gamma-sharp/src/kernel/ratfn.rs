//! Rational functions over Q in normal form.

use super::poly::Poly;
use super::rational::Rat;
use num_traits::Signed;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RatFnError {
    #[error("zero denominator polynomial")]
    ZeroDenominator,
    #[error("pole at evaluation point")]
    Pole,
    #[error("derivative order {0} not supported")]
    BadOrder(u32),
}

/// num/den with gcd(num, den) = 1 and positive leading denominator
/// coefficient, so equality is representational equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self, RatFnError> {
        if den.is_zero() {
            return Err(RatFnError::ZeroDenominator);
        }
        let mut r = RatFn { num, den };
        r.normalize();
        Ok(r)
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatFn::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        RatFn::from_poly(Poly::zero())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() > 0 {
            self.num = self.num.div_rem(&g).0;
            self.den = self.den.div_rem(&g).0;
        }
        // scale so den has leading coefficient +1 times its content sign;
        // we go further and make den monic, which fixes a unique representative
        let lead = self.den.leading();
        if !lead.abs().eq(&num_traits::One::one()) || lead.is_negative() {
            self.num = self.num.scale(&lead.recip());
            self.den = self.den.scale(&lead.recip());
        }
    }

    pub fn add(&self, rhs: &RatFn) -> RatFn {
        RatFn::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
        .expect("nonzero denominators")
    }

    pub fn sub(&self, rhs: &RatFn) -> RatFn {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> RatFn {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &RatFn) -> RatFn {
        RatFn::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("nonzero denominators")
    }

    pub fn div(&self, rhs: &RatFn) -> Result<RatFn, RatFnError> {
        if rhs.is_zero() {
            return Err(RatFnError::ZeroDenominator);
        }
        RatFn::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    pub fn recip(&self) -> Result<RatFn, RatFnError> {
        if self.is_zero() {
            return Err(RatFnError::ZeroDenominator);
        }
        RatFn::new(self.den.clone(), self.num.clone())
    }

    /// R(x + a), exact.
    pub fn taylor_shift(&self, a: &Rat) -> RatFn {
        RatFn::new(self.num.taylor_shift(a), self.den.taylor_shift(a)).expect("den stays nonzero")
    }

    /// Exact derivative of the given order (1 or 2) via the quotient rule.
    pub fn derivative(&self, order: u32) -> Result<RatFn, RatFnError> {
        match order {
            1 => {
                let n = self
                    .num
                    .derivative()
                    .mul(&self.den)
                    .sub(&self.num.mul(&self.den.derivative()));
                RatFn::new(n, self.den.mul(&self.den))
            }
            2 => self.derivative(1)?.derivative(1),
            o => Err(RatFnError::BadOrder(o)),
        }
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat, RatFnError> {
        let d = self.den.eval(x);
        if num_traits::Zero::is_zero(&d) {
            return Err(RatFnError::Pole);
        }
        Ok(self.num.eval(x) / d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::rat;

    fn rf(num: &[i64], den: &[i64]) -> RatFn {
        RatFn::new(
            Poly::new(num.iter().map(|&n| rat(n, 1)).collect()),
            Poly::new(den.iter().map(|&n| rat(n, 1)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn derivative_of_reciprocal() {
        // d/dx 1/x = -1/x^2
        let r = rf(&[1], &[0, 1]);
        assert_eq!(r.derivative(1).unwrap(), rf(&[-1], &[0, 0, 1]));
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dx x/(x+1) = 1/(x+1)^2
        let r = rf(&[0, 1], &[1, 1]);
        assert_eq!(r.derivative(1).unwrap(), rf(&[1], &[1, 2, 1]));
    }

    #[test]
    fn derivative_of_constant() {
        let r = RatFn::constant(rat(7, 3));
        assert!(r.derivative(1).unwrap().is_zero());
    }

    #[test]
    fn normal_form_cancels() {
        // (x^2-1)/(x+1) == x-1
        let r = rf(&[-1, 0, 1], &[1, 1]);
        assert_eq!(r, rf(&[-1, 1], &[1]));
    }

    #[test]
    fn third_order_rejected() {
        assert_eq!(rf(&[1], &[0, 1]).derivative(3), Err(RatFnError::BadOrder(3)));
    }
}
