//! Dense univariate polynomials over the rationals.

use super::rational::{rat_int, Rat};
use num_traits::{One, Signed, Zero};

/// Polynomial in a single variable with exact rational coefficients.
/// `coeffs[i]` is the coefficient of `x^i`; the leading coefficient is
/// nonzero unless the polynomial is zero. The zero polynomial has degree -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(out)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// q(t) = p(t + a), computed by repeated synthetic division; exact.
    pub fn taylor_shift(&self, a: &Rat) -> Poly {
        if self.is_zero() || a.is_zero() {
            return self.clone();
        }
        // Horner-style: process coefficients from the top, substituting x -> t + a.
        let mut out = Poly::zero();
        let shift = Poly::new(vec![a.clone(), Rat::one()]); // t + a
        for c in self.coeffs.iter().rev() {
            out = out.mul(&shift).add(&Poly::constant(c.clone()));
        }
        out
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c * rat_int(i as i64));
        }
        Poly::new(out)
    }

    /// Exact division with remainder; rhs must be nonzero.
    pub fn div_rem(&self, rhs: &Poly) -> (Poly, Poly) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dr = rhs.coeffs.len() - 1;
        if rem.len() <= dr {
            return (Poly::zero(), self.clone());
        }
        let mut quo = vec![Rat::zero(); rem.len() - dr];
        let lead = rhs.coeffs[dr].clone();
        for i in (dr..rem.len()).rev() {
            let q = &rem[i] / &lead;
            if q.is_zero() {
                continue;
            }
            quo[i - dr] = q.clone();
            for j in 0..=dr {
                let t = &q * &rhs.coeffs[j];
                rem[i - dr + j] -= t;
            }
        }
        (Poly::new(quo), Poly::new(rem))
    }

    /// Monic gcd over Q via the Euclidean algorithm.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading();
        a.scale(&lead.recip())
    }

    /// True when every coefficient is >= 0 (resp. <= 0 with `nonneg=false`).
    pub fn coeffs_one_signed(&self, nonneg: bool) -> bool {
        self.coeffs.iter().all(|c| {
            if nonneg {
                !c.is_negative()
            } else {
                !c.is_positive()
            }
        })
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn zero_polynomial_degree() {
        assert_eq!(Poly::zero().degree(), -1);
        assert_eq!(Poly::new(vec![rat(0, 1)]).degree(), -1);
    }

    #[test]
    fn taylor_shift_square() {
        // (t+1)^2 = t^2 + 2t + 1
        let p = Poly::new(vec![rat(0, 1), rat(0, 1), rat(1, 1)]);
        let q = p.taylor_shift(&rat(1, 1));
        assert_eq!(q, Poly::new(vec![rat(1, 1), rat(2, 1), rat(1, 1)]));
    }

    #[test]
    fn taylor_shift_identity() {
        let p = Poly::x();
        assert_eq!(p.taylor_shift(&rat(0, 1)), p);
    }

    #[test]
    fn taylor_shift_kills_constant() {
        // 90x + 31 shifted by -31/90 gives 90t
        let p = Poly::new(vec![rat(31, 1), rat(90, 1)]);
        let q = p.taylor_shift(&rat(-31, 90));
        assert_eq!(q, Poly::new(vec![rat(0, 1), rat(90, 1)]));
    }

    #[test]
    fn div_rem_exact() {
        let a = Poly::new(vec![rat(-1, 1), rat(0, 1), rat(1, 1)]); // x^2-1
        let b = Poly::new(vec![rat(1, 1), rat(1, 1)]); // x+1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Poly::new(vec![rat(-1, 1), rat(1, 1)]));
        assert!(r.is_zero());
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-20i64..20, 1i64..8), 0..6)
            .prop_map(|v| Poly::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn shift_round_trip(p in arb_poly(), n in -9i64..9, d in 1i64..9) {
            let a = rat(n, d);
            let back = p.taylor_shift(&a).taylor_shift(&(-a.clone()));
            prop_assert_eq!(back, p);
        }

        #[test]
        fn shift_matches_eval(p in arb_poly(), n in -9i64..9, d in 1i64..9, t in -5i64..5) {
            let a = rat(n, d);
            let tv = rat(t, 1);
            let lhs = p.taylor_shift(&a).eval(&tv);
            let rhs = p.eval(&(&tv + &a));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
