//! Dense univariate polynomials in x over exact rationals.
//!
//! Coefficients are stored lowest degree first with a nonzero trailing
//! coefficient; the zero polynomial is the empty list and has no degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{rat_int, Rat};

/// Polynomial in x with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Polynomial from a dense coefficient list; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Poly {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    /// The monomial c·x^k.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The falling factorial (x)_n = x(x-1)...(x-n+1), with (x)_0 = 1.
    pub fn falling_factorial(n: usize) -> Self {
        let mut acc = Poly::one();
        for i in 0..n {
            acc = &acc * &Poly::from_coeffs(vec![rat_int(-(i as i64)), Rat::one()]);
        }
        acc
    }

    /// Highest nonzero degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of x^k; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficients lowest degree first (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficientwise derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = (1..self.coeffs.len())
            .map(|k| &self.coeffs[k] * rat_int(k as i64))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// k-th derivative.
    pub fn derivative_n(&self, k: usize) -> Poly {
        let mut acc = self.clone();
        for _ in 0..k {
            if acc.is_zero() {
                break;
            }
            acc = acc.derivative();
        }
        acc
    }

    /// Substitution p(x + c), expanded exactly.
    pub fn shift(&self, c: &Rat) -> Poly {
        let mut acc = Poly::zero();
        let shifted_x = Poly::from_coeffs(vec![c.clone(), Rat::one()]);
        let mut pow = Poly::one();
        for coef in &self.coeffs {
            acc = &acc + &pow.scale(coef);
            pow = &pow * &shifted_x;
        }
        acc
    }

    /// Multiply by x.
    pub fn mul_x(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rat::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divide by x; errors when the constant term is nonzero.
    pub fn div_x(&self) -> Result<Poly> {
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotDivisibleByX);
        }
        Ok(Poly {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rat::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
            wrote = true;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use proptest::prelude::*;

    #[test]
    fn trailing_zeros_trimmed() {
        let p = Poly::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Poly::from_coeffs(vec![rat_int(0)]), Poly::zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(Poly::falling_factorial(0), Poly::one());
        assert_eq!(Poly::falling_factorial(1), Poly::x());
        // (x)_3 = x^3 - 3x^2 + 2x
        let p = Poly::falling_factorial(3);
        assert_eq!(
            p,
            Poly::from_coeffs(vec![rat_int(0), rat_int(2), rat_int(-3), rat_int(1)])
        );
        assert_eq!(p.eval(&rat_int(5)), rat_int(60));
    }

    #[test]
    fn shift_expansion() {
        // (x+1)^2 = x^2 + 2x + 1
        let sq = Poly::monomial(Rat::one(), 2);
        assert_eq!(
            sq.shift(&Rat::one()),
            Poly::from_coeffs(vec![rat_int(1), rat_int(2), rat_int(1)])
        );
        // shifting by 0 is the identity
        assert_eq!(sq.shift(&Rat::zero()), sq);
    }

    #[test]
    fn div_x_contract() {
        let p = Poly::from_coeffs(vec![rat_int(0), rat_int(2), rat_int(5)]);
        assert_eq!(
            p.div_x().unwrap(),
            Poly::from_coeffs(vec![rat_int(2), rat_int(5)])
        );
        assert_eq!(p.div_x().unwrap().mul_x(), p);
        let q = Poly::one();
        assert_eq!(q.div_x(), Err(Error::NotDivisibleByX));
        assert_eq!(Poly::zero().div_x().unwrap(), Poly::zero());
    }

    prop_compose! {
        fn arb_poly()(v in prop::collection::vec((-20i64..=20, 1i64..=10), 0..=8)) -> Poly {
            Poly::from_coeffs(v.into_iter().map(|(n, d)| rat(n, d)).collect())
        }
    }

    proptest! {
        #[test]
        fn eval_is_ring_homomorphism(p in arb_poly(), q in arb_poly(), x in -10i64..=10) {
            let x = rat_int(x);
            prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
            prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        }

        #[test]
        fn shift_composes(p in arb_poly(), a in -8i64..=8, b in -8i64..=8) {
            let (a, b) = (rat_int(a), rat_int(b));
            let ab = &a + &b;
            prop_assert_eq!(p.shift(&a).shift(&b), p.shift(&ab));
        }
    }
}
