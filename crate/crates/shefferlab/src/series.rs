//! Truncated formal power series over exact rationals.
//!
//! A `Series` stores the coefficients of t^0..t^N densely; `N` is the
//! truncation order (inclusive) and is tracked explicitly. Binary operations
//! truncate to the minimum of the two input orders and never silently
//! re-extend a series.
//!
//! Invariants:
//! - `coeffs.len() == order + 1` (a series always knows at least t^0)
//! - valuation is derived on demand, never stored
//! - the zero series has valuation "infinite", reported as `None`

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{rat_int, Rat};

/// Formal power series truncated at an explicit order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    /// Series from a dense coefficient list (`coeffs[k]` is the t^k term).
    /// Panics on an empty list.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the t^0 coefficient"
        );
        Series { coeffs }
    }

    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        Series::constant(Rat::one(), order)
    }

    /// A constant series.
    pub fn constant(c: Rat, order: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = c;
        Series { coeffs }
    }

    /// The identity series t. Panics when `order == 0`.
    pub fn t(order: usize) -> Self {
        Series::monomial(Rat::one(), 1, order)
    }

    /// The monomial c·t^k. Panics when `k > order`.
    pub fn monomial(c: Rat, k: usize, order: usize) -> Self {
        assert!(k <= order, "monomial degree {k} exceeds order {order}");
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[k] = c;
        Series { coeffs }
    }

    /// e^{a·t} at the given order.
    pub fn exp_scaled(a: &Rat, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut acc = Rat::one();
        coeffs.push(acc.clone());
        for k in 1..=order {
            acc = acc * a / rat_int(k as i64);
            coeffs.push(acc.clone());
        }
        Series { coeffs }
    }

    /// The truncation order (inclusive highest known degree).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of t^k. Panics beyond the truncation order, where the
    /// coefficient is unknown rather than zero.
    pub fn coeff(&self, k: usize) -> &Rat {
        assert!(
            k < self.coeffs.len(),
            "coefficient of t^{k} unknown: series truncated at order {}",
            self.order()
        );
        &self.coeffs[k]
    }

    /// All coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient; `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Invertible means a nonzero constant term.
    pub fn is_invertible(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    /// Delta means valuation exactly 1.
    pub fn is_delta(&self) -> bool {
        self.valuation() == Some(1)
    }

    /// Reduce to a smaller order. Panics on an attempt to extend.
    pub fn truncate(&self, order: usize) -> Series {
        assert!(
            order <= self.order(),
            "cannot extend a series from order {} to {order}",
            self.order()
        );
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// αf + βg truncated to the smaller order.
    pub fn linear(alpha: &Rat, f: &Series, beta: &Rat, g: &Series) -> Series {
        let order = f.order().min(g.order());
        let coeffs = (0..=order)
            .map(|k| alpha * &f.coeffs[k] + beta * &g.coeffs[k])
            .collect();
        Series { coeffs }
    }

    /// Multiply every coefficient by a scalar.
    pub fn scale(&self, c: &Rat) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Termwise derivative; drops one order. Errors on an order-0 input,
    /// which has no degrees of freedom left.
    pub fn derive(&self) -> Result<Series> {
        if self.order() == 0 {
            return Err(Error::TruncationExhausted(
                "derivative of an order-0 series".into(),
            ));
        }
        let coeffs = (1..=self.order())
            .map(|k| &self.coeffs[k] * rat_int(k as i64))
            .collect();
        Ok(Series { coeffs })
    }

    /// Multiplicative inverse h with f·h = 1, by triangular back-substitution.
    /// Errors when the constant term is zero.
    pub fn invert(&self) -> Result<Series> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NotInvertible);
        }
        let n = self.order();
        let inv0 = Rat::one() / &self.coeffs[0];
        let mut out = vec![Rat::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = Rat::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() && !out[k - i].is_zero() {
                    acc += &self.coeffs[i] * &out[k - i];
                }
            }
            out[k] = -acc * &inv0;
        }
        Ok(Series { coeffs: out })
    }

    /// Exact division f/g where the numerator has valuation >= k and the
    /// denominator has valuation exactly k. Both are shifted down by t^k and
    /// the quotient is formed against the now-invertible denominator; the
    /// result order is min(order(f), order(g)) - k.
    pub fn shift_divide(&self, g: &Series, k: usize) -> Result<Series> {
        if g.valuation() != Some(k) {
            return Err(Error::ValuationMismatch(format!(
                "denominator valuation {:?}, expected {k}",
                g.valuation()
            )));
        }
        if let Some(v) = self.valuation() {
            if v < k {
                return Err(Error::ValuationMismatch(format!(
                    "numerator valuation {v} below shift {k}"
                )));
            }
        }
        let min_order = self.order().min(g.order());
        if min_order < k {
            return Err(Error::TruncationExhausted(format!(
                "shift by {k} leaves no terms at order {min_order}"
            )));
        }
        let target = min_order - k;
        let num = Series {
            coeffs: self.coeffs[k..].to_vec(),
        };
        let den = Series {
            coeffs: g.coeffs[k..].to_vec(),
        };
        Ok(&num.truncate(target) * &den.invert()?)
    }

    /// Composition f(g(t)) by Horner evaluation over the series ring.
    /// The inner series must be delta (or zero); the result is truncated to
    /// the smaller of the two orders.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if let Some(v) = inner.valuation() {
            if v == 0 {
                return Err(Error::CompositionRequiresDelta);
            }
        }
        let target = self.order().min(inner.order());
        let g = inner.truncate(target);
        let mut acc = Series::constant(self.coeffs[target].clone(), target);
        for k in (0..target).rev() {
            acc = &acc * &g;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse of a delta series, solved degree by degree.
    ///
    /// Writing b for the inverse, the t^n coefficient of f(b(t)) involves
    /// b_n only through the linear term f_1·b_n, because `[t^n] b^k` with
    /// k >= 2 uses exponents summing to n over parts >= 1. The method keeps
    /// the table `pow[k][n] = [t^n] b^k` and back-substitutes
    /// `b_n = -(sum_{k=2}^{n} f_k · pow[k][n]) / f_1`.
    #[allow(clippy::needless_range_loop)] // triangular DP reads pow[k-1] while filling pow[k]
    pub fn reversion(&self) -> Result<Series> {
        if !self.is_delta() {
            return Err(Error::ReversionRequiresDelta(format!(
                "valuation {:?}",
                self.valuation()
            )));
        }
        let n_max = self.order();
        let inv_f1 = Rat::one() / &self.coeffs[1];
        let mut b = vec![Rat::zero(); n_max + 1];
        // pow[k][n] = [t^n] b^k, filled for n = 1..=n_max in increasing n.
        let mut pow = vec![vec![Rat::zero(); n_max + 1]; n_max + 1];
        b[1] = inv_f1.clone();
        if n_max >= 1 {
            pow[1][1] = b[1].clone();
        }
        for n in 2..=n_max {
            for k in 2..=n {
                let mut acc = Rat::zero();
                for i in 1..=(n - k + 1) {
                    if !b[i].is_zero() && !pow[k - 1][n - i].is_zero() {
                        acc += &b[i] * &pow[k - 1][n - i];
                    }
                }
                pow[k][n] = acc;
            }
            let mut rhs = Rat::zero();
            for k in 2..=n {
                if !self.coeffs[k].is_zero() && !pow[k][n].is_zero() {
                    rhs += &self.coeffs[k] * &pow[k][n];
                }
            }
            b[n] = -rhs * &inv_f1;
            pow[1][n] = b[n].clone();
        }
        Ok(Series { coeffs: b })
    }

    /// Formal exponential; requires a zero constant term. Order preserved.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm(format!(
                "exp needs constant term 0, found {}",
                self.coeffs[0]
            )));
        }
        let n = self.order();
        let mut out = vec![Rat::zero(); n + 1];
        out[0] = Rat::one();
        // g' = f'·g termwise: n·g_n = sum_{k=1}^{n} k·f_k·g_{n-k}
        for m in 1..=n {
            let mut acc = Rat::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() && !out[m - k].is_zero() {
                    acc += &self.coeffs[k] * rat_int(k as i64) * &out[m - k];
                }
            }
            out[m] = acc / rat_int(m as i64);
        }
        Ok(Series { coeffs: out })
    }

    /// Formal logarithm; requires constant term 1. Order preserved.
    pub fn log(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm(format!(
                "log needs constant term 1, found {}",
                self.coeffs[0]
            )));
        }
        let n = self.order();
        if n == 0 {
            return Ok(Series::zero(0));
        }
        // (log f)' = f'/f, then integrate termwise.
        let h = &self.derive()? * &self.invert()?.truncate(n - 1);
        let mut out = vec![Rat::zero(); n + 1];
        for (k, slot) in out.iter_mut().enumerate().skip(1) {
            *slot = &h.coeffs[k - 1] / rat_int(k as i64);
        }
        Ok(Series { coeffs: out })
    }

    /// Formal power f^a = exp(a·log f) for rational a; requires constant
    /// term 1. Order preserved.
    pub fn pow(&self, a: &Rat) -> Result<Series> {
        Ok(self
            .log()?
            .scale(a)
            .exp()
            .expect("a·log f has zero constant term"))
    }

    /// Integer power by repeated truncated multiplication. Exact for any
    /// constant term, including non-invertible series.
    pub fn powi(&self, k: usize) -> Series {
        let mut acc = Series::one(self.order());
        let mut base = self.clone();
        let mut k = k;
        loop {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = &base * &base;
        }
        acc
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        Series::linear(&Rat::one(), self, &Rat::one(), rhs)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        Series::linear(&Rat::one(), self, &-Rat::one(), rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.scale(&-Rat::one())
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}
