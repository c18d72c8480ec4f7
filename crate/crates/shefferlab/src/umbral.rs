//! Umbral calculus: series acting on polynomials, and Sheffer sequences.
//!
//! A power series f(t) acts on polynomials two ways:
//!
//! - as a linear functional, `<f | x^n> = n! [t^n] f` extended linearly
//!   ([`functional_apply`]);
//! - as an operator, `f(t) p(x) = sum_k [t^k] f · p^(k)(x)`, so t is d/dx
//!   and e^{yt} is the shift p(x) -> p(x+y) ([`operator_apply`]).
//!
//! A [`ShefferPair`] (g, f) with g invertible and f delta determines the
//! unique sequence s_n with `<g f^k | s_n> = n! δ_{n,k}`; [`ShefferPair::sequence`]
//! extracts it from the conjugate representation, [`ShefferPair::recurrence_step`]
//! climbs it one degree at a time, and [`connection_constants`] expands one
//! sequence in another's basis.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{factorial_rat, Rat};
use crate::series::Series;

/// A linear functional on polynomials, represented by its series: the
/// action is `<f | x^n> = n! [t^n] f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFunctional {
    series: Series,
}

impl LinearFunctional {
    pub fn new(series: Series) -> Self {
        LinearFunctional { series }
    }

    pub fn series(&self) -> &Series {
        &self.series
    }

    /// Apply to a polynomial; defined only up to the series truncation.
    pub fn apply(&self, p: &Poly) -> Result<Rat> {
        functional_apply(&self.series, p)
    }
}

impl From<Series> for LinearFunctional {
    fn from(series: Series) -> Self {
        LinearFunctional::new(series)
    }
}

/// `<f | p> = sum_n n! [t^n] f · [x^n] p`. Errors when p has terms beyond
/// the truncation order of f, where the pairing is unknown.
pub fn functional_apply(f: &Series, p: &Poly) -> Result<Rat> {
    let deg = match p.degree() {
        None => return Ok(Rat::zero()),
        Some(d) => d,
    };
    if deg > f.order() {
        return Err(Error::TruncationExhausted(format!(
            "functional of order {} applied to degree {deg}",
            f.order()
        )));
    }
    let mut acc = Rat::zero();
    for (n, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() && !f.coeff(n).is_zero() {
            acc += factorial_rat(n) * f.coeff(n) * c;
        }
    }
    Ok(acc)
}

/// `f(t) p(x) = sum_k [t^k] f · p^(k)(x)`. Terms of f beyond deg(p)
/// annihilate p, so the sum stops at min(order(f), deg(p)); callers keep
/// the series order at least deg(p) when the full action is needed.
pub fn operator_apply(f: &Series, p: &Poly) -> Poly {
    let deg = match p.degree() {
        None => return Poly::zero(),
        Some(d) => d,
    };
    let mut acc = Poly::zero();
    let mut dk = p.clone();
    for k in 0..=deg.min(f.order()) {
        if !f.coeff(k).is_zero() {
            acc = &acc + &dk.scale(f.coeff(k));
        }
        dk = dk.derivative();
    }
    acc
}

/// A pair (g, f) with g invertible and f delta, both held at a shared
/// truncation order (the smaller of the two inputs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShefferPair {
    g: Series,
    f: Series,
}

impl ShefferPair {
    /// Validates the defining conditions: g(0) != 0 and valuation(f) = 1.
    pub fn new(g: Series, f: Series) -> Result<Self> {
        if !g.is_invertible() {
            return Err(Error::NotInvertible);
        }
        if !f.is_delta() {
            return Err(Error::ReversionRequiresDelta(format!(
                "Sheffer pair needs a delta f, found valuation {:?}",
                f.valuation()
            )));
        }
        let order = g.order().min(f.order());
        Ok(ShefferPair {
            g: g.truncate(order),
            f: f.truncate(order),
        })
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    /// Shared truncation order of the pair.
    pub fn order(&self) -> usize {
        self.g.order()
    }

    /// s_0..s_{n_max} from the conjugate representation
    /// `[x^j] s_n = (n!/j!) [t^n] (1/g(f̄)) f̄^j`.
    pub fn sequence(&self, n_max: usize) -> Result<Vec<Poly>> {
        if self.order() < n_max {
            return Err(Error::TruncationExhausted(format!(
                "pair order {} cannot produce s_{n_max}",
                self.order()
            )));
        }
        let fbar = self.f.reversion()?;
        let base = self.g.compose(&fbar)?.invert()?;
        // acc runs through (1/g(f̄)) f̄^j; valuation(acc) >= j keeps the
        // extraction triangular.
        let mut acc = base;
        let mut rows: Vec<Vec<Rat>> = vec![Vec::new(); n_max + 1];
        for j in 0..=n_max {
            for (n, row) in rows.iter_mut().enumerate().skip(j) {
                row.push(factorial_rat(n) / factorial_rat(j) * acc.coeff(n));
            }
            if j < n_max {
                acc = &acc * &fbar;
            }
        }
        let polys: Vec<Poly> = rows.into_iter().map(Poly::from_coeffs).collect();
        for (n, s) in polys.iter().enumerate() {
            debug_assert_eq!(s.degree(), Some(n), "s_{n} must have degree {n}");
        }
        Ok(polys)
    }

    /// One step of the recurrence `s_{n+1} = (x - g'/g) (1/f') s_n`, where
    /// the series act as operators and x acts by multiplication. Needs two
    /// spare orders: the derivatives drop one, and the result has degree n+1.
    pub fn recurrence_step(&self, s_n: &Poly, n: usize) -> Result<Poly> {
        if self.order() < n + 2 {
            return Err(Error::TruncationExhausted(format!(
                "pair order {} too small for step {n} -> {}",
                self.order(),
                n + 1
            )));
        }
        let reduced = self.order() - 1;
        let log_deriv_g = &self.g.derive()? * &self.g.invert()?.truncate(reduced);
        let inv_f_deriv = self.f.derive()?.invert()?;
        let u = operator_apply(&inv_f_deriv, s_n);
        Ok(&u.mul_x() - &operator_apply(&log_deriv_g, &u))
    }

    /// The associated sequence p_n = g(t) s_n(x), Sheffer for (1, f).
    pub fn associated(&self, n_max: usize) -> Result<Vec<Poly>> {
        Ok(self
            .sequence(n_max)?
            .iter()
            .map(|s| operator_apply(&self.g, s))
            .collect())
    }
}

/// Connection constants C with `s_n = sum_m C[n][m] r_m`, where s is the
/// source sequence and r the target:
/// `C[n][m] = (1/m!) < h(f̄)/g(f̄) · l(f̄)^m | x^n >`
/// for source (g, f) and target (h, l). Stored dense lower-triangular with
/// explicit zeros above the diagonal.
pub fn connection_constants(
    source: &ShefferPair,
    target: &ShefferPair,
    n_max: usize,
) -> Result<Vec<Vec<Rat>>> {
    if source.order() < n_max || target.order() < n_max {
        return Err(Error::TruncationExhausted(format!(
            "pair orders {} and {} cannot connect degree {n_max}",
            source.order(),
            target.order()
        )));
    }
    let order = source.order().min(target.order());
    let fbar = source.f.reversion()?;
    let base = &target.g.truncate(order).compose(&fbar)? * &source.g.compose(&fbar)?.invert()?;
    let l_comp = target.f.truncate(order).compose(&fbar)?;
    let mut acc = base;
    let mut table = vec![vec![Rat::zero(); n_max + 1]; n_max + 1];
    for m in 0..=n_max {
        for (n, row) in table.iter_mut().enumerate().skip(m) {
            row[m] = factorial_rat(n) / factorial_rat(m) * acc.coeff(n);
        }
        if m < n_max {
            acc = &acc * &l_comp;
        }
    }
    Ok(table)
}

/// Transfer formula between associated sequences: for p_n Sheffer for
/// (1, f) and n >= 1, `q_n = x (f/g)^n x^{-1} p_n` is Sheffer for (1, g).
pub fn transfer_formula(f: &Series, g: &Series, n: usize, p_n: &Poly) -> Result<Poly> {
    if f.valuation() != Some(1) || g.valuation() != Some(1) {
        return Err(Error::ValuationMismatch(format!(
            "transfer needs two delta series, found valuations {:?} and {:?}",
            f.valuation(),
            g.valuation()
        )));
    }
    let ratio = f.shift_divide(g, 1)?;
    let u = p_n.div_x()?;
    Ok(operator_apply(&ratio.powi(n), &u).mul_x())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use num_traits::One;

    fn exp_minus_one(order: usize) -> Series {
        &Series::exp_scaled(&Rat::one(), order) - &Series::one(order)
    }

    /// (e^{at} - 1)/t
    fn exp_factor(a: i64, order: usize) -> Series {
        let num = &Series::exp_scaled(&rat_int(a), order + 1) - &Series::one(order + 1);
        num.shift_divide(&Series::t(order + 1), 1).unwrap()
    }

    /// t/(e^t - 1), the Bernoulli number generating function.
    fn bernoulli_gf(order: usize) -> Series {
        Series::t(order + 1)
            .shift_divide(&exp_minus_one(order + 1), 1)
            .unwrap()
    }

    fn log1p(order: usize) -> Series {
        let one_plus_t = Series::linear(
            &Rat::one(),
            &Series::one(order),
            &Rat::one(),
            &Series::t(order),
        );
        one_plus_t.log().unwrap()
    }

    #[test]
    fn functional_kronecker() {
        let t2 = Series::monomial(Rat::one(), 2, 4);
        let x2 = Poly::monomial(Rat::one(), 2);
        assert_eq!(functional_apply(&t2, &x2).unwrap(), rat_int(2));
        assert_eq!(functional_apply(&t2, &Poly::x()).unwrap(), rat_int(0));
        let wrapped = LinearFunctional::from(t2);
        assert_eq!(wrapped.apply(&x2).unwrap(), rat_int(2));
        assert_eq!(wrapped.series().order(), 4);
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Series>();
        assert_send_sync::<Poly>();
        assert_send_sync::<ShefferPair>();
        assert_send_sync::<LinearFunctional>();
    }

    #[test]
    fn functional_exponential_evaluates() {
        // <e^{yt} | x^n> = y^n
        let f = Series::exp_scaled(&rat_int(3), 6);
        let x2 = Poly::monomial(Rat::one(), 2);
        assert_eq!(functional_apply(&f, &x2).unwrap(), rat_int(9));
    }

    #[test]
    fn functional_log_cubed() {
        // <ln(1+t) | x^3> = (-1)^2 · 2! = 2
        let x3 = Poly::monomial(Rat::one(), 3);
        assert_eq!(functional_apply(&log1p(5), &x3).unwrap(), rat_int(2));
    }

    #[test]
    fn functional_truncation_guard() {
        let f = Series::one(2);
        let x3 = Poly::monomial(Rat::one(), 3);
        assert!(matches!(
            functional_apply(&f, &x3),
            Err(Error::TruncationExhausted(_))
        ));
        assert_eq!(
            functional_apply(&Series::one(0), &Poly::zero()).unwrap(),
            Rat::zero()
        );
    }

    #[test]
    fn operator_shift_and_derivative() {
        let x2 = Poly::monomial(Rat::one(), 2);
        let shifted = operator_apply(&Series::exp_scaled(&Rat::one(), 6), &x2);
        assert_eq!(shifted, x2.shift(&Rat::one()));
        let x3 = Poly::monomial(Rat::one(), 3);
        assert_eq!(
            operator_apply(&Series::t(4), &x3),
            Poly::monomial(rat_int(3), 2)
        );
    }

    #[test]
    fn operator_bernoulli_on_x() {
        // (t/(e^t-1)) x = B_1(x) = x - 1/2
        let p = operator_apply(&bernoulli_gf(6), &Poly::x());
        assert_eq!(p, Poly::from_coeffs(vec![rat(-1, 2), Rat::one()]));
    }

    #[test]
    fn sequence_falling_factorials() {
        let pair = ShefferPair::new(Series::one(8), exp_minus_one(8)).unwrap();
        let seq = pair.sequence(3).unwrap();
        assert_eq!(seq[3], Poly::falling_factorial(3));
        assert_eq!(seq[0], Poly::one());
    }

    #[test]
    fn sequence_bernoulli_degree_one() {
        let pair = ShefferPair::new(exp_factor(1, 8), Series::t(8)).unwrap();
        let seq = pair.sequence(1).unwrap();
        assert_eq!(seq[1], Poly::from_coeffs(vec![rat(-1, 2), Rat::one()]));
    }

    #[test]
    fn sequence_daehee_constant_term() {
        // first-kind pair for a = (2): ((e^{2t}-1)/t, e^t - 1); s_0 = 1/2
        let pair = ShefferPair::new(exp_factor(2, 8), exp_minus_one(8)).unwrap();
        let seq = pair.sequence(0).unwrap();
        assert_eq!(seq[0], Poly::constant(rat(1, 2)));
    }

    #[test]
    fn sequence_order_guard() {
        let pair = ShefferPair::new(Series::one(3), exp_minus_one(3)).unwrap();
        assert!(matches!(
            pair.sequence(4),
            Err(Error::TruncationExhausted(_))
        ));
    }

    #[test]
    fn pair_validation() {
        assert!(matches!(
            ShefferPair::new(Series::t(4), Series::t(4)),
            Err(Error::NotInvertible)
        ));
        assert!(matches!(
            ShefferPair::new(Series::one(4), Series::one(4)),
            Err(Error::ReversionRequiresDelta(_))
        ));
    }

    #[test]
    fn recurrence_matches_known_steps() {
        let pair = ShefferPair::new(Series::one(8), exp_minus_one(8)).unwrap();
        assert_eq!(pair.recurrence_step(&Poly::one(), 0).unwrap(), Poly::x());

        let daehee = ShefferPair::new(exp_factor(2, 8), exp_minus_one(8)).unwrap();
        let s1 = daehee
            .recurrence_step(&Poly::constant(rat(1, 2)), 0)
            .unwrap();
        assert_eq!(s1, Poly::from_coeffs(vec![rat(-1, 2), rat(1, 2)]));

        let bernoulli = ShefferPair::new(exp_factor(1, 8), Series::t(8)).unwrap();
        let s2 = bernoulli
            .recurrence_step(&Poly::from_coeffs(vec![rat(-1, 2), Rat::one()]), 1)
            .unwrap();
        assert_eq!(
            s2,
            Poly::from_coeffs(vec![rat(1, 6), rat_int(-1), rat_int(1)])
        );
    }

    #[test]
    fn associated_sequences() {
        // any pair with f = e^t - 1 has associated sequence (x)_n
        let daehee = ShefferPair::new(exp_factor(2, 8), exp_minus_one(8)).unwrap();
        let assoc = daehee.associated(4).unwrap();
        for (n, p) in assoc.iter().enumerate() {
            assert_eq!(p, &Poly::falling_factorial(n), "n = {n}");
        }
        // g = 1 leaves the sequence unchanged
        let plain = ShefferPair::new(Series::one(8), exp_minus_one(8)).unwrap();
        assert_eq!(plain.associated(4).unwrap(), plain.sequence(4).unwrap());
        // the Bernoulli pair has associated sequence x^n
        let bernoulli = ShefferPair::new(exp_factor(1, 8), Series::t(8)).unwrap();
        for (n, p) in bernoulli.associated(4).unwrap().iter().enumerate() {
            assert_eq!(p, &Poly::monomial(Rat::one(), n), "n = {n}");
        }
    }

    #[test]
    fn connection_identity_when_pairs_match() {
        let pair = ShefferPair::new(exp_factor(1, 8), Series::t(8)).unwrap();
        let c = connection_constants(&pair, &pair, 5).unwrap();
        for (n, row) in c.iter().enumerate() {
            for (m, v) in row.iter().enumerate() {
                let expect = if n == m { Rat::one() } else { Rat::zero() };
                assert_eq!(v, &expect, "C[{n}][{m}]");
            }
        }
    }

    #[test]
    fn connection_reconstructs_source() {
        // expand Bernoulli polynomials in the monomial basis and rebuild
        let bernoulli = ShefferPair::new(exp_factor(1, 8), Series::t(8)).unwrap();
        let monomials = ShefferPair::new(Series::one(8), Series::t(8)).unwrap();
        let c = connection_constants(&bernoulli, &monomials, 6).unwrap();
        let s = bernoulli.sequence(6).unwrap();
        let r = monomials.sequence(6).unwrap();
        for n in 0..=6 {
            let mut acc = Poly::zero();
            for (m, rm) in r.iter().enumerate().take(n + 1) {
                acc = &acc + &rm.scale(&c[n][m]);
            }
            assert_eq!(acc, s[n], "n = {n}");
        }
    }

    #[test]
    fn transfer_from_monomials_to_falling_factorials() {
        // p_n = x^n is associated to f = t; target g = e^t - 1 gives (x)_n
        let f = Series::t(9);
        let g = exp_minus_one(9);
        for n in 1..=4usize {
            let q = transfer_formula(&f, &g, n, &Poly::monomial(Rat::one(), n)).unwrap();
            assert_eq!(q, Poly::falling_factorial(n), "n = {n}");
        }
    }

    #[test]
    fn transfer_guards() {
        let f = Series::t(6);
        let g = exp_minus_one(6);
        assert!(matches!(
            transfer_formula(&f, &g, 1, &Poly::one()),
            Err(Error::NotDivisibleByX)
        ));
        let t2 = Series::monomial(Rat::one(), 2, 6);
        assert!(matches!(
            transfer_formula(&t2, &g, 1, &Poly::x()),
            Err(Error::ValuationMismatch(_))
        ));
    }

    #[test]
    fn duality_reconstruction() {
        // p(x) = sum_k <t^k | p> x^k / k!
        let p = Poly::from_coeffs(vec![rat(3, 7), rat(-2, 5), Rat::zero(), rat(11, 2)]);
        let deg = p.degree().unwrap();
        let mut rebuilt = Poly::zero();
        for k in 0..=deg {
            let tk = Series::monomial(Rat::one(), k, deg);
            let pairing = functional_apply(&tk, &p).unwrap();
            rebuilt = &rebuilt + &Poly::monomial(pairing / factorial_rat(k), k);
        }
        assert_eq!(rebuilt, p);
    }
}
