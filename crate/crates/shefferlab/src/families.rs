//! Named number and polynomial families, defined by generating function.
//!
//! Every family is exposed three ways and the three agree term by term:
//! [`family_series`] is the t-generating function at x = 0 (so the n-th
//! family number is n!·[t^n]), [`family_numbers`] reads those numbers off,
//! and [`family_polynomials`] builds the symbolic-x sequence through the
//! family's Sheffer pair.
//!
//! Parameters follow the families' own constraints: every Barnes parameter
//! a_j is a nonzero rational (non-integers welcome), λ ≠ 1 for
//! Frobenius-Euler, and the orders r, s are positive integers.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{factorial_rat, Rat};
use crate::series::Series;
use crate::umbral::ShefferPair;

/// Closed enumeration of the supported families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    /// Daehee of the first kind with Barnes parameters a_1..a_r:
    /// ∏_j ln(1+t)/((1+t)^{a_j}-1) · (1+t)^x.
    DaeheeFirstBarnes,
    /// Daehee of the second kind: an extra (1+t)^{a_j} in each factor.
    DaeheeSecondBarnes,
    /// Order-r Daehee of the first kind: (ln(1+t)/t)^r (1+t)^x.
    DaeheeFirstOrderR,
    /// Order-r Daehee of the second kind: ((1+t)ln(1+t)/t)^r (1+t)^x.
    DaeheeSecondOrderR,
    /// Barnes' multiple Bernoulli: t^r/∏_j(e^{a_j t}-1) · e^{xt}.
    BarnesBernoulli,
    /// Ordinary Bernoulli numbers: t/(e^t-1).
    BernoulliNumber,
    /// Bernoulli polynomials of order s: (t/(e^t-1))^s e^{xt}.
    BernoulliPolyOrderS,
    /// Classical Cauchy numbers: t/ln(1+t).
    CauchyClassical,
    /// Cauchy numbers of the first kind of order s: (t/ln(1+t))^s.
    CauchyOrderS,
    /// Frobenius-Euler polynomials of order s: ((1-λ)/(e^t-λ))^s e^{xt}.
    FrobeniusEulerOrderS,
    /// Signed Stirling numbers of the first kind; as a series family the
    /// column index m is passed through the `s` parameter:
    /// (ln(1+t))^m/m! = Σ_n S_1(n,m) t^n/n!.
    Stirling1,
    /// Falling factorials (x)_n, Sheffer for (1, e^t-1).
    FallingFactorial,
}

/// Every family tag in declaration order.
pub const ALL_FAMILIES: [FamilyId; 12] = [
    FamilyId::DaeheeFirstBarnes,
    FamilyId::DaeheeSecondBarnes,
    FamilyId::DaeheeFirstOrderR,
    FamilyId::DaeheeSecondOrderR,
    FamilyId::BarnesBernoulli,
    FamilyId::BernoulliNumber,
    FamilyId::BernoulliPolyOrderS,
    FamilyId::CauchyClassical,
    FamilyId::CauchyOrderS,
    FamilyId::FrobeniusEulerOrderS,
    FamilyId::Stirling1,
    FamilyId::FallingFactorial,
];

impl FamilyId {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilyId::DaeheeFirstBarnes => "daehee_first_barnes",
            FamilyId::DaeheeSecondBarnes => "daehee_second_barnes",
            FamilyId::DaeheeFirstOrderR => "daehee_first_order_r",
            FamilyId::DaeheeSecondOrderR => "daehee_second_order_r",
            FamilyId::BarnesBernoulli => "barnes_bernoulli",
            FamilyId::BernoulliNumber => "bernoulli_number",
            FamilyId::BernoulliPolyOrderS => "bernoulli_poly_order_s",
            FamilyId::CauchyClassical => "cauchy_classical",
            FamilyId::CauchyOrderS => "cauchy_order_s",
            FamilyId::FrobeniusEulerOrderS => "frobenius_euler_order_s",
            FamilyId::Stirling1 => "stirling1",
            FamilyId::FallingFactorial => "falling_factorial",
        }
    }

    /// Number families have no polynomial form; `family_polynomials`
    /// rejects them.
    pub fn is_number_family(&self) -> bool {
        matches!(
            self,
            FamilyId::BernoulliNumber
                | FamilyId::CauchyClassical
                | FamilyId::CauchyOrderS
                | FamilyId::Stirling1
        )
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_FAMILIES
            .iter()
            .copied()
            .find(|id| id.tag() == s)
            .ok_or_else(|| Error::BadFamilyParams(format!("unknown family {s:?}")))
    }
}

/// Parameters for a family; each tag reads the fields it needs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FamilyParams {
    /// Barnes parameters a_1..a_r; order matters, repeats allowed.
    pub a: Vec<Rat>,
    /// Frobenius-Euler λ, any rational except 1.
    pub lambda: Option<Rat>,
    /// Order for higher-order families (and the column m for stirling1).
    pub s: Option<u32>,
    /// Order for the order-r Daehee families.
    pub r: Option<u32>,
}

impl FamilyParams {
    pub fn none() -> Self {
        FamilyParams::default()
    }

    pub fn barnes(a: Vec<Rat>) -> Self {
        FamilyParams {
            a,
            ..Default::default()
        }
    }

    pub fn order_r(r: u32) -> Self {
        FamilyParams {
            r: Some(r),
            ..Default::default()
        }
    }

    pub fn order_s(s: u32) -> Self {
        FamilyParams {
            s: Some(s),
            ..Default::default()
        }
    }

    pub fn frobenius(lambda: Rat, s: u32) -> Self {
        FamilyParams {
            lambda: Some(lambda),
            s: Some(s),
            ..Default::default()
        }
    }

    fn barnes_list(&self, tag: FamilyId) -> Result<&[Rat]> {
        if self.a.is_empty() {
            return Err(Error::BadFamilyParams(format!(
                "{tag} needs at least one parameter a_j"
            )));
        }
        if self.a.iter().any(|v| v.is_zero()) {
            return Err(Error::BadFamilyParams(format!(
                "{tag} needs every a_j nonzero"
            )));
        }
        Ok(&self.a)
    }

    fn order_r_value(&self, tag: FamilyId) -> Result<u32> {
        match self.r {
            Some(r) if r >= 1 => Ok(r),
            _ => Err(Error::BadFamilyParams(format!("{tag} needs r >= 1"))),
        }
    }

    fn order_s_value(&self, tag: FamilyId) -> Result<u32> {
        match self.s {
            Some(s) if s >= 1 => Ok(s),
            _ => Err(Error::BadFamilyParams(format!("{tag} needs s >= 1"))),
        }
    }

    fn lambda_value(&self, tag: FamilyId) -> Result<&Rat> {
        match &self.lambda {
            Some(l) if !l.is_one() => Ok(l),
            Some(_) => Err(Error::BadFamilyParams(format!("{tag} needs lambda != 1"))),
            None => Err(Error::BadFamilyParams(format!("{tag} needs lambda"))),
        }
    }
}

/// 1 + t at the given order.
pub fn one_plus_t(order: usize) -> Series {
    if order == 0 {
        return Series::one(0);
    }
    let mut coeffs = vec![Rat::zero(); order + 1];
    coeffs[0] = Rat::one();
    coeffs[1] = Rat::one();
    Series::from_coeffs(coeffs)
}

/// ln(1+t) at the given order.
pub fn log1p_series(order: usize) -> Series {
    one_plus_t(order).log().expect("1+t has constant term 1")
}

/// (1+t)^a = exp(a·ln(1+t)) for rational a.
pub fn pow1p(a: &Rat, order: usize) -> Series {
    one_plus_t(order).pow(a).expect("1+t has constant term 1")
}

/// e^t - 1 at the given order.
pub fn exp_minus_one(order: usize) -> Series {
    &Series::exp_scaled(&Rat::one(), order) - &Series::one(order)
}

/// (e^{at} - 1)/t, the g-factor of the Daehee and Barnes-Bernoulli pairs.
fn exp_factor_over_t(a: &Rat, order: usize) -> Series {
    let num = &Series::exp_scaled(a, order + 1) - &Series::one(order + 1);
    num.shift_divide(&Series::t(order + 1), 1)
        .expect("e^{at}-1 has valuation 1 for a != 0")
}

/// ln(1+t)/((1+t)^a - 1), one factor of the first-kind generating function.
fn daehee_factor(a: &Rat, order: usize) -> Series {
    let den = &pow1p(a, order + 1) - &Series::one(order + 1);
    log1p_series(order + 1)
        .shift_divide(&den, 1)
        .expect("(1+t)^a - 1 has valuation 1 for a != 0")
}

/// t/(e^{at} - 1), one factor of the Barnes multiple Bernoulli function.
fn barnes_bernoulli_factor(a: &Rat, order: usize) -> Series {
    let den = &Series::exp_scaled(a, order + 1) - &Series::one(order + 1);
    Series::t(order + 1)
        .shift_divide(&den, 1)
        .expect("e^{at}-1 has valuation 1 for a != 0")
}

/// ln(1+t)/t at the given order.
fn log1p_over_t(order: usize) -> Series {
    log1p_series(order + 1)
        .shift_divide(&Series::t(order + 1), 1)
        .expect("ln(1+t) has valuation 1")
}

/// t/ln(1+t), the Cauchy number generating function.
fn cauchy_gf(order: usize) -> Series {
    Series::t(order + 1)
        .shift_divide(&log1p_series(order + 1), 1)
        .expect("ln(1+t) has valuation 1")
}

fn product(factors: impl Iterator<Item = Series>, order: usize) -> Series {
    factors.fold(Series::one(order), |acc, f| &acc * &f)
}

/// The family's t-generating function at x = 0, truncated to `order`.
/// The n-th family number is n!·[t^n] of the result.
pub fn family_series(id: FamilyId, params: &FamilyParams, order: usize) -> Result<Series> {
    match id {
        FamilyId::DaeheeFirstBarnes => {
            let a = params.barnes_list(id)?;
            Ok(product(a.iter().map(|aj| daehee_factor(aj, order)), order))
        }
        FamilyId::DaeheeSecondBarnes => {
            let a = params.barnes_list(id)?;
            Ok(product(
                a.iter()
                    .map(|aj| &pow1p(aj, order) * &daehee_factor(aj, order)),
                order,
            ))
        }
        FamilyId::DaeheeFirstOrderR => {
            let r = params.order_r_value(id)?;
            Ok(log1p_over_t(order).powi(r as usize))
        }
        FamilyId::DaeheeSecondOrderR => {
            let r = params.order_r_value(id)?;
            Ok((&one_plus_t(order) * &log1p_over_t(order)).powi(r as usize))
        }
        FamilyId::BarnesBernoulli => {
            let a = params.barnes_list(id)?;
            Ok(product(
                a.iter().map(|aj| barnes_bernoulli_factor(aj, order)),
                order,
            ))
        }
        FamilyId::BernoulliNumber => Ok(barnes_bernoulli_factor(&Rat::one(), order)),
        FamilyId::BernoulliPolyOrderS => {
            let s = params.order_s_value(id)?;
            Ok(barnes_bernoulli_factor(&Rat::one(), order).powi(s as usize))
        }
        FamilyId::CauchyClassical => Ok(cauchy_gf(order)),
        FamilyId::CauchyOrderS => {
            let s = params.order_s_value(id)?;
            Ok(cauchy_gf(order).powi(s as usize))
        }
        FamilyId::FrobeniusEulerOrderS => {
            let s = params.order_s_value(id)?;
            let lambda = params.lambda_value(id)?;
            let den =
                &Series::exp_scaled(&Rat::one(), order) - &Series::constant(lambda.clone(), order);
            let one_minus_lambda = Rat::one() - lambda;
            Ok(den.invert()?.scale(&one_minus_lambda).powi(s as usize))
        }
        FamilyId::Stirling1 => {
            let m = params.order_s_value(id)?;
            Ok(log1p_series(order)
                .powi(m as usize)
                .scale(&(Rat::one() / factorial_rat(m as usize))))
        }
        FamilyId::FallingFactorial => Ok(Series::one(order)),
    }
}

/// The Sheffer pair whose sequence is the family's polynomial form.
/// Number families have none.
pub fn sheffer_pair(id: FamilyId, params: &FamilyParams, order: usize) -> Result<ShefferPair> {
    let ones = |r: u32| vec![Rat::one(); r as usize];
    match id {
        FamilyId::DaeheeFirstBarnes => {
            let a = params.barnes_list(id)?;
            let g = product(a.iter().map(|aj| exp_factor_over_t(aj, order)), order);
            ShefferPair::new(g, exp_minus_one(order))
        }
        FamilyId::DaeheeSecondBarnes => {
            let a = params.barnes_list(id)?;
            let g = product(
                a.iter().map(|aj| {
                    &exp_factor_over_t(aj, order) * &Series::exp_scaled(&-aj.clone(), order)
                }),
                order,
            );
            ShefferPair::new(g, exp_minus_one(order))
        }
        FamilyId::DaeheeFirstOrderR => sheffer_pair(
            FamilyId::DaeheeFirstBarnes,
            &FamilyParams::barnes(ones(params.order_r_value(id)?)),
            order,
        ),
        FamilyId::DaeheeSecondOrderR => sheffer_pair(
            FamilyId::DaeheeSecondBarnes,
            &FamilyParams::barnes(ones(params.order_r_value(id)?)),
            order,
        ),
        FamilyId::BarnesBernoulli => {
            let a = params.barnes_list(id)?;
            let g = product(a.iter().map(|aj| exp_factor_over_t(aj, order)), order);
            ShefferPair::new(g, Series::t(order))
        }
        FamilyId::BernoulliPolyOrderS => {
            let s = params.order_s_value(id)?;
            let g = exp_factor_over_t(&Rat::one(), order).powi(s as usize);
            ShefferPair::new(g, Series::t(order))
        }
        FamilyId::FrobeniusEulerOrderS => {
            let s = params.order_s_value(id)?;
            let lambda = params.lambda_value(id)?;
            let num =
                &Series::exp_scaled(&Rat::one(), order) - &Series::constant(lambda.clone(), order);
            let g = num
                .scale(&(Rat::one() / (Rat::one() - lambda)))
                .powi(s as usize);
            ShefferPair::new(g, Series::t(order))
        }
        FamilyId::FallingFactorial => ShefferPair::new(Series::one(order), exp_minus_one(order)),
        FamilyId::BernoulliNumber
        | FamilyId::CauchyClassical
        | FamilyId::CauchyOrderS
        | FamilyId::Stirling1 => Err(Error::BadFamilyParams(format!(
            "{id} is a number family with no polynomial form"
        ))),
    }
}

/// The symbolic polynomials s_0..s_{n_max} of a polynomial family.
pub fn family_polynomials(id: FamilyId, params: &FamilyParams, n_max: usize) -> Result<Vec<Poly>> {
    family_polynomials_at(id, params, n_max, n_max)
}

/// Like [`family_polynomials`], built at a caller-chosen working order.
/// Orders below the natural requirement are raised to it; the extracted
/// polynomials do not depend on the extra orders.
pub fn family_polynomials_at(
    id: FamilyId,
    params: &FamilyParams,
    n_max: usize,
    order: usize,
) -> Result<Vec<Poly>> {
    // a delta f needs at least order 1 to exist, even for s_0 alone
    let order = order.max(n_max).max(1);
    sheffer_pair(id, params, order)?.sequence(n_max)
}

/// The family numbers s_0(0)..s_{n_max}(0), read off the generating function.
pub fn family_numbers(id: FamilyId, params: &FamilyParams, n_max: usize) -> Result<Vec<Rat>> {
    family_numbers_at(id, params, n_max, n_max)
}

/// Like [`family_numbers`], built at a caller-chosen working order.
pub fn family_numbers_at(
    id: FamilyId,
    params: &FamilyParams,
    n_max: usize,
    order: usize,
) -> Result<Vec<Rat>> {
    let series = family_series(id, params, order.max(n_max))?;
    Ok((0..=n_max)
        .map(|n| factorial_rat(n) * series.coeff(n))
        .collect())
}

/// Signed Stirling number of the first kind S_1(n, m), from the triangle
/// recurrence S_1(n+1, m) = S_1(n, m-1) - n·S_1(n, m); zero for m > n and
/// S_1(0, 0) = 1. Always an integer, returned as a rational.
pub fn stirling1(n: usize, m: usize) -> Rat {
    if m > n {
        return Rat::zero();
    }
    stirling1_triangle(n)[n][m].clone()
}

/// Rows 0..=n_max of the signed Stirling triangle of the first kind.
pub fn stirling1_triangle(n_max: usize) -> Vec<Vec<Rat>> {
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![Rat::one()]);
    for n in 0..n_max {
        let prev = &rows[n];
        let mut next = vec![Rat::zero(); n + 2];
        for (m, cell) in next.iter_mut().enumerate() {
            let from_shift = if m >= 1 {
                prev[m - 1].clone()
            } else {
                Rat::zero()
            };
            let from_scale = if m <= n {
                &prev[m] * crate::rat::rat_int(n as i64)
            } else {
                Rat::zero()
            };
            *cell = from_shift - from_scale;
        }
        rows.push(next);
    }
    rows
}

/// Convenience accessors used throughout the identity checkers.
pub mod tables {
    use super::*;

    /// First-kind Daehee polynomials D_n(x|a) for n = 0..=n_max.
    pub fn daehee_first_polys(a: &[Rat], n_max: usize) -> Result<Vec<Poly>> {
        family_polynomials(
            FamilyId::DaeheeFirstBarnes,
            &FamilyParams::barnes(a.to_vec()),
            n_max,
        )
    }

    /// Second-kind Daehee polynomials.
    pub fn daehee_second_polys(a: &[Rat], n_max: usize) -> Result<Vec<Poly>> {
        family_polynomials(
            FamilyId::DaeheeSecondBarnes,
            &FamilyParams::barnes(a.to_vec()),
            n_max,
        )
    }

    /// First-kind Daehee numbers D_n(a).
    pub fn daehee_first_numbers(a: &[Rat], n_max: usize) -> Result<Vec<Rat>> {
        family_numbers(
            FamilyId::DaeheeFirstBarnes,
            &FamilyParams::barnes(a.to_vec()),
            n_max,
        )
    }

    /// Second-kind Daehee numbers.
    pub fn daehee_second_numbers(a: &[Rat], n_max: usize) -> Result<Vec<Rat>> {
        family_numbers(
            FamilyId::DaeheeSecondBarnes,
            &FamilyParams::barnes(a.to_vec()),
            n_max,
        )
    }

    /// Barnes multiple Bernoulli polynomials B_n(x|a).
    pub fn barnes_bernoulli_polys(a: &[Rat], n_max: usize) -> Result<Vec<Poly>> {
        family_polynomials(
            FamilyId::BarnesBernoulli,
            &FamilyParams::barnes(a.to_vec()),
            n_max,
        )
    }

    /// Ordinary Bernoulli numbers B_0..B_{n_max}.
    pub fn bernoulli_numbers(n_max: usize) -> Vec<Rat> {
        family_numbers(FamilyId::BernoulliNumber, &FamilyParams::none(), n_max)
            .expect("Bernoulli numbers take no parameters")
    }

    /// Classical Cauchy numbers c_0..c_{n_max}.
    pub fn cauchy_numbers(n_max: usize) -> Vec<Rat> {
        family_numbers(FamilyId::CauchyClassical, &FamilyParams::none(), n_max)
            .expect("Cauchy numbers take no parameters")
    }

    /// Order-s Cauchy numbers of the first kind.
    pub fn cauchy_numbers_order(s: u32, n_max: usize) -> Result<Vec<Rat>> {
        family_numbers(FamilyId::CauchyOrderS, &FamilyParams::order_s(s), n_max)
    }

    /// Frobenius-Euler polynomials H_n^{(s)}(x|λ).
    pub fn frobenius_euler_polys(lambda: &Rat, s: u32, n_max: usize) -> Result<Vec<Poly>> {
        family_polynomials(
            FamilyId::FrobeniusEulerOrderS,
            &FamilyParams::frobenius(lambda.clone(), s),
            n_max,
        )
    }

    /// Bernoulli polynomials of order s.
    pub fn bernoulli_polys_order(s: u32, n_max: usize) -> Result<Vec<Poly>> {
        family_polynomials(
            FamilyId::BernoulliPolyOrderS,
            &FamilyParams::order_s(s),
            n_max,
        )
    }
}
