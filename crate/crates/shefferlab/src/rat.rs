//! Exact rational scalars.
//!
//! `Rat` is an arbitrary-precision rational kept in canonical form at all
//! times: denominator positive, gcd(|num|, den) = 1, zero stored as 0/1.
//! `num_rational::BigRational` enforces exactly this after every operation,
//! so the crate uses it directly instead of wrapping it.
//!
//! The canonical text form is `p/q` with `q > 0`, shortened to `p` when
//! `q = 1` (e.g. `-3/2`, `5`). `Display` on `BigRational` already produces
//! it; [`parse_rat`] accepts it back.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical form.
pub type Rat = num_rational::BigRational;

/// Rational from an integer pair. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

/// Parse the canonical `p/q` (or plain `p`) text form.
pub fn parse_rat(text: &str) -> Result<Rat> {
    text.trim()
        .parse::<Rat>()
        .map_err(|_| Error::BadRational(text.to_string()))
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// n! as a rational.
pub fn factorial_rat(n: usize) -> Rat {
    Rat::from_integer(factorial(n))
}

/// Binomial coefficient C(n, k) as a rational; zero when k > n.
pub fn binom(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rat::from_integer(acc)
}

/// Generalized binomial coefficient C(a, k) = a(a-1)...(a-k+1)/k! for rational a.
pub fn binom_rat(a: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= a - rat_int(i as i64);
    }
    acc / factorial_rat(k)
}

/// Falling factorial (a)_k = a(a-1)...(a-k+1) with (a)_0 = 1.
pub fn falling_factorial_rat(a: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= a - rat_int(i as i64);
    }
    acc
}

/// Integer power a^k for signed k; errors on 0^k with k < 0.
pub fn pow_rat(a: &Rat, k: i64) -> Result<Rat> {
    if k >= 0 {
        Ok(a.pow(k as i32))
    } else if a.is_zero() {
        Err(Error::BadRational("0 has no negative power".into()))
    } else {
        Ok(a.pow(k as i32))
    }
}

/// True when the rational is an integer with denominator 1.
pub fn is_integer(a: &Rat) -> bool {
    a.denom().is_one()
}

/// Signed magnitude heuristic for test diagnostics: |num| + den.
pub fn bit_size(a: &Rat) -> u64 {
    a.numer().abs().bits() + a.denom().bits()
}
