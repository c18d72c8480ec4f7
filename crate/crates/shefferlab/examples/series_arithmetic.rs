//! Tour of the exact series kernel: transcendental builders, inversion,
//! composition, and reversion, all over arbitrary-precision rationals.
//!
//! Run with: cargo run --example series_arithmetic

use shefferlab::families::{log1p_series, one_plus_t, pow1p};
use shefferlab::rat::{rat, Rat};
use shefferlab::Series;

fn main() {
    let order = 8;

    let exp_t = Series::exp_scaled(&Rat::from_integer(1.into()), order);
    println!("e^t             = {exp_t}");
    println!("1/e^t           = {}", exp_t.invert().unwrap());

    let log = log1p_series(order);
    println!("ln(1+t)         = {log}");

    let em1 = &exp_t - &Series::one(order);
    println!("rev(e^t - 1)    = {}", em1.reversion().unwrap());
    println!(
        "(e^t-1) o rev   = {}",
        em1.compose(&em1.reversion().unwrap()).unwrap()
    );

    let sqrt = pow1p(&rat(1, 2), order);
    println!("(1+t)^(1/2)     = {sqrt}");
    println!("square of that  = {}", &sqrt * &sqrt);

    // exact division with a valuation shift: t/(e^t - 1)
    let bernoulli_gf = Series::t(order + 1)
        .shift_divide(
            &(&Series::exp_scaled(&Rat::from_integer(1.into()), order + 1)
                - &Series::one(order + 1)),
            1,
        )
        .unwrap();
    println!("t/(e^t-1)       = {bernoulli_gf}");

    let one_plus = one_plus_t(order);
    println!(
        "log then exp    = {}",
        one_plus.log().unwrap().exp().unwrap()
    );
}
