//! Build Sheffer sequences three ways and watch the defining properties:
//! conjugate representation, the one-step recurrence, and the lowering
//! action of the delta series.
//!
//! Run with: cargo run --example sheffer_sequences

use shefferlab::families::{exp_minus_one, sheffer_pair, FamilyId, FamilyParams};
use shefferlab::umbral::{operator_apply, ShefferPair};
use shefferlab::Series;

fn main() {
    let order = 8;

    // falling factorials: the associated sequence of e^t - 1
    let falling = ShefferPair::new(Series::one(order), exp_minus_one(order)).unwrap();
    println!("falling factorials (x)_n:");
    for (n, p) in falling.sequence(4).unwrap().iter().enumerate() {
        println!("  s_{n} = {p}");
    }

    // Bernoulli polynomials through the family builder
    let bernoulli = sheffer_pair(
        FamilyId::BernoulliPolyOrderS,
        &FamilyParams::order_s(1),
        order,
    )
    .unwrap();
    let seq = bernoulli.sequence(4).unwrap();
    println!("Bernoulli polynomials B_n(x):");
    for (n, p) in seq.iter().enumerate() {
        println!("  B_{n} = {p}");
    }

    // lowering: f(t) s_n = n s_{n-1}
    let lowered = operator_apply(bernoulli.f(), &seq[4]);
    println!("t applied to B_4  = {lowered}");
    println!(
        "4 * B_3           = {}",
        seq[3].scale(&shefferlab::rat::rat_int(4))
    );

    // the recurrence climbs one degree at a time
    let next = bernoulli.recurrence_step(&seq[4], 4).unwrap();
    println!("recurrence B_5    = {next}");
}
