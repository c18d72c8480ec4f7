//! Check a single theorem instance and inspect the report, then perturb
//! the right side to see the witness light up.
//!
//! Run with: cargo run --example check_identity

use shefferlab::identities::{check_identity, IdentityInstance, IdentityReport, TheoremId};
use shefferlab::rat::{rat, rat_int};
use shefferlab::{Poly, Rat};

fn main() {
    let instance = IdentityInstance::new(TheoremId::Cauchy40, 4, vec![rat(1, 2), rat_int(3)]);
    let report = check_identity(&instance).unwrap();
    println!("theorem  : {}", report.instance.theorem);
    println!("lhs      : {}", report.lhs);
    println!("rhs      : {}", report.rhs);
    println!("pass     : {}", report.pass);
    println!("witness  : {}", report.witness);

    // inject a defect into the right side: the checker must notice
    let mut coeffs: Vec<Rat> = (0..=4).map(|k| report.rhs.coeff(k)).collect();
    coeffs[2] += Rat::from_integer(1.into());
    let broken = IdentityReport::from_sides(
        report.instance.clone(),
        report.lhs.clone(),
        Poly::from_coeffs(coeffs),
    );
    println!("mutated pass    : {}", broken.pass);
    println!("mutated witness : {}", broken.witness);
}
