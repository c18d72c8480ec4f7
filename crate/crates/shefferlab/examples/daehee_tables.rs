//! Print Daehee numbers and polynomials of both kinds for a few parameter
//! lists, including fractional and negative parameters.
//!
//! Run with: cargo run --example daehee_tables

use shefferlab::families::tables;
use shefferlab::rat::{rat, rat_int, Rat};

fn main() {
    let parameter_sets: Vec<Vec<Rat>> = vec![
        vec![rat_int(1)],
        vec![rat_int(2)],
        vec![rat(1, 2), rat_int(3)],
    ];

    for a in &parameter_sets {
        println!("a = {:?}", a.iter().map(Rat::to_string).collect::<Vec<_>>());
        let first = tables::daehee_first_numbers(a, 6).unwrap();
        let second = tables::daehee_second_numbers(a, 6).unwrap();
        println!("  first kind numbers : {}", join(&first));
        println!("  second kind numbers: {}", join(&second));
        let polys = tables::daehee_first_polys(a, 3).unwrap();
        for (n, p) in polys.iter().enumerate() {
            println!("  D_{n}(x|a) = {p}");
        }
        println!();
    }
}

fn join(values: &[Rat]) -> String {
    values
        .iter()
        .map(Rat::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
