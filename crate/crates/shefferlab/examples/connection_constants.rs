//! Expand one polynomial family in another family's basis: the connection
//! constants form a lower-triangular matrix, and for Daehee into falling
//! factorials they collapse to C(n,m)·D_{n-m}.
//!
//! Run with: cargo run --example connection_constants

use shefferlab::families::{sheffer_pair, FamilyId, FamilyParams};
use shefferlab::rat::rat_int;
use shefferlab::umbral::connection_constants;

fn main() {
    let n_max = 5;
    let a = vec![rat_int(1), rat_int(2)];
    let daehee =
        sheffer_pair(FamilyId::DaeheeFirstBarnes, &FamilyParams::barnes(a), n_max).unwrap();
    let falling = sheffer_pair(FamilyId::FallingFactorial, &FamilyParams::none(), n_max).unwrap();

    let c = connection_constants(&daehee, &falling, n_max).unwrap();
    println!("D_n(x|1,2) = sum_m C[n][m] (x)_m with C =");
    for row in &c {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        println!("  [{}]", cells.join(", "));
    }

    // reconstruct s_3 from the matrix and the target basis
    let s = daehee.sequence(n_max).unwrap();
    let r = falling.sequence(n_max).unwrap();
    let mut rebuilt = shefferlab::Poly::zero();
    for m in 0..=3 {
        rebuilt = &rebuilt + &r[m].scale(&c[3][m]);
    }
    println!("s_3 direct : {}", s[3]);
    println!("s_3 rebuilt: {rebuilt}");
}
