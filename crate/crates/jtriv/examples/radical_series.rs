//! Radical filtration series of the small 0-Hecke algebras, with the
//! evenness of every coefficient on display.
//!
//! Run with: cargo run --release --example radical_series

use jtriv::algebra::radical_filtration;
use jtriv::families::{hecke_monoid, CoxeterGroup, CoxeterType};

fn main() {
    let instances = [
        ("A2", CoxeterType::A, 2),
        ("A3", CoxeterType::A, 3),
        ("A4", CoxeterType::A, 4),
        ("B2", CoxeterType::B, 2),
        ("B3", CoxeterType::B, 3),
        ("D3", CoxeterType::D, 3),
        ("D4", CoxeterType::D, 4),
        ("I5", CoxeterType::I, 5),
        ("I6", CoxeterType::I, 6),
        ("I9", CoxeterType::I, 9),
    ];
    println!("sum_k dim(rad^k A / rad^{{k+1}} A) q^k for A = K H0(W):\n");
    for (name, ty, rank) in instances {
        let h = hecke_monoid(CoxeterGroup::new(ty, rank).unwrap()).unwrap();
        let s = radical_filtration(&h.table, None).unwrap();
        println!(
            "  {name:<3} {} {}",
            s,
            if s.all_coefficients_even() {
                "(all coefficients even)"
            } else {
                "(odd coefficient?!)"
            }
        );
    }
}
