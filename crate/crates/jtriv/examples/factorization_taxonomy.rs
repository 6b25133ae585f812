//! The factorization taxonomy that defines the quiver: every way of
//! writing pi_2 pi_1 pi_3 pi_2 in H0(S4) as a product, classified.
//!
//! Run with: cargo run --release --example factorization_taxonomy

use jtriv::algebra::classify_factorizations;
use jtriv::families::{hecke_monoid, CoxeterGroup, CoxeterType};

fn main() {
    let h = hecke_monoid(CoxeterGroup::new(CoxeterType::A, 3).unwrap()).unwrap();
    let t = &h.table;
    let g = |i: usize| t.generators()[i - 1];
    let x = t.product_word(&[g(2), g(1), g(3), g(2)]);
    println!("x = {}\n", t.repr(x));
    let fc = classify_factorizations(t, x).unwrap();
    let show = |title: &str, pairs: &[(jtriv::ElementId, jtriv::ElementId)]| {
        println!("{title} ({}):", pairs.len());
        for &(u, v) in pairs {
            println!("  ({}, {})", t.repr(u), t.repr(v));
        }
    };
    show("trivial and non-proper", &fc.non_proper);
    show("proper but trivial", &fc.proper_trivial);
    show("non-trivial, incompatible", &fc.nontrivial_incompatible);
    show("compatible", &fc.compatible);
    println!("\nx has a non-trivial factorization, so it is not an arrow of the quiver.");
}
