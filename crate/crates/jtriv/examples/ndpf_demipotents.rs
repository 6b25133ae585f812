//! Signed diagrams over the parking-function generators: the elements
//! C_D = L_D R_D are directly a complete family of 2^{N-1} orthogonal
//! idempotents of NDPF_N.
//!
//! Run with: cargo run --release --example ndpf_demipotents

use jtriv::algebra::AlgebraElement;
use jtriv::regressive::ndpf_orthogonal_set;

fn main() {
    let n = 4;
    let (t, items) = ndpf_orthogonal_set(n).unwrap();
    println!("NDPF_{n}: {} elements, {} diagrams\n", t.len(), items.len());
    let mut total = AlgebraElement::zero();
    for (d, c) in &items {
        println!("  C[{d}] = {}", c.display(&t));
        assert!(c.is_idempotent(&t));
        total = total.add(c);
    }
    for (i, (_, a)) in items.iter().enumerate() {
        for (j, (_, b)) in items.iter().enumerate() {
            assert_eq!(a.mul(b, &t).is_zero(), i != j);
        }
    }
    assert_eq!(total, AlgebraElement::one());
    println!("\npairwise orthogonal, each idempotent, summing to 1.");
}
