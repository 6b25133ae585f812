//! The 0-Hecke monoid of S_4, end to end: generation, idempotents,
//! Cartan matrix, quiver, and projective module dimensions.
//!
//! Run with: cargo run --release --example hecke_s4

use jtriv::algebra::{cartan_matrix, projective_module, quiver};
use jtriv::families::{hecke_monoid, CoxeterGroup, CoxeterType};

fn main() {
    let h = hecke_monoid(CoxeterGroup::new(CoxeterType::A, 3).unwrap()).unwrap();
    let t = &h.table;
    println!("|H0(S4)| = {}", t.len());
    println!("J-trivial: {}", t.is_j_trivial());

    println!("\nidempotents (reduced words):");
    for &e in t.idempotents() {
        println!("  {}", t.repr(e));
    }

    let c = cartan_matrix(t).unwrap();
    println!("\nCartan matrix (rows/columns in idempotent order):");
    for row in c.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        println!("  {}", cells.join(" "));
    }
    println!("total = {} = |monoid|", c.total());

    let q = quiver(t).unwrap();
    println!("\nquiver: {} vertices, {} arrows", q.vertices.len(), q.edges.len());
    for e in &q.edges {
        println!("  {} -> {}  [{}]", t.repr(e.src), t.repr(e.dst), t.repr(e.label));
    }

    println!("\nprojective module dimensions (left descent classes):");
    for &e in t.idempotents() {
        let p = projective_module(t, e).unwrap();
        println!("  P[{}]: dim {}", t.repr(e), p.dim());
    }
}
