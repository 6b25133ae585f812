//! The monoid of unitriangular Boolean matrices: counts, the
//! second-diagonal antiautomorphism, lexicographic unitriangularity of
//! the Cartan matrix, and the quiver as transitive reduction.
//!
//! Run with: cargo run --release --example unitriangular_matrices

use jtriv::algebra::{cartan_matrix, quiver};
use jtriv::families::unitriangular_boolean;
use jtriv::monoid::ElementId;

fn main() {
    for n in 2..=6 {
        let (t, _) = unitriangular_boolean(n, 1 << 21).unwrap();
        println!("|U_{n}| = {:>6}   idempotents (= posets on the chain): {}",
            t.len(), t.idempotents().len());
    }

    let n = 4;
    let (t, vals) = unitriangular_boolean(n, 1 << 21).unwrap();
    let c = cartan_matrix(&t).unwrap();
    let q = quiver(&t).unwrap();
    println!("\nU_{n}: quiver has {} arrows, acyclic: {}", q.edges.len(), q.is_acyclic());

    let key = |e: ElementId| vals[e.index()].lex_key();
    let unitri = c.idems.iter().enumerate().all(|(i, &e)| {
        c.get(i, i) == 1
            && c.idems.iter().enumerate().all(|(j, &f)| {
                i == j || c.get(i, j) == 0 || key(e) < key(f)
            })
    });
    println!("Cartan matrix unitriangular in the pairwise lex order: {unitri}");

    let phi_fixed = c.idems.iter().enumerate().all(|(i, &e)| {
        c.idems.iter().enumerate().all(|(j, &f)| {
            let fi = vals[f.index()].second_diagonal_transpose();
            let ei = vals[e.index()].second_diagonal_transpose();
            let pi = c.idems.iter().position(|&x| vals[x.index()] == fi).unwrap();
            let pj = c.idems.iter().position(|&x| vals[x.index()] == ei).unwrap();
            c.get(i, j) == c.get(pi, pj)
        })
    });
    println!("Cartan graph invariant under the second-diagonal transpose: {phi_fixed}");
}
