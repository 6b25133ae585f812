//! Lifting the Möbius idempotents of the semisimple quotient to a
//! complete orthogonal family in the monoid algebra, shown on H0(S3).
//!
//! Run with: cargo run --release --example lifting_idempotents

use jtriv::algebra::{
    moebius_idempotents, omega_projection, orthogonal_idempotents, AlgebraElement,
};
use jtriv::families::{hecke_monoid, CoxeterGroup, CoxeterType};

fn main() {
    let h = hecke_monoid(CoxeterGroup::new(CoxeterType::A, 2).unwrap()).unwrap();
    let t = &h.table;

    println!("Moebius idempotents g_e of the semisimple quotient:");
    let g = moebius_idempotents(t).unwrap();
    for (e, ge) in &g {
        println!("  g[{}] = {}", t.repr(*e), ge.display(t));
    }

    println!("\nlifted orthogonal idempotents f_e of the algebra:");
    let f = orthogonal_idempotents(t).unwrap();
    let mut total = AlgebraElement::zero();
    for (e, fe) in f.iter() {
        total = total.add(fe);
        println!("  f[{}] = {}", t.repr(e), fe.display(t));
        assert!(fe.is_idempotent(t));
        assert_eq!(omega_projection(t, fe).unwrap(), g[&e]);
    }
    assert_eq!(total, AlgebraElement::one());
    println!("\nsum of the f_e is the identity; each projects onto its g_e.");
}
