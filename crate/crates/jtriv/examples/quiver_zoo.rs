//! Monoids with a prescribed quiver: incidence monoids realize the
//! covers of a poset, and the path-truncation construction realizes any
//! digraph, loops and multiple edges included. DOT output for both.
//!
//! Run with: cargo run --release --example quiver_zoo

use jtriv::algebra::quiver;
use jtriv::families::{incidence_monoid, quiver_monoid, Digraph};
use jtriv::regressive::Poset;

fn main() {
    let p = Poset::boolean_lattice(2);
    let (t, _) = incidence_monoid(&p).unwrap();
    println!("incidence monoid of the Boolean lattice B_2: {} elements", t.len());
    let q = quiver(&t).unwrap();
    println!("quiver = cover relations of the poset:");
    print!("{}", q.to_dot(&t));

    let g = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0), (0, 0)]).unwrap();
    let t = quiver_monoid(&g).unwrap();
    println!("\npath-truncation monoid of a 3-cycle with a loop: {} elements", t.len());
    let q = quiver(&t).unwrap();
    print!("{}", q.to_dot(&t));
    println!("\n(the adjoined 0 and 1 stay isolated)");
}
