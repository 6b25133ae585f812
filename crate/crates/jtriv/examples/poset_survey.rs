//! Enumerate posets up to isomorphism and check, for each monoid of
//! order-preserving regressive functions, that the Cartan matrix minus
//! the identity is an acyclic digraph.
//!
//! Run with: cargo run --release --example poset_survey

use jtriv::algebra::cartan_matrix;
use jtriv::regressive::{enumerate_posets, or_monoid, PosetFilter};

fn main() {
    for n in 1..=6 {
        let posets = enumerate_posets(n, PosetFilter::All).unwrap();
        let mut passed = 0;
        let mut largest = 0;
        for p in &posets {
            let (t, _) = or_monoid(p, 1 << 20).unwrap();
            largest = largest.max(t.len());
            let c = cartan_matrix(&t).unwrap();
            let k = c.size();
            let mut indeg = vec![0usize; k];
            let mut out: Vec<Vec<usize>> = vec![Vec::new(); k];
            for (i, j) in c.support_digraph() {
                out[i].push(j);
                indeg[j] += 1;
            }
            let mut stack: Vec<usize> = (0..k).filter(|&v| indeg[v] == 0).collect();
            let mut seen = 0;
            while let Some(v) = stack.pop() {
                seen += 1;
                for &w in &out[v] {
                    indeg[w] -= 1;
                    if indeg[w] == 0 {
                        stack.push(w);
                    }
                }
            }
            if seen == k {
                passed += 1;
            }
        }
        println!(
            "n = {n}: {:>4} posets, cartan-acyclic on {passed}, largest OR(P) = {largest}",
            posets.len()
        );
    }
}
