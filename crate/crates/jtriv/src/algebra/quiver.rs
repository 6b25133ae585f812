//! The Ext-quiver and the factorization taxonomy behind it.
//!
//! For x with e = lfix(x), f = rfix(x), a factorization x = uv is proper
//! when u != x and v != x, non-trivial when eu != e and vf != f, and
//! compatible when u, v are non-idempotent with lfix(u) = e,
//! rfix(v) = f, rfix(u) = lfix(v). The quiver has one vertex per
//! idempotent and one arrow lfix(x) -> rfix(x) for every non-idempotent
//! element admitting no non-trivial factorization.

use serde::Serialize;

use crate::error::Result;
use crate::families::coxeter::CoxeterGroup;
use crate::monoid::{ElementId, MonoidTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuiverEdge {
    pub src: ElementId,
    pub dst: ElementId,
    pub label: ElementId,
}

/// The quiver of the monoid algebra: vertices are the idempotents, edges
/// are labelled by the non-idempotent c-irreducible elements.
#[derive(Debug, Clone)]
pub struct Quiver {
    pub vertices: Vec<ElementId>,
    pub edges: Vec<QuiverEdge>,
}

impl Quiver {
    pub fn adjacency(&self) -> Vec<Vec<u64>> {
        let k = self.vertices.len();
        let pos = |e: ElementId| self.vertices.binary_search(&e).unwrap();
        let mut adj = vec![vec![0u64; k]; k];
        for ed in &self.edges {
            adj[pos(ed.src)][pos(ed.dst)] += 1;
        }
        adj
    }

    pub fn edge_labels(&self) -> Vec<ElementId> {
        self.edges.iter().map(|e| e.label).collect()
    }

    /// Kahn's algorithm on the multidigraph.
    pub fn is_acyclic(&self) -> bool {
        let k = self.vertices.len();
        let pos = |e: ElementId| self.vertices.binary_search(&e).unwrap();
        let mut indeg = vec![0usize; k];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); k];
        for ed in &self.edges {
            let (s, d) = (pos(ed.src), pos(ed.dst));
            out[s].push(d);
            indeg[d] += 1;
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
        seen == k
    }

    pub fn to_dot(&self, t: &MonoidTable) -> String {
        let mut s = String::from("digraph quiver {\n");
        for &v in &self.vertices {
            s.push_str(&format!("  \"{}\";\n", t.repr(v)));
        }
        for e in &self.edges {
            s.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                t.repr(e.src),
                t.repr(e.dst),
                t.repr(e.label)
            ));
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Serialize)]
struct QuiverEdgeJson<'a> {
    src: &'a str,
    dst: &'a str,
    label: &'a str,
}

#[derive(Serialize)]
struct QuiverJson<'a> {
    idempotents: Vec<&'a str>,
    quiver_edges: Vec<QuiverEdgeJson<'a>>,
}

impl Quiver {
    pub fn to_json(&self, t: &MonoidTable) -> String {
        let payload = QuiverJson {
            idempotents: self.vertices.iter().map(|&e| t.repr(e)).collect(),
            quiver_edges: self
                .edges
                .iter()
                .map(|e| QuiverEdgeJson {
                    src: t.repr(e.src),
                    dst: t.repr(e.dst),
                    label: t.repr(e.label),
                })
                .collect(),
        };
        serde_json::to_string(&payload).expect("quiver serialization cannot fail")
    }
}

fn quiver_sieve(t: &MonoidTable, restrict_symbols: bool) -> Result<Quiver> {
    t.build_product_cache();
    let n = t.len();
    let lfix = t.lfix_all()?;
    let rfix = t.rfix_all()?;
    let mut reducible = vec![false; n];

    if restrict_symbols {
        // only pairs with rfix(u) = lfix(v) can produce a compatible
        // factorization, and any non-trivially-factorable element has one
        let mut by_lfix: Vec<Vec<u32>> = vec![Vec::new(); n];
        for v in 0..n {
            by_lfix[lfix[v] as usize].push(v as u32);
        }
        for u in 0..n as u32 {
            for &v in &by_lfix[rfix[u as usize] as usize] {
                sieve_pair(t, lfix, rfix, &mut reducible, ElementId(u), ElementId(v));
            }
        }
    } else {
        for u in 0..n as u32 {
            for v in 0..n as u32 {
                sieve_pair(t, lfix, rfix, &mut reducible, ElementId(u), ElementId(v));
            }
        }
    }

    let edges = t
        .elements()
        .filter(|&x| !t.is_idempotent(x) && !reducible[x.index()])
        .map(|x| QuiverEdge {
            src: ElementId(lfix[x.index()]),
            dst: ElementId(rfix[x.index()]),
            label: x,
        })
        .collect();
    Ok(Quiver {
        vertices: t.idempotents().to_vec(),
        edges,
    })
}

#[inline]
fn sieve_pair(
    t: &MonoidTable,
    lfix: &[u32],
    rfix: &[u32],
    reducible: &mut [bool],
    u: ElementId,
    v: ElementId,
) {
    let x = t.product(u, v);
    if reducible[x.index()] || t.is_idempotent(x) {
        return;
    }
    let e = ElementId(lfix[x.index()]);
    let f = ElementId(rfix[x.index()]);
    if t.product(e, u) != e && t.product(v, f) != f {
        reducible[x.index()] = true;
    }
}

/// The quiver, by the brute-force sieve restricted to products u*v with
/// rfix(u) = lfix(v).
pub fn quiver(t: &MonoidTable) -> Result<Quiver> {
    quiver_sieve(t, true)
}

/// The quiver by the unrestricted all-pairs sieve, for cross-validation.
pub fn quiver_all_pairs(t: &MonoidTable) -> Result<Quiver> {
    quiver_sieve(t, false)
}

/// All factorizations of x, partitioned into the four taxonomy classes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactorizationClasses {
    pub non_proper: Vec<(ElementId, ElementId)>,
    pub proper_trivial: Vec<(ElementId, ElementId)>,
    pub nontrivial_incompatible: Vec<(ElementId, ElementId)>,
    pub compatible: Vec<(ElementId, ElementId)>,
}

pub fn classify_factorizations(t: &MonoidTable, x: ElementId) -> Result<FactorizationClasses> {
    t.check_id(x)?;
    t.build_product_cache();
    let e = t.lfix(x)?;
    let f = t.rfix(x)?;
    let mut out = FactorizationClasses::default();
    for u in t.elements() {
        for v in t.elements() {
            if t.product(u, v) != x {
                continue;
            }
            let pair = (u, v);
            if u == x || v == x {
                out.non_proper.push(pair);
            } else if !(t.product(e, u) != e && t.product(v, f) != f) {
                out.proper_trivial.push(pair);
            } else if !t.is_idempotent(u)
                && !t.is_idempotent(v)
                && t.lfix(u)? == e
                && t.rfix(v)? == f
                && t.rfix(u)? == t.lfix(v)?
            {
                out.compatible.push(pair);
            } else {
                out.nontrivial_incompatible.push(pair);
            }
        }
    }
    Ok(out)
}

/// Predicted quiver elements of the 0-Hecke monoid of `w`: pairs (J, K)
/// of incomparable generator subsets such that no j in J \ K commutes
/// with a k in K \ J. Returned as bitmask pairs over generator indices,
/// sorted; the corresponding monoid element is pi_J * pi_K.
pub fn hecke_quiver_prediction(w: &CoxeterGroup) -> Vec<(u32, u32)> {
    let m = w.num_generators();
    assert!(m <= 31, "generator subsets are indexed by u32 bitmasks");
    let full = (1u32 << m) - 1;
    let mut out = Vec::new();
    for j in 0..=full {
        for k in 0..=full {
            if j & k == j || j & k == k {
                continue; // comparable subsets
            }
            let jk = j & !k;
            let kj = k & !j;
            let mut ok = true;
            'outer: for a in 0..m {
                if jk & (1 << a) == 0 {
                    continue;
                }
                for b in 0..m {
                    if kj & (1 << b) != 0 && w.coxeter_m(a, b) == 2 {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            if ok {
                out.push((j, k));
            }
        }
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{GeneratorSpec, DEFAULT_ELEMENT_CAP};

    fn power_chain(k: u32) -> MonoidTable {
        MonoidTable::generate(
            vec![GeneratorSpec::new("x", 1u32)],
            0u32,
            move |a, b| (a + b).min(k),
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap()
        .0
    }

    #[test]
    fn restricted_and_full_sieves_agree() {
        let t = power_chain(6);
        let a = quiver(&t).unwrap();
        let b = quiver_all_pairs(&t).unwrap();
        assert_eq!(a.edges, b.edges);
        assert_eq!(a.vertices, b.vertices);
    }

    #[test]
    fn power_chain_quiver_is_a_single_loop_free_arrow() {
        // x generates; x^2, ..., x^{k-1} factor non-trivially; x itself is
        // the only non-idempotent c-irreducible.
        let t = power_chain(5);
        let q = quiver(&t).unwrap();
        assert_eq!(q.edges.len(), 1);
        assert_eq!(q.edges[0].label, ElementId(1));
        // both symbols of x are the identity, so the arrow is a loop
        assert_eq!(q.edges[0].src, t.identity());
        assert_eq!(q.edges[0].dst, t.identity());
        assert!(!q.is_acyclic());
    }

    #[test]
    fn taxonomy_partitions_all_factorizations() {
        let t = power_chain(5);
        for x in t.elements() {
            let c = classify_factorizations(&t, x).unwrap();
            let mut count = 0;
            for u in t.elements() {
                for v in t.elements() {
                    if t.product(u, v) == x {
                        count += 1;
                    }
                }
            }
            assert_eq!(
                count,
                c.non_proper.len()
                    + c.proper_trivial.len()
                    + c.nontrivial_incompatible.len()
                    + c.compatible.len()
            );
        }
    }
}
