//! J-trivial monoids realizing a prescribed quiver.
//!
//! Three constructions on a labelled digraph G = (E, Q): the path-algebra
//! truncation M(G), its refinement M(G, L) along a lattice on E with
//! adjoined bottom and top, and M'(G) for simple digraphs, generated by
//! the vertex idempotents with e*f the edge from e to f. Each has quiver
//! G plus isolated vertices for the adjoined 0 and 1.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monoid::{MonoidTable, DEFAULT_ELEMENT_CAP};
use crate::regressive::Poset;

/// A finite labelled digraph on vertices 0..n-1. Loops and multiple
/// edges are allowed (edges are distinguished by their index).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Digraph> {
        for &(a, b) in &edges {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({a},{b}) out of range for {n} vertices"
                )));
            }
        }
        Ok(Digraph { n, edges })
    }

    pub fn from_json(s: &str) -> Result<Digraph> {
        let g: Digraph = serde_json::from_str(s)
            .map_err(|e| Error::InvalidInput(format!("bad digraph JSON: {e}")))?;
        Digraph::new(g.n, g.edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("digraph serialization cannot fail")
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .all(|&(a, b)| a != b && seen.insert((a, b)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum QElem {
    One,
    Vertex(u8),
    Edge(u16),
    Zero,
}

fn build_from_rule(
    g: &Digraph,
    rule: impl Fn(QElem, QElem) -> QElem,
) -> Result<(MonoidTable, Vec<String>)> {
    let mut values = vec![QElem::One];
    values.extend((0..g.n).map(|v| QElem::Vertex(v as u8)));
    values.extend((0..g.edges.len()).map(|e| QElem::Edge(e as u16)));
    values.push(QElem::Zero);
    let repr = |q: &QElem| -> String {
        match q {
            QElem::One => "1".into(),
            QElem::Zero => "0".into(),
            QElem::Vertex(v) => format!("v{v}"),
            QElem::Edge(e) => {
                let (a, b) = g.edges[*e as usize];
                format!("q{e}:{a}->{b}")
            }
        }
    };
    let reprs: Vec<String> = values.iter().map(repr).collect();
    let gen_indices: Vec<usize> = (1..values.len()).collect();
    let gen_labels: Vec<String> = reprs[1..].to_vec();
    let (t, _) = MonoidTable::from_elements(
        values,
        &gen_indices,
        gen_labels,
        |a, b| rule(*a, *b),
        Some(reprs.clone()),
        DEFAULT_ELEMENT_CAP,
    )?;
    Ok((t, reprs))
}

/// M(G): the quotient of the path monoid of G killing all paths of
/// length at least two. Vertices are idempotent, e * (e -> f) and
/// (e -> f) * f fix the edge, every other product is zero.
pub fn quiver_monoid(g: &Digraph) -> Result<MonoidTable> {
    let edges = g.edges.clone();
    let (t, _) = build_from_rule(g, move |a, b| {
        use QElem::*;
        match (a, b) {
            (One, x) | (x, One) => x,
            (Vertex(u), Vertex(v)) if u == v => Vertex(u),
            (Vertex(u), Edge(e)) if edges[e as usize].0 == u as usize => Edge(e),
            (Edge(e), Vertex(v)) if edges[e as usize].1 == v as usize => Edge(e),
            _ => Zero,
        }
    })?;
    Ok(t)
}

/// M(G, L): vertices multiply through the lattice meet, and a vertex
/// above the source (resp. target) fixes an edge. The lattice is given
/// as a poset on n+2 points: vertex i is poset point i, the monoid Zero
/// is the poset minimum n, and One is the maximum n+1.
pub fn quiver_lattice_monoid(g: &Digraph, l: &Poset) -> Result<MonoidTable> {
    if l.len() != g.n + 2 {
        return Err(Error::InvalidInput(format!(
            "lattice must have {} points (vertices plus bottom and top)",
            g.n + 2
        )));
    }
    l.require_meet_semilattice()
        .map_err(|_| Error::NotALattice {
            reason: "vertex lattice has non-unique meets".into(),
        })?;
    let bottom = g.n;
    let top = g.n + 1;
    if l.down_set(bottom).count_ones() != 1 || l.up_set(top).count_ones() != 1 {
        return Err(Error::NotALattice {
            reason: "designated bottom/top are not extreme".into(),
        });
    }
    for x in 0..l.len() {
        if !l.leq(bottom, x) || !l.leq(x, top) {
            return Err(Error::NotALattice {
                reason: "designated bottom/top are not comparable to everything".into(),
            });
        }
    }

    let edges = g.edges.clone();
    let l = l.clone();
    let to_poset = move |q: QElem| -> usize {
        match q {
            QElem::One => top,
            QElem::Zero => bottom,
            QElem::Vertex(v) => v as usize,
            QElem::Edge(_) => unreachable!(),
        }
    };
    let from_poset = move |x: usize| -> QElem {
        if x == top {
            QElem::One
        } else if x == bottom {
            QElem::Zero
        } else {
            QElem::Vertex(x as u8)
        }
    };
    let (t, _) = build_from_rule(g, move |a, b| {
        use QElem::*;
        match (a, b) {
            (Edge(_), Edge(_)) => Zero,
            (Edge(e), y) => {
                let fy = to_poset(y);
                if l.leq(edges[e as usize].1, fy) {
                    Edge(e)
                } else {
                    Zero
                }
            }
            (y, Edge(e)) => {
                let fy = to_poset(y);
                if l.leq(edges[e as usize].0, fy) {
                    Edge(e)
                } else {
                    Zero
                }
            }
            (x, y) => from_poset(l.meet(to_poset(x), to_poset(y)).expect("lattice meet")),
        }
    })?;
    Ok(t)
}

/// M'(G) for a simple digraph: generated by the vertex idempotents,
/// with e * f equal to the edge from e to f when it exists.
pub fn simple_quiver_monoid(g: &Digraph) -> Result<MonoidTable> {
    if !g.is_simple() {
        return Err(Error::InvalidInput(
            "simple quiver monoid requires a loop-free simple digraph".into(),
        ));
    }
    let edges = g.edges.clone();
    let edge_of = {
        let mut map = std::collections::HashMap::new();
        for (i, &(a, b)) in g.edges.iter().enumerate() {
            map.insert((a, b), i as u16);
        }
        map
    };
    let (t, _) = build_from_rule(g, move |a, b| {
        use QElem::*;
        match (a, b) {
            (One, x) | (x, One) => x,
            (Vertex(u), Vertex(v)) if u == v => Vertex(u),
            (Vertex(u), Vertex(v)) => match edge_of.get(&(u as usize, v as usize)) {
                Some(&e) => Edge(e),
                None => Zero,
            },
            (Vertex(u), Edge(e)) if edges[e as usize].0 == u as usize => Edge(e),
            (Edge(e), Vertex(v)) if edges[e as usize].1 == v as usize => Edge(e),
            _ => Zero,
        }
    })?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::quiver;

    #[test]
    fn single_edge_monoid_has_five_elements() {
        let g = Digraph::new(2, vec![(0, 1)]).unwrap();
        let t = quiver_monoid(&g).unwrap();
        assert_eq!(t.len(), 5);
        assert!(t.is_j_trivial());
        let q = quiver(&t).unwrap();
        assert_eq!(q.edges.len(), 1);
        assert_eq!(t.repr(q.edges[0].src), "v0");
        assert_eq!(t.repr(q.edges[0].dst), "v1");
    }

    #[test]
    fn edgeless_digraph_gives_an_empty_quiver() {
        let g = Digraph::new(3, vec![]).unwrap();
        let t = quiver_monoid(&g).unwrap();
        let q = quiver(&t).unwrap();
        assert!(q.edges.is_empty());
        assert_eq!(q.vertices.len(), 5); // 3 vertices + One + Zero
    }

    #[test]
    fn loops_and_multiedges_are_reproduced() {
        let g = Digraph::new(2, vec![(0, 0), (0, 1), (0, 1)]).unwrap();
        let t = quiver_monoid(&g).unwrap();
        let q = quiver(&t).unwrap();
        assert_eq!(q.edges.len(), 3);
    }

    #[test]
    fn simple_quiver_monoid_is_generated_by_vertices() {
        let g = Digraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let t = simple_quiver_monoid(&g).unwrap();
        assert_eq!(t.len(), 3 + 3 + 2);
        let q = quiver(&t).unwrap();
        assert_eq!(q.edges.len(), 3);
        assert!(!q.is_acyclic());
        let g2 = Digraph::new(2, vec![(0, 0)]).unwrap();
        assert!(simple_quiver_monoid(&g2).is_err());
    }

    #[test]
    fn lattice_version_with_antichain_recovers_m_of_g() {
        // antichain lattice: vertices pairwise incomparable between 0 and 1
        let g = Digraph::new(2, vec![(0, 1)]).unwrap();
        let bottom = 2;
        let top = 3;
        let l = Poset::from_covers(4, &[(bottom, 0), (bottom, 1), (0, top), (1, top)]).unwrap();
        let a = quiver_lattice_monoid(&g, &l).unwrap();
        let b = quiver_monoid(&g).unwrap();
        assert_eq!(a.len(), b.len());
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(a.product(x, y), b.product(x, y));
            }
        }
    }

    #[test]
    fn complete_digraph_from_a_chain_lattice() {
        // chain lattice 0 < v0 < v1 < 1 with all four edges between v0, v1
        let g = Digraph::new(2, vec![(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        let l = Poset::from_covers(4, &[(2, 0), (0, 1), (1, 3)]).unwrap();
        let t = quiver_lattice_monoid(&g, &l).unwrap();
        let q = quiver(&t).unwrap();
        assert_eq!(q.edges.len(), 4, "complete digraph on the two vertices");
    }
}
