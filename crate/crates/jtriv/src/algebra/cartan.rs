//! Cartan matrix and combinatorial projective modules.
//!
//! The Cartan invariant c_{e,f} = dim f_e KM f_f of a J-trivial monoid
//! counts the elements with left symbol e and right symbol f: pure
//! counting, no linear algebra. The projective module P_e has basis
//! {x : lfix(x) = e} with the original product truncated to the class.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monoid::{ElementId, MonoidTable};

/// Cartan matrix, rows and columns indexed by `idems` (sorted by id).
#[derive(Debug, Clone)]
pub struct CartanMatrix {
    pub idems: Vec<ElementId>,
    entries: Vec<u64>,
}

impl CartanMatrix {
    pub fn size(&self) -> usize {
        self.idems.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.size() + j]
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().sum()
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        (0..self.size())
            .map(|i| self.entries[i * self.size()..(i + 1) * self.size()].to_vec())
            .collect()
    }

    /// Directed support of the off-diagonal part: (i, j) with i != j and
    /// c_{i,j} > 0.
    pub fn support_digraph(&self) -> Vec<(usize, usize)> {
        let k = self.size();
        let mut out = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i != j && self.get(i, j) > 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Off-diagonal support, symmetrized: adjacency of the Cartan matrix
    /// drawn as an (undirected) graph.
    pub fn symmetrized_support(&self) -> Vec<Vec<u8>> {
        let k = self.size();
        let mut adj = vec![vec![0u8; k]; k];
        for (i, j) in self.support_digraph() {
            adj[i][j] = 1;
            adj[j][i] = 1;
        }
        adj
    }

    /// Is the raw off-diagonal support already symmetric?
    pub fn support_is_symmetric(&self) -> bool {
        let k = self.size();
        (0..k).all(|i| (0..k).all(|j| (self.get(i, j) > 0) == (self.get(j, i) > 0)))
    }

    pub fn to_dot(&self, t: &MonoidTable) -> String {
        let mut s = String::from("digraph cartan {\n");
        for &e in &self.idems {
            s.push_str(&format!("  \"{}\";\n", t.repr(e)));
        }
        for i in 0..self.size() {
            for j in 0..self.size() {
                let c = self.get(i, j);
                if c > 0 && i != j {
                    s.push_str(&format!(
                        "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                        t.repr(self.idems[i]),
                        t.repr(self.idems[j]),
                        c
                    ));
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Serialize)]
struct CartanJson<'a> {
    idempotents: Vec<&'a str>,
    cartan: Vec<Vec<u64>>,
}

impl CartanMatrix {
    pub fn to_json(&self, t: &MonoidTable) -> String {
        let payload = CartanJson {
            idempotents: self.idems.iter().map(|&e| t.repr(e)).collect(),
            cartan: self.rows(),
        };
        serde_json::to_string(&payload).expect("cartan serialization cannot fail")
    }
}

/// The Cartan matrix by counting (lfix, rfix) classes.
pub fn cartan_matrix(t: &MonoidTable) -> Result<CartanMatrix> {
    let idems = t.idempotents().to_vec();
    let k = idems.len();
    let mut pos = vec![u32::MAX; t.len()];
    for (i, &e) in idems.iter().enumerate() {
        pos[e.index()] = i as u32;
    }
    let lfix = t.lfix_all()?;
    let rfix = t.rfix_all()?;
    let mut entries = vec![0u64; k * k];
    for x in 0..t.len() {
        let i = pos[lfix[x] as usize] as usize;
        let j = pos[rfix[x] as usize] as usize;
        entries[i * k + j] += 1;
    }
    Ok(CartanMatrix { idems, entries })
}

/// The combinatorial right projective module P_e: basis
/// {x : lfix(x) = e}, action x . m = xm when lfix(xm) = e, else 0.
#[derive(Debug, Clone)]
pub struct ProjectiveModule {
    pub idempotent: ElementId,
    /// Basis elements, sorted by id.
    pub basis: Vec<ElementId>,
}

impl ProjectiveModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Right action of monoid element `m` on the `i`-th basis vector;
    /// `None` encodes zero.
    pub fn act(&self, t: &MonoidTable, i: usize, m: ElementId) -> Result<Option<usize>> {
        let xm = t.product(self.basis[i], m);
        if t.lfix(xm)? == self.idempotent {
            Ok(self.basis.binary_search(&xm).ok())
        } else {
            Ok(None)
        }
    }
}

pub fn projective_module(t: &MonoidTable, e: ElementId) -> Result<ProjectiveModule> {
    t.check_id(e)?;
    if !t.is_idempotent(e) {
        return Err(Error::NotIdempotent { x: e.0 });
    }
    let lfix = t.lfix_all()?;
    let basis = t.elements().filter(|x| lfix[x.index()] == e.0).collect();
    Ok(ProjectiveModule {
        idempotent: e,
        basis,
    })
}

/// Character of the simple module S_e on y: 1 iff e*y = e.
pub fn simple_character(t: &MonoidTable, e: ElementId, y: ElementId) -> Result<u8> {
    t.check_id(e)?;
    t.check_id(y)?;
    if !t.is_idempotent(e) {
        return Err(Error::NotIdempotent { x: e.0 });
    }
    Ok(u8::from(t.product(e, y) == e))
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
    fn trivial_monoid_has_cartan_one() {
        let (t, _) = MonoidTable::generate(
            Vec::<GeneratorSpec<u8>>::new(),
            0u8,
            |_, _| 0,
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        let c = cartan_matrix(&t).unwrap();
        assert_eq!(c.rows(), vec![vec![1]]);
    }

    #[test]
    fn cartan_counts_every_element_once() {
        let t = power_chain(6);
        let c = cartan_matrix(&t).unwrap();
        assert_eq!(c.total(), t.len() as u64);
        for i in 0..c.size() {
            assert!(c.get(i, i) >= 1);
        }
    }

    #[test]
    fn projective_dimensions_partition_the_monoid() {
        let t = power_chain(6);
        let mut total = 0;
        for &e in t.idempotents() {
            total += projective_module(&t, e).unwrap().dim();
        }
        assert_eq!(total, t.len());
    }

    #[test]
    fn simple_character_basics() {
        let t = power_chain(4);
        let e = t.omega(ElementId(1)).unwrap();
        assert_eq!(simple_character(&t, e, t.identity()).unwrap(), 1);
        assert_eq!(simple_character(&t, e, e).unwrap(), 1);
        // e = x^4 is absorbing, so S_e sees every element as 1
        assert_eq!(simple_character(&t, e, ElementId(1)).unwrap(), 1);
        assert!(simple_character(&t, ElementId(1), e).is_err());
    }
}
