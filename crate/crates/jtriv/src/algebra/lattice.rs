//! The lattice of idempotents and its Möbius function.
//!
//! In a J-trivial monoid the idempotents under the J-order form a lattice
//! whose meet is the star product e * f = (ef)^omega, and the semisimple
//! quotient of the monoid algebra is the algebra of that lattice. Möbius
//! inversion over the lattice yields the maximal decomposition of the
//! identity into orthogonal idempotents g_e of the quotient.

use std::collections::BTreeMap;

use super::{rat, AlgebraElement};
use crate::error::{Error, Result};
use crate::monoid::{ElementId, MonoidTable};

/// Idempotents with their J-order, star (meet) table, and Möbius values.
pub struct IdempotentLattice {
    /// Idempotents sorted by element id.
    pub idems: Vec<ElementId>,
    /// Position in `idems` per element id (u32::MAX for non-idempotents).
    pos_of: Vec<u32>,
    /// leq[i * k + j]: idems[i] <=_J idems[j].
    leq: Vec<bool>,
    /// star[i * k + j]: element id of idems[i] * idems[j].
    star: Vec<u32>,
    /// moebius[i * k + j] = mu(idems[i], idems[j]) for idems[i] <= idems[j].
    moebius: Vec<i64>,
    /// Lattice positions sorted J-descending (top first).
    desc: Vec<u32>,
}

impl IdempotentLattice {
    pub fn size(&self) -> usize {
        self.idems.len()
    }

    /// Lattice position of an idempotent.
    pub fn pos(&self, e: ElementId) -> Option<usize> {
        let p = *self.pos_of.get(e.index())?;
        (p != u32::MAX).then_some(p as usize)
    }

    pub fn leq(&self, e: ElementId, f: ElementId) -> bool {
        let (i, j) = (self.pos(e).unwrap(), self.pos(f).unwrap());
        self.leq[i * self.size() + j]
    }

    pub fn meet(&self, e: ElementId, f: ElementId) -> ElementId {
        let (i, j) = (self.pos(e).unwrap(), self.pos(f).unwrap());
        ElementId(self.star[i * self.size() + j])
    }

    pub fn moebius(&self, lower: ElementId, upper: ElementId) -> i64 {
        let (i, j) = (self.pos(lower).unwrap(), self.pos(upper).unwrap());
        self.moebius[i * self.size() + j]
    }

    /// The bottom of the lattice (meet of all idempotents).
    pub fn minimum(&self) -> ElementId {
        let k = self.size();
        let i = (0..k)
            .find(|&i| (0..k).all(|j| self.leq[i * k + j]))
            .expect("a lattice has a minimum");
        self.idems[i]
    }

    pub fn top(&self) -> ElementId {
        ElementId(0)
    }

    /// Idempotents ordered J-ascending (minimal first): the enumeration
    /// used by the lifting recursion.
    pub fn idems_ascending_j(&self) -> Vec<ElementId> {
        self.desc
            .iter()
            .rev()
            .map(|&i| self.idems[i as usize])
            .collect()
    }

    /// The Möbius idempotent g_e of the semisimple quotient.
    pub fn g_element(&self, e: ElementId) -> AlgebraElement {
        let k = self.size();
        let j = self.pos(e).expect("idempotent of this lattice");
        let mut out = AlgebraElement::zero();
        for i in 0..k {
            if self.leq[i * k + j] {
                out.add_term(self.idems[i], rat(self.moebius[i * k + j]));
            }
        }
        out
    }
}

/// Validated star product (ef)^omega of two idempotents: the meet of the
/// idempotent lattice, and the product of the semisimple quotient.
pub fn star(t: &MonoidTable, e: ElementId, f: ElementId) -> Result<ElementId> {
    for x in [e, f] {
        t.check_id(x)?;
        if !t.is_idempotent(x) {
            return Err(Error::NotIdempotent { x: x.0 });
        }
    }
    t.star_raw(e, f)
}

/// Build the idempotent lattice of a J-trivial monoid, verifying the
/// lattice axioms (top element, unique meets realized by star).
pub fn idempotent_lattice(t: &MonoidTable) -> Result<IdempotentLattice> {
    if let Some((x, y)) = t.j_trivial_witness() {
        return Err(Error::NotJTrivial { x: x.0, y: y.0 });
    }
    let idems: Vec<ElementId> = t.idempotents().to_vec();
    let k = idems.len();
    let mut pos_of = vec![u32::MAX; t.len()];
    for (i, &e) in idems.iter().enumerate() {
        pos_of[e.index()] = i as u32;
    }

    // e <=_J f iff ef = e, a single product per pair
    let mut leq = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            leq[i * k + j] = t.product(idems[i], idems[j]) == idems[i];
        }
    }

    let mut star_tab = vec![0u32; k * k];
    for i in 0..k {
        for j in 0..k {
            let s = t.star_raw(idems[i], idems[j])?;
            let sp = pos_of[s.index()];
            if sp == u32::MAX {
                return Err(Error::NotALattice {
                    reason: format!("star({}, {}) is not idempotent", idems[i], idems[j]),
                });
            }
            star_tab[i * k + j] = s.0;
            // meet laws: s below both, and above every common lower bound
            let sp = sp as usize;
            if !leq[sp * k + i] || !leq[sp * k + j] {
                return Err(Error::NotALattice {
                    reason: "star product is not a lower bound".into(),
                });
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            let sp = pos_of[star_tab[i * k + j] as usize] as usize;
            for z in 0..k {
                if leq[z * k + i] && leq[z * k + j] && !leq[z * k + sp] {
                    return Err(Error::NotALattice {
                        reason: "a common lower bound escapes the star meet".into(),
                    });
                }
            }
        }
    }
    if pos_of[0] == u32::MAX {
        return Err(Error::NotALattice {
            reason: "identity is missing".into(),
        });
    }

    // J-descending enumeration of lattice positions via the monoid linext
    let jo = t.j_order()?;
    let mut desc: Vec<u32> = (0..k as u32).collect();
    desc.sort_by_key(|&i| jo.position[idems[i as usize].index()]);

    // Möbius recursion over each upper interval, top-down
    let mut moebius = vec![0i64; k * k];
    for j in 0..k {
        for &iu in &desc {
            let i = iu as usize;
            if !leq[i * k + j] {
                continue;
            }
            if i == j {
                moebius[i * k + j] = 1;
            } else {
                let mut s = 0i64;
                for w in 0..k {
                    if w != i && leq[i * k + w] && leq[w * k + j] {
                        s += moebius[w * k + j];
                    }
                }
                moebius[i * k + j] = -s;
            }
        }
    }

    Ok(IdempotentLattice {
        idems,
        pos_of,
        leq,
        star: star_tab,
        moebius,
        desc,
    })
}

/// The Möbius idempotents g_e, keyed by idempotent. They satisfy
/// sum_e g_e = 1 and g_u g_v = delta_{uv} g_u under the star product.
pub fn moebius_idempotents(t: &MonoidTable) -> Result<BTreeMap<ElementId, AlgebraElement>> {
    let lat = idempotent_lattice(t)?;
    Ok(lat
        .idems
        .iter()
        .map(|&e| (e, lat.g_element(e)))
        .collect())
}

/// Bilinear extension of the star product to idempotent-supported
/// elements: the product of the semisimple quotient.
pub fn star_product(
    t: &MonoidTable,
    a: &AlgebraElement,
    b: &AlgebraElement,
) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero();
    for (x, cx) in a.terms() {
        for (y, cy) in b.terms() {
            let s = star(t, x, y)?;
            out.add_term(s, cx.clone() * cy.clone());
        }
    }
    Ok(out)
}
