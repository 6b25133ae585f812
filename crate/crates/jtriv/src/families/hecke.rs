//! 0-Hecke monoids of finite Coxeter groups, generated through the
//! right action of the simple projections pi_i on the group: pi_i
//! applies s_i exactly when that lengthens the element.

use crate::error::Result;
use crate::monoid::{ElementId, GeneratorSpec, MonoidTable, DEFAULT_ELEMENT_CAP};

use super::coxeter::{CoxElem, CoxeterGroup};

/// A 0-Hecke monoid together with its Coxeter group and the
/// element-of-the-group <-> element-of-the-monoid correspondence.
pub struct HeckeMonoid {
    pub group: CoxeterGroup,
    pub table: MonoidTable,
    /// Transformation tables of the monoid elements (value at index w is
    /// the image of group element w under right multiplication).
    pub actions: Vec<Vec<u32>>,
    /// Monoid element pi_w for each group element index.
    elem_of_w: Vec<ElementId>,
}

pub fn hecke_monoid(group: CoxeterGroup) -> Result<HeckeMonoid> {
    let order = group.order();
    let labels = group.generator_labels();
    let gens: Vec<GeneratorSpec<Vec<u32>>> = (0..group.num_generators())
        .map(|g| {
            let action: Vec<u32> = group
                .elements()
                .iter()
                .map(|w| group.element_index(&group.pi(w, g)).unwrap())
                .collect();
            GeneratorSpec::new(labels[g].clone(), action)
        })
        .collect();
    let identity: Vec<u32> = (0..order as u32).collect();
    let (table, actions) = MonoidTable::generate(
        gens,
        identity,
        |f, g| f.iter().map(|&x| g[x as usize]).collect(),
        DEFAULT_ELEMENT_CAP,
    )?;

    // id . pi_w = w recovers the correspondence
    let id_w = group.identity_index() as usize;
    let mut elem_of_w = vec![ElementId(0); order];
    for x in table.elements() {
        elem_of_w[actions[x.index()][id_w] as usize] = x;
    }
    Ok(HeckeMonoid {
        group,
        table,
        actions,
        elem_of_w,
    })
}

impl HeckeMonoid {
    /// The monoid element pi_w of a group element.
    pub fn pi_of(&self, w: &CoxElem) -> ElementId {
        self.elem_of_w[self.group.element_index(w).unwrap() as usize]
    }

    /// The group element with pi_w = x.
    pub fn w_of(&self, x: ElementId) -> &CoxElem {
        let id_w = self.group.identity_index() as usize;
        &self.group.elements()[self.actions[x.index()][id_w] as usize]
    }

    /// The idempotent pi_J: the longest element of the parabolic
    /// submonoid on the generator subset J (bitmask), computed as the
    /// omega power of the product of its generators.
    pub fn parabolic_idempotent(&self, j_mask: u32) -> Result<ElementId> {
        let mut prod = self.table.identity();
        for g in 0..self.table.num_generators() {
            if j_mask & (1 << g) != 0 {
                prod = self.table.product(prod, self.table.generators()[g]);
            }
        }
        self.table.omega(prod)
    }

    /// Left and right descent sets and content of a group element,
    /// computed on the Coxeter side (independent of the monoid).
    pub fn descents(&self, w: &CoxElem) -> (u32, u32, u32) {
        (
            self.group.left_descents(w),
            self.group.right_descents(w),
            self.group.content(w),
        )
    }
}
