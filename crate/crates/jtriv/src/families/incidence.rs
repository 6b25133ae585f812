//! The incidence monoid of a poset: comparable pairs with
//! (x,y)(z,t) = (x,t) when y = z and 0 otherwise, plus an adjoined
//! neutral One and absorbing Zero. Its algebra is the incidence algebra
//! of the poset padded by two one-dimensional blocks, so the Cartan
//! matrix is the zeta matrix and the quiver consists of the covers.

use crate::error::Result;
use crate::monoid::{ElementId, MonoidTable, DEFAULT_ELEMENT_CAP};
use crate::regressive::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IncidenceElement {
    One,
    Pair(u8, u8),
    Zero,
}

impl IncidenceElement {
    fn mul(self, other: IncidenceElement) -> IncidenceElement {
        use IncidenceElement::*;
        match (self, other) {
            (One, a) | (a, One) => a,
            (Zero, _) | (_, Zero) => Zero,
            (Pair(x, y), Pair(z, t)) => {
                if y == z {
                    Pair(x, t)
                } else {
                    Zero
                }
            }
        }
    }

    fn repr(&self) -> String {
        match self {
            IncidenceElement::One => "1".to_string(),
            IncidenceElement::Zero => "0".to_string(),
            IncidenceElement::Pair(x, y) => format!("({x},{y})"),
        }
    }
}

/// Build the incidence monoid M(P); elements are One, the comparable
/// pairs in lexicographic order, then Zero.
pub fn incidence_monoid(p: &Poset) -> Result<(MonoidTable, Vec<IncidenceElement>)> {
    let mut values = vec![IncidenceElement::One];
    for x in 0..p.len() {
        for y in 0..p.len() {
            if p.leq(x, y) {
                values.push(IncidenceElement::Pair(x as u8, y as u8));
            }
        }
    }
    values.push(IncidenceElement::Zero);
    let gen_indices: Vec<usize> = (1..values.len()).collect();
    let gen_labels: Vec<String> = values[1..].iter().map(|v| v.repr()).collect();
    let reprs: Vec<String> = values.iter().map(|v| v.repr()).collect();
    MonoidTable::from_elements(
        values,
        &gen_indices,
        gen_labels,
        |a, b| a.mul(*b),
        Some(reprs),
        DEFAULT_ELEMENT_CAP,
    )
}

/// The diagonal idempotent (x, x) of the table.
pub fn diagonal_idempotent(
    values: &[IncidenceElement],
    x: usize,
) -> Option<ElementId> {
    values
        .iter()
        .position(|&v| v == IncidenceElement::Pair(x as u8, x as u8))
        .map(|i| ElementId(i as u32))
}
