//! Lifting orthogonal idempotents from the semisimple quotient.
//!
//! The canonical morphism phi onto the quotient sends x to x^omega. Each
//! Möbius idempotent g_e is lifted to an honest idempotent of the monoid
//! algebra by iterating y <- 1 - (1 - y^2)^2, and the lifts are made
//! orthogonal by the recursion f_i = P((1 - sum f_j) g_i (1 - sum f_j))
//! with the idempotents enumerated J-ascending. The resulting family is
//! a uni-triangular decomposition of the identity.

use std::collections::BTreeMap;

use super::{idempotent_lattice, AlgebraElement};
use crate::error::{Error, Result};
use crate::monoid::{ElementId, MonoidTable};

/// Linear extension of x -> x^omega: the canonical algebra morphism onto
/// the semisimple quotient, with image supported on idempotents.
pub fn omega_projection(t: &MonoidTable, a: &AlgebraElement) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero();
    for (x, c) in a.terms() {
        out.add_term(t.omega(x)?, c.clone());
    }
    Ok(out)
}

/// Iterate y <- 1 - (1 - y^2)^2 until idempotent, starting from `a`.
///
/// Requires phi(a) to be idempotent in the quotient; the iteration then
/// squares away the radical part and stops as soon as y^2 = y. The cap
/// ceil(log2 n) + 2 signals a precondition violation.
pub fn lift_power(t: &MonoidTable, a: &AlgebraElement) -> Result<AlgebraElement> {
    let cap = (t.len().max(2) as f64).log2().ceil() as usize + 2;
    let mut y = a.clone();
    for _ in 0..=cap {
        let s = y.mul(&y, t);
        if s == y {
            return Ok(y);
        }
        // 1 - (1 - y^2)^2 = 2 y^2 - y^4
        y = s.add(&s).sub(&s.mul(&s, t));
    }
    Err(Error::LiftDivergence { cap })
}

/// A complete family of orthogonal idempotents of the monoid algebra,
/// compatible with the semisimple quotient and uni-triangular for the
/// J-order.
pub struct OrthogonalIdempotents {
    /// Idempotents in the enumeration order used by the recursion
    /// (J-ascending: minimal idempotents first).
    pub order: Vec<ElementId>,
    map: BTreeMap<u32, AlgebraElement>,
}

impl OrthogonalIdempotents {
    pub fn get(&self, e: ElementId) -> &AlgebraElement {
        &self.map[&e.0]
    }

    pub fn iter(&self) -> impl Iterator<Item = (ElementId, &AlgebraElement)> {
        self.map.iter().map(|(&e, a)| (ElementId(e), a))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Lift the Möbius decomposition to a complete set (f_e) of orthogonal
/// idempotents of the monoid algebra with phi(f_e) = g_e and
/// f_e = e + (terms strictly J-below e).
pub fn orthogonal_idempotents(t: &MonoidTable) -> Result<OrthogonalIdempotents> {
    t.build_product_cache();
    let lat = idempotent_lattice(t)?;
    let order = lat.idems_ascending_j();
    let one = AlgebraElement::one();
    let mut sum = AlgebraElement::zero();
    let mut map = BTreeMap::new();
    for &e in &order {
        let g = lat.g_element(e);
        let c = one.sub(&sum);
        let f = lift_power(t, &c.mul(&g, t).mul(&c, t))?;
        sum = sum.add(&f);
        map.insert(e.0, f);
    }
    Ok(OrthogonalIdempotents { order, map })
}

/// The triangular basis b_x = f_{lfix(x)} x f_{rfix(x)} of the algebra;
/// b_x = x + (terms strictly J-below x).
pub fn b_basis(t: &MonoidTable) -> Result<BTreeMap<ElementId, AlgebraElement>> {
    let f = orthogonal_idempotents(t)?;
    let mut out = BTreeMap::new();
    for x in t.elements() {
        let fl = f.get(t.lfix(x)?);
        let fr = f.get(t.rfix(x)?);
        let bx = fl.mul(&AlgebraElement::basis(x), t).mul(fr, t);
        out.insert(x, bx);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{moebius_idempotents, star_product};
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
    fn projection_kills_radical_basis() {
        let t = power_chain(4);
        for x in t.elements() {
            let w = t.omega(x).unwrap();
            let r = AlgebraElement::basis(x).sub(&AlgebraElement::basis(w));
            assert!(omega_projection(&t, &r).unwrap().is_zero());
        }
    }

    #[test]
    fn projection_is_multiplicative_through_star() {
        let t = power_chain(5);
        for x in t.elements() {
            for y in t.elements() {
                let px = omega_projection(&t, &AlgebraElement::basis(x)).unwrap();
                let py = omega_projection(&t, &AlgebraElement::basis(y)).unwrap();
                let pxy = omega_projection(
                    &t,
                    &AlgebraElement::basis(t.product(x, y)),
                )
                .unwrap();
                assert_eq!(star_product(&t, &px, &py).unwrap(), pxy);
            }
        }
    }

    #[test]
    fn lift_fixes_idempotents_immediately() {
        let t = power_chain(3);
        let e = t.omega(ElementId(1)).unwrap();
        let a = AlgebraElement::basis(e);
        assert_eq!(lift_power(&t, &a).unwrap(), a);
    }

    #[test]
    fn lift_of_monoid_element_is_congruent_to_its_omega() {
        let t = power_chain(6);
        let x = ElementId(2);
        let lifted = lift_power(&t, &AlgebraElement::basis(x)).unwrap();
        assert!(lifted.is_idempotent(&t));
        let w = t.omega(x).unwrap();
        assert_eq!(
            omega_projection(&t, &lifted).unwrap(),
            AlgebraElement::basis(w)
        );
    }

    #[test]
    fn orthogonal_family_decomposes_the_identity() {
        let t = power_chain(5);
        let f = orthogonal_idempotents(&t).unwrap();
        let g = moebius_idempotents(&t).unwrap();
        let mut total = AlgebraElement::zero();
        for (e, fe) in f.iter() {
            total = total.add(fe);
            assert!(fe.is_idempotent(&t));
            assert_eq!(omega_projection(&t, fe).unwrap(), g[&e]);
            // uni-triangularity: leading coefficient 1 on e, rest J-below
            assert_eq!(fe.coeff(e), crate::algebra::rat(1));
            for x in fe.support() {
                assert!(t.leq_j(x, e).unwrap());
            }
            for (ep, fep) in f.iter() {
                let p = fe.mul(fep, &t);
                if e == ep {
                    assert_eq!(p, *fe);
                } else {
                    assert!(p.is_zero());
                }
            }
        }
        assert_eq!(total, AlgebraElement::one());
    }

    #[test]
    fn b_basis_is_triangular() {
        let t = power_chain(4);
        let b = b_basis(&t).unwrap();
        for (x, bx) in &b {
            assert_eq!(bx.coeff(*x), crate::algebra::rat(1));
            for y in bx.support() {
                assert!(t.leq_j(y, *x).unwrap());
            }
        }
    }
}
