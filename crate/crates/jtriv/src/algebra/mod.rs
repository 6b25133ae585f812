//! The monoid algebra over exact rationals, and its representation theory.
//!
//! Everything here is exact: coefficients are arbitrary-precision
//! rationals, so idempotent lifting, radical filtrations, and rank
//! computations carry no numerical error. The combinatorial invariants
//! (Cartan matrix, quiver) are computed by counting in the monoid and
//! never touch linear algebra.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::monoid::{ElementId, MonoidTable};

mod cartan;
mod lattice;
mod lifting;
mod quiver;
mod radical;

pub use cartan::{cartan_matrix, projective_module, simple_character, CartanMatrix, ProjectiveModule};
pub use lattice::{idempotent_lattice, moebius_idempotents, star, star_product, IdempotentLattice};
pub use lifting::{
    b_basis, lift_power, omega_projection, orthogonal_idempotents, OrthogonalIdempotents,
};
pub use quiver::{
    classify_factorizations, hecke_quiver_prediction, quiver, quiver_all_pairs,
    FactorizationClasses, Quiver, QuiverEdge,
};
pub use radical::{rad_mod_rad_square_dim, rad_square_dim, radical_filtration, RadicalSeries};

/// A sparse exact-rational linear combination of monoid elements.
///
/// No zero coefficients are ever stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    coeffs: BTreeMap<u32, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    /// The basis vector of a single monoid element.
    pub fn basis(x: ElementId) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(x.0, BigRational::one());
        AlgebraElement { coeffs }
    }

    /// The identity of the algebra (basis vector of the monoid identity).
    pub fn one() -> Self {
        AlgebraElement::basis(ElementId(0))
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (ElementId, BigRational)>,
    {
        let mut out = AlgebraElement::zero();
        for (x, c) in terms {
            out.add_term(x, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, x: ElementId) -> BigRational {
        self.coeffs.get(&x.0).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (ElementId, &BigRational)> {
        self.coeffs.iter().map(|(&x, c)| (ElementId(x), c))
    }

    pub fn support(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.coeffs.keys().map(|&x| ElementId(x))
    }

    pub fn add_term(&mut self, x: ElementId, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(x.0) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, c) in other.terms() {
            out.add_term(x, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, c) in other.terms() {
            out.add_term(x, -c.clone());
        }
        out
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&x, c)| (x, c.clone() * r.clone()))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    /// Product in the monoid algebra, bilinear extension of the monoid
    /// product read from `table`.
    pub fn mul(&self, other: &Self, table: &MonoidTable) -> Self {
        let mut out = AlgebraElement::zero();
        for (x, cx) in self.terms() {
            for (y, cy) in other.terms() {
                out.add_term(table.product(x, y), cx.clone() * cy.clone());
            }
        }
        out
    }

    /// Is this element idempotent in the algebra of `table`?
    pub fn is_idempotent(&self, table: &MonoidTable) -> bool {
        self.mul(self, table) == *self
    }

    /// Sum of all coefficients (the augmentation map).
    pub fn coeff_sum(&self) -> BigRational {
        self.coeffs
            .values()
            .fold(BigRational::zero(), |a, c| a + c.clone())
    }

    /// Human-readable form using the table's element reprs.
    pub fn display<'a>(&'a self, table: &'a MonoidTable) -> AlgebraDisplay<'a> {
        AlgebraDisplay { elt: self, table }
    }
}

pub struct AlgebraDisplay<'a> {
    elt: &'a AlgebraElement,
    table: &'a MonoidTable,
}

impl std::fmt::Display for AlgebraDisplay<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.elt.is_zero() {
            return write!(f, "0");
        }
        for (i, (x, c)) in self.elt.terms().enumerate() {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag.is_one() {
                write!(f, "{}", self.table.repr(x))?;
            } else {
                write!(f, "{}*{}", mag, self.table.repr(x))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{GeneratorSpec, DEFAULT_ELEMENT_CAP};

    fn two_chain() -> MonoidTable {
        // {1, x} with x^2 = x
        MonoidTable::generate(
            vec![GeneratorSpec::new("x", 1u8)],
            0u8,
            |a, b| (a + b).min(1),
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap()
        .0
    }

    #[test]
    fn no_zero_coefficients_survive() {
        let x = ElementId(1);
        let a = AlgebraElement::basis(x);
        let d = a.sub(&a);
        assert!(d.is_zero());
        assert_eq!(d.support_len(), 0);
        let mut b = AlgebraElement::zero();
        b.add_term(x, rat(3));
        b.add_term(x, rat(-3));
        assert!(b.is_zero());
    }

    #[test]
    fn complement_of_idempotent_is_idempotent() {
        let t = two_chain();
        let x = AlgebraElement::basis(ElementId(1));
        let c = AlgebraElement::one().sub(&x);
        assert!(x.is_idempotent(&t));
        assert!(c.is_idempotent(&t));
        assert!(c.mul(&x, &t).is_zero());
        assert_eq!(c.add(&x), AlgebraElement::one());
    }

    #[test]
    fn display_is_readable() {
        let t = two_chain();
        let a = AlgebraElement::one().sub(&AlgebraElement::basis(ElementId(1)).scale(&rat(2)));
        assert_eq!(format!("{}", a.display(&t)), "[] - 2*[x]");
    }
}
