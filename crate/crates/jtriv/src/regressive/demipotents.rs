//! Signed-diagram demipotents.
//!
//! For nondecreasing parking functions, a sign per generator yields the
//! elements C_D = L_D R_D, which form a complete set of 2^{N-1}
//! orthogonal idempotents. The construction branches to any meet
//! semi-lattice L: a sign per element of L (+ meaning "in the image"),
//! diagrams valid exactly when the + positions form a join-closed set
//! containing the minimal elements, and one demipotent C_D per valid
//! diagram with sum_D C_D = 1 at every depth of the prefix tree. Whether
//! the C_D are always demipotent with idempotent powers forming a
//! complete orthogonal family is checked, not assumed; the checker
//! records the power needed per diagram and treats failures as data.

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::monoid::{ElementId, MonoidTable};

use super::{or_idempotent_images, or_monoid, OrFunction, Poset};

/// A +/- assignment, one sign per position (true = +).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedDiagram {
    pub signs: Vec<bool>,
}

impl SignedDiagram {
    pub fn new(signs: Vec<bool>) -> Self {
        SignedDiagram { signs }
    }

    pub fn from_str_signs(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .map(|c| match c {
                '+' => Ok(true),
                '-' => Ok(false),
                _ => Err(Error::InvalidInput(format!("bad sign character {c:?}"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(SignedDiagram { signs })
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// All 2^n diagrams of length n, in binary counting order (all-minus
    /// first; position 0 is the fastest bit).
    pub fn all(n: usize) -> impl Iterator<Item = SignedDiagram> {
        (0u64..(1 << n)).map(move |mask| SignedDiagram {
            signs: (0..n).map(|i| mask & (1 << i) != 0).collect(),
        })
    }

    /// Positions with a + sign, as a bitmask.
    pub fn plus_mask(&self) -> u64 {
        self.signs
            .iter()
            .enumerate()
            .fold(0, |m, (i, &s)| if s { m | 1 << i } else { m })
    }
}

impl std::fmt::Display for SignedDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &s in &self.signs {
            write!(f, "{}", if s { '+' } else { '-' })?;
        }
        Ok(())
    }
}

fn gen_plus(t: &MonoidTable, j: usize) -> AlgebraElement {
    AlgebraElement::basis(t.generators()[j])
}

fn gen_minus(t: &MonoidTable, j: usize) -> AlgebraElement {
    AlgebraElement::one().sub(&gen_plus(t, j))
}

/// Maximal blocks of equal signs, as (start, end inclusive, sign).
fn sign_blocks(d: &SignedDiagram) -> Vec<(usize, usize, bool)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < d.signs.len() {
        let s = d.signs[i];
        let mut j = i;
        while j + 1 < d.signs.len() && d.signs[j + 1] == s {
            j += 1;
        }
        out.push((i, j, s));
        i = j + 1;
    }
    out
}

/// One signed block as an algebra element: the longest element of the
/// parabolic in the chosen signature. Plus blocks multiply descending
/// (pi_b ... pi_a), minus blocks ascending ((1-pi_a) ... (1-pi_b)).
fn block_element(t: &MonoidTable, lo: usize, hi: usize, plus: bool) -> AlgebraElement {
    let mut out = AlgebraElement::one();
    if plus {
        for j in (lo..=hi).rev() {
            out = out.mul(&gen_plus(t, j), t);
        }
    } else {
        for j in lo..=hi {
            out = out.mul(&gen_minus(t, j), t);
        }
    }
    out
}

/// L_D, R_D, and C_D = L_D R_D for a signed diagram over the generators
/// of a nondecreasing-parking-function table (one sign per generator,
/// + meaning the plain generator).
pub fn ndpf_diagram_demipotent(
    t: &MonoidTable,
    d: &SignedDiagram,
) -> Result<(AlgebraElement, AlgebraElement, AlgebraElement)> {
    if d.len() != t.num_generators() {
        return Err(Error::InvalidInput(format!(
            "diagram length {} does not match {} generators",
            d.len(),
            t.num_generators()
        )));
    }
    t.build_product_cache();
    let blocks = sign_blocks(d);
    let mut left = AlgebraElement::one();
    for &(lo, hi, s) in &blocks {
        left = left.mul(&block_element(t, lo, hi, s), t);
    }
    let mut right = AlgebraElement::one();
    for &(lo, hi, s) in blocks.iter().rev() {
        right = right.mul(&block_element(t, lo, hi, s), t);
    }
    let c = left.mul(&right, t);
    Ok((left, right, c))
}

/// The two-block normal form: all minus generators ascending, then all
/// plus generators descending. Equals C_D as an algebra element.
pub fn ndpf_norton_form(t: &MonoidTable, d: &SignedDiagram) -> Result<AlgebraElement> {
    if d.len() != t.num_generators() {
        return Err(Error::InvalidInput("diagram length mismatch".into()));
    }
    let mut out = AlgebraElement::one();
    for (j, &s) in d.signs.iter().enumerate() {
        if !s {
            out = out.mul(&gen_minus(t, j), t);
        }
    }
    for (j, &s) in d.signs.iter().enumerate().rev() {
        if s {
            out = out.mul(&gen_plus(t, j), t);
        }
    }
    Ok(out)
}

/// The complete family of 2^{N-1} demipotents C_D of NDPF_N (here they
/// are directly orthogonal idempotents summing to 1). Guarded: the
/// algebra dimension is the N-th Catalan number.
pub fn ndpf_orthogonal_set(
    n: usize,
) -> Result<(MonoidTable, Vec<(SignedDiagram, AlgebraElement)>)> {
    if n > 10 {
        return Err(Error::SizeGuard {
            what: "ndpf orthogonal set rank",
            value: n,
            cap: 10,
        });
    }
    let (t, _) = crate::families::ndpf(n)?;
    let mut out = Vec::new();
    for d in SignedDiagram::all(t.num_generators()) {
        let (_, _, c) = ndpf_diagram_demipotent(&t, &d)?;
        out.push((d, c));
    }
    Ok((t, out))
}

/// The semilattice demipotent family: diagrams assign one sign per
/// element of L along its linear extension, + meaning the element lies
/// in the image set; valid diagrams biject with the idempotents.
pub struct SemilatticeDemipotents {
    pub table: MonoidTable,
    pub values: Vec<OrFunction>,
    pub items: Vec<(SignedDiagram, AlgebraElement)>,
}

pub fn semilattice_demipotents(l: &Poset, cap: usize) -> Result<SemilatticeDemipotents> {
    l.require_meet_semilattice()?;
    let (table, values) = or_monoid(l, cap)?;
    table.build_product_cache();
    let index: std::collections::HashMap<&OrFunction, u32> = values
        .iter()
        .enumerate()
        .map(|(i, f)| (f, i as u32))
        .collect();
    let e_ab_element = |a: usize, b: usize| -> Result<AlgebraElement> {
        let f = super::e_ab(l, a, b)?;
        let id = *index
            .get(&f)
            .ok_or_else(|| Error::Internal("e_ab escaped OR(L)".into()))?;
        Ok(AlgebraElement::basis(ElementId(id)))
    };

    // depth-first over the prefix tree of valid diagrams
    struct Node {
        k: usize,
        image: u64,
        left: AlgebraElement,
        right: AlgebraElement,
        signs: Vec<bool>,
    }
    let order = l.linext().to_vec();
    let mut stack = vec![Node {
        k: 0,
        image: 0,
        left: AlgebraElement::one(),
        right: AlgebraElement::one(),
        signs: Vec::new(),
    }];
    let mut items = Vec::new();
    while let Some(node) = stack.pop() {
        if node.k == order.len() {
            let c = node.left.mul(&node.right, &table);
            items.push((SignedDiagram::new(node.signs), c));
            continue;
        }
        let x = order[node.k];
        let forced = l.down_set(x) == 1 << x || {
            // x a join of two image elements
            let mut found = false;
            let mut rest_a = node.image;
            'outer: while rest_a != 0 {
                let a = rest_a.trailing_zeros() as usize;
                rest_a &= rest_a - 1;
                let mut rest_b = rest_a;
                while rest_b != 0 {
                    let b = rest_b.trailing_zeros() as usize;
                    rest_b &= rest_b - 1;
                    if l.joins((1 << a) | (1 << b)) & (1 << x) != 0 {
                        found = true;
                        break 'outer;
                    }
                }
            }
            found
        };
        if forced {
            let mut signs = node.signs;
            signs.push(true);
            stack.push(Node {
                k: node.k + 1,
                image: node.image | 1 << x,
                left: node.left,
                right: node.right,
                signs,
            });
            continue;
        }
        // the largest image element below x: unique because the image is
        // join-closed in the processed prefix and x is not join-forced
        let below = node.image & l.down_set(x);
        let b = {
            let mut best = None;
            let mut rest = below;
            while rest != 0 {
                let y = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if l.up_set(y) & below == 1 << y {
                    debug_assert!(best.is_none(), "sup below a non-forced element is unique");
                    best = Some(y);
                }
            }
            best.ok_or_else(|| Error::Internal("non-minimal element with empty image below".into()))?
        };
        let factor = e_ab_element(x, b)?;
        let cofactor = AlgebraElement::one().sub(&factor);

        // minus child: x stays out of the image, factor e_{x,b}
        let mut minus_signs = node.signs.clone();
        minus_signs.push(false);
        stack.push(Node {
            k: node.k + 1,
            image: node.image,
            left: node.left.mul(&factor, &table),
            right: factor.mul(&node.right, &table),
            signs: minus_signs,
        });
        // plus child: x enters the image, factor 1 - e_{x,b}
        let mut plus_signs = node.signs;
        plus_signs.push(true);
        stack.push(Node {
            k: node.k + 1,
            image: node.image | 1 << x,
            left: node.left.mul(&cofactor, &table),
            right: cofactor.mul(&node.right, &table),
            signs: plus_signs,
        });
    }
    // deterministic order: by plus mask
    items.sort_by_key(|(d, _)| d.plus_mask());
    Ok(SemilatticeDemipotents {
        table,
        values,
        items,
    })
}

/// Per-diagram outcome of the orthogonality check.
#[derive(Debug, Clone)]
pub struct DiagramOutcome {
    pub diagram: String,
    /// Smallest k with C^k = C^{k+1}; None when the power cap (the
    /// algebra dimension) was exceeded - a counterexample candidate.
    pub power: Option<usize>,
}

/// Report of the demipotent conjecture checker on one meet semi-lattice.
#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub poset_size: usize,
    pub or_size: usize,
    pub idempotent_count: usize,
    pub diagram_count: usize,
    pub outcomes: Vec<DiagramOutcome>,
    pub max_power: Option<usize>,
    pub stabilized_orthogonal: bool,
    pub stabilized_sum_is_one: bool,
    pub sum_before_powering_is_one: bool,
    pub counts_match: bool,
}

impl ConjectureReport {
    /// The conjecture holds on this instance: every demipotent stabilized
    /// to an idempotent and the stabilized family is a complete
    /// orthogonal decomposition of the identity.
    pub fn passes(&self) -> bool {
        self.max_power.is_some()
            && self.stabilized_orthogonal
            && self.stabilized_sum_is_one
            && self.sum_before_powering_is_one
            && self.counts_match
    }
}

/// Check the demipotent family of a meet semi-lattice: compute the power
/// needed to stabilize each C_D, then verify idempotency, pairwise
/// orthogonality, sum 1, and completeness by cardinality. Failures are
/// recorded, never raised.
pub fn conjecture_check(l: &Poset, cap: usize) -> Result<ConjectureReport> {
    let demi = semilattice_demipotents(l, cap)?;
    let t = &demi.table;
    let dim = t.len();
    let mut outcomes = Vec::new();
    let mut stabilized = Vec::new();
    let mut sum_before = AlgebraElement::zero();
    for (d, c) in &demi.items {
        sum_before = sum_before.add(c);
        let mut prev = c.clone();
        let mut power = 1usize;
        let mut converged = false;
        while power <= dim {
            let next = prev.mul(c, t);
            if next == prev {
                converged = true;
                break;
            }
            prev = next;
            power += 1;
        }
        outcomes.push(DiagramOutcome {
            diagram: d.to_string(),
            power: converged.then_some(power),
        });
        stabilized.push(prev);
    }
    let max_power = outcomes
        .iter()
        .map(|o| o.power)
        .collect::<Option<Vec<_>>>()
        .map(|v| v.into_iter().max().unwrap_or(1));

    let mut orthogonal = true;
    let mut sum = AlgebraElement::zero();
    for (i, a) in stabilized.iter().enumerate() {
        sum = sum.add(a);
        for (j, b) in stabilized.iter().enumerate() {
            let p = a.mul(b, t);
            let expect_zero = i != j;
            if expect_zero && !p.is_zero() {
                orthogonal = false;
            }
            if !expect_zero && p != *a {
                orthogonal = false;
            }
        }
    }
    let idempotent_count = t.idempotents().len();
    Ok(ConjectureReport {
        poset_size: l.len(),
        or_size: dim,
        idempotent_count,
        diagram_count: demi.items.len(),
        outcomes,
        max_power,
        stabilized_orthogonal: orthogonal,
        stabilized_sum_is_one: sum == AlgebraElement::one(),
        sum_before_powering_is_one: sum_before == AlgebraElement::one(),
        counts_match: demi.items.len() == idempotent_count
            && demi.items.len() == or_idempotent_images(l).len(),
    })
}
