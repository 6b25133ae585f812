//! The idempotents e_{a,b} of OR(L) on a meet semi-lattice and the
//! canonical factorization of idempotents into cover generators.
//!
//! For a >= b the map e_{a,b} sends x <= a to x meet b and fixes the
//! rest; it is the pointwise largest element of OR(L) sending a to b,
//! and e_{a,b} e_{b,c} = e_{a,c}. The family over cover pairs minimally
//! generates the idempotents (though not all of OR(L)).

use crate::error::{Error, Result};

use super::{OrFunction, Poset};

/// The idempotent x -> x meet b for x <= a, x otherwise. Requires a
/// meet semi-lattice and a >= b.
pub fn e_ab(l: &Poset, a: usize, b: usize) -> Result<OrFunction> {
    l.require_meet_semilattice()?;
    if !l.leq(b, a) {
        return Err(Error::NotAbove { a, b });
    }
    let images = (0..l.len())
        .map(|x| {
            if l.leq(x, a) {
                l.meet(x, b).expect("meet semi-lattice") as u8
            } else {
                x as u8
            }
        })
        .collect();
    Ok(OrFunction { images })
}

/// Factor an idempotent of OR(L) as a word in cover generators e_{a,b}
/// ((upper, lower) pairs, to be composed left to right).
///
/// Peels the linear extension from the top: at each step f = g * e_{a, a.f}
/// with g fixing a, and each e_{a, a.f} is refined into a saturated chain
/// of covers.
pub fn factor_idempotent(l: &Poset, f: &OrFunction) -> Result<Vec<(usize, usize)>> {
    l.require_meet_semilattice()?;
    if f.compose(f) != *f {
        return Err(Error::InvalidInput(
            "factor_idempotent requires an idempotent function".into(),
        ));
    }
    let mut blocks: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut g = f.clone();
    for &a in l.linext().iter().rev() {
        let target = g.apply(a);
        if target != a {
            // g = g' * e_{a, target} with g' fixing a
            blocks.push(cover_chain(l, a, target));
            let mut images = g.images.clone();
            images[a] = a as u8;
            g = OrFunction { images };
        }
    }
    // the peeling consumed everything: g is now the identity
    debug_assert!(g.is_identity());
    blocks.reverse();
    Ok(blocks.concat())
}

/// A saturated chain of covers from a down to b (a >= b), staying above
/// b; deterministic: the smallest-labelled admissible cover is taken.
fn cover_chain(l: &Poset, a: usize, b: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut cur = a;
    while cur != b {
        let next = (0..l.len())
            .find(|&c| {
                l.leq(b, c) && l.lt(c, cur) && {
                    // c covered by cur
                    let between = l.up_set(c) & l.down_set(cur) & !(1 << c) & !(1 << cur);
                    between == 0
                }
            })
            .expect("some cover of cur stays above b");
        out.push((cur, next));
        cur = next;
    }
    out
}

/// Evaluate a cover word produced by `factor_idempotent`.
pub fn evaluate_cover_word(l: &Poset, word: &[(usize, usize)]) -> Result<OrFunction> {
    let mut f = OrFunction::identity(l.len());
    for &(a, b) in word {
        f = f.compose(&e_ab(l, a, b)?);
    }
    Ok(f)
}
