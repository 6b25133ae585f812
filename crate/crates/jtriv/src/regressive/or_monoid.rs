//! The monoid of order-preserving regressive functions on a poset.
//!
//! Functions act on the right (x.f); composition is left-to-right. The
//! monoid is enumerated by backtracking along the linear extension, not
//! generated, because no convenient generating set exists in general.
//! Idempotents are classified by their image sets: exactly the
//! join-closed subsets containing the minimal elements.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::monoid::{ElementId, MonoidTable};

use super::Poset;

/// An order-preserving regressive self-map, tabulated on poset indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrFunction {
    pub images: Vec<u8>,
}

impl OrFunction {
    pub fn identity(n: usize) -> OrFunction {
        OrFunction {
            images: (0..n as u8).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// self followed by other (right action composition).
    pub fn compose(&self, other: &OrFunction) -> OrFunction {
        OrFunction {
            images: self
                .images
                .iter()
                .map(|&y| other.images[y as usize])
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y as usize)
    }

    pub fn image_mask(&self) -> u64 {
        self.images.iter().fold(0, |m, &y| m | 1 << y)
    }

    /// Minimal points of the fibers, as a bitmask.
    pub fn fiber_minima(&self, p: &Poset) -> u64 {
        let mut out = 0u64;
        for x in 0..p.len() {
            let fiber: u64 = (0..p.len())
                .filter(|&z| self.images[z] == self.images[x])
                .fold(0, |m, z| m | 1 << z);
            if p.down_set(x) & fiber == 1 << x {
                out |= 1 << x;
            }
        }
        out
    }

    pub fn is_valid(&self, p: &Poset) -> bool {
        let n = p.len();
        if self.images.len() != n {
            return false;
        }
        for x in 0..n {
            if !p.leq(self.apply(x), x) {
                return false;
            }
            for y in 0..n {
                if p.leq(x, y) && !p.leq(self.apply(x), self.apply(y)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn repr(&self) -> String {
        let body: Vec<String> = self.images.iter().map(|y| y.to_string()).collect();
        format!("[{}]", body.join(","))
    }
}

/// Enumerate all of OR(P) by backtracking along the linear extension,
/// identity first, then enumeration order.
pub fn or_functions(p: &Poset) -> Vec<OrFunction> {
    let n = p.len();
    let order = p.linext().to_vec();
    let mut images = vec![0u8; n];
    let mut out = Vec::new();
    fn rec(
        p: &Poset,
        order: &[usize],
        k: usize,
        images: &mut Vec<u8>,
        out: &mut Vec<OrFunction>,
    ) {
        if k == order.len() {
            out.push(OrFunction {
                images: images.clone(),
            });
            return;
        }
        let x = order[k];
        for v in 0..p.len() {
            if !p.leq(v, x) {
                continue;
            }
            // order preservation against already-assigned smaller elements
            let ok = order[..k].iter().all(|&y| {
                !p.leq(y, x) || p.leq(images[y] as usize, v)
            });
            if ok {
                images[x] = v as u8;
                rec(p, order, k + 1, images, out);
            }
        }
    }
    rec(p, &order, 0, &mut images, &mut out);

    let id = OrFunction::identity(n);
    let pos = out.iter().position(|f| *f == id).expect("identity is in OR(P)");
    out.swap(0, pos);
    out
}

/// Build the monoid table of OR(P); every non-identity element is taken
/// as a generator.
pub fn or_monoid(p: &Poset, cap: usize) -> Result<(MonoidTable, Vec<OrFunction>)> {
    let values = or_functions(p);
    if values.len() > cap {
        return Err(Error::ClosureTooLarge { cap });
    }
    let gen_indices: Vec<usize> = (1..values.len()).collect();
    let gen_labels: Vec<String> = values[1..].iter().map(|f| f.repr()).collect();
    let reprs: Vec<String> = values.iter().map(|f| f.repr()).collect();
    let (table, values) = MonoidTable::from_elements(
        values,
        &gen_indices,
        gen_labels,
        |f, g| f.compose(g),
        Some(reprs),
        cap,
    )?;
    Ok((table, values))
}

/// Is `mask` the image set of an idempotent: does every element have a
/// unique maximal element of the set below it? (Equivalent to containing
/// the minimal elements and being stable under joins.)
pub fn is_valid_image_set(p: &Poset, mask: u64) -> bool {
    (0..p.len()).all(|x| unique_sup_below(p, mask, x).is_some())
}

fn unique_sup_below(p: &Poset, mask: u64, x: usize) -> Option<usize> {
    let below = mask & p.down_set(x);
    if below == 0 {
        return None;
    }
    let mut best: Option<usize> = None;
    let mut rest = below;
    while rest != 0 {
        let y = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if p.up_set(y) & below == 1 << y {
            if best.is_some() {
                return None;
            }
            best = Some(y);
        }
    }
    best
}

/// Image sets of the idempotents of OR(P): all join-closed subsets
/// containing the minimal elements, ascending as bitmasks.
pub fn or_idempotent_images(p: &Poset) -> Vec<u64> {
    let full = p.full_mask();
    let minim = p.minimals();
    (0..=full)
        .filter(|&s| s & minim == minim && is_valid_image_set(p, s))
        .collect()
}

/// The idempotent sup_I: x -> the largest element of I below x.
pub fn sup_map(p: &Poset, image: u64) -> Result<OrFunction> {
    let images = (0..p.len())
        .map(|x| {
            unique_sup_below(p, image, x)
                .map(|y| y as u8)
                .ok_or(Error::NotJoinClosed { x })
        })
        .collect::<Result<Vec<u8>>>()?;
    Ok(OrFunction { images })
}

/// Left and right symbols of f computed order-theoretically:
/// rfix = sup over the join closure of im(f), lfix = sup over the join
/// closure of the fiber minima.
pub fn or_symbols(p: &Poset, f: &OrFunction) -> (OrFunction, OrFunction) {
    let rimage = p.join_closure(f.image_mask());
    let limage = p.join_closure(f.fiber_minima(p));
    let rfix = sup_map(p, rimage).expect("join closures are valid images");
    let lfix = sup_map(p, limage).expect("join closures are valid images");
    (lfix, rfix)
}

/// Compare two subsets lexicographically as bit vectors along the
/// linear extension (earlier elements are more significant).
pub fn lex_compare(p: &Poset, a: u64, b: u64) -> std::cmp::Ordering {
    for &x in p.linext() {
        let (ba, bb) = (a >> x & 1, b >> x & 1);
        if ba != bb {
            return ba.cmp(&bb);
        }
    }
    std::cmp::Ordering::Equal
}

/// Verify, for every f in OR(P), that im(lfix f) <=_lex im(rfix f) with
/// equality exactly on idempotents. Implies that the Cartan matrix is
/// upper uni-triangular in the lex order of image sets.
pub fn lex_symbol_order_check(p: &Poset) -> bool {
    for f in or_functions(p) {
        let (l, r) = or_symbols(p, &f);
        let cmp = lex_compare(p, l.image_mask(), r.image_mask());
        let idem = f.compose(&f) == f;
        let ok = if idem {
            cmp == std::cmp::Ordering::Equal
        } else {
            cmp == std::cmp::Ordering::Less
        };
        if !ok {
            return false;
        }
    }
    true
}

/// Map an element id of an OR(P) table back to its position in `values`.
pub fn element_index(values: &[OrFunction], f: &OrFunction) -> Option<ElementId> {
    let map: HashMap<&OrFunction, u32> = values
        .iter()
        .enumerate()
        .map(|(i, g)| (g, i as u32))
        .collect();
    map.get(f).map(|&i| ElementId(i))
}
