//! Left and right symbols.
//!
//! For x in a J-trivial monoid, rfix(x) is the J-smallest idempotent e
//! with x*e = x, and symmetrically for lfix(x). The ground-truth
//! computation folds the fixing idempotents with the star product
//! e * f -> (ef)^omega, which realizes the meet of the idempotent
//! lattice. A faster lookup through generator-stabilizer bitvectors is
//! exposed separately and cross-checked against the fold in tests.

use std::collections::HashMap;

use super::{ElementId, MonoidTable, SymbolData};
use crate::error::{Error, Result};

impl MonoidTable {
    fn symbols(&self) -> Result<&SymbolData> {
        self.syms
            .get_or_init(|| {
                if let Some((x, y)) = self.j_trivial_witness() {
                    return Err(Error::NotJTrivial { x: x.0, y: y.0 });
                }
                let idems = self.idempotents().to_vec();
                let n = self.n;
                let mut lfix = vec![0u32; n];
                let mut rfix = vec![0u32; n];
                for x in 0..n as u32 {
                    let x = ElementId(x);
                    let mut l: Option<ElementId> = None;
                    let mut r: Option<ElementId> = None;
                    for &e in &idems {
                        if self.product(x, e) == x {
                            r = Some(match r {
                                None => e,
                                Some(a) => self.star_raw(a, e)?,
                            });
                        }
                        if self.product(e, x) == x {
                            l = Some(match l {
                                None => e,
                                Some(a) => self.star_raw(a, e)?,
                            });
                        }
                    }
                    // the identity fixes everything, so both folds are nonempty
                    lfix[x.index()] = l.unwrap().0;
                    rfix[x.index()] = r.unwrap().0;
                }
                Ok(SymbolData { lfix, rfix })
            })
            .as_ref()
            .map_err(|e| e.clone())
    }

    /// The J-smallest idempotent e with e*x = x.
    pub fn lfix(&self, x: ElementId) -> Result<ElementId> {
        Ok(ElementId(self.symbols()?.lfix[x.index()]))
    }

    /// The J-smallest idempotent e with x*e = x.
    pub fn rfix(&self, x: ElementId) -> Result<ElementId> {
        Ok(ElementId(self.symbols()?.rfix[x.index()]))
    }

    pub fn lfix_all(&self) -> Result<&[u32]> {
        Ok(&self.symbols()?.lfix)
    }

    pub fn rfix_all(&self) -> Result<&[u32]> {
        Ok(&self.symbols()?.rfix)
    }

    /// Left/right symbols through generator-stabilizer bitvectors: each x
    /// is keyed by which generators fix it, and the key is looked up in a
    /// map built from the idempotents. Returns `(lfix, rfix)` vectors.
    ///
    /// Fails if two idempotents share a key or some element's key is
    /// missing; the fold-based [`MonoidTable::lfix`] is the reference
    /// implementation.
    pub fn symbols_bitvector(&self) -> Result<(Vec<u32>, Vec<u32>)> {
        if let Some((x, y)) = self.j_trivial_witness() {
            return Err(Error::NotJTrivial { x: x.0, y: y.0 });
        }
        let n = self.n;
        let m = self.m;
        let words = m.div_ceil(64).max(1);
        let key = |x: usize, from_left: bool| -> Vec<u64> {
            let mut k = vec![0u64; words];
            for j in 0..m {
                let fixed = if from_left {
                    self.left[x * m + j] as usize == x
                } else {
                    self.right[x * m + j] as usize == x
                };
                if fixed {
                    k[j / 64] |= 1u64 << (j % 64);
                }
            }
            k
        };
        let mut map: HashMap<Vec<u64>, u32> = HashMap::new();
        for &e in self.idempotents() {
            let k = key(e.index(), true);
            debug_assert_eq!(k, key(e.index(), false));
            if map.insert(k, e.0).is_some() {
                return Err(Error::Internal(
                    "two idempotents share a stabilizer bitvector".into(),
                ));
            }
        }
        let mut lfix = vec![0u32; n];
        let mut rfix = vec![0u32; n];
        for x in 0..n {
            lfix[x] = *map.get(&key(x, true)).ok_or_else(|| {
                Error::Internal(format!("left stabilizer key of {x} matches no idempotent"))
            })?;
            rfix[x] = *map.get(&key(x, false)).ok_or_else(|| {
                Error::Internal(format!("right stabilizer key of {x} matches no idempotent"))
            })?;
        }
        Ok((lfix, rfix))
    }

    /// Elements (other than the identity) admitting no proper
    /// factorization x = uv with u != x and v != x. For a J-trivial
    /// monoid these form the unique minimal generating set.
    pub fn minimal_generators(&self) -> Vec<ElementId> {
        self.build_product_cache();
        let n = self.n;
        let mut factorable = vec![false; n];
        for u in 1..n as u32 {
            for v in 1..n as u32 {
                let x = self.product(ElementId(u), ElementId(v));
                if x.0 != u && x.0 != v {
                    factorable[x.index()] = true;
                }
            }
        }
        (1..n as u32)
            .map(ElementId)
            .filter(|x| !factorable[x.index()])
            .collect()
    }
}
