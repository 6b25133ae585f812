//! Finite monoid tables.
//!
//! A [`MonoidTable`] is an immutable, fully materialized finite monoid:
//! elements are indexed by [`ElementId`] (id 0 is the identity), products
//! are answered from the left/right Cayley graphs by word recursion, and
//! the usual structural queries (idempotents, omega powers, J-order,
//! left/right symbols) are memoized behind the table.
//!
//! Tables are built either by breadth-first closure of a generating set
//! acting on opaque values ([`MonoidTable::generate`]) or from an explicit
//! element list with a product rule ([`MonoidTable::from_elements`]).

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::OnceLock;

use crate::error::{Error, Result};

mod json;
mod order;
mod symbols;

pub use json::MonoidDump;
pub use order::JOrderData;

/// Index of an element in a [`MonoidTable`].
///
/// Invariant: `0 <= id < table.len()` and id 0 is the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(pub u32);

impl ElementId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Display for ElementId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A labelled generator given by an opaque action value.
///
/// The action values only need equality, hashing, and a composition rule
/// supplied to [`MonoidTable::generate`]; typical instances are
/// transformations of a finite set, Boolean matrices, or group elements.
#[derive(Debug, Clone)]
pub struct GeneratorSpec<T> {
    pub label: String,
    pub action: T,
}

impl<T> GeneratorSpec<T> {
    pub fn new(label: impl Into<String>, action: T) -> Self {
        GeneratorSpec {
            label: label.into(),
            action,
        }
    }
}

/// Default cap on the number of elements discovered during closure.
pub const DEFAULT_ELEMENT_CAP: usize = 2_000_000;

/// Seed used by the deterministic associativity spot-check.
pub const DEFAULT_SELF_CHECK_SEED: u64 = 0x6a_7472_6976;

/// Full n x n product tables are only cached up to this size.
const DENSE_PRODUCT_LIMIT: usize = 4096;

/// Transitive closure of the J-order is precomputed up to this size.
const JORDER_CLOSURE_LIMIT: usize = 10_000;

/// All triples are checked for associativity up to this size; beyond it a
/// fixed-seed sample of triples is used.
const ASSOC_EXHAUSTIVE_LIMIT: usize = 32;
const ASSOC_SAMPLES: usize = 2_000;

pub(crate) struct SymbolData {
    pub lfix: Vec<u32>,
    pub rfix: Vec<u32>,
}

/// An immutable generated monoid.
///
/// All query methods are safe for concurrent readers; memoized data lives
/// in `OnceLock` cells. Generation itself is single-threaded.
pub struct MonoidTable {
    n: usize,
    m: usize,
    gens: Vec<ElementId>,
    gen_labels: Vec<String>,
    /// Right Cayley graph, `right[x * m + j] = x * s_j`.
    right: Vec<u32>,
    /// Left Cayley graph, `left[x * m + j] = s_j * x`.
    left: Vec<u32>,
    /// Word recursion: element x = word_prefix[x] * s_{word_gen[x]}.
    /// The identity has `word_prefix = u32::MAX`.
    word_prefix: Vec<u32>,
    word_gen: Vec<u16>,
    /// Flattened words (generator indices), for allocation-free products.
    word_flat: Vec<u16>,
    word_off: Vec<u32>,
    /// Ids in BFS discovery order (identity first).
    bfs_order: Vec<u32>,
    repr: Vec<String>,
    dropped_generators: Vec<String>,

    dense: OnceLock<Option<Vec<u32>>>,
    omega: OnceLock<Result<Vec<u32>>>,
    idems: OnceLock<Vec<ElementId>>,
    jtriv: OnceLock<Option<(ElementId, ElementId)>>,
    jorder: OnceLock<Result<JOrderData>>,
    jclosure: OnceLock<Option<Vec<u64>>>,
    syms: OnceLock<Result<SymbolData>>,
}

impl std::fmt::Debug for MonoidTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MonoidTable")
            .field("n", &self.n)
            .field("generators", &self.gen_labels)
            .finish_non_exhaustive()
    }
}

impl MonoidTable {
    /// Breadth-first closure of `gens` from `identity` under right
    /// multiplication. Ids are assigned in discovery order with generator
    /// order as tie-break, so generation is deterministic.
    ///
    /// Returns the table together with the opaque value of each element,
    /// indexed by id.
    ///
    /// Generators equal to the identity are dropped, duplicate generators
    /// are deduplicated; both are recorded in
    /// [`MonoidTable::dropped_generators`].
    pub fn generate<T, F>(
        gens: Vec<GeneratorSpec<T>>,
        identity: T,
        mut compose: F,
        cap: usize,
    ) -> Result<(MonoidTable, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        F: FnMut(&T, &T) -> T,
    {
        let mut dropped = Vec::new();
        let mut kept: Vec<GeneratorSpec<T>> = Vec::new();
        for g in gens {
            if g.action == identity {
                dropped.push(format!("{} (equals identity)", g.label));
            } else if kept.iter().any(|k| k.action == g.action) {
                dropped.push(format!("{} (duplicate)", g.label));
            } else {
                if compose(&identity, &g.action) != g.action
                    || compose(&g.action, &identity) != g.action
                {
                    return Err(Error::InvalidInput(format!(
                        "composition violates the identity law on generator {}",
                        g.label
                    )));
                }
                kept.push(g);
            }
        }
        let m = kept.len();

        let mut values: Vec<T> = vec![identity];
        let mut index: HashMap<T, u32> = HashMap::new();
        index.insert(values[0].clone(), 0);

        let mut right: Vec<u32> = Vec::new();
        let mut word_prefix: Vec<u32> = vec![u32::MAX];
        let mut word_gen: Vec<u16> = vec![0];

        let mut x = 0usize;
        while x < values.len() {
            for j in 0..m {
                let p = compose(&values[x], &kept[j].action);
                let id = match index.get(&p) {
                    Some(&id) => id,
                    None => {
                        if values.len() >= cap {
                            return Err(Error::ClosureTooLarge { cap });
                        }
                        let id = values.len() as u32;
                        index.insert(p.clone(), id);
                        values.push(p);
                        word_prefix.push(x as u32);
                        word_gen.push(j as u16);
                        id
                    }
                };
                right.push(id);
            }
            x += 1;
        }
        let n = values.len();

        // The right closure is also left-closed, so every s_j * x is known.
        let mut left = vec![0u32; n * m];
        for x in 0..n {
            for j in 0..m {
                let p = compose(&kept[j].action, &values[x]);
                let id = *index.get(&p).ok_or_else(|| {
                    Error::Internal("left product escaped the closure".into())
                })?;
                left[x * m + j] = id;
            }
        }

        check_associativity(&values, &mut compose, DEFAULT_SELF_CHECK_SEED)?;

        let gen_ids: Vec<ElementId> = (0..m)
            .map(|j| ElementId(right[j]))
            .collect();
        let gen_labels: Vec<String> = kept.iter().map(|g| g.label.clone()).collect();
        let bfs_order: Vec<u32> = (0..n as u32).collect();

        let table = MonoidTable::assemble(
            n,
            m,
            gen_ids,
            gen_labels,
            right,
            left,
            word_prefix,
            word_gen,
            bfs_order,
            None,
            dropped,
        );
        Ok((table, values))
    }

    /// Build a table from an explicit element list and product rule.
    ///
    /// `values[0]` must be the identity and `gen_indices` name the chosen
    /// generators (which must generate the whole list). Ids keep the order
    /// of `values`. Use this for monoids whose carrier is known a priori,
    /// such as enumerated matrix monoids or hand-entered product tables.
    pub fn from_elements<T, F>(
        values: Vec<T>,
        gen_indices: &[usize],
        gen_labels: Vec<String>,
        mut compose: F,
        reprs: Option<Vec<String>>,
        cap: usize,
    ) -> Result<(MonoidTable, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        F: FnMut(&T, &T) -> T,
    {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty element list".into()));
        }
        if n > cap {
            return Err(Error::ClosureTooLarge { cap });
        }
        if gen_labels.len() != gen_indices.len() {
            return Err(Error::InvalidInput(
                "generator labels and indices differ in length".into(),
            ));
        }
        let mut index: HashMap<T, u32> = HashMap::with_capacity(n);
        for (i, v) in values.iter().enumerate() {
            if index.insert(v.clone(), i as u32).is_some() {
                return Err(Error::InvalidInput(format!(
                    "duplicate element at position {i}"
                )));
            }
        }
        for (i, v) in values.iter().enumerate() {
            if compose(&values[0], v) != *v || compose(v, &values[0]) != *v {
                return Err(Error::InvalidInput(format!(
                    "values[0] is not an identity (fails on element {i})"
                )));
            }
        }

        let m = gen_indices.len();
        let mut right = vec![0u32; n * m];
        let mut left = vec![0u32; n * m];
        for x in 0..n {
            for (j, &g) in gen_indices.iter().enumerate() {
                let r = compose(&values[x], &values[g]);
                let l = compose(&values[g], &values[x]);
                let rid = *index.get(&r).ok_or_else(|| {
                    Error::InvalidInput("product rule is not closed".into())
                })?;
                let lid = *index.get(&l).ok_or_else(|| {
                    Error::InvalidInput("product rule is not closed".into())
                })?;
                right[x * m + j] = rid;
                left[x * m + j] = lid;
            }
        }

        // Word assignment by BFS over the right Cayley graph.
        let mut word_prefix = vec![u32::MAX; n];
        let mut word_gen = vec![0u16; n];
        let mut seen = vec![false; n];
        let mut bfs_order = Vec::with_capacity(n);
        seen[0] = true;
        bfs_order.push(0u32);
        let mut head = 0usize;
        while head < bfs_order.len() {
            let x = bfs_order[head] as usize;
            head += 1;
            for j in 0..m {
                let y = right[x * m + j] as usize;
                if !seen[y] {
                    seen[y] = true;
                    word_prefix[y] = x as u32;
                    word_gen[y] = j as u16;
                    bfs_order.push(y as u32);
                }
            }
        }
        if bfs_order.len() != n {
            return Err(Error::InvalidInput(
                "chosen generators do not generate the monoid".into(),
            ));
        }

        check_associativity(&values, &mut compose, DEFAULT_SELF_CHECK_SEED)?;

        let gen_ids: Vec<ElementId> = gen_indices.iter().map(|&g| ElementId(g as u32)).collect();
        let table = MonoidTable::assemble(
            n,
            m,
            gen_ids,
            gen_labels,
            right,
            left,
            word_prefix,
            word_gen,
            bfs_order,
            reprs,
            Vec::new(),
        );
        Ok((table, values))
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn assemble(
        n: usize,
        m: usize,
        gens: Vec<ElementId>,
        gen_labels: Vec<String>,
        right: Vec<u32>,
        left: Vec<u32>,
        word_prefix: Vec<u32>,
        word_gen: Vec<u16>,
        bfs_order: Vec<u32>,
        reprs: Option<Vec<String>>,
        dropped_generators: Vec<String>,
    ) -> MonoidTable {
        // Flatten words following BFS order so prefixes are already done.
        let mut word_off = vec![0u32; n + 1];
        let mut lens = vec![0u32; n];
        for &x in &bfs_order {
            let x = x as usize;
            if word_prefix[x] != u32::MAX {
                lens[x] = lens[word_prefix[x] as usize] + 1;
            }
        }
        for x in 0..n {
            word_off[x + 1] = word_off[x] + lens[x];
        }
        let total = word_off[n] as usize;
        let mut word_flat = vec![0u16; total];
        for x in 0..n {
            // fill backwards along the prefix chain
            let mut i = word_off[x + 1] as usize;
            let mut cur = x;
            while word_prefix[cur] != u32::MAX {
                i -= 1;
                word_flat[i] = word_gen[cur];
                cur = word_prefix[cur] as usize;
            }
            debug_assert_eq!(i, word_off[x] as usize);
        }

        // default external form: the word as a bracketed label list
        let repr = reprs.unwrap_or_else(|| {
            (0..n)
                .map(|x| {
                    let w = &word_flat[word_off[x] as usize..word_off[x + 1] as usize];
                    let labels: Vec<&str> = w
                        .iter()
                        .map(|&j| gen_labels[j as usize].as_str())
                        .collect();
                    format!("[{}]", labels.join(","))
                })
                .collect()
        });

        MonoidTable {
            n,
            m,
            gens,
            gen_labels,
            right,
            left,
            word_prefix,
            word_gen,
            word_flat,
            word_off,
            bfs_order,
            repr,
            dropped_generators,
            dense: OnceLock::new(),
            omega: OnceLock::new(),
            idems: OnceLock::new(),
            jtriv: OnceLock::new(),
            jorder: OnceLock::new(),
            jclosure: OnceLock::new(),
            syms: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn num_generators(&self) -> usize {
        self.m
    }

    pub fn identity(&self) -> ElementId {
        ElementId(0)
    }

    pub fn generators(&self) -> &[ElementId] {
        &self.gens
    }

    pub fn generator_labels(&self) -> &[String] {
        &self.gen_labels
    }

    /// Generators dropped during [`MonoidTable::generate`] (equal to the
    /// identity or duplicated), with the reason.
    pub fn dropped_generators(&self) -> &[String] {
        &self.dropped_generators
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.n as u32).map(ElementId)
    }

    pub fn check_id(&self, x: ElementId) -> Result<()> {
        if x.index() < self.n {
            Ok(())
        } else {
            Err(Error::BadElement { id: x.0, n: self.n })
        }
    }

    /// x * s_j from the right Cayley graph.
    #[inline]
    pub fn right_mul(&self, x: ElementId, j: usize) -> ElementId {
        ElementId(self.right[x.index() * self.m + j])
    }

    /// s_j * x from the left Cayley graph.
    #[inline]
    pub fn left_mul(&self, j: usize, x: ElementId) -> ElementId {
        ElementId(self.left[x.index() * self.m + j])
    }

    /// The word of `x` as generator indices (empty for the identity).
    pub fn word_of(&self, x: ElementId) -> &[u16] {
        &self.word_flat[self.word_off[x.index()] as usize..self.word_off[x.index() + 1] as usize]
    }

    /// Word recursion pair `(prefix, generator)`; `None` for the identity.
    pub fn word_step(&self, x: ElementId) -> Option<(ElementId, usize)> {
        let p = self.word_prefix[x.index()];
        (p != u32::MAX).then(|| (ElementId(p), self.word_gen[x.index()] as usize))
    }

    pub fn repr(&self, x: ElementId) -> &str {
        &self.repr[x.index()]
    }

    pub fn reprs(&self) -> &[String] {
        &self.repr
    }

    /// Replace the external form of every element.
    pub fn set_reprs(&mut self, reprs: Vec<String>) -> Result<()> {
        if reprs.len() != self.n {
            return Err(Error::InvalidInput(format!(
                "expected {} reprs, got {}",
                self.n,
                reprs.len()
            )));
        }
        self.repr = reprs;
        Ok(())
    }

    /// Full product x * y by walking y's generator word through the right
    /// Cayley graph (O(|word of y|)), or by dense table lookup when the
    /// product cache has been built.
    #[inline]
    pub fn product(&self, x: ElementId, y: ElementId) -> ElementId {
        if let Some(Some(d)) = self.dense.get() {
            return ElementId(d[x.index() * self.n + y.index()]);
        }
        let mut acc = x.0;
        for &j in self.word_of(y) {
            acc = self.right[acc as usize * self.m + j as usize];
        }
        ElementId(acc)
    }

    /// Populate the dense n x n product table (only when n <= 4096). All
    /// later products become O(1) lookups. No-op above the limit.
    pub fn build_product_cache(&self) {
        self.dense.get_or_init(|| {
            if self.n > DENSE_PRODUCT_LIMIT {
                return None;
            }
            let n = self.n;
            let mut d = vec![0u32; n * n];
            for &y in &self.bfs_order {
                let y = y as usize;
                match self.word_prefix[y] {
                    u32::MAX => {
                        for x in 0..n {
                            d[x * n + y] = x as u32;
                        }
                    }
                    p => {
                        let j = self.word_gen[y] as usize;
                        for x in 0..n {
                            let xp = d[x * n + p as usize] as usize;
                            d[x * n + y] = self.right[xp * self.m + j];
                        }
                    }
                }
            }
            Some(d)
        });
    }

    /// Evaluate the product of a word of element ids, left to right.
    pub fn product_word(&self, word: &[ElementId]) -> ElementId {
        word.iter()
            .fold(self.identity(), |acc, &y| self.product(acc, y))
    }

    /// The idempotent power x^omega, by iterating x^k -> x^k * x until
    /// stable; errors if no fixed point appears within n steps.
    pub fn omega(&self, x: ElementId) -> Result<ElementId> {
        Ok(ElementId(self.omega_all()?[x.index()]))
    }

    /// Omega powers of every element.
    pub fn omega_all(&self) -> Result<&[u32]> {
        self.omega
            .get_or_init(|| {
                let n = self.n;
                let mut out = vec![u32::MAX; n];
                out[0] = 0;
                let mut path: Vec<u32> = Vec::new();
                for x in 0..n as u32 {
                    if out[x as usize] != u32::MAX {
                        continue;
                    }
                    path.clear();
                    // successive powers x, x^2, ... all share the same omega
                    let mut cur = ElementId(x);
                    let mut steps = 0usize;
                    let e = loop {
                        if out[cur.index()] != u32::MAX {
                            break ElementId(out[cur.index()]);
                        }
                        path.push(cur.0);
                        let next = self.product(cur, ElementId(x));
                        if next == cur {
                            break cur;
                        }
                        steps += 1;
                        if steps > n {
                            return Err(Error::NotAperiodic { x });
                        }
                        cur = next;
                    };
                    for &p in &path {
                        out[p as usize] = e.0;
                    }
                }
                Ok(out)
            })
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(|e| e.clone())
    }

    /// All idempotents, sorted by id.
    pub fn idempotents(&self) -> &[ElementId] {
        self.idems.get_or_init(|| {
            (0..self.n as u32)
                .map(ElementId)
                .filter(|&x| self.product(x, x) == x)
                .collect()
        })
    }

    pub fn is_idempotent(&self, x: ElementId) -> bool {
        self.product(x, x) == x
    }

    /// e * f = (ef)^omega for idempotents; pub(crate) plumbing shared with
    /// the algebra layer's validated star operation.
    pub(crate) fn star_raw(&self, e: ElementId, f: ElementId) -> Result<ElementId> {
        self.omega(self.product(e, f))
    }
}

/// Deterministic associativity spot-check: all triples for small carriers,
/// a fixed-seed sample otherwise.
fn check_associativity<T, F>(values: &[T], compose: &mut F, seed: u64) -> Result<()>
where
    T: Clone + Eq,
    F: FnMut(&T, &T) -> T,
{
    let n = values.len();
    let mut check = |a: usize, b: usize, c: usize| -> Result<()> {
        let ab = compose(&values[a], &values[b]);
        let bc = compose(&values[b], &values[c]);
        let ab_c = compose(&ab, &values[c]);
        let a_bc = compose(&values[a], &bc);
        if ab_c != a_bc {
            return Err(Error::InvalidComposition {
                a: a.to_string(),
                b: b.to_string(),
                c: c.to_string(),
            });
        }
        Ok(())
    };
    if n <= ASSOC_EXHAUSTIVE_LIMIT {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        let mut state = seed | 1;
        let mut next = || {
            // xorshift64*
            state ^= state >> 12;
            state ^= state << 25;
            state ^= state >> 27;
            (state.wrapping_mul(0x2545_F491_4F6C_DD1D) >> 16) as usize
        };
        for _ in 0..ASSOC_SAMPLES {
            let a = next() % n;
            let b = next() % n;
            let c = next() % n;
            check(a, b, c)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(k: usize) -> (MonoidTable, Vec<u32>) {
        // x, x^2, ..., x^k = x^{k+1}: aperiodic monogenic monoid
        MonoidTable::generate(
            vec![GeneratorSpec::new("x", 1u32)],
            0u32,
            |a, b| (a + b).min(k as u32),
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap()
    }

    #[test]
    fn empty_generator_list_gives_trivial_monoid() {
        let (t, vals) = MonoidTable::generate(
            Vec::<GeneratorSpec<u32>>::new(),
            0u32,
            |a, b| a + b,
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(vals, vec![0]);
        assert_eq!(t.idempotents(), &[ElementId(0)]);
        assert!(t.is_j_trivial());
    }

    #[test]
    fn identity_and_duplicate_generators_are_dropped() {
        let (t, _) = MonoidTable::generate(
            vec![
                GeneratorSpec::new("e", 0u32),
                GeneratorSpec::new("x", 1u32),
                GeneratorSpec::new("x2", 1u32),
            ],
            0u32,
            |a, b| (a + b).min(3),
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        assert_eq!(t.num_generators(), 1);
        assert_eq!(t.dropped_generators().len(), 2);
    }

    #[test]
    fn closure_cap_is_enforced() {
        let err = MonoidTable::generate(
            vec![GeneratorSpec::new("x", 1u32)],
            0u32,
            |a, b| (a + b).min(100),
            5,
        )
        .unwrap_err();
        assert!(matches!(err, Error::ClosureTooLarge { cap: 5 }));
    }

    #[test]
    fn products_match_value_composition() {
        let (t, vals) = cyclic(7);
        assert_eq!(t.len(), 8);
        for x in t.elements() {
            for y in t.elements() {
                let direct = (vals[x.index()] + vals[y.index()]).min(7);
                assert_eq!(vals[t.product(x, y).index()], direct);
            }
        }
        t.build_product_cache();
        for x in t.elements() {
            assert_eq!(t.product(x, t.identity()), x);
            assert_eq!(t.product(t.identity(), x), x);
        }
    }

    #[test]
    fn omega_of_monogenic_chain_is_the_absorbing_power() {
        let (t, vals) = cyclic(5);
        for x in t.elements() {
            let w = t.omega(x).unwrap();
            if x.0 == 0 {
                assert_eq!(w, x);
            } else {
                assert_eq!(vals[w.index()], 5);
            }
            assert!(t.is_idempotent(w));
        }
    }

    #[test]
    fn non_associative_rule_is_rejected() {
        // 0 is neutral but a*b = flip(a) otherwise: (1*1)*1 != 1*(1*1)
        let err = MonoidTable::from_elements(
            vec![0u8, 1, 2],
            &[1, 2],
            vec!["a".into(), "b".into()],
            |&a, &b| match (a, b) {
                (0, x) | (x, 0) => x,
                (1, _) => 2,
                (2, _) => 1,
                _ => unreachable!(),
            },
            None,
            100,
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidComposition { .. }));
    }

    #[test]
    fn word_recursion_terminates_at_identity() {
        let (t, _) = cyclic(9);
        for x in t.elements() {
            let mut cur = x;
            let mut steps = 0;
            while let Some((p, _)) = t.word_step(cur) {
                cur = p;
                steps += 1;
                assert!(steps <= t.len());
            }
            assert_eq!(cur, t.identity());
            assert_eq!(steps, t.word_of(x).len());
        }
    }
}
