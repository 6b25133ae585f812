//! Enumeration of posets up to isomorphism (n <= 8).
//!
//! Posets on n points are built by adding a new maximal element over
//! every order ideal of every (n-1)-point poset, deduplicated by a
//! canonical form: the minimum relation bitstring over all relabelings,
//! with the permutations pruned by an iterated vertex-invariant
//! partition refinement.

use std::collections::HashSet;

use crate::error::{Error, Result};

use super::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PosetFilter {
    All,
    MeetSemilattice,
}

/// Canonical key: up-set rows of the relation in the minimizing
/// class-respecting relabeling.
pub fn canonical_key(p: &Poset) -> Vec<u64> {
    let n = p.len();
    // iterated refinement: class by (|down|, |up|), then by the sorted
    // class multisets of strict down- and up-sets
    let mut class: Vec<usize> = {
        let mut tags: Vec<(usize, usize)> = (0..n)
            .map(|v| {
                (
                    p.down_set(v).count_ones() as usize,
                    p.up_set(v).count_ones() as usize,
                )
            })
            .collect();
        let mut sorted = tags.clone();
        sorted.sort_unstable();
        sorted.dedup();
        tags.iter_mut()
            .map(|t| sorted.binary_search(t).unwrap())
            .collect()
    };
    loop {
        let mut tags: Vec<(usize, Vec<usize>, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut below: Vec<usize> = (0..n)
                .filter(|&w| w != v && p.leq(w, v))
                .map(|w| class[w])
                .collect();
            let mut above: Vec<usize> = (0..n)
                .filter(|&w| w != v && p.leq(v, w))
                .map(|w| class[w])
                .collect();
            below.sort_unstable();
            above.sort_unstable();
            tags.push((class[v], below, above));
        }
        let mut sorted = tags.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let refined: Vec<usize> = tags
            .iter()
            .map(|t| sorted.binary_search(t).unwrap())
            .collect();
        if refined == class {
            break;
        }
        class = refined;
    }

    // slots: vertices of class c occupy a contiguous block
    let num_classes = class.iter().max().map_or(0, |&c| c + 1);
    let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); num_classes];
    for v in 0..n {
        by_class[class[v]].push(v);
    }
    let mut slot_start = vec![0usize; num_classes];
    let mut acc = 0;
    for c in 0..num_classes {
        slot_start[c] = acc;
        acc += by_class[c].len();
    }

    // minimize the relabeled relation over within-class permutations
    let mut best: Option<Vec<u64>> = None;
    let mut slot_of = vec![0usize; n];
    fn rec(
        p: &Poset,
        by_class: &[Vec<usize>],
        slot_start: &[usize],
        c: usize,
        slot_of: &mut Vec<usize>,
        best: &mut Option<Vec<u64>>,
    ) {
        let n = p.len();
        if c == by_class.len() {
            let mut key = vec![0u64; n];
            for a in 0..n {
                for b in 0..n {
                    if p.leq(a, b) {
                        key[slot_of[a]] |= 1 << slot_of[b];
                    }
                }
            }
            if best.as_ref().is_none_or(|b| key < *b) {
                *best = Some(key);
            }
            return;
        }
        // assign the vertices of class c to its slots in every order
        #[allow(clippy::too_many_arguments)]
        fn assign(
            p: &Poset,
            by_class: &[Vec<usize>],
            slot_start: &[usize],
            c: usize,
            i: usize,
            used: &mut Vec<bool>,
            slot_of: &mut Vec<usize>,
            best: &mut Option<Vec<u64>>,
        ) {
            let members = &by_class[c];
            if i == members.len() {
                rec(p, by_class, slot_start, c + 1, slot_of, best);
                return;
            }
            for (k, &v) in members.iter().enumerate() {
                if !used[k] {
                    used[k] = true;
                    slot_of[v] = slot_start[c] + i;
                    assign(p, by_class, slot_start, c, i + 1, used, slot_of, best);
                    used[k] = false;
                }
            }
        }
        let mut used = vec![false; by_class[c].len()];
        assign(p, by_class, slot_start, c, 0, &mut used, slot_of, best);
    }
    rec(p, &by_class, &slot_start, 0, &mut slot_of, &mut best);
    best.expect("at least one relabeling exists")
}

/// All posets on n points up to isomorphism, deterministically ordered
/// by canonical key.
pub fn enumerate_posets(n: usize, filter: PosetFilter) -> Result<Vec<Poset>> {
    if n == 0 || n > 8 {
        return Err(Error::SizeGuard {
            what: "poset enumeration size",
            value: n,
            cap: 8,
        });
    }
    let mut level: Vec<Poset> = vec![Poset::chain(1)];
    for k in 2..=n {
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut next: Vec<(Vec<u64>, Poset)> = Vec::new();
        for p in &level {
            for ideal in p.order_ideals() {
                // extend with a new maximal element above exactly `ideal`
                let mut up: Vec<u64> = (0..k - 1).map(|i| p.up_set(i)).collect();
                for i in 0..k - 1 {
                    if ideal & (1 << i) != 0 {
                        up[i] |= 1 << (k - 1);
                    }
                }
                up.push(1 << (k - 1));
                let q = Poset::from_closed_up_sets(k, up);
                let key = canonical_key(&q);
                if seen.insert(key.clone()) {
                    next.push((key, q));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, q)| q).collect();
    }
    Ok(level
        .into_iter()
        .filter(|p| match filter {
            PosetFilter::All => true,
            PosetFilter::MeetSemilattice => p.is_meet_semilattice(),
        })
        .collect())
}

/// Independent oracle: count isomorphism classes by enumerating every
/// labelled partial order and canonicalizing with the full permutation
/// sweep (practical for n <= 5).
pub fn brute_force_poset_count(n: usize) -> usize {
    assert!((1..=5).contains(&n), "oracle is exponential in n^2");
    let strict_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let perms = all_perms(n);
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    'mask: for mask in 0u64..(1 << strict_pairs.len()) {
        let mut leq = vec![0u64; n];
        for i in 0..n {
            leq[i] |= 1 << i;
        }
        for (b, &(i, j)) in strict_pairs.iter().enumerate() {
            if mask & (1 << b) != 0 {
                leq[i] |= 1 << j;
            }
        }
        // antisymmetry and transitivity
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i] & (1 << j) != 0 {
                    if leq[j] & (1 << i) != 0 {
                        continue 'mask;
                    }
                    if leq[j] & !leq[i] != 0 {
                        continue 'mask;
                    }
                }
            }
        }
        // canonical form: min over all permutations
        let mut best: Option<Vec<u64>> = None;
        for perm in &perms {
            let mut key = vec![0u64; n];
            for i in 0..n {
                for j in 0..n {
                    if leq[i] & (1 << j) != 0 {
                        key[perm[i]] |= 1 << perm[j];
                    }
                }
            }
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
        seen.insert(best.unwrap());
    }
    seen.len()
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}
