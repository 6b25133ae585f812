//! Finite posets on at most 63 points, as bitset relations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_POSET_SIZE: usize = 63;

/// A finite poset with a fixed linear extension.
///
/// The linear extension defaults to ascending labels when those are
/// compatible with the order, and to a deterministic topological sort
/// otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    /// up[i] = bitmask of {j : i <= j}.
    up: Vec<u64>,
    /// down[i] = bitmask of {j : j <= i}.
    down: Vec<u64>,
    linext: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PosetFile {
    n: usize,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// Build from the reflexive-transitive closure of cover pairs
    /// `(lower, upper)`; fails on cycles (antisymmetry violation).
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Poset> {
        if n == 0 || n > MAX_POSET_SIZE {
            return Err(Error::InvalidPoset {
                reason: format!("size {n} out of range 1..={MAX_POSET_SIZE}"),
            });
        }
        let mut up = vec![0u64; n];
        for i in 0..n {
            up[i] |= 1 << i;
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::InvalidPoset {
                    reason: format!("cover ({a},{b}) out of range"),
                });
            }
            if a == b {
                return Err(Error::InvalidPoset {
                    reason: format!("reflexive cover ({a},{b})"),
                });
            }
            up[a] |= 1 << b;
        }
        // transitive closure (Warshall on bitset rows)
        loop {
            let mut changed = false;
            for i in 0..n {
                let mut acc = up[i];
                let mut rest = up[i];
                while rest != 0 {
                    let j = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    acc |= up[j];
                }
                if acc != up[i] {
                    up[i] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && up[i] & (1 << j) != 0 && up[j] & (1 << i) != 0 {
                    return Err(Error::InvalidPoset {
                        reason: format!("cycle through {i} and {j}"),
                    });
                }
            }
        }
        Ok(Poset::from_up_sets(n, up))
    }

    fn from_up_sets(n: usize, up: Vec<u64>) -> Poset {
        let mut down = vec![0u64; n];
        for i in 0..n {
            let mut rest = up[i];
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                down[j] |= 1 << i;
            }
        }
        let ascending_ok = (0..n).all(|i| {
            // everything below i has a smaller label
            down[i] & !((1u64 << (i + 1)) - 1) == 0
        });
        let linext = if ascending_ok {
            (0..n).collect()
        } else {
            // deterministic Kahn: smallest available label first
            let mut remaining: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
            let mut order = Vec::with_capacity(n);
            while remaining != 0 {
                let next = (0..n)
                    .find(|&i| {
                        remaining & (1 << i) != 0 && down[i] & remaining == 1 << i
                    })
                    .expect("acyclic relation always has a minimal element");
                order.push(next);
                remaining &= !(1 << next);
            }
            order
        };
        Poset {
            n,
            up,
            down,
            linext,
        }
    }

    /// Build directly from a reflexive-antisymmetric-transitive `leq`
    /// matrix given as closure rows (used by the enumerator).
    pub(crate) fn from_closed_up_sets(n: usize, up: Vec<u64>) -> Poset {
        Poset::from_up_sets(n, up)
    }

    pub fn chain(n: usize) -> Poset {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_covers(n, &covers).expect("chain is a poset")
    }

    /// The chain with labels reversed: n-1 < ... < 1 < 0.
    pub fn reversed_chain(n: usize) -> Poset {
        let covers: Vec<_> = (1..n).map(|i| (i, i - 1)).collect();
        Poset::from_covers(n, &covers).expect("chain is a poset")
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_covers(n, &[]).expect("antichain is a poset")
    }

    /// Boolean lattice of subsets of {0..k-1}, labelled by bitmask.
    pub fn boolean_lattice(k: u32) -> Poset {
        let n = 1usize << k;
        let mut covers = Vec::new();
        for s in 0..n {
            for b in 0..k {
                if s & (1 << b) == 0 {
                    covers.push((s, s | (1 << b)));
                }
            }
        }
        Poset::from_covers(n, &covers).expect("boolean lattice is a poset")
    }

    /// Zigzag fence: 0 < 1 > 2 < 3 > 4 ...
    pub fn fence(n: usize) -> Poset {
        let mut covers = Vec::new();
        for i in 1..n {
            if i % 2 == 1 {
                covers.push((i - 1, i));
            } else {
                covers.push((i, i - 1));
            }
        }
        Poset::from_covers(n, &covers).expect("fence is a poset")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a] & (1 << b) != 0
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn up_set(&self, a: usize) -> u64 {
        self.up[a]
    }

    pub fn down_set(&self, a: usize) -> u64 {
        self.down[a]
    }

    pub fn linext(&self) -> &[usize] {
        &self.linext
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            !0
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn minimals(&self) -> u64 {
        (0..self.n)
            .filter(|&i| self.down[i] == 1 << i)
            .fold(0, |m, i| m | 1 << i)
    }

    pub fn maximals(&self) -> u64 {
        (0..self.n)
            .filter(|&i| self.up[i] == 1 << i)
            .fold(0, |m, i| m | 1 << i)
    }

    /// Cover pairs (lower, upper), sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.lt(a, b) {
                    let between = self.up[a] & self.down[b] & !(1 << a) & !(1 << b);
                    if between == 0 {
                        out.push((a, b));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Unique greatest lower bound of a and b, if any.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let common = self.down[a] & self.down[b];
        let mut best: Option<usize> = None;
        let mut rest = common;
        while rest != 0 {
            let c = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // c is maximal in common iff nothing above it is in common
            if self.up[c] & common == 1 << c {
                if best.is_some() {
                    return None;
                }
                best = Some(c);
            }
        }
        best
    }

    /// Check pairwise unique meets.
    pub fn is_meet_semilattice(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.meet(a, b).is_some()))
    }

    pub fn require_meet_semilattice(&self) -> Result<()> {
        for a in 0..self.n {
            for b in 0..a {
                if self.meet(a, b).is_none() {
                    return Err(Error::NotMeetSemilattice { x: b, y: a });
                }
            }
        }
        Ok(())
    }

    /// Minimal common upper bounds of the subset `s` (given as bitmask);
    /// the joins of the empty set are the minimal elements of the poset.
    pub fn joins(&self, s: u64) -> u64 {
        if s == 0 {
            return self.minimals();
        }
        let mut common = self.full_mask();
        let mut rest = s;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            common &= self.up[x];
        }
        let mut out = 0u64;
        let mut rest = common;
        while rest != 0 {
            let z = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.down[z] & common == 1 << z {
                out |= 1 << z;
            }
        }
        out
    }

    /// Least superset of `s` stable under joins of arbitrary subsets.
    ///
    /// An element enters the closure exactly when it is a minimal upper
    /// bound of the part of the closure below it, so a linear sweep
    /// suffices.
    pub fn join_closure(&self, s: u64) -> u64 {
        let mut c = s | self.minimals();
        loop {
            let mut changed = false;
            for &x in &self.linext {
                if c & (1 << x) != 0 {
                    continue;
                }
                let below = c & self.down[x] & !(1 << x);
                if below == 0 {
                    continue;
                }
                // x joins the closure iff it is a minimal upper bound of below
                let common: u64 = {
                    let mut acc = self.full_mask();
                    let mut rest = below;
                    while rest != 0 {
                        let y = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        acc &= self.up[y];
                    }
                    acc
                };
                if common & (1 << x) != 0 && common & self.down[x] & !(1 << x) == 0 {
                    c |= 1 << x;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        c
    }

    /// Restriction to the elements of `mask`, relabelled in label order.
    pub fn restrict(&self, mask: u64) -> Poset {
        let keep: Vec<usize> = (0..self.n).filter(|&i| mask & (1 << i) != 0).collect();
        let n = keep.len();
        let mut up = vec![0u64; n];
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                if self.leq(a, b) {
                    up[i] |= 1 << j;
                }
            }
        }
        Poset::from_up_sets(n, up)
    }

    /// All order ideals (down-closed subsets) as bitmasks, ascending.
    pub fn order_ideals(&self) -> Vec<u64> {
        let full = self.full_mask();
        (0..=full)
            .filter(|&s| {
                (0..self.n).all(|i| s & (1 << i) == 0 || self.down[i] & !s == 0)
            })
            .collect()
    }

    /// Zeta matrix: z[i][j] = 1 iff i <= j.
    pub fn zeta_matrix(&self) -> Vec<Vec<u64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| u64::from(self.leq(i, j))).collect())
            .collect()
    }

    pub fn to_json(&self) -> String {
        let file = PosetFile {
            n: self.n,
            covers: self.covers(),
        };
        serde_json::to_string(&file).expect("poset serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Poset> {
        let file: PosetFile = serde_json::from_str(s)
            .map_err(|e| Error::InvalidPoset {
                reason: format!("bad poset JSON: {e}"),
            })?;
        Poset::from_covers(file.n, &file.covers)
    }
}
