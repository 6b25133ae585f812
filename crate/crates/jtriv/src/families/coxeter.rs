//! Finite Coxeter groups of types A, B, D, and I, with just enough
//! arithmetic for 0-Hecke monoids: element enumeration, right
//! multiplication by simple reflections, descent tests, lengths, and
//! descent sets. Types E, F, H are out of scope.
//!
//! Representations: type A as permutations (one-line), B as signed
//! permutations, D as even-signed permutations, I_m as alternating-word
//! normal forms (length, starting letter).

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoxeterType {
    A,
    B,
    D,
    I,
}

impl std::str::FromStr for CoxeterType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(CoxeterType::A),
            "B" | "b" => Ok(CoxeterType::B),
            "D" | "d" => Ok(CoxeterType::D),
            "I" | "i" => Ok(CoxeterType::I),
            other => Err(Error::UnsupportedCoxeterType(other.to_string())),
        }
    }
}

/// Group elements as integer vectors:
/// - A/B/D: signed one-line notation (type A all positive),
/// - I: `[k, side]` for the alternating word of length k starting with
///   generator `side` (the longest element is normalized to side 0).
pub type CoxElem = Vec<i16>;

pub struct CoxeterGroup {
    pub ctype: CoxeterType,
    /// Rank for A/B/D; the dihedral order parameter m for I.
    pub rank: usize,
    elements: Vec<CoxElem>,
    index: HashMap<CoxElem, u32>,
}

impl CoxeterGroup {
    /// `A:r` is the symmetric group on r+1 letters, `B:r` the
    /// hyperoctahedral group, `D:r` the even-signed permutations, `I:m`
    /// the dihedral group of order 2m.
    pub fn new(ctype: CoxeterType, rank: usize) -> Result<CoxeterGroup> {
        let order = match ctype {
            CoxeterType::A => {
                if rank < 1 {
                    return Err(Error::BadCoxeterRank {
                        ctype: "A".into(),
                        rank,
                    });
                }
                factorial(rank + 1)
            }
            CoxeterType::B => {
                if rank < 2 {
                    return Err(Error::BadCoxeterRank {
                        ctype: "B".into(),
                        rank,
                    });
                }
                factorial(rank) << rank
            }
            CoxeterType::D => {
                if rank < 2 {
                    return Err(Error::BadCoxeterRank {
                        ctype: "D".into(),
                        rank,
                    });
                }
                factorial(rank) << (rank - 1)
            }
            CoxeterType::I => {
                if rank < 2 {
                    return Err(Error::BadCoxeterRank {
                        ctype: "I".into(),
                        rank,
                    });
                }
                2 * rank
            }
        };
        if order > 1_000_000 {
            return Err(Error::SizeGuard {
                what: "Coxeter group order",
                value: order,
                cap: 1_000_000,
            });
        }
        let elements = match ctype {
            CoxeterType::A => permutations(rank + 1)
                .into_iter()
                .map(|p| p.into_iter().map(|v| v as i16).collect())
                .collect(),
            CoxeterType::B => signed_permutations(rank, false),
            CoxeterType::D => signed_permutations(rank, true),
            CoxeterType::I => {
                let m = rank;
                let mut out: Vec<CoxElem> = vec![vec![0, 0]];
                for k in 1..m {
                    out.push(vec![k as i16, 0]);
                    out.push(vec![k as i16, 1]);
                }
                out.push(vec![m as i16, 0]);
                out
            }
        };
        debug_assert_eq!(elements.len(), order);
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        Ok(CoxeterGroup {
            ctype,
            rank,
            elements,
            index,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn num_generators(&self) -> usize {
        match self.ctype {
            CoxeterType::A | CoxeterType::B | CoxeterType::D => self.rank,
            CoxeterType::I => 2,
        }
    }

    /// Display labels for the generators: "1".."r" in type A and I,
    /// "0".."r-1" in types B and D (generator 0 is the special one).
    pub fn generator_labels(&self) -> Vec<String> {
        match self.ctype {
            CoxeterType::A | CoxeterType::I => {
                (1..=self.num_generators()).map(|i| i.to_string()).collect()
            }
            CoxeterType::B | CoxeterType::D => {
                (0..self.num_generators()).map(|i| i.to_string()).collect()
            }
        }
    }

    pub fn elements(&self) -> &[CoxElem] {
        &self.elements
    }

    pub fn element_index(&self, w: &CoxElem) -> Option<u32> {
        self.index.get(w).copied()
    }

    pub fn identity_index(&self) -> u32 {
        let id: CoxElem = match self.ctype {
            CoxeterType::A | CoxeterType::B | CoxeterType::D => {
                (1..=self.one_line_len() as i16).collect()
            }
            CoxeterType::I => vec![0, 0],
        };
        self.index[&id]
    }

    fn one_line_len(&self) -> usize {
        match self.ctype {
            CoxeterType::A => self.rank + 1,
            CoxeterType::B | CoxeterType::D => self.rank,
            CoxeterType::I => 2,
        }
    }

    /// Coxeter matrix entry m(s_i, s_j) for internal generator indices.
    pub fn coxeter_m(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 1;
        }
        let (i, j) = (i.min(j), i.max(j));
        match self.ctype {
            CoxeterType::A => {
                if j == i + 1 {
                    3
                } else {
                    2
                }
            }
            CoxeterType::B => {
                if i == 0 && j == 1 {
                    4
                } else if j == i + 1 {
                    3
                } else {
                    2
                }
            }
            CoxeterType::D => {
                // generator 0 is the fork: m(0,1) = 2, m(0,2) = 3
                if i == 0 {
                    if j == 2 {
                        3
                    } else {
                        2
                    }
                } else if j == i + 1 {
                    3
                } else {
                    2
                }
            }
            CoxeterType::I => self.rank as u32,
        }
    }

    /// Does right multiplication by generator g increase the length?
    pub fn is_right_ascent(&self, w: &CoxElem, g: usize) -> bool {
        match self.ctype {
            CoxeterType::A => w[g] < w[g + 1],
            CoxeterType::B => {
                if g == 0 {
                    w[0] > 0
                } else {
                    w[g - 1] < w[g]
                }
            }
            CoxeterType::D => {
                if g == 0 {
                    w[0] + w[1] > 0
                } else {
                    w[g - 1] < w[g]
                }
            }
            CoxeterType::I => {
                let (k, side) = (w[0] as usize, w[1] as usize);
                if k == 0 {
                    true
                } else if k == self.rank {
                    false
                } else {
                    // last letter of the alternating word
                    let last = if k % 2 == 1 { side } else { 1 - side };
                    last != g
                }
            }
        }
    }

    /// w * s_g (always the group product, shortened or lengthened).
    pub fn right_mul(&self, w: &CoxElem, g: usize) -> CoxElem {
        let mut out = w.clone();
        match self.ctype {
            CoxeterType::A => out.swap(g, g + 1),
            CoxeterType::B => {
                if g == 0 {
                    out[0] = -out[0];
                } else {
                    out.swap(g - 1, g);
                }
            }
            CoxeterType::D => {
                if g == 0 {
                    let (a, b) = (out[0], out[1]);
                    out[0] = -b;
                    out[1] = -a;
                } else {
                    out.swap(g - 1, g);
                }
            }
            CoxeterType::I => {
                let m = self.rank as i16;
                let (k, side) = (out[0], out[1]);
                if k == 0 {
                    return vec![1, g as i16];
                }
                let last = if k % 2 == 1 { side } else { 1 - side };
                if k == m {
                    // the longest element: shorten on the requested side
                    return if last == g as i16 {
                        norm_i(m - 1, 0, m)
                    } else {
                        norm_i(m - 1, 1, m)
                    };
                }
                if last == g as i16 {
                    return norm_i(k - 1, side, m);
                }
                return norm_i(k + 1, side, m);
            }
        }
        out
    }

    /// The 0-Hecke projection pi_g: apply s_g only when it lengthens.
    pub fn pi(&self, w: &CoxElem, g: usize) -> CoxElem {
        if self.is_right_ascent(w, g) {
            self.right_mul(w, g)
        } else {
            w.clone()
        }
    }

    /// Coxeter length by greedy descent stripping.
    pub fn length(&self, w: &CoxElem) -> usize {
        if self.ctype == CoxeterType::I {
            return w[0] as usize;
        }
        let mut cur = w.clone();
        let mut len = 0;
        loop {
            match (0..self.num_generators()).find(|&g| !self.is_right_ascent(&cur, g)) {
                Some(g) => {
                    cur = self.right_mul(&cur, g);
                    len += 1;
                }
                None => return len,
            }
        }
    }

    pub fn inverse(&self, w: &CoxElem) -> CoxElem {
        match self.ctype {
            CoxeterType::A | CoxeterType::B | CoxeterType::D => {
                let n = w.len();
                let mut out = vec![0i16; n];
                for (i, &v) in w.iter().enumerate() {
                    if v > 0 {
                        out[v as usize - 1] = i as i16 + 1;
                    } else {
                        out[(-v) as usize - 1] = -(i as i16 + 1);
                    }
                }
                out
            }
            CoxeterType::I => {
                let (k, side) = (w[0], w[1]);
                if k % 2 == 1 || k == 0 {
                    w.clone()
                } else {
                    norm_i(k, 1 - side, self.rank as i16)
                }
            }
        }
    }

    /// Right descent set {g : l(w s_g) < l(w)} as a bitmask.
    pub fn right_descents(&self, w: &CoxElem) -> u32 {
        (0..self.num_generators())
            .filter(|&g| !self.is_right_ascent(w, g))
            .fold(0, |m, g| m | 1 << g)
    }

    /// Left descent set {g : l(s_g w) < l(w)} as a bitmask.
    pub fn left_descents(&self, w: &CoxElem) -> u32 {
        self.right_descents(&self.inverse(w))
    }

    /// Generators appearing in any (hence every) reduced word, by greedy
    /// descent stripping.
    pub fn content(&self, w: &CoxElem) -> u32 {
        let mut cur = w.clone();
        let mut used = 0u32;
        loop {
            match (0..self.num_generators()).find(|&g| !self.is_right_ascent(&cur, g)) {
                Some(g) => {
                    used |= 1 << g;
                    cur = self.right_mul(&cur, g);
                }
                None => return used,
            }
        }
    }
}

/// Normalize an I_m normal form: the longest element is always side 0,
/// as is the identity.
fn norm_i(k: i16, side: i16, m: i16) -> CoxElem {
    if k == 0 || k == m {
        vec![k, 0]
    } else {
        vec![k, side]
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Permutations of 1..=n in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(factorial(n));
    let mut cur: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Signed permutations of 1..=n (even sign count only when `even`).
fn signed_permutations(n: usize, even: bool) -> Vec<CoxElem> {
    let mut out = Vec::new();
    for p in permutations(n) {
        for mask in 0u32..(1 << n) {
            if even && mask.count_ones() % 2 == 1 {
                continue;
            }
            let w: CoxElem = p
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    if mask & (1 << i) != 0 {
                        -(v as i16)
                    } else {
                        v as i16
                    }
                })
                .collect();
            out.push(w);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_match_the_classical_formulas() {
        assert_eq!(CoxeterGroup::new(CoxeterType::A, 3).unwrap().order(), 24);
        assert_eq!(CoxeterGroup::new(CoxeterType::B, 3).unwrap().order(), 48);
        assert_eq!(CoxeterGroup::new(CoxeterType::D, 3).unwrap().order(), 24);
        assert_eq!(CoxeterGroup::new(CoxeterType::I, 5).unwrap().order(), 10);
        assert!(CoxeterGroup::new(CoxeterType::A, 0).is_err());
    }

    #[test]
    fn length_is_monotone_under_generators() {
        for w_group in [
            CoxeterGroup::new(CoxeterType::A, 3).unwrap(),
            CoxeterGroup::new(CoxeterType::B, 2).unwrap(),
            CoxeterGroup::new(CoxeterType::D, 3).unwrap(),
            CoxeterGroup::new(CoxeterType::I, 6).unwrap(),
        ] {
            for w in w_group.elements() {
                let lw = w_group.length(w);
                for g in 0..w_group.num_generators() {
                    let ws = w_group.right_mul(w, g);
                    let lws = w_group.length(&ws);
                    if w_group.is_right_ascent(w, g) {
                        assert_eq!(lws, lw + 1);
                    } else {
                        assert_eq!(lws + 1, lw);
                    }
                    // involutivity of generators
                    assert_eq!(w_group.right_mul(&ws, g), *w);
                }
            }
        }
    }

    #[test]
    fn identity_has_length_zero_and_no_descents() {
        for w_group in [
            CoxeterGroup::new(CoxeterType::A, 2).unwrap(),
            CoxeterGroup::new(CoxeterType::B, 3).unwrap(),
            CoxeterGroup::new(CoxeterType::D, 2).unwrap(),
            CoxeterGroup::new(CoxeterType::I, 7).unwrap(),
        ] {
            let id = &w_group.elements()[w_group.identity_index() as usize];
            assert_eq!(w_group.length(id), 0);
            assert_eq!(w_group.right_descents(id), 0);
            assert_eq!(w_group.left_descents(id), 0);
            assert_eq!(w_group.content(id), 0);
        }
    }

    #[test]
    fn d3_is_a3_in_disguise() {
        // D_3 = A_3: same order and same length generating function
        let a = CoxeterGroup::new(CoxeterType::A, 3).unwrap();
        let d = CoxeterGroup::new(CoxeterType::D, 3).unwrap();
        let mut la: Vec<usize> = a.elements().iter().map(|w| a.length(w)).collect();
        let mut ld: Vec<usize> = d.elements().iter().map(|w| d.length(w)).collect();
        la.sort_unstable();
        ld.sort_unstable();
        assert_eq!(la, ld);
    }

    #[test]
    fn dihedral_normal_forms_multiply_correctly() {
        let w = CoxeterGroup::new(CoxeterType::I, 4).unwrap();
        // 1*s1 = a_1, a_1*s2 = a_2, a_2*s2 = a_1, a_3*s? = w0 both ways
        let id = vec![0, 0];
        let a1 = w.right_mul(&id, 0);
        assert_eq!(a1, vec![1, 0]);
        let a2 = w.right_mul(&a1, 1);
        assert_eq!(a2, vec![2, 0]);
        assert_eq!(w.right_mul(&a2, 1), a1);
        let a3 = w.right_mul(&a2, 0);
        let w0 = w.right_mul(&a3, 1);
        assert_eq!(w0, vec![4, 0]);
        // both reductions of w0 exist
        assert_eq!(w.right_mul(&w0, 1)[0], 3);
        assert_eq!(w.right_mul(&w0, 0)[0], 3);
    }

    #[test]
    fn descents_of_a_known_s5_element() {
        let g = CoxeterGroup::new(CoxeterType::A, 4).unwrap();
        let w: CoxElem = vec![1, 4, 3, 5, 2];
        // generator bit g corresponds to s_{g+1}
        assert_eq!(g.right_descents(&w), (1 << 1) | (1 << 3));
        assert_eq!(g.left_descents(&w), (1 << 1) | (1 << 2));
    }
}
