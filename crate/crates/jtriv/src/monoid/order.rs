//! J-triviality and J-order.
//!
//! Both are read off the two-sided Cayley digraph (edges x -> x*s and
//! x -> s*x, self-loops ignored): the monoid is J-trivial exactly when
//! every strongly connected component is a singleton, and the J-order is
//! then the reachability order of the digraph.

use super::{ElementId, MonoidTable, JORDER_CLOSURE_LIMIT};
use crate::error::{Error, Result};

/// A linear extension of the J-order (identity first, J-smaller later),
/// with positions for O(1) rank lookup.
#[derive(Debug, Clone)]
pub struct JOrderData {
    pub linext: Vec<ElementId>,
    pub position: Vec<u32>,
}

impl MonoidTable {
    fn out_edges(&self, x: usize, buf: &mut Vec<u32>) {
        buf.clear();
        for j in 0..self.m {
            let r = self.right[x * self.m + j];
            if r as usize != x {
                buf.push(r);
            }
            let l = self.left[x * self.m + j];
            if l as usize != x {
                buf.push(l);
            }
        }
    }

    /// `None` when the monoid is J-trivial, otherwise a witness pair of
    /// distinct elements generating the same two-sided ideal.
    pub fn j_trivial_witness(&self) -> Option<(ElementId, ElementId)> {
        *self.jtriv.get_or_init(|| self.find_nontrivial_scc())
    }

    pub fn is_j_trivial(&self) -> bool {
        self.j_trivial_witness().is_none()
    }

    /// Iterative Tarjan SCC over the two-sided Cayley digraph; returns the
    /// two smallest ids of the first non-singleton component found.
    fn find_nontrivial_scc(&self) -> Option<(ElementId, ElementId)> {
        let n = self.n;
        const UNSEEN: u32 = u32::MAX;
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0u32; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<u32> = Vec::new();
        let mut counter = 0u32;

        // dfs frame: (node, edge cursor)
        let mut frames: Vec<(u32, usize)> = Vec::new();
        let mut edges: Vec<Vec<u32>> = Vec::new(); // per-frame edge lists
        let mut buf = Vec::new();

        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            self.out_edges(root, &mut buf);
            frames.push((root as u32, 0));
            edges.push(buf.clone());
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root as u32);
            on_stack[root] = true;

            while !frames.is_empty() {
                let fi = frames.len() - 1;
                let (v, cursor) = frames[fi];
                let v = v as usize;
                if cursor < edges[fi].len() {
                    frames[fi].1 += 1;
                    let w = edges[fi][cursor] as usize;
                    if index[w] == UNSEEN {
                        self.out_edges(w, &mut buf);
                        frames.push((w as u32, 0));
                        edges.push(buf.clone());
                        index[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push(w as u32);
                        on_stack[w] = true;
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    frames.pop();
                    edges.pop();
                    if low[v] == index[v] {
                        // pop the component
                        let mut comp: Vec<u32> = Vec::new();
                        loop {
                            let w = stack.pop().unwrap();
                            on_stack[w as usize] = false;
                            comp.push(w);
                            if w as usize == v {
                                break;
                            }
                        }
                        if comp.len() > 1 {
                            comp.sort_unstable();
                            return Some((ElementId(comp[0]), ElementId(comp[1])));
                        }
                    }
                    if let Some(&(p, _)) = frames.last() {
                        let p = p as usize;
                        low[p] = low[p].min(low[v]);
                    }
                }
            }
        }
        None
    }

    /// Topological sort of the two-sided Cayley digraph. Fails with a
    /// witness when the monoid is not J-trivial.
    pub fn j_order(&self) -> Result<&JOrderData> {
        self.jorder
            .get_or_init(|| {
                if let Some((x, y)) = self.j_trivial_witness() {
                    return Err(Error::NotJTrivial { x: x.0, y: y.0 });
                }
                let n = self.n;
                let mut indeg = vec![0u32; n];
                let mut buf = Vec::new();
                for x in 0..n {
                    self.out_edges(x, &mut buf);
                    for &w in &buf {
                        indeg[w as usize] += 1;
                    }
                }
                // min-heap on id for a deterministic extension
                let mut heap = std::collections::BinaryHeap::new();
                for x in 0..n {
                    if indeg[x] == 0 {
                        heap.push(std::cmp::Reverse(x as u32));
                    }
                }
                let mut linext = Vec::with_capacity(n);
                while let Some(std::cmp::Reverse(x)) = heap.pop() {
                    linext.push(ElementId(x));
                    self.out_edges(x as usize, &mut buf);
                    for &w in &buf {
                        indeg[w as usize] -= 1;
                        if indeg[w as usize] == 0 {
                            heap.push(std::cmp::Reverse(w));
                        }
                    }
                }
                if linext.len() != n {
                    return Err(Error::Internal(
                        "topological sort incomplete on acyclic input".into(),
                    ));
                }
                let mut position = vec![0u32; n];
                for (i, &x) in linext.iter().enumerate() {
                    position[x.index()] = i as u32;
                }
                Ok(JOrderData { linext, position })
            })
            .as_ref()
            .map_err(|e| e.clone())
    }

    /// Position of `x` in the J-linear extension (0 = identity).
    pub fn j_position(&self, x: ElementId) -> Result<u32> {
        Ok(self.j_order()?.position[x.index()])
    }

    /// x <=_J y, i.e. x lies in the two-sided ideal M y M. Answered from a
    /// precomputed transitive closure for n <= 10^4, by on-demand BFS
    /// beyond that.
    pub fn leq_j(&self, x: ElementId, y: ElementId) -> Result<bool> {
        self.j_order()?; // validates J-triviality
        if x == y {
            return Ok(true);
        }
        let closure = self.jclosure.get_or_init(|| {
            if self.n > JORDER_CLOSURE_LIMIT {
                return None;
            }
            let n = self.n;
            let words = n.div_ceil(64);
            let mut rows = vec![0u64; n * words];
            let order = &self.jorder.get().unwrap().as_ref().unwrap().linext;
            let mut buf = Vec::new();
            // process J-smallest first so successors are complete
            for &v in order.iter().rev() {
                let v = v.index();
                rows[v * words + v / 64] |= 1u64 << (v % 64);
                self.out_edges(v, &mut buf);
                let succ: Vec<u32> = buf.clone();
                for w in succ {
                    let (a, b) = split_rows(&mut rows, v, w as usize, words);
                    for k in 0..words {
                        a[k] |= b[k];
                    }
                }
            }
            Some(rows)
        });
        if let Some(rows) = closure {
            let words = self.n.div_ceil(64);
            Ok(rows[y.index() * words + x.index() / 64] & (1u64 << (x.index() % 64)) != 0)
        } else {
            // BFS from y over two-sided multiplications
            let mut seen = vec![false; self.n];
            let mut queue = vec![y.0];
            seen[y.index()] = true;
            let mut buf = Vec::new();
            while let Some(v) = queue.pop() {
                if v == x.0 {
                    return Ok(true);
                }
                self.out_edges(v as usize, &mut buf);
                for &w in &buf {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        queue.push(w);
                    }
                }
            }
            Ok(seen[x.index()])
        }
    }
}

/// Disjoint mutable views of rows `a` and `b` (a != b).
fn split_rows(rows: &mut [u64], a: usize, b: usize, words: usize) -> (&mut [u64], &[u64]) {
    debug_assert_ne!(a, b);
    if a < b {
        let (lo, hi) = rows.split_at_mut(b * words);
        (&mut lo[a * words..(a + 1) * words], &hi[..words])
    } else {
        let (lo, hi) = rows.split_at_mut(a * words);
        let a_row = &mut hi[..words];
        (a_row, &lo[b * words..(b + 1) * words])
    }
}
