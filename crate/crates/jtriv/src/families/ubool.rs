//! Unitriangular Boolean matrices: reflexive antisymmetric relations
//! inside the natural order on {1..n}, equivalently acyclic digraphs
//! with 1..n as linear extension. The product of g and h adds the
//! transitivity edges i -> k with i -> j in g and j -> k in h, so an
//! element is idempotent exactly when it is transitively closed and the
//! omega power is the transitive closure.
//!
//! The carrier is enumerated directly (the cardinality 2^(n(n-1)/2) is
//! known a priori); the single-edge matrices serve as generators for the
//! Cayley graphs.

use crate::error::{Error, Result};
use crate::monoid::MonoidTable;

/// An n x n unitriangular Boolean matrix, n <= 8; row i is the byte
/// `bits >> (8 i)`, the diagonal is stored explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    pub n: u8,
    bits: u64,
}

impl BoolMatrix {
    pub fn identity(n: usize) -> BoolMatrix {
        assert!((1..=8).contains(&n));
        let mut bits = 0u64;
        for i in 0..n {
            bits |= 1 << (8 * i + i);
        }
        BoolMatrix { n: n as u8, bits }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits >> (8 * i + j) & 1 != 0
    }

    pub fn set(&mut self, i: usize, j: usize) {
        assert!(i <= j, "only the upper triangle may be set");
        self.bits |= 1 << (8 * i + j);
    }

    #[inline]
    fn row(&self, i: usize) -> u64 {
        self.bits >> (8 * i) & 0xff
    }

    /// Boolean matrix product: row_i(self * other) is the union of the
    /// rows of `other` indexed by row_i(self).
    pub fn mul(&self, other: &BoolMatrix) -> BoolMatrix {
        let n = self.n as usize;
        let mut bits = 0u64;
        for i in 0..n {
            let mut acc = 0u64;
            let mut rest = self.row(i);
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                acc |= other.row(j);
            }
            bits |= acc << (8 * i);
        }
        BoolMatrix { n: self.n, bits }
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    /// Transpose along the second diagonal: (i, j) -> (n-1-j, n-1-i).
    /// An involutive antiautomorphism of the monoid.
    pub fn second_diagonal_transpose(&self) -> BoolMatrix {
        let n = self.n as usize;
        let mut bits = 0u64;
        for i in 0..n {
            for j in i..n {
                if self.get(i, j) {
                    bits |= 1 << (8 * (n - 1 - j) + (n - 1 - i));
                }
            }
        }
        BoolMatrix { n: self.n, bits }
    }

    /// Strictly-above-diagonal edges (i, j), 0-indexed, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n as usize;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Bit vector of the above-diagonal entries along the pair order
    /// (0,1), (0,2), ..., (0,n-1), (1,2), ... with earlier pairs more
    /// significant: the lexicographic key in which the Cartan matrix is
    /// unitriangular. The pair order has (i,j) before (j,k), as the
    /// triangularity argument requires.
    pub fn lex_key(&self) -> u64 {
        let n = self.n as usize;
        let count = n * (n - 1) / 2;
        let mut key = 0u64;
        let mut b = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.get(i, j) {
                    key |= 1 << (count - 1 - b);
                }
                b += 1;
            }
        }
        key
    }

    pub fn repr(&self) -> String {
        let body: Vec<String> = self
            .edges()
            .iter()
            .map(|&(i, j)| format!("{}{}", i + 1, j + 1))
            .collect();
        format!("{{{}}}", body.join(","))
    }
}

/// The pair order underlying `lex_key`: (i, j) always precedes (j, k).
pub fn pair_positions(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// Build U_n by direct enumeration of all bitsets; the table's
/// generators are the single-edge matrices.
pub fn unitriangular_boolean(n: usize, cap: usize) -> Result<(MonoidTable, Vec<BoolMatrix>)> {
    if !(1..=8).contains(&n) {
        return Err(Error::SizeGuard {
            what: "unitriangular matrix size",
            value: n,
            cap: 8,
        });
    }
    let pairs = pair_positions(n);
    let k = pairs.len();
    if 1usize << k > cap {
        return Err(Error::ClosureTooLarge { cap });
    }
    let values: Vec<BoolMatrix> = (0u64..1 << k)
        .map(|mask| {
            let mut m = BoolMatrix::identity(n);
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    m.set(i, j);
                }
            }
            m
        })
        .collect();
    let gen_indices: Vec<usize> = (0..k).map(|b| 1usize << b).collect();
    let gen_labels: Vec<String> = pairs
        .iter()
        .map(|&(i, j)| format!("e{}{}", i + 1, j + 1))
        .collect();
    let reprs: Vec<String> = values.iter().map(|m| m.repr()).collect();
    MonoidTable::from_elements(
        values,
        &gen_indices,
        gen_labels,
        |a, b| a.mul(b),
        Some(reprs),
        cap,
    )
}

/// Embed an extensive order-preserving map g of the chain 0 < ... < n-1
/// (x.g >= x) as the interval-row matrix with row u = [u, u.g]. This is
/// the product-preserving injection of OR(reversed chain) into U_n.
pub fn extensive_to_matrix(images: &[usize]) -> BoolMatrix {
    let n = images.len();
    let mut m = BoolMatrix::identity(n);
    for (u, &v) in images.iter().enumerate() {
        for j in u..=v {
            m.set(u, j);
        }
    }
    m
}
