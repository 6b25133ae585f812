//! JSON serialization of monoid tables.
//!
//! The dump stores the Cayley graphs and external forms only; generator
//! element ids are recovered from the identity row of the right Cayley
//! graph and words are rebuilt by BFS, so `dump -> load -> dump` is
//! byte-identical.

use serde::{Deserialize, Serialize};

use super::{ElementId, MonoidTable};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MonoidDump {
    pub n: usize,
    pub generators: Vec<String>,
    pub right_cayley: Vec<Vec<u32>>,
    pub left_cayley: Vec<Vec<u32>>,
    pub repr: Vec<String>,
}

impl MonoidTable {
    pub fn dump(&self) -> MonoidDump {
        let rows = |flat: &[u32]| -> Vec<Vec<u32>> {
            (0..self.n)
                .map(|x| flat[x * self.m..(x + 1) * self.m].to_vec())
                .collect()
        };
        MonoidDump {
            n: self.n,
            generators: self.gen_labels.clone(),
            right_cayley: rows(&self.right),
            left_cayley: rows(&self.left),
            repr: self.repr.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.dump()).expect("dump serialization cannot fail")
    }

    pub fn from_dump(dump: MonoidDump) -> Result<MonoidTable> {
        let n = dump.n;
        let m = dump.generators.len();
        if n == 0 {
            return Err(Error::InvalidInput("dump has no elements".into()));
        }
        if dump.right_cayley.len() != n
            || dump.left_cayley.len() != n
            || dump.repr.len() != n
            || dump.right_cayley.iter().any(|r| r.len() != m)
            || dump.left_cayley.iter().any(|r| r.len() != m)
        {
            return Err(Error::InvalidInput("dump table shape mismatch".into()));
        }
        let mut right = Vec::with_capacity(n * m);
        let mut left = Vec::with_capacity(n * m);
        for x in 0..n {
            for j in 0..m {
                let r = dump.right_cayley[x][j];
                let l = dump.left_cayley[x][j];
                if r as usize >= n || l as usize >= n {
                    return Err(Error::InvalidInput("dump entry out of range".into()));
                }
                right.push(r);
                left.push(l);
            }
        }

        // generator ids from the identity row: 1 * s_j = s_j
        let gens: Vec<ElementId> = (0..m).map(|j| ElementId(right[j])).collect();
        for (j, &g) in gens.iter().enumerate() {
            if left[j] != g.0 {
                return Err(Error::InvalidInput(format!(
                    "identity row disagrees between the two Cayley graphs at generator {j}"
                )));
            }
        }

        // rebuild words by BFS over the right Cayley graph
        let mut word_prefix = vec![u32::MAX; n];
        let mut word_gen = vec![0u16; n];
        let mut seen = vec![false; n];
        let mut bfs_order = Vec::with_capacity(n);
        seen[0] = true;
        bfs_order.push(0u32);
        let mut head = 0;
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
                "dump is not generated by its generator row".into(),
            ));
        }

        Ok(MonoidTable::assemble(
            n,
            m,
            gens,
            dump.generators,
            right,
            left,
            word_prefix,
            word_gen,
            bfs_order,
            Some(dump.repr),
            Vec::new(),
        ))
    }

    pub fn from_json(s: &str) -> Result<MonoidTable> {
        let dump: MonoidDump = serde_json::from_str(s)
            .map_err(|e| Error::InvalidInput(format!("bad monoid JSON: {e}")))?;
        MonoidTable::from_dump(dump)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{GeneratorSpec, DEFAULT_ELEMENT_CAP};
    use super::*;

    #[test]
    fn json_round_trip_is_byte_exact() {
        let (t, _) = MonoidTable::generate(
            vec![GeneratorSpec::new("x", 1u32), GeneratorSpec::new("y", 5u32)],
            0u32,
            |a, b| (a | b) & 0x7,
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        let json = t.to_json();
        let back = MonoidTable::from_json(&json).unwrap();
        assert_eq!(back.to_json(), json);
        assert_eq!(back.len(), t.len());
        for x in t.elements() {
            for y in t.elements() {
                assert_eq!(back.product(x, y), t.product(x, y));
            }
        }
    }
}
