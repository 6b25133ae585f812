//! Nondecreasing parking functions: order-preserving regressive maps of
//! the chain 1 < ... < n, generated by the idempotents pi_i sending i+1
//! to i. |NDPF_n| is the n-th Catalan number.

use crate::error::Result;
use crate::monoid::{GeneratorSpec, MonoidTable, DEFAULT_ELEMENT_CAP};

/// The NDPF_n table and the underlying maps (0-indexed image vectors).
pub fn ndpf(n: usize) -> Result<(MonoidTable, Vec<Vec<u8>>)> {
    let gens: Vec<GeneratorSpec<Vec<u8>>> = (1..n)
        .map(|i| {
            let mut action: Vec<u8> = (0..n as u8).collect();
            action[i] = i as u8 - 1;
            GeneratorSpec::new(i.to_string(), action)
        })
        .collect();
    let identity: Vec<u8> = (0..n as u8).collect();
    MonoidTable::generate(
        gens,
        identity,
        |f, g| f.iter().map(|&x| g[x as usize]).collect(),
        DEFAULT_ELEMENT_CAP,
    )
}

/// Independent oracle: enumerate all nondecreasing regressive self-maps
/// of {0, ..., n-1} directly.
pub fn brute_force_ndpf_maps(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut images = vec![0u8; n];
    fn rec(n: usize, k: usize, images: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k == n {
            out.push(images.clone());
            return;
        }
        let lo = if k == 0 { 0 } else { images[k - 1] };
        for v in lo..=(k as u8) {
            images[k] = v;
            rec(n, k + 1, images, out);
        }
    }
    if n > 0 {
        rec(n, 0, &mut images, &mut out);
    }
    out
}

pub fn catalan(n: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..n as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}
