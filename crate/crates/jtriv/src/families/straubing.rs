//! The five-element monoid {1, x, y, z, 0} with x^2 = x, y^2 = y,
//! xz = zy = z, and all other products zero. It is J-trivial but admits
//! no compatible order with 1 on top, so it separates the two classes;
//! we only record that fact, the monoid itself is what gets computed.

use crate::error::Result;
use crate::monoid::{MonoidTable, DEFAULT_ELEMENT_CAP};

const ONE: u8 = 0;
const X: u8 = 1;
const Y: u8 = 2;
const Z: u8 = 3;
const ZERO: u8 = 4;

fn mul(a: u8, b: u8) -> u8 {
    match (a, b) {
        (ONE, t) | (t, ONE) => t,
        (X, X) => X,
        (Y, Y) => Y,
        (X, Z) => Z,
        (Z, Y) => Z,
        _ => ZERO,
    }
}

pub fn straubing_example() -> Result<MonoidTable> {
    let values = vec![ONE, X, Y, Z, ZERO];
    let reprs = ["1", "x", "y", "z", "0"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let (t, _) = MonoidTable::from_elements(
        values,
        &[1, 2, 3],
        vec!["x".into(), "y".into(), "z".into()],
        |a, b| mul(*a, *b),
        Some(reprs),
        DEFAULT_ELEMENT_CAP,
    )?;
    Ok(t)
}
