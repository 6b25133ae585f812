//! Radical filtration by exact rank computation.
//!
//! rad KM has basis {x - x^omega : x non-idempotent}, which is already
//! in echelon form for the J-linear extension. Higher radical powers are
//! spanned by products (basis of rad) * (basis of rad^k); their
//! dimensions come from an incremental sparse row echelon over exact
//! rationals, columns ordered along the J-linear extension.

use std::collections::{BTreeMap, HashSet};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monoid::{ElementId, MonoidTable};

pub const DEFAULT_FILTRATION_CAP: usize = 1000;

/// Sparse row: (column, coefficient) sorted by column, no zeros.
type Row = Vec<(u32, BigRational)>;

/// Incremental row echelon keyed by leading column.
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<u32, Row>,
}

impl Echelon {
    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `row` against the pivots; insert if independent.
    /// Returns true when the rank grew.
    fn insert(&mut self, mut row: Row) -> bool {
        loop {
            let Some(&(lead, ref c)) = row.first() else {
                return false;
            };
            match self.pivots.get(&lead) {
                None => {
                    // normalize to leading coefficient 1
                    let c = c.clone();
                    if !c.is_one() {
                        for (_, v) in row.iter_mut() {
                            *v /= c.clone();
                        }
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
                Some(p) => {
                    let factor = c.clone();
                    row = row_sub_scaled(&row, p, &factor);
                }
            }
        }
    }

    fn rows(&self) -> impl Iterator<Item = &Row> {
        self.pivots.values()
    }
}

/// a - factor * b, both sorted.
fn row_sub_scaled(a: &Row, b: &Row, factor: &BigRational) -> Row {
    let mut out = Row::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(ca, ref va)), Some(&(cb, _))) if ca < cb => {
                out.push((ca, va.clone()));
                i += 1;
            }
            (Some(&(ca, ref va)), Some(&(cb, ref vb))) if ca == cb => {
                let v = va.clone() - factor.clone() * vb.clone();
                if !v.is_zero() {
                    out.push((ca, v));
                }
                i += 1;
                j += 1;
            }
            (_, Some(&(cb, ref vb))) => {
                out.push((cb, -(factor.clone() * vb.clone())));
                j += 1;
            }
            (Some(&(ca, ref va)), None) => {
                out.push((ca, va.clone()));
                i += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// The radical filtration: dims[k-1] = dim rad^k KM, strictly decreasing
/// to zero, together with the generating series of the quotients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalSeries {
    pub algebra_dim: usize,
    /// dim rad^k for k = 1, 2, ... (last entry is the first zero power).
    pub dims: Vec<usize>,
}

impl RadicalSeries {
    /// Coefficient of q^k in sum_k dim(rad^k / rad^{k+1}) q^k.
    pub fn coefficient(&self, k: usize) -> usize {
        let d = |i: usize| -> usize {
            if i == 0 {
                self.algebra_dim
            } else {
                self.dims.get(i - 1).copied().unwrap_or(0)
            }
        };
        d(k) - d(k + 1)
    }

    pub fn degree(&self) -> usize {
        self.dims.len()
    }

    /// Coefficients c_0, ..., c_{degree-1} of the generating series.
    pub fn coefficients(&self) -> Vec<usize> {
        (0..self.degree().max(1)).map(|k| self.coefficient(k)).collect()
    }

    /// All coefficients even (e.g. for 0-Hecke algebras)?
    pub fn all_coefficients_even(&self) -> bool {
        self.coefficients().iter().all(|c| c % 2 == 0)
    }
}

impl std::fmt::Display for RadicalSeries {
    /// Renders like `6q^2 + 10q + 8`, highest power first.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let coeffs = self.coefficients();
        let mut first = true;
        for k in (0..coeffs.len()).rev() {
            let c = coeffs[k];
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = if c == 1 && k > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match k {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}q")?,
                _ => write!(f, "{coeff}q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn radical_rows(t: &MonoidTable) -> Result<Vec<(ElementId, ElementId)>> {
    let omega = t.omega_all()?;
    Ok(t.elements()
        .filter(|&x| !t.is_idempotent(x))
        .map(|x| (x, ElementId(omega[x.index()])))
        .collect())
}

/// dims of rad^k for k = 1.. up to `max_power` (None: until zero).
fn radical_dims(t: &MonoidTable, max_power: Option<usize>, cap: usize) -> Result<Vec<usize>> {
    let n = t.len();
    if n > cap {
        return Err(Error::FiltrationTooLarge { n, cap });
    }
    t.build_product_cache();
    let jo = t.j_order()?;
    let rad = radical_rows(t)?;
    let d1 = rad.len();
    let mut dims = vec![d1];
    if d1 == 0 {
        return Ok(dims);
    }

    // rad^1 rows are triangular with distinct leads: echelon for free
    let mut current: Vec<Row> = rad
        .iter()
        .map(|&(x, w)| {
            let mut row = vec![
                (jo.position[x.index()], BigRational::one()),
                (jo.position[w.index()], -BigRational::one()),
            ];
            row.sort_by_key(|&(p, _)| p);
            row
        })
        .collect();

    let linext = &jo.linext;
    while dims.last() != Some(&0) {
        if let Some(mp) = max_power {
            if dims.len() >= mp {
                break;
            }
        }
        let mut ech = Echelon::default();
        let mut seen: HashSet<Row> = HashSet::new();
        for &(x, w) in &rad {
            for r in &current {
                // (x - w) * r with positions mapped back to elements
                let mut terms: BTreeMap<u32, BigRational> = BTreeMap::new();
                for &(pos, ref c) in r {
                    let y = linext[pos as usize];
                    let xy = t.product(x, y);
                    let wy = t.product(w, y);
                    add_term(&mut terms, jo.position[xy.index()], c.clone());
                    add_term(&mut terms, jo.position[wy.index()], -c.clone());
                }
                // BTreeMap iteration is already sorted by position
                let row: Row = terms.into_iter().collect();
                if row.is_empty() || !seen.insert(row.clone()) {
                    continue;
                }
                ech.insert(row);
            }
        }
        dims.push(ech.rank());
        current = ech.rows().cloned().collect();
    }
    Ok(dims)
}

fn add_term(map: &mut BTreeMap<u32, BigRational>, pos: u32, c: BigRational) {
    use std::collections::btree_map::Entry;
    match map.entry(pos) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get().clone() + c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// The full radical filtration of KM by exact fraction-free elimination,
/// guarded by `cap` (default 1000 elements).
pub fn radical_filtration(t: &MonoidTable, cap: Option<usize>) -> Result<RadicalSeries> {
    let cap = cap.unwrap_or(DEFAULT_FILTRATION_CAP);
    let mut dims = radical_dims(t, None, cap)?;
    if dims.last() != Some(&0) {
        dims.push(0);
    }
    // drop trailing zero beyond the first
    while dims.len() >= 2 && dims[dims.len() - 2] == 0 {
        dims.pop();
    }
    Ok(RadicalSeries {
        algebra_dim: t.len(),
        dims,
    })
}

/// dim rad^2, for checking dim(rad/rad^2) against the quiver edge count.
pub fn rad_square_dim(t: &MonoidTable, cap: Option<usize>) -> Result<usize> {
    let cap = cap.unwrap_or(DEFAULT_FILTRATION_CAP);
    let dims = radical_dims(t, Some(2), cap)?;
    Ok(dims.get(1).copied().unwrap_or(0))
}

/// dim(rad / rad^2) = dim rad - dim rad^2.
pub fn rad_mod_rad_square_dim(t: &MonoidTable, cap: Option<usize>) -> Result<usize> {
    let cap = cap.unwrap_or(DEFAULT_FILTRATION_CAP);
    let dims = radical_dims(t, Some(2), cap)?;
    Ok(dims[0] - dims.get(1).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{GeneratorSpec, DEFAULT_ELEMENT_CAP};

    fn power_chain(k: u32) -> MonoidTable {
        MonoidTable::generate(
            vec![GeneratorSpec::new("x", 1u32)],
            0u32,
            move |a, b| (a + b).min(k),
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap()
        .0
    }

    #[test]
    fn trivial_monoid_series_is_one() {
        let (t, _) = MonoidTable::generate(
            Vec::<GeneratorSpec<u8>>::new(),
            0u8,
            |_, _| 0,
            DEFAULT_ELEMENT_CAP,
        )
        .unwrap();
        let s = radical_filtration(&t, None).unwrap();
        assert_eq!(s.dims, vec![0]);
        assert_eq!(s.to_string(), "1");
    }

    #[test]
    fn power_chain_filtration_is_the_full_flag() {
        // {1, x, ..., x^k}: rad^j has basis {x^i - x^k : j <= i < k}
        let k = 5usize;
        let t = power_chain(k as u32);
        let s = radical_filtration(&t, None).unwrap();
        let expect: Vec<usize> = (1..=k).map(|j| k - j).collect();
        assert_eq!(s.dims, expect);
        // n = k+1 elements, two idempotents (1 and the absorber)
        assert_eq!(s.to_string(), "q^4 + q^3 + q^2 + q + 2");
        assert_eq!(
            rad_mod_rad_square_dim(&t, None).unwrap(),
            1,
            "one quiver edge"
        );
    }

    #[test]
    fn cap_guard_fires() {
        let t = power_chain(30);
        let err = radical_filtration(&t, Some(10)).unwrap_err();
        assert!(matches!(err, Error::FiltrationTooLarge { .. }));
    }
}
