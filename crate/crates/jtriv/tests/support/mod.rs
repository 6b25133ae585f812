//! Shared machinery for the integration suites: a deterministic corpus
//! of small J-trivial monoids (submonoids of OR(P) and of U_6), plus
//! cross-module invariant checks run on each instance.
//!
//! Each test binary uses a different slice of this module.
#![allow(dead_code)]

use jtriv::algebra::{
    cartan_matrix, idempotent_lattice, moebius_idempotents, omega_projection,
    orthogonal_idempotents, quiver, quiver_all_pairs, rad_mod_rad_square_dim, star_product,
    AlgebraElement,
};
use jtriv::families::BoolMatrix;
use jtriv::monoid::{ElementId, GeneratorSpec, MonoidTable};
use jtriv::regressive::{OrFunction, Poset};

pub const CORPUS_SEED: u64 = 0x1db7_55d1;

/// Minimal xorshift generator so the corpus is fixed forever.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Rng {
        Rng(seed | 1)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 ^= self.0 >> 12;
        self.0 ^= self.0 << 25;
        self.0 ^= self.0 >> 27;
        self.0.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() >> 16) as usize % n
    }

    pub fn chance(&mut self, num: usize, den: usize) -> bool {
        self.below(den) < num
    }
}

/// A random poset on 4..=7 points (covers only go label-upward, so the
/// relation is always a valid order).
pub fn random_poset(rng: &mut Rng) -> Poset {
    let n = 4 + rng.below(4);
    let mut covers = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.chance(1, 3) {
                covers.push((i, j));
            }
        }
    }
    Poset::from_covers(n, &covers).expect("upward covers are acyclic")
}

/// A random order-preserving regressive function, built along the
/// linear extension with uniform choice among the valid images.
pub fn random_or_function(p: &Poset, rng: &mut Rng) -> OrFunction {
    let mut images = vec![0u8; p.len()];
    for &x in p.linext() {
        // everything strictly below x is assigned already (it precedes x
        // in the linear extension), so the order constraint is complete
        let candidates: Vec<u8> = (0..p.len() as u8)
            .filter(|&v| {
                p.leq(v as usize, x)
                    && (0..p.len()).all(|y| {
                        !(p.lt(y, x)) || p.leq(images[y] as usize, v as usize)
                    })
            })
            .collect();
        images[x] = candidates[rng.below(candidates.len())];
    }
    OrFunction { images }
}

/// Deterministic corpus of `count` J-trivial monoids with at most
/// `max_n` elements, alternating OR(P)-submonoids and U_5-submonoids.
pub fn corpus(seed: u64, count: usize, max_n: usize) -> Vec<(String, MonoidTable)> {
    let mut rng = Rng::new(seed);
    let mut out = Vec::new();
    let mut tick = 0usize;
    while out.len() < count {
        tick += 1;
        let make_or = tick.is_multiple_of(2);
        let built = if make_or {
            let p = random_poset(&mut rng);
            let k = 3 + rng.below(3);
            let gens: Vec<GeneratorSpec<OrFunction>> = (0..k)
                .map(|i| GeneratorSpec::new(format!("f{i}"), random_or_function(&p, &mut rng)))
                .collect();
            MonoidTable::generate(
                gens,
                OrFunction::identity(p.len()),
                |f, g| f.compose(g),
                max_n,
            )
            .map(|(t, values)| {
                product_oracle_ok(&t, &values, |a, b| a.compose(b));
                (format!("or-sub[{tick}] n={}", t.len()), t)
            })
        } else {
            let k = 3 + rng.below(2);
            let gens: Vec<GeneratorSpec<BoolMatrix>> = (0..k)
                .map(|i| {
                    let mut m = BoolMatrix::identity(6);
                    for a in 0..6 {
                        for b in a + 1..6 {
                            if rng.chance(1, 3) {
                                m.set(a, b);
                            }
                        }
                    }
                    GeneratorSpec::new(format!("m{i}"), m)
                })
                .collect();
            MonoidTable::generate(gens, BoolMatrix::identity(6), |a, b| a.mul(b), max_n)
                .map(|(t, values)| {
                    product_oracle_ok(&t, &values, |a, b| a.mul(b));
                    (format!("ubool-sub[{tick}] n={}", t.len()), t)
                })
        };
        if let Ok(pair) = built {
            out.push(pair);
        }
        // closures above max_n are skipped; the draw continues
    }
    out
}

/// Brute-force product oracle: the table product of every pair agrees
/// with direct composition of the opaque values.
pub fn product_oracle_ok<T: Clone + Eq + std::hash::Hash>(
    t: &MonoidTable,
    values: &[T],
    compose: impl Fn(&T, &T) -> T,
) {
    assert!(t.len() <= 200, "oracle is quadratic, keep it small");
    let index: std::collections::HashMap<&T, u32> = values
        .iter()
        .enumerate()
        .map(|(i, v)| (v, i as u32))
        .collect();
    for x in t.elements() {
        for y in t.elements() {
            let direct = compose(&values[x.index()], &values[y.index()]);
            assert_eq!(t.product(x, y).0, index[&direct]);
        }
    }
}

/// The closure of a seed set under table products (with the identity).
pub fn closure_size(t: &MonoidTable, seeds: &[ElementId]) -> usize {
    t.build_product_cache();
    let mut in_set = vec![false; t.len()];
    in_set[0] = true;
    let mut members: Vec<ElementId> = vec![t.identity()];
    for &s in seeds {
        if !in_set[s.index()] {
            in_set[s.index()] = true;
            members.push(s);
        }
    }
    let mut frontier = members.clone();
    while let Some(x) = frontier.pop() {
        // multiply against every current member on both sides
        let mut i = 0;
        while i < members.len() {
            let y = members[i];
            for z in [t.product(x, y), t.product(y, x)] {
                if !in_set[z.index()] {
                    in_set[z.index()] = true;
                    members.push(z);
                    frontier.push(z);
                }
            }
            i += 1;
        }
    }
    members.len()
}

/// Every cross-module invariant asserted on one corpus instance.
pub fn check_instance_invariants(name: &str, t: &MonoidTable) {
    assert!(t.is_j_trivial(), "{name}: corpus monoids are J-trivial");
    t.build_product_cache();
    let n = t.len();

    // omega: idempotent, J-below, fixed on idempotents
    for x in t.elements() {
        let w = t.omega(x).unwrap();
        assert!(t.is_idempotent(w), "{name}: omega idempotent");
        assert!(t.leq_j(w, x).unwrap(), "{name}: omega below");
        if t.is_idempotent(x) {
            assert_eq!(w, x, "{name}: omega fixes idempotents");
        }
    }

    // symbols: fixing, J-minimality, monotonicity, bitvector agreement
    let (lbits, rbits) = t.symbols_bitvector().unwrap();
    for x in t.elements() {
        let l = t.lfix(x).unwrap();
        let r = t.rfix(x).unwrap();
        assert_eq!(t.product(l, x), x, "{name}: lfix fixes");
        assert_eq!(t.product(x, r), x, "{name}: rfix fixes");
        assert_eq!(lbits[x.index()], l.0, "{name}: lfix bitvector");
        assert_eq!(rbits[x.index()], r.0, "{name}: rfix bitvector");
        for &e in t.idempotents() {
            if t.product(e, x) == x {
                assert_eq!(t.product(l, e), l, "{name}: lfix minimal");
            }
            if t.product(x, e) == x {
                assert_eq!(t.product(r, e), r, "{name}: rfix minimal");
            }
        }
        for y in t.elements() {
            let lab = t.lfix(t.product(x, y)).unwrap();
            assert_eq!(
                t.product(lab, l),
                lab,
                "{name}: lfix decreasing along right multiplication"
            );
        }
    }

    // star lattice: commutative, associative, idempotent, meet law
    let lat = idempotent_lattice(t).unwrap();
    let k = lat.idems.len();
    for &e in &lat.idems {
        for &f in &lat.idems {
            let s = lat.meet(e, f);
            assert_eq!(s, lat.meet(f, e), "{name}: star commutative");
            assert!(lat.leq(s, e) && lat.leq(s, f), "{name}: star lower bound");
            for &z in &lat.idems {
                assert_eq!(
                    lat.meet(lat.meet(e, f), z),
                    lat.meet(e, lat.meet(f, z)),
                    "{name}: star associative"
                );
                if lat.leq(z, e) && lat.leq(z, f) {
                    assert!(lat.leq(z, s), "{name}: star is the meet");
                }
            }
        }
    }
    assert_eq!(lat.top(), t.identity());

    // Moebius recursion identity
    let min = lat.minimum();
    for &e in &lat.idems {
        let total: i64 = lat
            .idems
            .iter()
            .filter(|&&ep| lat.leq(ep, e))
            .map(|&ep| lat.moebius(ep, e))
            .sum();
        assert_eq!(total, i64::from(e == min), "{name}: Moebius row sums");
    }

    // g-idempotents: orthogonal for the star product, summing to 1
    let g = moebius_idempotents(t).unwrap();
    let mut gsum = AlgebraElement::zero();
    for (&u, gu) in &g {
        gsum = gsum.add(gu);
        for (&v, gv) in &g {
            let p = star_product(t, gu, gv).unwrap();
            if u == v {
                assert_eq!(p, *gu, "{name}: g idempotent under star");
            } else {
                assert!(p.is_zero(), "{name}: g orthogonal under star");
            }
        }
    }
    assert_eq!(gsum, AlgebraElement::one(), "{name}: sum of g is 1");

    // quotient compatibility of the omega projection
    for x in t.elements() {
        for y in t.elements() {
            let px = omega_projection(t, &AlgebraElement::basis(x)).unwrap();
            let py = omega_projection(t, &AlgebraElement::basis(y)).unwrap();
            let pxy =
                omega_projection(t, &AlgebraElement::basis(t.product(x, y))).unwrap();
            assert_eq!(
                star_product(t, &px, &py).unwrap(),
                pxy,
                "{name}: projection multiplicative through star"
            );
        }
    }

    // lifted idempotents and the b-basis triangularity
    let f = orthogonal_idempotents(t).unwrap();
    let mut fsum = AlgebraElement::zero();
    for (e, fe) in f.iter() {
        fsum = fsum.add(fe);
        assert!(fe.is_idempotent(t), "{name}: f idempotent");
        assert_eq!(
            omega_projection(t, fe).unwrap(),
            g[&e],
            "{name}: phi(f) = g"
        );
        assert_eq!(fe.coeff(e), jtriv::algebra::rat(1), "{name}: f unitriangular");
        for x in fe.support() {
            assert!(t.leq_j(x, e).unwrap(), "{name}: f supported J-below e");
        }
    }
    assert_eq!(fsum, AlgebraElement::one(), "{name}: sum of f is 1");
    let b = jtriv::algebra::b_basis(t).unwrap();
    for (x, bx) in &b {
        assert_eq!(bx.coeff(*x), jtriv::algebra::rat(1), "{name}: b leading 1");
        for y in bx.support() {
            assert!(t.leq_j(y, *x).unwrap(), "{name}: b triangular");
        }
    }

    // Cartan counts everything once; diagonal at least 1
    let c = cartan_matrix(t).unwrap();
    assert_eq!(c.total(), n as u64, "{name}: Cartan total");
    for i in 0..k {
        assert!(c.get(i, i) >= 1, "{name}: Cartan diagonal");
    }

    // quiver: both sieves agree; edge count = dim rad/rad^2; labels are
    // the non-idempotent elements with no non-trivial factorization
    let q = quiver(t).unwrap();
    let q2 = quiver_all_pairs(t).unwrap();
    assert_eq!(q.edges, q2.edges, "{name}: sieve restriction is exact");
    assert_eq!(
        q.edges.len(),
        rad_mod_rad_square_dim(t, None).unwrap(),
        "{name}: quiver edge count = dim rad/rad^2"
    );
    for e in &q.edges {
        assert!(!t.is_idempotent(e.label));
        assert_eq!(t.lfix(e.label).unwrap(), e.src, "{name}: edge source");
        assert_eq!(t.rfix(e.label).unwrap(), e.dst, "{name}: edge target");
    }

    // vertices + edge labels regenerate the monoid. (This set need not
    // be minimal: an edge label can be a product of two idempotents
    // through a trivial factorization, so dropping it may lose nothing.)
    let mut seeds: Vec<ElementId> = t.idempotents().to_vec();
    seeds.extend(q.edges.iter().map(|e| e.label));
    assert_eq!(closure_size(t, &seeds), n, "{name}: quiver data generates");
    // the true minimal generating set consists of the irreducibles
    let mingens = t.minimal_generators();
    assert_eq!(
        closure_size(t, &mingens),
        n,
        "{name}: irreducibles generate"
    );
    for skip in &mingens {
        let rest: Vec<ElementId> = mingens.iter().copied().filter(|s| s != skip).collect();
        assert!(
            closure_size(t, &rest) < n,
            "{name}: the irreducible generating set is minimal"
        );
    }
    // every irreducible is c-irreducible, so it is a vertex or an edge label
    for x in &mingens {
        assert!(
            t.is_idempotent(*x) || q.edges.iter().any(|e| e.label == *x),
            "{name}: irreducible {x} must appear in the quiver data"
        );
    }

    // projective module dimensions partition the monoid
    let mut dims = 0;
    for &e in t.idempotents() {
        dims += jtriv::algebra::projective_module(t, e).unwrap().dim();
    }
    assert_eq!(dims, n, "{name}: projective dims partition");
}

