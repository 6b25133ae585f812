//! Cross-module invariants tied to specific published structures:
//! descent tables, dihedral radical bases, quiver predictions, the
//! NDPF embedding into Boolean matrices, and the order-theoretic
//! idempotent combinatorics of OR(P).

mod support;

use jtriv::algebra::{
    b_basis, cartan_matrix, hecke_quiver_prediction, moebius_idempotents,
    orthogonal_idempotents, projective_module, quiver, simple_character, AlgebraElement,
};
use jtriv::families::{
    extensive_to_matrix, hecke_monoid, ndpf, straubing_example, unitriangular_boolean,
    CoxeterGroup, CoxeterType, HeckeMonoid,
};
use jtriv::monoid::ElementId;
use jtriv::regressive::{
    conjecture_check, e_ab, enumerate_posets, factor_idempotent, lex_symbol_order_check,
    ndpf_diagram_demipotent, ndpf_norton_form, or_functions, or_idempotent_images, or_monoid,
    or_symbols, semilattice_demipotents, sup_map, OrFunction, Poset, PosetFilter, SignedDiagram,
};

fn hecke(t: CoxeterType, rank: usize) -> HeckeMonoid {
    hecke_monoid(CoxeterGroup::new(t, rank).unwrap()).unwrap()
}

#[test]
fn straubing_j_order() {
    let t = straubing_example().unwrap();
    let (one, x, y, z, zero) = (
        ElementId(0),
        ElementId(1),
        ElementId(2),
        ElementId(3),
        ElementId(4),
    );
    assert!(t.leq_j(zero, z).unwrap());
    assert!(t.leq_j(z, x).unwrap());
    assert!(t.leq_j(z, y).unwrap());
    assert!(!t.leq_j(x, y).unwrap());
    for w in t.elements() {
        assert!(t.leq_j(w, one).unwrap(), "identity is the maximum");
    }
}

#[test]
fn hecke_s3_longest_element_is_the_minimum() {
    let h = hecke(CoxeterType::A, 2);
    let w0 = h.parabolic_idempotent(0b11).unwrap();
    for x in h.table.elements() {
        assert!(h.table.leq_j(w0, x).unwrap());
    }
    // star(pi1, pi2) = pi1 pi2 pi1
    let t = &h.table;
    let (p1, p2) = (t.generators()[0], t.generators()[1]);
    let s = jtriv::algebra::star(t, p1, p2).unwrap();
    assert_eq!(s, w0);
    assert_eq!(t.product(t.product(p1, p2), p1), w0);
}

#[test]
fn hecke_idempotent_lattice_is_boolean() {
    for rank in [2usize, 3] {
        let h = hecke(CoxeterType::A, rank);
        let t = &h.table;
        assert_eq!(t.idempotents().len(), 1 << rank);
        // star of parabolic idempotents is the idempotent of the union
        let full = (1u32 << rank) - 1;
        for j in 0..=full {
            for k in 0..=full {
                let s = jtriv::algebra::star(
                    t,
                    h.parabolic_idempotent(j).unwrap(),
                    h.parabolic_idempotent(k).unwrap(),
                )
                .unwrap();
                assert_eq!(s, h.parabolic_idempotent(j | k).unwrap());
            }
        }
    }
}

#[test]
fn hecke_s2_closed_forms() {
    let h = hecke(CoxeterType::A, 1);
    let t = &h.table;
    let p1 = t.generators()[0];
    let one = AlgebraElement::one();
    let g = moebius_idempotents(t).unwrap();
    assert_eq!(g[&p1], AlgebraElement::basis(p1));
    assert_eq!(g[&t.identity()], one.sub(&AlgebraElement::basis(p1)));
    let f = orthogonal_idempotents(t).unwrap();
    assert_eq!(*f.get(p1), AlgebraElement::basis(p1));
    assert_eq!(*f.get(t.identity()), one.sub(&AlgebraElement::basis(p1)));
    let b = b_basis(t).unwrap();
    assert_eq!(b[&p1], AlgebraElement::basis(p1));
    assert_eq!(b[&t.identity()], *f.get(t.identity()));
}

#[test]
fn hecke_s3_moebius_idempotent() {
    let h = hecke(CoxeterType::A, 2);
    let t = &h.table;
    let p1 = t.generators()[0];
    let w0 = h.parabolic_idempotent(0b11).unwrap();
    let g = moebius_idempotents(t).unwrap();
    assert_eq!(
        g[&p1],
        AlgebraElement::basis(p1).sub(&AlgebraElement::basis(w0))
    );
}

#[test]
fn simple_character_of_s3() {
    let h = hecke(CoxeterType::A, 2);
    let t = &h.table;
    let (p1, p2) = (t.generators()[0], t.generators()[1]);
    assert_eq!(simple_character(t, p1, p2).unwrap(), 0);
    assert_eq!(simple_character(t, p1, p1).unwrap(), 1);
    assert_eq!(simple_character(t, p1, t.identity()).unwrap(), 1);
}

/// Left/right descent table of six specific elements of S_5, together
/// with the products that realize them.
#[test]
fn s5_descent_table() {
    let h = hecke(CoxeterType::A, 4);
    let g = &h.group;
    let w = |line: [i16; 5]| line.to_vec();
    let x = w([1, 4, 3, 5, 2]);
    let y = w([3, 1, 2, 5, 4]);
    let z = w([2, 5, 3, 1, 4]);
    // generator bit b is s_{b+1}, so descent set {2,3} is mask 0b0110
    let mask = |s: &[usize]| s.iter().fold(0u32, |m, &i| m | 1 << (i - 1));
    let expect = [
        (x.clone(), mask(&[2, 3]), mask(&[2, 4])),
        (y.clone(), mask(&[2, 4]), mask(&[1, 4])),
        (z.clone(), mask(&[1, 4]), mask(&[2, 3])),
    ];
    for (elem, dl, dr) in &expect {
        assert_eq!(g.left_descents(elem), *dl);
        assert_eq!(g.right_descents(elem), *dr);
    }
    // the monoid products realize xy, yz, xyz with the stated descents
    let t = &h.table;
    let (px, py, pz) = (h.pi_of(&x), h.pi_of(&y), h.pi_of(&z));
    let pxy = t.product(px, py);
    let pyz = t.product(py, pz);
    let pxyz = t.product(pxy, pz);
    assert_eq!(h.w_of(pxy), &w([4, 1, 3, 5, 2]));
    assert_eq!(h.w_of(pyz), &w([3, 5, 2, 1, 4]));
    assert_eq!(h.w_of(pxyz), &w([4, 5, 3, 1, 2]));
    assert_eq!(g.left_descents(h.w_of(pyz)), mask(&[1, 2, 4]));
    assert_eq!(g.right_descents(h.w_of(pyz)), mask(&[2, 3]));
    assert_eq!(g.left_descents(h.w_of(pxyz)), mask(&[2, 3]));
    assert_eq!(g.right_descents(h.w_of(pxyz)), mask(&[2, 3]));
    // and lfix/rfix are the corresponding descent idempotents
    assert_eq!(
        t.lfix(px).unwrap(),
        h.parabolic_idempotent(mask(&[2, 3])).unwrap()
    );
    assert_eq!(
        t.rfix(px).unwrap(),
        h.parabolic_idempotent(mask(&[2, 4])).unwrap()
    );
}

/// Cartan diagonal of a 0-Hecke monoid counts the elements with equal
/// left and right descent sets; the total is |W|.
#[test]
fn hecke_cartan_descent_counts() {
    for (ty, rank) in [
        (CoxeterType::A, 3),
        (CoxeterType::B, 3),
        (CoxeterType::I, 7),
    ] {
        let h = hecke(ty, rank);
        let c = cartan_matrix(&h.table).unwrap();
        assert_eq!(c.total(), h.group.order() as u64);
        for (i, &e) in c.idems.iter().enumerate() {
            let count = h
                .group
                .elements()
                .iter()
                .filter(|w| {
                    let dl = h.group.left_descents(w);
                    dl == h.group.right_descents(w)
                        && h.parabolic_idempotent(dl).unwrap() == e
                })
                .count() as u64;
            assert_eq!(c.get(i, i), count, "{ty:?}{rank}");
        }
    }
}

/// Projective modules of H_0(S_4) decompose along left descent classes.
#[test]
fn hecke_s4_projectives_are_descent_classes() {
    let h = hecke(CoxeterType::A, 3);
    let t = &h.table;
    let mut total = 0;
    for &e in t.idempotents() {
        let p = projective_module(t, e).unwrap();
        let class = h
            .group
            .elements()
            .iter()
            .filter(|w| h.parabolic_idempotent(h.group.left_descents(w)).unwrap() == e)
            .count();
        assert_eq!(p.dim(), class);
        total += p.dim();
        // the action is monomial-with-zeros; the identity fixes the basis
        for i in 0..p.dim() {
            assert_eq!(p.act(t, i, t.identity()).unwrap(), Some(i));
        }
    }
    assert_eq!(total, 24);
}

/// Quiver predictions from Coxeter data match the computed quivers for
/// every supported group with at most 1152 elements.
#[test]
fn hecke_quiver_prediction_matches() {
    let mut groups = vec![
        (CoxeterType::A, 1),
        (CoxeterType::A, 2),
        (CoxeterType::A, 3),
        (CoxeterType::A, 4),
        (CoxeterType::A, 5),
        (CoxeterType::B, 2),
        (CoxeterType::B, 3),
        (CoxeterType::B, 4),
        (CoxeterType::D, 2),
        (CoxeterType::D, 3),
        (CoxeterType::D, 4),
    ];
    groups.extend((2..=12).map(|m| (CoxeterType::I, m)));
    for (ty, rank) in groups {
        let h = hecke(ty, rank);
        assert!(h.group.order() <= 1152);
        let pred = hecke_quiver_prediction(&h.group);
        let mut want: Vec<ElementId> = pred
            .iter()
            .map(|&(j, k)| {
                h.table.product(
                    h.parabolic_idempotent(j).unwrap(),
                    h.parabolic_idempotent(k).unwrap(),
                )
            })
            .collect();
        want.sort_unstable();
        want.dedup();
        let mut got = quiver(&h.table).unwrap().edge_labels();
        got.sort_unstable();
        assert_eq!(got, want, "{ty:?}{rank}");
        // no predicted pair is nested
        for &(j, k) in &pred {
            assert!(j & k != j && j & k != k, "incomparability");
        }
    }
    // A2 predicts exactly ({1},{2}) and ({2},{1})
    let a2 = hecke(CoxeterType::A, 2);
    assert_eq!(hecke_quiver_prediction(&a2.group), vec![(1, 2), (2, 1)]);
}

/// Dihedral product relations behind the radical flag: with
/// a_k, b_k the alternating words and w the longest element,
/// (a_2 - w)(a_j - w) = a_{j+2} - w and (a_2 - w)(b_j - w) = a_{j+1} - w,
/// and the radical dimensions are d_k = 2(n-1-k).
#[test]
fn dihedral_radical_structure() {
    for n in 4..=9 {
        let h = hecke(CoxeterType::I, n);
        let t = &h.table;
        let a = |k: usize| -> ElementId {
            h.pi_of(&vec![k as i16, 0])
        };
        let b = |k: usize| -> ElementId {
            if k == 0 || k == n {
                a(k)
            } else {
                h.pi_of(&vec![k as i16, 1])
            }
        };
        let w = a(n);
        let basis = |x: ElementId| {
            AlgebraElement::basis(x).sub(&AlgebraElement::basis(w))
        };
        for j in 2..n {
            if j + 2 <= n {
                assert_eq!(basis(a(2)).mul(&basis(a(j)), t), basis(a(j + 2)));
                assert_eq!(basis(b(2)).mul(&basis(b(j)), t), basis(b(j + 2)));
            }
            if j < n {
                assert_eq!(basis(a(2)).mul(&basis(b(j)), t), basis(a(j + 1)));
                assert_eq!(basis(b(2)).mul(&basis(a(j)), t), basis(b(j + 1)));
            }
        }
        let s = jtriv::algebra::radical_filtration(t, None).unwrap();
        for (k, &d) in s.dims.iter().enumerate() {
            let k = k + 1;
            let want = if k < n { 2 * (n - 1 - k) } else { 0 };
            assert_eq!(d, want, "I_{n} dim rad^{k}");
        }
    }
}

/// The six sign relations of the parking-function generators, checked
/// in the algebra for every adjacent pair.
#[test]
fn ndpf_sign_relations() {
    let (t, _) = ndpf(5).unwrap();
    let one = AlgebraElement::one();
    let plus = |i: usize| AlgebraElement::basis(t.generators()[i]);
    let minus = |i: usize| one.sub(&plus(i));
    let m = |a: &AlgebraElement, b: &AlgebraElement| a.mul(b, &t);
    for i in 1..t.num_generators() {
        let (pp, pm) = (plus(i), minus(i));
        let (qp, qm) = (plus(i - 1), minus(i - 1));
        assert_eq!(m(&m(&qp, &pp), &qp), m(&pp, &qp));
        assert_eq!(m(&m(&qm, &pm), &qm), m(&qm, &pm));
        assert_eq!(m(&m(&pp, &qm), &pp), m(&pp, &qm));
        assert_eq!(m(&m(&pm, &qp), &pm), m(&qp, &pm));
        assert_eq!(m(&m(&qp, &pm), &qp), m(&pm, &qp));
        assert_eq!(m(&m(&qm, &pp), &qm), m(&qm, &pp));
    }
}

/// The Norton two-block form of the signed-diagram elements, plus the
/// worked block structure of the diagram ++++---++.
#[test]
fn ndpf_norton_forms() {
    let (t, _) = ndpf(5).unwrap();
    for d in SignedDiagram::all(t.num_generators()) {
        let (_, _, c) = ndpf_diagram_demipotent(&t, &d).unwrap();
        assert_eq!(c, ndpf_norton_form(&t, &d).unwrap(), "diagram {d}");
        assert!(c.is_idempotent(&t));
    }
    // the 10-generator example: block structure {1..4}{5..7}{8,9}
    let (t10, _) = ndpf(10).unwrap();
    let d = SignedDiagram::from_str_signs("++++---++").unwrap();
    let (l, _, _) = ndpf_diagram_demipotent(&t10, &d).unwrap();
    let one = AlgebraElement::one();
    let plus = |i: usize| AlgebraElement::basis(t10.generators()[i - 1]);
    let minus = |i: usize| one.sub(&plus(i));
    let mut want = AlgebraElement::one();
    for i in [4, 3, 2, 1] {
        want = want.mul(&plus(i), &t10);
    }
    for i in [5, 6, 7] {
        want = want.mul(&minus(i), &t10);
    }
    for i in [9, 8] {
        want = want.mul(&plus(i), &t10);
    }
    assert_eq!(l, want);
}

/// On a chain, the semilattice demipotents are exactly the parking
/// function family: the element-level diagram (skipping the forced
/// bottom) is the complement of the generator-level one.
#[test]
fn chain_demipotents_reduce_to_ndpf() {
    for n in 2..=5 {
        let chain = Poset::chain(n);
        let demi = semilattice_demipotents(&chain, 1 << 20).unwrap();
        let (tn, _) = ndpf(n).unwrap();
        assert_eq!(demi.items.len(), 1 << (n - 1));
        // both tables are OR(chain); match them through the functions
        for (d, c) in &demi.items {
            assert!(d.signs[0], "bottom is always forced in");
            let gen_signs: Vec<bool> = d.signs[1..].iter().map(|&s| !s).collect();
            let (_, _, c_ndpf) =
                ndpf_diagram_demipotent(&tn, &SignedDiagram::new(gen_signs)).unwrap();
            // compare coefficient-by-coefficient through the value maps
            let mut lhs: Vec<(String, String)> = c
                .terms()
                .map(|(x, q)| (demi.table.repr(x).to_string(), q.to_string()))
                .collect();
            lhs.sort();
            let mut rhs: Vec<(String, String)> = c_ndpf
                .terms()
                .map(|(x, q)| {
                    let f = tn
                        .word_of(x)
                        .iter()
                        .fold(OrFunction::identity(n), |acc, &j| {
                            let mut images: Vec<u8> = (0..n as u8).collect();
                            images[j as usize + 1] = j as u8;
                            acc.compose(&OrFunction { images })
                        });
                    (f.repr(), q.to_string())
                })
                .collect();
            rhs.sort();
            assert_eq!(lhs, rhs, "chain {n}, diagram {d}");
        }
    }
}

/// e_{a,b} is the pointwise largest function sending a to b, and the
/// composition law holds across every meet semi-lattice on <= 5 points.
#[test]
fn eab_extremality_and_composition() {
    for l in enumerate_posets(5, PosetFilter::MeetSemilattice).unwrap() {
        let fs = or_functions(&l);
        for a in 0..l.len() {
            for b in 0..l.len() {
                if !l.leq(b, a) {
                    continue;
                }
                let e = e_ab(&l, a, b).unwrap();
                for f in &fs {
                    if f.apply(a) == b {
                        for x in 0..l.len() {
                            assert!(
                                l.leq(f.apply(x), e.apply(x)),
                                "e_ab pointwise largest"
                            );
                        }
                    }
                }
                for c in 0..l.len() {
                    if l.leq(c, b) {
                        let rhs = e_ab(&l, a, c).unwrap();
                        assert_eq!(e.compose(&e_ab(&l, b, c).unwrap()), rhs);
                    }
                }
            }
        }
    }
}

/// The non-idempotent function from the three-element Boolean lattice
/// that no peeling factorization can reach is rejected up front.
#[test]
fn boolean_counterexample_function_is_rejected() {
    let l = Poset::boolean_lattice(3);
    let f = OrFunction {
        images: vec![0, 0, 0, 1, 0, 4, 2, 7],
    };
    assert!(f.is_valid(&l));
    assert!(f.compose(&f) != f);
    assert!(factor_idempotent(&l, &f).is_err());
}

/// Fixed points of an OR function are closed under joins, images of
/// idempotents contain the minimals, consist of fixed points, and are
/// join-stable.
#[test]
fn fixed_point_and_image_closure() {
    for p in enumerate_posets(5, PosetFilter::All).unwrap() {
        let fs = or_functions(&p);
        for f in &fs {
            let fixed: u64 = (0..p.len())
                .filter(|&x| f.apply(x) == x)
                .fold(0, |m, x| m | 1 << x);
            let mut rest = fixed;
            while rest != 0 {
                let x = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let mut rest2 = fixed;
                while rest2 != 0 {
                    let y = rest2.trailing_zeros() as usize;
                    rest2 &= rest2 - 1;
                    let joins = p.joins((1 << x) | (1 << y));
                    assert_eq!(joins & fixed, joins, "joins of fixed points fixed");
                }
            }
            if f.compose(f) == *f {
                let im = f.image_mask();
                assert_eq!(im & p.minimals(), p.minimals());
                let mut rest = im;
                while rest != 0 {
                    let x = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    assert_eq!(f.apply(x), x, "image of an idempotent is fixed");
                }
                assert_eq!(p.join_closure(im), im, "image join-stable");
                // and f = sup over its image
                assert_eq!(sup_map(&p, im).unwrap(), *f);
            }
        }
    }
}

/// Removing the last element of the linear extension branches the
/// idempotents exactly: two children when the old image stays
/// join-closed, one otherwise.
#[test]
fn idempotent_branching_counts() {
    for p in enumerate_posets(6, PosetFilter::All).unwrap() {
        let n = p.len();
        let x = *p.linext().last().unwrap();
        if p.up_set(x) != 1 << x {
            continue; // only maximal elements can be removed this way
        }
        let q = p.restrict(p.full_mask() & !(1 << x));
        // relabelling: q keeps the label order of the remaining points
        let keep: Vec<usize> = (0..n).filter(|&i| i != x).collect();
        let to_p = |mask: u64| -> u64 {
            let mut out = 0u64;
            for (qi, &pi) in keep.iter().enumerate() {
                if mask & (1 << qi) != 0 {
                    out |= 1 << pi;
                }
            }
            out
        };
        let mut children = Vec::new();
        for iq in or_idempotent_images(&q) {
            let i = to_p(iq);
            // adding x is always valid; keeping the image needs stability
            children.push(i | 1 << x);
            if jtriv::regressive::is_valid_image_set(&p, i) {
                children.push(i);
            }
        }
        children.sort_unstable();
        let mut actual = or_idempotent_images(&p);
        actual.sort_unstable();
        assert_eq!(children, actual, "branching is a bijection");
    }
}

/// or_symbols agrees with the generic monoid symbols, the join-closed
/// image sets biject with the idempotents through sup, and the
/// lexicographic symbol comparison holds, over every poset on at most
/// six vertices.
#[test]
fn or_symbols_and_lex_order_sweep() {
    for p in enumerate_posets(6, PosetFilter::All).unwrap() {
        assert!(lex_symbol_order_check(&p));
        let (t, vals) = or_monoid(&p, 1 << 20).unwrap();
        let images = or_idempotent_images(&p);
        assert_eq!(images.len(), t.idempotents().len(), "idempotent count");
        for &im in &images {
            let f = sup_map(&p, im).unwrap();
            let id = jtriv::regressive::element_index(&vals, &f).unwrap();
            assert!(t.is_idempotent(id), "sup of a valid image is idempotent");
        }
        for x in t.elements() {
            let (l, r) = or_symbols(&p, &vals[x.index()]);
            let li = jtriv::regressive::element_index(&vals, &l).unwrap();
            let ri = jtriv::regressive::element_index(&vals, &r).unwrap();
            assert_eq!(t.lfix(x).unwrap(), li);
            assert_eq!(t.rfix(x).unwrap(), ri);
        }
    }
}

/// The unique minimal generating set of H_0(S_4) consists of the three
/// simple projections.
#[test]
fn hecke_s4_minimal_generators() {
    let h = hecke(CoxeterType::A, 3);
    let mut got = h.table.minimal_generators();
    got.sort_unstable();
    let mut want = h.table.generators().to_vec();
    want.sort_unstable();
    assert_eq!(got, want);
}

/// The interval-row embedding of extensive maps on a chain into the
/// unitriangular Boolean matrices is an injective morphism; for a
/// three-chain the images are the five published relation matrices.
#[test]
fn extensive_chain_embeds_into_boolean_matrices() {
    for n in 2..=5 {
        let p = Poset::reversed_chain(n);
        let fs = or_functions(&p);
        let emb = |f: &OrFunction| {
            // reversed-chain regressive = extensive on the natural chain
            extensive_to_matrix(&f.images.iter().map(|&v| v as usize).collect::<Vec<_>>())
        };
        let mut seen = std::collections::HashSet::new();
        for f in &fs {
            assert!(seen.insert(emb(f)), "injective");
            for g in &fs {
                assert_eq!(emb(&f.compose(g)), emb(f).mul(&emb(g)), "morphism");
            }
        }
    }
    // the five U_3 images
    let p = Poset::reversed_chain(3);
    let mut images: Vec<Vec<(usize, usize)>> = or_functions(&p)
        .iter()
        .map(|f| {
            extensive_to_matrix(&f.images.iter().map(|&v| v as usize).collect::<Vec<_>>())
                .edges()
        })
        .collect();
    images.sort();
    let mut expected = vec![
        vec![],
        vec![(0, 1)],
        vec![(1, 2)],
        vec![(0, 1), (1, 2)],
        vec![(0, 1), (0, 2), (1, 2)],
    ];
    expected.sort();
    assert_eq!(images, expected);
}

/// U_n facts: U_1 through U_3 idempotent counts along A006455, and the
/// published element count at n = 6 is covered by the acceptance suite.
#[test]
fn unitriangular_idempotent_counts() {
    let expected = [1usize, 2, 7, 40, 357];
    for n in 1..=5 {
        let (t, _) = unitriangular_boolean(n, 1 << 21).unwrap();
        assert_eq!(t.idempotents().len(), expected[n - 1], "U_{n}");
    }
}

/// U_3 idempotent lattice sanity through the generic machinery.
#[test]
fn u3_idempotent_lattice() {
    let (t, vals) = unitriangular_boolean(3, 1 << 21).unwrap();
    let lat = jtriv::algebra::idempotent_lattice(&t).unwrap();
    assert_eq!(lat.size(), 7);
    // meets respect relation containment downward: e <= f implies the
    // relation of e contains the relation of f
    for &e in &lat.idems {
        for &f in &lat.idems {
            if lat.leq(e, f) {
                let (me, mf) = (vals[e.index()], vals[f.index()]);
                for (i, j) in mf.edges() {
                    assert!(me.get(i, j), "J-smaller idempotent has more edges");
                }
            }
        }
    }
}

/// The demipotent checker on a couple of named lattices (beyond the
/// exhaustive small sweep in the acceptance suite).
#[test]
fn conjecture_on_named_lattices() {
    for l in [
        Poset::boolean_lattice(3),
        Poset::chain(7),
        Poset::from_covers(6, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5)]).unwrap(),
    ] {
        let report = conjecture_check(&l, 1 << 20).unwrap();
        assert!(report.passes());
        assert_eq!(report.max_power, Some(1));
        assert_eq!(report.diagram_count, or_idempotent_images(&l).len());
    }
}
