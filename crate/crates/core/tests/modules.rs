//! Exhaustive checks on proper standard modules in small simply-laced cases:
//! the defining relations act correctly, word-space dimensions match the
//! proper standard character, and the rank of the contravariant form on each
//! slice is the dual canonical coefficient.

use klr_core::acceptance::weights_up_to;
use klr_core::canonical::CanonicalTable;
use klr_core::convex_order::{lyndon_order, order_from_reduced_word};
use klr_core::klr::relations::relations_at;
use klr_core::klr::{rank_over, KlrAlgebra, StandardModule, StandardModuleElement};
use klr_core::kostant::kostant_partitions;
use klr_core::pbw::{words_of_weight, DualPbw};
use klr_core::root_data::{build_root_system, CartanType, Family, RootSystem};
use std::collections::BTreeMap;

fn system(f: Family, r: usize) -> RootSystem {
    build_root_system(CartanType::new(f, r).unwrap()).unwrap()
}

fn check_relations(rs: &RootSystem, order_word: Option<&[u8]>, max_height: i32) {
    let o = match order_word {
        Some(w) => order_from_reduced_word(rs, w).unwrap(),
        None => lyndon_order(rs).unwrap(),
    };
    let pbw = DualPbw::new(rs, &o).unwrap();
    let h = KlrAlgebra::new(rs);
    let mut checked = 0usize;
    for weight in weights_up_to(rs.rank(), max_height) {
        let words = words_of_weight(&weight);
        for lam in kostant_partitions(rs, &o, &weight) {
            let m = StandardModule::new(&h, &pbw, &lam).unwrap();
            for i in &words {
                let rels = relations_at(&h, i, &words);
                for b in m.word_basis(i) {
                    let v = StandardModuleElement::basis(b.clone());
                    for rel in &rels {
                        let eval = |side: &[(i64, Vec<klr_core::klr::Generator>)]| {
                            let mut acc = StandardModuleElement::zero();
                            for (c, g) in side {
                                acc.add_scaled(&m.act_all(g, &v).unwrap(), *c);
                            }
                            acc
                        };
                        assert_eq!(eval(&rel.lhs), eval(&rel.rhs), "{} on {b:?} in {}", rel.name, lam.label(rs));
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 100, "only {checked} relation checks");
}

#[test]
fn relations_act_correctly_in_type_a() {
    check_relations(&system(Family::A, 2), None, 3);
    check_relations(&system(Family::A, 3), None, 3);
    check_relations(&system(Family::A, 3), Some(&[3, 2, 1, 3, 2, 3]), 3);
}

#[test]
fn relations_act_correctly_in_type_d() {
    check_relations(&system(Family::D, 4), None, 3);
}

/// Per word, the graded dimension of the word space.
fn word_dims(m: &StandardModule, words: &[Vec<u8>]) -> BTreeMap<Vec<u8>, BTreeMap<i32, i64>> {
    let mut out = BTreeMap::new();
    for i in words {
        let mut by_degree = BTreeMap::new();
        for b in m.word_basis(i) {
            *by_degree.entry(m.degree(&b)).or_insert(0) += 1;
        }
        if !by_degree.is_empty() {
            out.insert(i.clone(), by_degree);
        }
    }
    out
}

fn check_characters_and_ranks(rs: &RootSystem, max_height: i32) {
    let o = lyndon_order(rs).unwrap();
    let pbw = DualPbw::new(rs, &o).unwrap();
    let h = KlrAlgebra::new(rs);
    let mut table = CanonicalTable::new(&pbw);
    let mut slices = 0usize;
    for weight in weights_up_to(rs.rank(), max_height) {
        let words = words_of_weight(&weight);
        for lam in kostant_partitions(rs, &o, &weight) {
            let m = StandardModule::new(&h, &pbw, &lam).unwrap();
            let ch = pbw.ch_proper_standard(&lam);
            let expected: BTreeMap<Vec<u8>, BTreeMap<i32, i64>> =
                ch.iter().map(|(w, c)| (w.clone(), c.terms().collect())).collect();
            assert_eq!(word_dims(&m, &words), expected, "{}", lam.label(rs));
            let simple = table.get(&lam).unwrap();
            for (i, dims) in &expected {
                for &deg in dims.keys() {
                    let g = m.gram_matrix(i, deg).unwrap();
                    let rank = rank_over(&g, 0) as i64;
                    assert_eq!(rank, simple.coeff(i).coeff(deg), "{} word {i:?} degree {deg}", lam.label(rs));
                    slices += 1;
                }
            }
        }
    }
    assert!(slices > 50, "only {slices} slices");
}

#[test]
fn slice_ranks_give_simple_characters_in_a3() {
    check_characters_and_ranks(&system(Family::A, 3), 4);
}

#[test]
fn slice_ranks_give_simple_characters_in_d4() {
    check_characters_and_ranks(&system(Family::D, 4), 4);
}

#[test]
fn degree_zero_gram_matrices_are_symmetric() {
    let rs = system(Family::A, 3);
    let o = lyndon_order(&rs).unwrap();
    let pbw = DualPbw::new(&rs, &o).unwrap();
    let h = KlrAlgebra::new(&rs);
    for lam in kostant_partitions(&rs, &o, &[1, 2, 1]) {
        let m = StandardModule::new(&h, &pbw, &lam).unwrap();
        for i in words_of_weight(&[1, 2, 1]) {
            let g = m.gram_matrix(&i, 0).unwrap();
            for (r, row) in g.iter().enumerate() {
                for (c, &x) in row.iter().enumerate() {
                    assert_eq!(x, g[c][r]);
                }
            }
        }
    }
}
