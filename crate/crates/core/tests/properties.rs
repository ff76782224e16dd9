//! Randomized invariants checked with proptest.

use klr_core::convex_order::{is_convex, lyndon_order, order_from_reduced_word, random_reduced_word, ConvexOrder};
use klr_core::klr::perm::{act_on_word, canonical_word, from_word, is_reduced};
use klr_core::klr::{KlrAlgebra, KlrElement, Monomial};
use klr_core::kostant::{kostant_partitions, kp_less, RootWords};
use klr_core::laurent::LaurentPoly;
use klr_core::pbw::DualPbw;
use klr_core::resolution::{resolution, verify_complex};
use klr_core::root_data::{build_root_system, CartanType, Family, RootSystem};
use klr_core::shuffle::{shuffle, ShuffleElement};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

const TYPES: [(Family, usize); 9] = [
    (Family::A, 2),
    (Family::A, 3),
    (Family::B, 2),
    (Family::B, 3),
    (Family::C, 3),
    (Family::D, 4),
    (Family::F, 4),
    (Family::G, 2),
    (Family::E, 6),
];

fn systems() -> &'static [RootSystem] {
    static CELL: OnceLock<Vec<RootSystem>> = OnceLock::new();
    CELL.get_or_init(|| TYPES.iter().map(|&(f, r)| build_root_system(CartanType::new(f, r).unwrap()).unwrap()).collect())
}

fn random_order(rs: &RootSystem, seed: u64) -> ConvexOrder {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order_from_reduced_word(rs, &random_reduced_word(rs, &mut rng)).unwrap()
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i32..=6, -5i64..=5), 0..5).prop_map(LaurentPoly::from_terms)
}

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(1..=rank as u8, 1..=max_len)
}

/// A system index paired with a word in its letters.
fn system_and_words(max_len: usize, count: usize) -> impl Strategy<Value = (usize, Vec<Vec<u8>>)> {
    (0..TYPES.len()).prop_flat_map(move |k| {
        let rank = TYPES[k].1;
        (Just(k), prop::collection::vec(word(rank, max_len), count))
    })
}

fn monomial(rank: usize, len: usize) -> impl Strategy<Value = Monomial> {
    (
        prop::collection::vec(1..=rank as u8, len),
        Just((0..len as u8).collect::<Vec<u8>>()).prop_shuffle(),
        prop::collection::vec(0u8..2, len),
    )
        .prop_map(|(word, w, x)| Monomial { x, w, word })
}

/// Three composable monomials `a`, `b`, `c` in a small simply-laced or
/// non-simply-laced algebra.
fn composable_triple() -> impl Strategy<Value = (usize, Monomial, Monomial, Monomial)> {
    (0..TYPES.len(), 2usize..=3).prop_flat_map(|(k, len)| {
        let rank = TYPES[k].1;
        (Just(k), monomial(rank, len), monomial(rank, len), monomial(rank, len)).prop_map(|(k, a, b, c)| {
            // Re-anchor so that the right idempotent of each factor matches
            // the left idempotent of the next.
            let b = Monomial { word: inverse_act(&b.w, &c.left_word()), ..b };
            let a = Monomial { word: inverse_act(&a.w, &b.left_word()), ..a };
            (k, a, b, c)
        })
    })
}

/// The word `j` with `act_on_word(w, j) == i`.
fn inverse_act(w: &[u8], i: &[u8]) -> Vec<u8> {
    w.iter().map(|&v| i[v as usize]).collect()
}

fn elem(m: &Monomial) -> KlrElement {
    KlrElement::monomial(m.clone(), 1)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn laurent_bar_is_an_involution_and_antimultiplicative(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn laurent_exact_division_inverts_multiplication(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        let p = &a * &b;
        prop_assert_eq!(p.div_exact(&b), Some(a));
    }

    #[test]
    fn shuffle_is_associative_and_twisted_commutative((k, ws) in system_and_words(3, 3)) {
        let rs = &systems()[k];
        let [a, b, c] = [0, 1, 2].map(|n| ShuffleElement::word(ws[n].clone()));
        prop_assert_eq!(shuffle(rs, &shuffle(rs, &a, &b), &c), shuffle(rs, &a, &shuffle(rs, &b, &c)));
        let twist = rs.dot(&rs.weight_of_word(&ws[0]), &rs.weight_of_word(&ws[1]));
        prop_assert_eq!(shuffle(rs, &a, &b).bar(), shuffle(rs, &b, &a).shift(twist));
    }

    #[test]
    fn random_orders_are_convex_with_bar_invariant_root_vectors(k in 0..TYPES.len(), seed in any::<u64>()) {
        let rs = &systems()[k];
        let o = random_order(rs, seed);
        prop_assert!(is_convex(rs, o.roots()));
        let again = order_from_reduced_word(rs, &o.reduced_word(rs)).unwrap();
        prop_assert_eq!(again.roots(), o.roots());
        let pbw = DualPbw::new(rs, &o).unwrap();
        for &a in o.roots() {
            let ch = pbw.ch_dual_root(a);
            prop_assert!(!ch.is_zero());
            prop_assert!(ch.is_bar_invariant(), "root {}", rs.root_label(a));
        }
    }

    #[test]
    fn klr_products_are_associative_graded_and_transpose_reverses((k, a, b, c) in composable_triple()) {
        let rs = &systems()[k];
        let h = KlrAlgebra::new(rs);
        let (ea, eb, ec) = (elem(&a), elem(&b), elem(&c));
        let ab = h.multiply(&ea, &eb).unwrap();
        let bc = h.multiply(&eb, &ec).unwrap();
        prop_assert_eq!(h.multiply(&ab, &ec).unwrap(), h.multiply(&ea, &bc).unwrap());
        let expected = a.degree(rs) + b.degree(rs);
        prop_assert!(ab.degrees(rs).iter().all(|&d| d == expected));
        let lhs = h.transpose(&ab).unwrap();
        let rhs = h.multiply(&h.transpose(&eb).unwrap(), &h.transpose(&ea).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_words_are_reduced_and_recover_the_permutation(
        w in (2usize..=6).prop_flat_map(|n| Just((0..n as u8).collect::<Vec<u8>>()).prop_shuffle())
    ) {
        let n = w.len();
        let cw = canonical_word(&w);
        prop_assert!(is_reduced(n, &cw));
        prop_assert_eq!(from_word(n, &cw), w.clone());
        let letters: Vec<u8> = (1..=n as u8).collect();
        prop_assert_eq!(act_on_word(&from_word(n, &cw), &letters), act_on_word(&w, &letters));
    }

    #[test]
    fn kp_order_is_a_strict_partial_order(k in 0..TYPES.len() - 1, seed in any::<u64>(), h in 2i32..=4) {
        let rs = &systems()[k];
        let o = random_order(rs, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.rotate_left(7));
        let weight = {
            use rand::Rng;
            let mut v = vec![0; rs.rank()];
            for _ in 0..h {
                v[rng.gen_range(0..rs.rank())] += 1;
            }
            v
        };
        let kps = kostant_partitions(rs, &o, &weight);
        let less = |x: usize, y: usize| kp_less(rs, &o, &kps[x], &kps[y]).unwrap();
        let n = kps.len();
        for x in 0..n {
            prop_assert!(!less(x, x));
            for y in 0..n {
                if less(x, y) {
                    prop_assert!(!less(y, x));
                    for z in 0..n {
                        if less(y, z) {
                            prop_assert!(less(x, z));
                        }
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn resolutions_square_to_zero_for_random_orders(k in 0usize..2, seed in any::<u64>()) {
        let (f, r) = [(Family::A, 3), (Family::D, 4)][k];
        let rs = build_root_system(CartanType::new(f, r).unwrap()).unwrap();
        let o = if seed % 5 == 0 { lyndon_order(&rs).unwrap() } else { random_order(&rs, seed) };
        let words = RootWords::new(&rs, &o).unwrap();
        let h = KlrAlgebra::new(&rs);
        let pbw = DualPbw::new(&rs, &o).unwrap();
        for &a in o.roots() {
            if !rs.is_multiplicity_free(a) || rs.height(a) < 2 {
                continue;
            }
            let c = resolution(&rs, &words, a).unwrap();
            prop_assert!(verify_complex(&h, &c));
            let lam = klr_core::kostant::KostantPartition::new(&o, vec![a]);
            prop_assert_eq!(c.euler_character(&rs, 8), pbw.dim_standard(&lam, 8));
        }
    }
}
