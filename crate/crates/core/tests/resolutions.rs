//! Resolutions of root modules: the differential squares to zero and the
//! Euler characteristic matches the graded dimension of the standard module.

use klr_core::convex_order::{lyndon_order, order_from_reduced_word, random_reduced_word, ConvexOrder};
use klr_core::klr::KlrAlgebra;
use klr_core::kostant::{KostantPartition, RootWords};
use klr_core::pbw::DualPbw;
use klr_core::resolution::{resolution, verify_complex};
use klr_core::root_data::{build_root_system, CartanType, Family, RootSystem};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check_all_roots(rs: &RootSystem, o: &ConvexOrder) -> usize {
    let words = RootWords::new(rs, o).unwrap();
    let pbw = DualPbw::new(rs, o).unwrap();
    let h = KlrAlgebra::new(rs);
    let mut n = 0;
    for a in 0..rs.num_positive() {
        if !rs.is_multiplicity_free(a) {
            continue;
        }
        let c = resolution(rs, &words, a).unwrap();
        assert!(verify_complex(&h, &c), "{}", rs.root_label(a));
        let lam = KostantPartition::new(o, vec![a]);
        assert_eq!(c.euler_character(rs, 10), pbw.dim_standard(&lam, 10), "{}", rs.root_label(a));
        n += 1;
    }
    n
}

#[test]
fn lyndon_order_resolutions_in_simply_laced_types() {
    for (f, r, roots) in [(Family::A, 4, 10), (Family::D, 4, 11), (Family::D, 5, 17), (Family::E, 6, 25)] {
        let rs = build_root_system(CartanType::new(f, r).unwrap()).unwrap();
        let o = lyndon_order(&rs).unwrap();
        assert_eq!(check_all_roots(&rs, &o), roots, "{f:?}{r}");
    }
}

#[test]
fn random_order_resolutions() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for (f, r) in [(Family::A, 4), (Family::D, 4), (Family::D, 5)] {
        let rs = build_root_system(CartanType::new(f, r).unwrap()).unwrap();
        for _ in 0..10 {
            let o = order_from_reduced_word(&rs, &random_reduced_word(&rs, &mut rng)).unwrap();
            check_all_roots(&rs, &o);
        }
    }
}

#[test]
fn roots_with_multiplicity_are_rejected() {
    let rs = build_root_system(CartanType::new(Family::D, 4).unwrap()).unwrap();
    let o = lyndon_order(&rs).unwrap();
    let words = RootWords::new(&rs, &o).unwrap();
    let err = resolution(&rs, &words, rs.highest_root()).unwrap_err();
    assert_eq!(err.kind(), "unsupported");
}
