use klr_core::canonical::CanonicalTable;
use klr_core::convex_order::lyndon_order;
use klr_core::golden;
use klr_core::kostant::KostantPartition;
use klr_core::pbw::DualPbw;
use klr_core::root_data::{build_root_system, CartanType, Family};
use klr_core::shuffle::{parse_word, ShuffleElement};

#[test]
fn g2_table_matches_reference() {
    let g2 = build_root_system(CartanType::new(Family::G, 2).unwrap()).unwrap();
    let o = lyndon_order(&g2).unwrap();
    let pbw = DualPbw::new(&g2, &o).unwrap();
    let mut table = CanonicalTable::new(&pbw);
    for (parts, terms) in golden::g2_canonical_table() {
        let ids = parts.iter().map(|p| g2.root_id(p).unwrap()).collect();
        let lam = KostantPartition::new(&o, ids);
        let mut expect = ShuffleElement::zero();
        for (w, c) in terms {
            expect.add_term(parse_word(w).unwrap(), &c);
        }
        assert_eq!(table.get(&lam).unwrap(), expect, "{}", lam.label(&g2));
    }
}
