mod common;

use evenpair_core::canon::{are_isomorphic, graphs_up_to_iso_by_order};
use evenpair_core::class_f::in_class_f;
use evenpair_core::decomposition::*;
use evenpair_core::trigraph::named::*;
use evenpair_core::{Adjacency, Parity, Trigraph, VertexSet};
use proptest::prelude::*;

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

fn c8_split() -> TwoJoinSplit {
    two_join_for_partition(&cycle(8), set(&[0, 1, 2, 3])).unwrap()
}

fn c10_split() -> TwoJoinSplit {
    two_join_for_partition(&cycle(10), set(&[0, 1, 2, 3, 4])).unwrap()
}

#[test]
fn skew_partition_of_p4() {
    let w = skew_partition(&path(4), set(&[0, 3])).unwrap();
    assert_eq!(w.b, set(&[1, 2]));
    assert!(w.balanced);
    assert!(w.is_valid_in(&path(4)));
    let found = find_balanced_skew_partition(&path(4)).unwrap();
    assert!(found.is_valid_in(&path(4)));
    assert!(common::balanced_skew_partition(&path(4)).is_some());
    assert!(find_star_cutset(&path(4)).is_some());
}

#[test]
fn no_skew_partition() {
    assert!(skew_partitions(&cycle(6)).next().is_none());
    assert!(!has_balanced_skew_partition(&cycle(6)));
    assert!(skew_partitions(&complete(4)).next().is_none());
    // Total on non-Berge input.
    let _ = has_balanced_skew_partition(&cycle(5));
}

#[test]
fn two_joins_of_cycles() {
    let s = c8_split();
    assert_eq!((s.a1, s.b1, s.c1), (set(&[0]), set(&[3]), set(&[1, 2])));
    assert_eq!((s.a2, s.b2, s.c2), (set(&[7]), set(&[4]), set(&[5, 6])));
    assert_eq!(s.parity, Some(Parity::Odd));
    assert!(s.proper && s.is_valid_in(&cycle(8)));
    assert_eq!(join_parity(&cycle(8), &s), Ok(Parity::Odd));
    let s = c10_split();
    assert!(s.proper);
    assert_eq!(join_parity(&cycle(10), &s), Ok(Parity::Even));
    assert!(two_joins(&cycle(6)).is_empty());
    assert!(find_2join(&complete(4)).is_none());
    assert!(is_fragment(&cycle(8), set(&[0, 1, 2, 3])));
    assert!(!is_fragment(&cycle(8), set(&[0, 1])));
    assert!((0u32..64).all(|m| !is_fragment(&cycle(6), VertexSet::from_bits(m))));
    let co = find_complement_2join(&cycle(8).complement()).unwrap();
    assert!(co.is_valid_in(&cycle(8)));
    assert!(check_nobsp_2join_shape(&cycle(8), &c8_split()).is_empty());
    assert!(check_nobsp_2join_shape(&cycle(10), &c10_split()).is_empty());
}

#[test]
fn small_marker_block_of_c8() {
    let b = build_block(&cycle(8), &c8_split(), 1).unwrap();
    assert_eq!(b.kind, BlockKind::Small);
    assert_eq!(b.trigraph.n(), 6);
    assert_eq!(b.markers, vec![4, 5]);
    assert_eq!(b.parent_map, vec![Some(0), Some(1), Some(2), Some(3), None, None]);
    let expected = Trigraph::from_entries(6, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (4, 0, 1), (5, 3, 1), (4, 5, 0)]).unwrap();
    assert_eq!(b.trigraph, expected);
    assert_eq!(b.trigraph.switchable_components(), vec![set(&[4, 5])]);
    assert!(in_class_f(&b.trigraph).is_member());
    assert!(common::is_berge(&b.trigraph));
    let other = build_block(&cycle(8), &c8_split(), 2).unwrap();
    assert!(are_isomorphic(&other.trigraph, &b.trigraph));
    assert_eq!(build_block(&cycle(8), &c8_split(), 3).unwrap_err(), DecompositionError::BadSide { side: 3 });
}

#[test]
fn light_marker_block_of_c10() {
    let b = build_block(&cycle(10), &c10_split(), 1).unwrap();
    assert_eq!(b.kind, BlockKind::Light);
    assert_eq!(b.trigraph.n(), 8);
    let [a, c, m] = [b.markers[0], b.markers[1], b.markers[2]];
    assert_eq!(b.trigraph.theta(a, c), Adjacency::Semi);
    assert_eq!(b.trigraph.theta(c, m), Adjacency::Semi);
    assert_eq!(b.trigraph.switchable_components(), vec![set(&[a, c, m])]);
    assert!(are_isomorphic(&b.trigraph.full_realization(), &cycle(8)));
}

#[test]
fn balanced_skew_partitions_match_reference() {
    for g in graphs_up_to_iso_by_order(7).into_iter().flatten() {
        let lib = find_balanced_skew_partition(&g);
        assert_eq!(lib.is_some(), common::balanced_skew_partition(&g).is_some(), "{g:?}");
        if let Some(w) = lib {
            assert!(w.is_valid_in(&g));
        }
    }
}

#[test]
fn star_cutsets_are_balanced_in_berge_graphs() {
    for g in graphs_up_to_iso_by_order(7).into_iter().flatten() {
        if let Some(w) = find_star_cutset(&g) {
            assert!(w.is_valid_in(&g));
            assert!(w.star.is_some());
            if common::is_berge(&g) {
                assert!(has_balanced_skew_partition(&g), "{g:?}");
            }
        }
    }
}

fn arb_trigraph(max_n: usize) -> impl Strategy<Value = Trigraph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(prop_oneof![5 => Just(-1i64), 1 => Just(0i64), 4 => Just(1i64)], n * (n - 1) / 2)
            .prop_map(move |vals| {
                let mut entries = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        entries.push((u, v, vals[k]));
                        k += 1;
                    }
                }
                Trigraph::from_entries(n, &entries).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn trigraph_skew_partitions_match_reference(t in arb_trigraph(7)) {
        prop_assert_eq!(has_balanced_skew_partition(&t), common::balanced_skew_partition(&t).is_some());
        for w in skew_partitions(&t) {
            prop_assert!(w.is_valid_in(&t));
        }
    }

    #[test]
    fn two_join_splits_validate(t in arb_trigraph(9)) {
        for s in two_joins(&t) {
            prop_assert!(s.is_valid_in(&t));
            prop_assert!(s.swapped().is_valid_in(&t));
        }
    }
}
