mod common;

use evenpair_core::canon::{are_isomorphic, canonical_code};
use evenpair_core::class_f::in_class_f;
use evenpair_core::trigraph::named::*;
use evenpair_core::{Adjacency, Connectivity, Trigraph, TrigraphError, VertexSet};
use proptest::prelude::*;

fn arb_trigraph(max_n: usize, semi_weight: u32) -> impl Strategy<Value = Trigraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        let value = prop_oneof![4 => Just(-1i64), semi_weight => Just(0i64), 4 => Just(1i64)];
        proptest::collection::vec(value, pairs).prop_map(move |vals| {
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

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

#[test]
fn construction_and_rejection() {
    let t = Trigraph::from_entries(2, &[]).unwrap();
    assert_eq!(t, empty(2));
    let c5 = Trigraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    assert_eq!(c5, cycle(5));
    assert!(Trigraph::from_entries(3, &[(0, 3, 1)]).is_err());
    assert!(Trigraph::from_entries(3, &[(0, 1, 1), (1, 0, 1)]).is_err());
    assert!(Trigraph::from_entries(3, &[(0, 1, 2)]).is_err());
}

#[test]
fn complements() {
    assert!(are_isomorphic(&cycle(5).complement(), &cycle(5)));
    // Complement of C6: triangles {0,2,4} and {1,3,5}, matching 0-3, 1-4, 2-5.
    let co = cycle(6).complement();
    for (u, v) in [(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5), (0, 3), (1, 4), (2, 5)] {
        assert!(co.is_strongly_adjacent(u, v));
    }
    assert_eq!(co.edges().len(), 9);
    assert!(are_isomorphic(&co, &triangular_prism()));
}

#[test]
fn induced_subtrigraphs() {
    let p = cycle(6).induced(set(&[0, 1, 2])).unwrap();
    assert!(are_isomorphic(&p.trigraph, &path(3)));
    assert_eq!(p.vertex_map, vec![0, 1, 2]);
    let whole = cycle(6).induced(VertexSet::full(6)).unwrap();
    assert_eq!(whole.trigraph, cycle(6));
    let tri = triangular_prism();
    let co = cycle(6).complement();
    assert!(co.induced(set(&[0, 2, 4])).unwrap().trigraph.is_complete());
    assert!(tri.induced(VertexSet::EMPTY).unwrap().trigraph.n() == 0);
    assert!(tri.induced(set(&[9])).is_err());
}

#[test]
fn realizations() {
    let pair = Trigraph::from_entries(2, &[(0, 1, 0)]).unwrap();
    assert_eq!(pair.realization(&[(0, 1)]).unwrap(), complete(2));
    assert_eq!(pair.realization(&[]).unwrap(), empty(2));
    assert!(matches!(cycle(4).realization(&[(0, 1)]), Err(TrigraphError::NotSwitchable { .. })));
    let t = Trigraph::from_entries(3, &[(0, 1, 0), (1, 2, 1)]).unwrap();
    let off = Trigraph::from_entries(3, &[(0, 1, -1), (1, 2, 1)]).unwrap();
    assert!(off.is_semirealization_of(&t).unwrap());
    assert!(!t.is_semirealization_of(&path(3)).unwrap());
    assert!(t.is_semirealization_of(&t).unwrap());
    assert!(t.full_realization().is_semirealization_of(&t).unwrap());
    assert!(t.is_semirealization_of(&empty(2)).is_err());
}

#[test]
fn components_and_cliques() {
    assert_eq!(cycle(6).components(VertexSet::full(6), Connectivity::Connected), vec![VertexSet::full(6)]);
    let c4 = cycle(4);
    assert_eq!(c4.components(set(&[2, 3]), Connectivity::Anticonnected), vec![set(&[2]), set(&[3])]);
    let pair = Trigraph::from_entries(2, &[(0, 1, 0)]).unwrap();
    assert_eq!(pair.components(set(&[0, 1]), Connectivity::Anticonnected), vec![set(&[0, 1])]);
    assert!(complete(4).is_clique(VertexSet::full(4)));
    assert!(!c4.is_clique(VertexSet::full(4)));
    assert!(pair.is_clique(VertexSet::full(2)));
    let prism = triangular_prism();
    for g in [cycle(5), complete(4), prism] {
        assert_eq!(g.clique_number().unwrap(), common::graph_clique_number(&common::graph_of(&g)));
    }
    assert_eq!(pair.clique_number(), Err(TrigraphError::NotAGraph));
}

#[test]
fn class_f_membership() {
    assert!(in_class_f(&cycle(6)).is_member());
    assert!(cycle(6).switchable_components().is_empty());
    // Triangle with a switchable pair whose ends share a neighbour.
    let t = Trigraph::from_entries(3, &[(0, 1, 0), (0, 2, 1), (1, 2, 1)]).unwrap();
    assert!(!in_class_f(&t).is_member());
    // A switchable pair inside a 6-hole.
    let mut h = cycle(6);
    h.set(0, 1, Adjacency::Semi);
    assert!(in_class_f(&h).is_member());
    assert_eq!(h.switchable_components(), vec![set(&[0, 1])]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(t in arb_trigraph(10, 1)) {
        prop_assert_eq!(t.complement().complement(), t.clone());
        for u in 0..t.n() {
            for v in u + 1..t.n() {
                prop_assert_eq!(t.complement().theta(u, v).value(), -t.theta(u, v).value());
            }
        }
    }

    #[test]
    fn components_partition_the_set(t in arb_trigraph(10, 1), bits in any::<u32>()) {
        let s = VertexSet::from_bits(bits) & t.vertices();
        for mode in [Connectivity::Connected, Connectivity::Anticonnected] {
            let comps = t.components(s, mode);
            let mut union = VertexSet::EMPTY;
            for c in &comps {
                prop_assert!(union.is_disjoint(*c));
                union |= *c;
            }
            prop_assert_eq!(union, s);
            // No link between two different components.
            for (i, a) in comps.iter().enumerate() {
                for b in &comps[i + 1..] {
                    for x in *a {
                        for y in *b {
                            let linked = match mode {
                                Connectivity::Connected => common::adj(&t, x, y),
                                Connectivity::Anticonnected => common::anti(&t, x, y),
                            };
                            prop_assert!(!linked);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn realizations_are_semirealizations(t in arb_trigraph(8, 2), choice in any::<u32>()) {
        let semi = t.switchable_pairs();
        let on: Vec<(usize, usize)> = semi.iter().enumerate().filter(|(i, _)| choice >> (i % 32) & 1 == 1).map(|(_, &p)| p).collect();
        let r = t.realization(&on).unwrap();
        prop_assert!(r.is_graph());
        prop_assert!(r.is_semirealization_of(&t).unwrap());
        prop_assert!(t.full_realization().is_semirealization_of(&t).unwrap());
    }

    #[test]
    fn canonical_code_ignores_labelling(t in arb_trigraph(8, 1), seed in any::<u64>()) {
        let n = t.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let p = t.permute(&perm);
        prop_assert_eq!(canonical_code(&p), canonical_code(&t));
        prop_assert!(are_isomorphic(&p, &t));
    }

    #[test]
    fn serde_round_trip(t in arb_trigraph(8, 1)) {
        let json = serde_json::to_string(&t).unwrap();
        let back: Trigraph = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, t);
    }
}
