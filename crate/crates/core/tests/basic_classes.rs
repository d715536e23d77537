mod common;

use evenpair_core::basic_classes::*;
use evenpair_core::canon::{are_isomorphic, graphs_up_to_iso};
use evenpair_core::engine::planted_trigraphs;
use evenpair_core::Adjacency;
use evenpair_core::class_f::in_class_f;
use evenpair_core::trigraph::named::*;
use evenpair_core::{Trigraph, VertexSet};
use proptest::prelude::*;

fn root(n: usize, edges: &[(usize, usize)]) -> LineRoot {
    LineRoot::new(RootGraph::from_edges(n, edges).unwrap()).unwrap()
}

fn k23() -> RootGraph {
    RootGraph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
}

#[test]
fn classification_order() {
    let c = classify_basic(&cycle(6));
    assert_eq!(c.class, Some(BasicClass::Bipartite));
    assert!(certificate_is_valid(&cycle(6), BasicClass::Bipartite, c.certificate.as_ref().unwrap()));

    let prism = triangular_prism();
    assert_eq!(classify_basic(&prism).class, Some(BasicClass::ComplementBipartite));
    let cert = classify_as(&prism, BasicClass::Line).unwrap();
    let BasicCertificate::Root { root } = &cert else { panic!("expected a root") };
    assert_eq!(root.graph.n(), 5);
    assert_eq!(root.graph.edges().len(), 6);
    assert!(certificate_is_valid(&prism, BasicClass::Line, &cert));
    assert!(are_isomorphic(&line_graph(&k23()).unwrap(), &prism));

    assert!(!classify_basic(&cycle(5)).is_basic());
    assert!(!certificate_is_valid(&cycle(6), BasicClass::Line, c.certificate.as_ref().unwrap()));
}

#[test]
fn good_pairs_in_small_roots() {
    for r in [root(4, &[(0, 1), (1, 2), (2, 3)]), root(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])] {
        let lg = r.line_graph();
        let w = find_good_pair(&r, 0).unwrap();
        assert!(is_good_pair(&r, w.edges.0, w.edges.1));
        assert_eq!(w.line_vertices, (r.vertex_of(w.edges.0).unwrap(), r.vertex_of(w.edges.1).unwrap()));
        let (u, v) = w.line_vertices;
        assert!(common::is_even_pair(&lg, u, v));
    }
    // The line graph of a star is complete.
    assert!(find_good_pair(&root(4, &[(0, 1), (0, 2), (0, 3)]), 0).is_none());
}

#[test]
fn complement_classes_pick_verified_pairs() {
    let pair = even_pair_co_classes(&cycle(4).complement(), BasicClass::ComplementBipartite, false).unwrap();
    let (u, v) = pair.unwrap();
    assert!(common::is_even_pair(&cycle(4).complement(), u, v));
    let p4 = path(4);
    if let Some((u, v)) = even_pair_co_classes(&p4, BasicClass::ComplementBipartite, false).unwrap() {
        assert!(common::is_even_pair(&p4, u, v));
    }
    assert_eq!(even_pair_basic(&complete(5), false), Ok(BasicOutcome::Complete));
}

#[test]
fn root_properties() {
    let r = verify_root_properties(&k23());
    assert!(r.bipartite);
    assert!(r.even_theta.is_some());
    assert!(!r.is_clean());
    let c8: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
    assert!(verify_root_properties(&RootGraph::from_edges(8, &c8).unwrap()).is_clean());
    let tree = RootGraph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
    assert!(verify_root_properties(&tree).is_clean());
    let k4 = RootGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert!(has_k4_minor(&k4));
    assert!(!verify_root_properties(&k4).bipartite);
}

#[test]
fn favourability() {
    assert_eq!(favorability(&cycle(4)), Ok(Some(FavorabilityFailure::FewerThanFiveVertices)));
    assert_eq!(is_favorable(&cycle(6)), Ok(true));
    assert_eq!(favorability(&complete(5)), Ok(Some(FavorabilityFailure::NoStrongAntiedgeAvoidingComponent)));
    let bad = Trigraph::from_entries(3, &[(0, 1, 0), (0, 2, 1), (1, 2, 1)]).unwrap();
    assert!(matches!(favorability(&bad), Err(BasicError::NotInClassF(_))));
}

#[test]
fn basic_pairs_are_even_pairs() {
    for g in graphs_up_to_iso(6) {
        let Ok(outcome) = even_pair_basic(&g, false) else { continue };
        match outcome {
            BasicOutcome::Complete => assert!(g.is_complete()),
            BasicOutcome::EvenPair { u, v, .. } => assert!(common::is_even_pair(&g, u, v), "{g:?}"),
        }
    }
}

#[test]
fn doubled_c4() {
    let (x, y) = (VertexSet::from_iter([0, 1]), VertexSet::from_iter([2, 3]));
    let cert = BasicCertificate::GoodPartition { x, y };
    assert!(certificate_is_valid(&cycle(4), BasicClass::Doubled, &cert));
    let (u, v) = even_pair_doubled(&cycle(4), (x, y), false).unwrap().unwrap();
    assert!(common::is_even_pair(&cycle(4), u, v));
    assert!(classify_as(&cycle(4), BasicClass::Doubled).is_some());
}

fn is_basic(t: &Trigraph) -> bool {
    classify_basic(t).is_basic()
}

/// Semirealizations: every switchable pair kept, turned on or turned off.
fn semirealizations(t: &Trigraph) -> Vec<Trigraph> {
    let mut out = vec![t.clone()];
    for (u, v) in t.switchable_pairs() {
        out = out
            .into_iter()
            .flat_map(|r| {
                [Adjacency::Strong, Adjacency::Semi, Adjacency::StrongAnti].map(|a| {
                    let mut r = r.clone();
                    r.set(u, v, a);
                    r
                })
            })
            .collect();
    }
    out
}

#[test]
fn basic_classes_are_hereditary() {
    // The graph corpus holds every smaller graph, so deleting one vertex at a
    // time covers all induced subgraphs.
    for g in (1..=6).flat_map(graphs_up_to_iso) {
        if !is_basic(&g) {
            continue;
        }
        assert!(is_basic(&g.complement()), "{g:?}");
        for v in g.vertices() {
            assert!(is_basic(&g.delete(VertexSet::singleton(v)).trigraph), "{g:?} - {v}");
        }
    }
    let mut checked = 0;
    for t in planted_trigraphs(6) {
        if !is_basic(&t) {
            continue;
        }
        checked += 1;
        assert!(is_basic(&t.complement()), "{t:?}");
        for bits in 0..1u32 << t.n() {
            assert!(is_basic(&t.induced(VertexSet::from_bits(bits)).unwrap().trigraph), "{t:?} on {bits:b}");
        }
        for r in semirealizations(&t) {
            assert!(is_basic(&r), "{r:?}");
        }
    }
    assert!(checked > 100, "only {checked} basic planted trigraphs");
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
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn certificates_validate(t in arb_trigraph(8)) {
        for class in BasicClass::ALL {
            if let Some(cert) = classify_as(&t, class) {
                prop_assert!(certificate_is_valid(&t, class, &cert));
            }
        }
    }

    #[test]
    fn bipartite_certificates_are_stable_sets(t in arb_trigraph(8)) {
        if let Some(BasicCertificate::Bipartition { a, b }) = classify_as(&t, BasicClass::Bipartite) {
            prop_assert_eq!(a | b, t.vertices());
            for side in [a, b] {
                for u in side {
                    prop_assert!((side - VertexSet::full(u + 1)).iter().all(|v| t.theta(u, v).value() == -1));
                }
            }
        }
    }

    #[test]
    fn basic_pairs_in_f_are_even(t in arb_trigraph(8)) {
        if in_class_f(&t).is_member() {
            if let Ok(BasicOutcome::EvenPair { u, v, .. }) = even_pair_basic(&t, false) {
                prop_assert!(common::is_even_pair(&t, u, v));
            }
        }
    }
}
