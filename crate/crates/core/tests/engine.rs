mod common;

use evenpair_core::canon::graphs_up_to_iso;
use evenpair_core::engine::*;
use evenpair_core::trigraph::named::*;

#[test]
fn c6_has_pair_0_2() {
    let r = Engine::new().find_even_pair(&cycle(6), false).unwrap();
    assert_eq!(r.outcome, Outcome::EvenPair { u: 0, v: 2 });
    assert!(!r.trace.is_empty());
}

#[test]
fn complete_graph() {
    assert_eq!(find_even_pair_structured(&complete(5)).unwrap().outcome, Outcome::Complete);
}

#[test]
fn c8_pair_is_even() {
    let r = Engine::with_memo().find_even_pair(&cycle(8), false).unwrap();
    let Outcome::EvenPair { u, v } = r.outcome else { panic!("expected a pair, got {:?}", r.outcome) };
    assert!(common::is_even_pair(&cycle(8), u, v));
}

#[test]
fn preconditions_reject() {
    let p4 = check_preconditions(&path(4));
    assert!(!p4.passes());
    assert!(p4.failures().contains(&"balanced_skew_partition"));
    let prism = check_preconditions(&triangular_prism());
    assert!(prism.odd_prism.is_some());
    assert!(matches!(
        find_even_pair_structured(&triangular_prism()).unwrap().outcome,
        Outcome::PreconditionFailed { .. }
    ));
    assert!(!check_preconditions(&cycle(5)).passes());
}

#[test]
fn memo_matches_plain_engine() {
    let mut memo = Engine::with_memo();
    for g in graphs_up_to_iso(6) {
        let a = Engine::new().find_even_pair(&g, false).unwrap().outcome;
        let b = memo.find_even_pair(&g, false).unwrap().outcome;
        assert_eq!(std::mem::discriminant(&a), std::mem::discriminant(&b));
    }
}

#[test]
fn harness_runs_clean() {
    for (n, scope) in [(5, Scope::Graphs), (7, Scope::Graphs), (6, Scope::TrigraphsInF)] {
        let run = verify_main_theorem(n, scope).unwrap();
        assert_eq!(run.summary.failures, 0, "{scope:?} up to {n}");
        assert!(run.summary.instances > 0);
    }
    assert!(matches!(verify_main_theorem(20, Scope::Graphs), Err(HarnessError::OrderTooLarge { .. })));
}
