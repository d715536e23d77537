//! The decomposition engine: precondition checks, the recursion through
//! basic classes and 2-join blocks, and an exhaustive verification harness.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::basic_classes::{classify_basic, even_pair_for_class, BasicClass, BasicError, BasicOutcome};
use crate::berge::{
    find_antihole_of_length_at_least, find_prism, is_berge, is_even_pair, HoleWitness, PrismFilter, PrismWitness,
};
use crate::canon::{canonical_form, graphs_up_to_iso, CanonicalCode};
use crate::class_f::{in_class_f, ClassFVerdict, ClassFViolation};
use crate::decomposition::{
    build_block, check_nobsp_2join_shape, find_balanced_skew_partition, find_proper_2join, BlockKind, ShapeViolation,
    SkewPartitionWitness, TwoJoinSplit,
};
use crate::trigraph::{Adjacency, Trigraph};

/// Largest order accepted by [`verify_main_theorem`] for each scope.
pub const MAX_HARNESS_GRAPH_ORDER: usize = 9;
pub const MAX_HARNESS_PLANTED_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PreconditionReport {
    pub odd_hole_or_antihole: Option<HoleWitness>,
    pub odd_prism: Option<PrismWitness>,
    /// An antihole of length at least six for graphs, at least five for
    /// trigraphs with switchable pairs.
    pub long_antihole: Option<HoleWitness>,
    pub balanced_skew_partition: Option<SkewPartitionWitness>,
    pub class_f: Option<ClassFViolation>,
}

impl PreconditionReport {
    pub fn passes(&self) -> bool {
        self.odd_hole_or_antihole.is_none()
            && self.odd_prism.is_none()
            && self.long_antihole.is_none()
            && self.balanced_skew_partition.is_none()
            && self.class_f.is_none()
    }

    /// Names of the failed conditions.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.odd_hole_or_antihole.is_some() {
            out.push("not_berge");
        }
        if self.odd_prism.is_some() {
            out.push("odd_prism");
        }
        if self.long_antihole.is_some() {
            out.push("long_antihole");
        }
        if self.balanced_skew_partition.is_some() {
            out.push("balanced_skew_partition");
        }
        if self.class_f.is_some() {
            out.push("not_in_class_f");
        }
        out
    }
}

/// Shortest antihole length forbidden for `t`.
fn antihole_bound(t: &Trigraph) -> usize {
    if t.is_graph() {
        6
    } else {
        5
    }
}

/// Runs every hypothesis check and attaches witnesses. The class-F check
/// records only the switchable-component conditions when the Berge check
/// already failed.
pub fn check_preconditions(t: &Trigraph) -> PreconditionReport {
    let berge = is_berge(t);
    let class_f = match in_class_f(t) {
        ClassFVerdict::Yes { .. } => None,
        ClassFVerdict::No { violation: ClassFViolation::NotBerge { .. } } => None,
        ClassFVerdict::No { violation } => Some(violation),
    };
    PreconditionReport {
        odd_hole_or_antihole: berge.witness,
        odd_prism: find_prism(t, PrismFilter::Odd),
        long_antihole: find_antihole_of_length_at_least(t, antihole_bound(t)).expect("bound is at least five"),
        balanced_skew_partition: find_balanced_skew_partition(t),
        class_f,
    }
}

/// Like [`check_preconditions`] but stops at the first failure.
pub fn preconditions_hold(t: &Trigraph) -> bool {
    is_berge(t).is_berge
        && in_class_f(t).is_member()
        && find_antihole_of_length_at_least(t, antihole_bound(t)).expect("bound is at least five").is_none()
        && find_prism(t, PrismFilter::Odd).is_none()
        && find_balanced_skew_partition(t).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum TraceStep {
    Complete { n: usize },
    Basic { n: usize, class: BasicClass, pair: (usize, usize) },
    TwoJoin { n: usize, split: TwoJoinSplit, side: u8, kind: BlockKind, block_n: usize },
    Lifted { block_pair: (usize, usize), pair: (usize, usize) },
    MemoHit { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Outcome {
    Complete,
    EvenPair { u: usize, v: usize },
    PreconditionFailed { report: Box<PreconditionReport> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineResult {
    pub outcome: Outcome,
    pub trace: Vec<TraceStep>,
}

/// A step of the recursion that the theory says cannot happen.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("trigraph on {n} vertices is neither basic nor has a proper 2-join")]
    NoDecomposition { n: usize },
    #[error("2-join shape conditions violated: {0:?}")]
    JoinShape(Vec<ShapeViolation>),
    #[error("block fails a hypothesis: {0:?}")]
    BlockPrecondition(Vec<&'static str>),
    #[error("block on {n} vertices is complete")]
    BlockComplete { n: usize },
    #[error("block even pair meets the marker component")]
    PairMeetsMarkers { pair: (usize, usize) },
    #[error("lifted pair ({u}, {v}) is not an even pair of the parent")]
    LiftFailed { u: usize, v: usize },
    #[error("returned pair ({u}, {v}) fails the even-pair check")]
    Unsound { u: usize, v: usize },
    #[error("{0}")]
    Basic(#[from] BasicError),
    #[error("block construction failed: {0}")]
    Decomposition(String),
}

/// Engine with an optional memo keyed by canonical form.
#[derive(Debug, Default)]
pub struct Engine {
    memo: Option<HashMap<(CanonicalCode, bool), Option<(usize, usize)>>>,
}

impl Engine {
    pub fn new() -> Engine {
        Engine { memo: None }
    }

    pub fn with_memo() -> Engine {
        Engine { memo: Some(HashMap::new()) }
    }

    /// Complete, an even pair, or the failed preconditions.
    pub fn find_even_pair(&mut self, t: &Trigraph, need_disjoint: bool) -> Result<EngineResult, EngineError> {
        let report = check_preconditions(t);
        if !report.passes() {
            return Ok(EngineResult {
                outcome: Outcome::PreconditionFailed { report: Box::new(report) },
                trace: Vec::new(),
            });
        }
        self.find_even_pair_unchecked(t, need_disjoint)
    }

    /// As [`Engine::find_even_pair`], for callers that already checked the
    /// preconditions.
    pub fn find_even_pair_unchecked(&mut self, t: &Trigraph, need_disjoint: bool) -> Result<EngineResult, EngineError> {
        let mut trace = Vec::new();
        let pair = self.solve(t, need_disjoint, &mut trace)?;
        let outcome = match pair {
            None => Outcome::Complete,
            Some((u, v)) => {
                let report = is_even_pair(t, u, v).map_err(BasicError::from)?;
                if !report.is_even_pair() {
                    return Err(EngineError::Unsound { u, v });
                }
                Outcome::EvenPair { u, v }
            }
        };
        Ok(EngineResult { outcome, trace })
    }

    fn solve(
        &mut self,
        t: &Trigraph,
        need_disjoint: bool,
        trace: &mut Vec<TraceStep>,
    ) -> Result<Option<(usize, usize)>, EngineError> {
        if t.is_complete() {
            trace.push(TraceStep::Complete { n: t.n() });
            return Ok(None);
        }
        let form = self.memo.as_ref().map(|_| canonical_form(t));
        if let (Some(memo), Some(form)) = (&self.memo, &form) {
            if let Some(&hit) = memo.get(&(form.code.clone(), need_disjoint)) {
                trace.push(TraceStep::MemoHit { n: t.n() });
                let mut back = vec![0; t.n()];
                for (v, &pos) in form.labeling.iter().enumerate() {
                    back[pos] = v;
                }
                return Ok(hit.map(|(u, v)| {
                    let (a, b) = (back[u], back[v]);
                    (a.min(b), a.max(b))
                }));
            }
        }
        let pair = self.solve_fresh(t, need_disjoint, trace)?;
        if let (Some(memo), Some(form)) = (&mut self.memo, form) {
            let canon = pair.map(|(u, v)| (form.labeling[u], form.labeling[v]));
            memo.insert((form.code, need_disjoint), canon);
        }
        Ok(pair)
    }

    fn solve_fresh(
        &mut self,
        t: &Trigraph,
        need_disjoint: bool,
        trace: &mut Vec<TraceStep>,
    ) -> Result<Option<(usize, usize)>, EngineError> {
        let classification = classify_basic(t);
        if let (Some(class), Some(cert)) = (classification.class, &classification.certificate) {
            return match even_pair_for_class(t, class, cert, need_disjoint)? {
                BasicOutcome::Complete => {
                    trace.push(TraceStep::Complete { n: t.n() });
                    Ok(None)
                }
                BasicOutcome::EvenPair { u, v, class } => {
                    trace.push(TraceStep::Basic { n: t.n(), class, pair: (u, v) });
                    Ok(Some((u, v)))
                }
            };
        }
        let split = find_proper_2join(t).ok_or(EngineError::NoDecomposition { n: t.n() })?;
        let shape = check_nobsp_2join_shape(t, &split);
        if !shape.is_empty() {
            return Err(EngineError::JoinShape(shape));
        }
        // The switchable component lies on one side; decompose on the other.
        let d = t.switchable_vertices();
        let side = if d.is_disjoint(split.x1()) { 1 } else { 2 };
        let block = build_block(t, &split, side).map_err(|e| EngineError::Decomposition(e.to_string()))?;
        let report = check_preconditions(&block.trigraph);
        if !report.passes() {
            return Err(EngineError::BlockPrecondition(report.failures()));
        }
        trace.push(TraceStep::TwoJoin {
            n: t.n(),
            split: split.clone(),
            side,
            kind: block.kind,
            block_n: block.trigraph.n(),
        });
        let Some((bu, bv)) = self.solve(&block.trigraph, true, trace)? else {
            return Err(EngineError::BlockComplete { n: block.trigraph.n() });
        };
        let markers = block.marker_set();
        if markers.contains(bu) || markers.contains(bv) {
            return Err(EngineError::PairMeetsMarkers { pair: (bu, bv) });
        }
        let (u, v) = (block.parent_map[bu].expect("not a marker"), block.parent_map[bv].expect("not a marker"));
        let (u, v) = (u.min(v), u.max(v));
        if !is_even_pair(t, u, v).map_err(BasicError::from)?.is_even_pair() {
            return Err(EngineError::LiftFailed { u, v });
        }
        trace.push(TraceStep::Lifted { block_pair: (bu, bv), pair: (u, v) });
        Ok(Some((u, v)))
    }
}

/// One-shot engine run without memo.
pub fn find_even_pair_structured(t: &Trigraph) -> Result<EngineResult, EngineError> {
    Engine::new().find_even_pair(t, false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    Graphs,
    TrigraphsInF,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("order {n} exceeds the enumeration cap {cap} for this scope")]
    OrderTooLarge { n: usize, cap: usize },
}

/// Every class-F trigraph (up to isomorphism) obtained from a graph on at
/// most `n_max` vertices by making one pair, or two pairs sharing a vertex,
/// switchable.
pub fn planted_trigraphs(n_max: usize) -> Vec<Trigraph> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for n in 2..=n_max {
        let graphs = graphs_up_to_iso(n);
        let found: Vec<(CanonicalCode, Trigraph)> = graphs
            .par_iter()
            .flat_map_iter(|g| plantings(g).into_iter())
            .filter(|t| in_class_f(t).is_member())
            .map(|t| {
                let form = canonical_form(&t);
                let canon = form.relabel(&t);
                (form.code, canon)
            })
            .collect();
        let mut level: Vec<(CanonicalCode, Trigraph)> =
            found.into_iter().filter(|(code, _)| seen.insert(code.clone())).collect();
        level.sort_by(|a, b| a.0.cmp(&b.0));
        out.extend(level.into_iter().map(|(_, t)| t));
    }
    out
}

fn plantings(g: &Trigraph) -> Vec<Trigraph> {
    let n = g.n();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let mut t = g.clone();
            t.set(x, y, Adjacency::Semi);
            out.push(t);
        }
    }
    for v in 0..n {
        for x in 0..n {
            for y in x + 1..n {
                if x == v || y == v {
                    continue;
                }
                let mut t = g.clone();
                t.set(x, v, Adjacency::Semi);
                t.set(v, y, Adjacency::Semi);
                out.push(t);
            }
        }
    }
    out
}

/// The instance corpus for a scope: all orders `1..=n_max`.
pub fn corpus(n_max: usize, scope: Scope) -> Result<Vec<Trigraph>, HarnessError> {
    match scope {
        Scope::Graphs => {
            if n_max > MAX_HARNESS_GRAPH_ORDER {
                return Err(HarnessError::OrderTooLarge { n: n_max, cap: MAX_HARNESS_GRAPH_ORDER });
            }
            Ok(crate::canon::graphs_up_to_iso_by_order(n_max).into_iter().flatten().collect())
        }
        Scope::TrigraphsInF => {
            if n_max > MAX_HARNESS_PLANTED_ORDER {
                return Err(HarnessError::OrderTooLarge { n: n_max, cap: MAX_HARNESS_PLANTED_ORDER });
            }
            Ok(planted_trigraphs(n_max))
        }
    }
}

/// One line of the harness log.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub n: usize,
    pub trigraph: Vec<(usize, usize, i8)>,
    pub failed_preconditions: Vec<String>,
    /// Whether "no antihole of length at least five" and "no antihole of
    /// length at least six" agreed on this instance (they must for Berge
    /// inputs).
    pub antihole_bounds_agree: bool,
    pub outcome: Option<Outcome>,
    pub trace: Vec<TraceStep>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct HarnessSummary {
    pub instances: usize,
    pub filtered_in: usize,
    pub complete: usize,
    pub even_pair_found: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessRun {
    pub summary: HarnessSummary,
    pub records: Vec<InstanceRecord>,
}

impl HarnessRun {
    pub fn failed_records(&self) -> impl Iterator<Item = &InstanceRecord> {
        self.records.iter().filter(|r| r.error.is_some())
    }
}

fn entries_of(t: &Trigraph) -> Vec<(usize, usize, i8)> {
    t.entries().into_iter().map(|(u, v, a)| (u, v, a.value())).collect()
}

fn run_instance(engine: &mut Engine, t: &Trigraph) -> InstanceRecord {
    let report = check_preconditions(t);
    let at_five = find_antihole_of_length_at_least(t, 5).expect("valid bound").is_none();
    let at_six = find_antihole_of_length_at_least(t, 6).expect("valid bound").is_none();
    let berge = report.odd_hole_or_antihole.is_none();
    let mut record = InstanceRecord {
        n: t.n(),
        trigraph: entries_of(t),
        failed_preconditions: report.failures().into_iter().map(String::from).collect(),
        antihole_bounds_agree: !berge || at_five == at_six,
        outcome: None,
        trace: Vec::new(),
        error: None,
    };
    if !record.antihole_bounds_agree {
        record.error = Some("antihole bounds disagree on a Berge trigraph".into());
    }
    if !report.passes() {
        return record;
    }
    match engine.find_even_pair_unchecked(t, false) {
        Ok(result) => {
            record.outcome = Some(result.outcome);
            record.trace = result.trace;
        }
        Err(e) => record.error = Some(e.to_string()),
    }
    record
}

/// Runs the engine on every instance in parallel and tallies the outcomes.
pub fn run_harness(instances: &[Trigraph]) -> HarnessRun {
    let records: Vec<InstanceRecord> =
        instances.par_iter().map_init(Engine::with_memo, run_instance).collect();
    let mut summary = HarnessSummary { instances: records.len(), ..HarnessSummary::default() };
    for r in &records {
        if r.failed_preconditions.is_empty() {
            summary.filtered_in += 1;
        }
        match (&r.outcome, &r.error) {
            (_, Some(_)) => summary.failures += 1,
            (Some(Outcome::Complete), None) => summary.complete += 1,
            (Some(Outcome::EvenPair { .. }), None) => summary.even_pair_found += 1,
            _ => {}
        }
    }
    HarnessRun { summary, records }
}

/// Enumerates the corpus for `scope` up to `n_max` vertices and runs the
/// harness on it.
pub fn verify_main_theorem(n_max: usize, scope: Scope) -> Result<HarnessRun, HarnessError> {
    Ok(run_harness(&corpus(n_max, scope)?))
}
