//! Exhaustive detectors: odd holes, antiholes, prisms, Berge-ness and even
//! pairs. Every positive answer carries a witness that can be re-checked
//! independently of the search that produced it.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::paths::{walk_paths, Parity, PathWitness};
use crate::trigraph::{Trigraph, TrigraphError};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BergeError {
    #[error(transparent)]
    Trigraph(#[from] TrigraphError),
    #[error("antihole threshold {k} is below five")]
    ThresholdTooSmall { k: usize },
    #[error(
        "even-pair methods disagree on ({u}, {v}): path enumeration says {by_paths}, gadget says {by_gadget}"
    )]
    MethodDisagreement { u: usize, v: usize, by_paths: bool, by_gadget: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HoleKind {
    Hole,
    Antihole,
}

/// A hole or antihole `h1 - .. - hk - h1` with `k >= 5`.
///
/// Witnesses produced by the searches start at their smallest vertex and
/// are oriented so that `h2 < hk`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HoleWitness {
    pub cycle: Vec<usize>,
    pub kind: HoleKind,
}

impl HoleWitness {
    pub fn length(&self) -> usize {
        self.cycle.len()
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.length())
    }

    pub fn is_valid_in(&self, t: &Trigraph) -> bool {
        let k = self.cycle.len();
        if k < 5 || self.cycle.iter().any(|&v| v >= t.n()) {
            return false;
        }
        if self.cycle.iter().collect::<VertexSet>().len() != k {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let a = t.theta(self.cycle[i], self.cycle[j]);
                let a = match self.kind {
                    HoleKind::Hole => a,
                    HoleKind::Antihole => a.negate(),
                };
                let consecutive = j - i == 1 || j - i == k - 1;
                let ok = if consecutive { a.is_adjacent() } else { a.is_antiadjacent() };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

/// Smallest odd hole, lexicographically least among those of that length.
pub fn find_odd_hole(t: &Trigraph) -> Option<HoleWitness> {
    find_hole(t, (5..=t.n()).step_by(2), None).map(|cycle| HoleWitness { cycle, kind: HoleKind::Hole })
}

/// Smallest odd antihole, reported in `t`'s labels.
pub fn find_odd_antihole(t: &Trigraph) -> Option<HoleWitness> {
    find_hole(&t.complement(), (5..=t.n()).step_by(2), None)
        .map(|cycle| HoleWitness { cycle, kind: HoleKind::Antihole })
}

/// Shortest antihole of length at least `k`, of either parity.
pub fn find_antihole_of_length_at_least(
    t: &Trigraph,
    k: usize,
) -> Result<Option<HoleWitness>, BergeError> {
    if k < 5 {
        return Err(BergeError::ThresholdTooSmall { k });
    }
    Ok(find_hole(&t.complement(), k..=t.n(), None)
        .map(|cycle| HoleWitness { cycle, kind: HoleKind::Antihole }))
}

/// Shortest hole of length at least `k` (`k >= 5`), of either parity.
pub fn find_hole_of_length_at_least(t: &Trigraph, k: usize) -> Option<HoleWitness> {
    find_hole(t, k.max(5)..=t.n(), None).map(|cycle| HoleWitness { cycle, kind: HoleKind::Hole })
}

/// Odd hole of `t` passing through `through`.
pub fn find_odd_hole_through(t: &Trigraph, through: usize) -> Option<HoleWitness> {
    find_hole(t, (5..=t.n()).step_by(2), Some(through))
        .map(|cycle| HoleWitness { cycle, kind: HoleKind::Hole })
}

fn find_hole(
    t: &Trigraph,
    lengths: impl Iterator<Item = usize>,
    through: Option<usize>,
) -> Option<Vec<usize>> {
    let mut cycle = Vec::new();
    for k in lengths {
        let starts: Vec<usize> = match through {
            Some(p) => vec![p],
            None => (0..t.n()).collect(),
        };
        for h1 in starts {
            let allowed = match through {
                Some(_) => t.vertices().without(h1),
                None => t.vertices() - VertexSet::full(h1 + 1),
            };
            cycle.clear();
            cycle.push(h1);
            if grow_hole(t, k, &mut cycle, VertexSet::singleton(h1), VertexSet::EMPTY, VertexSet::EMPTY, allowed) {
                return Some(cycle);
            }
        }
    }
    None
}

/// `blocked` = strong neighbours of every cycle vertex but the last;
/// `blocked_tail` = the same without the first vertex, which the closing
/// vertex must be adjacent to.
fn grow_hole(
    t: &Trigraph,
    k: usize,
    cycle: &mut Vec<usize>,
    used: VertexSet,
    blocked: VertexSet,
    blocked_tail: VertexSet,
    allowed: VertexSet,
) -> bool {
    let d = cycle.len();
    let last = cycle[d - 1];
    let first = cycle[0];
    if d == k - 1 {
        let candidates = t.neighbors(last) & t.neighbors(first) & (allowed - used - blocked_tail);
        for w in candidates {
            if w > cycle[1] {
                cycle.push(w);
                return true;
            }
        }
        return false;
    }
    let candidates = t.neighbors(last) & (allowed - used - blocked);
    let next_blocked = blocked | t.strong_neighbors(last);
    let next_tail = if d >= 2 { blocked_tail | t.strong_neighbors(last) } else { blocked_tail };
    for w in candidates {
        cycle.push(w);
        if grow_hole(t, k, cycle, used.with(w), next_blocked, next_tail, allowed) {
            return true;
        }
        cycle.pop();
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergeVerdict {
    pub is_berge: bool,
    pub witness: Option<HoleWitness>,
}

pub fn is_berge(t: &Trigraph) -> BergeVerdict {
    let witness = find_odd_hole(t).or_else(|| find_odd_antihole(t));
    BergeVerdict { is_berge: witness.is_none(), witness }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrismParity {
    Odd,
    Even,
    /// Rungs of both parities; impossible in Berge trigraphs.
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrismFilter {
    Any,
    Odd,
    Even,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrismWitness {
    pub cliques: ([usize; 3], [usize; 3]),
    /// `rungs[i]` runs from `cliques.0[i]` to `cliques.1[i]`.
    pub rungs: Vec<PathWitness>,
    pub parity: PrismParity,
}

impl PrismWitness {
    pub fn vertex_set(&self) -> VertexSet {
        self.rungs.iter().map(PathWitness::vertex_set).fold(VertexSet::EMPTY, |a, b| a | b)
    }

    /// Checks that triangle and rung pairs are adjacent in `t` and every
    /// other pair of prism vertices is antiadjacent.
    pub fn is_valid_in(&self, t: &Trigraph) -> bool {
        let (a, b) = self.cliques;
        if self.rungs.len() != 3 {
            return false;
        }
        let mut expected = Vec::new();
        for (i, rung) in self.rungs.iter().enumerate() {
            if rung.vertices.len() < 2 || rung.first() != a[i] || rung.last() != b[i] {
                return false;
            }
            expected.extend(rung.vertices.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))));
        }
        for tri in [a, b] {
            for i in 0..3 {
                for j in i + 1..3 {
                    expected.push((tri[i].min(tri[j]), tri[i].max(tri[j])));
                }
            }
        }
        let vs = self.vertex_set();
        let total: usize = self.rungs.iter().map(|r| r.vertices.len()).sum();
        if vs.len() != total {
            return false;
        }
        expected.sort();
        expected.dedup();
        vs.iter().all(|u| {
            (vs - VertexSet::full(u + 1)).iter().all(|v| {
                let a = t.theta(u, v);
                if expected.binary_search(&(u, v)).is_ok() {
                    a.is_adjacent()
                } else {
                    a.is_antiadjacent()
                }
            })
        })
    }
}

/// Searches for a prism of `t`: switchable pairs may serve as edges or as
/// non-edges.
///
/// Unordered pairs of disjoint triangles are tried in lexicographic order,
/// then each of the six matchings between them, then vertex-disjoint rungs
/// grown by depth-first search.
pub fn find_prism(t: &Trigraph, filter: PrismFilter) -> Option<PrismWitness> {
    let n = t.n();
    let mut triangles = Vec::new();
    for a in 0..n {
        for b in (t.neighbors(a) - VertexSet::full(a + 1)).iter() {
            for c in (t.neighbors(a) & (t.neighbors(b) - VertexSet::full(b + 1))).iter() {
                triangles.push([a, b, c]);
            }
        }
    }
    const MATCHINGS: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for (i, first) in triangles.iter().enumerate() {
        let first_set: VertexSet = first.iter().collect();
        for second in &triangles[i + 1..] {
            let second_set: VertexSet = second.iter().collect();
            if !first_set.is_disjoint(second_set) {
                continue;
            }
            for m in MATCHINGS {
                let b = [second[m[0]], second[m[1]], second[m[2]]];
                let crossing_ok =
                    (0..3).all(|x| (0..3).all(|y| x == y || t.theta(first[x], b[y]).is_antiadjacent()));
                if !crossing_ok {
                    continue;
                }
                let mut rungs = Vec::new();
                if grow_rungs(t, first, &b, filter, &mut rungs) {
                    let parity = prism_parity(&rungs);
                    return Some(PrismWitness { cliques: (*first, b), rungs, parity });
                }
            }
        }
    }
    None
}

fn prism_parity(rungs: &[PathWitness]) -> PrismParity {
    if rungs.iter().all(|r| r.parity() == Parity::Odd) {
        PrismParity::Odd
    } else if rungs.iter().all(|r| r.parity() == Parity::Even) {
        PrismParity::Even
    } else {
        PrismParity::Mixed
    }
}

fn grow_rungs(
    g: &Trigraph,
    a: &[usize; 3],
    b: &[usize; 3],
    filter: PrismFilter,
    rungs: &mut Vec<PathWitness>,
) -> bool {
    let r = rungs.len();
    if r == 3 {
        return true;
    }
    let corners: VertexSet = a.iter().chain(b.iter()).collect();
    let mut taken = VertexSet::EMPTY;
    for rung in rungs.iter() {
        taken |= rung.vertex_set();
    }
    // Vertices that other rungs (finished or not) already occupy.
    let mut others = taken;
    for s in r + 1..3 {
        others.insert(a[s]);
        others.insert(b[s]);
    }
    let mut forbidden = corners | taken;
    for v in others {
        forbidden |= g.strong_neighbors(v);
    }
    let interior = g.vertices() - forbidden;
    let mut candidates = Vec::new();
    let _ = walk_paths(g, a[r], VertexSet::singleton(b[r]), interior, &mut |p| {
        let parity = Parity::of(p.len() - 1);
        let keep = match filter {
            PrismFilter::Any => true,
            PrismFilter::Odd => parity == Parity::Odd,
            PrismFilter::Even => parity == Parity::Even,
        };
        if keep {
            candidates.push(PathWitness::new(p.to_vec()));
        }
        ControlFlow::Continue(())
    });
    for rung in candidates {
        rungs.push(rung);
        if grow_rungs(g, a, b, filter, rungs) {
            return true;
        }
        rungs.pop();
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EvenPairVerdict {
    EvenPair,
    NotEvenPair,
    NotStronglyAntiadjacent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenPairReport {
    pub pair: (usize, usize),
    pub verdict: EvenPairVerdict,
    /// An odd path from `pair.0` to `pair.1` when the verdict is
    /// `NotEvenPair`.
    pub witness: Option<PathWitness>,
    pub path_count: usize,
}

impl EvenPairReport {
    pub fn is_even_pair(&self) -> bool {
        self.verdict == EvenPairVerdict::EvenPair
    }
}

fn check_pair_args(t: &Trigraph, u: usize, v: usize) -> Result<(), TrigraphError> {
    for w in [u, v] {
        if w >= t.n() {
            return Err(TrigraphError::VertexNotInTrigraph { v: w, n: t.n() });
        }
    }
    if u == v {
        return Err(TrigraphError::SameEndpoints { v: u });
    }
    Ok(())
}

/// Even-pair test by exhaustive path enumeration only.
pub fn even_pair_by_paths(t: &Trigraph, u: usize, v: usize) -> Result<EvenPairReport, TrigraphError> {
    check_pair_args(t, u, v)?;
    if !t.is_strongly_antiadjacent(u, v) {
        return Ok(EvenPairReport {
            pair: (u, v),
            verdict: EvenPairVerdict::NotStronglyAntiadjacent,
            witness: None,
            path_count: 0,
        });
    }
    let mut path_count = 0;
    let mut witness = None;
    let interior = t.vertices().without(u).without(v);
    let _ = walk_paths(t, u, VertexSet::singleton(v), interior, &mut |p| {
        path_count += 1;
        if (p.len() - 1) % 2 == 1 {
            witness = Some(PathWitness::new(p.to_vec()));
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    let verdict = if witness.is_some() { EvenPairVerdict::NotEvenPair } else { EvenPairVerdict::EvenPair };
    Ok(EvenPairReport { pair: (u, v), verdict, witness, path_count })
}

/// Even-pair test through a pendant gadget: add a vertex `p` adjacent to
/// exactly `u` and `v`; the pair is even iff no odd hole passes through `p`.
/// Defined for graphs only.
pub fn even_pair_by_gadget(g: &Trigraph, u: usize, v: usize) -> Result<bool, TrigraphError> {
    check_pair_args(g, u, v)?;
    if !g.is_graph() {
        return Err(TrigraphError::NotAGraph);
    }
    let mut h = g.clone();
    let p = h.add_vertex()?;
    h.set(p, u, crate::trigraph::Adjacency::Strong);
    h.set(p, v, crate::trigraph::Adjacency::Strong);
    Ok(find_odd_hole_through(&h, p).is_none())
}

/// Decides whether `{u, v}` is an even pair of `t`.
///
/// For graphs the verdict is derived twice, by path enumeration and by the
/// pendant-vertex gadget, and the two must agree.
pub fn is_even_pair(t: &Trigraph, u: usize, v: usize) -> Result<EvenPairReport, BergeError> {
    let report = even_pair_by_paths(t, u, v)?;
    if t.is_graph() && report.verdict != EvenPairVerdict::NotStronglyAntiadjacent {
        let by_gadget = even_pair_by_gadget(t, u, v)?;
        if by_gadget != report.is_even_pair() {
            return Err(BergeError::MethodDisagreement {
                u,
                v,
                by_paths: report.is_even_pair(),
                by_gadget,
            });
        }
    }
    Ok(report)
}

/// Lexicographically least even pair, optionally avoiding every vertex of a
/// switchable component. Brute force over all strongly antiadjacent pairs.
pub fn find_even_pair_oracle(t: &Trigraph, require_disjoint_from_switchable: bool) -> Option<(usize, usize)> {
    let avoid = if require_disjoint_from_switchable { t.switchable_vertices() } else { VertexSet::EMPTY };
    all_even_pairs_where(t, avoid).into_iter().next()
}

/// Every even pair `(u, v)`, `u < v`, with neither end in `avoid`.
pub fn all_even_pairs_where(t: &Trigraph, avoid: VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in t.vertices() - avoid {
        for v in t.strong_antineighbors(u) - avoid - VertexSet::full(u + 1) {
            if even_pair_by_paths(t, u, v).map(|r| r.is_even_pair()).unwrap_or(false) {
                out.push((u, v));
            }
        }
    }
    out
}
