//! The five basic trigraph classes, favourability, and even-pair finders for
//! each class.

pub mod root;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::berge::{even_pair_by_paths, is_even_pair, BergeError};
use crate::class_f::{in_class_f, switchable_shape, ClassFViolation, SwitchableComponent};
use crate::trigraph::{Connectivity, Trigraph};
use crate::vertex_set::{for_each_subset_lex, VertexSet};

pub use root::{
    find_good_pair, has_k4_minor, is_good_pair, line_graph, reconstruct_root, verify_root_properties, EvenTheta,
    GoodPairMethod, GoodPairWitness, LineRoot, RootGraph, RootReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasicClass {
    Bipartite,
    ComplementBipartite,
    Line,
    ComplementLine,
    Doubled,
}

impl BasicClass {
    pub const ALL: [BasicClass; 5] = [
        BasicClass::Bipartite,
        BasicClass::ComplementBipartite,
        BasicClass::Line,
        BasicClass::ComplementLine,
        BasicClass::Doubled,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BasicCertificate {
    /// Two strongly stable sets (of the complement, for the complement class).
    Bipartition { a: VertexSet, b: VertexSet },
    /// Root of the full realization (of the complement, for the complement
    /// class); trigraph vertex `i` is root edge `i`.
    Root { root: LineRoot },
    GoodPartition { x: VertexSet, y: VertexSet },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicClassification {
    /// `None` when the trigraph is not basic.
    pub class: Option<BasicClass>,
    pub certificate: Option<BasicCertificate>,
}

impl BasicClassification {
    pub fn is_basic(&self) -> bool {
        self.class.is_some()
    }
}

/// First class in the order bipartite, complement of bipartite, line,
/// complement of line, doubled.
pub fn classify_basic(t: &Trigraph) -> BasicClassification {
    for class in BasicClass::ALL {
        if let Some(certificate) = classify_as(t, class) {
            return BasicClassification { class: Some(class), certificate: Some(certificate) };
        }
    }
    BasicClassification { class: None, certificate: None }
}

/// Membership in one particular class, with its certificate.
pub fn classify_as(t: &Trigraph, class: BasicClass) -> Option<BasicCertificate> {
    match class {
        BasicClass::Bipartite => bipartition(t),
        BasicClass::ComplementBipartite => bipartition(&t.complement()),
        BasicClass::Line => line_root(t),
        BasicClass::ComplementLine => line_root(&t.complement()),
        BasicClass::Doubled => find_good_partition(t).map(|(x, y)| BasicCertificate::GoodPartition { x, y }),
    }
}

/// Re-validates a certificate against the class definition.
pub fn certificate_is_valid(t: &Trigraph, class: BasicClass, cert: &BasicCertificate) -> bool {
    let co = t.complement();
    match (class, cert) {
        (BasicClass::Bipartite, BasicCertificate::Bipartition { a, b }) => valid_bipartition(t, *a, *b),
        (BasicClass::ComplementBipartite, BasicCertificate::Bipartition { a, b }) => valid_bipartition(&co, *a, *b),
        (BasicClass::Line, BasicCertificate::Root { root }) => valid_root(t, root),
        (BasicClass::ComplementLine, BasicCertificate::Root { root }) => valid_root(&co, root),
        (BasicClass::Doubled, BasicCertificate::GoodPartition { x, y }) => {
            *x | *y == t.vertices() && x.is_disjoint(*y) && is_good_partition(t, *x)
        }
        _ => false,
    }
}

fn valid_bipartition(t: &Trigraph, a: VertexSet, b: VertexSet) -> bool {
    a | b == t.vertices() && a.is_disjoint(b) && t.is_strongly_stable(a) && t.is_strongly_stable(b)
}

fn valid_root(t: &Trigraph, root: &LineRoot) -> bool {
    root.graph.bipartition().is_some() && root.line_graph() == t.full_realization() && big_cliques_are_strong(t)
}

/// Sides of a 2-colouring of the full realization; each component's
/// smallest vertex goes to `a`.
fn bipartition(t: &Trigraph) -> Option<BasicCertificate> {
    let mut a = VertexSet::EMPTY;
    let mut b = VertexSet::EMPTY;
    for comp in t.components(t.vertices(), Connectivity::Connected) {
        let start = comp.min().expect("nonempty component");
        let mut layer = VertexSet::singleton(start);
        let mut seen = layer;
        let mut side_a = true;
        while !layer.is_empty() {
            if side_a {
                a |= layer;
            } else {
                b |= layer;
            }
            let next = layer.iter().fold(VertexSet::EMPTY, |m, v| m | t.neighbors(v)) - seen;
            seen |= next;
            layer = next;
            side_a = !side_a;
        }
    }
    (t.is_strongly_stable(a) && t.is_strongly_stable(b)).then_some(BasicCertificate::Bipartition { a, b })
}

/// Every clique of size at least three is strong: no switchable pair has a
/// common neighbour.
fn big_cliques_are_strong(t: &Trigraph) -> bool {
    t.switchable_pairs().iter().all(|&(u, v)| (t.neighbors(u) & t.neighbors(v)).is_empty())
}

fn line_root(t: &Trigraph) -> Option<BasicCertificate> {
    if !big_cliques_are_strong(t) {
        return None;
    }
    reconstruct_root(t).map(|root| BasicCertificate::Root { root })
}

/// Checks the three conditions of a good partition `(X, V \ X)`.
pub fn is_good_partition(t: &Trigraph, x: VertexSet) -> bool {
    let y = t.vertices() - x;
    let comps = t.components(x, Connectivity::Connected);
    let antis = t.components(y, Connectivity::Anticonnected);
    if comps.iter().chain(&antis).any(|c| c.len() > 2) {
        return false;
    }
    if x.iter().any(|v| !(t.semi_neighbors(v) & y).is_empty()) {
        return false;
    }
    comps.iter().all(|&cx| {
        antis.iter().all(|&cy| {
            let incident_ok = |v: usize, other: VertexSet| {
                (t.strong_neighbors(v) & other).len() <= 1 && (t.strong_antineighbors(v) & other).len() <= 1
            };
            cx.iter().all(|v| incident_ok(v, cy)) && cy.iter().all(|v| incident_ok(v, cx))
        })
    })
}

/// First good partition, scanning `X` in lexicographic order.
pub fn find_good_partition(t: &Trigraph) -> Option<(VertexSet, VertexSet)> {
    let mut found = None;
    for_each_subset_lex(t.vertices(), |x| {
        if is_good_partition(t, x) {
            found = Some((x, t.vertices() - x));
        }
        found.is_some()
    });
    found
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FavorabilityFailure {
    FewerThanFiveVertices,
    NoStrongAntiedgeAvoidingComponent,
    BothRemaindersAreCliques,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasicError {
    #[error("trigraph is not in class F: {0:?}")]
    NotInClassF(ClassFViolation),
    #[error("trigraph is not basic")]
    NotBasic,
    #[error("certificate does not match the {0:?} class")]
    WrongCertificate(BasicClass),
    #[error("the {class:?} construction produced no verified even pair")]
    ConstructionFailed { class: BasicClass },
    #[error("no even pair avoids the switchable component")]
    NoDisjointPair { class: BasicClass },
    #[error(transparent)]
    Berge(#[from] BergeError),
}

/// `None` when favourable, otherwise the first failed condition.
pub fn favorability(t: &Trigraph) -> Result<Option<FavorabilityFailure>, BasicError> {
    if let crate::class_f::ClassFVerdict::No { violation } = in_class_f(t) {
        return Err(BasicError::NotInClassF(violation));
    }
    Ok(favorability_unchecked(t))
}

pub fn is_favorable(t: &Trigraph) -> Result<bool, BasicError> {
    favorability(t).map(|f| f.is_none())
}

/// The favourability conditions, assuming membership in F.
pub(crate) fn favorability_unchecked(t: &Trigraph) -> Option<FavorabilityFailure> {
    if t.n() < 5 {
        return Some(FavorabilityFailure::FewerThanFiveVertices);
    }
    let d = t.switchable_vertices();
    let rest = t.vertices() - d;
    if !rest.iter().any(|u| !(t.strong_antineighbors(u) & rest).is_empty()) {
        return Some(FavorabilityFailure::NoStrongAntiedgeAvoidingComponent);
    }
    if let Ok(SwitchableComponent::Small { x, y }) = switchable_shape(t) {
        let clique_without = |w: usize| t.is_clique(t.vertices() - d - t.neighbors(w));
        if clique_without(x) && clique_without(y) {
            return Some(FavorabilityFailure::BothRemaindersAreCliques);
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum BasicOutcome {
    Complete,
    EvenPair { u: usize, v: usize, class: BasicClass },
}

/// Verifies candidates in order and returns the first even pair with no end
/// in `avoid`.
fn first_even_pair(
    t: &Trigraph,
    candidates: impl IntoIterator<Item = (usize, usize)>,
    avoid: VertexSet,
) -> Option<(usize, usize)> {
    candidates
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .filter(|&(u, v)| u != v && !avoid.contains(u) && !avoid.contains(v))
        .find(|&(u, v)| even_pair_by_paths(t, u, v).is_ok_and(|r| r.is_even_pair()))
}

fn avoid_set(t: &Trigraph, need_disjoint: bool) -> VertexSet {
    if need_disjoint {
        t.switchable_vertices()
    } else {
        VertexSet::EMPTY
    }
}

/// Pairs with ends in different components, smallest vertices first.
fn cross_component_pairs(t: &Trigraph) -> Vec<(usize, usize)> {
    let comps = t.components(t.vertices(), Connectivity::Connected);
    let mut out = Vec::new();
    for (i, a) in comps.iter().enumerate() {
        for b in &comps[i + 1..] {
            for u in *a {
                for v in *b {
                    out.push((u, v));
                }
            }
        }
    }
    out
}

fn pairs_within(set: VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in set {
        for v in set - VertexSet::full(u + 1) {
            out.push((u, v));
        }
    }
    out
}

/// Bipartite trigraphs: two vertices of the same side; when a side minus the
/// switchable component is a single vertex, two vertices in different
/// components.
pub fn even_pair_bipartite(
    t: &Trigraph,
    sides: (VertexSet, VertexSet),
    need_disjoint: bool,
) -> Result<Option<(usize, usize)>, BasicError> {
    if t.is_complete() {
        return Ok(None);
    }
    let avoid = avoid_set(t, need_disjoint);
    let (a, b) = sides;
    let candidates = pairs_within(a).into_iter().chain(pairs_within(b)).chain(cross_component_pairs(t));
    finish(t, first_even_pair(t, candidates, avoid), BasicClass::Bipartite, need_disjoint)
}

fn finish(
    t: &Trigraph,
    pair: Option<(usize, usize)>,
    class: BasicClass,
    need_disjoint: bool,
) -> Result<Option<(usize, usize)>, BasicError> {
    let Some((u, v)) = pair else {
        return Err(if need_disjoint && !t.switchable_vertices().is_empty() {
            BasicError::NoDisjointPair { class }
        } else {
            BasicError::ConstructionFailed { class }
        });
    };
    if !is_even_pair(t, u, v)?.is_even_pair() {
        return Err(BasicError::ConstructionFailed { class });
    }
    Ok(Some((u, v)))
}

/// Line trigraphs: a good pair of the root, avoiding the interior vertices
/// of the root path under the switchable component when required.
pub fn even_pair_line(t: &Trigraph, root: &LineRoot, need_disjoint: bool) -> Result<Option<(usize, usize)>, BasicError> {
    if t.is_complete() {
        return Ok(None);
    }
    let forbidden = if need_disjoint { switchable_root_interior(t, root) } else { 0 };
    let pair = find_good_pair(root, forbidden).map(|w| w.line_vertices);
    let avoid = avoid_set(t, need_disjoint);
    let pair = pair.filter(|&(u, v)| !avoid.contains(u) && !avoid.contains(v));
    finish(t, pair, BasicClass::Line, need_disjoint)
}

/// Root vertices of degree two in the subgraph `J` formed by the root edges
/// of the switchable component.
fn switchable_root_interior(t: &Trigraph, root: &LineRoot) -> u64 {
    let mut degree = vec![0u8; root.graph.n()];
    for v in t.switchable_vertices() {
        let (a, b) = root.graph.edges()[v];
        degree[a] += 1;
        degree[b] += 1;
    }
    degree.iter().enumerate().filter(|(_, &d)| d >= 2).fold(0u64, |m, (v, _)| m | 1 << v)
}

/// Complements of bipartite and of line trigraphs.
///
/// A pair avoiding a small switchable component `{x, y}` is sought among
/// two strongly antiadjacent vertices of `N(x)` or of `N(y)`. Otherwise the
/// pair comes from descending into `C(M)`, the vertices complete to a
/// maximal anticonnected set `M` that still leaves two nonadjacent vertices
/// complete to it.
pub fn even_pair_co_classes(t: &Trigraph, class: BasicClass, need_disjoint: bool) -> Result<Option<(usize, usize)>, BasicError> {
    if t.is_complete() {
        return Ok(None);
    }
    let avoid = avoid_set(t, need_disjoint);
    if let (true, Ok(SwitchableComponent::Small { x, y })) = (need_disjoint, switchable_shape(t)) {
        let d = VertexSet::from_iter([x, y]);
        let candidates = [x, y].into_iter().flat_map(|w| {
            pairs_within(t.neighbors(w) - d).into_iter().filter(|&(s, u)| t.is_strongly_antiadjacent(s, u))
        });
        if let Some(pair) = first_even_pair(t, candidates.collect::<Vec<_>>(), avoid) {
            return finish(t, Some(pair), class, need_disjoint);
        }
    }
    let pair = descend(t, t.vertices()).filter(|&(u, v)| !avoid.contains(u) && !avoid.contains(v));
    finish(t, pair, class, need_disjoint)
}

/// Vertices of `s` outside `m` adjacent to every vertex of `m`.
fn complete_to(t: &Trigraph, s: VertexSet, m: VertexSet) -> VertexSet {
    (s - m).iter().filter(|&u| m.is_subset(t.neighbors(u))).collect()
}

fn descend(t: &Trigraph, mut s: VertexSet) -> Option<(usize, usize)> {
    loop {
        if t.is_clique(s) {
            return None;
        }
        let comps = t.components(s, Connectivity::Connected);
        if comps.len() >= 2 {
            return Some((comps[0].min()?, comps[1].min()?));
        }
        let usable = |m: VertexSet| !t.is_clique(complete_to(t, s, m));
        let mut m = s.iter().map(VertexSet::singleton).find(|&m| usable(m))?;
        'grow: loop {
            for w in s - m {
                let bigger = m.with(w);
                if t.is_anticonnected_set(bigger) && usable(bigger) {
                    m = bigger;
                    continue 'grow;
                }
            }
            break;
        }
        s = complete_to(t, s, m);
    }
}

/// Doubled trigraphs. Candidates follow the case analysis on a good
/// partition `(X, Y)`: vertices in different components; `x ∈ X` with a
/// strong antineighbour `y` forming an anticomponent of `Y` on its own; a
/// strong antiedge inside `Y` when `X` has no edge; strongly antiadjacent
/// `x ∈ X`, `y ∈ Y`; strongly antiadjacent vertices of `X`. The first one
/// that verifies is returned.
pub fn even_pair_doubled(
    t: &Trigraph,
    partition: (VertexSet, VertexSet),
    need_disjoint: bool,
) -> Result<Option<(usize, usize)>, BasicError> {
    if t.is_complete() {
        return Ok(None);
    }
    let (x, y) = partition;
    let anti = |u: usize, v: usize| t.is_strongly_antiadjacent(u, v);
    let mut candidates = cross_component_pairs(t);
    let singletons: Vec<usize> = t
        .components(y, Connectivity::Anticonnected)
        .into_iter()
        .filter(|c| c.len() == 1)
        .filter_map(|c| c.min())
        .collect();
    for &w in &singletons {
        candidates.extend(x.iter().filter(|&u| anti(u, w)).map(|u| (u, w)));
    }
    if x.iter().all(|u| (t.neighbors(u) & x).is_empty()) {
        candidates.extend(pairs_within(y).into_iter().filter(|&(a, b)| anti(a, b)));
    }
    for u in x {
        candidates.extend(y.iter().filter(|&w| anti(u, w)).map(|w| (u, w)));
    }
    candidates.extend(pairs_within(x).into_iter().filter(|&(a, b)| anti(a, b)));
    let pair = first_even_pair(t, candidates, avoid_set(t, need_disjoint));
    finish(t, pair, BasicClass::Doubled, need_disjoint)
}

/// Dispatches to the finder of the first basic class `t` belongs to.
pub fn even_pair_basic(t: &Trigraph, need_disjoint: bool) -> Result<BasicOutcome, BasicError> {
    let classification = classify_basic(t);
    let (Some(class), Some(cert)) = (classification.class, classification.certificate) else {
        return Err(BasicError::NotBasic);
    };
    even_pair_for_class(t, class, &cert, need_disjoint)
}

/// Runs the finder of one class given its certificate.
pub fn even_pair_for_class(
    t: &Trigraph,
    class: BasicClass,
    cert: &BasicCertificate,
    need_disjoint: bool,
) -> Result<BasicOutcome, BasicError> {
    let pair = match (class, cert) {
        (BasicClass::Bipartite, BasicCertificate::Bipartition { a, b }) => even_pair_bipartite(t, (*a, *b), need_disjoint)?,
        (BasicClass::Line, BasicCertificate::Root { root }) => even_pair_line(t, root, need_disjoint)?,
        (BasicClass::ComplementBipartite | BasicClass::ComplementLine, _) => {
            even_pair_co_classes(t, class, need_disjoint)?
        }
        (BasicClass::Doubled, BasicCertificate::GoodPartition { x, y }) => even_pair_doubled(t, (*x, *y), need_disjoint)?,
        _ => return Err(BasicError::WrongCertificate(class)),
    };
    Ok(match pair {
        None => BasicOutcome::Complete,
        Some((u, v)) => BasicOutcome::EvenPair { u, v, class },
    })
}
