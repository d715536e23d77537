//! Even-pair contraction of graphs, contraction sequences and the colourings
//! they yield.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::berge::{all_even_pairs_where, is_berge, is_even_pair, BergeError, EvenPairVerdict, HoleWitness};
use crate::canon::{canonical_code, CanonicalCode};
use crate::paths::PathWitness;
use crate::trigraph::{Adjacency, Trigraph, TrigraphError};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContractionError {
    #[error("contraction is only defined for graphs")]
    NotAGraph,
    #[error("({u}, {v}) is not an even pair ({verdict:?})")]
    NotEvenPair { u: usize, v: usize, verdict: EvenPairVerdict, witness: Option<PathWitness> },
    #[error("input graph is not Berge")]
    NotBerge { witness: HoleWitness },
    #[error("contraction sequence does not end in a complete graph")]
    NotComplete,
    #[error(transparent)]
    Berge(#[from] BergeError),
    #[error(transparent)]
    Trigraph(#[from] TrigraphError),
}

/// `G/{u,v}` together with where every vertex of `G` went.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Contraction {
    pub graph: Trigraph,
    /// Index of the merged vertex `w`.
    pub merged: usize,
    /// `vertex_map[x]` is the vertex of the contracted graph that `x` became.
    pub vertex_map: Vec<usize>,
}

/// Contracts `{u, v}` without checking that it is an even pair. `w` takes the
/// smaller of the two indices; the vertices above the larger one shift down.
pub(crate) fn contract_unchecked(g: &Trigraph, u: usize, v: usize) -> Contraction {
    let (lo, hi) = (u.min(v), u.max(v));
    let n = g.n();
    let vertex_map: Vec<usize> = (0..n).map(|x| if x == hi { lo } else if x > hi { x - 1 } else { x }).collect();
    let mut h = Trigraph::new(n - 1).expect("smaller than input");
    for (a, b) in g.strong_edges() {
        let (x, y) = (vertex_map[a], vertex_map[b]);
        if x != y {
            h.set(x, y, Adjacency::Strong);
        }
    }
    Contraction { graph: h, merged: lo, vertex_map }
}

/// `G/{u,v}`; the pair must be an even pair of the graph `g`.
pub fn contract_even_pair(g: &Trigraph, u: usize, v: usize) -> Result<Contraction, ContractionError> {
    if !g.is_graph() {
        return Err(ContractionError::NotAGraph);
    }
    let report = is_even_pair(g, u, v)?;
    if !report.is_even_pair() {
        return Err(ContractionError::NotEvenPair { u, v, verdict: report.verdict, witness: report.witness });
    }
    Ok(contract_unchecked(g, u, v))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractionStep {
    pub graph_before: Trigraph,
    pub pair: (usize, usize),
    pub merged: usize,
    pub graph_after: Trigraph,
    pub vertex_map: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContractionOutcome {
    /// The final graph is complete.
    Complete,
    /// The final graph has no even pair and is not complete.
    Stuck,
    /// The backtracking search hit its depth cap before deciding.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractionSequence {
    pub original: Trigraph,
    pub steps: Vec<ContractionStep>,
    pub terminal: Trigraph,
    pub outcome: ContractionOutcome,
}

impl ContractionSequence {
    /// Where each vertex of the original graph ends up in the terminal graph.
    pub fn terminal_map(&self) -> Vec<usize> {
        let mut map: Vec<usize> = (0..self.original.n()).collect();
        for step in &self.steps {
            for m in map.iter_mut() {
                *m = step.vertex_map[*m];
            }
        }
        map
    }

    /// Re-checks every recorded step: the pair is an even pair of the graph
    /// before it and the graph after it is the contraction.
    pub fn revalidate(&self) -> Result<(), ContractionError> {
        let mut current = &self.original;
        for step in &self.steps {
            if &step.graph_before != current {
                return Err(ContractionError::NotComplete);
            }
            let c = contract_even_pair(&step.graph_before, step.pair.0, step.pair.1)?;
            if c.graph != step.graph_after || c.vertex_map != step.vertex_map {
                return Err(ContractionError::NotComplete);
            }
            current = &step.graph_after;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Contract the lexicographically least even pair until none remains.
    FirstFound,
    /// Backtrack over pair choices looking for a sequence that ends complete.
    ExhaustiveSearchForComplete,
}

fn require_berge_graph(g: &Trigraph) -> Result<(), ContractionError> {
    if !g.is_graph() {
        return Err(ContractionError::NotAGraph);
    }
    if let Some(witness) = is_berge(g).witness {
        return Err(ContractionError::NotBerge { witness });
    }
    Ok(())
}

fn step(g: &Trigraph, pair: (usize, usize)) -> ContractionStep {
    let c = contract_unchecked(g, pair.0, pair.1);
    ContractionStep {
        graph_before: g.clone(),
        pair,
        merged: c.merged,
        graph_after: c.graph,
        vertex_map: c.vertex_map,
    }
}

fn greedy(g: &Trigraph) -> ContractionSequence {
    let mut steps = Vec::new();
    let mut current = g.clone();
    while let Some(&pair) = all_even_pairs_where(&current, VertexSet::EMPTY).first() {
        let s = step(&current, pair);
        current = s.graph_after.clone();
        steps.push(s);
    }
    let outcome = if current.is_complete() { ContractionOutcome::Complete } else { ContractionOutcome::Stuck };
    ContractionSequence { original: g.clone(), steps, terminal: current, outcome }
}

pub fn run_contraction_sequence(g: &Trigraph, strategy: Strategy) -> Result<ContractionSequence, ContractionError> {
    run_contraction_sequence_capped(g, strategy, g.n())
}

/// As [`run_contraction_sequence`], with an explicit depth cap for the
/// backtracking search.
pub fn run_contraction_sequence_capped(
    g: &Trigraph,
    strategy: Strategy,
    depth_cap: usize,
) -> Result<ContractionSequence, ContractionError> {
    require_berge_graph(g)?;
    let greedy_sequence = greedy(g);
    if strategy == Strategy::FirstFound || greedy_sequence.outcome == ContractionOutcome::Complete {
        return Ok(greedy_sequence);
    }
    let mut dead_ends = HashSet::new();
    let mut steps = Vec::new();
    let mut hit_cap = false;
    if search_complete(g, depth_cap, &mut steps, &mut dead_ends, &mut hit_cap) {
        let terminal = steps.last().map_or_else(|| g.clone(), |s: &ContractionStep| s.graph_after.clone());
        return Ok(ContractionSequence {
            original: g.clone(),
            steps,
            terminal,
            outcome: ContractionOutcome::Complete,
        });
    }
    if hit_cap {
        return Ok(ContractionSequence { outcome: ContractionOutcome::Inconclusive, ..greedy_sequence });
    }
    Ok(greedy_sequence)
}

fn search_complete(
    g: &Trigraph,
    depth_left: usize,
    steps: &mut Vec<ContractionStep>,
    dead_ends: &mut HashSet<CanonicalCode>,
    hit_cap: &mut bool,
) -> bool {
    if g.is_complete() {
        return true;
    }
    let code = canonical_code(g);
    if dead_ends.contains(&code) {
        return false;
    }
    let pairs = all_even_pairs_where(g, VertexSet::EMPTY);
    if !pairs.is_empty() && depth_left == 0 {
        *hit_cap = true;
        return false;
    }
    for pair in pairs {
        let s = step(g, pair);
        let next = s.graph_after.clone();
        steps.push(s);
        if search_complete(&next, depth_left - 1, steps, dead_ends, hit_cap) {
            return true;
        }
        steps.pop();
    }
    if !*hit_cap {
        dead_ends.insert(code);
    }
    false
}

/// Whether some contraction sequence of `g` ends in a complete graph.
pub fn is_even_contractile(g: &Trigraph) -> Result<(bool, ContractionSequence), ContractionError> {
    let seq = run_contraction_sequence(g, Strategy::ExhaustiveSearchForComplete)?;
    Ok((seq.outcome == ContractionOutcome::Complete, seq))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    /// `assignment[v]` is the colour of vertex `v`.
    pub assignment: Vec<usize>,
    pub color_count: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &Trigraph) -> bool {
        self.assignment.len() == g.n()
            && g.edges().iter().all(|&(u, v)| self.assignment[u] != self.assignment[v])
    }

    pub fn distinct_colors(&self) -> usize {
        self.assignment.iter().collect::<HashSet<_>>().len()
    }
}

/// Colours the terminal clique `0..k` with `k` colours and pulls the colours
/// back through every contraction: both ends of a contracted pair take the
/// colour of the merged vertex.
pub fn derive_coloring(seq: &ContractionSequence) -> Result<Coloring, ContractionError> {
    if seq.outcome != ContractionOutcome::Complete || !seq.terminal.is_complete() {
        return Err(ContractionError::NotComplete);
    }
    let assignment = seq.terminal_map();
    Ok(Coloring { assignment, color_count: seq.terminal.n() })
}
