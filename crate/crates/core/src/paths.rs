//! Paths in trigraphs.
//!
//! A path `p1 - .. - pk` has consecutive vertices adjacent and every other
//! pair antiadjacent. In a graph these are exactly the induced paths.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::trigraph::{Trigraph, TrigraphError};
use crate::vertex_set::VertexSet;

/// Default cap on the number of paths [`enumerate_paths`] will collect.
pub const DEFAULT_MAX_PATHS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(length: usize) -> Parity {
        if length.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
}

impl PathWitness {
    pub fn new(vertices: Vec<usize>) -> Self {
        PathWitness { vertices }
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.length())
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("nonempty path")
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().collect()
    }

    /// `P*`, the vertices other than the two ends.
    pub fn interior(&self) -> VertexSet {
        match self.vertices.len() {
            0..=2 => VertexSet::EMPTY,
            k => self.vertices[1..k - 1].iter().collect(),
        }
    }

    /// Checks the path conditions against `t`.
    pub fn is_valid_in(&self, t: &Trigraph) -> bool {
        let vs = &self.vertices;
        if vs.is_empty() || vs.iter().any(|&v| v >= t.n()) || self.vertex_set().len() != vs.len() {
            return false;
        }
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                let a = t.theta(vs[i], vs[j]);
                let ok = if j == i + 1 { a.is_adjacent() } else { a.is_antiadjacent() };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

/// Result of [`enumerate_paths`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathEnumeration {
    pub paths: Vec<PathWitness>,
    /// Set when more than `max_count` paths exist; `paths` then holds the
    /// first `max_count` of them.
    pub truncated: bool,
}

/// All paths from `u` to `v`, in lexicographic order of vertex sequences.
pub fn enumerate_paths(
    t: &Trigraph,
    u: usize,
    v: usize,
    max_count: usize,
) -> Result<PathEnumeration, TrigraphError> {
    if max_count == 0 {
        return Err(TrigraphError::ZeroPathBound);
    }
    for w in [u, v] {
        if w >= t.n() {
            return Err(TrigraphError::VertexNotInTrigraph { v: w, n: t.n() });
        }
    }
    if u == v {
        return Err(TrigraphError::SameEndpoints { v: u });
    }
    let mut paths = Vec::new();
    let mut truncated = false;
    let interior = t.vertices().without(u).without(v);
    let _ = walk_paths(t, u, VertexSet::singleton(v), interior, &mut |p| {
        if paths.len() == max_count {
            truncated = true;
            return ControlFlow::Break(());
        }
        paths.push(PathWitness::new(p.to_vec()));
        ControlFlow::Continue(())
    });
    Ok(PathEnumeration { paths, truncated })
}

/// Depth-first walk over every path that starts at `start`, ends in
/// `targets` and has all interior vertices in `interior`.
///
/// Neighbours are tried in increasing order, so paths are reported in
/// lexicographic order. `start` itself is never reported as a path of
/// length zero.
pub fn walk_paths<F>(
    t: &Trigraph,
    start: usize,
    targets: VertexSet,
    interior: VertexSet,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut path = vec![start];
    extend(t, &mut path, VertexSet::singleton(start), VertexSet::EMPTY, targets, interior, visit)
}

fn extend<F>(
    t: &Trigraph,
    path: &mut Vec<usize>,
    used: VertexSet,
    blocked: VertexSet,
    targets: VertexSet,
    interior: VertexSet,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let last = *path.last().expect("nonempty");
    // `blocked` holds strong neighbours of every vertex except the last one:
    // those can never follow without creating a chord.
    let candidates = (t.neighbors(last) - used - blocked) & (targets | interior);
    let next_blocked = blocked | t.strong_neighbors(last);
    for w in candidates {
        path.push(w);
        if targets.contains(w) {
            visit(path)?;
        }
        if interior.contains(w) {
            extend(t, path, used.with(w), next_blocked, targets, interior, visit)?;
        }
        path.pop();
    }
    ControlFlow::Continue(())
}

/// Reference generator used to cross-check [`enumerate_paths`]: builds every
/// sequence of distinct vertices from `u` to `v` and keeps those that satisfy
/// the path conditions.
pub fn brute_force_paths(t: &Trigraph, u: usize, v: usize) -> Vec<PathWitness> {
    fn rec(t: &Trigraph, seq: &mut Vec<usize>, v: usize, out: &mut Vec<PathWitness>) {
        let last = *seq.last().unwrap();
        if last == v {
            let p = PathWitness::new(seq.clone());
            if p.is_valid_in(t) {
                out.push(p);
            }
            return;
        }
        for w in 0..t.n() {
            if !seq.contains(&w) {
                seq.push(w);
                rec(t, seq, v, out);
                seq.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(t, &mut vec![u], v, &mut out);
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out
}
