//! Trigraphs: vertex sets with a symmetric three-valued adjacency function.
//!
//! A pair of distinct vertices is strongly adjacent (`+1`), semiadjacent or
//! switchable (`0`), or strongly antiadjacent (`-1`). A trigraph without
//! switchable pairs is a graph. Two vertices are *adjacent* when the value is
//! `0` or `+1` and *antiadjacent* when it is `0` or `-1`; a switchable pair is
//! therefore both.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrigraphError {
    #[error("trigraph has {n} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices { n: usize },
    #[error("pair ({u}, {v}) is out of range for {n} vertices")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("pair ({u}, {v}) joins a vertex to itself")]
    SelfPair { u: usize, v: usize },
    #[error("pair ({u}, {v}) is listed more than once")]
    DuplicatePair { u: usize, v: usize },
    #[error("pair ({u}, {v}) has illegal adjacency value {value}")]
    IllegalValue { u: usize, v: usize, value: i64 },
    #[error("pair ({u}, {v}) is not switchable")]
    NotSwitchable { u: usize, v: usize },
    #[error("vertex {v} is out of range for {n} vertices")]
    VertexNotInTrigraph { v: usize, n: usize },
    #[error("trigraphs have different vertex counts ({left} and {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("operation requires a graph, but the trigraph has switchable pairs")]
    NotAGraph,
    #[error("path bound must be positive")]
    ZeroPathBound,
    #[error("path endpoints must be distinct (got {v} twice)")]
    SameEndpoints { v: usize },
}

/// Value of the adjacency function on one pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Adjacency {
    StrongAnti,
    Semi,
    Strong,
}

impl Adjacency {
    pub fn value(self) -> i8 {
        match self {
            Adjacency::StrongAnti => -1,
            Adjacency::Semi => 0,
            Adjacency::Strong => 1,
        }
    }

    pub fn from_value(value: i64) -> Option<Adjacency> {
        match value {
            -1 => Some(Adjacency::StrongAnti),
            0 => Some(Adjacency::Semi),
            1 => Some(Adjacency::Strong),
            _ => None,
        }
    }

    pub fn is_adjacent(self) -> bool {
        self != Adjacency::StrongAnti
    }

    pub fn is_antiadjacent(self) -> bool {
        self != Adjacency::Strong
    }

    pub fn negate(self) -> Adjacency {
        match self {
            Adjacency::StrongAnti => Adjacency::Strong,
            Adjacency::Semi => Adjacency::Semi,
            Adjacency::Strong => Adjacency::StrongAnti,
        }
    }
}

/// Connectivity notion used by [`Trigraph::components`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Connectivity {
    /// Connectivity of the realization with every switchable pair on.
    Connected,
    /// Connectivity of the complement of the realization with every
    /// switchable pair off.
    Anticonnected,
}

/// A trigraph on vertices `0..n`.
///
/// Adjacency is stored as two symmetric bit planes: `strong[v]` holds the
/// strong neighbours of `v` and `semi[v]` the vertices semiadjacent to `v`.
/// Every other pair is strongly antiadjacent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Trigraph {
    n: usize,
    strong: Vec<u32>,
    semi: Vec<u32>,
}

/// An induced subtrigraph together with the map back to the parent's labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub trigraph: Trigraph,
    /// `vertex_map[i]` is the parent vertex that became vertex `i`.
    pub vertex_map: Vec<usize>,
}

impl Induced {
    pub fn lift(&self, v: usize) -> usize {
        self.vertex_map[v]
    }

    pub fn lift_set(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.vertex_map[v]).collect()
    }
}

impl Trigraph {
    /// The edgeless graph on `n` vertices (every pair strongly antiadjacent).
    pub fn new(n: usize) -> Result<Self, TrigraphError> {
        if n > MAX_VERTICES {
            return Err(TrigraphError::TooManyVertices { n });
        }
        Ok(Trigraph { n, strong: vec![0; n], semi: vec![0; n] })
    }

    /// Builds a trigraph from `(u, v, value)` entries with values in
    /// `{-1, 0, 1}`. Unlisted pairs are strongly antiadjacent.
    pub fn from_entries(n: usize, entries: &[(usize, usize, i64)]) -> Result<Self, TrigraphError> {
        let mut t = Trigraph::new(n)?;
        let mut listed = vec![0u32; n];
        for &(u, v, value) in entries {
            t.check_pair(u, v)?;
            let adjacency =
                Adjacency::from_value(value).ok_or(TrigraphError::IllegalValue { u, v, value })?;
            if listed[u] >> v & 1 == 1 {
                return Err(TrigraphError::DuplicatePair { u: u.min(v), v: u.max(v) });
            }
            listed[u] |= 1 << v;
            listed[v] |= 1 << u;
            t.set(u, v, adjacency);
        }
        Ok(t)
    }

    /// A graph on `n` vertices with the given (strong) edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, TrigraphError> {
        let entries: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        Trigraph::from_entries(n, &entries)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), TrigraphError> {
        if u >= self.n || v >= self.n {
            return Err(TrigraphError::VertexOutOfRange { u, v, n: self.n });
        }
        if u == v {
            return Err(TrigraphError::SelfPair { u, v });
        }
        Ok(())
    }

    /// Overwrites the value of one pair.
    ///
    /// # Panics
    /// If `u == v` or either vertex is out of range.
    pub fn set(&mut self, u: usize, v: usize, adjacency: Adjacency) {
        assert!(u < self.n && v < self.n && u != v, "bad pair ({u}, {v})");
        let (bu, bv) = (1u32 << u, 1u32 << v);
        self.strong[u] &= !bv;
        self.strong[v] &= !bu;
        self.semi[u] &= !bv;
        self.semi[v] &= !bu;
        match adjacency {
            Adjacency::Strong => {
                self.strong[u] |= bv;
                self.strong[v] |= bu;
            }
            Adjacency::Semi => {
                self.semi[u] |= bv;
                self.semi[v] |= bu;
            }
            Adjacency::StrongAnti => {}
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn theta(&self, u: usize, v: usize) -> Adjacency {
        debug_assert!(u != v);
        if self.strong[u] >> v & 1 == 1 {
            Adjacency::Strong
        } else if self.semi[u] >> v & 1 == 1 {
            Adjacency::Semi
        } else {
            Adjacency::StrongAnti
        }
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        (self.strong[u] | self.semi[u]) >> v & 1 == 1
    }

    pub fn is_strongly_adjacent(&self, u: usize, v: usize) -> bool {
        self.strong[u] >> v & 1 == 1
    }

    pub fn is_strongly_antiadjacent(&self, u: usize, v: usize) -> bool {
        u != v && !self.is_adjacent(u, v)
    }

    pub fn strong_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.strong[v])
    }

    pub fn semi_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.semi[v])
    }

    /// `N(v)`: vertices adjacent to `v` (strongly or semi).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.strong[v] | self.semi[v])
    }

    /// Vertices antiadjacent to `v` (strongly or semi).
    pub fn antineighbors(&self, v: usize) -> VertexSet {
        self.vertices().without(v) - self.strong_neighbors(v)
    }

    pub fn strong_antineighbors(&self, v: usize) -> VertexSet {
        self.vertices().without(v) - self.neighbors(v)
    }

    pub fn is_graph(&self) -> bool {
        self.semi.iter().all(|&row| row == 0)
    }

    /// `σ(T)`, as pairs `(u, v)` with `u < v` in lexicographic order.
    pub fn switchable_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs_where(|u, v| self.semi[u] >> v & 1 == 1)
    }

    /// `η(T)`, as pairs `(u, v)` with `u < v` in lexicographic order.
    pub fn strong_edges(&self) -> Vec<(usize, usize)> {
        self.pairs_where(|u, v| self.strong[u] >> v & 1 == 1)
    }

    /// Edges of the full realization.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.pairs_where(|u, v| self.is_adjacent(u, v))
    }

    fn pairs_where(&self, keep: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if keep(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The complement: every value is negated, switchable pairs stay switchable.
    pub fn complement(&self) -> Trigraph {
        let all = VertexSet::full(self.n).bits();
        let strong = (0..self.n)
            .map(|v| all & !(1 << v) & !(self.strong[v] | self.semi[v]))
            .collect();
        Trigraph { n: self.n, strong, semi: self.semi.clone() }
    }

    /// `T|X`, reindexed in increasing vertex order.
    pub fn induced(&self, set: VertexSet) -> Result<Induced, TrigraphError> {
        if let Some(v) = (set - self.vertices()).min() {
            return Err(TrigraphError::VertexNotInTrigraph { v, n: self.n });
        }
        let vertex_map = set.to_vec();
        let mut t = Trigraph::new(vertex_map.len())?;
        for (i, &u) in vertex_map.iter().enumerate() {
            for (j, &v) in vertex_map.iter().enumerate().skip(i + 1) {
                let a = self.theta(u, v);
                if a != Adjacency::StrongAnti {
                    t.set(i, j, a);
                }
            }
        }
        Ok(Induced { trigraph: t, vertex_map })
    }

    /// `T \ X`.
    pub fn delete(&self, set: VertexSet) -> Induced {
        self.induced(self.vertices() - set).expect("subset of own vertices")
    }

    /// The realization `G^T_S` with edge set `η(T) ∪ S`.
    pub fn realization(&self, switched_on: &[(usize, usize)]) -> Result<Trigraph, TrigraphError> {
        let mut g = Trigraph { n: self.n, strong: self.strong.clone(), semi: vec![0; self.n] };
        for &(u, v) in switched_on {
            self.check_pair(u, v)?;
            if self.theta(u, v) != Adjacency::Semi {
                return Err(TrigraphError::NotSwitchable { u: u.min(v), v: u.max(v) });
            }
            g.set(u, v, Adjacency::Strong);
        }
        Ok(g)
    }

    /// The realization with every switchable pair on.
    pub fn full_realization(&self) -> Trigraph {
        let strong = (0..self.n).map(|v| self.strong[v] | self.semi[v]).collect();
        Trigraph { n: self.n, strong, semi: vec![0; self.n] }
    }

    /// Whether `self` is a semirealization of `other`: every strong edge and
    /// every strong antiedge of `other` is kept.
    pub fn is_semirealization_of(&self, other: &Trigraph) -> Result<bool, TrigraphError> {
        if self.n != other.n {
            return Err(TrigraphError::SizeMismatch { left: self.n, right: other.n });
        }
        Ok((0..self.n).all(|v| {
            other.strong[v] & !self.strong[v] == 0
                && other.strong_antineighbors(v).is_subset(self.strong_antineighbors(v))
        }))
    }

    /// Partition of `set` into components (or anticomponents), ordered by
    /// their smallest vertex.
    pub fn components(&self, set: VertexSet, mode: Connectivity) -> Vec<VertexSet> {
        let mut remaining = set & self.vertices();
        let mut out = Vec::new();
        while let Some(start) = remaining.min() {
            let mut component = VertexSet::singleton(start);
            let mut frontier = component;
            while let Some(v) = frontier.min() {
                frontier.remove(v);
                let next = self.link(v, mode) & (remaining - component);
                component |= next;
                frontier |= next;
            }
            remaining = remaining - component;
            out.push(component);
        }
        out
    }

    fn link(&self, v: usize, mode: Connectivity) -> VertexSet {
        match mode {
            Connectivity::Connected => self.neighbors(v),
            Connectivity::Anticonnected => self.antineighbors(v),
        }
    }

    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        self.components(set, Connectivity::Connected).len() == 1
    }

    pub fn is_anticonnected_set(&self, set: VertexSet) -> bool {
        self.components(set, Connectivity::Anticonnected).len() == 1
    }

    /// Pairwise adjacent (switchable pairs count as adjacent).
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (set.without(v)).is_subset(self.neighbors(v)))
    }

    pub fn is_strong_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (set.without(v)).is_subset(self.strong_neighbors(v)))
    }

    /// Pairwise strongly antiadjacent.
    pub fn is_strongly_stable(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.neighbors(v).is_disjoint(set))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// Size of a maximum clique of a graph.
    pub fn clique_number(&self) -> Result<usize, TrigraphError> {
        if !self.is_graph() {
            return Err(TrigraphError::NotAGraph);
        }
        let mut best = 0;
        self.grow_clique(0, self.vertices(), &mut best);
        Ok(best)
    }

    fn grow_clique(&self, size: usize, candidates: VertexSet, best: &mut usize) {
        if candidates.is_empty() {
            *best = (*best).max(size);
            return;
        }
        let mut candidates = candidates;
        while let Some(v) = candidates.min() {
            if size + candidates.len() <= *best {
                return;
            }
            candidates.remove(v);
            self.grow_clique(size + 1, candidates & self.strong_neighbors(v), best);
        }
    }

    /// Graph with edge set `σ(T)`; its components with at least two vertices
    /// are the switchable components.
    pub fn switchable_components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = remaining.min() {
            let mut component = VertexSet::singleton(start);
            let mut frontier = component;
            while let Some(v) = frontier.min() {
                frontier.remove(v);
                let next = self.semi_neighbors(v) - component;
                component |= next;
                frontier |= next;
            }
            remaining = remaining - component;
            if component.len() >= 2 {
                out.push(component);
            }
        }
        out
    }

    /// Union of all switchable components.
    pub fn switchable_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.semi[v] != 0).collect()
    }

    /// Appends a vertex that is strongly antiadjacent to everything; returns
    /// its index.
    pub fn add_vertex(&mut self) -> Result<usize, TrigraphError> {
        if self.n == MAX_VERTICES {
            return Err(TrigraphError::TooManyVertices { n: self.n + 1 });
        }
        self.strong.push(0);
        self.semi.push(0);
        self.n += 1;
        Ok(self.n - 1)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Trigraph {
        assert_eq!(perm.len(), self.n);
        let mut t = Trigraph::new(self.n).expect("same size");
        for u in 0..self.n {
            for v in u + 1..self.n {
                let a = self.theta(u, v);
                if a != Adjacency::StrongAnti {
                    t.set(perm[u], perm[v], a);
                }
            }
        }
        t
    }

    /// `(u, v, value)` for every pair that is not strongly antiadjacent, in
    /// lexicographic order.
    pub fn entries(&self) -> Vec<(usize, usize, Adjacency)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let a = self.theta(u, v);
                if a != Adjacency::StrongAnti {
                    out.push((u, v, a));
                }
            }
        }
        out
    }
}

impl fmt::Debug for Trigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Trigraph(n={}", self.n)?;
        for (u, v, a) in self.entries() {
            let tag = if a == Adjacency::Strong { "E" } else { "S" };
            write!(f, ", {u}{tag}{v}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Trigraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            strong: Vec<(usize, usize)>,
            switchable: Vec<(usize, usize)>,
        }
        Repr { n: self.n, strong: self.strong_edges(), switchable: self.switchable_pairs() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Trigraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            strong: Vec<(usize, usize)>,
            switchable: Vec<(usize, usize)>,
        }
        let r = Repr::deserialize(deserializer)?;
        let entries: Vec<(usize, usize, i64)> = r
            .strong
            .iter()
            .map(|&(u, v)| (u, v, 1))
            .chain(r.switchable.iter().map(|&(u, v)| (u, v, 0)))
            .collect();
        Trigraph::from_entries(r.n, &entries).map_err(serde::de::Error::custom)
    }
}

/// Named small graphs used throughout the tests and examples.
pub mod named {
    use super::Trigraph;

    /// The cycle `v0 - v1 - .. - v(n-1) - v0`.
    pub fn cycle(n: usize) -> Trigraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Trigraph::from_edges(n, &edges).expect("valid cycle")
    }

    /// The path `v0 - v1 - .. - v(n-1)`.
    pub fn path(n: usize) -> Trigraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Trigraph::from_edges(n, &edges).expect("valid path")
    }

    pub fn complete(n: usize) -> Trigraph {
        Trigraph::new(n).expect("size").complement()
    }

    pub fn empty(n: usize) -> Trigraph {
        Trigraph::new(n).expect("size")
    }

    /// Triangles `{0,2,4}` and `{1,3,5}` joined by the matching `03, 14, 25`
    /// (the complement of the 6-cycle).
    pub fn triangular_prism() -> Trigraph {
        cycle(6).complement()
    }
}
