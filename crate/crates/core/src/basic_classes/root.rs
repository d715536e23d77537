//! Bipartite root graphs of line trigraphs: reconstruction, good pairs and
//! the structural checks on roots.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::trigraph::{Adjacency, Trigraph};
use crate::vertex_set::VertexSet;

/// A simple graph on at most 64 vertices, used for roots of line trigraphs
/// (which can have up to twice as many vertices as the trigraph).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adj: Vec<u64>,
}

impl RootGraph {
    /// Builds a graph from an edge list; duplicate edges and loops are
    /// rejected with `None`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Option<RootGraph> {
        if n > 64 {
            return None;
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v || u >= n || v >= n || adj[u] >> v & 1 == 1 {
                return None;
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            list.push((u.min(v), u.max(v)));
        }
        Some(RootGraph { n, edges: list, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in insertion order; edge `i` is vertex `i` of the line graph.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    fn index_of(&self, e: (usize, usize)) -> Option<usize> {
        let e = (e.0.min(e.1), e.0.max(e.1));
        self.edges.iter().position(|&f| f == e)
    }

    /// A proper 2-colouring as the mask of side `A` (each component's
    /// smallest vertex goes to `A`), or `None` if not bipartite.
    pub fn bipartition(&self) -> Option<u64> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(true);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].expect("coloured");
                for w in self.neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(d) if d == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.iter().enumerate().filter(|(_, c)| **c == Some(true)).fold(0, |m, (v, _)| m | 1 << v))
    }

    /// Whether `from` reaches `to` avoiding the vertices in `blocked`.
    fn reaches(&self, from: usize, to: usize, blocked: u64) -> bool {
        if blocked >> from & 1 == 1 || blocked >> to & 1 == 1 {
            return false;
        }
        let mut seen = 1u64 << from;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= !seen & !blocked;
            if next >> to & 1 == 1 {
                return true;
            }
            seen |= next;
            frontier = next;
        }
        from == to
    }

    fn components(&self, within: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut remaining = within;
        while remaining != 0 {
            let s = remaining.trailing_zeros() as usize;
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                next &= within & !comp;
                comp |= next;
                frontier = next;
            }
            remaining &= !comp;
            out.push(comp);
        }
        out
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A bipartite root `H` with a map from trigraph vertices to edges of `H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineRoot {
    pub graph: RootGraph,
    /// Bitmask of side `A` of the bipartition.
    pub side_a: u64,
}

impl LineRoot {
    /// `None` if `graph` is not bipartite.
    pub fn new(graph: RootGraph) -> Option<LineRoot> {
        let side_a = graph.bipartition()?;
        Some(LineRoot { graph, side_a })
    }

    pub fn in_a(&self, v: usize) -> bool {
        self.side_a >> v & 1 == 1
    }

    /// The edge written as `(a, b)` with `a ∈ A`.
    pub fn oriented(&self, e: (usize, usize)) -> (usize, usize) {
        if self.in_a(e.0) {
            e
        } else {
            (e.1, e.0)
        }
    }

    /// Trigraph vertex represented by the root edge `e`.
    pub fn vertex_of(&self, e: (usize, usize)) -> Option<usize> {
        self.graph.index_of(e)
    }

    /// The line graph `L(H)`, vertex `i` being edge `i` of `H`.
    pub fn line_graph(&self) -> Trigraph {
        line_graph(&self.graph).expect("root edges are within the trigraph bound")
    }
}

/// `L(H)` as a graph; `None` if `H` has more than 32 edges.
pub fn line_graph(h: &RootGraph) -> Option<Trigraph> {
    let m = h.edges().len();
    let mut t = Trigraph::new(m).ok()?;
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = h.edges()[i];
            let (c, d) = h.edges()[j];
            if a == c || a == d || b == c || b == d {
                t.set(i, j, Adjacency::Strong);
            }
        }
    }
    Some(t)
}

/// Reconstructs a bipartite root of the full realization of `t`.
///
/// In the line graph of a triangle-free graph every triangle comes from a
/// star, so the clique holding an edge `uv` must be `{u, v}` together with
/// all their common neighbours. This makes the clique partition forced; the
/// result is then checked by rebuilding the line graph.
pub fn reconstruct_root(t: &Trigraph) -> Option<LineRoot> {
    let g = t.full_realization();
    let n = g.n();
    let mut cliques: Vec<VertexSet> = Vec::new();
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut covered = vec![VertexSet::EMPTY; n];
    for (u, v) in g.edges() {
        if covered[u].contains(v) {
            continue;
        }
        let clique = (g.neighbors(u) & g.neighbors(v)).with(u).with(v);
        if !g.is_clique(clique) {
            return None;
        }
        for w in clique {
            if membership[w].len() == 2 || !(covered[w] & clique).is_empty() {
                return None;
            }
        }
        for w in clique {
            membership[w].push(cliques.len());
            covered[w] |= clique.without(w);
        }
        cliques.push(clique);
    }
    if (0..n).any(|v| covered[v] != g.neighbors(v)) {
        return None;
    }
    // Root vertices: one per clique, then a private end for every trigraph
    // vertex lying in fewer than two cliques.
    let mut next = cliques.len();
    let mut edges = Vec::with_capacity(n);
    for m in membership.iter() {
        let ends: Vec<usize> = match m.len() {
            2 => vec![m[0], m[1]],
            1 => {
                next += 1;
                vec![m[0], next - 1]
            }
            _ => {
                next += 2;
                vec![next - 2, next - 1]
            }
        };
        edges.push((ends[0], ends[1]));
    }
    let graph = RootGraph::from_edges(next, &edges)?;
    let root = LineRoot::new(graph)?;
    (root.line_graph() == g).then_some(root)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GoodPairMethod {
    /// Two edges in different components of the root.
    SeparateComponents,
    /// The two ends of a path `a1-b1-a2-b2` in an acyclic root.
    TreePath,
    /// Edges of a longest cycle, or the end edges of a minimal subpath
    /// spanned by a chord path.
    LongCycle,
    /// Opposite edges of a 4-cycle, or an edge paired with one of them.
    FourCycle,
    /// Edges in different components once the forbidden vertices are removed.
    SeparatedByForbidden,
    /// Scan over all pairs of disjoint edges; used only if every case above
    /// fails to produce a verified pair.
    Scan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodPairWitness {
    /// `(a1, b1)` and `(a2, b2)` with `a1, a2` on side `A`.
    pub edges: ((usize, usize), (usize, usize)),
    /// The trigraph vertices representing the two edges.
    pub line_vertices: (usize, usize),
    pub method: GoodPairMethod,
}

/// Checks the good-pair conditions: every `a1`–`a2` path meets `{b1, b2}`
/// and every `b1`–`b2` path meets `{a1, a2}`.
pub fn is_good_pair(root: &LineRoot, e1: (usize, usize), e2: (usize, usize)) -> bool {
    let ((a1, b1), (a2, b2)) = (e1, e2);
    let h = &root.graph;
    let distinct = [a1, b1, a2, b2].iter().fold(0u64, |m, &v| m | 1 << v).count_ones() == 4;
    distinct
        && h.has_edge(a1, b1)
        && h.has_edge(a2, b2)
        && root.in_a(a1)
        && root.in_a(a2)
        && !h.reaches(a1, a2, 1 << b1 | 1 << b2)
        && !h.reaches(b1, b2, 1 << a1 | 1 << a2)
}

/// Finds a good pair of `root` whose edges avoid `forbidden` (root vertex
/// mask), following the case analysis on the cycle structure of the root:
/// separate components, acyclic roots, a longest cycle of length at least
/// six, or only 4-cycles. Every candidate is checked with [`is_good_pair`].
///
/// Returns `None` when no pair of disjoint edges avoids `forbidden` with
/// both ends distinct, e.g. when the line graph is complete.
pub fn find_good_pair(root: &LineRoot, forbidden: u64) -> Option<GoodPairWitness> {
    let h = &root.graph;
    let usable: Vec<(usize, usize)> = h
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| forbidden >> u & 1 == 0 && forbidden >> v & 1 == 0)
        .map(|e| root.oriented(e))
        .collect();
    let mut candidates: Vec<((usize, usize), (usize, usize), GoodPairMethod)> = Vec::new();

    let all_vertices = (0..h.n()).fold(0u64, |m, v| if h.degree(v) > 0 { m | 1 << v } else { m });
    let comps = h.components(all_vertices);
    push_cross_component(&comps, &usable, GoodPairMethod::SeparateComponents, &mut candidates);

    let cycles = simple_cycles(h);
    let longest = cycles.iter().map(Vec::len).max().unwrap_or(0);
    if longest == 0 {
        tree_candidates(root, &usable, &mut candidates);
    } else if longest >= 6 {
        for c in cycles.iter().filter(|c| c.len() == longest) {
            long_cycle_candidates(root, c, forbidden, &mut candidates);
        }
    } else {
        four_cycle_candidates(root, &cycles, &usable, &mut candidates);
    }

    let remaining = all_vertices & !forbidden;
    let comps = h.components(remaining);
    push_cross_component(&comps, &usable, GoodPairMethod::SeparatedByForbidden, &mut candidates);

    let witness = |e1: (usize, usize), e2: (usize, usize), method| {
        let (u, v) = (root.vertex_of(e1).expect("root edge"), root.vertex_of(e2).expect("root edge"));
        let (edges, line_vertices) = if u < v { ((e1, e2), (u, v)) } else { ((e2, e1), (v, u)) };
        GoodPairWitness { edges, line_vertices, method }
    };
    for (e1, e2, method) in candidates {
        if is_good_pair(root, e1, e2) {
            return Some(witness(e1, e2, method));
        }
    }
    for (i, &e1) in usable.iter().enumerate() {
        for &e2 in &usable[i + 1..] {
            for (x, y) in [(e1, e2), (e2, e1)] {
                if is_good_pair(root, x, y) {
                    return Some(witness(x, y, GoodPairMethod::Scan));
                }
            }
        }
    }
    None
}

fn push_cross_component(
    comps: &[u64],
    usable: &[(usize, usize)],
    method: GoodPairMethod,
    out: &mut Vec<((usize, usize), (usize, usize), GoodPairMethod)>,
) {
    let comp_of = |v: usize| comps.iter().position(|&c| c >> v & 1 == 1);
    for (i, &e1) in usable.iter().enumerate() {
        for &e2 in &usable[i + 1..] {
            if comp_of(e1.0) != comp_of(e2.0) {
                out.push((e1, e2, method));
            }
        }
    }
}

fn tree_candidates(
    root: &LineRoot,
    usable: &[(usize, usize)],
    out: &mut Vec<((usize, usize), (usize, usize), GoodPairMethod)>,
) {
    // a1 - b1 - a2 - b2: the middle edge is (a2, b1).
    let h = &root.graph;
    for &(a2, b1) in usable {
        for &(a1, b) in usable {
            if b != b1 || a1 == a2 {
                continue;
            }
            for &(a, b2) in usable {
                if a == a2 && b2 != b1 && h.has_edge(a2, b2) {
                    out.push(((a1, b1), (a2, b2), GoodPairMethod::TreePath));
                }
            }
        }
    }
}

/// Every simple cycle of `h` as a vertex sequence starting at its smallest
/// vertex, each cycle listed once.
fn simple_cycles(h: &RootGraph) -> Vec<Vec<usize>> {
    fn extend(h: &RootGraph, path: &mut Vec<usize>, used: u64, out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().expect("nonempty");
        for w in h.neighbors(last) {
            if w == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            if w > start && used >> w & 1 == 0 {
                path.push(w);
                extend(h, path, used | 1 << w, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..h.n() {
        extend(h, &mut vec![s], 1 << s, &mut out);
    }
    out
}

fn cycle_edge(root: &LineRoot, c: &[usize], i: usize) -> (usize, usize) {
    root.oriented((c[i], c[(i + 1) % c.len()]))
}

fn long_cycle_candidates(
    root: &LineRoot,
    c: &[usize],
    forbidden: u64,
    out: &mut Vec<((usize, usize), (usize, usize), GoodPairMethod)>,
) {
    let h = &root.graph;
    let k = c.len();
    let on_cycle = c.iter().fold(0u64, |m, &v| m | 1 << v);
    let ok = |e: (usize, usize)| forbidden >> e.0 & 1 == 0 && forbidden >> e.1 & 1 == 0;
    let chord = |i: usize, j: usize| -> bool {
        let (u, v) = (c[i], c[j]);
        let consecutive = (i + 1) % k == j || (j + 1) % k == i;
        if h.has_edge(u, v) && !consecutive {
            return true;
        }
        // A path of length at least two with interior off the cycle.
        h.neighbors(u).any(|w| on_cycle >> w & 1 == 0 && h.reaches(w, v, on_cycle & !(1 << v)))
            || h.neighbors(u).any(|w| on_cycle >> w & 1 == 0 && h.has_edge(w, v))
    };
    let mut chords = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if chord(i, j) {
                chords.push((i, j));
            }
        }
    }
    if chords.is_empty() {
        // Edges i and j are consistently oriented around the cycle when the
        // side-A end comes first in the same direction for both.
        for i in 0..k {
            for j in i + 2..k {
                if (j + 1) % k == i {
                    continue;
                }
                let (e1, e2) = (cycle_edge(root, c, i), cycle_edge(root, c, j));
                let same_direction = (e1.0 == c[i]) == (e2.0 == c[j]);
                if same_direction && ok(e1) && ok(e2) {
                    out.push((e1, e2, GoodPairMethod::LongCycle));
                }
            }
        }
        return;
    }
    for &(i, j) in &chords {
        // The two arcs of the cycle between positions i and j.
        let forward: Vec<usize> = (i..=j).map(|p| c[p]).collect();
        let backward: Vec<usize> = (j..=i + k).map(|p| c[p % k]).collect();
        for arc in [forward, backward] {
            if arc.iter().any(|&v| forbidden >> v & 1 == 1) {
                continue;
            }
            if let Some((e1, e2)) = minimal_spanned_subpath(root, c, &arc, &chord_positions(c, &chords)) {
                out.push((e1, e2, GoodPairMethod::LongCycle));
            }
        }
    }
}

fn chord_positions(c: &[usize], chords: &[(usize, usize)]) -> Vec<(usize, usize)> {
    chords.iter().map(|&(i, j)| (c[i], c[j])).collect()
}

/// Shortest subpath of `arc` of length at least three whose ends are joined
/// by a chord path; returns its first and last edges, oriented.
fn minimal_spanned_subpath(
    root: &LineRoot,
    _cycle: &[usize],
    arc: &[usize],
    chords: &[(usize, usize)],
) -> Option<((usize, usize), (usize, usize))> {
    let joined = |u: usize, v: usize| chords.iter().any(|&(x, y)| (x, y) == (u, v) || (y, x) == (u, v));
    for len in 3..arc.len() {
        for s in 0..arc.len() - len {
            let (p, q) = (arc[s], arc[s + len]);
            if joined(p, q) {
                let mut sub: Vec<usize> = arc[s..=s + len].to_vec();
                if !root.in_a(sub[0]) {
                    sub.reverse();
                }
                let n = sub.len();
                return Some(((sub[0], sub[1]), (sub[n - 2], sub[n - 1])));
            }
        }
    }
    None
}

fn four_cycle_candidates(
    root: &LineRoot,
    cycles: &[Vec<usize>],
    usable: &[(usize, usize)],
    out: &mut Vec<((usize, usize), (usize, usize), GoodPairMethod)>,
) {
    for c in cycles.iter().filter(|c| c.len() == 4) {
        let e: Vec<(usize, usize)> = (0..4).map(|i| cycle_edge(root, c, i)).collect();
        for (x, y) in [(e[0], e[2]), (e[1], e[3])] {
            if usable.contains(&x) && usable.contains(&y) {
                out.push((x, y, GoodPairMethod::FourCycle));
            }
        }
    }
    for c in cycles.iter().filter(|c| c.len() == 4) {
        for i in 0..4 {
            let e = cycle_edge(root, c, i);
            if !usable.contains(&e) {
                continue;
            }
            for &f in usable {
                if f.0 != e.0 && f.1 != e.1 {
                    out.push((f, e, GoodPairMethod::FourCycle));
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenTheta {
    pub ends: (usize, usize),
    pub paths: [Vec<usize>; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootReport {
    pub bipartite: bool,
    pub even_theta: Option<EvenTheta>,
    pub k4_minor: bool,
}

impl RootReport {
    pub fn is_clean(&self) -> bool {
        self.bipartite && self.even_theta.is_none() && !self.k4_minor
    }
}

/// Looks for an even theta subgraph and a `K4` minor in `h`.
pub fn verify_root_properties(h: &RootGraph) -> RootReport {
    let side = h.bipartition();
    RootReport {
        bipartite: side.is_some(),
        even_theta: side.and_then(|a| find_even_theta(h, a)),
        k4_minor: has_k4_minor(h),
    }
}

/// In a bipartite graph every path between two vertices of the same side
/// is even, so an even theta is a same-side pair joined by three internally
/// disjoint paths. Paths are searched exhaustively.
fn find_even_theta(h: &RootGraph, side_a: u64) -> Option<EvenTheta> {
    for s in 0..h.n() {
        for t in s + 1..h.n() {
            if (side_a >> s & 1) != (side_a >> t & 1) || h.degree(s) < 3 || h.degree(t) < 3 {
                continue;
            }
            let mut chosen: Vec<Vec<usize>> = Vec::new();
            if three_disjoint_paths(h, s, t, 0, &mut chosen) {
                let paths = [chosen[0].clone(), chosen[1].clone(), chosen[2].clone()];
                return Some(EvenTheta { ends: (s, t), paths });
            }
        }
    }
    None
}

fn three_disjoint_paths(h: &RootGraph, s: usize, t: usize, used: u64, chosen: &mut Vec<Vec<usize>>) -> bool {
    if chosen.len() == 3 {
        return true;
    }
    let mut found = false;
    let mut path = vec![s];
    all_paths(h, s, t, used | 1 << s, &mut path, &mut |p| {
        // Paths are generated in a fixed order; requiring the first interior
        // vertex to increase avoids revisiting permutations.
        if let Some(prev) = chosen.last() {
            if p[1] <= prev[1] {
                return false;
            }
        }
        let interior = p[1..p.len() - 1].iter().fold(0u64, |m, &v| m | 1 << v);
        chosen.push(p.to_vec());
        if three_disjoint_paths(h, s, t, used | interior, chosen) {
            found = true;
            return true;
        }
        chosen.pop();
        false
    });
    found
}

fn all_paths(
    h: &RootGraph,
    v: usize,
    t: usize,
    used: u64,
    path: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    for w in h.neighbors(v) {
        if w == t {
            path.push(t);
            let stop = visit(path);
            path.pop();
            if stop {
                return true;
            }
        } else if used >> w & 1 == 0 {
            path.push(w);
            let stop = all_paths(h, w, t, used | 1 << w, path, visit);
            path.pop();
            if stop {
                return true;
            }
        }
    }
    false
}

/// A simple graph has no `K4` minor iff repeatedly deleting vertices of
/// degree at most one and suppressing vertices of degree two (merging
/// parallel edges) empties it.
pub fn has_k4_minor(h: &RootGraph) -> bool {
    let mut adj = h.adj.clone();
    let mut alive: u64 = (0..h.n()).fold(0, |m, v| m | 1 << v);
    loop {
        let Some(v) = bits(alive).find(|&v| adj[v].count_ones() <= 2) else {
            return alive != 0;
        };
        let nbrs: Vec<usize> = bits(adj[v]).collect();
        for &w in &nbrs {
            adj[w] &= !(1 << v);
        }
        if let [a, b] = nbrs[..] {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj[v] = 0;
        alive &= !(1 << v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trigraph::named::*;

    fn root(n: usize, edges: &[(usize, usize)]) -> LineRoot {
        LineRoot::new(RootGraph::from_edges(n, edges).unwrap()).unwrap()
    }

    #[test]
    fn path_root_has_the_tree_pair() {
        // a1=0 - b1=1 - a2=2 - b2=3.
        let r = root(4, &[(0, 1), (1, 2), (2, 3)]);
        let w = find_good_pair(&r, 0).unwrap();
        assert_eq!(w.edges, ((0, 1), (2, 3)));
        assert_eq!(w.method, GoodPairMethod::TreePath);
        assert_eq!(w.line_vertices, (0, 2));
    }

    #[test]
    fn four_cycle_root_has_opposite_edges() {
        let r = root(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let w = find_good_pair(&r, 0).unwrap();
        assert_eq!(w.method, GoodPairMethod::FourCycle);
        assert_eq!(w.edges, ((0, 1), (2, 3)));
    }

    #[test]
    fn star_root_has_no_good_pair() {
        let r = root(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(find_good_pair(&r, 0).is_none());
    }

    #[test]
    fn c8_root_uses_the_long_cycle() {
        let edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        let r = root(8, &edges);
        let w = find_good_pair(&r, 0).unwrap();
        assert_eq!(w.method, GoodPairMethod::LongCycle);
        assert!(is_good_pair(&r, w.edges.0, w.edges.1));
    }

    #[test]
    fn roots_are_reconstructed() {
        // C6 is the line graph of C6.
        let r = reconstruct_root(&cycle(6)).unwrap();
        assert_eq!(r.graph.edges().len(), 6);
        assert_eq!(r.line_graph(), cycle(6));
        // The prism is L(K_{2,3}).
        let r = reconstruct_root(&triangular_prism()).unwrap();
        let degrees: Vec<usize> = (0..r.graph.n()).map(|v| r.graph.degree(v)).collect();
        assert_eq!(r.graph.n(), 5);
        assert_eq!(degrees.iter().filter(|&&d| d == 3).count(), 2);
        assert_eq!(degrees.iter().filter(|&&d| d == 2).count(), 3);
        // K_{1,3} is not a line graph; C5 only has an odd root.
        let claw = Trigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(reconstruct_root(&claw).is_none());
        assert!(reconstruct_root(&cycle(5)).is_none());
        assert!(reconstruct_root(&empty(2)).is_some());
    }

    #[test]
    fn root_properties() {
        let k23 = RootGraph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let report = verify_root_properties(&k23);
        assert_eq!(report.even_theta.as_ref().map(|t| t.ends), Some((0, 1)));
        assert!(!report.k4_minor);
        let c8: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        assert!(verify_root_properties(&RootGraph::from_edges(8, &c8).unwrap()).is_clean());
        let tree = RootGraph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert!(verify_root_properties(&tree).is_clean());
        let k4 = RootGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(has_k4_minor(&k4));
        // K_{3,3} contains a K4 minor.
        let k33: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        assert!(has_k4_minor(&RootGraph::from_edges(6, &k33).unwrap()));
    }
}
