//! Star cutsets, skew-partitions, 2-joins and blocks of decomposition.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::berge::{is_berge, HoleWitness};
use crate::paths::{walk_paths, Parity};
use crate::trigraph::{Adjacency, Connectivity, Trigraph};
use crate::vertex_set::{for_each_subset_lex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("trigraph is not Berge")]
    NotBerge { witness: HoleWitness },
    #[error("2-join is not proper")]
    NotProper,
    #[error("paths across the 2-join have both parities")]
    MixedParity,
    #[error("side must be 1 or 2, got {side}")]
    BadSide { side: u8 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewSplit {
    pub a1: VertexSet,
    pub a2: VertexSet,
    pub b1: VertexSet,
    pub b2: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewPartitionWitness {
    pub a: VertexSet,
    pub b: VertexSet,
    pub split: SkewSplit,
    pub balanced: bool,
    /// Smallest vertex forming an anticomponent of `B` on its own, if any.
    pub star: Option<usize>,
}

impl SkewPartitionWitness {
    /// Re-checks the witness against `t`.
    pub fn is_valid_in(&self, t: &Trigraph) -> bool {
        let s = &self.split;
        let Some(expected) = skew_partition(t, self.a) else {
            return false;
        };
        self.b == expected.b
            && self.balanced == expected.balanced
            && self.star == expected.star
            && [s.a1, s.a2, s.b1, s.b2].iter().all(|x| !x.is_empty())
            && s.a1 | s.a2 == self.a
            && s.a1.is_disjoint(s.a2)
            && s.b1 | s.b2 == self.b
            && s.b1.is_disjoint(s.b2)
            && s.a1.iter().all(|u| s.a2.iter().all(|v| t.is_strongly_antiadjacent(u, v)))
            && s.b1.iter().all(|u| s.b2.iter().all(|v| t.is_strongly_adjacent(u, v)))
    }
}

/// The skew-partition `(A, V \ A)` if it is one.
pub fn skew_partition(t: &Trigraph, a: VertexSet) -> Option<SkewPartitionWitness> {
    let b = t.vertices() - a;
    let components = t.components(a, Connectivity::Connected);
    if components.len() < 2 {
        return None;
    }
    let anticomponents = t.components(b, Connectivity::Anticonnected);
    if anticomponents.len() < 2 {
        return None;
    }
    let split = SkewSplit {
        a1: components[0],
        a2: a - components[0],
        b1: anticomponents[0],
        b2: b - anticomponents[0],
    };
    let star = anticomponents.iter().filter(|c| c.len() == 1).filter_map(|c| c.min()).min();
    Some(SkewPartitionWitness { a, b, split, balanced: is_balanced(t, a, b), star })
}

/// No odd path of length at least three with ends in `b` and interior in
/// `a`, and the same for antipaths with the roles swapped.
fn is_balanced(t: &Trigraph, a: VertexSet, b: VertexSet) -> bool {
    !has_long_odd_path(t, b, a) && !has_long_odd_path(&t.complement(), a, b)
}

fn has_long_odd_path(t: &Trigraph, ends: VertexSet, interior: VertexSet) -> bool {
    ends.iter().any(|u| {
        let later = ends - VertexSet::full(u + 1);
        walk_paths(t, u, later, interior, &mut |p| {
            if p.len() >= 4 && p.len() % 2 == 0 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .is_break()
    })
}

/// First star cutset, scanning centres `v` in increasing order and, for
/// each, sets `B = {v} ∪ S` with `S` a nonempty set of strong neighbours of
/// `v` in lexicographic order.
pub fn find_star_cutset(t: &Trigraph) -> Option<SkewPartitionWitness> {
    for v in t.vertices() {
        let mut found = None;
        for_each_subset_lex(t.strong_neighbors(v), |s| {
            if s.is_empty() {
                return false;
            }
            found = skew_partition(t, t.vertices() - s.with(v));
            found.is_some()
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Every skew-partition `(A, B)`, in increasing order of the bitmask of `A`.
pub fn skew_partitions(t: &Trigraph) -> impl Iterator<Item = SkewPartitionWitness> + '_ {
    let n = t.n();
    (1u32..(1u32 << n).wrapping_sub(1).max(1)).filter_map(move |mask| skew_partition(t, VertexSet::from_bits(mask)))
}

/// First balanced skew-partition in increasing order of the bitmask of `A`.
pub fn find_balanced_skew_partition(t: &Trigraph) -> Option<SkewPartitionWitness> {
    skew_partitions(t).find(|w| w.balanced)
}

pub fn has_balanced_skew_partition(t: &Trigraph) -> bool {
    find_balanced_skew_partition(t).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoJoinSplit {
    pub a1: VertexSet,
    pub b1: VertexSet,
    pub c1: VertexSet,
    pub a2: VertexSet,
    pub b2: VertexSet,
    pub c2: VertexSet,
    /// Common parity of the `A_i`–`B_i` paths with interior in `C_i`;
    /// `None` when both parities occur.
    pub parity: Option<Parity>,
    pub proper: bool,
}

impl TwoJoinSplit {
    pub fn x1(&self) -> VertexSet {
        self.a1 | self.b1 | self.c1
    }

    pub fn x2(&self) -> VertexSet {
        self.a2 | self.b2 | self.c2
    }

    /// `(A_i, B_i, C_i)` for side 1 or 2.
    pub fn side(&self, side: u8) -> (VertexSet, VertexSet, VertexSet) {
        if side == 1 {
            (self.a1, self.b1, self.c1)
        } else {
            (self.a2, self.b2, self.c2)
        }
    }

    /// The same 2-join with the two sides exchanged.
    pub fn swapped(&self) -> TwoJoinSplit {
        TwoJoinSplit {
            a1: self.a2,
            b1: self.b2,
            c1: self.c2,
            a2: self.a1,
            b2: self.b1,
            c2: self.c1,
            parity: self.parity,
            proper: self.proper,
        }
    }

    /// Checks every condition of the 2-join definition against `t`, and the
    /// recorded properness flag.
    pub fn is_valid_in(&self, t: &Trigraph) -> bool {
        let sets = [self.a1, self.b1, self.c1, self.a2, self.b2, self.c2];
        let mut union = VertexSet::EMPTY;
        for s in sets {
            if !union.is_disjoint(s) {
                return false;
            }
            union |= s;
        }
        if union != t.vertices() || [self.a1, self.b1, self.a2, self.b2].iter().any(|s| s.is_empty()) {
            return false;
        }
        let (x1, x2) = (self.x1(), self.x2());
        for u in x1 {
            for v in x2 {
                let expected_strong = (self.a1.contains(u) && self.a2.contains(v))
                    || (self.b1.contains(u) && self.b2.contains(v));
                let expected = if expected_strong { Adjacency::Strong } else { Adjacency::StrongAnti };
                if t.theta(u, v) != expected {
                    return false;
                }
            }
        }
        [1, 2].iter().all(|&side| {
            let (a, b, c) = self.side(side);
            (a | b | c).len() >= 3 && !is_degenerate_side(t, a, b, c)
        }) && self.proper == is_proper(t, self)
    }
}

/// `|A| = |B| = 1` and the full realization of `T|X` is a path of length two.
fn is_degenerate_side(t: &Trigraph, a: VertexSet, b: VertexSet, c: VertexSet) -> bool {
    let x = a | b | c;
    if a.len() != 1 || b.len() != 1 || x.len() != 3 {
        return false;
    }
    let edges: usize = x.iter().map(|v| (t.neighbors(v) & x).len()).sum::<usize>() / 2;
    edges == 2
}

fn is_proper(t: &Trigraph, s: &TwoJoinSplit) -> bool {
    [1, 2].iter().all(|&side| {
        let (a, b, c) = s.side(side);
        t.components(a | b | c, Connectivity::Connected)
            .iter()
            .all(|comp| !comp.is_disjoint(a) && !comp.is_disjoint(b))
    })
}

/// Parity of the paths from `a` to `b` with interior in `c`; `None` if both
/// parities occur or there is no such path.
fn side_parity(t: &Trigraph, a: VertexSet, b: VertexSet, c: VertexSet) -> Option<Option<Parity>> {
    let mut seen: Option<Parity> = None;
    let mut mixed = false;
    for u in a {
        let _ = walk_paths(t, u, b, c, &mut |p| {
            let parity = Parity::of(p.len() - 1);
            match seen {
                None => seen = Some(parity),
                Some(q) if q != parity => {
                    mixed = true;
                    return ControlFlow::Break(());
                }
                _ => {}
            }
            ControlFlow::Continue(())
        });
        if mixed {
            return Some(None);
        }
    }
    seen.map(Some)
}

fn combined_parity(t: &Trigraph, s: &TwoJoinSplit) -> Option<Parity> {
    let p1 = side_parity(t, s.a1, s.b1, s.c1)?;
    let p2 = side_parity(t, s.a2, s.b2, s.c2)?;
    match (p1, p2) {
        (Some(x), Some(y)) if x == y => Some(x),
        _ => None,
    }
}

/// The split of `(X1, V \ X1)` as a 2-join, if it is one.
///
/// The cross strong edges must form exactly two complete bipartite bundles
/// `A1–A2` and `B1–B2`; `A1` is the bundle holding the smaller vertex.
pub fn two_join_for_partition(t: &Trigraph, x1: VertexSet) -> Option<TwoJoinSplit> {
    let x2 = t.vertices() - x1;
    if x1.len() < 3 || x2.len() < 3 {
        return None;
    }
    let mut bundles: Vec<(VertexSet, VertexSet)> = Vec::with_capacity(2);
    for u in x1 {
        if !(t.semi_neighbors(u) & x2).is_empty() {
            return None;
        }
        let cross = t.strong_neighbors(u) & x2;
        if cross.is_empty() {
            continue;
        }
        if let Some((side, _)) = bundles.iter_mut().find(|(_, target)| *target == cross) {
            side.insert(u);
        } else if bundles.len() == 2 {
            return None;
        } else {
            bundles.push((VertexSet::singleton(u), cross));
        }
    }
    if bundles.len() != 2 || !bundles[0].1.is_disjoint(bundles[1].1) {
        return None;
    }
    let (a1, a2) = bundles[0];
    let (b1, b2) = bundles[1];
    // Every vertex of X2 outside A2 ∪ B2 must see nothing of X1, and A2, B2
    // must see exactly A1, B1.
    for v in x2 {
        let cross = t.strong_neighbors(v) & x1;
        let expected = if a2.contains(v) {
            a1
        } else if b2.contains(v) {
            b1
        } else {
            VertexSet::EMPTY
        };
        if cross != expected {
            return None;
        }
    }
    let (c1, c2) = (x1 - a1 - b1, x2 - a2 - b2);
    if is_degenerate_side(t, a1, b1, c1) || is_degenerate_side(t, a2, b2, c2) {
        return None;
    }
    let mut split = TwoJoinSplit { a1, b1, c1, a2, b2, c2, parity: None, proper: false };
    split.proper = is_proper(t, &split);
    split.parity = combined_parity(t, &split);
    Some(split)
}

/// Every 2-join, scanning `X1` in lexicographic order of its sorted members.
/// Each 2-join appears once per orientation.
pub fn two_joins(t: &Trigraph) -> Vec<TwoJoinSplit> {
    let mut out = Vec::new();
    if t.n() < 6 {
        return out;
    }
    for_each_subset_lex(t.vertices(), |x1| {
        if let Some(s) = two_join_for_partition(t, x1) {
            out.push(s);
        }
        false
    });
    out
}

pub fn find_2join(t: &Trigraph) -> Option<TwoJoinSplit> {
    find_2join_where(t, |_| true)
}

/// First proper 2-join.
pub fn find_proper_2join(t: &Trigraph) -> Option<TwoJoinSplit> {
    find_2join_where(t, |s| s.proper)
}

pub fn find_2join_where(t: &Trigraph, mut keep: impl FnMut(&TwoJoinSplit) -> bool) -> Option<TwoJoinSplit> {
    if t.n() < 6 {
        return None;
    }
    let mut found = None;
    for_each_subset_lex(t.vertices(), |x1| {
        found = two_join_for_partition(t, x1).filter(&mut keep);
        found.is_some()
    });
    found
}

/// A 2-join of the complement, with sets in `t`'s labels.
pub fn find_complement_2join(t: &Trigraph) -> Option<TwoJoinSplit> {
    find_2join(&t.complement())
}

/// Whether `(X, V \ X)` is a proper 2-join.
pub fn is_fragment(t: &Trigraph, x: VertexSet) -> bool {
    two_join_for_partition(t, x).is_some_and(|s| s.proper)
}

/// The common parity of the `A_i`–`B_i` paths across a proper 2-join of a
/// Berge trigraph.
pub fn join_parity(t: &Trigraph, s: &TwoJoinSplit) -> Result<Parity, DecompositionError> {
    if let Some(witness) = is_berge(t).witness {
        return Err(DecompositionError::NotBerge { witness });
    }
    if !is_proper(t, s) {
        return Err(DecompositionError::NotProper);
    }
    combined_parity(t, s).ok_or(DecompositionError::MixedParity)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    /// Odd 2-join: markers `a, b` with `ab` switchable.
    Small,
    /// Even 2-join: markers `a, c, b` with `ac`, `cb` switchable.
    Light,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub trigraph: Trigraph,
    /// Marker vertices in the order `a, (c,) b`.
    pub markers: Vec<usize>,
    pub kind: BlockKind,
    pub side: u8,
    pub parent_split: TwoJoinSplit,
    /// `parent_map[i]` is the parent vertex of block vertex `i`; `None` for
    /// markers.
    pub parent_map: Vec<Option<usize>>,
}

impl Block {
    pub fn marker_set(&self) -> VertexSet {
        self.markers.iter().collect()
    }
}

/// The block of decomposition `T_{X_side}`. Block vertices `0..|X|` are the
/// vertices of `X_side` in increasing order; markers follow.
pub fn build_block(t: &Trigraph, s: &TwoJoinSplit, side: u8) -> Result<Block, DecompositionError> {
    if side != 1 && side != 2 {
        return Err(DecompositionError::BadSide { side });
    }
    if !is_proper(t, s) {
        return Err(DecompositionError::NotProper);
    }
    let parity = combined_parity(t, s).ok_or(DecompositionError::MixedParity)?;
    let (a, b, c) = s.side(side);
    let induced = t.induced(a | b | c).expect("subset of vertices");
    let mut block = induced.trigraph;
    let local = |v: usize| induced.vertex_map.binary_search(&v).expect("vertex of X");
    let ma = block.add_vertex().expect("block is smaller than parent");
    let (kind, markers) = match parity {
        Parity::Odd => {
            let mb = block.add_vertex().expect("block is smaller than parent");
            block.set(ma, mb, Adjacency::Semi);
            (BlockKind::Small, vec![ma, mb])
        }
        Parity::Even => {
            let mc = block.add_vertex().expect("block is smaller than parent");
            let mb = block.add_vertex().expect("block is smaller than parent");
            block.set(ma, mc, Adjacency::Semi);
            block.set(mc, mb, Adjacency::Semi);
            (BlockKind::Light, vec![ma, mc, mb])
        }
    };
    let mb = *markers.last().expect("two or three markers");
    for v in a {
        block.set(ma, local(v), Adjacency::Strong);
    }
    for v in b {
        block.set(mb, local(v), Adjacency::Strong);
    }
    let mut parent_map: Vec<Option<usize>> = induced.vertex_map.iter().map(|&v| Some(v)).collect();
    parent_map.resize(block.n(), None);
    Ok(Block { trigraph: block, markers, kind, side, parent_split: s.clone(), parent_map })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum ShapeViolation {
    NotProper,
    EmptyInteriorWithSmallEnd { side: u8 },
    SideTooSmall { side: u8, size: usize },
}

/// Shape conditions every 2-join of a class-F trigraph with no balanced
/// skew-partition satisfies. Returns the violated ones.
pub fn check_nobsp_2join_shape(t: &Trigraph, s: &TwoJoinSplit) -> Vec<ShapeViolation> {
    let mut out = Vec::new();
    if !is_proper(t, s) {
        out.push(ShapeViolation::NotProper);
    }
    for side in [1, 2] {
        let (a, b, c) = s.side(side);
        if c.is_empty() && (a.len() < 2 || b.len() < 2) {
            out.push(ShapeViolation::EmptyInteriorWithSmallEnd { side });
        }
        let size = (a | b | c).len();
        if size < 4 {
            out.push(ShapeViolation::SideTooSmall { side, size });
        }
    }
    out
}
