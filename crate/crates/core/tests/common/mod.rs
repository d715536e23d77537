//! Brute-force reference checks used by the integration and acceptance tests.
//! Nothing here calls the library's detectors; only `Trigraph::theta` and
//! the constructors are used.
#![allow(dead_code)]

use evenpair_core::{Adjacency, Trigraph};

pub fn adj(t: &Trigraph, u: usize, v: usize) -> bool {
    t.theta(u, v) != Adjacency::StrongAnti
}

pub fn anti(t: &Trigraph, u: usize, v: usize) -> bool {
    t.theta(u, v) != Adjacency::Strong
}

pub fn negate(t: &Trigraph) -> Trigraph {
    let mut out = Trigraph::new(t.n()).unwrap();
    for u in 0..t.n() {
        for v in u + 1..t.n() {
            let a = match t.theta(u, v) {
                Adjacency::Strong => Adjacency::StrongAnti,
                Adjacency::StrongAnti => Adjacency::Strong,
                Adjacency::Semi => Adjacency::Semi,
            };
            out.set(u, v, a);
        }
    }
    out
}

/// Calls `visit` on every trigraph path from `u` to `v` whose interior lies
/// in `interior` (a bit mask). Stops early when `visit` returns true.
pub fn any_path(t: &Trigraph, u: usize, v: usize, interior: u32, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(t: &Trigraph, seq: &mut Vec<usize>, v: usize, interior: u32, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let last = *seq.last().unwrap();
        for w in 0..t.n() {
            if seq.contains(&w) || !(w == v || interior >> w & 1 == 1) || !adj(t, last, w) {
                continue;
            }
            if !seq[..seq.len() - 1].iter().all(|&x| anti(t, x, w)) {
                continue;
            }
            seq.push(w);
            let stop = if w == v { visit(seq) } else { rec(t, seq, v, interior, visit) };
            seq.pop();
            if stop {
                return true;
            }
        }
        false
    }
    rec(t, &mut vec![u], v, interior & !(1 << u) & !(1 << v), visit)
}

pub fn all_mask(n: usize) -> u32 {
    if n == 32 { u32::MAX } else { (1u32 << n) - 1 }
}

pub fn odd_path(t: &Trigraph, u: usize, v: usize, interior: u32) -> Option<Vec<usize>> {
    let mut found = None;
    any_path(t, u, v, interior, &mut |p| {
        if (p.len() - 1) % 2 == 1 {
            found = Some(p.to_vec());
            true
        } else {
            false
        }
    });
    found
}

pub fn is_even_pair(t: &Trigraph, u: usize, v: usize) -> bool {
    u != v && t.theta(u, v) == Adjacency::StrongAnti && odd_path(t, u, v, all_mask(t.n())).is_none()
}

pub fn even_pairs(t: &Trigraph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..t.n() {
        for v in u + 1..t.n() {
            if is_even_pair(t, u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

pub fn semi_pairs(t: &Trigraph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..t.n() {
        for v in u + 1..t.n() {
            if t.theta(u, v) == Adjacency::Semi {
                out.push((u, v));
            }
        }
    }
    out
}

/// Adjacency masks of every realization.
pub fn realizations(t: &Trigraph) -> Vec<Vec<u32>> {
    let semi = semi_pairs(t);
    let base: Vec<u32> = (0..t.n())
        .map(|u| (0..t.n()).filter(|&v| v != u && t.theta(u, v) == Adjacency::Strong).fold(0, |m, v| m | 1 << v))
        .collect();
    (0..1u32 << semi.len())
        .map(|choice| {
            let mut g = base.clone();
            for (i, &(u, v)) in semi.iter().enumerate() {
                if choice >> i & 1 == 1 {
                    g[u] |= 1 << v;
                    g[v] |= 1 << u;
                }
            }
            g
        })
        .collect()
}

pub fn graph_complement(g: &[u32]) -> Vec<u32> {
    let full = all_mask(g.len());
    g.iter().enumerate().map(|(v, &m)| !m & full & !(1 << v)).collect()
}

/// Whether `s` induces a chordless cycle in `g`.
fn induces_cycle(g: &[u32], s: u32) -> bool {
    if s.count_ones() < 3 {
        return false;
    }
    let mut v = s.trailing_zeros() as usize;
    if (0..g.len()).any(|w| s >> w & 1 == 1 && (g[w] & s).count_ones() != 2) {
        return false;
    }
    // 2-regular; connected iff walking around returns after |s| steps.
    let start = v;
    let mut prev = usize::MAX;
    for step in 1..=s.count_ones() {
        let nbrs = g[v] & s;
        let next = (0..g.len()).find(|&w| nbrs >> w & 1 == 1 && w != prev).unwrap();
        prev = v;
        v = next;
        if v == start {
            return step == s.count_ones();
        }
    }
    false
}

fn subsets_with(n: usize, keep: impl FnMut(u32) -> bool) -> bool {
    (1..=all_mask(n)).any(keep)
}

pub fn graph_has_hole(g: &[u32], filter: impl Fn(u32) -> bool) -> bool {
    subsets_with(g.len(), |s| s.count_ones() >= 5 && filter(s.count_ones()) && induces_cycle(g, s))
}

pub fn is_berge(t: &Trigraph) -> bool {
    realizations(t).iter().all(|g| {
        !graph_has_hole(g, |k| k % 2 == 1) && !graph_has_hole(&graph_complement(g), |k| k % 2 == 1)
    })
}

pub fn has_antihole(t: &Trigraph, lengths: impl Fn(u32) -> bool) -> bool {
    realizations(t).iter().any(|g| graph_has_hole(&graph_complement(g), &lengths))
}

/// Odd prism: two disjoint triangles joined by three disjoint odd paths, no
/// other edges.
pub fn has_odd_prism(t: &Trigraph) -> bool {
    realizations(t).iter().any(|g| subsets_with(g.len(), |s| s.count_ones() >= 6 && induces_odd_prism(g, s)))
}

fn induces_odd_prism(g: &[u32], s: u32) -> bool {
    let n = g.len();
    let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
    let deg = |v: usize| (g[v] & s).count_ones();
    if vs.iter().filter(|&&v| deg(v) == 3).count() != 6 || vs.iter().any(|&v| deg(v) != 2 && deg(v) != 3) {
        return false;
    }
    let mut triangles = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs.iter().enumerate().skip(i + 1) {
            for &c in vs.iter().skip(j + 1) {
                if g[a] >> b & 1 == 1 && g[a] >> c & 1 == 1 && g[b] >> c & 1 == 1 {
                    triangles.push(1u32 << a | 1 << b | 1 << c);
                }
            }
        }
    }
    if triangles.len() != 2 || triangles[0] & triangles[1] != 0 {
        return false;
    }
    let (t1, t2) = (triangles[0], triangles[1]);
    if (t1 | t2).count_ones() != 6 || vs.iter().any(|&v| deg(v) == 3 && (t1 | t2) >> v & 1 == 0) {
        return false;
    }
    // Walk each rung from a vertex of t1 until reaching t2.
    let mut seen = t1;
    for a in (0..n).filter(|&v| t1 >> v & 1 == 1) {
        let mut prev = a;
        let mut cur = match (0..n).find(|&w| (g[a] & s) >> w & 1 == 1 && t1 >> w & 1 == 0) {
            Some(w) => w,
            None => return false,
        };
        let mut length = 1;
        while t2 >> cur & 1 == 0 {
            if seen >> cur & 1 == 1 {
                return false;
            }
            seen |= 1 << cur;
            let next = (0..n).find(|&w| (g[cur] & s) >> w & 1 == 1 && w != prev);
            let Some(next) = next else { return false };
            prev = cur;
            cur = next;
            length += 1;
        }
        if seen >> cur & 1 == 1 || length % 2 == 0 {
            return false;
        }
        seen |= 1 << cur;
    }
    seen == s
}

pub fn graph_clique_number(g: &[u32]) -> usize {
    (0..=all_mask(g.len()))
        .filter(|&s| (0..g.len()).all(|v| s >> v & 1 == 0 || (s & !(1 << v)) & !g[v] == 0))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

pub fn graph_of(t: &Trigraph) -> Vec<u32> {
    assert!(semi_pairs(t).is_empty());
    realizations(t).remove(0)
}

pub fn is_complete(t: &Trigraph) -> bool {
    (0..t.n()).all(|u| (u + 1..t.n()).all(|v| adj(t, u, v)))
}

fn parts(t: &Trigraph, set: u32, linked: impl Fn(usize, usize) -> bool) -> usize {
    let mut remaining = set;
    let mut count = 0;
    while remaining != 0 {
        let mut comp = 1u32 << remaining.trailing_zeros();
        loop {
            let grown = (0..t.n())
                .filter(|&w| remaining >> w & 1 == 1 && (0..t.n()).any(|x| x != w && comp >> x & 1 == 1 && linked(x, w)))
                .fold(comp, |m, w| m | 1 << w);
            if grown == comp {
                break;
            }
            comp = grown;
        }
        remaining &= !comp;
        count += 1;
    }
    count
}

/// A skew partition `(A, B)` with `A` not connected and `B` not
/// anticonnected, and no odd path of length > 1 with ends in `B` and
/// interior in `A`, and no odd antipath of length > 1 with ends in `A` and
/// interior in `B`.
pub fn balanced_skew_partition(t: &Trigraph) -> Option<(u32, u32)> {
    let full = all_mask(t.n());
    let co = negate(t);
    (1..full).map(|b| (full & !b, b)).find(|&(a, b)| {
        parts(t, a, |x, y| adj(t, x, y)) >= 2
            && parts(t, b, |x, y| anti(t, x, y)) >= 2
            && !long_odd_path_between(t, b, a)
            && !long_odd_path_between(&co, a, b)
    })
}

fn long_odd_path_between(t: &Trigraph, ends: u32, interior: u32) -> bool {
    let ends: Vec<usize> = (0..t.n()).filter(|&v| ends >> v & 1 == 1).collect();
    ends.iter().enumerate().any(|(i, &x)| {
        ends[i + 1..].iter().any(|&y| {
            any_path(t, x, y, interior, &mut |p| p.len() - 1 > 1 && (p.len() - 1) % 2 == 1)
        })
    })
}

/// Small deterministic generator for tests that should not depend on the
/// library's enumeration.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Trigraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |m| {
        let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &e)| e).collect();
        Trigraph::from_edges(n, &edges).unwrap()
    })
}
