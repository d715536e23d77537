//! Canonical labelling of small trigraphs and exhaustive enumeration of
//! graphs up to isomorphism.
//!
//! Canonical forms come from individualisation-refinement: colour refinement
//! on (strong, switchable) neighbour counts, then branching on the first
//! non-singleton cell. The least adjacency code over all leaves is the
//! canonical code. Branches on vertices that are twins of an already explored
//! vertex are skipped, since swapping twins is an automorphism.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::trigraph::{Adjacency, Trigraph};

/// Upper-triangle adjacency codes of the canonically relabelled trigraph
/// (`0` strong antiedge, `1` switchable, `2` strong edge), prefixed by `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub code: CanonicalCode,
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
}

impl CanonicalForm {
    /// The trigraph relabelled into canonical order.
    pub fn relabel(&self, t: &Trigraph) -> Trigraph {
        t.permute(&self.labeling)
    }
}

fn code_of(t: &Trigraph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut code = Vec::with_capacity(1 + n * (n.saturating_sub(1)) / 2);
    code.push(n as u8);
    for i in 0..n {
        for j in i + 1..n {
            code.push(match t.theta(order[i], order[j]) {
                Adjacency::StrongAnti => 0,
                Adjacency::Semi => 1,
                Adjacency::Strong => 2,
            });
        }
    }
    code
}

fn refine(t: &Trigraph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let before = cells.len();
        let masks: Vec<u32> = cells.iter().map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v)).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<(u32, u32)>, usize)> = cell
                .iter()
                .map(|&v| {
                    let strong = t.strong_neighbors(v).bits();
                    let semi = t.semi_neighbors(v).bits();
                    let sig = masks.iter().map(|&m| ((strong & m).count_ones(), (semi & m).count_ones())).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        *cells = next;
        if cells.len() == before {
            return;
        }
    }
}

fn are_twins(t: &Trigraph, u: usize, v: usize) -> bool {
    (0..t.n()).filter(|&w| w != u && w != v).all(|w| t.theta(u, w) == t.theta(v, w))
}

fn search(t: &Trigraph, mut cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    refine(t, &mut cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(t, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = cells[target].clone();
    let mut explored: Vec<usize> = Vec::new();
    for &v in &cell {
        if explored.iter().any(|&u| are_twins(t, u, v)) {
            continue;
        }
        explored.push(v);
        let mut branch = Vec::with_capacity(cells.len() + 1);
        branch.extend_from_slice(&cells[..target]);
        branch.push(vec![v]);
        branch.push(cell.iter().copied().filter(|&w| w != v).collect());
        branch.extend_from_slice(&cells[target + 1..]);
        search(t, branch, best);
    }
}

pub fn canonical_form(t: &Trigraph) -> CanonicalForm {
    let n = t.n();
    if n == 0 {
        return CanonicalForm { code: CanonicalCode(vec![0]), labeling: Vec::new() };
    }
    let mut best = None;
    search(t, vec![(0..n).collect()], &mut best);
    let (code, order) = best.expect("at least one leaf");
    let mut labeling = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        labeling[v] = pos;
    }
    CanonicalForm { code: CanonicalCode(code), labeling }
}

pub fn canonical_code(t: &Trigraph) -> CanonicalCode {
    canonical_form(t).code
}

pub fn are_isomorphic(a: &Trigraph, b: &Trigraph) -> bool {
    a.n() == b.n() && canonical_code(a) == canonical_code(b)
}

/// Every graph on `n` vertices up to isomorphism, each in canonical
/// labelling, sorted by canonical code.
pub fn graphs_up_to_iso(n: usize) -> Vec<Trigraph> {
    let mut level = vec![Trigraph::new(0).expect("empty")];
    for _ in 0..n {
        level = extend_by_one_vertex(&level);
    }
    level
}

/// All graphs on `1..=n_max` vertices up to isomorphism, grouped by order.
pub fn graphs_up_to_iso_by_order(n_max: usize) -> Vec<Vec<Trigraph>> {
    let mut out = Vec::new();
    let mut level = vec![Trigraph::new(0).expect("empty")];
    for _ in 0..n_max {
        level = extend_by_one_vertex(&level);
        out.push(level.clone());
    }
    out
}

fn extend_by_one_vertex(level: &[Trigraph]) -> Vec<Trigraph> {
    use rayon::prelude::*;
    let found: Vec<(CanonicalCode, Trigraph)> = level
        .par_iter()
        .flat_map_iter(|g| {
            let n = g.n();
            (0u32..1 << n).map(move |nbrs| {
                let mut h = g.clone();
                let v = h.add_vertex().expect("within bound");
                for u in 0..n {
                    if nbrs >> u & 1 == 1 {
                        h.set(u, v, Adjacency::Strong);
                    }
                }
                let form = canonical_form(&h);
                let canon = form.relabel(&h);
                (form.code, canon)
            })
        })
        .collect();
    let mut seen = HashSet::new();
    let mut out: Vec<(CanonicalCode, Trigraph)> =
        found.into_iter().filter(|(code, _)| seen.insert(code.clone())).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, g)| g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trigraph::named::*;

    #[test]
    fn known_graph_counts() {
        // Numbers of unlabelled graphs on 1..=6 vertices.
        let counts: Vec<usize> = graphs_up_to_iso_by_order(6).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn relabelled_copies_share_a_code() {
        let c6 = cycle(6);
        let shuffled = c6.permute(&[3, 5, 0, 2, 4, 1]);
        assert!(are_isomorphic(&c6, &shuffled));
        assert!(!are_isomorphic(&c6, &triangular_prism()));
        assert!(are_isomorphic(&cycle(5), &cycle(5).complement()));
        let form = canonical_form(&shuffled);
        assert_eq!(canonical_code(&form.relabel(&shuffled)), form.code);
    }

    #[test]
    fn switchable_pairs_are_distinguished() {
        let a = Trigraph::from_entries(3, &[(0, 1, 0), (1, 2, 1)]).unwrap();
        let b = Trigraph::from_entries(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        let c = Trigraph::from_entries(3, &[(1, 2, 0), (0, 1, 1)]).unwrap();
        assert!(!are_isomorphic(&a, &b));
        assert!(are_isomorphic(&a, &c));
    }

    #[test]
    fn symmetric_graphs_stay_cheap() {
        assert_eq!(canonical_code(&complete(14)), canonical_code(&complete(14).permute(&(0..14).rev().collect::<Vec<_>>())));
        assert!(are_isomorphic(&empty(12), &empty(12)));
    }
}
