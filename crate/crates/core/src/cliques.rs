//! Maximal clique enumeration and maximum cliques through a vertex.

use fixedbitset::FixedBitSet;

use crate::graph::{Graph, VertexSet};

/// All maximal cliques of order at least `n_min`, each sorted, listed in
/// lexicographic order.
///
/// Bron–Kerbosch with Tomita pivoting; a branch is cut as soon as the
/// current clique plus its candidates cannot reach `n_min`.
pub fn maximal_cliques_at_least(g: &Graph, n_min: usize) -> Vec<VertexSet> {
    let n = g.n();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut candidates = FixedBitSet::with_capacity(n);
    candidates.insert_range(..);
    let mut current = Vec::new();
    expand(
        g,
        &mut current,
        candidates,
        FixedBitSet::with_capacity(n),
        n_min.max(1),
        &mut out,
    );
    out.sort();
    out
}

fn expand(
    g: &Graph,
    current: &mut Vec<usize>,
    mut candidates: FixedBitSet,
    mut excluded: FixedBitSet,
    n_min: usize,
    out: &mut Vec<VertexSet>,
) {
    let remaining = candidates.count_ones(..);
    if remaining == 0 {
        if excluded.is_clear() && current.len() >= n_min {
            out.push(VertexSet::from_unsorted(current.iter().copied()));
        }
        return;
    }
    if current.len() + remaining < n_min {
        return;
    }
    let pivot = candidates
        .ones()
        .chain(excluded.ones())
        .max_by_key(|&u| {
            (
                candidates.intersection_count(g.row(u)),
                std::cmp::Reverse(u),
            )
        })
        .expect("candidate set is nonempty");
    let branch: Vec<usize> = candidates.difference(g.row(pivot)).collect();
    for v in branch {
        let mut next_candidates = candidates.clone();
        next_candidates.intersect_with(g.row(v));
        let mut next_excluded = excluded.clone();
        next_excluded.intersect_with(g.row(v));
        current.push(v);
        expand(g, current, next_candidates, next_excluded, n_min, out);
        current.pop();
        candidates.set(v, false);
        excluded.insert(v);
    }
}

/// A maximum-order clique containing `x`; among those, the lexicographically
/// smallest.
pub fn max_clique_containing(g: &Graph, x: usize) -> VertexSet {
    let mut best = vec![x];
    let mut current = vec![x];
    search_maximum(g, &mut current, g.row(x).clone(), &mut best);
    VertexSet::from_unsorted(best)
}

/// A maximum clique of `g` (lexicographically smallest among maximum ones).
pub fn maximum_clique(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let mut best = Vec::new();
    search_maximum(g, &mut Vec::new(), all, &mut best);
    VertexSet::from_unsorted(best)
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

// Candidates are taken in ascending order, so cliques are visited in
// lexicographic order and only strictly larger ones replace `best`.
fn search_maximum(
    g: &Graph,
    current: &mut Vec<usize>,
    candidates: FixedBitSet,
    best: &mut Vec<usize>,
) {
    if current.len() > best.len() {
        best.clone_from(current);
    }
    let mut remaining = candidates.count_ones(..);
    for v in candidates.ones() {
        if current.len() + remaining <= best.len() {
            return;
        }
        remaining -= 1;
        let mut next = candidates.clone();
        next.intersect_with(g.row(v));
        next.remove_range(..v + 1);
        current.push(v);
        search_maximum(g, current, next, best);
        current.pop();
    }
}
