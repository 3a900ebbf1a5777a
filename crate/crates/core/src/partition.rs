//! Splitting a `t`-plex into `t` cliques whose sizes differ by at most one.
//!
//! In the complement of the plex every vertex has degree at most `t - 1`, so
//! this is an equitable proper `t`-colouring of a graph with maximum degree
//! below the number of colours. The constructive scheme inserts complement
//! edges one at a time; a conflict is fixed by moving a vertex into a class
//! where it has no neighbour, which leaves one class too large and one too
//! small. That imbalance is repaired by shifting vertices along a path in
//! the "can accept a vertex from" digraph between classes, or, when no such
//! path exists, by a solo-neighbour exchange followed by recursion on the
//! classes that cannot reach the small one. A bounded exhaustive search
//! backs this up.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Node budget for the backtracking fallback.
const SEARCH_BUDGET: usize = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlexPartition {
    pub t: usize,
    /// Ordered by smallest member; empty blocks (when `|p| < t`) come last.
    pub blocks: Vec<VertexSet>,
}

pub fn equitable_clique_partition(g: &Graph, p: &VertexSet, t: usize) -> Result<PlexPartition> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    p.check_host(g)?;
    if let Some((vertex, missing)) = g.plex_defect(p) {
        if missing >= t {
            return Err(Error::NotAPlex { t, vertex, missing });
        }
    }
    let members = p.as_slice();
    let k = members.len();
    let s = k.div_ceil(t);
    let total = s * t;

    // complement of the induced plex, padded with a clique of dummies
    let mut h = vec![FixedBitSet::with_capacity(total); total];
    let mut edges = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            if !g.is_adjacent(members[i], members[j]) {
                edges.push((i, j));
            }
        }
    }
    for i in k..total {
        for j in (i + 1)..total {
            edges.push((i, j));
        }
    }

    let mut coloring = Coloring::new(total, t);
    let mut solved = true;
    for &(x, y) in &edges {
        h[x].insert(y);
        h[y].insert(x);
        if !coloring.insert_edge(&h, x, y) {
            solved = false;
            break;
        }
    }
    if !solved {
        for &(x, y) in &edges {
            h[x].insert(y);
            h[y].insert(x);
        }
        coloring = exhaustive(&h, t, s).ok_or(Error::PartitionNotFound)?;
    }

    let mut blocks: Vec<VertexSet> = coloring
        .classes
        .iter()
        .map(|c| VertexSet::from_unsorted(c.ones().filter(|&v| v < k).map(|v| members[v])))
        .collect();
    blocks.sort_by(|a, b| match (a.is_empty(), b.is_empty()) {
        (false, true) => std::cmp::Ordering::Less,
        (true, false) => std::cmp::Ordering::Greater,
        _ => a.cmp(b),
    });
    Ok(PlexPartition { t, blocks })
}

#[derive(Clone, Debug)]
struct Coloring {
    color: Vec<usize>,
    classes: Vec<FixedBitSet>,
}

impl Coloring {
    /// Round-robin start, equitable on the edgeless graph.
    fn new(n: usize, t: usize) -> Self {
        let mut classes = vec![FixedBitSet::with_capacity(n); t];
        let color: Vec<usize> = (0..n).map(|v| v % t).collect();
        for (v, &c) in color.iter().enumerate() {
            classes[c].insert(v);
        }
        Coloring { color, classes }
    }

    fn relocate(&mut self, v: usize, to: usize) {
        self.classes[self.color[v]].set(v, false);
        self.classes[to].insert(v);
        self.color[v] = to;
    }

    /// Restores a proper equitable colouring after edge `xy` was added.
    fn insert_edge(&mut self, h: &[FixedBitSet], x: usize, y: usize) -> bool {
        let from = self.color[x];
        if self.color[y] != from {
            return true;
        }
        let Some(to) =
            (0..self.classes.len()).find(|&c| c != from && h[x].is_disjoint(&self.classes[c]))
        else {
            return false;
        };
        self.relocate(x, to);
        let all: Vec<usize> = (0..self.classes.len()).collect();
        self.repair(h, &all, to, from)
    }

    /// Lowest-index vertex of `from` with no neighbour in class `to`.
    fn movable(&self, h: &[FixedBitSet], from: usize, to: usize) -> Option<usize> {
        self.classes[from]
            .ones()
            .find(|&z| h[z].is_disjoint(&self.classes[to]))
    }

    /// Classes among `within` that can reach `target`, with the next hop of
    /// a shortest path towards it.
    fn reach(&self, h: &[FixedBitSet], within: &[usize], target: usize) -> Vec<Option<usize>> {
        let mut next = vec![None; self.classes.len()];
        next[target] = Some(target);
        let mut queue = std::collections::VecDeque::from([target]);
        while let Some(y) = queue.pop_front() {
            for &x in within {
                if next[x].is_none() && self.movable(h, x, y).is_some() {
                    next[x] = Some(y);
                    queue.push_back(x);
                }
            }
        }
        next
    }

    fn shift(&mut self, h: &[FixedBitSet], next: &[Option<usize>], start: usize) {
        let mut path = vec![start];
        while let Some(n) =
            next[*path.last().expect("nonempty")].filter(|&n| n != *path.last().expect("nonempty"))
        {
            path.push(n);
        }
        let moves: Vec<(usize, usize)> = path
            .windows(2)
            .map(|w| {
                (
                    self.movable(h, w[0], w[1]).expect("arc has a witness"),
                    w[1],
                )
            })
            .collect();
        for (z, to) in moves {
            self.relocate(z, to);
        }
    }

    /// Among the classes `within`, `plus` has one vertex too many and
    /// `minus` one too few; everything else is balanced.
    fn repair(&mut self, h: &[FixedBitSet], within: &[usize], plus: usize, minus: usize) -> bool {
        let next = self.reach(h, within, minus);
        if next[plus].is_some() {
            self.shift(h, &next, plus);
            return true;
        }
        let a: Vec<usize> = within
            .iter()
            .copied()
            .filter(|&c| next[c].is_some())
            .collect();
        let b: Vec<usize> = within
            .iter()
            .copied()
            .filter(|&c| next[c].is_none())
            .collect();
        let b_vertices: Vec<usize> = b.iter().flat_map(|&c| self.classes[c].ones()).collect();

        for &w in a.iter().filter(|&&w| w != minus) {
            let rest: Vec<usize> = a.iter().copied().filter(|&c| c != w).collect();
            let rest_next = self.reach(h, &rest, minus);
            if rest.iter().any(|&c| rest_next[c].is_none()) {
                continue;
            }
            for z in self.classes[w].ones().collect::<Vec<_>>() {
                let Some(x) = rest
                    .iter()
                    .copied()
                    .find(|&x| h[z].is_disjoint(&self.classes[x]))
                else {
                    continue;
                };
                let solo = b_vertices
                    .iter()
                    .copied()
                    .find(|&y| h[y].contains(z) && h[y].intersection_count(&self.classes[w]) == 1);
                let Some(y) = solo else { continue };
                let y_class = self.color[y];
                self.relocate(z, x);
                self.relocate(y, w);
                self.shift(h, &rest_next, x);
                if y_class == plus {
                    return true;
                }
                return self.repair(h, &b, plus, y_class);
            }
        }
        false
    }
}

/// Backtracking over vertices in decreasing-degree order, each class capped
/// at `s`.
fn exhaustive(h: &[FixedBitSet], t: usize, s: usize) -> Option<Coloring> {
    let n = h.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h[v].count_ones(..)), v));
    let mut color = vec![usize::MAX; n];
    let mut sizes = vec![0; t];
    let mut budget = SEARCH_BUDGET;
    if !place(h, &order, 0, &mut color, &mut sizes, s, &mut budget) {
        return None;
    }
    let mut classes = vec![FixedBitSet::with_capacity(n); t];
    for (v, &c) in color.iter().enumerate() {
        classes[c].insert(v);
    }
    Some(Coloring { color, classes })
}

fn place(
    h: &[FixedBitSet],
    order: &[usize],
    i: usize,
    color: &mut [usize],
    sizes: &mut [usize],
    s: usize,
    budget: &mut usize,
) -> bool {
    if i == order.len() {
        return true;
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    let v = order[i];
    let mut tried_empty = false;
    for c in 0..sizes.len() {
        if sizes[c] == s || h[v].ones().any(|u| color[u] == c) {
            continue;
        }
        // empty classes are interchangeable
        if sizes[c] == 0 {
            if tried_empty {
                continue;
            }
            tried_empty = true;
        }
        color[v] = c;
        sizes[c] += 1;
        if place(h, order, i + 1, color, sizes, s, budget) {
            return true;
        }
        sizes[c] -= 1;
        color[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, gen_cocktail};

    fn check(g: &Graph, p: &VertexSet, t: usize) -> PlexPartition {
        let part = equitable_clique_partition(g, p, t).unwrap();
        assert_eq!(part.blocks.len(), t);
        let mut all: Vec<usize> = part.blocks.iter().flat_map(|b| b.iter()).collect();
        all.sort_unstable();
        assert_eq!(all, p.as_slice());
        assert!(part.blocks.iter().all(|b| g.is_clique(b)));
        let sizes: Vec<usize> = part.blocks.iter().map(VertexSet::len).collect();
        assert!(sizes.iter().max().unwrap() - sizes.iter().min().unwrap() <= 1);
        part
    }

    #[test]
    fn complete_graphs() {
        let part = check(&complete(9), &VertexSet::full(9), 3);
        assert!(part.blocks.iter().all(|b| b.len() == 3));
        let part = check(&complete(7), &VertexSet::full(7), 3);
        let mut sizes: Vec<usize> = part.blocks.iter().map(VertexSet::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 3]);
    }

    #[test]
    fn cocktail_party_splits_antipodal_pairs() {
        let g = gen_cocktail(4).unwrap();
        let part = check(&g, &VertexSet::full(8), 2);
        for b in &part.blocks {
            assert_eq!(b.len(), 4);
            for i in 0..4 {
                assert_eq!(b.iter().filter(|&v| v / 2 == i).count(), 1);
            }
        }
    }

    #[test]
    fn single_block_and_errors() {
        let part = check(&complete(5), &VertexSet::full(5), 1);
        assert_eq!(part.blocks, vec![VertexSet::full(5)]);
        let c4 = crate::generators::cycle(4);
        assert!(matches!(
            equitable_clique_partition(&c4, &VertexSet::full(4), 1),
            Err(Error::NotAPlex { .. })
        ));
        assert!(equitable_clique_partition(&c4, &VertexSet::full(4), 0).is_err());
    }

    #[test]
    fn fewer_members_than_blocks() {
        let part = check(&complete(2), &VertexSet::full(2), 4);
        assert!(part.blocks[2].is_empty() && part.blocks[3].is_empty());
    }
}
