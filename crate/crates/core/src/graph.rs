//! Undirected simple graphs on canonical vertex indices `0..n`.

use std::fmt;

use fixedbitset::FixedBitSet;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;

/// An immutable undirected simple graph.
///
/// Neighbor lists are kept sorted ascending, alongside a bit row per vertex
/// for constant-time adjacency queries.
#[derive(Clone)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    rows: Vec<FixedBitSet>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            rows: vec![FixedBitSet::with_capacity(n); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Pairs may be given in either
    /// orientation; loops, duplicates and out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if g.rows[u].contains(v) {
                return Err(Error::DuplicateEdge(u, v));
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
            g.edge_count += 1;
        }
        g.rebuild_lists();
        Ok(g)
    }

    /// Builds a graph whose edges are the pairs `u < v` with `adjacent(u, v)`.
    pub fn from_fn<F>(n: usize, mut adjacent: F) -> Self
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    g.rows[u].insert(v);
                    g.rows[v].insert(u);
                    g.edge_count += 1;
                }
            }
        }
        g.rebuild_lists();
        g
    }

    fn rebuild_lists(&mut self) {
        for (list, row) in self.adjacency.iter_mut().zip(&self.rows) {
            *list = row.ones().collect();
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adjacency[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adjacency[x].len()
    }

    /// Neighborhood of `x` as a bit row of width `n`.
    pub fn row(&self, x: usize) -> &FixedBitSet {
        &self.rows[x]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// The common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(x) = stack.pop() {
            for &y in &self.adjacency[x] {
                if !seen.put(y) {
                    stack.push(y);
                }
            }
        }
        seen.count_ones(..) == n
    }

    /// Subgraph induced on `s`, relabeled `0..|s|` by ascending original index.
    pub fn induced(&self, s: &VertexSet) -> Result<Graph> {
        s.check_host(self)?;
        let members = s.as_slice();
        Ok(Graph::from_fn(members.len(), |i, j| {
            self.is_adjacent(members[i], members[j])
        }))
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n(), |u, v| !self.is_adjacent(u, v))
    }

    /// `|N(x) ∩ s|`.
    pub fn neighbors_in(&self, x: usize, s: &VertexSet) -> usize {
        s.iter().filter(|&y| self.is_adjacent(x, y)).count()
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        self.first_non_edge(s).is_none()
    }

    pub(crate) fn first_non_edge(&self, s: &VertexSet) -> Option<(usize, usize)> {
        let m = s.as_slice();
        for (i, &u) in m.iter().enumerate() {
            for &v in &m[i + 1..] {
                if !self.is_adjacent(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// True iff every member of `s` is adjacent to all but at most `t - 1`
    /// other members.
    pub fn is_t_plex(&self, s: &VertexSet, t: usize) -> bool {
        self.plex_defect(s).is_none_or(|(_, missing)| missing < t)
    }

    /// The member of `s` with the most non-neighbors inside `s`, and that count.
    pub(crate) fn plex_defect(&self, s: &VertexSet) -> Option<(usize, usize)> {
        let size = s.len();
        s.iter()
            .map(|x| (x, size - 1 - self.neighbors_in(x, s)))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
    }

    /// The 0/1 adjacency matrix in any ring.
    pub fn adjacency_matrix<T: Zero + One + Clone>(&self) -> DenseMatrix<T> {
        let n = self.n();
        let mut m = DenseMatrix::zeros(n, n);
        for (u, v) in self.edges() {
            m[(u, v)] = T::one();
            m[(v, u)] = T::one();
        }
        m
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A strictly increasing sequence of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: Vec<usize>) -> Result<Self> {
        if let Some(position) = members.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedVertexSet {
                position: position + 1,
            });
        }
        Ok(VertexSet(members))
    }

    /// Sorts and deduplicates.
    pub fn from_unsorted<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn from_bits(bits: &FixedBitSet) -> Self {
        VertexSet(bits.ones().collect())
    }

    /// Checks every member is a vertex of `g`.
    pub fn check_host(&self, g: &Graph) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= g.n() => Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            }),
            _ => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    pub fn to_bits(&self, width: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(width);
        for &x in &self.0 {
            bits.insert(x);
        }
        bits
    }
}
