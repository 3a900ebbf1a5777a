//! Hoffman graphs: graphs whose vertices are labeled slim or fat, with the
//! fat vertices pairwise non-adjacent and each touching a slim vertex.
//!
//! Vertices are stored canonically: slims are `0..s`, fats are `s..s+f`.
//! Quasi-cliques, the special matrix and the sum calculus all work in these
//! indices.

mod sum;

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::linalg::DenseMatrix;
use crate::spectrum::{smallest_eigenvalue, EigenResult};

pub use sum::{compose, SumCheck, SumDecomposition, SumViolation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoffmanGraph {
    graph: Graph,
    slim_count: usize,
}

/// A broken labeling condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    FatFatEdge(usize, usize),
    FatWithoutSlimNeighbor(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FatFatEdge(u, v) => write!(f, "fat-fat edge {{{u}, {v}}}"),
            Violation::FatWithoutSlimNeighbor(x) => write!(f, "fat without slim neighbor: {x}"),
        }
    }
}

/// `Sp(h) = A_s - C C^T`, indexed by slim vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialMatrix {
    entries: DenseMatrix<i64>,
}

impl SpecialMatrix {
    pub fn order(&self) -> usize {
        self.entries.rows()
    }

    pub fn entries(&self) -> &DenseMatrix<i64> {
        &self.entries
    }

    pub fn into_entries(self) -> DenseMatrix<i64> {
        self.entries
    }
}

impl HoffmanGraph {
    /// Labels the first `slim_count` vertices of `graph` slim and the rest fat.
    /// No validity check is made; see [`HoffmanGraph::validate`].
    pub fn new(graph: Graph, slim_count: usize) -> Result<Self> {
        if slim_count > graph.n() {
            return Err(Error::InvalidParameter(format!(
                "slim count {slim_count} exceeds vertex count {}",
                graph.n()
            )));
        }
        Ok(HoffmanGraph { graph, slim_count })
    }

    pub fn from_edges<I>(slim_count: usize, fat_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(
            Graph::from_edges(slim_count + fat_count, edges)?,
            slim_count,
        )
    }

    /// A fat-free Hoffman graph.
    pub fn from_graph(graph: Graph) -> Self {
        let slim_count = graph.n();
        HoffmanGraph { graph, slim_count }
    }

    pub fn empty() -> Self {
        Self::from_graph(Graph::empty(0))
    }

    /// One slim vertex adjacent to `lambda` fat vertices.
    pub fn claw(lambda: usize) -> Self {
        let edges = (1..=lambda).map(|f| (0, f));
        Self::from_edges(1, lambda, edges).expect("star edges are valid")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn slim_count(&self) -> usize {
        self.slim_count
    }

    pub fn fat_count(&self) -> usize {
        self.graph.n() - self.slim_count
    }

    pub fn slims(&self) -> std::ops::Range<usize> {
        0..self.slim_count
    }

    pub fn fats(&self) -> std::ops::Range<usize> {
        self.slim_count..self.graph.n()
    }

    pub fn is_fat(&self, v: usize) -> bool {
        v >= self.slim_count && v < self.graph.n()
    }

    /// Fat neighbors of `x`, ascending.
    pub fn fat_neighbors(&self, x: usize) -> &[usize] {
        let nbrs = self.graph.neighbors(x);
        &nbrs[nbrs.partition_point(|&y| y < self.slim_count)..]
    }

    /// Slim neighbors of `x`, ascending.
    pub fn slim_neighbors(&self, x: usize) -> &[usize] {
        let nbrs = self.graph.neighbors(x);
        &nbrs[..nbrs.partition_point(|&y| y < self.slim_count)]
    }

    /// Number of common fat neighbors of two vertices.
    pub fn common_fats(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.fat_neighbors(x), self.fat_neighbors(y));
        a.iter().filter(|f| b.binary_search(f).is_ok()).count()
    }

    /// Every broken labeling condition; empty iff the Hoffman graph is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for f in self.fats() {
            for &g in self.fat_neighbors(f) {
                if g > f {
                    out.push(Violation::FatFatEdge(f, g));
                }
            }
        }
        for f in self.fats() {
            if self.slim_neighbors(f).is_empty() {
                out.push(Violation::FatWithoutSlimNeighbor(f));
            }
        }
        out
    }

    pub fn check(&self) -> Result<()> {
        match self.validate().first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidHoffman(v.to_string())),
        }
    }

    /// Entrywise: diagonal `-|N^f(x)|`; off-diagonal `1 - c` for adjacent
    /// slims and `-c` otherwise, where `c` counts common fat neighbors.
    pub fn special_matrix(&self) -> Result<SpecialMatrix> {
        self.check()?;
        let s = self.slim_count;
        let mut entries = DenseMatrix::zeros(s, s);
        for i in 0..s {
            entries[(i, i)] = -(self.fat_neighbors(i).len() as i64);
            for j in (i + 1)..s {
                let c = self.common_fats(i, j) as i64;
                let v = if self.graph.is_adjacent(i, j) {
                    1 - c
                } else {
                    -c
                };
                entries[(i, j)] = v;
                entries[(j, i)] = v;
            }
        }
        Ok(SpecialMatrix { entries })
    }

    /// Smallest eigenvalue of the special matrix.
    pub fn lambda_min(&self, tol: f64) -> Result<EigenResult> {
        let sp = self.special_matrix()?;
        smallest_eigenvalue(sp.entries(), tol)
    }

    /// The graph induced on the slim vertices.
    pub fn slim_graph(&self) -> Graph {
        self.graph
            .induced(&VertexSet::full(self.slim_count))
            .expect("slim range is within the graph")
    }

    /// Fat vertices adjacent to at least one member of `w`, ascending.
    pub fn generated_fats(&self, w: &VertexSet) -> Vec<usize> {
        VertexSet::from_unsorted(w.iter().flat_map(|x| self.fat_neighbors(x).iter().copied()))
            .into_vec()
    }

    /// The Hoffman subgraph generated by the slim set `w`: `w` together
    /// with every fat vertex adjacent to some member of `w`.
    pub fn induced_sub(&self, w: &VertexSet) -> Result<HoffmanGraph> {
        if let Some(x) = w.iter().find(|&x| x >= self.slim_count) {
            return Err(Error::InvalidParameter(format!("{x} is not a slim vertex")));
        }
        let mut members = w.as_slice().to_vec();
        members.extend(self.generated_fats(w));
        let graph = Graph::from_fn(members.len(), |i, j| {
            self.graph.is_adjacent(members[i], members[j])
        });
        Ok(HoffmanGraph {
            graph,
            slim_count: w.len(),
        })
    }

    /// Slim neighbors of the fat vertex `f`.
    pub fn quasi_clique(&self, f: usize) -> Result<VertexSet> {
        if !self.is_fat(f) {
            return Err(Error::NotFat(f));
        }
        Ok(VertexSet::new(self.slim_neighbors(f).to_vec()).expect("neighbor lists are sorted"))
    }

    /// Quasi-cliques of all fat vertices, in fat order.
    pub fn quasi_cliques(&self) -> Vec<VertexSet> {
        self.fats()
            .map(|f| self.quasi_clique(f).expect("f is fat"))
            .collect()
    }

    /// Every slim vertex has at least `t` fat neighbors.
    pub fn is_t_fat(&self, t: usize) -> bool {
        self.slims().all(|x| self.fat_neighbors(x).len() >= t)
    }

    /// The largest fat degree of a slim vertex (0 if there are no slims).
    pub fn max_fat_degree(&self) -> usize {
        self.slims()
            .map(|x| self.fat_neighbors(x).len())
            .max()
            .unwrap_or(0)
    }

    /// Checks whether splitting the slims into `first` and `second` exhibits
    /// this Hoffman graph as the sum of the two generated subgraphs.
    pub fn check_sum(&self, first: &VertexSet, second: &VertexSet) -> Result<SumCheck> {
        sum::check_sum(self, first, second)
    }

    /// The finest slim partition making the special matrix block diagonal,
    /// blocks ordered by smallest member.
    pub fn decompose(&self) -> Result<Vec<VertexSet>> {
        let sp = self.special_matrix()?;
        let m = sp.entries();
        let s = self.slim_count;
        let mut seen = vec![false; s];
        let mut blocks = Vec::new();
        for start in 0..s {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut block = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..s {
                    if !seen[j] && m[(i, j)] != 0 {
                        seen[j] = true;
                        stack.push(j);
                        block.push(j);
                    }
                }
            }
            blocks.push(VertexSet::from_unsorted(block));
        }
        Ok(blocks)
    }
}
