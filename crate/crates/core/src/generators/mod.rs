//! Constructions for the graph families used throughout the crate.

mod steiner;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::DenseMatrix;

pub use steiner::{gen_steiner, steiner_block, steiner_hoffman, BlockDesign};

/// Largest vertex count accepted by [`gen_hamming`].
pub const HAMMING_MAX_VERTICES: usize = 1_000_000;

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| v == u + 1)
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v + 1 == n && n > 2))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("Petersen edges are valid")
}

/// `H(a, m)`: a clique on `a + m` vertices plus an apex (the last vertex)
/// adjacent to the first `a` of them.
pub fn gen_hat(a: usize, m: usize) -> Result<Graph> {
    if a == 0 {
        return Err(Error::InvalidParameter("H(a,m) needs a >= 1".into()));
    }
    let apex = a + m;
    Ok(Graph::from_fn(a + m + 1, |u, v| v < apex || u < a))
}

/// `K~_{2m} = H(m, m)`.
pub fn gen_ktilde(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidParameter("K~_2m needs m >= 1".into()));
    }
    gen_hat(m, m)
}

/// Hamming graph `H(d, q)`: words of length `d` over `q` symbols, numbered
/// in lexicographic order, adjacent at Hamming distance one.
pub fn gen_hamming(d: usize, q: usize) -> Result<Graph> {
    if d == 0 || q < 2 {
        return Err(Error::InvalidParameter(format!(
            "H(d,q) needs d >= 1, q >= 2; got d={d}, q={q}"
        )));
    }
    let n = (0..d)
        .try_fold(1usize, |acc, _| {
            acc.checked_mul(q).filter(|&n| n <= HAMMING_MAX_VERTICES)
        })
        .ok_or_else(|| {
            Error::InvalidParameter(format!(
                "H({d},{q}) has more than {HAMMING_MAX_VERTICES} vertices"
            ))
        })?;
    let digits = |mut x: usize| {
        let mut out = vec![0; d];
        for slot in out.iter_mut().rev() {
            *slot = x % q;
            x /= q;
        }
        out
    };
    let words: Vec<Vec<usize>> = (0..n).map(digits).collect();
    Ok(Graph::from_fn(n, |u, v| {
        words[u]
            .iter()
            .zip(&words[v])
            .filter(|(a, b)| a != b)
            .count()
            == 1
    }))
}

/// Cocktail party graph `K_{2 x r}`: vertices `2i` and `2i+1` are the only
/// non-adjacent pairs.
pub fn gen_cocktail(r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(Error::InvalidParameter("K_{2xr} needs r >= 1".into()));
    }
    Ok(Graph::from_fn(2 * r, |u, v| u / 2 != v / 2))
}

/// Line graph; vertices are the edges of `g` in lexicographic order.
pub fn gen_line_graph(g: &Graph) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.is_empty() {
        return Err(Error::InvalidParameter(
            "line graph of an edgeless graph".into(),
        ));
    }
    Ok(Graph::from_fn(edges.len(), |i, j| {
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        a == c || a == d || b == c || b == d
    }))
}

/// Quotient matrix of `K~_{2 mu}` with `mu = (lambda-1)^2` over the parts
/// {apex}, {apex neighbors}, {apex non-neighbors}.
pub fn ktilde_quotient(lambda: i64) -> DenseMatrix<i64> {
    let mu = (lambda - 1) * (lambda - 1);
    DenseMatrix::from_rows(vec![
        vec![0, mu, 0],
        vec![1, mu - 1, mu],
        vec![0, mu, mu - 1],
    ])
    .expect("rows have equal length")
}

/// Symmetric matrix similar to [`ktilde_quotient`] (scaling by the square
/// roots of the part sizes).
pub fn ktilde_quotient_symmetric(lambda: i64) -> DenseMatrix<i64> {
    let mu = (lambda - 1) * (lambda - 1);
    let root = (lambda - 1).abs();
    DenseMatrix::from_rows(vec![
        vec![0, root, 0],
        vec![root, mu - 1, mu],
        vec![0, mu, mu - 1],
    ])
    .expect("rows have equal length")
}
