//! Grouping large maximal cliques into classes of near-identical cliques,
//! their quasi-cliques, and the associated Hoffman graph with one fat vertex
//! per class.

use fixedbitset::FixedBitSet;
use petgraph::unionfind::UnionFind;

use crate::cliques::maximal_cliques_at_least;
use crate::error::{Error, Result};
use crate::generators::gen_ktilde;
use crate::graph::{Graph, VertexSet};
use crate::hoffman::HoffmanGraph;
use crate::spectrum::certify_lambda_min_at_least;

/// Upper end of the `m(lambda)` sweep; far beyond any desk-scale lambda.
const M_LAMBDA_SWEEP_LIMIT: usize = 100_000;

/// Least `m` with `lambda_min(K~_{2m}) < -lambda`, decided exactly.
pub fn m_lambda(lambda: usize) -> Result<usize> {
    if lambda == 0 {
        return Err(Error::InvalidParameter("lambda must be at least 1".into()));
    }
    let bound = i64::try_from(lambda)
        .map_err(|_| Error::InvalidParameter(format!("lambda {lambda} too large")))?;
    for m in 1..=M_LAMBDA_SWEEP_LIMIT {
        let kt = gen_ktilde(m)?;
        if !certify_lambda_min_at_least(&kt.adjacency_matrix(), bound)?.holds {
            return Ok(m);
        }
    }
    Err(Error::InvalidParameter(format!(
        "m({lambda}) exceeds {M_LAMBDA_SWEEP_LIMIT}"
    )))
}

/// `(m + 1)^2`, the order from which the clique relation is guaranteed to
/// be an equivalence.
pub fn equivalence_floor(m: usize) -> usize {
    (m + 1) * (m + 1)
}

/// Equivalence classes of the maximal cliques of order at least `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueClassSet {
    pub m: usize,
    pub n: usize,
    /// The maximal cliques of order `>= n`, lexicographic.
    pub cliques: Vec<VertexSet>,
    /// Indices into `cliques`, ascending within a class; classes ordered by
    /// their smallest clique index.
    pub classes: Vec<Vec<usize>>,
    /// One per class.
    pub quasi_cliques: Vec<VertexSet>,
}

impl CliqueClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Number of members of `clique` that `x` is not adjacent to (`x` itself
/// excluded).
fn non_neighbors_in(g: &Graph, x: usize, clique: &FixedBitSet, size: usize) -> usize {
    let inside = usize::from(clique.contains(x));
    size - inside - g.row(x).intersection_count(clique)
}

fn related(
    g: &Graph,
    m: usize,
    a: (&VertexSet, &FixedBitSet),
    b: (&VertexSet, &FixedBitSet),
) -> bool {
    a.0.iter()
        .all(|x| non_neighbors_in(g, x, b.1, b.0.len()) < m)
        && b.0
            .iter()
            .all(|y| non_neighbors_in(g, y, a.1, a.0.len()) < m)
}

/// Vertices with at most `m - 1` non-neighbors in `clique`.
pub fn quasi_clique_of(g: &Graph, clique: &VertexSet, m: usize) -> VertexSet {
    let bits = clique.to_bits(g.n());
    VertexSet::new(
        (0..g.n())
            .filter(|&x| non_neighbors_in(g, x, &bits, clique.len()) < m)
            .collect(),
    )
    .expect("ascending range")
}

/// Classes of large maximal cliques under the relation "every vertex of
/// either clique misses fewer than `m` vertices of the other".
///
/// Requires `n >= (m+1)^2` unless `allow_small_n` is set. Transitivity is
/// verified either way, as is independence of each quasi-clique from the
/// chosen representative.
pub fn clique_classes(
    g: &Graph,
    m: usize,
    n: usize,
    allow_small_n: bool,
) -> Result<CliqueClassSet> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let floor = equivalence_floor(m);
    if n < floor && !allow_small_n {
        return Err(Error::ThresholdTooSmall { n, floor });
    }
    let cliques = maximal_cliques_at_least(g, n);
    let bits: Vec<FixedBitSet> = cliques.iter().map(|c| c.to_bits(g.n())).collect();
    let k = cliques.len();
    let rel = |i: usize, j: usize| related(g, m, (&cliques[i], &bits[i]), (&cliques[j], &bits[j]));

    let mut relation = vec![vec![false; k]; k];
    let mut uf = UnionFind::<usize>::new(k);
    #[allow(clippy::needless_range_loop)]
    for i in 0..k {
        relation[i][i] = true;
        for j in (i + 1)..k {
            if rel(i, j) {
                relation[i][j] = true;
                relation[j][i] = true;
                uf.union(i, j);
            }
        }
    }

    let labels = uf.into_labeling();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of_root = std::collections::HashMap::new();
    for (i, &root) in labels.iter().enumerate() {
        let idx = *class_of_root.entry(root).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[idx].push(i);
    }

    for class in &classes {
        for (a, &i) in class.iter().enumerate() {
            for &j in &class[a + 1..] {
                if !relation[i][j] {
                    return Err(transitivity_witness(&relation, i, j));
                }
            }
        }
    }

    let mut quasi_cliques = Vec::with_capacity(classes.len());
    for (ci, class) in classes.iter().enumerate() {
        let q = quasi_clique_of(g, &cliques[class[0]], m);
        if class[1..]
            .iter()
            .any(|&j| quasi_clique_of(g, &cliques[j], m) != q)
        {
            return Err(Error::QuasiCliqueMismatch(ci));
        }
        quasi_cliques.push(q);
    }

    Ok(CliqueClassSet {
        m,
        n,
        cliques,
        classes,
        quasi_cliques,
    })
}

/// Given `i` and `j` joined through a chain of related cliques but not
/// related themselves, finds `a ~ b ~ c` with `a` and `c` unrelated.
fn transitivity_witness(relation: &[Vec<bool>], i: usize, j: usize) -> Error {
    let k = relation.len();
    let mut parent = vec![usize::MAX; k];
    parent[i] = i;
    let mut queue = std::collections::VecDeque::from([i]);
    while let Some(u) = queue.pop_front() {
        for v in 0..k {
            if relation[u][v] && parent[v] == usize::MAX {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    let mut path = vec![j];
    while *path.last().expect("nonempty") != i {
        path.push(parent[*path.last().expect("nonempty")]);
    }
    path.reverse();
    let t = (2..path.len())
        .find(|&t| !relation[i][path[t]])
        .expect("j is unrelated to i");
    Error::NonTransitive(i, path[t - 1], path[t])
}

/// The associated Hoffman graph: the input graph as slim graph, plus one fat
/// vertex per clique class adjacent to exactly that class's quasi-clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedHoffmanGraph {
    pub hoffman: HoffmanGraph,
    /// Class index of fat vertex `s + i` is `class_of_fat[i]`.
    pub class_of_fat: Vec<usize>,
    pub classes: CliqueClassSet,
    /// Set when there are no maximal cliques of order `>= n`.
    pub no_classes: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AssociationOptions {
    /// Accept `n < (m+1)^2`; transitivity is still verified.
    pub allow_small_n: bool,
    /// Search for an induced `K~_{2m}` first and fail if one exists.
    pub check_ktilde: bool,
}

pub fn associated_hoffman(
    g: &Graph,
    m: usize,
    n: usize,
    options: AssociationOptions,
) -> Result<AssociatedHoffmanGraph> {
    if options.check_ktilde {
        if let Some(witness) = find_ktilde(g, m) {
            return Err(Error::KTildeFound {
                m,
                witness: witness.into_vec(),
            });
        }
    }
    let classes = clique_classes(g, m, n, options.allow_small_n)?;
    let s = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for (i, q) in classes.quasi_cliques.iter().enumerate() {
        edges.extend(q.iter().map(|x| (x, s + i)));
    }
    let graph = Graph::from_edges(s + classes.len(), edges)?;
    let hoffman = HoffmanGraph::new(graph, s)?;
    hoffman.check()?;
    Ok(AssociatedHoffmanGraph {
        class_of_fat: (0..classes.len()).collect(),
        no_classes: classes.is_empty(),
        hoffman,
        classes,
    })
}

/// Result of searching for an induced `K~_{2m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTildeCheck {
    pub free: bool,
    /// Clique of order `2m` plus the outside vertex, sorted.
    pub witness: Option<VertexSet>,
}

pub fn check_ktilde_free(g: &Graph, m: usize) -> KTildeCheck {
    let witness = find_ktilde(g, m);
    KTildeCheck {
        free: witness.is_none(),
        witness,
    }
}

/// Looks for a vertex `x` and a clique of order `2m` avoiding `x` with
/// exactly `m` members adjacent to `x`. The first witness in vertex order
/// is returned.
pub fn find_ktilde(g: &Graph, m: usize) -> Option<VertexSet> {
    if m == 0 {
        return None;
    }
    for x in 0..g.n() {
        let mut candidates = FixedBitSet::with_capacity(g.n());
        candidates.insert_range(..);
        candidates.set(x, false);
        let mut clique = Vec::with_capacity(2 * m);
        if ktilde_search(g, g.row(x), m, &mut clique, candidates, 0, 0) {
            clique.push(x);
            return Some(VertexSet::from_unsorted(clique));
        }
    }
    None
}

fn ktilde_search(
    g: &Graph,
    apex_nbrs: &FixedBitSet,
    m: usize,
    clique: &mut Vec<usize>,
    candidates: FixedBitSet,
    inside: usize,
    outside: usize,
) -> bool {
    if inside == m && outside == m {
        return true;
    }
    let in_avail = candidates.intersection_count(apex_nbrs);
    let out_avail = candidates.count_ones(..) - in_avail;
    if inside + in_avail < m || outside + out_avail < m {
        return false;
    }
    for v in candidates.ones() {
        let is_in = apex_nbrs.contains(v);
        if (is_in && inside == m) || (!is_in && outside == m) {
            continue;
        }
        let mut next = candidates.clone();
        next.intersect_with(g.row(v));
        next.remove_range(..v + 1);
        clique.push(v);
        let (i, o) = if is_in {
            (inside + 1, outside)
        } else {
            (inside, outside + 1)
        };
        if ktilde_search(g, apex_nbrs, m, clique, next, i, o) {
            return true;
        }
        clique.pop();
    }
    false
}

/// Every slim vertex has at most `lambda` fat neighbors.
pub fn fat_degree_bound_check(ah: &AssociatedHoffmanGraph, lambda: usize) -> bool {
    ah.hoffman.max_fat_degree() <= lambda
}

/// Shape of the quasi-cliques inside the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiCliqueShape {
    /// Maximum degree of the complement of each induced quasi-clique.
    pub complement_valency: Vec<usize>,
    /// Largest intersection over all pairs (0 with fewer than two).
    pub max_pairwise_intersection: usize,
}

pub fn quasi_clique_shape(g: &Graph, quasi_cliques: &[VertexSet]) -> QuasiCliqueShape {
    let complement_valency = quasi_cliques
        .iter()
        .map(|q| g.plex_defect(q).map_or(0, |(_, missing)| missing))
        .collect();
    let mut max_pairwise_intersection = 0;
    for (i, a) in quasi_cliques.iter().enumerate() {
        for b in &quasi_cliques[i + 1..] {
            max_pairwise_intersection = max_pairwise_intersection.max(a.intersection_len(b));
        }
    }
    QuasiCliqueShape {
        complement_valency,
        max_pairwise_intersection,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, gen_hat, gen_line_graph, petersen};

    #[test]
    fn m_lambda_small_values() {
        assert_eq!(m_lambda(1).unwrap(), 1);
        assert_eq!(m_lambda(2).unwrap(), 4);
        assert!(m_lambda(0).is_err());
    }

    #[test]
    fn classes_of_complete_graph() {
        let cs = clique_classes(&complete(30), 4, 25, false).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs.quasi_cliques[0], VertexSet::full(30));
    }

    #[test]
    fn classes_of_line_graph() {
        let g = gen_line_graph(&complete(30)).unwrap();
        let cs = clique_classes(&g, 4, 25, false).unwrap();
        assert_eq!(cs.len(), 30);
        for (class, q) in cs.classes.iter().zip(&cs.quasi_cliques) {
            assert_eq!(class.len(), 1);
            assert_eq!(q, &cs.cliques[class[0]]);
            assert_eq!(q.len(), 29);
        }
    }

    #[test]
    fn threshold_enforced() {
        assert_eq!(
            clique_classes(&cycle(4), 1, 3, false),
            Err(Error::ThresholdTooSmall { n: 3, floor: 4 })
        );
        assert!(clique_classes(&cycle(4), 1, 4, false).unwrap().is_empty());
    }

    #[test]
    fn non_transitive_relation_detected() {
        // A={0,1,2}, B={1,2,3}, C={2,3,4} with m = 2: A~B and B~C since
        // each vertex misses one, but 0 misses both 3 and 4 in C.
        let g =
            Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        let err = clique_classes(&g, 2, 3, true).unwrap_err();
        assert!(matches!(err, Error::NonTransitive(..)), "{err:?}");
    }

    #[test]
    fn associated_hoffman_graphs() {
        let g = gen_line_graph(&complete(30)).unwrap();
        let ah = associated_hoffman(&g, 4, 25, AssociationOptions::default()).unwrap();
        assert_eq!(ah.hoffman.slim_count(), 435);
        assert_eq!(ah.hoffman.fat_count(), 30);
        assert!(ah
            .hoffman
            .slims()
            .all(|x| ah.hoffman.fat_neighbors(x).len() == 2));
        assert_eq!(ah.hoffman.slim_graph(), g);
        assert!(fat_degree_bound_check(&ah, 2));
        assert!(!fat_degree_bound_check(&ah, 1));

        let k = associated_hoffman(&complete(30), 4, 25, AssociationOptions::default()).unwrap();
        assert_eq!(k.hoffman.fat_count(), 1);
        assert_eq!(k.hoffman.quasi_clique(30).unwrap(), VertexSet::full(30));

        let opts = AssociationOptions {
            allow_small_n: false,
            check_ktilde: true,
        };
        let p = associated_hoffman(&petersen(), 2, 9, opts).unwrap();
        assert!(p.no_classes);
        assert_eq!(p.hoffman.fat_count(), 0);
    }

    #[test]
    fn ktilde_search() {
        let c5 = check_ktilde_free(&cycle(5), 1);
        assert!(!c5.free);
        assert_eq!(c5.witness.unwrap().len(), 3);
        assert!(check_ktilde_free(&complete(9), 2).free);
        let kt8 = gen_hat(4, 4).unwrap();
        assert_eq!(check_ktilde_free(&kt8, 4).witness, Some(VertexSet::full(9)));
        let lk = gen_line_graph(&complete(12)).unwrap();
        assert!(check_ktilde_free(&lk, 4).free);
        let opts = AssociationOptions {
            allow_small_n: false,
            check_ktilde: true,
        };
        assert!(matches!(
            associated_hoffman(&kt8, 1, 4, opts),
            Err(Error::KTildeFound { .. })
        ));
    }

    #[test]
    fn quasi_clique_shapes() {
        let g = gen_line_graph(&complete(30)).unwrap();
        let cs = clique_classes(&g, 4, 25, false).unwrap();
        let shape = quasi_clique_shape(&g, &cs.quasi_cliques);
        assert!(shape.complement_valency.iter().all(|&d| d == 0));
        assert_eq!(shape.max_pairwise_intersection, 1);
    }
}
