//! Sums of Hoffman graphs: the combinatorial sum test and composition of
//! parts over a shared fat namespace.

use std::collections::{BTreeMap, HashMap};

use super::HoffmanGraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The first sum condition found to fail, numbered as in the combinatorial
/// characterization of sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SumViolation {
    /// (1) a fat vertex belongs to neither generated subgraph.
    UncoveredFat { fat: usize },
    /// (3) a slim of one part touches a fat outside that part's fat set.
    FatOutsidePart { slim: usize, fat: usize },
    /// (4) a cross pair shares more than one fat, or adjacency disagrees with
    /// having exactly one common fat.
    CrossPair {
        x: usize,
        y: usize,
        common_fats: usize,
        adjacent: bool,
    },
}

impl SumViolation {
    pub fn condition(&self) -> u8 {
        match self {
            SumViolation::UncoveredFat { .. } => 1,
            SumViolation::FatOutsidePart { .. } => 3,
            SumViolation::CrossPair { .. } => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumCheck {
    pub holds: bool,
    pub violation: Option<SumViolation>,
}

impl SumCheck {
    fn fail(v: SumViolation) -> Self {
        SumCheck {
            holds: false,
            violation: Some(v),
        }
    }
}

pub(super) fn check_sum(
    h: &HoffmanGraph,
    first: &VertexSet,
    second: &VertexSet,
) -> Result<SumCheck> {
    let s = h.slim_count();
    let mut part = vec![None; s];
    for (i, block) in [first, second].into_iter().enumerate() {
        for x in block.iter() {
            if x >= s {
                return Err(Error::InvalidPartition(format!("{x} is not a slim vertex")));
            }
            if part[x].replace(i).is_some() {
                return Err(Error::InvalidPartition(format!(
                    "slim {x} lies in both blocks"
                )));
            }
        }
    }
    if let Some(x) = part.iter().position(Option::is_none) {
        return Err(Error::InvalidPartition(format!(
            "slim {x} is in neither block"
        )));
    }

    let fat_sets = [h.generated_fats(first), h.generated_fats(second)];
    for f in h.fats() {
        if !fat_sets.iter().any(|fs| fs.binary_search(&f).is_ok()) {
            return Ok(SumCheck::fail(SumViolation::UncoveredFat { fat: f }));
        }
    }
    for x in 0..s {
        let own = &fat_sets[part[x].expect("partition checked")];
        if let Some(&f) = h
            .fat_neighbors(x)
            .iter()
            .find(|f| own.binary_search(f).is_err())
        {
            return Ok(SumCheck::fail(SumViolation::FatOutsidePart {
                slim: x,
                fat: f,
            }));
        }
    }
    for x in first.iter() {
        for y in second.iter() {
            let common_fats = h.common_fats(x, y);
            let adjacent = h.graph().is_adjacent(x, y);
            if common_fats > 1 || adjacent != (common_fats == 1) {
                let (x, y) = (x.min(y), x.max(y));
                return Ok(SumCheck::fail(SumViolation::CrossPair {
                    x,
                    y,
                    common_fats,
                    adjacent,
                }));
            }
        }
    }
    Ok(SumCheck {
        holds: true,
        violation: None,
    })
}

/// How a composed Hoffman graph splits back into its parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumDecomposition {
    pub parts: Vec<HoffmanGraph>,
    /// Slim indices of each part inside the composition.
    pub slim_partition: Vec<VertexSet>,
    /// Per part, the global fat vertex each local fat maps to.
    pub shared_fat_map: Vec<Vec<usize>>,
    /// Label of each global fat vertex, in fat order.
    pub fat_labels: Vec<usize>,
}

/// Sums `parts` whose fat vertices are named by `fat_names` (one label per
/// local fat, injective within a part). Equal labels across parts are
/// identified.
///
/// Slims of part `i` follow those of parts `0..i`; global fats are ordered
/// by label. Cross-part slims become adjacent exactly when they share one
/// fat; sharing two or more is rejected.
pub fn compose(
    parts: &[HoffmanGraph],
    fat_names: &[Vec<usize>],
) -> Result<(HoffmanGraph, SumDecomposition)> {
    if parts.len() != fat_names.len() {
        return Err(Error::InvalidParameter(format!(
            "{} parts but {} fat name lists",
            parts.len(),
            fat_names.len()
        )));
    }
    for (i, (part, names)) in parts.iter().zip(fat_names).enumerate() {
        part.check()?;
        if names.len() != part.fat_count() {
            return Err(Error::InvalidParameter(format!(
                "part {i} has {} fats but {} names",
                part.fat_count(),
                names.len()
            )));
        }
        if VertexSet::from_unsorted(names.iter().copied()).len() != names.len() {
            return Err(Error::InvalidParameter(format!(
                "part {i} repeats a fat name"
            )));
        }
    }

    let labels: BTreeMap<usize, usize> = fat_names
        .iter()
        .flatten()
        .copied()
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .enumerate()
        .map(|(i, label)| (label, i))
        .collect();
    let slim_total: usize = parts.iter().map(HoffmanGraph::slim_count).sum();

    let mut offsets = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for p in parts {
        offsets.push(acc);
        acc += p.slim_count();
    }
    let shared_fat_map: Vec<Vec<usize>> = fat_names
        .iter()
        .map(|names| names.iter().map(|l| slim_total + labels[l]).collect())
        .collect();

    let mut edges = Vec::new();
    let mut slim_fats: Vec<Vec<usize>> = vec![Vec::new(); slim_total];
    for (i, part) in parts.iter().enumerate() {
        let off = offsets[i];
        for (u, v) in part.graph().edges() {
            let map = |x: usize| {
                if x < part.slim_count() {
                    off + x
                } else {
                    shared_fat_map[i][x - part.slim_count()]
                }
            };
            let (gu, gv) = (map(u), map(v));
            edges.push((gu, gv));
            if gv >= slim_total {
                slim_fats[gu].push(gv);
            }
        }
    }

    // cross-part pairs through each fat
    let part_of: Vec<usize> = (0..parts.len())
        .flat_map(|i| std::iter::repeat_n(i, parts[i].slim_count()))
        .collect();
    let mut by_fat: Vec<Vec<usize>> = vec![Vec::new(); labels.len()];
    for (x, fats) in slim_fats.iter().enumerate() {
        for &f in fats {
            by_fat[f - slim_total].push(x);
        }
    }
    let mut shared: HashMap<(usize, usize), usize> = HashMap::new();
    for members in &by_fat {
        for (a, &x) in members.iter().enumerate() {
            for &y in &members[a + 1..] {
                if part_of[x] != part_of[y] {
                    *shared.entry((x.min(y), x.max(y))).or_default() += 1;
                }
            }
        }
    }
    let mut cross: Vec<_> = shared.into_iter().collect();
    cross.sort_unstable();
    for ((x, y), count) in cross {
        if count > 1 {
            return Err(Error::SumConditionViolated(x, y, count));
        }
        edges.push((x, y));
    }

    let graph = Graph::from_edges(slim_total + labels.len(), edges)?;
    let hoffman = HoffmanGraph::new(graph, slim_total)?;
    let slim_partition = parts
        .iter()
        .zip(&offsets)
        .map(|(p, &off)| {
            VertexSet::full(p.slim_count())
                .iter()
                .map(|x| x + off)
                .collect::<Vec<_>>()
        })
        .map(|v| VertexSet::new(v).expect("offset ranges are increasing"))
        .collect();
    let decomposition = SumDecomposition {
        parts: parts.to_vec(),
        slim_partition,
        shared_fat_map,
        fat_labels: labels.into_keys().collect(),
    };
    Ok((hoffman, decomposition))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, gen_steiner, steiner_block, steiner_hoffman};

    #[test]
    fn disjoint_fat_free_graphs_sum() {
        let h = HoffmanGraph::from_graph(Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap());
        let a = VertexSet::new(vec![0, 1]).unwrap();
        let b = VertexSet::new(vec![2, 3]).unwrap();
        assert!(h.check_sum(&a, &b).unwrap().holds);
    }

    #[test]
    fn steiner_block_split_fails_condition_four() {
        let block = steiner_block();
        let a = VertexSet::new(vec![0, 1]).unwrap();
        let b = VertexSet::new(vec![2, 3]).unwrap();
        let check = block.check_sum(&a, &b).unwrap();
        assert!(!check.holds);
        let v = check.violation.unwrap();
        assert_eq!(v.condition(), 4);
        assert_eq!(
            v,
            SumViolation::CrossPair {
                x: 0,
                y: 2,
                common_fats: 1,
                adjacent: false
            }
        );
    }

    #[test]
    fn invalid_partitions_are_errors() {
        let block = steiner_block();
        let a = VertexSet::new(vec![0, 1]).unwrap();
        let b = VertexSet::new(vec![1, 2, 3]).unwrap();
        assert!(block.check_sum(&a, &b).is_err());
        let c = VertexSet::new(vec![2]).unwrap();
        assert!(block.check_sum(&a, &c).is_err());
    }

    #[test]
    fn composition_examples() {
        let block = steiner_block();
        let (one, _) = compose(std::slice::from_ref(&block), &[vec![4, 5, 6, 7]]).unwrap();
        assert_eq!(one, block);

        let claw = HoffmanGraph::claw(1);
        let (pair, dec) = compose(&[claw.clone(), claw], &[vec![9], vec![9]]).unwrap();
        assert_eq!(pair.slim_graph(), complete(2));
        assert_eq!(pair.fat_count(), 1);
        assert_eq!(dec.fat_labels, vec![9]);

        let (empty, _) = compose(&[], &[]).unwrap();
        assert_eq!(empty, HoffmanGraph::empty());
    }

    #[test]
    fn composition_rejects_double_shared_fats() {
        let two = HoffmanGraph::claw(2);
        let err = compose(&[two.clone(), two], &[vec![0, 1], vec![0, 1]]).unwrap_err();
        assert_eq!(err, Error::SumConditionViolated(0, 1, 2));
    }

    #[test]
    fn steiner_sum_splits() {
        let h = steiner_hoffman(&gen_steiner(13).unwrap()).unwrap();
        let first = VertexSet::full(4);
        let rest = VertexSet::new((4..52).collect()).unwrap();
        assert!(h.check_sum(&first, &rest).unwrap().holds);
        let blocks = h.decompose().unwrap();
        assert_eq!(blocks.len(), 13);
        assert!(blocks.iter().all(|b| b.len() == 4));
    }
}
