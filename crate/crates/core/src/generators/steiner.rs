//! Steiner systems S(2,4,v) from the projective plane of order 3 and the
//! affine plane of order 4, and the Hoffman sum built over their blocks.

use crate::error::{Error, Result};
use crate::hoffman::{compose, HoffmanGraph};

/// A 2-(v,4,1) design: every pair of points lies in exactly one block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDesign {
    v: usize,
    blocks: Vec<[usize; 4]>,
}

impl BlockDesign {
    /// Validates the design axioms; blocks are stored sorted.
    pub fn new(v: usize, blocks: Vec<[usize; 4]>) -> Result<Self> {
        if v % 12 != 1 && v % 12 != 4 {
            return Err(Error::UnsupportedSteinerOrder(v));
        }
        let mut blocks: Vec<[usize; 4]> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_unstable();
        let mut cover = vec![0u32; v * v];
        for b in &blocks {
            if b[3] >= v || b.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter(format!("bad block {b:?}")));
            }
            for i in 0..4 {
                for j in (i + 1)..4 {
                    cover[b[i] * v + b[j]] += 1;
                }
            }
        }
        for x in 0..v {
            for y in (x + 1)..v {
                let c = cover[x * v + y];
                if c != 1 {
                    return Err(Error::InvalidParameter(format!(
                        "pair {{{x}, {y}}} lies in {c} blocks"
                    )));
                }
            }
        }
        Ok(BlockDesign { v, blocks })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn blocks(&self) -> &[[usize; 4]] {
        &self.blocks
    }

    /// Replication number `(v-1)/3`.
    pub fn r(&self) -> usize {
        (self.v - 1) / 3
    }

    /// Block count `v(v-1)/12`.
    pub fn b(&self) -> usize {
        self.blocks.len()
    }
}

/// S(2,4,13) as PG(2,3) or S(2,4,16) as AG(2,4).
pub fn gen_steiner(v: usize) -> Result<BlockDesign> {
    match v {
        13 => BlockDesign::new(13, projective_plane_order_3()),
        16 => BlockDesign::new(16, affine_plane_order_4()),
        _ => Err(Error::UnsupportedSteinerOrder(v)),
    }
}

fn projective_plane_order_3() -> Vec<[usize; 4]> {
    // normalized vectors of F_3^3: first nonzero coordinate is 1
    let points: Vec<[usize; 3]> = (0..27)
        .map(|x| [x / 9, (x / 3) % 3, x % 3])
        .filter(|p| p.iter().find(|&&c| c != 0) == Some(&1))
        .collect();
    points
        .iter()
        .map(|line| {
            let on: Vec<usize> = points
                .iter()
                .enumerate()
                .filter(|(_, p)| (0..3).map(|i| line[i] * p[i]).sum::<usize>() % 3 == 0)
                .map(|(i, _)| i)
                .collect();
            on.try_into().expect("a line of PG(2,3) has 4 points")
        })
        .collect()
}

const GF4_MUL: [[usize; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

fn affine_plane_order_4() -> Vec<[usize; 4]> {
    let point = |x: usize, y: usize| 4 * x + y;
    let mut lines = Vec::with_capacity(20);
    for row in &GF4_MUL {
        for intercept in 0..4 {
            let line = std::array::from_fn(|x| point(x, row[x] ^ intercept));
            lines.push(line);
        }
    }
    for x in 0..4 {
        lines.push([point(x, 0), point(x, 1), point(x, 2), point(x, 3)]);
    }
    lines
}

/// The four-slim, four-fat block: fats `f1..f4` (vertices 4..7) attach to
/// `{s1,s3}`, `{s1,s2}`, `{s3,s4}`, `{s2,s4}`, and the slim edges are
/// `s1s4` and `s2s3`.
pub fn steiner_block() -> HoffmanGraph {
    let edges = [
        (0, 4),
        (2, 4),
        (0, 5),
        (1, 5),
        (2, 6),
        (3, 6),
        (1, 7),
        (3, 7),
        (0, 3),
        (1, 2),
    ];
    HoffmanGraph::from_edges(4, 4, edges).expect("block edges are valid")
}

/// Sum of one [`steiner_block`] per design block, with the block's points
/// (ascending) naming its fats `f1..f4`.
pub fn steiner_hoffman(design: &BlockDesign) -> Result<HoffmanGraph> {
    let block = steiner_block();
    let parts = vec![block; design.b()];
    let names: Vec<Vec<usize>> = design.blocks().iter().map(|b| b.to_vec()).collect();
    let (h, _) = compose(&parts, &names)?;
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::max_clique_containing;
    use crate::generators::gen_cocktail;

    #[test]
    fn design_parameters() {
        let d13 = gen_steiner(13).unwrap();
        assert_eq!((d13.b(), d13.r()), (13, 4));
        let d16 = gen_steiner(16).unwrap();
        assert_eq!((d16.b(), d16.r()), (20, 5));
        assert_eq!(gen_steiner(14), Err(Error::UnsupportedSteinerOrder(14)));
        assert_eq!(gen_steiner(25), Err(Error::UnsupportedSteinerOrder(25)));
    }

    #[test]
    fn design_rejects_double_cover() {
        let mut blocks = gen_steiner(13).unwrap().blocks().to_vec();
        blocks[1] = blocks[0];
        assert!(BlockDesign::new(13, blocks).is_err());
    }

    #[test]
    fn steiner_slim_graphs() {
        for (v, r) in [(13, 4), (16, 5)] {
            let d = gen_steiner(v).unwrap();
            let h = steiner_hoffman(&d).unwrap();
            assert_eq!(h.slim_count(), 4 * d.b());
            assert_eq!(h.fat_count(), v);
            assert!(h.is_t_fat(2));
            let g = h.slim_graph();
            assert_eq!(g.regular_degree(), Some(4 * r - 3));
            assert!(g.is_connected());
            for x in 0..g.n() {
                assert_eq!(max_clique_containing(&g, x).len(), r);
            }
        }
    }

    #[test]
    fn quasi_cliques_are_cocktail_parties() {
        let h = steiner_hoffman(&gen_steiner(13).unwrap()).unwrap();
        let g = h.slim_graph();
        let cp = gen_cocktail(4).unwrap();
        for q in h.quasi_cliques() {
            assert_eq!(q.len(), 8);
            let sub = g.induced(&q).unwrap();
            // K_{2x4}: 6-regular on 8 vertices with a perfect-matching complement
            assert_eq!(sub.regular_degree(), cp.regular_degree());
            assert_eq!(sub.complement().regular_degree(), Some(1));
        }
    }
}
