mod common;

use rand::Rng;
use ssl_core::graph::VertexSet;
use ssl_core::hoffman::{compose, HoffmanGraph};
use ssl_core::DenseMatrix;

/// `A_s - C C^T` from the full adjacency matrix, entry by entry.
fn brute_special(h: &HoffmanGraph) -> DenseMatrix<i64> {
    let a = h.graph().adjacency_matrix::<i64>();
    let s = h.slim_count();
    let fats: Vec<usize> = h.fats().collect();
    DenseMatrix::from_fn(s, s, |i, j| {
        let cct: i64 = fats.iter().map(|&f| a[(i, f)] * a[(j, f)]).sum();
        a[(i, j)] - cct
    })
}

#[test]
fn special_matrix_matches_brute_force() {
    let mut rng = common::rng(11);
    for _ in 0..100 {
        let s = rng.random_range(1..=35);
        let f = rng.random_range(0..=15);
        let p = rng.random_range(0.1..0.9);
        let h = common::random_hoffman(&mut rng, s, f, p, 0.2);
        assert_eq!(h.special_matrix().unwrap().entries(), &brute_special(&h));
    }
}

#[test]
fn hoffman_interlacing() {
    let mut rng = common::rng(12);
    for _ in 0..100 {
        let s = rng.random_range(2..=20);
        let f = rng.random_range(0..=6);
        let h = common::random_hoffman(&mut rng, s, f, 0.5, 0.3);
        let mut w = common::random_subset(&mut rng, s, 0.5);
        if w.is_empty() {
            w = VertexSet::new(vec![s - 1]).unwrap();
        }
        let whole = h.lambda_min(1e-9).unwrap().lambda_min;
        let sub = h
            .induced_sub(&w)
            .unwrap()
            .lambda_min(1e-9)
            .unwrap()
            .lambda_min;
        assert!(sub >= whole - 1e-7, "{sub} < {whole}");
    }
}

#[test]
fn compose_round_trip() {
    let mut rng = common::rng(13);
    let mut done = 0;
    let mut indecomposable_cases = 0;
    while done < 100 {
        let k = rng.random_range(1..=4);
        let mut parts = Vec::new();
        let mut names = Vec::new();
        for _ in 0..k {
            let s = rng.random_range(1..=6);
            let f = rng.random_range(1..=3);
            parts.push(common::random_hoffman(&mut rng, s, f, 0.5, 0.3));
            let mut pool: Vec<usize> = (0..6).collect();
            let mut chosen = Vec::new();
            for _ in 0..f {
                chosen.push(pool.remove(rng.random_range(0..pool.len())));
            }
            names.push(chosen);
        }
        let Ok((h, dec)) = compose(&parts, &names) else {
            continue;
        };
        done += 1;
        h.check().unwrap();

        let all = VertexSet::full(h.slim_count());
        let sp = h.special_matrix().unwrap();
        for (i, block) in dec.slim_partition.iter().enumerate() {
            let rest =
                VertexSet::new(all.iter().filter(|&x| !block.contains(x)).collect()).unwrap();
            assert!(h.check_sum(block, &rest).unwrap().holds);
            let local = parts[i].special_matrix().unwrap();
            for (a, x) in block.iter().enumerate() {
                for (b, y) in block.iter().enumerate() {
                    assert_eq!(sp.entries()[(x, y)], local.entries()[(a, b)]);
                }
                for y in rest.iter() {
                    assert_eq!(sp.entries()[(x, y)], 0);
                }
            }
        }

        if parts.iter().all(|p| p.decompose().unwrap().len() == 1) {
            indecomposable_cases += 1;
            assert_eq!(h.decompose().unwrap(), dec.slim_partition);
        }
    }
    assert!(indecomposable_cases > 10);
}
