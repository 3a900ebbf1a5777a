mod common;

use rand::Rng;
use ssl_core::analysis::{
    clique_threshold, hat_bound_holds, plex_threshold, verify_clique_dichotomy,
    verify_plex_dichotomy, verify_theorem_properties, Verdict,
};
use ssl_core::association::{
    associated_hoffman, equivalence_floor, m_lambda, quasi_clique_shape, AssociationOptions,
};
use ssl_core::cliques::{clique_number, maximal_cliques_at_least};
use ssl_core::generators::{
    complete, gen_hamming, gen_hat, gen_line_graph, gen_steiner, steiner_hoffman,
};
use ssl_core::graph::Graph;
use ssl_core::spectrum::certify_lambda_min_at_least;

fn certified(g: &Graph, lambda: usize) -> bool {
    certify_lambda_min_at_least(&g.adjacency_matrix(), lambda as i64)
        .unwrap()
        .holds
}

#[test]
fn hat_bound_is_necessary() {
    for lambda in 1..=3 {
        for a in 1..=11 {
            for m in 0..=(11 - a) {
                let g = gen_hat(a, m).unwrap();
                if certified(&g, lambda) {
                    assert!(
                        hat_bound_holds(a, m, lambda),
                        "H({a},{m}) at lambda {lambda}"
                    );
                }
            }
        }
    }
}

#[test]
fn hat_has_single_low_degree_vertex() {
    for a in 1..=8 {
        for m in 2..=8 {
            let g = gen_hat(a, m).unwrap();
            assert_eq!(
                (0..g.n()).filter(|&v| g.degree(v) == a).count(),
                1,
                "H({a},{m})"
            );
        }
    }
}

#[test]
fn m_lambda_sequence() {
    let values: Vec<usize> = (1..=6).map(|l| m_lambda(l).unwrap()).collect();
    assert!(values.windows(2).all(|w| w[0] <= w[1]), "{values:?}");
    for (i, &m) in values.iter().enumerate() {
        let lambda = i + 1;
        assert!(m > (lambda - 1) * (lambda - 1), "m({lambda}) = {m}");
    }
}

#[test]
fn generator_certificates() {
    for (d, q) in [(1, 5), (2, 3), (2, 6), (3, 3), (3, 4), (4, 2)] {
        let g = gen_hamming(d, q).unwrap();
        assert_eq!(g.regular_degree(), Some(d * (q - 1)));
        assert_eq!(clique_number(&g), q);
        assert!(certified(&g, d));
    }
    let mut rng = common::rng(21);
    for _ in 0..30 {
        let n = rng.random_range(2..=12);
        let base = common::random_graph(&mut rng, n, 0.5);
        if let Ok(lg) = gen_line_graph(&base) {
            assert!(certified(&lg, 2));
        }
    }
    for v in [13, 16] {
        let slim = steiner_hoffman(&gen_steiner(v).unwrap())
            .unwrap()
            .slim_graph();
        assert!(certified(&slim, 3));
    }
}

#[test]
fn clique_dichotomy_on_corpus() {
    let corpus: Vec<(Graph, usize)> = vec![
        (gen_line_graph(&complete(12)).unwrap(), 2),
        (gen_hamming(2, 10).unwrap(), 2),
        (gen_line_graph(&complete(10)).unwrap(), 2),
        (Graph::from_fn(12, |u, v| u / 4 == v / 4), 1),
    ];
    for (g, lambda) in corpus {
        assert!(certified(&g, lambda));
        let threshold = clique_threshold(lambda) as usize;
        let cliques = maximal_cliques_at_least(&g, threshold);
        assert!(!cliques.is_empty());
        for c in cliques {
            let clique = verify_clique_dichotomy(&g, &c, lambda).unwrap();
            assert_eq!(clique.verdict, Verdict::Holds);
            assert_eq!(verify_plex_dichotomy(&g, &c, 1, lambda).unwrap(), clique);
        }
    }
}

#[test]
fn plex_threshold_reduces_to_clique_threshold() {
    for lambda in 1..=10 {
        assert_eq!(plex_threshold(lambda, 1), clique_threshold(lambda));
    }
}

#[test]
fn cocktail_plex_in_larger_graph() {
    // K_{2x12} joined to a K_3: the cocktail party is a 2-plex of order 24
    let g = Graph::from_fn(27, |u, v| {
        if u < 24 && v < 24 {
            u / 2 != v / 2
        } else {
            true
        }
    });
    assert!(certified(&g, 2));
    let p = ssl_core::graph::VertexSet::new((0..24).collect()).unwrap();
    let r = verify_plex_dichotomy(&g, &p, 2, 2).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    assert!(r.profile.counts.iter().all(|&(_, s)| s == 24));
}

#[test]
fn associated_quasi_cliques_obey_the_theorem() {
    let corpus: Vec<(Graph, usize)> = vec![
        (complete(30), 1),
        (gen_line_graph(&complete(30)).unwrap(), 2),
        (gen_hamming(2, 26).unwrap(), 2),
        (
            steiner_hoffman(&gen_steiner(16).unwrap())
                .unwrap()
                .slim_graph(),
            3,
        ),
    ];
    for (g, lambda) in corpus {
        assert!(certified(&g, lambda));
        let m = m_lambda(lambda).unwrap();
        let n = equivalence_floor(m);
        let ah = associated_hoffman(&g, m, n, AssociationOptions::default()).unwrap();
        let qs = &ah.classes.quasi_cliques;
        let shape = quasi_clique_shape(&g, qs);
        let sq = (lambda - 1) * (lambda - 1);
        assert!(shape.complement_valency.iter().all(|&d| d <= sq));
        assert!(shape.max_pairwise_intersection < lambda);
        let report = verify_theorem_properties(&g, lambda, qs, n).unwrap();
        assert!(!report.is_counterexample());
        assert!(report.order_ok);
    }
}
