//! Checkers for the structural consequences of `lambda_min >= -lambda`:
//! the hat-graph bound, attachment dichotomies for large cliques and plexes,
//! the plex-cover properties, and clique-order ratios of regular graphs.

use crate::cliques::max_clique_containing;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

fn lam_terms(lambda: usize) -> (u128, u128) {
    let l = lambda as u128;
    (l * l.saturating_sub(1), (l.saturating_sub(1)).pow(2))
}

/// `(a - λ(λ-1)) (m - (λ-1)^2) <= (λ(λ-1))^2`, which every induced `H(a, m)`
/// of a graph with `lambda_min >= -λ` satisfies.
pub fn hat_bound_holds(a: usize, m: usize, lambda: usize) -> bool {
    let (ll, sq) = lam_terms(lambda);
    let lhs = (a as i128 - ll as i128) * (m as i128 - sq as i128);
    lhs <= (ll * ll) as i128
}

/// `λ^4 - 2λ^3 + 3λ^2 - 3λ + 3`, the clique order from which the attachment
/// dichotomy applies.
pub fn clique_threshold(lambda: usize) -> u128 {
    let (ll, sq) = lam_terms(lambda);
    ll * ll + ll + sq + 2
}

pub fn plex_threshold(lambda: usize, t: usize) -> u128 {
    let (ll, sq) = lam_terms(lambda);
    let t = t as u128;
    t * (ll * ll + ll + sq + t.saturating_sub(1) * (sq + 1) + 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// The target is below the order threshold, so nothing is claimed.
    NotApplicable,
}

/// How the vertices outside `target` attach to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachmentProfile {
    pub target: VertexSet,
    /// Upper end of the low band `[0, low_max]`.
    pub low_max: usize,
    /// Lower end of the high band `[high_min, |target|]`.
    pub high_min: usize,
    /// `(vertex, neighbors in target)` for every vertex outside `target`.
    pub counts: Vec<(usize, usize)>,
    pub low: usize,
    pub high: usize,
    /// Outside vertices whose count falls strictly between the bands.
    pub middle: Vec<usize>,
}

impl AttachmentProfile {
    pub fn new(g: &Graph, target: &VertexSet, low_max: usize, high_min: usize) -> Self {
        let bits = target.to_bits(g.n());
        let mut profile = AttachmentProfile {
            target: target.clone(),
            low_max,
            high_min,
            counts: Vec::with_capacity(g.n() - target.len()),
            low: 0,
            high: 0,
            middle: Vec::new(),
        };
        for x in (0..g.n()).filter(|&x| !bits.contains(x)) {
            let s = g.row(x).intersection_count(&bits);
            profile.counts.push((x, s));
            if s <= low_max {
                profile.low += 1;
            } else if s >= high_min {
                profile.high += 1;
            } else {
                profile.middle.push(x);
            }
        }
        profile
    }

    pub fn max_count(&self) -> usize {
        self.counts.iter().map(|&(_, s)| s).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DichotomyResult {
    pub profile: AttachmentProfile,
    pub verdict: Verdict,
}

fn check_plex(g: &Graph, p: &VertexSet, t: usize) -> Result<()> {
    p.check_host(g)?;
    match g.plex_defect(p) {
        Some((vertex, missing)) if missing >= t => Err(Error::NotAPlex { t, vertex, missing }),
        _ => Ok(()),
    }
}

/// Each outside vertex has at most `λ(λ-1)` or at least `|c| - (λ-1)^2`
/// neighbors in the clique `c`.
pub fn verify_clique_dichotomy(g: &Graph, c: &VertexSet, lambda: usize) -> Result<DichotomyResult> {
    c.check_host(g)?;
    if let Some((u, v)) = g.first_non_edge(c) {
        return Err(Error::NotAClique(u, v));
    }
    Ok(dichotomy(g, c, 1, lambda, clique_threshold(lambda)))
}

/// Each outside vertex has at most `tλ(λ-1)` or at least `|p| - t(λ-1)^2`
/// neighbors in the `t`-plex `p`.
pub fn verify_plex_dichotomy(
    g: &Graph,
    p: &VertexSet,
    t: usize,
    lambda: usize,
) -> Result<DichotomyResult> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be at least 1".into()));
    }
    check_plex(g, p, t)?;
    Ok(dichotomy(g, p, t, lambda, plex_threshold(lambda, t)))
}

fn dichotomy(
    g: &Graph,
    target: &VertexSet,
    t: usize,
    lambda: usize,
    threshold: u128,
) -> DichotomyResult {
    let (ll, sq) = lam_terms(lambda);
    let low_max = usize::try_from(t as u128 * ll).unwrap_or(usize::MAX);
    let high_min = (target.len() as u128).saturating_sub(t as u128 * sq) as usize;
    let profile = AttachmentProfile::new(g, target, low_max, high_min);
    let verdict = if (target.len() as u128) < threshold {
        Verdict::NotApplicable
    } else if profile.middle.is_empty() {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    DichotomyResult { profile, verdict }
}

/// The five plex-cover properties for `t = (λ-1)^2 + 1`, with the measured
/// quantities behind each verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub lambda: usize,
    pub n: usize,
    pub t: usize,
    pub plexes: Vec<VertexSet>,
    /// (i) every vertex lies in between 1 and λ plexes.
    pub multiplicity_ok: bool,
    pub min_multiplicity: usize,
    pub max_multiplicity: usize,
    /// (ii) largest number of neighbors of a vertex sharing no plex with it.
    /// Reported only; there is no desk-scale bound to compare against.
    pub max_uncovered_neighbors: usize,
    /// (iii) every plex has order at least `n`.
    pub order_ok: bool,
    pub min_order: Option<usize>,
    /// (iv) any two plexes share at most λ-1 vertices.
    pub intersection_ok: bool,
    pub max_intersection: usize,
    /// (v) a vertex outside a plex has at most `tλ(λ-1)` neighbors in it.
    pub attachment_ok: bool,
    pub attachment_bound: usize,
    pub max_outside_attachment: usize,
}

impl TheoremReport {
    /// A failure of (iv) or (v), which the theory rules out outright.
    pub fn is_counterexample(&self) -> bool {
        !self.intersection_ok || !self.attachment_ok
    }
}

pub fn verify_theorem_properties(
    g: &Graph,
    lambda: usize,
    plexes: &[VertexSet],
    n: usize,
) -> Result<TheoremReport> {
    if lambda == 0 {
        return Err(Error::InvalidParameter("lambda must be at least 1".into()));
    }
    let (ll, sq) = lam_terms(lambda);
    let t = sq as usize + 1;
    for p in plexes {
        check_plex(g, p, t)?;
    }
    let bits: Vec<_> = plexes.iter().map(|p| p.to_bits(g.n())).collect();

    let mut multiplicity = vec![0usize; g.n()];
    for p in plexes {
        for x in p.iter() {
            multiplicity[x] += 1;
        }
    }
    let min_multiplicity = multiplicity.iter().copied().min().unwrap_or(0);
    let max_multiplicity = multiplicity.iter().copied().max().unwrap_or(0);

    let mut max_uncovered_neighbors = 0;
    for x in 0..g.n() {
        let mut covered = fixedbitset::FixedBitSet::with_capacity(g.n());
        for b in bits.iter().filter(|b| b.contains(x)) {
            covered.union_with(b);
        }
        max_uncovered_neighbors = max_uncovered_neighbors.max(g.row(x).difference_count(&covered));
    }

    let min_order = plexes.iter().map(VertexSet::len).min();
    let mut max_intersection = 0;
    for (i, a) in plexes.iter().enumerate() {
        for b in &plexes[i + 1..] {
            max_intersection = max_intersection.max(a.intersection_len(b));
        }
    }

    let attachment_bound = t * ll as usize;
    let max_outside_attachment = plexes
        .iter()
        .map(|p| AttachmentProfile::new(g, p, attachment_bound, usize::MAX).max_count())
        .max()
        .unwrap_or(0);

    Ok(TheoremReport {
        lambda,
        n,
        t,
        plexes: plexes.to_vec(),
        multiplicity_ok: min_multiplicity >= 1 && max_multiplicity <= lambda,
        min_multiplicity,
        max_multiplicity,
        max_uncovered_neighbors,
        order_ok: min_order.is_none_or(|o| o >= n),
        min_order,
        intersection_ok: max_intersection < lambda,
        max_intersection,
        attachment_ok: max_outside_attachment <= attachment_bound,
        attachment_bound,
        max_outside_attachment,
    })
}

/// Maximum clique order through each vertex of a regular graph, compared
/// with the degree.
#[derive(Clone, Debug, PartialEq)]
pub struct CliqueRatioReport {
    pub degree: usize,
    pub orders: Vec<usize>,
    pub min_order: usize,
    pub max_order: usize,
    pub mean_order: f64,
    /// `min_order / degree`; `None` for 0-regular graphs.
    pub min_ratio: Option<f64>,
}

pub fn clique_ratio_report(g: &Graph) -> Result<CliqueRatioReport> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let degree = g.regular_degree().ok_or(Error::NotRegular)?;
    let orders: Vec<usize> = (0..g.n())
        .map(|x| max_clique_containing(g, x).len())
        .collect();
    let min_order = *orders.iter().min().expect("nonempty");
    let max_order = *orders.iter().max().expect("nonempty");
    let mean_order = orders.iter().sum::<usize>() as f64 / orders.len() as f64;
    let min_ratio = (degree > 0).then(|| min_order as f64 / degree as f64);
    Ok(CliqueRatioReport {
        degree,
        orders,
        min_order,
        max_order,
        mean_order,
        min_ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::association::clique_classes;
    use crate::generators::{
        complete, gen_hamming, gen_hat, gen_line_graph, gen_steiner, steiner_hoffman,
    };

    #[test]
    fn hat_bound_examples() {
        assert!(hat_bound_holds(3, 2, 2));
        assert!(!hat_bound_holds(6, 5, 2));
    }

    #[test]
    fn thresholds() {
        assert_eq!([1, 2, 3].map(clique_threshold), [2, 9, 48]);
        assert_eq!(plex_threshold(2, 1), 9);
        assert_eq!(plex_threshold(2, 2), 22);
        assert_eq!(plex_threshold(3, 5), 340);
    }

    #[test]
    fn clique_dichotomy_on_line_graph() {
        let g = gen_line_graph(&complete(12)).unwrap();
        let star = clique_classes(&g, 4, 11, true).unwrap().cliques[0].clone();
        assert_eq!(star.len(), 11);
        let r = verify_clique_dichotomy(&g, &star, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(r.profile.counts.iter().all(|&(_, s)| s == 2));
    }

    #[test]
    fn clique_dichotomy_fails_on_hat() {
        // H(4,5): K_9 with apex 9 adjacent to 4 of it
        let g = gen_hat(4, 5).unwrap();
        let k9 = VertexSet::new((0..9).collect()).unwrap();
        let r = verify_clique_dichotomy(&g, &k9, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Fails);
        assert_eq!(r.profile.middle, vec![9]);
        let small = VertexSet::new((0..5).collect()).unwrap();
        assert_eq!(
            verify_clique_dichotomy(&g, &small, 2).unwrap().verdict,
            Verdict::NotApplicable
        );
        let not_clique = VertexSet::new(vec![5, 9]).unwrap();
        assert_eq!(
            verify_clique_dichotomy(&g, &not_clique, 2),
            Err(Error::NotAClique(5, 9))
        );
    }

    #[test]
    fn plex_dichotomy_errors_on_non_plex() {
        let g = crate::generators::cycle(5);
        assert!(matches!(
            verify_plex_dichotomy(&g, &VertexSet::full(5), 2, 2),
            Err(Error::NotAPlex {
                t: 2,
                missing: 2,
                ..
            })
        ));
    }

    #[test]
    fn theorem_properties_on_steiner() {
        let h = steiner_hoffman(&gen_steiner(13).unwrap()).unwrap();
        let g = h.slim_graph();
        let report = verify_theorem_properties(&g, 3, &h.quasi_cliques(), 8).unwrap();
        assert!(report.multiplicity_ok);
        assert_eq!((report.min_multiplicity, report.max_multiplicity), (2, 2));
        assert_eq!(report.max_uncovered_neighbors, 1);
        assert!(report.order_ok && report.intersection_ok && report.attachment_ok);
        assert!(!report.is_counterexample());
    }

    #[test]
    fn theorem_properties_trivial_cases() {
        let r = verify_theorem_properties(&complete(30), 2, &[VertexSet::full(30)], 30).unwrap();
        assert!(r.multiplicity_ok && r.order_ok && r.intersection_ok && r.attachment_ok);
        assert_eq!(r.max_uncovered_neighbors, 0);

        let g = Graph::empty(5);
        let parts = [
            VertexSet::new(vec![0]).unwrap(),
            VertexSet::new(vec![1]).unwrap(),
        ];
        assert!(
            !verify_theorem_properties(&g, 2, &parts, 1)
                .unwrap()
                .multiplicity_ok
        );
    }

    #[test]
    fn clique_ratios() {
        let r = clique_ratio_report(&gen_hamming(2, 3).unwrap()).unwrap();
        assert_eq!((r.degree, r.min_order), (4, 3));
        assert_eq!(r.min_ratio, Some(0.75));
        let k = clique_ratio_report(&complete(6)).unwrap();
        assert!(k.min_ratio.unwrap() > 1.0);
        assert_eq!(
            clique_ratio_report(&gen_hat(2, 2).unwrap()),
            Err(Error::NotRegular)
        );
    }
}
