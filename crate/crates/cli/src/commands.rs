use anyhow::{bail, Context, Result};
use ssl_core::analysis::{
    clique_ratio_report, clique_threshold, plex_threshold, verify_clique_dichotomy,
    verify_plex_dichotomy, verify_theorem_properties, DichotomyResult, Verdict,
};
use ssl_core::association::{
    associated_hoffman, check_ktilde_free, equivalence_floor, fat_degree_bound_check, m_lambda,
    quasi_clique_shape, AssociatedHoffmanGraph, AssociationOptions,
};
use ssl_core::cliques::maximal_cliques_at_least;
use ssl_core::generators::{
    complete, gen_cocktail, gen_hamming, gen_hat, gen_ktilde, gen_line_graph, gen_steiner,
    steiner_hoffman,
};
use ssl_core::graph::{Graph, VertexSet};
use ssl_core::io::{
    parse_any, parse_edge_list, parse_hoffman, write_edge_list, write_hoffman, GraphFile,
};
use ssl_core::partition::equitable_clique_partition;
use ssl_core::spectrum::{certify_lambda_min_at_least, lambda_min_with};
use ssl_core::Error as CoreError;

use crate::report::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Hoffman,
}

pub struct AnalyzeOptions {
    pub lambda: usize,
    pub n: usize,
    pub m: Option<usize>,
    pub format: InputFormat,
    pub skip_ktilde_check: bool,
    pub tolerance: f64,
}

fn dichotomy_entry(r: DichotomyResult) -> DichotomyEntry {
    let p = r.profile;
    DichotomyEntry {
        order: p.target.len(),
        target: members(&p.target),
        verdict: r.verdict,
        low_max: p.low_max,
        high_min: p.high_min,
        low: p.low,
        high: p.high,
        middle: p.middle,
    }
}

fn association_section(
    result: Option<&Result<AssociatedHoffmanGraph, CoreError>>,
    g: &Graph,
    lambda: usize,
) -> AssociationSection {
    let mut section = AssociationSection {
        status: "skipped",
        reason: None,
        no_classes: false,
        class_count: 0,
        classes: Vec::new(),
        max_fat_degree: 0,
        fat_degree_ok: true,
        max_plex_parameter: 0,
        max_pairwise_intersection: 0,
    };
    match result {
        None => section.reason = Some("n is below (m+1)^2".into()),
        Some(Err(e)) => {
            section.status = "error";
            section.reason = Some(e.to_string());
        }
        Some(Ok(ah)) => {
            let cs = &ah.classes;
            let shape = quasi_clique_shape(g, &cs.quasi_cliques);
            section.status = "ok";
            section.no_classes = ah.no_classes;
            if ah.no_classes {
                section.reason = Some("no maximal clique reaches order n".into());
            }
            section.class_count = cs.len();
            section.classes = cs
                .classes
                .iter()
                .zip(&cs.quasi_cliques)
                .zip(&shape.complement_valency)
                .map(|((class, q), &valency)| ClassSummary {
                    cliques: class.len(),
                    clique_orders: class.iter().map(|&i| cs.cliques[i].len()).collect(),
                    quasi_clique: members(q),
                    quasi_clique_order: q.len(),
                    plex_parameter: valency + 1,
                })
                .collect();
            section.max_fat_degree = ah.hoffman.max_fat_degree();
            section.fat_degree_ok = fat_degree_bound_check(ah, lambda);
            section.max_plex_parameter = section
                .classes
                .iter()
                .map(|c| c.plex_parameter)
                .max()
                .unwrap_or(0);
            section.max_pairwise_intersection = shape.max_pairwise_intersection;
        }
    }
    section
}

/// Runs the whole pipeline. The flag is set when a consequence of the
/// theory fails on an input that satisfies its hypotheses.
pub fn analyze(text: &str, opts: &AnalyzeOptions) -> Result<(AnalysisReport, bool)> {
    let lambda = opts.lambda;
    let (g, file_plexes, fat_count) = match opts.format {
        InputFormat::Edgelist => (parse_edge_list(text)?, None, 0),
        InputFormat::Hoffman => {
            let h = parse_hoffman(text)?;
            (h.slim_graph(), Some(h.quasi_cliques()), h.fat_count())
        }
    };
    if g.n() == 0 {
        bail!("input graph has no vertices");
    }
    let ml = m_lambda(lambda)?;
    let m = opts.m.unwrap_or(ml);
    let floor = equivalence_floor(m);
    if opts.n < floor && opts.format == InputFormat::Edgelist {
        return Err(CoreError::ThresholdTooSmall { n: opts.n, floor }.into());
    }
    let bound = i64::try_from(lambda).context("lambda too large")?;

    let eig = lambda_min_with(&g, opts.tolerance)?;
    let certified = certify_lambda_min_at_least(&g.adjacency_matrix(), bound)?.holds;

    let ktilde = if opts.skip_ktilde_check {
        KTildeSection {
            checked: false,
            free: None,
            witness: None,
        }
    } else {
        let check = check_ktilde_free(&g, m);
        KTildeSection {
            checked: true,
            free: Some(check.free),
            witness: check.witness.as_ref().map(members),
        }
    };

    let assoc =
        (opts.n >= floor).then(|| associated_hoffman(&g, m, opts.n, AssociationOptions::default()));
    let association = association_section(assoc.as_ref(), &g, lambda);

    let (plexes, plex_source) = match (&file_plexes, &assoc) {
        (Some(p), _) => (p.clone(), "hoffman-file"),
        (None, Some(Ok(ah))) => (ah.classes.quasi_cliques.clone(), "association"),
        (None, _) => (Vec::new(), "association"),
    };

    let sq = (lambda - 1) * (lambda - 1);
    let t = sq + 1;
    let threshold = clique_threshold(lambda);
    let dichotomy_cliques = match usize::try_from(threshold) {
        Ok(th) if th <= g.n() => maximal_cliques_at_least(&g, th.max(opts.n)),
        _ => Vec::new(),
    };
    let mut dichotomies = DichotomySection {
        clique_threshold: threshold,
        cliques: Vec::new(),
        plex_t: t,
        plex_threshold: plex_threshold(lambda, t),
        plexes: Vec::new(),
        plexes_not_t_plex: Vec::new(),
    };
    for c in &dichotomy_cliques {
        dichotomies
            .cliques
            .push(dichotomy_entry(verify_clique_dichotomy(&g, c, lambda)?));
    }
    for (i, p) in plexes.iter().enumerate() {
        match verify_plex_dichotomy(&g, p, t, lambda) {
            Ok(r) => dichotomies.plexes.push(dichotomy_entry(r)),
            Err(CoreError::NotAPlex { .. }) => dichotomies.plexes_not_t_plex.push(i),
            Err(e) => return Err(e.into()),
        }
    }

    let theorem = match verify_theorem_properties(&g, lambda, &plexes, opts.n) {
        Ok(r) => TheoremSection {
            status: "ok",
            reason: None,
            plex_source,
            plex_count: plexes.len(),
            t,
            property_i: Some(r.multiplicity_ok),
            min_multiplicity: r.min_multiplicity,
            max_multiplicity: r.max_multiplicity,
            property_ii_measured: r.max_uncovered_neighbors,
            property_iii: Some(r.order_ok),
            min_plex_order: r.min_order,
            property_iv: Some(r.intersection_ok),
            max_intersection: r.max_intersection,
            property_v: Some(r.attachment_ok),
            attachment_bound: r.attachment_bound,
            max_outside_attachment: r.max_outside_attachment,
        },
        Err(e @ CoreError::NotAPlex { .. }) => TheoremSection {
            status: "error",
            reason: Some(e.to_string()),
            plex_source,
            plex_count: plexes.len(),
            t,
            property_i: None,
            min_multiplicity: 0,
            max_multiplicity: 0,
            property_ii_measured: 0,
            property_iii: None,
            min_plex_order: None,
            property_iv: None,
            max_intersection: 0,
            property_v: None,
            attachment_bound: 0,
            max_outside_attachment: 0,
        },
        Err(e) => return Err(e.into()),
    };

    let clique_ratio = match clique_ratio_report(&g) {
        Ok(r) => Some(CliqueRatioSection {
            degree: r.degree,
            min_order: r.min_order,
            max_order: r.max_order,
            mean_order: r.mean_order,
            min_ratio: r.min_ratio,
        }),
        Err(CoreError::NotRegular) => None,
        Err(e) => return Err(e.into()),
    };

    let report = AnalysisReport {
        schema: SCHEMA,
        command: "analyze",
        input: InputDigest {
            format: match opts.format {
                InputFormat::Edgelist => "edgelist",
                InputFormat::Hoffman => "hoffman",
            },
            vertices: g.n(),
            edges: g.edge_count(),
            degree: g
                .regular_degree()
                .map_or(Degree::Irregular("irregular"), Degree::Regular),
            fat_vertices: fat_count,
        },
        parameters: Parameters {
            lambda,
            n: opts.n,
            m,
            m_lambda: ml,
            m_source: if opts.m.is_some() { "user" } else { "default" },
            equivalence_floor: floor,
        },
        spectrum: SpectrumSection {
            lambda_min: eig.lambda_min,
            tolerance: eig.tolerance,
            certified_bound: -bound,
            certified,
            hypothesis: if certified { "holds" } else { "violated" },
        },
        ktilde,
        association,
        dichotomies,
        theorem,
        clique_ratio,
        counterexample: CounterexampleSection {
            theory_applies: false,
            candidate: false,
            reasons: Vec::new(),
        },
    };
    Ok(with_counterexamples(report))
}

/// Fills in the counterexample section. The dichotomies need only the
/// certified eigenvalue bound; the quasi-clique statements also need
/// `m = m(lambda)`, `n >= (m+1)^2` and plexes from the association step.
fn with_counterexamples(mut report: AnalysisReport) -> (AnalysisReport, bool) {
    let certified = report.spectrum.certified;
    let p = &report.parameters;
    let (lambda, m) = (p.lambda, p.m);
    let theory_applies = certified
        && m == p.m_lambda
        && p.n >= p.equivalence_floor
        && report.theorem.plex_source == "association";
    let mut reasons = Vec::new();
    if certified {
        for (i, d) in report.dichotomies.cliques.iter().enumerate() {
            if d.verdict == Verdict::Fails {
                reasons.push(format!("clique dichotomy fails for clique {i}"));
            }
        }
        for (i, d) in report.dichotomies.plexes.iter().enumerate() {
            if d.verdict == Verdict::Fails {
                reasons.push(format!("plex dichotomy fails for plex {i}"));
            }
        }
        // K~_2m contains K~_2m(lambda) once m >= m(lambda)
        if let Some(w) = report.ktilde.witness.as_ref().filter(|_| m >= p.m_lambda) {
            reasons.push(format!(
                "induced K~_{} despite the certified bound: {w:?}",
                2 * m
            ));
        }
    }
    if theory_applies {
        let a = &report.association;
        let th = &report.theorem;
        let sq = (lambda - 1) * (lambda - 1);
        if a.status == "error" {
            reasons.push(format!(
                "association failed: {}",
                a.reason.clone().unwrap_or_default()
            ));
        }
        if !a.fat_degree_ok {
            reasons.push(format!(
                "slim vertex with {} fat neighbors",
                a.max_fat_degree
            ));
        }
        if a.max_plex_parameter > sq + 1 {
            reasons.push(format!(
                "quasi-clique complement valency {} exceeds {sq}",
                a.max_plex_parameter - 1
            ));
        }
        if a.max_pairwise_intersection >= lambda {
            reasons.push(format!(
                "quasi-cliques share {} vertices",
                a.max_pairwise_intersection
            ));
        }
        if th.status == "error" {
            reasons.push(format!(
                "theorem check failed: {}",
                th.reason.clone().unwrap_or_default()
            ));
        }
        if th.property_iv == Some(false) {
            reasons.push("property (iv) fails".into());
        }
        if th.property_v == Some(false) {
            reasons.push("property (v) fails".into());
        }
    }
    let candidate = !reasons.is_empty();
    report.counterexample = CounterexampleSection {
        theory_applies,
        candidate,
        reasons,
    };
    (report, candidate)
}

pub enum Family {
    Hat { a: usize, m: usize },
    KTilde { m: usize },
    Hamming { d: usize, q: usize },
    Cocktail { r: usize },
    LineGraphOfComplete { n: usize },
    SteinerSlim { v: usize },
    SteinerHoffman { v: usize },
}

pub fn generate(family: &Family) -> Result<String> {
    let g = match *family {
        Family::Hat { a, m } => gen_hat(a, m)?,
        Family::KTilde { m } => gen_ktilde(m)?,
        Family::Hamming { d, q } => gen_hamming(d, q)?,
        Family::Cocktail { r } => gen_cocktail(r)?,
        Family::LineGraphOfComplete { n } => gen_line_graph(&complete(n))?,
        Family::SteinerSlim { v } => steiner_hoffman(&gen_steiner(v)?)?.slim_graph(),
        Family::SteinerHoffman { v } => {
            return Ok(write_hoffman(&steiner_hoffman(&gen_steiner(v)?)?))
        }
    };
    Ok(write_edge_list(&g))
}

pub fn decompose(text: &str, tolerance: f64) -> Result<DecomposeReport> {
    let h = parse_hoffman(text)?;
    let blocks = h.decompose()?;
    let sp = h.special_matrix()?;
    let mut block_of = vec![0; h.slim_count()];
    for (i, b) in blocks.iter().enumerate() {
        for x in b.iter() {
            block_of[x] = i;
        }
    }
    let mut block_diagonal = true;
    for x in h.slims() {
        for y in h.slims() {
            if block_of[x] != block_of[y] && sp.entries()[(x, y)] != 0 {
                block_diagonal = false;
            }
        }
    }
    let mut factors = Vec::with_capacity(blocks.len());
    for b in &blocks {
        let rest = VertexSet::new(h.slims().filter(|&x| !b.contains(x)).collect())?;
        block_diagonal &= h.check_sum(b, &rest)?.holds;
        factors.push(Factor {
            slims: members(b),
            fats: h.generated_fats(b),
            lambda_min: h.induced_sub(b)?.lambda_min(tolerance)?.lambda_min,
        });
    }
    Ok(DecomposeReport {
        schema: SCHEMA,
        command: "decompose",
        slim_vertices: h.slim_count(),
        fat_vertices: h.fat_count(),
        factor_count: factors.len(),
        factors,
        block_diagonal,
    })
}

pub fn parse_vertex_list(list: &str) -> Result<VertexSet> {
    let values: Vec<usize> = list
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .with_context(|| format!("`{s}` is not a vertex index"))
        })
        .collect::<Result<_>>()?;
    let set = VertexSet::from_unsorted(values.iter().copied());
    if set.len() != values.len() {
        bail!("vertex list repeats a vertex");
    }
    Ok(set)
}

pub fn partition_plex(text: &str, vertices: Option<&str>, t: usize) -> Result<PartitionReport> {
    let g = match parse_any(text)? {
        GraphFile::Plain(g) => g,
        GraphFile::Hoffman(h) => h.slim_graph(),
    };
    let p = match vertices {
        Some(list) => parse_vertex_list(list)?,
        None => VertexSet::full(g.n()),
    };
    let part = equitable_clique_partition(&g, &p, t)?;
    Ok(PartitionReport {
        schema: SCHEMA,
        command: "partition-plex",
        t,
        plex: members(&p),
        blocks: part.blocks.iter().map(members).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(lambda: usize, n: usize) -> AnalyzeOptions {
        AnalyzeOptions {
            lambda,
            n,
            m: None,
            format: InputFormat::Edgelist,
            skip_ktilde_check: false,
            tolerance: 1e-9,
        }
    }

    fn clean_report() -> AnalysisReport {
        let text = generate(&Family::LineGraphOfComplete { n: 26 }).unwrap();
        let (report, candidate) = analyze(&text, &opts(2, 25)).unwrap();
        assert!(!candidate);
        assert!(report.counterexample.theory_applies);
        report
    }

    #[test]
    fn theorem_failures_are_counterexamples() {
        let mut r = clean_report();
        r.theorem.property_iv = Some(false);
        let (r, candidate) = with_counterexamples(r);
        assert!(candidate);
        assert_eq!(
            r.counterexample.reasons,
            vec!["property (iv) fails".to_string()]
        );

        let mut r = clean_report();
        r.association.fat_degree_ok = false;
        r.association.max_pairwise_intersection = 2;
        assert_eq!(with_counterexamples(r).0.counterexample.reasons.len(), 2);
    }

    #[test]
    fn dichotomy_failure_needs_the_hypothesis() {
        let mut r = clean_report();
        r.dichotomies.cliques[0].verdict = Verdict::Fails;
        let (mut r, candidate) = with_counterexamples(r);
        assert!(candidate);
        r.spectrum.certified = false;
        assert!(!with_counterexamples(r).1);
    }

    #[test]
    fn user_m_disables_theory_checks() {
        let mut r = clean_report();
        r.parameters.m = 5;
        r.theorem.property_v = Some(false);
        let (r, candidate) = with_counterexamples(r);
        assert!(!candidate && !r.counterexample.theory_applies);
    }

    #[test]
    fn vertex_lists() {
        assert_eq!(parse_vertex_list("3, 1,2").unwrap().as_slice(), &[1, 2, 3]);
        assert!(parse_vertex_list("1,1").is_err());
        assert!(parse_vertex_list("1,x").is_err());
    }
}
