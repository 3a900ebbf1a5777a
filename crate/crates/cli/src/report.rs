//! JSON report types. Field order is the serialization order; see
//! `docs/report-schema.md` for the meaning of every key.

use serde::{Serialize, Serializer};
use ssl_core::analysis::Verdict;
use ssl_core::graph::VertexSet;

pub const SCHEMA: &str = "ssl-report/1";

/// Rounds to 12 significant digits so reports do not depend on the last
/// bits of floating-point arithmetic.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn ser_f64<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round12(*x))
}

fn ser_opt_f64<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_f64(round12(*v)),
        None => s.serialize_none(),
    }
}

fn ser_verdict<S: Serializer>(v: &Verdict, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(verdict_name(*v))
}

pub fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::NotApplicable => "not_applicable",
    }
}

pub fn members(s: &VertexSet) -> Vec<usize> {
    s.as_slice().to_vec()
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum Degree {
    Regular(usize),
    Irregular(&'static str),
}

#[derive(Serialize)]
pub struct InputDigest {
    pub format: &'static str,
    pub vertices: usize,
    pub edges: usize,
    pub degree: Degree,
    /// Fat vertices in a Hoffman input; 0 for edge lists.
    pub fat_vertices: usize,
}

#[derive(Serialize)]
pub struct Parameters {
    pub lambda: usize,
    pub n: usize,
    pub m: usize,
    pub m_lambda: usize,
    pub m_source: &'static str,
    pub equivalence_floor: usize,
}

#[derive(Serialize)]
pub struct SpectrumSection {
    #[serde(serialize_with = "ser_f64")]
    pub lambda_min: f64,
    #[serde(serialize_with = "ser_f64")]
    pub tolerance: f64,
    pub certified_bound: i64,
    /// Exact verdict on `lambda_min >= -lambda`.
    pub certified: bool,
    pub hypothesis: &'static str,
}

#[derive(Serialize)]
pub struct KTildeSection {
    pub checked: bool,
    pub free: Option<bool>,
    pub witness: Option<Vec<usize>>,
}

#[derive(Serialize)]
pub struct ClassSummary {
    pub cliques: usize,
    pub clique_orders: Vec<usize>,
    pub quasi_clique: Vec<usize>,
    pub quasi_clique_order: usize,
    /// Least `t` for which the quasi-clique is a `t`-plex.
    pub plex_parameter: usize,
}

#[derive(Serialize)]
pub struct AssociationSection {
    pub status: &'static str,
    pub reason: Option<String>,
    pub no_classes: bool,
    pub class_count: usize,
    pub classes: Vec<ClassSummary>,
    pub max_fat_degree: usize,
    pub fat_degree_ok: bool,
    pub max_plex_parameter: usize,
    pub max_pairwise_intersection: usize,
}

#[derive(Serialize)]
pub struct DichotomyEntry {
    pub target: Vec<usize>,
    pub order: usize,
    #[serde(serialize_with = "ser_verdict")]
    pub verdict: Verdict,
    pub low_max: usize,
    pub high_min: usize,
    pub low: usize,
    pub high: usize,
    pub middle: Vec<usize>,
}

#[derive(Serialize)]
pub struct DichotomySection {
    pub clique_threshold: u128,
    pub cliques: Vec<DichotomyEntry>,
    pub plex_t: usize,
    pub plex_threshold: u128,
    pub plexes: Vec<DichotomyEntry>,
    /// Plexes skipped because they are not `plex_t`-plexes.
    pub plexes_not_t_plex: Vec<usize>,
}

#[derive(Serialize)]
pub struct TheoremSection {
    pub status: &'static str,
    pub reason: Option<String>,
    pub plex_source: &'static str,
    pub plex_count: usize,
    pub t: usize,
    pub property_i: Option<bool>,
    pub min_multiplicity: usize,
    pub max_multiplicity: usize,
    pub property_ii_measured: usize,
    pub property_iii: Option<bool>,
    pub min_plex_order: Option<usize>,
    pub property_iv: Option<bool>,
    pub max_intersection: usize,
    pub property_v: Option<bool>,
    pub attachment_bound: usize,
    pub max_outside_attachment: usize,
}

#[derive(Serialize)]
pub struct CliqueRatioSection {
    pub degree: usize,
    pub min_order: usize,
    pub max_order: usize,
    #[serde(serialize_with = "ser_f64")]
    pub mean_order: f64,
    #[serde(serialize_with = "ser_opt_f64")]
    pub min_ratio: Option<f64>,
}

#[derive(Serialize)]
pub struct CounterexampleSection {
    /// Whether the checks below are backed by theory for this input.
    pub theory_applies: bool,
    pub candidate: bool,
    pub reasons: Vec<String>,
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub input: InputDigest,
    pub parameters: Parameters,
    pub spectrum: SpectrumSection,
    pub ktilde: KTildeSection,
    pub association: AssociationSection,
    pub dichotomies: DichotomySection,
    pub theorem: TheoremSection,
    pub clique_ratio: Option<CliqueRatioSection>,
    pub counterexample: CounterexampleSection,
}

#[derive(Serialize)]
pub struct Factor {
    pub slims: Vec<usize>,
    pub fats: Vec<usize>,
    #[serde(serialize_with = "ser_f64")]
    pub lambda_min: f64,
}

#[derive(Serialize)]
pub struct DecomposeReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub slim_vertices: usize,
    pub fat_vertices: usize,
    pub factor_count: usize,
    pub factors: Vec<Factor>,
    pub block_diagonal: bool,
}

#[derive(Serialize)]
pub struct PartitionReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub t: usize,
    pub plex: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round12(-2.0000000000004), -2.0);
        assert_eq!(round12(1.0 / 3.0), 0.333333333333);
        assert_eq!(round12(-0.0).to_string(), "0");
        assert_eq!(round12(1e-20), 1e-20);
    }
}
