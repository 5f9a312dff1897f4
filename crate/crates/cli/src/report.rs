//! Serializable result types and their renderings.

use canstrat_core::{hom_component_count, strata_poset, Stratification};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct StratumReport {
    pub id: usize,
    pub top_dim: usize,
    /// Member counts per dimension, length top_dim + 1.
    pub counts: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AssignmentRow {
    pub vertices: Vec<u64>,
    pub stratum: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct HomRow {
    pub source: usize,
    pub target: usize,
    pub count: usize,
}

#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize, PartialEq)]
pub struct Timings {
    pub parse_ms: f64,
    pub build_ms: f64,
    pub stratify_ms: f64,
    pub total_ms: f64,
}

/// Everything `run` reports. Field order is the serialization order;
/// all content except `timings` is deterministic for a given input.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RunReport {
    pub dimension: usize,
    pub table_sizes: Vec<usize>,
    pub strata: Vec<StratumReport>,
    pub assignment: Vec<AssignmentRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poset: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hom_counts: Option<Vec<HomRow>>,
    pub timings: Timings,
}

pub fn build_run_report(
    s: &Stratification,
    with_poset: bool,
    with_hom: bool,
    timings: Timings,
) -> RunReport {
    let c = s.complex();
    let strata = s
        .strata()
        .iter()
        .map(|r| StratumReport {
            id: r.id.0,
            top_dim: r.top_dim,
            counts: r.member_count_per_dim.clone(),
        })
        .collect();
    let assignment = c
        .iter_ids()
        .map(|id| AssignmentRow {
            vertices: c.vertices(id).to_vec(),
            stratum: s.stratum_of(id).0,
        })
        .collect();
    let relations = (with_poset || with_hom).then(|| strata_poset(s).relations());
    let poset = with_poset.then(|| {
        relations
            .as_ref()
            .unwrap()
            .iter()
            .map(|&(a, b)| [a.0, b.0])
            .collect()
    });
    let hom_counts = with_hom.then(|| {
        relations
            .as_ref()
            .unwrap()
            .iter()
            .map(|&(a, b)| {
                let hc = hom_component_count(s, a, b);
                HomRow { source: hc.source.0, target: hc.target.0, count: hc.count }
            })
            .collect()
    });
    RunReport { dimension: c.dimension(), table_sizes: c.table_sizes(), strata, assignment, poset, hom_counts, timings }
}

/// One line per simplex: comma-joined vertices, stratum id, stratum top
/// dimension, tab-separated.
pub fn render_tsv(s: &Stratification) -> String {
    let c = s.complex();
    let mut out = String::new();
    for id in c.iter_ids() {
        let verts: Vec<String> = c.vertices(id).iter().map(|v| v.to_string()).collect();
        out.push_str(&verts.join(","));
        out.push('\t');
        out.push_str(&s.stratum_of(id).0.to_string());
        out.push('\t');
        out.push_str(&s.pi(id).to_string());
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BenchLevel {
    pub level: usize,
    /// Total simplex count.
    pub s: usize,
    /// Vertex count.
    pub s0: usize,
    pub mean_ms: f64,
    pub stddev_ms: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BenchReport {
    pub family: String,
    pub trials: usize,
    pub levels: Vec<BenchLevel>,
    /// Max over adjacent levels of (mean-time ratio) / (size ratio);
    /// near 1 means linear scaling in the simplex count.
    pub linear_fit: f64,
}

pub fn render_bench_table(report: &BenchReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("family {}, {} trials per level\n", report.family, report.trials));
    out.push_str(&format!(
        "{:>6} {:>9} {:>8} {:>11} {:>11} {:>12}\n",
        "level", "s", "s0", "mean_ms", "stddev_ms", "us/simplex"
    ));
    for row in &report.levels {
        out.push_str(&format!(
            "{:>6} {:>9} {:>8} {:>11.3} {:>11.3} {:>12.4}\n",
            row.level,
            row.s,
            row.s0,
            row.mean_ms,
            row.stddev_ms,
            row.mean_ms * 1000.0 / row.s as f64,
        ));
    }
    out.push_str(&format!("linear_fit {:.3}\n", report.linear_fit));
    out
}
