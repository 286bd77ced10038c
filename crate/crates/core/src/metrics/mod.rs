//! Utility of a synthetic graph relative to the original: community
//! agreement, centrality, degree distribution, diameter, clustering and
//! modularity.

mod centrality;
mod clustering;
mod degree;
mod distance;
mod nmi;

pub use centrality::{eigenvector_centrality, evc_topk, top_k, Centrality, EvcComparison, EVC_MAX_ITERATIONS, EVC_TOLERANCE};
pub use clustering::{clustering_coefficient, triangle_count, triangles_per_node, ClusteringKind};
pub use degree::{degree_kl, KL_SMOOTHING};
pub use distance::{diameter, diameter_with, largest_component, Diameter, DIAMETER_BFS_BUDGET, EXACT_DIAMETER_LIMIT};
pub use nmi::nmi;

use serde::{Deserialize, Serialize};

use crate::community::{louvain, modularity, Partition, ResolutionParam, WeightedGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::RandomSource;

/// Guard added to relative-error denominators.
pub const RE_DELTA: f64 = 1e-9;

pub fn relative_error(truth: f64, estimate: f64) -> f64 {
    (estimate - truth).abs() / truth.abs().max(RE_DELTA)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricOptions {
    /// Share of nodes in the centrality top set.
    pub evc_fraction: f64,
    pub clustering: ClusteringKind,
    /// Seed for the Louvain runs; both graphs use the same one.
    pub louvain_seed: u64,
}

impl Default for MetricOptions {
    fn default() -> Self {
        Self {
            evc_fraction: 0.01,
            clustering: ClusteringKind::Global,
            louvain_seed: 0,
        }
    }
}

/// Classic-modularity Louvain partition of `g` and its modularity.
pub fn louvain_partition(g: &Graph, seed: u64) -> Result<(Partition, f64)> {
    let wg = WeightedGraph::from_graph(g);
    let p = louvain(&wg, ResolutionParam::CLASSIC, &mut RandomSource::seeded(seed));
    let q = modularity(&wg, &p, ResolutionParam::CLASSIC)?;
    Ok((p, q))
}

pub fn modularity_re(original: &Graph, synthetic: &Graph, seed: u64) -> Result<f64> {
    let (_, q) = louvain_partition(original, seed)?;
    let (_, q_hat) = louvain_partition(synthetic, seed)?;
    Ok(relative_error(q, q_hat))
}

pub fn diameter_re(original: &Graph, synthetic: &Graph) -> f64 {
    relative_error(diameter(original).value as f64, diameter(synthetic).value as f64)
}

pub fn clustering_re(original: &Graph, synthetic: &Graph, kind: ClusteringKind) -> f64 {
    relative_error(clustering_coefficient(original, kind), clustering_coefficient(synthetic, kind))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub nmi: f64,
    pub evc_overlap: f64,
    pub evc_mae: f64,
    pub degree_kl: f64,
    pub diameter_re: f64,
    pub cc_re: f64,
    pub modularity_re: f64,
    pub evc_converged: bool,
    pub diameter_exact: bool,
}

impl MetricsReport {
    pub const CSV_COLUMNS: [&'static str; 7] =
        ["nmi", "evc_overlap", "evc_mae", "degree_kl", "diameter_re", "cc_re", "modularity_re"];

    pub fn csv_header() -> String {
        Self::CSV_COLUMNS.join(",")
    }

    pub fn values(&self) -> [f64; 7] {
        [
            self.nmi,
            self.evc_overlap,
            self.evc_mae,
            self.degree_kl,
            self.diameter_re,
            self.cc_re,
            self.modularity_re,
        ]
    }

    pub fn csv_row(&self) -> String {
        self.values().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// All metrics of `synthetic` against `original`. Both graphs must live on
/// the same node ids. Community agreement compares the Louvain partitions
/// of the two graphs.
pub fn evaluate(original: &Graph, synthetic: &Graph, options: &MetricOptions) -> Result<MetricsReport> {
    if original.node_count() != synthetic.node_count() {
        return Err(Error::NodeSetMismatch(format!(
            "{} nodes versus {}",
            original.node_count(),
            synthetic.node_count()
        )));
    }
    let (p, q) = louvain_partition(original, options.louvain_seed)?;
    let (p_hat, q_hat) = louvain_partition(synthetic, options.louvain_seed)?;
    let evc = evc_topk(original, synthetic, options.evc_fraction);
    let (d, d_hat) = (diameter(original), diameter(synthetic));
    Ok(MetricsReport {
        nmi: nmi(&p, &p_hat),
        evc_overlap: evc.overlap,
        evc_mae: evc.mae,
        degree_kl: degree_kl(original, synthetic),
        diameter_re: relative_error(d.value as f64, d_hat.value as f64),
        cc_re: clustering_re(original, synthetic, options.clustering),
        modularity_re: relative_error(q, q_hat),
        evc_converged: evc.converged,
        diameter_exact: d.exact && d_hat.exact,
    })
}
