//! Intra-community degree sequences and inter-community edge counts.

use serde::{Deserialize, Serialize};

use crate::community::{pair_index, Partition};
use crate::config::NormSubScope;
use crate::dp::{laplace_perturb, norm_sub, Ledger, Phase, Sensitivity};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::RandomSource;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    True,
    Noisy,
    Calibrated,
}

/// What the reconstruction phase consumes.
///
/// `intra_degrees[a][i]` belongs to node `members[a][i]` and counts only its
/// neighbours inside community `a`. `inter_counts` is dense over unordered
/// community pairs in [`pair_index`] order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtractedInfo {
    pub variant: Variant,
    pub members: Vec<Vec<NodeId>>,
    pub intra_degrees: Vec<Vec<f64>>,
    pub inter_counts: Vec<f64>,
}

impl ExtractedInfo {
    pub fn community_count(&self) -> usize {
        self.members.len()
    }

    pub fn inter_count(&self, a: usize, b: usize) -> f64 {
        self.inter_counts[pair_index(self.members.len(), a, b)]
    }

    /// JSON dump. The true variant is raw sensitive data and is refused
    /// unless `allow_raw` is set.
    pub fn to_json(&self, allow_raw: bool) -> Result<String> {
        if self.variant == Variant::True && !allow_raw {
            return Err(Error::Config(
                "refusing to dump unperturbed community statistics without the unsafe flag".into(),
            ));
        }
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Exact statistics of `g` under `p`. Touches no randomness.
pub fn extract(g: &Graph, p: &Partition) -> ExtractedInfo {
    assert_eq!(p.node_count(), g.node_count(), "partition does not cover the graph");
    let members = p.members();
    let k = members.len();
    let mut position = vec![0; g.node_count()];
    for nodes in &members {
        for (i, &u) in nodes.iter().enumerate() {
            position[u] = i;
        }
    }
    let mut intra_degrees: Vec<Vec<f64>> = members.iter().map(|m| vec![0.0; m.len()]).collect();
    let mut inter_counts = vec![0.0; k * k.saturating_sub(1) / 2];
    for &(u, w) in g.edges() {
        let (a, b) = (p.community_of(u), p.community_of(w));
        if a == b {
            intra_degrees[a][position[u]] += 1.0;
            intra_degrees[a][position[w]] += 1.0;
        } else {
            inter_counts[pair_index(k, a, b)] += 1.0;
        }
    }
    ExtractedInfo {
        variant: Variant::True,
        members,
        intra_degrees,
        inter_counts,
    }
}

/// Laplace noise at `eps3` on every degree (sensitivity 2) and every inter
/// count (sensitivity 1), followed by NormSub. Degrees and counts are
/// functions of disjoint edge sets, so `eps3` is charged once.
pub fn perturb(
    info: &ExtractedInfo,
    eps3: f64,
    scope: NormSubScope,
    rng: &mut RandomSource,
    ledger: &mut Ledger,
) -> Result<ExtractedInfo> {
    let flat: Vec<f64> = info.intra_degrees.iter().flatten().copied().collect();
    let noisy_degrees = laplace_perturb(&flat, Sensitivity::DEGREE, eps3, rng)?;
    let noisy_counts = laplace_perturb(&info.inter_counts, Sensitivity::EDGE_COUNT, eps3, rng)?;
    ledger.parallel(Phase::InformationExtraction, "community statistics", "laplace intra degrees", eps3);
    ledger.parallel(Phase::InformationExtraction, "community statistics", "laplace inter counts", eps3);

    let mut intra_degrees = Vec::with_capacity(info.intra_degrees.len());
    match scope {
        NormSubScope::Global => {
            let calibrated = norm_sub(&noisy_degrees);
            let mut rest = calibrated.as_slice();
            for d in &info.intra_degrees {
                let (head, tail) = rest.split_at(d.len());
                intra_degrees.push(head.to_vec());
                rest = tail;
            }
        }
        NormSubScope::PerCommunity => {
            let mut rest = noisy_degrees.as_slice();
            for d in &info.intra_degrees {
                let (head, tail) = rest.split_at(d.len());
                intra_degrees.push(norm_sub(head));
                rest = tail;
            }
        }
    }
    Ok(ExtractedInfo {
        variant: Variant::Calibrated,
        members: info.members.clone(),
        intra_degrees,
        inter_counts: norm_sub(&noisy_counts),
    })
}
