//! Graph reconstruction from released community statistics. Reads only the
//! calibrated values, so it costs no privacy budget.

use rand::seq::index;

use crate::config::InterSampling;
use crate::extract::ExtractedInfo;
use crate::graph::{Graph, NodeId};
use crate::RandomSource;

/// Edges generated for one community or one community pair.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubgraphEdges {
    edges: Vec<(NodeId, NodeId)>,
}

impl SubgraphEdges {
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn into_edges(self) -> Vec<(NodeId, NodeId)> {
        self.edges
    }
}

/// Chung-Lu sampling inside one community: the pair `(u, w)` becomes an
/// edge with probability `min(1, d_u * d_w / sum(d))`.
pub fn reconstruct_intra(degrees: &[f64], members: &[NodeId], rng: &mut RandomSource) -> SubgraphEdges {
    assert_eq!(degrees.len(), members.len(), "one degree per member");
    let total: f64 = degrees.iter().sum();
    let mut edges = Vec::new();
    if total.is_nan() || total <= 0.0 {
        return SubgraphEdges { edges };
    }
    for i in 0..members.len() {
        if degrees[i] <= 0.0 {
            continue;
        }
        for j in (i + 1)..members.len() {
            let p = degrees[i] * degrees[j] / total;
            if p > 0.0 && rng.bernoulli(p) {
                edges.push((members[i], members[j]));
            }
        }
    }
    SubgraphEdges { edges }
}

/// Edges between two communities targeting `count` of them out of the
/// `|a| * |b|` cross pairs.
///
/// `Bernoulli` keeps every pair independently with probability
/// `min(1, count / (|a| * |b|))`. `ExactCount` draws exactly
/// `min(count, |a| * |b|)` distinct pairs, the fractional part rounded by a
/// coin flip.
pub fn reconstruct_inter(
    count: f64,
    a: &[NodeId],
    b: &[NodeId],
    sampling: InterSampling,
    rng: &mut RandomSource,
) -> SubgraphEdges {
    let pairs = a.len() * b.len();
    let mut edges = Vec::new();
    if pairs == 0 || count.is_nan() || count <= 0.0 {
        return SubgraphEdges { edges };
    }
    let pair = |k: usize| (a[k / b.len()], b[k % b.len()]);
    match sampling {
        InterSampling::Bernoulli => {
            let p = (count / pairs as f64).min(1.0);
            if p >= 1.0 {
                edges.extend((0..pairs).map(pair));
            } else {
                // Skip ahead by geometric gaps instead of flipping every pair.
                let log_q = (-p).ln_1p();
                let mut k = 0usize;
                loop {
                    let u = 1.0 - rng.uniform();
                    let gap = (u.ln() / log_q).floor();
                    if gap >= (pairs - k) as f64 {
                        break;
                    }
                    k += gap as usize;
                    edges.push(pair(k));
                    k += 1;
                    if k >= pairs {
                        break;
                    }
                }
            }
        }
        InterSampling::ExactCount => {
            let target = count.min(pairs as f64);
            let whole = target.floor();
            let extra = rng.bernoulli(target - whole);
            let k = (whole as usize + usize::from(extra)).min(pairs);
            let mut picked = index::sample(rng.inner(), pairs, k).into_vec();
            picked.sort_unstable();
            edges.extend(picked.into_iter().map(pair));
        }
    }
    SubgraphEdges { edges }
}

/// Assembles the synthetic graph on `node_count` nodes from every
/// community and every community pair of `info`.
pub fn reconstruct(
    info: &ExtractedInfo,
    node_count: usize,
    sampling: InterSampling,
    rng: &mut RandomSource,
) -> Graph {
    let mut edges = Vec::new();
    for (degrees, members) in info.intra_degrees.iter().zip(&info.members) {
        edges.extend(reconstruct_intra(degrees, members, rng).into_edges());
    }
    let k = info.community_count();
    for a in 0..k {
        for b in (a + 1)..k {
            let count = info.inter_count(a, b);
            edges.extend(reconstruct_inter(count, &info.members[a], &info.members[b], sampling, rng).into_edges());
        }
    }
    let expected = edges.len();
    let g = Graph::from_edges(node_count, edges);
    // Communities are disjoint, so no pair can be generated twice.
    debug_assert_eq!(g.edge_count(), expected);
    g
}
