use crate::graph::{Graph, NodeId};

pub const EVC_TOLERANCE: f64 = 1e-10;
pub const EVC_MAX_ITERATIONS: usize = 10_000;

#[derive(Clone, Debug, PartialEq)]
pub struct Centrality {
    /// Unit L2 norm, non-negative.
    pub scores: Vec<f64>,
    pub converged: bool,
}

/// Eigenvector centrality by power iteration on `A + I` from a uniform
/// start. The identity shift leaves eigenvectors unchanged and keeps
/// bipartite graphs from oscillating. Stops once the max-norm change drops
/// below [`EVC_TOLERANCE`]; the last iterate is returned otherwise.
pub fn eigenvector_centrality(g: &Graph) -> Centrality {
    let n = g.node_count();
    if n == 0 {
        return Centrality {
            scores: Vec::new(),
            converged: true,
        };
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    for _ in 0..EVC_MAX_ITERATIONS {
        for u in 0..n {
            y[u] = x[u] + g.neighbors(u).iter().map(|&w| x[w]).sum::<f64>();
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        let mut change: f64 = 0.0;
        for u in 0..n {
            let v = y[u] / norm;
            change = change.max((v - x[u]).abs());
            x[u] = v;
        }
        if change < EVC_TOLERANCE {
            return Centrality {
                scores: x,
                converged: true,
            };
        }
    }
    Centrality {
        scores: x,
        converged: false,
    }
}

/// The `k` highest-scoring nodes, best first, ties to the lower id.
pub fn top_k(scores: &[f64], k: usize) -> Vec<NodeId> {
    let mut order: Vec<NodeId> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));
    order.truncate(k);
    order
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvcComparison {
    pub overlap: f64,
    pub mae: f64,
    pub converged: bool,
}

/// Overlap of the top `max(1, floor(fraction * n))` nodes and mean absolute
/// error between the rank-aligned top scores.
pub fn evc_topk(original: &Graph, synthetic: &Graph, fraction: f64) -> EvcComparison {
    let n = original.node_count();
    let k = ((fraction * n as f64).floor() as usize).max(1).min(n);
    let a = eigenvector_centrality(original);
    let b = eigenvector_centrality(synthetic);
    let top_a = top_k(&a.scores, k);
    let top_b = top_k(&b.scores, k);
    if k == 0 {
        return EvcComparison {
            overlap: 1.0,
            mae: 0.0,
            converged: a.converged && b.converged,
        };
    }
    let common = top_a.iter().filter(|u| top_b.contains(u)).count();
    let mae = top_a
        .iter()
        .zip(&top_b)
        .map(|(&u, &v)| (a.scores[u] - b.scores[v]).abs())
        .sum::<f64>()
        / k as f64;
    EvcComparison {
        overlap: common as f64 / k as f64,
        mae,
        converged: a.converged && b.converged,
    }
}
