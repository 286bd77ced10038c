//! Influence maximization: Degree-Discount seeds, Independent Cascade spread.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::RandomSource;

pub const DEFAULT_PROPAGATION: f64 = 0.01;
pub const DEFAULT_TRIALS: usize = 1000;

/// Picks `k` seeds greedily by discounted degree
/// `d_v - 2 t_v - (d_v - t_v) t_v p`, where `t_v` counts already selected
/// neighbours. Ties go to the lower node id.
pub fn degree_discount(g: &Graph, k: usize, p: f64) -> Result<Vec<NodeId>> {
    let n = g.node_count();
    if k > n {
        return Err(Error::Config(format!("cannot pick {k} seeds from {n} nodes")));
    }
    let degree: Vec<f64> = (0..n).map(|v| g.degree(v) as f64).collect();
    let mut score = degree.clone();
    let mut selected_neighbors = vec![0.0; n];
    let mut chosen = vec![false; n];
    let mut seeds = Vec::with_capacity(k);
    for _ in 0..k {
        let mut best: Option<NodeId> = None;
        for v in 0..n {
            if !chosen[v] && best.is_none_or(|b| score[v] > score[b]) {
                best = Some(v);
            }
        }
        let u = best.expect("k <= n leaves a candidate");
        chosen[u] = true;
        seeds.push(u);
        for &v in g.neighbors(u) {
            if chosen[v] {
                continue;
            }
            selected_neighbors[v] += 1.0;
            let t = selected_neighbors[v];
            score[v] = degree[v] - 2.0 * t - (degree[v] - t) * t * p;
        }
    }
    Ok(seeds)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpreadEstimate {
    pub mean: f64,
    /// Sample standard deviation over trials; 0 for a single trial.
    pub std: f64,
    pub trials: usize,
}

impl SpreadEstimate {
    pub fn standard_error(&self) -> f64 {
        self.std / (self.trials as f64).sqrt()
    }
}

/// Monte-Carlo Independent Cascade: every newly active node gets one chance
/// to activate each inactive neighbour with probability `p`.
pub fn ic_spread(g: &Graph, seeds: &[NodeId], p: f64, trials: usize, rng: &mut RandomSource) -> Result<SpreadEstimate> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Config(format!("propagation probability must lie in [0, 1], got {p}")));
    }
    if trials == 0 {
        return Err(Error::Config("at least one cascade trial is required".into()));
    }
    let n = g.node_count();
    let mut stamp = vec![0usize; n];
    let mut frontier = Vec::new();
    let mut next = Vec::new();
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for trial in 1..=trials {
        frontier.clear();
        let mut active = 0usize;
        for &s in seeds {
            if stamp[s] != trial {
                stamp[s] = trial;
                frontier.push(s);
                active += 1;
            }
        }
        while !frontier.is_empty() {
            next.clear();
            for &u in &frontier {
                for &v in g.neighbors(u) {
                    if stamp[v] != trial && rng.bernoulli(p) {
                        stamp[v] = trial;
                        next.push(v);
                        active += 1;
                    }
                }
            }
            std::mem::swap(&mut frontier, &mut next);
        }
        let x = active as f64;
        sum += x;
        sum_sq += x * x;
    }
    let t = trials as f64;
    let mean = sum / t;
    let std = if trials > 1 {
        ((sum_sq - t * mean * mean) / (t - 1.0)).max(0.0).sqrt()
    } else {
        0.0
    };
    Ok(SpreadEstimate { mean, std, trials })
}
