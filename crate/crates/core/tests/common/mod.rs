//! Independent reference implementations shared by the integration tests.
//! Each one takes the slowest obviously-correct route.

#![allow(dead_code)]

use privgraph::graph::Graph;

/// Exhaustive integer shift search over the documented window, with ties to
/// the shift of smallest magnitude and then the smaller shift.
pub fn brute_shift(x: &[f64]) -> i64 {
    if x.is_empty() {
        return 0;
    }
    let max_abs = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let reach = (10.0 * max_abs).ceil() as i64 + 1;
    let target: f64 = x.iter().sum();
    let mut best = (f64::INFINITY, 0i64);
    for delta in -reach..=reach {
        let shifted: f64 = x.iter().map(|v| (v + delta as f64).max(0.0)).sum();
        let obj = (shifted - target).abs();
        let better = obj < best.0
            || (obj == best.0
                && (delta.abs() < best.1.abs() || (delta.abs() == best.1.abs() && delta < best.1)));
        if better {
            best = (obj, delta);
        }
    }
    best.1
}

/// Modularity straight from the pairwise definition
/// `1/2m * sum_ij [t A_ij - k_i k_j / 2m] [c_i = c_j]`.
pub fn pairwise_modularity(g: &Graph, labels: &[usize], t: f64) -> f64 {
    let n = g.node_count();
    let two_m = 2.0 * g.edge_count() as f64;
    let mut q = 0.0;
    for i in 0..n {
        for j in 0..n {
            if labels[i] != labels[j] {
                continue;
            }
            let a = if g.has_edge(i, j) { 1.0 } else { 0.0 };
            q += t * a - g.degree(i) as f64 * g.degree(j) as f64 / two_m;
        }
    }
    q / two_m
}

/// Calls `f` with every set partition of `0..n` as a restricted growth string.
pub fn for_each_partition(n: usize, mut f: impl FnMut(&[usize])) {
    fn rec(labels: &mut Vec<usize>, n: usize, max: usize, f: &mut dyn FnMut(&[usize])) {
        if labels.len() == n {
            f(labels);
            return;
        }
        for c in 0..=max + 1 {
            if labels.is_empty() && c > 0 {
                break;
            }
            labels.push(c);
            let next_max = if labels.len() == 1 { 0 } else { max.max(c) };
            rec(labels, n, next_max, f);
            labels.pop();
        }
    }
    if n == 0 {
        f(&[]);
        return;
    }
    rec(&mut Vec::with_capacity(n), n, 0, &mut f);
}

/// Highest modularity over all partitions.
pub fn best_modularity(g: &Graph, t: f64) -> f64 {
    let mut best = f64::NEG_INFINITY;
    for_each_partition(g.node_count(), |labels| {
        best = best.max(pairwise_modularity(g, labels, t));
    });
    best
}

/// Softmax of `eps * q / (2 * sensitivity)` computed naively.
pub fn softmax(qualities: &[f64], eps: f64, sensitivity: f64) -> Vec<f64> {
    let w: Vec<f64> = qualities.iter().map(|q| (eps * q / (2.0 * sensitivity)).exp()).collect();
    let total: f64 = w.iter().sum();
    w.iter().map(|v| v / total).collect()
}

/// Breadth-first distances from every node; `None` for unreachable pairs.
pub fn all_pairs_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.node_count();
    (0..n)
        .map(|s| {
            let mut dist = vec![None; n];
            dist[s] = Some(0);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if dist[w].is_none() {
                        dist[w] = Some(dist[u].unwrap() + 1);
                        queue.push_back(w);
                    }
                }
            }
            dist
        })
        .collect()
}
