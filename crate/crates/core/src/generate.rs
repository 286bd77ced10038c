//! Random and structured graph generators for experiments and tests.

use std::collections::HashSet;

use rand::seq::SliceRandom;

use crate::graph::{Graph, NodeId};
use crate::RandomSource;

/// G(n, p): every pair independently with probability `p`.
pub fn erdos_renyi(n: usize, p: f64, rng: &mut RandomSource) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for w in (u + 1)..n {
            if rng.bernoulli(p) {
                edges.push((u, w));
            }
        }
    }
    Graph::from_edges(n, edges)
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |w| (u, w))))
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|u| (u - 1, u)))
}

/// Node 0 joined to every other node.
pub fn star(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|u| (0, u)))
}

/// `count` disjoint cliques of `size` nodes; clique `c` holds nodes
/// `c*size .. (c+1)*size`.
pub fn disjoint_cliques(count: usize, size: usize) -> Graph {
    let n = count * size;
    let mut edges = Vec::new();
    for c in 0..count {
        let base = c * size;
        for u in 0..size {
            for w in (u + 1)..size {
                edges.push((base + u, base + w));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Block label of every node for consecutive blocks of the given sizes.
pub fn block_labels(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(b, &s)| std::iter::repeat_n(b, s))
        .collect()
}

/// Planted partition with exactly `intra_edges` edges inside blocks and
/// `inter_edges` edges across blocks, each set drawn uniformly without
/// replacement. Blocks are consecutive node ranges of the given sizes.
///
/// Panics if a requested count exceeds the available pairs.
pub fn planted_partition(
    sizes: &[usize],
    intra_edges: usize,
    inter_edges: usize,
    rng: &mut RandomSource,
) -> Graph {
    let n: usize = sizes.iter().sum();
    let block = block_labels(sizes);
    let intra_pairs: usize = sizes.iter().map(|&s| s * s.saturating_sub(1) / 2).sum();
    let inter_pairs = n * n.saturating_sub(1) / 2 - intra_pairs;
    assert!(intra_edges <= intra_pairs, "too many intra-block edges requested");
    assert!(inter_edges <= inter_pairs, "too many inter-block edges requested");

    let mut starts = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in sizes {
        starts.push(acc);
        acc += s;
    }

    let mut chosen: HashSet<(NodeId, NodeId)> = HashSet::with_capacity(intra_edges + inter_edges);
    let weights: Vec<usize> = sizes.iter().map(|&s| s * s.saturating_sub(1) / 2).collect();
    let mut intra = 0;
    while intra < intra_edges {
        // Pick a block proportionally to its pair count, then a pair inside it.
        let mut r = (rng.uniform() * intra_pairs as f64) as usize;
        let mut b = 0;
        while b + 1 < weights.len() && r >= weights[b] {
            r -= weights[b];
            b += 1;
        }
        let s = sizes[b];
        if s < 2 {
            continue;
        }
        let u = starts[b] + (rng.uniform() * s as f64) as usize;
        let w = starts[b] + (rng.uniform() * s as f64) as usize;
        if u == w {
            continue;
        }
        if chosen.insert((u.min(w), u.max(w))) {
            intra += 1;
        }
    }
    let mut inter = 0;
    while inter < inter_edges {
        let u = (rng.uniform() * n as f64) as usize;
        let w = (rng.uniform() * n as f64) as usize;
        if u == w || block[u] == block[w] {
            continue;
        }
        if chosen.insert((u.min(w), u.max(w))) {
            inter += 1;
        }
    }
    let mut edges: Vec<_> = chosen.into_iter().collect();
    edges.sort_unstable();
    Graph::from_edges(n, edges)
}

/// Applies a uniformly random relabelling of the nodes. Returns the new
/// graph and `perm` with `perm[old] = new`.
pub fn shuffle_nodes(g: &Graph, rng: &mut RandomSource) -> (Graph, Vec<NodeId>) {
    let mut perm: Vec<NodeId> = (0..g.node_count()).collect();
    perm.shuffle(rng.inner());
    let shuffled = Graph::from_edges(
        g.node_count(),
        g.edges().iter().map(|&(u, w)| (perm[u], perm[w])),
    );
    (shuffled, perm)
}
