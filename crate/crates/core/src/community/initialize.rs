use rand::seq::SliceRandom;

use super::{louvain, Partition, ResolutionParam, WeightedSuperGraph};
use crate::dp::Ledger;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::RandomSource;

/// Uniformly shuffles the nodes and chunks them into blocks of `block_size`;
/// the last block takes the remainder.
pub fn random_partition(g: &Graph, block_size: usize, rng: &mut RandomSource) -> Result<Partition> {
    if block_size == 0 {
        return Err(Error::Config("community block size must be at least 1".into()));
    }
    let mut order: Vec<usize> = (0..g.node_count()).collect();
    order.shuffle(rng.inner());
    let mut labels = vec![0; g.node_count()];
    for (pos, &u) in order.iter().enumerate() {
        labels[u] = pos / block_size;
    }
    // Block ids are already dense; from_labels only renumbers them.
    let p = Partition::from_labels(&labels);
    Ok(p)
}

/// Preliminary partition: random blocks of `block_size` nodes become
/// super-nodes, their weights are released under `eps1`, and Louvain on the
/// released super-graph decides which blocks merge. Every node inherits the
/// community of its block.
pub fn community_initialize(
    g: &Graph,
    block_size: usize,
    eps1: f64,
    t: ResolutionParam,
    rng: &mut RandomSource,
    ledger: &mut Ledger,
) -> Result<Partition> {
    let blocks = random_partition(g, block_size, rng)?;
    let noisy = WeightedSuperGraph::build(g, &blocks).perturb(eps1, rng, ledger)?;
    let merged = louvain(&noisy.to_weighted_graph(), t, rng);
    Ok(blocks.compose(&merged))
}
