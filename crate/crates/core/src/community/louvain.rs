//! Louvain modularity maximisation with a resolution parameter.
//!
//! Each level runs passes of local moves over a shuffled node order until a
//! pass gains less than [`LOCAL_MOVE_TOLERANCE`], then collapses communities
//! into super-nodes (internal weight kept as self weight). The algorithm
//! stops at the first level that merges nothing.

use rand::seq::SliceRandom;

use super::{Partition, ResolutionParam, WeightedGraph};
use crate::RandomSource;

/// Minimum modularity gain of a full pass for another pass to run.
pub const LOCAL_MOVE_TOLERANCE: f64 = 1e-7;

const MAX_PASSES: usize = 1_000;

/// Partition of the nodes of `wg` found by Louvain. Consumes no privacy
/// budget: it only reads the (already protected) weights it is given.
pub fn louvain(wg: &WeightedGraph, t: ResolutionParam, rng: &mut RandomSource) -> Partition {
    louvain_observed(wg, t, rng, &mut |_, _| {})
}

/// Louvain with a hook called after every accepted move with the current
/// level graph and its labels.
pub(crate) fn louvain_observed(
    wg: &WeightedGraph,
    t: ResolutionParam,
    rng: &mut RandomSource,
    observer: &mut dyn FnMut(&WeightedGraph, &[usize]),
) -> Partition {
    let n = wg.node_count();
    let mut membership: Vec<usize> = (0..n).collect();
    let mut level = wg.clone();
    loop {
        let (labels, count) = local_moves(&level, t, rng, observer);
        if count == level.node_count() {
            break;
        }
        for m in &mut membership {
            *m = labels[*m];
        }
        level = level.aggregate(&labels, count);
    }
    Partition::from_labels(&membership)
}

/// One level of local moves. Returns dense labels and the community count.
fn local_moves(
    wg: &WeightedGraph,
    t: ResolutionParam,
    rng: &mut RandomSource,
    observer: &mut dyn FnMut(&WeightedGraph, &[usize]),
) -> (Vec<usize>, usize) {
    let n = wg.node_count();
    let mut community: Vec<usize> = (0..n).collect();
    let strength: Vec<f64> = (0..n).map(|i| wg.strength(i)).collect();
    let two_m: f64 = strength.iter().sum();
    if two_m.is_nan() || two_m <= 0.0 || n <= 1 {
        return (community, n);
    }
    let mut tot = strength.clone();
    let res = t.value();

    let mut link = vec![0.0; n];
    let mut seen = vec![false; n];
    let mut candidates: Vec<usize> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();

    for _ in 0..MAX_PASSES {
        order.shuffle(rng.inner());
        let mut pass_gain = 0.0;
        let mut moved = false;
        for &i in &order {
            let own = community[i];
            let k_i = strength[i];

            candidates.clear();
            seen[own] = true;
            candidates.push(own);
            for &(j, w) in wg.neighbors(i) {
                let c = community[j];
                link[c] += w;
                if !seen[c] {
                    seen[c] = true;
                    candidates.push(c);
                }
            }

            tot[own] -= k_i;
            // Gain of inserting the isolated node into c, up to a factor 2/2m.
            let gain = |link_c: f64, tot_c: f64| res * link_c - tot_c * k_i / two_m;
            let stay = gain(link[own], tot[own]);
            let mut best = own;
            let mut best_gain = stay;
            candidates.sort_unstable();
            for &c in &candidates {
                if c == own {
                    continue;
                }
                let g = gain(link[c], tot[c]);
                if g > best_gain {
                    best = c;
                    best_gain = g;
                }
            }
            tot[best] += k_i;
            if best != own {
                community[i] = best;
                moved = true;
                pass_gain += 2.0 * (best_gain - stay) / two_m;
                observer(wg, &community);
            }

            for &c in &candidates {
                link[c] = 0.0;
                seen[c] = false;
            }
        }
        if !moved || pass_gain < LOCAL_MOVE_TOLERANCE {
            break;
        }
    }

    let p = Partition::from_labels(&community);
    let count = p.community_count();
    (p.assignment().to_vec(), count)
}
