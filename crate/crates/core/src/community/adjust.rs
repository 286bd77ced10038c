use rand::seq::SliceRandom;

use super::Partition;
use crate::dp::{em_select, validate_epsilon, Ledger, Phase, Sensitivity};
use crate::error::Result;
use crate::graph::Graph;
use crate::RandomSource;

/// Refines a partition node by node with the exponential mechanism.
///
/// Every node, in one shuffled pass, leaves its community and re-joins one
/// chosen with quality `k` = its number of neighbours in that community and
/// budget `eps2 / 2` per choice. An edge changes the counts of its two
/// endpoints only, so the pass costs `eps2` in total. Communities emptied
/// along the way drop out of the candidate set and the output is relabelled
/// densely.
pub fn community_adjust(
    g: &Graph,
    p: &Partition,
    eps2: f64,
    rng: &mut RandomSource,
    ledger: &mut Ledger,
) -> Result<Partition> {
    validate_epsilon(eps2)?;
    assert_eq!(p.node_count(), g.node_count(), "partition does not cover the graph");
    let per_choice = 0.5 * eps2;
    ledger.sequential(Phase::CommunityAdjustment, "exponential mechanism, first endpoint", per_choice);
    ledger.sequential(Phase::CommunityAdjustment, "exponential mechanism, second endpoint", per_choice);

    let mut assignment = p.assignment().to_vec();
    let mut sizes = p.sizes();
    let mut links = vec![0.0; p.community_count()];
    let mut alive: Vec<usize> = Vec::with_capacity(p.community_count());
    let mut qualities: Vec<f64> = Vec::with_capacity(p.community_count());

    let mut order: Vec<usize> = (0..g.node_count()).collect();
    order.shuffle(rng.inner());
    for &j in &order {
        let from = assignment[j];
        sizes[from] -= 1;

        for &nb in g.neighbors(j) {
            links[assignment[nb]] += 1.0;
        }
        alive.clear();
        qualities.clear();
        for (c, &size) in sizes.iter().enumerate() {
            if size > 0 {
                alive.push(c);
                qualities.push(links[c]);
            }
        }
        // A lone node of a one-node graph has nowhere else to go.
        let to = if alive.is_empty() {
            from
        } else {
            alive[em_select(&qualities, Sensitivity::ADJUSTMENT, per_choice, rng)?]
        };
        for &nb in g.neighbors(j) {
            links[assignment[nb]] = 0.0;
        }
        assignment[j] = to;
        sizes[to] += 1;
    }
    Ok(Partition::from_labels(&assignment))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp::{accountant_check, PrivacyBudget};
    use crate::generate;

    #[test]
    fn noiseless_adjustment_picks_max_connection() {
        let g = generate::disjoint_cliques(2, 10);
        // Start with two nodes misplaced.
        let mut labels: Vec<usize> = (0..20).map(|u| u / 10).collect();
        labels[0] = 1;
        labels[19] = 0;
        let p = Partition::from_labels(&labels);
        let out = community_adjust(&g, &p, 1e12, &mut RandomSource::seeded(1), &mut Ledger::new()).unwrap();
        assert_eq!(out.community_count(), 2);
        for u in 0..20 {
            assert_eq!(out.community_of(u), out.community_of(if u < 10 { 1 } else { 18 }));
        }
        assert_ne!(out.community_of(0), out.community_of(19));
    }

    #[test]
    fn single_community_stays_single() {
        let mut rng = RandomSource::seeded(4);
        let g = generate::erdos_renyi(30, 0.2, &mut rng);
        let out = community_adjust(&g, &Partition::single(30), 0.1, &mut rng, &mut Ledger::new()).unwrap();
        assert_eq!(out.community_count(), 1);
    }

    #[test]
    fn one_node_graph() {
        let g = Graph::empty(1);
        let out = community_adjust(&g, &Partition::single(1), 1.0, &mut RandomSource::seeded(0), &mut Ledger::new())
            .unwrap();
        assert_eq!(out.community_count(), 1);
    }

    #[test]
    fn isolated_node_is_uniform() {
        // Node 6 has no edges; the other two communities are cliques of 3.
        let mut edges = generate::disjoint_cliques(2, 3).edges().to_vec();
        edges.push((0, 1));
        let g = Graph::from_edges(7, edges);
        let p = Partition::from_labels(&[0, 0, 0, 1, 1, 1, 0]);
        let trials = 4000;
        let mut with_first = 0;
        for s in 0..trials {
            let out = community_adjust(&g, &p, 1e12, &mut RandomSource::seeded(s), &mut Ledger::new()).unwrap();
            if out.community_of(6) == out.community_of(0) {
                with_first += 1;
            }
        }
        let frac = with_first as f64 / trials as f64;
        assert!((frac - 0.5).abs() < 0.05, "{frac}");
    }

    #[test]
    fn ledger_charges_eps2_once() {
        let mut rng = RandomSource::seeded(5);
        let g = generate::erdos_renyi(20, 0.3, &mut rng);
        let mut ledger = Ledger::new();
        community_adjust(&g, &Partition::singletons(20), 0.8, &mut rng, &mut ledger).unwrap();
        assert_eq!(ledger.phase_spend(Phase::CommunityAdjustment), 0.8);
        let b = PrivacyBudget::new(1.0, 0.8, 1.0).unwrap();
        assert!(accountant_check(&b, &ledger).passed());
        assert!(community_adjust(&g, &Partition::single(20), 0.0, &mut rng, &mut ledger).is_err());
    }
}
