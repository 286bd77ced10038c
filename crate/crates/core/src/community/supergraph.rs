use serde::{Deserialize, Serialize};

use super::Partition;
use crate::dp::{laplace_perturb, norm_sub, Ledger, Phase, Sensitivity};
use crate::error::Result;
use crate::graph::Graph;
use crate::RandomSource;

/// Position of unordered pair `{i, j}` (`i != j`) in a row-major upper
/// triangle over `n` items.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(j < n && i != j);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Super-node graph of a partition.
///
/// `inner[i]` is the degree sum of super-node `i` restricted to its own
/// members (every internal edge counted twice). `outer` holds the edge
/// count of every unordered super-node pair, dense, in [`pair_index`]
/// order: the released vector must cover zero pairs too.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightedSuperGraph {
    inner: Vec<f64>,
    outer: Vec<f64>,
}

impl WeightedSuperGraph {
    pub fn new(inner: Vec<f64>, outer: Vec<f64>) -> Self {
        let m = inner.len();
        assert_eq!(outer.len(), m * m.saturating_sub(1) / 2, "outer weights must cover every pair");
        Self { inner, outer }
    }

    /// True weights of `g` under partition `p`.
    pub fn build(g: &Graph, p: &Partition) -> Self {
        assert_eq!(p.node_count(), g.node_count(), "partition does not cover the graph");
        let m = p.community_count();
        let mut inner = vec![0.0; m];
        let mut outer = vec![0.0; m * m.saturating_sub(1) / 2];
        for &(u, w) in g.edges() {
            let (a, b) = (p.community_of(u), p.community_of(w));
            if a == b {
                inner[a] += 2.0;
            } else {
                outer[pair_index(m, a, b)] += 1.0;
            }
        }
        Self { inner, outer }
    }

    pub fn super_node_count(&self) -> usize {
        self.inner.len()
    }

    pub fn inner(&self) -> &[f64] {
        &self.inner
    }

    pub fn outer(&self) -> &[f64] {
        &self.outer
    }

    pub fn outer_weight(&self, i: usize, j: usize) -> f64 {
        self.outer[pair_index(self.inner.len(), i, j)]
    }

    /// Laplace noise on the inner vector (sensitivity 2) and the outer vector
    /// (sensitivity 1), both at `eps1`, then NormSub on each vector. The two
    /// vectors cover disjoint edges, so the ledger records one parallel group.
    pub fn perturb(&self, eps1: f64, rng: &mut RandomSource, ledger: &mut Ledger) -> Result<Self> {
        let noisy_inner = laplace_perturb(&self.inner, Sensitivity::INNER_WEIGHT, eps1, rng)?;
        let noisy_outer = laplace_perturb(&self.outer, Sensitivity::OUTER_WEIGHT, eps1, rng)?;
        ledger.parallel(Phase::CommunityInitialization, "super-node weights", "laplace inner weights", eps1);
        ledger.parallel(Phase::CommunityInitialization, "super-node weights", "laplace outer weights", eps1);
        Ok(Self {
            inner: norm_sub(&noisy_inner),
            outer: norm_sub(&noisy_outer),
        })
    }

    /// Sparse form for Louvain; zero-weight pairs are dropped.
    pub fn to_weighted_graph(&self) -> WeightedGraph {
        let m = self.inner.len();
        let mut adjacency = vec![Vec::new(); m];
        for i in 0..m {
            for j in (i + 1)..m {
                let w = self.outer[pair_index(m, i, j)];
                if w > 0.0 {
                    adjacency[i].push((j, w));
                    adjacency[j].push((i, w));
                }
            }
        }
        WeightedGraph::new(self.inner.clone(), adjacency)
    }
}

/// Sparse weighted graph with per-node internal weight.
///
/// `self_weight[i]` follows the inner-weight convention (internal edges
/// counted twice), so a node's strength is `self_weight[i]` plus its
/// incident edge weights, and `2m` is the sum of strengths.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGraph {
    self_weight: Vec<f64>,
    adjacency: Vec<Vec<(usize, f64)>>,
}

impl WeightedGraph {
    /// `adjacency` must be symmetric and hold no self entries.
    pub fn new(self_weight: Vec<f64>, adjacency: Vec<Vec<(usize, f64)>>) -> Self {
        assert_eq!(self_weight.len(), adjacency.len());
        Self {
            self_weight,
            adjacency,
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let adjacency = (0..g.node_count())
            .map(|u| g.neighbors(u).iter().map(|&w| (w, 1.0)).collect())
            .collect();
        Self::new(vec![0.0; g.node_count()], adjacency)
    }

    pub fn node_count(&self) -> usize {
        self.self_weight.len()
    }

    pub fn self_weight(&self, i: usize) -> f64 {
        self.self_weight[i]
    }

    pub fn neighbors(&self, i: usize) -> &[(usize, f64)] {
        &self.adjacency[i]
    }

    pub fn strength(&self, i: usize) -> f64 {
        self.self_weight[i] + self.adjacency[i].iter().map(|&(_, w)| w).sum::<f64>()
    }

    /// `2m`, the sum of all strengths.
    pub fn total_weight(&self) -> f64 {
        (0..self.node_count()).map(|i| self.strength(i)).sum()
    }

    /// Collapses each community of `labels` (dense, `0..count`) into one node.
    pub(crate) fn aggregate(&self, labels: &[usize], count: usize) -> Self {
        let mut self_weight = vec![0.0; count];
        let mut members = vec![Vec::new(); count];
        for (i, &c) in labels.iter().enumerate() {
            self_weight[c] += self.self_weight[i];
            members[c].push(i);
        }
        let mut scratch = vec![0.0; count];
        let mut marked = vec![false; count];
        let mut touched = Vec::new();
        let mut adjacency = Vec::with_capacity(count);
        for (c, nodes) in members.iter().enumerate() {
            for &i in nodes {
                for &(j, w) in &self.adjacency[i] {
                    let d = labels[j];
                    if d == c {
                        self_weight[c] += w;
                    } else {
                        if !marked[d] {
                            marked[d] = true;
                            touched.push(d);
                        }
                        scratch[d] += w;
                    }
                }
            }
            touched.sort_unstable();
            let row: Vec<(usize, f64)> = touched.iter().map(|&d| (d, scratch[d])).collect();
            for &d in &touched {
                scratch[d] = 0.0;
                marked[d] = false;
            }
            touched.clear();
            adjacency.push(row);
        }
        Self {
            self_weight,
            adjacency,
        }
    }
}

impl From<&Graph> for WeightedGraph {
    fn from(g: &Graph) -> Self {
        Self::from_graph(g)
    }
}

impl From<&WeightedSuperGraph> for WeightedGraph {
    fn from(sg: &WeightedSuperGraph) -> Self {
        sg.to_weighted_graph()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp::{accountant_check, PrivacyBudget};
    use crate::generate;

    #[test]
    fn pair_index_is_a_bijection() {
        let n = 7;
        let mut seen = vec![false; n * (n - 1) / 2];
        for i in 0..n {
            for j in (i + 1)..n {
                let k = pair_index(n, i, j);
                assert_eq!(k, pair_index(n, j, i));
                assert!(!seen[k]);
                seen[k] = true;
            }
        }
        assert!(seen.iter().all(|s| *s));
    }

    #[test]
    fn triangle_in_one_community() {
        let g = generate::complete(3);
        let sg = WeightedSuperGraph::build(&g, &Partition::single(3));
        assert_eq!(sg.inner(), &[6.0]);
        assert!(sg.outer().is_empty());
    }

    #[test]
    fn split_edge() {
        let g = Graph::from_edges(2, [(0, 1)]);
        let sg = WeightedSuperGraph::build(&g, &Partition::singletons(2));
        assert_eq!(sg.inner(), &[0.0, 0.0]);
        assert_eq!(sg.outer_weight(0, 1), 1.0);
    }

    #[test]
    fn weights_conserve_edges() {
        let mut rng = RandomSource::seeded(4);
        for _ in 0..20 {
            let g = generate::erdos_renyi(40, 0.15, &mut rng);
            let labels: Vec<usize> = (0..40).map(|_| (rng.uniform() * 5.0) as usize).collect();
            let p = Partition::from_labels(&labels);
            let sg = WeightedSuperGraph::build(&g, &p);
            let total = sg.inner().iter().sum::<f64>() / 2.0 + sg.outer().iter().sum::<f64>();
            assert_eq!(total, g.edge_count() as f64);
        }
    }

    #[test]
    fn noiseless_perturbation_is_identity() {
        let mut rng = RandomSource::seeded(2);
        let g = generate::erdos_renyi(30, 0.2, &mut rng);
        let p = Partition::from_labels(&(0..30).map(|u| u % 4).collect::<Vec<_>>());
        let sg = WeightedSuperGraph::build(&g, &p);
        let mut ledger = Ledger::new();
        let noisy = sg.perturb(1e12, &mut rng, &mut ledger).unwrap();
        for (a, b) in sg.inner().iter().zip(noisy.inner()) {
            assert!((a - b).abs() < 1e-6);
        }
        for (a, b) in sg.outer().iter().zip(noisy.outer()) {
            assert!((a - b).abs() < 1e-6);
        }
        let budget = PrivacyBudget::new(1e12, 1.0, 1.0).unwrap();
        let verdict = accountant_check(&budget, &ledger);
        assert!(verdict.passed());
        assert_eq!(verdict.spent[&Phase::CommunityInitialization], 1e12);
    }

    #[test]
    fn perturbed_zero_graph_is_non_negative() {
        let mut rng = RandomSource::seeded(8);
        let sg = WeightedSuperGraph::new(vec![0.0; 6], vec![0.0; 15]);
        for eps in [0.01, 0.5, 3.0] {
            let noisy = sg.perturb(eps, &mut rng, &mut Ledger::new()).unwrap();
            assert!(noisy.inner().iter().chain(noisy.outer()).all(|w| *w >= 0.0));
        }
    }

    #[test]
    fn normsub_preserves_inner_sum_on_average() {
        let mut rng = RandomSource::seeded(21);
        let g = generate::erdos_renyi(200, 0.1, &mut rng);
        let p = Partition::from_labels(&(0..200).map(|u| u / 20).collect::<Vec<_>>());
        let sg = WeightedSuperGraph::build(&g, &p);
        let truth: f64 = sg.inner().iter().sum();
        let trials = 100;
        let mean = (0..trials)
            .map(|_| sg.perturb(1.0, &mut rng, &mut Ledger::new()).unwrap().inner().iter().sum::<f64>())
            .sum::<f64>()
            / trials as f64;
        assert!((mean - truth).abs() <= 0.1 * truth, "mean {mean} truth {truth}");
    }

    #[test]
    fn aggregate_keeps_total_weight() {
        let g = generate::disjoint_cliques(3, 4);
        let wg = WeightedGraph::from_graph(&g);
        let labels: Vec<usize> = (0..12).map(|u| u / 4).collect();
        let agg = wg.aggregate(&labels, 3);
        assert_eq!(agg.total_weight(), wg.total_weight());
        assert_eq!(agg.self_weight(0), 12.0);
        assert!(agg.neighbors(0).is_empty());
    }
}
