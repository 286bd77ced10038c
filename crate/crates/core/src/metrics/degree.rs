use std::collections::{BTreeMap, BTreeSet};

use crate::graph::Graph;

pub const KL_SMOOTHING: f64 = 1e-9;

fn histogram(g: &Graph) -> BTreeMap<usize, f64> {
    let mut h = BTreeMap::new();
    for d in g.degree_sequence() {
        *h.entry(d).or_insert(0.0) += 1.0;
    }
    h
}

/// `D_KL(P || P')` between degree distributions. `P'` gets
/// [`KL_SMOOTHING`] added on every degree seen in either graph before
/// renormalising, so a missing bucket costs a large but finite amount.
pub fn degree_kl(original: &Graph, synthetic: &Graph) -> f64 {
    let p = histogram(original);
    let q = histogram(synthetic);
    let (np, nq) = (original.node_count() as f64, synthetic.node_count() as f64);
    if np == 0.0 {
        return 0.0;
    }
    let support: BTreeSet<usize> = p.keys().chain(q.keys()).copied().collect();
    let smoothed = |d: usize| q.get(&d).copied().unwrap_or(0.0) / nq.max(1.0) + KL_SMOOTHING;
    let norm: f64 = support.iter().map(|&d| smoothed(d)).sum();
    let mut kl = 0.0;
    for (&d, &count) in &p {
        let pd = count / np;
        let qd = smoothed(d) / norm;
        kl += pd * (pd / qd).ln();
    }
    kl.max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::RandomSource;

    #[test]
    fn identical_graphs() {
        let g = generate::erdos_renyi(80, 0.1, &mut RandomSource::seeded(1));
        assert!(degree_kl(&g, &g) < 1e-12);
    }

    #[test]
    fn same_distribution_different_graphs() {
        // Both paths have two nodes of degree 1 and two of degree 2.
        let a = generate::path(4);
        let b = Graph::from_edges(4, [(3, 0), (0, 2), (2, 1)]);
        assert!(degree_kl(&a, &b) < 1e-12);
    }

    #[test]
    fn disjoint_supports() {
        let triangle = generate::complete(3);
        let edge = Graph::from_edges(2, [(0, 1)]);
        // P = {2: 1}, P' = {1: 1} smoothed over {1, 2}.
        let q2 = KL_SMOOTHING / (1.0 + 2.0 * KL_SMOOTHING);
        let expected = (1.0 / q2).ln();
        let got = degree_kl(&triangle, &edge);
        assert!((got - expected).abs() < 1e-9, "{got} vs {expected}");
        assert!(got > 20.0);
    }

    #[test]
    fn non_negative() {
        let mut rng = RandomSource::seeded(2);
        for _ in 0..20 {
            let a = generate::erdos_renyi(30, 0.1, &mut rng);
            let b = generate::erdos_renyi(30, 0.2, &mut rng);
            assert!(degree_kl(&a, &b) >= 0.0);
        }
    }
}
