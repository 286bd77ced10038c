use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClusteringKind {
    /// `3 * triangles / connected triplets`.
    #[default]
    Global,
    /// Mean of per-node coefficients; nodes of degree < 2 count as 0.
    AverageLocal,
}

/// Triangles through every node, by intersecting sorted neighbour lists
/// of each edge oriented from lower to higher (degree, id) rank.
pub fn triangles_per_node(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let rank = |u: usize| (g.degree(u), u);
    let forward: Vec<Vec<usize>> = (0..n)
        .map(|u| g.neighbors(u).iter().copied().filter(|&w| rank(w) > rank(u)).collect())
        .collect();
    let mut count = vec![0; n];
    for u in 0..n {
        for &v in &forward[u] {
            let (a, b) = (&forward[u], &forward[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        count[u] += 1;
                        count[v] += 1;
                        count[a[i]] += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }
    count
}

pub fn triangle_count(g: &Graph) -> usize {
    triangles_per_node(g).iter().sum::<usize>() / 3
}

pub fn clustering_coefficient(g: &Graph, kind: ClusteringKind) -> f64 {
    let tri = triangles_per_node(g);
    let pairs = |u: usize| {
        let d = g.degree(u) as f64;
        d * (d - 1.0) / 2.0
    };
    match kind {
        ClusteringKind::Global => {
            let triplets: f64 = (0..g.node_count()).map(pairs).sum();
            if triplets == 0.0 {
                0.0
            } else {
                tri.iter().sum::<usize>() as f64 / triplets
            }
        }
        ClusteringKind::AverageLocal => {
            if g.node_count() == 0 {
                return 0.0;
            }
            let total: f64 = (0..g.node_count())
                .map(|u| if g.degree(u) < 2 { 0.0 } else { tri[u] as f64 / pairs(u) })
                .sum();
            total / g.node_count() as f64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::RandomSource;

    #[test]
    fn hand_values() {
        let t = generate::complete(3);
        assert_eq!(clustering_coefficient(&t, ClusteringKind::Global), 1.0);
        assert_eq!(clustering_coefficient(&generate::star(6), ClusteringKind::Global), 0.0);
        assert_eq!(clustering_coefficient(&Graph::empty(3), ClusteringKind::Global), 0.0);
        // Triangle with a pendant: 1 triangle, triplets 1 + 1 + 3 = 5.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert!((clustering_coefficient(&g, ClusteringKind::Global) - 3.0 / 5.0).abs() < 1e-12);
        let local = (1.0 + 1.0 + 1.0 / 3.0) / 4.0;
        assert!((clustering_coefficient(&g, ClusteringKind::AverageLocal) - local).abs() < 1e-12);
    }

    #[test]
    fn triangles_match_triple_enumeration() {
        let mut rng = RandomSource::seeded(3);
        for _ in 0..10 {
            let g = generate::erdos_renyi(30, 0.25, &mut rng);
            let mut brute = 0;
            for a in 0..30 {
                for b in (a + 1)..30 {
                    for c in (b + 1)..30 {
                        if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                            brute += 1;
                        }
                    }
                }
            }
            assert_eq!(triangle_count(&g), brute);
        }
    }
}
