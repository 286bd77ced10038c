use std::collections::VecDeque;

use crate::graph::{Graph, NodeId};

/// Largest component size for which every eccentricity is computed.
pub const EXACT_DIAMETER_LIMIT: usize = 10_000;
/// Breadth-first searches the bounding method may spend above the limit.
pub const DIAMETER_BFS_BUDGET: usize = 2_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Diameter {
    pub value: usize,
    /// False when the search budget ran out and `value` is a lower bound.
    pub exact: bool,
}

struct Bfs {
    dist: Vec<usize>,
    queue: VecDeque<NodeId>,
}

impl Bfs {
    fn new(n: usize) -> Self {
        Self {
            dist: vec![usize::MAX; n],
            queue: VecDeque::new(),
        }
    }

    /// Distances from `source`; returns the visited nodes in BFS order.
    fn run(&mut self, g: &Graph, source: NodeId) -> Vec<NodeId> {
        let mut order = Vec::new();
        self.dist[source] = 0;
        self.queue.push_back(source);
        while let Some(u) = self.queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if self.dist[w] == usize::MAX {
                    self.dist[w] = self.dist[u] + 1;
                    self.queue.push_back(w);
                }
            }
        }
        order
    }

    fn eccentricity(&mut self, g: &Graph, source: NodeId) -> usize {
        let order = self.run(g, source);
        let ecc = order.last().map_or(0, |&u| self.dist[u]);
        for u in order {
            self.dist[u] = usize::MAX;
        }
        ecc
    }
}

/// Nodes of the largest connected component (lowest id wins ties).
pub fn largest_component(g: &Graph) -> Vec<NodeId> {
    let mut bfs = Bfs::new(g.node_count());
    let mut best: Vec<NodeId> = Vec::new();
    for s in 0..g.node_count() {
        if bfs.dist[s] == usize::MAX {
            let comp = bfs.run(g, s);
            if comp.len() > best.len() {
                best = comp;
            }
        }
    }
    best
}

/// Diameter of the largest connected component; 0 without edges.
pub fn diameter(g: &Graph) -> Diameter {
    diameter_with(g, EXACT_DIAMETER_LIMIT, DIAMETER_BFS_BUDGET)
}

/// Exhaustive eccentricities up to `exact_limit` component nodes, the
/// iFUB bounding scheme with at most `bfs_budget` searches beyond.
pub fn diameter_with(g: &Graph, exact_limit: usize, bfs_budget: usize) -> Diameter {
    let comp = largest_component(g);
    let mut bfs = Bfs::new(g.node_count());
    if comp.len() <= exact_limit {
        let value = comp.iter().map(|&u| bfs.eccentricity(g, u)).max().unwrap_or(0);
        return Diameter { value, exact: true };
    }

    let root = *comp.iter().max_by_key(|&&u| (g.degree(u), std::cmp::Reverse(u))).unwrap();
    let order = bfs.run(g, root);
    let height = bfs.dist[*order.last().unwrap()];
    let mut levels = vec![Vec::new(); height + 1];
    for &u in &order {
        levels[bfs.dist[u]].push(u);
    }
    for &u in &order {
        bfs.dist[u] = usize::MAX;
    }

    let mut lower = height;
    let mut spent = 1;
    for i in (1..=height).rev() {
        if lower >= 2 * i {
            return Diameter { value: lower, exact: true };
        }
        for &u in &levels[i] {
            if spent >= bfs_budget {
                return Diameter { value: lower, exact: false };
            }
            lower = lower.max(bfs.eccentricity(g, u));
            spent += 1;
        }
        if lower > 2 * (i - 1) {
            return Diameter { value: lower, exact: true };
        }
    }
    Diameter { value: lower, exact: true }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::RandomSource;

    fn all_pairs_oracle(g: &Graph) -> usize {
        let n = g.node_count();
        let mut d = vec![vec![usize::MAX / 4; n]; n];
        for (u, row) in d.iter_mut().enumerate() {
            row[u] = 0;
            for &w in g.neighbors(u) {
                row[w] = 1;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                }
            }
        }
        let comp = largest_component(g);
        comp.iter().flat_map(|&i| comp.iter().map(move |&j| (i, j))).map(|(i, j)| d[i][j]).max().unwrap_or(0)
    }

    #[test]
    fn hand_values() {
        assert_eq!(diameter(&generate::path(4)).value, 3);
        assert_eq!(diameter(&generate::complete(3)).value, 1);
        assert_eq!(diameter(&Graph::empty(5)).value, 0);
        assert_eq!(diameter(&Graph::empty(0)).value, 0);
    }

    #[test]
    fn largest_component_only() {
        // A 6-node star beside a 4-node path whose diameter is larger.
        let mut edges: Vec<(usize, usize)> = (1..6).map(|v| (0, v)).collect();
        edges.extend([(6, 7), (7, 8), (8, 9)]);
        let g = Graph::from_edges(10, edges);
        assert_eq!(diameter(&g).value, 2);
    }

    #[test]
    fn exhaustive_matches_oracle() {
        let mut rng = RandomSource::seeded(1);
        for _ in 0..10 {
            let g = generate::erdos_renyi(50, 0.06, &mut rng);
            assert_eq!(diameter(&g).value, all_pairs_oracle(&g));
        }
    }

    #[test]
    fn bounding_matches_oracle() {
        let mut rng = RandomSource::seeded(2);
        for round in 0..20 {
            let g = if round % 2 == 0 {
                generate::erdos_renyi(60, 0.05, &mut rng)
            } else {
                generate::path(30 + round)
            };
            let d = diameter_with(&g, 0, usize::MAX);
            assert!(d.exact);
            assert_eq!(d.value, all_pairs_oracle(&g));
        }
    }

    #[test]
    fn exhausted_budget_is_flagged() {
        let g = generate::path(40);
        let d = diameter_with(&g, 0, 2);
        assert!(!d.exact);
        assert!(d.value <= 39);
    }
}
