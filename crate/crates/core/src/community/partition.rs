use std::collections::HashMap;
use std::hash::Hash;

use crate::graph::NodeId;

/// Assignment of every node to exactly one community. Labels are dense
/// (`0..community_count`) and no community is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    assignment: Vec<usize>,
    community_count: usize,
}

impl Partition {
    /// Relabels arbitrary labels densely in order of first appearance.
    pub fn from_labels<T: Hash + Eq + Clone>(labels: &[T]) -> Self {
        let mut map: HashMap<T, usize> = HashMap::new();
        let assignment = labels
            .iter()
            .map(|l| {
                let next = map.len();
                *map.entry(l.clone()).or_insert(next)
            })
            .collect();
        Self {
            assignment,
            community_count: map.len(),
        }
    }

    pub fn single(node_count: usize) -> Self {
        Self {
            assignment: vec![0; node_count],
            community_count: usize::from(node_count > 0),
        }
    }

    pub fn singletons(node_count: usize) -> Self {
        Self {
            assignment: (0..node_count).collect(),
            community_count: node_count,
        }
    }

    pub fn node_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn community_count(&self) -> usize {
        self.community_count
    }

    pub fn community_of(&self, u: NodeId) -> usize {
        self.assignment[u]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Member lists per community, each in ascending node order.
    pub fn members(&self) -> Vec<Vec<NodeId>> {
        let mut out = vec![Vec::new(); self.community_count];
        for (u, &c) in self.assignment.iter().enumerate() {
            out[c].push(u);
        }
        out
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.community_count];
        for &c in &self.assignment {
            out[c] += 1;
        }
        out
    }

    /// Lifts a partition of super-nodes back to the nodes they contain:
    /// node `u` gets the label of super-node `self.community_of(u)` in `upper`.
    pub fn compose(&self, upper: &Partition) -> Partition {
        let labels: Vec<usize> = self.assignment.iter().map(|&s| upper.community_of(s)).collect();
        Partition::from_labels(&labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_relabel() {
        let p = Partition::from_labels(&[7, 7, 3, 9, 3]);
        assert_eq!(p.assignment(), &[0, 0, 1, 2, 1]);
        assert_eq!(p.community_count(), 3);
        assert_eq!(p.sizes(), vec![2, 2, 1]);
        assert_eq!(p.members(), vec![vec![0, 1], vec![2, 4], vec![3]]);
    }

    #[test]
    fn compose_maps_through_super_nodes() {
        let lower = Partition::from_labels(&[0, 0, 1, 1, 2]);
        let upper = Partition::from_labels(&[0, 1, 0]);
        assert_eq!(lower.compose(&upper).assignment(), &[0, 0, 1, 1, 0]);
    }

    #[test]
    fn empty_single() {
        assert_eq!(Partition::single(0).community_count(), 0);
        assert_eq!(Partition::single(3).community_count(), 1);
    }
}
