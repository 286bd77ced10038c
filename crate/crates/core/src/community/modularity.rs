use super::{Partition, ResolutionParam, WeightedGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Resolution modularity `sum_C [t * in_C / 2m - (tot_C / 2m)^2]`.
///
/// `in_C` counts internal weight twice (self weights included as stored)
/// and `tot_C` is the strength sum of the members of `C`.
pub fn modularity(wg: &WeightedGraph, p: &Partition, t: ResolutionParam) -> Result<f64> {
    assert_eq!(p.node_count(), wg.node_count(), "partition does not cover the graph");
    let two_m = wg.total_weight();
    if two_m.is_nan() || two_m <= 0.0 {
        return Err(Error::UndefinedModularity);
    }
    let k = p.community_count();
    let mut internal = vec![0.0; k];
    let mut total = vec![0.0; k];
    for i in 0..wg.node_count() {
        let c = p.community_of(i);
        internal[c] += wg.self_weight(i);
        total[c] += wg.self_weight(i);
        for &(j, w) in wg.neighbors(i) {
            total[c] += w;
            if p.community_of(j) == c {
                internal[c] += w;
            }
        }
    }
    Ok(internal
        .iter()
        .zip(&total)
        .map(|(inn, tot)| t.value() * inn / two_m - (tot / two_m).powi(2))
        .sum())
}

pub fn graph_modularity(g: &Graph, p: &Partition, t: ResolutionParam) -> Result<f64> {
    modularity(&WeightedGraph::from_graph(g), p, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn single_community_is_zero() {
        let g = generate::erdos_renyi(25, 0.3, &mut crate::RandomSource::seeded(1));
        let q = graph_modularity(&g, &Partition::single(25), ResolutionParam::CLASSIC).unwrap();
        assert_eq!(q, 0.0);
    }

    #[test]
    fn triangle_singletons() {
        let q = graph_modularity(&generate::complete(3), &Partition::singletons(3), ResolutionParam::CLASSIC)
            .unwrap();
        assert!((q + 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn two_triangles() {
        let g = generate::disjoint_cliques(2, 3);
        let p = Partition::from_labels(&[0, 0, 0, 1, 1, 1]);
        let q = graph_modularity(&g, &p, ResolutionParam::CLASSIC).unwrap();
        assert!((q - 0.5).abs() < 1e-15);
    }

    #[test]
    fn empty_graph_is_undefined() {
        let g = Graph::empty(3);
        assert!(matches!(
            graph_modularity(&g, &Partition::single(3), ResolutionParam::CLASSIC),
            Err(Error::UndefinedModularity)
        ));
    }
}
