use std::collections::BTreeMap;

use crate::community::Partition;

/// Normalized mutual information `2 I(A;B) / (H(A) + H(B))`, natural log.
/// Two single-block partitions of the same nodes count as identical (1).
pub fn nmi(a: &Partition, b: &Partition) -> f64 {
    assert_eq!(a.node_count(), b.node_count(), "partitions cover different node sets");
    let n = a.node_count() as f64;
    if a.node_count() == 0 {
        return 1.0;
    }
    let mut table: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    for (&x, &y) in a.assignment().iter().zip(b.assignment()) {
        *table.entry((x, y)).or_default() += 1.0;
    }
    let rows: Vec<f64> = a.sizes().into_iter().map(|s| s as f64).collect();
    let cols: Vec<f64> = b.sizes().into_iter().map(|s| s as f64).collect();
    let entropy = |counts: &[f64]| -> f64 { counts.iter().map(|&c| -c * (c / n).ln()).sum() };
    if table.len() == rows.len() && table.len() == cols.len() {
        // One cell per row and per column: a relabelling.
        return 1.0;
    }
    let denominator = entropy(&rows) + entropy(&cols);
    if denominator <= 0.0 {
        return 1.0;
    }
    let mut info = 0.0;
    for (&(i, j), &h) in &table {
        info += h * (h * n / (rows[i] * cols[j])).ln();
    }
    (2.0 * info / denominator).clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RandomSource;

    #[test]
    fn identical_partitions() {
        let p = Partition::from_labels(&[0, 0, 1, 1, 2, 2, 2]);
        assert_eq!(nmi(&p, &p), 1.0);
        let relabelled = Partition::from_labels(&["x", "x", "y", "y", "z", "z", "z"]);
        assert_eq!(nmi(&p, &relabelled), 1.0);
    }

    #[test]
    fn diagonal_contingency() {
        let a = Partition::from_labels(&[0, 0, 1, 1]);
        let b = Partition::from_labels(&[5, 5, 7, 7]);
        assert!((nmi(&a, &b) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn hand_computed_value() {
        // H = [[2,1],[0,1]], n = 4.
        let a = Partition::from_labels(&[0, 0, 0, 1]);
        let b = Partition::from_labels(&[0, 0, 1, 1]);
        let n: f64 = 4.0;
        let mi = 2.0 * (2.0 * n / (3.0 * 2.0)).ln() + (n / (3.0 * 2.0)).ln() + (n / 2.0).ln();
        let ha = -(3.0 * (3.0 / n).ln() + (1.0 / n).ln());
        let hb = -(2.0 * (2.0 / n).ln() * 2.0);
        let expected = 2.0 * mi / (ha + hb);
        assert!((nmi(&a, &b) - expected).abs() < 1e-12);
    }

    #[test]
    fn single_blocks() {
        assert_eq!(nmi(&Partition::single(5), &Partition::single(5)), 1.0);
        assert_eq!(nmi(&Partition::single(4), &Partition::from_labels(&[0, 0, 1, 1])), 0.0);
    }

    #[test]
    fn independent_labels_score_low() {
        let mut rng = RandomSource::seeded(4);
        let a = Partition::from_labels(&[0, 0, 0, 0, 1, 1, 1, 1]);
        let trials = 500;
        let mean = (0..trials)
            .map(|_| {
                let labels: Vec<bool> = (0..8).map(|_| rng.bernoulli(0.5)).collect();
                nmi(&a, &Partition::from_labels(&labels))
            })
            .sum::<f64>()
            / trials as f64;
        assert!(mean < 0.2, "{mean}");
    }
}
