use super::{validate_epsilon, Sensitivity};
use crate::error::{Error, Result};
use crate::RandomSource;

/// Selection probabilities `exp(eps*q/(2*GS)) / sum`, computed in log space
/// with the maximum subtracted so large `eps * q` cannot overflow.
pub fn em_probabilities(qualities: &[f64], sensitivity: Sensitivity, eps: f64) -> Result<Vec<f64>> {
    validate_epsilon(eps)?;
    if qualities.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    let factor = eps / (2.0 * sensitivity.value());
    let scores: Vec<f64> = qualities.iter().map(|q| factor * q).collect();
    let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let weights: Vec<f64> = scores.iter().map(|s| (s - max).exp()).collect();
    let total: f64 = weights.iter().sum();
    Ok(weights.into_iter().map(|w| w / total).collect())
}

/// Exponential mechanism: returns index `o` with probability proportional
/// to `exp(eps * q_o / (2 * sensitivity))`.
pub fn em_select(
    qualities: &[f64],
    sensitivity: Sensitivity,
    eps: f64,
    rng: &mut RandomSource,
) -> Result<usize> {
    let probs = em_probabilities(qualities, sensitivity, eps)?;
    let mut target = rng.uniform();
    let mut last_positive = 0;
    for (i, p) in probs.iter().enumerate() {
        if *p > 0.0 {
            if target < *p {
                return Ok(i);
            }
            target -= p;
            last_positive = i;
        }
    }
    // Rounding left a sliver of mass; give it to the last reachable option.
    Ok(last_positive)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_candidates() {
        let mut rng = RandomSource::seeded(0);
        assert!(matches!(
            em_select(&[], Sensitivity::ADJUSTMENT, 1.0, &mut rng),
            Err(Error::EmptyCandidates)
        ));
        assert!(em_select(&[1.0], Sensitivity::ADJUSTMENT, 0.0, &mut rng).is_err());
    }

    #[test]
    fn closed_form_two_options() {
        let p = em_probabilities(&[1.0, 0.0], Sensitivity::ADJUSTMENT, 2.0).unwrap();
        let e = std::f64::consts::E;
        assert!((p[0] - e / (e + 1.0)).abs() < 1e-12);
        assert!((p[0] - 0.7311).abs() < 1e-4);
    }

    #[test]
    fn symmetric_qualities_are_uniform() {
        let p = em_probabilities(&[5.0, 5.0], Sensitivity::ADJUSTMENT, 123.0).unwrap();
        assert_eq!(p, vec![0.5, 0.5]);
    }

    #[test]
    fn no_overflow_for_huge_scores() {
        let p = em_probabilities(&[9.0, 0.0, 3.0], Sensitivity::ADJUSTMENT, 1e12).unwrap();
        assert_eq!(p, vec![1.0, 0.0, 0.0]);
        let mut rng = RandomSource::seeded(9);
        for _ in 0..100 {
            assert_eq!(em_select(&[9.0, 0.0, 3.0], Sensitivity::ADJUSTMENT, 1e12, &mut rng).unwrap(), 0);
        }
    }
}
