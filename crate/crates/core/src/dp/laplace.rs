use super::{validate_epsilon, Sensitivity};
use crate::error::Result;
use crate::RandomSource;

/// One draw from Laplace(0, `scale`) by inverse-CDF sampling.
pub fn laplace_sample(scale: f64, rng: &mut RandomSource) -> f64 {
    loop {
        let u = rng.uniform() - 0.5;
        if u > -0.5 {
            return -scale * u.signum() * (1.0 - 2.0 * u.abs()).ln();
        }
    }
}

/// Adds i.i.d. Laplace(`sensitivity / eps`) noise to every value.
pub fn laplace_perturb(
    values: &[f64],
    sensitivity: Sensitivity,
    eps: f64,
    rng: &mut RandomSource,
) -> Result<Vec<f64>> {
    validate_epsilon(eps)?;
    let scale = sensitivity.laplace_scale(eps)?;
    Ok(values.iter().map(|v| v + laplace_sample(scale, rng)).collect())
}
