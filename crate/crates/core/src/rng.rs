use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// The randomness used by every mechanism and generator in the crate.
///
/// Backed by ChaCha20 so seeded streams are reproducible bit-for-bit across
/// platforms. A single source must not be shared across concurrent callers;
/// use [`RandomSource::split`] to derive independent streams.
#[derive(Clone, Debug)]
pub struct RandomSource {
    rng: ChaCha20Rng,
}

impl RandomSource {
    /// Reproducible stream. Only for tests and experiments: noise drawn from a
    /// known seed provides no privacy.
    pub fn seeded(seed: u64) -> Self {
        Self {
            rng: ChaCha20Rng::seed_from_u64(seed),
        }
    }

    pub fn from_entropy() -> Self {
        Self {
            rng: ChaCha20Rng::from_os_rng(),
        }
    }

    pub fn from_option(seed: Option<u64>) -> Self {
        match seed {
            Some(s) => Self::seeded(s),
            None => Self::from_entropy(),
        }
    }

    /// Derives an independent child stream. Deterministic given the parent state.
    pub fn split(&mut self) -> Self {
        let mut seed = [0u8; 32];
        self.rng.fill_bytes(&mut seed);
        Self {
            rng: ChaCha20Rng::from_seed(seed),
        }
    }

    /// Uniform in [0, 1).
    pub fn uniform(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        if p <= 0.0 {
            false
        } else if p >= 1.0 {
            true
        } else {
            self.uniform() < p
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    pub(crate) fn inner(&mut self) -> &mut ChaCha20Rng {
        &mut self.rng
    }
}
