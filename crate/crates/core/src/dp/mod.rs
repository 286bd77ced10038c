//! Differential-privacy building blocks shared by every phase.

mod accountant;
mod exponential;
mod laplace;
mod normsub;

pub use accountant::{accountant_check, check_total, Charge, Composition, Ledger, Phase, Verdict, Violation};
pub use exponential::{em_probabilities, em_select};
pub use laplace::{laplace_perturb, laplace_sample};
pub use normsub::{norm_sub, optimal_shift};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) fn validate_epsilon(eps: f64) -> Result<()> {
    if eps.is_finite() && eps > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidBudget(format!("epsilon must be positive and finite, got {eps}")))
    }
}

/// The three-way budget split: community initialization, community
/// adjustment and information extraction. Reconstruction is free.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrivacyBudget {
    eps1: f64,
    eps2: f64,
    eps3: f64,
}

impl PrivacyBudget {
    pub fn new(eps1: f64, eps2: f64, eps3: f64) -> Result<Self> {
        for eps in [eps1, eps2, eps3] {
            validate_epsilon(eps)?;
        }
        Ok(Self { eps1, eps2, eps3 })
    }

    /// Splits `total` by three positive fractions summing to one.
    pub fn from_total(total: f64, split: [f64; 3]) -> Result<Self> {
        validate_epsilon(total)?;
        let sum: f64 = split.iter().sum();
        if split.iter().any(|f| !(f.is_finite() && *f > 0.0)) || (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidBudget(format!(
                "split fractions must be positive and sum to 1, got {split:?}"
            )));
        }
        Self::new(total * split[0], total * split[1], total * split[2])
    }

    /// Equal thirds, the default allocation.
    pub fn equal_split(total: f64) -> Result<Self> {
        Self::from_total(total, [1.0 / 3.0; 3])
    }

    pub fn eps1(&self) -> f64 {
        self.eps1
    }

    pub fn eps2(&self) -> f64 {
        self.eps2
    }

    pub fn eps3(&self) -> f64 {
        self.eps3
    }

    pub fn total(&self) -> f64 {
        self.eps1 + self.eps2 + self.eps3
    }
}

/// Global sensitivity of a released statistic under edge-level neighbours.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Sensitivity(f64);

impl Sensitivity {
    /// Super-node inner weight: one edge moves two degrees.
    pub const INNER_WEIGHT: Self = Self(2.0);
    /// Edge count between two super-nodes.
    pub const OUTER_WEIGHT: Self = Self(1.0);
    /// Connection count of a node to a community.
    pub const ADJUSTMENT: Self = Self(1.0);
    /// Intra-community degree sequence.
    pub const DEGREE: Self = Self(2.0);
    /// Inter-community edge count vector.
    pub const EDGE_COUNT: Self = Self(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Self(value))
        } else {
            Err(Error::Config(format!("sensitivity must be positive, got {value}")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Laplace scale `sensitivity / eps`.
    pub fn laplace_scale(self, eps: f64) -> Result<f64> {
        validate_epsilon(eps)?;
        Ok(self.0 / eps)
    }
}
