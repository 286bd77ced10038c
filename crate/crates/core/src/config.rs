//! Run configuration, loadable from TOML.

use serde::{Deserialize, Serialize};

use crate::community::ResolutionParam;
use crate::dp::PrivacyBudget;
use crate::error::{Error, Result};
use crate::pipeline::PrivGraphParams;
use crate::tmf::TmfParams;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    #[default]
    Privgraph,
    Tmf,
}

/// Where NormSub runs on the noisy degree sequences: once over all of them
/// concatenated, or separately for each community.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormSubScope {
    #[default]
    Global,
    PerCommunity,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InterSampling {
    #[default]
    Bernoulli,
    ExactCount,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SynthesisConfig {
    pub method: Method,
    pub epsilon: f64,
    /// Fractions of `epsilon` for initialization, adjustment and extraction.
    pub budget_split: [f64; 3],
    /// Nodes per random block before the noisy super-graph is built.
    pub block_size: usize,
    pub resolution: f64,
    pub seed: Option<u64>,
    pub norm_sub_scope: NormSubScope,
    pub inter_sampling: InterSampling,
    /// Share of the budget the baseline spends on its edge count.
    pub tmf_count_fraction: f64,
    pub tmf_cell_cap: u64,
}

impl Default for SynthesisConfig {
    fn default() -> Self {
        Self {
            method: Method::Privgraph,
            epsilon: 2.0,
            budget_split: [1.0 / 3.0; 3],
            block_size: 20,
            resolution: 1.0,
            seed: None,
            norm_sub_scope: NormSubScope::Global,
            inter_sampling: InterSampling::Bernoulli,
            tmf_count_fraction: 0.1,
            tmf_cell_cap: 1_000_000_000,
        }
    }
}

impl SynthesisConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let config: Self = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<()> {
        self.budget()?;
        self.privgraph_params()?;
        self.tmf_params()?;
        Ok(())
    }

    pub fn budget(&self) -> Result<PrivacyBudget> {
        PrivacyBudget::from_total(self.epsilon, self.budget_split)
    }

    pub fn privgraph_params(&self) -> Result<PrivGraphParams> {
        if self.block_size == 0 {
            return Err(Error::Config("block_size must be at least 1".into()));
        }
        Ok(PrivGraphParams {
            block_size: self.block_size,
            resolution: ResolutionParam::new(self.resolution)?,
            norm_sub_scope: self.norm_sub_scope,
            inter_sampling: self.inter_sampling,
        })
    }

    pub fn tmf_params(&self) -> Result<TmfParams> {
        TmfParams::new(self.tmf_count_fraction, self.tmf_cell_cap)
    }
}
