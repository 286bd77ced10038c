//! Community division: noisy super-node graph + Louvain for the preliminary
//! partition, then exponential-mechanism adjustment of every node.

mod adjust;
mod initialize;
mod louvain;
mod modularity;
mod partition;
mod supergraph;

pub use adjust::community_adjust;
pub use initialize::{community_initialize, random_partition};
pub use louvain::{louvain, LOCAL_MOVE_TOLERANCE};
pub use modularity::{graph_modularity, modularity};
pub use partition::Partition;
pub use supergraph::{pair_index, WeightedGraph, WeightedSuperGraph};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Louvain resolution (time-scale) `t`; `t = 1` is classic modularity,
/// smaller values favour more and smaller communities.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResolutionParam(f64);

impl ResolutionParam {
    pub const CLASSIC: Self = Self(1.0);

    pub fn new(t: f64) -> Result<Self> {
        if t.is_finite() && t > 0.0 {
            Ok(Self(t))
        } else {
            Err(Error::Config(format!("resolution must be positive, got {t}")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl Default for ResolutionParam {
    fn default() -> Self {
        Self::CLASSIC
    }
}
