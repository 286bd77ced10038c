//! Synthetic graph publication under edge differential privacy.
//!
//! The pipeline partitions the input graph into communities using a noisy
//! super-node graph and Louvain, refines the partition with the exponential
//! mechanism, releases noisy intra-community degree sequences plus noisy
//! inter-community edge counts, and rebuilds a graph from those with a
//! Chung-Lu style generator. Every privacy charge is recorded in a
//! [`dp::Ledger`] that can be audited with [`dp::accountant_check`].
//!
//! The crate also ships the Top-m Filter baseline ([`tmf`]), a graph utility
//! metric suite ([`metrics`]) and an influence-maximization case study
//! ([`im`]).
//!
//! Seeded randomness ([`RandomSource::seeded`]) exists for testing and
//! reproducible experiments only. Deterministic noise voids the privacy
//! guarantee; real releases must use [`RandomSource::from_entropy`].

pub mod community;
pub mod config;
pub mod dp;
mod error;
pub mod extract;
pub mod generate;
pub mod graph;
pub mod im;
pub mod metrics;
pub mod pipeline;
pub mod reconstruct;
mod rng;
pub mod tmf;

pub use community::{Partition, ResolutionParam, WeightedGraph, WeightedSuperGraph};
pub use config::{InterSampling, Method, NormSubScope, SynthesisConfig};
pub use dp::{Ledger, PrivacyBudget, Sensitivity};
pub use error::{Error, Result};
pub use graph::{Graph, LabelMap, NodeId};
pub use metrics::MetricsReport;
pub use pipeline::{synthesize, PrivGraphParams, SynthesisOutput};
pub use rng::RandomSource;
