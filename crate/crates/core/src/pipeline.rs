//! The end-to-end community-based synthesis.

use serde::{Deserialize, Serialize};

use crate::community::{community_adjust, community_initialize, Partition, ResolutionParam};
use crate::config::{InterSampling, NormSubScope};
use crate::dp::{accountant_check, Ledger, Phase, PrivacyBudget, Verdict};
use crate::extract::{extract, perturb, ExtractedInfo};
use crate::graph::Graph;
use crate::reconstruct::reconstruct;
use crate::RandomSource;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrivGraphParams {
    pub block_size: usize,
    pub resolution: ResolutionParam,
    pub norm_sub_scope: NormSubScope,
    pub inter_sampling: InterSampling,
}

impl Default for PrivGraphParams {
    fn default() -> Self {
        Self {
            block_size: 20,
            resolution: ResolutionParam::CLASSIC,
            norm_sub_scope: NormSubScope::Global,
            inter_sampling: InterSampling::Bernoulli,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SynthesisOutput {
    pub graph: Graph,
    pub ledger: Ledger,
    pub verdict: Verdict,
    /// Partition after the adjustment step. Derived under the privacy
    /// budget, so it is safe to publish alongside the graph.
    pub partition: Partition,
    pub info: ExtractedInfo,
}

/// Synthesizes a graph on the node set of `g`.
///
/// Budget `eps1` builds the preliminary partition, `eps2` adjusts it and
/// `eps3` releases the community statistics; reconstruction only reads
/// released values. The ledger is audited before returning and a failed
/// audit is reported as [`crate::Error::BudgetViolation`].
pub fn synthesize(
    g: &Graph,
    params: &PrivGraphParams,
    budget: &PrivacyBudget,
    rng: &mut RandomSource,
) -> crate::Result<SynthesisOutput> {
    let mut ledger = Ledger::new();
    let initial = community_initialize(g, params.block_size, budget.eps1(), params.resolution, rng, &mut ledger)?;
    let partition = community_adjust(g, &initial, budget.eps2(), rng, &mut ledger)?;
    let info = perturb(&extract(g, &partition), budget.eps3(), params.norm_sub_scope, rng, &mut ledger)?;
    let graph = reconstruct(&info, g.node_count(), params.inter_sampling, rng);
    ledger.sequential(Phase::GraphReconstruction, "sampling from released statistics", 0.0);
    let verdict = accountant_check(budget, &ledger).into_result()?;
    Ok(SynthesisOutput {
        graph,
        ledger,
        verdict,
        partition,
        info,
    })
}
