//! Privacy ledger and the composition check behind every release.
//!
//! Charges inside one phase compose sequentially unless they are tagged with
//! a parallel group, in which case the group costs its largest charge
//! (mechanisms over disjoint parts of the data). Phases compose sequentially.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::PrivacyBudget;
use crate::error::{Error, Result};

/// Slack for floating-point sums when comparing spend against allotments.
const TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Phase {
    CommunityInitialization,
    CommunityAdjustment,
    InformationExtraction,
    GraphReconstruction,
    /// Top-m Filter: noisy edge count.
    EdgeCount,
    /// Top-m Filter: noisy adjacency matrix.
    AdjacencyMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Composition {
    Sequential,
    Parallel { group: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Charge {
    pub phase: Phase,
    pub mechanism: String,
    pub eps: f64,
    pub composition: Composition,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Ledger {
    entries: Vec<Charge>,
}

impl Ledger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, phase: Phase, mechanism: &str, eps: f64, composition: Composition) {
        self.entries.push(Charge {
            phase,
            mechanism: mechanism.to_owned(),
            eps,
            composition,
        });
    }

    pub fn sequential(&mut self, phase: Phase, mechanism: &str, eps: f64) {
        self.record(phase, mechanism, eps, Composition::Sequential);
    }

    pub fn parallel(&mut self, phase: Phase, group: &str, mechanism: &str, eps: f64) {
        self.record(
            phase,
            mechanism,
            eps,
            Composition::Parallel {
                group: group.to_owned(),
            },
        );
    }

    pub fn entries(&self) -> &[Charge] {
        &self.entries
    }

    pub fn extend(&mut self, other: Ledger) {
        self.entries.extend(other.entries);
    }

    /// Effective spend per phase after composition.
    pub fn spend_by_phase(&self) -> BTreeMap<Phase, f64> {
        let mut sequential: BTreeMap<Phase, f64> = BTreeMap::new();
        let mut groups: BTreeMap<(Phase, &str), f64> = BTreeMap::new();
        for c in &self.entries {
            match &c.composition {
                Composition::Sequential => *sequential.entry(c.phase).or_default() += c.eps,
                Composition::Parallel { group } => {
                    let slot = groups.entry((c.phase, group.as_str())).or_insert(0.0);
                    *slot = slot.max(c.eps);
                }
            }
        }
        for ((phase, _), eps) in groups {
            *sequential.entry(phase).or_default() += eps;
        }
        sequential
    }

    pub fn phase_spend(&self, phase: Phase) -> f64 {
        self.spend_by_phase().get(&phase).copied().unwrap_or(0.0)
    }

    pub fn total_spend(&self) -> f64 {
        self.spend_by_phase().values().sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ledger serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    /// `None` when the overall total, not a single phase, is exceeded.
    pub phase: Option<Phase>,
    pub spent: f64,
    pub allowed: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub spent: BTreeMap<Phase, f64>,
    pub total_spent: f64,
    pub total_allowed: f64,
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<Self> {
        if self.passed() {
            return Ok(self);
        }
        let report = self
            .violations
            .iter()
            .map(|v| match v.phase {
                Some(p) => format!("{p:?} spent {} of {}", v.spent, v.allowed),
                None => format!("total spent {} of {}", v.spent, v.allowed),
            })
            .collect::<Vec<_>>()
            .join("; ");
        Err(Error::BudgetViolation(report))
    }
}

fn over(spent: f64, allowed: f64) -> bool {
    !spent.is_finite() || spent > allowed + TOLERANCE * allowed.abs().max(1.0)
}

fn malformed(ledger: &Ledger) -> Vec<Violation> {
    ledger
        .entries()
        .iter()
        .filter(|c| !(c.eps.is_finite() && c.eps >= 0.0))
        .map(|c| Violation {
            phase: Some(c.phase),
            spent: c.eps,
            allowed: 0.0,
        })
        .collect()
}

fn verdict(ledger: &Ledger, allowed: impl Fn(Phase) -> f64, total_allowed: f64) -> Verdict {
    let spent = ledger.spend_by_phase();
    let mut violations = malformed(ledger);
    for (&phase, &eps) in &spent {
        let cap = allowed(phase);
        if over(eps, cap) {
            violations.push(Violation {
                phase: Some(phase),
                spent: eps,
                allowed: cap,
            });
        }
    }
    let total_spent: f64 = spent.values().sum();
    if over(total_spent, total_allowed) {
        violations.push(Violation {
            phase: None,
            spent: total_spent,
            allowed: total_allowed,
        });
    }
    Verdict {
        spent,
        total_spent,
        total_allowed,
        violations,
    }
}

/// Checks a community-pipeline ledger: each phase within its allotment,
/// reconstruction free, and the total within `budget.total()`.
pub fn accountant_check(budget: &PrivacyBudget, ledger: &Ledger) -> Verdict {
    verdict(
        ledger,
        |phase| match phase {
            Phase::CommunityInitialization => budget.eps1(),
            Phase::CommunityAdjustment => budget.eps2(),
            Phase::InformationExtraction => budget.eps3(),
            _ => 0.0,
        },
        budget.total(),
    )
}

/// Checks a ledger against a single scalar budget (used by the baseline).
pub fn check_total(total: f64, ledger: &Ledger) -> Verdict {
    verdict(
        ledger,
        |phase| match phase {
            Phase::GraphReconstruction => 0.0,
            _ => total,
        },
        total,
    )
}
