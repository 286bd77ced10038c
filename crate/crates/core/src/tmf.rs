//! Top-m Filter baseline: perturb every adjacency cell and keep the `m`
//! largest, with `m` itself a noisy edge count.
//!
//! The full upper triangle is materialised, so memory grows as `n^2`;
//! [`TmfParams::cell_cap`] bounds it.

use serde::{Deserialize, Serialize};

use crate::dp::{check_total, laplace_sample, validate_epsilon, Ledger, Phase, Sensitivity, Verdict};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::RandomSource;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TmfParams {
    count_fraction: f64,
    cell_cap: u64,
}

impl TmfParams {
    pub fn new(count_fraction: f64, cell_cap: u64) -> Result<Self> {
        if !(count_fraction > 0.0 && count_fraction < 1.0) {
            return Err(Error::Config(format!(
                "edge-count budget fraction must lie in (0, 1), got {count_fraction}"
            )));
        }
        Ok(Self {
            count_fraction,
            cell_cap,
        })
    }

    pub fn count_fraction(&self) -> f64 {
        self.count_fraction
    }

    pub fn cell_cap(&self) -> u64 {
        self.cell_cap
    }
}

impl Default for TmfParams {
    fn default() -> Self {
        Self {
            count_fraction: 0.1,
            cell_cap: 1_000_000_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TmfOutput {
    pub graph: Graph,
    pub ledger: Ledger,
    pub verdict: Verdict,
    pub noisy_edge_count: usize,
}

fn mix(mut x: u64) -> u64 {
    x ^= x >> 30;
    x = x.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x ^= x >> 27;
    x = x.wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

pub fn tmf_synthesize(g: &Graph, eps: f64, params: &TmfParams, rng: &mut RandomSource) -> Result<TmfOutput> {
    validate_epsilon(eps)?;
    let n = g.node_count();
    let cells = n as u128 * n.saturating_sub(1) as u128 / 2;
    if cells > params.cell_cap as u128 || cells > u32::MAX as u128 {
        return Err(Error::TooLarge {
            cells,
            cap: (params.cell_cap as u128).min(u32::MAX as u128),
        });
    }
    let cells = cells as usize;
    let eps_count = eps * params.count_fraction;
    let eps_matrix = eps - eps_count;
    let mut ledger = Ledger::new();

    let count_scale = Sensitivity::EDGE_COUNT.laplace_scale(eps_count)?;
    let noisy_m = (g.edge_count() as f64 + laplace_sample(count_scale, rng)).round();
    let m = noisy_m.clamp(0.0, cells as f64) as usize;
    ledger.sequential(Phase::EdgeCount, "laplace edge count", eps_count);

    let cell_scale = Sensitivity::EDGE_COUNT.laplace_scale(eps_matrix)?;
    let mut noisy = Vec::with_capacity(cells);
    for u in 0..n {
        let mut nbrs = g.neighbors(u).iter().peekable();
        for w in (u + 1)..n {
            while nbrs.next_if(|&&x| x < w).is_some() {}
            let bit = if nbrs.next_if_eq(&&w).is_some() { 1.0 } else { 0.0 };
            noisy.push(bit + laplace_sample(cell_scale, rng));
        }
    }
    ledger.sequential(Phase::AdjacencyMatrix, "laplace adjacency cells", eps_matrix);

    // Equal noisy values are ordered by a salted hash of the cell index,
    // which is a uniformly random order for a random salt.
    let salt = rng.next_u64();
    let by_value_desc = |a: &u32, b: &u32| {
        noisy[*b as usize]
            .total_cmp(&noisy[*a as usize])
            .then_with(|| mix(*a as u64 ^ salt).cmp(&mix(*b as u64 ^ salt)))
    };
    let mut order: Vec<u32> = (0..cells as u32).collect();
    if m > 0 && m < cells {
        order.select_nth_unstable_by(m - 1, by_value_desc);
    }
    order.truncate(m);
    order.sort_unstable();
    drop(noisy);

    let mut edges = Vec::with_capacity(m);
    let mut row = 0usize;
    let mut row_start = 0usize;
    for idx in order {
        let idx = idx as usize;
        while idx >= row_start + (n - row - 1) {
            row_start += n - row - 1;
            row += 1;
        }
        edges.push((row, row + 1 + idx - row_start));
    }
    let verdict = check_total(eps, &ledger).into_result()?;
    Ok(TmfOutput {
        graph: Graph::from_edges(n, edges),
        ledger,
        verdict,
        noisy_edge_count: m,
    })
}
