//! NormSub consistency post-processing.
//!
//! Finds the integer shift `delta` minimising
//! `|sum(max(x_i + delta, 0)) - sum(x_i)|`, then clips the shifted values at
//! zero. Ties go to the shift closest to zero, then to the smaller shift.
//!
//! `f(delta) = sum(max(x_i + delta, 0))` is non-decreasing, flat (zero) for
//! `delta <= -max(x)` and strictly increasing above that. So the optimum is
//! one of: the last shift below the crossing `f = sum(x)`, the first shift at
//! or above it, or the flat-region shift closest to zero.

use std::cmp::Ordering;

struct ShiftedSum {
    // descending
    sorted: Vec<f64>,
    prefix: Vec<f64>,
}

impl ShiftedSum {
    fn new(values: &[f64]) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_by(|a, b| b.total_cmp(a));
        let mut prefix = Vec::with_capacity(sorted.len() + 1);
        let mut acc = 0.0;
        prefix.push(acc);
        for x in &sorted {
            acc += x;
            prefix.push(acc);
        }
        Self { sorted, prefix }
    }

    fn eval(&self, delta: i64) -> f64 {
        let d = delta as f64;
        let k = self.sorted.partition_point(|&x| x + d > 0.0);
        if k == 0 {
            0.0
        } else {
            self.prefix[k] + k as f64 * d
        }
    }
}

fn preferred(candidate: i64, incumbent: i64) -> bool {
    match candidate.unsigned_abs().cmp(&incumbent.unsigned_abs()) {
        Ordering::Less => true,
        Ordering::Equal => candidate < incumbent,
        Ordering::Greater => false,
    }
}

/// Half-width of the integer search window: `ceil(10 * max|x|) + 1`.
fn search_reach(noisy: &[f64]) -> i64 {
    let max_abs = noisy.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    (10.0 * max_abs).ceil().min(i64::MAX as f64 / 4.0) as i64 + 1
}

/// The optimal integer shift `delta*`.
pub fn optimal_shift(noisy: &[f64]) -> i64 {
    if noisy.is_empty() {
        return 0;
    }
    let reach = search_reach(noisy);
    let (lo, hi) = (-reach, reach);
    let target: f64 = noisy.iter().sum();
    let f = ShiftedSum::new(noisy);

    // Smallest shift in the window with f(shift) >= target; f(hi) >= target
    // always holds because hi exceeds every |x_i|.
    let (mut a, mut b) = (lo, hi);
    if f.eval(lo) >= target {
        b = lo;
    } else {
        while b - a > 1 {
            let mid = a + (b - a) / 2;
            if f.eval(mid) >= target {
                b = mid;
            } else {
                a = mid;
            }
        }
    }

    let x_max = f.sorted[0];
    // Largest shift on the flat region (x_max + shift <= 0), moved toward zero.
    let flat_edge = (-x_max).floor() as i64;
    let flat_pick = flat_edge.min(0).max(lo);

    let mut best = b;
    let mut best_obj = (f.eval(b) - target).abs();
    for cand in [b - 1, flat_pick] {
        if cand < lo || cand > hi {
            continue;
        }
        let obj = (f.eval(cand) - target).abs();
        if obj < best_obj || (obj == best_obj && preferred(cand, best)) {
            best = cand;
            best_obj = obj;
        }
    }
    best
}

/// Applies NormSub: `max(x_i + delta*, 0)` for every element.
pub fn norm_sub(noisy: &[f64]) -> Vec<f64> {
    let delta = optimal_shift(noisy) as f64;
    noisy.iter().map(|x| (x + delta).max(0.0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn consistent_input_is_unchanged() {
        assert_eq!(optimal_shift(&[3.0, 2.0, 1.0]), 0);
        assert_eq!(norm_sub(&[3.0, 2.0, 1.0]), vec![3.0, 2.0, 1.0]);
    }

    #[test]
    fn unreachable_negative_target() {
        assert_eq!(optimal_shift(&[-5.0]), 0);
        assert_eq!(norm_sub(&[-5.0]), vec![0.0]);
    }

    #[test]
    fn empty_and_zero() {
        assert!(norm_sub(&[]).is_empty());
        assert_eq!(norm_sub(&[0.0, 0.0]), vec![0.0, 0.0]);
    }

    #[test]
    fn symmetric_tie_prefers_small_shift() {
        // sum 0: every shift <= -1 zeroes everything exactly.
        assert_eq!(optimal_shift(&[1.0, -1.0]), -1);
    }

    #[test]
    fn sum_is_roughly_preserved() {
        let noisy = [5.3, -2.1, 7.8, -0.4, 3.3, -6.0, 12.0];
        let out = norm_sub(&noisy);
        let target: f64 = noisy.iter().sum();
        let got: f64 = out.iter().sum();
        assert!(out.iter().all(|x| *x >= 0.0));
        assert!((got - target).abs() <= noisy.len() as f64);
    }
}
