// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

//! Divisibility defect `‖ρ^{Φ_{t+t′}} − ρ^{Φ_t ∘ Φ_{t′}}‖₂` of a sampled
//! trajectory. It vanishes for time-independent Lindblad and unitary
//! dynamics and is generically positive for ensemble-averaged dynamics.

use rayon::prelude::*;
use serde::Serialize;

use crate::channel::{compose, ChannelTrajectory, ChoiMatrix};
use crate::error::{Error, Result};
use crate::linalg;

/// Relative tolerance for matching a requested time to a grid point.
const TIME_MATCH_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairDefect {
    pub t: f64,
    pub t_prime: f64,
    pub defect: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DivisibilityReport {
    pub pairs: Vec<PairDefect>,
    pub max_defect: f64,
}

fn find(times: &[f64], t: f64) -> Option<usize> {
    times
        .iter()
        .position(|&x| (x - t).abs() <= TIME_MATCH_TOL * t.abs().max(1.0))
}

/// Ordered pairs of positive grid times whose sum is also on the grid.
fn usable_pairs(times: &[f64]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (i, &t) in times.iter().enumerate().filter(|(_, &t)| t > 0.0) {
        for (j, &tp) in times.iter().enumerate().filter(|(_, &t)| t > 0.0) {
            if let Some(s) = find(times, t + tp) {
                out.push((i, j, s));
            }
        }
    }
    out
}

/// Defect for each pair `(t, t′)`. With `pairs = None` every usable pair on
/// the grid is tested.
pub fn divisibility_defect(
    traj: &ChannelTrajectory,
    pairs: Option<&[(f64, f64)]>,
) -> Result<DivisibilityReport> {
    let times: Vec<f64> = traj.times().collect();
    let usable = usable_pairs(&times);
    let describe = || {
        let list: Vec<String> = usable
            .iter()
            .map(|&(i, j, _)| format!("({}, {})", times[i], times[j]))
            .collect();
        if list.is_empty() {
            "none".to_string()
        } else {
            list.join(", ")
        }
    };
    let selected: Vec<(usize, usize, usize)> = match pairs {
        None => usable.clone(),
        Some(requested) => requested
            .iter()
            .map(
                |&(t, tp)| match (find(&times, t), find(&times, tp), find(&times, t + tp)) {
                    (Some(i), Some(j), Some(s)) => Ok((i, j, s)),
                    _ => Err(Error::Request(format!(
                    "pair ({t}, {tp}) needs t, t', and t + t' on the time grid; usable pairs: {}",
                    describe()
                ))),
                },
            )
            .collect::<Result<_>>()?,
    };
    if selected.is_empty() {
        return Err(Error::Request(format!(
            "no pair (t, t') with t + t' on the time grid; usable pairs: {}",
            describe()
        )));
    }
    let samples = traj.samples();
    let channel = |i: usize| -> &ChoiMatrix { &samples[i].1 };
    let pairs: Vec<PairDefect> = selected
        .par_iter()
        .map(|&(i, j, s)| {
            let composed = compose(channel(i), channel(j))?;
            Ok(PairDefect {
                t: times[i],
                t_prime: times[j],
                defect: linalg::frobenius(&(channel(s).as_matrix() - composed.as_matrix())),
            })
        })
        .collect::<Result<_>>()?;
    let max_defect = pairs.iter().map(|p| p.defect).fold(0.0, f64::max);
    Ok(DivisibilityReport { pairs, max_defect })
}
