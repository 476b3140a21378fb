// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

//! Deviation of a conserved observable under the implemented process.
//!
//! For `X = Σᵢ Xᵢ` with `Xᵢ` supported on disjoint qubit sets, the largest
//! change `|Σᵢ Tr[ρᵢ Xᵢ] − Tr[Φᵢ(ρᵢ) Xᵢ]|` over product states separates into
//! per-site eigenproblems of `Gᵢ = Xᵢ − Φᵢ†(Xᵢ)`, so it is computed exactly.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::channel::{adjoint_superop, choi_to_superop, ChoiMatrix};
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};

const OBSERVABLE_HERMITIAN_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SiteInterval {
    pub lambda_min: f64,
    pub lambda_max: f64,
}

/// Which extreme of the summed spectrum attains the deviation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Max,
    Min,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetryReport {
    pub sites: Vec<SiteInterval>,
    pub deviation: f64,
    pub branch: Branch,
    /// Per-site pure states of the maximizing product state.
    pub maximizing_states: Vec<Vec<Complex64>>,
}

/// `X − Φ†(X)` for one site.
fn heisenberg_change(c: &ChoiMatrix, x: &CMatrix, label: &str) -> Result<CMatrix> {
    let d = c.d();
    if x.nrows() != d || x.ncols() != d {
        return Err(Error::Shape(format!(
            "observable {label} is {}x{} but its channel acts on dimension {d}",
            x.nrows(),
            x.ncols()
        )));
    }
    let dev = linalg::hermitian_deviation(x);
    if dev > OBSERVABLE_HERMITIAN_TOL {
        return Err(Error::Validation(format!(
            "observable {label} is not Hermitian (deviation {dev:.3e})"
        )));
    }
    let dual = adjoint_superop(&choi_to_superop(c));
    Ok(x - dual.apply(x)?)
}

struct Combined {
    sites: Vec<SiteInterval>,
    deviation: f64,
    branch: Branch,
    states: Vec<Vec<Complex64>>,
}

fn combine(gs: &[CMatrix]) -> Combined {
    let eigs: Vec<linalg::Eigh> = gs.iter().map(linalg::eigh).collect();
    let sites: Vec<SiteInterval> = eigs
        .iter()
        .map(|e| SiteInterval {
            lambda_min: e.values[0],
            lambda_max: e.values[e.values.len() - 1],
        })
        .collect();
    let upper: f64 = sites.iter().map(|s| s.lambda_max).sum();
    let lower: f64 = sites.iter().map(|s| s.lambda_min).sum();
    let branch = if upper >= -lower {
        Branch::Max
    } else {
        Branch::Min
    };
    let states = eigs
        .iter()
        .map(|e| {
            let col = match branch {
                Branch::Max => e.values.len() - 1,
                Branch::Min => 0,
            };
            e.vectors.column(col).iter().copied().collect()
        })
        .collect();
    Combined {
        sites,
        deviation: upper.max(-lower).max(0.0),
        branch,
        states,
    }
}

/// Exact product-state maximization for single-site channels and observables.
pub fn symmetry_deviation(
    site_channels: &[ChoiMatrix],
    observables: &[CMatrix],
) -> Result<SymmetryReport> {
    if site_channels.len() != observables.len() {
        return Err(Error::Shape(format!(
            "{} site channels but {} observables",
            site_channels.len(),
            observables.len()
        )));
    }
    let gs = site_channels
        .iter()
        .zip(observables)
        .enumerate()
        .map(|(i, (c, x))| heisenberg_change(c, x, &format!("at site {i}")))
        .collect::<Result<Vec<_>>>()?;
    let out = combine(&gs);
    Ok(SymmetryReport {
        sites: out.sites,
        deviation: out.deviation,
        branch: out.branch,
        maximizing_states: out.states,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObservableDeviation {
    pub deviation: f64,
    /// True when term supports overlap, making `deviation` an upper bound
    /// on the product-state maximum rather than its exact value.
    pub upper_bound: bool,
    pub branch: Branch,
    /// Merged term supports in ascending order, with their intervals.
    pub terms: Vec<(Vec<usize>, SiteInterval)>,
}

/// Multi-qubit generalization of [`symmetry_deviation`].
///
/// Each term's matrix is written in the qubit order of its sorted subset
/// (lowest index most significant), matching [`crate::channel::reduced_choi`].
/// Terms on the same subset are summed first.
pub fn observable_deviation(
    reduced_channels: &BTreeMap<Vec<usize>, ChoiMatrix>,
    terms: &[(Vec<usize>, CMatrix)],
) -> Result<ObservableDeviation> {
    let mut merged: BTreeMap<Vec<usize>, CMatrix> = BTreeMap::new();
    for (subset, x) in terms {
        let mut key = subset.clone();
        key.sort_unstable();
        match merged.get_mut(&key) {
            Some(acc) if acc.shape() == x.shape() => *acc += x,
            Some(_) => {
                return Err(Error::Shape(format!(
                    "terms on subset {key:?} have different sizes"
                )))
            }
            None => {
                merged.insert(key, x.clone());
            }
        }
    }
    let mut gs = Vec::with_capacity(merged.len());
    for (subset, x) in &merged {
        let c = reduced_channels
            .iter()
            .find(|(k, _)| {
                let mut k = (*k).clone();
                k.sort_unstable();
                &k == subset
            })
            .map(|(_, c)| c)
            .ok_or_else(|| Error::Request(format!("no reduced channel for subset {subset:?}")))?;
        gs.push(heisenberg_change(c, x, &format!("on subset {subset:?}"))?);
    }
    let keys: Vec<&Vec<usize>> = merged.keys().collect();
    let upper_bound = keys.iter().enumerate().any(|(i, a)| {
        keys[i + 1..]
            .iter()
            .any(|b| a.iter().any(|q| b.contains(q)))
    });
    let out = combine(&gs);
    Ok(ObservableDeviation {
        deviation: out.deviation,
        upper_bound,
        branch: out.branch,
        terms: merged.keys().cloned().zip(out.sites).collect(),
    })
}
