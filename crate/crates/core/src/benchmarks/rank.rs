// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

//! Rank property: a necessary condition for a doubly stochastic reduced
//! channel to have a unitary parent.
//!
//! With `ρ = Σ λᵢ |αᵢ⟩⟨αᵢ|` and `α̂ᵢ` the `d×d` reshaping of `αᵢ`
//! (`α̂[j][i] = α[i·d + j]`), the property reads
//!
//! ```text
//! dim span{α̂ᵢ α̂ⱼ†} ≤ min(d² − k + 1, k² − k + 1)
//! ```
//!
//! The report also carries the rank of `{α̂ᵢ† α̂ⱼ − δᵢⱼ 1/d}`, which is the
//! form manipulated when proving the bound. The two placements of the
//! adjoint are not equivalent in general, so both numbers are reported.

use log::warn;
use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::channel::{trace_in, trace_out, ChoiMatrix};
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix};

/// Thresholds used by [`rank_property`] and [`rank_residue`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RankOptions {
    /// Eigenvalues above `rank_tol · λ_max` count toward `k`.
    pub rank_tol: f64,
    /// Singular values above `span_tol · σ_max` count toward the span dimension.
    pub span_tol: f64,
    /// Most negative eigenvalue tolerated before the input is rejected.
    pub psd_tol: f64,
    /// Tolerance on `‖Φ(1) − 1‖₂` and `‖Tr_out ρ − 1‖₂` before warning.
    pub ds_tol: f64,
}

impl Default for RankOptions {
    fn default() -> Self {
        RankOptions {
            rank_tol: 1e-7,
            span_tol: 1e-7,
            psd_tol: 1e-9,
            ds_tol: 1e-9,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankReport {
    pub d: usize,
    /// Choi eigenvalues in descending order, clipped at zero.
    pub eigenvalues: Vec<f64>,
    pub k: usize,
    pub span_dim: usize,
    pub bound_d: usize,
    pub bound_k: usize,
    pub satisfied: bool,
    /// Rank of `{α̂ᵢ† α̂ⱼ − δᵢⱼ 1/d}`.
    pub variant_rank: usize,
    /// `variant_rank + 1 ≤ min(bound_d, bound_k)`.
    pub variant_satisfied: bool,
    /// Number of eigenvalues removed by [`rank_residue`].
    pub mu: usize,
    /// Sum of squares of the removed eigenvalues.
    pub residue: f64,
    /// Numerical rank after removal.
    pub residue_k: usize,
    /// Span dimension after removal.
    pub residue_span_dim: usize,
}

/// One row of the bound curves for a given `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankBound {
    pub k: usize,
    pub bound_d: usize,
    pub bound_k: usize,
}

fn bounds(d: usize, k: usize) -> (usize, usize) {
    (d * d + 1 - k, k * k - k + 1)
}

/// `d² − k + 1` and `k² − k + 1` for `k = 1..=d²`.
pub fn rank_bound_curve(d: usize) -> Vec<RankBound> {
    (1..=d * d)
        .map(|k| {
            let (bound_d, bound_k) = bounds(d, k);
            RankBound {
                k,
                bound_d,
                bound_k,
            }
        })
        .collect()
}

struct Spectrum {
    d: usize,
    /// Descending, clipped at zero.
    values: Vec<f64>,
    /// Reshaped eigenvectors in the same order.
    hats: Vec<CMatrix>,
}

fn reshape(v: &DVector<Complex64>, d: usize) -> CMatrix {
    CMatrix::from_fn(d, d, |j, i| v[i * d + j])
}

fn spectrum(c: &ChoiMatrix, opts: &RankOptions) -> Result<Spectrum> {
    let d = c.d();
    let m = c.as_matrix();
    let herm = linalg::hermitian_deviation(m);
    if herm > opts.psd_tol {
        return Err(Error::Validation(format!(
            "Choi matrix is not Hermitian (deviation {herm:.3e})"
        )));
    }
    let eig = linalg::eigh(m);
    let min = eig.values[0];
    if min < -opts.psd_tol {
        return Err(Error::Validation(format!(
            "Choi matrix is not positive semidefinite (min eigenvalue {min:.3e})"
        )));
    }
    let one = linalg::identity(d);
    let ds =
        linalg::frobenius(&(trace_in(c) - &one)).max(linalg::frobenius(&(trace_out(c) - &one)));
    if ds > opts.ds_tol {
        warn!("rank property presumes a doubly stochastic channel; violation is {ds:.3e}");
    }
    let n = eig.values.len();
    let values = (0..n).rev().map(|i| eig.values[i].max(0.0)).collect();
    let hats = (0..n)
        .rev()
        .map(|i| reshape(&eig.vectors.column(i).into_owned(), d))
        .collect();
    Ok(Spectrum { d, values, hats })
}

fn numerical_k(values: &[f64], rank_tol: f64) -> usize {
    let top = values.first().copied().unwrap_or(0.0);
    if top <= 0.0 {
        return 0;
    }
    values.iter().filter(|&&l| l > rank_tol * top).count()
}

/// Below this absolute size a stacked matrix is treated as zero, since a
/// relative cutoff would otherwise count rounding noise.
const ZERO_FLOOR: f64 = 1e-12;

/// Rank of the `k² × d²` matrix whose rows are the flattened `f(i, j)`.
fn stacked_rank(k: usize, d: usize, span_tol: f64, f: impl Fn(usize, usize) -> CMatrix) -> usize {
    let mut rows = CMatrix::zeros(k * k, d * d);
    for i in 0..k {
        for j in 0..k {
            for (col, z) in f(i, j).iter().enumerate() {
                rows[(i * k + j, col)] = *z;
            }
        }
    }
    if linalg::max_abs(&rows) < ZERO_FLOOR {
        return 0;
    }
    linalg::numerical_rank(&rows, span_tol)
}

impl Spectrum {
    fn span_dim(&self, k: usize, span_tol: f64) -> usize {
        stacked_rank(k, self.d, span_tol, |i, j| {
            &self.hats[i] * self.hats[j].adjoint()
        })
    }

    fn variant_rank(&self, k: usize, span_tol: f64) -> usize {
        let shift = linalg::identity(self.d) * linalg::real(1.0 / self.d as f64);
        stacked_rank(k, self.d, span_tol, |i, j| {
            let p = self.hats[i].adjoint() * &self.hats[j];
            if i == j {
                p - &shift
            } else {
                p
            }
        })
    }

    fn report(&self, opts: &RankOptions) -> RankReport {
        let k = numerical_k(&self.values, opts.rank_tol);
        let span_dim = self.span_dim(k, opts.span_tol);
        let (bound_d, bound_k) = bounds(self.d, k);
        let limit = bound_d.min(bound_k);
        let variant_rank = self.variant_rank(k, opts.span_tol);
        RankReport {
            d: self.d,
            eigenvalues: self.values.clone(),
            k,
            span_dim,
            bound_d,
            bound_k,
            satisfied: span_dim <= limit,
            variant_rank,
            variant_satisfied: variant_rank < limit,
            mu: 0,
            residue: 0.0,
            residue_k: k,
            residue_span_dim: span_dim,
        }
    }
}

/// Tests the rank property on a (reduced) Choi matrix.
///
/// Fails with [`Error::Validation`] if the input is not Hermitian positive
/// semidefinite within `opts.psd_tol`, and logs a warning if it is not doubly
/// stochastic.
pub fn rank_property(c: &ChoiMatrix, opts: &RankOptions) -> Result<RankReport> {
    Ok(spectrum(c, opts)?.report(opts))
}

/// Removes the smallest retained eigenvalues one at a time until the rank
/// property holds for the remaining eigenvectors, and reports the sum of
/// squares of what was removed.
pub fn rank_residue(c: &ChoiMatrix, opts: &RankOptions) -> Result<RankReport> {
    let spec = spectrum(c, opts)?;
    let mut report = spec.report(opts);
    let mut k = report.k;
    let mut span = report.span_dim;
    while k > 1 {
        let (bd, bk) = bounds(spec.d, k);
        if span <= bd.min(bk) {
            break;
        }
        let removed = spec.values[k - 1];
        report.residue += removed * removed;
        report.mu += 1;
        k -= 1;
        span = spec.span_dim(k, opts.span_tol);
    }
    report.residue_k = k;
    report.residue_span_dim = span;
    Ok(report)
}
