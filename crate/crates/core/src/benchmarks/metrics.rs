// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

//! Map-level and Choi-level distances between two channels.
//!
//! `σ_max` is the largest singular value of the superoperator difference and
//! is not the largest singular value of the Choi difference. The two are
//! related by `σ_max ≤ ‖Δρ‖₂ ≤ d·σ_max`.

use nalgebra::DVector;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::channel::{choi_to_superop, ChoiMatrix};
use crate::error::{Error, Result};
use crate::linalg::{self, c, CMatrix};

/// Slack allowed in the sandwich flags of [`MetricReport`].
pub const SANDWICH_SLACK: f64 = 1e-9;

/// Default restart count for [`max_pure_state_discrepancy`].
pub const DEFAULT_RESTARTS: usize = 32;

const MAX_ASCENT_STEPS: usize = 5000;
const MIN_STEP: f64 = 1e-10;

fn same_dims(a: &ChoiMatrix, b: &ChoiMatrix) -> Result<usize> {
    if a.d() != b.d() {
        return Err(Error::Shape(format!(
            "channels act on dimensions {} and {}",
            a.d(),
            b.d()
        )));
    }
    Ok(a.d())
}

fn superop_difference(a: &ChoiMatrix, b: &ChoiMatrix) -> CMatrix {
    choi_to_superop(a).into_matrix() - choi_to_superop(b).into_matrix()
}

pub fn sigma_max_diff(a: &ChoiMatrix, b: &ChoiMatrix) -> Result<f64> {
    same_dims(a, b)?;
    Ok(linalg::singular_values(&superop_difference(a, b))[0])
}

pub fn schatten2_diff(a: &ChoiMatrix, b: &ChoiMatrix) -> Result<f64> {
    same_dims(a, b)?;
    Ok(linalg::frobenius(&(a.as_matrix() - b.as_matrix())))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetricReport {
    pub d: usize,
    pub sigma_max: f64,
    pub schatten2: f64,
    /// `σ_max ≤ ‖Δρ‖₂` within [`SANDWICH_SLACK`].
    pub upper_ok: bool,
    /// `‖Δρ‖₂ ≤ d·σ_max` within [`SANDWICH_SLACK`].
    pub lower_ok: bool,
}

pub fn metric_report(a: &ChoiMatrix, b: &ChoiMatrix) -> Result<MetricReport> {
    let d = same_dims(a, b)?;
    let sigma_max = sigma_max_diff(a, b)?;
    let schatten2 = schatten2_diff(a, b)?;
    Ok(MetricReport {
        d,
        sigma_max,
        schatten2,
        upper_ok: sigma_max <= schatten2 + SANDWICH_SLACK,
        lower_ok: schatten2 <= d as f64 * sigma_max + SANDWICH_SLACK,
    })
}

/// Lower-bound estimate of `max_ψ ‖Φ_a(ψ) − Φ_b(ψ)‖₂` over pure states.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PureStateDiscrepancy {
    pub value: f64,
    /// Normalized maximizing state vector.
    pub state: Vec<Complex64>,
    pub restarts: usize,
}

struct Ascent<'a> {
    delta: &'a CMatrix,
    d: usize,
}

impl Ascent<'_> {
    /// Squared objective and its Wirtinger gradient direction.
    fn eval(&self, psi: &DVector<Complex64>) -> (f64, DVector<Complex64>) {
        let p = psi * psi.adjoint();
        let m = self.delta * linalg::vectorize(&p);
        let a = linalg::unvectorize(&(self.delta.adjoint() * &m), self.d);
        let grad = (&a + a.adjoint()) * psi * linalg::real(2.0);
        (m.norm_squared(), grad)
    }

    fn climb(&self, mut psi: DVector<Complex64>) -> (f64, DVector<Complex64>) {
        psi.normalize_mut();
        let (mut f, mut g) = self.eval(&psi);
        let mut step = 0.5;
        for _ in 0..MAX_ASCENT_STEPS {
            let radial = psi.dotc(&g).re;
            let tangent = &g - &psi * linalg::real(radial);
            let norm = tangent.norm();
            if norm < 1e-14 || step < MIN_STEP {
                break;
            }
            let candidate = (&psi + tangent * linalg::real(step / norm)).normalize();
            let (f_new, g_new) = self.eval(&candidate);
            if f_new > f {
                psi = candidate;
                f = f_new;
                g = g_new;
                step = (step * 1.5).min(1.0);
            } else {
                step *= 0.5;
            }
        }
        (f, psi)
    }
}

fn random_state(d: usize, seed: u64, stream: u64) -> DVector<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    DVector::from_fn(d, |_, _| {
        c(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}

/// Multi-start projected gradient ascent on the unit sphere.
///
/// Restart `r` starts from a Gaussian state drawn from stream `r` of
/// `seed`, so the result is non-decreasing in `restarts` and independent of
/// the thread count.
pub fn max_pure_state_discrepancy(
    a: &ChoiMatrix,
    b: &ChoiMatrix,
    restarts: usize,
    seed: u64,
) -> Result<PureStateDiscrepancy> {
    let d = same_dims(a, b)?;
    let restarts = restarts.max(1);
    let delta = superop_difference(a, b);
    let ascent = Ascent { delta: &delta, d };
    let runs: Vec<(f64, DVector<Complex64>)> = (0..restarts)
        .into_par_iter()
        .map(|r| ascent.climb(random_state(d, seed, r as u64)))
        .collect();
    let mut best = 0;
    for (i, run) in runs.iter().enumerate() {
        if run.0 > runs[best].0 {
            best = i;
        }
    }
    let (f, psi) = &runs[best];
    Ok(PureStateDiscrepancy {
        value: f.max(0.0).sqrt(),
        state: psi.iter().copied().collect(),
        restarts,
    })
}
