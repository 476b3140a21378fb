// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

//! Double-stochasticity violation and the interval it certifies for the
//! distance to the nearest doubly stochastic explanation of the channel.

use serde::Serialize;

use crate::channel::{trace_in, trace_out, ChoiMatrix, SuperOperator};
use crate::error::{Error, Result};
use crate::linalg;

/// Double-stochasticity violation of one channel.
///
/// `epsilon_lower ≤ ε ≤ epsilon_upper` brackets the smallest `σ_max`
/// distance to a CP, doubly stochastic map `Φ` with `Φ^S = χ∘Φ` for a CPTP `χ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DsReport {
    pub d: usize,
    /// `‖1 − Φ(1)‖₂`
    pub violation_identity: f64,
    /// `‖1 − Tr_out ρ^Φ‖₂`
    pub violation_trace: f64,
    pub epsilon_lower: f64,
    pub epsilon_upper: f64,
}

pub fn ds_violation(c: &ChoiMatrix) -> DsReport {
    let d = c.d();
    let one = linalg::identity(d);
    let violation_identity = linalg::frobenius(&(&one - trace_in(c)));
    let violation_trace = linalg::frobenius(&(&one - trace_out(c)));
    DsReport {
        d,
        violation_identity,
        violation_trace,
        epsilon_lower: violation_identity / (d as f64).sqrt(),
        epsilon_upper: violation_identity,
    }
}

/// Long-time image of the maximally mixed state under a Lindblad generator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FixedPointCheck {
    /// `‖Φ_t(1/d) − 1/d‖₂` at the requested time.
    pub violation: f64,
    /// Whether `violation` exceeds the tolerance.
    pub violated: bool,
}

/// Evolves `1/d` to `t_large`. A bath at finite temperature drives it to a
/// thermal state different from `1/d`, so the violation is positive; pure
/// dephasing (infinite temperature) leaves it fixed.
pub fn thermal_fixed_point_check(
    gen: &SuperOperator,
    t_large: f64,
    tol: f64,
) -> Result<FixedPointCheck> {
    if !(t_large >= 0.0 && t_large.is_finite()) {
        return Err(Error::Validation(format!(
            "time must be non-negative, got {t_large}"
        )));
    }
    let d = gen.d();
    let mixed = linalg::identity(d) * linalg::real(1.0 / d as f64);
    let prop = SuperOperator::new(linalg::expm(&(gen.as_matrix() * linalg::real(t_large)))?)?;
    let out = prop.apply(&mixed)?;
    let violation = linalg::frobenius(&(out - mixed));
    Ok(FixedPointCheck {
        violation,
        violated: violation > tol,
    })
}
