// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

//! Benchmark report and CSV tables.

use serde::Serialize;

use qcbench_core::benchmarks::{
    ds_violation, max_pure_state_discrepancy, metric_report, rank_bound_curve, MetricReport,
    ObservableDeviation, PureStateDiscrepancy, RankOptions, SuiteReport,
};
use qcbench_core::channel::{Tolerances, ValidationMode};
use qcbench_core::{ChannelTrajectory, ChoiMatrix};

use crate::error::{CliError, CliResult};
use crate::files::{ChannelKind, FORMAT_VERSION};

pub const TOOL_NAME: &str = "qcbench";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

impl Default for ToolInfo {
    fn default() -> Self {
        ToolInfo {
            name: TOOL_NAME,
            version: TOOL_VERSION,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDescriptor {
    pub path: String,
    pub kind: ChannelKind,
    pub d: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_qubits: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TolerancesUsed {
    pub validation: Tolerances,
    pub validation_mode: ValidationMode,
    pub rank: RankOptions,
    pub ds_threshold: f64,
    pub divisibility_threshold: f64,
    pub symmetry_threshold: f64,
    pub restarts: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct MetricsSection {
    pub reference: String,
    #[serde(flatten)]
    pub metrics: MetricReport,
    /// Lower-bound estimate from multi-start ascent.
    pub pure_state_lower_bound: PureStateDiscrepancy,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub format_version: u32,
    pub tool: ToolInfo,
    pub input: InputDescriptor,
    pub tolerances: TolerancesUsed,
    #[serde(flatten)]
    pub suite: SuiteReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observable: Option<ObservableDeviation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metrics: Option<MetricsSection>,
}

impl BenchReport {
    pub fn new(input: InputDescriptor, tolerances: TolerancesUsed, suite: SuiteReport) -> Self {
        BenchReport {
            format_version: FORMAT_VERSION,
            tool: ToolInfo::default(),
            input,
            tolerances,
            suite,
            observable: None,
            metrics: None,
        }
    }
}

fn finish(w: csv::Writer<Vec<u8>>) -> CliResult<Vec<u8>> {
    w.into_inner()
        .map_err(|e| CliError::Resource(e.to_string()))
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Resource(format!("CSV encoding failed: {e}"))
}

/// Columns `k, d2_minus_k_plus_1, k2_minus_k_plus_1` for `k = 1..=d²`.
pub fn rank_bounds_csv(d: usize) -> CliResult<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["k", "d2_minus_k_plus_1", "k2_minus_k_plus_1"])
        .map_err(csv_err)?;
    for row in rank_bound_curve(d) {
        w.write_record([
            row.k.to_string(),
            row.bound_d.to_string(),
            row.bound_k.to_string(),
        ])
        .map_err(csv_err)?;
    }
    finish(w)
}

#[derive(Debug, Clone, Serialize)]
pub struct MetricRow {
    pub t: f64,
    pub sigma_max: f64,
    pub schatten2: f64,
    pub schatten2_over_d: f64,
    pub pure_state_lower_bound: f64,
    pub ds_violation: f64,
    pub epsilon_lower: f64,
    pub epsilon_upper: f64,
}

/// Distance of every trajectory sample from `reference`.
pub fn metric_rows(
    traj: &ChannelTrajectory,
    reference: &ChoiMatrix,
    restarts: usize,
    seed: u64,
) -> CliResult<Vec<MetricRow>> {
    traj.samples()
        .iter()
        .map(|(t, c)| {
            let m = metric_report(c, reference)?;
            let p = max_pure_state_discrepancy(c, reference, restarts, seed)?;
            let ds = ds_violation(c);
            Ok(MetricRow {
                t: *t,
                sigma_max: m.sigma_max,
                schatten2: m.schatten2,
                schatten2_over_d: m.schatten2 / m.d as f64,
                pure_state_lower_bound: p.value,
                ds_violation: ds.violation_identity,
                epsilon_lower: ds.epsilon_lower,
                epsilon_upper: ds.epsilon_upper,
            })
        })
        .collect()
}

pub fn metrics_csv(rows: &[MetricRow]) -> CliResult<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(csv_err)?;
    }
    if rows.is_empty() {
        w.write_record([
            "t",
            "sigma_max",
            "schatten2",
            "schatten2_over_d",
            "pure_state_lower_bound",
            "ds_violation",
            "epsilon_lower",
            "epsilon_upper",
        ])
        .map_err(csv_err)?;
    }
    finish(w)
}
