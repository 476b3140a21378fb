// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

//! Classically efficient benchmarks on (reduced) Choi matrices.
//!
//! | benchmark                         | detects                         |
//! |-----------------------------------|---------------------------------|
//! | [`ds_violation`]                  | non-unitary, CP-divisible error |
//! | [`rank_property`] / [`rank_residue`] | non-unitary, CP-indivisible error |
//! | [`divisibility_defect`]           | CP-indivisible trajectories     |
//! | [`symmetry_deviation`], [`observable_deviation`] | unitary error via conserved observables |
//!
//! [`full_suite`] runs all of them and attributes the detected error classes.

mod divisibility;
mod ds;
mod metrics;
mod rank;
mod suite;
mod symmetry;

pub use divisibility::{divisibility_defect, DivisibilityReport, PairDefect};
pub use ds::{ds_violation, thermal_fixed_point_check, DsReport, FixedPointCheck};
pub use metrics::{
    max_pure_state_discrepancy, metric_report, schatten2_diff, sigma_max_diff, MetricReport,
    PureStateDiscrepancy, DEFAULT_RESTARTS,
};
pub use rank::{rank_bound_curve, rank_property, rank_residue, RankBound, RankOptions, RankReport};
pub use suite::{
    attribute, full_suite, ErrorClass, ErrorFlags, SuiteInput, SuiteOptions, SuiteReport,
    SymmetryInput,
};
pub use symmetry::{
    observable_deviation, symmetry_deviation, Branch, ObservableDeviation, SiteInterval,
    SymmetryReport,
};
