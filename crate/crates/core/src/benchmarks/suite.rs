// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

//! Runs every applicable benchmark and attributes the detected error classes.
//!
//! Attribution truth table (`ds`, `div`, `rank`, `sym` are the violation flags):
//!
//! | ds | div | rank | sym | classes                               |
//! |----|-----|------|-----|---------------------------------------|
//! | 1  | 0   | any  | any | CP-divisible non-unitary              |
//! | 1  | 1   | any  | any | CP-divisible + CP-indivisible         |
//! | 0  | 1   | any  | any | CP-indivisible non-unitary            |
//! | 0  | 0   | 1    | any | CP-indivisible non-unitary            |
//! | 0  | 0   | 0    | 1   | unitary error                         |
//! | 0  | 0   | 0    | 0   | no error detected                     |
//!
//! The rank test presumes double stochasticity, so a rank violation only
//! counts when the DS check passes. A divisibility defect is direct evidence
//! and always counts.

use serde::{Deserialize, Serialize};

use super::divisibility::{divisibility_defect, DivisibilityReport};
use super::ds::{ds_violation, DsReport};
use super::rank::{rank_residue, RankOptions, RankReport};
use super::symmetry::{symmetry_deviation, SymmetryReport};
use crate::channel::{ChannelTrajectory, ChoiMatrix};
use crate::error::Result;
use crate::linalg::CMatrix;

#[derive(Debug, Clone, Copy)]
pub enum SuiteInput<'a> {
    Channel(&'a ChoiMatrix),
    /// The final sample is used for the single-channel benchmarks.
    Trajectory(&'a ChannelTrajectory),
}

/// Per-site channels and observables for the symmetry benchmark.
#[derive(Debug, Clone, Copy)]
pub struct SymmetryInput<'a> {
    pub site_channels: &'a [ChoiMatrix],
    pub observables: &'a [CMatrix],
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuiteOptions {
    pub rank: RankOptions,
    pub ds_threshold: f64,
    pub divisibility_threshold: f64,
    pub symmetry_threshold: f64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            rank: RankOptions::default(),
            ds_threshold: 1e-8,
            divisibility_threshold: 1e-7,
            symmetry_threshold: 1e-8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ErrorFlags {
    pub ds_violated: bool,
    pub rank_violated: bool,
    pub divisibility_violated: bool,
    pub symmetry_violated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorClass {
    CpDivisibleNonUnitary,
    CpIndivisibleNonUnitary,
    Unitary,
    NoErrorDetected,
}

impl ErrorClass {
    pub fn label(self) -> &'static str {
        match self {
            ErrorClass::CpDivisibleNonUnitary => "CP-divisible non-unitary",
            ErrorClass::CpIndivisibleNonUnitary => "CP-indivisible non-unitary",
            ErrorClass::Unitary => "unitary error",
            ErrorClass::NoErrorDetected => "no error detected",
        }
    }
}

/// Applies the truth table in the module docs.
pub fn attribute(flags: ErrorFlags) -> Vec<ErrorClass> {
    let mut classes = Vec::new();
    if flags.ds_violated {
        classes.push(ErrorClass::CpDivisibleNonUnitary);
    }
    if flags.divisibility_violated || (flags.rank_violated && !flags.ds_violated) {
        classes.push(ErrorClass::CpIndivisibleNonUnitary);
    }
    if classes.is_empty() && flags.symmetry_violated {
        classes.push(ErrorClass::Unitary);
    }
    if classes.is_empty() {
        classes.push(ErrorClass::NoErrorDetected);
    }
    classes
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub ds: DsReport,
    pub rank: RankReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisibility: Option<DivisibilityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetry: Option<SymmetryReport>,
    pub flags: ErrorFlags,
    pub classes: Vec<ErrorClass>,
    pub attribution: String,
}

pub fn full_suite(
    input: SuiteInput<'_>,
    symmetry: Option<SymmetryInput<'_>>,
    opts: &SuiteOptions,
) -> Result<SuiteReport> {
    let (channel, traj) = match input {
        SuiteInput::Channel(c) => (c, None),
        SuiteInput::Trajectory(t) => (t.last(), Some(t)),
    };
    let ds = ds_violation(channel);
    let rank = rank_residue(channel, &opts.rank)?;
    let divisibility = traj.map(|t| divisibility_defect(t, None)).transpose()?;
    let symmetry = symmetry
        .map(|s| symmetry_deviation(s.site_channels, s.observables))
        .transpose()?;
    let flags = ErrorFlags {
        ds_violated: ds.violation_identity.max(ds.violation_trace) > opts.ds_threshold,
        rank_violated: !rank.satisfied,
        divisibility_violated: divisibility
            .as_ref()
            .is_some_and(|d| d.max_defect > opts.divisibility_threshold),
        symmetry_violated: symmetry
            .as_ref()
            .is_some_and(|s| s.deviation > opts.symmetry_threshold),
    };
    let classes = attribute(flags);
    let attribution = classes
        .iter()
        .map(|c| c.label())
        .collect::<Vec<_>>()
        .join(" + ");
    Ok(SuiteReport {
        ds,
        rank,
        divisibility,
        symmetry,
        flags,
        classes,
        attribution,
    })
}
