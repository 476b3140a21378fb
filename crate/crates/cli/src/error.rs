// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::Path;

use thiserror::Error;

/// Exit status for invalid inputs, failed validation and bad requests.
pub const EXIT_VALIDATION: i32 = 2;
/// Exit status for size limits and output failures.
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: parse error at {json_path}: {message}")]
    Parse {
        path: String,
        json_path: String,
        message: String,
    },

    #[error("{0}")]
    Invalid(String),

    #[error("{0}")]
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Invalid(_) => EXIT_VALIDATION,
            CliError::Resource(_) => EXIT_RESOURCE,
        }
    }

    pub fn read(path: &Path, err: std::io::Error) -> Self {
        CliError::Invalid(format!("cannot read {}: {err}", path.display()))
    }

    pub fn write(path: &Path, err: std::io::Error) -> Self {
        CliError::Resource(format!("cannot write {}: {err}", path.display()))
    }
}

impl From<qcbench_core::Error> for CliError {
    fn from(err: qcbench_core::Error) -> Self {
        match err {
            qcbench_core::Error::Size { .. } => CliError::Resource(err.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
