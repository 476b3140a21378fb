// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by channel construction, error-model synthesis and the benchmarks.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Operand shapes do not agree.
    #[error("shape error: {0}")]
    Shape(String),

    /// A requested dimension exceeds the configured maximum.
    #[error("size error: dimension {dim} exceeds maximum {max}")]
    Size { dim: usize, max: usize },

    /// An input failed a physical or structural validity check.
    #[error("validation error: {0}")]
    Validation(String),

    /// A numerical routine produced non-finite output.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// A benchmark request cannot be served by the supplied data.
    #[error("request error: {0}")]
    Request(String),
}

pub type Result<T> = std::result::Result<T, Error>;
