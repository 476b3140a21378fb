// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

//! Reduced quantum channels of multi-qubit gates and classically efficient
//! benchmarks on their Choi matrices.
//!
//! * [`channel`]: Choi/superoperator algebra and subset reduction of unitaries.
//! * [`gatelab`]: Hamiltonians, Lindblad channels, shot-to-shot averaged
//!   channels and systematic perturbations.
//! * [`benchmarks`]: double-stochasticity violation, the rank property,
//!   symmetry deviation, divisibility defect and channel distance metrics.

pub mod benchmarks;
pub mod channel;
pub mod error;
pub mod gatelab;
pub mod linalg;
pub mod sampling;
pub mod serde_matrix;

pub use channel::{ChannelTrajectory, ChoiMatrix, DensityMatrix, SubsetSelector, SuperOperator};
pub use error::{Error, Result};
