// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

/// Synthesize, reduce and benchmark quantum channels.
#[derive(Debug, Parser)]
#[command(name = "qcbench", version, about)]
pub struct Cli {
    #[command(flatten)]
    pub validation: ValidationArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct ValidationArgs {
    /// Fail (exit 2) instead of warning when a loaded channel is unphysical.
    #[arg(long, global = true)]
    pub strict: bool,

    /// Tolerance on entrywise deviation from Hermiticity.
    #[arg(long, global = true, default_value_t = 1e-9, value_name = "TOL")]
    pub hermitian_tol: f64,

    /// Most negative Choi eigenvalue accepted as positive semidefinite.
    #[arg(long, global = true, default_value_t = 1e-9, value_name = "TOL")]
    pub psd_tol: f64,

    /// Tolerance on the Frobenius distance of the output partial trace from the identity.
    #[arg(long, global = true, default_value_t = 1e-9, value_name = "TOL")]
    pub trace_tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a unitary file for a built-in gate or a (perturbed) Hamiltonian evolution.
    Synth(SynthArgs),
    /// Reduce a unitary onto a qubit subset (complement maximally mixed).
    Reduce(ReduceArgs),
    /// Simulate an error model at one time or on a time grid.
    #[command(subcommand)]
    Simulate(SimulateCommand),
    /// Run the benchmark suite on a channel, unitary or trajectory file.
    Bench(BenchArgs),
    /// Write the rank-property bound curves d²−k+1 and k²−k+1 as CSV.
    Bounds(BoundsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Gate {
    Identity,
    Swap,
    Cnot,
    Cz,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["gate", "hamiltonian"])))]
pub struct SynthArgs {
    #[arg(long, value_enum)]
    pub gate: Option<Gate>,

    /// Qubit count for `--gate identity`.
    #[arg(long, default_value_t = 1)]
    pub n_qubits: usize,

    /// Hamiltonian file (JSON) to evolve for `--time`.
    #[arg(long, value_name = "FILE", requires = "time")]
    pub hamiltonian: Option<PathBuf>,

    #[arg(long, value_name = "T")]
    pub time: Option<f64>,

    /// Hamiltonian file added to `--hamiltonian` as a systematic error.
    #[arg(long, value_name = "FILE", requires = "hamiltonian")]
    pub perturb: Option<PathBuf>,

    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long, value_name = "FILE")]
    pub unitary: PathBuf,

    /// Expected qubit count; checked against the file.
    #[arg(long)]
    pub n_qubits: Option<usize>,

    /// Comma-separated qubit indices to keep.
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    pub subset: Vec<usize>,

    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("when").required(true).args(["time", "times", "grid"])))]
pub struct TimeArgs {
    /// Single evaluation time; writes a Choi file.
    #[arg(long, value_name = "T")]
    pub time: Option<f64>,

    /// Comma-separated time grid starting at 0; writes a trajectory file.
    #[arg(long, value_delimiter = ',', num_args = 1.., value_name = "T,...")]
    pub times: Option<Vec<f64>>,

    /// Uniform grid `STEP:COUNT`, i.e. times i·STEP for i = 0..=COUNT.
    #[arg(long, value_name = "STEP:COUNT")]
    pub grid: Option<String>,
}

#[derive(Debug, Args)]
pub struct SimArgs {
    #[arg(long, value_name = "FILE")]
    pub spec: PathBuf,

    #[command(flatten)]
    pub times: TimeArgs,

    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum SimulateCommand {
    /// Lindblad master equation (input: LindbladSpec JSON).
    Lindblad(SimArgs),
    /// Average over Gaussian shot-to-shot Hamiltonian fluctuations (input: FluctuationSpec JSON).
    Fluctuate {
        #[command(flatten)]
        sim: SimArgs,
        /// Overrides the seed in the input file.
        #[arg(long)]
        seed: Option<u64>,
        /// Overrides the sample count in the input file.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Unitary evolution e^{-iHt} (input: HamiltonianSpec JSON).
    Unitary {
        #[command(flatten)]
        sim: SimArgs,
        /// Reduce onto these qubits.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        subset: Option<Vec<usize>>,
    },
    /// Any channel builder, including closed-form models (input: tagged builder JSON).
    Builder(SimArgs),
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_name = "FILE")]
    pub input: PathBuf,

    /// Observables file for the symmetry and observable benchmarks.
    #[arg(long, value_name = "FILE")]
    pub observables: Option<PathBuf>,

    /// Target channel or unitary for the distance metrics.
    #[arg(long, value_name = "FILE")]
    pub reference: Option<PathBuf>,

    /// Relative eigenvalue cutoff for the numerical Choi rank.
    #[arg(long, default_value_t = 1e-7)]
    pub rank_tol: f64,

    /// Relative singular-value cutoff for the span dimension.
    #[arg(long, default_value_t = 1e-7)]
    pub span_tol: f64,

    #[arg(long, default_value_t = 1e-8)]
    pub ds_threshold: f64,

    #[arg(long, default_value_t = 1e-7)]
    pub divisibility_threshold: f64,

    #[arg(long, default_value_t = 1e-8)]
    pub symmetry_threshold: f64,

    /// Restarts for the pure-state discrepancy search.
    #[arg(long, default_value_t = qcbench_core::benchmarks::DEFAULT_RESTARTS)]
    pub restarts: usize,

    /// Seed for the pure-state discrepancy search.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,

    /// Also write PREFIX_rank_bounds.csv and, for trajectories, PREFIX_metrics.csv.
    #[arg(long, value_name = "PREFIX")]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub d: usize,

    /// Output CSV; standard output if omitted.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}
