// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::json;

use qcbench_core::benchmarks::{
    full_suite, max_pure_state_discrepancy, metric_report, observable_deviation, RankOptions,
    SuiteInput, SuiteOptions, SymmetryInput,
};
use qcbench_core::channel::{reduced_choi, restrict_choi, Tolerances, ValidationMode};
use qcbench_core::gatelab::{
    build_hamiltonian, evolve_unitary, systematic_perturbation, trajectory, ChannelBuilder,
    FluctuationSpec, HamiltonianSpec, LindbladSpec,
};
use qcbench_core::linalg::{self, CMatrix, ONE};
use qcbench_core::{ChoiMatrix, SubsetSelector};

use crate::args::{
    BenchArgs, BoundsArgs, Gate, ReduceArgs, SimArgs, SimulateCommand, SynthArgs, TimeArgs,
    ValidationArgs,
};
use crate::error::{CliError, CliResult};
use crate::files::{
    load_channel, read_json, write_atomic, write_json, Channel, ChannelFile, LoadOptions,
    ObservablesFile,
};
use crate::report::{
    metric_rows, metrics_csv, rank_bounds_csv, BenchReport, InputDescriptor, MetricsSection,
    TolerancesUsed,
};

impl ValidationArgs {
    pub fn load_options(&self) -> LoadOptions {
        LoadOptions {
            tolerances: Tolerances {
                hermitian: self.hermitian_tol,
                psd: self.psd_tol,
                trace: self.trace_tol,
            },
            mode: if self.strict {
                ValidationMode::Strict
            } else {
                ValidationMode::Warn
            },
        }
    }
}

fn permutation(n_qubits: usize, map: impl Fn(usize) -> usize) -> CMatrix {
    let dim = 1 << n_qubits;
    let mut m = CMatrix::zeros(dim, dim);
    for col in 0..dim {
        m[(map(col), col)] = ONE;
    }
    m
}

/// Built-in gates; qubit 0 is the most significant bit and the CNOT control.
pub fn gate_matrix(gate: Gate, n_qubits: usize) -> (CMatrix, usize) {
    match gate {
        Gate::Identity => (linalg::identity(1 << n_qubits), n_qubits),
        Gate::Swap => (permutation(2, |b| (b & 1) << 1 | b >> 1), 2),
        Gate::Cnot => (permutation(2, |b| if b & 2 != 0 { b ^ 1 } else { b }), 2),
        Gate::Cz => {
            let mut m = linalg::identity(4);
            m[(3, 3)] = -ONE;
            (m, 2)
        }
    }
}

pub fn synth(args: &SynthArgs) -> CliResult<()> {
    let (u, n, meta) = match (args.gate, &args.hamiltonian) {
        (Some(gate), _) => {
            if gate == Gate::Identity && args.n_qubits > qcbench_core::channel::MAX_UNITARY_QUBITS {
                return Err(qcbench_core::Error::Size {
                    dim: 1usize << args.n_qubits.min(40),
                    max: 1 << qcbench_core::channel::MAX_UNITARY_QUBITS,
                }
                .into());
            }
            let (u, n) = gate_matrix(gate, args.n_qubits);
            let name = format!("{gate:?}").to_lowercase();
            (u, n, json!({ "gate": name }))
        }
        (None, Some(path)) => {
            let h: HamiltonianSpec = read_json(path)?;
            let t = args
                .time
                .ok_or_else(|| CliError::Invalid("--hamiltonian needs --time".into()))?;
            let (u, meta) = match &args.perturb {
                Some(p) => {
                    let delta: HamiltonianSpec = read_json(p)?;
                    let u = systematic_perturbation(&h, &delta, t)?;
                    (
                        u,
                        json!({ "hamiltonian": h, "perturbation": delta, "time": t }),
                    )
                }
                None => (
                    evolve_unitary(&build_hamiltonian(&h)?, t)?,
                    json!({ "hamiltonian": h, "time": t }),
                ),
            };
            (u, h.n_qubits, meta)
        }
        (None, None) => {
            return Err(CliError::Invalid(
                "synth needs --gate or --hamiltonian".into(),
            ))
        }
    };
    write_json(&args.out, &ChannelFile::unitary(&u, n, Some(meta)))
}

pub fn reduce(args: &ReduceArgs, opts: &LoadOptions) -> CliResult<()> {
    let (u, n) = match load_channel(&args.unitary, opts)? {
        Channel::Unitary { matrix, n_qubits } => (matrix, n_qubits),
        other => {
            return Err(CliError::Invalid(format!(
                "{}: expected a unitary file, found kind {:?}",
                args.unitary.display(),
                other.kind()
            )))
        }
    };
    if let Some(expected) = args.n_qubits {
        if expected != n {
            return Err(CliError::Invalid(format!(
                "--n-qubits {expected} but the unitary acts on {n} qubits"
            )));
        }
    }
    let subset = SubsetSelector::new(n, &args.subset)?;
    let c = reduced_choi(&u, n, &subset)?;
    let meta = json!({ "reduced_from_qubits": n, "subset": subset.indices() });
    write_json(&args.out, &ChannelFile::choi(&c, Some(meta)))
}

fn parse_grid(text: &str) -> CliResult<Vec<f64>> {
    let bad = || CliError::Invalid(format!("--grid expects STEP:COUNT, got \"{text}\""));
    let (step, count) = text.split_once(':').ok_or_else(bad)?;
    let step: f64 = step.trim().parse().map_err(|_| bad())?;
    let count: usize = count.trim().parse().map_err(|_| bad())?;
    Ok((0..=count).map(|i| i as f64 * step).collect())
}

fn evaluate(builder: &ChannelBuilder, when: &TimeArgs, out: &Path) -> CliResult<()> {
    let spec = serde_json::to_value(builder).map_err(|e| CliError::Invalid(e.to_string()))?;
    let times = match (&when.time, &when.times, &when.grid) {
        (Some(t), _, _) => {
            let c = builder.channel_at(*t)?;
            return write_json(
                out,
                &ChannelFile::choi(&c, Some(json!({ "builder": spec, "time": t }))),
            );
        }
        (None, Some(times), _) => times.clone(),
        (None, None, Some(grid)) => parse_grid(grid)?,
        (None, None, None) => {
            return Err(CliError::Invalid("give --time, --times or --grid".into()))
        }
    };
    let traj = trajectory(builder, &times)?;
    write_json(
        out,
        &ChannelFile::trajectory(&traj, Some(json!({ "builder": spec }))),
    )
}

pub fn simulate(cmd: &SimulateCommand) -> CliResult<()> {
    let (builder, sim): (ChannelBuilder, &SimArgs) = match cmd {
        SimulateCommand::Lindblad(sim) => (
            ChannelBuilder::Lindblad(read_json::<LindbladSpec>(&sim.spec)?),
            sim,
        ),
        SimulateCommand::Fluctuate { sim, seed, samples } => {
            let mut spec: FluctuationSpec = read_json(&sim.spec)?;
            if let Some(seed) = seed {
                spec.seed = *seed;
            }
            if let Some(samples) = samples {
                spec.samples = *samples;
            }
            (ChannelBuilder::Fluctuation(spec), sim)
        }
        SimulateCommand::Unitary { sim, subset } => {
            let hamiltonian: HamiltonianSpec = read_json(&sim.spec)?;
            (
                ChannelBuilder::Unitary {
                    hamiltonian,
                    subset: subset.clone(),
                },
                sim,
            )
        }
        SimulateCommand::Builder(sim) => (read_json::<ChannelBuilder>(&sim.spec)?, sim),
    };
    evaluate(&builder, &sim.times, &sim.out)
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix
        .file_name()
        .map(|n| n.to_os_string())
        .unwrap_or_default();
    name.push(suffix);
    prefix.with_file_name(name)
}

fn reduced_for(input: &Channel, full: &ChoiMatrix, qubits: &[usize]) -> CliResult<ChoiMatrix> {
    match input {
        Channel::Unitary { matrix, n_qubits } => Ok(reduced_choi(
            matrix,
            *n_qubits,
            &SubsetSelector::new(*n_qubits, qubits)?,
        )?),
        _ => {
            let n = linalg::qubit_count(full.d()).ok_or_else(|| {
                CliError::Invalid(format!(
                    "observables need a qubit channel, got d = {}",
                    full.d()
                ))
            })?;
            Ok(restrict_choi(full, n, &SubsetSelector::new(n, qubits)?)?)
        }
    }
}

pub fn bench(args: &BenchArgs, opts: &LoadOptions) -> CliResult<()> {
    let input = load_channel(&args.input, opts)?;
    let full = input.final_choi()?;
    let rank = RankOptions {
        rank_tol: args.rank_tol,
        span_tol: args.span_tol,
        psd_tol: opts.tolerances.psd,
        ds_tol: opts.tolerances.trace,
    };
    let suite_opts = SuiteOptions {
        rank,
        ds_threshold: args.ds_threshold,
        divisibility_threshold: args.divisibility_threshold,
        symmetry_threshold: args.symmetry_threshold,
    };

    let observables: Option<ObservablesFile> =
        args.observables.as_deref().map(read_json).transpose()?;
    let mut site_channels = Vec::new();
    let mut site_observables = Vec::new();
    let mut term_channels = BTreeMap::new();
    let mut terms = Vec::new();
    if let Some(obs) = &observables {
        if obs.format_version != crate::files::FORMAT_VERSION {
            return Err(CliError::Invalid(format!(
                "unsupported observables format_version {}",
                obs.format_version
            )));
        }
        for site in &obs.sites {
            site_channels.push(reduced_for(&input, &full, &[site.qubit])?);
            site_observables.push(site.observable.to_matrix(1)?);
        }
        for term in &obs.terms {
            let mut key = term.qubits.clone();
            key.sort_unstable();
            if !term_channels.contains_key(&key) {
                term_channels.insert(key.clone(), reduced_for(&input, &full, &key)?);
            }
            terms.push((key, term.observable.to_matrix(term.qubits.len())?));
        }
    }
    let symmetry = (!site_channels.is_empty()).then_some(SymmetryInput {
        site_channels: &site_channels,
        observables: &site_observables,
    });
    let suite_input = match &input {
        Channel::Trajectory(t) => SuiteInput::Trajectory(t),
        _ => SuiteInput::Channel(&full),
    };
    let suite = full_suite(suite_input, symmetry, &suite_opts)?;

    let descriptor = InputDescriptor {
        path: args.input.display().to_string(),
        kind: input.kind(),
        d: input.d(),
        n_qubits: linalg::qubit_count(input.d()),
        samples: match &input {
            Channel::Trajectory(t) => Some(t.samples().len()),
            _ => None,
        },
    };
    let tolerances = TolerancesUsed {
        validation: opts.tolerances,
        validation_mode: opts.mode,
        rank,
        ds_threshold: args.ds_threshold,
        divisibility_threshold: args.divisibility_threshold,
        symmetry_threshold: args.symmetry_threshold,
        restarts: args.restarts,
        seed: args.seed,
    };
    let mut report = BenchReport::new(descriptor, tolerances, suite);
    if !terms.is_empty() {
        report.observable = Some(observable_deviation(&term_channels, &terms)?);
    }

    let reference = match &args.reference {
        Some(path) => {
            let r = load_channel(path, opts)?.final_choi()?;
            if r.d() != full.d() {
                return Err(CliError::Invalid(format!(
                    "reference has d = {} but input has d = {}",
                    r.d(),
                    full.d()
                )));
            }
            report.metrics = Some(MetricsSection {
                reference: path.display().to_string(),
                metrics: metric_report(&full, &r)?,
                pure_state_lower_bound: max_pure_state_discrepancy(
                    &full,
                    &r,
                    args.restarts,
                    args.seed,
                )?,
            });
            Some(r)
        }
        None => None,
    };

    let mut outputs: Vec<(PathBuf, Vec<u8>)> = Vec::new();
    if let Some(prefix) = &args.csv {
        outputs.push((
            with_suffix(prefix, "_rank_bounds.csv"),
            rank_bounds_csv(full.d())?,
        ));
        if let Channel::Trajectory(t) = &input {
            let target = reference
                .clone()
                .unwrap_or_else(|| ChoiMatrix::identity(t.d()));
            let rows = metric_rows(t, &target, args.restarts, args.seed)?;
            outputs.push((with_suffix(prefix, "_metrics.csv"), metrics_csv(&rows)?));
        }
    }
    let mut text =
        serde_json::to_string_pretty(&report).map_err(|e| CliError::Invalid(e.to_string()))?;
    text.push('\n');
    outputs.push((args.out.clone(), text.into_bytes()));
    for (path, bytes) in &outputs {
        write_atomic(path, bytes)?;
    }
    Ok(())
}

pub fn bounds(args: &BoundsArgs) -> CliResult<()> {
    if args.d == 0 {
        return Err(CliError::Invalid("--d must be positive".into()));
    }
    let bytes = rank_bounds_csv(args.d)?;
    match &args.out {
        Some(path) => write_atomic(path, &bytes),
        None => std::io::stdout()
            .write_all(&bytes)
            .map_err(|e| CliError::Resource(e.to_string())),
    }
}
