// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

//! On-disk formats: channel files, observables files and the JSON helpers
//! shared by every subcommand.

use std::fs;
use std::io::Write;
use std::path::Path;

use log::warn;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use qcbench_core::channel::{choi_of_unitary, Tolerances, ValidationMode, UNITARY_TOL};
use qcbench_core::gatelab::Axis;
use qcbench_core::linalg::{self, CMatrix};
use qcbench_core::serde_matrix::{from_rows, to_rows};
use qcbench_core::{ChannelTrajectory, ChoiMatrix};

use crate::error::{CliError, CliResult};

pub const FORMAT_VERSION: u32 = 1;
/// Choi index convention tag: `choi[(i·d + j), (k·d + l)] = ⟨j|Φ(|i⟩⟨k|)|l⟩`.
pub const CONVENTION: &str = "in-out";

pub type Rows = Vec<Vec<[f64; 2]>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChannelKind {
    Choi,
    Unitary,
    Trajectory,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimedMatrix {
    pub t: f64,
    pub matrix: Rows,
}

/// Serialized channel, unitary or trajectory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelFile {
    pub format_version: u32,
    pub kind: ChannelKind,
    pub convention: String,
    /// Channel dimension; required for `choi` and `trajectory`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    /// Qubit count; required for `unitary`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_qubits: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Rows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<Vec<TimedMatrix>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<serde_json::Value>,
}

/// A loaded and checked channel file.
#[derive(Debug, Clone, PartialEq)]
pub enum Channel {
    Choi(ChoiMatrix),
    Unitary { matrix: CMatrix, n_qubits: usize },
    Trajectory(ChannelTrajectory),
}

impl Channel {
    pub fn kind(&self) -> ChannelKind {
        match self {
            Channel::Choi(_) => ChannelKind::Choi,
            Channel::Unitary { .. } => ChannelKind::Unitary,
            Channel::Trajectory(_) => ChannelKind::Trajectory,
        }
    }

    /// Dimension of the channel's input space.
    pub fn d(&self) -> usize {
        match self {
            Channel::Choi(c) => c.d(),
            Channel::Unitary { matrix, .. } => matrix.nrows(),
            Channel::Trajectory(t) => t.d(),
        }
    }

    /// The channel itself, the channel of the unitary, or the final sample.
    pub fn final_choi(&self) -> CliResult<ChoiMatrix> {
        match self {
            Channel::Choi(c) => Ok(c.clone()),
            Channel::Unitary { matrix, n_qubits } => {
                if *n_qubits > qcbench_core::channel::MAX_SUPEROP_QUBITS {
                    return Err(CliError::Resource(format!(
                        "a {n_qubits}-qubit unitary is too large to benchmark as a full channel (max {} qubits); reduce it first",
                        qcbench_core::channel::MAX_SUPEROP_QUBITS
                    )));
                }
                Ok(choi_of_unitary(matrix)?)
            }
            Channel::Trajectory(t) => Ok(t.last().clone()),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct LoadOptions {
    pub tolerances: Tolerances,
    pub mode: ValidationMode,
}

impl ChannelFile {
    pub fn choi(c: &ChoiMatrix, metadata: Option<serde_json::Value>) -> Self {
        ChannelFile {
            format_version: FORMAT_VERSION,
            kind: ChannelKind::Choi,
            convention: CONVENTION.into(),
            d: Some(c.d()),
            n_qubits: linalg::qubit_count(c.d()),
            matrix: Some(to_rows(c.as_matrix())),
            samples: None,
            metadata,
        }
    }

    pub fn unitary(u: &CMatrix, n_qubits: usize, metadata: Option<serde_json::Value>) -> Self {
        ChannelFile {
            format_version: FORMAT_VERSION,
            kind: ChannelKind::Unitary,
            convention: CONVENTION.into(),
            d: Some(u.nrows()),
            n_qubits: Some(n_qubits),
            matrix: Some(to_rows(u)),
            samples: None,
            metadata,
        }
    }

    pub fn trajectory(t: &ChannelTrajectory, metadata: Option<serde_json::Value>) -> Self {
        ChannelFile {
            format_version: FORMAT_VERSION,
            kind: ChannelKind::Trajectory,
            convention: CONVENTION.into(),
            d: Some(t.d()),
            n_qubits: linalg::qubit_count(t.d()),
            matrix: None,
            samples: Some(
                t.samples()
                    .iter()
                    .map(|(t, c)| TimedMatrix {
                        t: *t,
                        matrix: to_rows(c.as_matrix()),
                    })
                    .collect(),
            ),
            metadata,
        }
    }

    pub fn from_channel(ch: &Channel, metadata: Option<serde_json::Value>) -> Self {
        match ch {
            Channel::Choi(c) => Self::choi(c, metadata),
            Channel::Unitary { matrix, n_qubits } => Self::unitary(matrix, *n_qubits, metadata),
            Channel::Trajectory(t) => Self::trajectory(t, metadata),
        }
    }

    /// Checks structure and, per `opts.mode`, physical validity.
    pub fn into_channel(self, opts: &LoadOptions) -> CliResult<Channel> {
        if self.format_version != FORMAT_VERSION {
            return Err(CliError::Invalid(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                self.format_version
            )));
        }
        if self.convention != CONVENTION {
            return Err(CliError::Invalid(format!(
                "unsupported Choi convention \"{}\" (expected \"{CONVENTION}\")",
                self.convention
            )));
        }
        match self.kind {
            ChannelKind::Choi => {
                let rows = self.matrix.ok_or_else(|| missing("matrix", "choi"))?;
                let d = self.d.ok_or_else(|| missing("d", "choi"))?;
                let c = load_choi(&rows, d, "matrix")?;
                check_qubits(self.n_qubits, d)?;
                c.validate(&opts.tolerances, opts.mode)?;
                Ok(Channel::Choi(c))
            }
            ChannelKind::Unitary => {
                let rows = self.matrix.ok_or_else(|| missing("matrix", "unitary"))?;
                let n_qubits = self
                    .n_qubits
                    .ok_or_else(|| missing("n_qubits", "unitary"))?;
                let matrix =
                    from_rows(&rows).map_err(|e| CliError::Invalid(format!("matrix: {e}")))?;
                if n_qubits > qcbench_core::channel::MAX_UNITARY_QUBITS {
                    return Err(qcbench_core::Error::Size {
                        dim: 1 << n_qubits.min(63),
                        max: 1 << qcbench_core::channel::MAX_UNITARY_QUBITS,
                    }
                    .into());
                }
                if matrix.nrows() != 1 << n_qubits || self.d.is_some_and(|d| d != matrix.nrows()) {
                    return Err(CliError::Invalid(format!(
                        "unitary is {0}x{0} but the file declares {n_qubits} qubits",
                        matrix.nrows()
                    )));
                }
                let dev = linalg::unitarity_deviation(&matrix);
                if dev > UNITARY_TOL {
                    let msg = format!("unitarity check failed: max |u†u - 1| = {dev:.3e}");
                    match opts.mode {
                        ValidationMode::Strict => {
                            return Err(CliError::Invalid(format!("validation error: {msg}")))
                        }
                        ValidationMode::Warn => warn!("{msg}"),
                    }
                }
                Ok(Channel::Unitary { matrix, n_qubits })
            }
            ChannelKind::Trajectory => {
                let samples = self
                    .samples
                    .ok_or_else(|| missing("samples", "trajectory"))?;
                let d = self.d.ok_or_else(|| missing("d", "trajectory"))?;
                check_qubits(self.n_qubits, d)?;
                let mut out = Vec::with_capacity(samples.len());
                for (i, s) in samples.iter().enumerate() {
                    let c = load_choi(&s.matrix, d, &format!("samples[{i}].matrix"))?;
                    c.validate(&opts.tolerances, opts.mode).map_err(|e| {
                        CliError::Invalid(format!("samples[{i}] (t = {}): {e}", s.t))
                    })?;
                    out.push((s.t, c));
                }
                Ok(Channel::Trajectory(ChannelTrajectory::new(out)?))
            }
        }
    }
}

fn missing(field: &str, kind: &str) -> CliError {
    CliError::Invalid(format!("a {kind} file needs a \"{field}\" field"))
}

fn check_qubits(n_qubits: Option<usize>, d: usize) -> CliResult<()> {
    match n_qubits {
        Some(n) if n >= usize::BITS as usize || 1usize << n != d => Err(CliError::Invalid(
            format!("n_qubits = {n} does not match d = {d}"),
        )),
        _ => Ok(()),
    }
}

fn load_choi(rows: &Rows, d: usize, what: &str) -> CliResult<ChoiMatrix> {
    let m = from_rows(rows).map_err(|e| CliError::Invalid(format!("{what}: {e}")))?;
    if m.nrows() != d * d {
        return Err(CliError::Invalid(format!(
            "{what} is {0}x{0} but d = {d} requires {1}x{1}",
            m.nrows(),
            d * d
        )));
    }
    Ok(ChoiMatrix::new(m)?)
}

/// Parses JSON, reporting the failing JSON path.
pub fn parse_json<T: DeserializeOwned>(text: &str, path: &Path) -> CliResult<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|err| CliError::Parse {
        path: path.display().to_string(),
        json_path: err.path().to_string(),
        message: err.into_inner().to_string(),
    })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| CliError::read(path, e))?;
    parse_json(&text, path)
}

pub fn load_channel(path: &Path, opts: &LoadOptions) -> CliResult<Channel> {
    read_json::<ChannelFile>(path)?
        .into_channel(opts)
        .map_err(|e| match e {
            CliError::Invalid(msg) => CliError::Invalid(format!("{}: {msg}", path.display())),
            other => other,
        })
}

/// Writes `contents` through a sibling temporary file so a failed run never
/// leaves a partial output behind.
pub fn write_atomic(path: &Path, contents: &[u8]) -> CliResult<()> {
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let tmp = dir.join(format!(".{name}.tmp"));
    let result = fs::File::create(&tmp)
        .and_then(|mut f| f.write_all(contents).and_then(|_| f.sync_all()))
        .and_then(|_| fs::rename(&tmp, path));
    if let Err(e) = result {
        let _ = fs::remove_file(&tmp);
        return Err(CliError::write(path, e));
    }
    Ok(())
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> CliResult<()> {
    let mut text =
        serde_json::to_string_pretty(value).map_err(|e| CliError::Invalid(e.to_string()))?;
    text.push('\n');
    write_atomic(path, text.as_bytes())
}

/// Observable given either as a Pauli string (one letter per qubit) or as a matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObservableSpec {
    Pauli(String),
    Matrix(Rows),
}

impl ObservableSpec {
    pub fn to_matrix(&self, n_qubits: usize) -> CliResult<CMatrix> {
        let m = match self {
            ObservableSpec::Pauli(word) => {
                if word.chars().count() != n_qubits {
                    return Err(CliError::Invalid(format!(
                        "Pauli string \"{word}\" has {} letters for {n_qubits} qubits",
                        word.chars().count()
                    )));
                }
                let mut m = linalg::identity(1);
                for ch in word.chars() {
                    let p = match ch.to_ascii_lowercase() {
                        'i' => linalg::identity(2),
                        'x' => pauli(Axis::X),
                        'y' => pauli(Axis::Y),
                        'z' => pauli(Axis::Z),
                        other => {
                            return Err(CliError::Invalid(format!(
                                "unknown Pauli letter '{other}'"
                            )))
                        }
                    };
                    m = linalg::kron(&m, &p)?;
                }
                m
            }
            ObservableSpec::Matrix(rows) => {
                from_rows(rows).map_err(|e| CliError::Invalid(format!("observable: {e}")))?
            }
        };
        if m.nrows() != 1 << n_qubits {
            return Err(CliError::Invalid(format!(
                "observable is {0}x{0} but acts on {n_qubits} qubits",
                m.nrows()
            )));
        }
        Ok(m)
    }
}

fn pauli(axis: Axis) -> CMatrix {
    match axis {
        Axis::X => linalg::pauli_x(),
        Axis::Y => linalg::pauli_y(),
        Axis::Z => linalg::pauli_z(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SiteObservable {
    pub qubit: usize,
    pub observable: ObservableSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermObservable {
    pub qubits: Vec<usize>,
    pub observable: ObservableSpec,
}

/// Observables for the symmetry benchmark (`sites`, one qubit each) and for
/// the multi-qubit observable deviation (`terms`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObservablesFile {
    pub format_version: u32,
    #[serde(default)]
    pub sites: Vec<SiteObservable>,
    #[serde(default)]
    pub terms: Vec<TermObservable>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use qcbench_core::gatelab::bloch_redfield_choi;

    #[test]
    fn identity_choi_file_layout() {
        let f = ChannelFile::choi(&ChoiMatrix::identity(2), None);
        let rows = f.matrix.as_ref().unwrap();
        let flat: Vec<[f64; 2]> = rows.iter().flatten().copied().collect();
        assert_eq!(flat.len(), 16);
        assert_eq!(flat.iter().filter(|p| **p == [1.0, 0.0]).count(), 4);
        let json = serde_json::to_value(&f).unwrap();
        assert_eq!(json["convention"], "in-out");
        assert_eq!(json["kind"], "choi");
    }

    #[test]
    fn round_trip_is_bitwise() {
        let c = bloch_redfield_choi(0.37, 0.41, std::f64::consts::LN_2);
        let text = serde_json::to_string(&ChannelFile::choi(&c, None)).unwrap();
        let back: ChannelFile = parse_json(&text, Path::new("mem")).unwrap();
        match back.into_channel(&LoadOptions::default()).unwrap() {
            Channel::Choi(got) => assert_eq!(got, c),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_convention_reports_path() {
        let text = r#"{"format_version": 1, "kind": "choi", "d": 1, "matrix": [[[1, 0]]]}"#;
        let err = parse_json::<ChannelFile>(text, Path::new("f.json")).unwrap_err();
        assert!(err.to_string().contains("convention"), "{err}");
    }

    #[test]
    fn bad_entry_reports_json_path() {
        let text = r#"{"format_version": 1, "kind": "choi", "convention": "in-out", "d": 1, "matrix": [[[1, "x"]]]}"#;
        match parse_json::<ChannelFile>(text, Path::new("f.json")).unwrap_err() {
            CliError::Parse { json_path, .. } => assert_eq!(json_path, "matrix[0][0][1]"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn wrong_convention_is_rejected() {
        let mut f = ChannelFile::choi(&ChoiMatrix::identity(2), None);
        f.convention = "out-in".into();
        assert!(f.into_channel(&LoadOptions::default()).is_err());
    }

    #[test]
    fn pauli_strings() {
        let zz = ObservableSpec::Pauli("zz".into()).to_matrix(2).unwrap();
        assert_eq!(
            zz,
            linalg::kron(&linalg::pauli_z(), &linalg::pauli_z()).unwrap()
        );
        assert!(ObservableSpec::Pauli("z".into()).to_matrix(2).is_err());
    }
}
