// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

//! Channel algebra: Choi matrices, superoperators, partial traces and the
//! reduction of a multi-qubit unitary onto a subset of its qubits.
//!
//! Choi index convention ("in-out"): the composite index of the input basis
//! state `i` and output basis state `j` is `i·d + j`, and
//!
//! ```text
//! choi[(i·d + j), (k·d + l)] = ⟨j| Φ(|i⟩⟨k|) |l⟩
//! ```
//!
//! Under this convention a trace-preserving channel has `Tr choi = d`.
//! Superoperators act on column-major flattened operators,
//! `vec(ρ)[r + c·d] = ρ[r][c]`.

use log::warn;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, ONE, ZERO};

/// Largest full-system qubit count accepted for unitaries.
pub const MAX_UNITARY_QUBITS: usize = 12;
/// Largest full-system qubit count accepted for full-system superoperators.
pub const MAX_SUPEROP_QUBITS: usize = 6;

/// Tolerance used when checking that an input is unitary.
pub const UNITARY_TOL: f64 = 1e-10;

/// Numerical tolerances for validating measured or simulated channels.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub hermitian: f64,
    pub psd: f64,
    pub trace: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            hermitian: 1e-9,
            psd: 1e-9,
            trace: 1e-9,
        }
    }
}

/// Whether failed validation aborts (`Strict`) or only logs (`Warn`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ValidationMode {
    #[default]
    Warn,
    Strict,
}

/// A normalized quantum state.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(CMatrix);

impl DensityMatrix {
    pub fn new(mat: CMatrix, tol: f64) -> Result<Self> {
        let d = linalg::require_square(&mat, "density matrix")?;
        let herm = linalg::hermitian_deviation(&mat);
        if herm > tol {
            return Err(Error::Validation(format!(
                "density matrix is not Hermitian (deviation {herm:.3e})"
            )));
        }
        let tr = linalg::trace(&mat);
        if (tr - ONE).norm() > tol * d as f64 {
            return Err(Error::Validation(format!(
                "density matrix trace is {tr}, expected 1"
            )));
        }
        let min_eig = linalg::eigvalsh(&mat)[0];
        if min_eig < -tol {
            return Err(Error::Validation(format!(
                "density matrix has negative eigenvalue {min_eig:.3e}"
            )));
        }
        Ok(Self(mat))
    }

    /// `|ψ⟩⟨ψ|` for a (not necessarily normalized) state vector.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if psi.is_empty() || norm == 0.0 {
            return Err(Error::Validation(
                "pure state needs a nonzero vector".into(),
            ));
        }
        let n = psi.len();
        let mat = CMatrix::from_fn(n, n, |r, c| psi[r] * psi[c].conj() / (norm * norm));
        Ok(Self(mat))
    }

    pub fn maximally_mixed(d: usize) -> Self {
        Self(linalg::identity(d) * linalg::real(1.0 / d as f64))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn as_matrix(&self) -> &CMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix {
        self.0
    }
}

/// Choi matrix of a linear map on `d×d` operators, in the in-out convention.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiMatrix {
    d: usize,
    mat: CMatrix,
}

/// Transfer-matrix view of a linear map on `d×d` operators.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperOperator {
    d: usize,
    mat: CMatrix,
}

fn system_dim_of(mat: &CMatrix, what: &str) -> Result<usize> {
    let n = linalg::require_square(mat, what)?;
    let d = (n as f64).sqrt().round() as usize;
    if d * d != n {
        return Err(Error::Shape(format!(
            "{what} dimension {n} is not a perfect square"
        )));
    }
    Ok(d)
}

impl ChoiMatrix {
    /// Wraps a `d²×d²` matrix. Only the shape is checked here; see
    /// [`ChoiMatrix::validate`] for the physical checks.
    pub fn new(mat: CMatrix) -> Result<Self> {
        let d = system_dim_of(&mat, "Choi matrix")?;
        Ok(Self { d, mat })
    }

    pub fn identity(d: usize) -> Self {
        let n = d * d;
        let mut mat = CMatrix::zeros(n, n);
        for i in 0..d {
            for k in 0..d {
                mat[(i * d + i, k * d + k)] = ONE;
            }
        }
        Self { d, mat }
    }

    /// Completely depolarizing channel `ρ ↦ Tr(ρ)·1/d`.
    pub fn depolarizing(d: usize) -> Self {
        let n = d * d;
        Self {
            d,
            mat: linalg::identity(n) * linalg::real(1.0 / d as f64),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn as_matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> CMatrix {
        self.mat
    }

    /// `Φ(x)` for an arbitrary `d×d` operator.
    pub fn apply(&self, x: &CMatrix) -> Result<CMatrix> {
        let d = self.d;
        if x.shape() != (d, d) {
            return Err(Error::Shape(format!(
                "operator is {}x{}, channel acts on {d}x{d}",
                x.nrows(),
                x.ncols()
            )));
        }
        let mut out = CMatrix::zeros(d, d);
        for j in 0..d {
            for l in 0..d {
                let mut acc = ZERO;
                for i in 0..d {
                    for k in 0..d {
                        acc += self.mat[(i * d + j, k * d + l)] * x[(i, k)];
                    }
                }
                out[(j, l)] = acc;
            }
        }
        Ok(out)
    }

    /// Runs the Hermiticity, positivity and trace-preservation checks.
    ///
    /// In `Warn` mode problems are logged and returned in the summary; in
    /// `Strict` mode the first problem becomes a validation error.
    pub fn validate(&self, tol: &Tolerances, mode: ValidationMode) -> Result<ChoiValidation> {
        let hermitian_deviation = linalg::hermitian_deviation(&self.mat);
        let min_eigenvalue = linalg::eigvalsh(&self.mat)[0];
        let tout = trace_out(self);
        let trace_out_deviation = linalg::frobenius(&(tout - linalg::identity(self.d)));
        let mut issues = Vec::new();
        if hermitian_deviation > tol.hermitian {
            issues.push(format!(
                "Hermiticity check failed: deviation {hermitian_deviation:.3e} > {:.1e}",
                tol.hermitian
            ));
        }
        if min_eigenvalue < -tol.psd {
            issues.push(format!(
                "complete-positivity check failed: minimum eigenvalue {min_eigenvalue:.3e} < -{:.1e}",
                tol.psd
            ));
        }
        if trace_out_deviation > tol.trace {
            issues.push(format!(
                "trace-preservation check failed: ||Tr_out(choi) - 1||_2 = {trace_out_deviation:.3e} > {:.1e}",
                tol.trace
            ));
        }
        if !issues.is_empty() {
            match mode {
                ValidationMode::Strict => return Err(Error::Validation(issues.join("; "))),
                ValidationMode::Warn => issues.iter().for_each(|m| warn!("{m}")),
            }
        }
        Ok(ChoiValidation {
            hermitian_deviation,
            min_eigenvalue,
            trace_out_deviation,
            issues,
        })
    }
}

/// Outcome of [`ChoiMatrix::validate`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChoiValidation {
    pub hermitian_deviation: f64,
    pub min_eigenvalue: f64,
    pub trace_out_deviation: f64,
    pub issues: Vec<String>,
}

impl SuperOperator {
    pub fn new(mat: CMatrix) -> Result<Self> {
        let d = system_dim_of(&mat, "superoperator")?;
        Ok(Self { d, mat })
    }

    pub fn identity(d: usize) -> Self {
        Self {
            d,
            mat: linalg::identity(d * d),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn as_matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> CMatrix {
        self.mat
    }

    pub fn apply(&self, x: &CMatrix) -> Result<CMatrix> {
        if x.shape() != (self.d, self.d) {
            return Err(Error::Shape(format!(
                "operator is {}x{}, superoperator acts on {d}x{d}",
                x.nrows(),
                x.ncols(),
                d = self.d
            )));
        }
        Ok(linalg::unvectorize(
            &(&self.mat * linalg::vectorize(x)),
            self.d,
        ))
    }
}

/// Qubit subset `S ⊂ {0, …, N-1}`, stored in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetSelector {
    n_qubits: usize,
    indices: Vec<usize>,
}

impl SubsetSelector {
    /// Accepts indices in any order; rejects empty, duplicate or out-of-range entries.
    pub fn new(n_qubits: usize, indices: &[usize]) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::Validation("qubit subset must be non-empty".into()));
        }
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        if let Some(&bad) = sorted.iter().find(|&&q| q >= n_qubits) {
            return Err(Error::Validation(format!(
                "qubit {bad} out of range for {n_qubits} qubits"
            )));
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Validation(
                "qubit subset has duplicate indices".into(),
            ));
        }
        Ok(Self {
            n_qubits,
            indices: sorted,
        })
    }

    pub fn full(n_qubits: usize) -> Self {
        Self {
            n_qubits,
            indices: (0..n_qubits).collect(),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Complement `S̄`, in increasing order.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.n_qubits)
            .filter(|q| !self.indices.contains(q))
            .collect()
    }

    /// Dimension `2^|S|` of the subsystem.
    pub fn dim(&self) -> usize {
        1 << self.indices.len()
    }
}

/// Time-stamped Choi matrices `Φ_t` of one process.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelTrajectory {
    d: usize,
    samples: Vec<(f64, ChoiMatrix)>,
}

impl ChannelTrajectory {
    pub fn new(samples: Vec<(f64, ChoiMatrix)>) -> Result<Self> {
        let Some((_, first)) = samples.first() else {
            return Err(Error::Validation("trajectory has no samples".into()));
        };
        let d = first.d();
        for (t, c) in &samples {
            if !t.is_finite() || *t < 0.0 {
                return Err(Error::Validation(format!("invalid trajectory time {t}")));
            }
            if c.d() != d {
                return Err(Error::Shape(format!(
                    "trajectory mixes dimensions {d} and {}",
                    c.d()
                )));
            }
        }
        if samples.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(Error::Validation(
                "trajectory times must be strictly increasing".into(),
            ));
        }
        Ok(Self { d, samples })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn samples(&self) -> &[(f64, ChoiMatrix)] {
        &self.samples
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|(t, _)| *t)
    }

    pub fn last(&self) -> &ChoiMatrix {
        &self.samples[self.samples.len() - 1].1
    }

    /// True when the first sample is `t = 0` with the identity channel.
    pub fn starts_at_identity(&self, tol: f64) -> bool {
        let (t0, c0) = &self.samples[0];
        *t0 == 0.0
            && linalg::max_abs_diff(c0.as_matrix(), ChoiMatrix::identity(self.d).as_matrix()) <= tol
    }
}

/// Kronecker product with qubit 0 as the most significant factor.
pub fn tensor_product(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    linalg::kron(a, b)
}

/// Partial trace over every factor not listed in `keep`.
///
/// `dims` lists the factor dimensions, most significant first. The result
/// acts on the kept factors in their original order.
pub fn partial_trace(m: &CMatrix, dims: &[usize], keep: &[usize]) -> Result<CMatrix> {
    let total = linalg::require_square(m, "partial trace input")?;
    if dims.is_empty() || dims.contains(&0) || dims.iter().product::<usize>() != total {
        return Err(Error::Shape(format!(
            "factor dimensions {dims:?} do not multiply to {total}"
        )));
    }
    if keep.is_empty() {
        return Err(Error::Shape(
            "partial trace must keep at least one factor".into(),
        ));
    }
    let mut keep_sorted = keep.to_vec();
    keep_sorted.sort_unstable();
    if keep_sorted.windows(2).any(|w| w[0] == w[1])
        || keep_sorted[keep_sorted.len() - 1] >= dims.len()
    {
        return Err(Error::Shape(format!(
            "invalid kept factors {keep:?} for {} factors",
            dims.len()
        )));
    }

    // Stride of each factor in the composite index.
    let mut strides = vec![1usize; dims.len()];
    for f in (0..dims.len() - 1).rev() {
        strides[f] = strides[f + 1] * dims[f + 1];
    }
    let traced: Vec<usize> = (0..dims.len())
        .filter(|f| !keep_sorted.contains(f))
        .collect();
    let offsets = |factors: &[usize]| -> Vec<usize> {
        let mut out = vec![0usize];
        for &f in factors {
            let (dim, stride) = (dims[f], strides[f]);
            out = out
                .iter()
                .flat_map(|&base| (0..dim).map(move |v| base + v * stride))
                .collect();
        }
        out
    };
    let kept_offsets = offsets(&keep_sorted);
    let traced_offsets = offsets(&traced);

    let n = kept_offsets.len();
    let mut out = CMatrix::zeros(n, n);
    for (a, &ra) in kept_offsets.iter().enumerate() {
        for (b, &rb) in kept_offsets.iter().enumerate() {
            out[(a, b)] = traced_offsets.iter().map(|&e| m[(ra + e, rb + e)]).sum();
        }
    }
    Ok(out)
}

fn require_unitary(u: &CMatrix) -> Result<usize> {
    let n = linalg::require_square(u, "unitary")?;
    let dev = linalg::unitarity_deviation(u);
    if dev > UNITARY_TOL {
        return Err(Error::Validation(format!(
            "matrix is not unitary: max |u†u - 1| = {dev:.3e}"
        )));
    }
    Ok(n)
}

/// Choi matrix of `ρ ↦ uρu†`; rank one with trace `d`.
pub fn choi_of_unitary(u: &CMatrix) -> Result<ChoiMatrix> {
    let d = require_unitary(u)?;
    Ok(unitary_choi_unchecked(u, d))
}

pub(crate) fn unitary_choi_unchecked(u: &CMatrix, d: usize) -> ChoiMatrix {
    // choi = |v⟩⟨v| with v[(i,j)] = u[j][i]
    let v: Vec<Complex64> = (0..d * d).map(|r| u[(r % d, r / d)]).collect();
    let n = d * d;
    let mat = CMatrix::from_fn(n, n, |r, c| v[r] * v[c].conj());
    ChoiMatrix { d, mat }
}

/// Choi matrix of `ρ ↦ Σ_a K_a ρ K_a†`.
pub fn choi_from_kraus(kraus: &[CMatrix]) -> Result<ChoiMatrix> {
    let Some(first) = kraus.first() else {
        return Err(Error::Validation("need at least one Kraus operator".into()));
    };
    let d = linalg::require_square(first, "Kraus operator")?;
    let n = d * d;
    let mut mat = CMatrix::zeros(n, n);
    for k in kraus {
        if k.shape() != (d, d) {
            return Err(Error::Shape("Kraus operators differ in shape".into()));
        }
        let v = nalgebra::DVector::from_fn(n, |r, _| k[(r % d, r / d)]);
        mat += &v * v.adjoint();
    }
    Ok(ChoiMatrix { d, mat })
}

/// Chunk size for order-stable parallel sums.
const SUM_CHUNK: usize = 16;

/// Sums `f(0) + … + f(n-1)` in parallel with a fixed association order, so
/// the result is bitwise independent of the thread count.
pub(crate) fn ordered_parallel_sum<F>(n: usize, zero: CMatrix, f: F) -> CMatrix
where
    F: Fn(usize) -> CMatrix + Sync,
{
    let chunks = n.div_ceil(SUM_CHUNK);
    let partials: Vec<CMatrix> = (0..chunks)
        .into_par_iter()
        .map(|ch| {
            let mut acc = zero.clone();
            for idx in ch * SUM_CHUNK..((ch + 1) * SUM_CHUNK).min(n) {
                acc += f(idx);
            }
            acc
        })
        .collect();
    partials.into_iter().fold(zero, |acc, p| acc + p)
}

/// Basis-state offsets of every assignment to `qubits`, enumerated with the
/// first listed qubit most significant.
fn qubit_offsets(n_qubits: usize, qubits: &[usize]) -> Vec<usize> {
    let bit = |q: usize| 1usize << (n_qubits - 1 - q);
    (0..1usize << qubits.len())
        .map(|v| {
            qubits
                .iter()
                .enumerate()
                .filter(|(p, _)| v >> (qubits.len() - 1 - p) & 1 == 1)
                .map(|(_, &q)| bit(q))
                .sum()
        })
        .collect()
}

/// Reduced channel of an `n_qubits`-qubit unitary on `subset`, with the
/// complement prepared maximally mixed and traced out afterwards:
///
/// ```text
/// Φ^S(ρ) = Tr_S̄[ u (ρ ⊗ 1/2^|S̄|) u† ]
/// ```
///
/// Computed as `Σ_{e,e'} |v_ee'⟩⟨v_ee'| / 2^|S̄|` with
/// `v_ee'[(i,j)] = u[(j,e'), (i,e)]`, which is exactly the matrix-unit
/// expansion of the partial trace.
pub fn reduced_choi(u: &CMatrix, n_qubits: usize, subset: &SubsetSelector) -> Result<ChoiMatrix> {
    if n_qubits > MAX_UNITARY_QUBITS {
        return Err(Error::Size {
            dim: 1 << n_qubits,
            max: 1 << MAX_UNITARY_QUBITS,
        });
    }
    let dim = linalg::require_square(u, "unitary")?;
    if dim != 1 << n_qubits {
        return Err(Error::Shape(format!(
            "unitary dimension {dim} does not match {n_qubits} qubits"
        )));
    }
    if subset.n_qubits() != n_qubits {
        return Err(Error::Shape(format!(
            "subset is defined for {} qubits, unitary has {n_qubits}",
            subset.n_qubits()
        )));
    }
    require_unitary(u)?;

    let sys = qubit_offsets(n_qubits, subset.indices());
    let env = qubit_offsets(n_qubits, &subset.complement());
    let d = sys.len();
    let n = d * d;

    let total = ordered_parallel_sum(env.len(), CMatrix::zeros(n, n), |e| {
        let block = CMatrix::from_fn(n, env.len(), |r, e2| {
            let (i, j) = (r / d, r % d);
            u[(sys[j] | env[e2], sys[i] | env[e])]
        });
        &block * block.adjoint()
    });
    let mat = total * linalg::real(1.0 / env.len() as f64);
    Ok(ChoiMatrix { d, mat })
}

/// Restriction of an `n_qubits`-qubit channel to `subset`: the complement is
/// fed the maximally mixed state and traced out at the output. For the Choi
/// matrix of a unitary this agrees with [`reduced_choi`].
pub fn restrict_choi(
    c: &ChoiMatrix,
    n_qubits: usize,
    subset: &SubsetSelector,
) -> Result<ChoiMatrix> {
    if n_qubits > MAX_SUPEROP_QUBITS {
        return Err(Error::Size {
            dim: 1 << n_qubits,
            max: 1 << MAX_SUPEROP_QUBITS,
        });
    }
    if c.d != 1 << n_qubits || subset.n_qubits() != n_qubits {
        return Err(Error::Shape(format!(
            "channel on dimension {} and subset of {} qubits do not match {n_qubits} qubits",
            c.d,
            subset.n_qubits()
        )));
    }
    let sys = qubit_offsets(n_qubits, subset.indices());
    let env = qubit_offsets(n_qubits, &subset.complement());
    let (big, d) = (c.d, sys.len());
    let scale = 1.0 / env.len() as f64;
    let mat = CMatrix::from_fn(d * d, d * d, |r, col| {
        let (i, j) = (r / d, r % d);
        let (k, l) = (col / d, col % d);
        let mut acc = ZERO;
        for &e in &env {
            for &f in &env {
                acc += c.mat[(
                    (sys[i] | e) * big + (sys[j] | f),
                    (sys[k] | e) * big + (sys[l] | f),
                )];
            }
        }
        acc * scale
    });
    Ok(ChoiMatrix { d, mat })
}

/// `Φ(ρ)` for a validated state.
pub fn apply_choi(c: &ChoiMatrix, rho: &DensityMatrix) -> Result<CMatrix> {
    c.apply(rho.as_matrix())
}

/// Reshuffles a Choi matrix into the transfer matrix of the same map.
pub fn choi_to_superop(c: &ChoiMatrix) -> SuperOperator {
    let d = c.d;
    let n = d * d;
    // S[(j + l·d), (i + k·d)] = C[(i·d + j), (k·d + l)]
    let mat = CMatrix::from_fn(n, n, |r, col| {
        let (j, l) = (r % d, r / d);
        let (i, k) = (col % d, col / d);
        c.mat[(i * d + j, k * d + l)]
    });
    SuperOperator { d, mat }
}

/// Inverse of [`choi_to_superop`].
pub fn superop_to_choi(s: &SuperOperator) -> ChoiMatrix {
    let d = s.d;
    let n = d * d;
    let mat = CMatrix::from_fn(n, n, |r, col| {
        let (i, j) = (r / d, r % d);
        let (k, l) = (col / d, col % d);
        s.mat[(j + l * d, i + k * d)]
    });
    ChoiMatrix { d, mat }
}

/// Choi matrix of `after ∘ before`.
pub fn compose(after: &ChoiMatrix, before: &ChoiMatrix) -> Result<ChoiMatrix> {
    if after.d != before.d {
        return Err(Error::Shape(format!(
            "cannot compose channels on dimensions {} and {}",
            after.d, before.d
        )));
    }
    let s = choi_to_superop(after).mat * choi_to_superop(before).mat;
    Ok(superop_to_choi(&SuperOperator { d: after.d, mat: s }))
}

/// Heisenberg-picture dual with `Tr[Φ(ρ)X] = Tr[ρ Φ†(X)]` for
/// Hermiticity-preserving maps and Hermitian `X`.
pub fn adjoint_superop(s: &SuperOperator) -> SuperOperator {
    SuperOperator {
        d: s.d,
        mat: s.mat.adjoint(),
    }
}

/// Partial trace over the input index: `Φ(1)`.
pub fn trace_in(c: &ChoiMatrix) -> CMatrix {
    let d = c.d;
    CMatrix::from_fn(d, d, |j, l| {
        (0..d).map(|i| c.mat[(i * d + j, i * d + l)]).sum()
    })
}

/// Partial trace over the output index; the identity for trace-preserving maps.
pub fn trace_out(c: &ChoiMatrix) -> CMatrix {
    let d = c.d;
    CMatrix::from_fn(d, d, |i, k| {
        (0..d).map(|j| c.mat[(i * d + j, k * d + j)]).sum()
    })
}

/// Result of [`is_cp`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CpCheck {
    pub completely_positive: bool,
    pub min_eigenvalue: f64,
}

/// Complete positivity: the smallest Choi eigenvalue is at least `-tol`.
pub fn is_cp(c: &ChoiMatrix, tol: f64) -> Result<CpCheck> {
    let dev = linalg::hermitian_deviation(&c.mat);
    if dev > tol {
        return Err(Error::Validation(format!(
            "Choi matrix is not Hermitian (deviation {dev:.3e})"
        )));
    }
    let min_eigenvalue = linalg::eigvalsh(&c.mat)[0];
    Ok(CpCheck {
        completely_positive: min_eigenvalue >= -tol,
        min_eigenvalue,
    })
}
