// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

//! Target gates and the three error classes.
//!
//! * Hamiltonian evolution `U = e^{-iHt}` and systematic perturbations of `H`
//!   (unitary errors).
//! * Time-independent Lindblad generators and their channels (CP-divisible,
//!   non-unitary errors).
//! * Averages of unitary channels over Gaussian shot-to-shot fluctuations of
//!   Hamiltonian coefficients (CP-indivisible, non-unitary errors).
//!
//! Closed-form single-qubit channels for amplitude damping with dephasing
//! (Bloch-Redfield) and Gaussian dephasing live here as well.

use log::warn;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::channel::{
    self, superop_to_choi, ChannelTrajectory, ChoiMatrix, SubsetSelector, SuperOperator,
    MAX_SUPEROP_QUBITS, MAX_UNITARY_QUBITS,
};
use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, I, ONE};

/// Tolerance for the Hermiticity check before exponentiating.
pub const HERMITIAN_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

/// `coefficient · Π σ_{axis, qubit}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PauliTerm {
    pub coefficient: f64,
    pub factors: Vec<(usize, Axis)>,
}

impl PauliTerm {
    pub fn new(coefficient: f64, factors: Vec<(usize, Axis)>) -> Self {
        Self {
            coefficient,
            factors,
        }
    }

    fn check(&self, n_qubits: usize) -> Result<()> {
        if !self.coefficient.is_finite() {
            return Err(Error::Validation(
                "Pauli term coefficient is not finite".into(),
            ));
        }
        let mut seen = Vec::with_capacity(self.factors.len());
        for &(q, _) in &self.factors {
            if q >= n_qubits {
                return Err(Error::Validation(format!(
                    "Pauli factor on qubit {q} but only {n_qubits} qubits"
                )));
            }
            if seen.contains(&q) {
                return Err(Error::Validation(format!(
                    "qubit {q} repeated within one Pauli term"
                )));
            }
            seen.push(q);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HamiltonianSpec {
    pub n_qubits: usize,
    pub terms: Vec<PauliTerm>,
}

impl HamiltonianSpec {
    pub fn new(n_qubits: usize, terms: Vec<PauliTerm>) -> Self {
        Self { n_qubits, terms }
    }

    /// `J Σ_i σx_i σx_{i+1} + Σ_i h_i σz_i` on an open chain.
    pub fn xxz_chain(coupling: f64, fields: &[f64]) -> Self {
        let n = fields.len();
        let mut terms: Vec<PauliTerm> = (0..n.saturating_sub(1))
            .map(|i| PauliTerm::new(coupling, vec![(i, Axis::X), (i + 1, Axis::X)]))
            .collect();
        terms.extend(
            fields
                .iter()
                .enumerate()
                .map(|(i, &h)| PauliTerm::new(h, vec![(i, Axis::Z)])),
        );
        Self { n_qubits: n, terms }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_qubits == 0 {
            return Err(Error::Validation(
                "Hamiltonian needs at least one qubit".into(),
            ));
        }
        if self.n_qubits > MAX_UNITARY_QUBITS {
            return Err(Error::Size {
                dim: 1 << self.n_qubits,
                max: 1 << MAX_UNITARY_QUBITS,
            });
        }
        self.terms.iter().try_for_each(|t| t.check(self.n_qubits))
    }
}

/// Built-in single-qubit jump operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalOp {
    SigmaMinus,
    SigmaPlus,
    X,
    Y,
    Z,
}

/// A jump operator, either a full `2^N × 2^N` matrix or a local operator
/// embedded on one qubit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JumpOperator {
    Local { qubit: usize, op: LocalOp },
    Matrix(#[serde(with = "crate::serde_matrix")] CMatrix),
}

impl JumpOperator {
    pub fn to_matrix(&self, n_qubits: usize) -> Result<CMatrix> {
        match self {
            JumpOperator::Matrix(m) => {
                if m.shape() != (1 << n_qubits, 1 << n_qubits) {
                    return Err(Error::Shape(format!(
                        "jump operator is {}x{}, expected {d}x{d}",
                        m.nrows(),
                        m.ncols(),
                        d = 1 << n_qubits
                    )));
                }
                Ok(m.clone())
            }
            JumpOperator::Local { qubit, op } => {
                if *qubit >= n_qubits {
                    return Err(Error::Validation(format!(
                        "jump operator on qubit {qubit} but only {n_qubits} qubits"
                    )));
                }
                let local = match op {
                    LocalOp::SigmaMinus => linalg::sigma_minus(),
                    LocalOp::SigmaPlus => linalg::sigma_plus(),
                    LocalOp::X => linalg::pauli_x(),
                    LocalOp::Y => linalg::pauli_y(),
                    LocalOp::Z => linalg::pauli_z(),
                };
                embed(&local, *qubit, n_qubits)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JumpTerm {
    pub operator: JumpOperator,
    pub rate: f64,
}

/// `L(ρ) = -i[H, ρ] + Σ_j rate_j (L_j ρ L_j† - ½{ρ, L_j† L_j})`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LindbladSpec {
    pub hamiltonian: HamiltonianSpec,
    #[serde(default)]
    pub jumps: Vec<JumpTerm>,
}

/// Gaussian shot-to-shot noise on one Hamiltonian coefficient.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fluctuation {
    /// Index into `base.terms`.
    pub term: usize,
    /// Standard deviation of the term's coefficient.
    pub std_dev: f64,
}

/// `ρ ↦ (1/M) Σ_m e^{-iH_m t} ρ e^{iH_m t}` with independently perturbed coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FluctuationSpec {
    pub base: HamiltonianSpec,
    pub fluctuations: Vec<Fluctuation>,
    pub samples: usize,
    pub seed: u64,
    /// When set, each sample is reduced onto this qubit subset before averaging.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<usize>>,
}

impl FluctuationSpec {
    fn validate(&self) -> Result<()> {
        self.base.validate()?;
        if self.samples == 0 {
            return Err(Error::Validation(
                "fluctuation spec needs at least one sample".into(),
            ));
        }
        for f in &self.fluctuations {
            if f.term >= self.base.terms.len() {
                return Err(Error::Validation(format!(
                    "fluctuation refers to term {} but the Hamiltonian has {} terms",
                    f.term,
                    self.base.terms.len()
                )));
            }
            if !(f.std_dev >= 0.0 && f.std_dev.is_finite()) {
                return Err(Error::Validation(format!(
                    "fluctuation std_dev must be a finite non-negative number, got {}",
                    f.std_dev
                )));
            }
        }
        Ok(())
    }

    /// Coefficients of sample `m`. Each sample draws from its own ChaCha
    /// stream, so samples do not depend on evaluation order.
    fn sample_coefficients(&self, m: usize) -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(m as u64);
        let mut coeffs: Vec<f64> = self.base.terms.iter().map(|t| t.coefficient).collect();
        for f in &self.fluctuations {
            let z: f64 = StandardNormal.sample(&mut rng);
            coeffs[f.term] += f.std_dev * z;
        }
        coeffs
    }
}

/// `op` acting on `qubit` of an `n_qubits` register.
pub fn embed(op: &CMatrix, qubit: usize, n_qubits: usize) -> Result<CMatrix> {
    let left = linalg::identity(1 << qubit);
    let right = linalg::identity(1 << (n_qubits - 1 - qubit));
    linalg::kron(&linalg::kron(&left, op)?, &right)
}

fn hamiltonian_with_coefficients(spec: &HamiltonianSpec, coeffs: &[f64]) -> CMatrix {
    let n = spec.n_qubits;
    let dim = 1usize << n;
    let mut h = CMatrix::zeros(dim, dim);
    for (term, &coeff) in spec.terms.iter().zip(coeffs) {
        if coeff == 0.0 {
            continue;
        }
        // A Pauli string maps |x⟩ to phase(x)·|x ⊕ flip⟩.
        let mut flip = 0usize;
        for &(q, axis) in &term.factors {
            if axis != Axis::Z {
                flip |= 1 << (n - 1 - q);
            }
        }
        for x in 0..dim {
            let mut phase = Complex64::new(coeff, 0.0);
            for &(q, axis) in &term.factors {
                let bit = x >> (n - 1 - q) & 1;
                phase *= match (axis, bit) {
                    (Axis::X, _) => ONE,
                    (Axis::Y, 0) => I,
                    (Axis::Y, _) => -I,
                    (Axis::Z, 0) => ONE,
                    (Axis::Z, _) => -ONE,
                };
            }
            h[(x ^ flip, x)] += phase;
        }
    }
    h
}

/// Dense Hamiltonian matrix, qubit 0 most significant.
pub fn build_hamiltonian(spec: &HamiltonianSpec) -> Result<CMatrix> {
    spec.validate()?;
    let coeffs: Vec<f64> = spec.terms.iter().map(|t| t.coefficient).collect();
    Ok(hamiltonian_with_coefficients(spec, &coeffs))
}

/// `e^{-iht}` via the Hermitian eigendecomposition of `h`.
pub fn evolve_unitary(h: &CMatrix, t: f64) -> Result<CMatrix> {
    linalg::require_square(h, "Hamiltonian")?;
    let dev = linalg::hermitian_deviation(h);
    if dev > HERMITIAN_TOL {
        return Err(Error::Validation(format!(
            "Hamiltonian is not Hermitian (deviation {dev:.3e})"
        )));
    }
    Ok(linalg::expm_hermitian(h, t))
}

/// Superoperator of the Lindblad generator, acting on column-stacked `ρ`.
pub fn lindblad_generator(spec: &LindbladSpec) -> Result<SuperOperator> {
    let n = spec.hamiltonian.n_qubits;
    if n > MAX_SUPEROP_QUBITS {
        return Err(Error::Size {
            dim: 1 << (2 * n),
            max: 1 << (2 * MAX_SUPEROP_QUBITS),
        });
    }
    let h = build_hamiltonian(&spec.hamiltonian)?;
    let d = 1usize << n;
    let one = linalg::identity(d);
    let kron = |a: &CMatrix, b: &CMatrix| a.kronecker(b);

    // vec(AXB) = (Bᵀ ⊗ A) vec(X)
    let mut gen = (kron(&one, &h) - kron(&h.transpose(), &one)) * (-I);
    for jump in &spec.jumps {
        if !(jump.rate >= 0.0 && jump.rate.is_finite()) {
            return Err(Error::Validation(format!(
                "jump rate must be finite and non-negative, got {}",
                jump.rate
            )));
        }
        let l = jump.operator.to_matrix(n)?;
        let ldl = l.ad_mul(&l);
        let term = kron(&l.conjugate(), &l)
            - (kron(&one, &ldl) + kron(&ldl.transpose(), &one)) * linalg::real(0.5);
        gen += term * linalg::real(jump.rate);
    }
    SuperOperator::new(gen)
}

/// Choi matrix of `exp(t·gen)`.
pub fn lindblad_channel(gen: &SuperOperator, t: f64) -> Result<ChoiMatrix> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Validation(format!(
            "evolution time must be non-negative, got {t}"
        )));
    }
    let prop = linalg::expm(&(gen.as_matrix() * linalg::real(t)))?;
    Ok(superop_to_choi(&SuperOperator::new(prop)?))
}

/// Single-qubit decay from `|1⟩` to `|0⟩` at rate `gamma1` with coherence
/// decay rate `gamma2`.
pub fn bloch_redfield_choi(gamma1: f64, gamma2: f64, t: f64) -> ChoiMatrix {
    if gamma2 < gamma1 / 2.0 {
        warn!("Bloch-Redfield rates violate gamma2 >= gamma1/2; the channel may not be CP");
    }
    let p = (-gamma1 * t).exp();
    let coh = linalg::real((-gamma2 * t).exp());
    let mut m = CMatrix::zeros(4, 4);
    m[(0, 0)] = ONE;
    m[(2, 2)] = linalg::real(1.0 - p);
    m[(3, 3)] = linalg::real(p);
    m[(0, 3)] = coh;
    m[(3, 0)] = coh;
    ChoiMatrix::new(m).expect("4x4")
}

/// Dephasing averaged over a Gaussian-distributed level splitting:
/// coherences pick up `e^{∓iω₀t − σ²t²}`.
pub fn gaussian_dephasing_choi(omega0: f64, sigma: f64, t: f64) -> ChoiMatrix {
    let corner = Complex64::from_polar((-sigma * sigma * t * t).exp(), -omega0 * t);
    let mut m = CMatrix::zeros(4, 4);
    m[(0, 0)] = ONE;
    m[(3, 3)] = ONE;
    m[(0, 3)] = corner;
    m[(3, 0)] = corner.conj();
    ChoiMatrix::new(m).expect("4x4")
}

fn unitary_channel(
    u: &CMatrix,
    n_qubits: usize,
    subset: Option<&SubsetSelector>,
) -> Result<ChoiMatrix> {
    match subset {
        Some(s) => channel::reduced_choi(u, n_qubits, s),
        None => {
            if n_qubits > MAX_SUPEROP_QUBITS {
                return Err(Error::Size {
                    dim: 1 << (2 * n_qubits),
                    max: 1 << (2 * MAX_SUPEROP_QUBITS),
                });
            }
            channel::choi_of_unitary(u)
        }
    }
}

/// Average of unitary channels over `spec.samples` Gaussian draws of the
/// fluctuating coefficients. Bitwise reproducible for a fixed seed,
/// independent of the thread count.
pub fn fluctuating_channel(spec: &FluctuationSpec, t: f64) -> Result<ChoiMatrix> {
    spec.validate()?;
    let n = spec.base.n_qubits;
    let subset = spec
        .subset
        .as_deref()
        .map(|idx| SubsetSelector::new(n, idx))
        .transpose()?;

    if spec.fluctuations.iter().all(|f| f.std_dev == 0.0) {
        let u = evolve_unitary(&build_hamiltonian(&spec.base)?, t)?;
        return unitary_channel(&u, n, subset.as_ref());
    }

    let sample = |m: usize| -> Result<ChoiMatrix> {
        let h = hamiltonian_with_coefficients(&spec.base, &spec.sample_coefficients(m));
        let u = linalg::expm_hermitian(&h, t);
        unitary_channel(&u, n, subset.as_ref())
    };
    // Surface size and shape errors before the parallel sum.
    let first = sample(0)?;
    let size = first.as_matrix().nrows();
    let total = channel::ordered_parallel_sum(spec.samples, CMatrix::zeros(size, size), |m| {
        if m == 0 {
            first.as_matrix().clone()
        } else {
            sample(m).expect("validated above").into_matrix()
        }
    });
    ChoiMatrix::new(total * linalg::real(1.0 / spec.samples as f64))
}

/// `e^{-i(H₀ + δH)t}`.
pub fn systematic_perturbation(
    h0: &HamiltonianSpec,
    delta: &HamiltonianSpec,
    t: f64,
) -> Result<CMatrix> {
    if h0.n_qubits != delta.n_qubits {
        return Err(Error::Shape(format!(
            "perturbation acts on {} qubits, Hamiltonian on {}",
            delta.n_qubits, h0.n_qubits
        )));
    }
    let h = build_hamiltonian(h0)? + build_hamiltonian(delta)?;
    evolve_unitary(&h, t)
}

/// Process description used to generate a [`ChannelTrajectory`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChannelBuilder {
    Lindblad(LindbladSpec),
    Fluctuation(FluctuationSpec),
    Unitary {
        hamiltonian: HamiltonianSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        subset: Option<Vec<usize>>,
    },
    BlochRedfield {
        gamma1: f64,
        gamma2: f64,
    },
    GaussianDephasing {
        omega0: f64,
        sigma: f64,
    },
}

impl ChannelBuilder {
    /// Evaluates the channel at one time.
    pub fn channel_at(&self, t: f64) -> Result<ChoiMatrix> {
        match self {
            ChannelBuilder::Lindblad(spec) => lindblad_channel(&lindblad_generator(spec)?, t),
            ChannelBuilder::Fluctuation(spec) => fluctuating_channel(spec, t),
            ChannelBuilder::Unitary {
                hamiltonian,
                subset,
            } => {
                let n = hamiltonian.n_qubits;
                let u = evolve_unitary(&build_hamiltonian(hamiltonian)?, t)?;
                let s = subset
                    .as_deref()
                    .map(|idx| SubsetSelector::new(n, idx))
                    .transpose()?;
                unitary_channel(&u, n, s.as_ref())
            }
            ChannelBuilder::BlochRedfield { gamma1, gamma2 } => {
                Ok(bloch_redfield_choi(*gamma1, *gamma2, t))
            }
            ChannelBuilder::GaussianDephasing { omega0, sigma } => {
                Ok(gaussian_dephasing_choi(*omega0, *sigma, t))
            }
        }
    }
}

/// Channels of `builder` on a time grid that starts at 0 and strictly increases.
pub fn trajectory(builder: &ChannelBuilder, times: &[f64]) -> Result<ChannelTrajectory> {
    if times.first() != Some(&0.0) {
        return Err(Error::Validation("time grid must start at 0".into()));
    }
    if times
        .windows(2)
        .any(|w| w[1].partial_cmp(&w[0]) != Some(std::cmp::Ordering::Greater))
        || times.iter().any(|t| !t.is_finite())
    {
        return Err(Error::Validation(
            "time grid must be finite and strictly increasing".into(),
        ));
    }
    let samples = match builder {
        // Exponentiate a single generator for the whole grid.
        ChannelBuilder::Lindblad(spec) => {
            let gen = lindblad_generator(spec)?;
            times
                .iter()
                .map(|&t| lindblad_channel(&gen, t).map(|c| (t, c)))
                .collect::<Result<Vec<_>>>()?
        }
        _ => times
            .iter()
            .map(|&t| builder.channel_at(t).map(|c| (t, c)))
            .collect::<Result<Vec<_>>>()?,
    };
    ChannelTrajectory::new(samples)
}
