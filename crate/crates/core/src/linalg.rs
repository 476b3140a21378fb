// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

//! Dense complex matrix helpers shared by every other module.
//!
//! All matrices are `nalgebra::DMatrix<Complex64>`. Multi-qubit operators use
//! big-endian qubit order: qubit 0 is the most significant Kronecker factor.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Generic dense complex square matrix.
pub type CMatrix = DMatrix<Complex64>;

/// Largest matrix dimension produced by [`kron`] unless a caller asks otherwise.
pub const DEFAULT_MAX_DIM: usize = 1 << 12;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[inline]
pub fn real(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

pub fn pauli_x() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO])
}

pub fn pauli_y() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[ZERO, -I, I, ZERO])
}

pub fn pauli_z() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, -ONE])
}

/// Lowering operator with `σ⁻|1⟩ = |0⟩`.
pub fn sigma_minus() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[ZERO, ONE, ZERO, ZERO])
}

/// Raising operator with `σ⁺|0⟩ = |1⟩`.
pub fn sigma_plus() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[ZERO, ZERO, ONE, ZERO])
}

pub fn dagger(m: &CMatrix) -> CMatrix {
    m.adjoint()
}

/// Kronecker product `a ⊗ b` with `a` as the most significant factor.
pub fn kron(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    kron_with_max(a, b, DEFAULT_MAX_DIM)
}

pub fn kron_with_max(a: &CMatrix, b: &CMatrix, max_dim: usize) -> Result<CMatrix> {
    let rows = a.nrows().saturating_mul(b.nrows());
    let cols = a.ncols().saturating_mul(b.ncols());
    let dim = rows.max(cols);
    if dim > max_dim {
        return Err(Error::Size { dim, max: max_dim });
    }
    Ok(a.kronecker(b))
}

/// Number of qubits `n` such that `2^n == dim`, if any.
pub fn qubit_count(dim: usize) -> Option<usize> {
    if dim.is_power_of_two() {
        Some(dim.trailing_zeros() as usize)
    } else {
        None
    }
}

pub fn require_square(m: &CMatrix, what: &str) -> Result<usize> {
    if m.nrows() != m.ncols() || m.nrows() == 0 {
        return Err(Error::Shape(format!(
            "{what} must be a non-empty square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(m.nrows())
}

/// Schatten-2 (Frobenius) norm.
pub fn frobenius(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "max_abs_diff shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Largest entrywise deviation from Hermiticity.
pub fn hermitian_deviation(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for r in 0..n {
        for c in r..n {
            worst = worst.max((m[(r, c)] - m[(c, r)].conj()).norm());
        }
    }
    worst
}

pub fn is_hermitian(m: &CMatrix, tol: f64) -> bool {
    m.is_square() && hermitian_deviation(m) <= tol
}

/// Largest entrywise deviation of `u†u` from the identity.
pub fn unitarity_deviation(u: &CMatrix) -> f64 {
    let n = u.nrows();
    max_abs_diff(&u.ad_mul(u), &identity(n))
}

pub fn trace(m: &CMatrix) -> Complex64 {
    m.diagonal().iter().sum()
}

/// Spectral decomposition of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct Eigh {
    /// Eigenvalues in ascending order.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors, one column per eigenvalue.
    pub vectors: CMatrix,
}

/// Hermitian eigendecomposition with ascending eigenvalues.
///
/// The input is symmetrized as `(m + m†)/2` first, so small anti-Hermitian
/// noise is discarded rather than fed to the solver.
pub fn eigh(m: &CMatrix) -> Eigh {
    let sym = (m + m.adjoint()) * real(0.5);
    let eig = SymmetricEigen::new(sym);
    let n = eig.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = CMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    Eigh { values, vectors }
}

pub fn eigvalsh(m: &CMatrix) -> Vec<f64> {
    eigh(m).values
}

/// Singular values in descending order.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    let mut sv: Vec<f64> = m.clone().singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Number of singular values above `rel_tol · σ_max`. Zero for an all-zero matrix.
pub fn numerical_rank(m: &CMatrix, rel_tol: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = singular_values(m);
    let top = sv.first().copied().unwrap_or(0.0);
    if top == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > rel_tol * top).count()
}

/// Matrix exponential by scaling and squaring with a Padé approximant.
pub fn expm(m: &CMatrix) -> Result<CMatrix> {
    require_square(m, "matrix exponential input")?;
    let out = m.clone().exp();
    if out.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(out)
    } else {
        Err(Error::Numeric("matrix exponential did not converge".into()))
    }
}

/// `exp(-i·h·t)` for Hermitian `h`, via its eigendecomposition.
pub fn expm_hermitian(h: &CMatrix, t: f64) -> CMatrix {
    let eig = eigh(h);
    let phases = DVector::from_iterator(
        eig.values.len(),
        eig.values
            .iter()
            .map(|&l| Complex64::from_polar(1.0, -l * t)),
    );
    let v = &eig.vectors;
    let scaled = CMatrix::from_fn(v.nrows(), v.ncols(), |r, c| v[(r, c)] * phases[c]);
    scaled * v.adjoint()
}

/// Column-major flattening: `vec(m)[r + c·n] = m[r][c]`.
pub fn vectorize(m: &CMatrix) -> DVector<Complex64> {
    DVector::from_column_slice(m.as_slice())
}

pub fn unvectorize(v: &DVector<Complex64>, n: usize) -> CMatrix {
    CMatrix::from_column_slice(n, n, v.as_slice())
}
