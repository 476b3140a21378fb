// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

//! Seeded random matrices, states and channels for tests and empirical studies.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::channel::{choi_from_kraus, ChoiMatrix, DensityMatrix};
use crate::linalg::{self, c, CMatrix};

/// Ginibre matrix with i.i.d. standard complex Gaussian entries.
pub fn random_matrix<R: Rng + ?Sized>(d: usize, rng: &mut R) -> CMatrix {
    CMatrix::from_fn(d, d, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        c(re, im) * std::f64::consts::FRAC_1_SQRT_2
    })
}

/// Haar-distributed unitary from the QR decomposition of a Ginibre matrix,
/// with the phases of `R`'s diagonal absorbed into `Q`.
pub fn haar_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> CMatrix {
    let qr = random_matrix(d, rng).qr();
    let (q, r) = (qr.q(), qr.r());
    CMatrix::from_fn(d, d, |row, col| {
        let diag = r[(col, col)];
        let phase = if diag.norm() > 0.0 {
            diag / diag.norm()
        } else {
            linalg::ONE
        };
        q[(row, col)] * phase
    })
}

/// Random Hermitian matrix from the Gaussian unitary ensemble.
pub fn random_hermitian<R: Rng + ?Sized>(d: usize, rng: &mut R) -> CMatrix {
    let g = random_matrix(d, rng);
    (&g + g.adjoint()) * linalg::real(0.5)
}

/// Random full-rank mixed state `G G† / Tr(G G†)`.
pub fn random_density_matrix<R: Rng + ?Sized>(d: usize, rng: &mut R) -> DensityMatrix {
    let g = random_matrix(d, rng);
    let p = &g * g.adjoint();
    let tr = linalg::trace(&p).re;
    DensityMatrix::new(p * linalg::real(1.0 / tr), 1e-9).expect("Wishart state is valid")
}

/// Random CPTP channel with `kraus_rank` Kraus operators taken from the
/// blocks of a Haar isometry.
pub fn random_channel<R: Rng + ?Sized>(d: usize, kraus_rank: usize, rng: &mut R) -> ChoiMatrix {
    let u = haar_unitary(d * kraus_rank, rng);
    let kraus: Vec<CMatrix> = (0..kraus_rank)
        .map(|a| u.view((a * d, 0), (d, d)).into_owned())
        .collect();
    choi_from_kraus(&kraus).expect("Kraus blocks are square")
}

/// Random convex mixture of `count` unitary channels: CPTP and unital.
pub fn random_mixed_unitary_channel<R: Rng + ?Sized>(
    d: usize,
    count: usize,
    rng: &mut R,
) -> ChoiMatrix {
    let weights: Vec<f64> = (0..count).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    let n = d * d;
    let mut mat = CMatrix::zeros(n, n);
    for w in weights {
        let u = haar_unitary(d, rng);
        let cu = crate::channel::choi_of_unitary(&u).expect("Haar sample is unitary");
        mat += cu.as_matrix() * linalg::real(w / total);
    }
    ChoiMatrix::new(mat).expect("square")
}
