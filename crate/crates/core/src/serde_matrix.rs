// Copyright 2026 The qcbench Authors
// SPDX-License-Identifier: Apache-2.0

//! Serde adapter for complex matrices stored as row-major nested arrays of
//! `[re, im]` pairs. Use with `#[serde(with = "qcbench_core::serde_matrix")]`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::{c, CMatrix};

pub fn to_rows(m: &CMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|r| {
            (0..m.ncols())
                .map(|col| [m[(r, col)].re, m[(r, col)].im])
                .collect()
        })
        .collect()
}

pub fn from_rows(rows: &[Vec<[f64; 2]>]) -> Result<CMatrix, String> {
    let n = rows.len();
    if n == 0 {
        return Err("matrix has no rows".into());
    }
    if let Some((r, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != n) {
        return Err(format!(
            "row {r} has {} entries, expected {n} (matrix must be square)",
            row.len()
        ));
    }
    Ok(CMatrix::from_fn(n, n, |r, col| {
        let [re, im] = rows[r][col];
        c(re, im)
    }))
}

pub fn serialize<S: Serializer>(m: &CMatrix, s: S) -> Result<S::Ok, S::Error> {
    to_rows(m).serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<CMatrix, D::Error> {
    let rows = Vec::<Vec<[f64; 2]>>::deserialize(d)?;
    from_rows(&rows).map_err(D::Error::custom)
}
