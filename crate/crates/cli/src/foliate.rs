//! Haar sampling of entanglement coordinates: concurrence and leaf label
//! for two qubits, partial Bloch radii for three.
//!
//! Every row is generated from its own seed, derived from the run seed and
//! the row index by a splitmix step. Rows therefore do not depend on
//! generation order and a parallel run would produce identical output.

use hopfq_core::{classify_leaf, partial_bloch_radii, PureState};
use serde::{Deserialize, Serialize};

use crate::Result;

/// Seed for row `index` of a run seeded with `seed`: splitmix64 finalizer
/// applied to `seed + (index + 1) * golden`, the standard stream split.
pub fn item_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add((index + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Two-qubit row: where the state sits in the foliation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Row2 {
    pub concurrence: f64,
    pub label: String,
}

/// Three-qubit row: the partial Bloch radii and their average, one point
/// of the unit cube.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Row3 {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
    pub average: f64,
}

/// Haar-samples `count` two-qubit states, classifying each at `tol`.
pub fn foliate_two_qubits(count: usize, seed: u64, tol: f64) -> Result<Vec<Row2>> {
    let mut rows = Vec::with_capacity(count);
    for index in 0..count {
        let state = PureState::random(2, item_seed(seed, index as u64))?;
        let leaf = classify_leaf(&state, tol)?;
        rows.push(Row2 {
            concurrence: leaf.concurrence,
            label: leaf.label.as_str().to_owned(),
        });
    }
    Ok(rows)
}

/// Haar-samples `count` three-qubit states and records their radii.
pub fn foliate_three_qubits(count: usize, seed: u64) -> Result<Vec<Row3>> {
    let mut rows = Vec::with_capacity(count);
    for index in 0..count {
        let state = PureState::random(3, item_seed(seed, index as u64))?;
        let radii = partial_bloch_radii(&state)?;
        rows.push(Row3 {
            r1: radii.r1,
            r2: radii.r2,
            r3: radii.r3,
            average: radii.average,
        });
    }
    Ok(rows)
}

/// CSV with header `concurrence,label`.
pub fn two_qubit_csv(rows: &[Row2]) -> String {
    let mut out = String::from("concurrence,label\n");
    for row in rows {
        out.push_str(&format!("{},{}\n", row.concurrence, row.label));
    }
    out
}

/// CSV with header `r1,r2,r3,avg`.
pub fn three_qubit_csv(rows: &[Row3]) -> String {
    let mut out = String::from("r1,r2,r3,avg\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.r1, row.r2, row.r3, row.average
        ));
    }
    out
}
