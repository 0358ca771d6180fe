//! Entanglement functionals and the foliation they induce.
//!
//! For two qubits everything hangs off the concurrence
//! `c = 2 |a00 a11 - a01 a10|`: it fixes the reduced-density determinant
//! (`det = c^2 / 4`), the radius `sqrt(1 - c^2)` of the shell the base point
//! sits on, and the leaf of the foliation (separable boundary, generic
//! leaves, maximally entangled core).
//!
//! For three qubits the same role is shared by six generalized concurrences
//! `T_ij,kl = t_i t_j - t_k t_l` together with the partial Bloch radii of
//! the three single-qubit reductions.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hopf::{hopf_s7, BasePoint};
use crate::states::{Grouping, PureState};
use crate::tol;

/// Single-qubit density matrix, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix2 {
    m: [[Complex64; 2]; 2],
}

impl DensityMatrix2 {
    /// Accepts a matrix that is hermitian within 1e-12, has unit trace
    /// within [`tol::UNIT_NORM_TOL`] and eigenvalues at or above
    /// `-`[`tol::EIGENVALUE_SLACK`].
    pub fn new(m: [[Complex64; 2]; 2]) -> Result<Self> {
        let herm = (m[0][1] - m[1][0].conj()).norm().max(m[0][0].im.abs()).max(m[1][1].im.abs());
        if herm > 1e-12 {
            return Err(Error::InvalidDensityMatrix);
        }
        let trace = m[0][0].re + m[1][1].re;
        if (trace - 1.0).abs() > tol::UNIT_NORM_TOL {
            return Err(Error::InvalidDensityMatrix);
        }
        let rho = DensityMatrix2 { m };
        let (lo, _) = rho.eigenvalues();
        if lo < -tol::EIGENVALUE_SLACK {
            return Err(Error::InvalidDensityMatrix);
        }
        Ok(rho)
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.m[row][col]
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0].re + self.m[1][1].re
    }

    /// Real determinant of the hermitian matrix.
    pub fn det(&self) -> f64 {
        self.m[0][0].re * self.m[1][1].re - self.m[0][1].norm_sqr()
    }

    /// Eigenvalues in ascending order; always real for a hermitian matrix.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let half_tr = 0.5 * self.trace();
        let disc = (half_tr * half_tr - self.det()).max(0.0);
        let r = libm::sqrt(disc);
        (half_tr - r, half_tr + r)
    }

    /// Bloch vector ordered `(z, x, y)` to match the base coordinates.
    pub fn bloch_vector(&self) -> [f64; 3] {
        [
            self.m[0][0].re - self.m[1][1].re,
            2.0 * self.m[0][1].re,
            -2.0 * self.m[0][1].im,
        ]
    }

    /// Euclidean length of the Bloch vector; 1 on pure states, 0 at the
    /// maximally mixed center.
    pub fn bloch_radius(&self) -> f64 {
        let b = self.bloch_vector();
        libm::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2])
    }
}

/// Concurrence `2 |a00 a11 - a01 a10|` of a 2-qubit state, clamped to
/// `[0, 1]`.
///
/// On a normalized state the raw value cannot exceed 1 by more than float
/// noise; drifting past the consistency slack indicates a corrupted state
/// and panics.
pub fn concurrence(state: &PureState) -> Result<f64> {
    if state.n_qubits() != 2 {
        return Err(Error::QubitCount {
            expected: 2,
            found: state.n_qubits(),
        });
    }
    let a = state.amplitudes();
    let raw = 2.0 * (a[0] * a[3] - a[1] * a[2]).norm();
    assert!(
        raw <= 1.0 + tol::CONSISTENCY_SLACK,
        "concurrence {raw} exceeds 1 past the consistency slack"
    );
    Ok(raw.min(1.0))
}

fn insert_bit(rest: usize, bit: usize, value: usize) -> usize {
    let low = rest & ((1 << bit) - 1);
    let high = rest >> bit;
    (high << (bit + 1)) | (value << bit) | low
}

/// Reduced density matrix of one qubit (1-based index, qubit 1 is the most
/// significant), obtained by tracing out all others.
pub fn reduced_density(state: &PureState, qubit: usize) -> Result<DensityMatrix2> {
    let n = state.n_qubits();
    if qubit == 0 || qubit > n {
        return Err(Error::QubitIndex {
            index: qubit,
            n_qubits: n,
        });
    }
    let bit = n - qubit;
    let amps = state.amplitudes();
    let mut m = [[Complex64::new(0.0, 0.0); 2]; 2];
    for rest in 0..(1usize << (n - 1)) {
        for (row, mrow) in m.iter_mut().enumerate() {
            for (col, entry) in mrow.iter_mut().enumerate() {
                *entry += amps[insert_bit(rest, bit, row)]
                    * amps[insert_bit(rest, bit, col)].conj();
            }
        }
    }
    DensityMatrix2::new(m)
}

/// The six bilinears `T_ij,kl = t_i t_j - t_k t_l` of a 3-qubit state, in
/// the fixed order (05,14), (27,36), (06,24), (35,17), (16,25), (07,34).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedConcurrences {
    pub t05_14: Complex64,
    pub t27_36: Complex64,
    pub t06_24: Complex64,
    pub t35_17: Complex64,
    pub t16_25: Complex64,
    pub t07_34: Complex64,
}

impl GeneralizedConcurrences {
    /// The six values in the fixed documentation order.
    pub fn as_array(&self) -> [Complex64; 6] {
        [
            self.t05_14, self.t27_36, self.t06_24, self.t35_17, self.t16_25, self.t07_34,
        ]
    }
}

/// Computes the six generalized concurrences of a 3-qubit state.
pub fn generalized_concurrences(state: &PureState) -> Result<GeneralizedConcurrences> {
    if state.n_qubits() != 3 {
        return Err(Error::QubitCount {
            expected: 3,
            found: state.n_qubits(),
        });
    }
    let t = state.amplitudes();
    let pair = |i: usize, j: usize, k: usize, l: usize| t[i] * t[j] - t[k] * t[l];
    Ok(GeneralizedConcurrences {
        t05_14: pair(0, 5, 1, 4),
        t27_36: pair(2, 7, 3, 6),
        t06_24: pair(0, 6, 2, 4),
        t35_17: pair(3, 5, 1, 7),
        t16_25: pair(1, 6, 2, 5),
        t07_34: pair(0, 7, 3, 4),
    })
}

/// Bloch radii of the three single-qubit reductions of a 3-qubit state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochRadii {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
    pub average: f64,
}

impl BlochRadii {
    pub fn as_array(&self) -> [f64; 3] {
        [self.r1, self.r2, self.r3]
    }
}

/// Partial Bloch radii `(r1, r2, r3)` and their average. The average is a
/// convenient scalar entanglement witness: 1 on product states, 0 on
/// GHZ-like states.
pub fn partial_bloch_radii(state: &PureState) -> Result<BlochRadii> {
    if state.n_qubits() != 3 {
        return Err(Error::QubitCount {
            expected: 3,
            found: state.n_qubits(),
        });
    }
    let r1 = reduced_density(state, 1)?.bloch_radius();
    let r2 = reduced_density(state, 2)?.bloch_radius();
    let r3 = reduced_density(state, 3)?.bloch_radius();
    Ok(BlochRadii {
        r1,
        r2,
        r3,
        average: (r1 + r2 + r3) / 3.0,
    })
}

/// Leaf of the 2-qubit foliation by concurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeafLabel {
    /// `c = 0`: product states, the leaf is S2 x S2.
    Separable,
    /// `0 < c < 1`: generic leaf, S2 x SO(3).
    Intermediate,
    /// `c = 1`: maximally entangled states, a single SO(3).
    MaximallyEntangled,
}

impl LeafLabel {
    /// Stable wire label used by file formats.
    pub fn as_str(&self) -> &'static str {
        match self {
            LeafLabel::Separable => "SEPARABLE_S2xS2",
            LeafLabel::Intermediate => "INTERMEDIATE_S2xSO3",
            LeafLabel::MaximallyEntangled => "MES_SO3",
        }
    }
}

impl core::fmt::Display for LeafLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a 2-qubit state sits in the concurrence foliation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeafDescriptor {
    pub concurrence: f64,
    /// Radius `sqrt(1 - c^2)` of the shell carrying the first three base
    /// coordinates.
    pub shell_radius: f64,
    pub label: LeafLabel,
}

/// Classifies a 2-qubit state into its foliation leaf. `tol` is the width
/// of the boundary bands: `c <= tol` is separable, `c >= 1 - tol` maximally
/// entangled.
pub fn classify_leaf(state: &PureState, tol: f64) -> Result<LeafDescriptor> {
    let c = concurrence(state)?;
    let shell_radius = libm::sqrt((1.0 - c * c).max(0.0));
    let label = if c <= tol {
        LeafLabel::Separable
    } else if c >= 1.0 - tol {
        LeafLabel::MaximallyEntangled
    } else {
        LeafLabel::Intermediate
    };
    Ok(LeafDescriptor {
        concurrence: c,
        shell_radius,
        label,
    })
}

/// Whether the state is a product across the cut `{qubit | rest}` within
/// `tol`. For two qubits this tests `|a00 a11 - a01 a10| < tol`; for three,
/// `|r_qubit - 1| < tol`.
pub fn separability_check(state: &PureState, qubit: usize, tol: f64) -> Result<bool> {
    let n = state.n_qubits();
    if qubit == 0 || qubit > n {
        return Err(Error::QubitIndex {
            index: qubit,
            n_qubits: n,
        });
    }
    match n {
        2 => {
            let a = state.amplitudes();
            Ok((a[0] * a[3] - a[1] * a[2]).norm() < tol)
        }
        3 => {
            let radii = partial_bloch_radii(state)?.as_array();
            Ok((radii[qubit - 1] - 1.0).abs() < tol)
        }
        _ => Err(Error::UnsupportedQubitCount { found: n }),
    }
}

/// Shell radius read off the base point instead of the amplitudes:
/// `sqrt(x0^2 + x1^2 + x2^2)`. Cross-check partner of
/// [`LeafDescriptor::shell_radius`].
pub fn shell_radius_from_base(state: &PureState) -> Result<f64> {
    let base: BasePoint = hopf_s7(state, Grouping::Standard)?;
    Ok(libm::sqrt(
        base.coord(0) * base.coord(0) + base.coord(1) * base.coord(1) + base.coord(2) * base.coord(2),
    ))
}
