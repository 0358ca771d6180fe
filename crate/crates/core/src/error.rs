//! Error type shared by all modules.

use core::fmt;

/// Everything that can go wrong when validating inputs to the fibration maps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// Inversion of a zero quaternion, octonion or amplitude vector.
    ZeroDivisor,
    /// A value that must sit on a unit sphere does not; carries the squared
    /// norm that was found.
    NotUnitNorm { norm_sqr: f64 },
    /// A state with the wrong number of qubits was passed to a map.
    QubitCount { expected: usize, found: usize },
    /// No construction for this qubit count at this call site.
    UnsupportedQubitCount { found: usize },
    /// A 2x2 matrix failed the density-matrix checks (hermiticity, unit
    /// trace, positive semidefiniteness).
    InvalidDensityMatrix,
    /// Amplitude vector length does not match 2^n.
    AmplitudeCount { expected: usize, found: usize },
    /// The requested construction is singular at a pole of the base sphere.
    AtPole,
    /// Path parameter outside [0, pi/2].
    EpsilonOutOfRange { value: f64 },
    /// Qubit index outside 1..=n.
    QubitIndex { index: usize, n_qubits: usize },
    /// Two states of different qubit counts where equal counts are required.
    DimensionMismatch { left: usize, right: usize },
    /// A base point whose coordinate count is not 3, 5 or 9, or a base of a
    /// dimension the called map does not handle.
    BaseDimension { found: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDivisor => write!(f, "division by a zero element"),
            Error::NotUnitNorm { norm_sqr } => {
                write!(f, "expected unit norm, got squared norm {norm_sqr}")
            }
            Error::QubitCount { expected, found } => {
                write!(f, "expected a {expected}-qubit state, got {found} qubits")
            }
            Error::UnsupportedQubitCount { found } => {
                write!(f, "no supported construction for qubit count {found}")
            }
            Error::InvalidDensityMatrix => {
                write!(f, "matrix is not a valid single-qubit density matrix")
            }
            Error::AmplitudeCount { expected, found } => {
                write!(f, "expected {expected} amplitudes, got {found}")
            }
            Error::AtPole => write!(f, "construction is singular at a pole of the base"),
            Error::EpsilonOutOfRange { value } => {
                write!(f, "path parameter {value} outside [0, pi/2]")
            }
            Error::QubitIndex { index, n_qubits } => {
                write!(f, "qubit index {index} out of range for {n_qubits} qubits")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "qubit counts differ: {left} vs {right}")
            }
            Error::BaseDimension { found } => {
                write!(f, "base point with {found} coordinates not usable here")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
