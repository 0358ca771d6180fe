//! Pure states of 1 to 3 qubits and their algebra encodings.
//!
//! Amplitudes are stored in lexicographic basis order with qubit 1 as the
//! most significant bit: `|00>, |01>, |10>, |11>` for two qubits.
//!
//! A normalized 2-qubit state is a pair of quaternions, a 3-qubit state a
//! pair of octonions; both encodings are exactly invertible component
//! shuffles (with one conjugation in the octonion case), so encode/decode
//! round-trips reproduce input amplitudes bit for bit.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::algebra::{Octonion, Quaternion};
use crate::error::{Error, Result};
use crate::tol;

/// Which amplitudes share a quaternion in the 2-qubit encoding.
///
/// `Standard` groups by the first qubit: `q1 = a00 + a01 j`,
/// `q2 = a10 + a11 j`. `Alternate` groups by the second:
/// `q1 = a00 + a10 j`, `q2 = a01 + a11 j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grouping {
    Standard,
    Alternate,
}

/// Normalized pure state of `n_qubits` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Validates the qubit count, the amplitude count and unit norm
    /// (within [`tol::UNIT_NORM_TOL`]).
    pub fn new(n_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if !(1..=3).contains(&n_qubits) {
            return Err(Error::UnsupportedQubitCount { found: n_qubits });
        }
        let expected = 1usize << n_qubits;
        if amplitudes.len() != expected {
            return Err(Error::AmplitudeCount {
                expected,
                found: amplitudes.len(),
            });
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > tol::UNIT_NORM_TOL {
            return Err(Error::NotUnitNorm { norm_sqr });
        }
        Ok(PureState { n_qubits, amplitudes })
    }

    /// Like [`PureState::new`] but scales the amplitudes to unit norm first.
    /// The zero vector stays an error.
    pub fn renormalized(n_qubits: usize, mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if norm_sqr == 0.0 {
            return Err(Error::ZeroDivisor);
        }
        let inv = 1.0 / libm::sqrt(norm_sqr);
        for a in &mut amplitudes {
            *a *= inv;
        }
        PureState::new(n_qubits, amplitudes)
    }

    /// Computational basis state `|index>`.
    pub fn basis_state(n_qubits: usize, index: usize) -> Result<Self> {
        if !(1..=3).contains(&n_qubits) {
            return Err(Error::UnsupportedQubitCount { found: n_qubits });
        }
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::AmplitudeCount {
                expected: dim,
                found: index,
            });
        }
        let mut amplitudes = alloc::vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(PureState { n_qubits, amplitudes })
    }

    /// Haar-uniform random state.
    ///
    /// Deterministic scheme, part of the output contract: a ChaCha8 stream
    /// seeded with `seed_from_u64(seed)` supplies `2 * 2^n` standard normals
    /// in amplitude order (real part then imaginary part), and the vector is
    /// normalized. Rotation invariance of the normal cloud gives the Haar
    /// distribution on the sphere.
    pub fn random(n_qubits: usize, seed: u64) -> Result<Self> {
        if !(1..=3).contains(&n_qubits) {
            return Err(Error::UnsupportedQubitCount { found: n_qubits });
        }
        let dim = 1usize << n_qubits;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let mut amplitudes = Vec::with_capacity(dim);
            for _ in 0..dim {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                amplitudes.push(Complex64::new(re, im));
            }
            let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
            // A zero draw is astronomically unlikely; redraw keeps the
            // function total without disturbing the distribution.
            if norm_sqr > 1e-12 {
                let inv = 1.0 / libm::sqrt(norm_sqr);
                for a in &mut amplitudes {
                    *a *= inv;
                }
                return Ok(PureState { n_qubits, amplitudes });
            }
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, l: usize) -> Complex64 {
        self.amplitudes[l]
    }

    /// `<self|other>`; errors when the qubit counts differ.
    pub fn inner_product(&self, other: &PureState) -> Result<Complex64> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::DimensionMismatch {
                left: self.n_qubits,
                right: other.n_qubits,
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Tensor product with `other` appended as the least significant qubits.
    pub fn tensor(&self, other: &PureState) -> Result<PureState> {
        let n = self.n_qubits + other.n_qubits;
        if n > 3 {
            return Err(Error::UnsupportedQubitCount { found: n });
        }
        let mut amplitudes = Vec::with_capacity(1 << n);
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        Ok(PureState { n_qubits: n, amplitudes })
    }

    /// The state multiplied by the global phase `exp(i omega)`.
    pub fn with_global_phase(&self, omega: f64) -> PureState {
        let phase = Complex64::new(libm::cos(omega), libm::sin(omega));
        PureState {
            n_qubits: self.n_qubits,
            amplitudes: self.amplitudes.iter().map(|a| a * phase).collect(),
        }
    }
}

/// Quaternion encoding of a 2-qubit state; `|q1|^2 + |q2|^2 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuaternionPair {
    pub q1: Quaternion,
    pub q2: Quaternion,
    pub grouping: Grouping,
}

impl QuaternionPair {
    /// Validates the unit-norm invariant.
    pub fn new(q1: Quaternion, q2: Quaternion, grouping: Grouping) -> Result<Self> {
        let norm_sqr = q1.norm_sqr() + q2.norm_sqr();
        if (norm_sqr - 1.0).abs() > tol::UNIT_NORM_TOL {
            return Err(Error::NotUnitNorm { norm_sqr });
        }
        Ok(QuaternionPair { q1, q2, grouping })
    }
}

/// Octonion encoding of a 3-qubit state; `|a|^2 + |b|^2 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OctonionPair {
    pub a: Octonion,
    pub b: Octonion,
}

impl OctonionPair {
    /// Validates the unit-norm invariant.
    pub fn new(a: Octonion, b: Octonion) -> Result<Self> {
        let norm_sqr = a.norm_sqr() + b.norm_sqr();
        if (norm_sqr - 1.0).abs() > tol::UNIT_NORM_TOL {
            return Err(Error::NotUnitNorm { norm_sqr });
        }
        Ok(OctonionPair { a, b })
    }
}

/// Packs a 2-qubit state into two quaternions under the given grouping.
pub fn encode_two_qubit(state: &PureState, grouping: Grouping) -> Result<QuaternionPair> {
    if state.n_qubits() != 2 {
        return Err(Error::QubitCount {
            expected: 2,
            found: state.n_qubits(),
        });
    }
    let a = state.amplitudes();
    let (q1, q2) = match grouping {
        Grouping::Standard => (
            Quaternion::from_complex_pair(a[0], a[1]),
            Quaternion::from_complex_pair(a[2], a[3]),
        ),
        Grouping::Alternate => (
            Quaternion::from_complex_pair(a[0], a[2]),
            Quaternion::from_complex_pair(a[1], a[3]),
        ),
    };
    Ok(QuaternionPair { q1, q2, grouping })
}

/// Inverse of [`encode_two_qubit`]; exact on the components.
pub fn decode_two_qubit(pair: &QuaternionPair) -> Result<PureState> {
    let (c0, c1) = pair.q1.complex_pair();
    let (c2, c3) = pair.q2.complex_pair();
    let amplitudes = match pair.grouping {
        Grouping::Standard => alloc::vec![c0, c1, c2, c3],
        Grouping::Alternate => alloc::vec![c0, c2, c1, c3],
    };
    PureState::new(2, amplitudes)
}

/// Packs a 3-qubit state `t0..t7` into two octonions
/// `a = (t0 + t1 j) + (t2 + conj(t3) j) e` and
/// `b = (t4 + t5 j) + (t6 + conj(t7) j) e`.
///
/// The conjugations on `t3` and `t7` come from sliding the amplitude through
/// `j` (`j z = conj(z) j`); without them the round trip would not be exact.
pub fn encode_three_qubit(state: &PureState) -> Result<OctonionPair> {
    if state.n_qubits() != 3 {
        return Err(Error::QubitCount {
            expected: 3,
            found: state.n_qubits(),
        });
    }
    let t = state.amplitudes();
    let a = Octonion::from_quaternion_pair(
        Quaternion::from_complex_pair(t[0], t[1]),
        Quaternion::from_complex_pair(t[2], t[3].conj()),
    );
    let b = Octonion::from_quaternion_pair(
        Quaternion::from_complex_pair(t[4], t[5]),
        Quaternion::from_complex_pair(t[6], t[7].conj()),
    );
    Ok(OctonionPair { a, b })
}

/// Inverse of [`encode_three_qubit`]; exact on the components.
pub fn decode_three_qubit(pair: &OctonionPair) -> Result<PureState> {
    let (a1, a2) = pair.a.quaternion_pair();
    let (b1, b2) = pair.b.quaternion_pair();
    let (t0, t1) = a1.complex_pair();
    let (t2, t3c) = a2.complex_pair();
    let (t4, t5) = b1.complex_pair();
    let (t6, t7c) = b2.complex_pair();
    PureState::new(
        3,
        alloc::vec![t0, t1, t2, t3c.conj(), t4, t5, t6, t7c.conj()],
    )
}
