//! The fibration maps.
//!
//! Each map is the same two-step composition, generic over the division
//! algebra: form the ratio of the two encoded halves of the state and
//! conjugate it (`h1`), then lift the result from the algebra's plane to the
//! unit base sphere by inverse stereographic projection (`h2`). The point at
//! infinity, produced when the denominator half vanishes, lands on the north
//! pole.
//!
//! * 1 qubit: complex ratio, base S2 (the Bloch sphere);
//! * 2 qubits: quaternion ratio, base S4;
//! * 3 qubits: octonion ratio, base S8.
//!
//! For three qubits a second, independent computation path through the
//! generalized concurrences is provided; the two must agree and are checked
//! against each other in the test suites.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::algebra::{Octonion, Quaternion};
use crate::entanglement::generalized_concurrences;
use crate::error::{Error, Result};
use crate::states::{encode_three_qubit, encode_two_qubit, Grouping, PureState};
use crate::tol;

/// The operations `h1`/`h2` need from a normed division algebra. `DIM` is
/// the real dimension; `component(0)` is the scalar part.
pub trait CompositionAlgebra: Copy {
    const DIM: usize;
    fn conj(self) -> Self;
    fn mul(self, rhs: Self) -> Self;
    fn norm_sqr(self) -> f64;
    fn inverse(self) -> Result<Self>;
    fn component(self, l: usize) -> f64;
}

impl CompositionAlgebra for Complex64 {
    const DIM: usize = 2;
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
    fn mul(self, rhs: Self) -> Self {
        self * rhs
    }
    fn norm_sqr(self) -> f64 {
        Complex64::norm_sqr(&self)
    }
    fn inverse(self) -> Result<Self> {
        let n = Complex64::norm_sqr(&self);
        if n == 0.0 {
            return Err(Error::ZeroDivisor);
        }
        Ok(Complex64::conj(&self) / n)
    }
    fn component(self, l: usize) -> f64 {
        match l {
            0 => self.re,
            _ => self.im,
        }
    }
}

impl CompositionAlgebra for Quaternion {
    const DIM: usize = 4;
    fn conj(self) -> Self {
        Quaternion::conj(self)
    }
    fn mul(self, rhs: Self) -> Self {
        self * rhs
    }
    fn norm_sqr(self) -> f64 {
        Quaternion::norm_sqr(self)
    }
    fn inverse(self) -> Result<Self> {
        Quaternion::inverse(self)
    }
    fn component(self, l: usize) -> f64 {
        self.to_array()[l]
    }
}

impl CompositionAlgebra for Octonion {
    const DIM: usize = 8;
    fn conj(self) -> Self {
        Octonion::conj(self)
    }
    fn mul(self, rhs: Self) -> Self {
        self * rhs
    }
    fn norm_sqr(self) -> f64 {
        Octonion::norm_sqr(self)
    }
    fn inverse(self) -> Result<Self> {
        Octonion::inverse(self)
    }
    fn component(self, l: usize) -> f64 {
        self.coeffs[l]
    }
}

/// Algebra value extended with a point at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedPoint<A> {
    Finite(A),
    Infinity,
}

/// Point on a unit base sphere S2, S4 or S8, stored as `dim + 1`
/// coordinates with `x0` the polar coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct BasePoint {
    coords: Vec<f64>,
}

impl BasePoint {
    /// Validates the coordinate count (3, 5 or 9) and unit norm
    /// (within [`tol::UNIT_NORM_TOL`]).
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if !matches!(coords.len(), 3 | 5 | 9) {
            return Err(Error::BaseDimension { found: coords.len() });
        }
        let norm_sqr: f64 = coords.iter().map(|x| x * x).sum();
        if (norm_sqr - 1.0).abs() > tol::UNIT_NORM_TOL {
            return Err(Error::NotUnitNorm { norm_sqr });
        }
        Ok(BasePoint { coords })
    }

    /// For map outputs that are unit by construction.
    pub(crate) fn from_coords_unchecked(coords: Vec<f64>) -> Self {
        BasePoint { coords }
    }

    /// Dimension of the sphere the point sits on (2, 4 or 8).
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn coord(&self, l: usize) -> f64 {
        self.coords[l]
    }

    /// Largest absolute coordinate difference; test and validation helper.
    pub fn max_abs_diff(&self, other: &BasePoint) -> f64 {
        let mut m: f64 = 0.0;
        for (a, b) in self.coords.iter().zip(other.coords.iter()) {
            m = m.max((a - b).abs());
        }
        m
    }
}

/// First fibration step: `conj(num * den^-1)`, or the point at infinity when
/// `den = 0`.
pub fn h1_ratio<A: CompositionAlgebra>(num: A, den: A) -> ExtendedPoint<A> {
    match den.inverse() {
        Err(_) => ExtendedPoint::Infinity,
        Ok(inv) => ExtendedPoint::Finite(num.mul(inv).conj()),
    }
}

/// Second fibration step: lifts a plane point onto the unit sphere one
/// dimension up. `x0 = (|p|^2 - 1) / (|p|^2 + 1)`, the remaining
/// coordinates are `2 p_l / (1 + |p|^2)`; infinity lands on the north pole
/// `(1, 0, ..., 0)` and zero on the south pole.
pub fn inverse_stereographic<A: CompositionAlgebra>(p: &ExtendedPoint<A>) -> BasePoint {
    let mut coords = vec![0.0; A::DIM + 1];
    match p {
        ExtendedPoint::Infinity => coords[0] = 1.0,
        ExtendedPoint::Finite(v) => {
            let n = v.norm_sqr();
            if n.is_finite() {
                let denom = 1.0 + n;
                coords[0] = (n - 1.0) / denom;
                for l in 0..A::DIM {
                    coords[l + 1] = 2.0 * v.component(l) / denom;
                }
            } else {
                // Overflowing ratios are indistinguishable from infinity.
                coords[0] = 1.0;
            }
        }
    }
    BasePoint::from_coords_unchecked(coords)
}

/// S3 -> S2: Bloch vector of a 1-qubit state, ordered
/// `(<sigma_z>, <sigma_x>, <sigma_y>)`.
pub fn hopf_s3(state: &PureState) -> Result<BasePoint> {
    if state.n_qubits() != 1 {
        return Err(Error::QubitCount {
            expected: 1,
            found: state.n_qubits(),
        });
    }
    Ok(inverse_stereographic(&h1_ratio(
        state.amplitude(0),
        state.amplitude(1),
    )))
}

/// S7 -> S4 for a 2-qubit state.
///
/// With the standard grouping, `x0..x2` carry the Bloch vector of qubit 1
/// and `x3 + i x4` the entanglement coordinate `2(a00 a11 - a01 a10)`; the
/// alternate grouping swaps the single-qubit roles and leaves `x3, x4`
/// unchanged.
pub fn hopf_s7(state: &PureState, grouping: Grouping) -> Result<BasePoint> {
    let pair = encode_two_qubit(state, grouping)?;
    Ok(inverse_stereographic(&h1_ratio(pair.q1, pair.q2)))
}

/// S15 -> S8 for a 3-qubit state, through the octonion ratio.
pub fn hopf_s15(state: &PureState) -> Result<BasePoint> {
    let pair = encode_three_qubit(state)?;
    Ok(inverse_stereographic(&h1_ratio(pair.a, pair.b)))
}

/// S15 -> S8 again, but evaluated directly from the amplitude bilinears:
/// `x0` from the population imbalance, `x1 + i x2` from the cross overlap
/// and the remaining three complex coordinates from the generalized
/// concurrences. Independent of the octonion route by construction.
pub fn hopf_s15_from_concurrences(state: &PureState) -> Result<BasePoint> {
    let g = generalized_concurrences(state)?;
    let t = state.amplitudes();
    let x0: f64 = t[..4].iter().map(|z| z.norm_sqr()).sum::<f64>()
        - t[4..].iter().map(|z| z.norm_sqr()).sum::<f64>();
    let overlap: Complex64 = (0..4).map(|l| t[l].conj() * t[l + 4]).sum();
    let x12 = 2.0 * overlap;
    let x34 = 2.0 * (g.t05_14 + g.t27_36.conj());
    let x56 = 2.0 * (g.t06_24 + g.t35_17.conj());
    let x78 = 2.0 * (g.t16_25 + g.t07_34.conj());
    Ok(BasePoint::from_coords_unchecked(vec![
        x0, x12.re, x12.im, x34.re, x34.im, x56.re, x56.im, x78.re, x78.im,
    ]))
}

/// Expectation of the antilinear entanglement operator on a 2-qubit state:
/// apply `sigma_y (x) sigma_y`, conjugate the bra side, take the inner
/// product and negate.
///
/// The conjugator acting on the bra cancels the bra's own conjugation, so
/// the sum below is bilinear (not sesquilinear) in the amplitudes. The value
/// equals `2 (a00 a11 - a01 a10)`; that identity is a test, not the
/// implementation.
pub fn entanglor_expectation(state: &PureState) -> Result<Complex64> {
    if state.n_qubits() != 2 {
        return Err(Error::QubitCount {
            expected: 2,
            found: state.n_qubits(),
        });
    }
    let zero = Complex64::new(0.0, 0.0);
    let mi = Complex64::new(0.0, -1.0);
    let pi = Complex64::new(0.0, 1.0);
    let sigma_y = [[zero, mi], [pi, zero]];

    // Explicit Kronecker product sigma_y (x) sigma_y.
    let mut op = [[zero; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            op[r][c] = sigma_y[r >> 1][c >> 1] * sigma_y[r & 1][c & 1];
        }
    }

    let amps = state.amplitudes();
    let mut value = zero;
    for r in 0..4 {
        let mut row = zero;
        for c in 0..4 {
            row += op[r][c] * amps[c];
        }
        value += amps[r] * row;
    }
    Ok(-value)
}

/// Image of the stereographic projection of S3 from a chosen pole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StereoImage {
    Point([f64; 3]),
    Infinity,
}

fn dot4(a: [f64; 4], b: [f64; 4]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

/// Deterministic orthonormal frame of the hyperplane orthogonal to `pole`.
///
/// Candidate axes are taken in order of increasing alignment with the pole
/// (ties broken by index), then Gram-Schmidt orthogonalized. For the default
/// pole `(1, 0, 0, 0)` this returns the standard `e1, e2, e3`.
pub fn stereo_frame(pole: [f64; 4]) -> [[f64; 4]; 3] {
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&a, &b| {
        pole[a]
            .abs()
            .partial_cmp(&pole[b].abs())
            .unwrap_or(core::cmp::Ordering::Equal)
            .then(a.cmp(&b))
    });

    let mut frame = [[0.0; 4]; 3];
    for (count, &axis) in order.iter().take(3).enumerate() {
        let mut v = [0.0; 4];
        v[axis] = 1.0;
        let along = dot4(v, pole);
        for (entry, p) in v.iter_mut().zip(pole) {
            *entry -= along * p;
        }
        for prev in frame.iter().take(count) {
            let along = dot4(v, *prev);
            for (entry, p) in v.iter_mut().zip(*prev) {
                *entry -= along * p;
            }
        }
        let norm = libm::sqrt(dot4(v, v));
        // The three least-aligned axes always keep an O(1) residual, so no
        // candidate is ever numerically degenerate here.
        for entry in &mut v {
            *entry /= norm;
        }
        frame[count] = v;
    }
    frame
}

/// Stereographic projection of a unit 4-vector from `pole`, expressed in the
/// frame of [`stereo_frame`]. The pole itself maps to infinity, its antipode
/// to the origin; fibers through the pole project to straight lines, all
/// other fibers to circles.
pub fn stereo_project_s3(p: [f64; 4], pole: [f64; 4]) -> StereoImage {
    let t = dot4(p, pole);
    if 1.0 - t < 1e-12 {
        return StereoImage::Infinity;
    }
    let inv = 1.0 / (1.0 - t);
    let mut w = [0.0; 4];
    for l in 0..4 {
        w[l] = (p[l] - t * pole[l]) * inv;
    }
    let frame = stereo_frame(pole);
    StereoImage::Point([dot4(w, frame[0]), dot4(w, frame[1]), dot4(w, frame[2])])
}

/// Inverse of [`stereo_project_s3`]: maps frame coordinates back onto the
/// unit S3.
pub fn stereo_unproject_s3(y: [f64; 3], pole: [f64; 4]) -> [f64; 4] {
    let frame = stereo_frame(pole);
    let n = y[0] * y[0] + y[1] * y[1] + y[2] * y[2];
    let denom = 1.0 + n;
    let mut p = [0.0; 4];
    for l in 0..4 {
        let w = y[0] * frame[0][l] + y[1] * frame[1][l] + y[2] * frame[2][l];
        p[l] = ((n - 1.0) * pole[l] + 2.0 * w) / denom;
    }
    p
}
