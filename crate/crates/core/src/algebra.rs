//! Quaternions and octonions over `f64`.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * quaternion basis `1, i, j, k` with `i^2 = j^2 = k^2 = ijk = -1`;
//! * a quaternion splits into a complex pair as `q = c1 + c2 j`, and complex
//!   scalars slide through `j` conjugated: `j z = conj(z) j`;
//! * octonion basis `e0..e7 = 1, i, j, k, e, ie, je, ke`, so an octonion
//!   splits into a quaternion pair as `a = a' + a'' e`.
//!
//! Octonion multiplication is table-driven. The same product is also exposed
//! through the quaternion-pair doubling rule so the two routes can be checked
//! against each other; they are distinct code paths on purpose.

pub use num_complex::Complex64;

use crate::error::{Error, Result};

/// Quaternion `re + im_i*i + im_j*j + im_k*k`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub re: f64,
    pub im_i: f64,
    pub im_j: f64,
    pub im_k: f64,
}

/// Polar split of a nonzero quaternion:
/// `q = norm * (cos(angle) + sin(angle) * axis)` with `angle` in `[0, pi]`
/// and `axis` a unit pure-imaginary quaternion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuaternionPolar {
    pub norm: f64,
    pub angle: f64,
    pub axis: Quaternion,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(re: f64, im_i: f64, im_j: f64, im_k: f64) -> Self {
        Quaternion { re, im_i, im_j, im_k }
    }

    /// Builds `c1 + c2 j`.
    pub fn from_complex_pair(c1: Complex64, c2: Complex64) -> Self {
        Quaternion::new(c1.re, c1.im, c2.re, c2.im)
    }

    /// Splits into `(c1, c2)` with `self = c1 + c2 j`.
    pub fn complex_pair(self) -> (Complex64, Complex64) {
        (
            Complex64::new(self.re, self.im_i),
            Complex64::new(self.im_j, self.im_k),
        )
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Quaternion::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.re, self.im_i, self.im_j, self.im_k]
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.re, -self.im_i, -self.im_j, -self.im_k)
    }

    pub fn norm_sqr(self) -> f64 {
        self.re * self.re
            + self.im_i * self.im_i
            + self.im_j * self.im_j
            + self.im_k * self.im_k
    }

    pub fn norm(self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    /// Scalar part.
    pub fn scalar(self) -> f64 {
        self.re
    }

    /// Pure-imaginary part.
    pub fn vector(self) -> Quaternion {
        Quaternion::new(0.0, self.im_i, self.im_j, self.im_k)
    }

    pub fn scale(self, s: f64) -> Self {
        Quaternion::new(self.re * s, self.im_i * s, self.im_j * s, self.im_k * s)
    }

    /// `conj(q) / |q|^2`; `q * q^-1 = q^-1 * q = 1`.
    pub fn inverse(self) -> Result<Quaternion> {
        let n = self.norm_sqr();
        if n == 0.0 {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.conj().scale(1.0 / n))
    }

    /// Same product as `*`, computed through the complex-pair rule
    /// `(c1, c2)(d1, d2) = (c1 d1 - c2 conj(d2), c1 d2 + c2 conj(d1))`.
    /// Kept as an independent route for consistency checks.
    pub fn mul_via_complex_pairs(self, rhs: Quaternion) -> Quaternion {
        let (c1, c2) = self.complex_pair();
        let (d1, d2) = rhs.complex_pair();
        Quaternion::from_complex_pair(c1 * d1 - c2 * d2.conj(), c1 * d2 + c2 * d1.conj())
    }

    /// Polar split; errors on the zero quaternion. A real quaternion gets the
    /// conventional axis `i` with angle 0 or pi.
    pub fn polar(self) -> Result<QuaternionPolar> {
        let norm = self.norm();
        if norm == 0.0 {
            return Err(Error::ZeroDivisor);
        }
        let vec_norm = self.vector().norm();
        let angle = libm::atan2(vec_norm, self.re);
        let axis = if vec_norm <= crate::tol::AXIS_SIN_TOL * norm {
            Quaternion::I
        } else {
            self.vector().scale(1.0 / vec_norm)
        };
        Ok(QuaternionPolar { norm, angle, axis })
    }

    /// Largest absolute component difference; test and validation helper.
    pub fn max_abs_diff(self, other: Quaternion) -> f64 {
        let a = self.to_array();
        let b = other.to_array();
        let mut m: f64 = 0.0;
        for l in 0..4 {
            m = m.max((a[l] - b[l]).abs());
        }
        m
    }
}

impl core::ops::Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.re + rhs.re,
            self.im_i + rhs.im_i,
            self.im_j + rhs.im_j,
            self.im_k + rhs.im_k,
        )
    }
}

impl core::ops::Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.re - rhs.re,
            self.im_i - rhs.im_i,
            self.im_j - rhs.im_j,
            self.im_k - rhs.im_k,
        )
    }
}

impl core::ops::Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        self.scale(-1.0)
    }
}

impl core::ops::Mul for Quaternion {
    type Output = Quaternion;

    /// Component expansion of the Hamilton relations.
    fn mul(self, rhs: Quaternion) -> Quaternion {
        let (p0, p1, p2, p3) = (self.re, self.im_i, self.im_j, self.im_k);
        let (q0, q1, q2, q3) = (rhs.re, rhs.im_i, rhs.im_j, rhs.im_k);
        Quaternion::new(
            p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
            p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
            p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
            p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0,
        )
    }
}

/// Octonion on the basis `e0..e7 = 1, i, j, k, e, ie, je, ke`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Octonion {
    pub coeffs: [f64; 8],
}

/// Sign of `e_row * e_col`. The product lands on basis index `row ^ col`;
/// only the sign needs a table in this basis ordering.
const MUL_SIGNS: [[f64; 8]; 8] = [
    [1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0],
    [1.0, -1.0, 1.0, -1.0, 1.0, -1.0, -1.0, 1.0],
    [1.0, -1.0, -1.0, 1.0, 1.0, 1.0, -1.0, -1.0],
    [1.0, 1.0, -1.0, -1.0, 1.0, -1.0, 1.0, -1.0],
    [1.0, -1.0, -1.0, -1.0, -1.0, 1.0, 1.0, 1.0],
    [1.0, 1.0, -1.0, 1.0, -1.0, -1.0, -1.0, 1.0],
    [1.0, 1.0, 1.0, -1.0, -1.0, 1.0, -1.0, -1.0],
    [1.0, -1.0, 1.0, 1.0, -1.0, -1.0, 1.0, -1.0],
];

impl Octonion {
    pub const ZERO: Octonion = Octonion { coeffs: [0.0; 8] };
    pub const ONE: Octonion = Octonion {
        coeffs: [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    };

    pub const fn new(coeffs: [f64; 8]) -> Self {
        Octonion { coeffs }
    }

    /// The basis element `e_l`.
    pub fn basis(l: usize) -> Self {
        let mut coeffs = [0.0; 8];
        coeffs[l] = 1.0;
        Octonion { coeffs }
    }

    /// Builds `p + q e`.
    pub fn from_quaternion_pair(p: Quaternion, q: Quaternion) -> Self {
        Octonion {
            coeffs: [
                p.re, p.im_i, p.im_j, p.im_k, q.re, q.im_i, q.im_j, q.im_k,
            ],
        }
    }

    /// Splits into `(p, q)` with `self = p + q e`.
    pub fn quaternion_pair(self) -> (Quaternion, Quaternion) {
        let c = self.coeffs;
        (
            Quaternion::new(c[0], c[1], c[2], c[3]),
            Quaternion::new(c[4], c[5], c[6], c[7]),
        )
    }

    pub fn conj(self) -> Self {
        let c = self.coeffs;
        Octonion {
            coeffs: [c[0], -c[1], -c[2], -c[3], -c[4], -c[5], -c[6], -c[7]],
        }
    }

    pub fn norm_sqr(self) -> f64 {
        self.coeffs.iter().map(|x| x * x).sum()
    }

    pub fn norm(self) -> f64 {
        libm::sqrt(self.norm_sqr())
    }

    pub fn scale(self, s: f64) -> Self {
        let mut coeffs = self.coeffs;
        for x in &mut coeffs {
            *x *= s;
        }
        Octonion { coeffs }
    }

    /// `conj(a) / |a|^2`; two-sided inverse despite non-associativity.
    pub fn inverse(self) -> Result<Octonion> {
        let n = self.norm_sqr();
        if n == 0.0 {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.conj().scale(1.0 / n))
    }

    /// Same product as `*`, computed through the quaternion-pair doubling
    /// rule `(a' + a'' e)(b' + b'' e) = (a' b' - conj(b'') a'') + (b'' a' +
    /// a'' conj(b')) e`. Independent route for consistency checks; factor
    /// order matters on both sides.
    pub fn mul_via_quaternion_pairs(self, rhs: Octonion) -> Octonion {
        let (a1, a2) = self.quaternion_pair();
        let (b1, b2) = rhs.quaternion_pair();
        Octonion::from_quaternion_pair(a1 * b1 - b2.conj() * a2, b2 * a1 + a2 * b1.conj())
    }

    /// Largest absolute component difference; test and validation helper.
    pub fn max_abs_diff(self, other: Octonion) -> f64 {
        let mut m: f64 = 0.0;
        for (x, y) in self.coeffs.iter().zip(other.coeffs) {
            m = m.max((x - y).abs());
        }
        m
    }
}

impl core::ops::Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        let mut coeffs = self.coeffs;
        for (entry, r) in coeffs.iter_mut().zip(rhs.coeffs) {
            *entry += r;
        }
        Octonion { coeffs }
    }
}

impl core::ops::Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        let mut coeffs = self.coeffs;
        for (entry, r) in coeffs.iter_mut().zip(rhs.coeffs) {
            *entry -= r;
        }
        Octonion { coeffs }
    }
}

impl core::ops::Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        self.scale(-1.0)
    }
}

impl core::ops::Mul for Octonion {
    type Output = Octonion;

    /// Table-driven product; exact on basis elements.
    fn mul(self, rhs: Octonion) -> Octonion {
        let mut out = [0.0; 8];
        for (row, &a) in self.coeffs.iter().enumerate() {
            for (col, &b) in rhs.coeffs.iter().enumerate() {
                out[row ^ col] += MUL_SIGNS[row][col] * a * b;
            }
        }
        Octonion { coeffs: out }
    }
}
