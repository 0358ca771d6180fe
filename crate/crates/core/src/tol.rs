//! Numerical tolerances used across the crate.
//!
//! These are contract values, not implementation noise: validation and
//! classification behave identically everywhere because they all read from
//! here.

/// Unit-norm validation band for states, base points and encodings.
pub const UNIT_NORM_TOL: f64 = 1e-10;

/// sin(theta) at or below this counts as a pole of the base sphere.
pub const POLE_SIN_TOL: f64 = 1e-12;

/// sin(phi) at or below this leaves the fiber axis undetermined; the
/// convention `axis = i` is used instead.
pub const AXIS_SIN_TOL: f64 = 1e-12;

/// Default band for leaf classification (separable / intermediate / maximally
/// entangled). The CLI lets `HOPFQ_TOL` override it.
pub const DEFAULT_CLASS_TOL: f64 = 1e-9;

/// Derived real quantities with an exact range (concurrence in [0, 1]) may
/// drift past the boundary by at most this much before it is treated as an
/// internal inconsistency.
pub const CONSISTENCY_SLACK: f64 = 1e-8;

/// Reduced-density eigenvalues may sit this far below zero before validation
/// fails.
pub const EIGENVALUE_SLACK: f64 = 1e-10;
