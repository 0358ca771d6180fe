//! Renders fiber families of the S3 -> S2 map into R3 polylines via
//! stereographic projection, the data behind nested-tori pictures.
//!
//! Each requested S2 base point contributes one fiber, the circle
//! `(alpha e^{i omega}, beta e^{i omega})` above it. Projection sends every
//! fiber to a circle in R3 except the one through the projection pole,
//! which becomes a straight line and is emitted as an open polyline.

use hopfq_core::{hopf_s3, stereo_project_s3, Complex64, PureState, StereoImage};
use serde::{Deserialize, Serialize};

use crate::formats::clean;
use crate::{CliError, Result};

/// How far a base may sit from the unit sphere before it is rejected.
pub const BASE_NORM_TOL: f64 = 1e-6;

/// Bases closer than this to the image of the projection pole are treated
/// as exactly the pole fiber.
const POLE_BASE_TOL: f64 = 1e-9;

/// One rendered fiber: its base point on S2, whether the polyline closes
/// onto itself, and the projected samples in R3.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Fiber {
    pub base: [f64; 3],
    pub closed: bool,
    pub samples: Vec<[f64; 3]>,
}

/// A projection pole together with every rendered fiber.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FibrationScene {
    pub pole: [f64; 4],
    pub fibers: Vec<Fiber>,
}

/// The amplitudes `(X0 + i X1, X2 + i X3)` of an S3 point, and back.
pub fn state_from_point(p: [f64; 4]) -> Result<PureState> {
    Ok(PureState::new(
        1,
        vec![Complex64::new(p[0], p[1]), Complex64::new(p[2], p[3])],
    )?)
}

fn point_from_amplitudes(a: Complex64, b: Complex64) -> [f64; 4] {
    [a.re, a.im, b.re, b.im]
}

/// One preimage of a unit Bloch vector `(z, x, y)` under the S3 -> S2 map:
/// `alpha = cos(theta/2)`, `beta = e^{i phi} sin(theta/2)`.
pub fn bloch_preimage(base: [f64; 3]) -> (Complex64, Complex64) {
    let z = base[0].clamp(-1.0, 1.0);
    let alpha = ((1.0 + z) / 2.0).sqrt();
    let s = ((1.0 - z) / 2.0).sqrt();
    let phi = base[2].atan2(base[1]);
    (
        Complex64::new(alpha, 0.0),
        Complex64::new(s * phi.cos(), s * phi.sin()),
    )
}

fn unit3(v: [f64; 3], what: &str) -> Result<[f64; 3]> {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if !n.is_finite() || (n - 1.0).abs() > BASE_NORM_TOL {
        return Err(CliError::Validation(format!(
            "{what} has norm {n}, expected 1 +/- {BASE_NORM_TOL}"
        )));
    }
    Ok([v[0] / n, v[1] / n, v[2] / n])
}

fn unit4(v: [f64; 4], what: &str) -> Result<[f64; 4]> {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]).sqrt();
    if !n.is_finite() || (n - 1.0).abs() > BASE_NORM_TOL {
        return Err(CliError::Validation(format!(
            "{what} has norm {n}, expected 1 +/- {BASE_NORM_TOL}"
        )));
    }
    Ok([v[0] / n, v[1] / n, v[2] / n, v[3] / n])
}

/// Renders the fibers above `bases`, each sampled at `samples_per_fiber`
/// phases and projected from `pole`.
///
/// Fibers whose base matches the pole's image are sampled with a half-step
/// phase offset (so no sample lands on the pole itself) and marked open;
/// every other fiber is a closed circle. A closed fiber that still projects
/// a sample to infinity means the base was placed pathologically close to
/// the pole's image, which is reported as an error.
pub fn render_fibration_scene(
    bases: &[[f64; 3]],
    samples_per_fiber: usize,
    pole: [f64; 4],
) -> Result<FibrationScene> {
    if samples_per_fiber < 3 {
        return Err(CliError::Validation(format!(
            "samples_per_fiber must be at least 3, got {samples_per_fiber}"
        )));
    }
    let pole = unit4(pole, "pole")?;
    let pole_base = hopf_s3(&state_from_point(pole)?)?;

    let mut fibers = Vec::with_capacity(bases.len());
    for (k, &raw) in bases.iter().enumerate() {
        let base = unit3(raw, &format!("base {k}"))?;
        let through_pole = pole_base
            .coords()
            .iter()
            .zip(base)
            .all(|(&p, b)| (p - b).abs() < POLE_BASE_TOL);
        // Any preimage works; for the pole fiber pick the pole itself so
        // the offset below is measured from the one bad phase.
        let (alpha, beta) = if through_pole {
            (
                Complex64::new(pole[0], pole[1]),
                Complex64::new(pole[2], pole[3]),
            )
        } else {
            bloch_preimage(base)
        };
        let offset = if through_pole { 0.5 } else { 0.0 };
        let mut samples = Vec::with_capacity(samples_per_fiber);
        for j in 0..samples_per_fiber {
            let omega =
                2.0 * std::f64::consts::PI * (j as f64 + offset) / samples_per_fiber as f64;
            let phase = Complex64::new(omega.cos(), omega.sin());
            let p = point_from_amplitudes(alpha * phase, beta * phase);
            match stereo_project_s3(p, pole) {
                StereoImage::Point(y) => samples.push(y.map(clean)),
                StereoImage::Infinity => {
                    return Err(CliError::Validation(format!(
                        "fiber over base {k} passes through the projection pole; \
                         move the base or choose a different pole"
                    )))
                }
            }
        }
        fibers.push(Fiber {
            base: base.map(clean),
            closed: !through_pole,
            samples,
        });
    }
    Ok(FibrationScene {
        pole: pole.map(clean),
        fibers,
    })
}

/// The S2 image of the projection pole: the base of the fiber that
/// projects to a straight line.
pub fn pole_base(pole: [f64; 4]) -> Result<[f64; 3]> {
    let pole = unit4(pole, "pole")?;
    let base = hopf_s3(&state_from_point(pole)?)?;
    Ok([base.coord(0), base.coord(1), base.coord(2)])
}

/// Bases arranged on latitude rings of S2: for each polar angle `t` in
/// `latitudes`, `count` points `(cos t, sin t cos phi, sin t sin phi)` with
/// equally spaced azimuths `phi`.
pub fn latitude_bases(latitudes: &[f64], count: usize) -> Result<Vec<[f64; 3]>> {
    if count == 0 {
        return Err(CliError::Validation("bases per latitude must be >= 1".into()));
    }
    let mut bases = Vec::with_capacity(latitudes.len() * count);
    for &t in latitudes {
        if !t.is_finite() {
            return Err(CliError::Validation("latitudes must be finite".into()));
        }
        for j in 0..count {
            let phi = 2.0 * std::f64::consts::PI * j as f64 / count as f64;
            bases.push([t.cos(), t.sin() * phi.cos(), t.sin() * phi.sin()]);
        }
    }
    Ok(bases)
}
