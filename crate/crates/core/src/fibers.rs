//! Inverse direction of the fibration maps: reconstructing the states above
//! a chosen base point.
//!
//! Over S4 the fiber through a base point with polar angle `theta` is the
//! family `(cos(theta/2) q, sin(theta/2) Q' q)` with `q` running over unit
//! quaternions and `Q'` the normalized ratio point; over S8 the analogous
//! family is parametrized by a unit octonion. Both constructions satisfy an
//! exact round trip: projecting any fiber point recovers the base.
//!
//! Fibers are gauge-free sets. Individual parametrizations below fix
//! conventions (`Q' = 1` at the poles, axis `i` when the frame degenerates)
//! but states are only ever compared projectively or through their base.

use num_complex::Complex64;

use crate::algebra::{Octonion, Quaternion};
use crate::error::{Error, Result};
use crate::hopf::BasePoint;
use crate::states::{decode_three_qubit, OctonionPair, PureState};
use crate::tol;

/// Angles and axes of the fiber family over one S4 base point:
/// `theta` the polar angle, `u + v j` the normalized ratio point `Q'`,
/// `phi` and `axis` its polar split (`Q' = exp(phi * axis)`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiberFrame {
    pub theta: f64,
    pub phi: f64,
    pub axis: Quaternion,
    pub u: Complex64,
    pub v: Complex64,
}

/// Polar angle and the norm of the equatorial part, computed from the tail
/// coordinates so that `(u, v)` stays exactly unit even when the base is
/// only unit within tolerance.
fn split_polar(base: &BasePoint) -> (f64, f64) {
    let tail_sqr: f64 = base.coords()[1..].iter().map(|x| x * x).sum();
    let sin_theta = libm::sqrt(tail_sqr);
    (libm::atan2(sin_theta, base.coord(0)), sin_theta)
}

/// Computes the fiber frame over an S4 base point away from the poles.
pub fn fiber_frame(base: &BasePoint) -> Result<FiberFrame> {
    if base.dim() != 4 {
        return Err(Error::BaseDimension {
            found: base.coords().len(),
        });
    }
    let (theta, sin_theta) = split_polar(base);
    if sin_theta <= tol::POLE_SIN_TOL {
        return Err(Error::AtPole);
    }
    let u = Complex64::new(base.coord(1), base.coord(2)) / sin_theta;
    let v = Complex64::new(base.coord(3), base.coord(4)) / sin_theta;
    let vec_norm = libm::sqrt(u.im * u.im + v.norm_sqr());
    let phi = libm::atan2(vec_norm, u.re);
    let axis = if vec_norm <= tol::AXIS_SIN_TOL {
        Quaternion::I
    } else {
        Quaternion::new(0.0, u.im / vec_norm, v.re / vec_norm, v.im / vec_norm)
    };
    Ok(FiberFrame { theta, phi, axis, u, v })
}

/// The fiber point over an S4 base selected by the unit quaternion
/// `q = f_a + f_b j`:
/// `(cos(theta/2) f_a, cos(theta/2) f_b,
///   sin(theta/2)(u f_a - v conj(f_b)), sin(theta/2)(u f_b + v conj(f_a)))`.
///
/// At either pole the ratio point is conventionally `Q' = 1`, which gives
/// `(f_a, f_b, 0, 0)` at the north pole and `(0, 0, f_a, f_b)` at the south.
pub fn fiber_point_s7(base: &BasePoint, q: Quaternion) -> Result<PureState> {
    if base.dim() != 4 {
        return Err(Error::BaseDimension {
            found: base.coords().len(),
        });
    }
    let norm_sqr = q.norm_sqr();
    if (norm_sqr - 1.0).abs() > tol::UNIT_NORM_TOL {
        return Err(Error::NotUnitNorm { norm_sqr });
    }
    let (theta, sin_theta) = split_polar(base);
    let (f_a, f_b) = q.complex_pair();
    if sin_theta <= tol::POLE_SIN_TOL {
        // Degenerate fibers, exactly: (f_a, f_b, 0, 0) at the north pole,
        // (0, 0, f_a, f_b) at the south.
        let zero = Complex64::new(0.0, 0.0);
        let amps = if base.coord(0) >= 0.0 {
            alloc::vec![f_a, f_b, zero, zero]
        } else {
            alloc::vec![zero, zero, f_a, f_b]
        };
        return PureState::new(2, amps);
    }
    let u = Complex64::new(base.coord(1), base.coord(2)) / sin_theta;
    let v = Complex64::new(base.coord(3), base.coord(4)) / sin_theta;
    let ch = libm::cos(theta / 2.0);
    let sh = libm::sin(theta / 2.0);
    PureState::new(
        2,
        alloc::vec![
            ch * f_a,
            ch * f_b,
            sh * (u * f_a - v * f_b.conj()),
            sh * (u * f_b + v * f_a.conj()),
        ],
    )
}

/// Maximally entangled state selected by the unit pair `(f_a, f_b)`:
/// `(f_a, f_b, -conj(f_b), conj(f_a)) / sqrt(2)`. The whole family sits
/// over the single base point `(0, 0, 0, 1, 0)` and `(f_a, f_b)` and
/// `(-f_a, -f_b)` give the same state up to phase.
pub fn mes_state(f_a: Complex64, f_b: Complex64) -> Result<PureState> {
    let norm_sqr = f_a.norm_sqr() + f_b.norm_sqr();
    if (norm_sqr - 1.0).abs() > tol::UNIT_NORM_TOL {
        return Err(Error::NotUnitNorm { norm_sqr });
    }
    let h = core::f64::consts::FRAC_1_SQRT_2;
    PureState::new(
        2,
        alloc::vec![h * f_a, h * f_b, -h * f_b.conj(), h * f_a.conj()],
    )
}

/// Which great-circle path from a separable state into the maximally
/// entangled set to walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ray {
    /// Through the equator: base `(0, cos(eps), 0, sin(eps), 0)`.
    X,
    /// Over the pole: base `(cos(eps), 0, 0, sin(eps), 0)`.
    Z,
}

/// State at parameter `eps` in `[0, pi/2]` along the chosen ray, starting
/// from the separable member selected by the unit pair `(f_a, f_b)`. The
/// concurrence along either ray is exactly `sin(eps)`.
pub fn epsilon_path(eps: f64, f_a: Complex64, f_b: Complex64, ray: Ray) -> Result<PureState> {
    if !(0.0..=core::f64::consts::FRAC_PI_2).contains(&eps) {
        return Err(Error::EpsilonOutOfRange { value: eps });
    }
    let norm_sqr = f_a.norm_sqr() + f_b.norm_sqr();
    if (norm_sqr - 1.0).abs() > tol::UNIT_NORM_TOL {
        return Err(Error::NotUnitNorm { norm_sqr });
    }
    let amps = match ray {
        Ray::X => {
            let h = core::f64::consts::FRAC_1_SQRT_2;
            let (cos_e, sin_e) = (libm::cos(eps), libm::sin(eps));
            alloc::vec![
                h * f_a,
                h * f_b,
                h * (f_a * cos_e - f_b.conj() * sin_e),
                h * (f_b * cos_e + f_a.conj() * sin_e),
            ]
        }
        Ray::Z => {
            let (ch, sh) = (libm::cos(eps / 2.0), libm::sin(eps / 2.0));
            alloc::vec![
                ch * f_a,
                ch * f_b,
                -sh * f_b.conj(),
                sh * f_a.conj(),
            ]
        }
    };
    PureState::new(2, amps)
}

/// The fiber point over an S8 base selected by the unit octonion `c`:
/// `a = cos(theta/2) (conj(P') c)`, `b = sin(theta/2) c` with `P'` the
/// normalized ratio point. At the poles the fiber degenerates to `(c, 0)`
/// (north) or `(0, c)` (south); both follow from the convention `P' = 1`.
pub fn fiber_point_s15(base: &BasePoint, c: Octonion) -> Result<PureState> {
    if base.dim() != 8 {
        return Err(Error::BaseDimension {
            found: base.coords().len(),
        });
    }
    let norm_sqr = c.norm_sqr();
    if (norm_sqr - 1.0).abs() > tol::UNIT_NORM_TOL {
        return Err(Error::NotUnitNorm { norm_sqr });
    }
    let (theta, sin_theta) = split_polar(base);
    if sin_theta <= tol::POLE_SIN_TOL {
        // Degenerate fibers, exactly: (c, 0) at the north pole, (0, c) at
        // the south.
        let pair = if base.coord(0) >= 0.0 {
            OctonionPair { a: c, b: Octonion::ZERO }
        } else {
            OctonionPair { a: Octonion::ZERO, b: c }
        };
        return decode_three_qubit(&pair);
    }
    let ratio = Octonion::new(core::array::from_fn(|l| base.coord(l + 1) / sin_theta));
    let a = (ratio.conj() * c).scale(libm::cos(theta / 2.0));
    let b = c.scale(libm::sin(theta / 2.0));
    decode_three_qubit(&OctonionPair { a, b })
}

/// Whether two states are equal up to a global phase:
/// `|<s1|s2>| > 1 - tol`.
pub fn projective_equal(s1: &PureState, s2: &PureState, tol: f64) -> Result<bool> {
    Ok(s1.inner_product(s2)?.norm() > 1.0 - tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entanglement::{classify_leaf, concurrence, separability_check};
    use crate::hopf::{hopf_s15, hopf_s7};
    use crate::states::{encode_two_qubit, Grouping};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn base4(coords: [f64; 5]) -> BasePoint {
        BasePoint::new(coords.to_vec()).unwrap()
    }

    #[test]
    fn frame_examples() {
        let f = fiber_frame(&base4([0.0, 1.0, 0.0, 0.0, 0.0])).unwrap();
        assert_abs_diff_eq!(f.theta, core::f64::consts::FRAC_PI_2, epsilon = 1e-15);
        assert_eq!(f.u, c(1.0, 0.0));
        assert_eq!(f.v, c(0.0, 0.0));
        assert_abs_diff_eq!(f.phi, 0.0, epsilon = 1e-15);
        assert_eq!(f.axis, Quaternion::I);

        let f = fiber_frame(&base4([0.0, 0.0, 0.0, 1.0, 0.0])).unwrap();
        assert_eq!(f.u, c(0.0, 0.0));
        assert_eq!(f.v, c(1.0, 0.0));
        assert_abs_diff_eq!(f.phi, core::f64::consts::FRAC_PI_2, epsilon = 1e-15);
        assert_eq!(f.axis, Quaternion::J);

        let f = fiber_frame(&base4([0.0, 0.0, 1.0, 0.0, 0.0])).unwrap();
        assert_eq!(f.u, c(0.0, 1.0));
        assert_abs_diff_eq!(f.phi, core::f64::consts::FRAC_PI_2, epsilon = 1e-15);
        assert_eq!(f.axis, Quaternion::I);

        assert_eq!(
            fiber_frame(&base4([1.0, 0.0, 0.0, 0.0, 0.0])),
            Err(Error::AtPole)
        );
    }

    #[test]
    fn fiber_points_at_poles_and_equator() {
        let north = base4([1.0, 0.0, 0.0, 0.0, 0.0]);
        let s = fiber_point_s7(&north, Quaternion::ONE).unwrap();
        assert_eq!(s, PureState::basis_state(2, 0).unwrap());

        let south = base4([-1.0, 0.0, 0.0, 0.0, 0.0]);
        let s = fiber_point_s7(&south, Quaternion::ONE).unwrap();
        assert_eq!(s, PureState::basis_state(2, 2).unwrap());

        // Equatorial separable point: (a, b, a, b)/sqrt(2).
        let q = Quaternion::new(0.5, 0.5, 0.5, -0.5);
        let s = fiber_point_s7(&base4([0.0, 1.0, 0.0, 0.0, 0.0]), q).unwrap();
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let (f_a, f_b) = q.complex_pair();
        assert!((s.amplitude(0) - h * f_a).norm() < 1e-15);
        assert!((s.amplitude(2) - h * f_a).norm() < 1e-15);
        assert!((s.amplitude(3) - h * f_b).norm() < 1e-15);
        assert!(separability_check(&s, 1, 1e-9).unwrap());

        // Entangled pole of the equator: the MES family.
        let s = fiber_point_s7(&base4([0.0, 0.0, 0.0, 1.0, 0.0]), q).unwrap();
        let mes = mes_state(f_a, f_b).unwrap();
        assert!(s
            .amplitudes()
            .iter()
            .zip(mes.amplitudes())
            .all(|(x, y)| (x - y).norm() < 1e-15));
    }

    #[test]
    fn mes_examples() {
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let s = mes_state(c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert!((s.amplitude(0) - c(h, 0.0)).norm() < 1e-15);
        assert!((s.amplitude(3) - c(h, 0.0)).norm() < 1e-15);
        assert_abs_diff_eq!(concurrence(&s).unwrap(), 1.0, epsilon = 1e-15);

        let s = mes_state(c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!((s.amplitude(1) - c(h, 0.0)).norm() < 1e-15);
        assert!((s.amplitude(2) - c(-h, 0.0)).norm() < 1e-15);

        let base = hopf_s7(&s, Grouping::Standard).unwrap();
        assert!(base.max_abs_diff(&base4([0.0, 0.0, 0.0, 1.0, 0.0])) < 1e-15);

        // Antipodal parameters give the same state up to phase.
        let a = mes_state(c(0.6, 0.0), c(0.0, 0.8)).unwrap();
        let b = mes_state(c(-0.6, 0.0), c(0.0, -0.8)).unwrap();
        assert!(projective_equal(&a, &b, 1e-12).unwrap());

        assert!(matches!(
            mes_state(c(1.0, 0.0), c(1.0, 0.0)),
            Err(Error::NotUnitNorm { .. })
        ));
    }

    #[test]
    fn epsilon_path_examples() {
        let (f_a, f_b) = (c(0.8, 0.0), c(0.0, 0.6));

        let s = epsilon_path(0.0, f_a, f_b, Ray::X).unwrap();
        assert!(separability_check(&s, 1, 1e-9).unwrap());
        let base = hopf_s7(&s, Grouping::Standard).unwrap();
        assert!(base.max_abs_diff(&base4([0.0, 1.0, 0.0, 0.0, 0.0])) < 1e-12);

        let eps = core::f64::consts::FRAC_PI_2;
        let s = epsilon_path(eps, f_a, f_b, Ray::X).unwrap();
        let mes = mes_state(f_a, f_b).unwrap();
        assert!(projective_equal(&s, &mes, 1e-12).unwrap());

        // Base points trace the expected great circles.
        let eps = 0.4;
        let s = epsilon_path(eps, f_a, f_b, Ray::X).unwrap();
        let base = hopf_s7(&s, Grouping::Standard).unwrap();
        let want = base4([0.0, libm::cos(eps), 0.0, libm::sin(eps), 0.0]);
        assert!(base.max_abs_diff(&want) < 1e-12);

        let s = epsilon_path(eps, f_a, f_b, Ray::Z).unwrap();
        let base = hopf_s7(&s, Grouping::Standard).unwrap();
        let want = base4([libm::cos(eps), 0.0, 0.0, libm::sin(eps), 0.0]);
        assert!(base.max_abs_diff(&want) < 1e-12);

        assert!(matches!(
            epsilon_path(2.0, f_a, f_b, Ray::X),
            Err(Error::EpsilonOutOfRange { .. })
        ));
        assert!(matches!(
            epsilon_path(-0.1, f_a, f_b, Ray::Z),
            Err(Error::EpsilonOutOfRange { .. })
        ));
    }

    #[test]
    fn concurrence_along_paths_is_sin_eps() {
        let (f_a, f_b) = (c(0.48, 0.64), c(0.6, 0.0));
        for m in 0..=16 {
            let eps = core::f64::consts::FRAC_PI_2 * m as f64 / 16.0;
            for ray in [Ray::X, Ray::Z] {
                let s = epsilon_path(eps, f_a, f_b, ray).unwrap();
                assert_abs_diff_eq!(
                    concurrence(&s).unwrap(),
                    libm::sin(eps),
                    epsilon = 1e-12
                );
                // Shell radius shrinks as cos(eps) along the way in.
                let leaf = classify_leaf(&s, 1e-9).unwrap();
                assert_abs_diff_eq!(leaf.shell_radius, libm::cos(eps), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn s15_fiber_at_poles_and_ghz_base() {
        let mut north = [0.0; 9];
        north[0] = 1.0;
        let s = fiber_point_s15(&BasePoint::new(north.to_vec()).unwrap(), Octonion::basis(2))
            .unwrap();
        assert_eq!(s, PureState::basis_state(3, 1).unwrap());

        let mut south = [0.0; 9];
        south[0] = -1.0;
        let s = fiber_point_s15(&BasePoint::new(south.to_vec()).unwrap(), Octonion::ONE).unwrap();
        assert_eq!(s, PureState::basis_state(3, 4).unwrap());

        // Base of the GHZ family: x7 = 1.
        let mut ghz_base = [0.0; 9];
        ghz_base[7] = 1.0;
        let base = BasePoint::new(ghz_base.to_vec()).unwrap();
        let s = fiber_point_s15(&base, Octonion::ONE).unwrap();
        let back = hopf_s15(&s).unwrap();
        assert!(back.max_abs_diff(&base) < 1e-12);
        // A different fiber coordinate gives a different state over the
        // same base.
        let t = fiber_point_s15(&base, Octonion::basis(5)).unwrap();
        assert!(!projective_equal(&s, &t, 1e-6).unwrap());
        let back = hopf_s15(&t).unwrap();
        assert!(back.max_abs_diff(&base) < 1e-12);
    }

    #[test]
    fn global_phase_turns_the_mes_base_twice_as_fast() {
        let s = mes_state(c(0.6, 0.0), c(0.0, 0.8)).unwrap();
        let base = hopf_s7(&s, Grouping::Standard).unwrap();
        for m in 1..8 {
            let omega = core::f64::consts::PI * m as f64 / 8.0;
            let turned = hopf_s7(&s.with_global_phase(omega), Grouping::Standard).unwrap();
            let (cos2, sin2) = (libm::cos(2.0 * omega), libm::sin(2.0 * omega));
            let want_x3 = cos2 * base.coord(3) - sin2 * base.coord(4);
            let want_x4 = sin2 * base.coord(3) + cos2 * base.coord(4);
            assert_abs_diff_eq!(turned.coord(3), want_x3, epsilon = 1e-10);
            assert_abs_diff_eq!(turned.coord(4), want_x4, epsilon = 1e-10);
            // Strictly between 0 and pi the state has left its fiber.
            assert!(turned.max_abs_diff(&base) > 0.1);
        }
        let full = hopf_s7(&s.with_global_phase(core::f64::consts::PI), Grouping::Standard).unwrap();
        assert!(full.max_abs_diff(&base) < 1e-12);
        assert!(projective_equal(&s, &s.with_global_phase(core::f64::consts::PI), 1e-12).unwrap());
    }

    #[test]
    fn projective_equality_edge_cases() {
        let s = PureState::basis_state(2, 0).unwrap();
        let t = PureState::basis_state(2, 1).unwrap();
        assert!(!projective_equal(&s, &t, 1e-9).unwrap());
        assert!(projective_equal(&s, &s.with_global_phase(1.234), 1e-12).unwrap());
        let one = PureState::basis_state(1, 0).unwrap();
        assert!(projective_equal(&s, &one, 1e-9).is_err());
    }

    fn arb_state(n: usize) -> impl Strategy<Value = PureState> {
        any::<u64>().prop_map(move |seed| PureState::random(n, seed).unwrap())
    }

    fn arb_unit_quaternion() -> impl Strategy<Value = Quaternion> {
        proptest::array::uniform4(-1.0f64..1.0)
            .prop_filter("norm too small", |a| {
                a.iter().map(|x| x * x).sum::<f64>() > 1e-2
            })
            .prop_map(|a| {
                let q = Quaternion::from_array(a);
                q.scale(1.0 / q.norm())
            })
    }

    fn arb_unit_octonion() -> impl Strategy<Value = Octonion> {
        proptest::array::uniform8(-1.0f64..1.0)
            .prop_filter("norm too small", |a| {
                a.iter().map(|x| x * x).sum::<f64>() > 1e-2
            })
            .prop_map(|a| {
                let o = Octonion::new(a);
                o.scale(1.0 / o.norm())
            })
    }

    proptest! {
        #[test]
        fn s7_fiber_round_trip(s in arb_state(2), q in arb_unit_quaternion()) {
            let base = hopf_s7(&s, Grouping::Standard).unwrap();
            let point = fiber_point_s7(&base, q).unwrap();
            let back = hopf_s7(&point, Grouping::Standard).unwrap();
            prop_assert!(back.max_abs_diff(&base) < 1e-10);
        }

        #[test]
        fn s7_fiber_points_differ_by_right_multiplication(
            s in arb_state(2),
            qa in arb_unit_quaternion(),
            qb in arb_unit_quaternion(),
        ) {
            let base = hopf_s7(&s, Grouping::Standard).unwrap();
            prop_assume!(base.coord(0) < 0.999);
            let p1 = encode_two_qubit(&fiber_point_s7(&base, qa).unwrap(), Grouping::Standard).unwrap();
            let p2 = encode_two_qubit(&fiber_point_s7(&base, qb).unwrap(), Grouping::Standard).unwrap();
            let q = p1.q1.inverse().unwrap() * p2.q1;
            prop_assert!((q.norm() - 1.0).abs() < 1e-9);
            prop_assert!((p1.q2 * q).max_abs_diff(p2.q2) < 1e-9);
        }

        #[test]
        fn s15_fiber_round_trip(s in arb_state(3), oct in arb_unit_octonion()) {
            let base = hopf_s15(&s).unwrap();
            let point = fiber_point_s15(&base, oct).unwrap();
            let back = hopf_s15(&point).unwrap();
            prop_assert!(back.max_abs_diff(&base) < 1e-10);

            // The lower half carries exactly sin^2(theta/2) of the weight.
            let x0 = base.coord(0);
            let weight: f64 = point.amplitudes()[4..].iter().map(|z| z.norm_sqr()).sum();
            prop_assert!((weight - (1.0 - x0) / 2.0).abs() < 1e-10);
        }

        #[test]
        fn separable_bases_reconstruct_separable_states(
            s1 in arb_state(1),
            s2 in arb_state(1),
            q in arb_unit_quaternion(),
        ) {
            let base = hopf_s7(&s1.tensor(&s2).unwrap(), Grouping::Standard).unwrap();
            let point = fiber_point_s7(&base, q).unwrap();
            prop_assert!(concurrence(&point).unwrap() < 1e-10);
        }

        #[test]
        fn frame_ratio_point_is_unit(s in arb_state(2)) {
            let base = hopf_s7(&s, Grouping::Standard).unwrap();
            prop_assume!(base.coord(0).abs() < 0.999);
            let f = fiber_frame(&base).unwrap();
            prop_assert!((f.u.norm_sqr() + f.v.norm_sqr() - 1.0).abs() < 1e-12);
            prop_assert!((f.axis.norm() - 1.0).abs() < 1e-12);
            prop_assert!((libm::cos(f.phi) - f.u.re).abs() < 1e-12);
        }

        #[test]
        fn phase_gauge_makes_v_real(s in arb_state(2)) {
            let c_val = {
                let a = s.amplitudes();
                2.0 * (a[0] * a[3] - a[1] * a[2])
            };
            prop_assume!(c_val.norm() > 0.1);
            let omega = -c_val.arg() / 2.0;
            let gauged = s.with_global_phase(omega);
            let base = hopf_s7(&gauged, Grouping::Standard).unwrap();
            prop_assert!(base.coord(4).abs() < 1e-10);
            prop_assert!(base.coord(3) > -1e-12);
            let f = fiber_frame(&base).unwrap();
            prop_assert!(f.v.im.abs() < 1e-10);
            let (theta, sin_theta) = (f.theta, libm::sin(f.theta));
            prop_assert!(theta > 0.0);
            prop_assert!((f.v.re - c_val.norm() / sin_theta).abs() < 1e-10);
        }
    }
}
