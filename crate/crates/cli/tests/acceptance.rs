//! Acceptance suite: every shipped guarantee, one test per criterion, each
//! at its stated sample count and tolerance. Run with `--nocapture` to see
//! the measured residuals.

use hopfq_core::{
    concurrence, entanglor_expectation, epsilon_path, fiber_point_s15, hopf_s15,
    hopf_s15_from_concurrences, hopf_s3, hopf_s7, mes_state, partial_bloch_radii,
    reduced_density, stereo_unproject_s3, Complex64, Grouping, Octonion, PureState, Quaternion,
    QuaternionPair, Ray,
};
use hopfq_cli::scene::{latitude_bases, pole_base, render_fibration_scene, Fiber};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn normal(r: &mut ChaCha8Rng) -> f64 {
    r.sample(StandardNormal)
}

fn random_quaternion(r: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::new(normal(r), normal(r), normal(r), normal(r))
}

fn random_unit_quaternion(r: &mut ChaCha8Rng) -> Quaternion {
    let q = random_quaternion(r);
    q.scale(1.0 / q.norm())
}

fn random_octonion(r: &mut ChaCha8Rng) -> Octonion {
    Octonion::new(std::array::from_fn(|_| normal(r)))
}

fn random_unit_octonion(r: &mut ChaCha8Rng) -> Octonion {
    let o = random_octonion(r);
    o.scale(1.0 / o.norm())
}

fn random_unit_pair(r: &mut ChaCha8Rng) -> (Complex64, Complex64) {
    random_unit_quaternion(r).complex_pair()
}

fn state(n: usize, parts: &[(f64, f64)]) -> PureState {
    PureState::new(n, parts.iter().map(|&(re, im)| Complex64::new(re, im)).collect()).unwrap()
}

fn report(name: &str, max_residual: f64, tol: f64) {
    assert!(
        max_residual < tol,
        "{name}: max residual {max_residual:e} exceeds {tol:e}"
    );
    println!("PASS {name}: max residual {max_residual:.3e} (tol {tol:e})");
}

/// Pinned products e_row * e_col = sign * e_index of the octonion basis.
const BASIS_PRODUCTS: [[(f64, usize); 8]; 8] = [
    [(1.0, 0), (1.0, 1), (1.0, 2), (1.0, 3), (1.0, 4), (1.0, 5), (1.0, 6), (1.0, 7)],
    [(1.0, 1), (-1.0, 0), (1.0, 3), (-1.0, 2), (1.0, 5), (-1.0, 4), (-1.0, 7), (1.0, 6)],
    [(1.0, 2), (-1.0, 3), (-1.0, 0), (1.0, 1), (1.0, 6), (1.0, 7), (-1.0, 4), (-1.0, 5)],
    [(1.0, 3), (1.0, 2), (-1.0, 1), (-1.0, 0), (1.0, 7), (-1.0, 6), (1.0, 5), (-1.0, 4)],
    [(1.0, 4), (-1.0, 5), (-1.0, 6), (-1.0, 7), (-1.0, 0), (1.0, 1), (1.0, 2), (1.0, 3)],
    [(1.0, 5), (1.0, 4), (-1.0, 7), (1.0, 6), (-1.0, 1), (-1.0, 0), (-1.0, 3), (1.0, 2)],
    [(1.0, 6), (1.0, 7), (1.0, 4), (-1.0, 5), (-1.0, 2), (1.0, 3), (-1.0, 0), (-1.0, 1)],
    [(1.0, 7), (-1.0, 6), (1.0, 5), (1.0, 4), (-1.0, 3), (-1.0, 2), (1.0, 1), (-1.0, 0)],
];

#[test]
fn criterion_1_algebra_tables_and_composition_norm() {
    // All 64 basis products, exactly.
    for (row, products) in BASIS_PRODUCTS.iter().enumerate() {
        for (col, &(sign, index)) in products.iter().enumerate() {
            let got = Octonion::basis(row) * Octonion::basis(col);
            assert_eq!(got, Octonion::basis(index).scale(sign), "e{row} * e{col}");
        }
    }
    // Hamilton relations, exactly.
    let (one, i, j, k) = (Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K);
    let minus_one = -one;
    assert_eq!(i * i, minus_one);
    assert_eq!(j * j, minus_one);
    assert_eq!(k * k, minus_one);
    assert_eq!(i * j * k, minus_one);
    assert_eq!(i * j, k);
    assert_eq!(j * k, i);
    assert_eq!(k * i, j);
    assert_eq!(j * i, -k);

    // |ab| = |a||b| on random pairs.
    let mut r = rng(101);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let (a, b) = (random_octonion(&mut r), random_octonion(&mut r));
        worst = worst.max(((a * b).norm() - a.norm() * b.norm()).abs());
        let (p, q) = (random_quaternion(&mut r), random_quaternion(&mut r));
        worst = worst.max(((p * q).norm() - p.norm() * q.norm()).abs());
    }
    report("algebra tables and composition norm (10^4 pairs)", worst, 1e-12);
}

#[test]
fn criterion_2_fiber_invariance() {
    let mut r = rng(202);
    let mut worst_s3: f64 = 0.0;
    for seed in 0..1_000u64 {
        let s = PureState::random(1, seed).unwrap();
        let omega = r.random_range(0.0..std::f64::consts::TAU);
        let base = hopf_s3(&s).unwrap();
        worst_s3 = worst_s3.max(base.max_abs_diff(&hopf_s3(&s.with_global_phase(omega)).unwrap()));
    }
    report("S3 map constant along phase orbits (10^3)", worst_s3, 1e-10);

    let mut worst_s7: f64 = 0.0;
    for seed in 0..1_000u64 {
        let s = PureState::random(2, seed).unwrap();
        let q = random_unit_quaternion(&mut r);
        let pair = hopfq_core::encode_two_qubit(&s, Grouping::Standard).unwrap();
        let moved = QuaternionPair::new(pair.q1 * q, pair.q2 * q, pair.grouping).unwrap();
        let s_moved = hopfq_core::decode_two_qubit(&moved).unwrap();
        let base = hopf_s7(&s, Grouping::Standard).unwrap();
        worst_s7 = worst_s7.max(base.max_abs_diff(&hopf_s7(&s_moved, Grouping::Standard).unwrap()));
    }
    report(
        "S7 map constant along right quaternion orbits (10^3)",
        worst_s7,
        1e-10,
    );

    let mut worst_s15: f64 = 0.0;
    for seed in 0..1_000u64 {
        let s = PureState::random(3, seed).unwrap();
        let base = hopf_s15(&s).unwrap();
        let point = fiber_point_s15(&base, random_unit_octonion(&mut r)).unwrap();
        worst_s15 = worst_s15.max(hopf_s15(&point).unwrap().max_abs_diff(&base));
    }
    report("S15 round trip over fiber points (10^3)", worst_s15, 1e-10);
}

#[test]
fn criterion_3_base_normalization() {
    let mut worst: f64 = 0.0;
    for seed in 0..10_000u64 {
        let unit_defect = |coords: &[f64]| -> f64 {
            (coords.iter().map(|x| x * x).sum::<f64>() - 1.0).abs()
        };
        let s1 = PureState::random(1, seed).unwrap();
        worst = worst.max(unit_defect(hopf_s3(&s1).unwrap().coords()));
        let s2 = PureState::random(2, seed).unwrap();
        worst = worst.max(unit_defect(hopf_s7(&s2, Grouping::Standard).unwrap().coords()));
        let s3 = PureState::random(3, seed).unwrap();
        worst = worst.max(unit_defect(hopf_s15(&s3).unwrap().coords()));
    }
    report("base points unit for all three maps (10^4 each)", worst, 1e-10);
}

#[test]
fn criterion_4_closed_form_checkpoints() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut worst: f64 = 0.0;
    let mut track = |got: f64, want: f64| {
        worst = worst.max((got - want).abs());
    };

    let bell = state(2, &[(h, 0.0), (0.0, 0.0), (0.0, 0.0), (h, 0.0)]);
    let base = hopf_s7(&bell, Grouping::Standard).unwrap();
    for (l, want) in [0.0, 0.0, 0.0, 1.0, 0.0].iter().enumerate() {
        track(base.coord(l), *want);
    }
    track(concurrence(&bell).unwrap(), 1.0);

    let zero_two = PureState::basis_state(2, 0).unwrap();
    let base = hopf_s7(&zero_two, Grouping::Standard).unwrap();
    for (l, want) in [1.0, 0.0, 0.0, 0.0, 0.0].iter().enumerate() {
        track(base.coord(l), *want);
    }

    let ghz = state(
        3,
        &[(h, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0), (h, 0.0)],
    );
    let base = hopf_s15(&ghz).unwrap();
    for (l, want) in [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0].iter().enumerate() {
        track(base.coord(l), *want);
    }

    let w = 1.0 / 3f64.sqrt();
    let w_state = state(
        3,
        &[(0.0, 0.0), (w, 0.0), (w, 0.0), (0.0, 0.0), (w, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)],
    );
    let base = hopf_s15(&w_state).unwrap();
    let third = 1.0 / 3.0;
    let want_w = [third, 0.0, 0.0, -2.0 * third, 0.0, -2.0 * third, 0.0, 0.0, 0.0];
    for (l, want) in want_w.iter().enumerate() {
        track(base.coord(l), *want);
    }
    let radii = partial_bloch_radii(&w_state).unwrap();
    track(radii.r1, third);
    track(radii.r2, third);
    track(radii.r3, third);

    report("closed-form checkpoints", worst, 1e-10);
}

#[test]
fn criterion_5_concurrence_law_on_paths() {
    let mut r = rng(505);
    let mut worst_path: f64 = 0.0;
    for m in 0..100 {
        let eps = std::f64::consts::FRAC_PI_2 * (m as f64 / 99.0);
        let (f_a, f_b) = random_unit_pair(&mut r);
        for ray in [Ray::X, Ray::Z] {
            let s = epsilon_path(eps, f_a, f_b, ray).unwrap();
            worst_path = worst_path.max((concurrence(&s).unwrap() - eps.sin()).abs());
        }
    }
    report("path concurrence is sin(eps), both rays (100)", worst_path, 1e-10);

    let mut worst_det: f64 = 0.0;
    for seed in 0..10_000u64 {
        let s = PureState::random(2, seed).unwrap();
        let c = concurrence(&s).unwrap();
        let det = reduced_density(&s, 1).unwrap().det();
        worst_det = worst_det.max((det - c * c / 4.0).abs());
    }
    report("det rho1 = c^2/4 (10^4)", worst_det, 1e-12);
}

#[test]
fn criterion_6_entanglor_identity() {
    let mut worst: f64 = 0.0;
    for seed in 0..10_000u64 {
        let s = PureState::random(2, seed).unwrap();
        let direct = entanglor_expectation(&s).unwrap();
        let a = s.amplitudes();
        let bilinear = 2.0 * (a[0] * a[3] - a[1] * a[2]);
        worst = worst.max((direct - bilinear).norm());
    }
    report("entanglor equals concurrence bilinear (10^4)", worst, 1e-12);

    let mut r = rng(606);
    let mut worst_rot: f64 = 0.0;
    for _ in 0..100 {
        let (f_a, f_b) = random_unit_pair(&mut r);
        let s = mes_state(f_a, f_b).unwrap();
        let omega = r.random_range(0.0..std::f64::consts::TAU);
        let before = hopf_s7(&s, Grouping::Standard).unwrap();
        let after = hopf_s7(&s.with_global_phase(omega), Grouping::Standard).unwrap();
        let (cos2, sin2) = ((2.0 * omega).cos(), (2.0 * omega).sin());
        let want3 = cos2 * before.coord(3) - sin2 * before.coord(4);
        let want4 = sin2 * before.coord(3) + cos2 * before.coord(4);
        worst_rot = worst_rot
            .max((after.coord(3) - want3).abs())
            .max((after.coord(4) - want4).abs());
    }
    report("global phase rotates MES (x3, x4) by 2 omega (100)", worst_rot, 1e-10);
}

#[test]
fn criterion_7_separability_stratification() {
    let mut worst_2q: f64 = 0.0;
    for seed in 0..1_000u64 {
        let product = PureState::random(1, 2 * seed)
            .unwrap()
            .tensor(&PureState::random(1, 2 * seed + 1).unwrap())
            .unwrap();
        let base = hopf_s7(&product, Grouping::Standard).unwrap();
        worst_2q = worst_2q.max(base.coord(3).abs()).max(base.coord(4).abs());
    }
    report("2-qubit products have x3 = x4 = 0 (10^3)", worst_2q, 1e-10);

    let mut worst_3q: f64 = 0.0;
    for seed in 0..1_000u64 {
        let s = PureState::random(1, 2 * seed)
            .unwrap()
            .tensor(&PureState::random(2, 2 * seed + 1).unwrap())
            .unwrap();
        let radii = partial_bloch_radii(&s).unwrap();
        worst_3q = worst_3q.max((radii.r1 - 1.0).abs());
        worst_3q = worst_3q.max((radii.r2 - radii.r3).abs());
        let base = hopf_s15(&s).unwrap();
        for l in 3..=8 {
            worst_3q = worst_3q.max(base.coord(l).abs());
        }
    }
    report(
        "s1 (x) s23 gives r1 = 1, x3..x8 = 0, r2 = r3 (10^3)",
        worst_3q,
        1e-10,
    );
}

#[test]
fn criterion_8_so3_identification() {
    let mut r = rng(808);
    let mut worst: f64 = 0.0;
    for _ in 0..1_000 {
        let (f_a, f_b) = random_unit_pair(&mut r);
        let plus = mes_state(f_a, f_b).unwrap();
        let minus = mes_state(-f_a, -f_b).unwrap();
        let overlap = plus.inner_product(&minus).unwrap().norm();
        worst = worst.max(1.0 - overlap);
    }
    report("mes(f) and mes(-f) projectively equal (10^3)", worst, 1e-12);
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm3(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

/// Deviation from the circle through three well-separated samples:
/// out-of-plane distance plus center-distance spread.
fn circle_residual(samples: &[[f64; 3]]) -> f64 {
    let p0 = samples[0];
    let u = sub(samples[samples.len() / 3], p0);
    let v = sub(samples[2 * samples.len() / 3], p0);
    let n = cross(u, v);
    let n_hat = [n[0] / norm3(n), n[1] / norm3(n), n[2] / norm3(n)];
    let (uu, uv, vv) = (dot(u, u), dot(u, v), dot(v, v));
    let det = uu * vv - uv * uv;
    let s = (uu * vv - uv * vv) / (2.0 * det);
    let t = (uu * vv - uv * uu) / (2.0 * det);
    let center = [
        p0[0] + s * u[0] + t * v[0],
        p0[1] + s * u[1] + t * v[1],
        p0[2] + s * u[2] + t * v[2],
    ];
    let radius = norm3(sub(p0, center));
    samples
        .iter()
        .map(|&p| {
            dot(sub(p, p0), n_hat)
                .abs()
                .max((norm3(sub(p, center)) - radius).abs())
        })
        .fold(0.0, f64::max)
}

/// Max distance from the straight line through the endpoints.
fn line_residual(samples: &[[f64; 3]]) -> f64 {
    let p0 = samples[0];
    let d = sub(samples[samples.len() - 1], p0);
    let d_hat = [d[0] / norm3(d), d[1] / norm3(d), d[2] / norm3(d)];
    samples
        .iter()
        .map(|&p| {
            let rel = sub(p, p0);
            let along = dot(rel, d_hat);
            norm3([
                rel[0] - along * d_hat[0],
                rel[1] - along * d_hat[1],
                rel[2] - along * d_hat[2],
            ])
        })
        .fold(0.0, f64::max)
}

/// Worst distance between the fiber's base and the image of its samples
/// pulled back to S3 and pushed through the forward map.
fn map_back_residual(fiber: &Fiber, pole: [f64; 4]) -> f64 {
    let mut worst: f64 = 0.0;
    for &y in &fiber.samples {
        let p = stereo_unproject_s3(y, pole);
        let s = PureState::renormalized(
            1,
            vec![Complex64::new(p[0], p[1]), Complex64::new(p[2], p[3])],
        )
        .unwrap();
        let back = hopf_s3(&s).unwrap();
        for (l, &want) in fiber.base.iter().enumerate() {
            worst = worst.max((back.coord(l) - want).abs());
        }
    }
    worst
}

#[test]
fn criterion_9_fibration_scene() {
    let pole = [1.0, 0.0, 0.0, 0.0];
    let mut bases = latitude_bases(&[0.6, 1.0, 1.4], 12).unwrap();
    assert_eq!(bases.len(), 36);
    bases.push(pole_base(pole).unwrap());
    let scene = render_fibration_scene(&bases, 64, pole).unwrap();
    assert_eq!(scene.fibers.len(), 37);

    let mut worst_fit: f64 = 0.0;
    let mut worst_back: f64 = 0.0;
    let mut open_count = 0;
    for fiber in &scene.fibers {
        assert_eq!(fiber.samples.len(), 64);
        if fiber.closed {
            worst_fit = worst_fit.max(circle_residual(&fiber.samples));
        } else {
            open_count += 1;
            worst_fit = worst_fit.max(line_residual(&fiber.samples));
        }
        worst_back = worst_back.max(map_back_residual(fiber, pole));
    }
    assert_eq!(open_count, 1, "exactly one straight-line fiber expected");
    report(
        "scene fibers are circles/lines (3 x 12 x 64 + pole)",
        worst_fit,
        1e-8,
    );
    report("scene samples map back to their bases", worst_back, 1e-8);
}

#[test]
fn criterion_10_s15_route_agreement() {
    let mut worst: f64 = 0.0;
    for seed in 0..10_000u64 {
        let s = PureState::random(3, seed).unwrap();
        let octonion_route = hopf_s15(&s).unwrap();
        let bilinear_route = hopf_s15_from_concurrences(&s).unwrap();
        worst = worst.max(octonion_route.max_abs_diff(&bilinear_route));
    }
    report("octonion and bilinear S15 routes agree (10^4)", worst, 1e-10);
}
