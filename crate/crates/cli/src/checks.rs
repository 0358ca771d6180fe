//! Self-check suite: reruns the library's invariants on fresh random
//! samples and reports one pass/fail entry per invariant.
//!
//! Each check draws from its own seeded stream (split off the run seed),
//! so checks could run in parallel without changing any result.

use hopfq_core::{
    concurrence, encode_two_qubit, entanglor_expectation, epsilon_path, fiber_point_s15,
    hopf_s15, hopf_s15_from_concurrences, hopf_s3, hopf_s7, mes_state, reduced_density,
    stereo_project_s3, stereo_unproject_s3, Complex64, Grouping, Octonion, PureState, Quaternion,
    Ray, StereoImage,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::foliate::item_seed;

/// One report line: the invariant checked, how many samples it ran on, the
/// worst residual seen, and the tolerance it was held to.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub samples: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Full run: per-check entries plus the overall verdict.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub samples: usize,
    pub seed: u64,
    pub all_passed: bool,
    pub checks: Vec<CheckEntry>,
}

/// Knobs for a check run. `octonion_mul` is the product the octonion
/// checks exercise; tests swap in a deliberately corrupted version (one
/// wrong table sign) to confirm the composition-norm check catches it.
#[derive(Clone, Copy)]
pub struct CheckConfig {
    pub samples: usize,
    pub seed: u64,
    pub octonion_mul: fn(Octonion, Octonion) -> Octonion,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            samples: 1000,
            seed: 1,
            octonion_mul: |a, b| a * b,
        }
    }
}

fn normal(rng: &mut ChaCha8Rng) -> f64 {
    rng.sample(StandardNormal)
}

fn random_quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::new(normal(rng), normal(rng), normal(rng), normal(rng))
}

fn random_unit_quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    loop {
        let q = random_quaternion(rng);
        if q.norm() > 1e-6 {
            return q.scale(1.0 / q.norm());
        }
    }
}

fn random_octonion(rng: &mut ChaCha8Rng) -> Octonion {
    Octonion::new(std::array::from_fn(|_| normal(rng)))
}

fn random_unit_octonion(rng: &mut ChaCha8Rng) -> Octonion {
    loop {
        let o = random_octonion(rng);
        if o.norm() > 1e-6 {
            return o.scale(1.0 / o.norm());
        }
    }
}

fn random_state(rng: &mut ChaCha8Rng, n: usize) -> PureState {
    PureState::random(n, rng.random()).expect("random state")
}

fn random_unit_pair(rng: &mut ChaCha8Rng) -> (Complex64, Complex64) {
    let q = random_unit_quaternion(rng);
    q.complex_pair()
}

struct Runner {
    config: CheckConfig,
    entries: Vec<CheckEntry>,
}

impl Runner {
    /// Runs `residual` once per sample with a per-check RNG stream and
    /// records the worst value.
    fn check(
        &mut self,
        name: &str,
        tolerance: f64,
        mut residual: impl FnMut(&mut ChaCha8Rng) -> f64,
    ) {
        let index = self.entries.len() as u64;
        let mut rng = ChaCha8Rng::seed_from_u64(item_seed(self.config.seed, index));
        let mut max_residual: f64 = 0.0;
        for _ in 0..self.config.samples {
            max_residual = max_residual.max(residual(&mut rng).abs());
        }
        self.entries.push(CheckEntry {
            name: name.to_owned(),
            samples: self.config.samples,
            max_residual,
            tolerance,
            passed: max_residual <= tolerance,
        });
    }
}

/// Runs every check and collects the report. The exit-code mapping (0 when
/// everything passed, 2 otherwise) is the caller's job.
pub fn run_checks(config: CheckConfig) -> CheckReport {
    let mut r = Runner {
        config,
        entries: Vec::new(),
    };
    let omul = config.octonion_mul;

    r.check("quaternion composition norm", 1e-12, |rng| {
        let (a, b) = (random_quaternion(rng), random_quaternion(rng));
        (a * b).norm() - a.norm() * b.norm()
    });
    r.check("quaternion product routes agree", 1e-12, |rng| {
        let (a, b) = (random_quaternion(rng), random_quaternion(rng));
        (a * b).max_abs_diff(a.mul_via_complex_pairs(b))
    });
    r.check("octonion composition norm", 1e-12, move |rng| {
        let (a, b) = (random_unit_octonion(rng), random_unit_octonion(rng));
        omul(a, b).norm() - 1.0
    });
    r.check("octonion alternativity", 1e-12, move |rng| {
        let (x, y) = (random_unit_octonion(rng), random_unit_octonion(rng));
        omul(omul(x, x), y).max_abs_diff(omul(x, omul(x, y)))
    });
    r.check("octonion product routes agree", 1e-12, move |rng| {
        let (a, b) = (random_unit_octonion(rng), random_unit_octonion(rng));
        omul(a, b).max_abs_diff(a.mul_via_quaternion_pairs(b))
    });
    r.check("bloch base is unit", 1e-10, |rng| {
        let base = hopf_s3(&random_state(rng, 1)).expect("bloch map");
        base.coords().iter().map(|x| x * x).sum::<f64>() - 1.0
    });
    r.check("bloch base ignores global phase", 1e-10, |rng| {
        let s = random_state(rng, 1);
        let omega = rng.random_range(0.0..std::f64::consts::TAU);
        hopf_s3(&s)
            .expect("bloch map")
            .max_abs_diff(&hopf_s3(&s.with_global_phase(omega)).expect("bloch map"))
    });
    r.check("s7 base is unit", 1e-10, |rng| {
        let base = hopf_s7(&random_state(rng, 2), Grouping::Standard).expect("s7 map");
        base.coords().iter().map(|x| x * x).sum::<f64>() - 1.0
    });
    r.check("s7 base constant along fibers", 1e-10, |rng| {
        let s = random_state(rng, 2);
        let q = random_unit_quaternion(rng);
        let pair = encode_two_qubit(&s, Grouping::Standard).expect("encode");
        let moved = hopfq_core::QuaternionPair::new(pair.q1 * q, pair.q2 * q, pair.grouping)
            .expect("unit pair");
        let s2 = hopfq_core::decode_two_qubit(&moved).expect("decode");
        hopf_s7(&s, Grouping::Standard)
            .expect("s7 map")
            .max_abs_diff(&hopf_s7(&s2, Grouping::Standard).expect("s7 map"))
    });
    r.check("s15 base is unit", 1e-10, |rng| {
        let base = hopf_s15(&random_state(rng, 3)).expect("s15 map");
        base.coords().iter().map(|x| x * x).sum::<f64>() - 1.0
    });
    r.check("s15 fiber round trip", 1e-10, |rng| {
        let base = hopf_s15(&random_state(rng, 3)).expect("s15 map");
        let point = fiber_point_s15(&base, random_unit_octonion(rng)).expect("fiber point");
        hopf_s15(&point).expect("s15 map").max_abs_diff(&base)
    });
    r.check("s15 coordinate routes agree", 1e-10, |rng| {
        let s = random_state(rng, 3);
        hopf_s15(&s)
            .expect("s15 map")
            .max_abs_diff(&hopf_s15_from_concurrences(&s).expect("s15 bilinear route"))
    });
    r.check("entanglor matches concurrence bilinear", 1e-12, |rng| {
        let s = random_state(rng, 2);
        let direct = entanglor_expectation(&s).expect("entanglor");
        let a = s.amplitudes();
        (direct - 2.0 * (a[0] * a[3] - a[1] * a[2])).norm()
    });
    r.check("reduced density determinant is c^2/4", 1e-12, |rng| {
        let s = random_state(rng, 2);
        let c = concurrence(&s).expect("concurrence");
        reduced_density(&s, 1).expect("partial trace").det() - c * c / 4.0
    });
    r.check("product states carry no entangling coords", 1e-10, |rng| {
        let s = random_state(rng, 1).tensor(&random_state(rng, 1)).expect("product");
        let base = hopf_s7(&s, Grouping::Standard).expect("s7 map");
        base.coord(3).abs().max(base.coord(4).abs())
    });
    r.check("path concurrence is sin(eps)", 1e-10, |rng| {
        let (f_a, f_b) = random_unit_pair(rng);
        let eps = rng.random_range(0.0..=std::f64::consts::FRAC_PI_2);
        let ray = if rng.random() { Ray::X } else { Ray::Z };
        let s = epsilon_path(eps, f_a, f_b, ray).expect("path");
        concurrence(&s).expect("concurrence") - eps.sin()
    });
    r.check("mes antipodes coincide projectively", 1e-12, |rng| {
        let (f_a, f_b) = random_unit_pair(rng);
        let s = mes_state(f_a, f_b).expect("mes");
        let t = mes_state(-f_a, -f_b).expect("mes");
        1.0 - s.inner_product(&t).expect("overlap").norm()
    });
    r.check("stereo projection round trip", 1e-10, |rng| {
        let pole = random_unit_quaternion(rng).to_array();
        loop {
            let p = random_unit_quaternion(rng).to_array();
            match stereo_project_s3(p, pole) {
                StereoImage::Point(y) => {
                    let back = stereo_unproject_s3(y, pole);
                    break (0..4).map(|l| (back[l] - p[l]).abs()).fold(0.0, f64::max);
                }
                // A draw that lands on the pole carries no information;
                // redraw.
                StereoImage::Infinity => continue,
            }
        }
    });

    let all_passed = r.entries.iter().all(|e| e.passed);
    CheckReport {
        samples: config.samples,
        seed: config.seed,
        all_passed,
        checks: r.entries,
    }
}
