//! `hopfq`: Hopf-fibration geometry of 1-, 2- and 3-qubit pure states.
//!
//! Commands that consume a state read it as JSON from a file argument or
//! stdin; everything writes JSON (CSV where noted) to stdout or `--output`.
//! Exit codes: 0 success, 1 validation error, 2 failed self-check.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hopfq_core::{
    classify_leaf, epsilon_path, fiber_point_s15, fiber_point_s7, hopf_s15, hopf_s3, hopf_s7,
    mes_state, reduced_density, BasePoint, Complex64, Grouping, Octonion, PureState, Quaternion,
    Ray,
};
use hopfq_cli::checks::{run_checks, CheckConfig};
use hopfq_cli::foliate::{foliate_three_qubits, foliate_two_qubits, three_qubit_csv, two_qubit_csv};
use hopfq_cli::formats::{clean, read_state, to_json_line, write_output, BaseJson, StateJson};
use hopfq_cli::scene::{latitude_bases, pole_base, render_fibration_scene};
use hopfq_cli::{CliError, Result};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "hopfq",
    version,
    about = "Hopf-fibration geometry of small pure states",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupingArg {
    Standard,
    Alternate,
}

impl From<GroupingArg> for Grouping {
    fn from(g: GroupingArg) -> Grouping {
        match g {
            GroupingArg::Standard => Grouping::Standard,
            GroupingArg::Alternate => Grouping::Alternate,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RayArg {
    X,
    Z,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bloch vector (z, x, y) of a one-qubit state
    Bloch {
        /// State JSON file, or - for stdin
        #[arg(default_value = "-")]
        input: String,
        /// Accept any nonzero norm and rescale
        #[arg(long)]
        renormalize: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// S4 base point of a two-qubit state
    Hopf2 {
        #[arg(default_value = "-")]
        input: String,
        /// Which qubit plays the quaternion-pair row index
        #[arg(long, value_enum, default_value = "standard")]
        grouping: GroupingArg,
        #[arg(long)]
        renormalize: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// S8 base point of a three-qubit state
    Hopf3 {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        renormalize: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Concurrence, shell radius and foliation leaf of a two-qubit state
    Concurrence {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        renormalize: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reduced density matrix, Bloch vector and radius of one qubit
    Rho {
        /// Which qubit to keep (1-based)
        #[arg(long)]
        qubit: usize,
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        renormalize: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Two-qubit state on the fiber over an S4 base point
    Fiber2 {
        /// Base point x0,x1,x2,x3,x4
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        base: Vec<f64>,
        /// Fiber coordinate: quaternion re,i,j,k
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1,0,0,0")]
        q: Vec<f64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Three-qubit state on the fiber over an S8 base point
    Fiber3 {
        /// Base point x0,...,x8
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        base: Vec<f64>,
        /// Fiber coordinate: octonion e0,...,e7
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1,0,0,0,0,0,0,0")]
        c: Vec<f64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Maximally entangled two-qubit state from a unit pair (a, b)
    Mes {
        /// First component re,im
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1,0")]
        a: Vec<f64>,
        /// Second component re,im
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0,0")]
        b: Vec<f64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// State at parameter eps on an entangling great-circle path
    Path {
        #[arg(long, value_enum)]
        ray: RayArg,
        /// Path parameter in [0, pi/2]
        #[arg(long, allow_negative_numbers = true)]
        eps: f64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1,0")]
        a: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0,0")]
        b: Vec<f64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Fibration scene: S1 fibers over latitude rings, projected to R3
    RenderS3 {
        /// Polar angles of the latitude rings, comma separated
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0.6,1.0,1.4")]
        latitudes: Vec<f64>,
        /// Bases per latitude ring
        #[arg(long, default_value_t = 12)]
        bases: usize,
        /// Samples per fiber
        #[arg(long, default_value_t = 64)]
        samples: usize,
        /// Projection pole on S3
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1,0,0,0")]
        pole: Vec<f64>,
        /// Also render the straight-line fiber through the pole
        #[arg(long)]
        with_pole_fiber: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Haar-sample entanglement coordinates of random states
    Foliate {
        /// Number of qubits (2 or 3)
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-run the library's invariants on random samples
    Check {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct ConcurrenceJson {
    concurrence: f64,
    shell_radius: f64,
    label: String,
}

#[derive(Serialize)]
struct RhoJson {
    qubit: usize,
    matrix: [[[f64; 2]; 2]; 2],
    bloch_vector: [f64; 3],
    radius: f64,
}

#[derive(Serialize)]
struct FoliateJson<R: Serialize> {
    n: usize,
    count: usize,
    seed: u64,
    rows: Vec<R>,
}

/// Classification tolerance: `HOPFQ_TOL` when set, library default
/// otherwise.
fn class_tol() -> Result<f64> {
    match std::env::var("HOPFQ_TOL") {
        Ok(text) => {
            let value: f64 = text.parse().map_err(|_| {
                CliError::Validation(format!("HOPFQ_TOL must be a number, got {text:?}"))
            })?;
            if !value.is_finite() || value <= 0.0 {
                return Err(CliError::Validation(format!(
                    "HOPFQ_TOL must be positive and finite, got {value}"
                )));
            }
            Ok(value)
        }
        Err(std::env::VarError::NotPresent) => Ok(hopfq_core::tol::DEFAULT_CLASS_TOL),
        Err(e) => Err(CliError::Validation(format!("HOPFQ_TOL: {e}"))),
    }
}

fn expect_len(what: &str, values: &[f64], len: usize) -> Result<()> {
    if values.len() != len {
        return Err(CliError::Validation(format!(
            "{what} needs {len} comma-separated numbers, got {}",
            values.len()
        )));
    }
    if !values.iter().all(|x| x.is_finite()) {
        return Err(CliError::Validation(format!("{what} must be finite")));
    }
    Ok(())
}

/// Scales a near-unit vector to exact unit norm; inputs farther than 1e-6
/// from the sphere are rejected rather than silently fixed.
fn renormalized(what: &str, values: &[f64]) -> Result<Vec<f64>> {
    let norm = values.iter().map(|x| x * x).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > hopfq_cli::formats::INPUT_NORM_TOL {
        return Err(CliError::Validation(format!(
            "{what} has norm {norm}, expected 1 +/- {}",
            hopfq_cli::formats::INPUT_NORM_TOL
        )));
    }
    Ok(values.iter().map(|x| x / norm).collect())
}

fn parse_base(values: &[f64], dim: usize) -> Result<BasePoint> {
    expect_len("--base", values, dim + 1)?;
    Ok(BasePoint::new(renormalized("--base", values)?)?)
}

fn parse_quaternion(values: &[f64]) -> Result<Quaternion> {
    expect_len("--q", values, 4)?;
    let v = renormalized("--q", values)?;
    Ok(Quaternion::new(v[0], v[1], v[2], v[3]))
}

fn parse_octonion(values: &[f64]) -> Result<Octonion> {
    expect_len("--c", values, 8)?;
    let v = renormalized("--c", values)?;
    Ok(Octonion::new(std::array::from_fn(|l| v[l])))
}

fn parse_pair(a: &[f64], b: &[f64]) -> Result<(Complex64, Complex64)> {
    expect_len("--a", a, 2)?;
    expect_len("--b", b, 2)?;
    let v = renormalized("(--a, --b)", &[a[0], a[1], b[0], b[1]])?;
    Ok((Complex64::new(v[0], v[1]), Complex64::new(v[2], v[3])))
}

fn state_json(state: &PureState) -> Result<String> {
    to_json_line(&StateJson::from_state(state))
}

fn base_json(base: &BasePoint) -> Result<String> {
    to_json_line(&BaseJson::from_base(base))
}

fn run(cmd: Cmd) -> Result<()> {
    match cmd {
        Cmd::Bloch {
            input,
            renormalize,
            output,
        } => {
            let state = read_state(&input, renormalize)?;
            let text = base_json(&hopf_s3(&state)?)?;
            write_output(output.as_deref(), &text)
        }
        Cmd::Hopf2 {
            input,
            grouping,
            renormalize,
            output,
        } => {
            let state = read_state(&input, renormalize)?;
            let text = base_json(&hopf_s7(&state, grouping.into())?)?;
            write_output(output.as_deref(), &text)
        }
        Cmd::Hopf3 {
            input,
            renormalize,
            output,
        } => {
            let state = read_state(&input, renormalize)?;
            let text = base_json(&hopf_s15(&state)?)?;
            write_output(output.as_deref(), &text)
        }
        Cmd::Concurrence {
            input,
            renormalize,
            output,
        } => {
            let state = read_state(&input, renormalize)?;
            let leaf = classify_leaf(&state, class_tol()?)?;
            let text = to_json_line(&ConcurrenceJson {
                concurrence: leaf.concurrence,
                shell_radius: leaf.shell_radius,
                label: leaf.label.as_str().to_owned(),
            })?;
            write_output(output.as_deref(), &text)
        }
        Cmd::Rho {
            qubit,
            input,
            renormalize,
            output,
        } => {
            let state = read_state(&input, renormalize)?;
            let rho = reduced_density(&state, qubit)?;
            let entry = |r, c| {
                let z = rho.entry(r, c);
                [clean(z.re), clean(z.im)]
            };
            let text = to_json_line(&RhoJson {
                qubit,
                matrix: [
                    [entry(0, 0), entry(0, 1)],
                    [entry(1, 0), entry(1, 1)],
                ],
                bloch_vector: rho.bloch_vector().map(clean),
                radius: rho.bloch_radius(),
            })?;
            write_output(output.as_deref(), &text)
        }
        Cmd::Fiber2 { base, q, output } => {
            let state = fiber_point_s7(&parse_base(&base, 4)?, parse_quaternion(&q)?)?;
            write_output(output.as_deref(), &state_json(&state)?)
        }
        Cmd::Fiber3 { base, c, output } => {
            let state = fiber_point_s15(&parse_base(&base, 8)?, parse_octonion(&c)?)?;
            write_output(output.as_deref(), &state_json(&state)?)
        }
        Cmd::Mes { a, b, output } => {
            let (f_a, f_b) = parse_pair(&a, &b)?;
            let state = mes_state(f_a, f_b)?;
            write_output(output.as_deref(), &state_json(&state)?)
        }
        Cmd::Path {
            ray,
            eps,
            a,
            b,
            output,
        } => {
            let (f_a, f_b) = parse_pair(&a, &b)?;
            let ray = match ray {
                RayArg::X => Ray::X,
                RayArg::Z => Ray::Z,
            };
            let state = epsilon_path(eps, f_a, f_b, ray)?;
            write_output(output.as_deref(), &state_json(&state)?)
        }
        Cmd::RenderS3 {
            latitudes,
            bases,
            samples,
            pole,
            with_pole_fiber,
            output,
        } => {
            expect_len("--pole", &pole, 4)?;
            let pole = [pole[0], pole[1], pole[2], pole[3]];
            let mut base_list = latitude_bases(&latitudes, bases)?;
            if with_pole_fiber {
                base_list.push(pole_base(pole)?);
            }
            let scene = render_fibration_scene(&base_list, samples, pole)?;
            write_output(output.as_deref(), &to_json_line(&scene)?)
        }
        Cmd::Foliate {
            n,
            count,
            seed,
            format,
            output,
        } => {
            if count == 0 {
                return Err(CliError::Validation("--count must be at least 1".into()));
            }
            let text = match (n, format) {
                (2, FormatArg::Json) => to_json_line(&FoliateJson {
                    n,
                    count,
                    seed,
                    rows: foliate_two_qubits(count, seed, class_tol()?)?,
                })?,
                (2, FormatArg::Csv) => two_qubit_csv(&foliate_two_qubits(count, seed, class_tol()?)?),
                (3, FormatArg::Json) => to_json_line(&FoliateJson {
                    n,
                    count,
                    seed,
                    rows: foliate_three_qubits(count, seed)?,
                })?,
                (3, FormatArg::Csv) => three_qubit_csv(&foliate_three_qubits(count, seed)?),
                _ => {
                    return Err(CliError::Validation(format!(
                        "--n must be 2 or 3, got {n}"
                    )))
                }
            };
            write_output(output.as_deref(), &text)
        }
        Cmd::Check {
            samples,
            seed,
            output,
        } => {
            if samples == 0 {
                return Err(CliError::Validation("--samples must be at least 1".into()));
            }
            let report = run_checks(CheckConfig {
                samples,
                seed,
                ..CheckConfig::default()
            });
            write_output(output.as_deref(), &to_json_line(&report)?)?;
            if report.all_passed {
                Ok(())
            } else {
                Err(CliError::CheckFailure)
            }
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    match run(cli.cmd) {
        Ok(()) => {}
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
        Err(CliError::CheckFailure) => {
            eprintln!("error: one or more self-checks failed");
            std::process::exit(2);
        }
    }
}
