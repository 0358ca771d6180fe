//! JSON wire types and IO helpers.
//!
//! Numbers are serialized with the shortest decimal that round-trips, so a
//! command run twice on the same input produces byte-identical output.

use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use hopfq_core::{BasePoint, Complex64, PureState};
use serde::{Deserialize, Serialize};

use crate::{CliError, Result};

/// How far the norm of an input state may sit from 1 and still be accepted;
/// accepted states are renormalized before any computation. Inputs produced
/// by this tool re-enter well inside the band.
pub const INPUT_NORM_TOL: f64 = 1e-6;

/// Canonicalizes floats for the wire: negative zero becomes plain zero.
pub fn clean(x: f64) -> f64 {
    x + 0.0
}

/// State as it appears on the wire: `{"n": 2, "amplitudes": [[re, im], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateJson {
    pub n: usize,
    pub amplitudes: Vec<[f64; 2]>,
}

impl StateJson {
    pub fn from_state(state: &PureState) -> Self {
        StateJson {
            n: state.n_qubits(),
            amplitudes: state
                .amplitudes()
                .iter()
                .map(|z| [clean(z.re), clean(z.im)])
                .collect(),
        }
    }

    /// Validates and converts. Without `renormalize` the norm must lie
    /// within [`INPUT_NORM_TOL`] of 1; with it any nonzero state is
    /// accepted. States already unit to full precision pass through with
    /// their bits untouched; anything else is rescaled.
    pub fn into_state(self, renormalize: bool) -> Result<PureState> {
        let amps: Vec<Complex64> = self
            .amplitudes
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        if !amps.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(CliError::Validation(
                "amplitudes must be finite numbers".into(),
            ));
        }
        let norm = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if !renormalize && (norm - 1.0).abs() > INPUT_NORM_TOL {
            return Err(CliError::Validation(format!(
                "state norm {norm} is outside 1 +/- {INPUT_NORM_TOL}; \
                 pass --renormalize to accept and rescale"
            )));
        }
        if norm == 0.0 {
            return Err(CliError::Validation("state has zero norm".into()));
        }
        let amps = if (norm - 1.0).abs() <= 1e-10 {
            amps
        } else {
            amps.iter().map(|z| z / norm).collect()
        };
        Ok(PureState::new(self.n, amps)?)
    }
}

/// Base point on the wire: `{"dim": 4, "coords": [x0, ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BaseJson {
    pub dim: usize,
    pub coords: Vec<f64>,
}

impl BaseJson {
    pub fn from_base(base: &BasePoint) -> Self {
        BaseJson {
            dim: base.dim(),
            coords: base.coords().iter().map(|&x| clean(x)).collect(),
        }
    }
}

/// Reads a state from `path`, or from stdin when `path` is `-`.
pub fn read_state(path: &str, renormalize: bool) -> Result<PureState> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(path)
            .map_err(|e| CliError::Validation(format!("cannot read {path}: {e}")))?
    };
    let parsed: StateJson = serde_json::from_str(&text)?;
    parsed.into_state(renormalize)
}

/// Serializes compactly with a trailing newline.
pub fn to_json_line<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}

/// Writes to `output`, or to stdout when it is `None`.
pub fn write_output(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Validation(format!("cannot write {}: {e}", path.display()))),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}
