//! Parsing of command-line values and profile files.

use photon_wigner::{FourVector, QuadratureRule, SpectralProfile, UnitDirection, C64};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum InputError {
    #[error("expected {expected} comma-separated numbers, got `{text}`")]
    Arity { expected: usize, text: String },
    #[error("`{0}` is not a finite number")]
    Number(String),
    #[error("profile line {line}: {message}")]
    Profile { line: usize, message: String },
    #[error("profile: {0}")]
    ProfileShape(#[from] photon_wigner::Error),
}

fn number(s: &str) -> Result<f64, InputError> {
    let s = s.trim();
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(InputError::Number(s.to_string())),
    }
}

fn list<const N: usize>(text: &str) -> Result<[f64; N], InputError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != N {
        return Err(InputError::Arity {
            expected: N,
            text: text.to_string(),
        });
    }
    let mut out = [0.0; N];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = number(p)?;
    }
    Ok(out)
}

/// `t,x,y,z`.
pub fn parse_momentum(text: &str) -> Result<FourVector, InputError> {
    list::<4>(text).map(FourVector::from_array)
}

/// `nx,ny,nz`, left unnormalised; see [`UnitDirection::normalize`].
pub fn parse_direction(text: &str) -> Result<[f64; 3], InputError> {
    list::<3>(text)
}

pub fn parse_number(text: &str) -> Result<f64, InputError> {
    number(text)
}

/// Lines of `x re im`; `#` starts a comment, blank lines are skipped.
pub fn parse_profile(text: &str) -> Result<SpectralProfile, InputError> {
    let mut grid = Vec::new();
    let mut amplitudes = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let err = |message: String| InputError::Profile { line: i + 1, message };
        if fields.len() != 3 {
            return Err(err(format!("expected `x re im`, found {} fields", fields.len())));
        }
        let v: Vec<f64> = fields
            .iter()
            .map(|f| number(f))
            .collect::<Result<_, _>>()
            .map_err(|e| err(e.to_string()))?;
        if let Some(&last) = grid.last() {
            if v[0] <= last {
                return Err(err(format!("x = {} does not increase", v[0])));
            }
        }
        grid.push(v[0]);
        amplitudes.push(C64::new(v[1], v[2]));
    }
    Ok(SpectralProfile::new(grid, amplitudes, QuadratureRule::Simpson)?)
}

pub fn direction_from(raw: [f64; 3]) -> Result<UnitDirection, photon_wigner::Error> {
    UnitDirection::normalize(raw[0], raw[1], raw[2])
}
