//! The structured document written by every subcommand.
//!
//! Floats are written in the shortest decimal form that parses back to the
//! identical `f64`, so documents round-trip losslessly.

use photon_wigner::{FourVector, LorentzMatrix, Mat2, SpinorTransform, C64};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

pub const PHASE_NOTE: &str =
    "half_phase is e^{i psi/2} (sign fixed by the SL(2,C) lift); photon observables depend on e^{i psi} only";

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for Complex {
    fn from(z: C64) -> Self {
        Complex { re: z.re, im: z.im }
    }
}

impl From<Complex> for C64 {
    fn from(z: Complex) -> Self {
        C64::new(z.re, z.im)
    }
}

pub fn vec4(k: &FourVector) -> [f64; 4] {
    k.to_array()
}

pub fn mat2(m: &Mat2) -> [[Complex; 2]; 2] {
    [
        [m.get(0, 0).into(), m.get(0, 1).into()],
        [m.get(1, 0).into(), m.get(1, 1).into()],
    ]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransformReport {
    /// Normalised echo of the parsed pipeline.
    pub pipeline: String,
    pub steps: Vec<String>,
    /// Composed SL(2,C) matrix, row-major `[[α, β], [γ, δ]]`.
    pub sl2c: [[Complex; 2]; 2],
    /// Covered 4×4 Lorentz matrix, row index μ.
    pub lorentz: [[f64; 4]; 4],
}

impl TransformReport {
    pub fn new(pipeline: String, steps: Vec<String>, a: &SpinorTransform, l: &LorentzMatrix) -> Self {
        TransformReport {
            pipeline,
            steps,
            sl2c: mat2(a.matrix()),
            lorentz: l.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LittleGroupReport {
    pub half_phase: Complex,
    /// ψ in [0, 2π).
    pub psi: f64,
    /// e^{iψ}.
    pub phase: Complex,
    pub z: Complex,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub code: String,
    pub message: String,
}

impl From<&photon_wigner::Error> for ErrorReport {
    fn from(e: &photon_wigner::Error) -> Self {
        ErrorReport {
            code: e.code().to_string(),
            message: e.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub matrix: [[Complex; 2]; 2],
    pub eigenvalues: [f64; 2],
    pub entropy: f64,
    pub purity_defect: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateReport {
    pub direction: [f64; 3],
    pub pol_angle: f64,
    /// `(x, re, im)` samples; empty for single-frequency states.
    pub profile: Vec<[f64; 3]>,
    /// Frequency of a single-frequency state.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frequency: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariant_norm: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Entry {
    Wigner {
        index: usize,
        momentum: [f64; 4],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k_prime: Option<[f64; 4]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        decomposition: Option<LittleGroupReport>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        closed_form: Option<LittleGroupReport>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        deviation: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        error: Option<ErrorReport>,
    },
    Momentum {
        index: usize,
        momentum: [f64; 4],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k_prime: Option<[f64; 4]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k_prime_matrix_action: Option<[f64; 4]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        abc: Option<AbcReport>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        deviation: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        error: Option<ErrorReport>,
    },
    State {
        input: StateReport,
        output: StateReport,
        little_group: LittleGroupReport,
        density_in: DensityReport,
        density_out: DensityReport,
        /// ‖ρ_out − D ρ_in D†‖ for the decomposition phase.
        covariance_deviation: f64,
    },
    Density {
        direction: [f64; 3],
        phi: f64,
        little_group: LittleGroupReport,
        density_in: DensityReport,
        density_out: DensityReport,
        /// ‖ρ_out − ρ(φ + ψ)‖.
        deviation: f64,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AbcReport {
    pub a: f64,
    pub b: f64,
    pub c: Complex,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub null_tolerance: f64,
    pub consistency_tolerance: f64,
    pub max_deviation: f64,
    pub failed_entries: usize,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: String,
    pub command: String,
    pub transform: TransformReport,
    pub results: Vec<Entry>,
    pub diagnostics: Diagnostics,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
