//! Drivers that turn a parsed pipeline plus inputs into a [`RunReport`].

use photon_wigner::little_group::{
    closed_form_little_group_with, transform_null_momentum_with, wigner_decompose_with, Tolerances,
};
use photon_wigner::{
    abc_coefficients, apply_lorentz, direction_of, lorentz_of_spinor, monochromatic_state, reduced_density,
    transform_density, transform_state, von_neumann_entropy, DensityMatrix2, Error, FourVector, LittleGroupElement,
    PolarizedState, SpinorTransform, UnitDirection,
};
use rayon::prelude::*;

use crate::pipeline::PipelineSpec;
use crate::report::{
    mat2, vec4, AbcReport, DensityReport, Diagnostics, Entry, ErrorReport, LittleGroupReport, RunReport, StateReport,
    TransformReport, PHASE_NOTE, SCHEMA_VERSION,
};

/// Agreement required between the two little-group routes (and between the
/// two momentum routes) before a run counts as consistent.
pub const CONSISTENCY_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub tolerances: Tolerances,
    /// Evaluate momenta concurrently; output order is unaffected.
    pub parallel: bool,
}

/// Input state for the `state` subcommand.
#[derive(Clone, Debug)]
pub enum StateInput {
    Profile(PolarizedState),
    Monochromatic {
        direction: UnitDirection,
        phi: f64,
        frequency: f64,
    },
}

fn lg_report(e: &LittleGroupElement) -> LittleGroupReport {
    LittleGroupReport {
        half_phase: e.half_phase.into(),
        psi: e.psi(),
        phase: e.phase().into(),
        z: e.translation.into(),
    }
}

fn density_report(rho: &DensityMatrix2) -> DensityReport {
    DensityReport {
        matrix: mat2(rho.matrix()),
        eigenvalues: rho.eigenvalues(),
        entropy: von_neumann_entropy(rho),
        purity_defect: rho.purity_defect(),
    }
}

fn transform_report(spec: &PipelineSpec, a: &SpinorTransform) -> TransformReport {
    TransformReport::new(
        spec.to_string(),
        spec.steps.iter().map(|s| s.to_string()).collect(),
        a,
        &lorentz_of_spinor(a),
    )
}

/// `max(|Δh|, |Δz| / max(1, |z|))`.
pub fn little_group_deviation(closed: &LittleGroupElement, direct: &LittleGroupElement) -> f64 {
    let dh = (closed.half_phase - direct.half_phase).norm();
    let dz = (closed.translation - direct.translation).norm() / direct.translation.norm().max(1.0);
    dh.max(dz)
}

fn map_batch<T: Send>(momenta: &[FourVector], parallel: bool, f: impl Fn(usize, &FourVector) -> T + Sync) -> Vec<T> {
    if parallel {
        momenta.par_iter().enumerate().map(|(i, k)| f(i, k)).collect()
    } else {
        momenta.iter().enumerate().map(|(i, k)| f(i, k)).collect()
    }
}

fn base_diagnostics(opts: &RunOptions) -> Diagnostics {
    Diagnostics {
        null_tolerance: opts.tolerances.null,
        consistency_tolerance: CONSISTENCY_TOLERANCE,
        ..Diagnostics::default()
    }
}

fn wigner_entry(a: &SpinorTransform, index: usize, k: &FourVector, tol: &Tolerances) -> Entry {
    let result = (|| -> Result<_, Error> {
        let direct = wigner_decompose_with(a, k, tol)?;
        let closed = closed_form_little_group_with(a, k, tol)?;
        let k_prime = transform_null_momentum_with(a, k, tol)?;
        Ok((direct, closed, k_prime))
    })();
    match result {
        Ok((direct, closed, k_prime)) => Entry::Wigner {
            index,
            momentum: vec4(k),
            k_prime: Some(vec4(&k_prime)),
            decomposition: Some(lg_report(&direct)),
            closed_form: Some(lg_report(&closed)),
            deviation: Some(little_group_deviation(&closed, &direct)),
            error: None,
        },
        Err(e) => Entry::Wigner {
            index,
            momentum: vec4(k),
            k_prime: None,
            decomposition: None,
            closed_form: None,
            deviation: None,
            error: Some(ErrorReport::from(&e)),
        },
    }
}

/// Little-group elements of the composed pipeline at each momentum, by both
/// routes. A failing momentum is reported in place and does not stop the
/// batch.
pub fn run_wigner(spec: &PipelineSpec, momenta: &[FourVector], opts: &RunOptions) -> RunReport {
    let a = spec.composed();
    let tol = opts.tolerances;
    let results = map_batch(momenta, opts.parallel, |i, k| wigner_entry(&a, i, k, &tol));
    let mut diagnostics = base_diagnostics(opts);
    for r in &results {
        if let Entry::Wigner { deviation, error, .. } = r {
            diagnostics.max_deviation = diagnostics.max_deviation.max(deviation.unwrap_or(0.0));
            diagnostics.failed_entries += error.is_some() as usize;
        }
    }
    diagnostics.notes.push(PHASE_NOTE.to_string());
    RunReport {
        schema_version: SCHEMA_VERSION.to_string(),
        command: "wigner".to_string(),
        transform: transform_report(spec, &a),
        results,
        diagnostics,
    }
}

fn momentum_entry(a: &SpinorTransform, index: usize, k: &FourVector, tol: &Tolerances) -> Entry {
    match transform_null_momentum_with(a, k, tol).and_then(|kp| Ok((kp, direction_of(k)?))) {
        Ok((kp, n)) => {
            let direct = apply_lorentz(&lorentz_of_spinor(a), k);
            let dev = kp
                .to_array()
                .iter()
                .zip(direct.to_array())
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max)
                / direct.t.abs().max(1.0);
            let abc = abc_coefficients(a, &n);
            Entry::Momentum {
                index,
                momentum: vec4(k),
                k_prime: Some(vec4(&kp)),
                k_prime_matrix_action: Some(vec4(&direct)),
                abc: Some(AbcReport {
                    a: abc.a,
                    b: abc.b,
                    c: abc.c.into(),
                }),
                deviation: Some(dev),
                error: None,
            }
        }
        Err(e) => Entry::Momentum {
            index,
            momentum: vec4(k),
            k_prime: None,
            k_prime_matrix_action: None,
            abc: None,
            deviation: None,
            error: Some(ErrorReport::from(&e)),
        },
    }
}

/// Transformed momenta from the closed forms, checked against the 4×4
/// matrix action.
pub fn run_momentum(spec: &PipelineSpec, momenta: &[FourVector], opts: &RunOptions) -> RunReport {
    let a = spec.composed();
    let tol = opts.tolerances;
    let results = map_batch(momenta, opts.parallel, |i, k| momentum_entry(&a, i, k, &tol));
    let mut diagnostics = base_diagnostics(opts);
    for r in &results {
        if let Entry::Momentum { deviation, error, .. } = r {
            diagnostics.max_deviation = diagnostics.max_deviation.max(deviation.unwrap_or(0.0));
            diagnostics.failed_entries += error.is_some() as usize;
        }
    }
    RunReport {
        schema_version: SCHEMA_VERSION.to_string(),
        command: "momentum".to_string(),
        transform: transform_report(spec, &a),
        results,
        diagnostics,
    }
}

fn profile_report(s: &PolarizedState) -> StateReport {
    StateReport {
        direction: s.direction().to_array(),
        pol_angle: s.pol_angle(),
        profile: s.profile().samples().map(|(x, g)| [x, g.re, g.im]).collect(),
        frequency: None,
        invariant_norm: Some(s.profile().invariant_norm()),
    }
}

/// Transforms a linearly polarized state and its reduced density matrix.
pub fn run_state_transform(spec: &PipelineSpec, state: &StateInput, opts: &RunOptions) -> Result<RunReport, Error> {
    let a = spec.composed();
    let tol = opts.tolerances;
    let entry = match state {
        StateInput::Profile(s) => {
            let n = s.direction();
            let direct = wigner_decompose_with(&a, &FourVector::null(1.0, n), &tol)?;
            let out = transform_state(&a, s)?;
            let rho_in = reduced_density(&s.amplitude_field()?)?;
            let rho_out = reduced_density(&out.amplitude_field()?)?;
            let predicted = transform_density(&rho_in, direct.half_phase)?;
            Entry::State {
                input: profile_report(s),
                output: profile_report(&out),
                little_group: lg_report(&direct),
                density_in: density_report(&rho_in),
                density_out: density_report(&rho_out),
                covariance_deviation: rho_out.matrix().max_abs_diff(predicted.matrix()),
            }
        }
        StateInput::Monochromatic {
            direction,
            phi,
            frequency,
        } => {
            let k = FourVector::null(*frequency, *direction);
            let direct = wigner_decompose_with(&a, &k, &tol)?;
            let closed = closed_form_little_group_with(&a, &k, &tol)?;
            let kp = transform_null_momentum_with(&a, &k, &tol)?;
            let phi_out = photon_wigner::photon_states::wrap_pol_angle(phi + closed.psi());
            let rho_in = reduced_density(&monochromatic_state(&k, *phi)?)?;
            let rho_out = reduced_density(&monochromatic_state(&kp, phi_out)?)?;
            let predicted = transform_density(&rho_in, direct.half_phase)?;
            let mono = |n: UnitDirection, phi: f64, freq: f64| StateReport {
                direction: n.to_array(),
                pol_angle: phi,
                profile: Vec::new(),
                frequency: Some(freq),
                invariant_norm: None,
            };
            Entry::State {
                input: mono(
                    *direction,
                    photon_wigner::photon_states::wrap_pol_angle(*phi),
                    *frequency,
                ),
                output: mono(direction_of(&kp)?, phi_out, kp.t),
                little_group: lg_report(&direct),
                density_in: density_report(&rho_in),
                density_out: density_report(&rho_out),
                covariance_deviation: rho_out.matrix().max_abs_diff(predicted.matrix()),
            }
        }
    };
    let mut diagnostics = base_diagnostics(opts);
    if let Entry::State {
        covariance_deviation, ..
    } = &entry
    {
        diagnostics.max_deviation = *covariance_deviation;
    }
    diagnostics.notes.push(PHASE_NOTE.to_string());
    diagnostics.notes.push("entropies in nats".to_string());
    Ok(RunReport {
        schema_version: SCHEMA_VERSION.to_string(),
        command: "state".to_string(),
        transform: transform_report(spec, &a),
        results: vec![entry],
        diagnostics,
    })
}

/// Reduced density matrix of a linear polarization along `direction`,
/// before and after the pipeline.
pub fn run_density(
    spec: &PipelineSpec,
    direction: UnitDirection,
    phi: f64,
    opts: &RunOptions,
) -> Result<RunReport, Error> {
    let a = spec.composed();
    let k = FourVector::null(1.0, direction);
    let direct = wigner_decompose_with(&a, &k, &opts.tolerances)?;
    let rho_in = reduced_density(&monochromatic_state(&k, phi)?)?;
    let rho_out = transform_density(&rho_in, direct.half_phase)?;
    let expected = DensityMatrix2::linear_polarization(phi + direct.psi());
    let entry = Entry::Density {
        direction: direction.to_array(),
        phi,
        little_group: lg_report(&direct),
        density_in: density_report(&rho_in),
        density_out: density_report(&rho_out),
        deviation: rho_out.matrix().max_abs_diff(expected.matrix()),
    };
    let mut diagnostics = base_diagnostics(opts);
    if let Entry::Density { deviation, .. } = &entry {
        diagnostics.max_deviation = *deviation;
    }
    diagnostics.notes.push(PHASE_NOTE.to_string());
    diagnostics.notes.push("entropies in nats".to_string());
    Ok(RunReport {
        schema_version: SCHEMA_VERSION.to_string(),
        command: "density".to_string(),
        transform: transform_report(spec, &a),
        results: vec![entry],
        diagnostics,
    })
}
