//! Library side of the `photon-wigner` command-line tool: the pipeline
//! language, the run drivers, the report schema and the `verify` suites.

pub mod input;
pub mod pipeline;
pub mod report;
pub mod run;
pub mod verify;

pub use pipeline::{parse_pipeline, ParseError, PipelineSpec, Step};
pub use report::RunReport;
pub use run::{run_density, run_momentum, run_state_transform, run_wigner, RunOptions, StateInput};
pub use verify::{run_verify, VerifyConfig, VerifyReport};

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    /// Verification or consistency failure.
    Failure = 1,
    /// Usage, syntax or malformed-input error.
    Usage = 2,
    /// NotNull, SouthPoleSingularity, SuperluminalVelocity and related.
    Domain = 3,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// Exit status for a library error code.
pub fn exit_for_code(code: &str) -> Exit {
    match code {
        "NotNull" | "SouthPoleSingularity" | "SuperluminalVelocity" | "DegenerateMomentum" | "DegenerateBranch" => {
            Exit::Domain
        }
        "ShapeViolation" => Exit::Failure,
        _ => Exit::Usage,
    }
}

pub fn exit_for_error(e: &photon_wigner::Error) -> Exit {
    exit_for_code(e.code())
}

pub fn exit_for_parse_error(e: &ParseError) -> Exit {
    match e {
        ParseError::Syntax { .. } => Exit::Usage,
        ParseError::Domain { source, .. } => exit_for_error(source),
    }
}

/// Worst exit status implied by a finished report: failed entries map
/// through their error codes, deviations above the consistency tolerance
/// count as failures.
pub fn exit_for_report(report: &RunReport) -> Exit {
    use report::Entry;
    let mut worst = Exit::Success;
    let mut bump = |e: Exit| {
        if e.code() > worst.code() {
            worst = e;
        }
    };
    for entry in &report.results {
        let error = match entry {
            Entry::Wigner { error, .. } | Entry::Momentum { error, .. } => error.as_ref(),
            _ => None,
        };
        if let Some(err) = error {
            bump(exit_for_code(&err.code));
        }
    }
    let limit = match report.command.as_str() {
        "state" | "density" => 1e-9,
        _ => report.diagnostics.consistency_tolerance,
    };
    let dev = report.diagnostics.max_deviation;
    if dev.is_nan() || dev > limit {
        bump(Exit::Failure);
    }
    worst
}
