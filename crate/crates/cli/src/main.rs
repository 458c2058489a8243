use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use photon_wigner::little_group::Tolerances;
use photon_wigner::{FourVector, PolarizedState, UnitDirection};
use photon_wigner_cli::input::{direction_from, parse_direction, parse_momentum, parse_number, parse_profile};
use photon_wigner_cli::verify::Fault;
use photon_wigner_cli::{
    exit_for_error, exit_for_parse_error, exit_for_report, parse_pipeline, run_density, run_momentum,
    run_state_transform, run_verify, run_wigner, Exit, PipelineSpec, RunOptions, StateInput, VerifyConfig,
};

const PIPELINE_HELP: &str = "\
Pipeline grammar (steps separated by `;`):
  rot AX AY AZ ANGLE      rotation by ANGLE radians about the axis (normalised)
  boost VX VY VZ          boost with velocity v, |v| < 1 (units of c)
  sl2c RE IM RE IM RE IM RE IM
                          raw SL(2,C) matrix, row-major alpha beta gamma delta

Steps apply in the order written: the first step acts first on the state,
so `A ; B` composes to the matrix B·A. Angles are in radians.

Exit codes: 0 success, 1 verification or consistency failure,
2 usage or parse error, 3 domain error (NotNull, SouthPoleSingularity,
SuperluminalVelocity).";

#[derive(Parser)]
#[command(name = "photon-wigner", version, about = "Massless Wigner little group and photon polarization transforms", after_help = PIPELINE_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Little-group element (half-phase, psi, z) per momentum, by both routes
    Wigner(BatchArgs),
    /// Transformed momenta from the closed forms and the 4x4 action
    Momentum(BatchArgs),
    /// Transform a linearly polarized state and its density matrix
    State(StateArgs),
    /// Reduced helicity density matrix before and after the pipeline
    Density(DensityArgs),
    /// Run the seeded invariant suites
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Common {
    /// Transformation pipeline, e.g. "boost 0 0 0.5 ; rot 1 0 0 0.3"
    #[arg(long, conflicts_with = "pipeline_file")]
    pipeline: Option<String>,
    /// Read the pipeline from a file
    #[arg(long, value_name = "PATH")]
    pipeline_file: Option<PathBuf>,
    /// Write the JSON report here instead of standard output
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Relative tolerance for null-momentum checks
    #[arg(long, value_name = "FLOAT")]
    tolerance: Option<String>,
    /// Evaluate momenta in parallel (output order is unchanged)
    #[arg(long)]
    parallel: bool,
}

#[derive(Args)]
struct BatchArgs {
    #[command(flatten)]
    common: Common,
    /// Null momentum t,x,y,z (repeatable)
    #[arg(long, value_name = "T,X,Y,Z", allow_hyphen_values = true)]
    momentum: Vec<String>,
    /// Direction nx,ny,nz (repeatable, normalised), paired with --freq
    #[arg(long, value_name = "NX,NY,NZ", allow_hyphen_values = true)]
    direction: Vec<String>,
    /// Frequency k0 for every --direction
    #[arg(long, value_name = "K0", default_value = "1", allow_hyphen_values = true)]
    freq: String,
}

#[derive(Args)]
struct StateArgs {
    #[command(flatten)]
    common: Common,
    /// Propagation direction nx,ny,nz
    #[arg(long, value_name = "NX,NY,NZ", allow_hyphen_values = true)]
    direction: String,
    /// Linear-polarization angle in radians
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    phi: String,
    /// Spectral profile file with lines `x re im`
    #[arg(long, value_name = "PATH", conflicts_with = "freq")]
    profile: Option<PathBuf>,
    /// Frequency of a single-frequency state (used without --profile)
    #[arg(long, value_name = "K0", allow_hyphen_values = true)]
    freq: Option<String>,
}

#[derive(Args)]
struct DensityArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_name = "NX,NY,NZ", allow_hyphen_values = true)]
    direction: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    phi: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Also write the per-suite results as JSON
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    #[arg(long, hide = true)]
    inject_fault: Option<String>,
}

struct Failure {
    exit: Exit,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        exit: Exit::Usage,
        message: message.to_string(),
    }
}

fn domain(e: photon_wigner::Error) -> Failure {
    Failure {
        exit: exit_for_error(&e),
        message: format!("{}: {e}", e.code()),
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, format!("{text}\n")).map_err(|e| Failure {
            exit: Exit::Usage,
            message: format!("{}: {e}", p.display()),
        }),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

impl Common {
    fn pipeline(&self) -> Result<PipelineSpec, Failure> {
        let text = match (&self.pipeline, &self.pipeline_file) {
            (Some(t), _) => t.clone(),
            (None, Some(p)) => read(p)?,
            (None, None) => String::new(),
        };
        parse_pipeline(&text).map_err(|e| Failure {
            exit: exit_for_parse_error(&e),
            message: e.to_string(),
        })
    }

    fn options(&self) -> Result<RunOptions, Failure> {
        let mut tolerances = Tolerances::default();
        if let Some(t) = &self.tolerance {
            let t = parse_number(t).map_err(usage)?;
            if t <= 0.0 {
                return Err(usage("--tolerance must be positive"));
            }
            tolerances.null = t;
        }
        Ok(RunOptions {
            tolerances,
            parallel: self.parallel,
        })
    }
}

fn direction(text: &str) -> Result<UnitDirection, Failure> {
    direction_from(parse_direction(text).map_err(usage)?).map_err(domain)
}

fn momenta(args: &BatchArgs) -> Result<Vec<FourVector>, Failure> {
    let mut out: Vec<FourVector> = args
        .momentum
        .iter()
        .map(|m| parse_momentum(m))
        .collect::<Result<_, _>>()
        .map_err(usage)?;
    let freq = parse_number(&args.freq).map_err(usage)?;
    for d in &args.direction {
        out.push(FourVector::null(freq, direction(d)?));
    }
    if out.is_empty() {
        return Err(usage("at least one --momentum or --direction is required"));
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<Exit, Failure> {
    let report = match cli.command {
        Command::Wigner(args) => {
            let spec = args.common.pipeline()?;
            let r = run_wigner(&spec, &momenta(&args)?, &args.common.options()?);
            (r, args.common.output)
        }
        Command::Momentum(args) => {
            let spec = args.common.pipeline()?;
            let r = run_momentum(&spec, &momenta(&args)?, &args.common.options()?);
            (r, args.common.output)
        }
        Command::State(args) => {
            let spec = args.common.pipeline()?;
            let n = direction(&args.direction)?;
            let phi = parse_number(&args.phi).map_err(usage)?;
            let input = match &args.profile {
                Some(path) => {
                    let profile = parse_profile(&read(path)?).map_err(usage)?;
                    StateInput::Profile(PolarizedState::new(n, phi, profile).map_err(domain)?)
                }
                None => {
                    let frequency = match &args.freq {
                        Some(f) => parse_number(f).map_err(usage)?,
                        None => 1.0,
                    };
                    if frequency <= 0.0 {
                        return Err(domain(photon_wigner::Error::NotNull { dot: 0.0, t: frequency }));
                    }
                    StateInput::Monochromatic {
                        direction: n,
                        phi,
                        frequency,
                    }
                }
            };
            let r = run_state_transform(&spec, &input, &args.common.options()?).map_err(domain)?;
            (r, args.common.output)
        }
        Command::Density(args) => {
            let spec = args.common.pipeline()?;
            let n = direction(&args.direction)?;
            let phi = parse_number(&args.phi).map_err(usage)?;
            let r = run_density(&spec, n, phi, &args.common.options()?).map_err(domain)?;
            (r, args.common.output)
        }
        Command::Verify(args) => return verify(args),
    };
    let (report, output) = report;
    write_output(&output, &report.to_json())?;
    Ok(exit_for_report(&report))
}

fn verify(args: VerifyArgs) -> Result<Exit, Failure> {
    let fault = match args.inject_fault.as_deref() {
        None => None,
        Some("flip-c") => Some(Fault::FlipCoefficientSign),
        Some(other) => return Err(usage(format!("unknown fault `{other}`"))),
    };
    let report = run_verify(&VerifyConfig {
        seed: args.seed,
        trials: args.trials,
        fault,
    })
    .map_err(usage)?;
    for s in &report.suites {
        println!(
            "{:<4} {:<48} trials={:<5} skipped={:<4} errors={:<3} max_dev={:.3e} tol={:.0e}",
            if s.passed() { "ok" } else { "FAIL" },
            s.name,
            s.trials,
            s.skipped,
            s.errors,
            s.max_deviation,
            s.tolerance
        );
    }
    if let Some(path) = &args.output {
        let text = serde_json::to_string_pretty(&report).expect("verify report serialises");
        write_output(&Some(path.clone()), &text)?;
    }
    Ok(if report.passed() { Exit::Success } else { Exit::Failure })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Exit::Usage.code() as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(exit) => ExitCode::from(exit.code() as u8),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.exit.code() as u8)
        }
    }
}
