use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chtri::{CertificateScope, Tolerance};
use chtri_cli::commands::{self, AlphaAxis, MAxis, OutputFormat, ScanSpec};
use chtri_cli::error::CliError;
use chtri_cli::verify;

#[derive(Parser)]
#[command(
    name = "chtri",
    version,
    about = "Discreteness of ultra-parallel [m,m,0;3,3,2] complex hyperbolic triangle groups"
)]
struct Cli {
    /// Numerical tolerance for every comparison (default 1e-9).
    #[arg(long, global = true, env = "CHP_TOLERANCE")]
    tolerance: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one parameter point as Discrete, NonDiscrete or Unknown.
    Classify {
        #[command(flatten)]
        size: Size,
        /// Angular invariant alpha, in (0, 2 pi).
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long)]
        degrees: bool,
        /// Print the full classification as JSON.
        #[arg(long)]
        json: bool,
        /// Report Discrete wherever the lattice certificate holds, not only in the proven region.
        #[arg(long)]
        extended: bool,
    },
    /// Classify a grid of parameter points.
    Scan {
        /// Range of m as lo:hi (or a single value).
        #[arg(long, conflicts_with = "r", default_value = "0:3")]
        m: String,
        /// Range of r = cosh(m/2) instead of m.
        #[arg(long)]
        r: Option<String>,
        /// Range of alpha as lo:hi.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "cos_alpha", required_unless_present = "cos_alpha")]
        alpha: Option<String>,
        /// Range of cos(alpha) as lo:hi; alpha is taken in (0, pi].
        #[arg(long, allow_hyphen_values = true)]
        cos_alpha: Option<String>,
        /// Grid size, N or NxM (m by alpha).
        #[arg(long, default_value = "50")]
        steps: String,
        #[command(flatten)]
        output: Output,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        degrees: bool,
    },
    /// Orbit of the origin under words up to a given length.
    Orbit {
        #[command(flatten)]
        size: Size,
        /// theta = (pi - alpha) / 2, in (-pi/2, pi/2).
        #[arg(long, allow_negative_numbers = true, default_value_t = 0.0)]
        theta: f64,
        #[arg(long, default_value_t = 6)]
        max_len: u32,
        #[command(flatten)]
        output: Output,
        #[arg(long)]
        degrees: bool,
    },
    /// Run the self-check suites.
    Verify {
        /// Skip the slow 100 x 100 scan consistency suite.
        #[arg(long)]
        fast: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Size {
    /// Distance m between the first two chains and the third.
    #[arg(long)]
    m: Option<f64>,
    /// r = cosh(m/2), as an alternative to --m.
    #[arg(long)]
    r: Option<f64>,
}

#[derive(Args)]
struct Output {
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format; inferred from the --out extension when absent.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Svg,
}

impl Output {
    fn format(&self) -> OutputFormat {
        let explicit = self.format.map(|f| match f {
            Format::Csv => OutputFormat::Csv,
            Format::Svg => OutputFormat::Svg,
        });
        OutputFormat::resolve(explicit, self.out.as_deref())
    }
}

fn scope(extended: bool) -> CertificateScope {
    if extended {
        CertificateScope::Extended
    } else {
        CertificateScope::Proven
    }
}

fn angle(x: f64, degrees: bool) -> f64 {
    if degrees {
        x.to_radians()
    } else {
        x
    }
}

fn tolerance(t: Option<f64>) -> Result<Tolerance, CliError> {
    match t {
        None => Ok(Tolerance::default()),
        Some(e) if e.is_finite() && e > 0.0 => Ok(Tolerance::uniform(e)),
        Some(e) => Err(CliError::Usage(format!("tolerance must be positive, got {e}"))),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let tol = tolerance(cli.tolerance)?;
    match cli.command {
        Command::Classify { size, alpha, degrees, json, extended } => {
            let m = commands::resolve_m(size.m, size.r)?;
            let c = commands::classify(m, angle(alpha, degrees), scope(extended), &tol)?;
            if json {
                let text = serde_json::to_string_pretty(&c).map_err(|e| CliError::Usage(e.to_string()))?;
                println!("{text}");
            } else {
                print!("{}", commands::classification_report(&c));
            }
        }
        Command::Scan { m, r, alpha, cos_alpha, steps, output, jobs, extended, degrees } => {
            let m_axis = match r {
                Some(r) => {
                    let (lo, hi) = commands::parse_range(&r)?;
                    MAxis::R(lo, hi)
                }
                None => {
                    let (lo, hi) = commands::parse_range(&m)?;
                    MAxis::M(lo, hi)
                }
            };
            let alpha_axis = match (alpha, cos_alpha) {
                (Some(a), _) => {
                    let (lo, hi) = commands::parse_range(&a)?;
                    AlphaAxis::Alpha(angle(lo, degrees), angle(hi, degrees))
                }
                (None, Some(c)) => {
                    let (lo, hi) = commands::parse_range(&c)?;
                    AlphaAxis::CosAlpha(lo, hi)
                }
                (None, None) => return Err(CliError::Usage("one of --alpha or --cos-alpha is required".into())),
            };
            let spec =
                ScanSpec { m_axis, alpha_axis, steps: commands::parse_steps(&steps)?, scope: scope(extended), jobs };
            let rows = commands::scan(&spec, &tol)?;
            commands::emit(output.out.as_deref(), &commands::render_scan(&rows, output.format()))?;
        }
        Command::Orbit { size, theta, max_len, output, degrees } => {
            let m = commands::resolve_m(size.m, size.r)?;
            let rows = commands::orbit(m, angle(theta, degrees), max_len, &tol)?;
            commands::emit(output.out.as_deref(), &commands::render_orbit(&rows, output.format()))?;
        }
        Command::Verify { fast } => {
            let reports = verify::run(fast, &tol);
            print!("{}", verify::render(&reports));
            verify::outcome(&reports)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // clap uses 2 for usage errors and 0 for --help / --version
            return ExitCode::from(u8::try_from(e.exit_code()).unwrap_or(2));
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
