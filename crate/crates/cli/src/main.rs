//! `bqc` — tripartite quantum correlations of Bhabha scattering with an
//! entangled spectator, from the command line.
//!
//! Single parameter points are emitted as JSON documents, sweeps as CSV.
//! Domain violations exit with code 2 and a one-line diagnostic naming the
//! offending flag; an unwritable output path exits with code 3.

mod output;

use std::fs::File;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use bqc_core::{
    amplitude_row, final_state, find_peak, gmc_pure_rooted, limit_check, measure_report,
    monogamy_report, sweep, three_pi, DiscordSide, DomainError, GridRange, GteMeasure,
    Kinematics64, PeakBounds, QuantitySet, ScatterParams64, Spin, SweepSpec,
};

use output::{
    write_sweep_csv, AmplitudeRecord, LimitRecord, OutputRecord, ParamsEcho, PeakRecord,
    VerboseMeasures, SCHEMA_VERSION,
};

const EXIT_DOMAIN: i32 = 2;
const EXIT_IO: i32 = 3;

#[derive(Parser)]
#[command(
    name = "bqc",
    about = "Tripartite entanglement and monogamy in Bhabha scattering with an entangled spectator",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct PointArgs {
    /// Scattering angle (radians unless --degrees)
    #[arg(long, allow_negative_numbers = true)]
    theta: f64,
    /// Initial entanglement weight (radians unless --degrees)
    #[arg(long, allow_negative_numbers = true)]
    eta: f64,
    /// Relative phase of the initial superposition (radians unless --degrees)
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    beta: f64,
    /// Scattering momentum in electron-mass units
    #[arg(long, allow_negative_numbers = true)]
    mu: f64,
    /// Interpret all angle flags as degrees
    #[arg(long)]
    degrees: bool,
}

impl PointArgs {
    fn params(&self) -> Result<ScatterParams64, DomainError<f64>> {
        let scale = if self.degrees {
            std::f64::consts::PI / 180.0
        } else {
            1.0
        };
        ScatterParams64::new(self.theta * scale, self.eta * scale, self.beta * scale, self.mu)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the 2x4 polarized amplitude table at one kinematic point
    Amplitudes {
        /// Scattering angle (radians unless --degrees)
        #[arg(long, allow_negative_numbers = true)]
        theta: f64,
        /// Scattering momentum in electron-mass units
        #[arg(long, allow_negative_numbers = true)]
        mu: f64,
        /// Interpret --theta as degrees
        #[arg(long)]
        degrees: bool,
    },
    /// Evaluate the four tripartite measures at one parameter point
    Measures {
        #[command(flatten)]
        point: PointArgs,
        /// Also report the square-root GMC normalization and the three-pi
        /// components
        #[arg(long)]
        verbose: bool,
    },
    /// Evaluate the squared-EoF and squared-discord monogamy residuals
    Monogamy {
        #[command(flatten)]
        point: PointArgs,
        /// Measure the focal qubit A instead of the partner in the pairwise
        /// discord terms (sensitivity check)
        #[arg(long)]
        measure_on_focal: bool,
    },
    /// Sweep a (mu, theta, eta) grid and emit CSV
    Sweep {
        /// Comma-separated list of mu values
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<f64>,
        /// theta grid as lo:hi:steps (radians)
        #[arg(long, default_value = "1e-6:3.141592653589793:181")]
        theta_range: String,
        /// eta grid as lo:hi:steps (radians)
        #[arg(long, default_value = "0:1.5707963267948966:91")]
        eta_range: String,
        /// Fixed relative phase (radians)
        #[arg(long, default_value_t = 0.0)]
        beta: f64,
        /// Quantity families: any of ggm,three_pi,gmc,fill,sef_terms,sqd_terms,residuals
        #[arg(long, value_delimiter = ',', default_value = "ggm,three_pi,gmc,fill")]
        quantities: Vec<String>,
        /// Output CSV path (stdout when absent)
        #[arg(long)]
        out: Option<String>,
        /// Worker threads (defaults to BQC_THREADS or all cores)
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Locate a measure's peak by coarse grid plus simplex refinement
    Peak {
        /// One of: ggm, three_pi, gmc, fill
        #[arg(long)]
        measure: String,
        /// theta search interval lo:hi (radians)
        #[arg(long)]
        theta_bounds: Option<String>,
        /// eta search interval lo:hi (radians)
        #[arg(long)]
        eta_bounds: Option<String>,
        /// mu search interval lo:hi
        #[arg(long)]
        mu_bounds: Option<String>,
        /// Seed grid resolution per axis
        #[arg(long, default_value_t = 25)]
        seed_grid: usize,
    },
    /// Compare the numeric fill at large mu against its closed-form limit
    LimitCheck {
        /// Scattering angle (radians)
        #[arg(long, allow_negative_numbers = true)]
        theta: f64,
        /// Initial entanglement weight (radians)
        #[arg(long, allow_negative_numbers = true)]
        eta: f64,
        /// Large scattering momentum (>= 1e3)
        #[arg(long, allow_negative_numbers = true)]
        mu: f64,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli.command));
}

fn fail_domain(err: &DomainError<f64>) -> i32 {
    eprintln!("error: --{err}");
    EXIT_DOMAIN
}

fn emit_json<T: serde::Serialize>(doc: &T) -> i32 {
    println!("{}", serde_json::to_string(doc).expect("serializable document"));
    0
}

fn run(command: Command) -> i32 {
    match command {
        Command::Amplitudes { theta, mu, degrees } => {
            let theta = if degrees { theta.to_radians() } else { theta };
            let kin = match Kinematics64::new(theta, mu) {
                Ok(k) => k,
                Err(e) => return fail_domain(&e),
            };
            let start = Instant::now();
            let row_r = amplitude_row(Spin::R, &kin);
            let row_l = amplitude_row(Spin::L, &kin);
            emit_json(&AmplitudeRecord {
                schema_version: SCHEMA_VERSION,
                theta,
                mu,
                row_r,
                row_l,
                timing_ms: start.elapsed().as_secs_f64() * 1e3,
            })
        }
        Command::Measures { point, verbose } => {
            let params = match point.params() {
                Ok(p) => p,
                Err(e) => return fail_domain(&e),
            };
            let start = Instant::now();
            let state = final_state(&params);
            let measures = measure_report(&state);
            let verbose = verbose.then(|| VerboseMeasures {
                gmc_rooted: gmc_pure_rooted(&state),
                pi_components: three_pi(&state),
            });
            emit_json(&OutputRecord {
                schema_version: SCHEMA_VERSION,
                params: echo(&params),
                measures: Some(measures),
                verbose,
                monogamy: None,
                timing_ms: start.elapsed().as_secs_f64() * 1e3,
            })
        }
        Command::Monogamy { point, measure_on_focal } => {
            let params = match point.params() {
                Ok(p) => p,
                Err(e) => return fail_domain(&e),
            };
            let side = if measure_on_focal {
                DiscordSide::Focal
            } else {
                DiscordSide::Partner
            };
            let start = Instant::now();
            let report = monogamy_report(&final_state(&params), side);
            emit_json(&OutputRecord {
                schema_version: SCHEMA_VERSION,
                params: echo(&params),
                measures: None,
                verbose: None,
                monogamy: Some(report),
                timing_ms: start.elapsed().as_secs_f64() * 1e3,
            })
        }
        Command::Sweep {
            mu,
            theta_range,
            eta_range,
            beta,
            quantities,
            out,
            threads,
        } => {
            let theta_range = match parse_range(&theta_range, "theta-range") {
                Ok(r) => r,
                Err(code) => return code,
            };
            let eta_range = match parse_range(&eta_range, "eta-range") {
                Ok(r) => r,
                Err(code) => return code,
            };
            let quantities = match parse_quantities(&quantities) {
                Ok(q) => q,
                Err(code) => return code,
            };
            let spec = SweepSpec {
                mu_values: mu,
                theta_range,
                eta_range,
                beta,
                quantities,
            };
            let threads = threads.or_else(|| {
                std::env::var("BQC_THREADS")
                    .ok()
                    .and_then(|v| v.parse().ok())
            });
            let run_sweep = || sweep(&spec);
            let rows = match threads {
                Some(n) => {
                    let pool = match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                        Ok(p) => p,
                        Err(e) => {
                            eprintln!("error: --threads could not build worker pool: {e}");
                            return EXIT_DOMAIN;
                        }
                    };
                    pool.install(run_sweep)
                }
                None => run_sweep(),
            };
            let rows = match rows {
                Ok(r) => r,
                Err(e) => return fail_domain(&e),
            };
            let with_monogamy = spec.quantities.wants_monogamy();
            match out {
                Some(path) => {
                    let mut file = match File::create(&path) {
                        Ok(f) => f,
                        Err(e) => {
                            eprintln!("error: --out {path}: {e}");
                            return EXIT_IO;
                        }
                    };
                    if let Err(e) = write_sweep_csv(&rows, with_monogamy, &mut file)
                        .and_then(|_| file.flush())
                    {
                        eprintln!("error: --out {path}: {e}");
                        return EXIT_IO;
                    }
                    0
                }
                None => {
                    let stdout = std::io::stdout();
                    let mut lock = stdout.lock();
                    if let Err(e) = write_sweep_csv(&rows, with_monogamy, &mut lock) {
                        eprintln!("error: writing CSV to stdout: {e}");
                        return EXIT_IO;
                    }
                    0
                }
            }
        }
        Command::Peak {
            measure,
            theta_bounds,
            eta_bounds,
            mu_bounds,
            seed_grid,
        } => {
            let Some(measure) = GteMeasure::from_name(&measure) else {
                eprintln!(
                    "error: --measure {measure} is not one of ggm, three_pi, gmc, fill"
                );
                return EXIT_DOMAIN;
            };
            let mut bounds = PeakBounds::default_bounds();
            for (flag, slot) in [
                (&theta_bounds, &mut bounds.theta),
                (&eta_bounds, &mut bounds.eta),
                (&mu_bounds, &mut bounds.mu),
            ] {
                if let Some(text) = flag {
                    match parse_interval(text) {
                        Some(lohi) => *slot = lohi,
                        None => {
                            eprintln!("error: --*-bounds {text} must be lo:hi with lo < hi");
                            return EXIT_DOMAIN;
                        }
                    }
                }
            }
            let start = Instant::now();
            let result = match find_peak(measure, bounds, seed_grid) {
                Ok(r) => r,
                Err(e) => return fail_domain(&e),
            };
            emit_json(&PeakRecord {
                schema_version: SCHEMA_VERSION,
                measure: measure.name(),
                theta_star: result.theta_star,
                eta_star: result.eta_star,
                mu_star: result.mu_star,
                value: result.value,
                evaluations: result.evaluations,
                refinement_improved: result.refinement_improved,
                timing_ms: start.elapsed().as_secs_f64() * 1e3,
            })
        }
        Command::LimitCheck { theta, eta, mu } => {
            let start = Instant::now();
            let check = match limit_check(theta, eta, mu) {
                Ok(c) => c,
                Err(e) => return fail_domain(&e),
            };
            emit_json(&LimitRecord {
                schema_version: SCHEMA_VERSION,
                theta,
                eta,
                mu,
                fill_numeric: check.fill_numeric,
                fill_limit: check.fill_limit,
                deviation: check.deviation,
                timing_ms: start.elapsed().as_secs_f64() * 1e3,
            })
        }
    }
}

fn echo(p: &ScatterParams64) -> ParamsEcho {
    ParamsEcho {
        theta: p.theta(),
        eta: p.eta(),
        beta: p.beta(),
        mu: p.mu(),
    }
}

fn parse_range(text: &str, flag: &str) -> Result<GridRange<f64>, i32> {
    let parts: Vec<&str> = text.split(':').collect();
    let parsed = (|| {
        if parts.len() != 3 {
            return None;
        }
        let lo: f64 = parts[0].parse().ok()?;
        let hi: f64 = parts[1].parse().ok()?;
        let steps: usize = parts[2].parse().ok()?;
        (lo < hi && steps >= 2).then(|| GridRange::new(lo, hi, steps))
    })();
    parsed.ok_or_else(|| {
        eprintln!("error: --{flag} {text} must be lo:hi:steps with lo < hi and steps >= 2");
        EXIT_DOMAIN
    })
}

fn parse_interval(text: &str) -> Option<(f64, f64)> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 2 {
        return None;
    }
    let lo: f64 = parts[0].parse().ok()?;
    let hi: f64 = parts[1].parse().ok()?;
    (lo < hi).then_some((lo, hi))
}

fn parse_quantities(names: &[String]) -> Result<QuantitySet, i32> {
    let mut set = QuantitySet {
        ggm: false,
        three_pi: false,
        gmc: false,
        fill: false,
        sef_terms: false,
        sqd_terms: false,
        residuals: false,
    };
    for name in names {
        match name.as_str() {
            "ggm" => set.ggm = true,
            "three_pi" => set.three_pi = true,
            "gmc" => set.gmc = true,
            "fill" => set.fill = true,
            "sef_terms" => set.sef_terms = true,
            "sqd_terms" => set.sqd_terms = true,
            "residuals" => set.residuals = true,
            other => {
                eprintln!("error: --quantities contains unknown quantity `{other}`");
                return Err(EXIT_DOMAIN);
            }
        }
    }
    Ok(set)
}
