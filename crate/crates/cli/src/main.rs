//! Command-line front end: exact fidelities, Monte Carlo runs with
//! analytic self-checks, sufficiency thresholds, Holevo quantities,
//! classical baselines, and CSV sweeps of the cost curves.
//!
//! Exit codes: 0 success, 2 invalid input, 3 Monte Carlo self-check
//! failure, 4 I/O failure.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qteleport::bounds::{
    cost_curve_two_bit, holevo_quantity, min_comm_two_bit, min_comm_two_independent,
    random_search_two_bit_min, sweep, SweepKind,
};
use qteleport::cchannel::{product_channel, OneBitChannel, TwoBitChannel};
use qteleport::qstate::DensityMatrix;
use qteleport::teleport::{
    classical_guess_fidelity, classical_guess_monte_carlo, fidelity_exact, fidelity_exact_werner,
    fidelity_monte_carlo, popescu_classical_fidelity, popescu_monte_carlo, FidelityEstimate,
    Resource, TeleportScenario, CLASSICAL_FIDELITY_LIMIT,
};

mod report;
use report::{RunReport, Value};

const EXIT_INVALID_INPUT: u8 = 2;
const EXIT_SELF_CHECK: u8 = 3;
const EXIT_IO: u8 = 4;

/// Absolute slack added to the 4-sigma self-check band so zero-variance
/// estimates (noiseless runs) don't trip on rounding noise.
const SELF_CHECK_FLOOR: f64 = 1e-9;

#[derive(Parser, Debug)]
#[command(
    name = "qteleport",
    about = "Teleportation fidelity and classical-communication cost under noisy classical channels",
    version
)]
struct Cli {
    /// Emit the run report as a single flat JSON object instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact fidelity and communication cost of a channel
    Fidelity(ChannelSpec),
    /// Monte Carlo fidelity estimate, self-checked against the closed form
    Montecarlo {
        #[command(flatten)]
        channel: ChannelSpec,
        /// Number of protocol runs (at least 100)
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        /// Master seed; identical seeds reproduce stdout byte for byte
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Minimum sufficient communication for both channel families
    Thresholds {
        /// Random-search points used to verify the symmetric optimum
        #[arg(long, default_value_t = 1_000_000)]
        search_points: usize,
        /// Seed of the verification search
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a cost-curve CSV (fig1: cost vs p1; fig2: Werner cost curves)
    Sweep {
        #[arg(long, value_enum)]
        kind: SweepArg,
        /// Number of sampled points (at least 2)
        #[arg(long, default_value_t = 101)]
        points: usize,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
    /// Holevo quantity of the dense-coding ensemble, both computation paths
    Holevo {
        /// Intact probability in [1/4, 1]
        #[arg(long)]
        p1: f64,
    },
    /// Classical baselines 1/2 and 2/3 with Monte Carlo confirmation
    Baselines {
        /// Samples per baseline estimate (at least 100)
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Channel given either as two 1-bit intact probabilities (--eta, --delta)
/// or as the four 2-bit pattern probabilities (--p1..--p4), plus an
/// optional Werner resource parameter.
#[derive(Args, Debug)]
struct ChannelSpec {
    /// Intact probability of the 1-bit channel carrying the first bit
    #[arg(long)]
    eta: Option<f64>,
    /// Intact probability of the 1-bit channel carrying the second bit
    #[arg(long)]
    delta: Option<f64>,
    /// Probability that both bits arrive intact
    #[arg(long)]
    p1: Option<f64>,
    /// Probability that only the first bit is flipped
    #[arg(long)]
    p2: Option<f64>,
    /// Probability that only the second bit is flipped
    #[arg(long)]
    p3: Option<f64>,
    /// Probability that both bits are flipped
    #[arg(long)]
    p4: Option<f64>,
    /// Werner resource parameter in [0, 1] (omit for a perfect singlet)
    #[arg(long)]
    alpha: Option<f64>,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INVALID_INPUT,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_IO,
            message: message.into(),
        }
    }
}

impl From<qteleport::Error> for CliError {
    fn from(err: qteleport::Error) -> Self {
        CliError::invalid(err.to_string())
    }
}

struct CommandOutcome {
    report: RunReport,
    self_check_failed: bool,
}

impl From<RunReport> for CommandOutcome {
    fn from(report: RunReport) -> Self {
        Self {
            report,
            self_check_failed: false,
        }
    }
}

impl ChannelSpec {
    /// Builds the channel and records the echoed inputs on the report.
    fn resolve(&self, report: &mut RunReport) -> Result<TwoBitChannel, CliError> {
        let pattern_args = [self.p1, self.p2, self.p3, self.p4];
        let channel =
            match (
                self.eta,
                self.delta,
                pattern_args.iter().any(Option::is_some),
            ) {
                (Some(eta), Some(delta), false) => {
                    report.float("eta", eta);
                    report.float("delta", delta);
                    product_channel(&OneBitChannel::new(eta)?, &OneBitChannel::new(delta)?)
                }
                (None, None, true) => {
                    let [p1, p2, p3, p4] = pattern_args.map(|p| {
                        p.ok_or_else(|| {
                            CliError::invalid("all four of --p1 --p2 --p3 --p4 are required")
                        })
                    });
                    TwoBitChannel::new(p1?, p2?, p3?, p4?)?
                }
                _ => return Err(CliError::invalid(
                    "channel spec requires either --eta and --delta, or all of --p1 --p2 --p3 --p4",
                )),
            };
        let [p1, p2, p3, p4] = channel.probabilities();
        report.float("p1", p1);
        report.float("p2", p2);
        report.float("p3", p3);
        report.float("p4", p4);
        if let Some(alpha) = self.alpha {
            report.float("alpha", alpha);
        }
        Ok(channel)
    }

    fn scenario(&self, channel: TwoBitChannel) -> Result<TeleportScenario, CliError> {
        let resource = match self.alpha {
            Some(alpha) => Resource::Werner(alpha),
            None => Resource::PureSinglet,
        };
        Ok(TeleportScenario::new(resource, channel)?)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SweepArg {
    /// Communication cost vs p1 on [1/2, 1]
    Fig1,
    /// Both Werner cost curves vs alpha on [1/3, 1]
    Fig2,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli.command) {
        Ok(outcome) => {
            let rendered = if cli.json {
                outcome.report.render_json()
            } else {
                outcome.report.render_text()
            };
            print!("{rendered}");
            eprintln!("wall_time_s = {:.3}", started.elapsed().as_secs_f64());
            if outcome.self_check_failed {
                ExitCode::from(EXIT_SELF_CHECK)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(command: &Command) -> Result<CommandOutcome, CliError> {
    match command {
        Command::Fidelity(spec) => cmd_fidelity(spec),
        Command::Montecarlo {
            channel,
            samples,
            seed,
        } => cmd_montecarlo(channel, *samples, *seed),
        Command::Thresholds {
            search_points,
            seed,
        } => cmd_thresholds(*search_points, *seed),
        Command::Sweep { kind, points, out } => cmd_sweep(*kind, *points, out),
        Command::Holevo { p1 } => cmd_holevo(*p1),
        Command::Baselines { samples, seed } => cmd_baselines(*samples, *seed),
    }
}

fn cmd_fidelity(spec: &ChannelSpec) -> Result<CommandOutcome, CliError> {
    let mut report = RunReport::new("fidelity");
    let channel = spec.resolve(&mut report)?;
    let fidelity = match spec.alpha {
        Some(alpha) => fidelity_exact_werner(alpha, &channel)?,
        None => fidelity_exact(&channel),
    };
    report.float("fidelity", fidelity);
    report.float("classical_limit", CLASSICAL_FIDELITY_LIMIT);
    report.bool("non_classical", fidelity > CLASSICAL_FIDELITY_LIMIT);
    report.float("comm_bits", channel.mutual_information());
    report.int("seed", 0);
    Ok(report.into())
}

fn check_samples(samples: usize) -> Result<(), CliError> {
    if samples < 100 {
        return Err(CliError::invalid(format!(
            "samples = {samples} violates the minimum of 100"
        )));
    }
    Ok(())
}

/// Whether a Monte Carlo estimate sits inside the self-check band.
fn within_band(estimate: &FidelityEstimate, analytic: f64) -> bool {
    (estimate.mean - analytic).abs() <= 4.0 * estimate.std_error + SELF_CHECK_FLOOR
}

fn record_self_check(report: &mut RunReport, passed: bool) {
    report.push(
        "self_check",
        Value::Text(if passed { "pass" } else { "fail" }.to_string()),
    );
}

fn cmd_montecarlo(
    spec: &ChannelSpec,
    samples: usize,
    seed: u64,
) -> Result<CommandOutcome, CliError> {
    check_samples(samples)?;
    let mut report = RunReport::new("montecarlo");
    let channel = spec.resolve(&mut report)?;
    let scenario = spec.scenario(channel)?;
    report.int("samples", samples as u64);
    report.int("seed", seed);

    let estimate = fidelity_monte_carlo(&scenario, samples, seed);
    let analytic = scenario.exact_fidelity();
    report.float("mc_mean", estimate.mean);
    report.push("mc_std_error", Value::Scientific(estimate.std_error));
    report.float("analytic", analytic);
    report.push(
        "deviation",
        Value::Scientific((estimate.mean - analytic).abs()),
    );
    let passed = within_band(&estimate, analytic);
    record_self_check(&mut report, passed);
    Ok(CommandOutcome {
        report,
        self_check_failed: !passed,
    })
}

fn cmd_thresholds(search_points: usize, seed: u64) -> Result<CommandOutcome, CliError> {
    if search_points == 0 {
        return Err(CliError::invalid("search-points must be positive"));
    }
    let mut report = RunReport::new("thresholds");
    let two_bit = min_comm_two_bit();
    report.float("two_bit_min_comm", two_bit.min_comm);
    report.float("two_bit_argmin_p1", two_bit.argmin[0]);
    report.float("two_bit_argmin_p2", two_bit.argmin[1]);
    report.float("two_bit_argmin_p3", two_bit.argmin[2]);
    report.float("two_bit_argmin_p4", two_bit.argmin[3]);
    report.float("two_bit_constraint_p1", two_bit.constraint_value);

    let pair = min_comm_two_independent();
    report.float("one_bit_pair_min_comm", pair.min_comm);
    report.float("one_bit_pair_argmin_eta", pair.argmin[0]);
    report.float("one_bit_pair_argmin_delta", pair.argmin[1]);
    report.float("one_bit_pair_constraint_eta_delta", pair.constraint_value);

    let search_min = random_search_two_bit_min(search_points, seed);
    let verified = search_min >= two_bit.min_comm - 1e-6;
    report.int("search_points", search_points as u64);
    report.float("search_min_found", search_min);
    report.bool("oracle_verified", verified);
    report.int("seed", seed);
    Ok(report.into())
}

fn cmd_sweep(kind: SweepArg, points: usize, out: &PathBuf) -> Result<CommandOutcome, CliError> {
    if points < 2 {
        return Err(CliError::invalid("a sweep needs at least 2 points"));
    }
    let mut csv = String::new();
    let rows = match kind {
        SweepArg::Fig1 => {
            let table = sweep(SweepKind::CostVsIntact, points);
            csv.push_str("p1,comm_bits\n");
            for (x, y) in &table.rows {
                let _ = writeln!(csv, "{x:.6},{y:.6}");
            }
            table.rows.len()
        }
        SweepArg::Fig2 => {
            let two_bit = sweep(SweepKind::WernerCostTwoBit, points);
            let pair = sweep(SweepKind::WernerCostOneBitPair, points);
            csv.push_str("alpha,comm_two_bit,comm_one_bit_pair\n");
            for ((x, y_two), (_, y_pair)) in two_bit.rows.iter().zip(&pair.rows) {
                let _ = writeln!(csv, "{x:.6},{y_two:.6},{y_pair:.6}");
            }
            two_bit.rows.len()
        }
    };
    std::fs::write(out, csv)
        .map_err(|err| CliError::io(format!("cannot write {}: {err}", out.display())))?;

    let mut report = RunReport::new("sweep");
    report.push(
        "kind",
        Value::Text(
            match kind {
                SweepArg::Fig1 => "fig1",
                SweepArg::Fig2 => "fig2",
            }
            .to_string(),
        ),
    );
    report.int("points", points as u64);
    report.push("out", Value::Text(out.display().to_string()));
    report.int("rows_written", rows as u64);
    report.int("seed", 0);
    Ok(report.into())
}

fn cmd_holevo(p1: f64) -> Result<CommandOutcome, CliError> {
    let closed = cost_curve_two_bit(p1)?;
    let numeric = holevo_quantity(p1)?;
    let mut report = RunReport::new("holevo");
    report.float("p1", p1);
    report.float("chi_closed_form", closed);
    report.float("chi_eigensolver", numeric);
    report.push("difference", Value::Scientific((numeric - closed).abs()));
    report.int("seed", 0);
    Ok(report.into())
}

fn cmd_baselines(samples: usize, seed: u64) -> Result<CommandOutcome, CliError> {
    check_samples(samples)?;
    let mut report = RunReport::new("baselines");
    report.int("samples", samples as u64);
    report.int("seed", seed);

    let guess = classical_guess_monte_carlo(&DensityMatrix::ket_zero(), samples, seed);
    report.float("guess_analytic", classical_guess_fidelity());
    report.float("guess_mc_mean", guess.mean);
    report.push("guess_mc_std_error", Value::Scientific(guess.std_error));

    let popescu = popescu_monte_carlo(samples, seed);
    report.float("popescu_analytic", popescu_classical_fidelity());
    report.float("popescu_mc_mean", popescu.mean);
    report.push("popescu_mc_std_error", Value::Scientific(popescu.std_error));

    let passed = within_band(&guess, classical_guess_fidelity())
        && within_band(&popescu, popescu_classical_fidelity());
    record_self_check(&mut report, passed);
    Ok(CommandOutcome {
        report,
        self_check_failed: !passed,
    })
}
