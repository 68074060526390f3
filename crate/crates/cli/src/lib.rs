//! Command-line front end for the `gated_ee` library.

pub mod config;
pub mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use gated_ee::optimizer::{
    find_optimal_threshold, find_theta_threshold, invert_effective_capacity, linspace, sweep,
};
use gated_ee::simulator::{ee_vs_threshold_curve, improvement_vs_baseline, run, CurveRow};
use gated_ee::{CapacityMethod, LinkModel, QosSpec, SimConfig, SimReport, SweepQuantity};

pub use config::RunConfig;
use output::{Cell, Table};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] gated_ee::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use gated_ee::Error as E;
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Core(e) => match e {
                E::InvalidParameter { .. } | E::MissingDelayBound => 2,
                E::NonConvergence { .. }
                | E::BracketFailure { .. }
                | E::Pole(_)
                | E::QueueOverflow { .. } => 3,
                E::Domain(_) | E::InfeasibleRate { .. } | E::RequiresM2(_) | E::Precondition(_) => {
                    4
                }
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        use gated_ee::Error as E;
        match self {
            CliError::Config(_) => "config",
            CliError::Io(_) => "io",
            CliError::Core(e) => match e {
                E::Domain(_) => "domain",
                E::Pole(_) => "pole",
                E::InvalidParameter { .. } => "invalid_parameter",
                E::RequiresM2(_) => "requires_m2",
                E::NonConvergence { .. } => "non_convergence",
                E::BracketFailure { .. } => "bracket_failure",
                E::Precondition(_) => "precondition",
                E::InfeasibleRate { .. } => "infeasible_rate",
                E::MissingDelayBound => "missing_delay_bound",
                E::QueueOverflow { .. } => "queue_overflow",
            },
        }
    }

    pub fn message(&self) -> String {
        self.to_string()
    }

    /// One line on stderr: `error kind=<kind> code=<code> message="<text>"`.
    pub fn machine_line(&self) -> String {
        let msg = self
            .message()
            .replace('\\', "\\\\")
            .replace('"', "\\\"")
            .replace('\n', " ");
        format!(
            "error kind={} code={} message=\"{msg}\"",
            self.kind(),
            self.exit_code()
        )
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "gated-ee",
    version,
    about = "Energy efficiency of threshold-gated transmission under delay QoS"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Flat key = value config file.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Override one config key; repeatable.
    #[arg(long = "set", global = true, value_name = "KEY=VALUE")]
    pub set: Vec<String>,
    /// Use the reference parameter set and ε = 1e-8, ignoring --config and --set.
    #[arg(long, global = true, conflicts_with_all = ["config", "set"])]
    pub paper_defaults: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Effective capacity, power and EE at one threshold.
    Analyze {
        #[arg(long, allow_negative_numbers = true)]
        theta: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        gamma0: Option<f64>,
        /// Integrate the exact kernel instead of the m = 2 closed form.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// EE-optimal threshold by bisection on G.
    Optimize {
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// QoS exponent separating the two regimes.
    ThetaThreshold {
        #[arg(long, default_value_t = 1e-5)]
        theta_lo: f64,
        #[arg(long, default_value_t = 1e-2)]
        theta_hi: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest threshold whose effective capacity still carries `mu`.
    Invert {
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long)]
        mu: Option<f64>,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate EE, alpha, G or F on a θ × γ0 grid.
    Sweep {
        /// Comma-separated θ values.
        #[arg(long, value_delimiter = ',', required = true)]
        theta_list: Vec<f64>,
        /// `lo,hi`.
        #[arg(long, value_delimiter = ',', default_values_t = [0.0, 3.0])]
        gamma0_range: Vec<f64>,
        #[arg(long, default_value_t = 300)]
        steps: usize,
        #[arg(long, default_value = "EE")]
        quantity: SweepQuantity,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Slot-level queue simulation at one threshold.
    Simulate {
        #[command(flatten)]
        sim: SimArgs,
        #[arg(long, allow_negative_numbers = true)]
        gamma0: Option<f64>,
        /// Also report the relative EE gain over γ0 = 0.
        #[arg(long)]
        baseline: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Simulated EE over a grid of thresholds.
    Curve {
        #[command(flatten)]
        sim: SimArgs,
        /// `lo,hi`.
        #[arg(long, value_delimiter = ',', default_values_t = [0.0, 1.73])]
        gamma0_range: Vec<f64>,
        #[arg(long, default_value_t = 11)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the effective configuration.
    DumpConfig {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct SimArgs {
    #[arg(long)]
    pub mu: Option<f64>,
    #[arg(long)]
    pub slots: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Delay bound in seconds.
    #[arg(long)]
    pub dmax: Option<f64>,
    /// QoS exponent for the capacity check and the outage estimate.
    #[arg(long)]
    pub theta: Option<f64>,
}

fn require<T>(value: Option<T>, name: &str) -> Result<T, CliError> {
    value.ok_or_else(|| {
        CliError::Config(format!(
            "missing {name}: pass --{name} or set it in the config"
        ))
    })
}

fn range(values: &[f64]) -> Result<(f64, f64), CliError> {
    match values {
        [lo, hi] => Ok((*lo, *hi)),
        _ => Err(CliError::Config(format!(
            "gamma0-range needs exactly lo,hi; got {} values",
            values.len()
        ))),
    }
}

fn method(exact: bool) -> CapacityMethod {
    if exact {
        CapacityMethod::ExactQuadrature
    } else {
        CapacityMethod::ClosedFormM2
    }
}

/// Merge file, `--set` overrides and the reference preset.
pub fn resolve_config(global: &GlobalArgs) -> Result<RunConfig, CliError> {
    let mut cfg = RunConfig::default();
    if global.paper_defaults {
        return Ok(cfg);
    }
    if let Some(path) = &global.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        cfg.apply_text(&text)?;
    }
    for assignment in &global.set {
        cfg.set_assignment(assignment)?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn model(cfg: &RunConfig) -> Result<LinkModel, CliError> {
    Ok(LinkModel::new(cfg.system)?.with_quadrature(cfg.quadrature)?)
}

const REPORT_COLUMNS: [&str; 19] = [
    "mu",
    "gamma0",
    "empirical_ee",
    "p_tr_hat",
    "p_idle_hat",
    "p_b_hat",
    "delay_outage_hat",
    "delay_outage_estimate",
    "mean_queue",
    "max_queue",
    "mean_power",
    "mean_service_rate",
    "effective_capacity",
    "unstable",
    "slots_run",
    "measured_slots",
    "seed",
    "status",
    "feasibility_bound",
];

fn report_cells(r: &SimReport) -> Vec<Cell> {
    vec![
        r.arrival_rate.into(),
        r.gamma0.into(),
        r.empirical_ee.into(),
        r.p_tr_hat.into(),
        r.p_idle_hat.into(),
        r.p_b_hat.into(),
        r.delay_outage_hat.into(),
        r.delay_outage_estimate.into(),
        r.mean_queue.into(),
        r.max_queue.into(),
        r.mean_power.into(),
        r.mean_service_rate.into(),
        r.effective_capacity.into(),
        r.unstable.into(),
        r.slots_run.into(),
        r.measured_slots.into(),
        r.seed.into(),
    ]
}

fn sim_config(cfg: &RunConfig, args: &SimArgs, gamma0: f64) -> Result<SimConfig, CliError> {
    let mu = require(args.mu.or(cfg.mu), "mu")?;
    let slots = args.slots.unwrap_or(cfg.slots);
    let seed = args.seed.unwrap_or(cfg.seed);
    let mut sim = SimConfig::new(cfg.system, mu, gamma0, slots, seed);
    if let Some(w) = cfg.warmup_slots {
        sim.warmup_slots = w;
    }
    sim.delay_bound = args.dmax.or(cfg.dmax);
    sim.theta = args.theta.or(cfg.theta);
    sim.validate()?;
    Ok(sim)
}

fn curve_table(rows: &[CurveRow], mu: f64) -> Table {
    let mut t = Table::new(REPORT_COLUMNS.to_vec());
    for row in rows {
        let mut cells = match &row.report {
            Some(r) => report_cells(r),
            None => {
                let mut c = vec![Cell::Empty; REPORT_COLUMNS.len() - 2];
                c[0] = mu.into();
                c[1] = row.gamma0.into();
                c
            }
        };
        let status = serde_json::to_value(row.status)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default();
        cells.push(status.into());
        cells.push(row.feasibility_bound.into());
        t.push(cells);
    }
    t
}

/// What a command produced: the table, and whether it goes to stdout as CSV
/// when no `--out` is given (grids) or as labeled fields (single results).
struct Produced {
    table: Table,
    grid: bool,
    out: Option<PathBuf>,
}

fn execute(cli: &Cli, cfg: &RunConfig) -> Result<Produced, CliError> {
    let produced = match &cli.command {
        Command::Analyze {
            theta,
            gamma0,
            exact,
            out,
        } => {
            let theta = require(theta.or(cfg.theta), "theta")?;
            let gamma0 = require(gamma0.or(cfg.gamma0), "gamma0")?;
            let m = model(cfg)?;
            let qos = QosSpec::new(theta)?;
            let r = m.analyze(&qos, gamma0, method(*exact))?;
            let mut t = Table::new(vec![
                "theta",
                "gamma0",
                "method",
                "effective_capacity",
                "p_tr",
                "p_idle",
                "total_power",
                "ee",
                "log_mgf",
                "f",
                "g",
            ]);
            t.push(vec![
                r.theta.into(),
                r.gamma0.into(),
                r.method.to_string().into(),
                r.effective_capacity.into(),
                r.p_tr.into(),
                r.p_idle.into(),
                r.total_power.into(),
                r.ee.into(),
                r.log_mgf.into(),
                r.f_value.into(),
                r.g_value.into(),
            ]);
            Produced {
                table: t,
                grid: false,
                out: out.clone(),
            }
        }
        Command::Optimize { theta, out } => {
            let theta = require(theta.or(cfg.theta), "theta")?;
            let r = find_optimal_threshold(&model(cfg)?, &QosSpec::new(theta)?, &cfg.search)?;
            let mut t = Table::new(vec![
                "theta",
                "regime",
                "gamma0_opt",
                "ee_opt",
                "ee_baseline",
                "iterations",
                "bracket_lo",
                "bracket_hi",
            ]);
            t.push(vec![
                r.theta.into(),
                r.regime.to_string().into(),
                r.gamma0_opt.into(),
                r.ee_opt.into(),
                r.ee_baseline.into(),
                r.iterations.into(),
                r.bracket.0.into(),
                r.bracket.1.into(),
            ]);
            Produced {
                table: t,
                grid: false,
                out: out.clone(),
            }
        }
        Command::ThetaThreshold {
            theta_lo,
            theta_hi,
            out,
        } => {
            let r = find_theta_threshold(&model(cfg)?, *theta_lo, *theta_hi, &cfg.search)?;
            let mut t = Table::new(vec!["theta_thr", "lower", "upper", "iterations"]);
            t.push(vec![
                r.theta.into(),
                r.lower.into(),
                r.upper.into(),
                r.iterations.into(),
            ]);
            Produced {
                table: t,
                grid: false,
                out: out.clone(),
            }
        }
        Command::Invert {
            theta,
            mu,
            exact,
            out,
        } => {
            let theta = require(theta.or(cfg.theta), "theta")?;
            let mu = require(mu.or(cfg.mu), "mu")?;
            let m = model(cfg)?;
            let qos = QosSpec::new(theta)?;
            let g = invert_effective_capacity(&m, &qos, mu, method(*exact), &cfg.search)?;
            let alpha = m.effective_capacity(&qos, g, method(*exact))?;
            let mut t = Table::new(vec!["theta", "mu", "gamma0_bound", "effective_capacity"]);
            t.push(vec![theta.into(), mu.into(), g.into(), alpha.into()]);
            Produced {
                table: t,
                grid: false,
                out: out.clone(),
            }
        }
        Command::Sweep {
            theta_list,
            gamma0_range,
            steps,
            quantity,
            exact,
            out,
        } => {
            let rows = sweep(
                &model(cfg)?,
                theta_list,
                range(gamma0_range)?,
                *steps,
                *quantity,
                method(*exact),
            )?;
            let column = match quantity {
                SweepQuantity::Ee => "ee",
                SweepQuantity::Alpha => "alpha",
                SweepQuantity::G => "g",
                SweepQuantity::F => "f",
            };
            let mut t = Table::new(vec!["theta", "gamma0", column]);
            for r in rows {
                t.push(vec![r.theta.into(), r.gamma0.into(), r.value.into()]);
            }
            Produced {
                table: t,
                grid: true,
                out: out.clone(),
            }
        }
        Command::Simulate {
            sim,
            gamma0,
            baseline,
            out,
        } => {
            let gamma0 = require(gamma0.or(cfg.gamma0), "gamma0")?;
            let config = sim_config(cfg, sim, gamma0)?;
            let report = run(&config)?;
            let mut columns = REPORT_COLUMNS[..REPORT_COLUMNS.len() - 2].to_vec();
            let mut cells = report_cells(&report);
            if *baseline {
                columns.push("improvement_vs_baseline");
                cells.push(improvement_vs_baseline(&config)?.into());
            }
            let mut t = Table::new(columns);
            t.push(cells);
            Produced {
                table: t,
                grid: false,
                out: out.clone(),
            }
        }
        Command::Curve {
            sim,
            gamma0_range,
            steps,
            out,
        } => {
            let template = sim_config(cfg, sim, 0.0)?;
            let (lo, hi) = range(gamma0_range)?;
            let grid = linspace(lo, hi, *steps);
            if grid.is_empty() || grid.iter().any(|g| g.is_nan() || *g < 0.0) {
                return Err(CliError::Config(
                    "gamma0-range must be non-negative with steps >= 1".into(),
                ));
            }
            let rows = ee_vs_threshold_curve(&template, &grid)?;
            Produced {
                table: curve_table(&rows, template.arrival_rate),
                grid: true,
                out: out.clone(),
            }
        }
        Command::DumpConfig { .. } => unreachable!("handled before execute"),
    };
    Ok(produced)
}

/// Run a parsed command line, returning what should go to stdout.
pub fn run_cli(cli: &Cli) -> Result<String, CliError> {
    let cfg = resolve_config(&cli.global)?;
    if let Command::DumpConfig { out } = &cli.command {
        let text = cfg.dump();
        return match out {
            Some(path) => {
                std::fs::write(path, &text)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                Ok(String::new())
            }
            None => Ok(text),
        };
    }
    let p = execute(cli, &cfg)?;
    if let Some(path) = &p.out {
        p.table.write(path)?;
    }
    Ok(match (&p.out, p.grid) {
        (Some(_), true) => String::new(),
        (None, true) => p.table.to_csv(),
        (_, false) => format!("{}\n{}", p.table.labeled(), p.table.to_csv()),
    })
}

/// Process entry point; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return 0;
        }
        Err(e) => {
            let rendered = e.to_string();
            let summary: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.trim().is_empty())
                .map(str::trim)
                .collect();
            let summary = summary.join(" ");
            let err = CliError::Config(
                summary
                    .strip_prefix("error: ")
                    .unwrap_or(&summary)
                    .to_owned(),
            );
            eprintln!(
                "{}",
                err.machine_line().replacen("kind=config", "kind=usage", 1)
            );
            return 2;
        }
    };
    match run_cli(&cli) {
        Ok(text) => {
            print!("{text}");
            0
        }
        Err(e) => {
            eprintln!("{}", e.machine_line());
            e.exit_code()
        }
    }
}
