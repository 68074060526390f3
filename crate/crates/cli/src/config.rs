//! Flat `key = value` run configuration with unit suffixes.

use std::fmt::Write as _;

use gated_ee::channel::{db_to_linear, dbm_to_watt};
use gated_ee::{PathLoss, QuadratureSettings, SearchSettings, SystemParams};

use crate::CliError;

/// Everything a command may need. Optional entries have no Table I default.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub system: SystemParams,
    pub search: SearchSettings,
    pub quadrature: QuadratureSettings,
    pub theta: Option<f64>,
    pub gamma0: Option<f64>,
    pub mu: Option<f64>,
    pub dmax: Option<f64>,
    pub slots: u64,
    pub seed: u64,
    pub warmup_slots: Option<u64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            system: SystemParams::table_one(),
            search: SearchSettings::default(),
            quadrature: QuadratureSettings::default(),
            theta: None,
            gamma0: None,
            mu: None,
            dmax: None,
            slots: 200_000,
            seed: 1,
            warmup_slots: None,
        }
    }
}

/// Accepted unit suffixes per key with their factor to the stored unit.
/// A bare number is already in the stored unit.
enum Unit {
    Scale(&'static [(&'static str, f64)]),
    /// Power in W, also accepting dBm.
    Power,
    /// Noise PSD in W/Hz, also accepting dBm/Hz.
    Psd,
    /// Linear ratio, also accepting dB.
    Ratio,
    Plain,
    Integer,
}

const KEYS: &[(&str, Unit)] = &[
    (
        "slot_duration",
        Unit::Scale(&[("us", 1e-6), ("ms", 1e-3), ("s", 1.0)]),
    ),
    (
        "bandwidth",
        Unit::Scale(&[("MHz", 1e6), ("kHz", 1e3), ("Hz", 1.0)]),
    ),
    ("noise_density", Unit::Psd),
    ("tx_power", Unit::Power),
    ("circuit_power", Unit::Power),
    ("idle_power", Unit::Power),
    ("fading_m", Unit::Plain),
    ("distance", Unit::Scale(&[("km", 1.0), ("m", 1e-3)])),
    ("path_loss", Unit::Ratio),
    ("epsilon", Unit::Plain),
    ("gamma0_lower", Unit::Plain),
    ("gamma0_cap", Unit::Plain),
    ("max_iterations", Unit::Integer),
    ("quad_rel_tol", Unit::Plain),
    ("quad_abs_tol", Unit::Plain),
    ("quad_max_subdivisions", Unit::Integer),
    ("theta", Unit::Plain),
    ("gamma0", Unit::Plain),
    (
        "mu",
        Unit::Scale(&[("Mbps", 1e6), ("kbps", 1e3), ("bps", 1.0)]),
    ),
    (
        "dmax",
        Unit::Scale(&[("us", 1e-6), ("ms", 1e-3), ("s", 1.0)]),
    ),
    ("slots", Unit::Integer),
    ("seed", Unit::Integer),
    ("warmup_slots", Unit::Integer),
];

fn parse_number(key: &str, text: &str) -> Result<f64, CliError> {
    text.trim()
        .parse::<f64>()
        .map_err(|_| CliError::Config(format!("{key}: cannot parse number from {text:?}")))
}

fn strip_unit<'a>(text: &'a str, unit: &str) -> Option<&'a str> {
    text.strip_suffix(unit).map(str::trim_end)
}

/// Parse a non-integer value into the key's stored unit.
fn parse_value(key: &str, unit: &Unit, raw: &str) -> Result<f64, CliError> {
    let text = raw.trim();
    match unit {
        Unit::Scale(options) => {
            for (suffix, factor) in *options {
                if let Some(num) = strip_unit(text, suffix) {
                    return Ok(parse_number(key, num)? * factor);
                }
            }
            parse_number(key, text)
        }
        Unit::Power => {
            if let Some(num) = strip_unit(text, "dBm") {
                Ok(dbm_to_watt(parse_number(key, num)?))
            } else if let Some(num) = strip_unit(text, "mW") {
                Ok(parse_number(key, num)? * 1e-3)
            } else if let Some(num) = strip_unit(text, "W") {
                parse_number(key, num)
            } else {
                parse_number(key, text)
            }
        }
        Unit::Psd => {
            if let Some(num) = strip_unit(text, "dBm/Hz") {
                Ok(dbm_to_watt(parse_number(key, num)?))
            } else if let Some(num) = strip_unit(text, "W/Hz") {
                parse_number(key, num)
            } else {
                parse_number(key, text)
            }
        }
        Unit::Ratio => match strip_unit(text, "dB") {
            Some(num) => Ok(db_to_linear(parse_number(key, num)?)),
            None => parse_number(key, text),
        },
        Unit::Plain => parse_number(key, text),
        Unit::Integer => unreachable!("integers are parsed separately"),
    }
}

fn parse_integer(key: &str, raw: &str) -> Result<u64, CliError> {
    let text = raw.trim();
    if let Ok(n) = text.parse::<u64>() {
        return Ok(n);
    }
    // accept 2e5 style counts when they are exact
    let x = parse_number(key, text)?;
    if x >= 0.0 && x.fract() == 0.0 && x <= u64::MAX as f64 {
        Ok(x as u64)
    } else {
        Err(CliError::Config(format!(
            "{key}: expected a non-negative integer, got {raw:?}"
        )))
    }
}

impl RunConfig {
    /// Set one key from its textual value (with optional unit suffix).
    pub fn set(&mut self, key: &str, raw: &str) -> Result<(), CliError> {
        let key = key.trim();
        let Some((_, unit)) = KEYS.iter().find(|(k, _)| *k == key) else {
            return Err(CliError::Config(format!("unknown key {key:?}")));
        };
        if matches!(unit, Unit::Integer) {
            let n = parse_integer(key, raw)?;
            match key {
                "max_iterations" => self.search.max_iterations = n as usize,
                "quad_max_subdivisions" => self.quadrature.max_subdivisions = n as usize,
                "slots" => self.slots = n,
                "seed" => self.seed = n,
                "warmup_slots" => self.warmup_slots = Some(n),
                _ => unreachable!(),
            }
            return Ok(());
        }
        let x = parse_value(key, unit, raw)?;
        let s = &mut self.system;
        match key {
            "slot_duration" => s.slot_duration = x,
            "bandwidth" => s.bandwidth = x,
            "noise_density" => s.noise_density = x,
            "tx_power" => s.tx_power = x,
            "circuit_power" => s.circuit_power = x,
            "idle_power" => s.idle_power = x,
            "fading_m" => s.fading_m = x,
            "distance" => s.path_loss = PathLoss::Distance(x),
            "path_loss" => s.path_loss = PathLoss::Linear(x),
            "epsilon" => self.search.epsilon = x,
            "gamma0_lower" => self.search.gamma0_lower = x,
            "gamma0_cap" => self.search.gamma0_cap = x,
            "quad_rel_tol" => self.quadrature.rel_tol = x,
            "quad_abs_tol" => self.quadrature.abs_tol = x,
            "theta" => self.theta = Some(x),
            "gamma0" => self.gamma0 = Some(x),
            "mu" => self.mu = Some(x),
            "dmax" => self.dmax = Some(x),
            _ => unreachable!(),
        }
        Ok(())
    }

    /// Apply a `key=value` assignment as given on the command line.
    pub fn set_assignment(&mut self, assignment: &str) -> Result<(), CliError> {
        let (key, value) = assignment
            .split_once('=')
            .ok_or_else(|| CliError::Config(format!("expected key=value, got {assignment:?}")))?;
        self.set(key, value)
    }

    /// Apply a whole config file body on top of `self`.
    pub fn apply_text(&mut self, text: &str) -> Result<(), CliError> {
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            self.set_assignment(line)
                .map_err(|e| CliError::Config(format!("line {}: {}", i + 1, e.message())))?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let wrap = |e: gated_ee::Error| CliError::Config(e.to_string());
        self.system.validate().map_err(wrap)?;
        self.search.validate().map_err(wrap)?;
        self.quadrature.validate().map_err(wrap)?;
        Ok(())
    }

    /// Effective configuration in stored units; re-reading it gives the same
    /// values bit for bit.
    pub fn dump(&self) -> String {
        let s = &self.system;
        let mut out = String::from("# effective configuration, base units\n");
        let mut line = |k: &str, v: String| {
            let _ = writeln!(out, "{k} = {v}");
        };
        line("slot_duration", format!("{:e}s", s.slot_duration));
        line("bandwidth", format!("{:e}Hz", s.bandwidth));
        line("noise_density", format!("{:e}W/Hz", s.noise_density));
        line("tx_power", format!("{:e}W", s.tx_power));
        line("circuit_power", format!("{:e}W", s.circuit_power));
        line("idle_power", format!("{:e}W", s.idle_power));
        line("fading_m", format!("{:e}", s.fading_m));
        match s.path_loss {
            PathLoss::Distance(km) => line("distance", format!("{km:e}km")),
            PathLoss::Linear(r) => line("path_loss", format!("{r:e}")),
        }
        line("epsilon", format!("{:e}", self.search.epsilon));
        line("gamma0_lower", format!("{:e}", self.search.gamma0_lower));
        line("gamma0_cap", format!("{:e}", self.search.gamma0_cap));
        line("max_iterations", format!("{}", self.search.max_iterations));
        line("quad_rel_tol", format!("{:e}", self.quadrature.rel_tol));
        line("quad_abs_tol", format!("{:e}", self.quadrature.abs_tol));
        line(
            "quad_max_subdivisions",
            format!("{}", self.quadrature.max_subdivisions),
        );
        if let Some(t) = self.theta {
            line("theta", format!("{t:e}"));
        }
        if let Some(g) = self.gamma0 {
            line("gamma0", format!("{g:e}"));
        }
        if let Some(m) = self.mu {
            line("mu", format!("{m:e}bps"));
        }
        if let Some(d) = self.dmax {
            line("dmax", format!("{d:e}s"));
        }
        line("slots", format!("{}", self.slots));
        line("seed", format!("{}", self.seed));
        if let Some(w) = self.warmup_slots {
            line("warmup_slots", format!("{w}"));
        }
        out
    }
}
