//! Nakagami-m block-fading channel, link budget and unit conversions.
//!
//! All dB/dBm handling lives here; the rest of the crate works in linear
//! units (W, W/Hz, power ratios).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, Gamma};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special_fn::{gamma_fn, ln_gamma, upper_incomplete_gamma};

/// Distance-dependent path loss, `128.1 + 37.6 log10(d)` dB with `d` in km.
pub fn path_loss_db(distance_km: f64) -> Result<f64> {
    if !(distance_km > 0.0) || !distance_km.is_finite() {
        return Err(Error::Domain(format!(
            "path loss requires distance > 0 km, got {distance_km}"
        )));
    }
    Ok(128.1 + 37.6 * distance_km.log10())
}

pub fn dbm_to_watt(dbm: f64) -> f64 {
    10f64.powf((dbm - 30.0) / 10.0)
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn watt_to_dbm(watt: f64) -> f64 {
    10.0 * watt.log10() + 30.0
}

/// How the path loss is specified. Exactly one source is allowed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum PathLoss {
    /// Transmitter-receiver distance in km.
    Distance(f64),
    /// Linear power ratio (>= 1).
    Linear(f64),
}

/// Physical link constants, linear units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SystemParams {
    /// Slot (fading block) length T_s in seconds.
    pub slot_duration: f64,
    /// Bandwidth B_c in Hz.
    pub bandwidth: f64,
    /// Noise spectral density N0 in W/Hz.
    pub noise_density: f64,
    /// Power drawn in transmission mode, W.
    pub tx_power: f64,
    /// Constant circuit power, W.
    pub circuit_power: f64,
    /// Power drawn in idle mode, W.
    pub idle_power: f64,
    /// Nakagami fading parameter m.
    pub fading_m: f64,
    pub path_loss: PathLoss,
}

impl SystemParams {
    /// Reference link: 1 ms slots, 180 kHz, -174 dBm/Hz noise, m = 2,
    /// 43 dBm transmit power, 0.1 W circuit power, no idle power, 1 km.
    pub fn table_one() -> Self {
        Self {
            slot_duration: 1e-3,
            bandwidth: 180e3,
            noise_density: dbm_to_watt(-174.0),
            tx_power: dbm_to_watt(43.0),
            circuit_power: 0.1,
            idle_power: 0.0,
            fading_m: 2.0,
            path_loss: PathLoss::Distance(1.0),
        }
    }

    pub fn validate(&self) -> Result<()> {
        fn positive(name: &'static str, v: f64) -> Result<()> {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::invalid(
                    name,
                    format!("must be finite and > 0, got {v}"),
                ))
            }
        }
        positive("slot_duration", self.slot_duration)?;
        positive("bandwidth", self.bandwidth)?;
        positive("noise_density", self.noise_density)?;
        positive("tx_power", self.tx_power)?;
        if !(self.circuit_power >= 0.0) || !self.circuit_power.is_finite() {
            return Err(Error::invalid("circuit_power", "must be finite and >= 0"));
        }
        if !(self.idle_power >= 0.0) {
            return Err(Error::invalid("idle_power", "must be >= 0"));
        }
        if !(self.tx_power > self.idle_power) {
            return Err(Error::invalid(
                "tx_power",
                format!(
                    "must exceed idle_power ({} W <= {} W)",
                    self.tx_power, self.idle_power
                ),
            ));
        }
        if !(self.fading_m >= 0.5) || !self.fading_m.is_finite() {
            return Err(Error::invalid(
                "fading_m",
                format!("must be >= 0.5, got {}", self.fading_m),
            ));
        }
        match self.path_loss {
            PathLoss::Distance(d) => {
                path_loss_db(d)
                    .map_err(|_| Error::invalid("distance", format!("must be > 0 km, got {d}")))?;
            }
            PathLoss::Linear(pl) => {
                if !(pl >= 1.0) || !pl.is_finite() {
                    return Err(Error::invalid(
                        "path_loss",
                        format!("must be >= 1, got {pl}"),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Path loss as a linear power ratio.
    pub fn path_loss_linear(&self) -> f64 {
        match self.path_loss {
            PathLoss::Distance(d) => db_to_linear(128.1 + 37.6 * d.log10()),
            PathLoss::Linear(pl) => pl,
        }
    }

    pub fn derived_constants(&self) -> DerivedConstants {
        DerivedConstants {
            m1: -self.slot_duration * self.bandwidth * std::f64::consts::LOG2_E,
            m2: self.tx_power / (self.path_loss_linear() * self.noise_density * self.bandwidth),
        }
    }

    fn is_m2(&self) -> bool {
        self.fading_m == 2.0
    }

    /// Density of the unit-mean normalized power gain.
    pub fn pdf(&self, gamma: f64) -> Result<f64> {
        if !(gamma >= 0.0) {
            return Err(Error::Domain(format!(
                "pdf requires gamma >= 0, got {gamma}"
            )));
        }
        let m = self.fading_m;
        if self.is_m2() {
            return Ok(4.0 * gamma * (-2.0 * gamma).exp());
        }
        if gamma == 0.0 {
            return Ok(match m.partial_cmp(&1.0) {
                Some(std::cmp::Ordering::Less) => f64::INFINITY,
                Some(std::cmp::Ordering::Equal) => 1.0,
                _ => 0.0,
            });
        }
        let log = m * m.ln() + (m - 1.0) * gamma.ln() - m * gamma - ln_gamma(m)?;
        Ok(log.exp())
    }

    /// Probability that the gain is at least `gamma0` (transmission mode).
    pub fn tail(&self, gamma0: f64) -> Result<f64> {
        if !(gamma0 >= 0.0) {
            return Err(Error::Domain(format!(
                "threshold must be >= 0, got {gamma0}"
            )));
        }
        if gamma0.is_infinite() {
            return Ok(0.0);
        }
        if self.is_m2() {
            return Ok((-2.0 * gamma0).exp() * (2.0 * gamma0 + 1.0));
        }
        let m = self.fading_m;
        Ok((upper_incomplete_gamma(m, m * gamma0)? / gamma_fn(m)?).clamp(0.0, 1.0))
    }

    /// Probability that the gain is below `gamma0` (idle mode).
    pub fn cdf(&self, gamma0: f64) -> Result<f64> {
        Ok(1.0 - self.tail(gamma0)?)
    }

    /// A deterministic gain sampler seeded with `seed`.
    pub fn sampler(&self, seed: u64) -> GainSampler {
        GainSampler::new(self.fading_m, seed)
    }
}

/// Convenience link constants: `m1 = -T_s B_c log2(e)` and the mean SNR
/// factor `m2 = P_tr / (P_L N0 B_c)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedConstants {
    pub m1: f64,
    pub m2: f64,
}

#[derive(Debug, Clone)]
enum GainKind {
    /// Sum of `n` unit exponentials, scaled by 1/n.
    Erlang(u32),
    General(Gamma<f64>),
}

/// Draws i.i.d. normalized gains, Gamma(shape m, rate m). One instance per
/// thread of use; the stream is fixed by the seed.
#[derive(Debug, Clone)]
pub struct GainSampler {
    rng: ChaCha8Rng,
    kind: GainKind,
    m: f64,
}

impl GainSampler {
    pub fn new(m: f64, seed: u64) -> Self {
        let kind = if m == m.floor() && (1.0..=64.0).contains(&m) {
            GainKind::Erlang(m as u32)
        } else {
            GainKind::General(Gamma::new(m, 1.0 / m).expect("fading_m validated >= 0.5"))
        };
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            kind,
            m,
        }
    }

    pub fn sample(&mut self) -> f64 {
        match &self.kind {
            GainKind::Erlang(n) => {
                let mut acc = 0.0;
                for _ in 0..*n {
                    let e: f64 = Exp1.sample(&mut self.rng);
                    acc += e;
                }
                acc / self.m
            }
            GainKind::General(g) => g.sample(&mut self.rng),
        }
    }
}

impl Iterator for GainSampler {
    type Item = f64;
    fn next(&mut self) -> Option<f64> {
        Some(self.sample())
    }
}
