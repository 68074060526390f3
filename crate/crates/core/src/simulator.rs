//! Slot-level Monte Carlo of the gated transmitter queue.
//!
//! Per slot: draw the gain, serve `T_s B_c log2(1 + m2 γ)` bits if `γ >= γ0`
//! (else nothing), update `q[n] = max(q[n-1] + μ T_s - s[n], 0)` and charge
//! `P_c` plus the mode power. Waiting time of the newest bit is taken as
//! `q[n] / μ` (fluid FIFO with constant arrivals).

use serde::{Deserialize, Serialize};

use crate::analysis::{delay_outage_estimate, CapacityMethod, LinkModel, QosSpec};
use crate::channel::SystemParams;
use crate::error::{Error, Result};
use crate::optimizer::{invert_effective_capacity, SearchSettings};

/// Backlog (bits) above which a run is aborted as unstable.
pub const QUEUE_GUARD_BITS: f64 = 1e12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub params: SystemParams,
    /// Constant arrival rate μ, bit/s.
    pub arrival_rate: f64,
    pub gamma0: f64,
    pub num_slots: u64,
    pub seed: u64,
    /// Discarded before statistics are collected.
    pub warmup_slots: u64,
    /// D_max in seconds, for the delay-outage statistics.
    pub delay_bound: Option<f64>,
    /// QoS exponent used for the capacity check and the P_b e^{-θμD} estimate.
    pub theta: Option<f64>,
}

impl SimConfig {
    /// A config with the default 5% warm-up and no delay/QoS extras.
    pub fn new(
        params: SystemParams,
        arrival_rate: f64,
        gamma0: f64,
        num_slots: u64,
        seed: u64,
    ) -> Self {
        Self {
            params,
            arrival_rate,
            gamma0,
            num_slots,
            seed,
            warmup_slots: num_slots / 20,
            delay_bound: None,
            theta: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if !(self.arrival_rate > 0.0) || !self.arrival_rate.is_finite() {
            return Err(Error::invalid("mu", "must be finite and > 0"));
        }
        if !(self.gamma0 >= 0.0) {
            return Err(Error::Domain(format!(
                "threshold gamma0 must be >= 0, got {}",
                self.gamma0
            )));
        }
        if self.num_slots < 1 {
            return Err(Error::invalid("slots", "must be >= 1"));
        }
        if self.warmup_slots >= self.num_slots {
            return Err(Error::invalid("warmup_slots", "must be < slots"));
        }
        if let Some(d) = self.delay_bound {
            if !(d >= 0.0) {
                return Err(Error::invalid("delay_bound", "must be >= 0"));
            }
        }
        if let Some(t) = self.theta {
            QosSpec::new(t)?;
        }
        Ok(())
    }

    fn qos(&self) -> Option<QosSpec> {
        self.theta.map(|theta| QosSpec {
            theta,
            delay_bound: self.delay_bound,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimReport {
    pub arrival_rate: f64,
    pub gamma0: f64,
    /// μ / mean power, bit/J.
    pub empirical_ee: f64,
    pub p_tr_hat: f64,
    pub p_idle_hat: f64,
    /// Fraction of slots ending with a nonempty buffer.
    pub p_b_hat: f64,
    /// Fraction of slots whose waiting time exceeds D_max.
    pub delay_outage_hat: Option<f64>,
    /// `p_b_hat e^{-θ μ D_max}`, reported next to the measurement.
    pub delay_outage_estimate: Option<f64>,
    pub mean_queue: f64,
    pub max_queue: f64,
    /// W
    pub mean_power: f64,
    /// Delivered bits per second over the measured slots.
    pub mean_service_rate: f64,
    /// Effective capacity at γ0 when θ is configured.
    pub effective_capacity: Option<f64>,
    /// μ exceeds the effective capacity, so the backlog has no steady state.
    pub unstable: bool,
    pub slots_run: u64,
    pub measured_slots: u64,
    pub seed: u64,
}

fn capacity_method(params: &SystemParams) -> CapacityMethod {
    if params.fading_m == 2.0 {
        CapacityMethod::ClosedFormM2
    } else {
        CapacityMethod::ExactQuadrature
    }
}

/// Run one simulation, additionally counting waits above each of `bounds`.
fn simulate(config: &SimConfig, bounds: &[f64]) -> Result<(SimReport, Vec<u64>)> {
    config.validate()?;
    let p = &config.params;
    let m2 = p.derived_constants().m2;
    let bits_per_slot = p.slot_duration * p.bandwidth * std::f64::consts::LOG2_E;
    let arrival = config.arrival_rate * p.slot_duration;
    let mut sampler = p.sampler(config.seed);

    let mut queue = 0.0f64;
    let mut transmit_slots = 0u64;
    let mut busy_slots = 0u64;
    let mut late_slots = 0u64;
    let mut over = vec![0u64; bounds.len()];
    let mut queue_sum = 0.0;
    let mut max_queue = 0.0f64;
    let mut served = 0.0;

    for n in 0..config.num_slots {
        let gain = sampler.sample();
        let transmit = gain >= config.gamma0;
        let service = if transmit {
            bits_per_slot * (m2 * gain).ln_1p()
        } else {
            0.0
        };
        let before = queue + arrival;
        queue = (before - service).max(0.0);
        if queue > QUEUE_GUARD_BITS {
            return Err(Error::QueueOverflow {
                slot: n,
                backlog: queue,
            });
        }
        if n < config.warmup_slots {
            continue;
        }
        served += before - queue;
        if transmit {
            transmit_slots += 1;
        }
        if queue > 0.0 {
            busy_slots += 1;
        }
        let wait = queue / config.arrival_rate;
        if let Some(d) = config.delay_bound {
            if wait > d {
                late_slots += 1;
            }
        }
        for (count, &d) in over.iter_mut().zip(bounds) {
            if wait > d {
                *count += 1;
            }
        }
        queue_sum += queue;
        max_queue = max_queue.max(queue);
    }

    let measured = config.num_slots - config.warmup_slots;
    let nf = measured as f64;
    let idle_slots = measured - transmit_slots;
    let p_tr_hat = transmit_slots as f64 / nf;
    let mean_power = p.circuit_power
        + (p.tx_power * transmit_slots as f64 + p.idle_power * idle_slots as f64) / nf;
    let p_b_hat = busy_slots as f64 / nf;

    let qos = config.qos();
    let effective_capacity = match &qos {
        Some(q) => {
            Some(LinkModel::new(*p)?.effective_capacity(q, config.gamma0, capacity_method(p))?)
        }
        None => None,
    };
    let delay_outage_estimate = match (&qos, config.delay_bound) {
        (Some(q), Some(_)) => Some(delay_outage_estimate(
            q,
            p_b_hat,
            q.theta * config.arrival_rate,
        )?),
        _ => None,
    };

    let report = SimReport {
        arrival_rate: config.arrival_rate,
        gamma0: config.gamma0,
        empirical_ee: config.arrival_rate / mean_power,
        p_tr_hat,
        p_idle_hat: 1.0 - p_tr_hat,
        p_b_hat,
        delay_outage_hat: config.delay_bound.map(|_| late_slots as f64 / nf),
        delay_outage_estimate,
        mean_queue: queue_sum / nf,
        max_queue,
        mean_power,
        mean_service_rate: served / (nf * p.slot_duration),
        effective_capacity,
        unstable: effective_capacity.is_some_and(|a| config.arrival_rate > a),
        slots_run: config.num_slots,
        measured_slots: measured,
        seed: config.seed,
    };
    Ok((report, over))
}

/// Run the queue for `config.num_slots` slots. Deterministic for a fixed seed.
pub fn run(config: &SimConfig) -> Result<SimReport> {
    simulate(config, &[]).map(|(r, _)| r)
}

/// Fraction of measured slots whose waiting time exceeds each bound, from a
/// single run.
pub fn delay_profile(config: &SimConfig, bounds: &[f64]) -> Result<Vec<(f64, f64)>> {
    let (report, counts) = simulate(config, bounds)?;
    let n = report.measured_slots as f64;
    Ok(bounds
        .iter()
        .zip(counts)
        .map(|(&d, c)| (d, c as f64 / n))
        .collect())
}

/// Relative EE gain of gating at `config.gamma0` over always transmitting,
/// both runs on the same channel realization.
pub fn improvement_vs_baseline(config: &SimConfig) -> Result<f64> {
    let gated = run(config)?;
    let baseline = run(&SimConfig {
        gamma0: 0.0,
        ..*config
    })?;
    Ok((gated.empirical_ee - baseline.empirical_ee) / baseline.empirical_ee)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Ok,
    /// γ0 lies above the capacity-inversion bound for μ.
    BeyondCapacity,
    /// The backlog crossed [`QUEUE_GUARD_BITS`].
    Overflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveRow {
    pub gamma0: f64,
    pub status: RowStatus,
    /// Largest γ0 with α(γ0) >= μ, when a QoS exponent is configured.
    pub feasibility_bound: Option<f64>,
    pub report: Option<SimReport>,
}

/// One simulation per threshold, all with the template's seed.
///
/// With `template.theta` set, rows above the capacity bound are flagged
/// [`RowStatus::BeyondCapacity`] (still simulated).
pub fn ee_vs_threshold_curve(template: &SimConfig, gamma0_values: &[f64]) -> Result<Vec<CurveRow>> {
    template.validate()?;
    let bound = match template.qos() {
        Some(q) => {
            let model = LinkModel::new(template.params)?;
            match invert_effective_capacity(
                &model,
                &q,
                template.arrival_rate,
                capacity_method(&template.params),
                &SearchSettings::default(),
            ) {
                Ok(b) => Some(b),
                Err(Error::InfeasibleRate { .. }) => Some(f64::NEG_INFINITY),
                Err(e) => return Err(e),
            }
        }
        None => None,
    };
    gamma0_values
        .iter()
        .map(|&gamma0| {
            let cfg = SimConfig {
                gamma0,
                ..*template
            };
            let beyond = bound.is_some_and(|b| gamma0 > b);
            match run(&cfg) {
                Ok(report) => Ok(CurveRow {
                    gamma0,
                    status: if beyond {
                        RowStatus::BeyondCapacity
                    } else {
                        RowStatus::Ok
                    },
                    feasibility_bound: bound,
                    report: Some(report),
                }),
                Err(Error::QueueOverflow { .. }) => Ok(CurveRow {
                    gamma0,
                    status: RowStatus::Overflow,
                    feasibility_bound: bound,
                    report: None,
                }),
                Err(e) => Err(e),
            }
        })
        .collect()
}
