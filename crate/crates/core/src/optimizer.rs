//! Bisection searches over the threshold and the QoS exponent.
//!
//! The optimal threshold is the sign change of G (the sign of dEE/dγ0),
//! found by plain bisection from a bracket whose upper end has G < 0. The
//! regime boundary θ_thr is the smallest θ for which G has no positive value
//! on the search grid.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::{CapacityMethod, LinkModel, QosSpec};
use crate::error::{Error, Result};

/// Left end of the log grid used when probing for positive G.
pub const REGIME_GRID_START: f64 = 1e-4;
pub const REGIME_GRID_POINTS: usize = 200;
/// Relative bracket width at which the θ_thr search stops.
pub const THETA_REL_WIDTH: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchSettings {
    /// Bisection stops once the bracket is no wider than this.
    pub epsilon: f64,
    pub gamma0_lower: f64,
    /// Bracket expansion never goes past this threshold.
    pub gamma0_cap: f64,
    pub max_iterations: usize,
}

impl Default for SearchSettings {
    fn default() -> Self {
        Self {
            epsilon: 1e-8,
            gamma0_lower: 0.0,
            gamma0_cap: 64.0,
            max_iterations: 500,
        }
    }
}

impl SearchSettings {
    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon > 0.0) {
            return Err(Error::invalid("epsilon", "must be > 0"));
        }
        if !(self.gamma0_lower >= 0.0) {
            return Err(Error::invalid("gamma0_lower", "must be >= 0"));
        }
        if !(self.gamma0_cap > self.gamma0_lower) || !self.gamma0_cap.is_finite() {
            return Err(Error::invalid(
                "gamma0_cap",
                "must be finite and exceed gamma0_lower",
            ));
        }
        if self.max_iterations == 0 {
            return Err(Error::invalid("max_iterations", "must be >= 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    /// EE is unimodal in γ0 with an interior maximum.
    #[serde(rename = "CASE_I")]
    CaseI,
    /// EE decreases in γ0; gating does not help.
    #[serde(rename = "CASE_II")]
    CaseII,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::CaseI => "CASE_I",
            Regime::CaseII => "CASE_II",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimumResult {
    pub theta: f64,
    pub regime: Regime,
    /// Optimal threshold; 0 in CASE_II.
    pub gamma0_opt: f64,
    pub ee_opt: f64,
    /// EE with gating disabled (γ0 = 0).
    pub ee_baseline: f64,
    pub iterations: usize,
    /// Final bisection bracket.
    pub bracket: (f64, f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThetaThreshold {
    /// Geometric midpoint of the final bracket.
    pub theta: f64,
    /// G has a positive value here.
    pub lower: f64,
    /// G has no positive value here.
    pub upper: f64,
    pub iterations: usize,
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section maximization of `f` on `[a, b]`.
fn golden_max<F: FnMut(f64) -> Result<f64>>(
    mut f: F,
    mut a: f64,
    mut b: f64,
) -> Result<(f64, f64)> {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    for _ in 0..200 {
        if (b - a).abs() <= 1e-12 * (a.abs() + b.abs()) {
            break;
        }
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
        }
    }
    Ok(if fc > fd { (c, fc) } else { (d, fd) })
}

/// Largest G over γ0 in `[REGIME_GRID_START, cap]`: best point of a log grid,
/// refined by golden section between its neighbours. Returns `(γ0, G)`.
pub fn max_g(model: &LinkModel, qos: &QosSpec, settings: &SearchSettings) -> Result<(f64, f64)> {
    let lo = REGIME_GRID_START.ln();
    let hi = settings.gamma0_cap.ln();
    let n = REGIME_GRID_POINTS;
    let grid: Vec<f64> = (0..n)
        .map(|i| (lo + (hi - lo) * i as f64 / (n - 1) as f64).exp())
        .collect();
    let mut best = (0, f64::NEG_INFINITY);
    for (i, &g) in grid.iter().enumerate() {
        let v = model.g_function(qos, g)?;
        if v > best.1 {
            best = (i, v);
        }
    }
    let (i, v) = best;
    let a = grid[i.saturating_sub(1)];
    let b = grid[(i + 1).min(n - 1)];
    let (g_ref, v_ref) = golden_max(|g| model.g_function(qos, g), a, b)?;
    Ok(if v_ref > v {
        (g_ref, v_ref)
    } else {
        (grid[i], v)
    })
}

/// Whether G takes a positive value on the regime grid (CASE I).
pub fn has_positive_g(model: &LinkModel, qos: &QosSpec, settings: &SearchSettings) -> Result<bool> {
    Ok(max_g(model, qos, settings)?.1 > 0.0)
}

pub fn classify_regime(
    model: &LinkModel,
    qos: &QosSpec,
    settings: &SearchSettings,
) -> Result<Regime> {
    Ok(if has_positive_g(model, qos, settings)? {
        Regime::CaseI
    } else {
        Regime::CaseII
    })
}

/// EE-optimal threshold by bisection on the sign of G (m = 2 closed form).
pub fn find_optimal_threshold(
    model: &LinkModel,
    qos: &QosSpec,
    settings: &SearchSettings,
) -> Result<OptimumResult> {
    settings.validate()?;
    let g = |x: f64| model.g_function(qos, x);
    let ee = |x: f64| model.energy_efficiency(qos, x, CapacityMethod::ClosedFormM2);

    if classify_regime(model, qos, settings)? == Regime::CaseII {
        let base = ee(0.0)?;
        return Ok(OptimumResult {
            theta: qos.theta,
            regime: Regime::CaseII,
            gamma0_opt: 0.0,
            ee_opt: base,
            ee_baseline: base,
            iterations: 0,
            bracket: (0.0, 0.0),
        });
    }

    let mut lower = settings.gamma0_lower;
    if g(lower)? <= 0.0 {
        return Err(Error::Precondition(format!(
            "G must be positive at the lower bound gamma0 = {lower}"
        )));
    }
    let mut upper = (2.0 * lower).max(1.0).min(settings.gamma0_cap);
    while g(upper)? >= 0.0 {
        if upper >= settings.gamma0_cap {
            return Err(Error::BracketFailure {
                cap: settings.gamma0_cap,
            });
        }
        upper = (2.0 * upper).min(settings.gamma0_cap);
    }

    let mut width = upper - lower;
    let mut trial = 0.5 * (upper + lower);
    let mut iterations = 0;
    while width.abs() > settings.epsilon && iterations < settings.max_iterations {
        // G == 0 counts as negative
        if g(trial)? <= 0.0 {
            upper = trial;
        } else {
            lower = trial;
        }
        width = upper - lower;
        trial = 0.5 * (upper + lower);
        iterations += 1;
    }

    Ok(OptimumResult {
        theta: qos.theta,
        regime: Regime::CaseI,
        gamma0_opt: trial,
        ee_opt: ee(trial)?,
        ee_baseline: ee(0.0)?,
        iterations,
        bracket: (lower, upper),
    })
}

/// QoS-exponent boundary between CASE I and CASE II, by geometric bisection
/// of `[theta_lo, theta_hi]` on [`has_positive_g`].
pub fn find_theta_threshold(
    model: &LinkModel,
    theta_lo: f64,
    theta_hi: f64,
    settings: &SearchSettings,
) -> Result<ThetaThreshold> {
    settings.validate()?;
    if !(theta_lo > 0.0 && theta_hi > theta_lo) {
        return Err(Error::Domain(format!(
            "theta bracket must satisfy 0 < lo < hi, got [{theta_lo}, {theta_hi}]"
        )));
    }
    let positive = |theta: f64| has_positive_g(model, &QosSpec::new(theta)?, settings);
    if !positive(theta_lo)? {
        return Err(Error::Precondition(format!(
            "G has no positive value at theta_lo = {theta_lo:e}"
        )));
    }
    if positive(theta_hi)? {
        return Err(Error::Precondition(format!(
            "G still has a positive value at theta_hi = {theta_hi:e}"
        )));
    }
    let (mut lo, mut hi) = (theta_lo, theta_hi);
    let mut iterations = 0;
    while hi / lo - 1.0 > THETA_REL_WIDTH && iterations < settings.max_iterations {
        let mid = (lo * hi).sqrt();
        if positive(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(ThetaThreshold {
        theta: (lo * hi).sqrt(),
        lower: lo,
        upper: hi,
        iterations,
    })
}

/// Largest γ0 whose effective capacity still carries `mu` bit/s.
///
/// Returns `gamma0_cap` if even that threshold sustains the rate.
pub fn invert_effective_capacity(
    model: &LinkModel,
    qos: &QosSpec,
    mu: f64,
    method: CapacityMethod,
    settings: &SearchSettings,
) -> Result<f64> {
    settings.validate()?;
    if !(mu > 0.0) || !mu.is_finite() {
        return Err(Error::Domain(format!("arrival rate must be > 0, got {mu}")));
    }
    let alpha = |g: f64| model.effective_capacity(qos, g, method);
    let capacity = alpha(0.0)?;
    if mu > capacity {
        return Err(Error::InfeasibleRate { mu, capacity });
    }
    let mut upper = 1.0f64.min(settings.gamma0_cap);
    while alpha(upper)? >= mu {
        if upper >= settings.gamma0_cap {
            return Ok(settings.gamma0_cap);
        }
        upper = (2.0 * upper).min(settings.gamma0_cap);
    }
    let mut lower = 0.0;
    let mut iterations = 0;
    while upper - lower > settings.epsilon && iterations < settings.max_iterations {
        let mid = 0.5 * (lower + upper);
        if alpha(mid)? >= mu {
            lower = mid;
        } else {
            upper = mid;
        }
        iterations += 1;
    }
    Ok(lower)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepQuantity {
    #[serde(rename = "EE")]
    Ee,
    #[serde(rename = "alpha")]
    Alpha,
    G,
    F,
}

impl fmt::Display for SweepQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepQuantity::Ee => "EE",
            SweepQuantity::Alpha => "alpha",
            SweepQuantity::G => "G",
            SweepQuantity::F => "F",
        })
    }
}

impl FromStr for SweepQuantity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ee" => Ok(SweepQuantity::Ee),
            "alpha" | "capacity" => Ok(SweepQuantity::Alpha),
            "g" => Ok(SweepQuantity::G),
            "f" => Ok(SweepQuantity::F),
            _ => Err(Error::invalid(
                "quantity",
                format!("unknown quantity '{s}' (EE, alpha, G, F)"),
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub theta: f64,
    pub gamma0: f64,
    pub value: f64,
}

/// Evenly spaced points on `[lo, hi]`, both ends included.
pub fn linspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => vec![],
        1 => vec![lo],
        _ => (0..steps)
            .map(|i| {
                if i + 1 == steps {
                    hi
                } else {
                    lo + (hi - lo) * i as f64 / (steps - 1) as f64
                }
            })
            .collect(),
    }
}

/// Dense evaluation grid, row-major over θ then γ0. `method` applies to EE
/// and alpha; F and G are always the m = 2 closed form.
pub fn sweep(
    model: &LinkModel,
    thetas: &[f64],
    gamma0_range: (f64, f64),
    steps: usize,
    quantity: SweepQuantity,
    method: CapacityMethod,
) -> Result<Vec<SweepRow>> {
    let (lo, hi) = gamma0_range;
    if thetas.is_empty() {
        return Err(Error::invalid("theta", "at least one value is required"));
    }
    if steps < 2 {
        return Err(Error::invalid("steps", "must be >= 2"));
    }
    if !(lo >= 0.0 && hi > lo && hi.is_finite()) {
        return Err(Error::invalid(
            "gamma0_range",
            format!("need 0 <= lo < hi, got [{lo}, {hi}]"),
        ));
    }
    let grid = linspace(lo, hi, steps);
    let mut rows = Vec::with_capacity(thetas.len() * steps);
    for &theta in thetas {
        let qos = QosSpec::new(theta)?;
        for &gamma0 in &grid {
            let value = match quantity {
                SweepQuantity::Ee => model.energy_efficiency(&qos, gamma0, method)?,
                SweepQuantity::Alpha => model.effective_capacity(&qos, gamma0, method)?,
                SweepQuantity::G => model.g_function(&qos, gamma0)?,
                SweepQuantity::F => model.f_function(&qos, gamma0)?,
            };
            rows.push(SweepRow {
                theta,
                gamma0,
                value,
            });
        }
    }
    Ok(rows)
}
