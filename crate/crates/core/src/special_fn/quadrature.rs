use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerances for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSettings {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_subdivisions: 2000,
        }
    }
}

impl QuadratureSettings {
    pub fn new(rel_tol: f64, abs_tol: f64, max_subdivisions: usize) -> Result<Self> {
        let s = Self {
            rel_tol,
            abs_tol,
            max_subdivisions,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::invalid("rel_tol", "must be > 0"));
        }
        if !(self.abs_tol >= 0.0) {
            return Err(Error::invalid("abs_tol", "must be >= 0"));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::invalid("max_subdivisions", "must be >= 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureEstimate {
    pub value: f64,
    pub abs_error: f64,
    pub subdivisions: usize,
}

// Kronrod 15-point abscissae with the embedded 7-point Gauss rule (QUADPACK qk15).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Segment {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut res_g = fc * WG[3];
    let mut res_k = fc * WGK[7];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let scale = half.abs();
    res_abs *= scale;
    res_asc *= scale;
    let mut error = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Segment {
        lo,
        hi,
        value: res_k * half,
        error,
    }
}

fn adaptive<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    settings: &QuadratureSettings,
) -> Result<QuadratureEstimate> {
    let first = kronrod15(&f, lo, hi);
    let mut value = first.value;
    let mut error = first.error;
    let mut heap = BinaryHeap::with_capacity(settings.max_subdivisions);
    heap.push(first);
    let mut segments = 1usize;

    loop {
        if !value.is_finite() || !error.is_finite() {
            return Err(Error::Domain(format!(
                "integrand is not finite on [{lo}, {hi}]"
            )));
        }
        if error <= settings.abs_tol.max(settings.rel_tol * value.abs()) {
            return Ok(QuadratureEstimate {
                value,
                abs_error: error,
                subdivisions: segments,
            });
        }
        let worst = match heap.pop() {
            Some(seg) if segments < settings.max_subdivisions => seg,
            _ => {
                return Err(Error::NonConvergence {
                    subdivisions: segments,
                    estimate: value,
                    error,
                })
            }
        };
        let mid = 0.5 * (worst.lo + worst.hi);
        if !(mid > worst.lo && mid < worst.hi) {
            // too narrow to split; its contribution stays in the totals
            if heap.is_empty() {
                return Err(Error::NonConvergence {
                    subdivisions: segments,
                    estimate: value,
                    error,
                });
            }
            continue;
        }
        let left = kronrod15(&f, worst.lo, mid);
        let right = kronrod15(&f, mid, worst.hi);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        segments += 1;
    }
}

/// Adaptive Gauss-Kronrod (7/15) quadrature of `f` over `[lo, hi]`.
///
/// `hi` may be `f64::INFINITY`; the half-line is mapped onto `[0, 1)` with
/// `w = lo + t / (1 - t)`. Converged when the summed error estimate is below
/// `max(abs_tol, rel_tol * |result|)`.
pub fn integrate_with_error<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    settings: &QuadratureSettings,
) -> Result<QuadratureEstimate> {
    settings.validate()?;
    if !lo.is_finite() || hi.is_nan() || hi == f64::NEG_INFINITY {
        return Err(Error::Domain(format!(
            "integrate: unsupported range [{lo}, {hi}]"
        )));
    }
    if !(lo < hi) {
        return Err(Error::Domain(format!(
            "integrate requires lo < hi, got [{lo}, {hi}]"
        )));
    }
    if hi.is_infinite() {
        let mapped = |t: f64| {
            let s = 1.0 - t;
            f(lo + t / s) / (s * s)
        };
        adaptive(mapped, 0.0, 1.0, settings)
    } else {
        adaptive(f, lo, hi, settings)
    }
}

pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    settings: &QuadratureSettings,
) -> Result<f64> {
    integrate_with_error(f, lo, hi, settings).map(|e| e.value)
}
