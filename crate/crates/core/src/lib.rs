//! Energy-efficiency toolkit for threshold-gated transmission over Nakagami-m
//! block fading with a delay-outage (effective capacity) QoS constraint.
//!
//! The transmitter sends only when the normalized channel gain is at least a
//! threshold `gamma0` and idles otherwise. This crate provides:
//!
//! * [`special_fn`]: gamma, upper incomplete gamma (negative shape allowed) and
//!   adaptive Gauss-Kronrod quadrature on finite and semi-infinite ranges.
//! * [`channel`]: the fading model, link budget and a seeded gain sampler.
//! * [`analysis`]: effective capacity, power model, energy efficiency and the
//!   sign function of its derivative.
//! * [`optimizer`]: bisection for the EE-optimal threshold, the QoS-exponent
//!   regime boundary and capacity inversion.
//! * [`simulator`]: a slot-level Monte Carlo queue that measures empirical EE.
//!
//! ```
//! use gated_ee::{LinkModel, QosSpec, SearchSettings, SystemParams};
//!
//! let model = LinkModel::new(SystemParams::table_one()).unwrap();
//! let qos = QosSpec::new(1e-4).unwrap();
//! let opt = gated_ee::optimizer::find_optimal_threshold(&model, &qos, &SearchSettings::default()).unwrap();
//! assert!((opt.gamma0_opt - 0.532).abs() < 1e-3);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod analysis;
pub mod channel;
mod error;
pub mod optimizer;
pub mod simulator;
pub mod special_fn;

pub use analysis::{AnalysisResult, CapacityMethod, LinkModel, QosSpec};
pub use channel::{DerivedConstants, GainSampler, PathLoss, SystemParams};
pub use error::{Error, Result};
pub use optimizer::{
    OptimumResult, Regime, SearchSettings, SweepQuantity, SweepRow, ThetaThreshold,
};
pub use simulator::{CurveRow, SimConfig, SimReport};
pub use special_fn::QuadratureSettings;
