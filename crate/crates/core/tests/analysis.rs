#![allow(clippy::excessive_precision)]

use gated_ee::{CapacityMethod, LinkModel, QosSpec, SystemParams};
use proptest::prelude::*;

const CLOSED: CapacityMethod = CapacityMethod::ClosedFormM2;
const EXACT: CapacityMethod = CapacityMethod::ExactQuadrature;

fn model() -> LinkModel {
    LinkModel::new(SystemParams::table_one()).unwrap()
}

fn qos(theta: f64) -> QosSpec {
    QosSpec::new(theta).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn effective_capacity_at_reference_point() {
    let alpha = model()
        .effective_capacity(&qos(1e-4), 0.5323, CLOSED)
        .unwrap();
    assert!(rel(alpha, 1519.7e3) <= 1e-3, "alpha = {alpha}");
}

#[test]
fn reference_ee_rows() {
    let m = model();
    let rows = [
        (1e-4, 0.5323, 1.0623e5, 1.0478e5),
        (1e-5, 1.6293, 1.1441e5, 1.0488e5),
        (1e-6, 1.6606, 1.1544e5, 1.0489e5),
        (1e-7, 1.6636, 1.1554e5, 1.0489e5),
    ];
    for (theta, g, ee, base) in rows {
        let q = qos(theta);
        let got = m.energy_efficiency(&q, g, CLOSED).unwrap();
        let got_base = m.energy_efficiency(&q, 0.0, CLOSED).unwrap();
        assert!(rel(got, ee) <= 5e-3, "theta={theta}: EE {got}");
        assert!(
            rel(got_base, base) <= 5e-3,
            "theta={theta}: baseline {got_base}"
        );
    }
}

#[test]
fn frozen_oracle_point() {
    // θ = 1e-4, γ0 = 1: F = 0.91687443628970885 by both routes (mpmath, 30 digits)
    let m = model();
    let q = qos(1e-4);
    let f = m.f_function(&q, 1.0).unwrap();
    assert!(rel(f, 0.916_874_436_289_708_85) <= 1e-9, "F = {f}");
    let closed = m.effective_capacity(&q, 1.0, CLOSED).unwrap();
    let exact = m.effective_capacity(&q, 1.0, EXACT).unwrap();
    assert!(rel(closed, 867_847.449_020_3) <= 1e-8, "closed {closed}");
    assert!(rel(exact, 867_861.618_758_7) <= 1e-8, "exact {exact}");
}

#[test]
fn exact_and_closed_form_stay_close() {
    let m = model();
    for theta in [1e-7, 1e-6, 1e-5, 1e-4, 5e-4] {
        let q = qos(theta);
        for g in [0.0, 0.25, 0.5, 1.0, 1.6, 2.2, 3.0] {
            let a = m.energy_efficiency(&q, g, CLOSED).unwrap();
            let b = m.energy_efficiency(&q, g, EXACT).unwrap();
            assert!(rel(a, b) <= 1e-4, "theta={theta} g={g}: {a} vs {b}");
        }
    }
}

#[test]
fn g_signs_around_reference_optimum() {
    let m = model();
    let q = qos(1e-4);
    assert!(m.g_function(&q, 0.25).unwrap() > 0.0);
    assert!(m.g_function(&q, 1.0).unwrap() < 0.0);
}

#[test]
fn g_sign_tracks_ee_slope() {
    let m = model();
    let h = 1e-5;
    let mut checked = 0;
    for theta in [1e-6, 1e-5, 1e-4, 1e-3] {
        let q = qos(theta);
        for i in 1..=100 {
            let g0 = 5.0 * i as f64 / 100.0;
            let g = m.g_function(&q, g0).unwrap();
            let left = m.g_function(&q, g0 - 1e-4).unwrap();
            let right = m.g_function(&q, g0 + 1e-4).unwrap();
            if left.signum() != right.signum() || g == 0.0 {
                continue;
            }
            let up = m.energy_efficiency(&q, g0 + h, CLOSED).unwrap();
            let down = m.energy_efficiency(&q, g0 - h, CLOSED).unwrap();
            let slope = up - down;
            if slope.abs() <= 1e-12 * up.abs() {
                continue;
            }
            assert_eq!(
                g.signum(),
                slope.signum(),
                "theta={theta} g0={g0}: G={g:e} dEE={slope:e}"
            );
            checked += 1;
        }
    }
    assert!(checked > 300, "only {checked} points checked");
}

#[test]
fn strategy_off_is_always_transmit() {
    let m = model();
    let p = SystemParams::table_one();
    assert_eq!(m.mode_probabilities(0.0).unwrap(), (1.0, 0.0));
    assert_eq!(m.total_power(0.0).unwrap(), p.circuit_power + p.tx_power);
    let r = m.analyze(&qos(1e-4), 0.0, CLOSED).unwrap();
    assert_eq!(r.ee, r.effective_capacity / (p.circuit_power + p.tx_power));
}

#[test]
fn small_theta_recovers_mean_rate() {
    let m = model();
    let q = qos(1e-9);
    for g in [0.0, 0.5323, 1.73] {
        let alpha = m.effective_capacity(&q, g, EXACT).unwrap();
        let mean = m.mean_service_rate(g).unwrap();
        assert!(rel(alpha, mean) <= 1e-3, "g={g}: {alpha} vs {mean}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn f_in_unit_interval_and_increasing(
        ln_theta in (1e-7f64).ln()..(1e-3f64).ln(),
        g in 0.0f64..4.0,
        dg in 1e-3f64..1.0,
    ) {
        let m = model();
        let q = qos(ln_theta.exp());
        let a = m.f_function(&q, g).unwrap();
        let b = m.f_function(&q, g + dg).unwrap();
        prop_assert!(a > 0.0 && a < 1.0);
        prop_assert!(b > a, "F({}) = {} vs F({}) = {}", g, a, g + dg, b);
    }

    #[test]
    fn capacity_decreases_with_threshold(
        ln_theta in (1e-7f64).ln()..(1e-3f64).ln(),
        g in 0.0f64..4.0,
        dg in 1e-3f64..1.0,
    ) {
        let m = model();
        let q = qos(ln_theta.exp());
        let a = m.effective_capacity(&q, g, EXACT).unwrap();
        let b = m.effective_capacity(&q, g + dg, EXACT).unwrap();
        prop_assert!(b < a);
    }

    #[test]
    fn capacity_decreases_with_theta(
        ln_theta in (1e-7f64).ln()..(1e-2f64).ln(),
        factor in 1.01f64..10.0,
        g in 0.0f64..3.0,
    ) {
        let m = model();
        let theta = ln_theta.exp();
        let a = m.effective_capacity(&qos(theta), g, EXACT).unwrap();
        let b = m.effective_capacity(&qos(theta * factor), g, EXACT).unwrap();
        prop_assert!(b < a);
    }
}
