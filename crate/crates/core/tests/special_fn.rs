#![allow(clippy::excessive_precision)]

mod common;

use gated_ee::special_fn::{gamma_fn, integrate, upper_incomplete_gamma, QuadratureSettings};
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn gamma_matches_reference() {
    for &(v, expected) in common::GAMMA {
        let got = gamma_fn(v).unwrap();
        assert!(
            rel(got, expected) <= 1e-12,
            "Γ({v}) = {got}, want {expected}"
        );
    }
}

#[test]
fn upper_incomplete_gamma_matches_reference() {
    let mut worst = (0.0, 0.0, 0.0);
    for &(v, z, expected) in common::UPPER_GAMMA {
        let got = upper_incomplete_gamma(v, z).unwrap();
        let e = rel(got, expected);
        if e > worst.2 {
            worst = (v, z, e);
        }
        assert!(
            e <= 1e-10,
            "Γ({v}, {z}) = {got:e}, want {expected:e} (rel {e:e})"
        );
    }
    println!(
        "worst relative error {:e} at v={}, z={}",
        worst.2, worst.0, worst.1
    );
}

#[test]
fn negative_half_at_one_against_quadrature_oracle() {
    // ∫_1^∞ w^{-3/2} e^{-w} dw; adaptive quadrature at 1e-12 gives 0.17814771178156069
    let oracle = 0.178_147_711_781_560_69;
    let got = upper_incomplete_gamma(-0.5, 1.0).unwrap();
    assert!(rel(got, oracle) <= 1e-12, "{got}");
    let s = QuadratureSettings::new(1e-12, 0.0, 2000).unwrap();
    let quad = integrate(|w| w.powf(-1.5) * (-w).exp(), 1.0, f64::INFINITY, &s).unwrap();
    assert!(rel(quad, oracle) <= 1e-11, "{quad}");
}

#[test]
fn zero_argument_limit() {
    for v in [0.1, 0.5, 1.0, 2.999, 7.25, 30.0] {
        let full = gamma_fn(v).unwrap();
        assert!(rel(upper_incomplete_gamma(v, 0.0).unwrap(), full) <= 1e-12);
        // the missing mass is ~ z^v / v
        let z: f64 = 1e-14;
        let gap = full - upper_incomplete_gamma(v, z).unwrap();
        assert!(rel(gap, z.powf(v) / v) <= 1e-3 || gap.abs() <= full * 1e-15);
    }
}

#[test]
fn near_integer_shapes_stay_accurate() {
    // shapes straddling the integers exercise the small-offset anchor
    for &(v, z, expected) in &[
        (-1e-9, 0.5, 0.559_773_594_805_891_1),
        (-2.0 + 1e-7, 0.2, 8.798_631_741_171_21),
        (1e-10, 1.0, 0.219_383_934_405_304_59),
    ] {
        let got = upper_incomplete_gamma(v, z).unwrap();
        assert!(
            rel(got, expected) <= 1e-9,
            "Γ({v}, {z}) = {got}, want {expected}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn recurrence_identity(v in -4.5f64..10.0, z in 0.01f64..20.0) {
        let lhs = upper_incomplete_gamma(v + 1.0, z).unwrap();
        let rhs = v * upper_incomplete_gamma(v, z).unwrap() + (v * z.ln() - z).exp();
        prop_assert!(rel(rhs, lhs) <= 1e-9, "v={} z={} lhs={:e} rhs={:e}", v, z, lhs, rhs);
    }

    #[test]
    fn agrees_with_quadrature_of_integrand(v in -5.0f64..50.0, ln_z in (1e-8f64).ln()..(100f64).ln()) {
        let z = ln_z.exp();
        let series = upper_incomplete_gamma(v, z).unwrap();
        let s = QuadratureSettings::new(1e-12, 0.0, 2000).unwrap();
        // substitute w = z e^u so the integrand is smooth in u on [0, ∞),
        // splitting at the peak u = ln(v / z)
        let f = |u: f64| (v * (z.ln() + u) - z * u.exp()).exp();
        let peak = if v > z { (v / z).ln() } else { 0.0 };
        let mut quad = integrate(f, peak, f64::INFINITY, &s).unwrap();
        if peak > 0.0 {
            quad += integrate(f, 0.0, peak, &s).unwrap();
        }
        prop_assert!(rel(series, quad) <= 1e-8, "v={} z={} series={:e} quad={:e}", v, z, series, quad);
    }

    #[test]
    fn decreasing_in_z(v in -4.0f64..40.0, z in 0.01f64..80.0, dz in 1e-3f64..5.0) {
        let a = upper_incomplete_gamma(v, z).unwrap();
        let b = upper_incomplete_gamma(v, z + dz).unwrap();
        prop_assert!(b <= a);
        prop_assert!(b > 0.0);
    }
}
