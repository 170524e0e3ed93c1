mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use approx::assert_abs_diff_eq;
use common::{a_gamma, gamma, j_gamma, midpoint};
use elastica_core::optimal_arc::{arc_length, energy_closed_form};
use elastica_core::quadrature::{elliptic_f, int_inv_sqrt_cos, int_sqrt_cos, invert_monotone};

#[test]
fn lanczos_oracle_is_sane() {
    assert_abs_diff_eq!(gamma(1.0), 1.0, epsilon = 1e-14);
    assert_abs_diff_eq!(gamma(5.0), 24.0, epsilon = 1e-12);
    assert_abs_diff_eq!(gamma(0.5), std::f64::consts::PI.sqrt(), epsilon = 1e-14);
}

#[test]
fn sqrt_cos_constant_matches_gamma_identity() {
    let a = int_sqrt_cos(FRAC_PI_2).unwrap();
    assert_abs_diff_eq!(a, a_gamma(), epsilon = 1e-10);
    assert_abs_diff_eq!(a, 1.198_140_234_735_59, epsilon = 1e-12);
}

#[test]
fn inverse_sqrt_cos_matches_gamma_identity() {
    assert_abs_diff_eq!(int_inv_sqrt_cos(FRAC_PI_2).unwrap(), j_gamma(), epsilon = 1e-10);
}

#[test]
fn half_turn_length_by_three_routes() {
    let l0 = arc_length(FRAC_PI_2).unwrap();
    assert_abs_diff_eq!(l0, 2.0 * j_gamma() / a_gamma(), epsilon = 1e-8);
    let a = int_sqrt_cos(FRAC_PI_2).unwrap();
    let b = elliptic_f(-FRAC_PI_4, 2.0).unwrap();
    assert_abs_diff_eq!(b, -0.5 * int_inv_sqrt_cos(FRAC_PI_2).unwrap(), epsilon = 1e-10);
    assert_abs_diff_eq!(l0, -4.0 * b / a, epsilon = 1e-8);
}

#[test]
fn quarter_turn_against_dense_midpoint() {
    let n = 2_000_000;
    let f = midpoint(|t: f64| t.cos().sqrt(), 0.0, FRAC_PI_4, n);
    let g = midpoint(|t: f64| 1.0 / t.cos().sqrt(), 0.0, FRAC_PI_4, n);
    assert_abs_diff_eq!(int_sqrt_cos(FRAC_PI_4).unwrap(), f, epsilon = 1e-11);
    assert_abs_diff_eq!(int_inv_sqrt_cos(FRAC_PI_4).unwrap(), g, epsilon = 1e-11);
}

#[test]
fn inversion_against_tabulation() {
    let a = int_sqrt_cos(FRAC_PI_2).unwrap();
    let theta = invert_monotone(|t| int_sqrt_cos(t).unwrap(), 0.5 * a, (0.0, FRAC_PI_2)).unwrap();
    // cumulative midpoint table, then linear interpolation at the target
    let n = 200_000;
    let h = FRAC_PI_2 / n as f64;
    let mut acc = 0.0;
    let mut tab = None;
    for i in 0..n {
        let next = acc + h * ((i as f64 + 0.5) * h).cos().sqrt();
        if next >= 0.5 * a_gamma() {
            tab = Some(i as f64 * h + h * (0.5 * a_gamma() - acc) / (next - acc));
            break;
        }
        acc = next;
    }
    assert_abs_diff_eq!(theta, tab.unwrap(), epsilon = 1e-8);
}

#[test]
fn energy_closed_form_at_the_ends() {
    let a = a_gamma();
    assert_abs_diff_eq!(energy_closed_form(FRAC_PI_2).unwrap(), a * a, epsilon = 1e-10);
    // E(α) = α − α⁵/180 + O(α⁷)
    for alpha in [1e-3, 1e-2, 5e-2] {
        let e = energy_closed_form(alpha).unwrap();
        assert_abs_diff_eq!(e, alpha - alpha.powi(5) / 180.0, epsilon = 1e-15 + alpha.powi(7));
    }
}
