mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use approx::assert_abs_diff_eq;
use common::{a_gamma, regular, rel_close};
use elastica_core::analysis::{
    contact_split, e_prime, e_prime_fd, e_second, h_alpha, inequality_suite, r_alpha, r_prime, random_smooth_body,
    subadditivity_gap, subadditivity_scan, EAlphaTable, ShapeFamily,
};
use elastica_core::optimal_arc::energy_closed_form;

fn grid(n: usize, lo: f64, hi: f64) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
}

#[test]
fn first_derivative_against_finite_differences() {
    let worst = grid(1000, 0.01, FRAC_PI_2 - 0.01)
        .map(|t| (e_prime(t).unwrap() - e_prime_fd(t, 1e-5).unwrap()).abs())
        .fold(0.0, f64::max);
    assert!(worst < 1e-6, "{worst:e}");
}

#[test]
fn second_derivative_is_negative_and_matches_differences() {
    for t in grid(1000, 1e-3, FRAC_PI_2) {
        assert!(e_second(t).unwrap() < 0.0, "α = {t}");
    }
    let step = 1e-4;
    for t in grid(200, 0.05, FRAC_PI_2 - 0.05) {
        let e = |x: f64| energy_closed_form(x).unwrap();
        let fd = (e(t + step) - 2.0 * e(t) + e(t - step)) / (step * step);
        assert_abs_diff_eq!(e_second(t).unwrap(), fd, epsilon = 1e-4);
    }
}

#[test]
fn remainder_is_nonnegative_with_matching_derivative() {
    assert_eq!(r_prime(0.0).unwrap(), 0.0);
    for t in grid(1000, 1e-6, FRAC_PI_2) {
        assert!(r_alpha(t).unwrap() >= 0.0, "α = {t}");
    }
    let step = 1e-5;
    let worst = grid(1000, 0.01, FRAC_PI_2 - 0.01)
        .map(|t| {
            let fd = (r_alpha(t + step).unwrap() - r_alpha(t - step).unwrap()) / (2.0 * step);
            (r_prime(t).unwrap() - fd).abs()
        })
        .fold(0.0, f64::max);
    assert!(worst < 1e-6, "{worst:e}");
}

#[test]
fn ratio_h_is_at_most_one() {
    for t in grid(1000, 1e-6, FRAC_PI_2) {
        let h = h_alpha(t).unwrap();
        assert!((0.0..=1.0).contains(&h), "α = {t}: {h}");
    }
    assert_abs_diff_eq!(h_alpha(1e-3).unwrap(), 1.0, epsilon = 1e-6);
    assert_abs_diff_eq!(h_alpha(FRAC_PI_4).unwrap(), 0.885_130_52, epsilon = 1e-8);
    assert_abs_diff_eq!(e_prime(FRAC_PI_4).unwrap(), 0.986_805_002_144, epsilon = 1e-10);
}

#[test]
fn energy_below_the_circular_value() {
    for t in grid(1000, 1e-3, FRAC_PI_2) {
        assert!(energy_closed_form(t).unwrap() < t);
    }
}

#[test]
fn table_shape_and_last_row() {
    let tab = EAlphaTable::new(100).unwrap();
    assert_eq!(tab.rows.len(), 100);
    let last = tab.rows.last().unwrap();
    assert_eq!(last.alpha, FRAC_PI_2);
    assert_abs_diff_eq!(last.e, a_gamma() * a_gamma(), epsilon = 1e-10);
    assert_eq!(last.e_prime, 0.0);
    assert!(tab.rows.iter().all(|r| r.e_second < 0.0 && r.e > 0.0 && r.r >= 0.0));
    assert_eq!(tab.concavity_violations(), 0);
    assert!(tab.h_decreasing());
}

#[test]
fn subadditivity_on_the_full_grid() {
    let rep = subadditivity_scan(200).unwrap();
    assert_eq!(rep.violations, 0);
    assert!(rep.min_gap > 0.0);
    assert_eq!(rep.pairs, 199 * 200 / 2);
}

#[test]
fn subadditivity_gap_is_fifth_order_near_zero() {
    let a2 = a_gamma() * a_gamma();
    let e = |x| energy_closed_form(x).unwrap();
    assert_abs_diff_eq!(2.0 * e(FRAC_PI_4) - e(FRAC_PI_2), 2.0 * 0.783_456_034_2 - a2, epsilon = 1e-9);
    for t in [1e-4, 1e-3, 1e-2] {
        let gap = subadditivity_gap(t, t).unwrap();
        assert!(gap > 0.0);
        assert!(rel_close(gap, t.powi(5) / 6.0, 1e-2), "{t}: {gap:e}");
    }
}

#[test]
fn contact_split_minimum_at_an_end() {
    for gamma in [FRAC_PI_2 + 0.1, 3.0 * FRAC_PI_4, PI - 0.1] {
        let s = contact_split(gamma, 400).unwrap();
        assert!(s.endpoint_distance < 1e-6, "{s:?}");
        assert!(s.peaks_at_middle);
    }
    let s = contact_split(PI, 100).unwrap();
    assert_abs_diff_eq!(s.e_min, 2.0 * a_gamma() * a_gamma(), epsilon = 1e-10);
    assert!(contact_split(1.0, 100).is_err());
}

#[test]
fn disk_is_extremal_for_four_products() {
    let rep = inequality_suite(&regular(10_000, 1.0)).unwrap();
    let expect = [2.0 * PI * PI, PI * PI * PI, 2.0 * PI, PI, PI];
    for (c, want) in rep.checks.iter().zip(expect) {
        assert!(rel_close(c.product, want, 1e-3), "{c:?}");
    }
    assert!(rep.checks[..4].iter().all(|c| c.equality));
    assert_abs_diff_eq!(rep.checks[4].deficit, PI - 2.0 * a_gamma() * a_gamma(), epsilon = 1e-3);
    assert!(rep.checks[4].deficit > 0.27);
}

#[test]
fn random_bodies_satisfy_every_inequality() {
    for seed in 0..100 {
        let family = if seed % 2 == 0 {
            ShapeFamily::Ellipse { a: 1.25 + (seed % 7) as f64 * 0.25, b: 1.0 }
        } else {
            ShapeFamily::Fourier { k_max: 2 + (seed as usize % 5) }
        };
        let body = random_smooth_body(seed, 800, family).unwrap();
        let rep = inequality_suite(&body).unwrap();
        for c in &rep.checks {
            assert!(c.deficit > 0.0, "seed {seed}: {c:?}");
        }
    }
}

#[test]
fn coarse_polygons_are_refused() {
    assert!(inequality_suite(&regular(8, 1.0)).is_err());
    assert!(inequality_suite(&regular(16, 1.0)).unwrap().coarse);
}

#[test]
fn random_bodies_are_reproducible() {
    let fam = ShapeFamily::Ellipse { a: 2.0, b: 1.0 };
    let b = random_smooth_body(0, 4000, fam).unwrap();
    assert!(rel_close(b.area(), 2.0 * PI, 1e-4));
    assert_eq!(b.vertices(), random_smooth_body(0, 4000, fam).unwrap().vertices());
    assert!(random_smooth_body(1, 400, ShapeFamily::Fourier { k_max: 4 }).is_ok());
}
