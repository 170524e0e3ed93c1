//! Oracles shared by the integration tests. None of them goes through the
//! crate's own quadrature.

#![allow(dead_code)]

use std::f64::consts::PI;

use elastica_core::{ConvexBody, Point};

/// Γ(x) for x > 0 by the Lanczos approximation (g = 7, nine terms).
pub fn gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const C: [f64; 9] = [
        0.999_999_999_999_809_9,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_1,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    let x = x - 1.0;
    let mut s = C[0];
    for (i, c) in C.iter().enumerate().skip(1) {
        s += c / (x + i as f64);
    }
    let t = x + G + 0.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * s
}

/// ∫₀^{π/2} √cos.
pub fn a_gamma() -> f64 {
    0.5 * PI.sqrt() * gamma(0.75) / gamma(1.25)
}

/// ∫₀^{π/2} 1/√cos.
pub fn j_gamma() -> f64 {
    0.5 * PI.sqrt() * gamma(0.25) / gamma(0.75)
}

/// Composite midpoint rule with `n` cells.
pub fn midpoint(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    (0..n).map(|i| f(a + (i as f64 + 0.5) * h)).sum::<f64>() * h
}

/// Regular `n`-gon inscribed in the circle of radius `r`.
pub fn regular(n: usize, r: f64) -> ConvexBody {
    let pts = (0..n)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / n as f64;
            Point::new(r * t.cos(), r * t.sin())
        })
        .collect();
    ConvexBody::new(pts).unwrap()
}

/// `|x − y| ≤ tol·|y|`.
pub fn rel_close(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * y.abs()
}
