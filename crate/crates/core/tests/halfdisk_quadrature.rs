//! The exact half-disk integrals against numerical quadrature in polar
//! coordinates.

use moment_forge::functionals::halfdisk_monomial;

/// Gauss-Legendre nodes and weights on [0, 1], computed by Newton's method.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push(((x + 1.0) / 2.0, w / 2.0));
    }
    out
}

fn numeric(a: u32, b: u32) -> f64 {
    let pi = std::f64::consts::PI;
    let theta: f64 = gauss_legendre(48)
        .iter()
        .map(|(u, w)| {
            let t = pi * u;
            pi * w * t.cos().powi(a as i32) * t.sin().powi(b as i32)
        })
        .sum();
    let radial: f64 = gauss_legendre(24)
        .iter()
        .map(|(r, w)| w * r.powi((a + b + 1) as i32))
        .sum();
    theta * radial
}

#[test]
fn exact_values_match_quadrature() {
    for a in 0..=8 {
        for b in 0..=8 {
            let (re, im) = halfdisk_monomial(a, b).to_f64_pair();
            assert_eq!(im, 0.0);
            let n = numeric(a, b);
            assert!(
                (re - n).abs() < 1e-9,
                "x^{a} y^{b}: exact {re}, numeric {n}"
            );
        }
    }
}

#[test]
fn disk_area() {
    let (re, _) = halfdisk_monomial(0, 0).to_f64_pair();
    assert!((re - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
}
