//! Hurwitz zeta `ζ(s, a) = Σ_{n≥0} (n + a)^{-s}` for real `s ≠ 1`, `a > 0`,
//! analytically continued by Euler–Maclaurin summation.

use crate::error::{Error, Result};

/// `B_{2j} / (2j)!` for `j = 1..=13`.
const BERNOULLI_OVER_FACT: [f64; 13] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
    -3617.0 / 10_670_622_842_880_000.0,
    43_867.0 / 5_109_094_217_170_944_000.0,
    -174_611.0 / 802_857_662_698_291_200_000.0,
    77_683.0 / 14_101_100_039_391_805_440_000.0,
    -236_364_091.0 / 1_693_824_136_731_743_669_452_800_000.0,
    657_931.0 / 186_134_520_519_971_831_808_000_000.0,
];

/// Shift applied before the Euler–Maclaurin tail; `a + SHIFT ≥ 20` keeps the
/// Bernoulli remainder below double precision for `|s| ≲ 20`.
const MIN_BASE: f64 = 20.0;

pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::domain(format!("Hurwitz zeta needs a > 0, got {a}")));
    }
    if s == 1.0 || !s.is_finite() {
        return Err(Error::domain(format!("Hurwitz zeta undefined at s = {s}")));
    }
    let shift = (MIN_BASE - a).max(0.0).ceil() as usize;
    let head: f64 = (0..shift).map(|n| (n as f64 + a).powf(-s)).sum();
    let b = a + shift as f64;
    Ok(head + em_tail(s, b))
}

/// `Σ_{n≥0} (n + b)^{-s}` by Euler–Maclaurin, assuming `b` large.
fn em_tail(s: f64, b: f64) -> f64 {
    let b_s = b.powf(-s);
    let mut total = b * b_s / (s - 1.0) + 0.5 * b_s;
    // rising factorial s(s+1)…(s+2j-2) times b^{-s-2j+1}
    let mut fac = s * b_s / b;
    let inv_b2 = 1.0 / (b * b);
    for (j, coef) in BERNOULLI_OVER_FACT.iter().enumerate() {
        let term = coef * fac;
        total += term;
        if term.abs() < 1e-18 * total.abs() {
            break;
        }
        let m = 2.0 * (j as f64 + 1.0);
        fac *= (s + m - 1.0) * (s + m) * inv_b2;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn riemann_special_values() {
        assert!((hurwitz_zeta(2.0, 1.0).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!((hurwitz_zeta(4.0, 1.0).unwrap() - PI.powi(4) / 90.0).abs() < 1e-15);
        assert!((hurwitz_zeta(0.0, 1.0).unwrap() + 0.5).abs() < 1e-15);
        // the head sum cancels against the tail for negative s
        assert!((hurwitz_zeta(-1.0, 1.0).unwrap() + 1.0 / 12.0).abs() < 1e-13);
    }

    #[test]
    fn value_at_zero_is_half_minus_a() {
        for &a in &[0.1, 0.25, 0.75, 1.0, 3.3, 40.0] {
            assert!((hurwitz_zeta(0.0, a).unwrap() - (0.5 - a)).abs() < 1e-13);
        }
    }

    #[test]
    fn shift_identity() {
        // ζ(s, a) = a^{-s} + ζ(s, a + 1)
        for &s in &[-0.7, 0.3, 1.5, 3.0] {
            for &a in &[0.2, 1.7, 25.0] {
                let lhs = hurwitz_zeta(s, a).unwrap();
                let rhs = a.powf(-s) + hurwitz_zeta(s, a + 1.0).unwrap();
                assert!((lhs - rhs).abs() < 1e-13 * lhs.abs().max(1.0));
            }
        }
    }

    #[test]
    fn pole_rejected() {
        assert!(hurwitz_zeta(1.0, 1.0).is_err());
        assert!(hurwitz_zeta(2.0, 0.0).is_err());
    }
}
