//! Bessel function of the first kind `J_ν(x)` for real order `0 ≤ ν ≤ 200` and
//! real argument `x ≥ 0`.
//!
//! Three evaluation regimes are used:
//!
//! - ascending power series when `x ≤ 2√(ν+1)`, where every term is smaller
//!   than the previous one and there is no cancellation;
//! - Hankel's asymptotic expansion once `x ≥ max(25, ν²)`, where the series
//!   terms decrease from the first one;
//! - Miller's backward recurrence everywhere in between, normalised with the
//!   Neumann-type sum `(x/2)^f = Σ_k (f+2k) Γ(f+k)/k! · J_{f+2k}(x)`.

use std::f64::consts::PI;

use statrs::function::gamma::{gamma, ln_gamma};

use crate::error::{Error, Result};

/// Largest order accepted by [`bessel_j`].
pub const MAX_ORDER: f64 = 200.0;

/// `J_ν(x)`.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    check_args(nu, x)?;
    Ok(j_pair(nu, x).0)
}

/// `J'_ν(x)`; infinite at `x = 0` when `0 < ν < 1`.
pub fn bessel_j_prime(nu: f64, x: f64) -> Result<f64> {
    check_args(nu, x)?;
    if x == 0.0 {
        return Ok(if nu == 0.0 || nu > 1.0 {
            0.0
        } else if nu == 1.0 {
            0.5
        } else {
            f64::INFINITY
        });
    }
    let (j, j1) = j_pair(nu, x);
    Ok(nu / x * j - j1)
}

fn check_args(nu: f64, x: f64) -> Result<()> {
    if !nu.is_finite() || nu < 0.0 {
        return Err(Error::domain(format!("Bessel order must be >= 0, got {nu}")));
    }
    if nu > MAX_ORDER {
        return Err(Error::domain(format!(
            "Bessel order {nu} exceeds supported maximum {MAX_ORDER}"
        )));
    }
    if !x.is_finite() || x < 0.0 {
        return Err(Error::domain(format!(
            "Bessel argument must be finite and >= 0, got {x}"
        )));
    }
    Ok(())
}

/// `(J_ν(x), J_{ν+1}(x))` without argument validation.
pub(crate) fn j_pair(nu: f64, x: f64) -> (f64, f64) {
    if x == 0.0 {
        return (if nu == 0.0 { 1.0 } else { 0.0 }, 0.0);
    }
    if x * x <= 4.0 * (nu + 1.0) {
        (series(nu, x), series(nu + 1.0, x))
    } else if x >= hankel_threshold(nu + 1.0) {
        (hankel(nu, x), hankel(nu + 1.0, x))
    } else {
        miller(nu, x)
    }
}

fn hankel_threshold(nu: f64) -> f64 {
    (nu * nu).max(25.0)
}

fn series(nu: f64, x: f64) -> f64 {
    let half = 0.5 * x;
    let lead = if nu == 0.0 {
        1.0
    } else {
        (nu * half.ln() - ln_gamma(nu + 1.0)).exp()
    };
    if lead == 0.0 {
        return 0.0;
    }
    let q = -half * half;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..500 {
        let kf = k as f64;
        term *= q / (kf * (nu + kf));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    lead * sum
}

fn hankel(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let eight_x = 8.0 * x;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0_f64;
    let mut prev = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (k as f64 * eight_x);
        if term == 0.0 {
            break;
        }
        let mag = term.abs();
        if mag > prev {
            // asymptotic series started to diverge; the previous partial sum is optimal
            break;
        }
        prev = mag;
        // signs follow (-1)^{k/2} for even k in P and (-1)^{(k-1)/2} for odd k in Q
        match k % 4 {
            0 => p += term,
            1 => q += term,
            2 => p -= term,
            _ => q -= term,
        }
        if mag < 1e-17 * (p.abs() + q.abs()) {
            break;
        }
    }
    let chi = x - (0.5 * nu + 0.25) * PI;
    (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// Backward recurrence in the order at fixed `x`, returning `(J_ν, J_{ν+1})`.
fn miller(nu: f64, x: f64) -> (f64, f64) {
    let n0 = nu.floor();
    let frac = nu - n0;
    let n0 = n0 as usize;
    let reach = (n0 as f64 + 1.0).max(x);
    let mut start = (reach + 40.0 + 10.0 * reach.cbrt()).ceil() as usize;
    if start % 2 == 1 {
        start += 1;
    }

    // vals[m] holds an unnormalised J_{frac+m}(x)
    let mut vals = vec![0.0_f64; start + 2];
    vals[start] = 1e-30;
    for m in (1..=start).rev() {
        let order = frac + m as f64;
        let next = 2.0 * order / x * vals[m] - vals[m + 1];
        vals[m - 1] = next;
        if next.abs() > 1e250 {
            for v in vals[m - 1..].iter_mut() {
                *v *= 1e-250;
            }
        }
    }

    let mut norm = 0.0;
    if frac == 0.0 {
        norm += vals[0];
        for k in (2..=start).step_by(2) {
            norm += 2.0 * vals[k];
        }
        let scale = 1.0 / norm;
        (vals[n0] * scale, vals[n0 + 1] * scale)
    } else {
        // weights (f+2k)(f)_k/k!, so that Σ w_k J_{f+2k} = (x/2)^f / Γ(f)
        let mut w = frac;
        norm += w * vals[0];
        let mut k = 1;
        while 2 * k <= start {
            let kf = k as f64;
            w *= (frac + kf - 1.0) / kf * (frac + 2.0 * kf) / (frac + 2.0 * kf - 2.0);
            norm += w * vals[2 * k];
            k += 1;
        }
        let scale = (0.5 * x).powf(frac) / (gamma(frac) * norm);
        (vals[n0] * scale, vals[n0 + 1] * scale)
    }
}
