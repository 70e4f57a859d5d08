//! Positive zeros `j_{ν,l}` of `J_ν`.
//!
//! Large zeros come straight from McMahon's expansion followed by a bracketed
//! Newton refinement. Where McMahon is unreliable (small `l` relative to `ν²`)
//! the zeros are located by a forward sign-change scan: consecutive zeros of
//! `J_ν` are always more than 3 apart and the first one exceeds `ν`, so a unit
//! step never skips a root.

use std::f64::consts::PI;

use serde::Serialize;

use super::bessel::{j_pair, MAX_ORDER};
use crate::error::{Error, Result};

const SCAN_STEP: f64 = 1.0;
const MAX_NEWTON: usize = 100;

/// McMahon's large-`l` expansion of `j_{ν,l}` through order `β^{-7}`.
pub fn mcmahon(nu: f64, l: usize) -> f64 {
    let beta = (l as f64 + 0.5 * nu - 0.25) * PI;
    mcmahon_from_beta(nu, beta)
}

pub(crate) fn mcmahon_from_beta(nu: f64, beta: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let e = 8.0 * beta;
    let e2 = e * e;
    let m1 = mu - 1.0;
    let c1 = m1;
    let c3 = 4.0 * m1 * (7.0 * mu - 31.0) / 3.0;
    let c5 = 32.0 * m1 * (83.0 * mu * mu - 982.0 * mu + 3779.0) / 15.0;
    let c7 = 64.0 * m1 * (6949.0 * mu * mu * mu - 153_855.0 * mu * mu + 1_585_743.0 * mu - 6_277_237.0)
        / 105.0;
    beta - (c1 + (c3 + (c5 + c7 / e2) / e2) / e2) / e
}

/// Whether the McMahon guess is close enough to `j_{ν,l}` to bracket it in
/// `[guess - 1, guess + 1]` without catching a neighbour.
fn mcmahon_reliable(nu: f64, l: usize) -> bool {
    let beta = (l as f64 + 0.5 * nu - 0.25) * PI;
    beta > 2.0 * nu * nu + 8.0
}

fn j_and_slope(nu: f64, x: f64) -> (f64, f64) {
    let (j, j1) = j_pair(nu, x);
    (j, nu / x * j - j1)
}

/// Safeguarded Newton iteration on `J_ν` inside a sign-change bracket.
fn refine(nu: f64, mut lo: f64, mut hi: f64, guess: f64) -> Result<f64> {
    let (mut f_lo, _) = j_and_slope(nu, lo);
    let (f_hi, _) = j_and_slope(nu, hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::no_conv(
            "Bessel zero refinement",
            format!("no sign change of J_{nu} in [{lo}, {hi}]"),
        ));
    }
    let mut x = if guess > lo && guess < hi { guess } else { 0.5 * (lo + hi) };
    for _ in 0..MAX_NEWTON {
        let (f, df) = j_and_slope(nu, x);
        if f == 0.0 {
            return Ok(x);
        }
        if f.signum() == f_lo.signum() {
            lo = x;
            f_lo = f;
        } else {
            hi = x;
        }
        let newton = x - f / df;
        let next = if df != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (next - x).abs() <= 4.0 * f64::EPSILON * x || hi - lo <= 4.0 * f64::EPSILON * x {
            return Ok(next);
        }
        x = next;
    }
    Err(Error::no_conv(
        "Bessel zero refinement",
        format!("Newton did not settle for order {nu} near {x}"),
    ))
}

fn check_order(nu: f64) -> Result<()> {
    if !(0.0..=MAX_ORDER).contains(&nu) {
        return Err(Error::domain(format!(
            "Bessel order must lie in [0, {MAX_ORDER}], got {nu}"
        )));
    }
    Ok(())
}

fn from_mcmahon(nu: f64, l: usize) -> Result<f64> {
    let g = mcmahon(nu, l);
    refine(nu, g - 1.0, g + 1.0, g)
}

/// Finds the first zero strictly above `from`, scanning forward.
fn next_zero_after(nu: f64, from: f64) -> Result<f64> {
    let mut a = from;
    let (mut fa, _) = j_pair(nu, a);
    // scan far enough to see the next root even for the largest spacing
    let limit = from + 10.0 + 2.0 * nu;
    while a < limit {
        let b = a + SCAN_STEP;
        let (fb, _) = j_pair(nu, b);
        if fb == 0.0 {
            return Ok(b);
        }
        if fa.signum() != fb.signum() {
            return refine(nu, a, b, 0.5 * (a + b));
        }
        a = b;
        fa = fb;
    }
    Err(Error::no_conv(
        "Bessel zero scan",
        format!("no sign change of J_{nu} in [{from}, {limit}]"),
    ))
}

fn scan_start(nu: f64) -> f64 {
    nu.max(1.0)
}

/// The `l`-th positive zero of `J_ν` (1-based).
pub fn bessel_zero(nu: f64, l: usize) -> Result<f64> {
    check_order(nu)?;
    if l == 0 {
        return Err(Error::domain("zero index l must be >= 1"));
    }
    if mcmahon_reliable(nu, l) {
        return from_mcmahon(nu, l);
    }
    let mut z = scan_start(nu);
    for _ in 0..l {
        z = next_zero_after(nu, z + f64::EPSILON * z.max(1.0) * 8.0)?;
    }
    Ok(z)
}

/// The first `count` positive zeros of `J_ν`, in increasing order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BesselZeroTable {
    order: f64,
    zeros: Vec<f64>,
}

impl BesselZeroTable {
    pub fn new(nu: f64, count: usize) -> Result<Self> {
        check_order(nu)?;
        if count == 0 {
            return Err(Error::domain("zero table needs count >= 1"));
        }
        let mut zeros = Vec::with_capacity(count);
        let mut last = scan_start(nu);
        for l in 1..=count {
            let z = if mcmahon_reliable(nu, l) {
                from_mcmahon(nu, l)?
            } else {
                next_zero_after(nu, last + 8.0 * f64::EPSILON * last.max(1.0))?
            };
            if let Some(&prev) = zeros.last() {
                if z <= prev {
                    return Err(Error::no_conv(
                        "Bessel zero table",
                        format!("zeros of J_{nu} not increasing at l = {l}: {prev} then {z}"),
                    ));
                }
            }
            zeros.push(z);
            last = z;
        }
        Ok(BesselZeroTable { order: nu, zeros })
    }

    pub fn order(&self) -> f64 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    /// `j_{ν,l}` with 1-based `l`.
    pub fn get(&self, l: usize) -> Option<f64> {
        l.checked_sub(1).and_then(|i| self.zeros.get(i).copied())
    }

    /// A copy with every zero scaled by `1 + rel`; used for fault injection.
    pub fn perturbed(&self, rel: f64) -> Self {
        BesselZeroTable {
            order: self.order,
            zeros: self.zeros.iter().map(|z| z * (1.0 + rel)).collect(),
        }
    }
}
