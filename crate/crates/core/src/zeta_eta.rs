//! Spectral zeta data of the free disk operator and the boundary η-invariant.
//!
//! The free operator's spectrum is built from the positive zeros of Bessel
//! functions, so everything reduces to `f_ν(s) = Σ_l j_{ν,l}^{-s}` near
//! `s = 0`:
//!
//! - `f_ν(0) = -ν/2 - 1/4`;
//! - `f'_ν(0) = -½ ln 2 + ((2ν-1)/4)(ln π - γ) - S_ν` with
//!   `S_ν = Σ_l ln[j_{ν,l}/(lπ) · e^{-(2ν-1)/(4l)}]`.
//!
//! `S_ν` is summed over explicitly computed zeros and closed with a tail
//! obtained from McMahon's expansion, expanded as a power series in `1/l`
//! and summed term by term with Hurwitz zeta values.
//!
//! Independently of those closed forms, [`zeta_continued`] continues `f_ν(s)`
//! numerically by pairing each zero with its McMahon leading term
//! `(l + ν/2 - 1/4)π`, whose sum is a Hurwitz zeta function.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flux::{level_k, require_supported};
use crate::specfun::{hurwitz_zeta, BesselZeroTable};
use crate::{Tolerances, EULER_GAMMA};

/// Number of zeros summed explicitly in `S_ν` before the analytic tail.
pub const EXPLICIT_ZEROS: usize = 200;
const MAX_EXPLICIT_ZEROS: usize = 12_800;

/// `f_ν(0)`, `f'_ν(0)` and the bookkeeping behind the series for `f'_ν(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZetaValues {
    pub order: f64,
    pub f0: f64,
    pub fprime0: f64,
    /// Zeros summed explicitly.
    pub terms_used: usize,
    /// Size of the last tail term kept; an upper estimate of the truncation.
    pub tail_estimate: f64,
}

/// `f_ν(0) = -ν/2 - 1/4`.
pub fn f_zero(nu: f64) -> f64 {
    -0.5 * nu - 0.25
}

/// `f'_ν(0)`, with `S_ν` summed over [`EXPLICIT_ZEROS`] zeros plus the McMahon
/// tail. The number of explicit zeros is doubled until the tail estimate is
/// below `tol.zeta_tail`.
pub fn f_prime_zero(nu: f64) -> Result<ZetaValues> {
    f_prime_zero_with(nu, &Tolerances::default())
}

pub fn f_prime_zero_with(nu: f64, tol: &Tolerances) -> Result<ZetaValues> {
    let mut count = EXPLICIT_ZEROS;
    loop {
        let table = BesselZeroTable::new(nu, count)?;
        let v = f_prime_zero_from_table(&table);
        if v.tail_estimate <= tol.zeta_tail {
            return Ok(v);
        }
        if count >= MAX_EXPLICIT_ZEROS {
            return Err(Error::no_conv(
                "f'_nu(0) series",
                format!(
                    "tail estimate {:e} above {:e} with {count} zeros (nu = {nu})",
                    v.tail_estimate, tol.zeta_tail
                ),
            ));
        }
        count *= 2;
    }
}

/// `f'_ν(0)` using every zero in `table` explicitly, without tolerance checks.
pub fn f_prime_zero_from_table(table: &BesselZeroTable) -> ZetaValues {
    let nu = table.order();
    let c = 0.25 * (2.0 * nu - 1.0);
    let head: f64 = table
        .zeros()
        .iter()
        .enumerate()
        .map(|(i, &z)| {
            let l = (i + 1) as f64;
            (z / (l * PI)).ln() - c / l
        })
        .sum();
    let (tail, tail_estimate) = mcmahon_log_tail(nu, table.len());
    let s_nu = head + tail;
    ZetaValues {
        order: nu,
        f0: f_zero(nu),
        fprime0: -0.5 * LN_2 + c * (PI.ln() - EULER_GAMMA) - s_nu,
        terms_used: table.len(),
        tail_estimate,
    }
}

/// `S_ν` alone (the series subtracted in `f'_ν(0)`).
pub fn s_series(nu: f64) -> Result<f64> {
    let v = f_prime_zero(nu)?;
    let c = 0.25 * (2.0 * nu - 1.0);
    Ok(-0.5 * LN_2 + c * (PI.ln() - EULER_GAMMA) - v.fprime0)
}

// Truncated power series in u = 1/l.
const ORD: usize = 11;
type Series = [f64; ORD];

fn mul(a: &Series, b: &Series) -> Series {
    let mut out = [0.0; ORD];
    for i in 0..ORD {
        if a[i] == 0.0 {
            continue;
        }
        for j in 0..ORD - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

/// Coefficients of `ln(j_{ν,l}/(lπ)) - c/l` in powers of `1/l`, from
/// McMahon's expansion through `β^{-7}`; exact through `l^{-9}`.
fn mcmahon_log_coefficients(nu: f64) -> Series {
    let c = 0.25 * (2.0 * nu - 1.0);
    let mu = 4.0 * nu * nu;
    let m1 = mu - 1.0;
    let k1 = m1;
    let k3 = 4.0 * m1 * (7.0 * mu - 31.0) / 3.0;
    let k5 = 32.0 * m1 * (83.0 * mu * mu - 982.0 * mu + 3779.0) / 15.0;
    let k7 = 64.0 * m1 * (6949.0 * mu * mu * mu - 153_855.0 * mu * mu + 1_585_743.0 * mu - 6_277_237.0)
        / 105.0;

    // 1/(1 + c u)
    let mut recip = [0.0; ORD];
    let mut p = 1.0;
    for r in recip.iter_mut() {
        *r = p;
        p *= -c;
    }
    // w = 1/(8β) = u / (8π (1 + c u))
    let mut w = [0.0; ORD];
    for i in 1..ORD {
        w[i] = recip[i - 1] / (8.0 * PI);
    }
    let w2 = mul(&w, &w);
    let w3 = mul(&w2, &w);
    let w5 = mul(&w3, &w2);
    let w7 = mul(&w5, &w2);
    let mut corr = [0.0; ORD];
    for i in 0..ORD {
        corr[i] = k1 * w[i] + k3 * w3[i] + k5 * w5[i] + k7 * w7[i];
    }
    // y = j/(lπ) - 1 = c u - (u/π) corr
    let mut y = [0.0; ORD];
    y[1] = c;
    for i in 1..ORD {
        y[i] -= corr[i - 1] / PI;
    }
    // ln(1 + y) - c u
    let mut out = [0.0; ORD];
    let mut pow = y;
    for k in 1..ORD {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        for i in 0..ORD {
            out[i] += sign * pow[i] / k as f64;
        }
        pow = mul(&pow, &y);
    }
    out[1] -= c;
    out
}

/// `Σ_{l>L} [ln(j_{ν,l}/(lπ)) - c/l]` and the size of its last kept term.
fn mcmahon_log_tail(nu: f64, explicit: usize) -> (f64, f64) {
    let coef = mcmahon_log_coefficients(nu);
    let a = explicit as f64 + 1.0;
    let mut total = 0.0;
    let mut last = 0.0;
    for (p, &cp) in coef.iter().enumerate().take(10).skip(2) {
        let term = cp * hurwitz_zeta(p as f64, a).expect("s >= 2, a >= 1");
        total += term;
        last = term.abs();
    }
    (total, last)
}

/// Numerical continuation of `f_ν(s)` for `s > -1`:
///
/// `f_ν(s) = π^{-s} ζ(s, 3/4 + ν/2) + Σ_{l≤L} [j_l^{-s} - b_l^{-s}] + tail`,
/// `b_l = (l + ν/2 - 1/4)π`, with the tail taken from the next McMahon order.
pub fn zeta_continued(s: f64, table: &BesselZeroTable) -> Result<f64> {
    if !(s > -1.0) || s == 1.0 {
        return Err(Error::domain(format!(
            "continued f_nu(s) available for s > -1, s != 1, got {s}"
        )));
    }
    let nu = table.order();
    let a = 0.5 * nu - 0.25;
    let base = PI.powf(-s) * hurwitz_zeta(s, 1.0 + a)?;
    let paired: f64 = table
        .zeros()
        .iter()
        .enumerate()
        .map(|(i, &z)| {
            let b = (i as f64 + 1.0 + a) * PI;
            z.powf(-s) - b.powf(-s)
        })
        .sum();
    let mu = 4.0 * nu * nu;
    let tail = s * (mu - 1.0) / 8.0
        * PI.powf(-s - 2.0)
        * hurwitz_zeta(s + 2.0, table.len() as f64 + 1.0 + a)?;
    Ok(base + paired + tail)
}

/// `f_ν(0)` and `f'_ν(0)` read off [`zeta_continued`] by polynomial
/// extrapolation and Richardson-extrapolated central differences around
/// `s = 0`. Independent of the closed forms above.
pub fn continued_at_zero(table: &BesselZeroTable) -> Result<(f64, f64)> {
    const H: f64 = 0.02;
    let mut pts = Vec::with_capacity(8);
    for i in 1..=4 {
        let s = H * i as f64;
        pts.push((s, zeta_continued(s, table)?));
        pts.push((-s, zeta_continued(-s, table)?));
    }
    let value = neville_at_zero(&pts);
    // central differences D(h) for h = H, 2H, 4H... combined by Richardson
    let d = |i: usize| {
        let plus = pts[2 * (i - 1)].1;
        let minus = pts[2 * (i - 1) + 1].1;
        (plus - minus) / (2.0 * H * i as f64)
    };
    // D(h) = f' + c2 h² + c4 h⁴ + …, sampled at h = H, 2H, 4H via i = 1, 2, 4
    let (d1, d2, d4) = (d(1), d(2), d(4));
    let r1 = (4.0 * d1 - d2) / 3.0;
    let r2 = (4.0 * d2 - d4) / 3.0;
    let deriv = (16.0 * r1 - r2) / 15.0;
    Ok((value, deriv))
}

fn neville_at_zero(pts: &[(f64, f64)]) -> f64 {
    let n = pts.len();
    let mut p: Vec<f64> = pts.iter().map(|q| q.1).collect();
    for m in 1..n {
        for i in 0..n - m {
            let (xi, xj) = (pts[i].0, pts[i + m].0);
            p[i] = (xj * p[i] - xi * p[i + 1]) / (xj - xi);
        }
    }
    p[0]
}

/// `ln[Det(i∂̸ + P_0)_κ / Det(i∂̸)_{κ=0}]
///   = -2[f'_{|k+1|}(0) - f'_0(0) + (ln R - iπ/2)(f_{|k+1|}(0) - f_0(0))]`.
///
/// The phase follows the `(1 + e^{-iπs})` continuation, so the imaginary part
/// is `-|k+1|π/2`.
pub fn free_quotient(k: i64, radius: f64) -> Result<Complex64> {
    free_quotient_with(k, radius, &Tolerances::default())
}

pub fn free_quotient_with(k: i64, radius: f64, tol: &Tolerances) -> Result<Complex64> {
    require_supported(k)?;
    check_radius(radius)?;
    let m = (k + 1).unsigned_abs() as f64;
    if m == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let fm = f_prime_zero_with(m, tol)?;
    let f0 = f_prime_zero_with(0.0, tol)?;
    Ok(free_quotient_from(&fm, &f0, radius))
}

/// The free quotient assembled from precomputed zeta data for `ν = |k+1|`
/// and `ν = 0`.
pub fn free_quotient_from(fm: &ZetaValues, f0: &ZetaValues, radius: f64) -> Complex64 {
    let log_r = Complex64::new(radius.ln(), -0.5 * PI);
    -2.0 * (Complex64::from(fm.fprime0 - f0.fprime0) + log_r * (fm.f0 - f0.f0))
}

fn check_radius(radius: f64) -> Result<()> {
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::domain(format!("radius must be positive, got {radius}")));
    }
    Ok(())
}

/// Partial sums `Σ_{l≤L} ln[(j_{m,l}/j_{0,l}) e^{-m/(2l)}]`.
fn ratio_partial_sums(m: f64, cutoffs: &[usize]) -> Result<Vec<f64>> {
    let max = *cutoffs.iter().max().expect("non-empty cutoffs");
    let jm = BesselZeroTable::new(m, max)?;
    let j0 = BesselZeroTable::new(0.0, max)?;
    let mut out = Vec::with_capacity(cutoffs.len());
    let mut acc = 0.0;
    let mut done = 0;
    let mut sorted: Vec<usize> = cutoffs.to_vec();
    sorted.sort_unstable();
    for &cut in &sorted {
        for l in done + 1..=cut {
            let (a, b) = (jm.zeros()[l - 1], j0.zeros()[l - 1]);
            acc += (a / b).ln() - m / (2.0 * l as f64);
        }
        done = cut;
        out.push(acc);
    }
    Ok(out)
}

/// `Σ_l ln[(j_{m,l}/j_{0,l}) e^{-m/(2l)}]` by Richardson extrapolation in
/// `1/L` of plain partial sums at `L = 1000, 2000, 4000, 8000`.
pub fn bessel_ratio_series(m: u64) -> Result<f64> {
    if m == 0 {
        return Ok(0.0);
    }
    let cuts = [1000, 2000, 4000, 8000];
    let mut t = ratio_partial_sums(m as f64, &cuts)?;
    // T_L = T + A/L + B/L² + C/L³ + …, halving h = 1/L each level
    for level in 1..t.len() {
        let f = (1u64 << level) as f64;
        for i in 0..t.len() - level {
            t[i] = (f * t[i + 1] - t[i]) / (f - 1.0);
        }
    }
    Ok(t[0])
}

/// The free quotient written directly through Bessel-zero ratios:
/// `-|k+1|[iπ/2 - γ - ln(R/π)] + 2 Σ_l ln[(j_{|k+1|,l}/j_{0,l}) e^{-|k+1|/(2l)}]`.
pub fn free_quotient_ratio_route(k: i64, radius: f64) -> Result<Complex64> {
    require_supported(k)?;
    check_radius(radius)?;
    let m = (k + 1).unsigned_abs();
    let mf = m as f64;
    let series = bessel_ratio_series(m)?;
    let re = mf * (EULER_GAMMA + (radius / PI).ln()) + 2.0 * series;
    Ok(Complex64::new(re, -0.5 * PI * mf))
}

/// Eigenvalue `a_n = (n - κ)/R` of the boundary operator `𝒜(R)` on `e^{inθ}`.
pub fn boundary_eigenvalue(n: i64, kappa: f64, radius: f64) -> f64 {
    (n as f64 - kappa) / radius
}

/// η-invariant of the boundary operator and the index it implies.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EtaData {
    pub kappa: f64,
    pub k: i64,
    /// `dim Ker 𝒜`: 1 when `κ` is an integer.
    pub h: i64,
    pub eta0: f64,
    pub index: i64,
}

/// `η(0) = 2(κ - k) - 1 - h` and the index `κ + (1 - h - η(0))/2`, which must
/// equal `k + 1`.
pub fn eta_zero(kappa: f64) -> Result<EtaData> {
    if !kappa.is_finite() {
        return Err(Error::domain("flux must be finite"));
    }
    let k = level_k(kappa);
    let h = i64::from(kappa.fract() == 0.0);
    let eta0 = 2.0 * (kappa - k as f64) - 1.0 - h as f64;
    let aps = kappa + 0.5 * (1.0 - h as f64 - eta0);
    let index = aps.round() as i64;
    if (aps - index as f64).abs() > 1e-9 || index != k + 1 {
        return Err(Error::Inconsistent {
            check: "APS index",
            detail: format!("κ + (1 - h - η)/2 = {aps}, zero-mode count k + 1 = {}", k + 1),
        });
    }
    Ok(EtaData {
        kappa,
        k,
        h,
        eta0,
        index,
    })
}

/// Smallest positive value of `n - κ` and smallest magnitude of a negative one.
fn eta_offsets(kappa: f64) -> (f64, f64) {
    let pos = (kappa.floor() + 1.0) - kappa;
    let neg = kappa - (kappa.ceil() - 1.0);
    (pos, neg)
}

/// `η(s)/R^s = Σ_{n≠κ} sign(n-κ)|n-κ|^{-s}`, with the positive and negative
/// branches paired term by term up to `cutoff` and the remainder closed by
/// Euler–Maclaurin (analytic in `s`, valid near `s = 0`).
pub fn eta_series(kappa: f64, s: f64, cutoff: usize) -> Result<f64> {
    let (p0, q0) = eta_offsets(kappa);
    let paired: f64 = (0..cutoff)
        .map(|i| {
            let i = i as f64;
            (p0 + i).powf(-s) - (q0 + i).powf(-s)
        })
        .sum();
    let n = cutoff as f64;
    let tail = hurwitz_zeta(s, p0 + n)? - hurwitz_zeta(s, q0 + n)?;
    Ok(paired + tail)
}

/// `η(0)` from the paired series evaluated on a ladder `s = 0.1·2^{-j}` and
/// extrapolated polynomially to `s = 0`. Fails if the result disagrees with
/// the closed form by more than `1e-6`.
pub fn eta_zero_numeric(kappa: f64, cutoff: usize) -> Result<f64> {
    if cutoff < 1000 {
        return Err(Error::domain(format!("eta cutoff must be >= 1000, got {cutoff}")));
    }
    let pts: Vec<(f64, f64)> = (0..6)
        .map(|j| {
            let s = 0.1 / f64::from(1u32 << j);
            eta_series(kappa, s, cutoff).map(|v| (s, v))
        })
        .collect::<Result<_>>()?;
    let value = neville_at_zero(&pts);
    let closed = eta_zero(kappa)?.eta0;
    if (value - closed).abs() > 1e-6 {
        return Err(Error::Inconsistent {
            check: "eta(0) continuation",
            detail: format!("numeric {value} vs closed form {closed} (κ = {kappa})"),
        });
    }
    Ok(value)
}
