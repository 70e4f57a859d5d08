//! Axially symmetric gauge background.
//!
//! The field is given in Lorentz gauge through a potential `φ(r)`:
//! `A_r = 0`, `A_θ = -φ'(r)`. Everything that depends on the background
//! lives here: the flux `κ = -R φ'(R)`, the level `k` (`k < κ ≤ k + 1`), the
//! zero-mode normalisations `q_n(u; α)`, the Schwinger bulk term and the
//! determinant quotient produced by switching the field on at fixed boundary
//! condition.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fourier::circle_coefficients;
use crate::specfun::integrate;
use crate::Tolerances;

/// How the potential is represented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileKind {
    /// `φ(r) = Σ_i c_i r^{2i}`.
    PolynomialInRSquared,
    /// Cubic spline through `(r, φ)` nodes.
    Tabulated,
}

#[derive(Debug, Clone, PartialEq)]
enum Repr {
    Poly(Vec<f64>),
    Spline(CubicSpline),
}

/// Smooth bounded potential `φ` on `[0, R]` with `φ'(0) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct FluxProfile {
    radius: f64,
    repr: Repr,
}

fn check_radius(radius: f64) -> Result<()> {
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::Invalid(format!("radius must be positive and finite, got {radius}")));
    }
    Ok(())
}

impl FluxProfile {
    /// `φ(r) = Σ_i coeffs[i] · r^{2i}`. An empty list means `φ ≡ 0`.
    pub fn polynomial(radius: f64, coeffs: &[f64]) -> Result<Self> {
        check_radius(radius)?;
        if let Some(c) = coeffs.iter().find(|c| !c.is_finite()) {
            return Err(Error::Invalid(format!("non-finite polynomial coefficient {c}")));
        }
        Ok(FluxProfile {
            radius,
            repr: Repr::Poly(coeffs.to_vec()),
        })
    }

    /// The free case `φ ≡ 0`.
    pub fn zero(radius: f64) -> Result<Self> {
        Self::polynomial(radius, &[])
    }

    /// Cubic spline through `(r, φ)` nodes, clamped to `φ'(0) = 0` at the
    /// origin with parabolic runout (`S''` constant on the last interval) at
    /// `r = R`. Nodes must start at `0`, end at `R` and increase strictly.
    pub fn tabulated(radius: f64, nodes: &[(f64, f64)]) -> Result<Self> {
        check_radius(radius)?;
        if nodes.len() < 2 {
            return Err(Error::Invalid("tabulated profile needs at least 2 nodes".into()));
        }
        if nodes[0].0 != 0.0 {
            return Err(Error::Invalid(format!(
                "tabulated profile must start at r = 0, got {}",
                nodes[0].0
            )));
        }
        let last = nodes[nodes.len() - 1].0;
        if (last - radius).abs() > 1e-12 * radius {
            return Err(Error::Invalid(format!(
                "tabulated profile must end at r = R = {radius}, got {last}"
            )));
        }
        for w in nodes.windows(2) {
            if !(w[1].0 > w[0].0) {
                return Err(Error::Invalid(format!(
                    "tabulated nodes must increase strictly ({} then {})",
                    w[0].0, w[1].0
                )));
            }
        }
        if let Some(p) = nodes.iter().find(|p| !p.1.is_finite()) {
            return Err(Error::Invalid(format!("non-finite potential value at r = {}", p.0)));
        }
        Ok(FluxProfile {
            radius,
            repr: Repr::Spline(CubicSpline::clamped_runout(nodes)),
        })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn kind(&self) -> ProfileKind {
        match self.repr {
            Repr::Poly(_) => ProfileKind::PolynomialInRSquared,
            Repr::Spline(_) => ProfileKind::Tabulated,
        }
    }

    pub fn phi(&self, r: f64) -> f64 {
        match &self.repr {
            Repr::Poly(c) => {
                let r2 = r * r;
                c.iter().rev().fold(0.0, |acc, &ci| acc * r2 + ci)
            }
            Repr::Spline(s) => s.value(r),
        }
    }

    pub fn phi_prime(&self, r: f64) -> f64 {
        match &self.repr {
            Repr::Poly(c) => {
                // d/dr Σ c_i r^{2i} = r Σ_{i≥1} 2i c_i r^{2(i-1)}
                let r2 = r * r;
                let inner = c
                    .iter()
                    .enumerate()
                    .skip(1)
                    .rev()
                    .fold(0.0, |acc, (i, &ci)| acc * r2 + 2.0 * i as f64 * ci);
                r * inner
            }
            Repr::Spline(s) => s.derivative(r),
        }
    }

    /// Angular component of the vector potential, `A_θ(r) = -φ'(r)`.
    pub fn a_theta(&self, r: f64) -> f64 {
        -self.phi_prime(r)
    }

    /// The same field after the gauge shift `φ → φ + c`.
    pub fn shifted(&self, c: f64) -> Self {
        let repr = match &self.repr {
            Repr::Poly(coeffs) => {
                let mut coeffs = coeffs.clone();
                if coeffs.is_empty() {
                    coeffs.push(0.0);
                }
                coeffs[0] += c;
                Repr::Poly(coeffs)
            }
            Repr::Spline(s) => Repr::Spline(s.shifted(c)),
        };
        FluxProfile {
            radius: self.radius,
            repr,
        }
    }
}

/// Flux-derived integers and reals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FluxData {
    pub kappa: f64,
    /// The integer with `k < κ ≤ k + 1`.
    pub k: i64,
    /// `|k + 1|`; positive chirality when `k ≥ -1`.
    pub zero_mode_count: u64,
}

impl FluxData {
    pub fn from_kappa(kappa: f64) -> Self {
        let k = level_k(kappa);
        FluxData {
            kappa,
            k,
            zero_mode_count: (k + 1).unsigned_abs(),
        }
    }

    pub fn from_profile(p: &FluxProfile) -> Self {
        Self::from_kappa(flux_kappa(p))
    }
}

/// `κ = Φ/2π = -R φ'(R)`.
pub fn flux_kappa(p: &FluxProfile) -> f64 {
    -p.radius * p.phi_prime(p.radius)
}

/// The integer `k` with `k < κ ≤ k + 1`, using exact comparison on `κ`.
pub fn level_k(kappa: f64) -> i64 {
    kappa.ceil() as i64 - 1
}

pub(crate) fn require_supported(k: i64) -> Result<()> {
    if k < -1 {
        Err(Error::UnsupportedSector { k })
    } else {
        Ok(())
    }
}

/// `q_n(u; α) = ∫_0^u e^{2αφ(r)} r^{2n+1} dr`.
pub fn q_n(p: &FluxProfile, n: u32, u: f64, alpha: f64) -> Result<f64> {
    q_n_with(p, n, u, alpha, &Tolerances::default())
}

pub fn q_n_with(p: &FluxProfile, n: u32, u: f64, alpha: f64, tol: &Tolerances) -> Result<f64> {
    if !(u > 0.0 && u <= p.radius * (1.0 + 1e-15)) {
        return Err(Error::domain(format!(
            "upper limit u must lie in (0, R = {}], got {u}",
            p.radius
        )));
    }
    let pow = 2 * n as i32 + 1;
    let res = integrate(
        |r| (2.0 * alpha * p.phi(r)).exp() * r.powi(pow),
        0.0,
        u,
        tol.quadrature,
        0.0,
    )?;
    Ok(res.value)
}

/// Normalised positive-chirality zero mode
/// `e^{αφ(r)} (r e^{iθ})^n / √(2π q_n(R; α))` with vanishing lower component.
#[derive(Debug, Clone)]
pub struct ZeroMode<'a> {
    profile: &'a FluxProfile,
    n: u32,
    alpha: f64,
    q: f64,
}

/// The `n`-th zero mode, `0 ≤ n ≤ k`.
pub fn zero_mode(p: &FluxProfile, n: u32, alpha: f64) -> Result<ZeroMode<'_>> {
    let data = FluxData::from_profile(p);
    require_supported(data.k)?;
    if n as i64 > data.k {
        return Err(Error::domain(format!(
            "zero mode index n = {n} outside [0, k = {}]",
            data.k
        )));
    }
    let q = q_n(p, n, p.radius, alpha)?;
    Ok(ZeroMode {
        profile: p,
        n,
        alpha,
        q,
    })
}

impl ZeroMode<'_> {
    pub fn angular_momentum(&self) -> u32 {
        self.n
    }

    /// `q_n(R; α)` used for the normalisation.
    pub fn normalization(&self) -> f64 {
        self.q
    }

    /// Spinor value `(upper, lower)` at polar coordinates `(r, θ)`.
    pub fn eval(&self, r: f64, theta: f64) -> [Complex64; 2] {
        let radial = (self.alpha * self.profile.phi(r)).exp() * r.powi(self.n as i32)
            / (2.0 * PI * self.q).sqrt();
        [
            Complex64::from_polar(radial, self.n as f64 * theta),
            Complex64::new(0.0, 0.0),
        ]
    }

    /// `⟨self, other⟩` over the disk by adaptive radial quadrature and an
    /// angular trapezoid rule (exact for the finite Fourier content here).
    pub fn inner(&self, other: &ZeroMode<'_>, tol: &Tolerances) -> Result<Complex64> {
        const ANGLES: usize = 64;
        let radial = |r: f64, part: fn(Complex64) -> f64| {
            let mut acc = 0.0;
            for j in 0..ANGLES {
                let th = 2.0 * PI * j as f64 / ANGLES as f64;
                let a = self.eval(r, th);
                let b = other.eval(r, th);
                let v = a[0].conj() * b[0] + a[1].conj() * b[1];
                acc += part(v);
            }
            acc * 2.0 * PI / ANGLES as f64 * r
        };
        let re = integrate(|r| radial(r, |z| z.re), 0.0, self.profile.radius, tol.quadrature, 1e-14)?;
        let im = integrate(|r| radial(r, |z| z.im), 0.0, self.profile.radius, tol.quadrature, 1e-14)?;
        Ok(Complex64::new(re.value, im.value))
    }

    /// Largest boundary Fourier coefficient of the upper component over
    /// angular momenta `m ≥ k + 1`, i.e. the part the spectral projector
    /// `P_≥` would see. Zero for a mode satisfying the boundary condition.
    pub fn boundary_leakage(&self, samples: usize) -> f64 {
        let k = FluxData::from_profile(self.profile).k;
        let values: Vec<Complex64> = (0..samples)
            .map(|j| self.eval(self.profile.radius, 2.0 * PI * j as f64 / samples as f64)[0])
            .collect();
        circle_coefficients(&values)
            .into_iter()
            .filter(|(m, _)| *m > k)
            .map(|(_, c)| c.norm())
            .fold(0.0, f64::max)
    }
}

/// Schwinger term `-(1/2π) ∫_{r<R} φ'² d²x = -∫_0^R r φ'(r)² dr`.
pub fn bulk_term(p: &FluxProfile) -> Result<f64> {
    bulk_term_with(p, &Tolerances::default())
}

pub fn bulk_term_with(p: &FluxProfile, tol: &Tolerances) -> Result<f64> {
    let res = integrate(
        |r| {
            let d = p.phi_prime(r);
            r * d * d
        },
        0.0,
        p.radius,
        tol.quadrature,
        1e-300,
    )?;
    Ok(-res.value)
}

/// Pieces of the quotient `ln[Det(D + P_1)_κ / Det(i∂̸ + P_0)_κ]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InteractingParts {
    pub bulk: f64,
    /// `-2(k+1) φ(R) + Σ_{n=0}^{k} ln[2(n+1) q_n(R;1) / R^{2(n+1)}]`.
    pub zero_mode_part: f64,
    pub k: i64,
}

impl InteractingParts {
    pub fn total(&self) -> f64 {
        self.bulk + self.zero_mode_part
    }
}

pub fn interacting_parts(p: &FluxProfile, tol: &Tolerances) -> Result<InteractingParts> {
    let k = FluxData::from_profile(p).k;
    require_supported(k)?;
    let bulk = bulk_term_with(p, tol)?;
    let radius = p.radius;
    let mut zero_mode_part = -2.0 * (k + 1) as f64 * p.phi(radius);
    for n in 0..=k {
        let n = n as u32;
        let q = q_n_with(p, n, radius, 1.0, tol)?;
        let two_n2 = 2.0 * (n as f64 + 1.0);
        zero_mode_part += (two_n2 * q).ln() - two_n2 * radius.ln();
    }
    Ok(InteractingParts {
        bulk,
        zero_mode_part,
        k,
    })
}

/// `ln[Det(D + P_1)_κ / Det(i∂̸ + P_0)_κ]`; only the bulk term survives when
/// there are no zero modes (`k = -1`).
pub fn interacting_quotient(p: &FluxProfile) -> Result<f64> {
    Ok(interacting_parts(p, &Tolerances::default())?.total())
}

// ---------------------------------------------------------------------------

/// Cubic spline with `S'(x_0) = 0` and `S''(x_{n-1}) = S''(x_n)`.
#[derive(Debug, Clone, PartialEq)]
struct CubicSpline {
    x: Vec<f64>,
    y: Vec<f64>,
    /// second derivatives at the nodes
    m: Vec<f64>,
}

impl CubicSpline {
    fn clamped_runout(nodes: &[(f64, f64)]) -> Self {
        let n = nodes.len();
        let x: Vec<f64> = nodes.iter().map(|p| p.0).collect();
        let y: Vec<f64> = nodes.iter().map(|p| p.1).collect();
        let h: Vec<f64> = x.windows(2).map(|w| w[1] - w[0]).collect();

        // tridiagonal system for m[0..n-1]; last row m[n-1] - m[n-2] = 0
        let mut sub = vec![0.0; n];
        let mut diag = vec![0.0; n];
        let mut sup = vec![0.0; n];
        let mut rhs = vec![0.0; n];
        diag[0] = 2.0 * h[0];
        sup[0] = h[0];
        rhs[0] = 6.0 * (y[1] - y[0]) / h[0];
        for i in 1..n - 1 {
            sub[i] = h[i - 1];
            diag[i] = 2.0 * (h[i - 1] + h[i]);
            sup[i] = h[i];
            rhs[i] = 6.0 * ((y[i + 1] - y[i]) / h[i] - (y[i] - y[i - 1]) / h[i - 1]);
        }
        sub[n - 1] = -1.0;
        diag[n - 1] = 1.0;
        rhs[n - 1] = 0.0;

        // Thomas algorithm
        for i in 1..n {
            let w = sub[i] / diag[i - 1];
            diag[i] -= w * sup[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        let mut m = vec![0.0; n];
        m[n - 1] = rhs[n - 1] / diag[n - 1];
        for i in (0..n - 1).rev() {
            m[i] = (rhs[i] - sup[i] * m[i + 1]) / diag[i];
        }
        CubicSpline { x, y, m }
    }

    fn segment(&self, t: f64) -> usize {
        match self.x.partition_point(|&xi| xi <= t) {
            0 => 0,
            i => (i - 1).min(self.x.len() - 2),
        }
    }

    fn value(&self, t: f64) -> f64 {
        let i = self.segment(t);
        let h = self.x[i + 1] - self.x[i];
        let a = (self.x[i + 1] - t) / h;
        let b = (t - self.x[i]) / h;
        a * self.y[i]
            + b * self.y[i + 1]
            + ((a * a * a - a) * self.m[i] + (b * b * b - b) * self.m[i + 1]) * h * h / 6.0
    }

    fn derivative(&self, t: f64) -> f64 {
        let i = self.segment(t);
        let h = self.x[i + 1] - self.x[i];
        let a = (self.x[i + 1] - t) / h;
        let b = (t - self.x[i]) / h;
        (self.y[i + 1] - self.y[i]) / h
            + ((1.0 - 3.0 * a * a) * self.m[i] + (3.0 * b * b - 1.0) * self.m[i + 1]) * h / 6.0
    }

    fn shifted(&self, c: f64) -> Self {
        CubicSpline {
            x: self.x.clone(),
            y: self.y.iter().map(|v| v + c).collect(),
            m: self.m.clone(),
        }
    }
}
