//! Independent validators for the spectral machinery.
//!
//! - A finite-difference discretisation of the free radial Dirac system per
//!   angular mode, compared with the exact Bessel-zero spectrum.
//! - A finite-difference check that the off-diagonal Green kernel is
//!   annihilated by `D_α` away from the diagonal, plus the Fourier content of
//!   the kernel on the boundary circle.
//! - Plain partial sums of `Σ_l j_{ν,l}^{-s}` for `s > 1`.
//!
//! None of these share code paths with the closed forms they validate beyond
//! the Bessel-zero table itself.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flux::{require_supported, FluxData, FluxProfile};
use crate::fourier::circle_coefficients;
use crate::specfun::{bessel_zero, hurwitz_zeta, BesselZeroTable};

/// Which spinor component the spectral boundary condition forces to vanish at
/// `r = R` for angular mode `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BcType {
    /// `n ≥ k + 1`: the upper component vanishes, `λ = ±j_{n,l}/R`.
    UpperDirichlet,
    /// `n ≤ k`: the lower component vanishes, `λ = ±j_{n+1,l}/R`.
    LowerDirichlet,
}

pub fn bc_type(n: i64, k: i64) -> BcType {
    if n >= k + 1 {
        BcType::UpperDirichlet
    } else {
        BcType::LowerDirichlet
    }
}

/// Order of the Bessel function whose zeros give the spectrum of mode `n`.
fn spectral_order(n: i64, k: i64) -> u64 {
    match bc_type(n, k) {
        BcType::UpperDirichlet => n.unsigned_abs(),
        BcType::LowerDirichlet => (n + 1).unsigned_abs(),
    }
}

/// The first `count` positive eigenvalues of the free operator in angular
/// mode `n`; the negative ones are their mirror images.
///
/// Modes `n = k` and `n = k + 1` share the same list `j_{k+1,l}/R`, which is
/// why every eigenvalue of that order appears twice.
pub fn free_spectrum_exact(n: i64, k: i64, radius: f64, count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::domain("count must be >= 1"));
    }
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(Error::domain(format!("radius must be positive, got {radius}")));
    }
    let nu = spectral_order(n, k) as f64;
    let table = BesselZeroTable::new(nu, count)?;
    Ok(table.zeros().iter().map(|z| z / radius).collect())
}

/// Finite-difference spectrum of one angular mode against the exact one.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumReport {
    pub n: i64,
    pub k: i64,
    pub bc_type: BcType,
    pub radius: f64,
    pub grid_size: usize,
    /// The computed eigenvalues closest to zero on both sides, sorted.
    pub eigenvalues: Vec<f64>,
    /// Exact positive eigenvalues `j_{·,l}/R`.
    pub reference: Vec<f64>,
    /// `|λ_l^fd - λ_l|/λ_l` for the positive eigenvalues.
    pub rel_errors: Vec<f64>,
    pub max_rel_error: f64,
    /// Largest `|λ_l^+ + λ_l^-|` over the computed pairs.
    pub symmetry_defect: f64,
}

impl SpectrumReport {
    /// Positive computed eigenvalues in increasing order.
    pub fn positive(&self) -> Vec<f64> {
        self.eigenvalues.iter().copied().filter(|&x| x > 0.0).collect()
    }

    /// Fails with a non-convergence error if the grid was too coarse for `tol`.
    pub fn require(&self, tol: f64) -> Result<()> {
        if self.max_rel_error > tol {
            return Err(Error::no_conv(
                "finite-difference spectrum",
                format!(
                    "mode n = {}, k = {}: max relative error {:e} above {tol:e} at grid {}",
                    self.n, self.k, self.max_rel_error, self.grid_size
                ),
            ));
        }
        Ok(())
    }
}

/// Default number of eigenvalues compared by [`free_spectrum_fd`].
pub const FD_EIGENVALUES: usize = 5;

/// [`free_spectrum_fd_with`] for the first [`FD_EIGENVALUES`] eigenvalues.
pub fn free_spectrum_fd(n: i64, k: i64, radius: f64, grid: usize) -> Result<SpectrumReport> {
    free_spectrum_fd_with(n, k, radius, grid, FD_EIGENVALUES)
}

/// Spectrum of the free radial system for angular mode `n` on `grid` cells.
///
/// The mode equations `λu = (∂ + (n+1)/r) w` and `λw = (-∂ + n/r) u` are
/// discretised on a staggered grid. The component that vanishes at `R` lives
/// on the nodes `r_i = ih` and the other one on the midpoints. Regularity at
/// the origin follows the Bessel behaviour `u ~ r^{|n|}`, `w ~ r^{|n+1|}`:
/// the node value at `r = 0` is an unknown only when the node component has
/// order zero there, and is zero otherwise.
///
/// The first-order map `M` from node values to midpoint values is bidiagonal.
/// Weighting both grids with the `r dr` measure makes the discrete adjoint a
/// consistent discretisation of the other half of the system, so the
/// eigenvalues are `±σ(W_mid^{1/2} M W_node^{-1/2})`. They are found by Sturm
/// bisection on the interleaved zero-diagonal tridiagonal matrix.
pub fn free_spectrum_fd_with(n: i64, k: i64, radius: f64, grid: usize, count: usize) -> Result<SpectrumReport> {
    if grid < 200 {
        return Err(Error::domain(format!("grid must be >= 200, got {grid}")));
    }
    if count == 0 || count >= grid {
        return Err(Error::domain(format!("count must lie in 1..{grid}, got {count}")));
    }
    let reference = free_spectrum_exact(n, k, radius, count)?;
    let bc = bc_type(n, k);
    let e2 = interleaved_offdiag_squares(n, bc, radius, grid);

    let bound = gershgorin(&e2);
    let pivmin = pivot_floor(&e2);
    // a genuine zero mode (lower component fixed, 0 ≤ n ≤ k) and the
    // structural zero of a rectangular M both sit below this cut
    let cut = 1e-8 * bound;
    let below_pos = sturm_count(&e2, cut, pivmin);
    let below_neg = sturm_count(&e2, -cut, pivmin);
    if below_neg < count || below_pos + count > e2.len() + 1 {
        return Err(Error::no_conv(
            "finite-difference spectrum",
            format!("fewer than {count} eigenvalues of each sign at grid {grid}"),
        ));
    }
    let mut positive = Vec::with_capacity(count);
    let mut negative = Vec::with_capacity(count);
    for m in 1..=count {
        positive.push(kth_eigenvalue(&e2, below_pos + m - 1, -bound, bound)?);
        negative.push(kth_eigenvalue(&e2, below_neg - m, -bound, bound)?);
    }
    let rel_errors: Vec<f64> = positive
        .iter()
        .zip(&reference)
        .map(|(fd, ex)| (fd - ex).abs() / ex)
        .collect();
    let max_rel_error = rel_errors.iter().cloned().fold(0.0, f64::max);
    let symmetry_defect = positive
        .iter()
        .zip(&negative)
        .map(|(p, q)| (p + q).abs())
        .fold(0.0, f64::max);
    let mut eigenvalues: Vec<f64> = negative.iter().chain(positive.iter()).copied().collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(SpectrumReport {
        n,
        k,
        bc_type: bc,
        radius,
        grid_size: grid,
        eigenvalues,
        reference,
        rel_errors,
        max_rel_error,
        symmetry_defect,
    })
}

/// Squared off-diagonal entries of the symmetric tridiagonal matrix that
/// interleaves node and midpoint unknowns in order of increasing radius.
fn interleaved_offdiag_squares(n: i64, bc: BcType, radius: f64, grid: usize) -> Vec<f64> {
    let h = radius / grid as f64;
    // node component, its coefficient in the first-order operator, and the
    // sign of the derivative
    let (s, coef, node_order) = match bc {
        BcType::UpperDirichlet => (-1.0, n as f64, n.unsigned_abs()),
        BcType::LowerDirichlet => (1.0, (n + 1) as f64, (n + 1).unsigned_abs()),
    };
    let first_node = usize::from(node_order != 0);
    // r dr weights; the origin node carries the weight of [0, h/2]
    let node_weight = |i: usize| if i == 0 { h / 8.0 } else { i as f64 * h };
    let entry = |j: usize, i: usize| {
        let mid = (j as f64 - 0.5) * h;
        let raw = if i == j { s / h } else { -s / h } + coef / (2.0 * mid);
        raw * (mid / node_weight(i)).sqrt()
    };
    let mut e2 = Vec::with_capacity(2 * grid);
    for j in 1..=grid {
        if j - 1 >= first_node {
            let v = entry(j, j - 1);
            e2.push(v * v);
        }
        if j < grid {
            let v = entry(j, j);
            e2.push(v * v);
        }
    }
    e2
}

fn gershgorin(e2: &[f64]) -> f64 {
    let e: Vec<f64> = e2.iter().map(|x| x.sqrt()).collect();
    let mut best = 0.0_f64;
    for i in 0..=e.len() {
        let left = if i > 0 { e[i - 1] } else { 0.0 };
        let right = e.get(i).copied().unwrap_or(0.0);
        best = best.max(left + right);
    }
    best * (1.0 + 1e-12) + f64::MIN_POSITIVE
}

fn pivot_floor(e2: &[f64]) -> f64 {
    f64::MIN_POSITIVE * e2.iter().cloned().fold(1.0, f64::max)
}

/// Number of eigenvalues below `x` of the zero-diagonal tridiagonal matrix
/// whose squared off-diagonals are `e2`.
fn sturm_count(e2: &[f64], x: f64, pivmin: f64) -> usize {
    let mut d = -x;
    if d.abs() < pivmin {
        d = -pivmin;
    }
    let mut count = usize::from(d < 0.0);
    for &e in e2 {
        d = -x - e / d;
        if d.abs() < pivmin {
            d = -pivmin;
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `index`-th smallest eigenvalue (0-based), by bisection.
fn kth_eigenvalue(e2: &[f64], index: usize, mut lo: f64, mut hi: f64) -> Result<f64> {
    let pivmin = pivot_floor(e2);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= 2.0 * f64::EPSILON * lo.abs().max(hi.abs()) {
            return Ok(mid);
        }
        if sturm_count(e2, mid, pivmin) > index {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Err(Error::no_conv(
        "Sturm bisection",
        format!("eigenvalue {index} not isolated in [{lo}, {hi}]"),
    ))
}

/// FD runs for the two modes that share the spectrum `j_{k+1,l}/R`:
/// `n = k + 1` with the upper component fixed and `n = k` with the lower one.
pub fn doubling_pair(k: i64, radius: f64, grid: usize) -> Result<(SpectrumReport, SpectrumReport)> {
    Ok((
        free_spectrum_fd(k + 1, k, radius, grid)?,
        free_spectrum_fd(k, k, radius, grid)?,
    ))
}

/// Observed order of accuracy from grids `grid` and `2·grid`, together with
/// the error ratio it is based on.
pub fn fd_convergence(n: i64, k: i64, radius: f64, grid: usize) -> Result<(f64, f64)> {
    let coarse = free_spectrum_fd(n, k, radius, grid)?.max_rel_error;
    let fine = free_spectrum_fd(n, k, radius, 2 * grid)?.max_rel_error;
    let ratio = coarse / fine;
    Ok((ratio, ratio.log2()))
}

/// Points closer than this are rejected by the Green-kernel check.
pub const MIN_SEPARATION: f64 = 1e-3;
/// Finite-difference step of the Green-kernel check.
pub const GREEN_STEP: f64 = 1e-5;

struct Kernel<'a> {
    p: &'a FluxProfile,
    alpha: f64,
    k: i64,
}

impl Kernel<'_> {
    fn phi(&self, z: Complex64) -> f64 {
        self.p.phi(z.norm())
    }

    /// `e^{α[φ(x)-φ(y)]}(X/Y)^{k+1}/(2πi(X-Y))`.
    fn upper(&self, x: Complex64, y: Complex64) -> Complex64 {
        let e = (self.alpha * (self.phi(x) - self.phi(y))).exp();
        e * (x / y).powi((self.k + 1) as i32) / (Complex64::i() * 2.0 * PI * (x - y))
    }

    /// `e^{-α[φ(x)-φ(y)]}(Y*/X*)^{k+1}/(2πi(X*-Y*))`.
    fn lower(&self, x: Complex64, y: Complex64) -> Complex64 {
        let e = (-self.alpha * (self.phi(x) - self.phi(y))).exp();
        e * (y.conj() / x.conj()).powi((self.k + 1) as i32) / (Complex64::i() * 2.0 * PI * (x.conj() - y.conj()))
    }

    /// `φ'(r)/(2r)`, so that `∂_X φ = X* · half_slope` and `∂_{X*} φ = X · half_slope`.
    fn half_slope(&self, x: Complex64) -> f64 {
        let r = x.norm();
        0.5 * self.p.phi_prime(r) / r
    }
}

/// `(∂_{X*}, ∂_X)` of `f` at `x` by fourth-order central differences with
/// step `h`. The kernel carries `X^{-(k+1)}`, so second-order differences
/// lose accuracy near the origin for larger `k`.
fn wirtinger<F: Fn(Complex64) -> Complex64>(f: F, x: Complex64, h: f64) -> (Complex64, Complex64) {
    let central = |dir: Complex64| {
        let at = |m: f64| f(x + dir * (m * h));
        (at(-2.0) - at(-1.0) * 8.0 + at(1.0) * 8.0 - at(2.0)) / (12.0 * h)
    };
    let dx = central(Complex64::new(1.0, 0.0));
    let dy = central(Complex64::i());
    let d_bar = 0.5 * (dx + Complex64::i() * dy);
    let d = 0.5 * (dx - Complex64::i() * dy);
    (d_bar, d)
}

/// Relative residual of `D_α` acting in `x` on the off-diagonal Green kernel
/// at one pair of points, `max` over the two entries of
/// `|D_α 𝒢| · |X-Y| / |𝒢|`.
pub fn green_residual_at(p: &FluxProfile, alpha: f64, x: Complex64, y: Complex64) -> Result<f64> {
    let data = FluxData::from_profile(p);
    require_supported(data.k)?;
    let radius = p.radius();
    if x.norm() >= radius || y.norm() >= radius || x.norm() == 0.0 || y.norm() == 0.0 {
        return Err(Error::domain("Green check points must lie strictly inside the punctured disk"));
    }
    let sep = (x - y).norm();
    if sep < MIN_SEPARATION {
        return Err(Error::domain(format!(
            "points closer than {MIN_SEPARATION} to the diagonal: |X-Y| = {sep:e}"
        )));
    }
    let ker = Kernel { p, alpha, k: data.k };
    let slope = ker.half_slope(x);

    // lower-left row of D_α: 2i(∂_{X*} - α ∂_{X*}φ) acting on the upper-right entry
    let g12 = ker.upper(x, y);
    let (d_bar, _) = wirtinger(|z| ker.upper(z, y), x, GREEN_STEP);
    let r12 = (Complex64::i() * 2.0 * (d_bar - alpha * x * slope * g12)).norm() * sep / g12.norm();

    // upper-right row: 2i(∂_X + α ∂_Xφ) acting on the lower-left entry
    let g21 = ker.lower(x, y);
    let (_, d) = wirtinger(|z| ker.lower(z, y), x, GREEN_STEP);
    let r21 = (Complex64::i() * 2.0 * (d + alpha * x.conj() * slope * g21)).norm() * sep / g21.norm();

    Ok(r12.max(r21))
}

/// Fractional part of `i·φ` for the golden-ratio low-discrepancy sequence.
fn golden(i: usize, shift: f64) -> f64 {
    let g = 0.618_033_988_749_894_9;
    (shift + g * i as f64).fract()
}

/// Deterministic sample of `count` point pairs inside `0.9R`, each pair at
/// least `0.05R` apart.
pub fn green_sample_pairs(radius: f64, count: usize) -> Vec<(Complex64, Complex64)> {
    let mut out = Vec::with_capacity(count);
    let mut i = 0;
    while out.len() < count {
        i += 1;
        let point = |a: f64, b: f64| {
            // area-uniform radius, kept away from the origin and the boundary
            let r = radius * (0.05 + 0.85 * a.sqrt());
            Complex64::from_polar(r, 2.0 * PI * b)
        };
        let x = point(golden(i, 0.11), golden(2 * i, 0.37));
        let y = point(golden(3 * i + 1, 0.53), golden(5 * i + 2, 0.29));
        if (x - y).norm() >= 0.05 * radius {
            out.push((x, y));
        }
    }
    out
}

/// Largest relative residual of `D_α 𝒢_α` over `sample_pairs` deterministic
/// point pairs.
pub fn green_holomorphy_check(p: &FluxProfile, alpha: f64, sample_pairs: usize) -> Result<f64> {
    if sample_pairs == 0 {
        return Err(Error::domain("need at least one sample pair"));
    }
    let mut worst = 0.0_f64;
    for (x, y) in green_sample_pairs(p.radius(), sample_pairs) {
        worst = worst.max(green_residual_at(p, alpha, x, y)?);
    }
    Ok(worst)
}

/// Fourier content in `θ_x` of the Green kernel with `x` on the boundary
/// circle and `y` fixed inside.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryModes {
    pub k: i64,
    /// Largest mode of the upper-right entry above the noise floor.
    pub upper_max_mode: i64,
    /// Smallest mode of the lower-left entry above the noise floor.
    pub lower_min_mode: i64,
    /// Largest coefficient of the upper entry with mode `≥ k + 1`, relative
    /// to its largest coefficient.
    pub upper_leak: f64,
    /// Largest coefficient of the lower entry with mode `≤ k + 1`, relative.
    pub lower_leak: f64,
}

/// The upper-right kernel entry must contain only modes `≤ k` on the circle,
/// so that `P_≥` annihilates it; the lower-left entry only modes `≥ k + 2`,
/// so that `P_≤` annihilates it.
pub fn green_boundary_modes(p: &FluxProfile, alpha: f64, y: Complex64, samples: usize) -> Result<BoundaryModes> {
    let data = FluxData::from_profile(p);
    require_supported(data.k)?;
    let radius = p.radius();
    if y.norm() >= radius || y.norm() == 0.0 {
        return Err(Error::domain("source point must lie strictly inside the punctured disk"));
    }
    if samples < 16 {
        return Err(Error::domain("need at least 16 boundary samples"));
    }
    let ker = Kernel { p, alpha, k: data.k };
    let on_circle = |j: usize| Complex64::from_polar(radius, 2.0 * PI * j as f64 / samples as f64);
    let upper: Vec<Complex64> = (0..samples).map(|j| ker.upper(on_circle(j), y)).collect();
    let lower: Vec<Complex64> = (0..samples).map(|j| ker.lower(on_circle(j), y)).collect();
    let cu = circle_coefficients(&upper);
    let cl = circle_coefficients(&lower);
    let floor = 1e-12;
    let k = data.k;

    let top_u = cu.iter().map(|(_, c)| c.norm()).fold(0.0, f64::max);
    let top_l = cl.iter().map(|(_, c)| c.norm()).fold(0.0, f64::max);
    let upper_max_mode = cu
        .iter()
        .filter(|(_, c)| c.norm() > floor * top_u)
        .map(|(m, _)| *m)
        .max()
        .unwrap_or(i64::MIN);
    let lower_min_mode = cl
        .iter()
        .filter(|(_, c)| c.norm() > floor * top_l)
        .map(|(m, _)| *m)
        .min()
        .unwrap_or(i64::MAX);
    let upper_leak = cu
        .iter()
        .filter(|(m, _)| *m >= k + 1)
        .map(|(_, c)| c.norm() / top_u)
        .fold(0.0, f64::max);
    let lower_leak = cl
        .iter()
        .filter(|(m, _)| *m <= k + 1)
        .map(|(_, c)| c.norm() / top_l)
        .fold(0.0, f64::max);
    Ok(BoundaryModes {
        k,
        upper_max_mode,
        lower_min_mode,
        upper_leak,
        lower_leak,
    })
}

/// `Σ_{l≤L} j_{ν,l}^{-s}` plus the integral estimate of the remainder,
/// `π^{-s}(L + ½ + a)^{1-s}/(s-1)` with `a = ν/2 - 1/4`.
pub fn zeta_partial_sum(nu: f64, s: f64, terms: usize) -> Result<f64> {
    if !(s > 1.0) {
        return Err(Error::domain(format!("partial sums need s > 1, got {s}")));
    }
    if terms < 10 {
        return Err(Error::domain(format!("need at least 10 terms, got {terms}")));
    }
    let table = BesselZeroTable::new(nu, terms)?;
    Ok(zeta_partial_sum_from_table(&table, s))
}

/// [`zeta_partial_sum`] over an existing zero table.
pub fn zeta_partial_sum_from_table(table: &BesselZeroTable, s: f64) -> f64 {
    let head: f64 = table.zeros().iter().rev().map(|z| z.powf(-s)).sum();
    head + zeta_tail(table.order(), s, table.len())
}

/// Integral estimate of `Σ_{l>L} j_{ν,l}^{-s}` from the leading McMahon term.
pub fn zeta_tail(nu: f64, s: f64, terms: usize) -> f64 {
    let a = 0.5 * nu - 0.25;
    PI.powf(-s) * (terms as f64 + 0.5 + a).powf(1.0 - s) / (s - 1.0)
}

/// The same sum through Hurwitz zeta of the McMahon leading terms plus the
/// explicit differences, used to cross-check the partial sums at integer `s`.
pub fn zeta_mcmahon_sum(nu: f64, s: f64, terms: usize) -> Result<f64> {
    let table = BesselZeroTable::new(nu, terms)?;
    let a = 0.5 * nu - 0.25;
    let diff: f64 = table
        .zeros()
        .iter()
        .enumerate()
        .map(|(i, z)| z.powf(-s) - ((i as f64 + 1.0 + a) * PI).powf(-s))
        .sum();
    Ok(PI.powf(-s) * hurwitz_zeta(s, 1.0 + a)? + diff)
}

/// `j_{|n|,l}`, exposing the symmetry `j_{-n,l} = j_{n,l}` for integer order.
pub fn integer_order_zero(n: i64, l: usize) -> Result<f64> {
    bessel_zero(n.unsigned_abs() as f64, l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_spectrum_examples() {
        let s = free_spectrum_exact(0, -1, 1.0, 3).unwrap();
        assert!((s[0] - 2.404825557695773).abs() < 1e-14);
        // n = k and n = k + 1 share j_{k+1}
        assert_eq!(free_spectrum_exact(1, 1, 1.0, 4).unwrap(), free_spectrum_exact(2, 1, 1.0, 4).unwrap());
        let half = free_spectrum_exact(0, -1, 2.0, 3).unwrap();
        for (a, b) in s.iter().zip(&half) {
            assert!((a / 2.0 - b).abs() < 1e-15);
        }
        assert_eq!(integer_order_zero(-3, 2).unwrap(), integer_order_zero(3, 2).unwrap());
        assert!(free_spectrum_exact(0, 0, 1.0, 0).is_err());
    }

    #[test]
    fn bc_type_depends_only_on_n_minus_k() {
        assert_eq!(bc_type(0, -1), BcType::UpperDirichlet);
        assert_eq!(bc_type(0, 0), BcType::LowerDirichlet);
        assert_eq!(bc_type(5, 3), bc_type(2, 0));
    }

    #[test]
    fn fd_spectrum_small_grid() {
        let rep = free_spectrum_fd(0, -1, 1.0, 400).unwrap();
        assert!(rep.max_rel_error < 1e-2, "{rep:?}");
        assert!(rep.symmetry_defect < 1e-10 * rep.eigenvalues.last().unwrap());
        assert_eq!(rep.eigenvalues.len(), 2 * FD_EIGENVALUES);
        assert!(free_spectrum_fd(0, -1, 1.0, 100).is_err());
    }

    #[test]
    fn sturm_count_on_known_matrix() {
        // [[0,1],[1,0]] has eigenvalues ±1
        let e2 = [1.0];
        assert_eq!(sturm_count(&e2, 0.0, 1e-300), 1);
        assert_eq!(sturm_count(&e2, 1.5, 1e-300), 2);
        assert!((kth_eigenvalue(&e2, 1, -2.0, 2.0).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn cauchy_kernel_is_holomorphic() {
        let p = FluxProfile::zero(1.0).unwrap();
        assert!(green_holomorphy_check(&p, 0.0, 50).unwrap() < 1e-6);
    }

    #[test]
    fn close_pairs_rejected() {
        let p = FluxProfile::zero(1.0).unwrap();
        let x = Complex64::new(0.3, 0.1);
        assert!(green_residual_at(&p, 0.0, x, x + 1e-4).is_err());
    }

    #[test]
    fn partial_sums_for_half_order() {
        // j_{1/2,l} = lπ, so the sum is ζ(2)/π² = 1/6
        let v = zeta_partial_sum(0.5, 2.0, 2000).unwrap();
        assert!((v - 1.0 / 6.0).abs() < 1e-9, "{v}");
        assert!(zeta_partial_sum(0.5, 1.0, 100).is_err());
        assert!(zeta_partial_sum(0.5, 2.0, 5).is_err());
    }
}
