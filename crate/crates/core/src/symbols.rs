//! Principal symbols at the boundary: the Calderón projector symbol
//! `q(x;ξ) = ½(Id + i ξ̸ n̸/|ξ|)`, boundary-condition symbols `b(x;ξ)` and the
//! rank test `rank(b q) = rank(q) = r` that decides ellipticity.
//!
//! Gamma matrices are fixed: in two dimensions `γ₀ = σ₁`, `γ₁ = σ₂`; in four
//! dimensions `γ_j = [[0, σ_j], [σ_j, 0]]` for `j = 1, 2, 3` and
//! `γ₄ = i[[0, I], [-I, 0]]`. With the normal along `e₄` the four-dimensional
//! symbol is `½ diag(I + ξ·σ, I - ξ·σ)`, whose upper block is the chiral one.

use std::f64::consts::PI;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

const UNIT_TOL: f64 = 1e-10;
/// Relative singular-value cutoff used for every rank decision.
pub const RANK_THRESHOLD: f64 = 1e-8;

type CMatrix = DMatrix<Complex64>;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn pauli(j: usize) -> [[Complex64; 2]; 2] {
    let o = c(0.0, 0.0);
    match j {
        1 => [[o, c(1.0, 0.0)], [c(1.0, 0.0), o]],
        2 => [[o, c(0.0, -1.0)], [c(0.0, 1.0), o]],
        3 => [[c(1.0, 0.0), o], [o, c(-1.0, 0.0)]],
        _ => unreachable!("Pauli index {j}"),
    }
}

/// Euclidean gamma matrices for spacetime dimension 2 or 4.
pub fn gammas(dim: usize) -> Result<Vec<CMatrix>> {
    match dim {
        2 => Ok((1..=2)
            .map(|j| {
                let s = pauli(j);
                CMatrix::from_fn(2, 2, |r, col| s[r][col])
            })
            .collect()),
        4 => {
            let mut out = Vec::with_capacity(4);
            for j in 1..=3 {
                let s = pauli(j);
                out.push(CMatrix::from_fn(4, 4, |r, col| {
                    if (r < 2) != (col < 2) {
                        s[r % 2][col % 2]
                    } else {
                        c(0.0, 0.0)
                    }
                }));
            }
            out.push(CMatrix::from_fn(4, 4, |r, col| {
                if r < 2 && col == r + 2 {
                    c(0.0, 1.0)
                } else if r >= 2 && col + 2 == r {
                    c(0.0, -1.0)
                } else {
                    c(0.0, 0.0)
                }
            }));
            Ok(out)
        }
        _ => Err(Error::domain(format!(
            "gamma matrices are fixed for dimension 2 or 4, got {dim}"
        ))),
    }
}

fn slash(gam: &[CMatrix], v: &[f64]) -> CMatrix {
    let n = gam[0].nrows();
    let mut m = CMatrix::zeros(n, n);
    for (g, &x) in gam.iter().zip(v) {
        m += g * c(x, 0.0);
    }
    m
}

/// Number of singular values above `RANK_THRESHOLD · scale`.
pub fn rank_with_scale(m: &CMatrix, scale: f64) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 || scale == 0.0 {
        return 0;
    }
    let sv = m.clone().svd(false, false).singular_values;
    sv.iter().filter(|&&s| s > RANK_THRESHOLD * scale).count()
}

/// Numerical rank with the cutoff relative to the largest singular value.
pub fn rank(m: &CMatrix) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let sv = m.clone().svd(false, false).singular_values;
    let top = sv.iter().cloned().fold(0.0, f64::max);
    rank_with_scale(m, top)
}

fn spectral_norm(m: &CMatrix) -> f64 {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0.0;
    }
    m.clone().svd(false, false).singular_values.iter().cloned().fold(0.0, f64::max)
}

/// A principal symbol evaluated at one boundary point and cotangent vector.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolMatrix {
    dim: usize,
    entries: CMatrix,
    normal: Vec<f64>,
}

impl SymbolMatrix {
    /// Spinor dimension (2 for the plane, 4 in four dimensions).
    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    /// Spacetime dimension the symbol was built for.
    pub fn spacetime_dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn normal(&self) -> &[f64] {
        &self.normal
    }

    pub fn rank(&self) -> usize {
        rank(&self.entries)
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.trace()
    }

    /// Frobenius norm of `q² - q`.
    pub fn idempotence_defect(&self) -> f64 {
        (&self.entries * &self.entries - &self.entries).norm()
    }

    /// The upper-left `dim/2` block (the chiral restriction).
    pub fn chiral_block(&self) -> CMatrix {
        let h = self.dim() / 2;
        self.entries.view((0, 0), (h, h)).into_owned()
    }
}

fn check_unit(name: &str, v: &[f64]) -> Result<()> {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if !norm.is_finite() || (norm - 1.0).abs() > UNIT_TOL {
        return Err(Error::domain(format!("{name} must be a unit vector, |{name}| = {norm}")));
    }
    Ok(())
}

/// `q(x;ξ) = ½(Id + i ξ̸ n̸/|ξ|)` for spacetime dimension 2 or 4, with `ξ` and
/// `n` unit vectors in `ℝ^dim` and `ξ ⊥ n`.
pub fn calderon_symbol(dim: usize, xi: &[f64], n: &[f64]) -> Result<SymbolMatrix> {
    let gam = gammas(dim)?;
    if xi.len() != dim || n.len() != dim {
        return Err(Error::domain(format!(
            "xi and n need {dim} components, got {} and {}",
            xi.len(),
            n.len()
        )));
    }
    check_unit("xi", xi)?;
    check_unit("n", n)?;
    let dot: f64 = xi.iter().zip(n).map(|(a, b)| a * b).sum();
    if dot.abs() > UNIT_TOL {
        return Err(Error::domain(format!("xi must be orthogonal to n, xi·n = {dot}")));
    }
    let size = gam[0].nrows();
    let prod = slash(&gam, xi) * slash(&gam, n);
    let entries = (CMatrix::identity(size, size) + prod * c(0.0, 1.0)) * c(0.5, 0.0);
    Ok(SymbolMatrix {
        dim,
        entries,
        normal: n.to_vec(),
    })
}

/// Outward normal and counter-clockwise tangent of the unit circle at angle
/// `theta`.
pub fn circle_frame(theta: f64) -> ([f64; 2], [f64; 2]) {
    let (s, co) = theta.sin_cos();
    ([co, s], [-s, co])
}

/// Heaviside step with `H(0) = 0`; the symbols are only used for `ξ ≠ 0`.
pub fn heaviside(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else {
        0.0
    }
}

/// Symbol of the spectral projector onto non-negative boundary modes, `H(ξ)`.
pub fn aps_symbol(xi: f64) -> f64 {
    heaviside(xi)
}

/// The operators whose Calderón symbols are sampled by [`ellipticity_test`].
/// Symbols are parametrised by the boundary cotangent vector alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Operator {
    /// Full two-dimensional Dirac operator, `q = diag(H(ξ), H(-ξ))`.
    Full2d,
    /// Its chiral restriction, `q = H(ξ)`.
    Chiral2d,
    /// Full four-dimensional operator with normal `e₄`.
    Full4d,
    /// Chiral four-dimensional block `½(I + ξ·σ)`.
    Chiral4d,
}

impl Operator {
    /// Dimension of the boundary cotangent space.
    pub fn cotangent_dim(self) -> usize {
        match self {
            Operator::Full2d | Operator::Chiral2d => 1,
            Operator::Full4d | Operator::Chiral4d => 3,
        }
    }

    /// Number of columns of `q`.
    pub fn fiber_dim(self) -> usize {
        match self {
            Operator::Chiral2d => 1,
            Operator::Full2d | Operator::Chiral4d => 2,
            Operator::Full4d => 4,
        }
    }

    /// `q` at the boundary cotangent vector `xi` (unit length).
    pub fn symbol(self, xi: &[f64]) -> Result<CMatrix> {
        if xi.len() != self.cotangent_dim() {
            return Err(Error::domain(format!(
                "{self:?} expects {} cotangent components, got {}",
                self.cotangent_dim(),
                xi.len()
            )));
        }
        match self {
            Operator::Full2d | Operator::Chiral2d => {
                // boundary point θ = 0: n = e₀, tangent e₁
                let s = xi[0];
                let q = calderon_symbol(2, &[0.0, s], &[1.0, 0.0])?;
                Ok(if self == Operator::Full2d {
                    q.entries
                } else {
                    q.chiral_block()
                })
            }
            Operator::Full4d | Operator::Chiral4d => {
                let q = calderon_symbol(4, &[xi[0], xi[1], xi[2], 0.0], &[0.0, 0.0, 0.0, 1.0])?;
                Ok(if self == Operator::Full4d {
                    q.entries
                } else {
                    q.chiral_block()
                })
            }
        }
    }
}

/// `q_ch(ξ) = ½(I + ξ·σ)`, the chiral four-dimensional Calderón block.
pub fn q_chiral(xi: [f64; 3]) -> Result<CMatrix> {
    Operator::Chiral4d.symbol(&xi)
}

type SymbolFn = dyn Fn(&[f64]) -> CMatrix + Send + Sync;

/// Symbol `b(x;ξ)` of a boundary operator: an `r × k` matrix on the cosphere.
#[derive(Clone)]
pub struct BoundaryOperatorSymbol {
    rows: usize,
    cols: usize,
    local: bool,
    eval: Arc<SymbolFn>,
}

impl std::fmt::Debug for BoundaryOperatorSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BoundaryOperatorSymbol")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("local", &self.local)
            .finish()
    }
}

impl BoundaryOperatorSymbol {
    /// A local condition: the symbol does not depend on `ξ`.
    pub fn local(matrix: CMatrix) -> Self {
        BoundaryOperatorSymbol {
            rows: matrix.nrows(),
            cols: matrix.ncols(),
            local: true,
            eval: Arc::new(move |_| matrix.clone()),
        }
    }

    /// The single-row local condition `β₁ψ₁ + β₂ψ₂ = 0`.
    pub fn local_pair(beta1: f64, beta2: f64) -> Self {
        Self::local(CMatrix::from_row_slice(1, 2, &[c(beta1, 0.0), c(beta2, 0.0)]))
    }

    /// The spectral pair `(H(ξ), H(-ξ))` on a one-dimensional boundary.
    pub fn aps_pair() -> Self {
        Self::nonlocal(1, 2, |xi: &[f64]| {
            CMatrix::from_row_slice(1, 2, &[c(aps_symbol(xi[0]), 0.0), c(aps_symbol(-xi[0]), 0.0)])
        })
    }

    /// A general `ξ`-dependent symbol.
    pub fn nonlocal<F>(rows: usize, cols: usize, f: F) -> Self
    where
        F: Fn(&[f64]) -> CMatrix + Send + Sync + 'static,
    {
        BoundaryOperatorSymbol {
            rows,
            cols,
            local: false,
            eval: Arc::new(f),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_local(&self) -> bool {
        self.local
    }

    pub fn at(&self, xi: &[f64]) -> Result<CMatrix> {
        let m = (self.eval)(xi);
        if m.nrows() != self.rows || m.ncols() != self.cols {
            return Err(Error::Invalid(format!(
                "boundary symbol declared {}x{} but evaluated to {}x{}",
                self.rows,
                self.cols,
                m.nrows(),
                m.ncols()
            )));
        }
        Ok(m)
    }
}

/// Result of the rank test over the sampled cosphere.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Ellipticity {
    /// `rank(b q) = rank(q) = r` at every sampled point.
    Elliptic { points_checked: usize, rank: usize },
    /// The rank condition fails at `witness`.
    NotElliptic {
        witness: Vec<f64>,
        rank_bq: usize,
        rank_q: usize,
        rows: usize,
    },
    /// `rank q` changes over the cosphere, so no `r` can satisfy the test.
    NonConstantRank {
        xi_a: Vec<f64>,
        rank_a: usize,
        xi_b: Vec<f64>,
        rank_b: usize,
    },
}

impl Ellipticity {
    pub fn is_elliptic(&self) -> bool {
        matches!(self, Ellipticity::Elliptic { .. })
    }
}

/// Deterministic Fibonacci grid on the unit sphere in `ℝ³`.
pub fn fibonacci_sphere(count: usize) -> Vec<[f64; 3]> {
    let golden = PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|i| {
            let z = 1.0 - 2.0 * (i as f64 + 0.5) / count as f64;
            let r = (1.0 - z * z).sqrt();
            let t = golden * i as f64;
            [r * t.cos(), r * t.sin(), z]
        })
        .collect()
}

fn cosphere_samples(op: Operator, samples: usize, extra: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut pts: Vec<Vec<f64>> = match op.cotangent_dim() {
        1 => vec![vec![1.0], vec![-1.0]],
        _ => {
            let mut v: Vec<Vec<f64>> = fibonacci_sphere(samples.max(1)).iter().map(|p| p.to_vec()).collect();
            for axis in 0..3 {
                for sign in [1.0, -1.0] {
                    let mut e = vec![0.0; 3];
                    e[axis] = sign;
                    v.push(e);
                }
            }
            v
        }
    };
    pts.extend(extra.iter().filter(|p| p.len() == op.cotangent_dim()).cloned());
    pts
}

/// Smallest singular value among the top `r` of `m`, relative to `scale`.
fn rth_singular(m: &CMatrix, r: usize, scale: f64) -> f64 {
    if r == 0 {
        return f64::INFINITY;
    }
    let mut sv: Vec<f64> = m.clone().svd(false, false).singular_values.iter().cloned().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv.get(r - 1).copied().unwrap_or(0.0) / scale
}

fn normalize(v: &mut [f64]) {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in v.iter_mut() {
        *x /= n;
    }
}

/// Local pattern search on the sphere minimising the `r`-th singular value of
/// `b q`, started from `start`.
fn refine_minimum(b: &BoundaryOperatorSymbol, op: Operator, start: &[f64], r: usize) -> Result<(Vec<f64>, f64)> {
    let objective = |xi: &[f64]| -> Result<f64> {
        let q = op.symbol(xi)?;
        let bm = b.at(xi)?;
        let scale = spectral_norm(&bm) * spectral_norm(&q);
        Ok(if scale == 0.0 { 0.0 } else { rth_singular(&(bm * q), r, scale) })
    };
    let mut x = start.to_vec();
    let mut fx = objective(&x)?;
    let mut step = 0.1;
    while step > 1e-13 && fx > 0.0 {
        let mut improved = false;
        for axis in 0..x.len() {
            for sign in [1.0, -1.0] {
                let mut y = x.clone();
                y[axis] += sign * step;
                normalize(&mut y);
                let fy = objective(&y)?;
                if fy < fx {
                    x = y;
                    fx = fy;
                    improved = true;
                }
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    Ok((x, fx))
}

/// Checks `rank(b q) = rank(q) = r` over a deterministic cosphere grid of
/// `samples` points plus the coordinate axes and any `extra` points. The most
/// suspicious grid points are then refined locally, since obstructions sit at
/// isolated `ξ` that a grid does not hit exactly.
///
/// The rank of `b q` is decided relative to `‖b‖‖q‖` rather than to its own
/// largest singular value, so that a product that vanishes up to rounding
/// counts as rank 0.
pub fn ellipticity_test(
    b: &BoundaryOperatorSymbol,
    op: Operator,
    samples: usize,
    extra: &[Vec<f64>],
) -> Result<Ellipticity> {
    if b.cols() != op.fiber_dim() {
        return Err(Error::Invalid(format!(
            "boundary symbol has {} columns but {op:?} acts on {} components",
            b.cols(),
            op.fiber_dim()
        )));
    }
    let pts = cosphere_samples(op, samples, extra);

    let mut rank_q = None::<(Vec<f64>, usize)>;
    for xi in &pts {
        let r = rank(&op.symbol(xi)?);
        match &rank_q {
            None => rank_q = Some((xi.clone(), r)),
            Some((x0, r0)) if *r0 != r => {
                return Ok(Ellipticity::NonConstantRank {
                    xi_a: x0.clone(),
                    rank_a: *r0,
                    xi_b: xi.clone(),
                    rank_b: r,
                })
            }
            _ => {}
        }
    }
    let (_, r) = rank_q.expect("at least two sample points");

    let mut scored = Vec::with_capacity(pts.len());
    for xi in &pts {
        let q = op.symbol(xi)?;
        let bm = b.at(xi)?;
        let scale = spectral_norm(&bm) * spectral_norm(&q);
        let bq = bm * q;
        let rbq = rank_with_scale(&bq, scale);
        if rbq != r || b.rows() != r {
            return Ok(Ellipticity::NotElliptic {
                witness: xi.clone(),
                rank_bq: rbq,
                rank_q: r,
                rows: b.rows(),
            });
        }
        let score = if scale == 0.0 { 0.0 } else { rth_singular(&bq, r, scale) };
        scored.push((score, xi.clone()));
    }

    if op.cotangent_dim() > 1 {
        scored.sort_by(|a, b| a.0.total_cmp(&b.0));
        for (_, start) in scored.iter().take(8) {
            let (xi, _) = refine_minimum(b, op, start, r)?;
            let q = op.symbol(&xi)?;
            let bm = b.at(&xi)?;
            let scale = spectral_norm(&bm) * spectral_norm(&q);
            let rbq = rank_with_scale(&(bm * q), scale);
            if rbq != r {
                return Ok(Ellipticity::NotElliptic {
                    witness: xi,
                    rank_bq: rbq,
                    rank_q: r,
                    rows: b.rows(),
                });
            }
        }
    }

    Ok(Ellipticity::Elliptic {
        points_checked: pts.len(),
        rank: r,
    })
}

/// The cotangent vector at which the local chiral condition
/// `β₁ψ₁ + β₂ψ₂ = 0` loses rank in four dimensions:
/// `ξ = (-2β₁β₂, 0, β₂² - β₁²)/(β₁² + β₂²)`.
pub fn chiral_obstruction_witness(beta1: f64, beta2: f64) -> Result<[f64; 3]> {
    let s = beta1 * beta1 + beta2 * beta2;
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::domain("witness needs beta1² + beta2² > 0"));
    }
    Ok([-2.0 * beta1 * beta2 / s, 0.0, (beta2 * beta2 - beta1 * beta1) / s])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &CMatrix, b: &CMatrix) -> bool {
        (a - b).norm() < 1e-14
    }

    #[test]
    fn gammas_satisfy_clifford_relations() {
        for dim in [2, 4] {
            let g = gammas(dim).unwrap();
            let size = g[0].nrows();
            for a in 0..dim {
                for b in 0..dim {
                    let anti = &g[a] * &g[b] + &g[b] * &g[a];
                    let want = if a == b {
                        CMatrix::identity(size, size) * c(2.0, 0.0)
                    } else {
                        CMatrix::zeros(size, size)
                    };
                    assert!(close(&anti, &want), "dim {dim}, ({a},{b})");
                }
                assert!(close(&g[a].adjoint(), &g[a]));
            }
        }
        assert!(gammas(3).is_err());
    }

    #[test]
    fn two_dim_symbol_is_heaviside_pair() {
        for theta in [0.0, 0.7, 2.0, 4.5] {
            let (n, t) = circle_frame(theta);
            for s in [1.0, -1.0] {
                let q = calderon_symbol(2, &[s * t[0], s * t[1]], &n).unwrap();
                let want = CMatrix::from_row_slice(
                    2,
                    2,
                    &[c(heaviside(s), 0.0), c(0.0, 0.0), c(0.0, 0.0), c(heaviside(-s), 0.0)],
                );
                assert!(close(q.entries(), &want), "theta {theta}, s {s}");
            }
        }
    }

    #[test]
    fn four_dim_symbol_along_e3() {
        let q = calderon_symbol(4, &[0.0, 0.0, 1.0, 0.0], &[0.0, 0.0, 0.0, 1.0]).unwrap();
        let mut want = CMatrix::zeros(4, 4);
        want[(0, 0)] = c(1.0, 0.0);
        want[(3, 3)] = c(1.0, 0.0);
        assert!(close(q.entries(), &want));
        assert_eq!(q.rank(), 2);
    }

    #[test]
    fn rejects_bad_vectors() {
        assert!(calderon_symbol(2, &[1.0, 0.0], &[1.0, 0.0]).is_err());
        assert!(calderon_symbol(2, &[0.0, 2.0], &[1.0, 0.0]).is_err());
        assert!(calderon_symbol(4, &[0.0, 1.0], &[1.0, 0.0]).is_err());
        assert!(calderon_symbol(3, &[0.0, 1.0, 0.0], &[1.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn witness_examples() {
        assert_eq!(chiral_obstruction_witness(1.0, 1.0).unwrap(), [-1.0, 0.0, 0.0]);
        assert_eq!(chiral_obstruction_witness(1.0, 0.0).unwrap(), [0.0, 0.0, -1.0]);
        assert!(chiral_obstruction_witness(0.0, 0.0).is_err());
        let b = CMatrix::from_row_slice(1, 2, &[c(1.0, 0.0), c(0.0, 0.0)]);
        let bq = b * q_chiral([0.0, 0.0, -1.0]).unwrap();
        assert_eq!(bq.norm(), 0.0);
    }

    #[test]
    fn betas_and_aps_pair_are_elliptic() {
        let b = BoundaryOperatorSymbol::local_pair(0.3, -2.0);
        assert!(ellipticity_test(&b, Operator::Full2d, 0, &[]).unwrap().is_elliptic());
        let aps = BoundaryOperatorSymbol::aps_pair();
        assert!(!aps.is_local());
        assert!(ellipticity_test(&aps, Operator::Full2d, 0, &[]).unwrap().is_elliptic());
    }

    #[test]
    fn chiral_plane_has_non_constant_rank() {
        let b = BoundaryOperatorSymbol::local(CMatrix::from_element(1, 1, c(1.0, 0.0)));
        match ellipticity_test(&b, Operator::Chiral2d, 0, &[]).unwrap() {
            Ellipticity::NonConstantRank { xi_a, rank_a, xi_b, rank_b } => {
                assert_eq!((xi_a[0], rank_a), (1.0, 1));
                assert_eq!((xi_b[0], rank_b), (-1.0, 0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn grid_search_finds_chiral_obstruction() {
        let b = BoundaryOperatorSymbol::local_pair(0.8, 1.9);
        match ellipticity_test(&b, Operator::Chiral4d, 200, &[]).unwrap() {
            Ellipticity::NotElliptic { witness, rank_bq, rank_q, .. } => {
                assert_eq!((rank_bq, rank_q), (0, 1));
                let w = chiral_obstruction_witness(0.8, 1.9).unwrap();
                let d: f64 = witness.iter().zip(w).map(|(a, b)| (a - b).powi(2)).sum();
                assert!(d.sqrt() < 1e-6, "{witness:?} vs {w:?}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn mismatched_columns_rejected() {
        let b = BoundaryOperatorSymbol::local_pair(1.0, 1.0);
        assert!(ellipticity_test(&b, Operator::Full4d, 10, &[]).is_err());
    }
}
