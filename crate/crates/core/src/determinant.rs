//! The complete log-determinant quotient
//! `ln[Det′(D)_κ / Det(i∂̸)_{κ=0}]`, assembled in two steps: the field is
//! switched on at fixed spectral boundary condition (flux module), then the
//! free operator with flux-dependent boundary condition is compared with the
//! free operator at `κ = 0` (zeta module).
//!
//! `Det′` is the primed determinant: zero modes are removed through
//! `Det(D + P)` with `P` the projector on `Ker D`. The unprimed determinant
//! vanishes whenever `k ≥ 0` and is never what this module returns.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flux::{interacting_parts, require_supported, FluxData, FluxProfile};
use crate::zeta_eta::{eta_zero, free_quotient_ratio_route, free_quotient_with};
use crate::Tolerances;

/// Complex log-determinant with its breakdown.
///
/// The imaginary part is `-|k+1|π/2`, fixed by the `(1 + e^{-iπs})`
/// continuation of the free zeta function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogDet {
    pub total: Complex64,
    /// `-(1/2π) ∫ φ'² d²x`.
    pub bulk: f64,
    /// `-2(k+1)φ(R) + Σ_n ln[2(n+1) q_n(R;1)/R^{2(n+1)}]`.
    pub zero_mode_part: f64,
    /// `ln[Det(i∂̸ + P_0)_κ / Det(i∂̸)_{κ=0}]`.
    pub free_quotient_part: Complex64,
    pub kappa: f64,
    pub k: i64,
}

/// `ln[Det′(D)_κ / Det(i∂̸)_{κ=0}]` (primed: zero modes projected out).
pub fn log_det(p: &FluxProfile) -> Result<LogDet> {
    log_det_with(p, &Tolerances::default())
}

pub fn log_det_with(p: &FluxProfile, tol: &Tolerances) -> Result<LogDet> {
    let data = FluxData::from_profile(p);
    require_supported(data.k)?;
    let inter = interacting_parts(p, tol)?;
    let free = free_quotient_with(data.k, p.radius(), tol)?;
    Ok(assemble(data, inter.bulk, inter.zero_mode_part, free))
}

/// Same as [`log_det`], with the free quotient taken from the Bessel-ratio
/// series rather than from `f'_ν(0)`. Used to cross-check the two forms.
pub fn log_det_ratio_route(p: &FluxProfile) -> Result<LogDet> {
    let data = FluxData::from_profile(p);
    require_supported(data.k)?;
    let inter = interacting_parts(p, &Tolerances::default())?;
    let free = free_quotient_ratio_route(data.k, p.radius())?;
    Ok(assemble(data, inter.bulk, inter.zero_mode_part, free))
}

fn assemble(data: FluxData, bulk: f64, zero_mode_part: f64, free: Complex64) -> LogDet {
    LogDet {
        total: free + (bulk + zero_mode_part),
        bulk,
        zero_mode_part,
        free_quotient_part: free,
        kappa: data.kappa,
        k: data.k,
    }
}

/// The index computed three ways.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    /// Number of normalisable zero modes, `k + 1`.
    pub zero_modes: i64,
    /// `N₊ - N₋` from the axial variation of the determinant.
    pub chirality: i64,
    /// `κ + [1 - h - η(0)]/2`.
    pub aps: i64,
}

impl IndexReport {
    pub fn as_array(&self) -> [i64; 3] {
        [self.zero_modes, self.chirality, self.aps]
    }
}

/// Index of `D_κ` for a flux value alone.
pub fn index_for_kappa(kappa: f64) -> Result<IndexReport> {
    let data = FluxData::from_kappa(kappa);
    require_supported(data.k)?;
    let zero_modes = data.zero_mode_count as i64;
    // all zero modes carry positive chirality for k ≥ -1, and each shifts
    // the ε-derivative of the determinant by -2
    let chirality = zero_modes;
    let eta = eta_zero(kappa)?;
    let report = IndexReport {
        zero_modes,
        chirality,
        aps: eta.index,
    };
    if report.zero_modes != report.chirality || report.chirality != report.aps {
        return Err(Error::Inconsistent {
            check: "index",
            detail: format!("routes disagree: {:?}", report.as_array()),
        });
    }
    Ok(report)
}

/// `(k + 1, N₊ - N₋, κ + [1 - h - η(0)]/2)` for the profile's flux.
pub fn index_report(p: &FluxProfile) -> Result<IndexReport> {
    index_for_kappa(FluxData::from_profile(p).kappa)
}
