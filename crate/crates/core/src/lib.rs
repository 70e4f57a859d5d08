//! Functional determinant of the two-dimensional Euclidean Dirac operator on a
//! disk of radius `R`, coupled to an axially symmetric Abelian flux and
//! restricted by Atiyah–Patodi–Singer (spectral) boundary conditions.
//!
//! The crate is organised bottom-up:
//!
//! - [`specfun`]: Bessel `J_ν`, its zeros, Hurwitz zeta and adaptive quadrature.
//! - [`flux`]: the gauge background `φ(r)`, flux `κ`, level `k`, zero modes and
//!   the interacting determinant quotient.
//! - [`zeta_eta`]: `f_ν(0)`, `f'_ν(0)`, the free determinant quotient and the
//!   boundary η-invariant.
//! - [`determinant`]: the assembled complex log-determinant and the index
//!   cross-checks.
//! - [`symbols`]: principal symbols of the Calderón projector and the
//!   ellipticity rank test.
//! - [`oracle`]: independent validators (finite-difference spectra, Green-kernel
//!   checks, brute-force zeta sums).

pub mod determinant;
pub mod error;
mod fourier;
pub mod flux;
pub mod oracle;
pub mod specfun;
pub mod symbols;
pub mod zeta_eta;

pub use determinant::{index_for_kappa, index_report, log_det, IndexReport, LogDet};
pub use error::{Error, Result};
pub use flux::{FluxData, FluxProfile, ProfileKind};
pub use specfun::{bessel_j, bessel_zero, BesselZeroTable};
pub use zeta_eta::{EtaData, ZetaValues};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Numerical tolerances shared by the assembly layers.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Tolerances {
    /// Relative tolerance of every adaptive quadrature.
    pub quadrature: f64,
    /// Largest acceptable analytic-tail estimate in the `f'_ν(0)` series.
    pub zeta_tail: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            quadrature: 1e-10,
            zeta_tail: 1e-9,
        }
    }
}
