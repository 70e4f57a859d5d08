//! Special-function kernel: Bessel `J_ν`, its zeros, Hurwitz zeta and
//! adaptive quadrature.

mod bessel;
mod hurwitz;
mod quad;
mod zeros;

pub use bessel::{bessel_j, bessel_j_prime, MAX_ORDER};
pub use hurwitz::hurwitz_zeta;
pub use quad::{integrate, QuadResult};
pub use zeros::{bessel_zero, mcmahon, BesselZeroTable};

