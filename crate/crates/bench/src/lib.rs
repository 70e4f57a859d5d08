//! Fixtures shared by the benchmarks in `benches/`.

use diskdet_core::FluxProfile;

/// `φ = -κ r²/(2R²)`, a profile with flux exactly `κ`.
pub fn quadratic_profile(kappa: f64, radius: f64) -> FluxProfile {
    FluxProfile::polynomial(radius, &[0.0, -kappa / (2.0 * radius * radius)]).expect("valid radius")
}

/// A smooth tabulated profile with flux near `κ`, sampled on `nodes` points.
pub fn tabulated_profile(kappa: f64, radius: f64, nodes: usize) -> FluxProfile {
    let table: Vec<(f64, f64)> = (0..nodes)
        .map(|i| {
            let r = radius * i as f64 / (nodes - 1) as f64;
            (r, -kappa * r * r / (2.0 * radius * radius))
        })
        .collect();
    FluxProfile::tabulated(radius, &table).expect("valid nodes")
}
