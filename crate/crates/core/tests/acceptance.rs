//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};
use std::time::{Duration, Instant};

use diskdet_core::determinant::{index_for_kappa, log_det, log_det_ratio_route};
use diskdet_core::flux::{flux_kappa, level_k};
use diskdet_core::oracle::{free_spectrum_exact, free_spectrum_fd, zeta_partial_sum};
use diskdet_core::symbols::{
    calderon_symbol, chiral_obstruction_witness, ellipticity_test, q_chiral, rank_with_scale,
    BoundaryOperatorSymbol, Operator,
};
use diskdet_core::zeta_eta::{continued_at_zero, eta_zero, eta_zero_numeric, f_prime_zero, f_zero};
use diskdet_core::{BesselZeroTable, FluxProfile, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        pass,
        detail: detail.into(),
    })
}

/// Profile `φ = -κ r²/(2R²)`, whose flux is exactly `κ`.
fn quadratic(kappa: f64, radius: f64) -> FluxProfile {
    FluxProfile::polynomial(radius, &[0.0, -kappa / (2.0 * radius * radius)]).unwrap()
}

fn c1_continuation() -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for nu in [0.0, 1.0, 2.0, 3.0] {
        let table = BesselZeroTable::new(nu, 10_000)?;
        let (f0, _) = continued_at_zero(&table)?;
        worst = worst.max((f0 - f_zero(nu)).abs());
    }
    outcome(worst <= 1e-6, format!("max |f_nu(0) + nu/2 + 1/4| = {worst:.2e} over nu in 0..=3"))
}

fn c2_half_order() -> Result<Outcome> {
    let got = f_prime_zero(0.5)?.fprime0;
    // f_{1/2}(s) = π^{-s} ζ(s): f'(0) = ½ ln π + ζ'(0) with ζ'(0) = -½ ln 2π
    let riemann = 0.5 * PI.ln() - 0.5 * (2.0 * PI).ln();
    let err = (got - riemann).abs();
    outcome(
        err <= 1e-9 && (riemann + 0.5 * LN_2).abs() < 1e-15,
        format!("f'_(1/2)(0) = {got:.15}, error {err:.2e}"),
    )
}

fn c3_free_spectrum() -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for k in -1..=1 {
        for n in 0..=2 {
            worst = worst.max(free_spectrum_fd(n, k, 1.0, 2000)?.max_rel_error);
        }
    }
    // modes n = k + 1 and n = k carry the same eigenvalues
    let mut doubling = 0.0_f64;
    for k in -1..=1 {
        let upper = free_spectrum_fd(k + 1, k, 1.0, 2000)?;
        let lower = free_spectrum_fd(k, k, 1.0, 2000)?;
        let exact = free_spectrum_exact(k + 1, k, 1.0, 5)?;
        if exact != free_spectrum_exact(k, k, 1.0, 5)? {
            return outcome(false, format!("exact lists differ for k = {k}"));
        }
        for (a, b) in upper.positive().iter().zip(lower.positive()) {
            doubling = doubling.max((a - b).abs() / a);
        }
    }
    outcome(
        worst <= 1e-3 && doubling <= 1e-3,
        format!("max rel error {worst:.2e}, doubled pairs differ by {doubling:.2e}"),
    )
}

fn c4_index() -> Result<Outcome> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let mut kappas: Vec<f64> = (0..50)
        .map(|_| {
            // (-1, 5]
            5.0 - 6.0 * rng.gen::<f64>()
        })
        .collect();
    kappas.extend([0.0, 0.5, 1.0, 2.5]);
    for &kappa in &kappas {
        let r = index_for_kappa(kappa)?;
        if r.zero_modes != r.chirality || r.chirality != r.aps || r.aps != level_k(kappa) + 1 {
            return outcome(false, format!("kappa = {kappa}: {:?}", r.as_array()));
        }
    }
    outcome(true, format!("{} flux values, all three routes equal", kappas.len()))
}

fn c5_eta() -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for kappa in [0.0, 0.25, 0.5, 1.0, 1.5, 2.7] {
        let numeric = eta_zero_numeric(kappa, 1000)?;
        let d = eta_zero(kappa)?;
        let closed = 2.0 * (kappa - d.k as f64) - 1.0 - d.h as f64;
        worst = worst.max((numeric - closed).abs());
    }
    outcome(worst <= 1e-6, format!("max |eta_numeric - closed form| = {worst:.2e}"))
}

fn c6_two_routes() -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for k in -1..=3 {
        for radius in [0.5, 1.0, 2.0] {
            let p = quadratic(k as f64 + 0.5, radius);
            let a = log_det(&p)?;
            let b = log_det_ratio_route(&p)?;
            if a.k != k {
                return outcome(false, format!("profile landed in k = {} instead of {k}", a.k));
            }
            worst = worst.max((a.total - b.total).norm());
        }
    }
    outcome(worst <= 1e-8, format!("max |total difference| = {worst:.2e} over k in -1..=3, three radii"))
}

fn c7_gauge() -> Result<Outcome> {
    let families = [
        FluxProfile::polynomial(1.3, &[0.0, -0.7, 0.05])?,
        FluxProfile::tabulated(
            1.0,
            &(0..=40)
                .map(|i| {
                    let r = i as f64 / 40.0;
                    (r, -1.2 * r * r + 0.3 * r.powi(4))
                })
                .collect::<Vec<_>>(),
        )?,
    ];
    let mut worst = 0.0_f64;
    for p in &families {
        let base = log_det(p)?.total;
        for c in [0.5, -0.5, 5.0, -5.0] {
            worst = worst.max((log_det(&p.shifted(c))?.total - base).norm());
        }
    }
    outcome(worst <= 1e-9, format!("max |total(phi + c) - total(phi)| = {worst:.2e}"))
}

fn c8_zero_flux() -> Result<Outcome> {
    // φ = A(r² - r⁴/(2R²)) has φ'(R) = 0 and ∫₀ᴿ r φ'² dr = A²R⁴/6
    let mut worst = 0.0_f64;
    let mut imag = 0.0_f64;
    for (a, radius) in [(0.8, 1.0), (-1.7, 0.6), (0.3, 2.2)] {
        let p = FluxProfile::polynomial(radius, &[0.0, a, -a / (2.0 * radius * radius)])?;
        if flux_kappa(&p) != 0.0 {
            return outcome(false, format!("flux {} is not zero", flux_kappa(&p)));
        }
        let d = log_det(&p)?;
        let want = -a * a * radius.powi(4) / 6.0;
        worst = worst.max((d.total.re - want).abs());
        imag = imag.max(d.total.im.abs());
    }
    outcome(
        worst <= 1e-9 && imag == 0.0,
        format!("max |total - bulk| = {worst:.2e}, max |Im| = {imag:.1e}"),
    )
}

fn c9_phase() -> Result<Outcome> {
    let mut worst = 0.0_f64;
    for k in -1i64..=2 {
        for radius in [0.5, 1.0, 2.0] {
            let d = log_det(&quadratic(k as f64 + 0.7, radius))?;
            let want = -((k + 1).abs() as f64) * FRAC_PI_2;
            worst = worst.max((d.total.im - want).abs());
        }
    }
    outcome(worst <= 1e-10, format!("max |Im(total) + |k+1| pi/2| = {worst:.2e}"))
}

fn c10_symbols() -> Result<Outcome> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0010);
    let mut defect = 0.0_f64;
    for trial in 0..1000 {
        let dim = if trial % 2 == 0 { 2 } else { 4 };
        let n = random_unit(&mut rng, dim);
        let xi = loop {
            let v = random_unit(&mut rng, dim);
            let dot: f64 = v.iter().zip(&n).map(|(a, b)| a * b).sum();
            let w: Vec<f64> = v.iter().zip(&n).map(|(a, b)| a - dot * b).collect();
            let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 1e-3 {
                break w.iter().map(|x| x / norm).collect::<Vec<_>>();
            }
        };
        let q = calderon_symbol(dim, &xi, &n)?;
        defect = defect
            .max(q.idempotence_defect())
            .max((q.trace() - Complex64::new(dim as f64 / 2.0, 0.0)).norm());
    }

    let mut witness_ok = true;
    for _ in 0..100 {
        let b1 = random_nonzero(&mut rng);
        let b2 = random_nonzero(&mut rng);
        let xi = chiral_obstruction_witness(b1, b2)?;
        let b = DMatrix::from_row_slice(1, 2, &[Complex64::new(b1, 0.0), Complex64::new(b2, 0.0)]);
        witness_ok &= rank_with_scale(&(b * q_chiral(xi)?), (b1 * b1 + b2 * b2).sqrt()) == 0;
    }

    let mut elliptic = true;
    for (b1, b2) in [(1.0, 1.0), (0.3, -2.0), (-4.0, 0.01)] {
        let b = BoundaryOperatorSymbol::local_pair(b1, b2);
        elliptic &= ellipticity_test(&b, Operator::Full2d, 0, &[])?.is_elliptic();
    }
    elliptic &= ellipticity_test(&BoundaryOperatorSymbol::aps_pair(), Operator::Full2d, 0, &[])?.is_elliptic();
    // and no constant local condition works for the chiral 4-D block
    let obstructed = !ellipticity_test(&BoundaryOperatorSymbol::local_pair(0.6, -1.3), Operator::Chiral4d, 400, &[])?
        .is_elliptic();

    outcome(
        defect <= 1e-12 && witness_ok && elliptic && obstructed,
        format!(
            "projector defect {defect:.1e}, witness rank 0: {witness_ok}, local/APS elliptic: {elliptic}, chiral 4-D obstructed: {obstructed}"
        ),
    )
}

fn random_unit(rng: &mut StdRng, dim: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-2 && n <= 1.0 {
            return v.iter().map(|x| x / n).collect();
        }
    }
}

fn random_nonzero(rng: &mut StdRng) -> f64 {
    let mag = rng.gen_range(0.05..5.0);
    if rng.gen::<bool>() {
        mag
    } else {
        -mag
    }
}

fn c11_rayleigh() -> Result<Outcome> {
    let v = zeta_partial_sum(0.0, 2.0, 10_000)?;
    let err = (v - 0.25).abs();
    outcome(err <= 1e-8, format!("sum j_(0,l)^-2 = {v:.15}, error {err:.2e}"))
}

type Criterion = fn() -> Result<Outcome>;

fn main() {
    let criteria: [(&str, Criterion, Option<Duration>); 11] = [
        ("f_nu(0) from numeric continuation", c1_continuation, Some(Duration::from_secs(30))),
        ("f'_(1/2)(0) = -ln2/2", c2_half_order, None),
        ("free spectrum: finite differences vs Bessel zeros", c3_free_spectrum, Some(Duration::from_secs(120))),
        ("index computed three ways", c4_index, None),
        ("eta(0) continuation vs closed form", c5_eta, None),
        ("free quotient vs Bessel-ratio series", c6_two_routes, None),
        ("gauge constant-shift invariance", c7_gauge, None),
        ("zero flux reduces to the bulk term", c8_zero_flux, None),
        ("phase of the determinant", c9_phase, None),
        ("Calderon symbols and ellipticity", c10_symbols, None),
        ("Rayleigh sum of j_(0,l)^-2", c11_rayleigh, None),
    ];
    let mut failures = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (pass, detail) = match result {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let within_budget = budget.is_none_or(|b| elapsed <= b);
        let pass = pass && within_budget;
        if !pass {
            failures += 1;
        }
        let budget_note = budget.map_or(String::new(), |b| format!(", budget {}s", b.as_secs()));
        println!(
            "[{}] {:>2}. {name}: {detail} ({:.2}s{budget_note})",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
