//! Invariant suite behind `diskdet selftest`.

use std::f64::consts::{FRAC_PI_2, LN_2};
use std::time::Instant;

use diskdet_core::determinant::{index_for_kappa, log_det};
use diskdet_core::flux::level_k;
use diskdet_core::oracle::{doubling_pair, free_spectrum_fd, green_holomorphy_check, zeta_partial_sum_from_table};
use diskdet_core::symbols::{
    calderon_symbol, chiral_obstruction_witness, ellipticity_test, BoundaryOperatorSymbol, Operator,
};
use diskdet_core::zeta_eta::{
    continued_at_zero, eta_zero, eta_zero_numeric, f_prime_zero_from_table, f_zero, free_quotient,
    free_quotient_ratio_route,
};
use diskdet_core::{bessel_j, BesselZeroTable, FluxProfile};
use num_complex::Complex64;
use serde::Serialize;

use crate::config::{Profile, RunConfig, ToleranceOverrides};
use crate::error::CliError;

#[derive(Debug, Clone, Copy, Default)]
pub struct SelftestOptions {
    /// Relative perturbation applied to the zero tables of the zeta check.
    pub perturb_zeros: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelftestReport {
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
}

impl SelftestReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            s.push_str(&format!("[{tag}] {}: {} ({:.2}s)\n", c.name, c.detail, c.seconds));
        }
        s.push_str(&format!("selftest: {} passed, {} failed\n", self.passed, self.failed));
        s
    }

    pub(crate) fn failure(&self) -> Option<CliError> {
        (!self.all_passed()).then_some(CliError::SelftestFailed {
            failed: self.failed,
            total: self.checks.len(),
        })
    }
}

type CheckFn = fn(&SelftestOptions) -> diskdet_core::Result<(bool, String)>;

const CHECKS: &[(&str, CheckFn)] = &[
    ("bessel recurrence", bessel_recurrence),
    ("zero table", zero_table),
    ("zeta consistency", zeta_consistency),
    ("f(0) continuation", continuation),
    ("free quotient routes", free_quotient_routes),
    ("eta invariant", eta_invariant),
    ("index three ways", index_three_ways),
    ("free field", free_field),
    ("gauge shift", gauge_shift),
    ("kappa = 1 phase", kappa_one_phase),
    ("fd spectrum", fd_spectrum),
    ("green kernel", green_kernel),
    ("calderon projector", calderon_projector),
    ("ellipticity", ellipticity),
    ("config round trip", config_round_trip),
];

/// Runs every check. Errors inside a check count as failures of that check.
pub fn selftest(opts: &SelftestOptions) -> SelftestReport {
    let checks: Vec<CheckResult> = CHECKS
        .iter()
        .map(|(name, f)| {
            let start = Instant::now();
            let (pass, detail) = match f(opts) {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            CheckResult {
                name,
                pass,
                detail,
                seconds: start.elapsed().as_secs_f64(),
            }
        })
        .collect();
    let passed = checks.iter().filter(|c| c.pass).count();
    SelftestReport {
        failed: checks.len() - passed,
        passed,
        checks,
    }
}

type Check = diskdet_core::Result<(bool, String)>;

fn bessel_recurrence(_: &SelftestOptions) -> Check {
    let mut worst = 0.0_f64;
    for nu in [1.0, 1.5, 2.5, 10.0, 40.0] {
        for x in [0.7, 3.0, 12.0, 45.0, 300.0] {
            let (a, b, c) = (bessel_j(nu - 1.0, x)?, bessel_j(nu, x)?, bessel_j(nu + 1.0, x)?);
            let scale = a.abs().max(b.abs()).max(c.abs()).max(1e-300);
            worst = worst.max((a + c - 2.0 * nu / x * b).abs() / scale);
        }
    }
    Ok((worst <= 1e-11, format!("max relative residual {worst:.2e}")))
}

fn zero_table(_: &SelftestOptions) -> Check {
    let mut worst_value = 0.0_f64;
    let mut interlaced = true;
    for nu in [0.0, 1.0, 2.0, 3.0] {
        let a = BesselZeroTable::new(nu, 60)?;
        let b = BesselZeroTable::new(nu + 1.0, 60)?;
        for l in 0..59 {
            interlaced &= a.zeros()[l] < b.zeros()[l] && b.zeros()[l] < a.zeros()[l + 1];
        }
        for &z in a.zeros() {
            worst_value = worst_value.max(bessel_j(nu, z)?.abs());
        }
    }
    Ok((
        interlaced && worst_value <= 1e-13,
        format!("interlacing {interlaced}, max |J_nu(j)| = {worst_value:.2e}"),
    ))
}

/// Σ j⁻² = 1/(4(ν+1)) and the `f'_{1/2}(0)` series, both over the same tables.
fn zeta_consistency(opts: &SelftestOptions) -> Check {
    let table = |nu: f64| -> diskdet_core::Result<BesselZeroTable> {
        let t = BesselZeroTable::new(nu, 4000)?;
        Ok(match opts.perturb_zeros {
            Some(rel) => t.perturbed(rel),
            None => t,
        })
    };
    let mut rayleigh = 0.0_f64;
    for nu in [0.0, 1.0, 2.0] {
        let sum = zeta_partial_sum_from_table(&table(nu)?, 2.0);
        let exact = 0.25 / (nu + 1.0);
        rayleigh = rayleigh.max((sum - exact).abs() / exact);
    }
    let half = f_prime_zero_from_table(&table(0.5)?).fprime0;
    let half_err = (half + 0.5 * LN_2).abs();
    let perturbed = match opts.perturb_zeros {
        Some(rel) => format!(" [zeros perturbed by {rel:e}]"),
        None => String::new(),
    };
    Ok((
        rayleigh <= 1e-8 && half_err <= 1e-9,
        format!("Rayleigh sums rel err {rayleigh:.2e}, f'_(1/2)(0) err {half_err:.2e}{perturbed}"),
    ))
}

fn continuation(_: &SelftestOptions) -> Check {
    let mut worst = 0.0_f64;
    for nu in [0.0, 1.0, 2.0] {
        let (f0, _) = continued_at_zero(&BesselZeroTable::new(nu, 4000)?)?;
        worst = worst.max((f0 - f_zero(nu)).abs());
    }
    Ok((worst <= 1e-6, format!("max |f_nu(0) + nu/2 + 1/4| = {worst:.2e}")))
}

fn free_quotient_routes(_: &SelftestOptions) -> Check {
    let mut worst = 0.0_f64;
    for k in -1..=3 {
        for radius in [0.5, 2.0] {
            worst = worst.max((free_quotient(k, radius)? - free_quotient_ratio_route(k, radius)?).norm());
        }
    }
    Ok((worst <= 1e-8, format!("max route difference {worst:.2e}")))
}

fn eta_invariant(_: &SelftestOptions) -> Check {
    let mut worst = 0.0_f64;
    for kappa in [0.0, 0.25, 0.5, 1.0, 1.5, 2.7] {
        let closed = eta_zero(kappa)?.eta0;
        worst = worst.max((eta_zero_numeric(kappa, 1000)? - closed).abs());
    }
    Ok((worst <= 1e-6, format!("max |numeric - closed| = {worst:.2e}")))
}

fn index_three_ways(_: &SelftestOptions) -> Check {
    let mut kappas: Vec<f64> = (0..60).map(|i| -0.95 + 0.1 * f64::from(i)).collect();
    kappas.extend([0.0, 0.5, 1.0, 2.5, 3.0]);
    for &kappa in &kappas {
        let r = index_for_kappa(kappa)?;
        if r.as_array() != [level_k(kappa) + 1; 3] {
            return Ok((false, format!("kappa = {kappa}: {:?}", r.as_array())));
        }
    }
    Ok((true, format!("{} flux values agree", kappas.len())))
}

fn free_field(_: &SelftestOptions) -> Check {
    let d = log_det(&FluxProfile::zero(1.3)?)?;
    Ok((d.total == Complex64::new(0.0, 0.0), format!("total = {}", d.total)))
}

fn gauge_shift(_: &SelftestOptions) -> Check {
    let p = FluxProfile::polynomial(1.0, &[0.0, -0.75, 0.1])?;
    let a = log_det(&p)?.total;
    let b = log_det(&p.shifted(0.4))?.total;
    let diff = (a - b).norm();
    Ok((diff <= 1e-10, format!("|Δ total| = {diff:.2e}")))
}

fn kappa_one_phase(_: &SelftestOptions) -> Check {
    // φ = -r²/2 on the unit disk carries flux exactly 1
    let d = log_det(&FluxProfile::polynomial(1.0, &[0.0, -0.5])?)?;
    let err = (d.total.im + FRAC_PI_2).abs();
    Ok((d.k == 0 && err <= 1e-10, format!("Im total = {:.15}, k = {}", d.total.im, d.k)))
}

fn fd_spectrum(_: &SelftestOptions) -> Check {
    let mut worst = 0.0_f64;
    for (n, k) in [(0, -1), (1, 0), (0, 1)] {
        worst = worst.max(free_spectrum_fd(n, k, 1.0, 1000)?.max_rel_error);
    }
    let (a, b) = doubling_pair(0, 1.0, 1000)?;
    let doubled = a
        .positive()
        .iter()
        .zip(b.positive())
        .all(|(x, y)| (x - y).abs() <= 1e-3 * x);
    Ok((
        worst <= 1e-3 && doubled,
        format!("max rel error {worst:.2e} at grid 1000, doubling {doubled}"),
    ))
}

fn green_kernel(_: &SelftestOptions) -> Check {
    let p = FluxProfile::polynomial(1.0, &[0.0, -0.5])?;
    let mut worst = 0.0_f64;
    for alpha in [0.0, 0.5, 1.0] {
        worst = worst.max(green_holomorphy_check(&p, alpha, 20)?);
    }
    Ok((worst <= 1e-6, format!("max relative residual {worst:.2e}")))
}

fn calderon_projector(_: &SelftestOptions) -> Check {
    let mut worst = 0.0_f64;
    for i in 0..64 {
        let t = 0.37 * f64::from(i);
        let (xi, n): (Vec<f64>, Vec<f64>) = if i % 2 == 0 {
            (vec![-t.sin(), t.cos()], vec![t.cos(), t.sin()])
        } else {
            let (c, s) = (t.cos(), t.sin());
            (vec![c * 0.6, s * 0.6, 0.8, 0.0], vec![0.0, 0.0, 0.0, 1.0])
        };
        let q = calderon_symbol(n.len(), &xi, &n)?;
        let trace_err = (q.trace() - Complex64::new(n.len() as f64 / 2.0, 0.0)).norm();
        worst = worst.max(q.idempotence_defect()).max(trace_err);
    }
    Ok((worst <= 1e-12, format!("max idempotence/trace defect {worst:.2e}")))
}

fn ellipticity(_: &SelftestOptions) -> Check {
    let aps = ellipticity_test(&BoundaryOperatorSymbol::aps_pair(), Operator::Full2d, 0, &[])?;
    let (b1, b2) = (0.8, -0.3);
    let local = ellipticity_test(&BoundaryOperatorSymbol::local_pair(b1, b2), Operator::Chiral4d, 2000, &[])?;
    let w = chiral_obstruction_witness(b1, b2)?;
    Ok((
        aps.is_elliptic() && !local.is_elliptic(),
        format!(
            "spectral pair elliptic {}, local chiral pair elliptic {} (witness [{:.4}, {:.4}, {:.4}])",
            aps.is_elliptic(),
            local.is_elliptic(),
            w[0],
            w[1],
            w[2]
        ),
    ))
}

fn config_round_trip(_: &SelftestOptions) -> Check {
    let cfgs = [
        RunConfig {
            radius: 1.5,
            profile: Profile::Polynomial(vec![0.1, -0.3, 0.02]),
            tolerances: Some(ToleranceOverrides {
                quadrature: Some(1e-11),
                zeta_tail: None,
            }),
            output_path: Some("out.json".into()),
        },
        RunConfig {
            radius: 1.0,
            profile: Profile::Tabulated(vec![(0.0, 0.0), (0.3, -0.045), (1.0, -0.5)]),
            tolerances: None,
            output_path: None,
        },
    ];
    for cfg in &cfgs {
        let back = RunConfig::from_json(&cfg.to_json()).map_err(|e| diskdet_core::Error::Invalid(e.to_string()))?;
        if &back != cfg {
            return Ok((false, format!("{cfg:?} came back as {back:?}")));
        }
    }
    Ok((true, format!("{} configs survive parse/serialise/parse", cfgs.len())))
}
