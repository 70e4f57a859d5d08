//! Subcommand implementations. Each returns the rendered body; writing it out
//! is left to the caller.

use std::path::Path;

use diskdet_core::determinant::{index_for_kappa, index_report, log_det_ratio_route, log_det_with};
use diskdet_core::oracle::{bc_type, free_spectrum_exact, free_spectrum_fd_with, BcType, SpectrumReport};
use diskdet_core::symbols::{
    calderon_symbol, chiral_obstruction_witness, ellipticity_test, rank, BoundaryOperatorSymbol, Ellipticity,
    Operator,
};
use diskdet_core::zeta_eta::{continued_at_zero, eta_zero, eta_zero_numeric, f_prime_zero_with};
use diskdet_core::{BesselZeroTable, EtaData, Tolerances, ZetaValues};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::config::{resolve_tolerances, RunConfig};
use crate::error::CliError;
use crate::selftest::{selftest, SelftestOptions};
use crate::{Command, Format, IndexArgs, Rendered, SymbolCommand};

pub(crate) fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialise");
    s.push('\n');
    s
}

fn csv<R: Serialize>(rows: impl IntoIterator<Item = R>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("csv rows serialise");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is utf-8")
}

fn ok(body: String) -> Result<Rendered, CliError> {
    Ok(Rendered {
        body,
        output_path: None,
        failure: None,
    })
}

pub fn execute(cmd: &Command, env_tol: Option<&str>) -> Result<Rendered, CliError> {
    match cmd {
        Command::Det { config, ratio_route } => det(config, *ratio_route, env_tol),
        Command::Index(args) => index(args),
        Command::Eta { kappa, cutoff } => ok(json(&eta(*kappa, *cutoff)?)),
        Command::Zeta { nu, continued } => {
            let tol = resolve_tolerances(env_tol, None)?;
            ok(json(&zeta(*nu, *continued, &tol)?))
        }
        Command::Zeros { nu, count, format } => zeros(*nu, *count, *format),
        Command::Spectrum {
            n,
            k,
            radius,
            count,
            format,
        } => spectrum(*n, *k, *radius, *count, *format),
        Command::Symbol(sub) => symbol(sub),
        Command::Oracle {
            n,
            k,
            radius,
            grid,
            count,
            require,
            format,
        } => oracle(*n, *k, *radius, *grid, *count, *require, *format),
        Command::Selftest { perturb_zeros, json: as_json } => {
            let report = selftest(&SelftestOptions {
                perturb_zeros: *perturb_zeros,
            });
            let body = if *as_json { json(&report) } else { report.to_text() };
            Ok(Rendered {
                body,
                output_path: None,
                failure: report.failure(),
            })
        }
    }
}

/// Output of `det`. Field order is part of the output format.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DetOutput {
    pub kappa: f64,
    pub k: i64,
    pub bulk: f64,
    pub zero_mode_part: f64,
    pub free_re: f64,
    pub free_im: f64,
    pub total_re: f64,
    pub total_im: f64,
    pub index: [i64; 3],
}

fn det(config: &Path, ratio_route: bool, env_tol: Option<&str>) -> Result<Rendered, CliError> {
    let cfg = RunConfig::from_file(config)?;
    let tol = cfg.tolerances(env_tol)?;
    let profile = cfg.flux_profile()?;
    let d = if ratio_route {
        log_det_ratio_route(&profile)?
    } else {
        log_det_with(&profile, &tol)?
    };
    // `x + 0.0` maps -0.0 to 0.0 so the free field prints plain zeros
    let out = DetOutput {
        kappa: d.kappa + 0.0,
        k: d.k,
        bulk: d.bulk + 0.0,
        zero_mode_part: d.zero_mode_part + 0.0,
        free_re: d.free_quotient_part.re + 0.0,
        free_im: d.free_quotient_part.im + 0.0,
        total_re: d.total.re + 0.0,
        total_im: d.total.im + 0.0,
        index: index_report(&profile)?.as_array(),
    };
    Ok(Rendered {
        body: json(&out),
        output_path: cfg.output_path.clone(),
        failure: None,
    })
}

#[derive(Debug, Serialize)]
struct IndexOutput {
    index: [i64; 3],
}

fn index(args: &IndexArgs) -> Result<Rendered, CliError> {
    let (report, output_path) = match (&args.kappa, &args.config) {
        (Some(kappa), _) => (index_for_kappa(*kappa)?, None),
        (None, Some(path)) => {
            let cfg = RunConfig::from_file(path)?;
            (index_report(&cfg.flux_profile()?)?, cfg.output_path.clone())
        }
        (None, None) => return Err(CliError::Usage("index needs --kappa or --config".into())),
    };
    Ok(Rendered {
        body: json(&IndexOutput {
            index: report.as_array(),
        }),
        output_path,
        failure: None,
    })
}

#[derive(Debug, Serialize)]
struct EtaOutput {
    #[serde(flatten)]
    closed: EtaData,
    eta0_numeric: f64,
    cutoff: usize,
}

fn eta(kappa: f64, cutoff: usize) -> Result<EtaOutput, CliError> {
    let closed = eta_zero(kappa)?;
    Ok(EtaOutput {
        closed,
        eta0_numeric: eta_zero_numeric(kappa, cutoff)?,
        cutoff,
    })
}

#[derive(Debug, Serialize)]
struct ZetaOutput {
    #[serde(flatten)]
    values: ZetaValues,
    #[serde(skip_serializing_if = "Option::is_none")]
    continued: Option<Continued>,
}

#[derive(Debug, Serialize)]
struct Continued {
    zeros: usize,
    f0: f64,
    fprime0: f64,
}

fn zeta(nu: f64, continued: Option<usize>, tol: &Tolerances) -> Result<ZetaOutput, CliError> {
    let values = f_prime_zero_with(nu, tol)?;
    let continued = match continued {
        Some(count) => {
            let table = BesselZeroTable::new(nu, count)?;
            let (f0, fprime0) = continued_at_zero(&table)?;
            Some(Continued {
                zeros: count,
                f0,
                fprime0,
            })
        }
        None => None,
    };
    Ok(ZetaOutput { values, continued })
}

#[derive(Debug, Serialize)]
struct ZeroRow {
    nu: f64,
    l: usize,
    zero: f64,
}

#[derive(Debug, Serialize)]
struct ZerosOutput<'a> {
    nu: f64,
    zeros: &'a [f64],
}

fn zeros(nu: f64, count: usize, format: Format) -> Result<Rendered, CliError> {
    let table = BesselZeroTable::new(nu, count)?;
    ok(match format {
        Format::Json => json(&ZerosOutput {
            nu,
            zeros: table.zeros(),
        }),
        Format::Csv => csv(table.zeros().iter().enumerate().map(|(i, &zero)| ZeroRow { nu, l: i + 1, zero })),
    })
}

#[derive(Debug, Serialize)]
struct SpectrumOutput {
    n: i64,
    k: i64,
    bc_type: BcType,
    radius: f64,
    eigenvalues: Vec<f64>,
}

#[derive(Debug, Serialize)]
struct SpectrumRow {
    n: i64,
    l: usize,
    eigenvalue: f64,
}

fn spectrum(n: i64, k: i64, radius: f64, count: usize, format: Format) -> Result<Rendered, CliError> {
    let eigenvalues = free_spectrum_exact(n, k, radius, count)?;
    ok(match format {
        Format::Json => json(&SpectrumOutput {
            n,
            k,
            bc_type: bc_type(n, k),
            radius,
            eigenvalues,
        }),
        Format::Csv => csv(eigenvalues.iter().enumerate().map(|(i, &eigenvalue)| SpectrumRow {
            n,
            l: i + 1,
            eigenvalue,
        })),
    })
}

#[derive(Debug, Serialize)]
struct OracleRow {
    n: i64,
    l: usize,
    exact: f64,
    fd: f64,
    rel_err: f64,
}

fn oracle_rows(rep: &SpectrumReport) -> Vec<OracleRow> {
    rep.positive()
        .iter()
        .zip(&rep.reference)
        .zip(&rep.rel_errors)
        .enumerate()
        .map(|(i, ((&fd, &exact), &rel_err))| OracleRow {
            n: rep.n,
            l: i + 1,
            exact,
            fd,
            rel_err,
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn oracle(
    n: i64,
    k: i64,
    radius: f64,
    grid: usize,
    count: usize,
    require: Option<f64>,
    format: Format,
) -> Result<Rendered, CliError> {
    let rep = free_spectrum_fd_with(n, k, radius, grid, count)?;
    let body = match format {
        Format::Json => json(&rep),
        Format::Csv => csv(oracle_rows(&rep)),
    };
    let failure = match require {
        Some(tol) => rep.require(tol).err().map(CliError::from),
        None => None,
    };
    Ok(Rendered {
        body,
        output_path: None,
        failure,
    })
}

/// A complex matrix as rows of `[re, im]` pairs.
fn matrix_rows(m: &DMatrix<Complex64>) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|r| (0..m.ncols()).map(|c| [m[(r, c)].re, m[(r, c)].im]).collect())
        .collect()
}

#[derive(Debug, Serialize)]
struct CalderonOutput {
    dim: usize,
    xi: Vec<f64>,
    normal: Vec<f64>,
    rank: usize,
    trace: [f64; 2],
    idempotence_defect: f64,
    entries: Vec<Vec<[f64; 2]>>,
    chiral_block: Vec<Vec<[f64; 2]>>,
    chiral_rank: usize,
}

#[derive(Debug, Serialize)]
struct EllipticityOutput {
    operator: Operator,
    boundary_condition: String,
    #[serde(flatten)]
    result: Ellipticity,
}

#[derive(Debug, Serialize)]
struct WitnessOutput {
    beta: [f64; 2],
    xi: [f64; 3],
    rank_bq: usize,
}

fn symbol(cmd: &SymbolCommand) -> Result<Rendered, CliError> {
    match cmd {
        SymbolCommand::Calderon { dim, xi, normal } => {
            let q = calderon_symbol(*dim, xi, normal)?;
            let block = q.chiral_block();
            let t = q.trace();
            ok(json(&CalderonOutput {
                dim: *dim,
                xi: xi.clone(),
                normal: normal.clone(),
                rank: q.rank(),
                trace: [t.re, t.im],
                idempotence_defect: q.idempotence_defect(),
                entries: matrix_rows(q.entries()),
                chiral_rank: rank(&block),
                chiral_block: matrix_rows(&block),
            }))
        }
        SymbolCommand::Ellipticity {
            operator,
            beta,
            samples,
        } => {
            let op: Operator = (*operator).into();
            let (b, label) = match beta.as_deref() {
                Some([b1, b2]) => (
                    BoundaryOperatorSymbol::local_pair(*b1, *b2),
                    format!("local beta = ({b1}, {b2})"),
                ),
                Some(_) => return Err(CliError::Usage("--beta takes exactly two values".into())),
                None => (BoundaryOperatorSymbol::aps_pair(), "spectral (APS) pair".to_string()),
            };
            let result = ellipticity_test(&b, op, *samples, &[])?;
            ok(json(&EllipticityOutput {
                operator: op,
                boundary_condition: label,
                result,
            }))
        }
        SymbolCommand::Witness { beta } => {
            let [b1, b2] = beta.as_slice() else {
                return Err(CliError::Usage("--beta takes exactly two values".into()));
            };
            let xi = chiral_obstruction_witness(*b1, *b2)?;
            let q = diskdet_core::symbols::q_chiral(xi)?;
            let b = BoundaryOperatorSymbol::local_pair(*b1, *b2).at(&xi)?;
            let scale = b.norm() * q.norm();
            let bq = b * q;
            Ok(Rendered {
                body: json(&WitnessOutput {
                    beta: [*b1, *b2],
                    xi,
                    rank_bq: diskdet_core::symbols::rank_with_scale(&bq, scale),
                }),
                output_path: None,
                failure: None,
            })
        }
    }
}
