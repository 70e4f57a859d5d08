//! Run configuration: the flux profile, optional tolerance overrides and the
//! output destination, read from JSON.

use std::path::{Path, PathBuf};

use diskdet_core::{FluxProfile, Tolerances};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Name of the environment variable that overrides the default tolerances.
pub const TOL_ENV: &str = "DISKDET_TOL";

/// The potential `φ(r)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Profile {
    /// Coefficients of `φ` in powers of `r²`, constant term first.
    Polynomial(Vec<f64>),
    /// `(r, φ)` nodes from `r = 0` to `r = R`, strictly increasing in `r`.
    Tabulated(Vec<(f64, f64)>),
}

/// Per-run tolerance overrides. Absent fields keep the value from
/// `DISKDET_TOL` or the library default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceOverrides {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quadrature: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta_tail: Option<f64>,
}

impl ToleranceOverrides {
    fn apply(&self, tol: &mut Tolerances) {
        if let Some(q) = self.quadrature {
            tol.quadrature = q;
        }
        if let Some(z) = self.zeta_tail {
            tol.zeta_tail = z;
        }
    }

    fn validate(&self, prefix: &str) -> Result<(), CliError> {
        for (name, value) in [("quadrature", self.quadrature), ("zeta_tail", self.zeta_tail)] {
            if let Some(v) = value {
                if !(v > 0.0 && v < 1.0) {
                    return Err(CliError::config(
                        format!("{prefix}{name}"),
                        format!("tolerance must lie in (0, 1), got {v}"),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Parses the `DISKDET_TOL` syntax: either a single number applied to
    /// every tolerance, or a comma-separated `name=value` list.
    pub fn from_env_value(raw: &str) -> Result<Self, CliError> {
        let bad = |msg: String| CliError::config(TOL_ENV, msg);
        let raw = raw.trim();
        if let Ok(v) = raw.parse::<f64>() {
            let o = ToleranceOverrides {
                quadrature: Some(v),
                zeta_tail: Some(v),
            };
            o.validate(&format!("{TOL_ENV}:"))?;
            return Ok(o);
        }
        let mut o = ToleranceOverrides::default();
        for item in raw.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, value) = item
                .split_once('=')
                .ok_or_else(|| bad(format!("expected a number or name=value pairs, got `{item}`")))?;
            let v: f64 = value
                .trim()
                .parse()
                .map_err(|_| bad(format!("`{}` is not a number", value.trim())))?;
            match name.trim() {
                "quadrature" => o.quadrature = Some(v),
                "zeta_tail" => o.zeta_tail = Some(v),
                other => return Err(bad(format!("unknown tolerance `{other}`"))),
            }
        }
        o.validate(&format!("{TOL_ENV}:"))?;
        Ok(o)
    }
}

/// Resolves tolerances with the precedence default < environment < config.
pub fn resolve_tolerances(
    env: Option<&str>,
    config: Option<&ToleranceOverrides>,
) -> Result<Tolerances, CliError> {
    let mut tol = Tolerances::default();
    if let Some(raw) = env {
        ToleranceOverrides::from_env_value(raw)?.apply(&mut tol);
    }
    if let Some(c) = config {
        c.apply(&mut tol);
    }
    Ok(tol)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub radius: f64,
    pub profile: Profile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerances: Option<ToleranceOverrides>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    /// Parses and validates a config. Errors name the offending field.
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let cfg: RunConfig = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let field = if path == "." { "config".to_string() } else { path };
            CliError::config(field, e.into_inner().to_string())
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.to_path_buf(),
            source: e,
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serialises")
    }

    fn validate(&self) -> Result<(), CliError> {
        if !(self.radius > 0.0) || !self.radius.is_finite() {
            return Err(CliError::config("radius", format!("must be positive and finite, got {}", self.radius)));
        }
        if let Some(t) = &self.tolerances {
            t.validate("tolerances.")?;
        }
        self.flux_profile().map(|_| ())
    }

    /// The core profile object described by this config.
    pub fn flux_profile(&self) -> Result<FluxProfile, CliError> {
        let built = match &self.profile {
            Profile::Polynomial(c) => FluxProfile::polynomial(self.radius, c),
            Profile::Tabulated(nodes) => FluxProfile::tabulated(self.radius, nodes),
        };
        let field = match &self.profile {
            Profile::Polynomial(_) => "profile.polynomial",
            Profile::Tabulated(_) => "profile.tabulated",
        };
        built.map_err(|e| CliError::config(field, e.to_string()))
    }

    pub fn tolerances(&self, env: Option<&str>) -> Result<Tolerances, CliError> {
        resolve_tolerances(env, self.tolerances.as_ref())
    }
}
