//! Named surfaces, run configuration, and the check-suite driver shared by
//! the CLI and the examples.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::bounds;
use crate::error::{Error, Result};
use crate::henneberg;
use crate::intrinsic::mesh::{build_mesh, IntrinsicMesh};
use crate::intrinsic::verify::{
    verify_chord_arc, verify_laplacian, verify_monotonicity, VerificationReport,
};
use crate::weierstrass::{self, WeierstrassData};

/// A surface selected by name: the built-ins `plane`, `catenoid`,
/// `enneper`, `henneberg:<m>`, or a path to a surface-definition JSON file.
pub struct NamedSurface {
    pub name: String,
    pub data: WeierstrassData,
    /// Set for Henneberg surfaces (enables the oracle/symmetry checks).
    pub henneberg_m: Option<u32>,
}

pub fn load_surface(spec: &str) -> Result<NamedSurface> {
    let (data, m) = match spec {
        "plane" => (weierstrass::plane(), None),
        "catenoid" => (weierstrass::catenoid(), None),
        "enneper" => (weierstrass::enneper(), None),
        _ => {
            if let Some(m_str) = spec.strip_prefix("henneberg:") {
                let m: u32 = m_str
                    .parse()
                    .map_err(|_| Error::Parse(format!("invalid henneberg parameter {m_str:?}")))?;
                (henneberg::make(m)?.data, Some(m))
            } else {
                let text = std::fs::read_to_string(spec).map_err(|e| Error::Io {
                    path: spec.to_string(),
                    source: e,
                })?;
                (WeierstrassData::from_json(&text)?, None)
            }
        }
    };
    Ok(NamedSurface {
        name: spec.to_string(),
        data,
        henneberg_m: m,
    })
}

/// The checks the verification driver knows how to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Monotonicity,
    ChordArc,
    Laplacian,
    Oracle,
    Symmetry,
    Curvature,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::Monotonicity,
        CheckKind::ChordArc,
        CheckKind::Laplacian,
        CheckKind::Oracle,
        CheckKind::Symmetry,
        CheckKind::Curvature,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Monotonicity => "monotonicity",
            CheckKind::ChordArc => "chord-arc",
            CheckKind::Laplacian => "laplacian",
            CheckKind::Oracle => "oracle",
            CheckKind::Symmetry => "symmetry",
            CheckKind::Curvature => "curvature",
        }
    }
}

impl FromStr for CheckKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

/// Configuration for one verification run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub surface: String,
    pub checks: Vec<CheckKind>,
    /// Intrinsic ball radii for the monotonicity check.
    pub radii: Vec<f64>,
    /// Extrinsic radius for the chord-arc check.
    pub big_r: f64,
    pub n_r: usize,
    pub n_theta: usize,
    pub stencil: usize,
    /// Residual tolerance for the Laplacian identity.
    pub laplacian_tol: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            surface: "catenoid".into(),
            checks: vec![CheckKind::Monotonicity],
            radii: vec![0.25, 0.5, 1.0],
            big_r: 1.0,
            n_r: 128,
            n_theta: 256,
            stencil: 2,
            laplacian_tol: 0.05,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.checks.is_empty() {
            return Err(Error::Domain("no checks selected".into()));
        }
        if self.radii.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain("radii must be strictly increasing".into()));
        }
        if self.radii.iter().any(|&r| r <= 0.0) || self.big_r <= 0.0 {
            return Err(Error::Domain("radii must be positive".into()));
        }
        Ok(())
    }
}

/// The suite output: an envelope around the individual reports. Two runs
/// with the same config agree byte for byte except for `timestamp`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub version: String,
    pub timestamp: u64,
    pub surface: String,
    pub pass: bool,
    pub reports: Vec<VerificationReport>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("suite report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,surface,measured,bound,margin,resolution,pass\n");
        for r in &self.reports {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                r.check, r.surface, r.measured, r.bound, r.margin, r.resolution, r.pass
            ));
        }
        out
    }
}

fn unix_timestamp() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Runs the configured checks and assembles the suite report.
pub fn run_checks(config: &RunConfig) -> Result<SuiteReport> {
    config.validate()?;
    let surface = load_surface(&config.surface)?;
    let mut reports = Vec::new();

    let needs_mesh = config.checks.iter().any(|c| {
        matches!(
            c,
            CheckKind::Monotonicity | CheckKind::ChordArc | CheckKind::Laplacian
        )
    });
    let mesh: Option<IntrinsicMesh> = if needs_mesh {
        Some(build_mesh(
            &surface.data,
            config.n_r,
            config.n_theta,
            config.stencil,
        )?)
    } else {
        None
    };
    let base_vertex = mesh
        .as_ref()
        .map(|m| m.nearest_vertex(surface.data.base_point()));

    for &check in &config.checks {
        match check {
            CheckKind::Monotonicity => {
                let m = mesh.as_ref().expect("mesh built");
                reports.extend(verify_monotonicity(
                    m,
                    base_vertex.unwrap(),
                    &config.radii,
                    &surface.name,
                )?);
            }
            CheckKind::ChordArc => {
                let m = mesh.as_ref().expect("mesh built");
                let profile = surface.data.topology_profile()?;
                let index = bounds::index_lower_bound(&profile)?;
                reports.extend(verify_chord_arc(
                    m,
                    base_vertex.unwrap(),
                    config.big_r,
                    index,
                    profile.branching_order,
                    &surface.name,
                )?);
            }
            CheckKind::Laplacian => {
                let m = mesh.as_ref().expect("mesh built");
                reports.push(verify_laplacian(m, config.laplacian_tol, &surface.name)?);
            }
            CheckKind::Oracle => {
                let m = surface.henneberg_m.ok_or_else(|| {
                    Error::Domain("the oracle check applies to henneberg:<m> surfaces".into())
                })?;
                reports.push(henneberg::oracle_match(&henneberg::make(m)?, 1000)?);
            }
            CheckKind::Symmetry => {
                let m = surface.henneberg_m.ok_or_else(|| {
                    Error::Domain("the symmetry check applies to henneberg:<m> surfaces".into())
                })?;
                reports.push(henneberg::symmetry_check(&henneberg::make(m)?, 256)?);
            }
            CheckKind::Curvature => {
                reports.push(curvature_check(&surface)?);
            }
        }
    }

    let pass = reports.iter().all(|r| r.pass);
    Ok(SuiteReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        timestamp: unix_timestamp(),
        surface: config.surface.clone(),
        pass,
        reports,
    })
}

/// Total curvature vs `-4π·deg(g)` (halved on quotients), 2% tolerance.
fn curvature_check(surface: &NamedSurface) -> Result<VerificationReport> {
    let data = &surface.data;
    let g = data.g();
    let deg = g.max_exp().unwrap_or(0).max(0) + (-g.min_exp().unwrap_or(0)).max(0);
    let factor = if data.quotient() { 0.5 } else { 1.0 };
    let expected = -4.0 * std::f64::consts::PI * deg as f64 * factor;
    let est = data.total_curvature(1024)?;
    let pass = if expected == 0.0 {
        est.value.abs() < 1e-10
    } else {
        ((est.value - expected) / expected).abs() < 0.02 && !est.domain_too_small
    };
    Ok(VerificationReport {
        check: "total-curvature".into(),
        surface: surface.name.clone(),
        params: json!({
            "tail_fraction": est.tail_fraction,
            "gauss_map_degree": deg,
            "quotient": data.quotient(),
        }),
        measured: est.value,
        bound: expected,
        margin: if expected == 0.0 {
            -est.value.abs()
        } else {
            0.02 - ((est.value - expected) / expected).abs()
        },
        resolution: "quadrature 1024x1024".into(),
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn load_builtin_surfaces() {
        for name in ["plane", "catenoid", "enneper", "henneberg:3"] {
            let s = load_surface(name).unwrap();
            assert_eq!(s.name, name);
        }
        assert!(load_surface("henneberg:2").is_err());
        assert!(load_surface("/nonexistent/path.json").is_err());
    }

    #[test]
    fn check_kind_parsing() {
        assert_eq!("chord-arc".parse::<CheckKind>().unwrap(), CheckKind::ChordArc);
        assert!("bogus".parse::<CheckKind>().is_err());
    }

    #[test]
    fn config_validation() {
        let mut c = RunConfig::default();
        c.radii = vec![1.0, 0.5];
        assert!(c.validate().is_err());
    }

    #[test]
    fn curvature_suite_on_catenoid() {
        let config = RunConfig {
            surface: "catenoid".into(),
            checks: vec![CheckKind::Curvature],
            ..RunConfig::default()
        };
        let report = run_checks(&config).unwrap();
        assert!(report.pass, "{}", report.to_json());
        let want = -4.0 * std::f64::consts::PI;
        assert!((report.reports[0].measured - want).abs() / want.abs() < 0.02);
    }

    #[test]
    fn determinism_modulo_timestamp() {
        let config = RunConfig {
            surface: "henneberg:1".into(),
            checks: vec![CheckKind::Oracle, CheckKind::Symmetry],
            ..RunConfig::default()
        };
        let mut a = run_checks(&config).unwrap();
        let mut b = run_checks(&config).unwrap();
        a.timestamp = 0;
        b.timestamp = 0;
        assert_eq!(a.to_json(), b.to_json());
    }
}
