//! Run configuration: a JSON document with a fixed set of keys.

use std::fs;
use std::path::{Path, PathBuf};

use mfc_core::catalog::CatalogEntry;
use mfc_core::spinor::NORM_TOL;
use mfc_core::{Character, FramedCurveSpec, HSpinor};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

fn default_samples() -> usize {
    201
}

fn default_step() -> f64 {
    1e-3
}

fn default_tol() -> f64 {
    1e-6
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Outputs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eval: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flow: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plot: Option<PathBuf>,
}

impl Outputs {
    fn is_empty(&self) -> bool {
        *self == Outputs::default()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub character: String,
    pub gamma: [String; 3],
    pub nu1: [String; 3],
    pub nu2: [String; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<[String; 3]>,
    pub s_min: f64,
    pub s_max: f64,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default = "default_step")]
    pub step: f64,
    #[serde(default)]
    pub theta0: f64,
    #[serde(default = "default_tol")]
    pub tol: f64,
    #[serde(default, skip_serializing_if = "Outputs::is_empty")]
    pub outputs: Outputs,
    /// Initial spinor `(c1.a, c1.b, c2.a, c2.b)` for spinor flows.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spinor0: Option<[f64; 4]>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let cfg: RunConfig =
            serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_entry(e: &CatalogEntry) -> Self {
        let own = |t: [&str; 3]| t.map(str::to_string);
        RunConfig {
            character: e.character.name().to_string(),
            gamma: own(e.gamma),
            nu1: own(e.nu1),
            nu2: own(e.nu2),
            mu: e.mu.map(own),
            s_min: e.s_min,
            s_max: e.s_max,
            samples: default_samples(),
            step: default_step(),
            theta0: 0.0,
            tol: default_tol(),
            outputs: Outputs::default(),
            spinor0: None,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |m: &str| Err(CliError::Config(m.to_string()));
        self.character_kind()?;
        if !(self.s_min.is_finite() && self.s_max.is_finite() && self.s_min < self.s_max) {
            return bad("need finite s_min < s_max");
        }
        if self.samples < 2 {
            return bad("samples ≥ 2 required");
        }
        if !(self.step > 0.0 && self.step.is_finite()) {
            return bad("step > 0 required");
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return bad("tol > 0 required");
        }
        if !self.theta0.is_finite() {
            return bad("theta0 must be finite");
        }
        if let Some(x) = self.spinor0 {
            let d = HSpinor::from_array(x).norm_defect();
            if !(d <= NORM_TOL) {
                return Err(CliError::Config(format!(
                    "spinor0 must satisfy conj(phi)^t phi = 1 (defect {d:e})"
                )));
            }
        }
        Ok(())
    }

    pub fn character_kind(&self) -> Result<Character, CliError> {
        Character::from_name(&self.character).ok_or_else(|| {
            CliError::Config(format!(
                "character must be \"spacelike\" or \"timelike\", got \"{}\"",
                self.character
            ))
        })
    }

    pub fn spec(&self) -> Result<FramedCurveSpec, CliError> {
        fn r(t: &[String; 3]) -> [&str; 3] {
            [t[0].as_str(), t[1].as_str(), t[2].as_str()]
        }
        Ok(FramedCurveSpec::from_strings(
            self.character_kind()?,
            r(&self.gamma),
            r(&self.nu1),
            r(&self.nu2),
            self.mu.as_ref().map(r),
            self.s_min,
            self.s_max,
        )?)
    }

    /// Flow grid with spacing at most `step`.
    pub fn flow_points(&self) -> usize {
        let n = ((self.s_max - self.s_min) / self.step).ceil();
        n as usize + 1
    }
}
