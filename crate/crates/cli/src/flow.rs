use mfc_core::adapted_frame::{bishop_curvatures, frenet_data_at, rotate_triad, theta_bishop};
use mfc_core::ode::linspace;
use mfc_core::spinor::spinor_from_frame;
use mfc_core::spinor_ode::{propagate_spinor, reconstruct_frames, SpinorFlowSample};
use mfc_core::{Branch, CurvaturePayload, Error, FramedCurveSpec, HSpinor, HyperbolicNumber, OdeKind, TriadSample};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::table::num;

pub const HEADER: [&str; 15] = [
    "s", "c1a", "c1b", "c2a", "c2b", "norm_defect", "mu1", "mu2", "mu3", "n11", "n12", "n13", "n21", "n22", "n23",
];

/// Bishop angle on a grid of half steps, so RK4 stage points are grid points.
pub struct BishopAngle {
    a: f64,
    b: f64,
    values: Vec<f64>,
}

impl BishopAngle {
    pub fn new(spec: &FramedCurveSpec, grid: &[f64], theta0: f64) -> Result<Self, Error> {
        let (a, b) = (grid[0], grid[grid.len() - 1]);
        let half = linspace(a, b, 2 * grid.len() - 1);
        let values = theta_bishop(|s| Ok(spec.curvatures_at(s)?.l1), a, theta0, &half)?
            .into_iter()
            .map(|x| x.1)
            .collect();
        Ok(Self { a, b, values })
    }

    pub fn at(&self, s: f64) -> f64 {
        let n = self.values.len() - 1;
        let i = ((s - self.a) / (self.b - self.a) * n as f64).round();
        self.values[(i.max(0.0) as usize).min(n)]
    }
}

/// Curvature payload for `kind` along the spec's frame.
pub fn payload_at(
    spec: &FramedCurveSpec,
    kind: OdeKind,
    angle: &BishopAngle,
    s: f64,
) -> Result<CurvaturePayload, Error> {
    match kind {
        OdeKind::SpacelikeGeneral | OdeKind::TimelikeGeneral => spec.general_payload(s),
        OdeKind::SpacelikeAdaptedBishop | OdeKind::TimelikeAdaptedBishop => {
            let k = spec.curvatures_at(s)?;
            let (l2b, l3b) = bishop_curvatures(k.l2, k.l3, angle.at(s), spec.character);
            Ok(CurvaturePayload::Bishop { l2b, l3b })
        }
        OdeKind::SpacelikeAdaptedFrenet | OdeKind::TimelikeAdaptedFrenet => {
            let d = frenet_data_at(spec, s)?;
            Ok(CurvaturePayload::Frenet { p: d.p, q: d.q })
        }
    }
}

fn is_frenet(kind: OdeKind) -> bool {
    matches!(kind, OdeKind::SpacelikeAdaptedFrenet | OdeKind::TimelikeAdaptedFrenet)
}

fn is_bishop(kind: OdeKind) -> bool {
    matches!(kind, OdeKind::SpacelikeAdaptedBishop | OdeKind::TimelikeAdaptedBishop)
}

/// Starting spinor: `spinor0` if configured, else the spinor of the (adapted)
/// frame at `s_min` when representable, else `(1, 0)`. The note explains a
/// fallback.
pub fn initial_spinor(
    cfg: &RunConfig,
    spec: &FramedCurveSpec,
    kind: OdeKind,
) -> Result<(HSpinor, Option<String>), Error> {
    if let Some(x) = cfg.spinor0 {
        return Ok((HSpinor::from_array(x), None));
    }
    let s0 = cfg.s_min;
    let triad = spec.frame_at(s0)?.triad();
    let triad = if is_bishop(kind) {
        rotate_triad(&triad, cfg.theta0, spec.character)
    } else if is_frenet(kind) {
        rotate_triad(&triad, frenet_data_at(spec, s0)?.theta, spec.character)
    } else {
        triad
    };
    let basis = HSpinor::new(HyperbolicNumber::ONE, HyperbolicNumber::ZERO);
    match spinor_from_frame(&triad, spec.character, Branch::Plus) {
        Ok(phi) if phi.norm_defect() <= mfc_core::spinor::NORM_TOL => Ok((phi, None)),
        Ok(_) => Ok((basis, Some("spinor of the initial frame is not normalized; starting from (1, 0)".into()))),
        Err(e) => Ok((basis, Some(format!("initial frame has no spinor ({e}); starting from (1, 0)")))),
    }
}

pub struct Flow {
    pub samples: Vec<SpinorFlowSample>,
    pub frames: Vec<TriadSample>,
    pub note: Option<String>,
}

pub fn flow(cfg: &RunConfig, spec: &FramedCurveSpec, kind: OdeKind) -> Result<Flow, Error> {
    let grid = linspace(cfg.s_min, cfg.s_max, cfg.flow_points());
    let angle = BishopAngle::new(spec, &grid, cfg.theta0)?;
    let (phi0, note) = initial_spinor(cfg, spec, kind)?;
    let samples = propagate_spinor(kind, |s| payload_at(spec, kind, &angle, s), &phi0, &grid)?;
    let frames = reconstruct_frames(&samples, spec.character)?;
    Ok(Flow { samples, frames, note })
}

pub fn parse_kind(name: Option<&str>, cfg: &RunConfig) -> Result<OdeKind, CliError> {
    let character = cfg.character_kind()?;
    let kind = match name {
        None => character.general_kind(),
        Some(n) => OdeKind::from_name(n).ok_or_else(|| {
            let known: Vec<_> = OdeKind::ALL.iter().map(|k| k.name()).collect();
            CliError::Config(format!("unknown kind \"{n}\"; expected one of {}", known.join(", ")))
        })?,
    };
    if kind.character() != character {
        return Err(CliError::Config(format!(
            "kind {} does not apply to a {} curve",
            kind.name(),
            character.name()
        )));
    }
    Ok(kind)
}

pub fn run(cfg: &RunConfig, kind: OdeKind) -> Result<Vec<Vec<String>>, CliError> {
    let spec = cfg.spec()?;
    let f = flow(cfg, &spec, kind)?;
    if let Some(n) = &f.note {
        eprintln!("warning: {n}");
    }
    Ok(f
        .samples
        .iter()
        .zip(&f.frames)
        .map(|(x, t)| {
            let mut row = vec![x.s];
            row.extend(x.spinor.to_array());
            row.push(x.norm_defect);
            for v in t.triad.vectors() {
                row.extend(v.0);
            }
            row.into_iter().map(num).collect()
        })
        .collect())
}
