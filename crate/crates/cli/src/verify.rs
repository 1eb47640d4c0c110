use std::fmt::Write as _;

use mfc_core::adapted_frame::{frenet_data_at, theta_bishop};
use mfc_core::framed_curve::{framed_conditions, propagate_frame};
use mfc_core::hypnum::nan_max;
use mfc_core::ode::linspace;
use mfc_core::spinor_ode::{
    cross_formulation_check, propagate_spinor, relation_phi_upsilon, MixedFormulation, MixedInput,
};
use mfc_core::{Character, Error, FramedCurveSpec, HyperbolicNumber, OdeKind};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::flow::{self, payload_at, BishopAngle};
use crate::table::num;

/// Finite-difference step for the frame-equation residual.
const FD_STEP: f64 = 1e-5;

struct Check {
    name: String,
    value: f64,
    detail: String,
    gate: bool,
}

#[derive(Default)]
pub struct Report {
    checks: Vec<Check>,
    notes: Vec<String>,
}

impl Report {
    fn gate(&mut self, name: impl Into<String>, value: f64, detail: String) {
        self.checks.push(Check {
            name: name.into(),
            value,
            detail,
            gate: true,
        });
    }

    fn info(&mut self, name: impl Into<String>, value: f64, detail: String) {
        self.checks.push(Check {
            name: name.into(),
            value,
            detail,
            gate: false,
        });
    }

    fn failure(&mut self, name: impl Into<String>, e: &Error) {
        self.gate(name, f64::INFINITY, format!("error: {e}"));
    }

    /// First gating check above `tol`.
    pub fn first_failure(&self, tol: f64) -> Option<&str> {
        self.checks
            .iter()
            .find(|c| c.gate && !(c.value <= tol))
            .map(|c| c.name.as_str())
    }

    pub fn render(&self, tol: f64) -> String {
        let mut out = String::new();
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        for c in &self.checks {
            let status = match (c.gate, c.value <= tol) {
                (false, _) => "INFO",
                (true, true) => "PASS",
                (true, false) => "FAIL",
            };
            let _ = write!(out, "{status} {}: {}", c.name, num(c.value));
            if !c.detail.is_empty() {
                let _ = write!(out, " ({})", c.detail);
            }
            out.push('\n');
        }
        match self.first_failure(tol) {
            None => {
                let _ = writeln!(out, "result: all checks within tol {}", num(tol));
            }
            Some(n) => {
                let _ = writeln!(out, "result: failed, first failing check: {n}");
            }
        }
        out
    }
}

fn kinds_of(c: Character) -> [OdeKind; 3] {
    match c {
        Character::Spacelike => [
            OdeKind::SpacelikeGeneral,
            OdeKind::SpacelikeAdaptedBishop,
            OdeKind::SpacelikeAdaptedFrenet,
        ],
        Character::Timelike => [
            OdeKind::TimelikeGeneral,
            OdeKind::TimelikeAdaptedBishop,
            OdeKind::TimelikeAdaptedFrenet,
        ],
    }
}

fn frame_checks(r: &mut Report, spec: &FramedCurveSpec, cfg: &RunConfig) -> Result<(), Error> {
    let conditions = framed_conditions(spec, cfg.samples)?;
    r.notes.push(format!("orientation: eps = {}", conditions.orientation));
    if let Some(d) = conditions.delta {
        r.notes.push(format!("delta = {d:+}"));
    }
    for c in &conditions.conditions {
        r.gate(c.condition.clone(), c.max_defect, format!("worst at s = {}", num(c.s_at_max)));
    }
    let grid = linspace(cfg.s_min, cfg.s_max, cfg.samples);
    let (mut gram, mut fd) = (0.0, 0.0);
    for (i, &s) in grid.iter().enumerate() {
        gram = nan_max(gram, spec.frame_at(s)?.triad().gram_defect(spec.character));
        if i > 0 && i + 1 < grid.len() {
            fd = nan_max(fd, spec.frame_ode_residual(s, FD_STEP)?);
        }
    }
    r.gate("gram defect", gram, String::new());
    r.gate("frame ODE residual", fd, format!("central differences, h = {}", num(FD_STEP)));
    Ok(())
}

fn spinor_checks(r: &mut Report, spec: &FramedCurveSpec, cfg: &RunConfig) -> Result<(), Error> {
    let character = spec.character;
    let [general, bishop, frenet] = kinds_of(character);
    let grid = linspace(cfg.s_min, cfg.s_max, cfg.flow_points());
    let angle = BishopAngle::new(spec, &grid, cfg.theta0)?;
    let (phi0, note) = flow::initial_spinor(cfg, spec, general)?;
    if let Some(n) = &note {
        r.notes.push(n.clone());
    }

    let frenet_ok = grid.iter().try_for_each(|&s| frenet_data_at(spec, s).map(|_| ()));
    if let Err(e) = &frenet_ok {
        r.notes.push(format!("Frenet-type checks skipped: {e}"));
    }

    // Norm conservation along each applicable flow.
    let mut flows = Vec::new();
    for kind in [general, bishop, frenet] {
        if kind == frenet && frenet_ok.is_err() {
            continue;
        }
        let start = match kind {
            k if k == bishop => phi0.scale(HyperbolicNumber::exp_j(-0.5 * cfg.theta0)),
            k if k == frenet => phi0.scale(HyperbolicNumber::exp_j(-0.5 * frenet_data_at(spec, cfg.s_min)?.theta)),
            _ => phi0,
        };
        let name = format!("spinor norm drift ({})", kind.name());
        match propagate_spinor(kind, |s| payload_at(spec, kind, &angle, s), &start, &grid) {
            Ok(out) => {
                let d = out.iter().map(|x| x.norm_defect).fold(0.0, nan_max);
                r.gate(name, d, format!("step {}", num(cfg.step)));
                flows.push((kind, out));
            }
            Err(e) => r.failure(name, &e),
        }
    }

    // φ = ±e^{jΘ/2}Υ between the general flow and each adapted flow.
    let general_flow = flows.iter().find(|f| f.0 == general).map(|f| &f.1);
    if let (Character::Spacelike, Some(phis)) = (character, general_flow) {
        for (kind, ups) in flows.iter().filter(|f| f.0 != general) {
            let mut worst: f64 = 0.0;
            for (a, b) in phis.iter().zip(ups) {
                let theta = if *kind == bishop {
                    angle.at(a.s)
                } else {
                    frenet_data_at(spec, a.s)?.theta
                };
                let rel = relation_phi_upsilon(&a.spinor, &b.spinor, theta);
                worst = nan_max(worst, nan_max(nan_max(rel.best(), rel.mate), rel.bilinear));
            }
            r.gate(format!("phi/upsilon relation ({})", kind.name()), worst, String::new());
        }
    }

    // Pointwise agreement of general and adapted formulations.
    let samples = linspace(cfg.s_min, cfg.s_max, cfg.samples);
    let theta = theta_bishop(|s| Ok(spec.curvatures_at(s)?.l1), samples[0], cfg.theta0, &samples)?;
    let mut worst: f64 = 0.0;
    for (i, &s) in samples.iter().enumerate() {
        let k = spec.curvatures_at(s)?;
        for form in MixedFormulation::ALL.into_iter().filter(|f| f.character() == character) {
            let (th, rate) = if !form.is_frenet() {
                (theta[i].1, k.l1)
            } else if frenet_ok.is_ok() {
                let d = frenet_data_at(spec, s)?;
                (d.theta, d.theta_prime)
            } else {
                continue;
            };
            let input = MixedInput {
                l1: k.l1,
                l2: k.l2,
                l3: k.l3,
                theta: th,
                theta_prime: rate,
            };
            worst = nan_max(worst, cross_formulation_check(form, &input, &phi0)?);
        }
    }
    r.gate("cross-formulation residual", worst, String::new());

    // Reported only: spinor triads of generic spinors are not orthonormal, so
    // the frame flow and the reconstructed spinor flow need not agree.
    if let (None, None, Some(flow)) = (&note, cfg.spinor0, general_flow) {
        let init = spec.frame_at(cfg.s_min)?.triad();
        let frames = propagate_frame(general, |s| spec.general_payload(s), &init, &grid);
        let spinor_frames = mfc_core::spinor_ode::reconstruct_frames(flow, character);
        match (frames, spinor_frames) {
            (Ok(a), Ok(b)) => {
                let d = a.iter().zip(&b).map(|(x, y)| x.triad.dist(&y.triad)).fold(0.0, nan_max);
                r.info("spinor/frame commutation", d, String::new());
            }
            (Err(e), _) | (_, Err(e)) => r.info("spinor/frame commutation", f64::NAN, format!("error: {e}")),
        }
    }
    Ok(())
}

pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    let spec = cfg.spec()?;
    let mut r = Report::default();
    if let Err(e) = frame_checks(&mut r, &spec, cfg) {
        r.failure("frame checks", &e);
        return Ok(r);
    }
    if let Err(e) = spinor_checks(&mut r, &spec, cfg) {
        r.failure("spinor checks", &e);
    }
    Ok(r)
}
