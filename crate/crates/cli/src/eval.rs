use std::collections::BTreeMap;

use mfc_core::adapted_frame::{bishop_curvatures, frenet_data_at, theta_bishop};
use mfc_core::framed_curve::validate_framed;
use mfc_core::ode::linspace;
use mfc_core::{Error, FramedCurveSpec};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::table::num;

pub const HEADER: [&str; 24] = [
    "s", "g1", "g2", "g3", "mu1", "mu2", "mu3", "n11", "n12", "n13", "n21", "n22", "n23", "delta", "l1", "l2", "l3",
    "alpha", "theta", "p", "q", "l2b", "l3b", "gram_defect",
];

/// Counts of non-computable fields, reported once per reason.
#[derive(Default)]
pub struct Warnings {
    seen: BTreeMap<String, (usize, f64)>,
}

impl Warnings {
    pub fn add(&mut self, what: String, s: f64) {
        self.seen.entry(what).or_insert((0, s)).0 += 1;
    }

    pub fn emit(&self, total: usize) {
        for (what, (n, s)) in &self.seen {
            eprintln!("warning: {what} at {n} of {total} points (first at s = {})", num(*s));
        }
    }
}

/// Rows of the eval table. The spec must already be validated.
pub fn rows(spec: &FramedCurveSpec, cfg: &RunConfig, warn: &mut Warnings) -> Result<Vec<Vec<String>>, Error> {
    let grid = linspace(cfg.s_min, cfg.s_max, cfg.samples);
    let theta = theta_bishop(|s| Ok(spec.curvatures_at(s)?.l1), grid[0], cfg.theta0, &grid)?;
    let mut out = Vec::with_capacity(grid.len());
    for (i, &s) in grid.iter().enumerate() {
        let f = spec.frame_at(s)?;
        let k = spec.curvatures_at(s)?;
        let th = theta[i].1;
        let (l2b, l3b) = bishop_curvatures(k.l2, k.l3, th, spec.character);
        let (p, q) = match frenet_data_at(spec, s) {
            Ok(d) => (d.p, d.q),
            Err(e @ (Error::LightlikeRotation { .. } | Error::ZeroCurvature)) => {
                let reason = match e {
                    Error::ZeroCurvature => "l2 = l3 = 0",
                    _ => "|l2| <= |l3|",
                };
                warn.add(format!("p, q not computable ({reason})"), s);
                (f64::NAN, f64::NAN)
            }
            Err(e) => return Err(e),
        };
        let gram = f.triad().gram_defect(spec.character);
        if !(gram <= cfg.tol) {
            warn.add(format!("gram_defect above tol {}", num(cfg.tol)), s);
        }
        let delta = f.delta.map_or(f64::NAN, f64::from);
        let mut row = vec![s];
        for v in [f.gamma, f.mu, f.nu1, f.nu2] {
            row.extend(v.0);
        }
        row.extend([delta, k.l1, k.l2, k.l3, k.alpha, th, p, q, l2b, l3b, gram]);
        out.push(row.into_iter().map(num).collect());
    }
    Ok(out)
}

pub fn run(cfg: &RunConfig) -> Result<Vec<Vec<String>>, CliError> {
    let spec = cfg.spec()?;
    validate_framed(&spec, cfg.samples, cfg.tol)?;
    let mut warn = Warnings::default();
    let rows = rows(&spec, cfg, &mut warn)?;
    warn.emit(rows.len());
    Ok(rows)
}
