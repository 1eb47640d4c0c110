//! Spacelike and timelike framed curves `(γ, ν₁, ν₂)` given by closed-form
//! component expressions.
//!
//! The unit tangent-like field is `μ = ε·(ν₁ × ν₂)`. For spacelike curves
//! `ε = +1` unless an explicit `mu` is supplied; for timelike curves `ε` is
//! chosen so that `μ` is future-pointing (positive first coordinate), again
//! unless `mu` is supplied. The curve satisfies `γ′ = αμ` and is singular
//! where `α` vanishes.

use crate::error::Error;
use crate::expr::{Expr, Jet};
use crate::hypnum::nan_max;
use crate::minkowski::{det, inner, Vec3M};
use crate::ode::{check_grid, frame_matrix, linspace, rk4_step, CurvaturePayload, OdeKind};
use crate::ode::{Triad, TriadSample};

/// Bound on the Gram defect tolerated while propagating a frame.
pub const GRAM_DRIFT_TOL: f64 = 1e-6;
/// Default tolerance for singular-point detection.
pub const SINGULAR_TOL: f64 = 1e-10;
const BISECTION_STEPS: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Character {
    Spacelike,
    Timelike,
}

impl Character {
    pub fn name(self) -> &'static str {
        match self {
            Character::Spacelike => "spacelike",
            Character::Timelike => "timelike",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "spacelike" => Some(Character::Spacelike),
            "timelike" => Some(Character::Timelike),
            _ => None,
        }
    }

    pub fn general_kind(self) -> OdeKind {
        match self {
            Character::Spacelike => OdeKind::SpacelikeGeneral,
            Character::Timelike => OdeKind::TimelikeGeneral,
        }
    }
}

/// Which of `S²₁` (unit spacelike) and `H²₀` (unit timelike) hold `ν₁, ν₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalPattern {
    /// `ν₁ ∈ S²₁, ν₂ ∈ H²₀` (spacelike, `δ = +1`).
    DeSitterHyperbolic,
    /// `ν₁ ∈ H²₀, ν₂ ∈ S²₁` (spacelike, `δ = −1`).
    HyperbolicDeSitter,
    /// `ν₁, ν₂ ∈ S²₁` (timelike).
    DeSitterDeSitter,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FramedCurveSpec {
    pub character: Character,
    pub gamma: [Expr; 3],
    pub nu1: [Expr; 3],
    pub nu2: [Expr; 3],
    /// Optional closed form of `μ`, used only to fix the orientation `ε`.
    pub mu: Option<[Expr; 3]>,
    pub s_min: f64,
    pub s_max: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameSample {
    pub s: f64,
    pub gamma: Vec3M,
    pub mu: Vec3M,
    pub nu1: Vec3M,
    pub nu2: Vec3M,
    /// `sign⟨ν₁, ν₁⟩`; spacelike curves only.
    pub delta: Option<i8>,
    /// `ε` with `μ = ε·(ν₁ × ν₂)`.
    pub orientation: i8,
}

impl FrameSample {
    pub fn triad(&self) -> Triad {
        Triad::new(self.mu, self.nu1, self.nu2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureTuple {
    pub l1: f64,
    pub l2: f64,
    pub l3: f64,
    pub alpha: f64,
}

impl CurvatureTuple {
    pub fn payload(&self) -> CurvaturePayload {
        CurvaturePayload::General {
            l1: self.l1,
            l2: self.l2,
            l3: self.l3,
        }
    }
}

/// Curvatures with their first two derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureJets {
    pub l1: Jet<3>,
    pub l2: Jet<3>,
    pub l3: Jet<3>,
    pub alpha: Jet<3>,
}

impl CurvatureJets {
    pub fn values(&self) -> CurvatureTuple {
        CurvatureTuple {
            l1: self.l1.value(),
            l2: self.l2.value(),
            l3: self.l3.value(),
            alpha: self.alpha.value(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConditionDefect {
    pub condition: String,
    pub max_defect: f64,
    pub s_at_max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub conditions: Vec<ConditionDefect>,
    pub pattern: NormalPattern,
    pub delta: Option<i8>,
    pub orientation: i8,
}

impl ValidationReport {
    pub fn max_defect(&self) -> f64 {
        self.conditions.iter().map(|c| c.max_defect).fold(0.0, nan_max)
    }
}

type VJet<const N: usize> = [Jet<N>; 3];

fn eval_vec<const N: usize>(e: &[Expr; 3], s: f64) -> Result<VJet<N>, Error> {
    Ok([e[0].eval_jet_n(s)?, e[1].eval_jet_n(s)?, e[2].eval_jet_n(s)?])
}

fn jinner<const N: usize>(v: &VJet<N>, w: &VJet<N>) -> Jet<N> {
    -(v[0] * w[0]) + v[1] * w[1] + v[2] * w[2]
}

fn jcross<const N: usize>(v: &VJet<N>, w: &VJet<N>) -> VJet<N> {
    [
        -(v[1] * w[2] - v[2] * w[1]),
        -(v[0] * w[2] - v[2] * w[0]),
        v[0] * w[1] - v[1] * w[0],
    ]
}

fn jdiff<const N: usize, const M: usize>(v: &VJet<N>) -> VJet<M> {
    [v[0].differentiate(), v[1].differentiate(), v[2].differentiate()]
}

fn jtrunc<const N: usize, const M: usize>(v: &VJet<N>) -> VJet<M> {
    [v[0].truncate(), v[1].truncate(), v[2].truncate()]
}

fn values<const N: usize>(v: &VJet<N>) -> Vec3M {
    Vec3M(v.map(|j| j.value()))
}

/// Frame fields with derivatives up to order three.
struct FrameJets {
    gamma: VJet<4>,
    mu: VJet<4>,
    nu1: VJet<4>,
    nu2: VJet<4>,
    orientation: i8,
}

impl FramedCurveSpec {
    /// Parses all component expressions.
    #[allow(clippy::too_many_arguments)]
    pub fn from_strings(
        character: Character,
        gamma: [&str; 3],
        nu1: [&str; 3],
        nu2: [&str; 3],
        mu: Option<[&str; 3]>,
        s_min: f64,
        s_max: f64,
    ) -> Result<Self, Error> {
        let p = |t: [&str; 3]| -> Result<[Expr; 3], Error> {
            Ok([Expr::parse(t[0])?, Expr::parse(t[1])?, Expr::parse(t[2])?])
        };
        Ok(Self {
            character,
            gamma: p(gamma)?,
            nu1: p(nu1)?,
            nu2: p(nu2)?,
            mu: mu.map(p).transpose()?,
            s_min,
            s_max,
        })
    }

    fn orientation_at(&self, s: f64, cross: &Vec3M) -> Result<i8, Error> {
        let sign = |x: f64| if x < 0.0 { -1 } else { 1 };
        Ok(match (&self.mu, self.character) {
            (Some(mu), _) => {
                let m = Vec3M([mu[0].eval(s)?, mu[1].eval(s)?, mu[2].eval(s)?]);
                sign(inner(&m, cross) * inner(cross, cross))
            }
            (None, Character::Spacelike) => 1,
            (None, Character::Timelike) => sign(cross[0]),
        })
    }

    fn jets_at(&self, s: f64) -> Result<FrameJets, Error> {
        let gamma = eval_vec::<4>(&self.gamma, s)?;
        let nu1 = eval_vec::<4>(&self.nu1, s)?;
        let nu2 = eval_vec::<4>(&self.nu2, s)?;
        let cross = jcross(&nu1, &nu2);
        let orientation = self.orientation_at(s, &values(&cross))?;
        let eps = f64::from(orientation);
        let mu = cross.map(|j| j.scale(eps));
        Ok(FrameJets {
            gamma,
            mu,
            nu1,
            nu2,
            orientation,
        })
    }

    pub fn frame_at(&self, s: f64) -> Result<FrameSample, Error> {
        let gamma = Vec3M([self.gamma[0].eval(s)?, self.gamma[1].eval(s)?, self.gamma[2].eval(s)?]);
        let nu1 = Vec3M([self.nu1[0].eval(s)?, self.nu1[1].eval(s)?, self.nu1[2].eval(s)?]);
        let nu2 = Vec3M([self.nu2[0].eval(s)?, self.nu2[1].eval(s)?, self.nu2[2].eval(s)?]);
        let cross = nu1.cross(&nu2);
        let orientation = self.orientation_at(s, &cross)?;
        let delta = match self.character {
            Character::Spacelike => Some(if inner(&nu1, &nu1) >= 0.0 { 1 } else { -1 }),
            Character::Timelike => None,
        };
        Ok(FrameSample {
            s,
            gamma,
            mu: cross * f64::from(orientation),
            nu1,
            nu2,
            delta,
            orientation,
        })
    }

    pub fn curvature_jets_at(&self, s: f64) -> Result<CurvatureJets, Error> {
        let f = self.jets_at(s)?;
        let mu: VJet<3> = jtrunc(&f.mu);
        let nu2: VJet<3> = jtrunc(&f.nu2);
        let dnu1: VJet<3> = jdiff(&f.nu1);
        let dnu2: VJet<3> = jdiff(&f.nu2);
        let dgamma: VJet<3> = jdiff(&f.gamma);
        let (l1, l2, l3, alpha) = match self.character {
            Character::Spacelike => {
                let delta = if inner(&values(&f.nu1), &values(&f.nu1)) >= 0.0 { 1.0 } else { -1.0 };
                let alpha = jinner(&dgamma, &mu)
                    .checked_div(&jinner(&mu, &mu))
                    .ok_or(Error::DegenerateCurvature { s })?;
                (
                    jinner(&dnu1, &nu2).scale(-delta),
                    jinner(&dnu1, &mu),
                    jinner(&dnu2, &mu),
                    alpha,
                )
            }
            Character::Timelike => (
                jinner(&dnu1, &nu2),
                -jinner(&dnu1, &mu),
                -jinner(&dnu2, &mu),
                -jinner(&dgamma, &mu),
            ),
        };
        Ok(CurvatureJets { l1, l2, l3, alpha })
    }

    pub fn curvatures_at(&self, s: f64) -> Result<CurvatureTuple, Error> {
        Ok(self.curvature_jets_at(s)?.values())
    }

    pub fn general_payload(&self, s: f64) -> Result<CurvaturePayload, Error> {
        Ok(self.curvatures_at(s)?.payload())
    }

    fn alpha_jet(&self, s: f64) -> Result<Jet<3>, Error> {
        Ok(self.curvature_jets_at(s)?.alpha)
    }

    /// `max |γ′ − αμ|` at `s`.
    pub fn tangent_defect(&self, s: f64) -> Result<f64, Error> {
        let f = self.jets_at(s)?;
        let dg: VJet<3> = jdiff(&f.gamma);
        let alpha = self.alpha_jet(s)?.value();
        let mu = values(&f.mu);
        Ok(values(&dg).dist(&(mu * alpha)))
    }

    /// Central-difference residual of the general frame equations at `s`.
    pub fn frame_ode_residual(&self, s: f64, h: f64) -> Result<f64, Error> {
        let plus = self.frame_at(s + h)?.triad();
        let minus = self.frame_at(s - h)?.triad();
        let here = self.frame_at(s)?;
        let triad = here.triad();
        let fd = (plus + minus * -1.0) * (0.5 / h);
        let m = frame_matrix(
            self.character.general_kind(),
            &self.general_payload(s)?,
            triad.delta(),
        )?;
        Ok(fd.dist(&triad.apply(&m)))
    }
}

fn check_grid_n(grid_n: usize) -> Result<(), Error> {
    if grid_n < 2 {
        return Err(Error::InvalidGrid(format!("grid_n = {grid_n}, need at least 2")));
    }
    Ok(())
}

struct Tracker {
    conditions: Vec<ConditionDefect>,
}

impl Tracker {
    fn record(&mut self, idx: usize, name: &str, s: f64, defect: f64) {
        if self.conditions.len() <= idx {
            self.conditions.push(ConditionDefect {
                condition: name.to_string(),
                max_defect: f64::NEG_INFINITY,
                s_at_max: s,
            });
        }
        let c = &mut self.conditions[idx];
        // NaN defects count as failures.
        if defect.is_nan() || defect > c.max_defect {
            c.max_defect = if defect.is_nan() { f64::INFINITY } else { defect };
            c.s_at_max = s;
        }
    }
}

/// Checks the framed-curve conditions on `grid_n` equally spaced points and
/// fails on the first condition whose worst defect exceeds `tol`.
pub fn validate_framed(spec: &FramedCurveSpec, grid_n: usize, tol: f64) -> Result<ValidationReport, Error> {
    let report = framed_conditions(spec, grid_n)?;
    for c in &report.conditions {
        if !(c.max_defect <= tol) {
            return Err(Error::NotAFramedCurve {
                condition: c.condition.clone(),
                s: c.s_at_max,
                defect: c.max_defect,
            });
        }
    }
    Ok(report)
}

/// Worst defect of every framed-curve condition on `grid_n` points.
pub fn framed_conditions(spec: &FramedCurveSpec, grid_n: usize) -> Result<ValidationReport, Error> {
    check_grid_n(grid_n)?;
    let grid = linspace(spec.s_min, spec.s_max, grid_n);
    let first = spec.frame_at(grid[0])?;
    let pattern = match (spec.character, first.delta) {
        (Character::Timelike, _) => NormalPattern::DeSitterDeSitter,
        (_, Some(1)) => NormalPattern::DeSitterHyperbolic,
        _ => NormalPattern::HyperbolicDeSitter,
    };
    let (n1_name, n2_name, n1_want, n2_want) = match pattern {
        NormalPattern::DeSitterHyperbolic => ("nu1 membership (S^2_1)", "nu2 membership (H^2_0)", 1.0, -1.0),
        NormalPattern::HyperbolicDeSitter => ("nu1 membership (H^2_0)", "nu2 membership (S^2_1)", -1.0, 1.0),
        NormalPattern::DeSitterDeSitter => ("nu1 membership (S^2_1)", "nu2 membership (S^2_1)", 1.0, 1.0),
    };
    let mut t = Tracker { conditions: Vec::new() };
    for &s in &grid {
        let f = spec.jets_at(s)?;
        let dg = values::<3>(&jdiff(&f.gamma));
        let n1 = values(&f.nu1);
        let n2 = values(&f.nu2);
        let mu = values(&f.mu);
        t.record(0, "<gamma', nu1> = 0", s, inner(&dg, &n1).abs());
        t.record(1, "<gamma', nu2> = 0", s, inner(&dg, &n2).abs());
        t.record(2, n1_name, s, (inner(&n1, &n1) - n1_want).abs());
        t.record(3, n2_name, s, (inner(&n2, &n2) - n2_want).abs());
        t.record(4, "<nu1, nu2> = 0", s, inner(&n1, &n2).abs());
        let mu_want = match spec.character {
            Character::Spacelike => 1.0,
            Character::Timelike => -1.0,
        };
        let mu_name = match spec.character {
            Character::Spacelike => "mu membership (S^2_1)",
            Character::Timelike => "mu membership (H^2_0)",
        };
        t.record(5, mu_name, s, (inner(&mu, &mu) - mu_want).abs());
        let flip = if f.orientation == first.orientation { 0.0 } else { f64::INFINITY };
        t.record(6, "constant orientation", s, flip);
        let given = match &spec.mu {
            Some(m) => {
                let g = Vec3M([m[0].eval(s)?, m[1].eval(s)?, m[2].eval(s)?]);
                g.dist(&mu)
            }
            None => 0.0,
        };
        t.record(7, "given mu = eps * (nu1 x nu2)", s, given);
        t.record(8, "gamma' = alpha * mu", s, spec.tangent_defect(s)?);
    }
    Ok(ValidationReport {
        conditions: t.conditions,
        pattern,
        delta: first.delta,
        orientation: first.orientation,
    })
}

fn bisect(mut a: f64, mut fa: f64, mut b: f64, tol: f64, f: &dyn Fn(f64) -> Result<f64, Error>) -> Result<f64, Error> {
    for _ in 0..BISECTION_STEPS {
        let m = 0.5 * (a + b);
        let fm = f(m)?;
        if fm.abs() <= tol || fm == 0.0 {
            return Ok(m);
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

/// Roots of `α` on the spec's domain: grid points with `|α| ≤ tol`, sign
/// changes refined by bisection, and tangential roots found as sign changes
/// of `α′` whose refined point has `|α| ≤ tol`.
pub fn singular_points(spec: &FramedCurveSpec, grid_n: usize, tol: f64) -> Result<Vec<f64>, Error> {
    check_grid_n(grid_n)?;
    let grid = linspace(spec.s_min, spec.s_max, grid_n);
    let jets = grid.iter().map(|&s| spec.alpha_jet(s)).collect::<Result<Vec<_>, _>>()?;
    let alpha = |s: f64| spec.alpha_jet(s).map(|j| j.value());
    let dalpha = |s: f64| spec.alpha_jet(s).map(|j| j.derivative(1));
    let mut roots: Vec<(f64, f64)> = Vec::new();
    for (i, &s) in grid.iter().enumerate() {
        let a = jets[i].value();
        if a.abs() <= tol {
            roots.push((s, a.abs()));
        }
    }
    for i in 0..grid_n - 1 {
        let (s0, s1) = (grid[i], grid[i + 1]);
        let (a0, a1) = (jets[i].value(), jets[i + 1].value());
        if a0.abs() > tol && a1.abs() > tol && (a0 < 0.0) != (a1 < 0.0) {
            let r = bisect(s0, a0, s1, tol, &alpha)?;
            roots.push((r, alpha(r)?.abs()));
        }
        let (d0, d1) = (jets[i].derivative(1), jets[i + 1].derivative(1));
        if d0 != 0.0 && d1 != 0.0 && (d0 < 0.0) != (d1 < 0.0) && (a0 < 0.0) == (a1 < 0.0) {
            let r = bisect(s0, d0, s1, 0.0, &dalpha)?;
            let ar = alpha(r)?.abs();
            if ar <= tol {
                roots.push((r, ar));
            }
        }
    }
    roots.sort_by(|x, y| x.0.total_cmp(&y.0));
    let spacing = (spec.s_max - spec.s_min).abs() / (grid_n - 1) as f64;
    let mut out: Vec<(f64, f64)> = Vec::new();
    for r in roots {
        match out.last_mut() {
            Some(last) if (r.0 - last.0).abs() <= 1e-6 * spacing => {
                if r.1 < last.1 {
                    *last = r;
                }
            }
            _ => out.push(r),
        }
    }
    Ok(out.into_iter().map(|r| r.0).collect())
}

/// Integrates the kind's frame equations with one RK4 step per grid interval.
pub fn propagate_frame<F>(kind: OdeKind, mut curv: F, init: &Triad, grid: &[f64]) -> Result<Vec<TriadSample>, Error>
where
    F: FnMut(f64) -> Result<CurvaturePayload, Error>,
{
    check_grid(grid)?;
    let character = kind.character();
    let defect = init.gram_defect(character);
    if !(defect <= GRAM_DRIFT_TOL) {
        return Err(Error::InvalidInitialFrame { defect });
    }
    let delta = init.delta();
    let mut rhs = |s: f64, y: Triad| -> Result<Triad, Error> {
        let m = frame_matrix(kind, &curv(s)?, delta)?;
        Ok(y.apply(&m))
    };
    let mut out = Vec::with_capacity(grid.len());
    let mut y = *init;
    out.push(TriadSample { s: grid[0], triad: y });
    for w in grid.windows(2) {
        y = rk4_step(&mut rhs, w[0], y, w[1] - w[0])?;
        let d = y.gram_defect(character);
        if !(d <= GRAM_DRIFT_TOL) {
            return Err(Error::GramDrift { s: w[1], defect: d });
        }
        out.push(TriadSample { s: w[1], triad: y });
    }
    Ok(out)
}

/// Curvature `κ = ‖γ′×γ″‖/‖γ′‖³` and torsion `τ = det(γ′,γ″,γ‴)/‖γ′×γ″‖²`
/// with Lorentzian norms and cross product.
pub fn frenet_kappa_tau(gamma: &[Expr; 3], s: f64, tol: f64) -> Result<(f64, f64), Error> {
    let g = eval_vec::<4>(gamma, s)?;
    let d = |k: usize| Vec3M(g.map(|j| j.derivative(k)));
    let (g1, g2, g3) = (d(1), d(2), d(3));
    let speed = g1.norm();
    if speed <= tol {
        return Err(Error::SingularPoint { s });
    }
    let c = g1.cross(&g2);
    let cn = c.norm();
    if cn <= tol {
        return Err(Error::DegenerateCurvature { s });
    }
    Ok((cn / speed.powi(3), det(&g1, &g2, &g3) / (cn * cn)))
}
