//! Adapted frames: the normal pair `(ν₁, ν₂)` rotated by an angle `Θ`,
//! hyperbolically for spacelike curves and circularly for timelike ones.
//!
//! With `Θ′ = l₁` the rotated pair has no internal coupling (Bishop type).
//! With `Θ` chosen to kill `l̆₃` the equations collapse to `(p, q)` with
//! `q = l₁ − Θ′` (Frenet type). `μ` is never changed.

use crate::error::Error;
use crate::framed_curve::{Character, FrameSample, FramedCurveSpec};
use crate::minkowski::Vec3M;
use crate::ode::{check_grid, rk4_step, CurvaturePayload, Triad};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdaptedFrameSample {
    pub s: f64,
    pub mu: Vec3M,
    pub nu1b: Vec3M,
    pub nu2b: Vec3M,
    pub theta: f64,
}

impl AdaptedFrameSample {
    pub fn triad(&self) -> Triad {
        Triad::new(self.mu, self.nu1b, self.nu2b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AdaptedVariant {
    Bishop { l2b: f64, l3b: f64 },
    FrenetType { p: f64, q: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdaptedCurvatures {
    pub variant: AdaptedVariant,
    pub alpha: f64,
}

impl AdaptedCurvatures {
    pub fn payload(&self) -> CurvaturePayload {
        match self.variant {
            AdaptedVariant::Bishop { l2b, l3b } => CurvaturePayload::Bishop { l2b, l3b },
            AdaptedVariant::FrenetType { p, q } => CurvaturePayload::Frenet { p, q },
        }
    }
}

/// Frenet-type rotation data at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrenetData {
    pub theta: f64,
    pub theta_prime: f64,
    pub p: f64,
    pub q: f64,
}

/// `Θ(s) = θ₀ + ∫_{s₀}^{s} l₁`, integrated with one RK4 step per grid
/// interval in both directions from `s₀`, which must be a grid point.
pub fn theta_bishop<F>(mut l1: F, s0: f64, theta0: f64, grid: &[f64]) -> Result<Vec<(f64, f64)>, Error>
where
    F: FnMut(f64) -> Result<f64, Error>,
{
    check_grid(grid)?;
    let k = grid
        .iter()
        .position(|&s| s == s0)
        .ok_or_else(|| Error::InvalidGrid(format!("start point {s0} is not a grid point")))?;
    let mut out = vec![(0.0, 0.0); grid.len()];
    out[k] = (s0, theta0);
    let mut f = |s: f64, _y: f64| l1(s);
    let mut th = theta0;
    for i in k..grid.len() - 1 {
        th = rk4_step(&mut f, grid[i], th, grid[i + 1] - grid[i])?;
        out[i + 1] = (grid[i + 1], th);
    }
    th = theta0;
    for i in (1..=k).rev() {
        th = rk4_step(&mut f, grid[i], th, grid[i - 1] - grid[i])?;
        out[i - 1] = (grid[i - 1], th);
    }
    Ok(out)
}

/// `(cos Θ, sin Θ)` or `(cosh Θ, sinh Θ)`.
fn rotation(theta: f64, character: Character) -> (f64, f64) {
    match character {
        Character::Spacelike => (theta.cosh(), theta.sinh()),
        Character::Timelike => (theta.cos(), theta.sin()),
    }
}

pub fn rotate_triad(t: &Triad, theta: f64, character: Character) -> Triad {
    let (c, s) = rotation(theta, character);
    let (nu1b, nu2b) = match character {
        Character::Spacelike => (t.nu1 * c - t.nu2 * s, t.nu1 * -s + t.nu2 * c),
        Character::Timelike => (t.nu1 * c - t.nu2 * s, t.nu1 * s + t.nu2 * c),
    };
    Triad::new(t.mu, nu1b, nu2b)
}

pub fn adapt_frame(f: &FrameSample, theta: f64, character: Character) -> AdaptedFrameSample {
    let t = rotate_triad(&f.triad(), theta, character);
    AdaptedFrameSample {
        s: f.s,
        mu: t.mu,
        nu1b: t.nu1,
        nu2b: t.nu2,
        theta,
    }
}

/// `(l̆₂, l̆₃)` from `(l₂, l₃)` under the same rotation as [`adapt_frame`].
pub fn bishop_curvatures(l2: f64, l3: f64, theta: f64, character: Character) -> (f64, f64) {
    let (c, s) = rotation(theta, character);
    match character {
        Character::Spacelike => (c * l2 - s * l3, -s * l2 + c * l3),
        Character::Timelike => (c * l2 - s * l3, s * l2 + c * l3),
    }
}

/// Angle and magnitude of the Frenet-type rotation.
///
/// Spacelike: `l₂ = p cosh Θ`, `l₃ = p sinh Θ`, `p` carries the sign of `l₂`.
/// Timelike: `l₂ = p cos Θ`, `l₃ = −p sin Θ`, `p ≥ 0`.
pub fn frenet_type_theta(l2: f64, l3: f64, character: Character) -> Result<(f64, f64), Error> {
    match character {
        Character::Spacelike => {
            if !(l2.abs() > l3.abs()) {
                return Err(Error::LightlikeRotation { l2, l3 });
            }
            let p = l2.signum() * (l2 * l2 - l3 * l3).sqrt();
            Ok(((l3 / l2).atanh(), p))
        }
        Character::Timelike => {
            if l2 == 0.0 && l3 == 0.0 {
                return Err(Error::ZeroCurvature);
            }
            Ok(((-l3).atan2(l2), l2.hypot(l3)))
        }
    }
}

/// `Θ′` of the Frenet-type angle from `(l₂, l₃)` and their derivatives.
pub fn frenet_theta_rate(l2: f64, l3: f64, dl2: f64, dl3: f64, character: Character) -> Result<f64, Error> {
    frenet_type_theta(l2, l3, character)?;
    Ok(match character {
        Character::Spacelike => (l2 * dl3 - l3 * dl2) / (l2 * l2 - l3 * l3),
        Character::Timelike => (l3 * dl2 - l2 * dl3) / (l2 * l2 + l3 * l3),
    })
}

/// `q = l₁ − Θ′`.
pub fn pq_curvatures(l1: f64, theta_prime: f64) -> f64 {
    l1 - theta_prime
}

/// Frenet-type angle, its rate, `p` and `q` of a spec at `s`.
pub fn frenet_data_at(spec: &FramedCurveSpec, s: f64) -> Result<FrenetData, Error> {
    let j = spec.curvature_jets_at(s)?;
    let (l2, l3) = (j.l2.value(), j.l3.value());
    let (theta, p) = frenet_type_theta(l2, l3, spec.character)?;
    let theta_prime = frenet_theta_rate(l2, l3, j.l2.derivative(1), j.l3.derivative(1), spec.character)?;
    Ok(FrenetData {
        theta,
        theta_prime,
        p,
        q: pq_curvatures(j.l1.value(), theta_prime),
    })
}

/// Curvature and torsion from Frenet-type data: `κ = δp/|α|` (spacelike) or
/// `p/|α|` (timelike), `τ = q/α`.
pub fn kappa_tau_from_pq(
    p: f64,
    q: f64,
    alpha: f64,
    delta: i8,
    character: Character,
    tol: f64,
) -> Result<(f64, f64), Error> {
    if alpha.abs() <= tol {
        return Err(Error::SingularAlpha { alpha });
    }
    let kappa = match character {
        Character::Spacelike => f64::from(delta) * p / alpha.abs(),
        Character::Timelike => p / alpha.abs(),
    };
    Ok((kappa, q / alpha))
}
