//! Frame equations shared by the frame and spinor integrators: the six
//! equation kinds, their curvature payloads and coefficient matrices, and a
//! fixed-step classic Runge-Kutta step.

use std::ops::{Add, Mul};

use crate::error::Error;
use crate::framed_curve::Character;
use crate::hypnum::nan_max;
use crate::minkowski::{inner, Vec3M};

/// One equation kind per frame (general, Bishop-type, Frenet-type) and
/// causal character. The same kinds label the spinor equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OdeKind {
    SpacelikeGeneral,
    TimelikeGeneral,
    SpacelikeAdaptedBishop,
    SpacelikeAdaptedFrenet,
    TimelikeAdaptedBishop,
    TimelikeAdaptedFrenet,
}

pub type FrameOdeKind = OdeKind;

impl OdeKind {
    pub const ALL: [OdeKind; 6] = [
        OdeKind::SpacelikeGeneral,
        OdeKind::TimelikeGeneral,
        OdeKind::SpacelikeAdaptedBishop,
        OdeKind::SpacelikeAdaptedFrenet,
        OdeKind::TimelikeAdaptedBishop,
        OdeKind::TimelikeAdaptedFrenet,
    ];

    pub fn character(self) -> Character {
        match self {
            OdeKind::SpacelikeGeneral
            | OdeKind::SpacelikeAdaptedBishop
            | OdeKind::SpacelikeAdaptedFrenet => Character::Spacelike,
            _ => Character::Timelike,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OdeKind::SpacelikeGeneral => "spacelike-general",
            OdeKind::TimelikeGeneral => "timelike-general",
            OdeKind::SpacelikeAdaptedBishop => "spacelike-bishop",
            OdeKind::SpacelikeAdaptedFrenet => "spacelike-frenet",
            OdeKind::TimelikeAdaptedBishop => "timelike-bishop",
            OdeKind::TimelikeAdaptedFrenet => "timelike-frenet",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    fn payload_name(self) -> &'static str {
        match self {
            OdeKind::SpacelikeGeneral | OdeKind::TimelikeGeneral => "General",
            OdeKind::SpacelikeAdaptedBishop | OdeKind::TimelikeAdaptedBishop => "Bishop",
            _ => "Frenet",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurvaturePayload {
    General { l1: f64, l2: f64, l3: f64 },
    Bishop { l2b: f64, l3b: f64 },
    Frenet { p: f64, q: f64 },
}

impl CurvaturePayload {
    fn name(&self) -> &'static str {
        match self {
            CurvaturePayload::General { .. } => "General",
            CurvaturePayload::Bishop { .. } => "Bishop",
            CurvaturePayload::Frenet { .. } => "Frenet",
        }
    }

    /// Checks the payload against `kind` and returns the equivalent general
    /// triple `(l₁, l₂, l₃)`: Bishop is `l₁ = 0`, Frenet is `(q, p, 0)`.
    pub fn general_for(&self, kind: OdeKind) -> Result<(f64, f64, f64), Error> {
        if self.name() != kind.payload_name() {
            return Err(Error::KindPayloadMismatch {
                kind,
                payload: self.name(),
            });
        }
        Ok(match *self {
            CurvaturePayload::General { l1, l2, l3 } => (l1, l2, l3),
            CurvaturePayload::Bishop { l2b, l3b } => (0.0, l2b, l3b),
            CurvaturePayload::Frenet { p, q } => (q, p, 0.0),
        })
    }
}

/// Orthonormal triad `{μ, ν₁, ν₂}`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Triad {
    pub mu: Vec3M,
    pub nu1: Vec3M,
    pub nu2: Vec3M,
}

impl Triad {
    pub fn new(mu: Vec3M, nu1: Vec3M, nu2: Vec3M) -> Self {
        Self { mu, nu1, nu2 }
    }

    pub fn vectors(&self) -> [Vec3M; 3] {
        [self.mu, self.nu1, self.nu2]
    }

    pub fn dist(&self, other: &Triad) -> f64 {
        nan_max(
            nan_max(self.mu.dist(&other.mu), self.nu1.dist(&other.nu1)),
            self.nu2.dist(&other.nu2),
        )
    }

    pub fn gram(&self) -> [[f64; 3]; 3] {
        let v = self.vectors();
        std::array::from_fn(|i| std::array::from_fn(|k| inner(&v[i], &v[k])))
    }

    /// `sign⟨ν₁, ν₁⟩`, the `δ` of a spacelike framed curve.
    pub fn delta(&self) -> f64 {
        if inner(&self.nu1, &self.nu1) >= 0.0 {
            1.0
        } else {
            -1.0
        }
    }

    /// Expected Gram matrix: `diag(1, δ, −δ)` or `diag(−1, 1, 1)`.
    pub fn expected_gram(&self, character: Character) -> [f64; 3] {
        match character {
            Character::Spacelike => {
                let d = self.delta();
                [1.0, d, -d]
            }
            Character::Timelike => [-1.0, 1.0, 1.0],
        }
    }

    /// Largest entry of `|G − G_expected|`.
    pub fn gram_defect(&self, character: Character) -> f64 {
        let g = self.gram();
        let want = self.expected_gram(character);
        let mut d: f64 = 0.0;
        for i in 0..3 {
            for k in 0..3 {
                let w = if i == k { want[i] } else { 0.0 };
                d = nan_max(d, (g[i][k] - w).abs());
            }
        }
        d
    }

    pub fn is_finite(&self) -> bool {
        self.mu.is_finite() && self.nu1.is_finite() && self.nu2.is_finite()
    }

    /// `M · (μ, ν₁, ν₂)ᵗ`.
    pub fn apply(&self, m: &[[f64; 3]; 3]) -> Triad {
        let v = self.vectors();
        let row = |r: &[f64; 3]| v[0] * r[0] + v[1] * r[1] + v[2] * r[2];
        Triad::new(row(&m[0]), row(&m[1]), row(&m[2]))
    }
}

impl Add for Triad {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Triad::new(self.mu + rhs.mu, self.nu1 + rhs.nu1, self.nu2 + rhs.nu2)
    }
}

impl Mul<f64> for Triad {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Triad::new(self.mu * k, self.nu1 * k, self.nu2 * k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriadSample {
    pub s: f64,
    pub triad: Triad,
}

/// Coefficient matrix with rows `μ′, ν₁′, ν₂′` in the basis `(μ, ν₁, ν₂)`.
/// `delta` is only read by spacelike kinds.
pub fn frame_matrix(
    kind: OdeKind,
    curv: &CurvaturePayload,
    delta: f64,
) -> Result<[[f64; 3]; 3], Error> {
    let (l1, l2, l3) = curv.general_for(kind)?;
    let d = delta;
    Ok(match kind.character() {
        Character::Spacelike => [[0.0, -d * l2, d * l3], [l2, 0.0, l1], [l3, l1, 0.0]],
        Character::Timelike => [[0.0, l2, l3], [l2, 0.0, l1], [l3, -l1, 0.0]],
    })
}

/// One classic fourth-order Runge-Kutta step.
pub fn rk4_step<S, F>(f: &mut F, s: f64, y: S, h: f64) -> Result<S, Error>
where
    S: Copy + Add<Output = S> + Mul<f64, Output = S>,
    F: FnMut(f64, S) -> Result<S, Error>,
{
    let k1 = f(s, y)?;
    let k2 = f(s + 0.5 * h, y + k1 * (0.5 * h))?;
    let k3 = f(s + 0.5 * h, y + k2 * (0.5 * h))?;
    let k4 = f(s + h, y + k3 * h)?;
    Ok(y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0))
}

/// Checks that `grid` has at least one point and is strictly monotone.
pub fn check_grid(grid: &[f64]) -> Result<(), Error> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid("empty grid".into()));
    }
    if grid.iter().any(|s| !s.is_finite()) {
        return Err(Error::InvalidGrid("non-finite grid point".into()));
    }
    if grid.len() > 1 {
        let up = grid[1] > grid[0];
        let ok = grid.windows(2).all(|w| if up { w[1] > w[0] } else { w[1] < w[0] });
        if !ok {
            return Err(Error::InvalidGrid("grid is not strictly monotone".into()));
        }
    }
    Ok(())
}

/// `n` equally spaced points from `a` to `b` inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => (0..n)
            .map(|i| {
                if i == n - 1 {
                    b
                } else {
                    a + (b - a) * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}
