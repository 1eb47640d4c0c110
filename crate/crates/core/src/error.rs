use thiserror::Error;

use crate::expr::ExprError;
use crate::hypnum::HypnumError;
use crate::ode::OdeKind;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Hypnum(#[from] HypnumError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("not a framed curve: {condition} fails at s = {s} (defect {defect:e})")]
    NotAFramedCurve {
        condition: String,
        s: f64,
        defect: f64,
    },
    #[error("Gram matrix drifted at s = {s} (defect {defect:e})")]
    GramDrift { s: f64, defect: f64 },
    #[error("spinor norm drifted at s = {s} (defect {defect:e})")]
    NormDrift { s: f64, defect: f64 },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("initial frame violates its Gram invariant (defect {defect:e})")]
    InvalidInitialFrame { defect: f64 },
    #[error("singular point at s = {s}")]
    SingularPoint { s: f64 },
    #[error("singular point: |alpha| = {alpha:e} is below tolerance")]
    SingularAlpha { alpha: f64 },
    #[error("degenerate curvature at s = {s}: γ′ × γ″ vanishes")]
    DegenerateCurvature { s: f64 },
    #[error("Frenet-type rotation needs |l2| > |l3| (l2 = {l2}, l3 = {l3})")]
    LightlikeRotation { l2: f64, l3: f64 },
    #[error("Frenet-type rotation needs (l2, l3) ≠ (0, 0)")]
    ZeroCurvature,
    #[error("curvature payload {payload} does not match kind {kind:?}")]
    KindPayloadMismatch { kind: OdeKind, payload: &'static str },
    #[error("spinor is not normalized (defect {defect:e})")]
    NotNormalized { defect: f64 },
    #[error("spinor component {component} not representable: radicand null components u = {u}, v = {v}")]
    NotRepresentable { component: u8, u: f64, v: f64 },
    #[error("no sign choice reproduces the triad (defect {defect:e})")]
    SignInconsistent { defect: f64 },
    #[error("unknown example '{0}'")]
    UnknownExample(String),
}
