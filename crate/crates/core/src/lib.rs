//! Frames, curvatures and hyperbolic spinor representations of non-null
//! framed curves in Minkowski 3-space ℝ³₁.
//!
//! The crate is organised bottom-up:
//!
//! - [`hypnum`]: split-complex scalars `a + jb`, `j² = 1`.
//! - [`minkowski`]: the (−, +, +) inner product, cross product and causal
//!   classification.
//! - [`expr`]: a small expression language in `s` evaluated with Taylor jets.
//! - [`framed_curve`]: framed-curve specs, frames, curvatures, singular points
//!   and frame propagation.
//! - [`adapted_frame`]: Bishop-type and Frenet-type rotations of the normal pair.
//! - [`spinor`] and [`spinor_ode`]: the spinor/frame correspondence and the
//!   single spinor equations.
//! - [`catalog`]: two worked example curves.

pub mod adapted_frame;
pub mod catalog;
mod error;
pub mod expr;
pub mod framed_curve;
pub mod hypnum;
pub mod minkowski;
pub mod ode;
pub mod spinor;
pub mod spinor_ode;

pub use error::Error;
pub use expr::{Expr, ExprError, Jet, Jet3};
pub use framed_curve::{Character, CurvatureTuple, FrameSample, FramedCurveSpec};
pub use hypnum::{HyperbolicNumber, HypnumError};
pub use minkowski::{HVec3, Vec3M};
pub use ode::{CurvaturePayload, OdeKind, Triad, TriadSample};
pub use spinor::{Branch, HSpinor};

pub type Result<T, E = Error> = std::result::Result<T, E>;
