//! Hyperbolic (split-complex) numbers `a + jb` with `j² = +1`.
//!
//! Besides the usual basis `{1, j}` every number has coordinates in the
//! idempotent null basis `e± = (1 ± j)/2`, where multiplication acts
//! componentwise. Square roots and zero divisors are easiest to reason about
//! there: `h = u·e₊ + v·e₋` with `u = a + b`, `v = a − b`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum HypnumError {
    #[error("division by null divisor {divisor}")]
    DivisionByNullDivisor { divisor: HyperbolicNumber },
    /// A square root over the real hyperbolic numbers needs both null
    /// components to be nonnegative.
    #[error("no real hyperbolic square root: null components u = {u}, v = {v}")]
    NotRepresentable { u: f64, v: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HyperbolicNumber {
    /// Real part.
    pub a: f64,
    /// Coefficient of `j`.
    pub b: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl HyperbolicNumber {
    pub const ZERO: Self = Self { a: 0.0, b: 0.0 };
    pub const ONE: Self = Self { a: 1.0, b: 0.0 };
    pub const J: Self = Self { a: 0.0, b: 1.0 };

    pub const fn new(a: f64, b: f64) -> Self {
        Self { a, b }
    }

    pub const fn real(a: f64) -> Self {
        Self { a, b: 0.0 }
    }

    /// Builds `u·e₊ + v·e₋`.
    pub fn from_null(u: f64, v: f64) -> Self {
        Self {
            a: 0.5 * (u + v),
            b: 0.5 * (u - v),
        }
    }

    /// Coordinates `(u, v)` in the null basis.
    pub fn null_components(self) -> (f64, f64) {
        (self.a + self.b, self.a - self.b)
    }

    pub fn conj(self) -> Self {
        Self {
            a: self.a,
            b: -self.b,
        }
    }

    /// `h·conj(h) = a² − b²`; may be negative or zero for nonzero `h`.
    pub fn modulus_sq(self) -> f64 {
        self.a * self.a - self.b * self.b
    }

    pub fn is_null_divisor(self) -> bool {
        self.a.abs() == self.b.abs()
    }

    /// `e^{jθ} = cosh θ + j sinh θ`.
    pub fn exp_j(theta: f64) -> Self {
        Self {
            a: theta.cosh(),
            b: theta.sinh(),
        }
    }

    pub fn scale(self, k: f64) -> Self {
        Self {
            a: self.a * k,
            b: self.b * k,
        }
    }

    /// Max-abs distance over both components.
    pub fn dist(self, other: Self) -> f64 {
        nan_max((self.a - other.a).abs(), (self.b - other.b).abs())
    }

    pub fn is_finite(self) -> bool {
        self.a.is_finite() && self.b.is_finite()
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self, HypnumError> {
        let m = rhs.modulus_sq();
        if m == 0.0 || rhs.is_null_divisor() {
            return Err(HypnumError::DivisionByNullDivisor { divisor: rhs });
        }
        Ok((self * rhs.conj()).scale(1.0 / m))
    }

    /// Principal square root: both null components of the result are the
    /// nonnegative roots of the null components of `self`. The other roots
    /// are obtained by flipping the sign of either null component.
    pub fn sqrt(self) -> Result<Self, HypnumError> {
        let (u, v) = self.null_components();
        if u < 0.0 || v < 0.0 {
            return Err(HypnumError::NotRepresentable { u, v });
        }
        Ok(Self::from_null(u.sqrt(), v.sqrt()))
    }
}

/// `max` that returns NaN when either side is NaN, so that error measures
/// built from it cannot hide a NaN.
pub fn nan_max(x: f64, y: f64) -> f64 {
    if x.is_nan() || y.is_nan() {
        f64::NAN
    } else {
        x.max(y)
    }
}

pub fn arith(
    x: HyperbolicNumber,
    y: HyperbolicNumber,
    op: ArithOp,
) -> Result<HyperbolicNumber, HypnumError> {
    match op {
        ArithOp::Add => Ok(x + y),
        ArithOp::Sub => Ok(x - y),
        ArithOp::Mul => Ok(x * y),
        ArithOp::Div => x.checked_div(y),
    }
}

impl Add for HyperbolicNumber {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl AddAssign for HyperbolicNumber {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for HyperbolicNumber {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl SubAssign for HyperbolicNumber {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl Mul for HyperbolicNumber {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.a * rhs.a + self.b * rhs.b,
            self.a * rhs.b + self.b * rhs.a,
        )
    }
}

impl Mul<f64> for HyperbolicNumber {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl Mul<HyperbolicNumber> for f64 {
    type Output = HyperbolicNumber;
    fn mul(self, rhs: HyperbolicNumber) -> HyperbolicNumber {
        rhs.scale(self)
    }
}

impl Neg for HyperbolicNumber {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl From<f64> for HyperbolicNumber {
    fn from(a: f64) -> Self {
        Self::real(a)
    }
}

/// Renders as `a+bj` / `a-bj` with shortest round-trip decimals.
impl fmt::Display for HyperbolicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_sign_negative() {
            write!(f, "{}-{}j", self.a, -self.b)
        } else {
            write!(f, "{}+{}j", self.a, self.b)
        }
    }
}
