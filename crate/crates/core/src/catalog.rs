//! Built-in example framed curves.

use crate::error::Error;
use crate::framed_curve::{Character, FramedCurveSpec};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub character: Character,
    pub gamma: [&'static str; 3],
    pub nu1: [&'static str; 3],
    pub nu2: [&'static str; 3],
    pub mu: Option<[&'static str; 3]>,
    pub s_min: f64,
    pub s_max: f64,
}

impl CatalogEntry {
    pub fn spec(&self) -> Result<FramedCurveSpec, Error> {
        FramedCurveSpec::from_strings(
            self.character,
            self.gamma,
            self.nu1,
            self.nu2,
            self.mu,
            self.s_min,
            self.s_max,
        )
    }
}

/// Spacelike curve with a singular point at `s = 0`, `δ = +1`.
pub fn spacelike1() -> CatalogEntry {
    CatalogEntry {
        name: "spacelike1",
        character: Character::Spacelike,
        gamma: ["s^3/3", "s^4/4+s^3/3", "s^5/5+s^3/3"],
        nu1: [
            "0",
            "(s^2+1)/sqrt((s^2+1)^2+(s+1)^2)",
            "(-s-1)/sqrt((s^2+1)^2+(s+1)^2)",
        ],
        nu2: [
            "((s^2+1)^2+(s+1)^2)/sqrt((s^4+3*s^2+2*s+1)*(s^4+3*s^2+2*s+2))",
            "(s+1)/sqrt((s^4+3*s^2+2*s+1)*(s^4+3*s^2+2*s+2))",
            "(s^2+1)/sqrt((s^4+3*s^2+2*s+1)*(s^4+3*s^2+2*s+2))",
        ],
        mu: Some([
            "-1/sqrt(s^4+3*s^2+2*s+1)",
            "-(s+1)/sqrt(s^4+3*s^2+2*s+1)",
            "-(s^2+1)/sqrt(s^4+3*s^2+2*s+1)",
        ]),
        s_min: -1.0,
        s_max: 1.0,
    }
}

/// Timelike curve with constant Frenet-type curvatures; `μ = −ν₁ × ν₂`.
pub fn timelike1() -> CatalogEntry {
    CatalogEntry {
        name: "timelike1",
        character: Character::Timelike,
        gamma: [
            "2*(s-3)*sinh(s) - 2*cosh(s)",
            "-2*(s-3)*cosh(s) + 2*sinh(s)",
            "s^2/2 - 3*s",
        ],
        nu1: ["sinh(s)", "-cosh(s)", "0"],
        nu2: ["-cosh(s)/sqrt(3)", "sinh(s)/sqrt(3)", "-2/sqrt(3)"],
        mu: Some(["2*cosh(s)/sqrt(3)", "-2*sinh(s)/sqrt(3)", "1/sqrt(3)"]),
        s_min: -1.0,
        s_max: 1.0,
    }
}

pub fn names() -> [&'static str; 2] {
    ["spacelike1", "timelike1"]
}

pub fn lookup(name: &str) -> Result<CatalogEntry, Error> {
    match name {
        "spacelike1" => Ok(spacelike1()),
        "timelike1" => Ok(timelike1()),
        _ => Err(Error::UnknownExample(name.to_string())),
    }
}
