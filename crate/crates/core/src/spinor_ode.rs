//! Single spinor equations equivalent to the frame equations, their
//! integration, and checks relating the general and adapted formulations.

use crate::adapted_frame::{bishop_curvatures, frenet_type_theta};
use crate::error::Error;
use crate::framed_curve::Character;
use crate::hypnum::HyperbolicNumber as H;
use crate::ode::{check_grid, rk4_step, CurvaturePayload, OdeKind, TriadSample};
use crate::spinor::{bilinear, frame_from_spinor_tol, mate, HSpinor, NORM_TOL};

pub type SpinorOdeKind = OdeKind;

/// Bound on `|φ̄ᵗφ − 1|` tolerated along a flow.
pub const NORM_DRIFT_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorFlowSample {
    pub s: f64,
    pub spinor: HSpinor,
    pub norm_defect: f64,
}

fn jr(x: f64) -> H {
    H::new(0.0, x)
}

fn hj(a: f64, b: f64) -> H {
    H::new(a, b)
}

/// Right-hand side of the kind's spinor equation.
pub fn rhs(kind: OdeKind, curv: &CurvaturePayload, phi: &HSpinor) -> Result<HSpinor, Error> {
    use CurvaturePayload as P;
    use OdeKind as K;
    let hat = mate(phi);
    let mismatch = |payload| Error::KindPayloadMismatch { kind, payload };
    let out = match (kind, *curv) {
        // ½[j l₁ φ − (l₂ + j l₃) φ̂]
        (K::SpacelikeGeneral, P::General { l1, l2, l3 }) => (jr(l1) * *phi - hj(l2, l3) * hat) * 0.5,
        // ½[j l₂ ψ − (l₃ + j l₁) ψ̂]
        (K::TimelikeGeneral, P::General { l1, l2, l3 }) => (jr(l2) * *phi - hj(l3, l1) * hat) * 0.5,
        // −½(l̆₂ + j l̆₃) Υ̂
        (K::SpacelikeAdaptedBishop, P::Bishop { l2b, l3b }) => (hj(l2b, l3b) * hat) * -0.5,
        // ½(j q Υ − p Υ̂)
        (K::SpacelikeAdaptedFrenet, P::Frenet { p, q }) => (jr(q) * *phi - hat * p) * 0.5,
        // ½(j l̆₂ η − l̆₃ η̂)
        (K::TimelikeAdaptedBishop, P::Bishop { l2b, l3b }) => (jr(l2b) * *phi - hat * l3b) * 0.5,
        // (j/2)(p η − q η̂)
        (K::TimelikeAdaptedFrenet, P::Frenet { p, q }) => H::J * (*phi * p - hat * q) * 0.5,
        (_, P::General { .. }) => return Err(mismatch("General")),
        (_, P::Bishop { .. }) => return Err(mismatch("Bishop")),
        (_, P::Frenet { .. }) => return Err(mismatch("Frenet")),
    };
    Ok(out)
}

/// Integrates the kind's spinor equation with one RK4 step per grid interval.
pub fn propagate_spinor<F>(
    kind: OdeKind,
    mut curv: F,
    init: &HSpinor,
    grid: &[f64],
) -> Result<Vec<SpinorFlowSample>, Error>
where
    F: FnMut(f64) -> Result<CurvaturePayload, Error>,
{
    check_grid(grid)?;
    let d0 = init.norm_defect();
    if !(d0 <= NORM_TOL) {
        return Err(Error::NotNormalized { defect: d0 });
    }
    let mut f = |s: f64, y: HSpinor| rhs(kind, &curv(s)?, &y);
    let mut y = *init;
    let mut out = Vec::with_capacity(grid.len());
    out.push(SpinorFlowSample {
        s: grid[0],
        spinor: y,
        norm_defect: d0,
    });
    for w in grid.windows(2) {
        y = rk4_step(&mut f, w[0], y, w[1] - w[0])?;
        let d = y.norm_defect();
        if !(d <= NORM_DRIFT_TOL) {
            return Err(Error::NormDrift { s: w[1], defect: d });
        }
        out.push(SpinorFlowSample {
            s: w[1],
            spinor: y,
            norm_defect: d,
        });
    }
    Ok(out)
}

pub fn reconstruct_frames(samples: &[SpinorFlowSample], character: Character) -> Result<Vec<TriadSample>, Error> {
    samples
        .iter()
        .map(|x| {
            Ok(TriadSample {
                s: x.s,
                triad: frame_from_spinor_tol(&x.spinor, character, NORM_DRIFT_TOL)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelationResiduals {
    /// `‖φ − e^{jΘ/2}Υ‖`
    pub plus: f64,
    /// `‖φ + e^{jΘ/2}Υ‖`
    pub minus: f64,
    /// `min ‖φ̂ ∓ e^{−jΘ/2}Υ̂‖`
    pub mate: f64,
    /// `‖φᵗσφ − e^{jΘ}ΥᵗσΥ‖`
    pub bilinear: f64,
}

impl RelationResiduals {
    pub fn best(&self) -> f64 {
        self.plus.min(self.minus)
    }
}

/// Residuals of `φ = ±e^{jΘ/2}Υ`, its mate and its bilinear form, for a
/// spacelike spinor `φ` and its rotated companion `Υ`.
pub fn relation_phi_upsilon(phi: &HSpinor, upsilon: &HSpinor, theta: f64) -> RelationResiduals {
    let half = H::exp_j(0.5 * theta);
    let rot = upsilon.scale(half);
    let mrot = mate(upsilon).scale(H::exp_j(-0.5 * theta));
    let mphi = mate(phi);
    let lhs = bilinear(phi, phi);
    let rhs = bilinear(upsilon, upsilon).scale(H::exp_j(theta));
    RelationResiduals {
        plus: phi.dist(&rot),
        minus: phi.dist(&-rot),
        mate: mphi.dist(&mrot).min(mphi.dist(&-mrot)),
        bilinear: lhs.dist(&rhs),
    }
}

/// Pairs of formulations of the same spinor derivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MixedFormulation {
    /// General `dφ/ds` against `½[jΘ′φ − (l̆₂ + j l̆₃)e^{jΘ}φ̂]`.
    SpacelikeBishopPhi,
    /// General `dφ/ds` against `½[j(q + Θ′)φ − p e^{jΘ}φ̂]`.
    SpacelikeFrenetPhi,
    /// Bishop `dΥ/ds` against the derivative of `e^{−jΘ/2}φ` along the general flow.
    SpacelikeBishopUpsilon,
    /// Frenet `dΥ/ds` against the derivative of `e^{−jΘ/2}φ` along the general flow.
    SpacelikeFrenetUpsilon,
    /// General `dψ/ds` rewritten with Bishop curvatures.
    TimelikeBishopPsi,
    /// General `dψ/ds` rewritten with `p`, `q` and `Θ`.
    TimelikeFrenetPsi,
    /// Bishop `dη/ds` rewritten with general curvatures.
    TimelikeBishopEta,
    /// Frenet `dη/ds` rewritten with `l₁` and `Θ′`.
    TimelikeFrenetEta,
}

impl MixedFormulation {
    pub const ALL: [MixedFormulation; 8] = [
        MixedFormulation::SpacelikeBishopPhi,
        MixedFormulation::SpacelikeFrenetPhi,
        MixedFormulation::SpacelikeBishopUpsilon,
        MixedFormulation::SpacelikeFrenetUpsilon,
        MixedFormulation::TimelikeBishopPsi,
        MixedFormulation::TimelikeFrenetPsi,
        MixedFormulation::TimelikeBishopEta,
        MixedFormulation::TimelikeFrenetEta,
    ];

    pub fn character(self) -> Character {
        use MixedFormulation::*;
        match self {
            SpacelikeBishopPhi | SpacelikeFrenetPhi | SpacelikeBishopUpsilon | SpacelikeFrenetUpsilon => {
                Character::Spacelike
            }
            _ => Character::Timelike,
        }
    }

    pub fn is_frenet(self) -> bool {
        use MixedFormulation::*;
        matches!(
            self,
            SpacelikeFrenetPhi | SpacelikeFrenetUpsilon | TimelikeFrenetPsi | TimelikeFrenetEta
        )
    }
}

/// General curvatures plus the rotation angle and its rate at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedInput {
    pub l1: f64,
    pub l2: f64,
    pub l3: f64,
    pub theta: f64,
    pub theta_prime: f64,
}

/// Distance between two formulations of the same derivative at `phi`.
/// `phi` is the general-frame spinor; the adapted spinor is derived from it
/// where a formulation needs one. Frenet-type pairs take `p` from
/// [`frenet_type_theta`] and `q = l₁ − Θ′`.
pub fn cross_formulation_check(form: MixedFormulation, d: &MixedInput, phi: &HSpinor) -> Result<f64, Error> {
    use MixedFormulation::*;
    let character = form.character();
    let general = CurvaturePayload::General {
        l1: d.l1,
        l2: d.l2,
        l3: d.l3,
    };
    let (l2b, l3b) = bishop_curvatures(d.l2, d.l3, d.theta, character);
    let (p, q) = if form.is_frenet() {
        let (_, p) = frenet_type_theta(d.l2, d.l3, character)?;
        (p, d.l1 - d.theta_prime)
    } else {
        (0.0, 0.0)
    };
    let hat = mate(phi);
    let rot = H::exp_j(d.theta);
    let (c, s) = (d.theta.cos(), d.theta.sin());
    let (lhs, rhs_) = match form {
        SpacelikeBishopPhi => (
            rhs(OdeKind::SpacelikeGeneral, &general, phi)?,
            (jr(d.theta_prime) * *phi - (hj(l2b, l3b) * rot) * hat) * 0.5,
        ),
        SpacelikeFrenetPhi => (
            rhs(OdeKind::SpacelikeGeneral, &general, phi)?,
            (jr(q + d.theta_prime) * *phi - (rot * p) * hat) * 0.5,
        ),
        SpacelikeBishopUpsilon | SpacelikeFrenetUpsilon => {
            let back = H::exp_j(-0.5 * d.theta);
            let upsilon = back * *phi;
            let chain = (jr(d.theta_prime) * upsilon) * -0.5
                + back * rhs(OdeKind::SpacelikeGeneral, &general, phi)?;
            let adapted = if form == SpacelikeBishopUpsilon {
                rhs(OdeKind::SpacelikeAdaptedBishop, &CurvaturePayload::Bishop { l2b, l3b }, &upsilon)?
            } else {
                rhs(OdeKind::SpacelikeAdaptedFrenet, &CurvaturePayload::Frenet { p, q }, &upsilon)?
            };
            (chain, adapted)
        }
        TimelikeBishopPsi => (
            rhs(OdeKind::TimelikeGeneral, &general, phi)?,
            (jr(c * l2b + s * l3b) * *phi - hj(-s * l2b + c * l3b, d.theta_prime) * hat) * 0.5,
        ),
        TimelikeFrenetPsi => (
            rhs(OdeKind::TimelikeGeneral, &general, phi)?,
            (jr(p * c) * *phi - hj(-p * s, q + d.theta_prime) * hat) * 0.5,
        ),
        TimelikeBishopEta => (
            rhs(OdeKind::TimelikeAdaptedBishop, &CurvaturePayload::Bishop { l2b, l3b }, phi)?,
            (jr(d.l2 * c - d.l3 * s) * *phi - hat * (d.l2 * s + d.l3 * c)) * 0.5,
        ),
        TimelikeFrenetEta => (
            rhs(OdeKind::TimelikeAdaptedFrenet, &CurvaturePayload::Frenet { p, q }, phi)?,
            H::J * (*phi * p - hat * (d.l1 - d.theta_prime)) * 0.5,
        ),
    };
    Ok(lhs.dist(&rhs_))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ode::linspace;

    fn close(a: &HSpinor, b: &HSpinor, tol: f64) -> bool {
        a.dist(b) <= tol
    }

    #[test]
    fn zero_curvature_rhs_vanishes() {
        let phi = HSpinor::new(H::ONE, H::ZERO);
        let z = CurvaturePayload::General { l1: 0.0, l2: 0.0, l3: 0.0 };
        assert_eq!(rhs(OdeKind::SpacelikeGeneral, &z, &phi).unwrap().dist(&HSpinor::default()), 0.0);
    }

    #[test]
    fn timelike_frenet_rhs_by_hand() {
        let r3 = 3f64.sqrt();
        let phi = HSpinor::new(H::ONE, H::ZERO);
        let out = rhs(
            OdeKind::TimelikeAdaptedFrenet,
            &CurvaturePayload::Frenet { p: 2.0 / r3, q: 1.0 / r3 },
            &phi,
        )
        .unwrap();
        let want = HSpinor::new(H::new(0.0, 1.0 / r3), H::new(0.0, -0.5 / r3));
        assert!(close(&out, &want, 1e-15));
    }

    #[test]
    fn payload_must_match() {
        let phi = HSpinor::new(H::ONE, H::ZERO);
        let b = CurvaturePayload::Bishop { l2b: 1.0, l3b: 1.0 };
        assert!(matches!(
            rhs(OdeKind::TimelikeAdaptedFrenet, &b, &phi),
            Err(Error::KindPayloadMismatch { payload: "Bishop", .. })
        ));
    }

    #[test]
    fn constant_flow_for_zero_curvatures() {
        let phi = HSpinor::new(H::new(0.6, 0.2), H::new(0.3, -0.1)).normalized().unwrap();
        let z = CurvaturePayload::General { l1: 0.0, l2: 0.0, l3: 0.0 };
        let grid = linspace(0.0, 1.0, 11);
        let out = propagate_spinor(OdeKind::TimelikeGeneral, |_| Ok(z), &phi, &grid).unwrap();
        assert!(out.iter().all(|x| x.spinor == phi && x.norm_defect == phi.norm_defect()));
        let frames = reconstruct_frames(&out, Character::Timelike).unwrap();
        assert!(frames.iter().all(|f| f.triad == frames[0].triad));
    }

    #[test]
    fn unnormalized_start_is_rejected() {
        let phi = HSpinor::new(H::new(2.0, 0.0), H::ZERO);
        let z = CurvaturePayload::General { l1: 0.0, l2: 0.0, l3: 0.0 };
        assert!(matches!(
            propagate_spinor(OdeKind::SpacelikeGeneral, |_| Ok(z), &phi, &[0.0, 1.0]),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn relation_trivial_case() {
        let phi = HSpinor::new(H::new(0.6, 0.2), H::new(0.3, -0.1));
        let r = relation_phi_upsilon(&phi, &phi, 0.0);
        assert_eq!((r.plus, r.mate, r.bilinear), (0.0, 0.0, 0.0));
        let ups = phi.scale(H::exp_j(-0.4));
        let r = relation_phi_upsilon(&phi, &ups, 0.8);
        assert!(r.best() < 1e-15 && r.mate < 1e-15 && r.bilinear < 1e-14);
    }

    #[test]
    fn mixed_formulations_agree_on_consistent_data() {
        let phi = HSpinor::new(H::new(0.6, 0.2), H::new(0.3, -0.1)).normalized().unwrap();
        for form in MixedFormulation::ALL {
            let (l2, l3) = (1.3, 0.4);
            let theta = if form.is_frenet() {
                frenet_type_theta(l2, l3, form.character()).unwrap().0
            } else {
                0.37
            };
            let d = MixedInput { l1: 0.2, l2, l3, theta, theta_prime: if form.is_frenet() { -0.3 } else { 0.2 } };
            let r = cross_formulation_check(form, &d, &phi).unwrap();
            assert!(r < 1e-14, "{form:?}: {r}");
        }
        // Zero angle, no adaptation at all.
        let d = MixedInput { l1: 0.2, l2: 1.0, l3: 0.5, theta: 0.0, theta_prime: 0.2 };
        assert_eq!(cross_formulation_check(MixedFormulation::SpacelikeBishopPhi, &d, &phi).unwrap(), 0.0);
        // A Bishop pair with the wrong rate disagrees.
        let d = MixedInput { l1: 0.2, l2: 1.0, l3: 0.5, theta: 0.3, theta_prime: 0.5 };
        assert!(cross_formulation_check(MixedFormulation::SpacelikeBishopUpsilon, &d, &phi).unwrap() > 1e-3);
    }
}
