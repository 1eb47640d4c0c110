//! Hyperbolic 2-spinors and their correspondence with orthonormal triads.
//!
//! A spinor `φ = (φ₁, φ₂)` defines the isotropic vector `ϑ = φᵗσφ` and the
//! real vector `−φ̂ᵗσφ`, where `φ̂ = (−φ̄₂, φ̄₁)` is the mate. For spacelike
//! curves `ϑ = ν₁ + jν₂` and `μ = −φ̂ᵗσφ`; for timelike curves
//! `ϑ = μ + jν₁` and `ν₂ = −ψ̂ᵗσψ`. The map is two-to-one: `±φ` give the
//! same triad.
//!
//! With `j² = +1` the square `ϑ` is only isotropic when `φ₁φ₂ = 0`:
//! in general `⟨ϑ, ϑ⟩ = 8φ₁²φ₂²`, so most normalized spinors give triads
//! that are not orthonormal. The formulas are implemented as stated and
//! the inverse is exact on their image.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;
use crate::framed_curve::Character;
use crate::hypnum::{nan_max, HyperbolicNumber as H};
use crate::minkowski::HVec3;
use crate::ode::Triad;

/// Tolerance on `|φ̄ᵗφ − 1|` accepted as normalized.
pub const NORM_TOL: f64 = 1e-9;
/// Reconstruction tolerance in [`spinor_from_frame`], relative to the squared
/// size of the triad entries.
pub const FRAME_TOL: f64 = 1e-9;
/// Negative null components above `−REP_TOL` are rounding noise.
const REP_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HSpinor {
    pub c1: H,
    pub c2: H,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

const O: H = H::ZERO;
const I: H = H::ONE;
const J: H = H::J;
const MI: H = H::new(-1.0, 0.0);

/// `σ₁ = diag(1, −1)`, `σ₂ = diag(j, j)`, `σ₃ = antidiag(−1, −1)`.
pub const SIGMA: [[[H; 2]; 2]; 3] = [[[I, O], [O, MI]], [[J, O], [O, J]], [[O, MI], [MI, O]]];

impl HSpinor {
    pub const fn new(c1: H, c2: H) -> Self {
        Self { c1, c2 }
    }

    pub fn mate(&self) -> Self {
        mate(self)
    }

    /// `φ̄ᵗφ = |φ₁|² + |φ₂|²`, always real.
    pub fn norm(&self) -> H {
        self.c1.conj() * self.c1 + self.c2.conj() * self.c2
    }

    pub fn norm_defect(&self) -> f64 {
        let n = self.norm();
        nan_max((n.a - 1.0).abs(), n.b.abs())
    }

    pub fn scale(&self, k: H) -> Self {
        Self::new(k * self.c1, k * self.c2)
    }

    pub fn dist(&self, other: &HSpinor) -> f64 {
        nan_max(self.c1.dist(other.c1), self.c2.dist(other.c2))
    }

    pub fn is_finite(&self) -> bool {
        self.c1.is_finite() && self.c2.is_finite()
    }

    /// `(c1.a, c1.b, c2.a, c2.b)`.
    pub fn to_array(&self) -> [f64; 4] {
        [self.c1.a, self.c1.b, self.c2.a, self.c2.b]
    }

    pub fn from_array(x: [f64; 4]) -> Self {
        Self::new(H::new(x[0], x[1]), H::new(x[2], x[3]))
    }

    /// Rescales to `φ̄ᵗφ = 1`, multiplying by `j` first when the norm is
    /// negative. `None` for null or non-finite spinors.
    pub fn normalized(&self) -> Option<Self> {
        let n = self.norm().a;
        if !n.is_finite() || n == 0.0 {
            return None;
        }
        let base = if n > 0.0 { *self } else { self.scale(J) };
        Some(base * (1.0 / n.abs().sqrt()))
    }
}

impl Add for HSpinor {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.c1 + rhs.c1, self.c2 + rhs.c2)
    }
}

impl Sub for HSpinor {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.c1 - rhs.c1, self.c2 - rhs.c2)
    }
}

impl Neg for HSpinor {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.c1, -self.c2)
    }
}

impl Mul<f64> for HSpinor {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Self::new(self.c1 * k, self.c2 * k)
    }
}

impl Mul<HSpinor> for H {
    type Output = HSpinor;
    fn mul(self, phi: HSpinor) -> HSpinor {
        phi.scale(self)
    }
}

/// `φ̂ = (−φ̄₂, φ̄₁)`.
pub fn mate(phi: &HSpinor) -> HSpinor {
    HSpinor::new(-phi.c2.conj(), phi.c1.conj())
}

/// Components `ηᵗσᵢφ` by direct expansion.
pub fn bilinear(eta: &HSpinor, phi: &HSpinor) -> HVec3 {
    let (e1, e2, p1, p2) = (eta.c1, eta.c2, phi.c1, phi.c2);
    HVec3([e1 * p1 - e2 * p2, J * (e1 * p1 + e2 * p2), -(e1 * p2 + e2 * p1)])
}

/// `ηᵗ M φ` for a 2×2 hyperbolic matrix.
pub fn sigma_form(eta: &HSpinor, m: &[[H; 2]; 2], phi: &HSpinor) -> H {
    let e = [eta.c1, eta.c2];
    let p = [phi.c1, phi.c2];
    let mut acc = H::ZERO;
    for r in 0..2 {
        for c in 0..2 {
            acc += e[r] * m[r][c] * p[c];
        }
    }
    acc
}

/// Triad of a spinor with `|φ̄ᵗφ − 1| ≤ tol`.
pub fn frame_from_spinor_tol(phi: &HSpinor, character: Character, tol: f64) -> Result<Triad, Error> {
    let defect = phi.norm_defect();
    if !(defect <= tol) {
        return Err(Error::NotNormalized { defect });
    }
    let iso = bilinear(phi, phi);
    let real = -bilinear(&mate(phi), phi).re();
    Ok(match character {
        Character::Spacelike => Triad::new(real, iso.re(), iso.im()),
        Character::Timelike => Triad::new(iso.re(), iso.im(), real),
    })
}

pub fn frame_from_spinor(phi: &HSpinor, character: Character) -> Result<Triad, Error> {
    frame_from_spinor_tol(phi, character, NORM_TOL)
}

fn entry_scale(t: &Triad) -> f64 {
    let m = t
        .vectors()
        .iter()
        .flat_map(|v| v.0)
        .map(f64::abs)
        .fold(1.0, nan_max);
    m * m
}

/// `x₂ = ±√u₂` with the sign that best satisfies `−2x₁x₂ = w`.
fn pick_partner(x1: f64, u2: f64, w: f64) -> f64 {
    let r = u2.sqrt();
    if (-2.0 * x1 * r - w).abs() <= (2.0 * x1 * r - w).abs() {
        r
    } else {
        -r
    }
}

fn null_sqrt_input(h: H, component: u8, scale: f64) -> Result<(f64, f64), Error> {
    let (u, v) = h.null_components();
    if !(u >= -REP_TOL * scale && v >= -REP_TOL * scale) {
        return Err(Error::NotRepresentable { component, u, v });
    }
    Ok((u.max(0.0), v.max(0.0)))
}

/// Inverts [`frame_from_spinor`]: `φ₁² = (ϑ₁ + jϑ₂)/2`, `φ₂² = (−ϑ₁ + jϑ₂)/2`
/// and `−2φ₁φ₂ = ϑ₃`, solved separately in each null component.
///
/// The Gram matrix is not checked: spinor triads are generally not
/// orthonormal. Instead the result must reproduce the whole triad,
/// including the real vector, or `SignInconsistent` is returned.
pub fn spinor_from_frame(t: &Triad, character: Character, branch: Branch) -> Result<HSpinor, Error> {
    let scale = entry_scale(t);
    let theta = match character {
        Character::Spacelike => HVec3::from_parts(&t.nu1, &t.nu2),
        Character::Timelike => HVec3::from_parts(&t.mu, &t.nu1),
    };
    let [t1, t2, t3] = theta.0;
    let r1 = (t1 + J * t2).scale(0.5);
    let r2 = (-t1 + J * t2).scale(0.5);
    let (u1, v1) = null_sqrt_input(r1, 1, scale)?;
    let (u2, v2) = null_sqrt_input(r2, 2, scale)?;
    let (wu, wv) = t3.null_components();

    let x1 = u1.sqrt();
    let x2 = if x1 > 0.0 { pick_partner(x1, u2, wu) } else { u2.sqrt() };
    let y1 = v1.sqrt();
    let y2 = if y1 > 0.0 { pick_partner(y1, v2, wv) } else { v2.sqrt() };
    let (y1, y2) = if x1 * y1 + x2 * y2 < 0.0 { (-y1, -y2) } else { (y1, y2) };

    let mut phi = HSpinor::new(H::from_null(x1, y1), H::from_null(x2, y2));
    let lead = [x1, y1, x2, y2].into_iter().find(|x| *x != 0.0).unwrap_or(0.0);
    let flip = match branch {
        Branch::Plus => lead < 0.0,
        Branch::Minus => lead > 0.0,
    };
    if flip {
        phi = -phi;
    }
    let back = frame_from_spinor_tol(&phi, character, f64::INFINITY)?;
    let defect = back.dist(t);
    if !(defect <= FRAME_TOL * scale) {
        return Err(Error::SignInconsistent { defect });
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::{cross, isotropy_defect, Vec3M};
    use proptest::prelude::*;

    fn h(a: f64, b: f64) -> H {
        H::new(a, b)
    }

    fn sp(a: f64, b: f64, c: f64, d: f64) -> HSpinor {
        HSpinor::new(h(a, b), h(c, d))
    }

    #[test]
    fn mate_examples() {
        assert_eq!(mate(&sp(1.0, 0.0, 0.0, 0.0)), sp(0.0, 0.0, 1.0, 0.0));
        assert_eq!(mate(&sp(1.0, 1.0, 2.0, 0.0)), sp(-2.0, 0.0, 1.0, -1.0));
        let phi = sp(0.3, -1.0, 2.0, 0.5);
        let rho = h(2.0, 1.0);
        assert!(mate(&phi.scale(rho)).dist(&mate(&phi).scale(rho.conj())) < 1e-15);
        assert_eq!(mate(&mate(&phi)), -phi);
    }

    #[test]
    fn bilinear_of_basis_spinor() {
        let e = sp(1.0, 0.0, 0.0, 0.0);
        assert_eq!(bilinear(&e, &e), HVec3([H::ONE, J, H::ZERO]));
    }

    #[test]
    fn basis_spinor_frames() {
        let e = sp(1.0, 0.0, 0.0, 0.0);
        let t = frame_from_spinor(&e, Character::Spacelike).unwrap();
        assert_eq!(t, Triad::new(Vec3M::E3, Vec3M::E1, Vec3M::E2));
        assert_eq!(t.expected_gram(Character::Spacelike), [1.0, -1.0, 1.0]);
        assert_eq!(cross(&t.nu1, &t.nu2), t.mu);
        let t = frame_from_spinor(&e, Character::Timelike).unwrap();
        assert_eq!(t, Triad::new(Vec3M::E1, Vec3M::E2, Vec3M::E3));
        assert_eq!(cross(&t.nu1, &t.nu2), -t.mu);
        assert!(matches!(
            frame_from_spinor(&sp(2.0, 0.0, 0.0, 0.0), Character::Spacelike),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn basis_spinor_round_trip() {
        let e = sp(1.0, 0.0, 0.0, 0.0);
        for c in [Character::Spacelike, Character::Timelike] {
            let t = frame_from_spinor(&e, c).unwrap();
            assert_eq!(spinor_from_frame(&t, c, Branch::Plus).unwrap(), e);
            assert_eq!(spinor_from_frame(&t, c, Branch::Minus).unwrap(), -e);
        }
    }

    #[test]
    fn sigma_matrices_are_symmetric_and_match_expansion() {
        for m in &SIGMA {
            assert_eq!(m[0][1], m[1][0]);
        }
        let eta = sp(0.3, -1.0, 2.0, 0.5);
        let phi = sp(-0.7, 0.2, 1.1, 1.9);
        let b = bilinear(&eta, &phi);
        for i in 0..3 {
            assert!(b.0[i].dist(sigma_form(&eta, &SIGMA[i], &phi)) < 1e-14);
        }
    }

    #[test]
    fn normalization() {
        let phi = sp(0.3, 2.0, 1.0, 0.1).normalized().unwrap();
        assert!(phi.norm_defect() < 1e-14);
        assert!(sp(1.0, 1.0, 0.0, 0.0).normalized().is_none());
    }

    #[test]
    fn inconsistent_triads_are_rejected() {
        let t = Triad::new(Vec3M::E3 * 1.1, Vec3M::E1, Vec3M::E2);
        assert!(matches!(
            spinor_from_frame(&t, Character::Spacelike, Branch::Plus),
            Err(Error::SignInconsistent { .. })
        ));
        // Orthonormal timelike triad with the wrong orientation.
        let t = Triad::new(Vec3M::E1, Vec3M::E3, Vec3M::E2);
        assert!(matches!(
            spinor_from_frame(&t, Character::Timelike, Branch::Plus),
            Err(Error::SignInconsistent { .. }) | Err(Error::NotRepresentable { .. })
        ));
    }

    #[test]
    fn generic_spinor_square_is_not_isotropic() {
        let phi = sp(1.0, 0.0, 1.0, 0.0).normalized().unwrap();
        let (d1, d2) = isotropy_defect(&bilinear(&phi, &phi));
        assert!((d1 - 2.0).abs() < 1e-14 && d2.abs() < 1e-14);
        let t = frame_from_spinor(&phi, Character::Spacelike).unwrap();
        assert!(t.gram_defect(Character::Spacelike) > 1.0);
    }

    prop_compose! {
        fn spinor()(x in prop::array::uniform4(-2.0f64..2.0)) -> HSpinor {
            HSpinor::from_array(x)
        }
    }

    prop_compose! {
        fn unit_spinor()(x in prop::array::uniform4(-1.5f64..1.5)
            .prop_filter("norm bounded away from 0", |x| {
                let p = HSpinor::from_array(*x);
                p.norm().a.abs() > 0.3
            })) -> HSpinor {
            HSpinor::from_array(x).normalized().unwrap()
        }
    }

    fn character() -> impl Strategy<Value = Character> {
        prop_oneof![Just(Character::Spacelike), Just(Character::Timelike)]
    }

    proptest! {
        #[test]
        fn bilinear_is_symmetric(eta in spinor(), phi in spinor()) {
            prop_assert!(bilinear(&eta, &phi).dist(&bilinear(&phi, &eta)) <= 1e-12);
        }

        #[test]
        fn conjugated_bilinear_is_minus_mate_bilinear(eta in spinor(), phi in spinor()) {
            let lhs = bilinear(&eta, &phi).conj();
            let rhs = -bilinear(&mate(&eta), &mate(&phi));
            prop_assert!(lhs.dist(&rhs) <= 1e-12);
        }

        #[test]
        fn mate_is_antilinear(eta in spinor(), phi in spinor(), r1 in prop::array::uniform2(-2.0f64..2.0), r2 in prop::array::uniform2(-2.0f64..2.0)) {
            let (r1, r2) = (h(r1[0], r1[1]), h(r2[0], r2[1]));
            let lhs = mate(&(eta.scale(r1) + phi.scale(r2)));
            let rhs = mate(&eta).scale(r1.conj()) + mate(&phi).scale(r2.conj());
            prop_assert!(lhs.dist(&rhs) <= 1e-12);
            prop_assert_eq!(mate(&mate(&phi)), -phi);
        }

        #[test]
        fn square_length_is_eight_phi1_sq_phi2_sq(phi in spinor()) {
            let iso = bilinear(&phi, &phi);
            let len = iso.inner(&iso);
            let p = phi.c1 * phi.c2;
            let want = (p * p).scale(8.0);
            prop_assert!(len.dist(want) <= 1e-10 * (1.0 + want.a.abs() + want.b.abs()));
        }

        #[test]
        fn two_to_one(phi in unit_spinor(), c in character()) {
            prop_assert_eq!(frame_from_spinor(&-phi, c).unwrap(), frame_from_spinor(&phi, c).unwrap());
        }

        #[test]
        fn one_component_spinors_give_orthonormal_triads(t in -2.0f64..2.0, second in any::<bool>(), c in character()) {
            let z = H::exp_j(t);
            let phi = if second { HSpinor::new(H::ZERO, z) } else { HSpinor::new(z, H::ZERO) };
            let tr = frame_from_spinor(&phi, c).unwrap();
            let scale = entry_scale(&tr);
            prop_assert!(tr.gram_defect(c) <= 1e-10 * scale);
            let (d1, d2) = isotropy_defect(&bilinear(&phi, &phi));
            prop_assert!(d1.abs() <= 1e-10 * scale && d2.abs() <= 1e-10 * scale);
            match c {
                Character::Spacelike => {
                    prop_assert_eq!(tr.delta(), -1.0);
                    prop_assert!(cross(&tr.nu1, &tr.nu2).dist(&tr.mu) <= 1e-10 * scale);
                }
                Character::Timelike => {
                    prop_assert!(cross(&tr.nu1, &tr.nu2).dist(&-tr.mu) <= 1e-10 * scale);
                }
            }
        }

        #[test]
        fn round_trip_recovers_spinor_up_to_sign(phi in unit_spinor(), c in character()) {
            let t = frame_from_spinor(&phi, c).unwrap();
            let back = spinor_from_frame(&t, c, Branch::Plus).unwrap();
            prop_assert!(back.dist(&phi).min(back.dist(&-phi)) <= 1e-10);
            let minus = spinor_from_frame(&t, c, Branch::Minus).unwrap();
            prop_assert_eq!(minus, -back);
        }
    }
}
