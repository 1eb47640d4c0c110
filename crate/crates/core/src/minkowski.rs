//! Lorentzian linear algebra in ℝ³₁ with signature (−, +, +).

use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

use crate::hypnum::{nan_max, HyperbolicNumber};

/// Default tolerance for classifying numerically computed vectors.
pub const CAUSAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3M(pub [f64; 3]);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CausalCharacter {
    Spacelike,
    Timelike,
    Null,
}

impl Vec3M {
    pub const ZERO: Self = Self([0.0; 3]);
    pub const E1: Self = Self([1.0, 0.0, 0.0]);
    pub const E2: Self = Self([0.0, 1.0, 0.0]);
    pub const E3: Self = Self([0.0, 0.0, 1.0]);

    pub const fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Self([x1, x2, x3])
    }

    pub fn inner(&self, w: &Vec3M) -> f64 {
        inner(self, w)
    }

    pub fn cross(&self, w: &Vec3M) -> Vec3M {
        cross(self, w)
    }

    /// `sqrt(|⟨v, v⟩|)`.
    pub fn norm(&self) -> f64 {
        inner(self, self).abs().sqrt()
    }

    /// Largest absolute coordinate difference.
    pub fn dist(&self, w: &Vec3M) -> f64 {
        (0..3)
            .map(|i| (self.0[i] - w.0[i]).abs())
            .fold(0.0, nan_max)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }
}

pub fn inner(v: &Vec3M, w: &Vec3M) -> f64 {
    -v.0[0] * w.0[0] + v.0[1] * w.0[1] + v.0[2] * w.0[2]
}

/// Cofactor expansion of the determinant with first row `(−e₁, e₂, e₃)`.
pub fn cross(v: &Vec3M, w: &Vec3M) -> Vec3M {
    let [v1, v2, v3] = v.0;
    let [w1, w2, w3] = w.0;
    Vec3M([-(v2 * w3 - v3 * w2), -(v1 * w3 - v3 * w1), v1 * w2 - v2 * w1])
}

/// Ordinary determinant of the matrix with rows `u, v, w`; equals `⟨u × v, w⟩`.
pub fn det(u: &Vec3M, v: &Vec3M, w: &Vec3M) -> f64 {
    let [a, b, c] = u.0;
    let [d, e, f] = v.0;
    let [g, h, i] = w.0;
    a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
}

pub fn causal_character(v: &Vec3M, tol: f64) -> CausalCharacter {
    let q = inner(v, v);
    if q > tol {
        CausalCharacter::Spacelike
    } else if q < -tol {
        CausalCharacter::Timelike
    } else {
        CausalCharacter::Null
    }
}

/// Membership in the de Sitter 2-space S²₁ (`⟨v, v⟩ = 1`).
pub fn in_de_sitter(v: &Vec3M, tol: f64) -> bool {
    (inner(v, v) - 1.0).abs() <= tol
}

/// Membership in the hyperbolic 2-space H²₀ (`⟨v, v⟩ = −1`).
pub fn in_hyperbolic_plane(v: &Vec3M, tol: f64) -> bool {
    (inner(v, v) + 1.0).abs() <= tol
}

impl Add for Vec3M {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2]])
    }
}

impl AddAssign for Vec3M {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for Vec3M {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self([self.0[0] - rhs.0[0], self.0[1] - rhs.0[1], self.0[2] - rhs.0[2]])
    }
}

impl Neg for Vec3M {
    type Output = Self;
    fn neg(self) -> Self {
        Self([-self.0[0], -self.0[1], -self.0[2]])
    }
}

impl Mul<f64> for Vec3M {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Self([self.0[0] * k, self.0[1] * k, self.0[2] * k])
    }
}

impl Mul<Vec3M> for f64 {
    type Output = Vec3M;
    fn mul(self, v: Vec3M) -> Vec3M {
        v * self
    }
}

impl Index<usize> for Vec3M {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// A hyperbolic-valued 3-vector `a + jb`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct HVec3(pub [HyperbolicNumber; 3]);

impl HVec3 {
    pub fn from_parts(a: &Vec3M, b: &Vec3M) -> Self {
        Self(std::array::from_fn(|i| HyperbolicNumber::new(a.0[i], b.0[i])))
    }

    /// Real part `a`.
    pub fn re(&self) -> Vec3M {
        Vec3M(self.0.map(|h| h.a))
    }

    /// `j`-part `b`.
    pub fn im(&self) -> Vec3M {
        Vec3M(self.0.map(|h| h.b))
    }

    pub fn conj(&self) -> Self {
        Self(self.0.map(HyperbolicNumber::conj))
    }

    pub fn scale(&self, k: HyperbolicNumber) -> Self {
        Self(self.0.map(|h| h * k))
    }

    /// Hyperbolic-valued bilinear form `⟨ϑ, ϑ'⟩` (no conjugation).
    pub fn inner(&self, w: &HVec3) -> HyperbolicNumber {
        -(self.0[0] * w.0[0]) + self.0[1] * w.0[1] + self.0[2] * w.0[2]
    }

    pub fn dist(&self, w: &HVec3) -> f64 {
        (0..3).map(|i| self.0[i].dist(w.0[i])).fold(0.0, nan_max)
    }
}

impl Add for HVec3 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Neg for HVec3 {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|h| -h))
    }
}

/// Returns `(⟨a,a⟩ + ⟨b,b⟩, ⟨a,b⟩)` for `a + jb`, so that
/// `⟨ϑ, ϑ⟩ = d1 + 2j·d2`. Both vanish iff `ϑ` is isotropic.
pub fn isotropy_defect(hv: &HVec3) -> (f64, f64) {
    let a = hv.re();
    let b = hv.im();
    (inner(&a, &a) + inner(&b, &b), inner(&a, &b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basis_inner_products() {
        assert_eq!(inner(&Vec3M::E1, &Vec3M::E1), -1.0);
        assert_eq!(inner(&Vec3M::E2, &Vec3M::E2), 1.0);
        assert_eq!(inner(&Vec3M::E1, &Vec3M::E3), 0.0);
    }

    #[test]
    fn cross_by_hand() {
        assert_eq!(cross(&Vec3M::E2, &Vec3M::E3), Vec3M::new(-1.0, 0.0, 0.0));
        let v = Vec3M::new(1.0, 2.0, 3.0);
        assert_eq!(cross(&v, &v), Vec3M::ZERO);
    }

    #[test]
    fn cross_of_first_example_normals_at_origin() {
        // ν₁(0) = (0, 1, −1)/√2, ν₂(0) = (2, 1, 1)/√2
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let n1 = Vec3M::new(0.0, r, -r);
        let n2 = Vec3M::new(2.0 * r, r, r);
        let m = cross(&n1, &n2);
        assert!(m.dist(&Vec3M::new(-1.0, -1.0, -1.0)) < 1e-15);
    }

    #[test]
    fn first_example_mu_at_one_is_unit_spacelike() {
        // μ(1) = −(1, 2, 2)/√7
        let k = -1.0 / 7f64.sqrt();
        let mu = Vec3M::new(1.0, 2.0, 2.0) * k;
        assert!((inner(&mu, &mu) - 1.0).abs() < 1e-15);
        assert!(in_de_sitter(&mu, 1e-12));
    }

    #[test]
    fn classification() {
        assert_eq!(causal_character(&Vec3M::E2, CAUSAL_TOL), CausalCharacter::Spacelike);
        assert_eq!(causal_character(&Vec3M::E1, CAUSAL_TOL), CausalCharacter::Timelike);
        assert_eq!(
            causal_character(&Vec3M::new(1.0, 1.0, 0.0), CAUSAL_TOL),
            CausalCharacter::Null
        );
        assert!(in_hyperbolic_plane(&Vec3M::E1, 1e-12));
    }

    #[test]
    fn isotropy_examples() {
        // ν₁ ∈ S²₁, ν₂ ∈ H²₀, orthogonal.
        let d = isotropy_defect(&HVec3::from_parts(&Vec3M::E2, &Vec3M::E1));
        assert_eq!(d, (0.0, 0.0));
        let d = isotropy_defect(&HVec3::from_parts(&Vec3M::E2, &Vec3M::E2));
        assert_eq!(d, (2.0, 1.0));
        // Second example at s = 0: μ = (2, 0, 1)/√3, ν₁ = (0, −1, 0).
        let r3 = 3f64.sqrt();
        let mu = Vec3M::new(2.0 / r3, 0.0, 1.0 / r3);
        let n1 = Vec3M::new(0.0, -1.0, 0.0);
        let (d1, d2) = isotropy_defect(&HVec3::from_parts(&mu, &n1));
        assert!(d1.abs() < 1e-15 && d2.abs() < 1e-15);
    }

    #[test]
    fn hvec_inner_matches_defect() {
        let hv = HVec3::from_parts(&Vec3M::new(0.3, 1.0, -2.0), &Vec3M::new(1.5, 0.2, 0.7));
        let (d1, d2) = isotropy_defect(&hv);
        let q = hv.inner(&hv);
        assert!((q.a - d1).abs() < 1e-14);
        assert!((q.b - 2.0 * d2).abs() < 1e-14);
    }

    fn vec3() -> impl Strategy<Value = Vec3M> {
        prop::array::uniform3(-10.0f64..10.0).prop_map(Vec3M)
    }

    proptest! {
        #[test]
        fn cross_is_antisymmetric_and_orthogonal(v in vec3(), w in vec3()) {
            let c = cross(&v, &w);
            prop_assert!(c.dist(&-cross(&w, &v)) <= 1e-12);
            let scale = 1.0 + c.0.iter().map(|x| x.abs()).sum::<f64>() * 10.0;
            prop_assert!(inner(&c, &v).abs() <= 1e-12 * scale);
            prop_assert!(inner(&c, &w).abs() <= 1e-12 * scale);
        }

        #[test]
        fn mixed_product_is_determinant(u in vec3(), v in vec3(), w in vec3()) {
            let lhs = inner(&cross(&u, &v), &w);
            prop_assert!((lhs - det(&u, &v, &w)).abs() <= 1e-10);
        }
    }
}
