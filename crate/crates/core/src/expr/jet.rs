//! Truncated Taylor arithmetic.
//!
//! A `Jet<N>` stores the Taylor coefficients `c₀ … c_{N−1}` of a function at a
//! point, so `f(s₀ + t) = Σ c_k t^k + O(t^N)`. Derivatives are `k!·c_k`.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet<const N: usize> {
    c: [f64; N],
}

/// Value plus first three derivatives.
pub type Jet3 = Jet<4>;

fn factorial(k: usize) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * i as f64)
}

impl<const N: usize> Jet<N> {
    pub fn constant(v: f64) -> Self {
        let mut c = [0.0; N];
        c[0] = v;
        Self { c }
    }

    /// The identity function evaluated at `s`.
    pub fn variable(s: f64) -> Self {
        let mut c = [0.0; N];
        c[0] = s;
        if N > 1 {
            c[1] = 1.0;
        }
        Self { c }
    }

    pub fn from_taylor(c: [f64; N]) -> Self {
        Self { c }
    }

    /// Builds a jet from derivatives `f, f′, f″, …`.
    pub fn from_derivatives(d: [f64; N]) -> Self {
        let mut c = d;
        for (k, ck) in c.iter_mut().enumerate() {
            *ck /= factorial(k);
        }
        Self { c }
    }

    pub fn taylor(&self) -> [f64; N] {
        self.c
    }

    pub fn value(&self) -> f64 {
        self.c[0]
    }

    /// `k`-th derivative.
    pub fn derivative(&self, k: usize) -> f64 {
        self.c[k] * factorial(k)
    }

    pub fn v(&self) -> f64 {
        self.value()
    }

    pub fn d1(&self) -> f64 {
        self.derivative(1)
    }

    pub fn d2(&self) -> f64 {
        self.derivative(2)
    }

    pub fn d3(&self) -> f64 {
        self.derivative(3)
    }

    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|x| x.is_finite())
    }

    /// Jet of the derivative, one order shorter.
    pub fn differentiate<const M: usize>(&self) -> Jet<M> {
        const { assert!(M < N) };
        let mut c = [0.0; M];
        for (k, ck) in c.iter_mut().enumerate() {
            *ck = self.c[k + 1] * (k + 1) as f64;
        }
        Jet { c }
    }

    pub fn truncate<const M: usize>(&self) -> Jet<M> {
        const { assert!(M <= N) };
        let mut c = [0.0; M];
        c.copy_from_slice(&self.c[..M]);
        Jet { c }
    }

    pub fn scale(&self, k: f64) -> Self {
        Self {
            c: self.c.map(|x| x * k),
        }
    }

    /// `None` when the value vanishes.
    pub fn recip(&self) -> Option<Self> {
        Self::constant(1.0).checked_div(self)
    }

    pub fn checked_div(&self, g: &Self) -> Option<Self> {
        if g.c[0] == 0.0 {
            return None;
        }
        let mut h = [0.0; N];
        for k in 0..N {
            let mut acc = self.c[k];
            for i in 1..=k {
                acc -= g.c[i] * h[k - i];
            }
            h[k] = acc / g.c[0];
        }
        Some(Self { c: h })
    }

    /// Integer power; negative exponents need a nonzero value.
    pub fn powi(&self, n: i32) -> Option<Self> {
        let mut acc = Self::constant(1.0);
        let mut base = *self;
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        if n < 0 {
            acc.recip()
        } else {
            Some(acc)
        }
    }

    /// `Σ a_k (u − u₀)^k` where `a_k = f^{(k)}(u₀)/k!`.
    fn compose(&self, a: [f64; N]) -> Self {
        let mut delta = *self;
        delta.c[0] = 0.0;
        let mut r = Self::constant(a[N - 1]);
        for k in (0..N - 1).rev() {
            r = r * delta;
            r.c[0] += a[k];
        }
        r
    }

    fn compose_cyclic(&self, cycle: &[f64]) -> Self {
        let mut a = [0.0; N];
        for (k, ak) in a.iter_mut().enumerate() {
            *ak = cycle[k % cycle.len()] / factorial(k);
        }
        self.compose(a)
    }

    pub fn exp(&self) -> Self {
        let e = self.c[0].exp();
        self.compose_cyclic(&[e])
    }

    pub fn sin(&self) -> Self {
        let (s, c) = self.c[0].sin_cos();
        self.compose_cyclic(&[s, c, -s, -c])
    }

    pub fn cos(&self) -> Self {
        let (s, c) = self.c[0].sin_cos();
        self.compose_cyclic(&[c, -s, -c, s])
    }

    pub fn sinh(&self) -> Self {
        let u = self.c[0];
        self.compose_cyclic(&[u.sinh(), u.cosh()])
    }

    pub fn cosh(&self) -> Self {
        let u = self.c[0];
        self.compose_cyclic(&[u.cosh(), u.sinh()])
    }

    /// Needs a positive value, or zero when only the value is tracked.
    pub fn sqrt(&self) -> Option<Self> {
        let u = self.c[0];
        if u < 0.0 || (u == 0.0 && N > 1) {
            return None;
        }
        let mut a = [0.0; N];
        a[0] = u.sqrt();
        for k in 1..N {
            a[k] = a[k - 1] * (0.5 - (k - 1) as f64) / (k as f64 * u);
        }
        Some(self.compose(a))
    }
}

impl<const N: usize> Add for Jet<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            c: std::array::from_fn(|k| self.c[k] + rhs.c[k]),
        }
    }
}

impl<const N: usize> Sub for Jet<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            c: std::array::from_fn(|k| self.c[k] - rhs.c[k]),
        }
    }
}

impl<const N: usize> Neg for Jet<N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl<const N: usize> Mul for Jet<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut c = [0.0; N];
        for (k, ck) in c.iter_mut().enumerate() {
            *ck = (0..=k).map(|i| self.c[i] * rhs.c[k - i]).sum();
        }
        Self { c }
    }
}

impl<const N: usize> Mul<f64> for Jet<N> {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        self.scale(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * (1.0 + b.abs())
    }

    #[test]
    fn product_rule() {
        let s = Jet3::variable(2.0);
        let f = s * s * s;
        assert_eq!([f.v(), f.d1(), f.d2(), f.d3()], [8.0, 12.0, 12.0, 6.0]);
    }

    #[test]
    fn quotient() {
        let s = Jet3::variable(1.0);
        let f = Jet3::constant(1.0).checked_div(&s).unwrap();
        assert!(close(f.d1(), -1.0) && close(f.d2(), 2.0) && close(f.d3(), -6.0));
        assert!(Jet3::constant(1.0).checked_div(&Jet3::variable(0.0)).is_none());
    }

    #[test]
    fn elementary_functions_at_zero() {
        let s = Jet3::variable(0.0);
        let c = s.cosh();
        assert_eq!([c.v(), c.d1(), c.d2(), c.d3()], [1.0, 0.0, 1.0, 0.0]);
        let sn = s.sin();
        assert!(close(sn.d1(), 1.0) && close(sn.d3(), -1.0));
        let e = s.exp();
        assert!(close(e.d3(), 1.0));
    }

    #[test]
    fn sqrt_series() {
        // d/ds √s = 1/(2√s), d² = −1/(4 s^{3/2}), d³ = 3/(8 s^{5/2})
        let r = Jet3::variable(4.0).sqrt().unwrap();
        assert!(close(r.v(), 2.0));
        assert!(close(r.d1(), 0.25));
        assert!(close(r.d2(), -1.0 / 32.0));
        assert!(close(r.d3(), 3.0 / 256.0));
        assert!(Jet3::variable(0.0).sqrt().is_none());
        assert_eq!(Jet::<1>::variable(0.0).sqrt(), Some(Jet::<1>::constant(0.0)));
    }

    #[test]
    fn differentiate_and_powi() {
        let s = Jet3::variable(1.5);
        let f = s.powi(3).unwrap();
        let g: Jet<3> = f.differentiate();
        assert!(close(g.value(), 3.0 * 1.5 * 1.5));
        assert!(close(g.derivative(1), 9.0));
        let inv = s.powi(-2).unwrap();
        assert!(close(inv.d1(), -2.0 / 1.5f64.powi(3)));
        assert!(Jet3::variable(0.0).powi(-1).is_none());
    }
}
