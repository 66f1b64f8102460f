//! Quaternion arithmetic for the chart `R^4` read as `x + y i + z j + w k`.

use std::ops::{Add, Mul, Neg, Sub};

/// A quaternion `s + i i + j j + k k` with real components.
#[derive(Copy, Clone, Debug, PartialEq, Default)]
pub struct Quaternion {
    /// Scalar part.
    pub s: f64,
    /// Coefficient of `i`.
    pub i: f64,
    /// Coefficient of `j`.
    pub j: f64,
    /// Coefficient of `k`.
    pub k: f64,
}

impl Quaternion {
    /// The zero quaternion.
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    /// The multiplicative unit.
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    /// The imaginary unit `i`.
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    /// The imaginary unit `j`.
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    /// The imaginary unit `k`.
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    /// Builds a quaternion from components.
    #[inline(always)]
    pub const fn new(s: f64, i: f64, j: f64, k: f64) -> Self {
        Quaternion { s, i, j, k }
    }

    /// Reads chart coordinates `(x, y, z, w)` as `x + y i + z j + w k`.
    #[inline(always)]
    pub const fn from_chart(coords: [f64; 4]) -> Self {
        Quaternion::new(coords[0], coords[1], coords[2], coords[3])
    }

    /// Quaternionic conjugate `s - i i - j j - k k`.
    #[inline(always)]
    pub fn conj(self) -> Self {
        Quaternion::new(self.s, -self.i, -self.j, -self.k)
    }

    /// Squared Euclidean norm.
    #[inline(always)]
    pub fn norm_sq(self) -> f64 {
        self.s * self.s + self.i * self.i + self.j * self.j + self.k * self.k
    }

    /// Euclidean norm.
    #[inline(always)]
    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Euclidean inner product of the component vectors.
    #[inline(always)]
    pub fn dot(self, rhs: Self) -> f64 {
        self.s * rhs.s + self.i * rhs.i + self.j * rhs.j + self.k * rhs.k
    }

    /// Scales all components.
    #[inline(always)]
    pub fn scale(self, t: f64) -> Self {
        Quaternion::new(self.s * t, self.i * t, self.j * t, self.k * t)
    }

    /// The imaginary components `(i, j, k)`.
    #[inline(always)]
    pub fn imag(self) -> [f64; 3] {
        [self.i, self.j, self.k]
    }

    /// The standard basis `1, i, j, k` indexed by chart axis.
    #[inline(always)]
    pub fn basis(axis: usize) -> Self {
        match axis {
            0 => Quaternion::ONE,
            1 => Quaternion::I,
            2 => Quaternion::J,
            3 => Quaternion::K,
            _ => panic!("quaternion basis index {axis} out of range"),
        }
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    #[inline(always)]
    fn add(self, rhs: Self) -> Self {
        Quaternion::new(
            self.s + rhs.s,
            self.i + rhs.i,
            self.j + rhs.j,
            self.k + rhs.k,
        )
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    #[inline(always)]
    fn sub(self, rhs: Self) -> Self {
        Quaternion::new(
            self.s - rhs.s,
            self.i - rhs.i,
            self.j - rhs.j,
            self.k - rhs.k,
        )
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    #[inline(always)]
    fn neg(self) -> Self {
        Quaternion::new(-self.s, -self.i, -self.j, -self.k)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    /// Hamilton product: `ij = k`, `jk = i`, `ki = j`.
    #[inline(always)]
    fn mul(self, rhs: Self) -> Self {
        Quaternion::new(
            self.s * rhs.s - self.i * rhs.i - self.j * rhs.j - self.k * rhs.k,
            self.s * rhs.i + self.i * rhs.s + self.j * rhs.k - self.k * rhs.j,
            self.s * rhs.j - self.i * rhs.k + self.j * rhs.s + self.k * rhs.i,
            self.s * rhs.k + self.i * rhs.j - self.j * rhs.i + self.k * rhs.s,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn hamilton_table() {
        use Quaternion as Q;
        assert_eq!(Q::I * Q::J, Q::K);
        assert_eq!(Q::J * Q::K, Q::I);
        assert_eq!(Q::K * Q::I, Q::J);
        assert_eq!(Q::J * Q::I, -Q::K);
        assert_eq!(Q::I * Q::I, -Q::ONE);
        assert_eq!(Q::J * Q::J, -Q::ONE);
        assert_eq!(Q::K * Q::K, -Q::ONE);
    }

    #[test]
    fn sandwich_of_unit_by_i_is_i() {
        let x = Quaternion::ONE;
        let out = x.conj() * Quaternion::I * x;
        assert_eq!(out, Quaternion::I);
    }

    fn arbitrary_quaternion() -> impl Strategy<Value = Quaternion> {
        let c = -10.0..10.0f64;
        (c.clone(), c.clone(), c.clone(), c).prop_map(|(s, i, j, k)| Quaternion::new(s, i, j, k))
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(p in arbitrary_quaternion(), q in arbitrary_quaternion()) {
            let lhs = (p * q).norm();
            let rhs = p.norm() * q.norm();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs));
        }

        #[test]
        fn conjugate_reverses_products(p in arbitrary_quaternion(), q in arbitrary_quaternion()) {
            let lhs = (p * q).conj();
            let rhs = q.conj() * p.conj();
            prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + p.norm() * q.norm()));
        }

        #[test]
        fn imaginary_sandwich_is_pure(x in arbitrary_quaternion()) {
            // conj(x̄ ε x) = -x̄ ε x for imaginary ε, so the scalar part vanishes.
            let out = x.conj() * Quaternion::I * x;
            prop_assert!(out.s.abs() <= 1e-12 * (1.0 + out.norm()));
        }
    }

    #[test]
    fn norm_of_unit_vectors() {
        assert_relative_eq!(Quaternion::I.norm(), 1.0);
        assert_relative_eq!(Quaternion::new(1.0, 1.0, 1.0, 1.0).norm(), 2.0);
    }
}
