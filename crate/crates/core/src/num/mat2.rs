//! 2×2 matrices over a generic scalar.
//!
//! The one-step transfer matrix of the discrete Schrödinger equation
//! u(n+1) + u(n-1) + V(n) u(n) = E u(n) is
//!
//! ```text
//!   T(E, v) = [ E - v   -1 ]
//!             [   1      0 ]
//! ```
//!
//! so that (u(n+1), u(n))ᵀ = T(E, V(n)) (u(n), u(n-1))ᵀ. Its
//! determinant is exactly 1 for every input.

use super::Scalar;

/// Row-major 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Scalar> Mat2<T> {
    pub fn identity_like(like: &T) -> Self {
        Mat2 {
            a: T::from_f64_like(1.0, like),
            b: T::from_f64_like(0.0, like),
            c: T::from_f64_like(0.0, like),
            d: T::from_f64_like(1.0, like),
        }
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        Mat2 {
            a: self.a.clone() * rhs.a.clone() + self.b.clone() * rhs.c.clone(),
            b: self.a.clone() * rhs.b.clone() + self.b.clone() * rhs.d.clone(),
            c: self.c.clone() * rhs.a.clone() + self.d.clone() * rhs.c.clone(),
            d: self.c.clone() * rhs.b.clone() + self.d.clone() * rhs.d.clone(),
        }
    }

    pub fn det(&self) -> T {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> T {
        self.a.clone() + self.d.clone()
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &(T, T)) -> (T, T) {
        (
            self.a.clone() * v.0.clone() + self.b.clone() * v.1.clone(),
            self.c.clone() * v.0.clone() + self.d.clone() * v.1.clone(),
        )
    }

    /// Largest entry modulus as `f64` (for renormalization decisions).
    pub fn max_magnitude(&self) -> f64 {
        self.a
            .magnitude()
            .max(self.b.magnitude())
            .max(self.c.magnitude())
            .max(self.d.magnitude())
    }
}

/// One-step transfer matrix `[[E - v, -1], [1, 0]]`.
pub fn transfer_matrix<T: Scalar>(e: &T, v: f64) -> Mat2<T> {
    Mat2 {
        a: e.clone() - T::from_f64_like(v, e),
        b: T::from_f64_like(-1.0, e),
        c: T::from_f64_like(1.0, e),
        d: T::from_f64_like(0.0, e),
    }
}

#[cfg(test)]
mod tests {
    use super::super::C64;
    use super::*;

    #[test]
    fn transfer_examples() {
        let t = transfer_matrix(&0.0f64, 0.0);
        assert_eq!((t.a, t.b, t.c, t.d), (0.0, -1.0, 1.0, 0.0));

        let t = transfer_matrix(&2.0f64, 1.0);
        assert_eq!((t.a, t.b, t.c, t.d), (1.0, -1.0, 1.0, 0.0));
    }

    #[test]
    fn unimodular_for_complex_energy() {
        let e = C64::new(0.7, -1.3);
        let t = transfer_matrix(&e, 0.42);
        let det = t.det();
        assert!((det - C64::new(1.0, 0.0)).norm() < 1e-15);
    }
}
