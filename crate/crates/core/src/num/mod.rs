//! Scalar abstraction for the numerical core.
//!
//! The transfer-matrix recursions, Horner evaluation and the root
//! finder are written once, generically, and instantiated at two
//! scalar families:
//!
//! - hardware floats (`f64`, [`C64`]) for spectral quantities, density
//!   of states and cross-check oracles;
//! - MPFR-backed multiprecision floats ([`MpFloat`], [`MpComplex`])
//!   for the characteristic polynomial and its roots, where the
//!   working precision is a runtime parameter.
//!
//! `num_traits::Float` demands `Copy`, which a heap-backed
//! multiprecision type cannot satisfy, so the traits here are built
//! from the component traits (`Zero`, `One`, the `ops` bounds) that
//! both families support.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

mod mat2;
mod mp;

pub use mat2::Mat2;
pub use mp::{MpComplex, MpFloat};

/// Double-precision complex scalar.
pub type C64 = Complex<f64>;

/// Field scalar: the common surface of `f64`, [`C64`], [`MpFloat`]
/// and [`MpComplex`] that the generic numerical kernels rely on.
///
/// `from_f64_like` builds a constant *at the working precision of an
/// existing value*, which is how precision is threaded through code
/// that never names a concrete type.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Embed an `f64`, matching the working precision of `like`.
    fn from_f64_like(x: f64, like: &Self) -> Self;

    /// Modulus, rounded to `f64`. Saturates rather than overflowing.
    fn magnitude(&self) -> f64;

    /// log2 of the modulus as `f64`; `-inf` for zero. Never overflows,
    /// even when the modulus itself is outside `f64` range.
    fn log2_magnitude(&self) -> f64;

    /// Working precision in bits (53 for hardware floats).
    fn precision_bits(&self) -> u32;
}

/// Complex scalar with access to its real/imaginary parts.
pub trait ComplexScalar: Scalar {
    type Real: Scalar + PartialOrd;

    fn from_re_im(re: Self::Real, im: Self::Real) -> Self;
    fn re(&self) -> Self::Real;
    fn im(&self) -> Self::Real;
    fn conj(&self) -> Self;
    /// Modulus at full working precision.
    fn abs(&self) -> Self::Real;
}

impl Scalar for f64 {
    fn from_f64_like(x: f64, _like: &Self) -> Self {
        x
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }

    fn log2_magnitude(&self) -> f64 {
        self.abs().log2()
    }

    fn precision_bits(&self) -> u32 {
        53
    }
}

impl Scalar for C64 {
    fn from_f64_like(x: f64, _like: &Self) -> Self {
        Complex::new(x, 0.0)
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }

    fn log2_magnitude(&self) -> f64 {
        let a = self.re.abs();
        let b = self.im.abs();
        let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
        if hi == 0.0 {
            return f64::NEG_INFINITY;
        }
        // factored form stays finite where norm_sqr() would overflow
        let r = lo / hi;
        hi.log2() + 0.5 * (1.0 + r * r).log2()
    }

    fn precision_bits(&self) -> u32 {
        53
    }
}

impl ComplexScalar for C64 {
    type Real = f64;

    fn from_re_im(re: f64, im: f64) -> Self {
        Complex::new(re, im)
    }

    fn re(&self) -> f64 {
        self.re
    }

    fn im(&self) -> f64 {
        self.im
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn abs(&self) -> f64 {
        self.norm()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c64_log2_magnitude_handles_large_values() {
        let z = C64::new(1e200, -1e200);
        assert!((z.log2_magnitude() - (200.0 * 10f64.log2() + 0.5)).abs() < 1e-9);
    }

    #[test]
    fn from_f64_like_keeps_value() {
        let proto = C64::new(0.0, 1.0);
        assert_eq!(C64::from_f64_like(-2.5, &proto), C64::new(-2.5, 0.0));
    }
}
