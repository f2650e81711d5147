//! MPFR-backed multiprecision scalars.
//!
//! [`MpFloat`] wraps [`rug::Float`] with one semantic change: binary
//! operations round to the *larger* of the two operand precisions
//! (plain `rug` keeps the precision of the consumed operand, which
//! silently truncates when a low-precision constant appears on the
//! left). With the max-precision rule, `Zero::zero()` and
//! `One::one()` can return cheap 53-bit values that get absorbed into
//! the working precision on first contact.
//!
//! [`MpComplex`] is a plain re/im pair over [`MpFloat`]. MPFR's
//! exponent range (±2^62) makes the naive complex division and
//! modulus formulas safe — no scaling tricks are needed at any
//! precision this crate uses.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rug::float::Round;
use rug::ops::CompleteRound;
use rug::Float;

use super::{ComplexScalar, Scalar};

/// Multiprecision real number; precision travels with the value.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct MpFloat(Float);

impl MpFloat {
    /// Build from an `f64` at `prec` bits.
    pub fn with_prec(x: f64, prec: u32) -> Self {
        MpFloat(Float::with_val(prec, x))
    }

    pub fn zero_prec(prec: u32) -> Self {
        MpFloat(Float::new(prec))
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative()
    }

    pub fn abs(&self) -> Self {
        MpFloat(self.0.clone().abs())
    }

    pub fn sqrt(&self) -> Self {
        MpFloat(self.0.clone().sqrt())
    }

    /// Natural log; `-inf` for zero input.
    pub fn ln(&self) -> Self {
        MpFloat(self.0.clone().ln())
    }

    pub fn hypot(&self, other: &Self) -> Self {
        let p = self.prec().max(other.prec());
        MpFloat(Float::with_val(p, self.0.hypot_ref(&other.0)))
    }

    /// Natural log of |self| as an `f64`, exact in the exponent even
    /// when |self| is far outside `f64` range.
    pub fn ln_abs_f64(&self) -> f64 {
        self.log2_abs_f64() * std::f64::consts::LN_2
    }

    /// log2 of |self| as an `f64`; `-inf` for zero.
    pub fn log2_abs_f64(&self) -> f64 {
        if self.0.is_zero() {
            return f64::NEG_INFINITY;
        }
        // mantissa in [0.5, 1) times 2^exp
        let exp = self.0.get_exp().expect("finite nonzero float has an exponent");
        let mant = {
            let mut m = self.0.clone().abs();
            m >>= exp;
            m.to_f64()
        };
        exp as f64 + mant.log2()
    }

    /// Access the underlying `rug::Float`.
    pub fn inner(&self) -> &Float {
        &self.0
    }

    pub fn from_inner(f: Float) -> Self {
        MpFloat(f)
    }

    /// Round (or extend) to `prec` bits.
    pub fn to_prec(&self, prec: u32) -> Self {
        let mut f = self.0.clone();
        f.set_prec_round(prec, Round::Nearest);
        MpFloat(f)
    }

    /// Hex-float string that parses back losslessly.
    pub fn to_hex_string(&self) -> String {
        self.0.to_string_radix(16, None)
    }

    pub fn from_hex_string(s: &str, prec: u32) -> Option<Self> {
        Float::parse_radix(s, 16)
            .ok()
            .map(|incomplete| MpFloat(Float::with_val(prec, incomplete)))
    }
}

fn join_prec(a: &MpFloat, b: &MpFloat) -> u32 {
    a.prec().max(b.prec())
}

impl Add for MpFloat {
    type Output = MpFloat;
    fn add(self, rhs: MpFloat) -> MpFloat {
        let p = join_prec(&self, &rhs);
        MpFloat((&self.0 + &rhs.0).complete(p))
    }
}

impl Sub for MpFloat {
    type Output = MpFloat;
    fn sub(self, rhs: MpFloat) -> MpFloat {
        let p = join_prec(&self, &rhs);
        MpFloat((&self.0 - &rhs.0).complete(p))
    }
}

impl Mul for MpFloat {
    type Output = MpFloat;
    fn mul(self, rhs: MpFloat) -> MpFloat {
        let p = join_prec(&self, &rhs);
        MpFloat((&self.0 * &rhs.0).complete(p))
    }
}

impl Div for MpFloat {
    type Output = MpFloat;
    fn div(self, rhs: MpFloat) -> MpFloat {
        let p = join_prec(&self, &rhs);
        MpFloat((&self.0 / &rhs.0).complete(p))
    }
}

impl Neg for MpFloat {
    type Output = MpFloat;
    fn neg(self) -> MpFloat {
        MpFloat(-self.0)
    }
}

impl<'a> Add<&'a MpFloat> for &MpFloat {
    type Output = MpFloat;
    fn add(self, rhs: &'a MpFloat) -> MpFloat {
        let p = join_prec(self, rhs);
        MpFloat((&self.0 + &rhs.0).complete(p))
    }
}

impl<'a> Sub<&'a MpFloat> for &MpFloat {
    type Output = MpFloat;
    fn sub(self, rhs: &'a MpFloat) -> MpFloat {
        let p = join_prec(self, rhs);
        MpFloat((&self.0 - &rhs.0).complete(p))
    }
}

impl<'a> Mul<&'a MpFloat> for &MpFloat {
    type Output = MpFloat;
    fn mul(self, rhs: &'a MpFloat) -> MpFloat {
        let p = join_prec(self, rhs);
        MpFloat((&self.0 * &rhs.0).complete(p))
    }
}

impl<'a> Div<&'a MpFloat> for &MpFloat {
    type Output = MpFloat;
    fn div(self, rhs: &'a MpFloat) -> MpFloat {
        let p = join_prec(self, rhs);
        MpFloat((&self.0 / &rhs.0).complete(p))
    }
}

impl Zero for MpFloat {
    fn zero() -> Self {
        MpFloat(Float::new(53))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for MpFloat {
    fn one() -> Self {
        MpFloat(Float::with_val(53, 1))
    }
}

impl fmt::Debug for MpFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MpFloat({:e}@{})", self.0.to_f64(), self.prec())
    }
}

impl fmt::Display for MpFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Scalar for MpFloat {
    fn from_f64_like(x: f64, like: &Self) -> Self {
        MpFloat::with_prec(x, like.prec())
    }

    fn magnitude(&self) -> f64 {
        self.0.to_f64().abs()
    }

    fn log2_magnitude(&self) -> f64 {
        self.log2_abs_f64()
    }

    fn precision_bits(&self) -> u32 {
        self.prec()
    }
}

/// Multiprecision complex number as a re/im pair.
#[derive(Clone, PartialEq)]
pub struct MpComplex {
    pub re: MpFloat,
    pub im: MpFloat,
}

impl MpComplex {
    pub fn new(re: MpFloat, im: MpFloat) -> Self {
        MpComplex { re, im }
    }

    pub fn with_prec(re: f64, im: f64, prec: u32) -> Self {
        MpComplex {
            re: MpFloat::with_prec(re, prec),
            im: MpFloat::with_prec(im, prec),
        }
    }

    pub fn from_c64(z: super::C64, prec: u32) -> Self {
        Self::with_prec(z.re, z.im, prec)
    }

    pub fn from_real(re: MpFloat) -> Self {
        let prec = re.prec();
        MpComplex {
            re,
            im: MpFloat::zero_prec(prec),
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn to_c64(&self) -> super::C64 {
        super::C64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn norm_sqr(&self) -> MpFloat {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// Reciprocal 1/z.
    pub fn recip(&self) -> MpComplex {
        let d = self.norm_sqr();
        MpComplex {
            re: &self.re / &d,
            im: -(&self.im / &d),
        }
    }

    pub fn scale(&self, s: &MpFloat) -> MpComplex {
        MpComplex {
            re: &self.re * s,
            im: &self.im * s,
        }
    }
}

impl Add for MpComplex {
    type Output = MpComplex;
    fn add(self, rhs: MpComplex) -> MpComplex {
        MpComplex {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for MpComplex {
    type Output = MpComplex;
    fn sub(self, rhs: MpComplex) -> MpComplex {
        MpComplex {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for MpComplex {
    type Output = MpComplex;
    fn mul(self, rhs: MpComplex) -> MpComplex {
        &self * &rhs
    }
}

impl<'a> Mul<&'a MpComplex> for &MpComplex {
    type Output = MpComplex;
    fn mul(self, rhs: &'a MpComplex) -> MpComplex {
        MpComplex {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl<'a> Add<&'a MpComplex> for &MpComplex {
    type Output = MpComplex;
    fn add(self, rhs: &'a MpComplex) -> MpComplex {
        MpComplex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a MpComplex> for &MpComplex {
    type Output = MpComplex;
    fn sub(self, rhs: &'a MpComplex) -> MpComplex {
        MpComplex {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Div for MpComplex {
    type Output = MpComplex;
    fn div(self, rhs: MpComplex) -> MpComplex {
        &self / &rhs
    }
}

impl<'a> Div<&'a MpComplex> for &MpComplex {
    type Output = MpComplex;
    fn div(self, rhs: &'a MpComplex) -> MpComplex {
        let d = rhs.norm_sqr();
        MpComplex {
            re: &(&(&self.re * &rhs.re) + &(&self.im * &rhs.im)) / &d,
            im: &(&(&self.im * &rhs.re) - &(&self.re * &rhs.im)) / &d,
        }
    }
}

impl Neg for MpComplex {
    type Output = MpComplex;
    fn neg(self) -> MpComplex {
        MpComplex {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Zero for MpComplex {
    fn zero() -> Self {
        MpComplex {
            re: MpFloat::zero(),
            im: MpFloat::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for MpComplex {
    fn one() -> Self {
        MpComplex {
            re: MpFloat::one(),
            im: MpFloat::zero(),
        }
    }
}

impl fmt::Debug for MpComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MpComplex({:e} {:+e}i @{})",
            self.re.to_f64(),
            self.im.to_f64(),
            self.prec()
        )
    }
}

impl fmt::Display for MpComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:+}i", self.re, self.im)
    }
}

impl Scalar for MpComplex {
    fn from_f64_like(x: f64, like: &Self) -> Self {
        MpComplex::with_prec(x, 0.0, like.prec())
    }

    fn magnitude(&self) -> f64 {
        self.re.hypot(&self.im).to_f64()
    }

    fn log2_magnitude(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        self.re.hypot(&self.im).log2_abs_f64()
    }

    fn precision_bits(&self) -> u32 {
        self.prec()
    }
}

impl ComplexScalar for MpComplex {
    type Real = MpFloat;

    fn from_re_im(re: MpFloat, im: MpFloat) -> Self {
        MpComplex { re, im }
    }

    fn re(&self) -> MpFloat {
        self.re.clone()
    }

    fn im(&self) -> MpFloat {
        self.im.clone()
    }

    fn conj(&self) -> Self {
        MpComplex {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    fn abs(&self) -> MpFloat {
        self.re.hypot(&self.im)
    }
}

/// Total order used for canonical root ordering: lexicographic on
/// (re, im) with full-precision comparison.
pub fn lex_cmp(a: &MpComplex, b: &MpComplex) -> Ordering {
    match a.re.partial_cmp(&b.re) {
        Some(Ordering::Equal) | None => a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal),
        Some(o) => o,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_promotes_to_max() {
        let lo = MpFloat::zero(); // 53 bits
        let hi = MpFloat::with_prec(1.0, 256);
        assert_eq!((lo + hi).prec(), 256);

        let a = MpFloat::with_prec(0.1, 128);
        let b = MpFloat::with_prec(0.2, 512);
        assert_eq!((&a * &b).prec(), 512);
    }

    #[test]
    fn zero_plus_x_is_exact() {
        // a 53-bit zero must not truncate a 256-bit operand
        let x = MpFloat::with_prec(2.0, 256).sqrt();
        let y = MpFloat::zero() + x.clone();
        assert_eq!(x, y);
    }

    #[test]
    fn log2_abs_handles_extreme_exponents() {
        let mut f = Float::with_val(64, 3.0);
        f <<= 100_000; // 3 * 2^100000
        let x = MpFloat::from_inner(f);
        let expected = 100_000.0 + 3f64.log2();
        assert!((x.log2_abs_f64() - expected).abs() < 1e-9);
        assert!(MpFloat::zero().log2_abs_f64().is_infinite());
    }

    #[test]
    fn complex_field_ops() {
        let p = 192;
        let i = MpComplex::with_prec(0.0, 1.0, p);
        let z = MpComplex::with_prec(3.0, -4.0, p);
        assert_eq!(z.abs().to_f64(), 5.0);
        let w = &z * &i; // (3-4i)i = 4+3i
        assert_eq!(w.to_c64(), super::super::C64::new(4.0, 3.0));
        let q = &w / &z;
        let diff = &q - &i;
        assert!(diff.abs().to_f64() < 1e-50);
    }

    #[test]
    fn hex_round_trip() {
        let x = MpFloat::with_prec(std::f64::consts::PI, 300).sqrt();
        let s = x.to_hex_string();
        let y = MpFloat::from_hex_string(&s, 300).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn recip_of_two() {
        let z = MpComplex::with_prec(2.0, 0.0, 128);
        assert_eq!(z.recip().to_c64(), super::super::C64::new(0.5, 0.0));
    }
}
