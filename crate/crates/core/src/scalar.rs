//! Numeric substrate: real scalars at a configurable precision, and the
//! complex numbers built from them.
//!
//! Two backends live behind [`Real`]: native `f64` (the default) and an
//! arbitrary-precision float for certifying identities beyond binary64
//! resolution. Mixed-mode arithmetic promotes to the wider operand, so exact
//! values (integers, small dyadics) may always be introduced as `f64` without
//! losing precision downstream.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

use astro_float::{BigFloat, Consts, RoundingMode, Sign};

use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> =
        RefCell::new(Consts::new().expect("constants cache allocation"));
}

fn with_cc<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Arithmetic backend selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Native IEEE 754 binary64.
    Binary64,
    /// Arbitrary-precision floats with the given number of decimal digits.
    Extended { digits: u32 },
}

/// Precision configuration: backend mode plus the tolerance used by
/// invariant checks.
#[derive(Clone, Debug, PartialEq)]
pub struct Precision {
    mode: Mode,
    epsilon: f64,
}

impl Precision {
    /// Default binary64 configuration with `epsilon = 1e-12`.
    pub fn binary64() -> Self {
        Precision {
            mode: Mode::Binary64,
            epsilon: 1e-12,
        }
    }

    /// Extended-precision configuration. At least 30 decimal digits are
    /// required; fewer would not meaningfully exceed binary64.
    pub fn extended(digits: u32) -> Result<Self> {
        if digits < 30 {
            return Err(Error::TooFewDigits { digits });
        }
        Ok(Precision {
            mode: Mode::Extended { digits },
            epsilon: 1e-12,
        })
    }

    /// Replaces the invariant-check tolerance. The tolerance must be
    /// positive.
    pub fn with_epsilon(mut self, epsilon: f64) -> Self {
        assert!(epsilon > 0.0, "epsilon must be positive");
        self.epsilon = epsilon;
        self
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn is_extended(&self) -> bool {
        matches!(self.mode, Mode::Extended { .. })
    }

    /// Mantissa size in bits for freshly constructed values.
    ///
    /// Extended mode converts decimal digits to bits (`log2(10) ~ 3.322`)
    /// and adds guard bits so intermediate rounding stays below the
    /// requested resolution.
    pub fn bits(&self) -> usize {
        match self.mode {
            Mode::Binary64 => 53,
            Mode::Extended { digits } => (digits as f64 * 3.3219280948873626).ceil() as usize + 32,
        }
    }

    /// Decimal digits in extended mode, `None` in binary64.
    pub fn digits(&self) -> Option<u32> {
        match self.mode {
            Mode::Binary64 => None,
            Mode::Extended { digits } => Some(digits),
        }
    }

    /// Stable label for reports and serialized output.
    pub fn label(&self) -> String {
        match self.mode {
            Mode::Binary64 => "binary64".to_string(),
            Mode::Extended { digits } => format!("extended:{digits}"),
        }
    }

    /// Lifts an `f64` into this precision.
    pub fn real(&self, x: f64) -> Real {
        match self.mode {
            Mode::Binary64 => Real::F64(x),
            Mode::Extended { .. } => Real::Big(BigFloat::from_f64(x, self.bits())),
        }
    }

    /// Complex value from two `f64` parts at this precision.
    pub fn complex(&self, re: f64, im: f64) -> Complex {
        Complex::new(self.real(re), self.real(im))
    }

    /// The constant pi at this precision.
    pub fn pi(&self) -> Real {
        match self.mode {
            Mode::Binary64 => Real::F64(std::f64::consts::PI),
            Mode::Extended { .. } => Real::Big(with_cc(|cc| cc.pi(self.bits(), RM))),
        }
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::binary64()
    }
}

/// A real scalar: either a native `f64` or an arbitrary-precision float.
#[derive(Clone, Debug)]
pub enum Real {
    F64(f64),
    Big(BigFloat),
}

impl Real {
    pub fn zero() -> Self {
        Real::F64(0.0)
    }

    fn bits(&self) -> usize {
        match self {
            Real::F64(_) => 64,
            Real::Big(b) => b.mantissa_max_bit_len().unwrap_or(64),
        }
    }

    fn as_big(&self, p: usize) -> BigFloat {
        match self {
            // exact: a binary64 mantissa always fits in 64 bits
            Real::F64(x) => BigFloat::from_f64(*x, p.max(64)),
            Real::Big(b) => b.clone(),
        }
    }

    /// Nearest binary64 value.
    pub fn to_f64(&self) -> f64 {
        match self {
            Real::F64(x) => *x,
            Real::Big(b) => big_to_f64(b),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Real::F64(x) => *x == 0.0,
            Real::Big(b) => b.is_zero(),
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Real::F64(x) => x.is_finite(),
            Real::Big(b) => !b.is_nan() && !b.is_inf(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Real::F64(x) => *x < 0.0,
            Real::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Real {
        match self {
            Real::F64(x) => Real::F64(x.abs()),
            Real::Big(b) => Real::Big(b.abs()),
        }
    }

    pub fn sqrt(&self) -> Real {
        match self {
            Real::F64(x) => Real::F64(x.sqrt()),
            Real::Big(b) => Real::Big(b.sqrt(self.bits(), RM)),
        }
    }

    pub fn sin(&self) -> Real {
        match self {
            Real::F64(x) => Real::F64(x.sin()),
            Real::Big(b) => Real::Big(with_cc(|cc| b.sin(self.bits(), RM, cc))),
        }
    }

    pub fn cos(&self) -> Real {
        match self {
            Real::F64(x) => Real::F64(x.cos()),
            Real::Big(b) => Real::Big(with_cc(|cc| b.cos(self.bits(), RM, cc))),
        }
    }

    pub fn atan(&self) -> Real {
        match self {
            Real::F64(x) => Real::F64(x.atan()),
            Real::Big(b) => Real::Big(with_cc(|cc| b.atan(self.bits(), RM, cc))),
        }
    }

    pub fn max(&self, other: &Real) -> Real {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }
}

impl From<f64> for Real {
    fn from(x: f64) -> Self {
        Real::F64(x)
    }
}

/// Converts the raw mantissa/exponent representation to the nearest `f64`.
fn big_to_f64(b: &BigFloat) -> f64 {
    if b.is_nan() {
        return f64::NAN;
    }
    if b.is_inf_pos() {
        return f64::INFINITY;
    }
    if b.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    if b.is_zero() {
        return 0.0;
    }
    let Some((words, _, sign, exp, _)) = b.as_raw_parts() else {
        return f64::NAN;
    };
    // value = sign * 0.mantissa * 2^exp, words least-significant first
    let word_bits = std::mem::size_of::<astro_float::Word>() as i32 * 8;
    let nw = words.len();
    let mut acc = 0.0f64;
    for i in 0..nw.min(2) {
        let w = words[nw - 1 - i] as f64;
        acc += w * 2f64.powi(-word_bits * (i as i32 + 1));
    }
    let v = if exp > 1030 {
        f64::INFINITY
    } else if exp < -1070 {
        0.0
    } else {
        acc * 2f64.powi(exp)
    };
    if sign == Sign::Neg {
        -v
    } else {
        v
    }
}

macro_rules! real_binop {
    ($trait:ident, $method:ident, $op:tt, $big:ident) => {
        impl std::ops::$trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                match (self, rhs) {
                    (Real::F64(a), Real::F64(b)) => Real::F64(a $op b),
                    _ => {
                        let p = self.bits().max(rhs.bits());
                        Real::Big(self.as_big(p).$big(&rhs.as_big(p), p, RM))
                    }
                }
            }
        }

        impl std::ops::$trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add, +, add);
real_binop!(Sub, sub, -, sub);
real_binop!(Mul, mul, *, mul);
real_binop!(Div, div, /, div);

impl std::ops::Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        match self {
            Real::F64(x) => Real::F64(-x),
            Real::Big(b) => Real::Big(b.neg()),
        }
    }
}

impl std::ops::Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Real::F64(a), Real::F64(b)) => a.partial_cmp(b),
            _ => {
                let p = self.bits().max(other.bits());
                self.as_big(p)
                    .cmp(&other.as_big(p))
                    .map(|s| s.cmp(&0))
            }
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::F64(x) => write!(f, "{x}"),
            Real::Big(b) => write!(f, "{b}"),
        }
    }
}

/// A complex scalar over [`Real`].
#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    /// Exact binary64 parts; promotes on contact with wider values.
    pub fn from_f64s(re: f64, im: f64) -> Self {
        Complex {
            re: Real::F64(re),
            im: Real::F64(im),
        }
    }

    pub fn zero() -> Self {
        Complex::from_f64s(0.0, 0.0)
    }

    pub fn one() -> Self {
        Complex::from_f64s(1.0, 0.0)
    }

    pub fn i() -> Self {
        Complex::from_f64s(0.0, 1.0)
    }

    /// The exact value of i^k.
    pub fn i_pow(k: usize) -> Self {
        match k % 4 {
            0 => Complex::from_f64s(1.0, 0.0),
            1 => Complex::from_f64s(0.0, 1.0),
            2 => Complex::from_f64s(-1.0, 0.0),
            _ => Complex::from_f64s(0.0, -1.0),
        }
    }

    pub fn conj(&self) -> Complex {
        Complex {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// Multiplication by i without rounding: (re, im) -> (-im, re).
    pub fn times_i(&self) -> Complex {
        Complex {
            re: -&self.im,
            im: self.re.clone(),
        }
    }

    pub fn scale(&self, s: &Real) -> Complex {
        Complex {
            re: &self.re * s,
            im: &self.im * s,
        }
    }

    pub fn norm_sqr(&self) -> Real {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn modulus(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn to_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl std::ops::Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl std::ops::Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl std::ops::Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        Complex { re, im }
    }
}

impl std::ops::Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary64_roundtrip() {
        let p = Precision::binary64();
        let x = p.real(0.1);
        assert_eq!(x.to_f64(), 0.1);
        assert_eq!(p.label(), "binary64");
    }

    #[test]
    fn extended_requires_30_digits() {
        assert!(matches!(
            Precision::extended(20),
            Err(Error::TooFewDigits { digits: 20 })
        ));
        assert!(Precision::extended(30).is_ok());
    }

    #[test]
    fn extended_pi_digits() {
        let p = Precision::extended(40).unwrap();
        let pi = p.pi();
        let s = format!("{pi}");
        assert!(
            s.starts_with("3.1415926535897932384626433832795028841"),
            "pi = {s}"
        );
        assert!((pi.to_f64() - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn mixed_mode_promotes_exactly(){
        let p = Precision::extended(40).unwrap();
        let big = p.real(3.0);
        let small = Real::from(2.0);
        let sum = &big + &small;
        assert!(matches!(sum, Real::Big(_)));
        assert_eq!(sum.to_f64(), 5.0);
        // a 40-digit residual survives the round trip through subtraction
        let third = &p.real(1.0) / &p.real(3.0);
        let back = &(&third * &p.real(3.0)) - &p.real(1.0);
        assert!(back.abs().to_f64() < 1e-39);
    }

    #[test]
    fn ordering_across_modes() {
        let p = Precision::extended(30).unwrap();
        assert!(p.real(2.0) > Real::from(1.0));
        assert!(Real::from(1.0) < p.real(2.0));
        assert_eq!(p.real(2.0), Real::from(2.0));
    }

    #[test]
    fn complex_arithmetic() {
        let a = Complex::from_f64s(1.0, 2.0);
        let b = Complex::from_f64s(3.0, -1.0);
        let prod = &a * &b;
        assert_eq!(prod.to_pair(), (5.0, 5.0));
        assert_eq!(a.conj().to_pair(), (1.0, -2.0));
        assert_eq!(a.times_i().to_pair(), (-2.0, 1.0));
        assert_eq!(Complex::i_pow(3).to_pair(), (0.0, -1.0));
        assert_eq!(Complex::i_pow(6).to_pair(), (-1.0, 0.0));
        assert_eq!(a.norm_sqr().to_f64(), 5.0);
    }
}
