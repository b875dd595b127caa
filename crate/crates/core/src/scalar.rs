//! Scalar abstractions shared by every predicate in the crate.
//!
//! The comparison predicates are written once against [`Scalar`] (ring
//! operations plus an exact sign query) or [`Real`] (adds division and square
//! root) and then instantiated with `f32`, `f64`, [`BigRational`],
//! [`MpFloat`](crate::MpFloat) or the op-counting [`Tally`](crate::Tally).

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Three-valued sign of an exact or rounded quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn from_ordering(ord: Ordering) -> Self {
        match ord {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }

    pub fn of_i64(x: i64) -> Self {
        Self::from_ordering(x.cmp(&0))
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:+}", self.as_i8())
    }
}

/// Ring arithmetic with an exact sign query.
///
/// Implementations may round (`f32`, `f64`, [`MpFloat`](crate::MpFloat)) or be
/// exact ([`BigRational`]). Whether a predicate built on top of this trait is
/// exact depends only on whether the instantiating type rounds on the inputs
/// at hand.
pub trait Scalar:
    Clone
    + Debug
    + PartialOrd
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Sign of the stored value. Never rounds.
    fn sign(&self) -> Sign;

    /// Multiplies by `2^k`. Exact for binary formats away from over/underflow.
    fn scale2(&self, k: i32) -> Self;

    fn is_finite(&self) -> bool {
        true
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

/// A [`Scalar`] closed under division and square root.
pub trait Real: Scalar + Div<Output = Self> {
    /// Square root of a non-negative value.
    fn sqrt(&self) -> Self;
}

macro_rules! impl_float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn sign(&self) -> Sign {
                if *self > 0.0 {
                    Sign::Positive
                } else if *self < 0.0 {
                    Sign::Negative
                } else {
                    Sign::Zero
                }
            }

            fn scale2(&self, k: i32) -> Self {
                *self * (2.0 as $t).powi(k)
            }

            fn is_finite(&self) -> bool {
                <$t>::is_finite(*self)
            }
        }

        impl Real for $t {
            fn sqrt(&self) -> Self {
                <$t>::sqrt(*self)
            }
        }
    };
}

impl_float_scalar!(f32);
impl_float_scalar!(f64);

impl Scalar for BigRational {
    fn sign(&self) -> Sign {
        if self.is_positive() {
            Sign::Positive
        } else if self.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    fn scale2(&self, k: i32) -> Self {
        let p = BigInt::one() << k.unsigned_abs();
        if k >= 0 {
            self * BigRational::from_integer(p)
        } else {
            self / BigRational::from_integer(p)
        }
    }
}

/// Lossless conversion from a storage format into a wider scalar.
pub trait Widen<S>: Sized {
    fn widen(s: S) -> Self;
}

impl Widen<f32> for f32 {
    fn widen(s: f32) -> Self {
        s
    }
}

impl Widen<f32> for f64 {
    fn widen(s: f32) -> Self {
        f64::from(s)
    }
}

impl Widen<f64> for f64 {
    fn widen(s: f64) -> Self {
        s
    }
}

impl Widen<f32> for BigRational {
    fn widen(s: f32) -> Self {
        exact_rational(f64::from(s))
    }
}

impl Widen<f64> for BigRational {
    fn widen(s: f64) -> Self {
        exact_rational(s)
    }
}

/// The exact rational value of a finite double.
///
/// # Panics
/// Panics on NaN or infinity.
pub fn exact_rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite value")
}

/// Unbiased binary exponent `floor(log2 |x|)`, or `None` for zero.
///
/// Subnormals report their true exponent, not the format minimum.
pub fn binary_exponent(x: f64) -> Option<i32> {
    if x == 0.0 || !x.is_finite() {
        return None;
    }
    let bits = x.abs().to_bits();
    let biased = ((bits >> 52) & 0x7ff) as i32;
    if biased == 0 {
        let mantissa = bits & ((1u64 << 52) - 1);
        Some(-1074 + 63 - mantissa.leading_zeros() as i32)
    } else {
        Some(biased - 1023)
    }
}

/// Sign of `a + b·√d` for `d ≥ 0`, squaring at most once.
///
/// `square_diff` must return `a² − b²·d`; it is only invoked when the two
/// terms have opposite signs.
pub fn sign_plus_radical(a: Sign, b: Sign, d: Sign, square_diff: impl FnOnce() -> Sign) -> Sign {
    let radical = if d.is_positive() { b } else { Sign::Zero };
    if radical.is_zero() {
        return a;
    }
    if a.is_zero() || a == radical {
        return radical;
    }
    a * square_diff()
}
