//! Binary multiprecision floating point with round-to-nearest-even.
//!
//! Every arithmetic result is rounded to the larger precision of its two
//! operands, so a computation staged at `p` bits stays at `p` bits until a
//! value is explicitly re-rounded with [`MpFloat::with_precision`].

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_base::{BitTest, SquareRoot, UnsignedAbs};
use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::{Real, Scalar, Sign};

type Repr = FBig<HalfEven, 2>;

#[derive(Clone, Debug, PartialEq)]
pub struct MpFloat {
    v: Repr,
}

impl MpFloat {
    /// Rounds `x` to `precision` significant bits.
    ///
    /// # Panics
    /// Panics if `x` is not finite or `precision` is zero.
    pub fn from_f64(x: f64, precision: usize) -> Self {
        assert!(precision > 0, "precision must be positive");
        let v = Repr::try_from(x).expect("finite value");
        MpFloat {
            v: v.with_precision(precision).value(),
        }
    }

    /// Re-rounds to `precision` bits.
    pub fn with_precision(&self, precision: usize) -> Self {
        assert!(precision > 0, "precision must be positive");
        MpFloat {
            v: self.v.clone().with_precision(precision).value(),
        }
    }

    pub fn precision(&self) -> usize {
        self.v.precision()
    }

    pub fn to_f64(&self) -> f64 {
        self.v.to_f64().value()
    }

    /// The exact value as a rational.
    pub fn to_rational(&self) -> BigRational {
        let repr = self.v.repr();
        let m: BigInt = repr
            .significand()
            .to_string()
            .parse()
            .expect("decimal significand");
        let e = repr.exponent();
        let pow = BigInt::one() << e.unsigned_abs();
        if e >= 0 {
            BigRational::from_integer(m * pow)
        } else {
            BigRational::new(m, pow)
        }
    }

    /// Number of significant bits actually occupied by the value.
    pub fn significant_bits(&self) -> usize {
        let s = self.v.repr().significand();
        if s.is_zero() {
            return 0;
        }
        let s = s.unsigned_abs();
        let trailing = s.trailing_zeros().unwrap_or(0);
        s.bit_len() - trailing
    }
}

impl Zero for MpFloat {
    fn zero() -> Self {
        MpFloat { v: Repr::ZERO }
    }

    fn is_zero(&self) -> bool {
        self.v.repr().is_zero()
    }
}

impl One for MpFloat {
    fn one() -> Self {
        MpFloat { v: Repr::ONE }
    }
}

impl PartialOrd for MpFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.v.cmp(&other.v))
    }
}

macro_rules! mp_binop {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for MpFloat {
            type Output = MpFloat;

            fn $f(self, rhs: MpFloat) -> MpFloat {
                MpFloat { v: self.v $op rhs.v }
            }
        }

        impl<'a> $tr<&'a MpFloat> for &'a MpFloat {
            type Output = MpFloat;

            fn $f(self, rhs: &'a MpFloat) -> MpFloat {
                MpFloat { v: &self.v $op &rhs.v }
            }
        }
    };
}

mp_binop!(Add, add, +);
mp_binop!(Sub, sub, -);
mp_binop!(Mul, mul, *);
mp_binop!(Div, div, /);

impl Neg for MpFloat {
    type Output = MpFloat;

    fn neg(self) -> MpFloat {
        MpFloat { v: -self.v }
    }
}

impl Scalar for MpFloat {
    fn sign(&self) -> Sign {
        if self.is_zero() {
            Sign::Zero
        } else if self.v.sign() == dashu_base::Sign::Negative {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    fn scale2(&self, k: i32) -> Self {
        let factor = MpFloat::from_f64(2f64.powi(k), 1);
        MpFloat {
            v: &self.v * &factor.v,
        }
        .with_precision(self.precision().max(1))
    }
}

impl Real for MpFloat {
    fn sqrt(&self) -> Self {
        assert!(
            !self.sign().is_negative(),
            "square root of a negative value"
        );
        if self.is_zero() {
            return self.clone();
        }
        MpFloat { v: self.v.sqrt() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_to_precision() {
        let x = MpFloat::from_f64(1.0 + 2f64.powi(-30), 24);
        assert_eq!(x.to_f64(), 1.0);
        let y = MpFloat::from_f64(1.0 + 2f64.powi(-30), 31);
        assert_eq!(y.to_f64(), 1.0 + 2f64.powi(-30));
        assert_eq!(y.significant_bits(), 31);
        assert_eq!(
            y.to_rational(),
            crate::scalar::exact_rational(1.0 + 2f64.powi(-30))
        );
        assert_eq!(
            MpFloat::from_f64(-96.0, 8).to_rational(),
            BigRational::from_integer((-96).into())
        );
    }

    #[test]
    fn products_keep_operand_precision() {
        let a = MpFloat::from_f64(3.0, 200);
        let b = MpFloat::from_f64(7.0, 200);
        let p = &a * &b;
        assert_eq!(p.precision(), 200);
        assert_eq!(p.to_f64(), 21.0);
        // 1/3 at 200 bits is much closer than any double
        let third = &MpFloat::one().with_precision(200) / &a;
        let back = &third * &a;
        assert!((back.to_f64() - 1.0).abs() < 1e-50);
    }

    #[test]
    fn sqrt_and_sign() {
        let two = MpFloat::from_f64(2.0, 128);
        let r = two.sqrt();
        assert_eq!(r.precision(), 128);
        assert!((r.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert_eq!((-r).sign(), Sign::Negative);
        assert_eq!(MpFloat::zero().sign(), Sign::Zero);
        assert_eq!(MpFloat::from_f64(5.0, 10).scale2(-2).to_f64(), 1.25);
    }
}
