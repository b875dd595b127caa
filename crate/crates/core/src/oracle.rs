//! Exact ground truth for root ordering.
//!
//! Roots are held as `(p + σ·√d) / q` over arbitrary-precision integers and
//! compared by isolating and squaring radicals, with no rounding anywhere.
//! Nothing here shares code with the comparators it is used to check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{Quadratic, RootSelector};
use crate::scalar::{exact_rational, Scalar, Sign};

fn sign_of(x: &BigInt) -> Sign {
    if x.is_positive() {
        Sign::Positive
    } else if x.is_negative() {
        Sign::Negative
    } else {
        Sign::Zero
    }
}

/// Values that convert to a rational without loss.
pub trait ExactValue {
    fn to_rational(&self) -> BigRational;
}

impl ExactValue for f32 {
    fn to_rational(&self) -> BigRational {
        exact_rational(f64::from(*self))
    }
}

impl ExactValue for f64 {
    fn to_rational(&self) -> BigRational {
        exact_rational(*self)
    }
}

impl ExactValue for BigRational {
    fn to_rational(&self) -> BigRational {
        self.clone()
    }
}

/// The real number `(p + σ·√d) / q` with `d ≥ 0`, `q ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactRoot {
    pub p: BigInt,
    pub sigma: Sign,
    pub d: BigInt,
    pub q: BigInt,
}

impl ExactRoot {
    pub fn new(p: BigInt, sigma: Sign, d: BigInt, q: BigInt) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::DegenerateQuadratic);
        }
        if d.is_negative() {
            return Err(Error::NoRealRoots);
        }
        Ok(ExactRoot { p, sigma, d, q })
    }

    /// Root `which` of the quadratic, after clearing denominators.
    pub fn from_quadratic<T: ExactValue>(q: &Quadratic<T>, which: RootSelector) -> Result<Self> {
        let (a, b, c) = integer_coefficients(q);
        if a.is_zero() {
            return Err(Error::DegenerateQuadratic);
        }
        let d = &b * &b - BigInt::from(4) * &a * &c;
        let sigma = which.radical_sign(sign_of(&a));
        ExactRoot::new(-b, sigma, d, BigInt::from(2) * a)
    }

    /// Rational approximation, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let r = self.d.to_f64().unwrap_or(f64::INFINITY).sqrt();
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        (p + f64::from(self.sigma.as_i8()) * r) / q
    }
}

/// Integer multiples of `(a, b, c)` with a common positive factor.
fn integer_coefficients<T: ExactValue>(q: &Quadratic<T>) -> (BigInt, BigInt, BigInt) {
    let r = [
        q.a().to_rational(),
        q.b().to_rational(),
        q.c().to_rational(),
    ];
    let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let [a, b, c] = r.map(|x| (x * BigRational::from_integer(l.clone())).to_integer());
    (a, b, c)
}

/// Sign of `a + b·√d` for `d ≥ 0`.
pub fn sign_two_term(a: &BigInt, b: &BigInt, d: &BigInt) -> Sign {
    let sa = sign_of(a);
    let sb = if d.is_positive() {
        sign_of(b)
    } else {
        Sign::Zero
    };
    if sb.is_zero() {
        return sa;
    }
    if sa.is_zero() || sa == sb {
        return sb;
    }
    sa * sign_of(&(a * a - b * b * d))
}

/// Sign of `x + y·√d1 + z·√d2` for `d1, d2 ≥ 0`.
pub fn sign_sum_sqrt(x: &BigInt, y: &BigInt, d1: &BigInt, z: &BigInt, d2: &BigInt) -> Sign {
    let radicals = {
        let t1 = if d1.is_positive() {
            sign_of(y)
        } else {
            Sign::Zero
        };
        let t2 = if d2.is_positive() {
            sign_of(z)
        } else {
            Sign::Zero
        };
        if t1.is_zero() {
            t2
        } else if t2.is_zero() || t1 == t2 {
            t1
        } else {
            t1 * sign_of(&(y * y * d1 - z * z * d2))
        }
    };
    let sx = sign_of(x);
    if radicals.is_zero() {
        return sx;
    }
    if sx.is_zero() || sx == radicals {
        return radicals;
    }
    // x² − (y√d1 + z√d2)² = (x² − y²d1 − z²d2) − 2yz·√(d1·d2)
    let w = x * x - y * y * d1 - z * z * d2;
    let v = -(BigInt::from(2) * y * z);
    sx * sign_two_term(&w, &v, &(d1 * d2))
}

/// Exact sign of `r1 − r2`.
pub fn exact_sign_diff(r1: &ExactRoot, r2: &ExactRoot) -> Sign {
    // (r1 − r2)·q1·q2 = (p1·q2 − p2·q1) + σ1·q2·√d1 − σ2·q1·√d2
    let x = &r1.p * &r2.q - &r2.p * &r1.q;
    let y = BigInt::from(r1.sigma.as_i8()) * &r2.q;
    let z = -BigInt::from(r2.sigma.as_i8()) * &r1.q;
    sign_of(&r1.q) * sign_of(&r2.q) * sign_sum_sqrt(&x, &y, &r1.d, &z, &r2.d)
}

/// Exact sign of `r1 − r2` for roots of two quadratics.
pub fn exact_compare<T: ExactValue>(
    q1: &Quadratic<T>,
    s1: RootSelector,
    q2: &Quadratic<T>,
    s2: RootSelector,
) -> Result<Sign> {
    let r1 = ExactRoot::from_quadratic(q1, s1)?;
    let r2 = ExactRoot::from_quadratic(q2, s2)?;
    Ok(exact_sign_diff(&r1, &r2))
}

/// Exact signs of all four root differences, indexed `[s1][s2]` by
/// [`RootSelector::index`].
pub fn exact_order_all<T: ExactValue>(
    q1: &Quadratic<T>,
    q2: &Quadratic<T>,
) -> Result<[[Sign; 2]; 2]> {
    let r1 = [
        ExactRoot::from_quadratic(q1, RootSelector::Lo)?,
        ExactRoot::from_quadratic(q1, RootSelector::Hi)?,
    ];
    let r2 = [
        ExactRoot::from_quadratic(q2, RootSelector::Lo)?,
        ExactRoot::from_quadratic(q2, RootSelector::Hi)?,
    ];
    Ok([0, 1].map(|i| [0, 1].map(|j| exact_sign_diff(&r1[i], &r2[j]))))
}

/// Determinant of the 4×4 Sylvester matrix of `p0·t² + p1·t + p2` and
/// `q0·t² + q1·t + q2`, by cofactor expansion along the first column.
pub fn sylvester_determinant<T: Scalar>(p: &[T; 3], q: &[T; 3]) -> T {
    let z = T::zero();
    let m = [
        [p[0].clone(), p[1].clone(), p[2].clone(), z.clone()],
        [z.clone(), p[0].clone(), p[1].clone(), p[2].clone()],
        [q[0].clone(), q[1].clone(), q[2].clone(), z.clone()],
        [z.clone(), q[0].clone(), q[1].clone(), q[2].clone()],
    ];
    det(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn det<T: Scalar>(m: &[Vec<T>]) -> T {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = T::zero();
    for (i, row) in m.iter().enumerate() {
        if row[0].sign().is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = m
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, r)| r[1..].to_vec())
            .collect();
        let term = row[0].clone() * det(&minor);
        total = if i % 2 == 0 {
            total + term
        } else {
            total - term
        };
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn radical_sums() {
        // √2 + √3 − 3 > 0
        assert_eq!(
            sign_sum_sqrt(&big(-3), &big(1), &big(2), &big(1), &big(3)),
            Sign::Positive
        );
        // √2 + √3 − 4 < 0
        assert_eq!(
            sign_sum_sqrt(&big(-4), &big(1), &big(2), &big(1), &big(3)),
            Sign::Negative
        );
        // √8 − 2√2 = 0
        assert_eq!(
            sign_sum_sqrt(&big(0), &big(1), &big(8), &big(-2), &big(2)),
            Sign::Zero
        );
        // 3 − √2 − √5 < 0
        assert_eq!(
            sign_sum_sqrt(&big(3), &big(-1), &big(2), &big(-1), &big(5)),
            Sign::Negative
        );
        assert_eq!(sign_two_term(&big(3), &big(-2), &big(2)), Sign::Positive);
    }

    #[test]
    fn roots_from_quadratics() {
        let q = Quadratic::new(2.0f64, -6.0, 4.0);
        let lo = ExactRoot::from_quadratic(&q, RootSelector::Lo).unwrap();
        let hi = ExactRoot::from_quadratic(&q, RootSelector::Hi).unwrap();
        assert_eq!(lo.to_f64(), 1.0);
        assert_eq!(hi.to_f64(), 2.0);
        assert_eq!(exact_sign_diff(&lo, &hi), Sign::Negative);
        let neg = Quadratic::new(-0.5f64, 1.5, -1.0);
        let lo2 = ExactRoot::from_quadratic(&neg, RootSelector::Lo).unwrap();
        assert_eq!(exact_sign_diff(&lo, &lo2), Sign::Zero);
        assert_eq!(
            exact_compare(&q, RootSelector::Hi, &neg, RootSelector::Lo).unwrap(),
            Sign::Positive
        );
        assert_eq!(
            ExactRoot::from_quadratic(&Quadratic::new(1.0f64, 0.0, 1.0), RootSelector::Lo),
            Err(Error::NoRealRoots)
        );
    }

    #[test]
    fn all_four_orders() {
        use Sign::*;
        let p = Quadratic::new(1.0f64, -3.0, 2.0);
        let q = Quadratic::new(1.0f64, -4.5, 4.5);
        assert_eq!(
            exact_order_all(&p, &q).unwrap(),
            [[Negative, Negative], [Positive, Negative]]
        );
        assert_eq!(
            exact_order_all(&p, &p).unwrap(),
            [[Zero, Negative], [Positive, Zero]]
        );
        let t = Quadratic::new(1.0f64, -2.0, 1.0);
        assert_eq!(exact_order_all(&t, &t).unwrap(), [[Zero; 2]; 2]);
        let miss = Quadratic::new(1.0f64, 0.0, 1.0);
        assert_eq!(exact_order_all(&p, &miss), Err(Error::NoRealRoots));
    }

    #[test]
    fn sylvester_of_known_pair() {
        // roots {1, 2} and {1.5, 3}: 1·1·(−2)(−0.5)(−1)(0.5)
        let d = sylvester_determinant(&[1.0f64, -3.0, 2.0], &[1.0, -4.5, 4.5]);
        assert_eq!(d, -0.5);
        // roots {−1, 1} and {−2, 2}: 9
        assert_eq!(
            sylvester_determinant(&[1.0f64, 0.0, -1.0], &[1.0, 0.0, -4.0]),
            9.0
        );
    }
}
