use crate::error::{Error, Result};
use crate::geometry::{Quadratic, RootSelector};
use crate::scalar::{sign_plus_radical, Scalar, Sign};

/// Per-quadratic products reused by every squaring comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct SquaringTerms<T> {
    pub a: T,
    pub b: T,
    /// `a²`
    pub aa: T,
    /// `b²`
    pub bb: T,
    /// `a·b`
    pub ab: T,
    /// `a·c`
    pub ac: T,
    /// `b² − 4ac`
    pub disc: T,
}

pub fn squaring_terms<T: Scalar>(q: &Quadratic<T>) -> SquaringTerms<T> {
    let a = q.a().clone();
    let b = q.b().clone();
    let aa = a.clone() * a.clone();
    let bb = b.clone() * b.clone();
    let ab = a.clone() * b.clone();
    let ac = a.clone() * q.c().clone();
    let disc = bb.clone() - ac.scale2(2);
    SquaringTerms {
        a,
        b,
        aa,
        bb,
        ab,
        ac,
        disc,
    }
}

/// `(free, n)` with `2·a1²·a2²·(r1 − r2)(r1 − r2') = free + σ1·n·√d1`.
pub fn squaring_parts<T: Scalar>(t1: &SquaringTerms<T>, t2: &SquaringTerms<T>) -> (T, T) {
    let free = t2.aa.clone() * t1.bb.clone() - (t1.ac.clone() * t2.aa.clone()).scale2(1)
        + (t1.aa.clone() * t2.ac.clone()).scale2(1)
        - t1.ab.clone() * t2.ab.clone();
    let n = t1.a.clone() * t2.ab.clone() - t2.aa.clone() * t1.b.clone();
    (free, n)
}

/// `free² − n²·d1`, whose sign decides the last squaring.
pub fn squaring_subradical<T: Scalar>(free: &T, n: &T, d1: &T) -> T {
    free.square() - n.square() * d1.clone()
}

/// Sign of `r1 − r2` by squaring away the radicals.
///
/// `cross` must be the sign of `r1 − r2'`, where `r2'` is the root of the
/// second quadratic not selected by `s2`. The product
/// `(r1 − r2)(r1 − r2')` is `Q2(r1)/a2`, which only carries the radical of
/// the first quadratic, so one more squaring settles its sign.
pub fn repeated_squaring_compare<T: Scalar>(
    t1: &SquaringTerms<T>,
    s1: RootSelector,
    t2: &SquaringTerms<T>,
    s2: RootSelector,
    cross: Sign,
) -> Result<Sign> {
    if t1.a.sign().is_zero() || t2.a.sign().is_zero() {
        return Err(Error::DegenerateQuadratic);
    }
    if t1.disc.sign().is_negative() || t2.disc.sign().is_negative() {
        return Err(Error::NoRealRoots);
    }
    let (free, n) = squaring_parts(t1, t2);
    let sigma = s1.radical_sign(t1.a.sign());
    let product = sign_plus_radical(free.sign(), sigma * n.sign(), t1.disc.sign(), || {
        squaring_subradical(&free, &n, &t1.disc).sign()
    });

    if cross.is_zero() {
        // r1 is the other root of the second quadratic
        if !product.is_zero() {
            return Err(Error::ContractViolation(
                "cross sign is zero but r1 is not a root of the second quadratic",
            ));
        }
        let gap = if t2.disc.sign().is_zero() {
            Sign::Zero
        } else {
            Sign::Positive
        };
        return Ok(match s2 {
            RootSelector::Hi => -gap,
            RootSelector::Lo => gap,
        });
    }
    Ok(cross * product)
}

/// Sign of `r1 − x2` where `x2 = −b2 / 2a2` is the midpoint of the second
/// quadratic's roots. The result is a polynomial of degree four in the
/// coefficients, so it is exact at four times the input precision.
pub fn midpoint_side_test<T: Scalar>(
    q1: &Quadratic<T>,
    s1: RootSelector,
    q2: &Quadratic<T>,
) -> Result<Sign> {
    if q1.a().sign().is_zero() || q2.a().sign().is_zero() {
        return Err(Error::DegenerateQuadratic);
    }
    if q1.disc().sign().is_negative() {
        return Err(Error::NoRealRoots);
    }
    // 2·a1·a2·(r1 − x2) = m + σ1·a2·√d1
    let m = q1.a().clone() * q2.b().clone() - q2.a().clone() * q1.b().clone();
    let sigma = s1.radical_sign(q1.a().sign());
    let inner = sign_plus_radical(m.sign(), sigma * q2.a().sign(), q1.disc().sign(), || {
        (m.square() - q2.a().square() * q1.disc().clone()).sign()
    });
    Ok(q1.a().sign() * q2.a().sign() * inner)
}
