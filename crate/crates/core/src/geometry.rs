//! Quadrics, line segments and the univariate quadratics they produce.

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar, Sign, Widen};

/// Implicit quadric surface
/// `xx·x² + xy·xy + xz·xz + yy·y² + yz·yz + zz·z² + x·x + y·y + z·z + c = 0`,
/// coefficients stored in that order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadric<T> {
    pub coeffs: [T; 10],
}

impl<T: Copy> Quadric<T> {
    pub fn new(coeffs: [T; 10]) -> Self {
        Quadric { coeffs }
    }
}

impl Quadric<f32> {
    /// Sphere `|p − center|² − radius² = 0`, built in double precision and
    /// rounded once to single.
    pub fn sphere(center: [f64; 3], radius: f64) -> Self {
        let [cx, cy, cz] = center;
        let k = cx * cx + cy * cy + cz * cz - radius * radius;
        Quadric::new([
            1.0,
            0.0,
            0.0,
            1.0,
            0.0,
            1.0,
            (-2.0 * cx) as f32,
            (-2.0 * cy) as f32,
            (-2.0 * cz) as f32,
            k as f32,
        ])
    }

    /// Value at a point, evaluated in double precision.
    pub fn eval(&self, p: [f64; 3]) -> f64 {
        let c = self.coeffs.map(f64::from);
        let [x, y, z] = p;
        c[0] * x * x
            + c[1] * x * y
            + c[2] * x * z
            + c[3] * y * y
            + c[4] * y * z
            + c[5] * z * z
            + c[6] * x
            + c[7] * y
            + c[8] * z
            + c[9]
    }
}

/// Parametric segment `origin + t·direction`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineSegment<T> {
    pub origin: [T; 3],
    pub direction: [T; 3],
}

impl<T: Scalar + Copy> LineSegment<T> {
    pub fn new(origin: [T; 3], direction: [T; 3]) -> Result<Self> {
        if direction.iter().all(|d| d.sign().is_zero()) {
            return Err(Error::DegenerateDirection);
        }
        Ok(LineSegment { origin, direction })
    }
}

/// `a·t² + b·t + c` with its discriminant `b² − 4ac` cached in the same
/// precision as the coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Quadratic<T> {
    a: T,
    b: T,
    c: T,
    disc: T,
}

impl<T: Scalar> Quadratic<T> {
    pub fn new(a: T, b: T, c: T) -> Self {
        let disc = b.clone() * b.clone() - (a.clone() * c.clone()).scale2(2);
        Quadratic { a, b, c, disc }
    }
}

impl<T> Quadratic<T> {
    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn c(&self) -> &T {
        &self.c
    }

    pub fn disc(&self) -> &T {
        &self.disc
    }
}

impl<T: Scalar> Quadratic<T> {
    /// Converts the coefficients and recomputes the discriminant in `U`.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Quadratic<U> {
        Quadratic::new(f(&self.a), f(&self.b), f(&self.c))
    }

    /// Horner evaluation at `t`.
    pub fn eval(&self, t: &T) -> T {
        (self.a.clone() * t.clone() + self.b.clone()) * t.clone() + self.c.clone()
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.c.is_finite() && self.disc.is_finite()
    }
}

/// Outcome of the discriminant screen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Screen {
    /// Non-negative discriminant: the line meets the surface.
    Hit,
    Miss,
}

pub fn discriminant_screen<T: Scalar>(q: &Quadratic<T>) -> Screen {
    if q.disc().sign().is_negative() {
        Screen::Miss
    } else {
        Screen::Hit
    }
}

/// Which of the two roots of a quadratic is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootSelector {
    Lo,
    Hi,
}

impl RootSelector {
    pub fn other(self) -> Self {
        match self {
            RootSelector::Lo => RootSelector::Hi,
            RootSelector::Hi => RootSelector::Lo,
        }
    }

    pub fn index(self) -> usize {
        match self {
            RootSelector::Lo => 0,
            RootSelector::Hi => 1,
        }
    }

    /// Sign `σ` such that this root equals `(−b + σ·√disc) / 2a`.
    pub fn radical_sign(self, a: Sign) -> Sign {
        match self {
            RootSelector::Hi => a,
            RootSelector::Lo => -a,
        }
    }
}

/// Formula used to produce a root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `u / 2a` with `u = −(b + sign(b)·√disc)`.
    Direct,
    /// `2c / u`.
    Reciprocal,
}

/// Sign of `b` with zero treated as positive, as used by the stable formula.
pub fn stable_sign<T: Scalar>(b: &T) -> Sign {
    match b.sign() {
        Sign::Negative => Sign::Negative,
        _ => Sign::Positive,
    }
}

/// The branch of the stable formula that yields root `which`.
pub fn branch_for<T: Scalar>(q: &Quadratic<T>, which: RootSelector) -> Branch {
    // The direct branch carries radical sign −sign(b).
    if which.radical_sign(q.a().sign()) == -stable_sign(q.b()) {
        Branch::Direct
    } else {
        Branch::Reciprocal
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootPair<T> {
    pub lo: T,
    pub hi: T,
    pub lo_branch: Branch,
    pub hi_branch: Branch,
}

impl<T: Clone> RootPair<T> {
    pub fn get(&self, which: RootSelector) -> T {
        match which {
            RootSelector::Lo => self.lo.clone(),
            RootSelector::Hi => self.hi.clone(),
        }
    }
}

/// Restricts a quadric to a line, computing the coefficients in `W`.
pub fn substitute<S, W>(line: &LineSegment<S>, quadric: &Quadric<S>) -> Result<Quadratic<W>>
where
    S: Copy,
    W: Scalar + Widen<S>,
{
    let k = quadric.coeffs.map(W::widen);
    let [ox, oy, oz] = line.origin.map(W::widen);
    let [vx, vy, vz] = line.direction.map(W::widen);
    let [kxx, kxy, kxz, kyy, kyz, kzz, kx, ky, kz, k0] = k;
    let two = |x: W| x.scale2(1);

    let a = kxx.clone() * vx.clone() * vx.clone()
        + kxy.clone() * vx.clone() * vy.clone()
        + kxz.clone() * vx.clone() * vz.clone()
        + kyy.clone() * vy.clone() * vy.clone()
        + kyz.clone() * vy.clone() * vz.clone()
        + kzz.clone() * vz.clone() * vz.clone();
    let b = two(kxx.clone() * ox.clone() * vx.clone())
        + kxy.clone() * (ox.clone() * vy.clone() + oy.clone() * vx.clone())
        + kxz.clone() * (ox.clone() * vz.clone() + oz.clone() * vx.clone())
        + two(kyy.clone() * oy.clone() * vy.clone())
        + kyz.clone() * (oy.clone() * vz.clone() + oz.clone() * vy.clone())
        + two(kzz.clone() * oz.clone() * vz.clone())
        + kx.clone() * vx
        + ky.clone() * vy
        + kz.clone() * vz;
    let c = kxx * ox.clone() * ox.clone()
        + kxy * ox.clone() * oy.clone()
        + kxz * ox.clone() * oz.clone()
        + kyy * oy.clone() * oy.clone()
        + kyz * oy.clone() * oz.clone()
        + kzz * oz.clone() * oz.clone()
        + kx * ox
        + ky * oy
        + kz * oz
        + k0;

    let q = Quadratic::new(a, b, c);
    if !q.is_finite() {
        return Err(Error::Overflow);
    }
    Ok(q)
}

/// Both roots by the cancellation-free formula, sorted ascending.
pub fn stable_roots<T: Real>(q: &Quadratic<T>) -> Result<RootPair<T>> {
    if q.a().sign().is_zero() {
        return Err(Error::DegenerateQuadratic);
    }
    if q.disc().sign().is_negative() {
        return Err(Error::NoRealRoots);
    }
    let root = q.disc().sqrt();
    let u = match stable_sign(q.b()) {
        Sign::Negative => -(q.b().clone() - root),
        _ => -(q.b().clone() + root),
    };
    let direct = u.clone() / q.a().scale2(1);
    let reciprocal = if u.sign().is_zero() {
        direct.clone()
    } else {
        q.c().scale2(1) / u
    };
    if direct > reciprocal {
        Ok(RootPair {
            lo: reciprocal,
            hi: direct,
            lo_branch: Branch::Reciprocal,
            hi_branch: Branch::Direct,
        })
    } else {
        Ok(RootPair {
            lo: direct,
            hi: reciprocal,
            lo_branch: Branch::Direct,
            hi_branch: Branch::Reciprocal,
        })
    }
}

/// A single root by the stable formula, taking the branch that produces it.
pub fn stable_root<T: Real>(q: &Quadratic<T>, which: RootSelector) -> Result<T> {
    if q.a().sign().is_zero() {
        return Err(Error::DegenerateQuadratic);
    }
    if q.disc().sign().is_negative() {
        return Err(Error::NoRealRoots);
    }
    let root = q.disc().sqrt();
    let u = match stable_sign(q.b()) {
        Sign::Negative => -(q.b().clone() - root),
        _ => -(q.b().clone() + root),
    };
    if branch_for(q, which) == Branch::Direct || u.sign().is_zero() {
        Ok(u / q.a().scale2(1))
    } else {
        Ok(q.c().scale2(1) / u)
    }
}
