use crate::error::{Error, Result};
use crate::geometry::{Quadratic, RootSelector};
use crate::scalar::{Scalar, Sign};

/// Products of one quadratic's coefficients that enter the resultant.
#[derive(Clone, Debug, PartialEq)]
pub struct Minors<T> {
    /// `a²`
    pub alpha: T,
    /// `c²`
    pub gamma: T,
    /// `a·b`
    pub delta: T,
    /// `a·c`
    pub epsilon: T,
    /// `b·c`
    pub zeta: T,
    /// `b² − a·c`
    pub d: T,
}

/// Seven operations per quadratic, done once per line.
pub fn precompute_minors<T: Scalar>(q: &Quadratic<T>) -> Minors<T> {
    let (a, b, c) = (q.a().clone(), q.b().clone(), q.c().clone());
    let epsilon = a.clone() * c.clone();
    Minors {
        alpha: a.clone() * a.clone(),
        gamma: c.clone() * c.clone(),
        delta: a * b.clone(),
        zeta: b.clone() * c,
        d: b.clone() * b - epsilon.clone(),
        epsilon,
    }
}

/// Determinant of the Sylvester matrix of the two quadratics, equal to
/// `a1²·a2²·∏(r1_i − r2_j)` over all four root pairs. Eleven operations.
pub fn resultant_delta<T: Scalar>(m1: &Minors<T>, m2: &Minors<T>) -> T {
    m1.alpha.clone() * m2.gamma.clone()
        + m1.gamma.clone() * m2.alpha.clone()
        + m1.d.clone() * m2.epsilon.clone()
        + m1.epsilon.clone() * m2.d.clone()
        - m1.zeta.clone() * m2.delta.clone()
        - m1.delta.clone() * m2.zeta.clone()
}

/// Signs of `r1_i − r2_j` for three of the four root pairs; the fourth is the
/// pair the resultant is asked to decide.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnownSigns {
    pub ambiguous: (RootSelector, RootSelector),
    /// Indexed by `[s1][s2]`; the ambiguous entry is ignored.
    pub grid: [[Sign; 2]; 2],
}

impl KnownSigns {
    fn known(&self) -> impl Iterator<Item = Sign> + '_ {
        let (u1, u2) = (self.ambiguous.0.index(), self.ambiguous.1.index());
        (0..2).flat_map(move |i| {
            (0..2)
                .filter(move |&j| (i, j) != (u1, u2))
                .map(move |j| self.grid[i][j])
        })
    }
}

/// Sign of `r1 − r2` from the resultant and the three known signs.
pub fn resultant_compare<T: Scalar>(
    q1: &Quadratic<T>,
    s1: RootSelector,
    q2: &Quadratic<T>,
    s2: RootSelector,
    known: &KnownSigns,
    m1: &Minors<T>,
    m2: &Minors<T>,
) -> Result<Sign> {
    if q1.a().sign().is_zero() || q2.a().sign().is_zero() {
        return Err(Error::DegenerateQuadratic);
    }
    if known.ambiguous != (s1, s2) {
        return Err(Error::ContractViolation(
            "requested pair is not the ambiguous one",
        ));
    }
    let mut others = Sign::Positive;
    for s in known.known() {
        if s.is_zero() {
            return Err(Error::KnownSignZero);
        }
        others = others * s;
    }
    Ok(resultant_delta(m1, m2).sign() * others)
}
