use crate::comparators::resultant::KnownSigns;
use crate::error::{Error, Result};
use crate::geometry::{Quadratic, RootSelector};
use crate::scalar::{Scalar, Sign};

/// Signs of `r1_i − r2_j` for all four root pairs, `None` where the cheap
/// tests could not decide. Indexed by `[s1][s2]` with `Lo = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairSigns {
    pub grid: [[Option<Sign>; 2]; 2],
}

impl PairSigns {
    pub fn get(&self, s1: RootSelector, s2: RootSelector) -> Option<Sign> {
        self.grid[s1.index()][s2.index()]
    }

    pub fn ambiguous(&self) -> Vec<(RootSelector, RootSelector)> {
        let sel = [RootSelector::Lo, RootSelector::Hi];
        let mut out = Vec::new();
        for s1 in sel {
            for s2 in sel {
                if self.get(s1, s2).is_none() {
                    out.push((s1, s2));
                }
            }
        }
        out
    }

    /// The three known signs around the single ambiguous pair, if there is one.
    pub fn to_known(&self) -> Option<KnownSigns> {
        let amb = self.ambiguous();
        if amb.len() != 1 {
            return None;
        }
        let grid = self.grid.map(|row| row.map(|s| s.unwrap_or(Sign::Zero)));
        Some(KnownSigns {
            ambiguous: amb[0],
            grid,
        })
    }

    fn transposed_negated(&self) -> PairSigns {
        let g = self.grid;
        let f = |s: Option<Sign>| s.map(|s| -s);
        PairSigns {
            grid: [[f(g[0][0]), f(g[1][0])], [f(g[0][1]), f(g[1][1])]],
        }
    }
}

/// Decides as many root-pair signs as possible from the two root midpoints
/// and the sign of each quadratic at the other's midpoint. At most one pair
/// is left undecided.
///
/// Every quantity is a polynomial of degree at most four in the coefficients,
/// so the result is exact whenever `T` evaluates those without rounding.
pub fn resolve_known_pairs<T: Scalar>(q1: &Quadratic<T>, q2: &Quadratic<T>) -> Result<PairSigns> {
    let (a1, a2) = (q1.a().sign(), q2.a().sign());
    if a1.is_zero() || a2.is_zero() {
        return Err(Error::DegenerateQuadratic);
    }
    let (d1, d2) = (q1.disc().sign(), q2.disc().sign());
    if d1.is_negative() || d2.is_negative() {
        return Err(Error::NoRealRoots);
    }
    // x1 − x2 = (a1·b2 − a2·b1) / (2·a1·a2)
    let mid = (q1.a().clone() * q2.b().clone() - q2.a().clone() * q1.b().clone()).sign() * a1 * a2;
    let out = match mid {
        Sign::Negative => resolve_ordered(q1, q2),
        Sign::Positive => resolve_ordered(q2, q1).transposed_negated(),
        Sign::Zero => {
            let h = half_width_order(q1, q2);
            let spread = if d1.is_zero() && d2.is_zero() {
                Sign::Zero
            } else {
                Sign::Positive
            };
            PairSigns {
                grid: [[Some(-h), Some(-spread)], [Some(spread), Some(h)]],
            }
        }
    };
    if out.ambiguous().len() > 1 {
        return Err(Error::MoreThanOneAmbiguousPair);
    }
    Ok(out)
}

/// Sign of `h1 − h2` where `h = √disc / 2|a|` is the half-distance between roots.
fn half_width_order<T: Scalar>(q1: &Quadratic<T>, q2: &Quadratic<T>) -> Sign {
    (q1.disc().clone() * q2.a().square() - q2.disc().clone() * q1.a().square()).sign()
}

/// Sign of `a_on·Q_on(x_at)`, i.e. whether the midpoint of `at` lies outside
/// (`+`), on (`0`) or between (`−`) the roots of `on`.
fn midpoint_value<T: Scalar>(on: &Quadratic<T>, at: &Quadratic<T>) -> Sign {
    // 4·a_at²·Q_on(x_at) = a_on·b_at² − 2·a_at·b_at·b_on + 4·a_at²·c_on
    let v = on.a().clone() * at.b().square()
        - (at.a().clone() * at.b().clone() * on.b().clone()).scale2(1)
        + (at.a().square() * on.c().clone()).scale2(2);
    v.sign() * on.a().sign()
}

/// Case `x1 < x2`.
fn resolve_ordered<T: Scalar>(q1: &Quadratic<T>, q2: &Quadratic<T>) -> PairSigns {
    let (d1, d2) = (q1.disc().sign(), q2.disc().sign());
    let mut g: [[Option<Sign>; 2]; 2] = [[None; 2]; 2];
    const LO: usize = 0;
    const HI: usize = 1;
    g[LO][HI] = Some(Sign::Negative);

    // where x1 falls relative to the roots of q2
    match midpoint_value(q2, q1) {
        Sign::Positive => g[LO][LO] = Some(Sign::Negative),
        Sign::Negative => g[HI][LO] = Some(Sign::Positive),
        Sign::Zero => {
            // x1 is the lower root of q2
            g[LO][LO] = Some(-d1);
            g[HI][LO] = Some(d1);
        }
    }
    // where x2 falls relative to the roots of q1
    match midpoint_value(q1, q2) {
        Sign::Positive => g[HI][HI] = Some(Sign::Negative),
        Sign::Negative => g[HI][LO] = Some(Sign::Positive),
        Sign::Zero => {
            // x2 is the upper root of q1
            g[HI][HI] = Some(-d2);
            g[HI][LO] = Some(d2);
        }
    }
    if g[LO][LO].is_none() && g[HI][HI].is_none() {
        // lo1 − lo2 = (x1 − x2) − (h1 − h2), hi1 − hi2 = (x1 − x2) + (h1 − h2)
        let h = half_width_order(q1, q2);
        if !h.is_negative() {
            g[LO][LO] = Some(Sign::Negative);
        }
        if !h.is_positive() {
            g[HI][HI] = Some(Sign::Negative);
        }
    }
    PairSigns { grid: g }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::exact_rational;
    use num_rational::BigRational;

    fn q(a: f64, b: f64, c: f64) -> Quadratic<BigRational> {
        Quadratic::new(exact_rational(a), exact_rational(b), exact_rational(c))
    }

    fn full(p: &PairSigns) -> [[i8; 2]; 2] {
        p.grid.map(|r| r.map(|s| s.expect("decided").as_i8()))
    }

    #[test]
    fn interleaved_roots_leave_one_pair() {
        // {1, 2} against {1.75, 3}: only hi1 vs lo2 needs more work
        let p = resolve_known_pairs(&q(1.0, -3.0, 2.0), &q(1.0, -4.75, 5.25)).unwrap();
        assert_eq!(p.ambiguous(), vec![(RootSelector::Hi, RootSelector::Lo)]);
        assert_eq!(
            p.get(RootSelector::Lo, RootSelector::Lo),
            Some(Sign::Negative)
        );
        assert_eq!(
            p.get(RootSelector::Lo, RootSelector::Hi),
            Some(Sign::Negative)
        );
        assert_eq!(
            p.get(RootSelector::Hi, RootSelector::Hi),
            Some(Sign::Negative)
        );
    }

    #[test]
    fn nested_intervals() {
        // {−1, 1} inside {−2, 2}, shared midpoint
        let p = resolve_known_pairs(&q(1.0, 0.0, -1.0), &q(1.0, 0.0, -4.0)).unwrap();
        assert_eq!(full(&p), [[1, -1], [1, -1]]);
        // {0, 3} around {1, 2}
        let p = resolve_known_pairs(&q(1.0, -3.0, 0.0), &q(-1.0, 3.0, -2.0)).unwrap();
        assert_eq!(full(&p), [[-1, -1], [1, 1]]);
    }

    #[test]
    fn midpoint_on_a_root() {
        // {1, 2} against {1.5, 3}: x1 = 1.5 is the lower root of q2
        let p = resolve_known_pairs(&q(1.0, -3.0, 2.0), &q(1.0, -4.5, 4.5)).unwrap();
        assert_eq!(full(&p), [[-1, -1], [1, -1]]);
    }

    #[test]
    fn reversed_order_is_transposed() {
        let p = resolve_known_pairs(&q(1.0, -4.75, 5.25), &q(1.0, -3.0, 2.0)).unwrap();
        assert_eq!(p.ambiguous(), vec![(RootSelector::Lo, RootSelector::Hi)]);
        assert_eq!(
            p.get(RootSelector::Hi, RootSelector::Hi),
            Some(Sign::Positive)
        );
    }

    #[test]
    fn touching_roots() {
        // {1, 2} against {2, 4}: x2 = 3 lies outside q1, x1 = 1.5 outside q2
        let p = resolve_known_pairs(&q(1.0, -3.0, 2.0), &q(1.0, -6.0, 8.0)).unwrap();
        assert_eq!(p.ambiguous(), vec![(RootSelector::Hi, RootSelector::Lo)]);
        // {1, 3} against the double root 2: shared midpoint
        let p = resolve_known_pairs(&q(1.0, -4.0, 3.0), &q(1.0, -4.0, 4.0)).unwrap();
        assert_eq!(full(&p), [[-1, -1], [1, 1]]);
        // {1, 2} against the double root 2: x2 = 2 is the upper root of q1
        let p = resolve_known_pairs(&q(1.0, -3.0, 2.0), &q(1.0, -4.0, 4.0)).unwrap();
        assert_eq!(full(&p), [[-1, -1], [0, 0]]);
    }
}
