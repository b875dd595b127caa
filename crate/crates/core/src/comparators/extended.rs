use crate::error::{Error, Result};
use crate::geometry::{branch_for, stable_sign, Branch, Quadratic, RootSelector};
use crate::mp::MpFloat;
use crate::scalar::{Real, Scalar, Sign};

/// Bit widths used by the staged root evaluation, as multiples of the
/// storage precision: discriminant, square root, then division and the final
/// subtraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionSchedule {
    pub base_bits: usize,
    pub multipliers: [usize; 3],
}

impl PrecisionSchedule {
    pub fn new(base_bits: usize, multipliers: [usize; 3]) -> Result<Self> {
        let [m0, m1, m2] = multipliers;
        if base_bits == 0 || m0 == 0 || m0 > m1 || m1 > m2 {
            return Err(Error::ContractViolation(
                "precision schedule must be positive and nondecreasing",
            ));
        }
        Ok(PrecisionSchedule {
            base_bits,
            multipliers,
        })
    }

    /// Schedule whose final stage is `multiplier` times the storage width,
    /// with the earlier stages at a quarter and half of it.
    pub fn scaled(base_bits: usize, multiplier: usize) -> Result<Self> {
        let m = multiplier.max(1);
        Self::new(base_bits, [(m / 4).max(1), (m / 2).max(1), m])
    }

    pub fn discriminant_bits(&self) -> usize {
        self.base_bits * self.multipliers[0]
    }

    pub fn root_bits(&self) -> usize {
        self.base_bits * self.multipliers[1]
    }

    pub fn division_bits(&self) -> usize {
        self.base_bits * self.multipliers[2]
    }
}

impl Default for PrecisionSchedule {
    fn default() -> Self {
        PrecisionSchedule {
            base_bits: 24,
            multipliers: [6, 12, 24],
        }
    }
}

/// One root evaluated by the stable formula with every operation rounded to
/// the stage precision of `schedule`.
pub fn extended_root(
    q: &Quadratic<f64>,
    which: RootSelector,
    schedule: &PrecisionSchedule,
) -> Result<MpFloat> {
    if *q.a() == 0.0 {
        return Err(Error::DegenerateQuadratic);
    }
    let p0 = schedule.discriminant_bits();
    let p1 = schedule.root_bits();
    let p2 = schedule.division_bits();
    let a = MpFloat::from_f64(*q.a(), p0);
    let b = MpFloat::from_f64(*q.b(), p0);
    let c = MpFloat::from_f64(*q.c(), p0);
    let disc = &(&b * &b) - &(&a * &c).scale2(2);
    if disc.sign().is_negative() {
        return Err(Error::NoRealRoots);
    }
    let root = disc.with_precision(p1).sqrt();
    let b1 = b.with_precision(p1);
    let u = match stable_sign(q.b()) {
        Sign::Negative => -(&b1 - &root),
        _ => -(&b1 + &root),
    };
    let u = u.with_precision(p2);
    if branch_for(q, which) == Branch::Direct || u.sign().is_zero() {
        Ok(&u / &a.with_precision(p2).scale2(1))
    } else {
        Ok(&c.with_precision(p2).scale2(1) / &u)
    }
}

/// Sign of `r1 − r2` from roots computed under `schedule`.
pub fn extended_compare(
    q1: &Quadratic<f64>,
    s1: RootSelector,
    q2: &Quadratic<f64>,
    s2: RootSelector,
    schedule: &PrecisionSchedule,
) -> Result<Sign> {
    let r1 = extended_root(q1, s1, schedule)?;
    let r2 = extended_root(q2, s2, schedule)?;
    Ok((&r1 - &r2).sign())
}
