//! Floating-point operation counting.
//!
//! [`Tally<T>`] wraps a scalar and bumps a shared counter on every `+`, `−`,
//! `×`, `÷`, `√`, negation, power-of-two scaling and value comparison. Sign
//! queries and zero tests are free. Counters are plain `Rc<Cell<_>>` handles,
//! so each measurement owns its counter and nothing is global.

use std::cell::Cell;
use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::scalar::{Real, Scalar, Sign};

#[derive(Clone, Debug, Default)]
pub struct OpCounter(Rc<Cell<u64>>);

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self) -> u64 {
        self.0.get()
    }

    pub fn reset(&self) {
        self.0.set(0);
    }

    pub fn wrap<T>(&self, value: T) -> Tally<T> {
        Tally {
            value,
            counter: Some(self.clone()),
        }
    }

    fn bump(&self) {
        self.0.set(self.0.get() + 1);
    }
}

#[derive(Clone, Debug)]
pub struct Tally<T> {
    value: T,
    counter: Option<OpCounter>,
}

impl<T> Tally<T> {
    pub fn value(&self) -> &T {
        &self.value
    }

    pub fn into_value(self) -> T {
        self.value
    }

    fn join(a: &Option<OpCounter>, b: &Option<OpCounter>) -> Option<OpCounter> {
        let c = a.clone().or_else(|| b.clone());
        if let Some(c) = &c {
            c.bump();
        }
        c
    }

    fn bumped(c: Option<OpCounter>) -> Option<OpCounter> {
        if let Some(c) = &c {
            c.bump();
        }
        c
    }
}

macro_rules! tally_binop {
    ($tr:ident, $f:ident) => {
        impl<T: $tr<Output = T>> $tr for Tally<T> {
            type Output = Tally<T>;

            fn $f(self, rhs: Tally<T>) -> Tally<T> {
                let counter = Self::join(&self.counter, &rhs.counter);
                Tally {
                    value: self.value.$f(rhs.value),
                    counter,
                }
            }
        }
    };
}

tally_binop!(Add, add);
tally_binop!(Sub, sub);
tally_binop!(Mul, mul);
tally_binop!(Div, div);

impl<T: Neg<Output = T>> Neg for Tally<T> {
    type Output = Tally<T>;

    fn neg(self) -> Tally<T> {
        Tally {
            value: -self.value,
            counter: Self::bumped(self.counter),
        }
    }
}

impl<T: PartialEq> PartialEq for Tally<T> {
    fn eq(&self, other: &Self) -> bool {
        Self::join(&self.counter, &other.counter);
        self.value == other.value
    }
}

impl<T: PartialOrd> PartialOrd for Tally<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Self::join(&self.counter, &other.counter);
        self.value.partial_cmp(&other.value)
    }
}

impl<T: Zero> Zero for Tally<T> {
    fn zero() -> Self {
        Tally {
            value: T::zero(),
            counter: None,
        }
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl<T: One> One for Tally<T> {
    fn one() -> Self {
        Tally {
            value: T::one(),
            counter: None,
        }
    }
}

impl<T: Scalar> Scalar for Tally<T> {
    fn sign(&self) -> Sign {
        self.value.sign()
    }

    fn scale2(&self, k: i32) -> Self {
        Tally {
            value: self.value.scale2(k),
            counter: Self::bumped(self.counter.clone()),
        }
    }

    fn is_finite(&self) -> bool {
        self.value.is_finite()
    }
}

impl<T: Real> Real for Tally<T> {
    fn sqrt(&self) -> Self {
        Tally {
            value: self.value.sqrt(),
            counter: Self::bumped(self.counter.clone()),
        }
    }
}
