use crate::scalar::{Scalar, Sign};

/// Sign of the rounded difference `r1 − r2`.
///
/// For IEEE formats the difference of two distinct finite values never
/// rounds to zero, so `Zero` means the stored roots are identical.
pub fn approx_compare<T: Scalar>(r1: &T, r2: &T) -> Sign {
    (r1.clone() - r2.clone()).sign()
}
