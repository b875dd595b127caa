//! Root-ordering predicates.
//!
//! All predicates answer the sign of `r1 − r2` where `r1` is a chosen root of
//! one quadratic and `r2` a chosen root of another.

mod approx;
mod extended;
mod known;
mod resultant;
mod squaring;

pub use approx::approx_compare;
pub use extended::{extended_compare, extended_root, PrecisionSchedule};
pub use known::{resolve_known_pairs, PairSigns};
pub use resultant::{precompute_minors, resultant_compare, resultant_delta, KnownSigns, Minors};
pub use squaring::{
    midpoint_side_test, repeated_squaring_compare, squaring_parts, squaring_subradical,
    squaring_terms, SquaringTerms,
};
