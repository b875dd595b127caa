//! Exact ordering of line–quadric intersection parameters.
//!
//! A line `q + t·v` meets a quadric where a quadratic in `t` vanishes.
//! Sorting those roots along the line is easy until two roots from
//! different quadrics fall within rounding error of each other. This crate
//! provides the quadratic machinery, four ways of comparing two roots
//! (approximate, staged extended precision, repeated squaring, resultant),
//! an exact oracle, the two benchmark scenes and the per-line tracker.
//!
//! Predicates are generic over [`Scalar`]/[`Real`]; the aliases below name
//! the instantiations used in practice.

pub mod comparators;
pub mod error;
pub mod geometry;
pub mod mp;
pub mod oracle;
pub mod scalar;
pub mod scene_io;
pub mod scenes;
pub mod tally;
pub mod tracker;

pub use comparators::{
    approx_compare, extended_compare, extended_root, midpoint_side_test, precompute_minors,
    repeated_squaring_compare, resolve_known_pairs, resultant_compare, resultant_delta,
    squaring_parts, squaring_subradical, squaring_terms, KnownSigns, Minors, PairSigns,
    PrecisionSchedule, SquaringTerms,
};
pub use error::{Error, Result};
pub use geometry::{
    branch_for, discriminant_screen, stable_root, stable_roots, substitute, Branch, LineSegment,
    Quadratic, Quadric, RootPair, RootSelector, Screen,
};
pub use mp::MpFloat;
pub use oracle::{
    exact_compare, exact_order_all, exact_sign_diff, sylvester_determinant, ExactRoot,
};
pub use scalar::{binary_exponent, exact_rational, Real, Scalar, Sign, Widen};
pub use tally::{OpCounter, Tally};

pub use num_rational::BigRational;

/// Quadric in single-precision storage format.
pub type StorageQuadric = Quadric<f32>;
/// Line with single-precision origin and direction.
pub type StorageLine = LineSegment<f32>;
/// Quadratic in storage precision, as the approximate method sees it.
pub type Quadratic32 = Quadratic<f32>;
/// Quadratic in working precision, as produced by [`substitute`].
pub type Quadratic64 = Quadratic<f64>;
/// Quadratic over exact rationals.
pub type ExactQuadratic = Quadratic<BigRational>;
/// Quadratic in multiprecision floating point.
pub type MpQuadratic = Quadratic<MpFloat>;
/// Minors in multiprecision floating point.
pub type MpMinors = Minors<MpFloat>;
/// Minors over exact rationals.
pub type ExactMinors = Minors<BigRational>;
