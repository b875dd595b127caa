use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("leading coefficient is zero")]
    DegenerateQuadratic,
    #[error("quadratic has no real roots")]
    NoRealRoots,
    #[error("intermediate value overflowed the working format")]
    Overflow,
    #[error("contract violation: {0}")]
    ContractViolation(&'static str),
    #[error("a sign assumed known by the resultant comparison is zero")]
    KnownSignZero,
    #[error("more than one root pair is ambiguous after resolving known signs")]
    MoreThanOneAmbiguousPair,
    #[error("coefficient exponent {exponent} outside [{min}, {max}]")]
    ExponentRange { exponent: i32, min: i32, max: i32 },
    #[error("line direction is zero")]
    DegenerateDirection,
    #[error("line sampling gave up after {0} rejected candidates")]
    ResampleCapExceeded(u32),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
