use thiserror::Error;

/// Which of the constraints on `θ(u) = k + ud` was violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutomorphismFault {
    /// `k` must be a non-unit of Z_q.
    KIsUnit,
    /// `k² ≡ 0 (mod q)`.
    KSquareNonzero,
    /// `2kd ≡ 0 (mod q)`.
    CrossTermNonzero,
    /// `d` must be a unit, otherwise the map is not bijective.
    DNotUnit,
    /// Order exceeded the hard cap of `q`.
    OrderTooLarge,
}

impl std::fmt::Display for AutomorphismFault {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let msg = match self {
            AutomorphismFault::KIsUnit => "k must be a non-unit",
            AutomorphismFault::KSquareNonzero => "k^2 must vanish mod q",
            AutomorphismFault::CrossTermNonzero => "2kd must vanish mod q",
            AutomorphismFault::DNotUnit => "d must be a unit (bijectivity)",
            AutomorphismFault::OrderTooLarge => "order exceeds q",
        };
        f.write_str(msg)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring parameters: {0}")]
    InvalidRingParams(String),
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(AutomorphismFault),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("operands live in different skew polynomial rings")]
    ContextMismatch,
    #[error("leading coefficient of the divisor is not a unit")]
    NonUnitLeadingCoeff,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("enumeration of {needed} items exceeds the cap of {cap}")]
    EnumerationCapExceeded { needed: u128, cap: u128 },
    #[error("generator does not divide x^n - lambda")]
    GeneratorNotDivisor,
    #[error("polynomial is not a parity check polynomial of x^n - lambda")]
    NotAParityCheck,
    #[error("gray map variant unsupported: {0}")]
    UnsupportedVariant(String),
    #[error("length {len} is not divisible by index {index}")]
    LengthNotDivisible { len: usize, index: usize },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("constacyclic constant must be a unit")]
    NonUnitLambda,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("manifest missing: {0}")]
    ManifestMissing(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// Checks `needed <= cap`.
    pub(crate) fn check_cap(needed: u128, cap: u128) -> Result<(), Error> {
        if needed > cap {
            Err(Error::EnumerationCapExceeded { needed, cap })
        } else {
            Ok(())
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
