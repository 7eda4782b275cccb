use thiserror::Error;

/// Errors raised by the algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live over different coefficient fields")]
    MixedFields,
    #[error("characteristic {0} is neither 0 nor a supported prime")]
    NonPrimeCharacteristic(u64),
    #[error("characteristic {0} is not supported by this operation")]
    UnsupportedCharacteristic(u64),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("constant polynomial where a nonconstant one is required")]
    ConstantPolynomial,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("series precondition failed: {0}")]
    SeriesPrecondition(String),
    #[error("resultant undefined: both inputs are constant in the eliminated variable")]
    ConstantResultantInputs,
    #[error("monoid has gcd {0}; the operation needs a numerical semigroup")]
    NotNumerical(usize),
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(usize),
    #[error("arrangement does not generate the semigroup")]
    ArrangementMismatch,
    #[error("arrangement is not free: {0}")]
    NotFree(String),
    #[error("gcd of the supports is {0}, expected 1")]
    GcdNotOne(usize),
    #[error("basis element {0} is not monic")]
    NotMonic(usize),
    #[error("empty basis")]
    EmptyBasis,
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("precision cap {0} exceeded before the gcd descent finished")]
    PrecisionCapExceeded(usize),
    #[error("approximate root iteration did not converge within {0} steps")]
    ApproximateRootDiverged(usize),
    #[error("not one place at infinity: {0}")]
    NotOnePlaceAtInfinity(String),
    #[error("presentation pair has no reduction to zero: {0}")]
    MissingTraces(String),
}

impl Error {
    /// Stable variant name, used by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::MixedFields => "MixedFields",
            Error::NonPrimeCharacteristic(_) => "NonPrimeCharacteristic",
            Error::UnsupportedCharacteristic(_) => "UnsupportedCharacteristic",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::ConstantPolynomial => "ConstantPolynomial",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::SeriesPrecondition(_) => "SeriesPrecondition",
            Error::ConstantResultantInputs => "ConstantResultantInputs",
            Error::NotNumerical(_) => "NotNumerical",
            Error::NotInSemigroup(_) => "NotInSemigroup",
            Error::ArrangementMismatch => "ArrangementMismatch",
            Error::NotFree(_) => "NotFree",
            Error::GcdNotOne(_) => "GcdNotOne",
            Error::NotMonic(_) => "NotMonic",
            Error::EmptyBasis => "EmptyBasis",
            Error::LimitExceeded(_) => "LimitExceeded",
            Error::PrecisionCapExceeded(_) => "PrecisionCapExceeded",
            Error::ApproximateRootDiverged(_) => "ApproximateRootDiverged",
            Error::NotOnePlaceAtInfinity(_) => "NotOnePlaceAtInfinity",
            Error::MissingTraces(_) => "MissingTraces",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
