use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("matrix must be square with size at least 1")]
    InvalidMatrix,
    #[error("negative index {0}; canonicalize first")]
    NegativeIndex(i64),
    #[error("alpha = {0} is an integer")]
    IntegerAlpha(String),
    #[error("invalid cyclic structure: {0}")]
    InvalidStructure(String),
    #[error("degenerate block structure")]
    DegenerateStructure,
    #[error("invalid parity: p = {p}, k = {k}")]
    InvalidParity { p: usize, k: usize },
    #[error("translation amplitudes differ: {0} vs {1}")]
    AmplitudeMismatch(usize, usize),
    #[error("odd period required, got {0}")]
    OddPeriodRequired(usize),
    #[error("even period required, got {0}")]
    EvenPeriodRequired(usize),
    #[error("omega = {0} is not supported for exact verification (use 2)")]
    UnsupportedOmega(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("not proportional: {0}")]
    NotProportional(String),
    #[error("wrong period: expected {expected}, got {got}")]
    WrongPeriod { expected: usize, got: usize },
    #[error("degenerate denominator: {0}")]
    DegenerateDenominator(String),
    #[error("pseudo-Wronskian vanishes identically at alpha = {0}")]
    SampleDegenerate(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Variant name, for machine-readable error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::InvalidMatrix => "InvalidMatrix",
            Error::NegativeIndex(_) => "NegativeIndex",
            Error::IntegerAlpha(_) => "IntegerAlpha",
            Error::InvalidStructure(_) => "InvalidStructure",
            Error::DegenerateStructure => "DegenerateStructure",
            Error::InvalidParity { .. } => "InvalidParity",
            Error::AmplitudeMismatch(..) => "AmplitudeMismatch",
            Error::OddPeriodRequired(_) => "OddPeriodRequired",
            Error::EvenPeriodRequired(_) => "EvenPeriodRequired",
            Error::UnsupportedOmega(_) => "UnsupportedOmega",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::NotProportional(_) => "NotProportional",
            Error::WrongPeriod { .. } => "WrongPeriod",
            Error::DegenerateDenominator(_) => "DegenerateDenominator",
            Error::SampleDegenerate(_) => "SampleDegenerate",
            Error::Parse(_) => "Parse",
        }
    }
}
