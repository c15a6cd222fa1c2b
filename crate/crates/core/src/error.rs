use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {p} divides the root order {n}")]
    CharacteristicDividesOrder { p: u64, n: u64 },
    #[error("invalid eigenvalue list: {0}")]
    InvalidPacketList(String),
    #[error("invalid ramification profile: {0}")]
    InvalidProfile(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("polynomial is not weighted-homogeneous")]
    NotHomogeneous,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("coordinate map is not invertible")]
    NonInvertibleMap,
    #[error("map order exceeds the search bound {0}")]
    OrderBoundExceeded(u32),
    #[error("field of size {q} exceeds the enumeration bound {bound}")]
    EnumerationBound { q: u64, bound: u64 },
    #[error("all coordinates are zero")]
    ZeroPoint,
    #[error("unsupported weights {0:?}: need at least one weight-1 coordinate and at most one heavier one")]
    UnsupportedWeights(Vec<u32>),
    #[error("point set is not closed under the map")]
    NotClosed,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("step {step}: {source}")]
    Step { step: String, source: Box<Error> },
}

impl Error {
    /// Tags an error with the identifier of the step that raised it.
    pub fn at(step: &str) -> impl FnOnce(Error) -> Error + '_ {
        move |e| Error::Step { step: step.to_string(), source: Box::new(e) }
    }
}
