//! Error type shared by every module.

use thiserror::Error;

/// Failure modes of the library.
///
/// Variants split into two groups: input that is malformed or inconsistent
/// with the group (see [`Error::is_validation`]), and well-formed requests the
/// library declines to answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("central class: {0}")]
    CentralClass(String),
    #[error("order violation: {0}")]
    OrderViolation(String),
    #[error("missing characteristic 2 decoration: {0}")]
    MissingDecoration(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("partition sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("closure comparison needs two unipotent classes")]
    MixedKinds,
    #[error("no class with {0}")]
    NoSuchClass(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("unsupported characteristic 2 class: {0}")]
    UnsupportedChar2Class(String),
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),
    #[error("no Spin8 profile for {0}; supply profiles explicitly")]
    MissingSpin8Profile(String),
    #[error("outside catalog: {0}")]
    OutsideCatalog(String),
    #[error("bad characteristic: {0}")]
    BadCharacteristic(String),
    #[error("enumeration bound exceeded: n = {n} > {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("cannot instantiate over GF({q}): {reason}")]
    Uninstantiable { q: u32, reason: String },
    #[error("characteristic polynomial does not split over GF({0})")]
    NonSplit(u32),
    #[error("group too large: {0}")]
    GroupTooLarge(String),
    #[error("enumeration too large: more than {0} subspaces")]
    EnumerationTooLarge(usize),
}

impl Error {
    /// True for errors caused by invalid input rather than unsupported requests.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidGroup(_)
                | Error::DimensionMismatch(_)
                | Error::ParityViolation(_)
                | Error::CentralClass(_)
                | Error::OrderViolation(_)
                | Error::MissingDecoration(_)
                | Error::Malformed(_)
                | Error::SizeMismatch(..)
                | Error::MixedKinds
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
