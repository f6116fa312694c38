use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Cayley table is empty or not square")]
    MalformedTable,
    #[error("entry {value} at ({row}, {col}) is out of range for a semigroup of size {size}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NonAssociative(usize, usize, usize),
    #[error("invalid transformation generators: {0}")]
    InvalidGenerators(String),
    #[error("closure exceeded the size limit of {0} elements")]
    SizeLimitExceeded(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse field descriptor {0:?} (expected Q or Fp:<prime>)")]
    BadField(String),
    #[error("element {0} is not an idempotent")]
    NotIdempotent(usize),
    #[error("J-class {0} is not regular")]
    NotRegular(usize),
    #[error("no J-class with id {0}")]
    UnknownJClass(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("objects live over different fields")]
    FieldMismatch,
    #[error("subspace is not invariant under the action of element {0}")]
    NotInvariant(usize),
    #[error("module is annihilated by the whole algebra")]
    ZeroAction,
    #[error("exhaustive search requested for a module of size above the cap")]
    ExhaustiveCapExceeded,
    #[error("chop failed: {0}")]
    ChopFailure(String),
    #[error("cannot factor element {0} through the transversal")]
    FactorizationFailure(usize),
    #[error("cross-check mismatch: {0}")]
    CrossCheckMismatch(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("verification failed: {0}")]
    VerificationFailure(String),
    #[error("module has no apex: annihilator {0:?} matches no ideal I_J")]
    NoApex(Vec<usize>),
    #[error("semigroup is not a band")]
    NotABand,
    #[error("semigroup is not in DA")]
    NotInDA,
}

impl Error {
    /// Errors caused by malformed user input rather than by the computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::MalformedTable
                | Error::IndexOutOfRange { .. }
                | Error::NonAssociative(..)
                | Error::InvalidGenerators(_)
                | Error::SizeLimitExceeded(_)
                | Error::NotPrime(_)
                | Error::BadField(_)
                | Error::NotRegular(_)
                | Error::UnknownJClass(_)
        )
    }

    /// Errors that can only come from a bug: two independent computations disagreed.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::CrossCheckMismatch(_)
                | Error::InternalInconsistency(_)
                | Error::FactorizationFailure(_)
        )
    }
}
