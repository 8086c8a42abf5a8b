use thiserror::Error;

/// Errors raised by the library. Every variant carries a stable machine-readable
/// code (see [`Error::code`]) which the command-line front end forwards verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group closure exceeds the order cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("not a simplicial action: {0}")]
    NotSimplicialAction(String),
    #[error("invalid action data: {0}")]
    InvalidActionData(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("character is not irreducible")]
    NotIrreducible,
    #[error("Schur index of rational irreducible {orbit} of group {group} is not certified")]
    SchurIndexUnknown { group: String, orbit: usize },
    #[error("decomposition is not integral: {0}")]
    DecompositionNotIntegral(String),
    #[error("alpha map is not a bijection: {0}")]
    BijectionFailure(String),
    #[error("change of fields does not respect relations: {0}")]
    RelationMismatch(String),
    #[error("singular matrix: {0}")]
    SingularMatrix(String),
    #[error("map is not equivariant: {0}")]
    NotEquivariant(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::OrderCapExceeded { .. } => "OrderCapExceeded",
            Error::NotSimplicialAction(_) => "NotSimplicialAction",
            Error::InvalidActionData(_) => "InvalidActionData",
            Error::InvalidComplex(_) => "InvalidComplex",
            Error::InvalidInput(_) => "InvalidInput",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::NotIrreducible => "NotIrreducible",
            Error::SchurIndexUnknown { .. } => "SchurIndexUnknown",
            Error::DecompositionNotIntegral(_) => "DecompositionNotIntegral",
            Error::BijectionFailure(_) => "BijectionFailure",
            Error::RelationMismatch(_) => "RelationMismatch",
            Error::SingularMatrix(_) => "SingularMatrix",
            Error::NotEquivariant(_) => "NotEquivariant",
        }
    }

    /// Errors that indicate a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InternalInconsistency(_) | Error::BijectionFailure(_) | Error::RelationMismatch(_) | Error::SingularMatrix(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
