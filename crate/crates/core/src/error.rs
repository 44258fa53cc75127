use thiserror::Error;

/// Errors surfaced by constructors and verification entry points.
///
/// Witness strings name a concrete basis element (or tuple) on which an
/// identity failed, formatted against the ambient space labels.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("coaction is not free (chi-tilde not surjective); witness {witness}")]
    NotFree { witness: String },
    #[error("Galois map not injective; witness {witness}")]
    NotGalois { witness: String },
    #[error("invariant `{clause}` failed; witness {witness}")]
    InvariantFailure { clause: String, witness: String },
    #[error("product not associative; witness {witness}")]
    NotAssociative { witness: String },
    #[error("not in cross-product canonical form; witness {witness}")]
    NotCanonicalForm { witness: String },
    #[error("element is not a form of the expected degree")]
    NotAForm,
    #[error("Hopf axiom failed: {0}")]
    HopfAxiomFailure(String),
    #[error("entwining axiom failed: {0}")]
    EntwiningAxiomFailure(String),
    #[error("internal inconsistency (implementation bug): {0}")]
    InternalInconsistency(String),
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("axiom precheck failed: {0}")]
    AxiomPrecheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
