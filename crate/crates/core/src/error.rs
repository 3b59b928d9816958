use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("composite of consecutive differentials is nonzero")]
    CompositeNonzero,
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("wrong degree: expected {expected}, found {found}")]
    WrongDegree { expected: i64, found: i64 },
    #[error("fake coaugmentation must have counit 1, got {0}")]
    BadCounitNormalization(String),
    #[error("group-like search incomplete over Q: {0}")]
    IncompleteOverQ(String),
    #[error("coalgebra does not split over Q: {0}")]
    NotSplitOverQ(String),
    #[error("cell attachment violates staging: {0}")]
    StageViolation(String),
    #[error("Maurer-Cartan equation not solvable exactly: {0}")]
    NotSolvableExactly(String),
    #[error("morphisms cannot be composed: {0}")]
    SourceTargetMismatch(String),
    #[error("pushed-forward element is not Maurer-Cartan: {0}")]
    ResidualNonzero(String),
    #[error("unsupported carrier: {0}")]
    UnsupportedCarrier(String),
    #[error("algebra is not augmented: {0}")]
    NotAugmented(String),
    #[error("witness is not Maurer-Cartan: {0}")]
    WitnessNotMC(String),
    #[error("operation needs a finite-dimensional carrier: {0}")]
    NotFiniteDimensional(String),
    #[error("group-likes map inconsistently to components: {0}")]
    ComponentMismatch(String),
    #[error("not a complex: {0}")]
    NotAComplex(String),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("homotopy identity fails on {0}")]
    HomotopyIdentityFails(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
