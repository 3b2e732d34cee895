use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("operation is undefined on the empty partition")]
    EmptyPartition,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("group enumeration exceeded the bound of {bound} elements")]
    BoundExceeded { bound: usize },

    #[error("action is not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("value is not representable as a single quadratic irrationality")]
    MixedRadicands,

    #[error("class functions are defined on different class lists")]
    ClassListMismatch,

    #[error("multiplicity of {irreducible} is not an integer: {value}")]
    NonIntegerMultiplicity { irreducible: String, value: String },

    #[error("decomposition does not reconstruct the class function")]
    Reconstruction,

    #[error("character table: {0}")]
    Table(String),

    #[error("missing class representatives: {0}")]
    MissingRepresentatives(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("Steiner property fails for {witness:?}: contained in {count} blocks")]
    Steiner { witness: Vec<usize>, count: usize },

    #[error("not a stressed hyperplane: {0:?}")]
    NotStressed(Vec<usize>),

    #[error("matroid is not paving")]
    NotPaving,

    #[error("invalid matroid: {0}")]
    InvalidMatroid(String),

    #[error("group does not preserve the structure: {0}")]
    NotPreserved(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
