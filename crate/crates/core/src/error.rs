use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("residue {residue} is outside the index set of {cartan}")]
    InvalidResidue { residue: usize, cartan: String },

    #[error("h must be an odd integer >= 3 or `inf`, got {0}")]
    InvalidH(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<usize>, reason: String },

    #[error("no closed-form character for a={a}, b={b} (pairing bound {bound})")]
    UnsupportedRange { a: usize, b: usize, bound: usize },

    #[error("operation is undefined on the zero character")]
    ZeroCharacter,

    #[error("arithmetic overflow computing {0}")]
    Overflow(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
