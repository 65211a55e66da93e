use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: String, rank: usize },
    #[error("unknown root system `{0}`")]
    UnknownRootSystem(String),
    #[error("{0} has rank > 3; explicit root data is unavailable")]
    UnsupportedRank(String),
    #[error("coefficient sum is not divisible by the index of connection {0}")]
    InexactDivision(u32),
    #[error("expected degree {expected}, found {found:?}")]
    DegreeMismatch { expected: usize, found: Option<usize> },
    #[error("interpolated constituent {residue} disagrees with the lattice count at q = {q}")]
    PeriodMismatch { residue: usize, q: i64 },
    #[error("residue {residue} is not admissible for {system}")]
    NotAdmissible { system: String, residue: usize },
    #[error("polynomial does not satisfy g(t - h) = (-1)^l g(-t)")]
    SymmetryViolation,
    #[error("q = {q} must exceed m*h = {bound}")]
    QTooSmall { q: u64, bound: u64 },
    #[error("root iteration did not converge after {iterations} steps")]
    NonConvergence { iterations: usize },
    #[error("step of the shift operator must be positive")]
    ZeroStep,
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// Stable variant name, used in structured CLI error output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::DivisionByZero => "DivisionByZero",
            Error::InvalidRank { .. } => "InvalidRank",
            Error::UnknownRootSystem(_) => "UnknownRootSystem",
            Error::UnsupportedRank(_) => "UnsupportedRank",
            Error::InexactDivision(_) => "InexactDivision",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::PeriodMismatch { .. } => "PeriodMismatch",
            Error::NotAdmissible { .. } => "NotAdmissible",
            Error::SymmetryViolation => "SymmetryViolation",
            Error::QTooSmall { .. } => "QTooSmall",
            Error::NonConvergence { .. } => "NonConvergence",
            Error::ZeroStep => "ZeroStep",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
