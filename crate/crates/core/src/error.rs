use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("form of odd degree {0} cannot be a matrix entry")]
    OddDegreeEntry(usize),

    #[error("invalid degree {degree} for ambient dimension {n}")]
    InvalidDegree { degree: usize, n: usize },

    #[error("exponential needs nilpotent entries; found a degree-0 component")]
    NonNilpotent,

    #[error("Clifford models need even dimension in 2..=8, got {0}")]
    UnsupportedCliffordDimension(usize),

    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,

    #[error("matrix is not in sl(N): {0}")]
    NotInSl(String),

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("partition {partition} is not reduced for SU({n})")]
    NotReduced { partition: String, n: usize },

    #[error("irrep {partition} has {boxes} boxes, beyond the configured cutoff {cutoff}")]
    CutoffExceeded { partition: String, boxes: usize, cutoff: usize },

    #[error("explicit irreps are built for SU(2) and SU(4) only, got SU({0})")]
    UnsupportedGroup(usize),

    #[error("torus element is not in SU({n}): {reason}")]
    NotUnimodular { n: usize, reason: String },

    #[error("central element ω^k needs exact Gaussian roots of unity; SU({0}) is not supported")]
    NonGaussianCenter(usize),

    #[error("word of length {len} exceeds the bound {bound}")]
    WordTooLong { len: usize, bound: usize },

    #[error("test function is not pairable here: {0}")]
    UnsupportedTestFunction(String),

    #[error("test function support exceeds the built irreps: {0}")]
    SupportExceedsCutoff(String),

    #[error("central bump is not flat at its support")]
    NonFlatBump,

    #[error("curvature violates antisymmetry at R[{i}][{j}][{k}][{l}]")]
    CurvatureAntisymmetry { i: usize, j: usize, k: usize, l: usize },

    #[error("curvature violates the first Bianchi identity at ({i},{j},{k},{l})")]
    Bianchi { i: usize, j: usize, k: usize, l: usize },

    #[error("Euler form is tabulated for n in {{2, 4}}, got {0}")]
    UnsupportedEuler(usize),

    #[error("unknown model '{0}'")]
    UnknownModel(String),

    #[error("model file parse error at line {line}: {msg}")]
    ModelParse { line: usize, msg: String },

    #[error("value is not a real rational: {0}")]
    NotReportable(String),

    #[error("signature check failed for {model}: index {index}, expected {expected}")]
    SignatureMismatch { model: String, index: String, expected: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
