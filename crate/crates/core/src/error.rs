use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("degenerate form (determinant zero)")]
    Degenerate,

    #[error("unknown lattice name `{0}`")]
    UnknownLattice(String),
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("lattice is not even")]
    OddLattice,
    #[error("discriminant group of order {0} exceeds the enumeration bound")]
    GroupTooLarge(String),
    #[error("classification inapplicable: {0}")]
    ClassificationInapplicable(String),
    #[error("not an even overlattice: {0}")]
    NotEvenOverlattice(String),
    #[error("lattice is not definite")]
    Indefinite,
    #[error("rank {0} exceeds the enumeration limit")]
    RankTooLarge(usize),

    #[error("variable `{0}` is not in the universe")]
    UnknownVariable(String),
    #[error("polynomials live in different variable universes")]
    UniverseMismatch,
    #[error("substitution leaves a negative exponent in `{0}`")]
    NegativeExponent(String),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("degree {0} is below the required minimum")]
    DegreeTooSmall(usize),
    #[error("polynomial is not weighted homogeneous (term degrees {0:?})")]
    NotHomogeneous(Vec<i64>),
    #[error("exact division failed: remainder is nonzero")]
    NotDivisible,

    #[error("invalid conic in the pencil: {0}")]
    InvalidConic(String),
    #[error("expected a homogeneous sextic")]
    NotSextic,
    #[error("invalid projective point: {0}")]
    InvalidPoint(String),

    #[error("valuations (vA={va}, vB={vb}, vD={vd}) match no Kodaira type")]
    InconsistentValuations { va: String, vb: String, vd: String },
    #[error("discriminant vanishes identically")]
    DegenerateDiscriminant,
    #[error("model still depends on parameters: {0}")]
    Parametric(String),
    #[error("model degree profile violated: {0}")]
    BadProfile(String),

    #[error("branch degree problem invalid: {0}")]
    BranchDegree(String),
    #[error("negative Hilbert coefficient at degree {0}")]
    NegativeHilbertCoefficient(usize),

    #[error("verification failed: {0}")]
    Verification(String),
}
