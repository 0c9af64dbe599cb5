use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("recession cone is not full-dimensional")]
    DegenerateCone,
    #[error("scale factor must be positive")]
    NonpositiveScale,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polyhedra have different recession cones")]
    RecessionMismatch,
    #[error("direction is not in the dual of the recession cone; support value is unbounded")]
    UnboundedDirection,
    #[error("ideals live in different ambient rings")]
    AmbientMismatch,
    #[error("power exponent must be nonnegative")]
    NonpositivePower,
    #[error("operation requires a polynomial ambient ring")]
    NotPolynomialAmbient,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariableName(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("presentation has a non-monomial partial derivative")]
    UnsupportedPresentation,
    #[error("characteristic {p} divides the coefficient {coefficient} of a partial derivative")]
    CharacteristicDividesCoefficient { p: u64, coefficient: i64 },
    #[error("ray index {index} out of range (cone has {rays} rays)")]
    RayOutOfRange { index: usize, rays: usize },
    #[error("ambient ring is not supported by this operation")]
    UnsupportedAmbient,
    #[error("exponents must be positive")]
    NonpositiveExponent,
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("denominator of the exponent is divisible by p = {0}")]
    DenominatorDivisibleByP(u64),
    #[error("Frobenius-root chain did not stabilize by e = {e_max}")]
    NonStabilized { e_max: u32 },
    #[error("ascending chain violated at level e = {0}")]
    ChainNotAscending(u32),
    #[error("search budget exceeded: {0}")]
    SearchBudgetExceeded(String),
    #[error("schedule is not a divisibility chain")]
    NotDivisibilityChain,
    #[error("no stabilization along the supplied schedule")]
    NoStabilization,
    #[error("multiplier ideals are not monotone along the schedule at m = {0}")]
    DivisibilityMonotonicity(u64),
    #[error("graded-family law fails for ({0}, {1})")]
    GradedLawViolated(u64, u64),
    #[error("invalid instance spec: {0}")]
    InvalidSpec(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("exponent vector is not in the ambient semigroup")]
    NotInSemigroup,
    #[error("the zero ideal cannot be represented")]
    ZeroIdeal,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("scan box too small: boundary member {0} has a non-member translate")]
    ScanBoxTooSmall(String),
}
