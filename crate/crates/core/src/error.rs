use thiserror::Error;

/// Every failure mode of the library. `kind()` gives the stable name used in
/// structured error output.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZkitError {
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation requires k = {required} (found k = {found})")]
    UnsupportedDimension { required: usize, found: usize },
    #[error("values with different radicands cannot be combined exactly")]
    MixedRadicand,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational: {0}")]
    InvalidRational(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("points are equal")]
    EqualPoints,
    #[error("points are lightlike separated; no axis contains both")]
    LightlikeSeparation,
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("linear part does not preserve the metric")]
    NotLorentz,
    #[error("point is not contained in the region")]
    MembershipFailure,
    #[error("region carries no openness certificate")]
    CertificateRequired,
    #[error("certificate rejected: {0}")]
    InvalidCertificate(String),
    #[error("restriction is an infinite discrete set: {0}")]
    NotRepresentable(String),
    #[error("sequence family is not Zeno")]
    NotZeno,
    #[error("neighborhoods are not nested: witness in U_{inner} but not in U_{outer}")]
    NotNested { outer: usize, inner: usize },
    #[error("point lies on the loop image")]
    PointOnLoop,
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("axis does not pass through the given point")]
    AxisNotThroughPoint,
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

impl ZkitError {
    pub fn kind(&self) -> &'static str {
        match self {
            ZkitError::DimensionMismatch { .. } => "DimensionMismatch",
            ZkitError::UnsupportedDimension { .. } => "UnsupportedDimension",
            ZkitError::MixedRadicand => "MixedRadicand",
            ZkitError::DivisionByZero => "DivisionByZero",
            ZkitError::InvalidRational(_) => "InvalidRational",
            ZkitError::InvalidParameter(_) => "InvalidParameter",
            ZkitError::EqualPoints => "EqualPoints",
            ZkitError::LightlikeSeparation => "LightlikeSeparation",
            ZkitError::ZeroDirection => "ZeroDirection",
            ZkitError::NotLorentz => "NotLorentz",
            ZkitError::MembershipFailure => "MembershipFailure",
            ZkitError::CertificateRequired => "CertificateRequired",
            ZkitError::InvalidCertificate(_) => "InvalidCertificate",
            ZkitError::NotRepresentable(_) => "NotRepresentable",
            ZkitError::NotZeno => "NotZeno",
            ZkitError::NotNested { .. } => "NotNested",
            ZkitError::PointOnLoop => "PointOnLoop",
            ZkitError::SearchExhausted(_) => "SearchExhausted",
            ZkitError::PreconditionViolated(_) => "PreconditionViolated",
            ZkitError::AxisNotThroughPoint => "AxisNotThroughPoint",
            ZkitError::InvariantViolation(_) => "InvariantViolation",
        }
    }
}

pub type Result<T> = std::result::Result<T, ZkitError>;
