use thiserror::Error;

/// Failures reported by the geometry, combinatorics and search routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point is not in the upper half-plane (y = {0})")]
    NotInUpperHalfPlane(f64),
    #[error("degenerate geodesic: endpoints coincide")]
    DegenerateGeodesic,
    #[error("matrix is singular (det = {0})")]
    SingularMatrix(f64),
    #[error("curve length must be positive, got {0}")]
    NonPositiveLength(f64),
    #[error("argument must be nonnegative, got {0}")]
    NegativeArgument(f64),
    #[error("angle {0} is outside (0, pi)")]
    DegenerateAngle(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("shear structure is not complete at puncture {puncture} (shear sum {sum})")]
    Incomplete { puncture: usize, sum: f64 },
    #[error("shear vector has {got} entries, triangulation has {expected} edges")]
    ShearCount { expected: usize, got: usize },
    #[error("word is not carried by the triangulation: {0}")]
    InvalidWord(String),
    #[error("holonomy is not hyperbolic (|trace| = {0}); curve is inessential or peripheral")]
    NotHyperbolic(f64),
    #[error("coordinates overflow the planar development; shears too large")]
    Overflow,
    #[error("development depth {0} exceeded")]
    DepthExceeded(usize),
    #[error("slope {0} is not an essential curve")]
    NonEssentialSlope(String),
    #[error("cannot parse slope from {0:?}")]
    SlopeParse(String),
    #[error("surfaces are not comparable: {0}")]
    Incompatible(String),
    #[error("systole search not certified: {0}")]
    GuardFailed(String),
    #[error("curves are disjoint, twisting is undefined")]
    Disjoint,
    #[error("anchor curve has length {length} > eps_B = {eps_b}")]
    AnchorNotShort { length: f64, eps_b: f64 },
    #[error("empty input")]
    Empty,
    #[error("serialization: {0}")]
    Serde(String),
}

pub type Result<T> = std::result::Result<T, Error>;
