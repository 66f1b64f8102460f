//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by jet evaluation, frame construction, and the various
/// pointwise and field-level analyses.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    /// Evaluation was requested at (or too close to) a declared singular
    /// point of the map, where no jet exists.
    #[error("point at distance {distance:.3e} from a singular locus (need > {required:.3e})")]
    SingularPoint { distance: f64, required: f64 },

    /// A polynomial map exceeds the configured total-degree cap.
    #[error("polynomial total degree {degree} exceeds cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },

    /// The symmetric eigensolver did not converge.
    #[error("symmetric eigensolve failed to converge")]
    EigensolveFailure,

    /// An orthonormal frame could not be built from the supplied vectors.
    #[error("frame construction degenerate: {0}")]
    FrameDegenerate(String),

    /// The operation needs an invertible tangent-normal rotation and the
    /// point is complex (some Kähler angle vanishes).
    #[error("complex point: the normal rotation is not invertible")]
    ComplexPoint,

    /// A guard band around the Lagrangian locus was violated.
    #[error("too close to a Lagrangian point (cos^2 theta = {value:.3e} < {guard:.3e})")]
    NearLagrangian { value: f64, guard: f64 },

    /// A guard band around the complex locus was violated.
    #[error("too close to a complex point (sin^2 theta = {value:.3e} < {guard:.3e})")]
    NearComplex { value: f64, guard: f64 },

    /// A finite-difference stencil would leave the valid domain.
    #[error("finite-difference stencil leaves the valid domain at offset {0}")]
    StencilOutOfDomain(String),

    /// Two successive quadrature refinements disagree beyond tolerance.
    #[error("quadrature failed to converge: orders {coarse} and {fine} differ by {delta:.3e}")]
    QuadratureNonConvergent { coarse: usize, fine: usize, delta: f64 },

    /// Unknown catalog identifier.
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),

    /// A parameter name not declared by the catalog entry.
    #[error("catalog entry `{id}` has no parameter `{name}`")]
    UnknownParameter { id: String, name: String },

    /// A parameter value outside the entry's admissible range.
    #[error("catalog entry `{id}`: invalid value {value} for `{name}`: {reason}")]
    InvalidParameter {
        id: String,
        name: String,
        value: f64,
        reason: String,
    },

    /// A polynomial description that could not be parsed.
    #[error("invalid polynomial record: {0}")]
    InvalidPolynomial(String),

    /// A request outside an operation's documented precondition.
    #[error("invalid request: {0}")]
    InvalidRequest(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, GeomError>;
