//! Error and validity-diagnostic types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
///
/// Cloneable so batch operations can record one error per element without
/// aborting the whole batch.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// A curve parameter fell outside `[0, 1]`.
    #[error("parameter {t} outside the curve domain [0, 1]")]
    ParameterOutOfDomain { t: f64 },

    /// A query used geometry that degenerates for this operation
    /// (coincident endpoints, zero direction vector, ...).
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),

    /// The winding recursion exceeded its hard depth cap, which signals
    /// numerically inconsistent inputs (NaN geometry, bound smaller than
    /// the curve, ...).
    #[error("winding recursion exceeded its depth cap of {cap}")]
    DepthCapExceeded { cap: u32 },

    /// Too many probe retries while testing curve-to-curve orientation.
    #[error("orientation probe failed after {attempts} attempts; curves intersect or coincide")]
    ProbeFailed { attempts: u32 },

    /// A ray had to be perturbed too many times to clear polyline vertices.
    #[error("ray perturbation failed after {attempts} retries")]
    RayPerturbationFailed { attempts: u32 },

    /// The truncation window of a covering-space sum was too small; the
    /// expanded shell contributed a non-negligible winding of {residual}.
    #[error("covering window too small: shell residual {residual}")]
    CoveringWindowTooSmall { residual: f64 },

    /// Degree elevation asked for a degree below the current one.
    #[error("target degree {target} below current degree {current}")]
    DegreeBelowCurrent { target: usize, current: usize },

    /// Invalid B-spline input (knot vector, counts).
    #[error("invalid spline data: {0}")]
    InvalidSpline(String),

    /// Geometry with no spatial extent where extent is required.
    #[error("geometry has zero extent")]
    ZeroExtent,

    /// Non-finite coordinate encountered at an ingestion boundary.
    #[error("non-finite coordinate in input")]
    NonFiniteInput,

    /// A loop set violated one of the topological validity requirements.
    #[error("{0}")]
    Validity(#[from] ValidityError),

    /// Malformed SVG path data.
    #[error("SVG path syntax error at byte {offset}: {detail}")]
    SvgPath { offset: usize, detail: String },

    /// Malformed SVG document.
    #[error("SVG document error: {0}")]
    SvgDocument(String),

    /// Loop-set document violates the JSON schema.
    #[error("loop-set schema error: {0}")]
    Schema(String),

    /// Malformed CSV input.
    #[error("CSV error at row {row}: {detail}")]
    Csv { row: usize, detail: String },
}

/// Topological validity violations, checked when a loop set is built.
///
/// Each variant corresponds to a structural requirement on trimming loops
/// of a periodic domain; they are surfaced both as errors and as the
/// diagnostics of the `validate` subcommand.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ValidityError {
    /// Non-contractible loops must come in oppositely oriented pairs.
    #[error("cardinality mismatch: {a} loop(s) of the positive class vs {b} of the negative class")]
    CardinalityMismatch { a: usize, b: usize },

    /// A simple loop on a torus must have coprime homology coefficients.
    #[error("homology class ({p}, {q}) is not coprime")]
    NonCoprimeClass { p: i64, q: i64 },

    /// A simple loop on a uni-periodic domain can wrap at most once.
    #[error("homology coefficient {n} on the uni-periodic axis exceeds magnitude 1")]
    UniClassTooLarge { n: i64 },

    /// All non-contractible classes must agree up to sign.
    #[error("mixed homology classes ({p0}, {q0}) and ({p1}, {q1}) cannot coexist")]
    MixedClasses { p0: i64, q0: i64, p1: i64, q1: i64 },

    /// No translate of the candidate loop lies left of its partner.
    #[error("loop pairing failed: no translate of loop {beta} lies left of loop {alpha}")]
    PairingFailed { alpha: usize, beta: usize },

    /// A non-contractible loop appeared in a non-periodic domain.
    #[error("loop {index} has nonzero homology class in a non-periodic domain")]
    NonPeriodicWrap { index: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
