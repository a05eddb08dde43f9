//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised while validating or constructing a group model.
#[derive(Debug, Error)]
pub enum GroupError {
    #[error("structure constants violate antisymmetry at (i={i}, j={j}, k={k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("Jacobi identity fails for basis triple (i={i}, j={j}, k={k}), component {l}")]
    JacobiViolation { i: usize, j: usize, k: usize, l: usize },
    #[error("Lie algebra is not nilpotent: lower central series stabilizes at dimension {stable_dim}")]
    NotNilpotent { stable_dim: usize },
    #[error("horizontal set does not bracket-generate: iterated brackets span only {spanned} of {dim} dimensions")]
    NotBracketGenerating { spanned: usize, dim: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("invalid group definition: {0}")]
    InvalidDefinition(String),
    #[error("unknown group preset `{0}`")]
    UnknownPreset(String),
}

/// Errors from the polynomial decision procedures.
#[derive(Debug, Error)]
pub enum PolyError {
    #[error("degree search exceeded cap {cap}; this indicates a bug since termination is guaranteed")]
    DegreeSearchOverflow { cap: usize },
    #[error("invariance identity failed for the supplied kernel vector: {detail}")]
    IdentityFailed { detail: String },
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("variable count mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
}

/// Errors from expression parsing and evaluation.
#[derive(Debug, Error)]
pub enum ExprError {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown variable `{0}` for this group")]
    UnknownVariable(String),
    #[error("expression is not a polynomial: {0}")]
    NotPolynomial(String),
    #[error("expression is not differentiable: {0}")]
    NotDifferentiable(String),
    #[error("expression evaluated to a non-finite value at {at:?}")]
    NotEvaluable { at: Vec<f64> },
}

/// Errors from discretization and eigensolvers.
#[derive(Debug, Error)]
pub enum SpectralError {
    #[error("discrete domain is empty at the requested spacing")]
    EmptyDomain,
    #[error("potential not evaluable at node {at:?}")]
    PotentialNotEvaluable { at: Vec<f64> },
    #[error("eigensolver did not converge within the iteration budget ({budget})")]
    NoConvergence { budget: usize },
    #[error("matrix is not symmetric (|a_ij - a_ji| = {defect})")]
    NotSymmetric { defect: f64 },
    #[error("requested {k} eigenvalues from a problem of dimension {dim}")]
    InvalidEigenCount { k: usize, dim: usize },
    #[error("linear solve failed: {0}")]
    SolveFailed(String),
}

/// Errors from weight statistics and class checks.
#[derive(Debug, Error)]
pub enum WeightError {
    #[error("weight is nonpositive at sampled point {at:?} (value {value})")]
    WeightNonpositive { at: Vec<f64>, value: f64 },
    #[error("sampled potential dips to {found} below the declared lower bound {declared}")]
    LowerBoundViolated { declared: f64, found: f64 },
}

/// Top-level error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
