use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An order parameter violates its admissible range (α ≤ 0, ρ outside
    /// (0,1) for Hilfer-type operators, ν outside [0,1], ...).
    #[error("invalid order parameter: {0}")]
    InvalidOrder(&'static str),

    /// Series argument outside the supported disc |z| ≤ 50.
    #[error("argument out of supported range: |z| = {abs_z} exceeds 50")]
    OutOfSupportedRange { abs_z: f64 },

    /// The series tail rule did not fire within the term cap.
    #[error("series did not converge within {terms} terms")]
    NonConvergence { terms: usize },

    /// Quadrature node generation failed.
    #[error("quadrature failure: {0}")]
    QuadratureFailure(&'static str),

    /// Transform variable outside the image's convergence region |ω s^α| < 1.
    #[error("outside convergence region: |omega * s^alpha| = {modulus} >= 1")]
    OutOfRegion { modulus: f64 },

    /// Initial-data list length does not match the operator's order.
    #[error("initial data arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    /// A contour node evaluated to a non-finite value.
    #[error("inversion contour produced a non-finite node value")]
    ContourFailure,

    /// Real branch requested on or past the cut of (1 - omega s^alpha)^kappa.
    #[error("branch cut: real base 1 - omega*s^alpha = {base} <= 0")]
    BranchCut { base: f64 },

    /// Atoms with different (alpha, omega) bases cannot be combined.
    #[error("atoms have mixed (alpha, omega) bases")]
    MixedBase,

    /// Atom exponent mu + 2 <= 0 has no Mittag-Leffler time-domain pair.
    #[error("atom with mu = {mu} is not invertible (mu + 2 <= 0)")]
    NotInvertible { mu: f64 },

    /// The grid has too few nodes for the requested stencil.
    #[error("grid too coarse: {n} nodes, need at least {need}")]
    GridTooCoarse { n: usize, need: usize },

    /// The implicit step coefficient 1 - c*w0 vanished.
    #[error("singular implicit step: 1 - c*w0 is numerically zero")]
    SingularStep,

    /// A scalar argument violates its documented domain.
    #[error("argument out of domain: {0}")]
    OutOfDomain(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
