//! Error type shared across the library.

/// Everything that can go wrong while building categories and rings.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// The requested series/rank combination is not defined here.
    #[error("unsupported series: {0}")]
    UnsupportedSeries(String),

    /// A Weyl-group closure grew past its element bound.
    #[error("Weyl group closure exceeded {bound} elements")]
    ClosureOverflow { bound: usize },

    /// A numeric quantity failed a consistency threshold, so the data
    /// cannot be trusted downstream.
    #[error("numerical degeneracy in {context}: residual {residual:.3e}")]
    NumericalDegeneracy { context: String, residual: f64 },

    /// A fusion multiplicity did not round cleanly to an integer.
    #[error("multiplicity N[{x},{y} -> {z}] = {value:.6} is {residual:.3e} from an integer")]
    NonIntegralMultiplicity { x: String, y: String, z: String, value: f64, residual: f64 },

    /// A fusion multiplicity rounded to a negative integer.
    #[error("multiplicity N[{x},{y} -> {z}] rounds to {value}")]
    NegativeMultiplicity { x: String, y: String, z: String, value: i64 },

    /// Data that was supposed to be modular is not.
    #[error("not modular: {0}")]
    NotModular(String),

    /// Power iteration failed to produce a strictly positive eigenvector.
    #[error("no strictly positive eigenvector: {0}")]
    NoPositiveEigenvector(String),

    /// The isomorphism search hit its node budget before deciding.
    #[error("isomorphism search exceeded budget of {0} nodes")]
    SearchBudgetExceeded(u64),

    /// An assembled ring failed a structural identity.
    #[error("inconsistent ring: {0}")]
    InconsistentRing(String),

    /// A serialized ring could not be parsed back.
    #[error("malformed ring data: {0}")]
    MalformedRing(String),
}
