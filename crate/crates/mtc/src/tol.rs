//! Default numeric thresholds, calibrated for `f64`.
//!
//! Double-precision Weyl sums over the supported ranks and levels carry
//! relative errors around `1e-14`; the thresholds below leave several
//! orders of magnitude of headroom while still rejecting genuinely broken
//! data, whose residuals are `O(1)`.

/// Residual bound for matrix relations: symmetry and unitarity of S, the
/// modular relations, and Gauss-sum magnitudes.
pub const MATRIX_RESIDUAL: f64 = 1e-8;

/// Entry snap when reading a permutation out of a numeric matrix (the
/// charge conjugation extracted from S²).
pub const PERMUTATION_SNAP: f64 = 1e-6;

/// Maximum distance from the nearest integer when rounding a fusion
/// multiplicity.
pub const INTEGER_ROUNDING: f64 = 1e-6;

/// Construction-time gate: builders reject data whose normalized S fails
/// unitarity by more than this (validation reports use the stricter
/// [`MATRIX_RESIDUAL`]).
pub const NORMALIZATION_GATE: f64 = 1e-6;

/// A chosen square root of a twist must square back to it within this.
pub const SQRT_CONSISTENCY: f64 = 1e-10;

/// Residual bound for the Perron-Frobenius eigenvector equation.
pub const EIGEN_RESIDUAL: f64 = 1e-8;

/// Relative tolerance when comparing sums of squared Frobenius-Perron
/// dimensions against a global total.
pub const DIM_IDENTITY: f64 = 1e-4;
