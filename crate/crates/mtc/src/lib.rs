//! Modular data and fusion rings for quantum-group categories.
//!
//! The library computes, from an affine Lie algebra series and a level:
//!
//! * exact root-system data ([`liealg`]): Cartan matrices, Weyl groups,
//!   level-restricted highest weights, all in rational arithmetic;
//! * modular data ([`modular`]): the S-matrix and twists of the associated
//!   modular tensor category via Weyl character sums, plus the Verlinde
//!   fusion ring and derived scalars (quantum dimensions, Gauss sums, the
//!   anomaly root);
//! * category operations ([`catops`]): products, reverses, and fusion
//!   subcategories generated by a set of simples;
//! * the fusion ring of the Z/2 permutation gauging of a square `C ⊠ C`
//!   ([`gauge`]), computed from closed-form multiplicity formulas with an
//!   independent cross-check route through a congruence representation;
//! * generic fusion-ring tooling ([`ringtools`]): invariant validation,
//!   Frobenius-Perron dimensions, isomorphism search, and export formats.
//!
//! Floating-point layers are generic over the scalar ([`Real`]), so every
//! transcendental computation can run in `f32` or `f64`; `f64` is the
//! working precision for all default tolerances. Root-system arithmetic is
//! exact and does not depend on the scalar.
//!
//! # Quick start
//!
//! ```
//! use mtc::liealg::{LieSpec, Series};
//! use mtc::{kac_peterson, verlinde};
//!
//! // The level-2 sl(2) theory: three simples, Ising fusion rules.
//! let md = kac_peterson(&LieSpec::new(Series::A, 1, 2)).unwrap();
//! let ring = verlinde(&md).unwrap();
//! assert_eq!(ring.rank(), 3);
//! // sigma ⊗ sigma = 1 + psi
//! assert_eq!(ring.n(1, 1, 0), 1);
//! assert_eq!(ring.n(1, 1, 2), 1);
//! ```

pub mod catops;
pub mod error;
pub mod gauge;
pub mod liealg;
pub mod mat;
pub mod modular;
pub mod ringtools;
pub mod scalar;
pub mod tol;

pub use error::Error;
pub use scalar::Real;

/// Modular data at the default working precision.
pub type ModularData64 = modular::ModularData<f64>;
/// Modular data at single precision. Useful for genericity checks; the
/// default tolerances assume `f64` and are not attainable in `f32`.
pub type ModularData32 = modular::ModularData<f32>;
/// Derived scalars at the default working precision.
pub type DerivedScalars64 = modular::DerivedScalars<f64>;

/// Builds modular data at the default working precision.
pub fn kac_peterson(spec: &liealg::LieSpec) -> Result<ModularData64, Error> {
    modular::kac_peterson::<f64>(spec)
}

/// Extracts the fusion ring of modular data at the default working precision.
pub fn verlinde(md: &ModularData64) -> Result<ringtools::FusionRing, Error> {
    modular::verlinde(md, tol::INTEGER_ROUNDING)
}
