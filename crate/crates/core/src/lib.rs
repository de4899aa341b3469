//! Exact-arithmetic toolkit for G2 conifold calculations.
//!
//! The crate is organized around five subsystems:
//!
//! - [`g2_algebra`]: linear algebra of a G2 structure at a single point of R^7
//!   (metric induction, Hodge star, type decomposition, the nonlinear map Theta
//!   and its linearization).
//! - [`flat_calculus`]: exact exterior calculus (d, d*, Laplacian, curl, Dirac,
//!   modified Dirac) on R^7 with the constant standard G2 structure and
//!   polynomial coefficients, plus the machine verification of the coordinate
//!   identities these operators satisfy.
//! - [`cone_rates`]: exact rate arithmetic for homogeneous forms on a G2 cone:
//!   quadratic-surd rates, eigenvalue-to-rate translation, excluded ranges,
//!   homogeneous kernel classification, and critical-rate sets for the
//!   restriction of d + d* to 3-forms.
//! - [`link_spectra`]: built-in spectral and topological datasets for the three
//!   known Gray manifolds, with a Casimir-eigenvalue enumerator for their
//!   symmetry groups.
//! - [`moduli`]: dimension and smoothness bookkeeping for asymptotically
//!   conical and conically singular G2 manifolds: exact-sequence arithmetic,
//!   index-change accumulation, virtual dimensions, good-singularity and
//!   rigidity decisions, and Mayer-Vietoris gluing arithmetic.
//!
//! Everything that can be exact is exact: scalars are arbitrary-precision
//! rationals, rates are elements of real quadratic fields, and epsilon offsets
//! are symbolic. Floating point appears only where a 9th root forces it (the
//! metric induced by a general 3-form, hence the map Theta).

pub mod scalar;
pub mod linalg;

pub mod g2_algebra;
pub mod flat_calculus;
pub mod cone_rates;
pub mod link_spectra;
pub mod moduli;

pub use scalar::Rat;
