//! Exact exterior calculus on R^7 with the constant standard G2 structure
//! and polynomial coefficients.
//!
//! The Laplacian is the geometer's Δ = dd* + d*d (nonnegative spectrum), so
//! Δ(x1²) = −2. Curvature never appears: flat space only. In particular the
//! ellipticity identity for π₇d*d is exercised only in its flat
//! specialization, where the Ricci term of the general proof vanishes
//! identically.

mod poly;
mod polyform;
mod verify;

pub use poly::{Mono, Poly};
pub use polyform::{
    codifferential, ext_d, laplacian, star_flat, FlatG2, PolyForm, SpinorPair, STANDARD,
};
pub use verify::{verify_identities, Family, FamilyReport, VerifyReport, ALL_FAMILIES};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FlatError {
    /// d of a 7-form or d* of a 0-form.
    #[error("no such degree: {0}")]
    NoSuchDegree(u8),
    /// A side-condition instance family produced only zero instances.
    #[error("construction failed: side-condition family produced no usable instances")]
    ConstructionFailed,
}
