//! Exact calculus of homogeneous forms on a G2 cone C = (0,∞)×Σ at the level
//! of rate arithmetic: d/d*/Δ coefficient relations, eigenvalue ↔ rate
//! translation, excluded-range verdicts, homogeneous kernel classification,
//! and critical-rate sets for the restriction of d + d* to 3-forms.

mod excluded;
mod homogeneous;
mod rates;
mod surd;
mod validate;

pub use excluded::{
    excluded_range_check, homogeneous_kernel_description, ExcludedOp, KernelDescription,
    KernelSlot, MultSource, Verdict,
};
pub use homogeneous::{
    closed_coclosed_relations, homogeneous_d, laplacian_relations, DOp, HomogeneousForm,
    HomogeneousRelations, LambdaPoly, LinkExpr, LinkFormSpec, LinkSymbol, SymbolBase,
};
pub use rates::{
    critical_rates_dd3, critical_rates_dd3_unchecked, rates_from_eigenvalue, sqrt_as_surd,
    CriticalRate, CriticalRateSet, RateOrigin,
};
pub use surd::{in_open_interval, squarefree_split, Eps, Surd, SymbolicRate};
pub use validate::{validate_link, ValidationReport, Violation};

use thiserror::Error;

/// The standing caveat attached to any computation whose rate window touches
/// (−1, 0]: only the stored primitive-(1,1) multiplicities are counted there;
/// spectral solutions with nonzero function/1-form components in that window
/// are routed through diffeomorphism and obstruction spaces by the theory and
/// are not enumerated by the datasets.
pub const AMBIGUITY_CAVEAT_MINUS1_0: &str = "rates in (-1, 0]: only primitive-(1,1) \
multiplicities are counted; solutions with nonzero (function, 1-form) components in this \
window are not enumerated by the link datasets";

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RateError {
    #[error("surds lie in incompatible quadratic fields Q(√{0}) and Q(√{1})")]
    IncompatibleFields(u64, u64),
    #[error("cannot parse rate: {0}")]
    ParseError(String),
    #[error("negative discriminant for eigenvalue {mu} at degree {k}: roots are not real")]
    NegativeDiscriminant { mu: String, k: u8 },
    #[error("radicand too large for exact square-free factorization")]
    RadicandTooLarge,
    #[error("link failed validation: {0:?}")]
    UnvalidatedLink(Vec<String>),
    #[error("declared spectrum on ({declared_lo}, {declared_hi}] does not cover the needed eigenvalue window up to {needed_hi}")]
    IncompleteSpectrum {
        needed_hi: String,
        declared_lo: String,
        declared_hi: String,
    },
    #[error("no homogeneous kernel classification stored for rate {0}")]
    UncoveredRate(i64),
}
