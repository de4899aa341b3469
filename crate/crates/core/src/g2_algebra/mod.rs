//! Exact and floating-point linear algebra of a G2 structure at a single
//! point of R^7: metric induction, Hodge star, type decomposition, the
//! nonlinear map Theta and its linearization.
//!
//! Conventions: orientation is fixed as dx^1 ∧ … ∧ dx^7 positive, and the
//! standard structure constants are chosen so that on 2-forms the operator
//! β ↦ *(φ ∧ β) has eigenvalue −2 on the 7-dimensional block and +1 on the
//! 14-dimensional block. Correctness of the compile-time table is established
//! by the invariant test suite (induced metric = identity, projector ranks,
//! eigenvalue identities), not by trusting any transcription.

mod form;
mod structure;

pub use form::{basis_masks, hodge_star, indices_from_mask, mask_from_indices, AltForm, Mask, MetricData, Orientation};
pub use structure::{
    linearize_theta, metric_from_three_form, project_type, theta, G2PointStructure, TypeLabel,
    PHI0_TABLE,
};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum G2Error {
    /// The bilinear form induced by the 3-form is not definite.
    #[error("degenerate structure: induced bilinear form is not definite")]
    DegenerateStructure,
    /// The 3-form is nondegenerate but belongs to the orientation class
    /// opposite to the fixed dx^1..7 orientation.
    #[error("3-form is nondegenerate but negatively oriented for the fixed orientation")]
    OppositeOrientation,
    /// Requested type label is incompatible with the form degree.
    #[error("bad label {label} for degree {degree}")]
    BadLabel { degree: u8, label: u8 },
    /// The scalar type cannot represent a root required by the operation
    /// (use the f64-backed variant instead).
    #[error("exact root unavailable: {0}")]
    ExactRootUnavailable(&'static str),
    #[error("operation undefined for degree {0}")]
    NoSuchDegree(u8),
}
