//! Dimension and smoothness calculus for G2 conifold moduli: exact-sequence
//! arithmetic, index-change accumulation, virtual dimensions, good-singularity
//! and rigidity decisions, and Mayer–Vietoris gluing arithmetic.

mod gluing;
mod good;
mod topology;
mod upsilon;
mod vdim;

pub use gluing::{gluing_condition_check, mayer_vietoris_b3, Intersections};
pub use good::{good_singularities, GoodSingWitness, GoodSingularities};
pub use topology::{
    builtin_conifold, builtin_conifold_names, ConifoldKind, ConifoldTopology, End, GluingFlags,
};
pub use upsilon::solve_upsilon;
pub use vdim::{
    is_critical_rate, kernel_change_at, vdim_ac, vdim_cs, vdim_cs_reduced, Contribution,
    DimBound, ModuliReport, Regime, Smooth,
};

use crate::cone_rates::RateError;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ModuliError {
    #[error("malformed conifold data: {0}")]
    Malformed(String),
    #[error("unknown builtin conifold: {0}")]
    UnknownConifold(String),
    #[error("topology invariants violated: {0:?}")]
    InvalidTopology(Vec<String>),
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error("underdetermined: more data needed for {0:?}")]
    Underdetermined(Vec<String>),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("rate {0} is critical; pick a noncritical rate or an ε offset")]
    CriticalRate(String),
    #[error("inconsistent intersection data: {0}")]
    InconsistentIntersections(String),
    #[error(transparent)]
    Rate(#[from] RateError),
}
