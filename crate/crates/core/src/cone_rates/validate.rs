//! Input validation for link datasets: topological consistency plus the
//! Obata and Bochner eigenvalue bounds that every Gray link must satisfy.

use crate::link_spectra::LinkData;
use crate::scalar::{rat_from_i64, rat_to_string, Rat};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Violation {
    /// b⁰ must be 1 (a link is connected).
    BettiB0 { b0: u32 },
    /// Poincaré duality b_k = b_{6−k} fails.
    PoincareDuality { k: u8, bk: u32, b6k: u32 },
    /// Harmonic 1-forms are excluded by the Bochner bound, so b¹ = 0.
    HarmonicOneForms { b1: u32 },
    /// A declared function eigenvalue lies in (0, 6]; Obata forces μ > 6 for
    /// links other than the round 6-sphere (excluded by convention).
    ObataFunction { mu: String },
    /// A declared 1-form eigenvalue is below the Bochner bound c ≥ 5.
    BochnerOneForm { mu: String },
    /// A declared eigenvalue is negative (the Laplacian is nonnegative).
    NegativeEigenvalue { spectrum: String, mu: String },
    /// A coexact 2-form eigenvalue must be strictly positive.
    NonpositiveCoexact { mu: String },
    /// coexact2 entries must be sorted by eigenvalue.
    UnsortedCoexact,
    /// Declared interval is empty or inverted.
    BadDeclaredInterval { lo: String, hi: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BettiB0 { b0 } => write!(f, "b0 = {b0}, expected 1"),
            Violation::PoincareDuality { k, bk, b6k } => {
                write!(f, "Poincaré duality fails: b{k} = {bk} but b{} = {b6k}", 6 - k)
            }
            Violation::HarmonicOneForms { b1 } => {
                write!(f, "b1 = {b1} but the Bochner bound forces b1 = 0")
            }
            Violation::ObataFunction { mu } => {
                write!(f, "function eigenvalue {mu} violates the Obata bound μ > 6")
            }
            Violation::BochnerOneForm { mu } => {
                write!(f, "1-form eigenvalue {mu} violates the Bochner bound c ≥ 5")
            }
            Violation::NegativeEigenvalue { spectrum, mu } => {
                write!(f, "negative eigenvalue {mu} in {spectrum} spectrum")
            }
            Violation::NonpositiveCoexact { mu } => {
                write!(f, "coexact 2-form eigenvalue {mu} must be positive")
            }
            Violation::UnsortedCoexact => write!(f, "coexact2 entries are not sorted by μ"),
            Violation::BadDeclaredInterval { lo, hi } => {
                write!(f, "declared interval ({lo}, {hi}] is empty")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub link: String,
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check a link dataset; returns the full violation list, never aborts.
pub fn validate_link(link: &LinkData) -> ValidationReport {
    let mut violations = Vec::new();
    let mut warnings = Vec::new();

    if link.b(0) != 1 {
        violations.push(Violation::BettiB0 { b0: link.b(0) });
    }
    for k in 0..=2u8 {
        let bk = link.b(usize::from(k));
        let b6k = link.b(usize::from(6 - k));
        if bk != b6k {
            violations.push(Violation::PoincareDuality { k, bk, b6k });
        }
    }
    if link.b(1) != 0 {
        violations.push(Violation::HarmonicOneForms { b1: link.b(1) });
    }

    let six = rat_from_i64(6);
    for e in &link.function_spectrum {
        if e.mu.is_negative() {
            violations.push(Violation::NegativeEigenvalue {
                spectrum: "function".to_string(),
                mu: rat_to_string(&e.mu),
            });
        } else if !e.mu.is_zero() && e.mu <= six && e.mult > 0 {
            violations.push(Violation::ObataFunction {
                mu: rat_to_string(&e.mu),
            });
        }
    }
    let five = rat_from_i64(5);
    for e in &link.oneform_spectrum {
        if e.mu.is_negative() {
            violations.push(Violation::NegativeEigenvalue {
                spectrum: "1-form".to_string(),
                mu: rat_to_string(&e.mu),
            });
        } else if e.mu < five && e.mult > 0 {
            violations.push(Violation::BochnerOneForm {
                mu: rat_to_string(&e.mu),
            });
        }
    }

    for e in &link.coexact2 {
        if e.mu <= Rat::zero() {
            violations.push(Violation::NonpositiveCoexact {
                mu: rat_to_string(&e.mu),
            });
        }
        if e.mult == 0 {
            warnings.push(format!(
                "coexact2 entry at μ = {} has multiplicity 0",
                rat_to_string(&e.mu)
            ));
        }
    }
    if link.coexact2.windows(2).any(|w| w[0].mu > w[1].mu) {
        violations.push(Violation::UnsortedCoexact);
    }
    let (lo, hi) = &link.declared_interval;
    if lo >= hi {
        violations.push(Violation::BadDeclaredInterval {
            lo: rat_to_string(lo),
            hi: rat_to_string(hi),
        });
    }
    if link.exact4_delta2.is_none() {
        warnings.push(
            "exact 4-form Δ=2 multiplicity not declared; treated as 0 where needed".to_string(),
        );
    }

    ValidationReport {
        link: link.name.clone(),
        violations,
        warnings,
    }
}
