//! Excluded-range verdicts for homogeneous kernel elements on a G2 cone, and
//! the structured kernel classification at the rates −2, −3, −4.

use crate::cone_rates::{RateError, Surd};
use crate::link_spectra::LinkData;
use crate::scalar::rat_from_i64;
use serde::{Deserialize, Serialize};

/// The operator whose homogeneous kernel is being interrogated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExcludedOp {
    /// Hodge Laplacian on k-forms (with the Einstein-link extensions for
    /// functions and 1-forms via the Obata and Bochner bounds).
    Laplacian { k: u8 },
    /// Closed-and-coclosed homogeneous k-forms (kernel of d + d*).
    DPlusDstar { k: u8 },
    /// Modified Dirac operator on (function, 1-form) pairs.
    DiracMod,
    /// dd* + (2/3)d*d on 1-forms (the gauge-fixing operator).
    GaugeOp,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Any homogeneous kernel element of this order vanishes.
    ForcedZero,
    /// The order is not excluded by these results.
    Allowed,
    /// Only constants survive (functions at λ = 0).
    ConstantOnly,
    /// A special one-dimensional family survives.
    Special { description: String },
}

fn ge(lam: &Surd, n: i64) -> bool {
    lam.cmp_exact(&Surd::from_int(n)).is_ge()
}
fn gt(lam: &Surd, n: i64) -> bool {
    lam.cmp_exact(&Surd::from_int(n)).is_gt()
}
fn le(lam: &Surd, n: i64) -> bool {
    lam.cmp_exact(&Surd::from_int(n)).is_le()
}
fn lt(lam: &Surd, n: i64) -> bool {
    lam.cmp_exact(&Surd::from_int(n)).is_lt()
}
fn eq(lam: &Surd, n: i64) -> bool {
    lam.cmp_exact(&Surd::from_int(n)).is_eq()
}

/// Verdict table for homogeneous kernel elements of the given operator at
/// order λ, transcribing the exclusion results exactly (open/closed interval
/// endpoints included).
pub fn excluded_range_check(op: ExcludedOp, lambda: &Surd) -> Verdict {
    match op {
        ExcludedOp::Laplacian { k } => {
            assert!(k <= 7, "degree out of range");
            match k {
                // functions: Obata extension on a G2 cone
                0 | 7 => {
                    if eq(lambda, 0) {
                        Verdict::ConstantOnly
                    } else if eq(lambda, -5) {
                        Verdict::Special {
                            description: "C·r^{-5}".to_string(),
                        }
                    } else if ge(lambda, -6) && le(lambda, 1) {
                        Verdict::ForcedZero
                    } else {
                        Verdict::Allowed
                    }
                }
                // 1-forms: Bochner extension, closed interval [−5, 0]
                1 | 6 => {
                    if ge(lambda, -5) && le(lambda, 0) {
                        Verdict::ForcedZero
                    } else {
                        Verdict::Allowed
                    }
                }
                2 | 5 => {
                    if gt(lambda, -3) && lt(lambda, -2) {
                        Verdict::ForcedZero
                    } else {
                        Verdict::Allowed
                    }
                }
                _ => Verdict::Allowed,
            }
        }
        ExcludedOp::DPlusDstar { k } => {
            assert!(k <= 7, "degree out of range");
            let (lo, hi) = match k {
                0 | 7 => (-7, 0),
                1 | 6 => (-6, -1),
                2 | 5 => (-5, -2),
                _ => (-4, -3),
            };
            if gt(lambda, lo) && lt(lambda, hi) {
                Verdict::ForcedZero
            } else {
                Verdict::Allowed
            }
        }
        ExcludedOp::DiracMod => {
            if gt(lambda, -5) && lt(lambda, 0) {
                Verdict::ForcedZero
            } else {
                Verdict::Allowed
            }
        }
        ExcludedOp::GaugeOp => {
            if gt(lambda, -4) && le(lambda, 0) {
                Verdict::ForcedZero
            } else {
                Verdict::Allowed
            }
        }
    }
}

/// Where a kernel slot's multiplicity comes from when evaluated against a
/// link dataset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MultSource {
    /// b^k of the link.
    Betti(u8),
    /// Coexact 2-forms with Laplace eigenvalue 2 (the μ = 2 entries of the
    /// stored spectrum).
    CoexactDelta2,
    /// Exact 4-forms with Laplace eigenvalue 2 (the `exact4_delta2` field;
    /// defaults to 0 with a warning when absent).
    Exact4Delta2,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelSlot {
    /// Human-readable shape of the homogeneous solution.
    pub form: String,
    pub source: MultSource,
}

/// Structured basis description of the homogeneous (d + d*)-kernel at one of
/// the classified rates λ ∈ {−2, −3, −4}.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelDescription {
    pub lambda: i64,
    pub slots: Vec<KernelSlot>,
}

impl KernelDescription {
    /// Evaluate the total dimension against a link dataset; the second
    /// component collects warnings for defaulted multiplicities.
    pub fn dimension(&self, link: &LinkData) -> (u32, Vec<String>) {
        let mut dim = 0;
        let mut warnings = Vec::new();
        for slot in &self.slots {
            dim += match slot.source {
                MultSource::Betti(k) => link.b(usize::from(k)),
                MultSource::CoexactDelta2 => link.coexact2_mult(&rat_from_i64(2)),
                MultSource::Exact4Delta2 => match link.exact4_delta2 {
                    Some(m) => m,
                    None => {
                        warnings.push(format!(
                            "link {}: exact 4-form Δ=2 multiplicity unknown, defaulting to 0",
                            link.name
                        ));
                        0
                    }
                },
            };
        }
        (dim, warnings)
    }
}

/// The mixed-degree homogeneous kernel of d + d* at λ ∈ {−2, −3, −4}, as a
/// slot list with named multiplicity sources.
pub fn homogeneous_kernel_description(lambda: i64) -> Result<KernelDescription, RateError> {
    let slots = match lambda {
        -3 => vec![
            KernelSlot {
                form: "dr ∧ (harmonic 3-form on Σ)".to_string(),
                source: MultSource::Betti(3),
            },
            KernelSlot {
                form: "harmonic 3-form on Σ".to_string(),
                source: MultSource::Betti(3),
            },
        ],
        -4 => vec![
            KernelSlot {
                form: "r^{-2} dr ∧ (harmonic 2-form on Σ)".to_string(),
                source: MultSource::Betti(2),
            },
            KernelSlot {
                form: "harmonic 4-form on Σ".to_string(),
                source: MultSource::Betti(4),
            },
            KernelSlot {
                form: "r^{-2}σ − r^{-1} dr ∧ dσ, σ coexact 2-form, Δ_Σσ = 2σ".to_string(),
                source: MultSource::CoexactDelta2,
            },
            KernelSlot {
                form: "dr ∧ μ − r^{-1} d*_Σμ, μ exact 4-form, Δ_Σμ = 2μ".to_string(),
                source: MultSource::Exact4Delta2,
            },
        ],
        -2 => vec![
            KernelSlot {
                form: "harmonic 2-form on Σ".to_string(),
                source: MultSource::Betti(2),
            },
            KernelSlot {
                form: "r² dr ∧ (harmonic 4-form on Σ)".to_string(),
                source: MultSource::Betti(4),
            },
            KernelSlot {
                form: "dr ∧ σ + r dσ, σ coexact 2-form, Δ_Σσ = 2σ".to_string(),
                source: MultSource::CoexactDelta2,
            },
            KernelSlot {
                form: "r dr ∧ d*_Σμ + r²μ, μ exact 4-form, Δ_Σμ = 2μ".to_string(),
                source: MultSource::Exact4Delta2,
            },
        ],
        other => return Err(RateError::UncoveredRate(other)),
    };
    Ok(KernelDescription { lambda, slots })
}
