//! Virtual/actual moduli dimensions for AC and CS conifolds: regime split,
//! index-change accumulation, kernel-change bookkeeping at −3 and −4, and
//! the itemized contribution ledger.

use crate::cone_rates::{
    critical_rates_dd3, in_open_interval, CriticalRateSet, Eps, Surd, SymbolicRate,
    AMBIGUITY_CAVEAT_MINUS1_0,
};
use crate::link_spectra::LinkData;
use crate::moduli::good::good_singularities;
use crate::moduli::topology::{ConifoldKind, ConifoldTopology};
use crate::moduli::ModuliError;
use crate::scalar::{rat_from_i64, ratio};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    AcBelowMinus4,
    AcMinus4Minus3,
    AcMinus3ToMinus5Half,
    AcExtendedToZero,
    CsReduced,
    CsExtended,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Smooth {
    Yes,
    No,
    Unknown,
}

/// Exact dimension or a one-sided bound (obstructed regimes only pin vdim).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DimBound {
    Exact(u32),
    AtLeast(u32),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Contribution {
    pub label: String,
    pub amount: i64,
}

/// Regime classification, dimensions, smoothness verdict, and the itemized
/// ledger for a conifold moduli computation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModuliReport {
    pub regime: Regime,
    pub vdim: i64,
    pub kernel_dim: Option<DimBound>,
    pub obstruction_dim: Option<DimBound>,
    pub smooth: Smooth,
    pub contributions: Vec<Contribution>,
    pub caveats: Vec<String>,
}

impl ModuliReport {
    /// vdim = kernel − obstruction whenever both are exact.
    pub fn dimension_identity_holds(&self) -> bool {
        match (self.kernel_dim, self.obstruction_dim) {
            (Some(DimBound::Exact(k)), Some(DimBound::Exact(o))) => {
                self.vdim == i64::from(k) - i64::from(o)
            }
            _ => true,
        }
    }
}

fn contribution(label: impl Into<String>, amount: i64) -> Contribution {
    Contribution {
        label: label.into(),
        amount,
    }
}

/// Whether λ is a critical rate of the 3-form d + d* on the cone over
/// `link`: a spectral eigenvalue hit, the scaling mode at 0, or the
/// topological rates −3 / −4 with nonzero Betti multiplicity.
pub fn is_critical_rate(link: &LinkData, lambda: &Surd) -> Result<bool, ModuliError> {
    if lambda.cmp_exact(&Surd::from_int(-3)).is_eq() {
        return Ok(link.b(3) > 0);
    }
    if lambda.cmp_exact(&Surd::from_int(-4)).is_eq() {
        return Ok(link.b(2) > 0);
    }
    if lambda.cmp_exact(&Surd::from_int(0)).is_eq() {
        return Ok(true); // the cone-scaling mode always lives at λ = 0
    }
    // spectral: μ = (λ+3)(λ+4) must be a declared rational eigenvalue
    let mu = lambda
        .add_rat(&rat_from_i64(3))
        .checked_mul(&lambda.add_rat(&rat_from_i64(4)))?;
    let Some(mu) = mu.as_rational().cloned() else {
        return Ok(false); // stored eigenvalues are rational
    };
    if mu <= rat_from_i64(0) {
        return Ok(false);
    }
    if mu > link.declared_interval.1 {
        return Err(ModuliError::Rate(
            crate::cone_rates::RateError::IncompleteSpectrum {
                needed_hi: mu.to_string(),
                declared_lo: link.declared_interval.0.to_string(),
                declared_hi: link.declared_interval.1.to_string(),
            },
        ));
    }
    Ok(link.coexact2_mult(&mu) > 0)
}

/// Signed change of dim H³ when crossing λ upward: +im Υ³ at −3 and
/// +im Υ⁴ at −4 in the AC case, negated in the CS case.
pub fn kernel_change_at(
    lambda: i64,
    kind: ConifoldKind,
    top: &ConifoldTopology,
) -> Result<i64, ModuliError> {
    let magnitude = match lambda {
        -3 => i64::from(top.im_upsilon3()?),
        -4 => i64::from(top.im_upsilon4()?),
        other => {
            return Err(ModuliError::Precondition(format!(
                "kernel change is classified only at −3 and −4, not {other}"
            )))
        }
    };
    Ok(match kind {
        ConifoldKind::Ac => magnitude,
        ConifoldKind::Cs => -magnitude,
    })
}

fn spectral_entries(
    link: &LinkData,
    lo: &SymbolicRate,
    hi: &SymbolicRate,
) -> Result<CriticalRateSet, ModuliError> {
    Ok(critical_rates_dd3(link, (lo, hi))?)
}

fn exact_dims(vdim: i64) -> (Option<DimBound>, Option<DimBound>) {
    (
        Some(DimBound::Exact(vdim.max(0) as u32)),
        Some(DimBound::Exact(0)),
    )
}

fn bound_dims(vdim: i64) -> (Option<DimBound>, Option<DimBound>) {
    (
        Some(DimBound::AtLeast(vdim.max(0) as u32)),
        Some(DimBound::AtLeast((-vdim).max(0) as u32)),
    )
}

/// Virtual (or actual) dimension of the AC moduli space at noncritical rate
/// ν < 0, split by regime.
pub fn vdim_ac(top: &ConifoldTopology, nu: &SymbolicRate) -> Result<ModuliReport, ModuliError> {
    top.validate()?;
    if top.kind != ConifoldKind::Ac {
        return Err(ModuliError::Precondition(
            "vdim_ac needs an AC topology".to_string(),
        ));
    }
    let link = &top.ends[0].link;
    let zero = SymbolicRate::from_int(0);
    if nu >= &zero {
        return Err(ModuliError::Precondition(format!(
            "AC rate must satisfy ν < 0, got {nu}"
        )));
    }
    if nu.eps == Eps::Zero && is_critical_rate(link, &nu.value)? {
        return Err(ModuliError::CriticalRate(nu.to_string()));
    }

    let b3cs = i64::from(top.b_cs(3));
    let u3 = i64::from(top.im_upsilon3()?);
    let u4 = i64::from(top.im_upsilon4()?);
    let m4 = SymbolicRate::from_int(-4);
    let m3 = SymbolicRate::from_int(-3);
    let m52 = SymbolicRate::exact(Surd::from_rat(ratio(-5, 2)));

    let mut contributions = vec![contribution("b3_cs (topological)", b3cs)];
    let mut caveats = Vec::new();

    if *nu < m4 {
        // ν < −4: obstructed in general
        let set = spectral_entries(link, nu, &m4)?;
        let mut vdim = b3cs - u4;
        contributions.push(contribution("kernel change at −4: −dim(im Υ⁴)", -u4));
        for e in &set.entries {
            vdim -= i64::from(e.multiplicity);
            contributions.push(contribution(
                format!("spectral 𝒦({}) on (ν, −4)", e.rate),
                -i64::from(e.multiplicity),
            ));
        }
        caveats.push(
            "ν < −4: deformation theory may be obstructed; only the virtual dimension is exact"
                .to_string(),
        );
        let (kernel_dim, obstruction_dim) = bound_dims(vdim);
        return Ok(ModuliReport {
            regime: Regime::AcBelowMinus4,
            vdim,
            kernel_dim,
            obstruction_dim,
            smooth: Smooth::Unknown,
            contributions,
            caveats,
        });
    }

    if *nu < m3 {
        // ν ∈ (−4, −3): purely topological, smooth
        let (kernel_dim, obstruction_dim) = exact_dims(b3cs);
        return Ok(ModuliReport {
            regime: Regime::AcMinus4Minus3,
            vdim: b3cs,
            kernel_dim,
            obstruction_dim,
            smooth: Smooth::Yes,
            contributions,
            caveats,
        });
    }

    if *nu < m52 {
        // ν ∈ (−3, −5/2): smooth with topological + spectral contributions
        let set = spectral_entries(link, &m3, nu)?;
        let mut vdim = b3cs + u3;
        contributions.push(contribution("kernel change at −3: +dim(im Υ³)", u3));
        for e in &set.entries {
            vdim += i64::from(e.multiplicity);
            contributions.push(contribution(
                format!("spectral 𝒦({}) on (−3, ν)", e.rate),
                i64::from(e.multiplicity),
            ));
        }
        let (kernel_dim, obstruction_dim) = exact_dims(vdim);
        return Ok(ModuliReport {
            regime: Regime::AcMinus3ToMinus5Half,
            vdim,
            kernel_dim,
            obstruction_dim,
            smooth: Smooth::Yes,
            contributions,
            caveats,
        });
    }

    // ν ∈ [−5/2, 0): rigidity extension regime
    let twelve = rat_from_i64(12);
    if !link.covers(&rat_from_i64(0), &twelve) {
        return Err(ModuliError::Rate(
            crate::cone_rates::RateError::IncompleteSpectrum {
                needed_hi: "12".to_string(),
                declared_lo: link.declared_interval.0.to_string(),
                declared_hi: link.declared_interval.1.to_string(),
            },
        ));
    }
    // dimension at −5/2 − ε: spectral window μ ∈ (0, 3/4)
    let set = spectral_entries(link, &m3, &m52)?;
    let mut vdim = b3cs + u3;
    contributions.push(contribution("kernel change at −3: +dim(im Υ³)", u3));
    for e in &set.entries {
        vdim += i64::from(e.multiplicity);
        contributions.push(contribution(
            format!("spectral 𝒦({}) on (−3, −5/2)", e.rate),
            i64::from(e.multiplicity),
        ));
    }
    // extension hypothesis: no eigenvalues with rate in [−5/2, 0), i.e.
    // μ ∈ [3/4, 12); the ω-mode at μ = 12 sits exactly at rate 0 and is
    // outside the window
    let three_quarters = ratio(3, 4);
    let blockers: Vec<_> = link
        .coexact2
        .iter()
        .filter(|e| e.mult > 0 && e.mu >= three_quarters && e.mu < twelve)
        .collect();
    if *nu > SymbolicRate::from_int(-1) {
        caveats.push(AMBIGUITY_CAVEAT_MINUS1_0.to_string());
    }
    if blockers.is_empty() {
        caveats.push(
            "rigidity extension: dimension equals its value at −5/2 − ε; no eigenvalues with \
             rates in [−5/2, 0)"
                .to_string(),
        );
        let (kernel_dim, obstruction_dim) = exact_dims(vdim);
        Ok(ModuliReport {
            regime: Regime::AcExtendedToZero,
            vdim,
            kernel_dim,
            obstruction_dim,
            smooth: Smooth::Yes,
            contributions,
            caveats,
        })
    } else {
        for b in &blockers {
            caveats.push(format!(
                "eigenvalue μ = {} (mult {}) has a rate in [−5/2, 0): the extension hypothesis \
                 fails and smoothness is unknown",
                crate::scalar::rat_to_string(&b.mu),
                b.mult
            ));
        }
        Ok(ModuliReport {
            regime: Regime::AcExtendedToZero,
            vdim,
            kernel_dim: None,
            obstruction_dim: None,
            smooth: Smooth::Unknown,
            contributions,
            caveats,
        })
    }
}

fn vdim_cs_inner(
    top: &ConifoldTopology,
    nus: &[SymbolicRate],
    extended: bool,
) -> Result<ModuliReport, ModuliError> {
    top.validate()?;
    if top.kind != ConifoldKind::Cs {
        return Err(ModuliError::Precondition(
            "vdim_cs needs a CS topology".to_string(),
        ));
    }
    if nus.len() != top.ends.len() {
        return Err(ModuliError::Precondition(format!(
            "{} rates supplied for {} ends",
            nus.len(),
            top.ends.len()
        )));
    }
    let zero = SymbolicRate::from_int(0);
    let m3 = SymbolicRate::from_int(-3);
    for (i, nu) in nus.iter().enumerate() {
        if nu <= &zero {
            return Err(if nu.value.cmp_exact(&Surd::from_int(0)).is_eq() {
                ModuliError::CriticalRate(format!("end {i}: λ = 0 is the scaling critical rate"))
            } else {
                ModuliError::Precondition(format!("CS rates must satisfy νᵢ > 0, got {nu}"))
            });
        }
        if nu.eps == Eps::Zero && is_critical_rate(&top.ends[i].link, &nu.value)? {
            return Err(ModuliError::CriticalRate(nu.to_string()));
        }
    }

    let imcs = i64::from(top.im_h3cs_to_h3()?);
    let n = top.ends.len() as i64;
    let mut contributions = vec![contribution("dim im(H³_cs → H³) (topological)", imcs)];
    let mut vdim = imcs;
    let mut positive_rate_uncertainty = false;

    for (i, (end, nu)) in top.ends.iter().zip(nus).enumerate() {
        let set = spectral_entries(&end.link, &m3, nu)?;
        for e in &set.entries {
            vdim -= i64::from(e.multiplicity);
            contributions.push(contribution(
                format!("end {i} ({}): spectral 𝒦({}) on (−3, νᵢ)", end.link.name, e.rate),
                -i64::from(e.multiplicity),
            ));
            if e.rate.cmp_exact(&Surd::from_int(0)).is_gt() {
                positive_rate_uncertainty = true;
            }
        }
        // the cone-scaling mode at λ = 0 is always a kernel element once
        // νᵢ > 0 crosses it
        if in_open_interval(&Surd::from_int(0), &m3, nu) {
            vdim -= 1;
            contributions.push(contribution(
                format!("end {i} ({}): cone-scaling mode at λ = 0", end.link.name),
                -1,
            ));
        }
    }

    if extended {
        vdim += n;
        contributions.push(contribution(
            "extension: +n cone reparametrizations (one per singular point)",
            n,
        ));
    }

    let links: Vec<&LinkData> = top.ends.iter().map(|e| &e.link).collect();
    let good = good_singularities(&links)?;
    let mut caveats = vec![
        AMBIGUITY_CAVEAT_MINUS1_0.to_string(),
        "reduced moduli: the full moduli space may carry extra deformations (the space of \
         non-gauge-fixed infinitesimals is not computed)"
            .to_string(),
    ];
    let smooth = if !good.good {
        for w in &good.witnesses {
            caveats.push(format!(
                "end link {}: coexact primitive-(1,1) eigenvalue μ = {} (mult {}) obstructs \
                 smoothness",
                w.link, w.mu, w.mult
            ));
        }
        Smooth::No
    } else if positive_rate_uncertainty {
        caveats.push(
            "critical rates in (0, νᵢ): smoothness requires νᵢ below the first positive \
             critical rate"
                .to_string(),
        );
        Smooth::Unknown
    } else {
        Smooth::Yes
    };

    let (kernel_dim, obstruction_dim) = if smooth == Smooth::Yes && !extended {
        exact_dims(vdim)
    } else if smooth == Smooth::Yes {
        (None, Some(DimBound::Exact(0)))
    } else {
        (None, None)
    };

    Ok(ModuliReport {
        regime: if extended {
            Regime::CsExtended
        } else {
            Regime::CsReduced
        },
        vdim,
        kernel_dim,
        obstruction_dim,
        smooth,
        contributions,
        caveats,
    })
}

/// Virtual dimension of the extended reduced CS moduli space (the +n cone
/// reparametrizations included) at noncritical rates νᵢ > 0.
pub fn vdim_cs(top: &ConifoldTopology, nus: &[SymbolicRate]) -> Result<ModuliReport, ModuliError> {
    vdim_cs_inner(top, nus, true)
}

/// Virtual dimension of the reduced CS moduli space (no reparametrization
/// extension).
pub fn vdim_cs_reduced(
    top: &ConifoldTopology,
    nus: &[SymbolicRate],
) -> Result<ModuliReport, ModuliError> {
    vdim_cs_inner(top, nus, false)
}
