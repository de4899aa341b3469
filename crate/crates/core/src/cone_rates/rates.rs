//! Eigenvalue ↔ rate translation and critical-rate sets for the restriction
//! of d + d* to 3-forms on a G2 cone.

use crate::cone_rates::{
    in_open_interval, squarefree_split, validate_link, RateError, Surd, SymbolicRate,
};
use crate::link_spectra::LinkData;
use crate::scalar::{rat_from_i64, rat_to_string, ratio, Rat};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// √r as an exact surd for nonnegative rational r.
pub fn sqrt_as_surd(r: &Rat) -> Result<Surd, RateError> {
    if r.is_negative() {
        return Err(RateError::NegativeDiscriminant {
            mu: rat_to_string(r),
            k: 0,
        });
    }
    if r.is_zero() {
        return Ok(Surd::from_int(0));
    }
    // √(p/q) = √(p·q)/q
    let pq: BigInt = r.numer() * r.denom();
    let pq_u64 = pq.to_u64().ok_or(RateError::RadicandTooLarge)?;
    let (s, d) = squarefree_split(pq_u64);
    let b = Rat::new(BigInt::from(s), r.denom().clone());
    Ok(Surd::new(Rat::zero(), b, d))
}

/// Both roots λ of (λ+k)(λ+7−k) = μ, exactly; roots sum to −7 (Vieta).
/// The smaller root is returned first.
pub fn rates_from_eigenvalue(mu: &Rat, k: u8) -> Result<(Surd, Surd), RateError> {
    assert!(k <= 7);
    let seven_minus_2k = rat_from_i64(7 - 2 * i64::from(k));
    let disc = seven_minus_2k.clone() * seven_minus_2k + rat_from_i64(4) * mu.clone();
    if disc.is_negative() {
        return Err(RateError::NegativeDiscriminant {
            mu: rat_to_string(mu),
            k,
        });
    }
    let root = sqrt_as_surd(&disc)?;
    let half = ratio(1, 2);
    let minus_7_half = Surd::from_rat(ratio(-7, 2));
    let lo = minus_7_half.checked_sub(&root.scale(&half))?;
    let hi = minus_7_half.checked_add(&root.scale(&half))?;
    Ok((lo, hi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RateOrigin {
    /// From a coexact primitive-(1,1) eigenvalue of the link.
    Spectral,
    /// Harmonic 3-forms on the link at λ = −3 (multiplicity b³).
    TopologicalB3,
    /// Harmonic 2-forms on the link at λ = −4 (multiplicity b²).
    TopologicalB2,
}

impl RateOrigin {
    pub fn name(&self) -> &'static str {
        match self {
            RateOrigin::Spectral => "spectral",
            RateOrigin::TopologicalB3 => "topological_b3",
            RateOrigin::TopologicalB2 => "topological_b2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalRate {
    pub rate: Surd,
    pub multiplicity: u32,
    pub origin: RateOrigin,
    #[serde(default)]
    pub cite: String,
}

/// Sorted critical rates with positive multiplicities; no duplicate rates.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct CriticalRateSet {
    pub entries: Vec<CriticalRate>,
}

impl CriticalRateSet {
    pub fn total_multiplicity(&self) -> u32 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn spectral_multiplicity(&self) -> u32 {
        self.entries
            .iter()
            .filter(|e| e.origin == RateOrigin::Spectral)
            .map(|e| e.multiplicity)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn push(&mut self, entry: CriticalRate) {
        if entry.multiplicity > 0 {
            self.entries.push(entry);
        }
    }

    fn finish(mut self) -> Self {
        self.entries.sort_by(|a, b| a.rate.cmp_exact(&b.rate));
        debug_assert!(self
            .entries
            .windows(2)
            .all(|w| w[0].rate.cmp_exact(&w[1].rate).is_lt()));
        self
    }
}

/// μ = (λ+3)(λ+4) at a symbolic-rate endpoint (ε ignored: offsets are
/// infinitesimal and the spectrum is discrete).
fn mu_at(rate: &SymbolicRate) -> Surd {
    let v = &rate.value;
    let a = v.add_rat(&rat_from_i64(3));
    let b = v.add_rat(&rat_from_i64(4));
    a.checked_mul(&b).expect("same field")
}

fn coverage_check(link: &LinkData, interval: (&SymbolicRate, &SymbolicRate)) -> Result<(), RateError> {
    let mu_lo = mu_at(interval.0);
    let mu_hi = mu_at(interval.1);
    let needed_hi = if mu_lo.cmp_exact(&mu_hi).is_ge() {
        mu_lo
    } else {
        mu_hi
    };
    let declared_hi = Surd::from_rat(link.declared_interval.1.clone());
    let declared_lo = &link.declared_interval.0;
    // the parabola dips to −1/4 inside (−4, −3); only μ > 0 carries spectrum,
    // so a declared lower endpoint ≤ 0 always suffices
    if needed_hi.cmp_exact(&declared_hi).is_gt() || declared_lo.is_positive() {
        return Err(RateError::IncompleteSpectrum {
            needed_hi: needed_hi.to_string(),
            declared_lo: rat_to_string(declared_lo),
            declared_hi: rat_to_string(&link.declared_interval.1),
        });
    }
    Ok(())
}

/// Critical rates of the 3-form d + d* operator on the cone over `link`,
/// inside the open interval (endpoints excluded; ε-offsets resolve endpoint
/// membership). Spectral entries come from the stored coexact
/// primitive-(1,1) eigenvalues via (λ+3)(λ+4) = μ; topological entries are
/// (−3, b³) and (−4, b²). The universal ω-mode at λ = 0 is deliberately not
/// listed (the moduli ledger accounts for it explicitly as the scaling mode).
pub fn critical_rates_dd3(
    link: &LinkData,
    interval: (&SymbolicRate, &SymbolicRate),
) -> Result<CriticalRateSet, RateError> {
    let report = validate_link(link);
    if !report.is_clean() {
        return Err(RateError::UnvalidatedLink(
            report.violations.iter().map(|v| v.to_string()).collect(),
        ));
    }
    critical_rates_dd3_unchecked(link, interval)
}

/// As [`critical_rates_dd3`] but without the link-validation gate (used by
/// `--force`).
pub fn critical_rates_dd3_unchecked(
    link: &LinkData,
    interval: (&SymbolicRate, &SymbolicRate),
) -> Result<CriticalRateSet, RateError> {
    coverage_check(link, interval)?;
    let (lo, hi) = interval;
    let mut set = CriticalRateSet::default();
    for entry in &link.coexact2 {
        let (r1, r2) = rates_from_eigenvalue(&entry.mu, 3)?;
        for r in [r1, r2] {
            if in_open_interval(&r, lo, hi) {
                set.push(CriticalRate {
                    rate: r,
                    multiplicity: entry.mult,
                    origin: RateOrigin::Spectral,
                    cite: entry.cite.clone(),
                });
            }
        }
    }
    let minus3 = Surd::from_int(-3);
    if in_open_interval(&minus3, lo, hi) {
        set.push(CriticalRate {
            rate: minus3,
            multiplicity: link.b(3),
            origin: RateOrigin::TopologicalB3,
            cite: "harmonic 3-forms on the link".to_string(),
        });
    }
    let minus4 = Surd::from_int(-4);
    if in_open_interval(&minus4, lo, hi) {
        set.push(CriticalRate {
            rate: minus4,
            multiplicity: link.b(2),
            origin: RateOrigin::TopologicalB2,
            cite: "harmonic 2-forms on the link".to_string(),
        });
    }
    Ok(set.finish())
}
