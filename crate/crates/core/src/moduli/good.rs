//! Good-singularity decision: a CS conifold has good singularities when no
//! end link carries a coexact primitive-(1,1) eigenvalue with rate in
//! (−3, 0], i.e. eigenvalue μ = (λ+3)(λ+4) in (0, 12].

use crate::cone_rates::RateError;
use crate::link_spectra::LinkData;
use crate::moduli::ModuliError;
use crate::scalar::{rat_from_i64, rat_to_string};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoodSingWitness {
    pub link: String,
    pub mu: String,
    pub mult: u32,
    pub cite: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoodSingularities {
    pub good: bool,
    pub witnesses: Vec<GoodSingWitness>,
}

/// True iff every link's coexact primitive-(1,1) spectrum is empty on
/// (0, 12]. Errors when a link's declared interval does not cover (0, 12].
pub fn good_singularities(links: &[&LinkData]) -> Result<GoodSingularities, ModuliError> {
    let zero = rat_from_i64(0);
    let twelve = rat_from_i64(12);
    let mut witnesses = Vec::new();
    for link in links {
        if !link.covers(&zero, &twelve) {
            return Err(ModuliError::Rate(RateError::IncompleteSpectrum {
                needed_hi: "12".to_string(),
                declared_lo: rat_to_string(&link.declared_interval.0),
                declared_hi: rat_to_string(&link.declared_interval.1),
            }));
        }
        for e in &link.coexact2 {
            if e.mult > 0 && e.mu > zero && e.mu <= twelve {
                witnesses.push(GoodSingWitness {
                    link: link.name.clone(),
                    mu: rat_to_string(&e.mu),
                    mult: e.mult,
                    cite: e.cite.clone(),
                });
            }
        }
    }
    Ok(GoodSingularities {
        good: witnesses.is_empty(),
        witnesses,
    })
}
