//! Spectral and topological datasets for Gray manifolds (links of G2 cones),
//! plus a Casimir-eigenvalue enumerator for their symmetry groups.
//!
//! The built-in datasets ship as versioned JSON files embedded in the crate;
//! user overrides load from the same format. Branching multiplicities (which
//! Casimir candidates actually occur on coclosed primitive (1,1)-forms) are
//! stored as cited data from the literature, not recomputed: full
//! homogeneous-space branching is out of proportion to this toolkit.

mod casimir;
mod data;

pub use casimir::{casimir_candidates, CasimirCandidate, Group};
pub use data::{builtin_names, gray_link, GrayLink};

use crate::scalar::{parse_rat, rat_to_string, Rat};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LinkError {
    #[error("unknown link: {0}")]
    UnknownLink(String),
    #[error("malformed link data: {0}")]
    Malformed(String),
}

/// Serialize rationals as "p/q" strings on the wire.
pub(crate) mod serde_rat {
    use super::*;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&rat_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(de)?;
        parse_rat(&s).ok_or_else(|| D::Error::custom(format!("bad rational: {s}")))
    }
}

/// Interval endpoints (lo, hi] as "p/q" strings on the wire.
pub(crate) mod serde_rat_pair {
    use super::*;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(pair: &(Rat, Rat), ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeTuple;
        let mut t = ser.serialize_tuple(2)?;
        t.serialize_element(&rat_to_string(&pair.0))?;
        t.serialize_element(&rat_to_string(&pair.1))?;
        t.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<(Rat, Rat), D::Error> {
        let (a, b): (String, String) = Deserialize::deserialize(de)?;
        let lo = parse_rat(&a).ok_or_else(|| D::Error::custom(format!("bad rational: {a}")))?;
        let hi = parse_rat(&b).ok_or_else(|| D::Error::custom(format!("bad rational: {b}")))?;
        Ok((lo, hi))
    }
}

/// One labeled eigenvalue of the link Laplacian, with its source.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralEntry {
    #[serde(with = "serde_rat")]
    pub mu: Rat,
    pub mult: u32,
    #[serde(default)]
    pub cite: String,
    /// Whether the eigenforms are known to integrate to actual deformations
    /// of the structure on the link ("unknown" where the literature leaves
    /// this open).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integrability: Option<String>,
}

/// Betti numbers and labeled Laplacian spectra of a Gray manifold.
///
/// `coexact2` holds eigenvalues of the Laplacian on coexact *primitive
/// (1,1)* 2-forms, declared known on `declared_interval` (default (0,12]).
/// The universal ω-mode at μ = 12 (the cone-scaling mode) is structural and
/// deliberately not listed; the moduli bookkeeping accounts for it
/// explicitly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkData {
    pub name: String,
    /// b⁰..b⁶.
    pub betti: [u32; 7],
    #[serde(default)]
    pub coexact2: Vec<SpectralEntry>,
    /// The μ-interval on which `coexact2` is complete: (lo, hi].
    #[serde(default = "default_interval", with = "serde_rat_pair")]
    pub declared_interval: (Rat, Rat),
    /// Known function-Laplacian eigenvalues (optional; validators only).
    #[serde(default)]
    pub function_spectrum: Vec<SpectralEntry>,
    /// Known 1-form-Laplacian eigenvalues (optional; validators only).
    #[serde(default)]
    pub oneform_spectrum: Vec<SpectralEntry>,
    /// Multiplicity of exact 4-forms on the link with Laplace eigenvalue 2;
    /// not computed in the literature for the known links, defaults to 0
    /// with a warning attached by the consumers that need it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact4_delta2: Option<u32>,
    #[serde(default)]
    pub provenance: Vec<String>,
}

fn default_interval() -> (Rat, Rat) {
    (Rat::from_integer(0.into()), Rat::from_integer(12.into()))
}

impl LinkData {
    pub fn from_json(s: &str) -> Result<Self, LinkError> {
        let link: LinkData =
            serde_json::from_str(s).map_err(|e| LinkError::Malformed(e.to_string()))?;
        Ok(link)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("link data serializes")
    }

    pub fn b(&self, k: usize) -> u32 {
        self.betti[k]
    }

    /// Total multiplicity of coexact primitive-(1,1) eigenvalue μ.
    pub fn coexact2_mult(&self, mu: &Rat) -> u32 {
        self.coexact2
            .iter()
            .filter(|e| &e.mu == mu)
            .map(|e| e.mult)
            .sum()
    }

    /// Whether the declared interval covers (lo, hi].
    pub fn covers(&self, lo: &Rat, hi: &Rat) -> bool {
        self.declared_interval.0 <= *lo && *hi <= self.declared_interval.1
    }
}
