//! Conifold topology data: Betti numbers, boundary-restriction image
//! dimensions, ends, and the JSON wire format.

use crate::cone_rates::SymbolicRate;
use crate::link_spectra::{gray_link, LinkData};
use crate::moduli::ModuliError;
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConifoldKind {
    #[serde(rename = "AC")]
    Ac,
    #[serde(rename = "CS")]
    Cs,
}

/// One end: an asymptotic cone given by its link, approached at a rate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct End {
    #[serde(with = "link_ref")]
    pub link: LinkData,
    pub rate: SymbolicRate,
}

/// Links may be referenced by builtin name or written inline.
mod link_ref {
    use super::*;
    use serde::de::Error;

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Wire {
        Name(String),
        Inline(Box<LinkData>),
    }

    pub fn serialize<S: serde::Serializer>(link: &LinkData, ser: S) -> Result<S::Ok, S::Error> {
        // builtins round-trip by name; anything else inline
        if gray_link(&link.name).as_ref() == Ok(link) {
            Wire::Name(link.name.clone()).serialize(ser)
        } else {
            Wire::Inline(Box::new(link.clone())).serialize(ser)
        }
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(de: D) -> Result<LinkData, D::Error> {
        match Wire::deserialize(de)? {
            Wire::Name(name) => gray_link(&name).map_err(D::Error::custom),
            Wire::Inline(link) => Ok(*link),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GluingFlags {
    /// Whether the restriction of [φ] to the link is nonzero in H³(Σ).
    #[serde(default)]
    pub phi_class_nonzero: bool,
    /// Whether the restriction of [ψ] to the link is nonzero in H⁴(Σ).
    #[serde(default)]
    pub psi_class_nonzero: bool,
}

/// Topological data of an AC or CS G2 conifold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConifoldTopology {
    pub kind: ConifoldKind,
    #[serde(default)]
    pub name: String,
    /// b⁰..b⁷ of the (smooth part of the) manifold.
    pub betti: [u32; 8],
    /// Compactly supported Betti numbers; derived from Poincaré duality
    /// (b^k_cs = b^{7−k}) when omitted.
    #[serde(default)]
    pub betti_cs: Option<[u32; 8]>,
    #[serde(default)]
    pub im_upsilon3: Option<u32>,
    #[serde(default)]
    pub im_upsilon4: Option<u32>,
    /// dim im(H³_cs → H³), stored directly when the Υ data is unknown (CS);
    /// otherwise checked for consistency against b³ − im Υ³.
    #[serde(default)]
    pub im_h3cs_to_h3: Option<u32>,
    pub ends: Vec<End>,
    #[serde(default)]
    pub flags: GluingFlags,
}

impl ConifoldTopology {
    pub fn from_json(s: &str) -> Result<Self, ModuliError> {
        serde_json::from_str(s).map_err(|e| ModuliError::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("topology serializes")
    }

    pub fn b(&self, k: usize) -> u32 {
        self.betti[k]
    }

    pub fn b_cs(&self, k: usize) -> u32 {
        match &self.betti_cs {
            Some(row) => row[k],
            None => self.betti[7 - k],
        }
    }

    /// Sum of b^k over all end links.
    pub fn link_b(&self, k: usize) -> u32 {
        self.ends.iter().map(|e| e.link.b(k)).sum()
    }

    /// dim(im Υ³) = b³(Σ_total)/2, stored or derived.
    pub fn im_upsilon3(&self) -> Result<u32, ModuliError> {
        if let Some(v) = self.im_upsilon3 {
            return Ok(v);
        }
        let b3s = self.link_b(3);
        if b3s % 2 != 0 {
            return Err(ModuliError::Inconsistent(format!(
                "b3 of the links totals {b3s}, which is odd; 2·im Υ³ = b³(Σ) cannot hold"
            )));
        }
        Ok(b3s / 2)
    }

    /// dim(im Υ⁴) = b⁴ − b³ + im Υ³, stored or derived.
    pub fn im_upsilon4(&self) -> Result<u32, ModuliError> {
        if let Some(v) = self.im_upsilon4 {
            return Ok(v);
        }
        let u3 = i64::from(self.im_upsilon3()?);
        let v = i64::from(self.b(4)) - i64::from(self.b(3)) + u3;
        u32::try_from(v).map_err(|_| {
            ModuliError::Inconsistent(format!("derived im Υ⁴ = {v} is negative"))
        })
    }

    /// dim im(H³_cs → H³) = b³ − im Υ³ (stored value wins, with a
    /// consistency check).
    pub fn im_h3cs_to_h3(&self) -> Result<u32, ModuliError> {
        let derived = self
            .im_upsilon3()
            .ok()
            .map(|u3| i64::from(self.b(3)) - i64::from(u3));
        match (self.im_h3cs_to_h3, derived) {
            (Some(stored), Some(d)) if i64::from(stored) != d => {
                Err(ModuliError::Inconsistent(format!(
                    "stored dim im(H³cs→H³) = {stored} but b³ − im Υ³ = {d}"
                )))
            }
            (Some(stored), _) => Ok(stored),
            (None, Some(d)) => u32::try_from(d).map_err(|_| {
                ModuliError::Inconsistent(format!("derived dim im(H³cs→H³) = {d} is negative"))
            }),
            (None, None) => Err(ModuliError::Underdetermined(vec![
                "im_h3cs_to_h3".to_string(),
                "im_upsilon3".to_string(),
            ])),
        }
    }

    /// Structural invariants: duality of betti_cs, the exact-sequence
    /// relations (where the data determines them), and bounds on the image
    /// dimensions.
    pub fn validate(&self) -> Result<(), ModuliError> {
        let mut problems = Vec::new();
        match self.kind {
            ConifoldKind::Ac if self.ends.len() != 1 => {
                problems.push("an AC conifold has exactly one end".to_string());
            }
            ConifoldKind::Cs if self.ends.is_empty() => {
                problems.push("a CS conifold needs at least one end".to_string());
            }
            _ => {}
        }
        if let Some(cs) = &self.betti_cs {
            for k in 0..=7usize {
                if cs[k] != self.betti[7 - k] {
                    problems.push(format!(
                        "b{k}_cs = {} violates duality (b{} = {})",
                        cs[k],
                        7 - k,
                        self.betti[7 - k]
                    ));
                }
            }
        }
        if let Ok(u3) = self.im_upsilon3() {
            // im Υ³ + im Υ³ = b³(Σ) per the restriction long exact sequence
            if 2 * u3 != self.link_b(3) {
                problems.push(format!(
                    "2·im Υ³ = {} must equal b³(Σ_total) = {}",
                    2 * u3,
                    self.link_b(3)
                ));
            }
            if u3 > self.b(3) {
                problems.push(format!("im Υ³ = {u3} exceeds b³ = {}", self.b(3)));
            }
            if let Ok(u4) = self.im_upsilon4() {
                if u4 > self.b(4) || u4 > self.link_b(4) {
                    problems.push(format!(
                        "im Υ⁴ = {u4} exceeds b⁴ = {} or b⁴(Σ) = {}",
                        self.b(4),
                        self.link_b(4)
                    ));
                }
                // kernels of Υ³ and Υ⁴ agree (Poincaré pairing)
                let ker3 = i64::from(self.b(3)) - i64::from(u3);
                let ker4 = i64::from(self.b(4)) - i64::from(u4);
                if ker3 != ker4 {
                    problems.push(format!("ker Υ³ = {ker3} but ker Υ⁴ = {ker4}"));
                }
                // im Υ² = b²(Σ) − im Υ⁴ must be a sensible dimension
                let u2 = i64::from(self.link_b(2)) - i64::from(u4);
                if u2 < 0 || u2 > i64::from(self.b(2)) {
                    problems.push(format!(
                        "derived im Υ² = {u2} out of range [0, b² = {}]",
                        self.b(2)
                    ));
                }
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(ModuliError::InvalidTopology(problems))
        }
    }
}

macro_rules! builtin_conifold {
    ($name:ident, $file:literal) => {
        static $name: Lazy<ConifoldTopology> = Lazy::new(|| {
            ConifoldTopology::from_json(include_str!(concat!("../../data/", $file)))
                .expect(concat!("builtin ", $file, " parses"))
        });
    };
}

builtin_conifold!(BS_LAMBDA2_S4, "bs_lambda2_s4.json");
builtin_conifold!(BS_SPINOR_S3, "bs_spinor_s3.json");
builtin_conifold!(BS_LAMBDA2_CP2, "bs_lambda2_cp2.json");

pub fn builtin_conifold_names() -> &'static [&'static str] {
    &["BS-Lambda2-S4", "BS-Spinor-S3", "BS-Lambda2-CP2"]
}

/// Built-in AC topologies for the three Bryant–Salamon manifolds.
pub fn builtin_conifold(name: &str) -> Result<ConifoldTopology, ModuliError> {
    match name {
        "BS-Lambda2-S4" | "bs-lambda2-s4" => Ok(BS_LAMBDA2_S4.clone()),
        "BS-Spinor-S3" | "bs-spinor-s3" => Ok(BS_SPINOR_S3.clone()),
        "BS-Lambda2-CP2" | "bs-lambda2-cp2" => Ok(BS_LAMBDA2_CP2.clone()),
        other => Err(ModuliError::UnknownConifold(other.to_string())),
    }
}
