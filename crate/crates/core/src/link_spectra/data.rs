//! Built-in datasets for the three known Gray manifolds.

use crate::link_spectra::{LinkData, LinkError};
use once_cell::sync::Lazy;

/// The three known Gray manifolds (links of the known G2 cones).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrayLink {
    /// CP³ ≅ Sp(2)/(Sp(1)×U(1)); asymptotic link of the anti-self-dual
    /// 2-form bundle over S⁴.
    Cp3,
    /// The flag manifold SU(3)/T²; asymptotic link of the anti-self-dual
    /// 2-form bundle over CP².
    Flag,
    /// S³×S³ ≅ (S³)³/S³; asymptotic link of the spinor bundle of S³.
    S3xS3,
}

impl GrayLink {
    pub fn parse(name: &str) -> Option<GrayLink> {
        match name {
            "CP3" | "cp3" | "CP^3" => Some(GrayLink::Cp3),
            "Flag" | "flag" | "SU3/T2" => Some(GrayLink::Flag),
            "S3xS3" | "s3xs3" | "S3XS3" => Some(GrayLink::S3xS3),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GrayLink::Cp3 => "CP3",
            GrayLink::Flag => "Flag",
            GrayLink::S3xS3 => "S3xS3",
        }
    }
}

static CP3: Lazy<LinkData> = Lazy::new(|| {
    LinkData::from_json(include_str!("../../data/cp3.json")).expect("builtin CP3 data parses")
});
static FLAG: Lazy<LinkData> = Lazy::new(|| {
    LinkData::from_json(include_str!("../../data/flag.json")).expect("builtin Flag data parses")
});
static S3XS3: Lazy<LinkData> = Lazy::new(|| {
    LinkData::from_json(include_str!("../../data/s3xs3.json")).expect("builtin S3xS3 data parses")
});

pub fn builtin_names() -> &'static [&'static str] {
    &["CP3", "Flag", "S3xS3"]
}

/// The built-in dataset for a known Gray manifold, by name.
pub fn gray_link(name: &str) -> Result<LinkData, LinkError> {
    let which = GrayLink::parse(name).ok_or_else(|| LinkError::UnknownLink(name.to_string()))?;
    Ok(match which {
        GrayLink::Cp3 => CP3.clone(),
        GrayLink::Flag => FLAG.clone(),
        GrayLink::S3xS3 => S3XS3.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_from_i64;

    #[test]
    fn builtin_datasets_match_known_topology() {
        let cp3 = gray_link("CP3").unwrap();
        assert_eq!(cp3.betti, [1, 0, 1, 0, 1, 0, 1]);
        assert!(cp3.coexact2.is_empty());

        let s3 = gray_link("S3xS3").unwrap();
        assert_eq!(s3.betti, [1, 0, 0, 2, 0, 0, 1]);
        assert!(s3.coexact2.is_empty());

        let flag = gray_link("Flag").unwrap();
        assert_eq!(flag.betti, [1, 0, 2, 0, 2, 0, 1]);
        assert_eq!(flag.coexact2.len(), 1);
        assert_eq!(flag.coexact2[0].mu, rat_from_i64(12));
        assert_eq!(flag.coexact2[0].mult, 8);
        assert_eq!(flag.coexact2[0].integrability.as_deref(), Some("unknown"));
    }

    #[test]
    fn unknown_link_errors() {
        assert!(matches!(
            gray_link("S6"),
            Err(LinkError::UnknownLink(_))
        ));
    }

    #[test]
    fn stored_entries_appear_among_casimir_candidates() {
        use crate::link_spectra::{casimir_candidates, Group};
        // every stored (μ, mult>0) must be a Casimir candidate ≤ 12
        let pairs = [
            ("CP3", Group::SO5),
            ("Flag", Group::SU3),
            ("S3xS3", Group::SU2Cubed),
        ];
        for (name, group) in pairs {
            let link = gray_link(name).unwrap();
            let cands = casimir_candidates(group, &rat_from_i64(12));
            for entry in &link.coexact2 {
                assert!(
                    cands.iter().any(|c| c.eigenvalue == entry.mu),
                    "{name}: stored eigenvalue {} not among Casimir candidates",
                    entry.mu
                );
            }
        }
    }
}
