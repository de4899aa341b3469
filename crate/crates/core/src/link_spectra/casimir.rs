//! Exhaustive Casimir-eigenvalue enumeration for the symmetry groups of the
//! three known Gray manifolds.

use crate::scalar::{rat_from_i64, ratio, Rat};
use serde::{Deserialize, Serialize};

/// Symmetry group of a known Gray manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Group {
    /// SO(5) ≅ Sp(2)/±1 acting on CP³; eigenvalue 2(a(a+3) + b(b+1)) for
    /// highest weight (a, b), a ≥ b ≥ 0.
    SO5,
    /// SU(2)³ acting on S³×S³; eigenvalue (3/2)(a(a+2) + b(b+2) + c(c+2)),
    /// weights enumerated up to permutation with the permutation count
    /// recorded as multiplicity.
    SU2Cubed,
    /// SU(3) acting on the flag manifold; eigenvalue 2(k(k+2) + l(l+2)).
    SU3,
}

impl Group {
    pub fn parse(s: &str) -> Option<Group> {
        match s {
            "SO5" | "so5" | "SO(5)" => Some(Group::SO5),
            "SU2^3" | "SU2_cubed" | "su2cubed" | "SU(2)^3" | "SU2x3" => Some(Group::SU2Cubed),
            "SU3" | "su3" | "SU(3)" => Some(Group::SU3),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Group::SO5 => "SO5",
            Group::SU2Cubed => "SU2^3",
            Group::SU3 => "SU3",
        }
    }
}

/// A highest-weight tuple with its exact Casimir eigenvalue.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CasimirCandidate {
    pub group: Group,
    pub weights: Vec<u32>,
    #[serde(with = "crate::link_spectra::serde_rat")]
    pub eigenvalue: Rat,
    /// Number of distinct weight orderings (1 except for SU(2)³).
    pub multiplicity: u32,
}

fn so5_eigenvalue(a: u32, b: u32) -> Rat {
    let a = i64::from(a);
    let b = i64::from(b);
    rat_from_i64(2 * (a * (a + 3) + b * (b + 1)))
}

fn su2c_eigenvalue(a: u32, b: u32, c: u32) -> Rat {
    let sum: i64 = [a, b, c]
        .iter()
        .map(|&x| i64::from(x) * (i64::from(x) + 2))
        .sum();
    ratio(3 * sum, 2)
}

fn su3_eigenvalue(k: u32, l: u32) -> Rat {
    let k = i64::from(k);
    let l = i64::from(l);
    rat_from_i64(2 * (k * (k + 2) + l * (l + 2)))
}

fn permutation_count(a: u32, b: u32, c: u32) -> u32 {
    if a == b && b == c {
        1
    } else if a == b || b == c || a == c {
        3
    } else {
        6
    }
}

/// All admissible weight tuples with eigenvalue ≤ bound, exhaustively.
/// The enumeration is monotone in the bound and exact.
pub fn casimir_candidates(group: Group, bound: &Rat) -> Vec<CasimirCandidate> {
    let mut out = Vec::new();
    match group {
        Group::SO5 => {
            // 2a(a+3) grows in a, so the loop bound is safe
            let mut a = 0u32;
            while &so5_eigenvalue(a, 0) <= bound {
                for b in 0..=a {
                    let ev = so5_eigenvalue(a, b);
                    if &ev <= bound {
                        out.push(CasimirCandidate {
                            group,
                            weights: vec![a, b],
                            eigenvalue: ev,
                            multiplicity: 1,
                        });
                    }
                }
                a += 1;
            }
        }
        Group::SU2Cubed => {
            let mut a = 0u32;
            while &su2c_eigenvalue(a, 0, 0) <= bound {
                for b in 0..=a {
                    if &su2c_eigenvalue(a, b, 0) > bound {
                        break;
                    }
                    for c in 0..=b {
                        let ev = su2c_eigenvalue(a, b, c);
                        if &ev <= bound {
                            out.push(CasimirCandidate {
                                group,
                                weights: vec![a, b, c],
                                eigenvalue: ev,
                                multiplicity: permutation_count(a, b, c),
                            });
                        }
                    }
                }
                a += 1;
            }
        }
        Group::SU3 => {
            let mut k = 0u32;
            while &su3_eigenvalue(k, 0) <= bound {
                for l in 0.. {
                    let ev = su3_eigenvalue(k, l);
                    if &ev > bound {
                        break;
                    }
                    out.push(CasimirCandidate {
                        group,
                        weights: vec![k, l],
                        eigenvalue: ev,
                        multiplicity: 1,
                    });
                }
                k += 1;
            }
        }
    }
    out.sort_by(|x, y| x.eigenvalue.cmp(&y.eigenvalue).then(x.weights.cmp(&y.weights)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn positive_values(group: Group, bound: i64) -> Vec<Rat> {
        let mut v: Vec<Rat> = casimir_candidates(group, &rat_from_i64(bound))
            .into_iter()
            .map(|c| c.eigenvalue)
            .filter(|e| e > &Rat::from_integer(0.into()))
            .collect();
        v.dedup();
        v
    }

    #[test]
    fn so5_spectrum_below_12() {
        // positive values ≤ 12 are 8 at (1,0) and 12 at (1,1)
        let cands = casimir_candidates(Group::SO5, &rat_from_i64(12));
        let positives: Vec<_> = cands
            .iter()
            .filter(|c| c.eigenvalue > Rat::from_integer(0.into()))
            .collect();
        assert_eq!(positives.len(), 2);
        assert_eq!(positives[0].weights, vec![1, 0]);
        assert_eq!(positives[0].eigenvalue, rat_from_i64(8));
        assert_eq!(positives[1].weights, vec![1, 1]);
        assert_eq!(positives[1].eigenvalue, rat_from_i64(12));
    }

    #[test]
    fn su2cubed_spectrum_below_12() {
        // positive values < 12 are 9/2 and 9
        let vals = positive_values(Group::SU2Cubed, 12);
        let below: Vec<_> = vals.iter().filter(|v| **v < rat_from_i64(12)).collect();
        assert_eq!(below, vec![&ratio(9, 2), &rat_from_i64(9)]);
    }

    #[test]
    fn su3_spectrum_below_12() {
        // positive values < 12: only 6, at (1,0) and (0,1)
        let cands = casimir_candidates(Group::SU3, &rat_from_i64(12));
        let below: Vec<_> = cands
            .iter()
            .filter(|c| {
                c.eigenvalue > Rat::from_integer(0.into()) && c.eigenvalue < rat_from_i64(12)
            })
            .collect();
        assert_eq!(below.len(), 2);
        assert!(below.iter().all(|c| c.eigenvalue == rat_from_i64(6)));
        let weights: Vec<_> = below.iter().map(|c| c.weights.clone()).collect();
        assert!(weights.contains(&vec![1, 0]) && weights.contains(&vec![0, 1]));
    }

    #[test]
    fn monotone_in_bound() {
        for group in [Group::SO5, Group::SU2Cubed, Group::SU3] {
            let small = casimir_candidates(group, &rat_from_i64(10));
            let large = casimir_candidates(group, &rat_from_i64(30));
            for c in &small {
                assert!(large.contains(c), "{:?} lost when bound grew", c);
            }
        }
    }
}
