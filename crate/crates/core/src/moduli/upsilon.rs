//! Exact-sequence arithmetic: solving for the boundary-restriction image
//! dimensions im Υ³, im Υ⁴ of a single-end AC conifold.

use crate::link_spectra::LinkData;
use crate::moduli::ModuliError;

/// Solve the restriction long-exact-sequence relations for (im Υ³, im Υ⁴)
/// of a single-end AC conifold. Betti entries of M may be unknown (`None`);
/// missing data that the solution needs is reported as `Underdetermined`
/// with the free parameters named.
///
/// The relations pin the answer completely when b³(M) and b⁴(M) are known:
/// im Υ³ = b³(Σ)/2 (the rank-nullity relation at k = 3 forces the two image
/// summands to coincide), and ker Υ³ = ker Υ⁴ (Poincaré pairing) gives
/// im Υ⁴ = b⁴ − b³ + im Υ³.
pub fn solve_upsilon(
    ac_betti: &[Option<u32>; 8],
    link: &LinkData,
) -> Result<(u32, u32), ModuliError> {
    let b3s = link.b(3);
    if b3s % 2 != 0 {
        return Err(ModuliError::Inconsistent(format!(
            "b³(Σ) = {b3s} is odd; im Υ³ + im Υ³ = b³(Σ) has no integer solution"
        )));
    }
    let u3 = b3s / 2;

    let mut missing = Vec::new();
    if ac_betti[3].is_none() {
        missing.push("b3(M)".to_string());
    }
    if ac_betti[4].is_none() {
        missing.push("b4(M)".to_string());
    }
    if !missing.is_empty() {
        return Err(ModuliError::Underdetermined(missing));
    }
    let b3 = ac_betti[3].unwrap();
    let b4 = ac_betti[4].unwrap();

    if u3 > b3 {
        return Err(ModuliError::Inconsistent(format!(
            "im Υ³ = {u3} exceeds b³(M) = {b3}"
        )));
    }
    let u4 = i64::from(b4) - i64::from(b3) + i64::from(u3);
    if u4 < 0 {
        return Err(ModuliError::Inconsistent(format!(
            "im Υ⁴ = b⁴ − b³ + im Υ³ = {u4} is negative"
        )));
    }
    let u4 = u4 as u32;
    if u4 > b4 || u4 > link.b(4) {
        return Err(ModuliError::Inconsistent(format!(
            "im Υ⁴ = {u4} exceeds b⁴(M) = {b4} or b⁴(Σ) = {}",
            link.b(4)
        )));
    }
    // the k = 2/4 relation determines im Υ² = b²(Σ) − im Υ⁴; check range
    // against b²(M) when known
    let u2 = i64::from(link.b(2)) - i64::from(u4);
    if u2 < 0 {
        return Err(ModuliError::Inconsistent(format!(
            "derived im Υ² = {u2} is negative"
        )));
    }
    if let Some(b2) = ac_betti[2] {
        if u2 > i64::from(b2) {
            return Err(ModuliError::Inconsistent(format!(
                "derived im Υ² = {u2} exceeds b²(M) = {b2}"
            )));
        }
    }
    Ok((u3, u4))
}
