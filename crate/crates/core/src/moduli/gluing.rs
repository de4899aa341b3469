//! Mayer–Vietoris arithmetic for desingularization: the third Betti number
//! of the glued compact manifold, and the dimension-level necessary check of
//! the gluing condition.

use crate::link_spectra::LinkData;
use crate::moduli::topology::{ConifoldKind, ConifoldTopology};
use crate::moduli::ModuliError;
use serde::{Deserialize, Serialize};

/// Intersection dimensions dim(im Υ^k_M ∩ im Υ^k_N) for k = 3, 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Intersections {
    pub i3: u32,
    pub i4: u32,
}

fn common_checks(
    m: &ConifoldTopology,
    n: &ConifoldTopology,
    sigma: &LinkData,
    inter: Intersections,
) -> Result<(u32, u32, u32, u32), ModuliError> {
    if m.kind != ConifoldKind::Cs || m.ends.len() != 1 {
        return Err(ModuliError::Precondition(
            "gluing needs a CS conifold with exactly one end".to_string(),
        ));
    }
    if n.kind != ConifoldKind::Ac {
        return Err(ModuliError::Precondition(
            "gluing needs an AC conifold".to_string(),
        ));
    }
    if m.ends[0].link != *sigma || n.ends[0].link != *sigma {
        return Err(ModuliError::Precondition(
            "both conifolds must be asymptotic to the cone over the same link".to_string(),
        ));
    }
    let m3 = m.im_upsilon3()?;
    let m4 = m.im_upsilon4()?;
    let n3 = n.im_upsilon3()?;
    let n4 = n.im_upsilon4()?;
    if inter.i3 > m3.min(n3) || inter.i4 > m4.min(n4) {
        return Err(ModuliError::InconsistentIntersections(format!(
            "intersections (i3 = {}, i4 = {}) exceed image dimensions \
             (im Υ³: {m3}/{n3}, im Υ⁴: {m4}/{n4})",
            inter.i3, inter.i4
        )));
    }
    Ok((m3, m4, n3, n4))
}

/// b³ of the compact manifold obtained by gluing the AC manifold N into the
/// conical singularity of M (both asymptotic to the cone over `sigma`):
///
///   b³(X) = b³(M) − im Υ³_M + b³_cs(N) − im Υ⁴_N + i4 + i3.
pub fn mayer_vietoris_b3(
    m: &ConifoldTopology,
    n: &ConifoldTopology,
    sigma: &LinkData,
    inter: Intersections,
) -> Result<i64, ModuliError> {
    let (m3, _, _, n4) = common_checks(m, n, sigma, inter)?;
    Ok(i64::from(m.b(3)) - i64::from(m3) + i64::from(n.b_cs(3)) - i64::from(n4)
        + i64::from(inter.i4)
        + i64::from(inter.i3))
}

/// Dimension-level necessary check of the gluing condition: the classes
/// Υ³_N[φ_N] and Υ⁴_N[ψ_N] must land inside im Υ³_M and im Υ⁴_M. With only
/// dimensions available this checks that each nonzero class has a nonzero
/// intersection block to live in (and the full block when the image is a
/// line).
pub fn gluing_condition_check(
    m: &ConifoldTopology,
    n: &ConifoldTopology,
    sigma: &LinkData,
    inter: Intersections,
) -> Result<bool, ModuliError> {
    let (_, _, n3, n4) = common_checks(m, n, sigma, inter)?;
    let slot_ok = |class_nonzero: bool, im_n: u32, i: u32| -> bool {
        if !class_nonzero {
            return true; // vacuous
        }
        if im_n == 1 {
            i == 1 // the class spans im Υ_N, which must lie in the intersection
        } else {
            i >= 1
        }
    };
    Ok(slot_ok(n.flags.phi_class_nonzero, n3, inter.i3)
        && slot_ok(n.flags.psi_class_nonzero, n4, inter.i4))
}
