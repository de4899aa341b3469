//! The G2 structure at a point: induced metric, dual 4-form, type projectors,
//! Theta and its linearization.

use crate::g2_algebra::form::{
    basis_masks, hodge_star, mask_from_indices, AltForm, MetricData, Orientation,
};
use crate::g2_algebra::G2Error;
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

/// Structure constants of the standard 3-form, as (indices, sign).
///
/// Chosen for the fixed orientation dx^1..7 so that *(φ ∧ β) has eigenvalues
/// (−2, +1) on 2-forms; validated by the invariant suite, not by provenance.
pub const PHI0_TABLE: [([u8; 3], i8); 7] = [
    ([1, 2, 3], 1),
    ([1, 4, 5], 1),
    ([1, 6, 7], -1),
    ([2, 4, 6], 1),
    ([2, 5, 7], 1),
    ([3, 4, 7], 1),
    ([3, 5, 6], -1),
];

pub fn standard_phi<S: Scalar>() -> AltForm<S> {
    AltForm::from_terms(
        3,
        PHI0_TABLE
            .iter()
            .map(|(idx, s)| (mask_from_indices(idx), S::from_int(i64::from(*s)))),
    )
}

/// The bilinear form B_ij defined by (e_i ⌟ φ) ∧ (e_j ⌟ φ) ∧ φ = B_ij dx^1..7.
fn intermediate_bilinear<S: Scalar>(phi: &AltForm<S>) -> Matrix<S> {
    let full = 0b111_1111u8;
    let hooks: Vec<AltForm<S>> = (1..=7u8).map(|i| phi.interior_basis(i)).collect();
    (0..7)
        .map(|i| {
            (0..7)
                .map(|j| hooks[i].wedge(&hooks[j]).wedge(phi).coeff(full))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Definite {
    Positive,
    Negative,
    No,
}

fn definiteness<S: Scalar>(m: &Matrix<S>) -> Definite {
    let minors = linalg::leading_principal_minors(m);
    let pos = minors.iter().all(|d| !d.is_zero() && !d.is_negative_val());
    if pos {
        return Definite::Positive;
    }
    let neg = minors
        .iter()
        .enumerate()
        .all(|(k, d)| !d.is_zero() && (d.is_negative_val() == (k % 2 == 0)));
    if neg {
        Definite::Negative
    } else {
        Definite::No
    }
}

/// Metric induced by a nondegenerate 3-form, normalized so the standard form
/// gives the identity; satisfies g(c φ) = c^{2/3} g(φ) for c > 0.
///
/// Exact scalars fail with `ExactRootUnavailable` when the required 9th root
/// is irrational; the f64-backed variant always succeeds on definite input.
pub fn metric_from_three_form<S: Scalar>(phi: &AltForm<S>) -> Result<Matrix<S>, G2Error> {
    assert_eq!(phi.degree(), 3);
    let b = intermediate_bilinear(phi);
    let sign = match definiteness(&b) {
        Definite::Positive => S::from_int(1),
        Definite::Negative => S::from_int(-1),
        Definite::No => return Err(G2Error::DegenerateStructure),
    };
    let det_b = linalg::det(&b);
    let abs_det = if det_b.is_negative_val() { -det_b } else { det_b };
    let norm = (S::from_int(36) * abs_det)
        .nth_root(9)
        .ok_or(G2Error::ExactRootUnavailable("(36·|det B|)^(1/9)"))?;
    Ok(b
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| sign.clone() * x / norm.clone())
                .collect()
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypeLabel {
    L1,
    L7,
    L14,
    L27,
}

impl TypeLabel {
    pub fn from_u8(label: u8) -> Option<Self> {
        match label {
            1 => Some(TypeLabel::L1),
            7 => Some(TypeLabel::L7),
            14 => Some(TypeLabel::L14),
            27 => Some(TypeLabel::L27),
            _ => None,
        }
    }
    pub fn as_u8(self) -> u8 {
        match self {
            TypeLabel::L1 => 1,
            TypeLabel::L7 => 7,
            TypeLabel::L14 => 14,
            TypeLabel::L27 => 27,
        }
    }
}

/// A G2 structure at a point: φ, induced metric, volume form, dual 4-form ψ,
/// and the type projectors on the 21-dimensional 2-form space and the
/// 35-dimensional 3-form space.
#[derive(Debug, Clone)]
pub struct G2PointStructure<S: Scalar> {
    pub phi: AltForm<S>,
    pub metric: MetricData<S>,
    pub vol: AltForm<S>,
    pub psi: AltForm<S>,
    pub proj2_7: Matrix<S>,
    pub proj2_14: Matrix<S>,
    pub proj3_1: Matrix<S>,
    pub proj3_7: Matrix<S>,
    pub proj3_27: Matrix<S>,
}

impl<S: Scalar> G2PointStructure<S> {
    /// Build the structure induced by a nondegenerate, positively oriented
    /// 3-form. The fixed orientation is dx^1..7; a form whose intermediate
    /// bilinear form is positive definite belongs to the opposite orientation
    /// class and is rejected.
    pub fn from_three_form(phi: &AltForm<S>) -> Result<Self, G2Error> {
        let b = intermediate_bilinear(phi);
        match definiteness(&b) {
            Definite::Negative => {}
            Definite::Positive => return Err(G2Error::OppositeOrientation),
            Definite::No => return Err(G2Error::DegenerateStructure),
        }
        let g = metric_from_three_form(phi)?;
        let metric = MetricData::new(g)?;
        let vol = metric.volume_form();
        let psi = hodge_star(phi, &metric, Orientation::Positive);
        let star2 = |w: &AltForm<S>| hodge_star(w, &metric, Orientation::Positive);

        // 2-form projectors from the eigenvalues (−2, +1) of β ↦ *(φ ∧ β)
        let masks2 = basis_masks(2);
        let n2 = masks2.len();
        let third = S::from_int(1) / S::from_int(3);
        let mut proj2_7 = vec![vec![S::zero(); n2]; n2];
        let mut proj2_14 = vec![vec![S::zero(); n2]; n2];
        for (col, m) in masks2.iter().enumerate() {
            let basis = AltForm::from_terms(2, [(*m, S::from_int(1))]);
            let a = star2(&phi.wedge(&basis));
            let p7 = basis.sub(&a).scale(&third);
            let p14 = basis.scale(&S::from_int(2)).add(&a).scale(&third);
            for (row, mm) in masks2.iter().enumerate() {
                proj2_7[row][col] = p7.coeff(*mm);
                proj2_14[row][col] = p14.coeff(*mm);
            }
        }

        // 3-form projectors: π1 along φ, π7 spanned by *(dx^i ∧ φ), rest is π27
        let masks3 = basis_masks(3);
        let n3 = masks3.len();
        let phi_norm2 = metric.inner(phi, phi);
        let b7: Vec<AltForm<S>> = (1..=7u8)
            .map(|i| star2(&AltForm::basis(&[i]).wedge(phi)))
            .collect();
        let gram: Matrix<S> = b7
            .iter()
            .map(|x| b7.iter().map(|y| metric.inner(x, y)).collect())
            .collect();
        let gram_inv = linalg::inverse(&gram).ok_or(G2Error::DegenerateStructure)?;
        let mut proj3_1 = vec![vec![S::zero(); n3]; n3];
        let mut proj3_7 = vec![vec![S::zero(); n3]; n3];
        let mut proj3_27 = vec![vec![S::zero(); n3]; n3];
        for (col, m) in masks3.iter().enumerate() {
            let basis = AltForm::from_terms(3, [(*m, S::from_int(1))]);
            let p1 = phi.scale(&(metric.inner(&basis, phi) / phi_norm2.clone()));
            let ips: Vec<S> = b7.iter().map(|bi| metric.inner(&basis, bi)).collect();
            let coords = linalg::mat_vec(&gram_inv, &ips);
            let mut p7 = AltForm::zero(3);
            for (bi, c) in b7.iter().zip(coords) {
                p7 = p7.add(&bi.scale(&c));
            }
            let p27 = basis.sub(&p1).sub(&p7);
            for (row, mm) in masks3.iter().enumerate() {
                proj3_1[row][col] = p1.coeff(*mm);
                proj3_7[row][col] = p7.coeff(*mm);
                proj3_27[row][col] = p27.coeff(*mm);
            }
        }

        Ok(G2PointStructure {
            phi: phi.clone(),
            metric,
            vol,
            psi,
            proj2_7,
            proj2_14,
            proj3_1,
            proj3_7,
            proj3_27,
        })
    }

    /// The standard structure: φ0 with identity metric.
    pub fn standard() -> Self {
        Self::from_three_form(&standard_phi()).expect("standard structure is nondegenerate")
    }

    pub fn star(&self, w: &AltForm<S>) -> AltForm<S> {
        hodge_star(w, &self.metric, Orientation::Positive)
    }

    fn apply_proj(&self, m: &Matrix<S>, w: &AltForm<S>) -> AltForm<S> {
        AltForm::from_vec(w.degree(), &linalg::mat_vec(m, &w.to_vec()))
    }

    pub fn project(&self, w: &AltForm<S>, label: TypeLabel) -> Result<AltForm<S>, G2Error> {
        let bad = || G2Error::BadLabel {
            degree: w.degree(),
            label: label.as_u8(),
        };
        match (w.degree(), label) {
            (2, TypeLabel::L7) => Ok(self.apply_proj(&self.proj2_7, w)),
            (2, TypeLabel::L14) => Ok(self.apply_proj(&self.proj2_14, w)),
            (3, TypeLabel::L1) => Ok(self.apply_proj(&self.proj3_1, w)),
            (3, TypeLabel::L7) => Ok(self.apply_proj(&self.proj3_7, w)),
            (3, TypeLabel::L27) => Ok(self.apply_proj(&self.proj3_27, w)),
            _ => Err(bad()),
        }
    }

    /// π1 ⊕ π7 on 3-forms.
    pub fn project_1_plus_7(&self, w: &AltForm<S>) -> Result<AltForm<S>, G2Error> {
        Ok(self
            .project(w, TypeLabel::L1)?
            .add(&self.project(w, TypeLabel::L7)?))
    }
}

/// Projection of `omega` onto the type component named by `label` (2-forms:
/// 7, 14; 3-forms: 1, 7, 27).
pub fn project_type<S: Scalar>(
    omega: &AltForm<S>,
    s: &G2PointStructure<S>,
    label: u8,
) -> Result<AltForm<S>, G2Error> {
    let lab = TypeLabel::from_u8(label).ok_or(G2Error::BadLabel {
        degree: omega.degree(),
        label,
    })?;
    s.project(omega, lab)
}

/// Θ(φ̃) = *_{φ̃} φ̃, the dual 4-form computed with the metric induced by φ̃
/// itself. Satisfies Θ(c φ) = c^{4/3} Θ(φ).
pub fn theta<S: Scalar>(phi_tilde: &AltForm<S>) -> Result<AltForm<S>, G2Error> {
    let b = intermediate_bilinear(phi_tilde);
    if definiteness(&b) != Definite::Negative {
        return match definiteness(&b) {
            Definite::Positive => Err(G2Error::OppositeOrientation),
            _ => Err(G2Error::DegenerateStructure),
        };
    }
    let g = metric_from_three_form(phi_tilde)?;
    let metric = MetricData::new(g)?;
    Ok(hodge_star(phi_tilde, &metric, Orientation::Positive))
}

/// Linearization of Θ at the structure `s`: η ↦ *((4/3)π1 η + π7 η − π27 η).
pub fn linearize_theta<S: Scalar>(
    eta: &AltForm<S>,
    s: &G2PointStructure<S>,
) -> Result<AltForm<S>, G2Error> {
    let p1 = s.project(eta, TypeLabel::L1)?;
    let p7 = s.project(eta, TypeLabel::L7)?;
    let p27 = s.project(eta, TypeLabel::L27)?;
    let four_thirds = S::from_int(4) / S::from_int(3);
    Ok(s.star(&p1.scale(&four_thirds).add(&p7).sub(&p27)))
}
