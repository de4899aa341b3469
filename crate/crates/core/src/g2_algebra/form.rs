//! Alternating forms on R^7 with scalar coefficients, and the metric data
//! needed to apply the Hodge star.

use crate::g2_algebra::G2Error;
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// Index subsets of {1,..,7} are stored as 7-bit masks; bit i-1 set means
/// index i is present. Canonical strictly-increasing tuples correspond
/// one-to-one with masks.
pub type Mask = u8;

pub const FULL_MASK: Mask = 0b111_1111;

pub fn mask_from_indices(indices: &[u8]) -> Mask {
    let mut m = 0u8;
    for &i in indices {
        assert!((1..=7).contains(&i), "index out of range");
        assert!(m & (1 << (i - 1)) == 0, "repeated index");
        m |= 1 << (i - 1);
    }
    m
}

pub fn indices_from_mask(m: Mask) -> Vec<u8> {
    (1..=7u8).filter(|i| m & (1 << (i - 1)) != 0).collect()
}

/// Sign of e^a ∧ e^b relative to the canonical ordering of a|b; masks must be
/// disjoint.
pub fn wedge_sign(a: Mask, b: Mask) -> i8 {
    debug_assert!(a & b == 0);
    let mut inversions = 0u32;
    for j in 0..7 {
        if b & (1 << j) != 0 {
            inversions += (a >> (j + 1)).count_ones();
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All degree-k basis masks in canonical (ascending mask) order.
pub fn basis_masks(k: u8) -> Vec<Mask> {
    (0..=FULL_MASK)
        .filter(|m| m.count_ones() == u32::from(k))
        .collect()
}

/// A differential form at a point (or with constant coefficients) on R^7.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// forms.
#[derive(Debug, Clone, PartialEq)]
pub struct AltForm<S: Scalar> {
    degree: u8,
    coeffs: BTreeMap<Mask, S>,
}

impl<S: Scalar> AltForm<S> {
    pub fn zero(degree: u8) -> Self {
        assert!(degree <= 7);
        AltForm {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms(degree: u8, terms: impl IntoIterator<Item = (Mask, S)>) -> Self {
        let mut f = Self::zero(degree);
        for (m, c) in terms {
            assert_eq!(m.count_ones(), u32::from(degree));
            f.add_term(m, c);
        }
        f
    }

    /// Scalar constant as a 0-form.
    pub fn constant(c: S) -> Self {
        Self::from_terms(0, [(0u8, c)])
    }

    pub fn basis(indices: &[u8]) -> Self {
        let m = mask_from_indices(indices);
        Self::from_terms(indices.len() as u8, [(m, S::from_int(1))])
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, m: Mask) -> S {
        self.coeffs.get(&m).cloned().unwrap_or_else(S::zero)
    }

    pub fn coeff_at(&self, indices: &[u8]) -> S {
        self.coeff(mask_from_indices(indices))
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &S)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn add_term(&mut self, m: Mask, c: S) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(m).or_insert_with(S::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (m, c) in other.coeffs.iter() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&(-S::from_int(1))))
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero(self.degree);
        }
        let mut out = Self::zero(self.degree);
        for (m, c) in self.coeffs.iter() {
            out.add_term(*m, c.clone() * s.clone());
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let degree = self.degree + other.degree;
        assert!(degree <= 7, "wedge degree exceeds 7");
        let mut out = Self::zero(degree);
        for (a, ca) in self.coeffs.iter() {
            for (b, cb) in other.coeffs.iter() {
                if a & b != 0 {
                    continue;
                }
                let s = wedge_sign(*a, *b);
                let c = ca.clone() * cb.clone();
                out.add_term(a | b, if s > 0 { c } else { -c });
            }
        }
        out
    }

    /// Interior product e_i ⌟ ω with a coordinate vector (metric-independent
    /// for the flat frame).
    pub fn interior_basis(&self, i: u8) -> Self {
        assert!((1..=7).contains(&i));
        assert!(self.degree >= 1);
        let bit = 1u8 << (i - 1);
        let mut out = Self::zero(self.degree - 1);
        for (m, c) in self.coeffs.iter() {
            if m & bit == 0 {
                continue;
            }
            let below = (m & (bit - 1)).count_ones();
            let signed = if below % 2 == 0 { c.clone() } else { -c.clone() };
            out.add_term(m & !bit, signed);
        }
        out
    }

    /// X ⌟ ω where X is a 1-form identified with a vector via the flat frame.
    pub fn interior_flat(&self, x: &AltForm<S>) -> Self {
        assert_eq!(x.degree, 1);
        let mut out = Self::zero(self.degree - 1);
        for i in 1..=7u8 {
            let xi = x.coeff(1 << (i - 1));
            if xi.is_zero() {
                continue;
            }
            out = out.add(&self.interior_basis(i).scale(&xi));
        }
        out
    }

    /// Coefficient vector in the canonical degree-k basis order.
    pub fn to_vec(&self) -> Vec<S> {
        basis_masks(self.degree)
            .into_iter()
            .map(|m| self.coeff(m))
            .collect()
    }

    pub fn from_vec(degree: u8, v: &[S]) -> Self {
        let masks = basis_masks(degree);
        assert_eq!(masks.len(), v.len());
        Self::from_terms(degree, masks.into_iter().zip(v.iter().cloned()))
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> AltForm<T> {
        AltForm::from_terms(self.degree, self.coeffs.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Max-norm of the coefficient vector as f64 (for tolerance checks).
    pub fn max_abs(&self) -> f64 {
        self.coeffs
            .values()
            .map(|c| c.to_f64().abs())
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// dx^1 ∧ … ∧ dx^7 positive (the fixed convention).
    Positive,
    Negative,
}

/// A metric together with the derived quantities the Hodge star needs.
#[derive(Debug, Clone)]
pub struct MetricData<S: Scalar> {
    pub g: Matrix<S>,
    pub g_inv: Matrix<S>,
    pub sqrt_det: S,
    diagonal: bool,
}

impl<S: Scalar> MetricData<S> {
    /// Build from a symmetric positive definite matrix. Fails for exact
    /// scalars when sqrt(det g) is irrational.
    pub fn new(g: Matrix<S>) -> Result<Self, G2Error> {
        assert_eq!(g.len(), 7);
        let d = linalg::det(&g);
        if d.is_zero() || d.is_negative_val() {
            return Err(G2Error::DegenerateStructure);
        }
        let sqrt_det = d
            .sqrt()
            .ok_or(G2Error::ExactRootUnavailable("sqrt(det g)"))?;
        let g_inv = linalg::inverse(&g).ok_or(G2Error::DegenerateStructure)?;
        let diagonal = (0..7).all(|i| (0..7).all(|j| i == j || g[i][j].is_zero()));
        Ok(MetricData {
            g,
            g_inv,
            sqrt_det,
            diagonal,
        })
    }

    pub fn euclidean() -> Self {
        MetricData {
            g: linalg::identity(7),
            g_inv: linalg::identity(7),
            sqrt_det: S::from_int(1),
            diagonal: true,
        }
    }

    /// Induced inner product ⟨dx^I, dx^J⟩_g = det of the k×k minor of g^{-1}.
    pub fn basis_inner(&self, a: Mask, b: Mask) -> S {
        if self.diagonal {
            if a != b {
                return S::zero();
            }
            let mut acc = S::from_int(1);
            for i in indices_from_mask(a) {
                acc = acc * self.g_inv[usize::from(i) - 1][usize::from(i) - 1].clone();
            }
            return acc;
        }
        let ia = indices_from_mask(a);
        let ib = indices_from_mask(b);
        debug_assert_eq!(ia.len(), ib.len());
        if ia.is_empty() {
            return S::from_int(1);
        }
        let minor: Matrix<S> = ia
            .iter()
            .map(|&i| {
                ib.iter()
                    .map(|&j| self.g_inv[usize::from(i) - 1][usize::from(j) - 1].clone())
                    .collect()
            })
            .collect();
        linalg::det(&minor)
    }

    pub fn inner(&self, x: &AltForm<S>, y: &AltForm<S>) -> S {
        assert_eq!(x.degree(), y.degree());
        let mut acc = S::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let m = self.basis_inner(a, b);
                if !m.is_zero() {
                    acc = acc + ca.clone() * cb.clone() * m;
                }
            }
        }
        acc
    }

    pub fn volume_form(&self) -> AltForm<S> {
        AltForm::from_terms(7, [(FULL_MASK, self.sqrt_det.clone())])
    }
}

/// Hodge star of `omega` for the given metric and orientation. Degree maps
/// k → 7−k and ** = identity (odd dimension).
pub fn hodge_star<S: Scalar>(
    omega: &AltForm<S>,
    metric: &MetricData<S>,
    orientation: Orientation,
) -> AltForm<S> {
    let k = omega.degree();
    let mut out = AltForm::zero(7 - k);
    if metric.diagonal {
        for (m, c) in omega.terms() {
            let comp = FULL_MASK & !m;
            let sign = wedge_sign(m, comp);
            let mut v = c.clone() * metric.basis_inner(m, m) * metric.sqrt_det.clone();
            if sign < 0 {
                v = -v;
            }
            if orientation == Orientation::Negative {
                v = -v;
            }
            out.add_term(comp, v);
        }
        return out;
    }
    for target in basis_masks(k) {
        // ⟨dx^target, omega⟩_g, the coefficient multiplying vol in dx^target ∧ *omega
        let mut ip = S::zero();
        for (b, cb) in omega.terms() {
            let m = metric.basis_inner(target, b);
            if !m.is_zero() {
                ip = ip + cb.clone() * m;
            }
        }
        if ip.is_zero() {
            continue;
        }
        let comp = FULL_MASK & !target;
        let sign = wedge_sign(target, comp);
        let mut c = ip * metric.sqrt_det.clone();
        if sign < 0 {
            c = -c;
        }
        if orientation == Orientation::Negative {
            c = -c;
        }
        out.add_term(comp, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_from_i64, Rat};

    fn star(w: &AltForm<Rat>) -> AltForm<Rat> {
        hodge_star(w, &MetricData::euclidean(), Orientation::Positive)
    }

    #[test]
    fn wedge_signs() {
        let e1 = AltForm::<Rat>::basis(&[1]);
        let e2 = AltForm::<Rat>::basis(&[2]);
        assert_eq!(e1.wedge(&e2), AltForm::basis(&[1, 2]));
        assert_eq!(e2.wedge(&e1), AltForm::basis(&[1, 2]).scale(&rat_from_i64(-1)));
        assert!(e1.wedge(&e1).is_zero());
    }

    #[test]
    fn star_of_one_is_vol() {
        let one = AltForm::<Rat>::constant(rat_from_i64(1));
        assert_eq!(star(&one), AltForm::basis(&[1, 2, 3, 4, 5, 6, 7]));
    }

    #[test]
    fn star_star_is_identity_euclidean() {
        for k in 0..=7u8 {
            for m in basis_masks(k) {
                let w = AltForm::<Rat>::from_terms(k, [(m, rat_from_i64(1))]);
                assert_eq!(star(&star(&w)), w, "failed on degree {k} mask {m:#b}");
            }
        }
    }

    #[test]
    fn interior_product_antiderivation() {
        let w = AltForm::<Rat>::basis(&[1, 3, 5]);
        let i1 = w.interior_basis(1);
        assert_eq!(i1, AltForm::basis(&[3, 5]));
        let i3 = w.interior_basis(3);
        assert_eq!(i3, AltForm::basis(&[1, 5]).scale(&rat_from_i64(-1)));
    }
}
