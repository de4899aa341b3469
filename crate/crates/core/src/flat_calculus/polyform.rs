//! Differential forms on R^7 with polynomial coefficients, and the exterior
//! calculus (d, d*, Laplacian, curl, Dirac, modified Dirac) for the constant
//! standard G2 structure.

use crate::flat_calculus::poly::Poly;
use crate::flat_calculus::FlatError;
use crate::g2_algebra::{basis_masks, AltForm, G2PointStructure, Mask, TypeLabel};
use crate::linalg::Matrix;
use crate::scalar::{ratio, Rat};
use num_traits::Zero;
use once_cell::sync::Lazy;
use std::collections::BTreeMap;

const FULL_MASK: Mask = 0b111_1111;

fn wedge_sign(a: Mask, b: Mask) -> i8 {
    debug_assert!(a & b == 0);
    let mut inv = 0u32;
    for j in 0..7 {
        if b & (1 << j) != 0 {
            inv += (a >> (j + 1)).count_ones();
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A differential form with multivariate-polynomial coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyForm {
    degree: u8,
    coeffs: BTreeMap<Mask, Poly>,
}

impl PolyForm {
    pub fn zero(degree: u8) -> Self {
        assert!(degree <= 7);
        PolyForm {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_scalar(p: Poly) -> Self {
        let mut f = PolyForm::zero(0);
        f.add_term(0, p);
        f
    }

    /// Lift a constant-coefficient form.
    pub fn from_const(form: &AltForm<Rat>) -> Self {
        let mut f = PolyForm::zero(form.degree());
        for (m, c) in form.terms() {
            f.add_term(m, Poly::constant(c.clone()));
        }
        f
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, m: Mask) -> Poly {
        self.coeffs.get(&m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &Poly)> {
        self.coeffs.iter().map(|(m, p)| (*m, p))
    }

    pub fn add_term(&mut self, m: Mask, p: Poly) {
        if p.is_zero() {
            return;
        }
        debug_assert_eq!(m.count_ones(), u32::from(self.degree));
        let slot = self.coeffs.entry(m).or_default();
        *slot = slot.add(&p);
        if slot.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (m, p) in other.coeffs.iter() {
            out.add_term(*m, p.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (m, p) in other.coeffs.iter() {
            out.add_term(*m, p.neg());
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Self {
        let mut out = PolyForm::zero(self.degree);
        for (m, p) in self.coeffs.iter() {
            out.add_term(*m, p.scale(s));
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let degree = self.degree + other.degree;
        assert!(degree <= 7);
        let mut out = PolyForm::zero(degree);
        for (a, pa) in self.coeffs.iter() {
            for (b, pb) in other.coeffs.iter() {
                if a & b != 0 {
                    continue;
                }
                let prod = pa.mul(pb);
                let prod = if wedge_sign(*a, *b) < 0 {
                    prod.neg()
                } else {
                    prod
                };
                out.add_term(a | b, prod);
            }
        }
        out
    }

    /// e_i ⌟ ω for the coordinate frame.
    pub fn interior_basis(&self, i: u8) -> Self {
        assert!(self.degree >= 1);
        let bit = 1u8 << (i - 1);
        let mut out = PolyForm::zero(self.degree - 1);
        for (m, p) in self.coeffs.iter() {
            if m & bit == 0 {
                continue;
            }
            let below = (m & (bit - 1)).count_ones();
            out.add_term(m & !bit, if below % 2 == 0 { p.clone() } else { p.neg() });
        }
        out
    }

    /// X ⌟ ω where the 1-form X is identified with a vector field by the flat
    /// metric.
    pub fn interior(&self, x: &PolyForm) -> Self {
        assert_eq!(x.degree, 1);
        let mut out = PolyForm::zero(self.degree - 1);
        for i in 1..=7u8 {
            let xi = x.coeff(1 << (i - 1));
            if xi.is_zero() {
                continue;
            }
            let hooked = self.interior_basis(i);
            for (m, p) in hooked.coeffs.iter() {
                out.add_term(*m, p.mul(&xi));
            }
        }
        out
    }

    /// Apply a constant pointwise linear map given in the canonical basis of
    /// the form degree (e.g. a type projector).
    pub fn apply_pointwise(&self, matrix: &Matrix<Rat>) -> Self {
        let masks = basis_masks(self.degree);
        assert_eq!(matrix.len(), masks.len());
        let mut out = PolyForm::zero(self.degree);
        for (col, mc) in masks.iter().enumerate() {
            let Some(p) = self.coeffs.get(mc) else {
                continue;
            };
            for (row, mr) in masks.iter().enumerate() {
                let w = &matrix[row][col];
                if !w.is_zero() {
                    out.add_term(*mr, p.scale(w));
                }
            }
        }
        out
    }

    pub fn max_poly_degree(&self) -> u32 {
        self.coeffs.values().map(Poly::total_degree).max().unwrap_or(0)
    }

    /// Evaluate to a pointwise form at a sample point (float).
    pub fn eval_f64(&self, x: &[f64; 7]) -> AltForm<f64> {
        AltForm::from_terms(
            self.degree,
            self.coeffs.iter().map(|(m, p)| (*m, p.eval_f64(x))),
        )
    }
}

/// Exterior derivative; errors on degree-7 input (there is no degree 8).
pub fn ext_d(omega: &PolyForm) -> Result<PolyForm, FlatError> {
    if omega.degree() == 7 {
        return Err(FlatError::NoSuchDegree(8));
    }
    let mut out = PolyForm::zero(omega.degree() + 1);
    for (m, p) in omega.terms() {
        for i in 1..=7u8 {
            let bit = 1u8 << (i - 1);
            if m & bit != 0 {
                continue;
            }
            let dp = p.diff(i);
            if dp.is_zero() {
                continue;
            }
            let below = (m & (bit - 1)).count_ones();
            out.add_term(m | bit, if below % 2 == 0 { dp } else { dp.neg() });
        }
    }
    Ok(out)
}

/// Hodge star for the flat euclidean structure with orientation dx^1..7.
pub fn star_flat(omega: &PolyForm) -> PolyForm {
    let mut out = PolyForm::zero(7 - omega.degree());
    for (m, p) in omega.terms() {
        let comp = FULL_MASK & !m;
        out.add_term(comp, if wedge_sign(m, comp) < 0 { p.neg() } else { p.clone() });
    }
    out
}

/// Codifferential d* = (−1)^k ⋆d⋆ on k-forms (7 dimensions); errors on
/// degree 0.
pub fn codifferential(omega: &PolyForm) -> Result<PolyForm, FlatError> {
    if omega.degree() == 0 {
        return Err(FlatError::NoSuchDegree(0));
    }
    let sds = star_flat(&ext_d(&star_flat(omega))?);
    Ok(if omega.degree() % 2 == 0 {
        sds
    } else {
        sds.scale(&ratio(-1, 1))
    })
}

/// Hodge Laplacian Δ = dd* + d*d in the geometer's (nonnegative-spectrum)
/// convention: Δ(x1²) = −2.
pub fn laplacian(omega: &PolyForm) -> PolyForm {
    let k = omega.degree();
    let mut out = PolyForm::zero(k);
    if k > 0 {
        out = out.add(&ext_d(&codifferential(omega).unwrap()).unwrap());
    }
    if k < 7 {
        out = out.add(&codifferential(&ext_d(omega).unwrap()).unwrap());
    }
    out
}

/// The constant standard structure, built once.
pub static STANDARD: Lazy<G2PointStructure<Rat>> = Lazy::new(G2PointStructure::standard);

/// The constant-structure context the G2 operators run against. The mutated
/// variant perturbs one sign in the φ/ψ tables while keeping the projectors;
/// it exists solely as a negative control for the identity suite.
#[derive(Debug, Clone)]
pub struct FlatG2 {
    pub phi: PolyForm,
    pub psi: PolyForm,
    pub phi_const: AltForm<Rat>,
    pub psi_const: AltForm<Rat>,
    mutated: bool,
}

impl FlatG2 {
    pub fn standard() -> Self {
        let s = &*STANDARD;
        FlatG2 {
            phi: PolyForm::from_const(&s.phi),
            psi: PolyForm::from_const(&s.psi),
            phi_const: s.phi.clone(),
            psi_const: s.psi.clone(),
            mutated: false,
        }
    }

    /// Negative control: flips the sign of one structure-constant entry.
    pub fn with_mutated_sign() -> Self {
        let mut ctx = Self::standard();
        let (m, c) = {
            let (m, c) = ctx.phi_const.terms().next().unwrap();
            (m, c.clone())
        };
        ctx.phi_const.add_term(m, c * ratio(-2, 1));
        ctx.phi = PolyForm::from_const(&ctx.phi_const);
        ctx.mutated = true;
        ctx
    }

    pub fn is_mutated(&self) -> bool {
        self.mutated
    }

    pub fn project(&self, w: &PolyForm, label: TypeLabel) -> PolyForm {
        let s = &*STANDARD;
        let m = match (w.degree(), label) {
            (2, TypeLabel::L7) => &s.proj2_7,
            (2, TypeLabel::L14) => &s.proj2_14,
            (3, TypeLabel::L1) => &s.proj3_1,
            (3, TypeLabel::L7) => &s.proj3_7,
            (3, TypeLabel::L27) => &s.proj3_27,
            (4, TypeLabel::L7) => {
                // Ω⁴₇ = ⋆Ω³₇ and the flat star is degree-preserving on types
                return star_flat(&self.project(&star_flat(w), TypeLabel::L7));
            }
            _ => panic!("no projector for degree {} label {:?}", w.degree(), label),
        };
        w.apply_pointwise(m)
    }

    /// curl X = ⋆(dX ∧ ψ), a 1-form.
    pub fn curl(&self, x: &PolyForm) -> PolyForm {
        assert_eq!(x.degree(), 1);
        star_flat(&ext_d(x).unwrap().wedge(&self.psi))
    }

    /// Dirac operator on spinors identified with (function, 1-form) pairs:
    /// (f, X) ↦ (d*X, df + curl X).
    pub fn dirac(&self, s: &SpinorPair) -> SpinorPair {
        let f_out = codifferential(&s.x).unwrap();
        let x_out = ext_d(&PolyForm::from_scalar(s.f.clone()))
            .unwrap()
            .add(&self.curl(&s.x));
        SpinorPair {
            f: f_out.coeff(0),
            x: x_out,
        }
    }

    /// Modified Dirac operator (f, X) ↦ ½⋆(df∧φ) + π_{1+7}(d(X⌟φ)),
    /// returned as its Ω³₁ and Ω³₇ components.
    pub fn modified_dirac(&self, s: &SpinorPair) -> (PolyForm, PolyForm) {
        let df = ext_d(&PolyForm::from_scalar(s.f.clone())).unwrap();
        let d_hook = ext_d(&self.phi.interior(&s.x)).unwrap();
        let total = star_flat(&df.wedge(&self.phi))
            .scale(&ratio(1, 2))
            .add(&self.project(&d_hook, TypeLabel::L1))
            .add(&self.project(&d_hook, TypeLabel::L7));
        (
            self.project(&total, TypeLabel::L1),
            self.project(&total, TypeLabel::L7),
        )
    }
}

/// A spinor identified with a (function, 1-form) pair.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorPair {
    pub f: Poly,
    pub x: PolyForm,
}

impl SpinorPair {
    pub fn new(f: Poly, x: PolyForm) -> Self {
        assert_eq!(x.degree(), 1);
        SpinorPair { f, x }
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.x.is_zero()
    }
}
