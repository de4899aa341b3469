//! Symbolic coefficient relations for d, d*, and Δ on homogeneous cone forms
//! γ = r^λ (r^{k−1} dr ∧ α + r^k β), with λ kept as a polynomial variable.
//!
//! The relations are formal in the link forms α, β: symbols are words in
//! d_Σ, d*_Σ applied to α or β, with d_Σd_Σ = d*_Σd*_Σ = 0 the only
//! simplification. Composing the d and d* relation sets symbolically
//! reproduces the Laplacian coefficients, which is exactly the oracle the
//! Δ relation test uses.

use crate::cone_rates::{RateError, Surd};
use crate::scalar::{rat_from_i64, rat_to_string, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Univariate polynomial in λ over Q, dense ascending coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LambdaPoly(Vec<Rat>);

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly(Vec::new())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LambdaPoly(vec![c])
        }
    }

    pub fn one() -> Self {
        Self::constant(rat_from_i64(1))
    }

    /// λ + c.
    pub fn lambda_plus(c: i64) -> Self {
        LambdaPoly(vec![rat_from_i64(c), rat_from_i64(1)])
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let coeffs = (0..n)
            .map(|i| {
                self.0.get(i).cloned().unwrap_or_else(Rat::zero)
                    + other.0.get(i).cloned().unwrap_or_else(Rat::zero)
            })
            .collect();
        LambdaPoly(coeffs).trim()
    }

    pub fn neg(&self) -> Self {
        LambdaPoly(self.0.iter().map(|c| -c.clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                coeffs[i + j] += a.clone() * b.clone();
            }
        }
        LambdaPoly(coeffs).trim()
    }

    /// Substitute λ ↦ λ + c (used when an operator lowers the homogeneity
    /// order before the next one applies).
    pub fn shift(&self, c: i64) -> Self {
        // evaluate via Horner on (λ + c)
        let mut out = Self::zero();
        let x = Self::lambda_plus(c);
        for coeff in self.0.iter().rev() {
            out = out.mul(&x).add(&Self::constant(coeff.clone()));
        }
        out
    }

    /// Evaluate at an exact quadratic-surd value of λ.
    pub fn eval_surd(&self, lambda: &Surd) -> Surd {
        let mut out = Surd::from_int(0);
        for coeff in self.0.iter().rev() {
            out = out
                .checked_mul(lambda)
                .expect("same field")
                .checked_add(&Surd::from_rat(coeff.clone()))
                .expect("same field");
        }
        out
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", rat_to_string(c))?,
                1 => write!(f, "{}·λ", rat_to_string(c))?,
                _ => write!(f, "{}·λ^{}", rat_to_string(c), i)?,
            }
        }
        Ok(())
    }
}

/// α (the dr-companion (k−1)-form on Σ) or β (the tangential k-form).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SymbolBase {
    Alpha,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DOp {
    D,
    DStar,
}

/// A word of link operators applied to a base form, e.g. d*_Σ d_Σ α.
/// Words with a repeated consecutive operator are identically zero and are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinkSymbol {
    pub base: SymbolBase,
    /// Innermost first.
    pub ops: Vec<DOp>,
}

impl LinkSymbol {
    pub fn alpha() -> Self {
        LinkSymbol {
            base: SymbolBase::Alpha,
            ops: Vec::new(),
        }
    }
    pub fn beta() -> Self {
        LinkSymbol {
            base: SymbolBase::Beta,
            ops: Vec::new(),
        }
    }
    /// Apply one more operator on the outside; `None` when the word dies
    /// (d_Σ d_Σ = 0, d*_Σ d*_Σ = 0).
    fn apply(&self, op: DOp) -> Option<Self> {
        if self.ops.last() == Some(&op) {
            return None;
        }
        let mut ops = self.ops.clone();
        ops.push(op);
        Some(LinkSymbol {
            base: self.base,
            ops,
        })
    }
}

impl fmt::Display for LinkSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for op in self.ops.iter().rev() {
            match op {
                DOp::D => write!(f, "dΣ ")?,
                DOp::DStar => write!(f, "d*Σ ")?,
            }
        }
        match self.base {
            SymbolBase::Alpha => write!(f, "α"),
            SymbolBase::Beta => write!(f, "β"),
        }
    }
}

/// A formal linear combination of link symbols with λ-polynomial
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinkExpr(BTreeMap<LinkSymbol, LambdaPoly>);

impl LinkExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(sym: LinkSymbol, coeff: LambdaPoly) -> Self {
        let mut e = Self::zero();
        e.add_term(sym, coeff);
        e
    }

    pub fn add_term(&mut self, sym: LinkSymbol, coeff: LambdaPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.0.entry(sym).or_default();
        *entry = entry.add(&coeff);
        if entry.is_zero() {
            let dead: Vec<LinkSymbol> = self
                .0
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in dead {
                self.0.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in other.0.iter() {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LinkExpr(self.0.iter().map(|(s, c)| (s.clone(), c.neg())).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, p: &LambdaPoly) -> Self {
        let mut out = Self::zero();
        for (s, c) in self.0.iter() {
            out.add_term(s.clone(), c.mul(p));
        }
        out
    }

    /// Apply d_Σ or d*_Σ to the whole expression.
    pub fn apply_op(&self, op: DOp) -> Self {
        let mut out = Self::zero();
        for (s, c) in self.0.iter() {
            if let Some(s2) = s.apply(op) {
                out.add_term(s2, c.clone());
            }
        }
        out
    }

    /// Substitute λ ↦ λ + c in every coefficient.
    pub fn shift(&self, c: i64) -> Self {
        LinkExpr(self.0.iter().map(|(s, p)| (s.clone(), p.shift(c))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LinkSymbol, &LambdaPoly)> {
        self.0.iter()
    }
}

impl fmt::Display for LinkExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, c) in self.0.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})·{s}")?;
        }
        Ok(())
    }
}

/// The coefficient relations for d and d* of a homogeneous k-form
/// γ = r^λ (r^{k−1} dr ∧ α + r^k β):
///
///   dγ  = r^{λ+k−1} dr ∧ ((λ+k)β − d_Σ α) + r^{λ+k} d_Σ β
///   d*γ = r^{λ+k−3} dr ∧ (−d*_Σ α) + r^{λ+k−2} (−(λ−k+7)α + d*_Σ β)
///
/// Both outputs are homogeneous of order λ−1 in their own degree.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousRelations {
    pub k: u8,
    pub d_dr: LinkExpr,
    pub d_tan: LinkExpr,
    pub dstar_dr: LinkExpr,
    pub dstar_tan: LinkExpr,
}

/// Apply the d relation to a formal (α-slot, β-slot) pair of degree k, whose
/// homogeneity order is λ + shift.
fn apply_d(pair: (&LinkExpr, &LinkExpr), k: i64, shift: i64) -> (LinkExpr, LinkExpr) {
    let (a, b) = pair;
    let dr = b
        .scale(&LambdaPoly::lambda_plus(k + shift))
        .sub(&a.apply_op(DOp::D));
    let tan = b.apply_op(DOp::D);
    (dr, tan)
}

fn apply_dstar(pair: (&LinkExpr, &LinkExpr), k: i64, shift: i64) -> (LinkExpr, LinkExpr) {
    let (a, b) = pair;
    let dr = a.apply_op(DOp::DStar).neg();
    let tan = a
        .scale(&LambdaPoly::lambda_plus(shift - k + 7))
        .neg()
        .add(&b.apply_op(DOp::DStar));
    (dr, tan)
}

/// The d/d* coefficient relation set for homogeneous k-forms.
pub fn homogeneous_d(k: u8) -> HomogeneousRelations {
    assert!(k <= 7);
    let alpha = LinkExpr::term(LinkSymbol::alpha(), LambdaPoly::one());
    let beta = LinkExpr::term(LinkSymbol::beta(), LambdaPoly::one());
    let (d_dr, d_tan) = apply_d((&alpha, &beta), i64::from(k), 0);
    let (dstar_dr, dstar_tan) = apply_dstar((&alpha, &beta), i64::from(k), 0);
    HomogeneousRelations {
        k,
        d_dr,
        d_tan,
        dstar_dr,
        dstar_tan,
    }
}

/// Symbolic composition (dd* + d*d) of the two relation sets: the Δ
/// coefficients, derived rather than transcribed.
pub fn laplacian_relations(k: u8) -> (LinkExpr, LinkExpr) {
    let rel = homogeneous_d(k);
    let k = i64::from(k);
    // d* then d: d*γ is a (k−1)-form of order λ−1
    let via_dstar = apply_d((&rel.dstar_dr, &rel.dstar_tan), k - 1, -1);
    // d then d*: dγ is a (k+1)-form of order λ−1
    let via_d = apply_dstar((&rel.d_dr, &rel.d_tan), k + 1, -1);
    (via_dstar.0.add(&via_d.0), via_dstar.1.add(&via_d.1))
}

/// The closed-and-coclosed system for homogeneous k-forms, read off from the
/// d/d* relations: each pair is (lhs, rhs) with lhs = rhs the condition.
///
///   d_Σ α = (λ+k) β,  d*_Σ α = 0,  d_Σ β = 0,  d*_Σ β = (λ−k+7) α.
pub fn closed_coclosed_relations(k: u8) -> Vec<(LinkExpr, LinkExpr)> {
    let rel = homogeneous_d(k);
    let alpha = LinkExpr::term(LinkSymbol::alpha(), LambdaPoly::one());
    let beta = LinkExpr::term(LinkSymbol::beta(), LambdaPoly::one());
    // dγ = 0: dr-part (λ+k)β − d_Σα = 0 and tangential d_Σβ = 0
    let d_alpha = LinkExpr::term(
        LinkSymbol::alpha().apply(DOp::D).unwrap(),
        LambdaPoly::one(),
    );
    let dstar_beta = LinkExpr::term(
        LinkSymbol::beta().apply(DOp::DStar).unwrap(),
        LambdaPoly::one(),
    );
    vec![
        (
            d_alpha,
            beta.scale(&LambdaPoly::lambda_plus(i64::from(k))),
        ),
        (rel.dstar_dr.neg(), LinkExpr::zero()), // d*_Σ α = 0
        (rel.d_tan, LinkExpr::zero()),          // d_Σ β = 0
        (
            dstar_beta,
            alpha.scale(&LambdaPoly::lambda_plus(7 - i64::from(k))),
        ),
    ]
}

/// Symbolic descriptor of a link form slot inside a homogeneous form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkFormSpec {
    pub degree: u8,
    pub closed: Option<bool>,
    pub coclosed: Option<bool>,
    /// Eigenvalue tag for Δ_Σ, as a display string ("harmonic", "Δ_Σ = 2", …).
    pub eigenvalue_tag: Option<String>,
}

/// γ = r^λ (r^{k−1} dr ∧ α + r^k β) with symbolic descriptors for α and β.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousForm {
    pub k: u8,
    pub lambda: Surd,
    pub alpha_spec: LinkFormSpec,
    pub beta_spec: LinkFormSpec,
}

impl HomogeneousForm {
    pub fn new(
        k: u8,
        lambda: Surd,
        alpha_spec: LinkFormSpec,
        beta_spec: LinkFormSpec,
    ) -> Result<Self, RateError> {
        if k == 0 || k > 7 || alpha_spec.degree != k - 1 || beta_spec.degree != k {
            return Err(RateError::ParseError(format!(
                "descriptor degrees must be {} and {} for a degree-{} homogeneous form",
                k.saturating_sub(1),
                k,
                k
            )));
        }
        Ok(HomogeneousForm {
            k,
            lambda,
            alpha_spec,
            beta_spec,
        })
    }
}
