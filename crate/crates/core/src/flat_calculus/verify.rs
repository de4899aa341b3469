//! Machine verification of the coordinate identities satisfied by the flat
//! G2 operators. Every check is an exact polynomial identity; the symbolic
//! expansion is its own oracle.
//!
//! Instances that must satisfy side conditions (coclosedness, pure type) are
//! drawn from explicitly parametrized families: either image-of-operator
//! constructions or the exact nullspace of the side-condition equations on a
//! finite-dimensional polynomial space. Exact arithmetic makes kernels
//! measure-zero targets for rejection sampling, so we never sample-and-reject.

use crate::flat_calculus::poly::{Mono, Poly};
use crate::flat_calculus::polyform::{
    codifferential, ext_d, laplacian, star_flat, FlatG2, PolyForm, SpinorPair, STANDARD,
};
use crate::g2_algebra::{basis_masks, AltForm, TypeLabel};
use crate::linalg;
use crate::scalar::{rat_from_i64, ratio, Rat};
use num_traits::Zero;
use once_cell::sync::Lazy;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// One identity family of the verification suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// coclosed μ ∈ Ω²₁₄ ⇒ dμ ∧ φ = 0 and dμ ∧ ψ = 0
    Special14,
    /// η ∈ Ω³₂₇: π₇(dη) and π₇(d*η) both reduce to the divergence of the
    /// associated symmetric tensor (so each vanishes iff the other does)
    Special27Equivalence,
    /// π₇ d*d on Ω²₇ corresponds to dd* + (2/3) d*d on 1-forms
    SpecialElliptic,
    /// modified Dirac equals the usual Dirac under the type isomorphism
    ModifiedDiracFormula,
    /// Dirac squared equals the Hodge Laplacian componentwise
    DiracSquare,
    /// π₁(dμ) = −(3/7)(d*X)φ and π₇(dμ) = ½⋆((curl X)∧φ) for μ = X⌟φ
    Do27,
    /// curl(df) = 0, d*(curl Y) = 0, curl curl Y = −dd*Y + ΔY
    CurlIdentities,
}

pub const ALL_FAMILIES: [Family; 7] = [
    Family::Special14,
    Family::Special27Equivalence,
    Family::SpecialElliptic,
    Family::ModifiedDiracFormula,
    Family::DiracSquare,
    Family::Do27,
    Family::CurlIdentities,
];

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Special14 => "special14",
            Family::Special27Equivalence => "special27_equivalence",
            Family::SpecialElliptic => "special_elliptic",
            Family::ModifiedDiracFormula => "modified_dirac_formula",
            Family::DiracSquare => "dirac_square",
            Family::Do27 => "do27",
            Family::CurlIdentities => "curl_identities",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: String,
    pub instances: u32,
    pub failures: u32,
    pub construction_failures: u32,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub count: u32,
    pub degree_cap: u32,
    pub mutated: bool,
    pub families: Vec<FamilyReport>,
    pub total_failures: u32,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.total_failures == 0
    }
    /// A family is exhausted when it produced no usable instance at all.
    pub fn construction_exhausted(&self) -> bool {
        self.families
            .iter()
            .any(|f| f.instances == 0 && f.construction_failures > 0)
    }
}

fn rand_sparse_poly(rng: &mut ChaCha8Rng, max_deg: u32) -> Poly {
    let mut p = Poly::zero();
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let mut e: Mono = [0; 7];
        let d = rng.gen_range(0..=max_deg);
        for _ in 0..d {
            e[rng.gen_range(0..7)] += 1;
        }
        p.add_term(e, rat_from_i64(rng.gen_range(-6..=6)));
    }
    p
}

fn rand_polyform(rng: &mut ChaCha8Rng, degree: u8, max_deg: u32) -> PolyForm {
    let mut f = PolyForm::zero(degree);
    for m in basis_masks(degree) {
        if rng.gen_bool(0.6) {
            f.add_term(m, rand_sparse_poly(rng, max_deg));
        }
    }
    f
}

/// Constant-coefficient basis of the 14-dimensional type component of Λ².
static TYPE14_BASIS: Lazy<Vec<AltForm<Rat>>> = Lazy::new(|| {
    let s = &*STANDARD;
    let cols: Vec<Vec<Rat>> = (0..21)
        .map(|c| (0..21).map(|r| s.proj2_14[r][c].clone()).collect())
        .collect();
    // column space of the projector, reduced to a basis
    let mat: Vec<Vec<Rat>> = cols.clone();
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    for col in mat {
        let mut trial = basis.clone();
        trial.push(col.clone());
        if linalg::rank(&trial) > basis.len() {
            basis.push(col);
        }
    }
    assert_eq!(basis.len(), 14);
    basis
        .into_iter()
        .map(|v| AltForm::from_vec(2, &v))
        .collect()
});

/// Monomials of total degree ≤ cap, in a fixed order.
fn monomials_up_to(cap: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    fn rec(pos: usize, left: u32, cur: &mut Mono, out: &mut Vec<Mono>) {
        if pos == 7 {
            out.push(*cur);
            return;
        }
        for d in 0..=left {
            cur[pos] = d as u8;
            rec(pos + 1, left - d, cur, out);
        }
        cur[pos] = 0;
    }
    rec(0, cap, &mut [0; 7], &mut out);
    out
}

/// Exact nullspace basis for { μ : μ pointwise of type 14, d*μ = 0 } on
/// polynomial coefficients of degree ≤ 2. The family is the span.
static SPECIAL14_FAMILY: Lazy<Vec<PolyForm>> = Lazy::new(|| {
    let type14 = &*TYPE14_BASIS;
    let mons = monomials_up_to(2);
    // unknowns: (basis element a, monomial e) ↦ coefficient
    let unknowns: Vec<(usize, Mono)> = (0..type14.len())
        .flat_map(|a| mons.iter().map(move |e| (a, *e)))
        .collect();
    // d*μ lands in 1-forms with degree ≤ 1 coefficients
    let out_mons = monomials_up_to(1);
    let mut row_index = std::collections::BTreeMap::new();
    for i in 1..=7u8 {
        for e in &out_mons {
            let key = (1u8 << (i - 1), *e);
            let next = row_index.len();
            row_index.insert(key, next);
        }
    }
    let mut matrix = vec![vec![Rat::zero(); unknowns.len()]; row_index.len()];
    for (col, (a, e)) in unknowns.iter().enumerate() {
        let mu = {
            let mut f = PolyForm::zero(2);
            for (m, c) in type14[*a].terms() {
                f.add_term(m, Poly::monomial(*e, c.clone()));
            }
            f
        };
        let ds = codifferential(&mu).unwrap();
        for (m, p) in ds.terms() {
            for (mono, c) in p.terms() {
                let row = row_index[&(m, *mono)];
                matrix[row][col] = c.clone();
            }
        }
    }
    let null = linalg::nullspace(&matrix);
    null.into_iter()
        .map(|v| {
            let mut f = PolyForm::zero(2);
            for (col, coeff) in v.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let (a, e) = &unknowns[col];
                for (m, c) in type14[*a].terms() {
                    f.add_term(m, Poly::monomial(*e, c.clone() * coeff.clone()));
                }
            }
            f
        })
        .filter(|f| !f.is_zero())
        .collect()
});

/// Fully antisymmetric table of φ's coefficients, 1-based indices.
fn phi_table(ctx: &FlatG2) -> [[[Rat; 8]; 8]; 8] {
    let mut t: [[[Rat; 8]; 8]; 8] = std::array::from_fn(|_| {
        std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()))
    });
    for (m, c) in ctx.phi_const.terms() {
        let idx = crate::g2_algebra::indices_from_mask(m);
        let (i, j, k) = (idx[0] as usize, idx[1] as usize, idx[2] as usize);
        let perms: [([usize; 3], i8); 6] = [
            ([i, j, k], 1),
            ([j, k, i], 1),
            ([k, i, j], 1),
            ([j, i, k], -1),
            ([i, k, j], -1),
            ([k, j, i], -1),
        ];
        for (p, s) in perms {
            t[p[0]][p[1]][p[2]] = if s > 0 { c.clone() } else { -c.clone() };
        }
    }
    t
}

/// η built from a symmetric traceless polynomial tensor h via
/// η_ijk = h_ip φ_pjk + h_jp φ_pki + h_kp φ_pij; pointwise type 27.
fn eta_from_h(ctx: &FlatG2, h: &[[Poly; 7]; 7]) -> PolyForm {
    let t = phi_table(ctx);
    let mut eta = PolyForm::zero(3);
    for i in 1..=7usize {
        for j in (i + 1)..=7 {
            for k in (j + 1)..=7 {
                let mut coeff = Poly::zero();
                for p in 1..=7usize {
                    coeff = coeff
                        .add(&h[i - 1][p - 1].scale(&t[p][j][k]))
                        .add(&h[j - 1][p - 1].scale(&t[p][k][i]))
                        .add(&h[k - 1][p - 1].scale(&t[p][i][j]));
                }
                eta.add_term(
                    crate::g2_algebra::mask_from_indices(&[i as u8, j as u8, k as u8]),
                    coeff,
                );
            }
        }
    }
    eta
}

fn rand_sym_traceless(rng: &mut ChaCha8Rng, max_deg: u32) -> [[Poly; 7]; 7] {
    let mut h: [[Poly; 7]; 7] = std::array::from_fn(|_| std::array::from_fn(|_| Poly::zero()));
    for i in 0..7 {
        for j in i..7 {
            let p = rand_sparse_poly(rng, max_deg);
            h[i][j] = p.clone();
            h[j][i] = p;
        }
    }
    // enforce trace 0 against the last diagonal entry
    let mut tr = Poly::zero();
    for (i, row) in h.iter().enumerate().take(6) {
        tr = tr.add(&row[i]);
    }
    h[6][6] = tr.neg();
    h
}

fn divergence(h: &[[Poly; 7]; 7]) -> PolyForm {
    let mut out = PolyForm::zero(1);
    for k in 1..=7u8 {
        let mut c = Poly::zero();
        for p in 1..=7u8 {
            c = c.add(&h[usize::from(p) - 1][usize::from(k) - 1].diff(p));
        }
        out.add_term(1 << (k - 1), c);
    }
    out
}

/// Extract X from ω = X⌟φ ∈ Ω²₇ (Gram of the hooks is 3·Id).
fn vector_from_type7_2form(ctx: &FlatG2, w: &PolyForm) -> PolyForm {
    let mut out = PolyForm::zero(1);
    for i in 1..=7u8 {
        let hook = ctx.phi_const.interior_basis(i);
        let mut acc = Poly::zero();
        for (m, c) in hook.terms() {
            acc = acc.add(&w.coeff(m).scale(c));
        }
        out.add_term(1 << (i - 1), acc.scale(&ratio(1, 3)));
    }
    out
}

/// Extract Y from ω = Y∧φ-component of a 4-form (Gram is 4·Id).
fn vector_from_type7_4form(ctx: &FlatG2, w: &PolyForm) -> PolyForm {
    let mut out = PolyForm::zero(1);
    for i in 1..=7u8 {
        let basis = PolyForm::from_const(&AltForm::basis(&[i])).wedge(&ctx.phi);
        let mut acc = Poly::zero();
        for (m, c) in basis.terms() {
            let cc = c.terms().next().map(|(_, v)| v.clone()).unwrap_or_default();
            acc = acc.add(&w.coeff(m).scale(&cc));
        }
        out.add_term(1 << (i - 1), acc.scale(&ratio(1, 4)));
    }
    out
}

fn run_family(ctx: &FlatG2, family: Family, seed: u64, count: u32, cap: u32) -> FamilyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (family as u64).wrapping_mul(0x9e37_79b9));
    let mut failures = 0u32;
    let mut construction_failures = 0u32;
    let mut instances = 0u32;
    for _ in 0..count {
        let ok = match family {
            Family::Special14 => {
                let basis = &*SPECIAL14_FAMILY;
                if basis.is_empty() {
                    construction_failures += 1;
                    continue;
                }
                let mut mu = PolyForm::zero(2);
                for _ in 0..4 {
                    let pick = rng.gen_range(0..basis.len());
                    mu = mu.add(&basis[pick].scale(&rat_from_i64(rng.gen_range(-5..=5))));
                }
                if mu.is_zero() {
                    construction_failures += 1;
                    continue;
                }
                let dmu = ext_d(&mu).unwrap();
                dmu.wedge(&ctx.phi).is_zero() && dmu.wedge(&ctx.psi).is_zero()
            }
            Family::Special27Equivalence => {
                let h = rand_sym_traceless(&mut rng, cap.min(2));
                let eta = eta_from_h(ctx, &h);
                if eta.is_zero() {
                    construction_failures += 1;
                    continue;
                }
                let div = divergence(&h);
                // π₇(d*η) ↔ −(2/3)·div h and π₇(dη) ↔ −(1/2)·div h; the
                // equivalence of the two vanishing conditions follows
                let v_costar = vector_from_type7_2form(
                    ctx,
                    &ctx.project(&codifferential(&eta).unwrap(), TypeLabel::L7),
                );
                let v_d = vector_from_type7_4form(
                    ctx,
                    &ctx.project(&ext_d(&eta).unwrap(), TypeLabel::L7),
                );
                v_costar == div.scale(&ratio(-2, 3)) && v_d == div.scale(&ratio(-1, 2))
            }
            Family::SpecialElliptic => {
                let x = rand_polyform(&mut rng, 1, cap);
                let mu = ctx.phi.interior(&x);
                let lhs = ctx.project(
                    &codifferential(&ext_d(&mu).unwrap()).unwrap(),
                    TypeLabel::L7,
                );
                let y = ext_d(&codifferential(&x).unwrap())
                    .unwrap()
                    .add(&codifferential(&ext_d(&x).unwrap()).unwrap().scale(&ratio(2, 3)));
                lhs == ctx.phi.interior(&y)
            }
            Family::ModifiedDiracFormula => {
                let s = SpinorPair::new(rand_sparse_poly(&mut rng, cap), rand_polyform(&mut rng, 1, cap));
                let (p1, p7) = ctx.modified_dirac(&s);
                // Ω³₁ component carries −(3/7) d*X, Ω³₇ carries ½(df + curl X)
                let dstar_x = codifferential(&s.x).unwrap().coeff(0);
                let expect1 = {
                    let mut f = PolyForm::zero(3);
                    for (m, c) in ctx.phi_const.terms() {
                        f.add_term(m, dstar_x.scale(&(c.clone() * ratio(-3, 7))));
                    }
                    f
                };
                let df = ext_d(&PolyForm::from_scalar(s.f.clone())).unwrap();
                let expect7 = star_flat(&df.add(&ctx.curl(&s.x)).wedge(&ctx.phi)).scale(&ratio(1, 2));
                // outputs are pure-type by construction of the projectors;
                // the formulas are the content being checked
                p1 == expect1 && p7 == expect7
            }
            Family::DiracSquare => {
                let s = SpinorPair::new(rand_sparse_poly(&mut rng, cap), rand_polyform(&mut rng, 1, cap));
                let d2 = ctx.dirac(&ctx.dirac(&s));
                let lap_f = laplacian(&PolyForm::from_scalar(s.f.clone())).coeff(0);
                let lap_x = laplacian(&s.x);
                d2.f == lap_f && d2.x == lap_x
            }
            Family::Do27 => {
                let x = rand_polyform(&mut rng, 1, cap);
                let mu = ctx.phi.interior(&x);
                let dmu = ext_d(&mu).unwrap();
                let p1 = ctx.project(&dmu, TypeLabel::L1);
                let p7 = ctx.project(&dmu, TypeLabel::L7);
                let dstar_x = codifferential(&x).unwrap().coeff(0);
                let expect1 = {
                    let mut f = PolyForm::zero(3);
                    for (m, c) in ctx.phi_const.terms() {
                        f.add_term(m, dstar_x.scale(&(c.clone() * ratio(-3, 7))));
                    }
                    f
                };
                let expect7 =
                    star_flat(&ctx.curl(&x).wedge(&ctx.phi)).scale(&ratio(1, 2));
                // the two biconditionals of the corollary follow because the
                // right-hand sides vanish iff d*X (resp. curl X) does
                p1 == expect1 && p7 == expect7
            }
            Family::CurlIdentities => {
                let f = rand_sparse_poly(&mut rng, cap);
                let y = rand_polyform(&mut rng, 1, cap);
                let c1 = ctx
                    .curl(&ext_d(&PolyForm::from_scalar(f)).unwrap())
                    .is_zero();
                let c2 = codifferential(&ctx.curl(&y)).unwrap().is_zero();
                let lhs = ctx.curl(&ctx.curl(&y));
                let rhs = laplacian(&y).sub(&ext_d(&codifferential(&y).unwrap()).unwrap());
                c1 && c2 && lhs == rhs
            }
        };
        instances += 1;
        if !ok {
            failures += 1;
        }
    }
    FamilyReport {
        family: family.name().to_string(),
        instances,
        failures,
        construction_failures,
        seed,
    }
}

/// Run the full identity suite: `count` random instances of each family.
pub fn verify_identities(ctx: &FlatG2, seed: u64, count: u32, degree_cap: u32) -> VerifyReport {
    let families: Vec<FamilyReport> = ALL_FAMILIES
        .iter()
        .map(|&f| run_family(ctx, f, seed, count, degree_cap))
        .collect();
    let total_failures = families.iter().map(|f| f.failures).sum();
    VerifyReport {
        seed,
        count,
        degree_cap,
        mutated: ctx.is_mutated(),
        families,
        total_failures,
    }
}
