//! Moduli dimension bookkeeping: the Bryant–Salamon reproductions, CS
//! extended dimensions, gluing arithmetic, and the index-change consistency
//! of vdim across intervals.

use g2conifold::cone_rates::{critical_rates_dd3, Surd, SymbolicRate};
use g2conifold::link_spectra::{gray_link, LinkData, SpectralEntry};
use g2conifold::moduli::{
    builtin_conifold, kernel_change_at, vdim_ac, vdim_cs, vdim_cs_reduced, ConifoldKind,
    ConifoldTopology, End, GluingFlags, ModuliError, Regime, Smooth,
};
use g2conifold::scalar::{rat_from_i64, ratio, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sr(s: &str) -> SymbolicRate {
    SymbolicRate::parse(s).unwrap()
}

#[test]
fn bs_lambda2_s4_at_minus4_plus_eps() {
    let top = builtin_conifold("BS-Lambda2-S4").unwrap();
    let report = vdim_ac(&top, &sr("-4+")).unwrap();
    assert_eq!(report.vdim, 1);
    assert_eq!(report.smooth, Smooth::Yes);
    assert_eq!(report.regime, Regime::AcMinus4Minus3);
    assert!(report.dimension_identity_holds());
}

#[test]
fn bs_spinor_s3_at_minus3_plus_eps() {
    let top = builtin_conifold("BS-Spinor-S3").unwrap();
    let report = vdim_ac(&top, &sr("-3+")).unwrap();
    // 0 + dim(im Υ³) = 1
    assert_eq!(report.vdim, 1);
    assert_eq!(report.smooth, Smooth::Yes);
    assert_eq!(report.regime, Regime::AcMinus3ToMinus5Half);
}

#[test]
fn bs_lambda2_cp2_at_minus4_plus_eps() {
    let top = builtin_conifold("BS-Lambda2-CP2").unwrap();
    let report = vdim_ac(&top, &sr("-4+")).unwrap();
    assert_eq!(report.vdim, 1);
    assert_eq!(report.smooth, Smooth::Yes);
}

#[test]
fn bs_rigidity_extension_to_minus_eps() {
    // all three stay 1-dimensional and smooth at ν = −ε
    for name in ["BS-Lambda2-S4", "BS-Spinor-S3", "BS-Lambda2-CP2"] {
        let top = builtin_conifold(name).unwrap();
        let report = vdim_ac(&top, &sr("0-")).unwrap();
        assert_eq!(report.vdim, 1, "{name} must be rigid modulo scalings");
        assert_eq!(report.smooth, Smooth::Yes, "{name} extension");
        assert_eq!(report.regime, Regime::AcExtendedToZero);
    }
}

#[test]
fn critical_rate_refusals() {
    // exactly −3 for the spinor bundle (b³(Σ) = 2 > 0) is critical
    let top = builtin_conifold("BS-Spinor-S3").unwrap();
    assert!(matches!(
        vdim_ac(&top, &sr("-3")),
        Err(ModuliError::CriticalRate(_))
    ));
    // exactly −4 for Λ²₋(S⁴) (b²(CP³) = 1 > 0)
    let top = builtin_conifold("BS-Lambda2-S4").unwrap();
    assert!(matches!(
        vdim_ac(&top, &sr("-4")),
        Err(ModuliError::CriticalRate(_))
    ));
    // nonnegative rates rejected outright
    assert!(matches!(
        vdim_ac(&top, &sr("0+")),
        Err(ModuliError::Precondition(_))
    ));
}

#[test]
fn vdim_locally_constant_on_minus4_minus3() {
    let top = builtin_conifold("BS-Lambda2-S4").unwrap();
    for nu in ["-4+", "-7/2", "-16/5", "-3-"] {
        let report = vdim_ac(&top, &sr(nu)).unwrap();
        assert_eq!(report.vdim, i64::from(top.b_cs(3)));
        assert_eq!(report.smooth, Smooth::Yes);
    }
}

fn cs_topology(links: Vec<&str>, betti: [u32; 8]) -> ConifoldTopology {
    ConifoldTopology {
        kind: ConifoldKind::Cs,
        name: "synthetic-cs".to_string(),
        betti,
        betti_cs: None,
        im_upsilon3: None,
        im_upsilon4: None,
        im_h3cs_to_h3: None,
        ends: links
            .into_iter()
            .map(|n| End {
                link: gray_link(n).unwrap(),
                rate: sr("0+"),
            })
            .collect(),
        flags: GluingFlags::default(),
    }
}

#[test]
fn cs_extended_dimension_cancellation_cp3() {
    // one CP³ end at ν = 0+ε: the −1 scaling-mode and +1 reparametrization
    // entries cancel; extended dim = dim im(H³_cs → H³) = b³ − im Υ³
    let top = cs_topology(vec!["CP3"], [1, 0, 1, 3, 3, 1, 0, 0]);
    let report = vdim_cs(&top, &[sr("0+")]).unwrap();
    assert_eq!(report.vdim, 3); // b³ − im Υ³ = 3 − 0
    assert_eq!(report.smooth, Smooth::Yes);
    assert_eq!(report.regime, Regime::CsExtended);
    let scaling: i64 = report
        .contributions
        .iter()
        .filter(|c| c.label.contains("scaling"))
        .map(|c| c.amount)
        .sum();
    let repar: i64 = report
        .contributions
        .iter()
        .filter(|c| c.label.contains("reparametrization"))
        .map(|c| c.amount)
        .sum();
    assert_eq!(scaling, -1);
    assert_eq!(repar, 1);
    // reduced = extended − n
    let reduced = vdim_cs_reduced(&top, &[sr("0+")]).unwrap();
    assert_eq!(reduced.vdim, report.vdim - 1);
}

#[test]
fn cs_two_s3xs3_ends_smooth() {
    // two S³×S³ ends: im Υ³ = (2+2)/2 = 2; need b³ ≥ 2
    let top = cs_topology(vec!["S3xS3", "S3xS3"], [1, 0, 0, 5, 3, 0, 0, 0]);
    let report = vdim_cs(&top, &[sr("0+"), sr("0+")]).unwrap();
    assert_eq!(report.smooth, Smooth::Yes);
    // extended dim = b³ − im Υ³ = 5 − 2 (the ±2 ledger entries cancel)
    assert_eq!(report.vdim, 3);
}

#[test]
fn cs_flag_end_not_smooth_with_obstruction_ledger() {
    let top = cs_topology(vec!["Flag"], [1, 0, 2, 4, 2, 2, 0, 0]);
    let report = vdim_cs(&top, &[sr("0+")]).unwrap();
    assert_eq!(report.smooth, Smooth::No);
    // the 8-dimensional μ = 12 space enters the ledger and the vdim sum
    let spectral: i64 = report
        .contributions
        .iter()
        .filter(|c| c.label.contains("spectral"))
        .map(|c| c.amount)
        .sum();
    assert_eq!(spectral, -8);
    assert!(report
        .caveats
        .iter()
        .any(|c| c.contains("12") && c.contains("8")));
    // extended dim = (b³ − im Υ³) − 8 − 1 + 1
    assert_eq!(report.vdim, 4 - 8);
}

#[test]
fn cs_exact_zero_rate_is_critical() {
    let top = cs_topology(vec!["CP3"], [1, 0, 1, 3, 3, 1, 0, 0]);
    assert!(matches!(
        vdim_cs(&top, &[sr("0")]),
        Err(ModuliError::CriticalRate(_))
    ));
}

#[test]
fn cs_synthetic_randomized_cancellation() {
    // 100 random CS topologies with 1..=3 good ends at ν = 0+ε:
    // extended vdim = b³ − im Υ³ always (the −n/+n entries cancel)
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let names = ["CP3", "S3xS3"];
    let mut produced = 0;
    while produced < 100 {
        let n = rng.gen_range(1..=3usize);
        let links: Vec<&str> = (0..n).map(|_| names[rng.gen_range(0..2)]).collect();
        let b3_sigma: u32 = links.iter().map(|l| gray_link(l).unwrap().b(3)).sum();
        let b2_sigma: u32 = links.iter().map(|l| gray_link(l).unwrap().b(2)).sum();
        let u3 = b3_sigma / 2;
        // free data: the common kernel dimension of Υ³/Υ⁴ and im Υ⁴
        let ker = rng.gen_range(0..4u32);
        let u4 = rng.gen_range(0..=b2_sigma);
        let b3 = u3 + ker;
        let b4 = u4 + ker;
        let b2 = (b2_sigma - u4) + rng.gen_range(0..2);
        let top = cs_topology(links.clone(), [1, 0, b2, b3, b4, b2, 0, 0]);
        if top.validate().is_err() {
            continue;
        }
        produced += 1;
        let rates: Vec<SymbolicRate> = (0..n).map(|_| sr("0+")).collect();
        let report = vdim_cs(&top, &rates).unwrap();
        assert_eq!(
            report.vdim,
            i64::from(b3) - i64::from(u3),
            "links {links:?} betti b3={b3} b4={b4}"
        );
        assert_eq!(report.smooth, Smooth::Yes);
    }
}

/// Random synthetic link passing the validators: duality, b⁰ = 1, b¹ = 0,
/// even b³, sorted positive rational coexact2 spectrum on (0, 12].
fn random_link(rng: &mut ChaCha8Rng) -> LinkData {
    let b2 = rng.gen_range(0..4u32);
    let b3 = 2 * rng.gen_range(0..3u32);
    let mut mus: Vec<Rat> = (0..rng.gen_range(0..5))
        .map(|_| {
            let num = rng.gen_range(1..=48i64);
            ratio(num, 4) // μ ∈ (0, 12]
        })
        .collect();
    mus.sort();
    mus.dedup();
    let coexact2 = mus
        .into_iter()
        .map(|mu| SpectralEntry {
            mu,
            mult: rng.gen_range(1..=4),
            cite: "synthetic".to_string(),
            integrability: None,
        })
        .collect();
    LinkData {
        name: "synthetic".to_string(),
        betti: [1, 0, b2, b3, b2, 0, 1],
        coexact2,
        declared_interval: (rat_from_i64(0), rat_from_i64(12)),
        function_spectrum: vec![],
        oneform_spectrum: vec![],
        exact4_delta2: None,
        provenance: vec![],
    }
}

/// Random AC topology over the link, satisfying the exact-sequence bounds.
fn random_ac_over(link: &LinkData, rng: &mut ChaCha8Rng) -> Option<ConifoldTopology> {
    let u3 = link.b(3) / 2;
    let b3 = u3 + rng.gen_range(0..4);
    let u4 = rng.gen_range(0..=link.b(4).min(link.b(2)));
    let b4 = b3 - u3 + u4;
    let b2 = if link.b(2) >= u4 {
        (link.b(2) - u4) + rng.gen_range(0..2)
    } else {
        return None;
    };
    let top = ConifoldTopology {
        kind: ConifoldKind::Ac,
        name: "synthetic-ac".to_string(),
        betti: [1, 0, b2, b3, b4, 0, 0, 0],
        betti_cs: None,
        im_upsilon3: None,
        im_upsilon4: None,
        im_h3cs_to_h3: None,
        ends: vec![End {
            link: link.clone(),
            rate: sr("-4+"),
        }],
        flags: GluingFlags::default(),
    };
    top.validate().ok()?;
    Some(top)
}

/// Probe rates with ε offsets (always generic), spanning the regimes up to
/// the −5/2 threshold where every critical rate is counted.
fn probe_rates() -> Vec<SymbolicRate> {
    vec![
        sr("-6+"),
        sr("-5+"),
        sr("-9/2+"),
        sr("-4-"),
        sr("-4+"),
        sr("-7/2+"),
        sr("-3-"),
        sr("-3+"),
        sr("-14/5+"),
        sr("-13/5+"),
        sr("-5/2-"),
    ]
}

#[test]
fn index_change_consistency_over_random_links() {
    // vdim differences across intervals equal the accumulated 𝒦
    // multiplicities, including the −3/−4 topological jumps
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut tested = 0;
    while tested < 200 {
        let link = random_link(&mut rng);
        let Some(top) = random_ac_over(&link, &mut rng) else {
            continue;
        };
        tested += 1;
        let rates = probe_rates();
        let reports: Vec<_> = rates
            .iter()
            .map(|nu| match vdim_ac(&top, nu) {
                Ok(r) => r,
                Err(e) => panic!("vdim_ac failed at {nu}: {e}"),
            })
            .collect();
        for i in 0..rates.len() {
            for j in (i + 1)..rates.len() {
                let (lo, hi) = (&rates[i], &rates[j]);
                // accumulated jumps: spectral 𝒦 over (lo, hi) plus the
                // topological kernel changes at −4 and −3
                let set = critical_rates_dd3(&link, (lo, hi)).unwrap();
                let mut acc: i64 = set
                    .entries
                    .iter()
                    .filter(|e| e.origin.name() == "spectral")
                    .map(|e| i64::from(e.multiplicity))
                    .sum();
                let minus3 = Surd::from_int(-3);
                let minus4 = Surd::from_int(-4);
                if g2conifold::cone_rates::in_open_interval(&minus3, lo, hi) {
                    acc += kernel_change_at(-3, ConifoldKind::Ac, &top).unwrap();
                }
                if g2conifold::cone_rates::in_open_interval(&minus4, lo, hi) {
                    acc += kernel_change_at(-4, ConifoldKind::Ac, &top).unwrap();
                }
                assert_eq!(
                    reports[j].vdim - reports[i].vdim,
                    acc,
                    "link {:?} interval ({lo}, {hi})",
                    link.betti
                );
            }
        }
    }
}

#[test]
fn cs_spectral_accumulation_is_minus_ac() {
    // for identical data the CS-side accumulation equals minus the AC one
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..50 {
        let link = random_link(&mut rng);
        let Some(top) = random_ac_over(&link, &mut rng) else {
            continue;
        };
        for lam in [-3i64, -4] {
            let ac = kernel_change_at(lam, ConifoldKind::Ac, &top).unwrap();
            let cs = kernel_change_at(lam, ConifoldKind::Cs, &top).unwrap();
            assert_eq!(ac, -cs);
        }
    }
}

#[test]
fn lambda_pairing_symmetry_random() {
    // total spectral multiplicity over (λ1, λ2) equals that over
    // (−7−λ2, −7−λ1): the λ ↔ −7−λ root pairing
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let link = random_link(&mut rng);
        let (lo, hi) = (sr("-3"), sr("0+"));
        let a = critical_rates_dd3(&link, (&lo, &hi)).unwrap();
        let (mlo, mhi) = (sr("-7-"), sr("-4"));
        let b = critical_rates_dd3(&link, (&mlo, &mhi)).unwrap();
        assert_eq!(a.spectral_multiplicity(), b.spectral_multiplicity());
    }
}
