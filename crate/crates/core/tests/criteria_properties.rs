use std::f64::consts::{PI, TAU};

use chtri::criteria::{
    classify, classify_with_scope, compression_certificate, prop1_predicate, prop2_predicate, CertificateScope,
    Verdict, Witness,
};
use chtri::triangle::radius_of;
use chtri::Tolerance;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn predicates_depend_on_cos_alpha_only(m in 0.0f64..4.0, alpha in 0.01f64..PI) {
        prop_assert_eq!(prop1_predicate(m, alpha), prop1_predicate(m, TAU - alpha));
        prop_assert_eq!(prop2_predicate(m, alpha), prop2_predicate(m, TAU - alpha));
    }

    #[test]
    fn witness_matches_verdict(m in 0.0f64..3.5, alpha in 0.01f64..(TAU - 0.01)) {
        let t = Tolerance::default();
        for scope in [CertificateScope::Proven, CertificateScope::Extended] {
            let c = classify_with_scope(m, alpha, scope, &t).unwrap();
            let consistent = match c.verdict {
                Verdict::Discrete => matches!(c.witness, Witness::Discrete { .. }) && c.diagnostics.certificate_holds,
                Verdict::NonDiscrete => matches!(c.witness, Witness::NonDiscrete { .. }) && c.diagnostics.shimizu_deficit > 0.0,
                Verdict::Unknown => matches!(c.witness, Witness::None),
            };
            prop_assert!(consistent, "{:?}", c);
        }
    }

    #[test]
    fn extended_scope_only_adds_discrete(m in 0.0f64..3.5, alpha in 0.01f64..(TAU - 0.01)) {
        let t = Tolerance::default();
        let proven = classify(m, alpha, &t).unwrap();
        let extended = classify_with_scope(m, alpha, CertificateScope::Extended, &t).unwrap();
        if proven.verdict != Verdict::Unknown {
            prop_assert_eq!(proven.verdict, extended.verdict);
        }
    }
}

#[test]
fn proven_region_is_exactly_prop1_away_from_edges() {
    let t = Tolerance::default();
    for i in 0..40 {
        for j in 0..60 {
            let m = 0.05 + 0.075 * f64::from(i);
            let alpha = TAU * (f64::from(j) + 0.5) / 60.0;
            let near_edge = (alpha.cos() + 0.5).abs() < 1e-6 || (radius_of(m) - 2.0 / 3f64.sqrt()).abs() < 1e-6;
            if near_edge {
                continue;
            }
            let d = classify(m, alpha, &t).unwrap().verdict == Verdict::Discrete;
            assert_eq!(d, prop1_predicate(m, alpha), "m = {m}, alpha = {alpha}");
        }
    }
}

#[test]
fn certificate_monotone_in_r_on_grid() {
    // sampled, not proved
    let t = Tolerance::default();
    for k in 0..12 {
        let alpha = 2.0 * PI / 3.0 + (2.0 * PI / 3.0) * f64::from(k) / 11.0;
        let theta = (PI - alpha) / 2.0;
        let mut seen = false;
        for i in 0..80 {
            let r = 1.0 + 0.025 * f64::from(i);
            let holds = compression_certificate(r, theta, &t).unwrap().holds;
            assert!(!seen || holds, "alpha = {alpha}, r = {r}");
            seen |= holds;
        }
    }
}
