#![allow(clippy::excessive_precision, clippy::approx_constant)]

use std::f64::consts::{PI, SQRT_2};

use meanbound::bounds::{reduced_ratio, LARGE_RATIO_PROBE, NEAR_EQUAL_PROBE};
use meanbound::{
    certify, certify_with, equivalence_check, numeric_extrema, ratio, sharp_bounds, Approach,
    InequalityId, InequalitySpec, PositivePair,
};

// (alpha, beta) written out by hand
fn expected(id: InequalityId) -> (f64, f64) {
    match id {
        InequalityId::Prop1_1 => (2.0 / PI, 5.0 / 6.0),
        InequalityId::Prop1_2 => (1.0 / PI, 5.0 / 12.0),
        InequalityId::Prop1_3 => ((4.0 - PI) / ((SQRT_2 - 1.0) * PI), 2.0 / 3.0),
        InequalityId::Prop1_4 => (3.0 / (2.0 * PI), 5.0 / 8.0),
        InequalityId::Thm5_1 => (2.0 / PI, 2.0 / 3.0),
        // (π - 2√2)/(√2π - 2√2); the binary64 expression cancels, so the
        // 20-digit value is used
        InequalityId::Thm5_2 => (0.19397590583896079596, 0.25),
        InequalityId::Thm5_3 => (2.0 / PI, 2.0 / 3.0),
    }
}

#[test]
fn sharp_constants_match_hand_written_values() {
    for spec in InequalitySpec::all() {
        let b = sharp_bounds(&spec).unwrap();
        let (alpha, beta) = expected(spec.id);
        assert!(
            (b.alpha - alpha).abs() <= 1e-15 * alpha,
            "{} alpha",
            spec.id
        );
        assert!((b.beta - beta).abs() <= 1e-15 * beta, "{} beta", spec.id);
        assert_eq!(b.alpha_attained, Approach::LargeRatio);
        assert_eq!(b.beta_attained, Approach::EqualArguments);
    }
}

#[test]
fn numeric_extrema_recover_the_closed_forms() {
    for spec in InequalitySpec::all() {
        let e = numeric_extrema(&spec).unwrap();
        let (alpha, beta) = expected(spec.id);
        assert!(
            (e.inf - alpha).abs() < 1e-8,
            "{}: inf {} vs {}",
            spec.id,
            e.inf,
            alpha
        );
        assert!(
            (e.sup - beta).abs() < 1e-8,
            "{}: sup {} vs {}",
            spec.id,
            e.sup,
            beta
        );
    }
}

#[test]
fn reduced_ratio_matches_direct_ratio() {
    for spec in InequalitySpec::all() {
        for x in [1.001, 1.5, 2.0, 7.0, 1e3, 1e6] {
            let pair = PositivePair::new(x, 1.0).unwrap();
            let direct = ratio(&spec, pair).unwrap();
            let reduced = reduced_ratio(&spec, pair).unwrap();
            assert!(
                (direct - reduced).abs() < 1e-9,
                "{} at {x}: {direct} vs {reduced}",
                spec.id
            );
        }
    }
}

#[test]
fn ratio_is_undefined_at_equal_arguments() {
    let spec = InequalitySpec::get(InequalityId::Prop1_1);
    assert!(ratio(&spec, PositivePair::new(3.0, 3.0).unwrap()).is_err());
}

#[test]
fn certification_passes_at_sharp_constants() {
    for spec in InequalitySpec::all() {
        let r = certify(&spec, 100_000, 42, 1e-12).unwrap();
        assert_eq!(
            r.violations, 0,
            "{}: worst margin {} at {}",
            spec.id, r.worst_margin, r.worst_x
        );
        assert!(r.passed(), "{}: {:?}", spec.id, r.sharpness);
    }
}

#[test]
fn perturbed_constants_are_caught() {
    for spec in InequalitySpec::all() {
        let b = sharp_bounds(&spec).unwrap();
        let low_beta = certify_with(&spec, b.alpha, b.beta - 0.005, 100_000, 42, 1e-12).unwrap();
        assert!(
            low_beta.violations > 0,
            "{}: beta - 0.005 not caught",
            spec.id
        );
        let high_alpha = certify_with(&spec, b.alpha + 0.005, b.beta, 100_000, 42, 1e-12).unwrap();
        assert!(
            high_alpha.violations > 0,
            "{}: alpha + 0.005 not caught",
            spec.id
        );
    }
}

#[test]
fn sharpness_probes_use_the_documented_points() {
    let r = certify(&InequalitySpec::get(InequalityId::Prop1_3), 10, 7, 1e-12).unwrap();
    let alpha = r.sharpness.iter().find(|p| p.constant == "alpha").unwrap();
    let beta = r.sharpness.iter().find(|p| p.constant == "beta").unwrap();
    assert_eq!((alpha.x, alpha.tolerance), LARGE_RATIO_PROBE);
    assert_eq!((beta.x, beta.tolerance), NEAR_EQUAL_PROBE);
}

#[test]
fn certification_is_reproducible() {
    let spec = InequalitySpec::get(InequalityId::Thm5_1);
    let a = certify(&spec, 5_000, 9, 1e-12).unwrap();
    let b = certify(&spec, 5_000, 9, 1e-12).unwrap();
    assert_eq!(a, b);
}

#[test]
fn equivalence_holds() {
    assert!(equivalence_check());
}
