use morreylab::experiments::{
    semigroup_check, study_value, unboundedness_norm_oracle, unboundedness_potential_oracle,
    unboundedness_probe, verify_theorem1, verify_theorem2, verify_theorem3, LebesgueStudyConfig,
    MorreyStudyConfig, SemigroupConfig, StudyConfig, StudyReport, UnboundednessConfig, STUDIES,
};
use morreylab::operators::gamma_alpha;
use morreylab::Dim;
use serde_json::{json, Value};

fn config<T: serde::de::DeserializeOwned>(name: &str, patch: Value) -> T {
    let mut v = study_value(name, Some(patch)).unwrap();
    v.as_object_mut().unwrap().remove("study");
    serde_json::from_value(v).unwrap()
}

fn morrey(name: &str, patch: Value) -> MorreyStudyConfig {
    config(name, patch)
}

#[test]
fn registered_defaults_pass() {
    for name in STUDIES {
        let cfg: StudyConfig = serde_json::from_value(study_value(name, None).unwrap()).unwrap();
        let report = cfg.run(name).unwrap();
        assert!(report.pass(), "{name}: {:?}", report.checks());
    }
}

#[test]
fn fixed_grid_dilation_is_nearly_invariant() {
    // every sample on one grid, so discretization error is not scaled away
    for name in ["theorem2-dilation", "theorem3-dilation"] {
        let cfg = morrey(
            name,
            json!({ "grid": { "mode": "fixed", "resolution": 4096 },
                    "family": { "lambdas": [0.5, 1.0, 2.0] } }),
        );
        let r = if name.starts_with("theorem2") {
            verify_theorem2(name, &cfg).unwrap()
        } else {
            verify_theorem3(name, &cfg).unwrap()
        };
        assert!(r.spread.unwrap() <= 1.05, "{name}: {:?}", r.ratios());
        assert!(r.slope.unwrap().abs() <= 0.02, "{name}: {:?}", r.slope);
        assert!(
            r.spread.unwrap() > 1.0 + 1e-9,
            "fixed grids should show some discretization drift"
        );
    }
}

#[test]
fn unweighted_morrey_case_is_invariant() {
    let cfg = morrey(
        "theorem2-dilation",
        json!({ "grid": { "mode": "fixed", "half_width": 16.0, "resolution": 2048 },
                "w": { "form": "constant", "c": 1.0 },
                "p": 1.5,
                "family": { "lambdas": [0.5, 1.0, 2.0] } }),
    );
    let r = verify_theorem2("t", &cfg).unwrap();
    assert!(r.spread.unwrap() <= 1.05, "{:?}", r.ratios());
}

#[test]
fn zero_function_is_skipped() {
    let cfg = morrey(
        "theorem2-dilation",
        json!({ "family": { "base": { "shape": "zero" }, "lambdas": [1.0, 2.0] } }),
    );
    let r = verify_theorem2("zero", &cfg).unwrap();
    assert!(r
        .samples
        .iter()
        .all(|s| s.ratio.is_none() && s.skipped.is_some()));
    assert!(r.spread.is_none());
    assert!(!r.pass);
    assert_eq!(r.notes.iter().filter(|n| n.contains("skipped")).count(), 2);
    let csv = r.to_csv();
    assert!(csv.lines().skip(1).all(|l| l.ends_with(',')));

    let t1: LebesgueStudyConfig = config(
        "theorem1-dilation",
        json!({ "family": { "base": { "shape": "zero" }, "lambdas": [1.0] } }),
    );
    assert!(verify_theorem1("zero", &t1).unwrap().samples[0]
        .skipped
        .is_some());
    let t3 = morrey(
        "theorem3-dilation",
        json!({ "family": { "base": { "shape": "zero" }, "lambdas": [1.0] } }),
    );
    assert!(verify_theorem3("zero", &t3).unwrap().samples[0]
        .skipped
        .is_some());
}

#[test]
fn unit_kernel_numerators_are_gamma_times_riesz() {
    let homogeneous = morrey("theorem2-dilation", json!({}));
    let riesz = morrey(
        "theorem2-dilation",
        json!({ "operator": { "kind": "riesz", "alpha": 0.5, "kernel": null } }),
    );
    let mut riesz = riesz;
    riesz.operator.kernel = None;
    let a = verify_theorem2("a", &homogeneous).unwrap();
    let b = verify_theorem2("b", &riesz).unwrap();
    let g = gamma_alpha(0.5, Dim::One).unwrap();
    for (x, y) in a.samples.iter().zip(&b.samples) {
        assert!((x.numerator / (g * y.numerator) - 1.0).abs() <= 1e-12);
        assert_eq!(x.denominator, y.denominator);
    }
}

#[test]
fn lebesgue_case_is_translation_invariant() {
    let cfg = morrey("theorem2-translation", json!({}));
    let r = verify_theorem2("translation", &cfg).unwrap();
    assert_eq!(r.samples.len(), 5);
    assert!(r.slope.is_none());
    assert!(r.spread.unwrap() <= 1.05);
}

#[test]
fn indicator_ladder_for_the_maximal_study() {
    let cfg: LebesgueStudyConfig = config(
        "theorem1-dilation",
        json!({ "grid": { "mode": "fixed" },
        "family": { "lambdas": [1.0, 2.0, 4.0] } }),
    );
    let r = verify_theorem1("t1", &cfg).unwrap();
    assert!(r.ratios().iter().all(|x| x.is_finite() && *x > 0.0));
    assert!(r.spread.unwrap() <= 2.0);
    // M_{1/2} χ_{(-1,1)}(0) = √2 = ‖χ_{(-1,1)}‖_2
    assert!((r.ratios()[0] - 1.0).abs() <= 2e-3);
}

#[test]
fn rough_kernel_is_dominated() {
    let two_values = morrey(
        "theorem3-dilation",
        json!({ "operator": { "kind": "homogeneous-maximal", "alpha": 0.5,
                              "kernel": { "form": "two-values", "a": 2.0, "b": 0.0 } } }),
    );
    let doubled = morrey(
        "theorem3-dilation",
        json!({ "operator": { "kind": "homogeneous-maximal", "alpha": 0.5,
                              "kernel": { "form": "constant", "c": 2.0 } } }),
    );
    let a = verify_theorem3("a", &two_values).unwrap();
    let b = verify_theorem3("b", &doubled).unwrap();
    for (x, y) in a.ratios().iter().zip(b.ratios()) {
        assert!(x.is_finite() && *x <= y * (1.0 + 1e-12));
    }
}

#[test]
fn inadmissible_parameters_are_rejected() {
    let bad_weight = morrey(
        "theorem2-dilation",
        json!({ "w": { "form": "power", "beta": -0.75 } }),
    );
    assert_eq!(verify_theorem2("x", &bad_weight).unwrap_err().key(), "w");
    let above_critical = morrey("theorem2-dilation", json!({ "p": 2.0 }));
    assert_eq!(
        verify_theorem2("x", &above_critical).unwrap_err().key(),
        "p"
    );
    let wrong_kind = morrey(
        "theorem3-dilation",
        json!({ "operator": { "kind": "riesz", "alpha": 0.5 } }),
    );
    assert_eq!(
        verify_theorem3("x", &wrong_kind).unwrap_err().key(),
        "operator.kind"
    );
    let small_s: LebesgueStudyConfig = config("theorem1-dilation", json!({ "s": 1.5 }));
    assert_eq!(verify_theorem1("x", &small_s).unwrap_err().key(), "s");
}

#[test]
fn unboundedness_closed_forms() {
    let cfg: UnboundednessConfig = config("unboundedness", json!({}));
    let r = unboundedness_probe("u", &cfg).unwrap();
    let ratios = r.ratios();
    assert!(ratios[4] > ratios[0], "ratio(2^-8) > ratio(2^-4)");
    for (s, k) in r.samples.iter().zip(4..) {
        let eps = 2f64.powi(-k);
        assert_eq!(s.lambda, eps);
        let a = unboundedness_potential_oracle(0.1, eps).unwrap();
        assert!(((s.numerator - a) / a).abs() <= 1e-3);
        let b = unboundedness_norm_oracle(0.1, eps).powf(0.1);
        assert!(((s.denominator - b) / b).abs() <= 1e-3);
    }
    let bad: UnboundednessConfig = config("unboundedness", json!({ "k_min": 1 }));
    assert_eq!(unboundedness_probe("u", &bad).unwrap_err().key(), "k_min");
    let critical: UnboundednessConfig = config("unboundedness", json!({ "alpha": 1.0 }));
    assert_eq!(
        unboundedness_probe("u", &critical).unwrap_err().key(),
        "alpha"
    );
}

#[test]
fn slow_norm_convergence_at_alpha_one_half() {
    // for n/α = 2 successive increments shrink only like (k/(k+1))², so the
    // halving criterion does not hold even though the norms converge
    let cfg: UnboundednessConfig = config("unboundedness", json!({ "alpha": 0.5 }));
    let r = unboundedness_probe("u", &cfg).unwrap();
    let increments = r
        .checks
        .iter()
        .find(|c| c.name == "norm increment ratio")
        .unwrap();
    assert!(!increments.pass);
    assert!(
        increments.value > 0.6 && increments.value < 0.9,
        "{}",
        increments.value
    );
    let monotone = r
        .checks
        .iter()
        .find(|c| c.name == "non-increasing ratio steps")
        .unwrap();
    assert!(monotone.pass);
}

#[test]
fn semigroup_is_symmetric_and_linear() {
    let cfg: SemigroupConfig = config("semigroup", json!({}));
    let swapped: SemigroupConfig = config("semigroup", json!({ "beta": 0.4, "gamma": 0.3 }));
    let a = semigroup_check("a", &cfg).unwrap();
    let b = semigroup_check("b", &swapped).unwrap();
    assert!(a.discrepancy <= 0.05);
    assert!((a.discrepancy - b.discrepancy).abs() <= 1e-10);
    for (x, y) in a.points.iter().zip(&b.points) {
        assert!((x.composite - y.composite).abs() <= 1e-10 * x.composite.abs().max(1.0));
    }
    let zero: SemigroupConfig = config("semigroup", json!({ "function": { "shape": "zero" } }));
    assert_eq!(semigroup_check("z", &zero).unwrap().discrepancy, 0.0);
    let too_big: SemigroupConfig = config("semigroup", json!({ "beta": 0.6, "gamma": 0.5 }));
    assert!(semigroup_check("x", &too_big).is_err());
}

#[test]
fn reports_are_deterministic() {
    for name in ["theorem2-dilation", "unboundedness", "semigroup"] {
        let cfg: StudyConfig = serde_json::from_value(study_value(name, None).unwrap()).unwrap();
        let a = cfg.run(name).unwrap();
        let b = cfg.run(name).unwrap();
        assert_eq!(a.to_csv(), b.to_csv());
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert!(matches!(
            (&a, name),
            (StudyReport::Semigroup(_), "semigroup") | (StudyReport::Ratio(_), _)
        ));
    }
}

#[test]
fn shared_grid_with_scaled_balls() {
    // one grid for the whole ladder, so agreement is not built into the sampling
    let patch =
        json!({ "grid": { "mode": "scaled-balls", "half_width": 32.0, "resolution": 4096 } });
    let t2 = verify_theorem2("t2", &morrey("theorem2-dilation", patch.clone())).unwrap();
    let t3 = verify_theorem3("t3", &morrey("theorem3-dilation", patch.clone())).unwrap();
    let t1 = verify_theorem1("t1", &config("theorem1-dilation", patch)).unwrap();
    for r in [&t1, &t2, &t3] {
        assert!(r.pass, "{}: {:?}", r.id, r.ratios());
        assert!(r.spread.unwrap() > 1.0, "{}", r.id);
    }
}
