use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::report::StudyReport;
use super::studies::{
    semigroup_check, unboundedness_probe, verify_theorem1, verify_theorem2, verify_theorem3,
    LebesgueStudyConfig, MorreyStudyConfig, SemigroupConfig, UnboundednessConfig,
};
use crate::error::Result;

/// A study together with its parameters, tagged by `"study"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "study", rename_all = "kebab-case")]
pub enum StudyConfig {
    Theorem1(LebesgueStudyConfig),
    Theorem2(MorreyStudyConfig),
    Theorem3(MorreyStudyConfig),
    Unboundedness(UnboundednessConfig),
    Semigroup(SemigroupConfig),
}

impl StudyConfig {
    pub fn run(&self, id: &str) -> Result<StudyReport> {
        Ok(match self {
            StudyConfig::Theorem1(c) => StudyReport::Ratio(verify_theorem1(id, c)?),
            StudyConfig::Theorem2(c) => StudyReport::Ratio(verify_theorem2(id, c)?),
            StudyConfig::Theorem3(c) => StudyReport::Ratio(verify_theorem3(id, c)?),
            StudyConfig::Unboundedness(c) => StudyReport::Ratio(unboundedness_probe(id, c)?),
            StudyConfig::Semigroup(c) => StudyReport::Semigroup(semigroup_check(id, c)?),
        })
    }

    /// Replaces the grid resolution.
    pub fn set_resolution(&mut self, resolution: usize) {
        match self {
            StudyConfig::Theorem1(c) => c.grid.resolution = resolution,
            StudyConfig::Theorem2(c) | StudyConfig::Theorem3(c) => c.grid.resolution = resolution,
            StudyConfig::Unboundedness(c) => c.resolution = resolution,
            StudyConfig::Semigroup(c) => c.grid.resolution = resolution,
        }
    }
}

/// Registered study names.
pub const STUDIES: &[&str] = &[
    "theorem1-dilation",
    "theorem2-dilation",
    "theorem2-translation",
    "theorem3-dilation",
    "unboundedness",
    "semigroup",
];

fn octave_ladder() -> Value {
    json!([0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0])
}

fn dyadic_balls() -> Value {
    json!({
        "kind": "dyadic",
        "r_min": 0.015625,
        "r_max": 4.0,
        "radii_per_octave": 8,
        "center_min": 0.125,
        "center_max": 2.0,
        "centers_per_octave": 2
    })
}

fn line_grid(mode: &str) -> Value {
    json!({ "n": 1, "half_width": 8.0, "resolution": 2048, "mode": mode })
}

/// Default configuration of a registered study.
pub fn default_config(name: &str) -> Option<Value> {
    let constant = json!({ "form": "constant", "c": 1.0 });
    Some(match name {
        "theorem1-dilation" => json!({
            "study": "theorem1",
            "grid": line_grid("dilated"),
            "operator": { "kind": "frac-maximal", "alpha": 0.5 },
            "s": "inf",
            "w": { "form": "constant", "c": 1.0 },
            "family": {
                "generator": "dilation-ladder",
                "base": { "shape": "indicator", "radius": 1.0 },
                "lambdas": octave_ladder()
            },
            "balls": { "kind": "cover" },
            "tolerances": { "spread": 1.05, "slope": 0.02 }
        }),
        "theorem2-dilation" => json!({
            "study": "theorem2",
            "grid": line_grid("dilated"),
            "operator": { "kind": "homogeneous-integral", "alpha": 0.5, "kernel": constant },
            "p": 1.0,
            "s": "inf",
            "w": { "form": "power", "beta": -0.25 },
            "family": {
                "generator": "dilation-ladder",
                "base": { "shape": "gaussian", "sigma": 0.5 },
                "lambdas": octave_ladder()
            },
            "balls": dyadic_balls(),
            "tolerances": { "spread": 1.05, "slope": 0.02 }
        }),
        "theorem2-translation" => json!({
            "study": "theorem2",
            "grid": line_grid("fixed"),
            "operator": { "kind": "homogeneous-integral", "alpha": 0.5, "kernel": constant },
            "p": 1.0,
            "s": "inf",
            "w": { "form": "constant", "c": 1.0 },
            "family": {
                "generator": "translation-ladder",
                "base": { "shape": "gaussian", "sigma": 0.5 },
                "shifts": [-0.5, -0.25, 0.0, 0.25, 0.5]
            },
            "balls": { "kind": "lattice", "r_min": 0.0625, "r_max": 4.0, "growth": 2.0, "stride": 4 },
            "tolerances": { "spread": 1.05, "slope": 0.02 }
        }),
        "theorem3-dilation" => json!({
            "study": "theorem3",
            "grid": line_grid("dilated"),
            "operator": { "kind": "frac-maximal", "alpha": 0.5 },
            "p": 1.0,
            "s": "inf",
            "w": { "form": "power", "beta": -0.25 },
            "family": {
                "generator": "dilation-ladder",
                "base": { "shape": "gaussian", "sigma": 0.5 },
                "lambdas": octave_ladder()
            },
            "balls": dyadic_balls(),
            "tolerances": { "spread": 1.05, "slope": 0.02 }
        }),
        "unboundedness" => json!({
            "study": "unboundedness",
            "alpha": 0.1,
            "n": 1,
            "k_min": 4,
            "k_max": 12,
            "resolution": 131072,
            "tolerances": { "increment_ratio": 0.5, "oracle": 0.01 }
        }),
        "semigroup" => json!({
            "study": "semigroup",
            "beta": 0.3,
            "gamma": 0.4,
            "grid": { "n": 1, "half_width": 8.0, "resolution": 2048 },
            "function": { "shape": "gaussian", "sigma": 0.5 },
            "tolerance": 0.05,
            "tail_nodes": 256
        }),
        _ => return None,
    })
}

/// Keys that select an enum variant in configs.
const TAGS: &[&str] = &["study", "kind", "form", "shape", "generator", "space"];

/// Overlays `patch` onto `base`: objects merge key by key unless the patch
/// switches a variant tag, anything else replaces the base value.
pub fn merge(base: &mut Value, patch: Value) {
    match (base, patch) {
        (Value::Object(b), Value::Object(p))
            if TAGS.iter().all(|t| match (b.get(*t), p.get(*t)) {
                (Some(x), Some(y)) => x == y,
                _ => true,
            }) =>
        {
            for (k, v) in p {
                match b.get_mut(&k) {
                    Some(slot) => merge(slot, v),
                    None => {
                        b.insert(k, v);
                    }
                }
            }
        }
        (slot, v) => *slot = v,
    }
}

/// Default configuration of `name` with `patch` merged over it, or `None`
/// for an unregistered study.
pub fn study_value(name: &str, patch: Option<Value>) -> Option<Value> {
    let mut value = default_config(name)?;
    if let Some(p) = patch {
        merge(&mut value, p);
    }
    Some(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_default_parses() {
        for name in STUDIES {
            let v = default_config(name).unwrap();
            let cfg: StudyConfig =
                serde_json::from_value(v).unwrap_or_else(|e| panic!("{name}: {e}"));
            let back = serde_json::to_value(&cfg).unwrap();
            assert_eq!(serde_json::from_value::<StudyConfig>(back).unwrap(), cfg);
        }
        assert!(default_config("theorem4").is_none());
    }

    #[test]
    fn merge_is_deep() {
        let v = study_value(
            "theorem2-dilation",
            Some(json!({ "grid": { "resolution": 512 }, "p": 1.0 })),
        )
        .unwrap();
        assert_eq!(v["grid"]["resolution"], 512);
        assert_eq!(v["grid"]["half_width"], 8.0);
        let v = study_value("semigroup", Some(json!({ "function": { "sigma": 0.25 } }))).unwrap();
        assert_eq!(v["function"], json!({ "shape": "gaussian", "sigma": 0.25 }));
        // a new variant replaces the old object
        let v = study_value(
            "semigroup",
            Some(json!({ "function": { "shape": "tent", "radius": 1.0 } })),
        )
        .unwrap();
        assert_eq!(v["function"], json!({ "shape": "tent", "radius": 1.0 }));
        assert!(serde_json::from_value::<StudyConfig>(v).is_ok());
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let v = study_value("semigroup", Some(json!({ "betta": 0.3 }))).unwrap();
        assert!(serde_json::from_value::<StudyConfig>(v).is_err());
    }

    #[test]
    fn resolution_override() {
        let mut cfg: StudyConfig =
            serde_json::from_value(default_config("unboundedness").unwrap()).unwrap();
        cfg.set_resolution(1 << 16);
        match cfg {
            StudyConfig::Unboundedness(c) => assert_eq!(c.resolution, 1 << 16),
            _ => unreachable!(),
        }
    }
}
