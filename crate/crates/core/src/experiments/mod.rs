//! Ratio studies for the weighted estimates: dilation and translation
//! ladders, the `L^{n/α}` divergence probe and the semigroup cross-check.

mod config;
mod family;
mod report;
mod studies;

pub use config::{default_config, merge, study_value, StudyConfig, STUDIES};
pub use family::{BaseShape, FamilySample, TestFamily};
pub use report::{
    Check, RatioReport, RatioSample, SemigroupPoint, SemigroupReport, StudyParams, StudyReport,
};
pub use studies::{
    semigroup_check, unboundedness_norm_oracle, unboundedness_potential_oracle,
    unboundedness_probe, verify_theorem1, verify_theorem2, verify_theorem3, GridConfig, GridMode,
    LebesgueStudyConfig, MorreyStudyConfig, RatioTolerances, SemigroupConfig, UnboundednessConfig,
    UnboundednessTolerances, DENOMINATOR_FLOOR,
};
