use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::exponent::Exponent;

/// Parameters a study ran with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StudyParams {
    pub n: usize,
    pub alpha: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<Exponent>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<Exponent>,
    /// Exponent of the power weight, `0` for constant weights.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    /// Dilation factors, shifts or cutoffs, one per sample.
    pub lambdas: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioSample {
    pub sample_id: usize,
    pub lambda: f64,
    pub numerator: f64,
    pub denominator: f64,
    pub ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

/// A measured quantity against its limit; passes when `value <= limit`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub limit: f64,
    pub pass: bool,
}

impl Check {
    pub fn at_most(name: impl Into<String>, value: f64, limit: f64) -> Self {
        Check {
            name: name.into(),
            value,
            limit,
            pass: value <= limit,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub id: String,
    pub params: StudyParams,
    pub samples: Vec<RatioSample>,
    /// max ratio / min ratio over the kept samples.
    pub spread: Option<f64>,
    /// Least-squares slope of `ln ratio` against `ln λ` (dilation ladders).
    pub slope: Option<f64>,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub notes: Vec<String>,
}

impl RatioReport {
    pub fn new(id: &str, params: StudyParams, samples: Vec<RatioSample>, dilation: bool) -> Self {
        let kept: Vec<(f64, f64)> = samples
            .iter()
            .filter_map(|s| s.ratio.map(|r| (s.lambda, r)))
            .collect();
        let spread = if kept.is_empty() {
            None
        } else {
            let (lo, hi) = kept
                .iter()
                .fold((f64::INFINITY, 0.0f64), |(lo, hi), (_, r)| {
                    (lo.min(*r), hi.max(*r))
                });
            Some(hi / lo)
        };
        let slope = if dilation { log_log_slope(&kept) } else { None };
        let notes = samples
            .iter()
            .filter_map(|s| {
                s.skipped
                    .as_ref()
                    .map(|why| format!("sample {} skipped: {why}", s.sample_id))
            })
            .collect();
        RatioReport {
            id: id.into(),
            params,
            samples,
            spread,
            slope,
            checks: Vec::new(),
            pass: true,
            notes,
        }
    }

    pub fn check(&mut self, check: Check) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    pub fn ratios(&self) -> Vec<f64> {
        self.samples.iter().filter_map(|s| s.ratio).collect()
    }

    /// Columns `sample_id,lambda,numerator,denominator,ratio`; skipped samples
    /// leave the ratio empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("sample_id,lambda,numerator,denominator,ratio\n");
        for s in &self.samples {
            let ratio = s.ratio.map(fmt_float).unwrap_or_default();
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                s.sample_id,
                fmt_float(s.lambda),
                fmt_float(s.numerator),
                fmt_float(s.denominator),
                ratio
            );
        }
        out
    }
}

/// Shortest representation that round-trips.
pub(crate) fn fmt_float(x: f64) -> String {
    format!("{x:?}")
}

fn log_log_slope(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(l, r)| *l > 0.0 && *r > 0.0)
        .map(|(l, r)| (l.ln(), r.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let m = pts.len() as f64;
    let (mx, my) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (mx / m, my / m);
    let (sxy, sxx) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| {
        (a + (x - mx) * (y - my), b + (x - mx) * (x - mx))
    });
    (sxx > 0.0).then(|| sxy / sxx)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SemigroupPoint {
    pub x: f64,
    pub composite: f64,
    pub direct: f64,
}

/// `I_β I_γ f` against `I_{β+γ} f` on the middle half of the box.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SemigroupReport {
    pub id: String,
    pub beta: f64,
    pub gamma: f64,
    /// `max |composite − direct| / max |direct|`.
    pub discrepancy: f64,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub points: Vec<SemigroupPoint>,
}

impl SemigroupReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,composite,direct\n");
        for p in &self.points {
            let _ = writeln!(
                out,
                "{},{},{}",
                fmt_float(p.x),
                fmt_float(p.composite),
                fmt_float(p.direct)
            );
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum StudyReport {
    Ratio(RatioReport),
    Semigroup(SemigroupReport),
}

impl StudyReport {
    pub fn pass(&self) -> bool {
        match self {
            StudyReport::Ratio(r) => r.pass,
            StudyReport::Semigroup(r) => r.pass,
        }
    }

    pub fn to_csv(&self) -> String {
        match self {
            StudyReport::Ratio(r) => r.to_csv(),
            StudyReport::Semigroup(r) => r.to_csv(),
        }
    }

    pub fn checks(&self) -> &[Check] {
        match self {
            StudyReport::Ratio(r) => &r.checks,
            StudyReport::Semigroup(r) => &r.checks,
        }
    }
}
