use std::fmt::Write as _;

use morreylab::experiments::{
    study_value, BaseShape, FamilySample, GridConfig, StudyConfig, STUDIES,
};
use morreylab::kernels::dini_integral;
use morreylab::operators::OperatorSpec;
use morreylab::spaces::BallValue;
use morreylab::{
    apq_constant, Exponent, FamilySpec, Grid, HomogeneousKernel, NormSpec, SampledFunction, Weight,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::{from_value, write_file, CliError, CliResult, OutputArgs};

fn f(x: f64) -> String {
    format!("{x:?}")
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn sample(shape: &BaseShape, grid: &Grid) -> CliResult<SampledFunction> {
    let s = FamilySample {
        id: 0,
        base: shape.clone(),
        dilation: 1.0,
        shift: 0.0,
    };
    Ok(s.sample(grid)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvalConfig {
    pub grid: GridConfig,
    pub operator: OperatorSpec,
    pub function: BaseShape,
}

pub fn eval(raw: Value, out: &OutputArgs) -> CliResult<Value> {
    let mut cfg: EvalConfig = from_value(raw)?;
    if let Some(r) = out.resolution {
        cfg.grid.resolution = r;
    }
    let grid = cfg.grid.grid()?;
    let input = sample(&cfg.function, &grid)?;
    let output = cfg.operator.apply(&input)?;

    let two_d = grid.dim().n() == 2;
    let mut csv = String::from(if two_d { "x,y,value\n" } else { "x,value\n" });
    for (i, v) in output.values().iter().enumerate() {
        let c = grid.center(i);
        if two_d {
            let _ = writeln!(csv, "{},{},{}", f(c[0]), f(c[1]), f(*v));
        } else {
            let _ = writeln!(csv, "{},{}", f(c[0]), f(*v));
        }
    }
    let meta = json!({
        "command": "eval",
        "seed": out.seed,
        "config": cfg,
        "cells": grid.len(),
        "input_max_abs": input.max_abs(),
        "output_max_abs": output.max_abs(),
    });
    write_file(&out.out, "values.csv", &csv)?;
    write_file(&out.out, "meta.json", &pretty(&meta))?;
    Ok(json!({ "command": "eval", "cells": grid.len(), "output_max_abs": output.max_abs() }))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NormConfig {
    pub grid: GridConfig,
    pub function: BaseShape,
    pub norm: NormSpec,
}

fn ball_rows(balls: &[BallValue]) -> String {
    let mut csv = String::from("center_x,center_y,radius,value\n");
    for b in balls {
        let c = b.ball.center;
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            f(c[0]),
            f(c[1]),
            f(b.ball.radius),
            f(b.value)
        );
    }
    csv
}

pub fn norm(raw: Value, out: &OutputArgs) -> CliResult<Value> {
    let mut cfg: NormConfig = from_value(raw)?;
    if let Some(r) = out.resolution {
        cfg.grid.resolution = r;
    }
    let grid = cfg.grid.grid()?;
    let func = sample(&cfg.function, &grid)?;
    let report = cfg.norm.evaluate(&func)?;
    write_file(
        &out.out,
        "report.json",
        &pretty(&json!({ "config": cfg, "report": report })),
    )?;
    write_file(&out.out, "report.csv", &ball_rows(&report.balls))?;
    Ok(
        json!({ "command": "norm", "space": report.space, "value": report.value, "balls": report.balls.len() }),
    )
}

fn standard() -> FamilySpec {
    FamilySpec::Standard
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ApqConfig {
    pub grid: GridConfig,
    pub w: Weight,
    pub p: f64,
    pub q: Exponent,
    #[serde(default = "standard")]
    pub family: FamilySpec,
}

pub fn apq(raw: Value, out: &OutputArgs) -> CliResult<Value> {
    let mut cfg: ApqConfig = from_value(raw)?;
    if let Some(r) = out.resolution {
        cfg.grid.resolution = r;
    }
    let grid = cfg.grid.grid()?;
    let family = cfg.family.resolve(&grid)?;
    let report = apq_constant(&cfg.w, cfg.p, cfg.q, &family, &grid)?;
    let mut csv = String::from("center_x,center_y,radius,value,clamped\n");
    for b in &report.brackets {
        let c = b.ball.center;
        let _ = writeln!(
            csv,
            "{},{},{},{},{}",
            f(c[0]),
            f(c[1]),
            f(b.ball.radius),
            f(b.value),
            b.clamped
        );
    }
    write_file(
        &out.out,
        "report.json",
        &pretty(&json!({ "config": cfg, "report": report })),
    )?;
    write_file(&out.out, "report.csv", &csv)?;
    Ok(json!({
        "command": "apq",
        "constant": report.constant,
        "core_constant": report.core_constant,
        "divergence_flag": report.divergence_flag,
    }))
}

fn infinite() -> Exponent {
    Exponent::Infinite
}

fn delta_min() -> f64 {
    1e-6
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiniConfig {
    pub kernel: HomogeneousKernel,
    #[serde(default = "infinite")]
    pub s: Exponent,
    #[serde(default = "delta_min")]
    pub delta_min: f64,
}

pub fn dini(raw: Value, out: &OutputArgs) -> CliResult<Value> {
    let cfg: DiniConfig = from_value(raw)?;
    let report = dini_integral(&cfg.kernel, cfg.s, cfg.delta_min)?;
    let mut csv = String::from("delta,omega\n");
    for (d, w) in report
        .profile
        .deltas
        .iter()
        .zip(&report.profile.omega_values)
    {
        let _ = writeln!(csv, "{},{}", f(*d), f(*w));
    }
    write_file(
        &out.out,
        "report.json",
        &pretty(&json!({ "config": cfg, "report": report })),
    )?;
    write_file(&out.out, "report.csv", &csv)?;
    Ok(json!({ "command": "dini", "value": report.value, "divergent": report.divergent }))
}

pub fn verify(study: &str, patch: Option<Value>, out: &OutputArgs) -> CliResult<Value> {
    let value = study_value(study, patch).ok_or_else(|| {
        CliError::config(
            "study",
            format!(
                "unknown study {study:?}; expected one of {}",
                STUDIES.join(", ")
            ),
        )
    })?;
    let mut cfg: StudyConfig = from_value(value)?;
    if let Some(r) = out.resolution {
        cfg.set_resolution(r);
    }
    let report = cfg.run(study)?;
    write_file(&out.out, "report.json", &pretty(&report))?;
    write_file(&out.out, "report.csv", &report.to_csv())?;
    if !report.pass() {
        let failed: Vec<&str> = report
            .checks()
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name.as_str())
            .collect();
        let failed = if failed.is_empty() {
            "no valid samples".to_string()
        } else {
            failed.join("; ")
        };
        return Err(CliError::Tolerance(failed));
    }
    Ok(
        json!({ "command": "verify", "study": study, "pass": true, "checks": report.checks().len() }),
    )
}
