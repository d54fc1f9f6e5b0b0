//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::f64::consts::PI;
use std::fs;
use std::process::{Command, ExitCode};
use std::time::Instant;

use morreylab::experiments::{
    semigroup_check, study_value, unboundedness_probe, verify_theorem1, verify_theorem2,
    verify_theorem3, BaseShape, FamilySample, LebesgueStudyConfig, MorreyStudyConfig,
    SemigroupConfig, UnboundednessConfig,
};
use morreylab::geometry::integrate;
use morreylab::kernels::{dini_integral, lemma_sweep};
use morreylab::operators::{riesz_fourier_oracle, riesz_potential, riesz_potential_at};
use morreylab::spaces::{bmo_seminorm, lp_norm, morrey_norm};
use morreylab::weights::standard_sweep;
use morreylab::{
    apq_constant, Ball, BoundingBox, Dim, Exponent, FamilySpec, Grid, HomogeneousKernel,
    SampledFunction, Weight,
};
use serde_json::{json, Value};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn study<T: serde::de::DeserializeOwned>(name: &str, patch: Value) -> Result<T, String> {
    let mut v = study_value(name, Some(patch)).ok_or_else(|| format!("unknown study {name}"))?;
    v.as_object_mut().unwrap().remove("study");
    serde_json::from_value(v).map_err(fail)
}

fn polar_identity() -> Outcome {
    // ∫_S |Ω|^s dθ in closed form
    let cases = [
        (HomogeneousKernel::constant(Dim::Two, 1.0), 1.0, 2.0 * PI),
        (HomogeneousKernel::constant(Dim::Two, 1.0), 2.0, 2.0 * PI),
        (HomogeneousKernel::cos_harmonic(1), 1.0, 4.0),
        (HomogeneousKernel::cos_harmonic(1), 2.0, PI),
    ];
    let mut worst = 0.0f64;
    for (kernel, s, sphere) in &cases {
        for r in [0.5, 1.0, 2.0] {
            let grid = Grid::origin_centered(Dim::Two, 1.25 * r, 512).map_err(fail)?;
            let f = SampledFunction::from_fn(grid, |p| kernel.value(p).abs().powf(*s));
            let lhs = integrate(&f, &Ball::new([0.0, 0.0], r).map_err(fail)?);
            let rhs = r * r / 2.0 * sphere;
            worst = worst.max(((lhs - rhs) / rhs).abs());
        }
    }
    ensure(
        worst <= 0.01,
        format!("max relative error {worst:.2e} (limit 1e-2)"),
    )
}

fn riesz_closed_form() -> Outcome {
    // cell centers at -4 + i h hit 0, 0.5 and 3 exactly
    let res = 4096;
    let h = 8.0 / res as f64;
    let grid = Grid::new(
        BoundingBox::interval(-4.0 - 0.5 * h, 4.0 - 0.5 * h).map_err(fail)?,
        res,
    )
    .map_err(fail)?;
    let indicator = BaseShape::Indicator {
        radius: 1.0,
        center: vec![],
    };
    let f = FamilySample {
        id: 0,
        base: indicator,
        dilation: 1.0,
        shift: 0.0,
    }
    .sample(&grid)
    .map_err(fail)?;
    let gamma = (2.0 * PI).sqrt();
    let oracle = |x: f64| {
        let a = (x + 1.0).abs().sqrt();
        let b = (x - 1.0).abs().sqrt();
        2.0 * if x.abs() < 1.0 { a + b } else { a - b } / gamma
    };
    let mut worst = 0.0f64;
    for x in [0.0, 0.5, 3.0] {
        let i = ((x + 4.0) / h).round() as usize;
        let v = riesz_potential_at(&f, 0.5, i).map_err(fail)?;
        worst = worst.max(((v - oracle(x)) / oracle(x)).abs());
    }
    ensure(
        worst <= 1e-3,
        format!("max relative error {worst:.2e} (limit 1e-3)"),
    )
}

fn middle_half_discrepancy(a: &SampledFunction, b: &SampledFunction) -> f64 {
    let g = a.grid();
    let quarter: Vec<f64> = (0..g.dim().n()).map(|k| 0.25 * g.bbox().width(k)).collect();
    let c = g.bbox().center();
    (0..g.len())
        .filter(|&i| {
            let p = g.center(i);
            (0..g.dim().n()).all(|k| (p[k] - c[k]).abs() <= quarter[k])
        })
        .map(|i| ((a.values()[i] - b.values()[i]) / b.values()[i]).abs())
        .fold(0.0, f64::max)
}

fn cross_oracle() -> Outcome {
    let mut worst = 0.0f64;
    for (dim, half_width, res, sigma, alpha) in [
        (Dim::One, 8.0, 2048, 0.5, 0.5),
        (Dim::Two, 4.0, 256, 0.25, 1.0),
    ] {
        let grid = Grid::origin_centered(dim, half_width, res).map_err(fail)?;
        let f = SampledFunction::from_fn(grid, |p| {
            let r2 = p[0] * p[0] + p[1] * p[1];
            if r2 < 16.0 * sigma * sigma {
                (-0.5 * r2 / (sigma * sigma)).exp()
            } else {
                0.0
            }
        });
        let direct = riesz_potential(&f, alpha).map_err(fail)?;
        let spectral = riesz_fourier_oracle(&f, alpha).map_err(fail)?;
        worst = worst.max(middle_half_discrepancy(&spectral, &direct));
    }
    let cfg: SemigroupConfig = study("semigroup", json!({ "beta": 0.3, "gamma": 0.4 }))?;
    let semigroup = semigroup_check("semigroup", &cfg)
        .map_err(fail)?
        .discrepancy;
    ensure(
        worst <= 0.02 && semigroup <= 0.05,
        format!("direct vs FFT {worst:.2e} (limit 2e-2), semigroup {semigroup:.2e} (limit 5e-2)"),
    )
}

/// Grid patch for a shared grid wide enough for the `λ = 1/8` sample, with
/// balls and radius ladders dilated per sample.
fn shared_grid() -> Value {
    json!({ "grid": { "mode": "scaled-balls", "half_width": 32.0, "resolution": 8192 } })
}

fn spread_and_slope(r: &morreylab::experiments::RatioReport) -> (f64, f64) {
    (
        r.spread.unwrap_or(f64::INFINITY),
        r.slope.unwrap_or(f64::INFINITY),
    )
}

fn theorem2_invariance() -> Outcome {
    let cfg: MorreyStudyConfig = study("theorem2-dilation", json!({}))?;
    let expected = (
        cfg.grid.n == 1,
        cfg.operator.alpha == 0.5,
        cfg.p == 1.0,
        cfg.w == Weight::Power { beta: -0.25 },
        cfg.operator.kernel.as_ref().is_some_and(|k| {
            k.is_constant() && k.value([1.0, 0.0]) == 1.0 && k.value([-1.0, 0.0]) == 1.0
        }),
        cfg.grid.resolution == 2048,
    );
    if expected != (true, true, true, true, true, true) {
        return Err(format!("default configuration drifted: {expected:?}"));
    }
    let r = verify_theorem2("theorem2-dilation", &cfg).map_err(fail)?;
    let q = r.params.q.map(Exponent::value).unwrap_or(f64::NAN);
    let kappa = r.params.kappa.unwrap_or(f64::NAN);
    let lambdas: Vec<f64> = r.samples.iter().map(|s| s.lambda).collect();
    let ladder: Vec<f64> = (-3..=3).map(|k| 2f64.powi(k)).collect();
    let (spread, slope) = spread_and_slope(&r);
    let shared: MorreyStudyConfig = study("theorem2-dilation", shared_grid())?;
    let s = verify_theorem2("theorem2-shared", &shared).map_err(fail)?;
    let (shared_spread, shared_slope) = spread_and_slope(&s);
    ensure(
        q == 2.0
            && kappa == 0.5
            && lambdas == ladder
            && r.pass
            && s.pass
            && spread.max(shared_spread) <= 1.05
            && slope.abs().max(shared_slope.abs()) <= 0.02,
        format!(
            "q = {q}, kappa = {kappa}; dilated grids: spread {spread:.6}, slope {slope:.1e}; \
             shared grid: spread {shared_spread:.6}, slope {shared_slope:.1e} (limits 1.05, 0.02)"
        ),
    )
}

fn maximal_invariance() -> Outcome {
    let rough = json!({ "operator": { "kind": "homogeneous-maximal", "alpha": 0.5,
                        "kernel": { "form": "two-values", "a": 1.0, "b": 0.5 } } });
    let mut spreads = Vec::new();
    let mut pass = true;
    for grid in [json!({}), shared_grid()] {
        let mut patch = rough.clone();
        morreylab::experiments::merge(&mut patch, grid);
        let t1: LebesgueStudyConfig = study("theorem1-dilation", patch.clone())?;
        let t3: MorreyStudyConfig = study("theorem3-dilation", patch)?;
        let r1 = verify_theorem1("theorem1-dilation", &t1).map_err(fail)?;
        let r3 = verify_theorem3("theorem3-dilation", &t3).map_err(fail)?;
        pass &= r1.pass && r3.pass;
        spreads.push((spread_and_slope(&r1).0, spread_and_slope(&r3).0));
    }
    let worst = spreads.iter().fold(0.0f64, |m, (a, b)| m.max(*a).max(*b));
    ensure(
        pass && worst <= 1.05,
        format!(
            "theorem 1 spread {:.6} / {:.6}, theorem 3 spread {:.6} / {:.6} on dilated / shared grids (limit 1.05)",
            spreads[0].0, spreads[1].0, spreads[0].1, spreads[1].1
        ),
    )
}

fn apq_window() -> Outcome {
    let grid = Grid::origin_centered(Dim::One, 128.0, 4096).map_err(fail)?;
    let family = standard_sweep(Dim::One);
    let flag = |beta: f64| -> Result<bool, String> {
        Ok(apq_constant(
            &Weight::Power { beta },
            1.0,
            Exponent::Finite(2.0),
            &family,
            &grid,
        )
        .map_err(fail)?
        .divergence_flag)
    };
    let mut wrong = Vec::new();
    for beta in [-0.4, -0.25, 0.0] {
        if flag(beta)? {
            wrong.push(beta);
        }
    }
    for beta in [-0.75, 0.5] {
        if !flag(beta)? {
            wrong.push(beta);
        }
    }
    ensure(wrong.is_empty(), format!("misclassified betas {wrong:?}"))
}

fn lemma_uniformity() -> Outcome {
    let kernel = HomogeneousKernel::cos_harmonic(1);
    let sweep = lemma_sweep(
        &kernel,
        1.0,
        Exponent::Finite(2.0),
        &[1.0, 2.0, 4.0, 8.0],
        &[1.0 / 16.0, 1.0 / 8.0, 1.0 / 4.0],
        0.0,
    )
    .map_err(fail)?;
    let finite = sweep
        .samples
        .iter()
        .all(|s| s.ratio.is_finite() && s.ratio > 0.0);
    ensure(
        finite && sweep.spread <= 4.0,
        format!("max/min {:.4} (limit 4)", sweep.spread),
    )
}

fn unboundedness() -> Outcome {
    let cfg: UnboundednessConfig = study("unboundedness", json!({}))?;
    let r = unboundedness_probe("unboundedness", &cfg).map_err(fail)?;
    let ratios = r.ratios();
    let increasing = ratios.len() == 9 && ratios.windows(2).all(|w| w[1] > w[0]);
    let halving = r
        .checks
        .iter()
        .find(|c| c.name == "norm increment ratio")
        .ok_or("missing increment check")?;
    ensure(
        increasing && halving.pass && r.pass,
        format!(
            "ratio {:.4} -> {:.4} over 9 steps, increment ratio {:.4} (limit {})",
            ratios[0],
            ratios[ratios.len() - 1],
            halving.value,
            halving.limit
        ),
    )
}

fn unit_properties() -> Outcome {
    let grid = Grid::origin_centered(Dim::One, 4.0, 1024).map_err(fail)?;
    let family = standard_sweep(Dim::One);
    let constant = SampledFunction::from_fn(grid, |_| 2.75);
    let c = bmo_seminorm(&constant, &family).map_err(fail)?.value;
    let heaviside = SampledFunction::from_fn(grid, |p| if p[0] > 0.0 { 1.0 } else { 0.0 });
    let h = bmo_seminorm(&heaviside, &family).map_err(fail)?.value;
    let f = SampledFunction::from_fn(grid, |p| (-p[0] * p[0]).exp() * (1.0 + 0.5 * p[0].sin()));
    let cover = FamilySpec::Cover.resolve(&grid).map_err(fail)?;
    let u = Weight::unit();
    let m = morrey_norm(&f, 1.5, 0.0, &u, &u, &cover)
        .map_err(fail)?
        .value;
    let l = lp_norm(&f, 1.5, &u).map_err(fail)?;
    let dini = dini_integral(
        &HomogeneousKernel::constant(Dim::Two, 1.0),
        Exponent::Finite(2.0),
        1e-6,
    )
    .map_err(fail)?
    .value;
    let mut dini_1d = 0.0;
    for s in [Exponent::Finite(2.0), Exponent::Infinite] {
        dini_1d += dini_integral(&HomogeneousKernel::constant(Dim::One, 3.0), s, 1e-6)
            .map_err(fail)?
            .value;
    }
    ensure(
        c == 0.0
            && (h - 0.5).abs() <= 0.01
            && (m - l).abs() <= 1e-10 * l
            && dini == 0.0
            && dini_1d == 0.0,
        format!(
            "constant {c}, heaviside {h:.6}, |morrey - lp| {:.1e}, dini {dini}",
            (m - l).abs()
        ),
    )
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(fail)?;
    let mut digests = Vec::new();
    for (run, threads) in [(0, "1"), (1, "1"), (2, "4"), (3, "4")] {
        let mut files = Vec::new();
        for name in ["theorem2-dilation", "theorem3-dilation", "semigroup"] {
            let out = dir.path().join(format!("{name}-{run}"));
            let status = Command::new(env!("CARGO_BIN_EXE_morreylab"))
                .args(["verify", name, "--out"])
                .arg(&out)
                .env("MORREYLAB_THREADS", threads)
                .output()
                .map_err(fail)?;
            if status.status.code() != Some(0) {
                return Err(format!("{name} exited with {:?}", status.status.code()));
            }
            for file in ["report.json", "report.csv"] {
                files.push(fs::read(out.join(file)).map_err(fail)?);
            }
        }
        digests.push(files);
    }
    let identical = digests.windows(2).all(|w| w[0] == w[1]);
    let bytes: usize = digests[0].iter().map(Vec::len).sum();
    ensure(
        identical,
        format!("{bytes} bytes across 6 files, 2 runs each with 1 and 4 threads"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("polar identity", polar_identity),
        ("closed-form Riesz potential", riesz_closed_form),
        ("direct vs spectral and semigroup", cross_oracle),
        ("critical-index scale invariance", theorem2_invariance),
        ("maximal dilation ladders", maximal_invariance),
        ("A(p,q) membership window", apq_window),
        ("lemma uniformity", lemma_uniformity),
        ("unboundedness probe", unboundedness),
        ("BMO and Morrey unit properties", unit_properties),
        ("determinism", determinism),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
