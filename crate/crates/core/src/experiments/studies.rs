use serde::{Deserialize, Serialize};

use super::family::{BaseShape, FamilySample, TestFamily};
use super::report::{
    Check, RatioReport, RatioSample, SemigroupPoint, SemigroupReport, StudyParams,
};
use crate::error::{Error, Result};
use crate::exponent::{exponent_identities, DerivedExponents, Exponent};
use crate::geometry::{BallFamily, BoundingBox, Dim, Grid, SampledFunction};
use crate::kernels::dini_integral;
use crate::operators::{gamma_alpha, riesz_potential, riesz_potential_at, OperatorSpec};
use crate::par;
use crate::spaces::{bmo_seminorm, lp_norm, morrey_norm, weighted_linf_norm, FamilySpec};
use crate::weights::{apq_constant, standard_sweep, Weight};

/// Samples whose denominator falls below this are skipped.
pub const DENOMINATOR_FLOOR: f64 = 1e-10;

/// Lower end of the Dini integral used for the admissibility check.
const DINI_DELTA_MIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridMode {
    /// Sample `λ` lives on the base grid dilated by `1/λ`, with the ball
    /// family and radius ladder dilated along with it.
    #[default]
    Dilated,
    /// Every sample shares the base grid and ball family.
    Fixed,
    /// Every sample shares the base grid; the ball family and radius ladder
    /// are dilated by `1/λ`.
    ScaledBalls,
}

/// Origin-centered grid `[-W, W]^n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    #[serde(default = "one")]
    pub n: usize,
    pub half_width: f64,
    pub resolution: usize,
    #[serde(default)]
    pub mode: GridMode,
}

fn one() -> usize {
    1
}

impl GridConfig {
    pub fn grid(&self) -> Result<Grid> {
        Grid::origin_centered(Dim::from_n(self.n)?, self.half_width, self.resolution)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RatioTolerances {
    #[serde(default = "default_spread")]
    pub spread: f64,
    #[serde(default = "default_slope")]
    pub slope: f64,
}

fn default_spread() -> f64 {
    1.05
}

fn default_slope() -> f64 {
    0.02
}

impl Default for RatioTolerances {
    fn default() -> Self {
        Self {
            spread: default_spread(),
            slope: default_slope(),
        }
    }
}

fn infinite() -> Exponent {
    Exponent::Infinite
}

fn cover() -> FamilySpec {
    FamilySpec::Cover
}

/// Configuration shared by the Morrey-to-BMO and Morrey-to-`L^∞` studies.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorreyStudyConfig {
    pub grid: GridConfig,
    pub operator: OperatorSpec,
    pub p: f64,
    #[serde(default = "infinite")]
    pub s: Exponent,
    #[serde(default)]
    pub w: Weight,
    pub family: TestFamily,
    pub balls: FamilySpec,
    #[serde(default)]
    pub tolerances: RatioTolerances,
}

/// Configuration of the `L^p(w^p) → L^∞(w)` study with `p = n/α`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LebesgueStudyConfig {
    pub grid: GridConfig,
    pub operator: OperatorSpec,
    #[serde(default = "infinite")]
    pub s: Exponent,
    #[serde(default)]
    pub w: Weight,
    pub family: TestFamily,
    #[serde(default = "cover")]
    pub balls: FamilySpec,
    #[serde(default)]
    pub tolerances: RatioTolerances,
}

fn power_beta(w: &Weight) -> Option<f64> {
    match w {
        Weight::Constant { .. } => Some(0.0),
        Weight::Power { beta } => Some(*beta),
        Weight::Sampled(_) => None,
    }
}

fn require_kind(op: &OperatorSpec, maximal: bool) -> Result<()> {
    if op.kind.is_maximal() != maximal {
        return Err(Error::Invalid {
            key: "operator.kind",
            message: format!(
                "this study needs {} operator, got {:?}",
                if maximal { "a maximal" } else { "an integral" },
                op.kind
            ),
        });
    }
    Ok(())
}

/// Dini condition for the kernel at exponent `s`; constant kernels pass.
fn check_dini(op: &OperatorSpec, s: Exponent, notes: &mut Vec<String>) -> Result<()> {
    let Some(kernel) = op.kernel.as_ref().filter(|k| !k.is_constant()) else {
        return Ok(());
    };
    let dini = dini_integral(kernel, s, DINI_DELTA_MIN)?;
    if dini.divergent {
        return Err(Error::Invalid {
            key: "operator.kernel",
            message: format!(
                "Dini integral of omega_{s} does not settle (last decade {})",
                dini.last_decade
            ),
        });
    }
    notes.push(format!(
        "Dini integral of omega_{s} down to {DINI_DELTA_MIN}: {}",
        dini.value
    ));
    Ok(())
}

/// `w^{s'} ∈ A(p/s', q/s')` on the standard sweep.
fn check_apq(
    w: &Weight,
    ex: &DerivedExponents,
    grid: &Grid,
    notes: &mut Vec<String>,
) -> Result<()> {
    let sc = ex.s_conj.value();
    let q = match ex.q {
        Exponent::Finite(q) => Exponent::Finite(q / sc),
        Exponent::Infinite => Exponent::Infinite,
    };
    let report = apq_constant(&w.pow(sc), ex.p / sc, q, &standard_sweep(grid.dim()), grid)?;
    if report.divergence_flag {
        return Err(Error::Invalid {
            key: "w",
            message: format!(
                "w^{sc} fails the A({}, {q}) scan (constant {})",
                ex.p / sc,
                report.constant
            ),
        });
    }
    notes.push(format!(
        "A({}, {q}) constant of w^{sc}: {}",
        ex.p / sc,
        report.constant
    ));
    Ok(())
}

/// The grid, ball family and operator a sample runs with.
struct Setting {
    grid: Grid,
    balls: BallFamily,
    operator: OperatorSpec,
}

fn setting(
    base: &Grid,
    balls: &BallFamily,
    operator: &OperatorSpec,
    mode: GridMode,
    sample: &FamilySample,
) -> Result<Setting> {
    let t = sample.dilation;
    if mode == GridMode::Fixed || t == 1.0 {
        return Ok(Setting {
            grid: *base,
            balls: balls.clone(),
            operator: operator.clone(),
        });
    }
    let mut operator = operator.clone();
    if let Some(r) = operator.radii.as_mut() {
        r.r_min /= t;
        r.r_max /= t;
    }
    let grid = match mode {
        GridMode::ScaledBalls => *base,
        _ => base.dilated(1.0 / t)?,
    };
    Ok(Setting {
        grid,
        balls: balls.scaled(1.0 / t)?,
        operator,
    })
}

fn run_samples<F>(
    cfg_family: &TestFamily,
    base: &Grid,
    balls: &BallFamily,
    operator: &OperatorSpec,
    mode: GridMode,
    measure: F,
) -> Result<Vec<RatioSample>>
where
    F: Fn(&SampledFunction, &Setting) -> Result<(Option<f64>, f64)> + Sync + Send,
{
    let samples = cfg_family.samples()?;
    let results = par::map_slice(&samples, |sample| -> Result<RatioSample> {
        let st = setting(base, balls, operator, mode, sample)?;
        let f = sample.sample(&st.grid)?;
        let (numerator, denominator) = measure(&f, &st)?;
        let lambda = sample.label(cfg_family);
        Ok(match numerator {
            Some(num) if denominator >= DENOMINATOR_FLOOR => RatioSample {
                sample_id: sample.id,
                lambda,
                numerator: num,
                denominator,
                ratio: Some(num / denominator),
                skipped: None,
            },
            _ => RatioSample {
                sample_id: sample.id,
                lambda,
                numerator: numerator.unwrap_or(0.0),
                denominator,
                ratio: None,
                skipped: Some(format!(
                    "empty denominator ({denominator} < {DENOMINATOR_FLOOR})"
                )),
            },
        })
    });
    results.into_iter().collect()
}

fn finish(
    mut report: RatioReport,
    tol: &RatioTolerances,
    dilation: bool,
    residual: Option<f64>,
) -> RatioReport {
    if let Some(r) = residual {
        report.check(Check::at_most("scaling exponent residual", r, 1e-12));
    }
    match report.spread {
        Some(s) => report.check(Check::at_most("spread", s, tol.spread)),
        None => {
            report.check(Check::at_most("kept samples", 0.0, -1.0));
            report
                .notes
                .push("no sample had a usable denominator".into());
        }
    }
    if dilation {
        if let Some(slope) = report.slope {
            report.check(Check::at_most("|slope|", slope.abs(), tol.slope));
        }
    }
    report
}

/// Morrey-to-BMO study: `‖T f‖_BMO / ‖f‖_{L^{p,κ}(w^p, w^q)}` with
/// `1/q = 1/p − α/n` and `κ = p/q`.
pub fn verify_theorem2(id: &str, cfg: &MorreyStudyConfig) -> Result<RatioReport> {
    morrey_study(id, cfg, false)
}

/// Morrey-to-`L^∞` study: `max_grid M_{Ω,α} f / ‖f‖_{L^{p,κ}(w^p, w^q)}`.
pub fn verify_theorem3(id: &str, cfg: &MorreyStudyConfig) -> Result<RatioReport> {
    morrey_study(id, cfg, true)
}

fn morrey_study(id: &str, cfg: &MorreyStudyConfig, maximal: bool) -> Result<RatioReport> {
    let grid = cfg.grid.grid()?;
    let dim = grid.dim();
    cfg.operator.validate(dim)?;
    require_kind(&cfg.operator, maximal)?;
    cfg.w.validate()?;
    let alpha = cfg.operator.alpha;
    let ex = exponent_identities(cfg.p, None, alpha, dim.n(), cfg.s)?;
    let Exponent::Finite(q) = ex.q else {
        return Err(Error::param(
            "p",
            cfg.p,
            "must be below n/alpha so that q is finite",
        ));
    };
    let kappa = ex.kappa;
    let mut notes = Vec::new();
    check_apq(&cfg.w, &ex, &grid, &mut notes)?;
    check_dini(&cfg.operator, cfg.s, &mut notes)?;
    let balls = cfg.balls.resolve(&grid)?;
    let (mu, nu) = (cfg.w.pow(cfg.p), cfg.w.pow(q));

    let samples = run_samples(
        &cfg.family,
        &grid,
        &balls,
        &cfg.operator,
        cfg.grid.mode,
        |f, st| {
            let denominator = morrey_norm(f, cfg.p, kappa, &mu, &nu, &st.balls)?.value;
            if denominator < DENOMINATOR_FLOOR {
                return Ok((None, denominator));
            }
            let tf = st.operator.apply(f)?;
            let numerator = if maximal {
                tf.max_abs()
            } else {
                bmo_seminorm(&tf, &st.balls)?.value
            };
            Ok((Some(numerator), denominator))
        },
    )?;

    let beta = power_beta(&cfg.w);
    // both sides scale like λ^{-α} exactly when −αp = −(n+βp) + κ(n+βq)
    let residual = beta.map(|b| {
        let n = dim.nf();
        (-alpha * cfg.p + (n + b * cfg.p) - kappa * (n + b * q)).abs()
    });
    let params = StudyParams {
        n: dim.n(),
        alpha,
        p: Some(cfg.p),
        q: Some(ex.q),
        kappa: Some(kappa),
        s: Some(cfg.s),
        beta,
        lambdas: samples.iter().map(|s| s.lambda).collect(),
    };
    let dilation = cfg.family.is_dilation();
    let mut report = RatioReport::new(id, params, samples, dilation);
    report.notes.splice(0..0, notes);
    Ok(finish(
        report,
        &cfg.tolerances,
        dilation,
        if dilation { residual } else { None },
    ))
}

/// `L^{n/α}(w^{n/α}) → L^∞(w)` study for the maximal operator.
pub fn verify_theorem1(id: &str, cfg: &LebesgueStudyConfig) -> Result<RatioReport> {
    let grid = cfg.grid.grid()?;
    let dim = grid.dim();
    cfg.operator.validate(dim)?;
    require_kind(&cfg.operator, true)?;
    cfg.w.validate()?;
    let alpha = cfg.operator.alpha;
    let n = dim.nf();
    let p = n / alpha;
    let s_min = n / (n - alpha);
    if !(cfg.s.value() > s_min) {
        return Err(Error::param(
            "s",
            cfg.s.value(),
            "must exceed n/(n - alpha)",
        ));
    }
    let ex = exponent_identities(p, None, alpha, dim.n(), cfg.s)?;
    let mut notes = Vec::new();
    check_apq(&cfg.w, &ex, &grid, &mut notes)?;
    check_dini(&cfg.operator, cfg.s, &mut notes)?;
    let balls = cfg.balls.resolve(&grid)?;
    let wp = cfg.w.pow(p);

    let samples = run_samples(
        &cfg.family,
        &grid,
        &balls,
        &cfg.operator,
        cfg.grid.mode,
        |f, st| {
            let denominator = lp_norm(f, p, &wp)?;
            if denominator < DENOMINATOR_FLOOR {
                return Ok((None, denominator));
            }
            let mf = st.operator.apply(f)?;
            Ok((
                Some(weighted_linf_norm(&mf, &cfg.w, &st.balls)?.value),
                denominator,
            ))
        },
    )?;

    let beta = power_beta(&cfg.w);
    // numerator scales like λ^{-α-β}, denominator like λ^{-(n+βp)/p}
    let residual = beta.map(|b| (alpha + b - (n + b * p) / p).abs());
    let params = StudyParams {
        n: dim.n(),
        alpha,
        p: Some(p),
        q: Some(Exponent::Infinite),
        kappa: None,
        s: Some(cfg.s),
        beta,
        lambdas: samples.iter().map(|s| s.lambda).collect(),
    };
    let dilation = cfg.family.is_dilation();
    let mut report = RatioReport::new(id, params, samples, dilation);
    report.notes.splice(0..0, notes);
    Ok(finish(
        report,
        &cfg.tolerances,
        dilation,
        if dilation { residual } else { None },
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnboundednessTolerances {
    /// Largest allowed ratio of successive increments of `‖f_ε‖^{n/α}`.
    #[serde(default = "half")]
    pub increment_ratio: f64,
    /// Relative deviation allowed from the closed-form values.
    #[serde(default = "one_percent")]
    pub oracle: f64,
}

fn half() -> f64 {
    0.5
}

fn one_percent() -> f64 {
    0.01
}

impl Default for UnboundednessTolerances {
    fn default() -> Self {
        Self {
            increment_ratio: half(),
            oracle: one_percent(),
        }
    }
}

/// `f_ε(x) = |x|^{−α} (log 1/|x|)^{−1} χ_{ε<|x|<1/2}` on `[−1/2, 1/2]` with
/// `ε = 2^{−k}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnboundednessConfig {
    pub alpha: f64,
    #[serde(default = "one")]
    pub n: usize,
    pub k_min: u32,
    pub k_max: u32,
    /// Cells on `[−1/2, 1/2]`; a power of two so every cutoff is a cell edge.
    pub resolution: usize,
    #[serde(default)]
    pub tolerances: UnboundednessTolerances,
}

/// `I_α f_ε(0)` in closed form.
pub fn unboundedness_potential_oracle(alpha: f64, eps: f64) -> Result<f64> {
    let g = gamma_alpha(alpha, Dim::One)?;
    Ok(2.0 / g * ((1.0 / eps).ln().ln() - 2f64.ln().ln()))
}

/// `‖f_ε‖_{L^{1/α}}^{1/α}` in closed form.
pub fn unboundedness_norm_oracle(alpha: f64, eps: f64) -> f64 {
    let p = 1.0 / alpha;
    2.0 * (2f64.ln().powf(1.0 - p) - (1.0 / eps).ln().powf(1.0 - p)) / (p - 1.0)
}

/// Probe of the failure of `L^{n/α} → L^∞`: the ratio `I_α f_ε(0) / ‖f_ε‖`
/// keeps growing while the norms converge.
pub fn unboundedness_probe(id: &str, cfg: &UnboundednessConfig) -> Result<RatioReport> {
    if cfg.n != 1 {
        return Err(Error::param(
            "n",
            cfg.n as f64,
            "the probe runs in one dimension",
        ));
    }
    let alpha = cfg.alpha;
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::param("alpha", alpha, "must lie in (0, n)"));
    }
    if cfg.k_min < 2 {
        return Err(Error::param(
            "k_min",
            cfg.k_min as f64,
            "cutoff 2^-k_min must stay below 1/2",
        ));
    }
    if cfg.k_max <= cfg.k_min + 1 {
        return Err(Error::param(
            "k_max",
            cfg.k_max as f64,
            "needs at least three cutoffs",
        ));
    }
    let res = cfg.resolution;
    if !res.is_power_of_two() || res < 1usize << (cfg.k_max + 2) {
        return Err(Error::param(
            "resolution",
            res as f64,
            "must be a power of two, at least 2^(k_max+2)",
        ));
    }
    let p = 1.0 / alpha;
    let grid = Grid::new(BoundingBox::interval(-0.5, 0.5)?, res)?;
    let ks: Vec<u32> = (cfg.k_min..=cfg.k_max).collect();
    let rows = par::map_slice(&ks, |&k| -> Result<(f64, f64, f64, f64)> {
        let eps = 2f64.powi(-(k as i32));
        let f = SampledFunction::from_fn(grid, |x| {
            let t = x[0].abs();
            if t > eps && t < 0.5 {
                t.powf(-alpha) / (1.0 / t).ln()
            } else {
                0.0
            }
        });
        // 0 is a cell edge; the potential is even and flat there
        let right = riesz_potential_at(&f, alpha, res / 2)?;
        let left = riesz_potential_at(&f, alpha, res / 2 - 1)?;
        let potential = 0.5 * (left + right);
        let norm = lp_norm(&f, p, &Weight::unit())?;
        Ok((eps, potential, norm, norm.powf(p)))
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;

    let samples: Vec<RatioSample> = rows
        .iter()
        .enumerate()
        .map(|(i, &(eps, num, den, _))| RatioSample {
            sample_id: i,
            lambda: eps,
            numerator: num,
            denominator: den,
            ratio: Some(num / den),
            skipped: None,
        })
        .collect();
    let params = StudyParams {
        n: 1,
        alpha,
        p: Some(p),
        q: Some(Exponent::Infinite),
        kappa: None,
        s: None,
        beta: None,
        lambdas: rows.iter().map(|r| r.0).collect(),
    };
    let mut report = RatioReport::new(id, params, samples, false);

    let ratios = report.ratios();
    let drops = ratios.windows(2).filter(|w| !(w[1] > w[0])).count();
    report.check(Check::at_most(
        "non-increasing ratio steps",
        drops as f64,
        0.0,
    ));

    let powered: Vec<f64> = rows.iter().map(|r| r.3).collect();
    let increments: Vec<f64> = powered.windows(2).map(|w| w[1] - w[0]).collect();
    let worst = increments
        .windows(2)
        .map(|w| {
            if w[0] > 0.0 {
                w[1] / w[0]
            } else {
                f64::INFINITY
            }
        })
        .fold(0.0f64, f64::max);
    report.check(Check::at_most(
        "norm increment ratio",
        worst,
        cfg.tolerances.increment_ratio,
    ));

    let mut deviation = 0.0f64;
    for &(eps, num, _, pow) in &rows {
        let a = unboundedness_potential_oracle(alpha, eps)?;
        let b = unboundedness_norm_oracle(alpha, eps);
        deviation = deviation
            .max(((num - a) / a).abs())
            .max(((pow - b) / b).abs());
    }
    report.check(Check::at_most(
        "closed-form deviation",
        deviation,
        cfg.tolerances.oracle,
    ));
    Ok(report)
}

/// Composition check `I_β I_γ f = I_{β+γ} f` on a line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupConfig {
    pub beta: f64,
    pub gamma: f64,
    pub grid: GridConfig,
    pub function: BaseShape,
    #[serde(default = "five_percent")]
    pub tolerance: f64,
    #[serde(default = "tail_nodes")]
    pub tail_nodes: usize,
}

fn five_percent() -> f64 {
    0.05
}

fn tail_nodes() -> usize {
    256
}

/// `∫_L^∞ (y − x)^{a−1} y^{b−1} dy`, regularized by `y = L u^{−m}` with
/// `m = 1/(1−a−b)` and integrated by the midpoint rule in `u`.
fn tail(x: f64, edge: f64, a: f64, b: f64, nodes: usize) -> f64 {
    let m = 1.0 / (1.0 - a - b);
    let du = 1.0 / nodes as f64;
    let mut acc = 0.0;
    for j in 0..nodes {
        let u = (j as f64 + 0.5) * du;
        acc += (1.0 - x * u.powf(m) / edge).powf(a - 1.0);
    }
    edge.powf(a + b - 1.0) * m * acc * du
}

/// `I_a (I_b f)` where the part of `I_b f` outside the box is replaced by its
/// monopole `(∫f) |y|^{b−1}/γ(b)`.
fn compose(f: &SampledFunction, a: f64, b: f64, nodes: usize) -> Result<Vec<f64>> {
    let grid = *f.grid();
    let inner = riesz_potential(f, b)?;
    let outer = riesz_potential(&inner, a)?;
    let mass: f64 = f.values().iter().sum::<f64>() * grid.spacing()[0];
    let scale = mass / (gamma_alpha(a, Dim::One)? * gamma_alpha(b, Dim::One)?);
    let (lo, hi) = (grid.bbox().lo()[0], grid.bbox().hi()[0]);
    let values = par::map_indices(grid.len(), |i| {
        let x = grid.center(i)[0];
        outer.values()[i] + scale * (tail(x, hi, a, b, nodes) + tail(-x, -lo, a, b, nodes))
    });
    Ok(values)
}

/// Symmetrized composite `½(I_β I_γ f + I_γ I_β f)` against `I_{β+γ} f`.
pub fn semigroup_check(id: &str, cfg: &SemigroupConfig) -> Result<SemigroupReport> {
    let (beta, gamma) = (cfg.beta, cfg.gamma);
    if !(beta > 0.0) {
        return Err(Error::param("beta", beta, "must be positive"));
    }
    if !(gamma > 0.0) {
        return Err(Error::param("gamma", gamma, "must be positive"));
    }
    if cfg.grid.n != 1 {
        return Err(Error::param(
            "grid.n",
            cfg.grid.n as f64,
            "the composition check runs in one dimension",
        ));
    }
    if !(beta + gamma < 1.0) {
        return Err(Error::param(
            "gamma",
            beta + gamma,
            "beta + gamma must be below n",
        ));
    }
    if cfg.tail_nodes == 0 {
        return Err(Error::param("tail_nodes", 0.0, "must be positive"));
    }
    let grid = cfg.grid.grid()?;
    let f = FamilySample {
        id: 0,
        base: cfg.function.clone(),
        dilation: 1.0,
        shift: 0.0,
    }
    .sample(&grid)?;
    let ab = compose(&f, beta, gamma, cfg.tail_nodes)?;
    let ba = compose(&f, gamma, beta, cfg.tail_nodes)?;
    let direct = riesz_potential(&f, beta + gamma)?;

    let quarter = 0.25 * grid.bbox().width(0);
    let center = grid.bbox().center()[0];
    let points: Vec<SemigroupPoint> = (0..grid.len())
        .filter(|&i| (grid.center(i)[0] - center).abs() <= quarter)
        .map(|i| SemigroupPoint {
            x: grid.center(i)[0],
            composite: 0.5 * (ab[i] + ba[i]),
            direct: direct.values()[i],
        })
        .collect();
    let (diff, scale) = points.iter().fold((0.0f64, 0.0f64), |(d, s), p| {
        (d.max((p.composite - p.direct).abs()), s.max(p.direct.abs()))
    });
    let discrepancy = if diff == 0.0 { 0.0 } else { diff / scale };
    let check = Check::at_most("relative sup discrepancy", discrepancy, cfg.tolerance);
    Ok(SemigroupReport {
        id: id.into(),
        beta,
        gamma,
        discrepancy,
        pass: check.pass,
        checks: vec![check],
        points,
    })
}
