//! Degree-zero homogeneous kernels on the unit sphere, their sphere norms,
//! rotation moduli of continuity and Dini integrals, and the annulus
//! kernel-difference estimate used in the BMO bound.
//!
//! The sphere carries the unnormalized surface measure: counting measure on
//! `{-1, 1}` when `n = 1` and arc length (total mass 2π) when `n = 2`.
//! A rotation by angle φ in the plane has operator distance to the identity
//! `|ρ(φ)| = 2|sin(φ/2)|`; in one dimension only the identity and the
//! antipodal map exist, so the modulus of continuity is identically zero.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::geometry::{norm, sub, Dim, Point};
use crate::par;
use crate::sum::NeumaierSum;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "kebab-case")]
pub enum KernelForm {
    Constant {
        #[serde(default = "one")]
        c: f64,
    },
    /// `n = 1` only: `a` on the positive half-line, `b` on the negative one.
    TwoValues { a: f64, b: f64 },
    /// `Ω(θ) = cos(kθ)` on the circle.
    CosHarmonic { k: u32 },
    /// `Ω(θ) = sin(kθ)` on the circle.
    SinHarmonic { k: u32 },
    /// Periodic piecewise-linear interpolation of samples at angles `theta`.
    Tabulated { theta: Vec<f64>, values: Vec<f64> },
}

fn one() -> f64 {
    1.0
}

#[derive(Serialize, Deserialize)]
struct KernelSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(flatten)]
    form: KernelForm,
}

/// A function with `Ω(λx) = Ω(x)` for every `λ > 0`, stored through its
/// restriction to the unit sphere.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "KernelSpec", into = "KernelSpec")]
pub struct HomogeneousKernel {
    dim: Dim,
    form: KernelForm,
}

impl TryFrom<KernelSpec> for HomogeneousKernel {
    type Error = Error;
    fn try_from(spec: KernelSpec) -> Result<Self> {
        let n = spec.n.unwrap_or(match spec.form {
            KernelForm::TwoValues { .. } => 1,
            _ => 2,
        });
        HomogeneousKernel::new(Dim::from_n(n)?, spec.form)
    }
}

impl From<HomogeneousKernel> for KernelSpec {
    fn from(k: HomogeneousKernel) -> Self {
        KernelSpec {
            n: Some(k.dim.n()),
            form: k.form,
        }
    }
}

const MIN_TABULATED: usize = 8;

impl HomogeneousKernel {
    pub fn new(dim: Dim, form: KernelForm) -> Result<Self> {
        let bad = |message: &str| {
            Err(Error::Invalid {
                key: "kernel",
                message: message.to_string(),
            })
        };
        match (&form, dim) {
            (KernelForm::Constant { c }, _) if !c.is_finite() => {
                return bad("constant must be finite")
            }
            (KernelForm::TwoValues { a, b }, Dim::One) if !(a.is_finite() && b.is_finite()) => {
                return bad("two-values entries must be finite")
            }
            (KernelForm::TwoValues { .. }, Dim::Two) => {
                return bad("two-values form requires n = 1")
            }
            (KernelForm::CosHarmonic { .. } | KernelForm::SinHarmonic { .. }, Dim::One) => {
                return bad("harmonic forms require n = 2")
            }
            (KernelForm::Tabulated { .. }, Dim::One) => {
                return bad("tabulated form requires n = 2")
            }
            (KernelForm::Tabulated { theta, values }, Dim::Two) => {
                if theta.len() != values.len() {
                    return bad("theta and values differ in length");
                }
                if theta.len() < MIN_TABULATED {
                    return bad("tabulated kernels need at least 8 samples");
                }
                if theta.iter().chain(values).any(|v| !v.is_finite()) {
                    return bad("tabulated samples must be finite");
                }
                if theta.windows(2).any(|w| !(w[0] < w[1])) {
                    return bad("theta must be strictly increasing");
                }
                if !(theta[theta.len() - 1] - theta[0] < TAU) {
                    return bad("theta must span less than one turn");
                }
            }
            _ => {}
        }
        Ok(Self { dim, form })
    }

    pub fn constant(dim: Dim, c: f64) -> Self {
        Self::new(dim, KernelForm::Constant { c }).expect("finite constant")
    }

    pub fn two_values(a: f64, b: f64) -> Result<Self> {
        Self::new(Dim::One, KernelForm::TwoValues { a, b })
    }

    pub fn cos_harmonic(k: u32) -> Self {
        Self {
            dim: Dim::Two,
            form: KernelForm::CosHarmonic { k },
        }
    }

    pub fn sin_harmonic(k: u32) -> Self {
        Self {
            dim: Dim::Two,
            form: KernelForm::SinHarmonic { k },
        }
    }

    pub fn tabulated(theta: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        Self::new(Dim::Two, KernelForm::Tabulated { theta, values })
    }

    /// Tabulates `f` at `count` equally spaced angles starting at 0.
    pub fn tabulate<F: Fn(f64) -> f64>(count: usize, f: F) -> Result<Self> {
        let theta: Vec<f64> = (0..count).map(|j| TAU * j as f64 / count as f64).collect();
        let values = theta.iter().map(|&t| f(t)).collect();
        Self::tabulated(theta, values)
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn form(&self) -> &KernelForm {
        &self.form
    }

    pub fn is_constant(&self) -> bool {
        matches!(self.form, KernelForm::Constant { .. })
    }

    /// `Ω(x/|x|)`; the origin is a domain error.
    pub fn eval(&self, x: Point) -> Result<f64> {
        if x[0] == 0.0 && x[1] == 0.0 {
            return Err(Error::SingularPoint);
        }
        Ok(self.value(x))
    }

    /// Unchecked evaluation; callers guarantee `x != 0`.
    #[inline]
    pub fn value(&self, x: Point) -> f64 {
        match (&self.form, self.dim) {
            (KernelForm::Constant { c }, _) => *c,
            (KernelForm::TwoValues { a, b }, _) => {
                if x[0] > 0.0 {
                    *a
                } else {
                    *b
                }
            }
            _ => self.at_angle(x[1].atan2(x[0])),
        }
    }

    /// Value at the point `(cos θ, sin θ)` of the circle. For `n = 1` the
    /// sign of `cos θ` selects the half-line.
    pub fn at_angle(&self, theta: f64) -> f64 {
        match &self.form {
            KernelForm::Constant { c } => *c,
            KernelForm::TwoValues { a, b } => {
                if theta.cos() > 0.0 {
                    *a
                } else {
                    *b
                }
            }
            KernelForm::CosHarmonic { k } => (*k as f64 * theta).cos(),
            KernelForm::SinHarmonic { k } => (*k as f64 * theta).sin(),
            KernelForm::Tabulated {
                theta: nodes,
                values,
            } => interpolate_periodic(nodes, values, theta),
        }
    }

    /// Mean of `Ω` over the sphere.
    pub fn sphere_mean(&self) -> f64 {
        self.sphere_integral(|v| v) / self.dim.sphere_measure()
    }

    /// Mean of `|Ω|` over the sphere.
    pub fn sphere_abs_mean(&self) -> f64 {
        self.sphere_integral(f64::abs) / self.dim.sphere_measure()
    }

    fn sphere_integral<G: Fn(f64) -> f64>(&self, g: G) -> f64 {
        match (&self.form, self.dim) {
            (KernelForm::Constant { c }, d) => g(*c) * d.sphere_measure(),
            (KernelForm::TwoValues { a, b }, _) => g(*a) + g(*b),
            _ => {
                let m = self.sphere_samples();
                let mut acc = NeumaierSum::new();
                for j in 0..m {
                    acc.add(g(self.at_angle(TAU * j as f64 / m as f64)));
                }
                acc.value() * TAU / m as f64
            }
        }
    }

    fn sphere_samples(&self) -> usize {
        match &self.form {
            KernelForm::Tabulated { theta, .. } => SPHERE_SAMPLES.max(16 * theta.len()),
            _ => SPHERE_SAMPLES,
        }
    }
}

fn interpolate_periodic(nodes: &[f64], values: &[f64], theta: f64) -> f64 {
    let t0 = nodes[0];
    let t = t0 + (theta - t0).rem_euclid(TAU);
    let last = nodes.len() - 1;
    let i = nodes.partition_point(|&x| x <= t).saturating_sub(1);
    let (x0, y0, x1, y1) = if i == last {
        (nodes[last], values[last], nodes[0] + TAU, values[0])
    } else {
        (nodes[i], values[i], nodes[i + 1], values[i + 1])
    };
    y0 + (y1 - y0) * (t - x0) / (x1 - x0)
}

/// Angular samples used for integrals over the circle.
pub const SPHERE_SAMPLES: usize = 4096;

/// `‖Ω‖_{L^s(S^{n-1})}` with the unnormalized surface measure.
pub fn sphere_norm(kernel: &HomogeneousKernel, s: Exponent) -> f64 {
    if s.is_infinite() {
        return match (&kernel.form, kernel.dim) {
            (KernelForm::Constant { c }, _) => c.abs(),
            (KernelForm::TwoValues { a, b }, _) => a.abs().max(b.abs()),
            (KernelForm::Tabulated { values, .. }, _) => {
                values.iter().fold(0.0, |m, v| m.max(v.abs()))
            }
            _ => {
                let m = kernel.sphere_samples();
                (0..m).fold(0.0, |acc, j| {
                    acc.max(kernel.at_angle(TAU * j as f64 / m as f64).abs())
                })
            }
        };
    }
    let s = s.value();
    kernel.sphere_integral(|v| v.abs().powf(s)).powf(1.0 / s)
}

/// Sampling parameters for the rotation sup search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModulusOptions {
    /// Number of rotation angles, log-spaced on `[min_angle, π]`.
    pub rotation_samples: usize,
    /// Angular samples for the `L^s` norm over the circle.
    pub sphere_samples: usize,
    pub min_angle: f64,
}

impl Default for ModulusOptions {
    fn default() -> Self {
        Self {
            rotation_samples: 4096,
            sphere_samples: SPHERE_SAMPLES,
            min_angle: 1e-7,
        }
    }
}

/// `|ρ(φ)| = 2|sin(φ/2)|` for the planar rotation by `φ`.
#[inline]
pub fn rotation_distance(phi: f64) -> f64 {
    2.0 * (0.5 * phi).sin().abs()
}

/// The rotation deviations `‖Ω(ρ_φ ·) − Ω‖_{L^s}` over a log-spaced angle
/// grid, with their running maximum. Because the angle sets are nested in
/// `δ`, the resulting modulus is exactly nondecreasing.
#[derive(Debug, Clone, PartialEq)]
pub struct RotationScan {
    s: Exponent,
    distances: Vec<f64>,
    deviations: Vec<f64>,
    running_max: Vec<f64>,
}

impl RotationScan {
    /// Scans every rotation with `|ρ| < delta_max`.
    pub fn new(
        kernel: &HomogeneousKernel,
        s: Exponent,
        delta_max: f64,
        options: &ModulusOptions,
    ) -> Self {
        if kernel.dim == Dim::One || kernel.is_constant() {
            return Self {
                s,
                distances: Vec::new(),
                deviations: Vec::new(),
                running_max: Vec::new(),
            };
        }
        let count = options.rotation_samples.max(2);
        let ln_lo = options.min_angle.ln();
        let ln_hi = PI.ln();
        let angles: Vec<f64> = (0..count)
            .map(|j| (ln_lo + (ln_hi - ln_lo) * j as f64 / (count - 1) as f64).exp())
            .filter(|&phi| rotation_distance(phi) < delta_max)
            .collect();
        let m = options.sphere_samples.max(kernel.sphere_samples());
        let base: Vec<f64> = (0..m)
            .map(|j| kernel.at_angle(TAU * j as f64 / m as f64))
            .collect();
        let deviations = par::map_slice(&angles, |&phi| {
            let diff = |j: usize| kernel.at_angle(TAU * j as f64 / m as f64 + phi) - base[j];
            match s {
                Exponent::Infinite => (0..m).fold(0.0_f64, |acc, j| acc.max(diff(j).abs())),
                Exponent::Finite(s) => {
                    let mut acc = NeumaierSum::new();
                    for j in 0..m {
                        acc.add(diff(j).abs().powf(s));
                    }
                    (acc.value() * TAU / m as f64).powf(1.0 / s)
                }
            }
        });
        let distances = angles.iter().map(|&phi| rotation_distance(phi)).collect();
        let running_max = deviations
            .iter()
            .scan(0.0f64, |m, &d| {
                *m = m.max(d);
                Some(*m)
            })
            .collect();
        Self {
            s,
            distances,
            deviations,
            running_max,
        }
    }

    pub fn exponent(&self) -> Exponent {
        self.s
    }

    /// `ω_s(δ)` as the maximum over scanned rotations with `|ρ| < δ`.
    pub fn omega(&self, delta: f64) -> f64 {
        let k = self.distances.partition_point(|&d| d < delta);
        if k == 0 {
            0.0
        } else {
            self.running_max[k - 1]
        }
    }

    /// `∫_a^b ω_s(δ) dδ/δ` by the midpoint rule in `ln δ`.
    pub fn dini(&self, a: f64, b: f64, nodes: usize) -> f64 {
        if !(b > a) || a <= 0.0 {
            return 0.0;
        }
        let (la, lb) = (a.ln(), b.ln());
        let du = (lb - la) / nodes as f64;
        let mut acc = NeumaierSum::new();
        for j in 0..nodes {
            acc.add(self.omega((la + (j as f64 + 0.5) * du).exp()));
        }
        acc.value() * du
    }

    pub fn deviations(&self) -> &[f64] {
        &self.deviations
    }
}

/// `ω_s(δ)`, a lower bound of the supremum over rotations with `|ρ| < δ`.
pub fn modulus_of_continuity(kernel: &HomogeneousKernel, s: Exponent, delta: f64) -> Result<f64> {
    modulus_of_continuity_with(kernel, s, delta, &ModulusOptions::default())
}

pub fn modulus_of_continuity_with(
    kernel: &HomogeneousKernel,
    s: Exponent,
    delta: f64,
    options: &ModulusOptions,
) -> Result<f64> {
    if !(delta > 0.0) || delta > 2.0 {
        return Err(Error::param("delta", delta, "must lie in (0, 2]"));
    }
    Ok(RotationScan::new(kernel, s, delta, options).omega(delta))
}

/// `ω_s` sampled on a log grid together with its Dini integral.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModulusProfile {
    pub s: Exponent,
    /// Decreasing toward `delta_min`.
    pub deltas: Vec<f64>,
    pub omega_values: Vec<f64>,
    pub dini_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiniReport {
    pub value: f64,
    pub delta_min: f64,
    /// `∫ ω_s(δ) dδ/δ` over the smallest decade `[δ_min, 10 δ_min]`.
    pub last_decade: f64,
    /// Same over the next decade up, when it fits below 1.
    pub previous_decade: Option<f64>,
    /// Set when the last decade contributes more than half of the previous
    /// one, i.e. the integrand is not decaying toward 0.
    pub divergent: bool,
    pub profile: ModulusProfile,
}

/// Nodes per decade of `ln δ` in Dini quadratures.
pub const DINI_NODES_PER_DECADE: usize = 64;

/// `∫_{δ_min}^1 ω_s(δ) dδ/δ` with a convergence diagnostic.
pub fn dini_integral(
    kernel: &HomogeneousKernel,
    s: Exponent,
    delta_min: f64,
) -> Result<DiniReport> {
    dini_integral_with(kernel, s, delta_min, &ModulusOptions::default())
}

pub fn dini_integral_with(
    kernel: &HomogeneousKernel,
    s: Exponent,
    delta_min: f64,
    options: &ModulusOptions,
) -> Result<DiniReport> {
    if !(delta_min > 0.0 && delta_min < 1.0) {
        return Err(Error::param("delta_min", delta_min, "must lie in (0, 1)"));
    }
    let scan = RotationScan::new(kernel, s, 1.0, options);
    let decades = -delta_min.log10();
    let nodes = ((decades * DINI_NODES_PER_DECADE as f64).ceil() as usize).max(1);
    let (la, lb) = (delta_min.ln(), 0.0);
    let du = (lb - la) / nodes as f64;
    let deltas: Vec<f64> = (0..nodes)
        .rev()
        .map(|j| (la + (j as f64 + 0.5) * du).exp())
        .collect();
    let omega_values: Vec<f64> = deltas.iter().map(|&d| scan.omega(d)).collect();
    let value = {
        let mut acc = NeumaierSum::new();
        acc.extend(omega_values.iter().rev().copied());
        acc.value() * du
    };
    let top = (10.0 * delta_min).min(1.0);
    let last_decade = scan.dini(delta_min, top, DINI_NODES_PER_DECADE);
    let previous_decade = (100.0 * delta_min <= 1.0)
        .then(|| scan.dini(top, 100.0 * delta_min, DINI_NODES_PER_DECADE));
    let divergent = match previous_decade {
        Some(prev) => last_decade > 1e-12 && last_decade > 0.5 * prev,
        None => false,
    };
    Ok(DiniReport {
        value,
        delta_min,
        last_decade,
        previous_decade,
        divergent,
        profile: ModulusProfile {
            s,
            deltas,
            omega_values,
            dini_value: value,
        },
    })
}

/// Quadrature sizes for the annulus integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnnulusQuadrature {
    pub radial: usize,
    pub angular: usize,
}

impl Default for AnnulusQuadrature {
    fn default() -> Self {
        Self {
            radial: 512,
            angular: 1024,
        }
    }
}

fn check_lemma_args(kernel: &HomogeneousKernel, alpha: f64, radius: f64, x: Point) -> Result<()> {
    let n = kernel.dim.nf();
    if !(alpha > 0.0 && alpha < n) {
        return Err(Error::param("alpha", alpha, "must lie in (0, n)"));
    }
    if !(radius > 0.0) {
        return Err(Error::param("R", radius, "must be positive"));
    }
    if !(norm(x) < 0.5 * radius) {
        return Err(Error::param("x", norm(x), "requires |x| < R/2"));
    }
    Ok(())
}

/// `(∫_{R≤|z|<2R} |Ω(z−x)|z−x|^{α−n} − Ω(z)|z|^{α−n}|^s dz)^{1/s}` on a
/// polar grid (two radial segments when `n = 1`).
pub fn lemma_difference_lhs(
    kernel: &HomogeneousKernel,
    alpha: f64,
    s: Exponent,
    radius: f64,
    x: Point,
) -> Result<f64> {
    lemma_difference_lhs_with(kernel, alpha, s, radius, x, &AnnulusQuadrature::default())
}

pub fn lemma_difference_lhs_with(
    kernel: &HomogeneousKernel,
    alpha: f64,
    s: Exponent,
    radius: f64,
    x: Point,
    quad: &AnnulusQuadrature,
) -> Result<f64> {
    check_lemma_args(kernel, alpha, radius, x)?;
    let dim = kernel.dim;
    let x = if dim == Dim::One { [x[0], 0.0] } else { x };
    let power = alpha - dim.nf();
    let k = |z: Point| kernel.value(z) * norm(z).powf(power);
    let diff = |z: Point| (k(sub(z, x)) - k(z)).abs();
    let nr = quad.radial.max(1);
    let dr = radius / nr as f64;
    let rho = |i: usize| radius + (i as f64 + 0.5) * dr;
    match dim {
        Dim::One => {
            let samples = (0..nr).flat_map(|i| [[rho(i), 0.0], [-rho(i), 0.0]]);
            Ok(match s {
                Exponent::Infinite => samples.fold(0.0, |m, z| m.max(diff(z))),
                Exponent::Finite(s) => {
                    let mut acc = NeumaierSum::new();
                    acc.extend(samples.map(|z| diff(z).powf(s)));
                    (acc.value() * dr).powf(1.0 / s)
                }
            })
        }
        Dim::Two => {
            let na = quad.angular.max(1);
            let dt = TAU / na as f64;
            let rows = par::map_indices(nr, |i| {
                let r = rho(i);
                let point = |j: usize| {
                    let t = (j as f64 + 0.5) * dt;
                    [r * t.cos(), r * t.sin()]
                };
                match s {
                    Exponent::Infinite => (0..na).fold(0.0_f64, |m, j| m.max(diff(point(j)))),
                    Exponent::Finite(s) => {
                        let mut acc = NeumaierSum::new();
                        acc.extend((0..na).map(|j| diff(point(j)).powf(s)));
                        acc.value() * r
                    }
                }
            });
            Ok(match s {
                Exponent::Infinite => rows.into_iter().fold(0.0, f64::max),
                Exponent::Finite(s) => {
                    let mut acc = NeumaierSum::new();
                    acc.extend(rows);
                    (acc.value() * dr * dt).powf(1.0 / s)
                }
            })
        }
    }
}

/// `R^{n/s−(n−α)} (|x|/R + ∫_{|x|/2R}^{|x|/R} ω_s(δ) dδ/δ)`.
pub fn lemma_difference_rhs(
    kernel: &HomogeneousKernel,
    s: Exponent,
    alpha: f64,
    radius: f64,
    x: Point,
) -> Result<f64> {
    check_lemma_args(kernel, alpha, radius, x)?;
    let t = norm(x) / radius;
    let scan = RotationScan::new(
        kernel,
        s,
        t.max(f64::MIN_POSITIVE),
        &ModulusOptions::default(),
    );
    Ok(lemma_rhs_from_scan(&scan, kernel.dim, alpha, radius, t))
}

pub(crate) fn lemma_rhs_from_scan(
    scan: &RotationScan,
    dim: Dim,
    alpha: f64,
    radius: f64,
    t: f64,
) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let n = dim.nf();
    let exponent = n * scan.exponent().reciprocal() - (n - alpha);
    radius.powf(exponent) * (t + scan.dini(0.5 * t, t, DINI_NODES_PER_DECADE))
}

/// One point of a lemma sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LemmaSample {
    pub radius: f64,
    pub x_norm: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaSweep {
    pub samples: Vec<LemmaSample>,
    /// max ratio / min ratio over the sweep.
    pub spread: f64,
}

/// Evaluates LHS/RHS over every radius and every relative offset `|x|/R`,
/// with `x` along the direction at angle `direction`.
pub fn lemma_sweep(
    kernel: &HomogeneousKernel,
    alpha: f64,
    s: Exponent,
    radii: &[f64],
    relative_offsets: &[f64],
    direction: f64,
) -> Result<LemmaSweep> {
    if radii.is_empty() || relative_offsets.is_empty() {
        return Err(Error::Empty("lemma sweep"));
    }
    let t_max = relative_offsets.iter().fold(0.0f64, |m, &t| m.max(t));
    let scan = RotationScan::new(kernel, s, t_max * (1.0 + 1e-12), &ModulusOptions::default());
    let unit = match kernel.dim {
        Dim::One => [1.0, 0.0],
        Dim::Two => [direction.cos(), direction.sin()],
    };
    let mut samples = Vec::new();
    for &radius in radii {
        for &t in relative_offsets {
            let x = [unit[0] * t * radius, unit[1] * t * radius];
            let lhs = lemma_difference_lhs(kernel, alpha, s, radius, x)?;
            check_lemma_args(kernel, alpha, radius, x)?;
            let rhs = lemma_rhs_from_scan(&scan, kernel.dim, alpha, radius, t);
            samples.push(LemmaSample {
                radius,
                x_norm: t * radius,
                lhs,
                rhs,
                ratio: lhs / rhs,
            });
        }
    }
    let (lo, hi) = samples.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), s| {
        (lo.min(s.ratio), hi.max(s.ratio))
    });
    Ok(LemmaSweep {
        samples,
        spread: hi / lo,
    })
}
