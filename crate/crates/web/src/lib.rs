//! wasm-bindgen entry points for the browser demo in `www/`.

use morreylab::experiments::{BaseShape, FamilySample};
use morreylab::kernels::dini_integral;
use morreylab::operators::OperatorSpec;
use morreylab::weights::standard_sweep;
use morreylab::{apq_constant, Dim, Exponent, Grid, HomogeneousKernel, Result, Weight};
use wasm_bindgen::prelude::*;

/// A sampled curve `y(x)` plus one summary number.
#[wasm_bindgen]
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    x: Vec<f64>,
    y: Vec<f64>,
    summary: f64,
    flags: Vec<u8>,
}

#[wasm_bindgen]
impl Curve {
    #[wasm_bindgen(getter)]
    pub fn x(&self) -> Vec<f64> {
        self.x.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn y(&self) -> Vec<f64> {
        self.y.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn summary(&self) -> f64 {
        self.summary
    }

    /// One byte per point, meaning depends on the producer.
    #[wasm_bindgen(getter)]
    pub fn flags(&self) -> Vec<u8> {
        self.flags.clone()
    }
}

fn shape(name: &str, width: f64) -> std::result::Result<BaseShape, String> {
    Ok(match name {
        "indicator" => BaseShape::Indicator {
            radius: width,
            center: vec![],
        },
        "gaussian" => BaseShape::Gaussian {
            sigma: width / 4.0,
            center: vec![],
        },
        "tent" => BaseShape::Tent {
            radius: width,
            center: vec![],
        },
        other => return Err(format!("shape: unknown shape {other:?}")),
    })
}

fn kernel(name: &str, k: u32) -> std::result::Result<HomogeneousKernel, String> {
    Ok(match name {
        "constant" => HomogeneousKernel::constant(Dim::Two, 1.0),
        "cos" => HomogeneousKernel::cos_harmonic(k),
        "sin" => HomogeneousKernel::sin_harmonic(k),
        other => return Err(format!("kernel: unknown kernel {other:?}")),
    })
}

fn exponent(s: f64) -> Exponent {
    if s.is_finite() {
        Exponent::Finite(s)
    } else {
        Exponent::Infinite
    }
}

/// `I_α f` on `[-half_width, half_width]` for a compactly supported profile
/// of support radius `width`; `summary` is the value at the center cell.
pub fn riesz_curve(
    shape_name: &str,
    width: f64,
    alpha: f64,
    half_width: f64,
    resolution: usize,
) -> std::result::Result<Curve, String> {
    let base = shape(shape_name, width)?;
    let run = || -> Result<Curve> {
        let grid = Grid::origin_centered(Dim::One, half_width, resolution)?;
        let f = FamilySample {
            id: 0,
            base,
            dilation: 1.0,
            shift: 0.0,
        }
        .sample(&grid)?;
        let out = OperatorSpec::riesz(alpha).apply(&f)?;
        let x: Vec<f64> = (0..grid.len()).map(|i| grid.center(i)[0]).collect();
        let mid = x.iter().enumerate().fold(
            0,
            |best, (i, v)| if v.abs() < x[best].abs() { i } else { best },
        );
        Ok(Curve {
            summary: out.values()[mid],
            x,
            y: out.into_values(),
            flags: f.values().iter().map(|v| u8::from(*v != 0.0)).collect(),
        })
    };
    run().map_err(|e| e.to_string())
}

/// `ω_s(δ)` against `δ`; `summary` is the Dini integral down to `delta_min`
/// and `flags[0]` is set when the integral looks divergent.
pub fn modulus_curve(
    kernel_name: &str,
    k: u32,
    s: f64,
    delta_min: f64,
) -> std::result::Result<Curve, String> {
    let kernel = kernel(kernel_name, k)?;
    let report = dini_integral(&kernel, exponent(s), delta_min).map_err(|e| e.to_string())?;
    Ok(Curve {
        x: report.profile.deltas,
        y: report.profile.omega_values,
        summary: report.value,
        flags: vec![u8::from(report.divergent)],
    })
}

/// A(p,q) constant of `|x|^β` in one dimension over the standard sweep, for
/// `steps` values of β in `[beta_min, beta_max]`. Non-finite constants come
/// back as `NaN`; `flags` marks divergence; `summary` counts admissible β.
pub fn apq_curve(
    p: f64,
    q: f64,
    beta_min: f64,
    beta_max: f64,
    steps: usize,
) -> std::result::Result<Curve, String> {
    if steps < 2 || beta_max.partial_cmp(&beta_min) != Some(std::cmp::Ordering::Greater) {
        return Err("steps: need at least 2 points and beta_min < beta_max".into());
    }
    let run = || -> Result<Curve> {
        let grid = Grid::origin_centered(Dim::One, 128.0, 4096)?;
        let family = standard_sweep(Dim::One);
        let (mut x, mut y, mut flags) = (Vec::new(), Vec::new(), Vec::new());
        for i in 0..steps {
            let beta = beta_min + (beta_max - beta_min) * i as f64 / (steps - 1) as f64;
            let r = apq_constant(&Weight::Power { beta }, p, exponent(q), &family, &grid)?;
            x.push(beta);
            y.push(if r.divergence_flag {
                f64::NAN
            } else {
                r.constant
            });
            flags.push(u8::from(r.divergence_flag));
        }
        let admissible = flags.iter().filter(|f| **f == 0).count() as f64;
        Ok(Curve {
            x,
            y,
            summary: admissible,
            flags,
        })
    };
    run().map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = rieszProfile)]
pub fn riesz_profile(
    shape: &str,
    width: f64,
    alpha: f64,
    half_width: f64,
    resolution: usize,
) -> std::result::Result<Curve, JsError> {
    riesz_curve(shape, width, alpha, half_width, resolution).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = modulusProfile)]
pub fn modulus_profile(
    kernel: &str,
    k: u32,
    s: f64,
    delta_min: f64,
) -> std::result::Result<Curve, JsError> {
    modulus_curve(kernel, k, s, delta_min).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = apqSweep)]
pub fn apq_sweep(
    p: f64,
    q: f64,
    beta_min: f64,
    beta_max: f64,
    steps: usize,
) -> std::result::Result<Curve, JsError> {
    apq_curve(p, q, beta_min, beta_max, steps).map_err(|e| JsError::new(&e))
}
