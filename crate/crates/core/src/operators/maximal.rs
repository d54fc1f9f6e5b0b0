//! `M_{Ω,α} f(x) = sup_r |B(x,r)|^{α/n−1} ∫_{B(x,r)} |Ω(x−y)| |f(y)| dy` over a
//! finite radius ladder, which gives a lower bound for the true supremum.

use serde::{Deserialize, Serialize};

use super::{check_alpha, check_kernel};
use crate::error::{Error, Result};
use crate::geometry::{distance, Dim, Grid, Point, SampledFunction};
use crate::kernels::HomogeneousKernel;
use crate::par;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaximalValue {
    pub value: f64,
    /// Radius attaining the maximum; `None` when every average is zero.
    pub radius: Option<f64>,
}

/// One-dimensional data are integrated exactly as piecewise constants using
/// prefix sums; planar data collect the cells whose centers fall in the ball.
struct Prepared<'a> {
    f: &'a SampledFunction,
    alpha: f64,
    kernel: &'a HomogeneousKernel,
    abs_mean: f64,
    prefix: Vec<f64>,
}

impl<'a> Prepared<'a> {
    fn new(
        f: &'a SampledFunction,
        kernel: &'a HomogeneousKernel,
        alpha: f64,
        radii: &[f64],
    ) -> Result<Self> {
        let grid = f.grid();
        check_alpha(alpha, grid.dim())?;
        check_kernel(kernel, grid)?;
        if radii.is_empty() {
            return Err(Error::Empty("radii"));
        }
        if let Some(r) = radii.iter().find(|r| !(**r > 0.0) || !r.is_finite()) {
            return Err(Error::param(
                "radii",
                *r,
                "radii must be positive and finite",
            ));
        }
        let prefix = match grid.dim() {
            Dim::One => {
                let h = grid.spacing()[0];
                let mut acc = 0.0;
                let mut out = Vec::with_capacity(grid.len() + 1);
                out.push(0.0);
                for v in f.values() {
                    acc += v.abs() * h;
                    out.push(acc);
                }
                out
            }
            Dim::Two => Vec::new(),
        };
        Ok(Prepared {
            f,
            alpha,
            kernel,
            abs_mean: kernel.sphere_abs_mean(),
            prefix,
        })
    }

    fn grid(&self) -> &Grid {
        self.f.grid()
    }

    /// `∫_{lo}^{t} |f|` for the piecewise-constant extension.
    fn cumulative(&self, t: f64) -> f64 {
        let g = self.grid();
        let o = g.bbox().lo()[0];
        let h = g.spacing()[0];
        let n = g.len();
        let s = (t - o) / h;
        if s <= 0.0 {
            return 0.0;
        }
        if s >= n as f64 {
            return self.prefix[n];
        }
        let k = (s.floor() as usize).min(n - 1);
        self.prefix[k] + self.f.values()[k].abs() * (t - o - k as f64 * h)
    }

    fn at(&self, x: Point, radii: &[f64]) -> MaximalValue {
        let dim = self.grid().dim();
        let exponent = self.alpha / dim.nf() - 1.0;
        let mut best = MaximalValue {
            value: 0.0,
            radius: None,
        };
        let mut consider = |r: f64, integral: f64| {
            let v = dim.ball_volume(r).powf(exponent) * integral;
            if v > best.value {
                best = MaximalValue {
                    value: v,
                    radius: Some(r),
                };
            }
        };
        match dim {
            Dim::One => {
                let left = self.kernel.value([1.0, 0.0]).abs();
                let right = self.kernel.value([-1.0, 0.0]).abs();
                let mid = self.cumulative(x[0]);
                for &r in radii {
                    let l = mid - self.cumulative(x[0] - r);
                    let rt = self.cumulative(x[0] + r) - mid;
                    consider(r, left * l + right * rt);
                }
            }
            Dim::Two => {
                let g = self.grid();
                let vol = g.cell_volume();
                let own = self.f.eval(x).abs();
                let mut contributions: Vec<(f64, f64)> = self
                    .f
                    .values()
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0.0)
                    .map(|(j, v)| {
                        let y = g.center(j);
                        let d = distance(x, y);
                        let omega = if d == 0.0 {
                            self.abs_mean
                        } else {
                            self.kernel.value([x[0] - y[0], x[1] - y[1]]).abs()
                        };
                        (d, omega * v.abs() * vol)
                    })
                    .collect();
                contributions.sort_by(|a, b| a.0.total_cmp(&b.0));
                let mut cumulative = Vec::with_capacity(contributions.len());
                let mut acc = 0.0;
                for (_, c) in &contributions {
                    acc += c;
                    cumulative.push(acc);
                }
                let half_cell = 0.5 * g.min_spacing();
                for &r in radii {
                    let integral = if r <= half_cell {
                        own * self.abs_mean * dim.ball_volume(r)
                    } else {
                        let k = contributions.partition_point(|(d, _)| *d < r);
                        if k == 0 {
                            0.0
                        } else {
                            cumulative[k - 1]
                        }
                    };
                    consider(r, integral);
                }
            }
        }
        best
    }
}

/// `M_α f(x)` over the given radii.
pub fn fractional_maximal(
    f: &SampledFunction,
    alpha: f64,
    x: Point,
    radii: &[f64],
) -> Result<MaximalValue> {
    let unit = HomogeneousKernel::constant(f.grid().dim(), 1.0);
    homogeneous_fractional_maximal(f, &unit, alpha, x, radii)
}

/// `M_{Ω,α} f(x)` over the given radii.
pub fn homogeneous_fractional_maximal(
    f: &SampledFunction,
    kernel: &HomogeneousKernel,
    alpha: f64,
    x: Point,
    radii: &[f64],
) -> Result<MaximalValue> {
    Ok(Prepared::new(f, kernel, alpha, radii)?.at(x, radii))
}

/// `M_α f` at every cell center.
pub fn fractional_maximal_field(
    f: &SampledFunction,
    alpha: f64,
    radii: &[f64],
) -> Result<SampledFunction> {
    let unit = HomogeneousKernel::constant(f.grid().dim(), 1.0);
    homogeneous_fractional_maximal_field(f, &unit, alpha, radii)
}

/// `M_{Ω,α} f` at every cell center.
pub fn homogeneous_fractional_maximal_field(
    f: &SampledFunction,
    kernel: &HomogeneousKernel,
    alpha: f64,
    radii: &[f64],
) -> Result<SampledFunction> {
    let p = Prepared::new(f, kernel, alpha, radii)?;
    let grid = *f.grid();
    let values = par::map_indices(grid.len(), |i| p.at(grid.center(i), radii).value);
    SampledFunction::new(grid, values)
}
