//! Direct summation of `∫ Ω(x−y)|x−y|^{α−n} f(y) dy` at cell centers.

use std::f64::consts::TAU;

use super::{check_alpha, check_kernel, gamma_alpha};
use crate::error::{Error, Result};
use crate::geometry::{Dim, Grid, SampledFunction};
use crate::kernels::HomogeneousKernel;
use crate::par;
use crate::sum::NeumaierSum;

/// Quadrature weights `w(i, j)` with `T f(x_i) ≈ Σ_j w(i, j) f_j`.
///
/// In one dimension each weight is the exact integral of `|x_i − y|^{α−1}`
/// over cell `j`, so piecewise-constant data are integrated exactly. In two
/// dimensions the diagonal cell is integrated in polar coordinates,
/// `∫ Ω(θ) r_max(θ)^α / α dθ`, cells within [`NEAR_FIELD`] offsets use
/// [`SUBCELLS`]² sub-cell midpoints, and the far field the plain midpoint rule.
enum Stencil {
    Line {
        radial: Vec<f64>,
        /// `Ω(x − y)` for `y` left of `x`, right of `x`, and the diagonal value.
        left: f64,
        right: f64,
        diagonal: f64,
    },
    Plane {
        table: Vec<f64>,
        res: usize,
    },
}

impl Stencil {
    fn new(grid: &Grid, kernel: &HomogeneousKernel, alpha: f64, singular_correction: bool) -> Self {
        let res = grid.resolution();
        match grid.dim() {
            Dim::One => {
                let h = grid.spacing()[0];
                let ha = h.powf(alpha) / alpha;
                let radial = (0..res)
                    .map(|d| {
                        if d == 0 {
                            if singular_correction {
                                2.0 * (0.5 * h).powf(alpha) / alpha
                            } else {
                                0.0
                            }
                        } else {
                            let d = d as f64;
                            ((d + 0.5).powf(alpha) - (d - 0.5).powf(alpha)) * ha
                        }
                    })
                    .collect();
                Stencil::Line {
                    radial,
                    left: kernel.value([1.0, 0.0]),
                    right: kernel.value([-1.0, 0.0]),
                    diagonal: kernel.sphere_mean(),
                }
            }
            Dim::Two => {
                let [hx, hy] = grid.spacing();
                let vol = grid.cell_volume();
                let width = 2 * res - 1;
                let table = (0..width * width)
                    .map(|k| {
                        let dx = (k % width) as f64 - (res - 1) as f64;
                        let dy = (k / width) as f64 - (res - 1) as f64;
                        if dx == 0.0 && dy == 0.0 {
                            if singular_correction {
                                diagonal_cell(kernel, alpha, hx, hy)
                            } else {
                                0.0
                            }
                        } else if dx.abs() <= NEAR_FIELD as f64 && dy.abs() <= NEAR_FIELD as f64 {
                            near_cell(kernel, alpha, dx * hx, dy * hy, hx, hy)
                        } else {
                            let z = [dx * hx, dy * hy];
                            let r = z[0].hypot(z[1]);
                            kernel.value(z) * r.powf(alpha - 2.0) * vol
                        }
                    })
                    .collect();
                Stencil::Plane { table, res }
            }
        }
    }

    #[inline]
    fn weight(&self, grid: &Grid, i: usize, j: usize) -> f64 {
        match self {
            Stencil::Line {
                radial,
                left,
                right,
                diagonal,
            } => {
                let omega = match j.cmp(&i) {
                    std::cmp::Ordering::Less => *left,
                    std::cmp::Ordering::Greater => *right,
                    std::cmp::Ordering::Equal => *diagonal,
                };
                omega * radial[i.abs_diff(j)]
            }
            Stencil::Plane { table, res } => {
                let (ix, iy) = grid.unravel(i);
                let (jx, jy) = grid.unravel(j);
                let width = 2 * res - 1;
                let dx = ix + res - 1 - jx;
                let dy = iy + res - 1 - jy;
                table[dy * width + dx]
            }
        }
    }
}

/// Offsets (per axis) treated as near field in two dimensions.
const NEAR_FIELD: usize = 8;
/// Sub-cells per axis for near-field cells.
const SUBCELLS: usize = 16;
/// Angular nodes for the diagonal cell.
const ANGULAR_NODES: usize = 8192;

/// `∫_cell Ω(z)|z|^{α−2} dz` over the cell centered at the origin, in polar
/// coordinates; `r_max(θ)` is where the ray leaves the rectangle.
fn diagonal_cell(kernel: &HomogeneousKernel, alpha: f64, hx: f64, hy: f64) -> f64 {
    let m = ANGULAR_NODES;
    let mut acc = NeumaierSum::new();
    for k in 0..m {
        let theta = TAU * (k as f64 + 0.5) / m as f64;
        let (s, c) = theta.sin_cos();
        let r_max = (0.5 * hx / c.abs()).min(0.5 * hy / s.abs());
        acc.add(kernel.at_angle(theta) * r_max.powf(alpha));
    }
    acc.value() * TAU / m as f64 / alpha
}

/// `∫_cell Ω(z)|z|^{α−2} dz` over the cell centered at `(cx, cy) != 0`.
fn near_cell(kernel: &HomogeneousKernel, alpha: f64, cx: f64, cy: f64, hx: f64, hy: f64) -> f64 {
    let s = SUBCELLS;
    let (sx, sy) = (hx / s as f64, hy / s as f64);
    let mut acc = NeumaierSum::new();
    for j in 0..s {
        let y = cy - 0.5 * hy + (j as f64 + 0.5) * sy;
        for i in 0..s {
            let x = cx - 0.5 * hx + (i as f64 + 0.5) * sx;
            acc.add(kernel.value([x, y]) * x.hypot(y).powf(alpha - 2.0));
        }
    }
    acc.value() * sx * sy
}

struct Prepared<'a> {
    grid: &'a Grid,
    stencil: Stencil,
    support: Vec<(usize, f64)>,
}

impl<'a> Prepared<'a> {
    fn new(
        f: &'a SampledFunction,
        kernel: &HomogeneousKernel,
        alpha: f64,
        singular_correction: bool,
    ) -> Result<Self> {
        let grid = f.grid();
        check_alpha(alpha, grid.dim())?;
        check_kernel(kernel, grid)?;
        let support = f
            .values()
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0.0)
            .map(|(j, v)| (j, *v))
            .collect();
        Ok(Prepared {
            grid,
            stencil: Stencil::new(grid, kernel, alpha, singular_correction),
            support,
        })
    }

    fn at(&self, i: usize) -> f64 {
        let mut acc = NeumaierSum::new();
        for &(j, v) in &self.support {
            acc.add(self.stencil.weight(self.grid, i, j) * v);
        }
        acc.value()
    }

    fn field(&self) -> SampledFunction {
        let values = par::map_indices(self.grid.len(), |i| self.at(i));
        SampledFunction::from_raw(*self.grid, values)
    }
}

/// `T_{Ω,α} f` at every cell center, with the singular-cell correction.
pub fn homogeneous_fractional_integral(
    f: &SampledFunction,
    kernel: &HomogeneousKernel,
    alpha: f64,
) -> Result<SampledFunction> {
    homogeneous_fractional_integral_with(f, kernel, alpha, true)
}

/// As [`homogeneous_fractional_integral`]; with `singular_correction` off
/// the diagonal cell is dropped.
pub fn homogeneous_fractional_integral_with(
    f: &SampledFunction,
    kernel: &HomogeneousKernel,
    alpha: f64,
    singular_correction: bool,
) -> Result<SampledFunction> {
    Ok(Prepared::new(f, kernel, alpha, singular_correction)?.field())
}

/// `T_{Ω,α} f` at the center of cell `index`.
pub fn homogeneous_fractional_integral_at(
    f: &SampledFunction,
    kernel: &HomogeneousKernel,
    alpha: f64,
    index: usize,
) -> Result<f64> {
    if index >= f.grid().len() {
        return Err(Error::Invalid {
            key: "index",
            message: format!("cell {index} is outside a grid of {} cells", f.grid().len()),
        });
    }
    Ok(Prepared::new(f, kernel, alpha, true)?.at(index))
}

/// `I_α f = γ(α)^{-1} T_{1,α} f` at every cell center.
pub fn riesz_potential(f: &SampledFunction, alpha: f64) -> Result<SampledFunction> {
    let g = gamma_alpha(alpha, f.grid().dim())?;
    let unit = HomogeneousKernel::constant(f.grid().dim(), 1.0);
    Ok(homogeneous_fractional_integral(f, &unit, alpha)?.scaled(1.0 / g))
}

/// `I_α f` at the center of cell `index`.
pub fn riesz_potential_at(f: &SampledFunction, alpha: f64, index: usize) -> Result<f64> {
    let g = gamma_alpha(alpha, f.grid().dim())?;
    let unit = HomogeneousKernel::constant(f.grid().dim(), 1.0);
    Ok(homogeneous_fractional_integral_at(f, &unit, alpha, index)? / g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{BoundingBox, Grid};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    /// `∫_{-1}^{1} |x−y|^{α−1} dy / γ(α)` in closed form.
    fn indicator_oracle(x: f64, alpha: f64) -> f64 {
        let g = gamma_alpha(alpha, Dim::One).unwrap();
        let v = if x.abs() < 1.0 {
            (1.0 + x).powf(alpha) + (1.0 - x).powf(alpha)
        } else {
            let d = x.abs();
            (d + 1.0).powf(alpha) - (d - 1.0).powf(alpha)
        };
        v / alpha / g
    }

    fn indicator(grid: Grid) -> SampledFunction {
        // exact cell averages of χ_{[-1,1]}
        let h = grid.spacing()[0];
        SampledFunction::from_fn(grid, |p| {
            let lo = (p[0] - 0.5 * h).max(-1.0);
            let hi = (p[0] + 0.5 * h).min(1.0);
            ((hi - lo) / h).max(0.0)
        })
    }

    #[test]
    fn riesz_indicator_matches_antiderivative() {
        let grid = Grid::origin_centered(Dim::One, 4.0, 4096).unwrap();
        let f = indicator(grid);
        for x in [0.0, 0.5, 3.0] {
            let i = grid.locate([x, 0.0]).unwrap();
            assert_eq!(grid.center(i)[0], x);
            let v = riesz_potential_at(&f, 0.5, i).unwrap();
            let want = indicator_oracle(x, 0.5);
            assert_relative_eq!(v, want, max_relative = 1e-3);
        }
        assert_relative_eq!(
            indicator_oracle(0.0, 0.5),
            4.0 / (2.0 * PI).sqrt(),
            max_relative = 1e-14
        );
        assert_relative_eq!(indicator_oracle(3.0, 0.5), 0.467_390, max_relative = 1e-5);
    }

    #[test]
    fn zero_in_zero_out() {
        let grid = Grid::origin_centered(Dim::One, 1.0, 64).unwrap();
        let out = riesz_potential(&SampledFunction::zeros(grid), 0.5).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn unit_kernel_is_gamma_times_riesz() {
        let grid = Grid::origin_centered(Dim::One, 2.0, 256).unwrap();
        let f = SampledFunction::from_fn(grid, |p| (-p[0] * p[0] * 4.0).exp());
        let t =
            homogeneous_fractional_integral(&f, &HomogeneousKernel::constant(Dim::One, 1.0), 0.5)
                .unwrap();
        let r = riesz_potential(&f, 0.5).unwrap();
        let g = gamma_alpha(0.5, Dim::One).unwrap();
        for (a, b) in t.values().iter().zip(r.values()) {
            assert_relative_eq!(*a, g * b, max_relative = 1e-8);
        }
    }

    #[test]
    fn odd_kernel_cancels_on_radial_data() {
        let grid = Grid::origin_centered(Dim::Two, 2.0, 65).unwrap();
        let f = SampledFunction::from_fn(grid, |p| (-(p[0] * p[0] + p[1] * p[1]) * 2.0).exp());
        let k = HomogeneousKernel::cos_harmonic(1);
        let i = grid.locate([0.0, 0.0]).unwrap();
        let v = homogeneous_fractional_integral_at(&f, &k, 1.0, i).unwrap();
        assert!(v.abs() < 1e-6, "{v}");
    }

    #[test]
    fn planar_riesz_of_a_disc_indicator() {
        // I_1 χ_{B(0,1)}(0) = (1/2π) ∫_{|y|<1} |y|^{-1} dy = 1
        let grid = Grid::origin_centered(Dim::Two, 1.5, 301).unwrap();
        let f = SampledFunction::from_fn(grid, |p| if p[0].hypot(p[1]) < 1.0 { 1.0 } else { 0.0 });
        let i = grid.locate([0.0, 0.0]).unwrap();
        assert_relative_eq!(
            riesz_potential_at(&f, 1.0, i).unwrap(),
            1.0,
            max_relative = 1e-2
        );
    }

    #[test]
    fn dimension_and_range_errors() {
        let grid = make_line();
        let f = SampledFunction::zeros(grid);
        assert!(riesz_potential(&f, 1.0).is_err());
        assert!(
            homogeneous_fractional_integral(&f, &HomogeneousKernel::cos_harmonic(1), 0.5).is_err()
        );
        assert!(homogeneous_fractional_integral_at(
            &f,
            &HomogeneousKernel::constant(Dim::One, 1.0),
            0.5,
            99
        )
        .is_err());
    }

    fn make_line() -> Grid {
        Grid::new(BoundingBox::interval(0.0, 1.0).unwrap(), 16).unwrap()
    }
}
