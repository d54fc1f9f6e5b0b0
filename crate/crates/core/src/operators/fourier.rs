//! Spectral evaluation of `I_α` through the multiplier `(2π|ξ|)^{−α}`.

use std::f64::consts::TAU;

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use super::{check_alpha, riesz_potential_at};
use crate::error::{Error, Result};
use crate::geometry::{Dim, SampledFunction};

/// Zero-padding factor per axis.
fn pad_factor(dim: Dim) -> usize {
    match dim {
        Dim::One => 8,
        Dim::Two => 4,
    }
}

/// Signed frequency of FFT bin `k` for a period of `m` samples spaced by `h`.
fn frequency(k: usize, m: usize, h: f64) -> f64 {
    let k = if k <= m / 2 {
        k as f64
    } else {
        k as f64 - m as f64
    };
    k / (m as f64 * h)
}

/// Independent oracle for [`super::riesz_potential`]: FFT on a zero-padded
/// periodic extension, with the undetermined constant mode fixed by matching
/// the direct sum at the center of the box.
pub fn riesz_fourier_oracle(f: &SampledFunction, alpha: f64) -> Result<SampledFunction> {
    let grid = *f.grid();
    let dim = grid.dim();
    check_alpha(alpha, dim)?;
    let res = grid.resolution();
    for axis in 0..dim.n() {
        let (mut lo, mut hi) = (usize::MAX, 0usize);
        for (i, v) in f.values().iter().enumerate() {
            if *v != 0.0 {
                let k = match axis {
                    0 => grid.unravel(i).0,
                    _ => grid.unravel(i).1,
                };
                lo = lo.min(k);
                hi = hi.max(k);
            }
        }
        if lo == usize::MAX {
            return Ok(SampledFunction::zeros(grid));
        }
        let support = (hi - lo + 1) as f64 * grid.spacing()[axis];
        let limit = 0.25 * grid.bbox().width(axis);
        if support > limit * (1.0 + 1e-12) {
            return Err(Error::SupportTooLarge { support, limit });
        }
    }

    let m = pad_factor(dim) * res;
    let mut planner = FftPlanner::<f64>::new();
    let forward = planner.plan_fft_forward(m);
    let inverse = planner.plan_fft_inverse(m);
    let [hx, hy] = grid.spacing();

    let values = match dim {
        Dim::One => {
            let mut buf = vec![Complex::new(0.0, 0.0); m];
            for (b, v) in buf.iter_mut().zip(f.values()) {
                b.re = *v;
            }
            forward.process(&mut buf);
            for (k, b) in buf.iter_mut().enumerate() {
                let xi = frequency(k, m, hx).abs();
                *b = if k == 0 {
                    Complex::new(0.0, 0.0)
                } else {
                    *b * (TAU * xi).powf(-alpha)
                };
            }
            inverse.process(&mut buf);
            buf[..res]
                .iter()
                .map(|c| c.re / m as f64)
                .collect::<Vec<_>>()
        }
        Dim::Two => {
            let mut buf = vec![Complex::new(0.0, 0.0); m * m];
            for (i, v) in f.values().iter().enumerate() {
                let (ix, iy) = grid.unravel(i);
                buf[iy * m + ix].re = *v;
            }
            transform_2d(&mut buf, m, forward.as_ref());
            for (k, b) in buf.iter_mut().enumerate() {
                let (kx, ky) = (k % m, k / m);
                let xi = frequency(kx, m, hx).hypot(frequency(ky, m, hy));
                *b = if k == 0 {
                    Complex::new(0.0, 0.0)
                } else {
                    *b * (TAU * xi).powf(-alpha)
                };
            }
            transform_2d(&mut buf, m, inverse.as_ref());
            let norm = (m * m) as f64;
            (0..grid.len())
                .map(|i| {
                    let (ix, iy) = grid.unravel(i);
                    buf[iy * m + ix].re / norm
                })
                .collect()
        }
    };

    let reference = grid
        .locate(grid.bbox().center())
        .expect("box center is inside the box");
    let shift = riesz_potential_at(f, alpha, reference)? - values[reference];
    SampledFunction::new(grid, values.into_iter().map(|v| v + shift).collect())
}

fn transform_2d(buf: &mut [Complex<f64>], m: usize, fft: &dyn rustfft::Fft<f64>) {
    for row in buf.chunks_mut(m) {
        fft.process(row);
    }
    let mut column = vec![Complex::new(0.0, 0.0); m];
    for x in 0..m {
        for (y, c) in column.iter_mut().enumerate() {
            *c = buf[y * m + x];
        }
        fft.process(&mut column);
        for (y, c) in column.iter().enumerate() {
            buf[y * m + x] = *c;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Grid;
    use crate::operators::riesz_potential;

    fn bump(grid: Grid, sigma: f64) -> SampledFunction {
        SampledFunction::from_fn(grid, |p| {
            let r2 = p[0] * p[0] + p[1] * p[1];
            if r2 < 16.0 * sigma * sigma {
                (-0.5 * r2 / (sigma * sigma)).exp()
            } else {
                0.0
            }
        })
    }

    fn middle_half_discrepancy(a: &SampledFunction, b: &SampledFunction) -> f64 {
        let g = a.grid();
        let c = g.bbox().center();
        let half: Vec<f64> = (0..g.dim().n()).map(|k| 0.25 * g.bbox().width(k)).collect();
        (0..g.len())
            .filter(|&i| {
                let p = g.center(i);
                (0..g.dim().n()).all(|k| (p[k] - c[k]).abs() <= half[k])
            })
            .map(|i| ((a.values()[i] - b.values()[i]) / b.values()[i]).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn agrees_with_direct_sum_in_one_dimension() {
        let grid = Grid::origin_centered(Dim::One, 8.0, 2048).unwrap();
        let f = bump(grid, 0.5);
        let direct = riesz_potential(&f, 0.5).unwrap();
        let spectral = riesz_fourier_oracle(&f, 0.5).unwrap();
        let d = middle_half_discrepancy(&spectral, &direct);
        assert!(d <= 0.02, "discrepancy {d}");
    }

    #[test]
    fn agrees_with_direct_sum_in_two_dimensions() {
        let grid = Grid::origin_centered(Dim::Two, 4.0, 256).unwrap();
        let f = bump(grid, 0.25);
        let direct = riesz_potential(&f, 1.0).unwrap();
        let spectral = riesz_fourier_oracle(&f, 1.0).unwrap();
        let d = middle_half_discrepancy(&spectral, &direct);
        assert!(d <= 0.02, "discrepancy {d}");
    }

    #[test]
    fn linear() {
        let grid = Grid::origin_centered(Dim::One, 8.0, 512).unwrap();
        let f = bump(grid, 0.5);
        let g = SampledFunction::from_fn(grid, |p| {
            if p[0].abs() < 1.0 {
                1.0 - p[0].abs()
            } else {
                0.0
            }
        });
        let lhs = riesz_fourier_oracle(&f.add(&g).unwrap(), 0.5).unwrap();
        let a = riesz_fourier_oracle(&f, 0.5).unwrap();
        let b = riesz_fourier_oracle(&g, 0.5).unwrap();
        for i in 0..grid.len() {
            let rhs = a.values()[i] + b.values()[i];
            assert!((lhs.values()[i] - rhs).abs() <= 1e-10 * rhs.abs().max(1.0));
        }
    }

    #[test]
    fn dilation_law() {
        // oracle(f(2·))(x) = 2^{-α} oracle(f)(2x)
        let grid = Grid::origin_centered(Dim::One, 8.0, 2048).unwrap();
        let f = bump(grid, 0.5);
        let f2 = SampledFunction::from_fn(grid, |p| {
            let x = 2.0 * p[0];
            if x.abs() < 2.0 {
                (-0.5 * x * x / 0.25).exp()
            } else {
                0.0
            }
        });
        let a = riesz_fourier_oracle(&f, 0.5).unwrap();
        let b = riesz_fourier_oracle(&f2, 0.5).unwrap();
        for x in [-1.5, -0.5, 0.0, 0.75, 2.0] {
            let lhs = b.eval([x, 0.0]);
            let rhs = 2f64.powf(-0.5) * a.eval([2.0 * x, 0.0]);
            assert!(((lhs - rhs) / rhs).abs() <= 0.02, "x = {x}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn rejects_wide_support() {
        let grid = Grid::origin_centered(Dim::One, 1.0, 256).unwrap();
        let f = SampledFunction::from_fn(grid, |p| if p[0].abs() < 0.5 { 1.0 } else { 0.0 });
        assert!(matches!(
            riesz_fourier_oracle(&f, 0.5),
            Err(Error::SupportTooLarge { .. })
        ));
    }
}
