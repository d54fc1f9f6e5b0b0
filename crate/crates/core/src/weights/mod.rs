//! Weights `w > 0` a.e.: closed-form constants and power weights `|x|^β`, or
//! positive samples on a grid.

mod apq;

pub use crate::exponent::{conjugate_exponent, exponent_identities, DerivedExponents};
pub use apq::{apq_constant, standard_sweep, ApqRegime, ApqReport, BallBracket, OVERFLOW_GUARD};

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{norm, Ball, Dim, Grid, Point, Region, SampledFunction};
use crate::sum::NeumaierSum;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "kebab-case")]
pub enum Weight {
    Constant {
        c: f64,
    },
    /// `w(x) = |x|^β`.
    Power {
        beta: f64,
    },
    #[serde(skip)]
    Sampled(SampledFunction),
}

impl Default for Weight {
    fn default() -> Self {
        Weight::Constant { c: 1.0 }
    }
}

impl Weight {
    pub fn constant(c: f64) -> Result<Self> {
        if !(c > 0.0) || !c.is_finite() {
            return Err(Error::param("c", c, "constant weight must be positive"));
        }
        Ok(Weight::Constant { c })
    }

    pub fn unit() -> Self {
        Weight::Constant { c: 1.0 }
    }

    pub fn power(beta: f64) -> Result<Self> {
        if !beta.is_finite() {
            return Err(Error::param("beta", beta, "must be finite"));
        }
        Ok(Weight::Power { beta })
    }

    pub fn sampled(f: SampledFunction) -> Result<Self> {
        if let Some(v) = f.values().iter().find(|v| !(**v > 0.0)) {
            return Err(Error::param(
                "weight",
                *v,
                "sampled weights must be positive",
            ));
        }
        Ok(Weight::Sampled(f))
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Weight::Constant { c } => Weight::constant(*c).map(|_| ()),
            Weight::Power { beta } => Weight::power(*beta).map(|_| ()),
            Weight::Sampled(_) => Ok(()),
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Weight::Constant { c } if *c == 1.0)
    }

    /// Pointwise value. Power weights at the origin give 0, 1 or ∞ by the
    /// sign of β; sampled weights vanish outside their box.
    #[inline]
    pub fn value(&self, x: Point) -> f64 {
        match self {
            Weight::Constant { c } => *c,
            Weight::Power { beta } => power_value(norm(x), *beta),
            Weight::Sampled(f) => f.eval(x),
        }
    }

    /// `w^t`; closed forms stay closed (`(|x|^β)^t = |x|^{βt}`).
    pub fn pow(&self, t: f64) -> Weight {
        match self {
            Weight::Constant { c } => Weight::Constant { c: c.powf(t) },
            Weight::Power { beta } => Weight::Power { beta: beta * t },
            Weight::Sampled(f) if t == 1.0 => Weight::Sampled(f.clone()),
            Weight::Sampled(f) => Weight::Sampled(f.map(|v| v.powf(t))),
        }
    }

    /// `∫_cell w` for every cell of `grid`. Power weights in one dimension
    /// are integrated exactly per cell; other weights use the midpoint value.
    pub fn cell_masses(&self, grid: &Grid) -> Result<Vec<f64>> {
        let vol = grid.cell_volume();
        match (self, grid.dim()) {
            (Weight::Constant { c }, _) => Ok(vec![c * vol; grid.len()]),
            (Weight::Power { beta }, Dim::One) => {
                let h = grid.spacing()[0];
                (0..grid.len())
                    .map(|i| {
                        let m = power_integral_1d(
                            *beta,
                            cell_edge(grid, i, h),
                            cell_edge(grid, i + 1, h),
                        );
                        if m.is_finite() {
                            Ok(m)
                        } else {
                            Err(Error::NotLocallyIntegrable { beta: *beta, n: 1 })
                        }
                    })
                    .collect()
            }
            (Weight::Power { beta }, Dim::Two) => (0..grid.len())
                .map(|i| {
                    let m = power_value(norm(grid.center(i)), *beta) * vol;
                    if m.is_finite() {
                        Ok(m)
                    } else {
                        Err(Error::NotLocallyIntegrable { beta: *beta, n: 2 })
                    }
                })
                .collect(),
            (Weight::Sampled(f), _) if f.grid() == grid => {
                Ok(f.values().iter().map(|v| v * vol).collect())
            }
            (Weight::Sampled(f), _) => Ok((0..grid.len())
                .map(|i| f.eval(grid.center(i)) * vol)
                .collect()),
        }
    }

    /// Maximum of `w` over the cell centers inside `ball`.
    pub fn max_on(&self, ball: &Ball, grid: &Grid) -> f64 {
        match self {
            Weight::Constant { c } => *c,
            _ => {
                let mut m = f64::NEG_INFINITY;
                grid.for_each_in(ball, |_, c| m = m.max(self.value(c)));
                m
            }
        }
    }

    /// Minimum of `w` over the cell centers inside `ball`.
    pub fn min_on(&self, ball: &Ball, grid: &Grid) -> f64 {
        match self {
            Weight::Constant { c } => *c,
            _ => {
                let mut m = f64::INFINITY;
                grid.for_each_in(ball, |_, c| m = m.min(self.value(c)));
                m
            }
        }
    }
}

/// Left edge of cell `k`, snapped to the origin when it is there up to rounding.
fn cell_edge(grid: &Grid, k: usize, h: f64) -> f64 {
    let x = grid.bbox().lo()[0] + k as f64 * h;
    if x.abs() < 1e-9 * h {
        0.0
    } else {
        x
    }
}

#[inline]
pub(crate) fn power_value(r: f64, beta: f64) -> f64 {
    if r == 0.0 {
        if beta > 0.0 {
            0.0
        } else if beta == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        r.powf(beta)
    }
}

/// `∫_a^b |x|^β dx` for `a < b`; `∞` when the integral diverges.
pub fn power_integral_1d(beta: f64, a: f64, b: f64) -> f64 {
    debug_assert!(a <= b);
    let touches_origin = a <= 0.0 && b >= 0.0;
    if beta <= -1.0 {
        if touches_origin {
            return f64::INFINITY;
        }
        if beta == -1.0 {
            return (b.abs().ln() - a.abs().ln()).abs();
        }
    }
    let e = beta + 1.0;
    let antiderivative = |x: f64| x.signum() * x.abs().powf(e) / e;
    antiderivative(b) - antiderivative(a)
}

/// `w(B)`. Closed forms for constant weights, one-dimensional power weights
/// and origin-centered power weights in the plane; cell quadrature otherwise.
pub fn w_measure(w: &Weight, ball: &Ball, grid: &Grid) -> Result<f64> {
    let dim = grid.dim();
    let (c, r) = (ball.center, ball.radius);
    match (w, dim) {
        (Weight::Constant { c: k }, _) => Ok(k * ball.volume(dim)),
        (Weight::Power { beta }, Dim::One) => {
            let m = power_integral_1d(*beta, c[0] - r, c[0] + r);
            if m.is_finite() {
                Ok(m)
            } else {
                Err(Error::NotLocallyIntegrable { beta: *beta, n: 1 })
            }
        }
        (Weight::Power { beta }, Dim::Two) => {
            let contains_origin = norm(c) < r;
            if *beta <= -2.0 && contains_origin {
                return Err(Error::NotLocallyIntegrable { beta: *beta, n: 2 });
            }
            if c == [0.0, 0.0] {
                return Ok(2.0 * PI * r.powf(beta + 2.0) / (beta + 2.0));
            }
            quadrature_measure(w, ball, grid)
        }
        (Weight::Sampled(_), _) => quadrature_measure(w, ball, grid),
    }
}

fn quadrature_measure(w: &Weight, ball: &Ball, grid: &Grid) -> Result<f64> {
    let vol = grid.cell_volume();
    let mut acc = NeumaierSum::new();
    grid.for_each_in(ball, |_, x| acc.add(w.value(x)));
    let m = acc.value() * vol;
    if m.is_finite() {
        Ok(m)
    } else {
        Err(Error::NotLocallyIntegrable {
            beta: match w {
                Weight::Power { beta } => *beta,
                _ => f64::NAN,
            },
            n: grid.dim().n(),
        })
    }
}

/// Whether `ball` contains the origin (open ball).
pub(crate) fn contains_origin(ball: &Ball) -> bool {
    ball.contains([0.0, 0.0])
}
