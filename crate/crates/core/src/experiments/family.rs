use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{point_from_slice, Ball, Dim, Grid, Point, SampledFunction};

/// Sub-samples per axis used to average indicators over planar cells.
const PLANAR_SUBSAMPLES: usize = 8;

/// Base function: compactly supported except for `constant`, which fills
/// the box.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "kebab-case", deny_unknown_fields)]
pub enum BaseShape {
    /// `exp(−|x−c|²/2σ²)` cut off at `|x−c| = 4σ`.
    Gaussian {
        sigma: f64,
        #[serde(default)]
        center: Vec<f64>,
    },
    Indicator {
        radius: f64,
        #[serde(default)]
        center: Vec<f64>,
    },
    /// `max(0, 1 − |x−c|/radius)`.
    Tent {
        radius: f64,
        #[serde(default)]
        center: Vec<f64>,
    },
    Zero,
    Constant {
        value: f64,
    },
}

impl BaseShape {
    fn center(&self) -> Result<Point> {
        let c = match self {
            BaseShape::Gaussian { center, .. }
            | BaseShape::Indicator { center, .. }
            | BaseShape::Tent { center, .. } => center,
            BaseShape::Zero | BaseShape::Constant { .. } => return Ok([0.0, 0.0]),
        };
        if c.is_empty() {
            Ok([0.0, 0.0])
        } else {
            point_from_slice(c)
        }
    }

    fn validate(&self, dim: Dim) -> Result<()> {
        let (key, value) = match self {
            BaseShape::Gaussian { sigma, .. } => ("sigma", *sigma),
            BaseShape::Indicator { radius, .. } | BaseShape::Tent { radius, .. } => {
                ("radius", *radius)
            }
            BaseShape::Zero => return Ok(()),
            BaseShape::Constant { value } if value.is_finite() => return Ok(()),
            BaseShape::Constant { value } => {
                return Err(Error::param("value", *value, "must be finite"))
            }
        };
        if !(value > 0.0) || !value.is_finite() {
            return Err(Error::param(key, value, "must be positive and finite"));
        }
        let c = match self {
            BaseShape::Gaussian { center, .. }
            | BaseShape::Indicator { center, .. }
            | BaseShape::Tent { center, .. } => center,
            BaseShape::Zero | BaseShape::Constant { .. } => unreachable!(),
        };
        if !c.is_empty() && c.len() != dim.n() {
            return Err(Error::DimensionMismatch {
                expected: dim.n(),
                found: c.len(),
            });
        }
        Ok(())
    }

    /// Radius of the support around the center; `None` when no bound applies.
    fn support_radius(&self) -> Option<f64> {
        match self {
            BaseShape::Gaussian { sigma, .. } => Some(4.0 * sigma),
            BaseShape::Indicator { radius, .. } | BaseShape::Tent { radius, .. } => Some(*radius),
            BaseShape::Zero | BaseShape::Constant { .. } => None,
        }
    }

    fn eval(&self, c: Point, y: Point) -> f64 {
        let d = (y[0] - c[0]).hypot(y[1] - c[1]);
        match self {
            BaseShape::Gaussian { sigma, .. } => {
                if d < 4.0 * sigma {
                    (-0.5 * (d / sigma).powi(2)).exp()
                } else {
                    0.0
                }
            }
            BaseShape::Indicator { radius, .. } => {
                if d < *radius {
                    1.0
                } else {
                    0.0
                }
            }
            BaseShape::Tent { radius, .. } => (1.0 - d / radius).max(0.0),
            BaseShape::Zero => 0.0,
            BaseShape::Constant { value } => *value,
        }
    }
}

/// Which functions a ratio study runs over.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "generator", rename_all = "kebab-case", deny_unknown_fields)]
pub enum TestFamily {
    GaussianBump {
        sigma: f64,
        #[serde(default)]
        center: Vec<f64>,
    },
    IndicatorBall {
        radius: f64,
        #[serde(default)]
        center: Vec<f64>,
    },
    Tent {
        radius: f64,
        #[serde(default)]
        center: Vec<f64>,
    },
    /// `f_λ(x) = f(λx)`.
    DilationLadder { base: BaseShape, lambdas: Vec<f64> },
    /// `f(x − t e_1)`.
    TranslationLadder { base: BaseShape, shifts: Vec<f64> },
}

/// One member of a [`TestFamily`]: `x ↦ base(λ(x − shift·e_1))`.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySample {
    pub id: usize,
    pub base: BaseShape,
    pub dilation: f64,
    pub shift: f64,
}

impl FamilySample {
    /// Dilation factor for dilation ladders, shift for translation ladders.
    pub fn label(&self, family: &TestFamily) -> f64 {
        match family {
            TestFamily::TranslationLadder { .. } => self.shift,
            _ => self.dilation,
        }
    }

    fn support(&self) -> Result<Option<Ball>> {
        let c = self.base.center()?;
        Ok(self.base.support_radius().map(|r| Ball {
            center: [c[0] / self.dilation + self.shift, c[1] / self.dilation],
            radius: r / self.dilation,
        }))
    }

    /// Cell averages on `grid` (exact for one-dimensional indicators, 8×8
    /// sub-samples for planar indicators, center values otherwise). Fails
    /// when the support leaves the box.
    pub fn sample(&self, grid: &Grid) -> Result<SampledFunction> {
        self.base.validate(grid.dim())?;
        if let Some(support) = self.support()? {
            if !grid.bbox().contains_ball(&support) {
                return Err(Error::Invalid {
                    key: "family",
                    message: format!(
                        "sample {} has support B({:?}, {}) outside the grid box",
                        self.id, support.center, support.radius
                    ),
                });
            }
        }
        let c = self.base.center()?;
        let (t, s) = (self.dilation, self.shift);
        let to_base = |x: Point| [t * (x[0] - s), t * x[1]];
        let h = grid.spacing();
        let f = match (&self.base, grid.dim()) {
            (BaseShape::Indicator { radius, .. }, Dim::One) => {
                SampledFunction::from_fn(*grid, |x| {
                    let lo = (t * (x[0] - 0.5 * h[0] - s)).max(c[0] - radius);
                    let hi = (t * (x[0] + 0.5 * h[0] - s)).min(c[0] + radius);
                    ((hi - lo) / (t * h[0])).clamp(0.0, 1.0)
                })
            }
            (BaseShape::Indicator { .. }, Dim::Two) => {
                let m = PLANAR_SUBSAMPLES;
                SampledFunction::from_fn(*grid, |x| {
                    let mut hits = 0usize;
                    for a in 0..m {
                        for b in 0..m {
                            let u = x[0] + ((a as f64 + 0.5) / m as f64 - 0.5) * h[0];
                            let v = x[1] + ((b as f64 + 0.5) / m as f64 - 0.5) * h[1];
                            if self.base.eval(c, to_base([u, v])) > 0.0 {
                                hits += 1;
                            }
                        }
                    }
                    hits as f64 / (m * m) as f64
                })
            }
            _ => SampledFunction::from_fn(*grid, |x| self.base.eval(c, to_base(x))),
        };
        Ok(f)
    }
}

fn check_positive(key: &'static str, values: &[f64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::Empty(key));
    }
    match values.iter().find(|v| !(**v > 0.0) || !v.is_finite()) {
        Some(v) => Err(Error::param(key, *v, "must be positive and finite")),
        None => Ok(()),
    }
}

impl TestFamily {
    pub fn is_dilation(&self) -> bool {
        matches!(self, TestFamily::DilationLadder { .. })
    }

    pub fn samples(&self) -> Result<Vec<FamilySample>> {
        let single = |base: BaseShape| {
            vec![FamilySample {
                id: 0,
                base,
                dilation: 1.0,
                shift: 0.0,
            }]
        };
        Ok(match self {
            TestFamily::GaussianBump { sigma, center } => single(BaseShape::Gaussian {
                sigma: *sigma,
                center: center.clone(),
            }),
            TestFamily::IndicatorBall { radius, center } => single(BaseShape::Indicator {
                radius: *radius,
                center: center.clone(),
            }),
            TestFamily::Tent { radius, center } => single(BaseShape::Tent {
                radius: *radius,
                center: center.clone(),
            }),
            TestFamily::DilationLadder { base, lambdas } => {
                check_positive("lambdas", lambdas)?;
                lambdas
                    .iter()
                    .enumerate()
                    .map(|(id, &l)| FamilySample {
                        id,
                        base: base.clone(),
                        dilation: l,
                        shift: 0.0,
                    })
                    .collect()
            }
            TestFamily::TranslationLadder { base, shifts } => {
                if shifts.is_empty() {
                    return Err(Error::Empty("shifts"));
                }
                shifts
                    .iter()
                    .enumerate()
                    .map(|(id, &s)| FamilySample {
                        id,
                        base: base.clone(),
                        dilation: 1.0,
                        shift: s,
                    })
                    .collect()
            }
        })
    }
}
