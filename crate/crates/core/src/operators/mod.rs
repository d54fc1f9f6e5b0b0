//! Riesz potentials, fractional maximal functions and their rough-kernel
//! analogues on sampled grids.

mod fourier;
mod maximal;
mod potential;

pub use fourier::riesz_fourier_oracle;
pub use maximal::{
    fractional_maximal, fractional_maximal_field, homogeneous_fractional_maximal,
    homogeneous_fractional_maximal_field, MaximalValue,
};
pub use potential::{
    homogeneous_fractional_integral, homogeneous_fractional_integral_at,
    homogeneous_fractional_integral_with, riesz_potential, riesz_potential_at,
};

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{radius_ladder, Dim, Grid, SampledFunction};
use crate::kernels::HomogeneousKernel;
use crate::special::gamma;

/// `γ(α) = 2^α π^{n/2} Γ(α/2) / Γ((n−α)/2)`.
pub fn gamma_alpha(alpha: f64, dim: Dim) -> Result<f64> {
    check_alpha(alpha, dim)?;
    let n = dim.nf();
    Ok(2f64.powf(alpha) * PI.powf(0.5 * n) * gamma(0.5 * alpha) / gamma(0.5 * (n - alpha)))
}

pub(crate) fn check_alpha(alpha: f64, dim: Dim) -> Result<()> {
    if alpha > 0.0 && alpha < dim.nf() {
        Ok(())
    } else {
        Err(Error::param("alpha", alpha, "must lie in (0, n)"))
    }
}

/// Constant kernels are accepted in either dimension.
pub(crate) fn check_kernel(kernel: &HomogeneousKernel, grid: &Grid) -> Result<()> {
    if kernel.dim() != grid.dim() && !kernel.is_constant() {
        return Err(Error::DimensionMismatch {
            expected: grid.dim().n(),
            found: kernel.dim().n(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorKind {
    Riesz,
    FracMaximal,
    HomogeneousIntegral,
    HomogeneousMaximal,
}

impl OperatorKind {
    pub fn is_homogeneous(self) -> bool {
        matches!(
            self,
            OperatorKind::HomogeneousIntegral | OperatorKind::HomogeneousMaximal
        )
    }

    pub fn is_maximal(self) -> bool {
        matches!(
            self,
            OperatorKind::FracMaximal | OperatorKind::HomogeneousMaximal
        )
    }
}

/// Geometric ladder of radii for maximal functions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusLadder {
    pub r_min: f64,
    pub r_max: f64,
    pub growth: f64,
}

impl RadiusLadder {
    /// Powers of `2^{1/8}` from below a quarter cell to the box diameter.
    /// Anchoring at powers of two keeps the ladder invariant under dyadic
    /// dilations.
    pub fn for_grid(grid: &Grid) -> Self {
        let bbox = grid.bbox();
        let diameter = (0..grid.dim().n())
            .map(|a| bbox.width(a).powi(2))
            .sum::<f64>()
            .sqrt();
        RadiusLadder {
            r_min: 2f64.powf((0.25 * grid.min_spacing()).log2().floor()),
            r_max: 2f64.powf(diameter.log2().ceil()),
            growth: 2f64.powf(0.125),
        }
    }

    pub fn radii(&self) -> Result<Vec<f64>> {
        radius_ladder(self.r_min, self.r_max, self.growth)
    }
}

fn yes() -> bool {
    true
}

/// Operator selector as read from JSON, e.g.
/// `{"kind":"homogeneous-integral","alpha":0.5,"kernel":{"form":"constant"}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorSpec {
    pub kind: OperatorKind,
    pub alpha: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel: Option<HomogeneousKernel>,
    #[serde(default = "yes")]
    pub singular_correction: bool,
    /// Maximal kinds only; defaults to [`RadiusLadder::for_grid`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radii: Option<RadiusLadder>,
}

impl OperatorSpec {
    pub fn riesz(alpha: f64) -> Self {
        OperatorSpec {
            kind: OperatorKind::Riesz,
            alpha,
            kernel: None,
            singular_correction: true,
            radii: None,
        }
    }

    pub fn homogeneous_integral(alpha: f64, kernel: HomogeneousKernel) -> Self {
        OperatorSpec {
            kind: OperatorKind::HomogeneousIntegral,
            alpha,
            kernel: Some(kernel),
            singular_correction: true,
            radii: None,
        }
    }

    pub fn validate(&self, dim: Dim) -> Result<()> {
        check_alpha(self.alpha, dim)?;
        match (&self.kernel, self.kind.is_homogeneous()) {
            (None, true) => Err(Error::Invalid {
                key: "kernel",
                message: "homogeneous operators need a kernel".into(),
            }),
            (Some(_), false) => Err(Error::Invalid {
                key: "kernel",
                message: "only homogeneous operators take a kernel".into(),
            }),
            (Some(k), true) if k.dim() != dim && !k.is_constant() => {
                Err(Error::DimensionMismatch {
                    expected: dim.n(),
                    found: k.dim().n(),
                })
            }
            _ => Ok(()),
        }
    }

    /// Applies the operator at every cell center of `f`'s grid.
    pub fn apply(&self, f: &SampledFunction) -> Result<SampledFunction> {
        let grid = f.grid();
        self.validate(grid.dim())?;
        let unit = HomogeneousKernel::constant(grid.dim(), 1.0);
        let kernel = self.kernel.as_ref().unwrap_or(&unit);
        let radii = || {
            self.radii
                .unwrap_or_else(|| RadiusLadder::for_grid(grid))
                .radii()
        };
        match self.kind {
            OperatorKind::Riesz => {
                let t = homogeneous_fractional_integral_with(
                    f,
                    &unit,
                    self.alpha,
                    self.singular_correction,
                )?;
                Ok(t.scaled(1.0 / gamma_alpha(self.alpha, grid.dim())?))
            }
            OperatorKind::HomogeneousIntegral => homogeneous_fractional_integral_with(
                f,
                kernel,
                self.alpha,
                self.singular_correction,
            ),
            OperatorKind::FracMaximal => fractional_maximal_field(f, self.alpha, &radii()?),
            OperatorKind::HomogeneousMaximal => {
                homogeneous_fractional_maximal_field(f, kernel, self.alpha, &radii()?)
            }
        }
    }
}
