//! Norms of sampled functions: `L^p(w)`, weak `L^p(w)`, weighted Morrey,
//! BMO, `BMO(w)` and `L^∞(w)`.
//!
//! Every supremum over balls runs over a finite [`BallFamily`] and is a lower
//! bound for the true norm. Ball integrals treat samples as piecewise
//! constants: in one dimension partial cells are weighted by their exact
//! overlap, in two dimensions a cell counts when its center is in the ball.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Ball, BallFamily, Dim, Grid, Piece, Point, SampledFunction};
use crate::par;
use crate::sum::NeumaierSum;
use crate::weights::{power_integral_1d, standard_sweep, w_measure, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BallValue {
    pub ball: Ball,
    pub value: f64,
}

/// Supremum over a ball family with the per-ball values behind it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupReport {
    pub value: f64,
    pub argmax: Option<Ball>,
    pub balls: Vec<BallValue>,
}

impl SupReport {
    fn collect(family: &BallFamily, values: Vec<Option<f64>>) -> Self {
        let balls: Vec<BallValue> = family
            .balls()
            .iter()
            .zip(values)
            .filter_map(|(b, v)| v.map(|value| BallValue { ball: *b, value }))
            .collect();
        let mut best = SupReport {
            value: 0.0,
            argmax: None,
            balls: Vec::new(),
        };
        for b in &balls {
            if best.argmax.is_none() || b.value > best.value {
                best.value = b.value;
                best.argmax = Some(b.ball);
            }
        }
        best.balls = balls;
        best
    }
}

fn check_p(p: f64) -> Result<()> {
    if p >= 1.0 && p.is_finite() {
        Ok(())
    } else {
        Err(Error::param("p", p, "must lie in [1, inf)"))
    }
}

/// `w`-mass of a piece, exact for one-dimensional closed-form weights.
fn piece_mass(w: &Weight, grid: &Grid, masses: &[f64], piece: &Piece) -> f64 {
    if piece.full {
        return masses[piece.index];
    }
    match w {
        Weight::Constant { c } => c * piece.measure,
        Weight::Power { beta } => power_integral_1d(*beta, piece.lo, piece.hi),
        Weight::Sampled(_) => w.value(grid.center(piece.index)) * piece.measure,
    }
}

/// Largest value of `w` at the cells meeting the ball.
fn sup_on_pieces(w: &Weight, grid: &Grid, pieces: &[Piece]) -> f64 {
    match w {
        Weight::Constant { c } => *c,
        _ => pieces.iter().fold(f64::NEG_INFINITY, |m, p| {
            m.max(w.value(grid.center(p.index)))
        }),
    }
}

/// `(∫|f|^p w)^{1/p}`.
pub fn lp_norm(f: &SampledFunction, p: f64, w: &Weight) -> Result<f64> {
    check_p(p)?;
    let masses = w.cell_masses(f.grid())?;
    let mut acc = NeumaierSum::new();
    for (v, m) in f.values().iter().zip(&masses) {
        if *v != 0.0 {
            acc.add(v.abs().powf(p) * m);
        }
    }
    Ok(acc.value().powf(1.0 / p))
}

/// `sup_t t · w({|f| > t})^{1/p}`, evaluated exactly for the piecewise-constant
/// extension by sweeping the sample values in decreasing order.
pub fn weak_lp_norm(f: &SampledFunction, p: f64, w: &Weight) -> Result<f64> {
    check_p(p)?;
    let masses = w.cell_masses(f.grid())?;
    let mut order: Vec<(f64, f64)> = f
        .values()
        .iter()
        .zip(&masses)
        .filter(|(v, _)| **v != 0.0)
        .map(|(v, m)| (v.abs(), *m))
        .collect();
    order.sort_by(|a, b| b.0.total_cmp(&a.0));
    let mut acc = NeumaierSum::new();
    let mut best = 0.0f64;
    for (k, (v, m)) in order.iter().enumerate() {
        acc.add(*m);
        let group_ends = order.get(k + 1).is_none_or(|next| next.0 != *v);
        if group_ends {
            best = best.max(v * acc.value().powf(1.0 / p));
        }
    }
    Ok(best)
}

/// `sup_B (ν(B)^{−κ} ∫_B |f|^p μ)^{1/p}`.
pub fn morrey_norm(
    f: &SampledFunction,
    p: f64,
    kappa: f64,
    mu: &Weight,
    nu: &Weight,
    family: &BallFamily,
) -> Result<SupReport> {
    check_p(p)?;
    if !(0.0..1.0).contains(&kappa) {
        return Err(Error::param("kappa", kappa, "must lie in [0, 1)"));
    }
    let grid = f.grid();
    let masses = mu.cell_masses(grid)?;
    let powered: Vec<f64> = f.values().iter().map(|v| v.abs().powf(p)).collect();
    let values = par::map_slice(family.balls(), |ball| -> Result<Option<f64>> {
        let nu_b = if kappa == 0.0 {
            1.0
        } else {
            w_measure(nu, ball, grid)?
        };
        if !(nu_b > 0.0) {
            return Err(Error::Invalid {
                key: "nu",
                message: format!(
                    "nu(B) = {nu_b} on the ball at {:?} with radius {}",
                    ball.center, ball.radius
                ),
            });
        }
        let mut acc = NeumaierSum::new();
        for piece in grid.pieces(ball) {
            let v = powered[piece.index];
            if v != 0.0 {
                acc.add(v * piece_mass(mu, grid, &masses, &piece));
            }
        }
        Ok(Some((nu_b.powf(-kappa) * acc.value()).powf(1.0 / p)))
    });
    let values = values.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(SupReport::collect(family, values))
}

/// `|B|^{-1} ∫_{B} |h − h_B|` over the part of `B` inside the box, or `None`
/// if the ball misses the box.
fn mean_oscillation(h: &SampledFunction, pieces: &[Piece]) -> Option<f64> {
    let first = pieces.first()?;
    let values = h.values();
    // measured from one sample so that constants give exactly zero
    let shift = values[first.index];
    let mut volume = NeumaierSum::new();
    let mut moment = NeumaierSum::new();
    for p in pieces {
        volume.add(p.measure);
        moment.add((values[p.index] - shift) * p.measure);
    }
    let volume = volume.value();
    let mean = moment.value() / volume;
    let mut dev = NeumaierSum::new();
    for p in pieces {
        dev.add((values[p.index] - shift - mean).abs() * p.measure);
    }
    Some(dev.value() / volume)
}

/// `sup_B |B|^{-1} ∫_B |h − h_B|`.
pub fn bmo_seminorm(h: &SampledFunction, family: &BallFamily) -> Result<SupReport> {
    weighted_bmo_norm(h, &Weight::unit(), family)
}

/// `sup_B (ess sup_B w) · |B|^{-1} ∫_B |h − h_B|`.
pub fn weighted_bmo_norm(
    h: &SampledFunction,
    w: &Weight,
    family: &BallFamily,
) -> Result<SupReport> {
    w.validate()?;
    let grid = h.grid();
    let values = par::map_slice(family.balls(), |ball| {
        let pieces = grid.pieces(ball);
        let mo = mean_oscillation(h, &pieces)?;
        Some(if w.is_unit() {
            mo
        } else {
            sup_on_pieces(w, grid, &pieces) * mo
        })
    });
    Ok(SupReport::collect(family, values))
}

/// `sup_B (ess sup_B w) · (max_B |h|)`.
pub fn weighted_linf_norm(
    h: &SampledFunction,
    w: &Weight,
    family: &BallFamily,
) -> Result<SupReport> {
    w.validate()?;
    let grid = h.grid();
    let values = par::map_slice(family.balls(), |ball| {
        let pieces = grid.pieces(ball);
        if pieces.is_empty() {
            return None;
        }
        let m = pieces
            .iter()
            .fold(0.0f64, |m, p| m.max(h.values()[p.index].abs()));
        Some(if m == 0.0 {
            0.0
        } else {
            sup_on_pieces(w, grid, &pieces) * m
        })
    });
    Ok(SupReport::collect(family, values))
}

fn default_per_octave() -> u32 {
    8
}

fn default_center_per_octave() -> u32 {
    2
}

/// Ball family as written in configs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FamilySpec {
    /// Every center with every radius.
    Explicit {
        centers: Vec<Vec<f64>>,
        radii: Vec<f64>,
    },
    /// Centers on every `stride`-th cell, geometric radii.
    Lattice {
        r_min: f64,
        r_max: f64,
        growth: f64,
        stride: usize,
    },
    /// Radii `2^{k/radii_per_octave}` in `[r_min, r_max]`; centers at the
    /// origin and at `±2^{j/centers_per_octave}` along each axis with
    /// `center_min <= |c| <= center_max`. Closed under dilation by powers of
    /// two, up to the window.
    Dyadic {
        r_min: f64,
        r_max: f64,
        #[serde(default = "default_per_octave")]
        radii_per_octave: u32,
        center_min: f64,
        center_max: f64,
        #[serde(default = "default_center_per_octave")]
        centers_per_octave: u32,
    },
    /// Radii `2^k`, `k = -6..=6`, around the origin and `±2^j` on the axes.
    Standard,
    /// One ball around the box center containing the whole box.
    Cover,
}

fn dyadic_values(lo: f64, hi: f64, per_octave: u32) -> Result<Vec<f64>> {
    if !(lo > 0.0) || !(hi >= lo) || !hi.is_finite() {
        return Err(Error::Invalid {
            key: "family",
            message: format!("need 0 < {lo} <= {hi} < inf"),
        });
    }
    if per_octave == 0 {
        return Err(Error::param("radii_per_octave", 0.0, "must be positive"));
    }
    let q = per_octave as f64;
    let first = (q * lo.log2() - 1e-9).ceil() as i64;
    let last = (q * hi.log2() + 1e-9).floor() as i64;
    Ok((first..=last).map(|k| 2f64.powf(k as f64 / q)).collect())
}

impl FamilySpec {
    pub fn resolve(&self, grid: &Grid) -> Result<BallFamily> {
        let dim = grid.dim();
        match self {
            FamilySpec::Explicit { centers, radii } => {
                let centers = centers
                    .iter()
                    .map(|c| {
                        if c.len() != dim.n() {
                            return Err(Error::DimensionMismatch {
                                expected: dim.n(),
                                found: c.len(),
                            });
                        }
                        crate::geometry::point_from_slice(c)
                    })
                    .collect::<Result<Vec<Point>>>()?;
                BallFamily::new(centers, radii.clone())
            }
            FamilySpec::Lattice {
                r_min,
                r_max,
                growth,
                stride,
            } => crate::geometry::ball_family(grid, *r_min, *r_max, *growth, *stride),
            FamilySpec::Dyadic {
                r_min,
                r_max,
                radii_per_octave,
                center_min,
                center_max,
                centers_per_octave,
            } => {
                let radii = dyadic_values(*r_min, *r_max, *radii_per_octave)?;
                let offsets = dyadic_values(*center_min, *center_max, *centers_per_octave)?;
                let mut centers: Vec<Point> = vec![[0.0, 0.0]];
                for t in offsets {
                    centers.push([t, 0.0]);
                    centers.push([-t, 0.0]);
                    if dim == Dim::Two {
                        centers.push([0.0, t]);
                        centers.push([0.0, -t]);
                    }
                }
                BallFamily::new(centers, radii)
            }
            FamilySpec::Standard => Ok(standard_sweep(dim)),
            FamilySpec::Cover => {
                let b = grid.bbox();
                let half_diag = (0..dim.n())
                    .map(|a| (0.5 * b.width(a)).powi(2))
                    .sum::<f64>()
                    .sqrt();
                BallFamily::new(vec![b.center()], vec![half_diag * (1.0 + 1e-9)])
            }
        }
    }
}

/// Which norm to evaluate, as written in configs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "space", rename_all = "kebab-case", deny_unknown_fields)]
pub enum NormSpec {
    Lp {
        p: f64,
        #[serde(default)]
        w: Weight,
    },
    WeakLp {
        p: f64,
        #[serde(default)]
        w: Weight,
    },
    Morrey {
        p: f64,
        kappa: f64,
        #[serde(default)]
        mu: Weight,
        #[serde(default)]
        nu: Weight,
        family: FamilySpec,
    },
    Bmo {
        family: FamilySpec,
    },
    WeightedBmo {
        #[serde(default)]
        w: Weight,
        family: FamilySpec,
    },
    WeightedLinf {
        #[serde(default)]
        w: Weight,
        family: FamilySpec,
    },
}

/// Result of [`NormSpec::evaluate`]; `sup` is present for supremum-type norms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormReport {
    pub space: String,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub argmax: Option<Ball>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub balls: Vec<BallValue>,
}

impl NormSpec {
    pub fn name(&self) -> &'static str {
        match self {
            NormSpec::Lp { .. } => "lp",
            NormSpec::WeakLp { .. } => "weak-lp",
            NormSpec::Morrey { .. } => "morrey",
            NormSpec::Bmo { .. } => "bmo",
            NormSpec::WeightedBmo { .. } => "weighted-bmo",
            NormSpec::WeightedLinf { .. } => "weighted-linf",
        }
    }

    pub fn evaluate(&self, f: &SampledFunction) -> Result<NormReport> {
        let grid = f.grid();
        let plain = |value: f64| NormReport {
            space: self.name().into(),
            value,
            argmax: None,
            balls: Vec::new(),
        };
        let sup = |r: SupReport| NormReport {
            space: self.name().into(),
            value: r.value,
            argmax: r.argmax,
            balls: r.balls,
        };
        Ok(match self {
            NormSpec::Lp { p, w } => plain(lp_norm(f, *p, w)?),
            NormSpec::WeakLp { p, w } => plain(weak_lp_norm(f, *p, w)?),
            NormSpec::Morrey {
                p,
                kappa,
                mu,
                nu,
                family,
            } => sup(morrey_norm(f, *p, *kappa, mu, nu, &family.resolve(grid)?)?),
            NormSpec::Bmo { family } => sup(bmo_seminorm(f, &family.resolve(grid)?)?),
            NormSpec::WeightedBmo { w, family } => {
                sup(weighted_bmo_norm(f, w, &family.resolve(grid)?)?)
            }
            NormSpec::WeightedLinf { w, family } => {
                sup(weighted_linf_norm(f, w, &family.resolve(grid)?)?)
            }
        })
    }
}
