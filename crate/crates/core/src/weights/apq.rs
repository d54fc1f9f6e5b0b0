//! Muckenhoupt-Wheeden `A(p,q)` constants over finite ball families.

use serde::{Deserialize, Serialize};

use super::{contains_origin, power_integral_1d, power_value, Weight};
use crate::error::{Error, Result};
use crate::exponent::{conjugate_exponent, Exponent};
use crate::geometry::{norm, Ball, BallFamily, Dim, Grid, Point};
use crate::par;
use crate::sum::NeumaierSum;

/// Brackets above this value (or non-finite ones) are clamped to it and
/// reported as divergent.
pub const OVERFLOW_GUARD: f64 = 1e15;

/// Growth factor between the core sub-family and the full family that
/// counts as divergence.
const GROWTH_LIMIT: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ApqRegime {
    /// `p = 1 < q < ∞`: `(avg w^q)^{1/q} · ess sup 1/w`.
    OneQ,
    /// `1 < p < q < ∞`: `(avg w^q)^{1/q} (avg w^{-p'})^{1/p'}`.
    Generic,
    /// `1 < p < q = ∞`: `ess sup w · (avg w^{-p'})^{1/p'}`.
    PInfinity,
}

impl ApqRegime {
    pub fn classify(p: f64, q: Exponent) -> Result<Self> {
        let qv = q.value();
        if p == 1.0 && qv > 1.0 && q.is_infinite() {
            return Err(Error::Exponents(
                "A(1, inf) is not a supported regime".into(),
            ));
        }
        if p == 1.0 && qv > 1.0 {
            Ok(ApqRegime::OneQ)
        } else if p > 1.0 && p.is_finite() && q.is_infinite() {
            Ok(ApqRegime::PInfinity)
        } else if p > 1.0 && qv > p && qv.is_finite() {
            Ok(ApqRegime::Generic)
        } else {
            Err(Error::Exponents(format!(
                "(p, q) = ({p}, {q}) is outside every A(p,q) regime"
            )))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BallBracket {
    pub ball: Ball,
    pub value: f64,
    /// True when the raw bracket was non-finite or above the guard.
    pub clamped: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApqReport {
    pub p: f64,
    pub q: Exponent,
    pub regime: ApqRegime,
    pub brackets: Vec<BallBracket>,
    /// Supremum of the brackets over the family.
    pub constant: f64,
    pub argmax: Option<Ball>,
    /// Supremum over the balls whose radii sit in the middle half of the ladder.
    pub core_constant: f64,
    pub divergence_flag: bool,
}

/// Per-ball statistics of a weight. One-dimensional power weights are handled
/// in closed form, which keeps non-integrable brackets infinite instead of
/// grid-limited; everything else goes through cell quadrature.
struct BallStats<'a> {
    weight: &'a Weight,
    grid: &'a Grid,
}

impl BallStats<'_> {
    fn exact_power(&self) -> Option<f64> {
        match (self.weight, self.grid.dim()) {
            (Weight::Power { beta }, Dim::One) => Some(*beta),
            _ => None,
        }
    }

    /// `(1/|B|) ∫_B w^t`; `None` when no cell center falls in the ball.
    fn average_pow(&self, ball: &Ball, t: f64) -> Option<f64> {
        if let Weight::Constant { c } = self.weight {
            return Some(c.powf(t));
        }
        if let Some(beta) = self.exact_power() {
            let (c, r) = (ball.center[0], ball.radius);
            return Some(power_integral_1d(beta * t, c - r, c + r) / (2.0 * r));
        }
        let mut acc = NeumaierSum::new();
        let mut count = 0usize;
        self.grid.for_each_in(ball, |_, x| {
            acc.add(self.weight.value(x).powf(t));
            count += 1;
        });
        (count > 0).then(|| acc.value() / count as f64)
    }

    fn ess_sup(&self, ball: &Ball) -> Option<f64> {
        if let Some(beta) = self.exact_power() {
            let (c, r) = (norm(ball.center), ball.radius);
            return Some(if beta >= 0.0 {
                power_value(c + r, beta)
            } else if contains_origin(ball) {
                f64::INFINITY
            } else {
                power_value(c - r, beta)
            });
        }
        let m = self.weight.max_on(ball, self.grid);
        m.is_finite()
            .then_some(m)
            .or(if m == f64::INFINITY { Some(m) } else { None })
    }

    fn ess_inf(&self, ball: &Ball) -> Option<f64> {
        if let Some(beta) = self.exact_power() {
            let (c, r) = (norm(ball.center), ball.radius);
            return Some(if beta <= 0.0 {
                power_value(c + r, beta)
            } else if contains_origin(ball) {
                0.0
            } else {
                power_value(c - r, beta)
            });
        }
        let m = self.weight.min_on(ball, self.grid);
        (m != f64::INFINITY).then_some(m)
    }
}

/// `sup_B` of the regime-appropriate `A(p,q)` bracket over `family`.
/// Balls without any cell center are skipped for quadrature-backed weights.
pub fn apq_constant(
    w: &Weight,
    p: f64,
    q: Exponent,
    family: &BallFamily,
    grid: &Grid,
) -> Result<ApqReport> {
    w.validate()?;
    if family.is_empty() {
        return Err(Error::Empty("family"));
    }
    let regime = ApqRegime::classify(p, q)?;
    let stats = BallStats { weight: w, grid };
    let p_conj = match regime {
        ApqRegime::OneQ => f64::INFINITY,
        _ => conjugate_exponent(Exponent::Finite(p))?.value(),
    };
    let qv = q.value();
    let bracket = |ball: &Ball| -> Option<f64> {
        let value = match regime {
            ApqRegime::OneQ => {
                let a = stats.average_pow(ball, qv)?.powf(1.0 / qv);
                let inf = stats.ess_inf(ball)?;
                a / inf
            }
            ApqRegime::Generic => {
                let a = stats.average_pow(ball, qv)?.powf(1.0 / qv);
                let b = stats.average_pow(ball, -p_conj)?.powf(1.0 / p_conj);
                a * b
            }
            ApqRegime::PInfinity => {
                let sup = stats.ess_sup(ball)?;
                let b = stats.average_pow(ball, -p_conj)?.powf(1.0 / p_conj);
                sup * b
            }
        };
        Some(value)
    };
    let raw = par::map_slice(family.balls(), bracket);
    let brackets: Vec<BallBracket> = family
        .balls()
        .iter()
        .zip(raw)
        .filter_map(|(ball, v)| {
            let v = v?;
            let clamped = !(v <= OVERFLOW_GUARD);
            Some(BallBracket {
                ball: *ball,
                value: if clamped { OVERFLOW_GUARD } else { v },
                clamped,
            })
        })
        .collect();
    if brackets.is_empty() {
        return Err(Error::Empty("family"));
    }
    let (constant, argmax) = brackets
        .iter()
        .fold((f64::NEG_INFINITY, None), |(m, a), b| {
            if b.value > m {
                (b.value, Some(b.ball))
            } else {
                (m, a)
            }
        });
    let radii = family.radii();
    let (lo, hi) = if radii.len() >= 4 {
        (radii[radii.len() / 4], radii[(3 * radii.len() - 1) / 4])
    } else {
        (radii[0], radii[radii.len() - 1])
    };
    let core_constant = brackets
        .iter()
        .filter(|b| b.ball.radius >= lo && b.ball.radius <= hi)
        .fold(f64::NEG_INFINITY, |m, b| m.max(b.value));
    let core_constant = if core_constant.is_finite() {
        core_constant
    } else {
        constant
    };
    let divergence_flag =
        brackets.iter().any(|b| b.clamped) || constant > GROWTH_LIMIT * core_constant;
    Ok(ApqReport {
        p,
        q,
        regime,
        brackets,
        constant,
        argmax,
        core_constant,
        divergence_flag,
    })
}

/// Balls with radii `2^k`, `k = -6..=6`, centered at the origin and at
/// `±2^j` along the axes (`j = -6..=6`).
pub fn standard_sweep(dim: Dim) -> BallFamily {
    let radii: Vec<f64> = (-6..=6).map(|k| 2f64.powi(k)).collect();
    let mut centers: Vec<Point> = vec![[0.0, 0.0]];
    for j in -6..=6 {
        let t = 2f64.powi(j);
        centers.push([t, 0.0]);
        centers.push([-t, 0.0]);
        if dim == Dim::Two {
            centers.push([0.0, t]);
            centers.push([0.0, -t]);
        }
    }
    BallFamily::new(centers, radii).expect("static sweep is valid")
}
