//! Grids, balls and midpoint quadrature on boxes in one or two dimensions.
//!
//! Points are stored as `[f64; 2]`; in one dimension the second coordinate is
//! always zero, which lets distances and ball tests share one code path.

use std::f64::consts::PI;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sum::NeumaierSum;

pub type Point = [f64; 2];

#[inline]
pub fn norm(p: Point) -> f64 {
    p[0].hypot(p[1])
}

#[inline]
pub fn sub(a: Point, b: Point) -> Point {
    [a[0] - b[0], a[1] - b[1]]
}

#[inline]
pub fn scale(p: Point, t: f64) -> Point {
    [p[0] * t, p[1] * t]
}

#[inline]
pub fn distance(a: Point, b: Point) -> f64 {
    norm(sub(a, b))
}

/// Builds a point from a coordinate slice of length 1 or 2.
pub fn point_from_slice(xs: &[f64]) -> Result<Point> {
    match xs {
        [x] => Ok([*x, 0.0]),
        [x, y] => Ok([*x, *y]),
        _ => Err(Error::DimensionMismatch {
            expected: 2,
            found: xs.len(),
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub enum Dim {
    One,
    Two,
}

impl Dim {
    pub fn from_n(n: usize) -> Result<Self> {
        match n {
            1 => Ok(Dim::One),
            2 => Ok(Dim::Two),
            other => Err(Error::Invalid {
                key: "n",
                message: format!("dimension must be 1 or 2 (got {other})"),
            }),
        }
    }

    pub fn n(self) -> usize {
        match self {
            Dim::One => 1,
            Dim::Two => 2,
        }
    }

    pub fn nf(self) -> f64 {
        self.n() as f64
    }

    /// Lebesgue measure of a ball of radius `r`.
    pub fn ball_volume(self, r: f64) -> f64 {
        match self {
            Dim::One => 2.0 * r,
            Dim::Two => PI * r * r,
        }
    }

    /// Total mass of the unit sphere under the unnormalized surface measure:
    /// counting measure on {-1, 1} or arc length on the circle.
    pub fn sphere_measure(self) -> f64 {
        match self {
            Dim::One => 2.0,
            Dim::Two => 2.0 * PI,
        }
    }

    /// Radius of the ball whose volume equals `volume`.
    pub fn equal_volume_radius(self, volume: f64) -> f64 {
        match self {
            Dim::One => volume / 2.0,
            Dim::Two => (volume / PI).sqrt(),
        }
    }
}

impl TryFrom<usize> for Dim {
    type Error = Error;
    fn try_from(n: usize) -> Result<Self> {
        Dim::from_n(n)
    }
}

impl From<Dim> for usize {
    fn from(d: Dim) -> usize {
        d.n()
    }
}

/// Axis-aligned box. Membership is half-open, `lo <= x < hi`, so adjacent
/// boxes partition grid cells.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    dim: Dim,
    lo: Point,
    hi: Point,
}

impl BoundingBox {
    pub fn new(dim: Dim, lo: Point, hi: Point) -> Result<Self> {
        let n = dim.n();
        if (0..n).any(|a| !(lo[a] < hi[a]) || !lo[a].is_finite() || !hi[a].is_finite()) {
            return Err(Error::DegenerateBox);
        }
        let (mut lo, mut hi) = (lo, hi);
        if dim == Dim::One {
            lo[1] = 0.0;
            hi[1] = 0.0;
        }
        Ok(Self { dim, lo, hi })
    }

    pub fn interval(lo: f64, hi: f64) -> Result<Self> {
        Self::new(Dim::One, [lo, 0.0], [hi, 0.0])
    }

    pub fn square(lo: Point, hi: Point) -> Result<Self> {
        Self::new(Dim::Two, lo, hi)
    }

    pub fn from_slices(lo: &[f64], hi: &[f64]) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch {
                expected: lo.len(),
                found: hi.len(),
            });
        }
        let dim = Dim::from_n(lo.len())?;
        Self::new(dim, point_from_slice(lo)?, point_from_slice(hi)?)
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn lo(&self) -> Point {
        self.lo
    }

    pub fn hi(&self) -> Point {
        self.hi
    }

    pub fn width(&self, axis: usize) -> f64 {
        self.hi[axis] - self.lo[axis]
    }

    pub fn center(&self) -> Point {
        [
            0.5 * (self.lo[0] + self.hi[0]),
            0.5 * (self.lo[1] + self.hi[1]),
        ]
    }

    pub fn contains_point(&self, p: Point) -> bool {
        (0..self.dim.n()).all(|a| self.lo[a] <= p[a] && p[a] < self.hi[a])
    }

    /// True when the closed ball lies inside the closed box.
    pub fn contains_ball(&self, ball: &Ball) -> bool {
        (0..self.dim.n()).all(|a| {
            ball.center[a] - ball.radius >= self.lo[a] && ball.center[a] + ball.radius <= self.hi[a]
        })
    }
}

/// A region with a membership test, used by [`integrate`].
pub trait Region {
    fn contains(&self, p: Point) -> bool;
    /// Axis-aligned bounds enclosing the region.
    fn bounds(&self) -> (Point, Point);
}

impl Region for BoundingBox {
    fn contains(&self, p: Point) -> bool {
        self.contains_point(p)
    }
    fn bounds(&self) -> (Point, Point) {
        (self.lo, self.hi)
    }
}

/// Open ball `B(center, radius)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ball {
    pub center: Point,
    pub radius: f64,
}

impl Ball {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::param(
                "radius",
                radius,
                "must be positive and finite",
            ));
        }
        Ok(Self { center, radius })
    }

    pub fn volume(&self, dim: Dim) -> f64 {
        dim.ball_volume(self.radius)
    }

    /// Same center, radius scaled by `t`.
    pub fn dilate(&self, t: f64) -> Ball {
        Ball {
            center: self.center,
            radius: self.radius * t,
        }
    }
}

impl Region for Ball {
    #[inline]
    fn contains(&self, p: Point) -> bool {
        distance(p, self.center) < self.radius
    }
    fn bounds(&self) -> (Point, Point) {
        let r = self.radius;
        (
            [self.center[0] - r, self.center[1] - r],
            [self.center[0] + r, self.center[1] + r],
        )
    }
}

/// Regular cell-centered grid over a box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    bbox: BoundingBox,
    resolution: usize,
    spacing: Point,
}

impl Grid {
    pub fn new(bbox: BoundingBox, resolution: usize) -> Result<Self> {
        if resolution < 2 {
            return Err(Error::Resolution(resolution));
        }
        let mut spacing = [0.0; 2];
        for (a, h) in spacing.iter_mut().enumerate().take(bbox.dim.n()) {
            *h = bbox.width(a) / resolution as f64;
        }
        Ok(Self {
            bbox,
            resolution,
            spacing,
        })
    }

    pub fn bbox(&self) -> &BoundingBox {
        &self.bbox
    }

    pub fn dim(&self) -> Dim {
        self.bbox.dim
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn spacing(&self) -> Point {
        self.spacing
    }

    /// Smallest cell width over the active axes.
    pub fn min_spacing(&self) -> f64 {
        match self.dim() {
            Dim::One => self.spacing[0],
            Dim::Two => self.spacing[0].min(self.spacing[1]),
        }
    }

    pub fn len(&self) -> usize {
        self.resolution.pow(self.dim().n() as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn cell_volume(&self) -> f64 {
        match self.dim() {
            Dim::One => self.spacing[0],
            Dim::Two => self.spacing[0] * self.spacing[1],
        }
    }

    #[inline]
    pub fn axis_center(&self, axis: usize, k: usize) -> f64 {
        self.bbox.lo[axis] + (k as f64 + 0.5) * self.spacing[axis]
    }

    /// Split a flat index into per-axis indices. Axis 0 varies fastest.
    #[inline]
    pub fn unravel(&self, i: usize) -> (usize, usize) {
        match self.dim() {
            Dim::One => (i, 0),
            Dim::Two => (i % self.resolution, i / self.resolution),
        }
    }

    #[inline]
    pub fn ravel(&self, ix: usize, iy: usize) -> usize {
        iy * self.resolution + ix
    }

    #[inline]
    pub fn center(&self, i: usize) -> Point {
        let (ix, iy) = self.unravel(i);
        match self.dim() {
            Dim::One => [self.axis_center(0, ix), 0.0],
            Dim::Two => [self.axis_center(0, ix), self.axis_center(1, iy)],
        }
    }

    pub fn centers(&self) -> Vec<Point> {
        (0..self.len()).map(|i| self.center(i)).collect()
    }

    /// Index of the cell containing `p`, if `p` is inside the box.
    pub fn locate(&self, p: Point) -> Option<usize> {
        if !self.bbox.contains_point(p) {
            return None;
        }
        let k = |a: usize| {
            (((p[a] - self.bbox.lo[a]) / self.spacing[a]).floor() as usize).min(self.resolution - 1)
        };
        Some(match self.dim() {
            Dim::One => k(0),
            Dim::Two => self.ravel(k(0), k(1)),
        })
    }

    /// Cell indices along `axis` whose centers lie in the closed interval `[lo, hi]`.
    pub fn axis_range(&self, axis: usize, lo: f64, hi: f64) -> Range<usize> {
        let h = self.spacing[axis];
        let o = self.bbox.lo[axis];
        let first = ((lo - o) / h - 0.5).ceil().max(0.0);
        let last = ((hi - o) / h - 0.5).floor();
        if !(last >= first) {
            return 0..0;
        }
        let first = first as usize;
        let end = (last as usize + 1).min(self.resolution);
        first.min(end)..end
    }

    /// Visits every cell whose center lies in `region`, in increasing index order.
    pub fn for_each_in<R: Region + ?Sized, F: FnMut(usize, Point)>(&self, region: &R, mut f: F) {
        let (lo, hi) = region.bounds();
        match self.dim() {
            Dim::One => {
                for ix in self.axis_range(0, lo[0], hi[0]) {
                    let c = [self.axis_center(0, ix), 0.0];
                    if region.contains(c) {
                        f(ix, c);
                    }
                }
            }
            Dim::Two => {
                let xr = self.axis_range(0, lo[0], hi[0]);
                for iy in self.axis_range(1, lo[1], hi[1]) {
                    let y = self.axis_center(1, iy);
                    for ix in xr.clone() {
                        let c = [self.axis_center(0, ix), y];
                        if region.contains(c) {
                            f(self.ravel(ix, iy), c);
                        }
                    }
                }
            }
        }
    }

    pub fn cells_in<R: Region + ?Sized>(&self, region: &R) -> Vec<usize> {
        let mut out = Vec::new();
        self.for_each_in(region, |i, _| out.push(i));
        out
    }

    /// Same resolution over the box dilated about the origin by `t`.
    pub fn dilated(&self, t: f64) -> Result<Grid> {
        let b = BoundingBox::new(self.dim(), scale(self.bbox.lo, t), scale(self.bbox.hi, t))?;
        Grid::new(b, self.resolution)
    }
}

/// Part of a cell lying inside a ball. In one dimension this is the exact
/// overlap interval `[lo, hi]`; in two dimensions a cell belongs to a ball
/// when its center does, and the piece is the whole cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Piece {
    pub index: usize,
    pub lo: f64,
    pub hi: f64,
    /// Lebesgue measure of the piece.
    pub measure: f64,
    pub full: bool,
}

impl Grid {
    /// Grid over `[-W, W]^n` (shifted by half a cell when the resolution is
    /// even) so that the origin is always a cell center.
    pub fn origin_centered(dim: Dim, half_width: f64, resolution: usize) -> Result<Grid> {
        if !(half_width > 0.0) || !half_width.is_finite() {
            return Err(Error::param(
                "half_width",
                half_width,
                "must be positive and finite",
            ));
        }
        let h = 2.0 * half_width / resolution as f64;
        let shift = if resolution.is_multiple_of(2) {
            0.5 * h
        } else {
            0.0
        };
        let lo = -half_width - shift;
        let hi = half_width - shift;
        let bbox = match dim {
            Dim::One => BoundingBox::interval(lo, hi)?,
            Dim::Two => BoundingBox::square([lo, lo], [hi, hi])?,
        };
        Grid::new(bbox, resolution)
    }

    /// Pieces of `ball` on this grid, in increasing index order.
    pub fn pieces(&self, ball: &Ball) -> Vec<Piece> {
        let mut out = Vec::new();
        match self.dim() {
            Dim::One => {
                let h = self.spacing[0];
                let o = self.bbox.lo[0];
                let a = (ball.center[0] - ball.radius).max(o);
                let b = (ball.center[0] + ball.radius).min(self.bbox.hi[0]);
                if !(b > a) {
                    return out;
                }
                let first = (((a - o) / h).floor().max(0.0) as usize).min(self.resolution - 1);
                let last = (((b - o) / h).ceil() as usize).min(self.resolution);
                for k in first..last {
                    let cl = o + k as f64 * h;
                    let ch = o + (k + 1) as f64 * h;
                    let lo = cl.max(a);
                    let hi = ch.min(b);
                    if hi > lo {
                        let full = lo == cl && hi == ch;
                        out.push(Piece {
                            index: k,
                            lo,
                            hi,
                            measure: if full { h } else { hi - lo },
                            full,
                        });
                    }
                }
            }
            Dim::Two => {
                let vol = self.cell_volume();
                self.for_each_in(ball, |i, _| {
                    out.push(Piece {
                        index: i,
                        lo: 0.0,
                        hi: 0.0,
                        measure: vol,
                        full: true,
                    })
                });
            }
        }
        out
    }
}

/// Builds a cell-centered grid; thin wrapper over [`Grid::new`].
pub fn make_grid(bbox: BoundingBox, resolution: usize) -> Result<Grid> {
    Grid::new(bbox, resolution)
}

/// Real function sampled at cell centers and extended by zero outside the box.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    grid: Grid,
    values: Vec<f64>,
}

impl SampledFunction {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::DimensionMismatch {
                expected: grid.len(),
                found: values.len(),
            });
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::param("values", *v, "samples must be finite"));
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: Grid) -> Self {
        let values = vec![0.0; grid.len()];
        Self { grid, values }
    }

    pub fn from_fn<F: Fn(Point) -> f64>(grid: Grid, f: F) -> Self {
        let values = (0..grid.len()).map(|i| f(grid.center(i))).collect();
        Self { grid, values }
    }

    pub(crate) fn from_raw(grid: Grid, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), grid.len());
        Self { grid, values }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Piecewise-constant evaluation; zero outside the box.
    pub fn eval(&self, p: Point) -> f64 {
        self.grid.locate(p).map_or(0.0, |i| self.values[i])
    }

    pub fn map<F: Fn(f64) -> f64>(&self, f: F) -> Self {
        Self::from_raw(self.grid, self.values.iter().map(|&v| f(v)).collect())
    }

    pub fn scaled(&self, t: f64) -> Self {
        self.map(|v| v * t)
    }

    pub fn add(&self, other: &SampledFunction) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::Invalid {
                key: "grid",
                message: "functions live on different grids".into(),
            });
        }
        Ok(Self::from_raw(
            self.grid,
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0)
    }
}

/// Midpoint rule over cells whose centers lie in `region`, summed in index
/// order with compensation.
pub fn integrate<R: Region + ?Sized>(f: &SampledFunction, region: &R) -> f64 {
    let mut acc = NeumaierSum::new();
    f.grid.for_each_in(region, |i, _| acc.add(f.values[i]));
    acc.value() * f.grid.cell_volume()
}

/// Finite family of balls standing in for "all balls".
#[derive(Debug, Clone, PartialEq)]
pub struct BallFamily {
    centers: Vec<Point>,
    radii: Vec<f64>,
    balls: Vec<Ball>,
}

impl BallFamily {
    /// Every center paired with every radius, center-major.
    pub fn new(centers: Vec<Point>, radii: Vec<f64>) -> Result<Self> {
        if centers.is_empty() {
            return Err(Error::Empty("centers"));
        }
        validate_ladder(&radii)?;
        let balls = centers
            .iter()
            .flat_map(|&c| {
                radii.iter().map(move |&r| Ball {
                    center: c,
                    radius: r,
                })
            })
            .collect();
        Ok(Self {
            centers,
            radii,
            balls,
        })
    }

    pub fn from_balls(balls: Vec<Ball>) -> Result<Self> {
        if balls.is_empty() {
            return Err(Error::Empty("balls"));
        }
        let mut radii: Vec<f64> = balls.iter().map(|b| b.radius).collect();
        radii.sort_by(f64::total_cmp);
        radii.dedup();
        let mut centers: Vec<Point> = Vec::new();
        for b in &balls {
            if !centers.contains(&b.center) {
                centers.push(b.center);
            }
        }
        Ok(Self {
            centers,
            radii,
            balls,
        })
    }

    pub fn centers(&self) -> &[Point] {
        &self.centers
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn balls(&self) -> &[Ball] {
        &self.balls
    }

    pub fn len(&self) -> usize {
        self.balls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.balls.is_empty()
    }

    /// Keeps only balls contained in `bbox`.
    pub fn within(&self, bbox: &BoundingBox) -> Result<Self> {
        let balls: Vec<Ball> = self
            .balls
            .iter()
            .copied()
            .filter(|b| bbox.contains_ball(b))
            .collect();
        Self::from_balls(balls)
    }

    /// Keeps the balls whose radius satisfies `keep`.
    pub fn filter_radii<F: Fn(f64) -> bool>(&self, keep: F) -> Result<Self> {
        Self::from_balls(
            self.balls
                .iter()
                .copied()
                .filter(|b| keep(b.radius))
                .collect(),
        )
    }

    /// Every ball dilated about the origin by `t`.
    pub fn scaled(&self, t: f64) -> Result<Self> {
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::param("scale", t, "must be positive and finite"));
        }
        Self::from_balls(
            self.balls
                .iter()
                .map(|b| Ball {
                    center: scale(b.center, t),
                    radius: b.radius * t,
                })
                .collect(),
        )
    }

    /// Adds balls around extra centers (for instance the origin).
    pub fn with_centers(&self, extra: &[Point]) -> Result<Self> {
        let mut centers = self.centers.clone();
        for c in extra {
            if !centers.contains(c) {
                centers.push(*c);
            }
        }
        Self::new(centers, self.radii.clone())
    }
}

fn validate_ladder(radii: &[f64]) -> Result<()> {
    if radii.is_empty() {
        return Err(Error::Empty("radii"));
    }
    if let Some(r) = radii.iter().find(|r| !(**r > 0.0) || !r.is_finite()) {
        return Err(Error::param("radii", *r, "radii must be positive"));
    }
    if radii.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::Invalid {
            key: "radii",
            message: "radii must be strictly increasing".into(),
        });
    }
    Ok(())
}

/// Geometric ladder `r_min * growth^k` for all `k` with value at most `r_max`.
pub fn radius_ladder(r_min: f64, r_max: f64, growth: f64) -> Result<Vec<f64>> {
    if !(r_min > 0.0) {
        return Err(Error::param("r_min", r_min, "must be positive"));
    }
    if !(r_max > r_min) || !r_max.is_finite() {
        return Err(Error::param("r_max", r_max, "must exceed r_min"));
    }
    if !(growth > 1.0) || !growth.is_finite() {
        return Err(Error::param("growth", growth, "must exceed 1"));
    }
    let limit = r_max * (1.0 + 1e-12);
    let mut radii = Vec::new();
    let mut k = 0i32;
    loop {
        let r = r_min * growth.powi(k);
        if r > limit {
            break;
        }
        radii.push(r);
        k += 1;
    }
    Ok(radii)
}

/// Balls centered at every `center_stride`-th grid center (per axis, anchored
/// so the middle cell is always included) with radii on a geometric ladder.
pub fn ball_family(
    grid: &Grid,
    r_min: f64,
    r_max: f64,
    growth: f64,
    center_stride: usize,
) -> Result<BallFamily> {
    if center_stride == 0 {
        return Err(Error::param("center_stride", 0.0, "must be at least 1"));
    }
    let radii = radius_ladder(r_min, r_max, growth)?;
    let res = grid.resolution();
    let offset = (res / 2) % center_stride;
    let axis: Vec<usize> = (offset..res).step_by(center_stride).collect();
    let centers = match grid.dim() {
        Dim::One => axis.iter().map(|&ix| grid.center(ix)).collect(),
        Dim::Two => axis
            .iter()
            .flat_map(|&iy| axis.iter().map(move |&ix| (ix, iy)))
            .map(|(ix, iy)| grid.center(grid.ravel(ix, iy)))
            .collect(),
    };
    BallFamily::new(centers, radii)
}
