//! Curve kernel: points, (rational) Bezier segments, derivative bounds and
//! the ellipse bounds built from them.
//!
//! Everything here is immutable after construction and pure, so values can
//! be shared freely across threads.

use crate::error::{Error, Result};
use crate::metrics;

/// A point of the parameter domain, in normalized covering-space
/// coordinates. Also used as a 2D vector where convenient.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub u: f64,
    pub v: f64,
}

impl Point2 {
    #[inline]
    pub fn new(u: f64, v: f64) -> Self {
        debug_assert!(u.is_finite() && v.is_finite());
        Self { u, v }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.u.is_finite() && self.v.is_finite()
    }

    #[inline]
    pub fn dot(self, other: Point2) -> f64 {
        self.u * other.u + self.v * other.v
    }

    /// Z-component of the 3D cross product of `self` and `other`.
    #[inline]
    pub fn cross(self, other: Point2) -> f64 {
        self.u * other.v - self.v * other.u
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.u.hypot(self.v)
    }

    #[inline]
    pub fn distance(self, other: Point2) -> f64 {
        (self - other).norm()
    }
}

impl std::ops::Add for Point2 {
    type Output = Point2;
    #[inline]
    fn add(self, rhs: Point2) -> Point2 {
        Point2 { u: self.u + rhs.u, v: self.v + rhs.v }
    }
}

impl std::ops::Sub for Point2 {
    type Output = Point2;
    #[inline]
    fn sub(self, rhs: Point2) -> Point2 {
        Point2 { u: self.u - rhs.u, v: self.v - rhs.v }
    }
}

impl std::ops::Mul<f64> for Point2 {
    type Output = Point2;
    #[inline]
    fn mul(self, rhs: f64) -> Point2 {
        Point2 { u: self.u * rhs, v: self.v * rhs }
    }
}

impl std::ops::Neg for Point2 {
    type Output = Point2;
    #[inline]
    fn neg(self) -> Point2 {
        Point2 { u: -self.u, v: -self.v }
    }
}

/// A 2D rational Bezier segment over `t in [0, 1]`.
///
/// Weights are omitted for the polynomial case. When present they are all
/// strictly positive and there is one per control point.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalBezierSegment {
    points: Vec<Point2>,
    weights: Option<Vec<f64>>,
}

impl RationalBezierSegment {
    /// Polynomial segment (all weights one).
    pub fn polynomial(points: Vec<Point2>) -> Result<Self> {
        Self::build(points, None)
    }

    /// Rational segment. `weights` must match the control point count and
    /// be strictly positive.
    pub fn rational(points: Vec<Point2>, weights: Vec<f64>) -> Result<Self> {
        Self::build(points, Some(weights))
    }

    fn build(points: Vec<Point2>, weights: Option<Vec<f64>>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::DegenerateInput("segment needs at least 2 control points"));
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFiniteInput);
        }
        if let Some(w) = &weights {
            if w.len() != points.len() {
                return Err(Error::DegenerateInput("weight count must match control point count"));
            }
            if w.iter().any(|&wi| !(wi > 0.0) || !wi.is_finite()) {
                return Err(Error::DegenerateInput("weights must be strictly positive"));
            }
        }
        Ok(Self { points, weights })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.points.len() - 1
    }

    #[inline]
    pub fn control_points(&self) -> &[Point2] {
        &self.points
    }

    #[inline]
    pub fn weights(&self) -> Option<&[f64]> {
        self.weights.as_deref()
    }

    #[inline]
    pub fn first_point(&self) -> Point2 {
        self.points[0]
    }

    #[inline]
    pub fn last_point(&self) -> Point2 {
        *self.points.last().unwrap()
    }

    /// Evaluate the segment at `t in [0, 1]`.
    ///
    /// Runs in time linear in the control point count and performs no
    /// allocation: Horner's scheme in the Bernstein basis, evaluated from
    /// the numerically favorable end, in homogeneous coordinates for the
    /// rational case. `t = 0` and `t = 1` return the stored endpoints
    /// directly so boundary tests see no arithmetic round-off.
    pub fn evaluate(&self, t: f64) -> Result<Point2> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::ParameterOutOfDomain { t });
        }
        Ok(self.eval_unchecked(t))
    }

    /// Evaluation without the domain check; `t` must be in `[0, 1]`.
    pub(crate) fn eval_unchecked(&self, t: f64) -> Point2 {
        let n = self.degree();
        metrics::count_curve_eval(n as u64 + 1);
        if t == 0.0 {
            return self.points[0];
        }
        if t == 1.0 {
            return self.points[n];
        }
        // Evaluate from whichever end keeps the running power small.
        let reversed = t > 0.5;
        let (x, y) = if reversed { (1.0 - t, t) } else { (t, 1.0 - t) };
        let idx = |i: usize| if reversed { n - i } else { i };

        let mut bc = 1.0; // binomial C(n, i), updated incrementally
        let mut xp = 1.0; // x^i
        match &self.weights {
            None => {
                let mut acc = self.points[idx(0)];
                for i in 1..=n {
                    xp *= x;
                    bc *= (n - i + 1) as f64 / i as f64;
                    acc = acc * y + self.points[idx(i)] * (bc * xp);
                }
                acc
            }
            Some(w) => {
                let mut acc = self.points[idx(0)] * w[idx(0)];
                let mut accw = w[idx(0)];
                for i in 1..=n {
                    xp *= x;
                    bc *= (n - i + 1) as f64 / i as f64;
                    let c = bc * xp * w[idx(i)];
                    acc = acc * y + self.points[idx(i)] * c;
                    accw = accw * y + c;
                }
                acc * (1.0 / accw)
            }
        }
    }

    /// Upper bound `B` on the derivative magnitude over the whole segment.
    ///
    /// Polynomial case: hodograph bound `max_i n * |P_i - P_{i-1}|`.
    /// Rational case: minimum of the two Floater bounds
    /// `n * (W/w) * max_{i,j} |P_i - P_j|` and
    /// `n * (W/w)^2 * max_i |P_i - P_{i-1}|`, both valid, the smaller one
    /// prunes earlier. Coincident control points yield 0.
    pub fn derivative_bound(&self) -> f64 {
        let n = self.degree() as f64;
        let hodograph = self
            .points
            .windows(2)
            .map(|w| w[1].distance(w[0]))
            .fold(0.0, f64::max)
            * n;
        match &self.weights {
            None => hodograph,
            Some(w) => {
                let wmax = w.iter().copied().fold(f64::MIN, f64::max);
                let wmin = w.iter().copied().fold(f64::MAX, f64::min);
                let ratio = wmax / wmin;
                let mut diam: f64 = 0.0;
                for i in 0..self.points.len() {
                    for j in (i + 1)..self.points.len() {
                        diam = diam.max(self.points[i].distance(self.points[j]));
                    }
                }
                (n * ratio * diam).min(ratio * ratio * hodograph)
            }
        }
    }

    /// Geometrically identical segment of higher degree, via standard
    /// Bernstein degree elevation (homogeneous coordinates when rational).
    pub fn elevate_degree(&self, target_degree: usize) -> Result<Self> {
        let current = self.degree();
        if target_degree < current {
            return Err(Error::DegreeBelowCurrent { target: target_degree, current });
        }
        let mut pts: Vec<Point2> = match &self.weights {
            None => self.points.clone(),
            Some(w) => self.points.iter().zip(w).map(|(p, &wi)| *p * wi).collect(),
        };
        let mut wts: Vec<f64> = self.weights.clone().unwrap_or_default();
        for n in current..target_degree {
            let m = n + 1;
            let mut next = Vec::with_capacity(m + 1);
            let mut next_w = Vec::with_capacity(m + 1);
            for i in 0..=m {
                let alpha = i as f64 / m as f64;
                let p = if i == 0 {
                    pts[0]
                } else if i == m {
                    pts[n]
                } else {
                    pts[i - 1] * alpha + pts[i] * (1.0 - alpha)
                };
                next.push(p);
                if !wts.is_empty() {
                    let w = if i == 0 {
                        wts[0]
                    } else if i == m {
                        wts[n]
                    } else {
                        alpha * wts[i - 1] + (1.0 - alpha) * wts[i]
                    };
                    next_w.push(w);
                }
            }
            pts = next;
            wts = next_w;
        }
        if wts.is_empty() {
            Self::polynomial(pts)
        } else {
            let points = pts.iter().zip(&wts).map(|(p, &w)| *p * (1.0 / w)).collect();
            Self::rational(points, wts)
        }
    }

    /// Control points after de Casteljau subdivision at `t`, in homogeneous
    /// form: returns `(left, right)` where each entry is `(w * P, w)`.
    /// Costs n(n+1)/2 lerps; used only by the control-polygon baseline.
    pub(crate) fn subdivide_homogeneous(
        &self,
        t: f64,
    ) -> (Vec<(Point2, f64)>, Vec<(Point2, f64)>) {
        let n = self.degree();
        metrics::count_subdivision((n * (n + 1) / 2) as u64);
        let mut work: Vec<(Point2, f64)> = match &self.weights {
            None => self.points.iter().map(|&p| (p, 1.0)).collect(),
            Some(w) => self.points.iter().zip(w).map(|(&p, &wi)| (p * wi, wi)).collect(),
        };
        let mut left = Vec::with_capacity(n + 1);
        let mut right = vec![(Point2::default(), 0.0); n + 1];
        left.push(work[0]);
        right[n] = work[n];
        for level in 1..=n {
            for i in 0..=(n - level) {
                let (p0, w0) = work[i];
                let (p1, w1) = work[i + 1];
                work[i] = (p0 * (1.0 - t) + p1 * t, w0 * (1.0 - t) + w1 * t);
            }
            left.push(work[0]);
            right[n - level] = work[n - level];
        }
        (left, right)
    }
}

/// A parameter interval `[a, b]` of a segment, `0 <= a < b <= 1`.
#[derive(Debug, Clone, Copy)]
pub struct CurveSpan<'a> {
    pub segment: &'a RationalBezierSegment,
    pub a: f64,
    pub b: f64,
}

impl<'a> CurveSpan<'a> {
    pub fn new(segment: &'a RationalBezierSegment, a: f64, b: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&a) || !(0.0..=1.0).contains(&b) || a >= b {
            return Err(Error::DegenerateInput("span requires 0 <= a < b <= 1"));
        }
        Ok(Self { segment, a, b })
    }

    pub fn full(segment: &'a RationalBezierSegment) -> Self {
        Self { segment, a: 0.0, b: 1.0 }
    }
}

/// The pruning region `d(x, f1) + d(x, f2) <= span`: an ellipse (or its
/// degenerate chord) with the span endpoints as foci.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseBound {
    pub focus_start: Point2,
    pub focus_end: Point2,
    pub span: f64,
}

impl EllipseBound {
    /// Membership test: two distance evaluations, nothing else.
    #[inline]
    pub fn contains(&self, p: Point2) -> bool {
        metrics::count_ellipse_test();
        p.distance(self.focus_start) + p.distance(self.focus_end) <= self.span
    }
}

/// Ellipse bound of a curve span: foci at the span endpoints, span constant
/// `B * (b - a)`. Exactly two curve evaluations.
pub fn ellipse_bound(span: &CurveSpan, derivative_bound: f64) -> EllipseBound {
    EllipseBound {
        focus_start: span.segment.eval_unchecked(span.a),
        focus_end: span.segment.eval_unchecked(span.b),
        span: derivative_bound * (span.b - span.a),
    }
}

/// Free-function form of [`EllipseBound::contains`].
pub fn ellipse_contains(bound: &EllipseBound, p: Point2) -> bool {
    bound.contains(p)
}
