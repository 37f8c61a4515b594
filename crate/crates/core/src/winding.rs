//! Winding-number primitives and the recursive ellipse-bound algorithm.
//!
//! The winding number of a curve with respect to a test point is additive
//! over concatenation and invariant under homotopies that avoid the point,
//! so any span whose bounding region excludes the point contributes exactly
//! the winding of its chord. The recursion here prunes with the ellipse
//! bound of the span; the control-polygon baseline prunes with convex hulls
//! of subdivided control points and exists for comparison benchmarks.

use crate::error::{Error, Result};
use crate::geom::{CurveSpan, EllipseBound, Point2, RationalBezierSegment};
use crate::metrics;

/// Location of a boundary contact: segment index within the queried path
/// and the curve parameter of the endpoint that triggered the tolerance
/// guard. Contacts against derived geometry (covering-space seam lines)
/// carry no location.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryHit {
    pub segment: usize,
    pub t: f64,
}

/// Result of a winding query: a finite value, or the verdict that the
/// point lies within tolerance of the boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WindingOutcome {
    Value(f64),
    OnBoundary(Option<BoundaryHit>),
}

impl WindingOutcome {
    #[inline]
    pub fn value(&self) -> Option<f64> {
        match self {
            WindingOutcome::Value(w) => Some(*w),
            WindingOutcome::OnBoundary(_) => None,
        }
    }

    #[inline]
    pub fn is_on_boundary(&self) -> bool {
        matches!(self, WindingOutcome::OnBoundary(_))
    }

    fn retag_segment(self, segment: usize) -> Self {
        match self {
            WindingOutcome::OnBoundary(Some(hit)) => {
                WindingOutcome::OnBoundary(Some(BoundaryHit { segment, ..hit }))
            }
            other => other,
        }
    }
}

/// Winding of the oriented segment `a -> b` seen from `p`: the signed
/// subtended angle over 2 pi, always in `(-1/2, 1/2)`.
///
/// `atan2(cross, dot)` of the endpoint directions is stable for nearly
/// collinear configurations. `p` must not coincide with an endpoint.
pub fn segment_winding(p: Point2, a: Point2, b: Point2) -> Result<f64> {
    if p == a || p == b {
        return Err(Error::DegenerateInput("winding query point coincides with a chord endpoint"));
    }
    Ok(chord_winding(p, a, b))
}

#[inline]
pub(crate) fn chord_winding(p: Point2, a: Point2, b: Point2) -> f64 {
    let va = a - p;
    let vb = b - p;
    f64::atan2(va.cross(vb), va.dot(vb)) / std::f64::consts::TAU
}

fn depth_cap(bound: f64, eps: f64) -> u32 {
    if bound <= eps {
        8
    } else {
        (bound / eps).log2().ceil() as u32 + 8
    }
}

/// Recursive winding of a curve span with the ellipse-bound pruning rule.
///
/// If either span endpoint lies within `eps` of `p` the query reports
/// on-boundary; if `p` is outside the span's ellipse bound the span
/// contributes its chord winding; otherwise the span is bisected at the
/// parameter midpoint and the halves are summed, with on-boundary
/// short-circuiting the whole query. A hard depth cap of
/// `ceil(log2(B/eps)) + 8` converts numerically inconsistent input into an
/// error instead of a stall.
pub fn compute_winding(
    p: Point2,
    span: &CurveSpan,
    bound: f64,
    eps: f64,
) -> Result<WindingOutcome> {
    if !(eps > 0.0) {
        return Err(Error::DegenerateInput("tolerance must be positive"));
    }
    let pa = span.segment.eval_unchecked(span.a);
    let pb = span.segment.eval_unchecked(span.b);
    let cap = depth_cap(bound, eps);
    recurse(p, span.segment, span.a, span.b, pa, pb, bound, eps, 0, cap)
}

#[allow(clippy::too_many_arguments)]
fn recurse(
    p: Point2,
    seg: &RationalBezierSegment,
    a: f64,
    b: f64,
    pa: Point2,
    pb: Point2,
    bound: f64,
    eps: f64,
    depth: u32,
    cap: u32,
) -> Result<WindingOutcome> {
    metrics::note_depth(depth);
    if p.distance(pa) < eps {
        return Ok(WindingOutcome::OnBoundary(Some(BoundaryHit { segment: 0, t: a })));
    }
    if p.distance(pb) < eps {
        return Ok(WindingOutcome::OnBoundary(Some(BoundaryHit { segment: 0, t: b })));
    }
    let ellipse = EllipseBound { focus_start: pa, focus_end: pb, span: bound * (b - a) };
    if !ellipse.contains(p) {
        return Ok(WindingOutcome::Value(chord_winding(p, pa, pb)));
    }
    if depth >= cap {
        return Err(Error::DepthCapExceeded { cap });
    }
    let m = 0.5 * (a + b);
    let pm = seg.eval_unchecked(m);
    metrics::count_subdivision(0);
    let left = recurse(p, seg, a, m, pa, pm, bound, eps, depth + 1, cap)?;
    let WindingOutcome::Value(w1) = left else {
        return Ok(left);
    };
    let right = recurse(p, seg, m, b, pm, pb, bound, eps, depth + 1, cap)?;
    let WindingOutcome::Value(w2) = right else {
        return Ok(right);
    };
    Ok(WindingOutcome::Value(w1 + w2))
}

/// A sequence of end-to-end continuous Bezier segments.
///
/// Junction gaps are measured at construction and recorded rather than
/// rejected: open boundaries are legal input and degrade the winding field
/// gracefully instead of failing.
#[derive(Debug, Clone)]
pub struct BezierPath {
    segments: Vec<RationalBezierSegment>,
    bounds: Vec<f64>,
    gaps: Vec<f64>,
    continuity_tol: f64,
}

pub const DEFAULT_CONTINUITY_TOL: f64 = 1e-9;

impl BezierPath {
    pub fn new(segments: Vec<RationalBezierSegment>) -> Result<Self> {
        Self::with_tolerance(segments, DEFAULT_CONTINUITY_TOL)
    }

    pub fn with_tolerance(segments: Vec<RationalBezierSegment>, continuity_tol: f64) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::DegenerateInput("path needs at least one segment"));
        }
        let bounds = segments.iter().map(RationalBezierSegment::derivative_bound).collect();
        let gaps = segments
            .windows(2)
            .map(|w| w[0].last_point().distance(w[1].first_point()))
            .collect();
        Ok(Self { segments, bounds, gaps, continuity_tol })
    }

    #[inline]
    pub fn segments(&self) -> &[RationalBezierSegment] {
        &self.segments
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.segments.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Per-segment derivative bounds, precomputed at construction.
    #[inline]
    pub fn derivative_bounds(&self) -> &[f64] {
        &self.bounds
    }

    /// Junction gap distances (`len() - 1` entries).
    #[inline]
    pub fn junction_gaps(&self) -> &[f64] {
        &self.gaps
    }

    /// Indices of junctions whose gap exceeds the continuity tolerance.
    pub fn continuity_defects(&self) -> Vec<usize> {
        self.gaps
            .iter()
            .enumerate()
            .filter(|(_, &g)| g > self.continuity_tol)
            .map(|(i, _)| i)
            .collect()
    }

    #[inline]
    pub fn first_point(&self) -> Point2 {
        self.segments[0].first_point()
    }

    #[inline]
    pub fn last_point(&self) -> Point2 {
        self.segments.last().unwrap().last_point()
    }

    /// Displacement from the path start to the path end.
    #[inline]
    pub fn closure_vector(&self) -> Point2 {
        self.last_point() - self.first_point()
    }

    /// Evaluate the path at a global parameter in `[0, 1]`, spread
    /// uniformly across segments.
    pub fn eval_global(&self, t: f64) -> Result<Point2> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::ParameterOutOfDomain { t });
        }
        let n = self.segments.len();
        let scaled = t * n as f64;
        let index = (scaled as usize).min(n - 1);
        Ok(self.segments[index].eval_unchecked(scaled - index as f64))
    }

    /// Extent of the control points along axis 0 (`u`) or 1 (`v`).
    pub fn control_extent(&self, axis: usize) -> (f64, f64) {
        let mut lo = f64::MAX;
        let mut hi = f64::MIN;
        for seg in &self.segments {
            for p in seg.control_points() {
                let c = if axis == 0 { p.u } else { p.v };
                lo = lo.min(c);
                hi = hi.max(c);
            }
        }
        (lo, hi)
    }

    /// The path rigidly translated by `d`.
    pub fn translated(&self, d: Point2) -> BezierPath {
        let segments = self
            .segments
            .iter()
            .map(|seg| {
                let pts = seg.control_points().iter().map(|&p| p + d).collect();
                match seg.weights() {
                    None => RationalBezierSegment::polynomial(pts).unwrap(),
                    Some(w) => RationalBezierSegment::rational(pts, w.to_vec()).unwrap(),
                }
            })
            .collect();
        BezierPath {
            segments,
            bounds: self.bounds.clone(),
            gaps: self.gaps.clone(),
            continuity_tol: self.continuity_tol,
        }
    }
}

#[derive(Debug, Clone)]
struct HierarchyNode {
    lo: usize,
    hi: usize,
    ellipse: EllipseBound,
    children: Option<(usize, usize)>,
}

/// Balanced binary tree over segment index ranges of a path.
///
/// A node over `[j, k]` carries the ellipse with foci at the start of
/// segment `j` and the end of segment `k`, and span equal to the sum of the
/// per-segment derivative bounds plus any junction gaps inside the range.
/// The sum is a valid arc-length bound and is tighter than scaling the
/// largest per-segment bound by the range length, so it prunes strictly
/// more. Construction is O(1) per node on top of the per-segment bounds.
#[derive(Debug, Clone)]
pub struct PathHierarchy {
    nodes: Vec<HierarchyNode>,
    root: usize,
    segment_count: usize,
}

pub fn build_hierarchy(path: &BezierPath) -> PathHierarchy {
    let n = path.len();
    // Prefix sums make every node span an O(1) lookup.
    let mut prefix_bound = vec![0.0; n + 1];
    for (i, &b) in path.derivative_bounds().iter().enumerate() {
        prefix_bound[i + 1] = prefix_bound[i] + b;
    }
    let mut prefix_gap = vec![0.0; n];
    for (i, &g) in path.junction_gaps().iter().enumerate() {
        prefix_gap[i + 1] = prefix_gap[i] + g;
    }
    let mut nodes = Vec::with_capacity(2 * n);
    let root = build_node(path, &prefix_bound, &prefix_gap, 0, n - 1, &mut nodes);
    PathHierarchy { nodes, root, segment_count: n }
}

fn build_node(
    path: &BezierPath,
    prefix_bound: &[f64],
    prefix_gap: &[f64],
    lo: usize,
    hi: usize,
    nodes: &mut Vec<HierarchyNode>,
) -> usize {
    let span = prefix_bound[hi + 1] - prefix_bound[lo] + prefix_gap[hi] - prefix_gap[lo];
    let ellipse = EllipseBound {
        focus_start: path.segments()[lo].first_point(),
        focus_end: path.segments()[hi].last_point(),
        span,
    };
    let children = if lo < hi {
        let mid = (lo + hi) / 2;
        let left = build_node(path, prefix_bound, prefix_gap, lo, mid, nodes);
        let right = build_node(path, prefix_bound, prefix_gap, mid + 1, hi, nodes);
        Some((left, right))
    } else {
        None
    };
    nodes.push(HierarchyNode { lo, hi, ellipse, children });
    nodes.len() - 1
}

impl PathHierarchy {
    #[inline]
    pub fn segment_count(&self) -> usize {
        self.segment_count
    }

    /// Number of tree nodes (for inspection and tests).
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Visit every node as `(lo, hi, ellipse)`.
    pub fn for_each_node(&self, mut f: impl FnMut(usize, usize, &EllipseBound)) {
        for node in &self.nodes {
            f(node.lo, node.hi, &node.ellipse);
        }
    }
}

/// Winding of a whole path using hierarchy pruning.
///
/// Any node whose ellipse excludes `p` contributes the chord winding of its
/// foci; leaves fall through to [`compute_winding`]. By additivity the
/// result equals the per-segment sum.
pub fn path_winding(
    p: Point2,
    path: &BezierPath,
    hierarchy: &PathHierarchy,
    eps: f64,
) -> Result<WindingOutcome> {
    if hierarchy.segment_count() != path.len() {
        return Err(Error::DegenerateInput("hierarchy does not match path"));
    }
    visit_node(p, path, hierarchy, hierarchy.root, eps)
}

fn visit_node(
    p: Point2,
    path: &BezierPath,
    hierarchy: &PathHierarchy,
    index: usize,
    eps: f64,
) -> Result<WindingOutcome> {
    let node = &hierarchy.nodes[index];
    if !node.ellipse.contains(p) {
        return Ok(WindingOutcome::Value(chord_winding(
            p,
            node.ellipse.focus_start,
            node.ellipse.focus_end,
        )));
    }
    match node.children {
        None => {
            let seg = &path.segments()[node.lo];
            let outcome = compute_winding(
                p,
                &CurveSpan::full(seg),
                path.derivative_bounds()[node.lo],
                eps,
            )?;
            Ok(outcome.retag_segment(node.lo))
        }
        Some((left, right)) => {
            let lw = visit_node(p, path, hierarchy, left, eps)?;
            let WindingOutcome::Value(w1) = lw else {
                return Ok(lw);
            };
            let rw = visit_node(p, path, hierarchy, right, eps)?;
            let WindingOutcome::Value(w2) = rw else {
                return Ok(rw);
            };
            Ok(WindingOutcome::Value(w1 + w2))
        }
    }
}

/// Reference path winding without hierarchy pruning: the plain per-segment
/// sum. Used to cross-check the pruned traversal.
pub fn path_winding_flat(p: Point2, path: &BezierPath, eps: f64) -> Result<WindingOutcome> {
    let mut total = 0.0;
    for (m, seg) in path.segments().iter().enumerate() {
        let outcome =
            compute_winding(p, &CurveSpan::full(seg), path.derivative_bounds()[m], eps)?;
        match outcome {
            WindingOutcome::Value(w) => total += w,
            WindingOutcome::OnBoundary(_) => return Ok(outcome.retag_segment(m)),
        }
    }
    Ok(WindingOutcome::Value(total))
}

/// Dense-discretization ground truth: sums chord windings over a uniform
/// parameter polyline with `subdivisions` pieces per segment.
///
/// Errors if `p` lies within 1e-12 of a polyline vertex, where chord
/// windings degenerate.
pub fn polyline_winding_oracle(
    p: Point2,
    path: &BezierPath,
    subdivisions: usize,
) -> Result<f64> {
    if subdivisions == 0 {
        return Err(Error::DegenerateInput("subdivision count must be at least 1"));
    }
    let mut total = 0.0;
    for seg in path.segments() {
        let mut prev = seg.first_point();
        vertex_guard(p, prev)?;
        for i in 1..=subdivisions {
            let t = i as f64 / subdivisions as f64;
            let next = seg.eval_unchecked(t);
            vertex_guard(p, next)?;
            total += chord_winding(p, prev, next);
            prev = next;
        }
    }
    Ok(total)
}

#[inline]
fn vertex_guard(p: Point2, vertex: Point2) -> Result<()> {
    if p.distance(vertex) < 1e-12 {
        return Err(Error::DegenerateInput("query point lies on a polyline vertex"));
    }
    Ok(())
}

/// Same recursion as [`compute_winding`] but bounded by the convex hull of
/// de-Casteljau-subdivided control points: the traditional scheme, kept as
/// the benchmark baseline. Subdivision costs O(n^2) per split and the
/// in-bound test O(n), versus O(n) evaluation and O(1) tests for the
/// ellipse route. Values agree with [`compute_winding`] to the accuracy of
/// the shared chord substitutions.
pub fn control_polygon_winding_baseline(
    p: Point2,
    span: &CurveSpan,
    eps: f64,
) -> Result<WindingOutcome> {
    if !(eps > 0.0) {
        return Err(Error::DegenerateInput("tolerance must be positive"));
    }
    let seg = span.segment;
    let mut poly: Vec<(Point2, f64)> = match seg.weights() {
        None => seg.control_points().iter().map(|&pt| (pt, 1.0)).collect(),
        Some(w) => seg.control_points().iter().zip(w).map(|(&pt, &wi)| (pt * wi, wi)).collect(),
    };
    // Extract the sub-span control polygon when [a, b] != [0, 1].
    if span.a > 0.0 {
        poly = seg.subdivide_homogeneous(span.a).1;
    }
    if span.b < 1.0 {
        let local = (span.b - span.a) / (1.0 - span.a);
        poly = subdivide_poly(&poly, local).0;
    }
    let cap = depth_cap(seg.derivative_bound() * (span.b - span.a), eps);
    baseline_recurse(p, &poly, span.a, span.b, eps, 0, cap)
}

fn subdivide_poly(poly: &[(Point2, f64)], t: f64) -> (Vec<(Point2, f64)>, Vec<(Point2, f64)>) {
    let n = poly.len() - 1;
    metrics::count_subdivision((n * (n + 1) / 2) as u64);
    let mut work = poly.to_vec();
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

fn baseline_recurse(
    p: Point2,
    poly: &[(Point2, f64)],
    a: f64,
    b: f64,
    eps: f64,
    depth: u32,
    cap: u32,
) -> Result<WindingOutcome> {
    metrics::note_depth(depth);
    let n = poly.len() - 1;
    let start = poly[0].0 * (1.0 / poly[0].1);
    let end = poly[n].0 * (1.0 / poly[n].1);
    if p.distance(start) < eps {
        return Ok(WindingOutcome::OnBoundary(Some(BoundaryHit { segment: 0, t: a })));
    }
    if p.distance(end) < eps {
        return Ok(WindingOutcome::OnBoundary(Some(BoundaryHit { segment: 0, t: b })));
    }
    let points: Vec<Point2> = poly.iter().map(|&(hp, w)| hp * (1.0 / w)).collect();
    let hull = convex_hull(&points);
    metrics::count_hull_test((points.len() + hull.len()) as u64);
    if !point_in_convex_polygon(p, &hull) {
        return Ok(WindingOutcome::Value(chord_winding(p, start, end)));
    }
    if depth >= cap {
        return Err(Error::DepthCapExceeded { cap });
    }
    let (left, right) = subdivide_poly(poly, 0.5);
    let m = 0.5 * (a + b);
    let lw = baseline_recurse(p, &left, a, m, eps, depth + 1, cap)?;
    let WindingOutcome::Value(w1) = lw else {
        return Ok(lw);
    };
    let rw = baseline_recurse(p, &right, m, b, eps, depth + 1, cap)?;
    let WindingOutcome::Value(w2) = rw else {
        return Ok(rw);
    };
    Ok(WindingOutcome::Value(w1 + w2))
}

/// Andrew's monotone chain; returns the hull in counter-clockwise order.
fn convex_hull(points: &[Point2]) -> Vec<Point2> {
    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort_by(|a, b| a.u.total_cmp(&b.u).then(a.v.total_cmp(&b.v)));
    pts.dedup_by(|a, b| a == b);
    if pts.len() <= 2 {
        return pts;
    }
    let mut hull: Vec<Point2> = Vec::with_capacity(pts.len() + 1);
    // Lower hull.
    for &p in &pts {
        while hull.len() >= 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    // Upper hull; never pop into the lower chain.
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

#[inline]
fn turn(r: Point2, q: Point2, p: Point2) -> f64 {
    (q - r).cross(p - r)
}

/// Inside-or-on test against a counter-clockwise convex polygon. Collinear
/// degenerate hulls report containment whenever `p` is within the strip,
/// which only costs an extra subdivision, never a wrong prune.
fn point_in_convex_polygon(p: Point2, hull: &[Point2]) -> bool {
    match hull.len() {
        0 => false,
        1 => p == hull[0],
        2 => {
            let d = hull[1] - hull[0];
            let r = p - hull[0];
            let t = r.dot(d) / d.dot(d).max(f64::MIN_POSITIVE);
            d.cross(r).abs() <= 1e-15 && (0.0..=1.0).contains(&t)
        }
        _ => {
            for i in 0..hull.len() {
                let a = hull[i];
                let b = hull[(i + 1) % hull.len()];
                if (b - a).cross(p - a) < 0.0 {
                    return false;
                }
            }
            true
        }
    }
}

/// Signed and total crossings of the ray `p + s * direction, s > 0` against
/// the uniform polyline discretization of a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RayCrossings {
    /// Upward (counter-clockwise) crossings minus downward ones.
    pub signed: i64,
    /// Unsigned crossing count, the classic even-odd quantity.
    pub total: u64,
}

/// Crossing counter used for the robustness comparisons and the
/// winding-jump consistency tests. If the ray passes within 1e-12 of a
/// polyline vertex the direction is rotated by 1e-7 radians and retried, at
/// most 8 times.
pub fn crossing_count(
    p: Point2,
    direction: Point2,
    path: &BezierPath,
    subdivisions: usize,
) -> Result<RayCrossings> {
    if subdivisions == 0 {
        return Err(Error::DegenerateInput("subdivision count must be at least 1"));
    }
    let norm = direction.norm();
    if !(norm > 0.0) {
        return Err(Error::DegenerateInput("ray direction must be nonzero"));
    }
    let dir = direction * (1.0 / norm);
    let polylines: Vec<Vec<Point2>> = path
        .segments()
        .iter()
        .map(|seg| {
            (0..=subdivisions)
                .map(|i| seg.eval_unchecked(i as f64 / subdivisions as f64))
                .collect()
        })
        .collect();

    const MAX_RETRIES: u32 = 8;
    for attempt in 0..=MAX_RETRIES {
        let angle = attempt as f64 * 1e-7;
        let (sin, cos) = angle.sin_cos();
        let d = Point2::new(dir.u * cos - dir.v * sin, dir.u * sin + dir.v * cos);
        match try_crossings(p, d, &polylines) {
            Some(result) => return Ok(result),
            None => continue,
        }
    }
    Err(Error::RayPerturbationFailed { attempts: MAX_RETRIES })
}

/// One crossing pass; `None` means a vertex was too close to the ray.
fn try_crossings(p: Point2, dir: Point2, polylines: &[Vec<Point2>]) -> Option<RayCrossings> {
    let mut signed = 0i64;
    let mut total = 0u64;
    for polyline in polylines {
        // Ray-frame coordinates: x along the ray, y to its left.
        let frame: Vec<(f64, f64)> = polyline
            .iter()
            .map(|&q| {
                let r = q - p;
                (r.dot(dir), dir.cross(r))
            })
            .collect();
        for &(x, y) in &frame {
            let dist = if x >= 0.0 { y.abs() } else { x.hypot(y) };
            if dist < 1e-12 {
                return None;
            }
        }
        for w in frame.windows(2) {
            let (xa, ya) = w[0];
            let (xb, yb) = w[1];
            let upward = ya <= 0.0 && yb > 0.0;
            let downward = yb <= 0.0 && ya > 0.0;
            if !(upward || downward) {
                continue;
            }
            let x = xa + (xb - xa) * (0.0 - ya) / (yb - ya);
            if x > 0.0 {
                total += 1;
                signed += if upward { 1 } else { -1 };
            }
        }
    }
    Some(RayCrossings { signed, total })
}

/// Convenience: build a path and its hierarchy together.
pub fn prepare_path(segments: Vec<RationalBezierSegment>) -> Result<(BezierPath, PathHierarchy)> {
    let path = BezierPath::new(segments)?;
    let hierarchy = build_hierarchy(&path);
    Ok((path, hierarchy))
}
