//! NURBS-to-Bezier conversion by knot insertion.

use crate::error::{Error, Result};
use crate::geom::{Point2, RationalBezierSegment};

/// Split a clamped (rational) B-spline into Bezier segments.
///
/// Every interior knot is inserted until it reaches full multiplicity
/// `degree`; the control net then decomposes into consecutive Bezier
/// segments whose concatenation reproduces the original curve.
pub fn decompose_bspline(
    knots: &[f64],
    control_points: &[Point2],
    weights: Option<&[f64]>,
    degree: usize,
) -> Result<Vec<RationalBezierSegment>> {
    validate(knots, control_points, weights, degree)?;

    // Work in homogeneous coordinates so the rational case is uniform.
    let mut ctrl: Vec<(Point2, f64)> = match weights {
        None => control_points.iter().map(|&p| (p, 1.0)).collect(),
        Some(w) => control_points.iter().zip(w).map(|(&p, &wi)| (p * wi, wi)).collect(),
    };
    let mut knots = knots.to_vec();

    loop {
        let Some((value, mult)) = first_underfull_interior_knot(&knots, degree) else {
            break;
        };
        insert_knot(&mut knots, &mut ctrl, degree, value, mult);
    }

    // With all interior knots at multiplicity `degree`, each group of
    // degree+1 control points starting at multiples of `degree` is one
    // Bezier segment.
    let span_count = (ctrl.len() - 1) / degree;
    let mut segments = Vec::with_capacity(span_count);
    for s in 0..span_count {
        let chunk = &ctrl[s * degree..s * degree + degree + 1];
        let rational = weights.is_some();
        if rational {
            let pts = chunk.iter().map(|&(p, w)| p * (1.0 / w)).collect();
            let wts = chunk.iter().map(|&(_, w)| w).collect();
            segments.push(RationalBezierSegment::rational(pts, wts)?);
        } else {
            segments.push(RationalBezierSegment::polynomial(
                chunk.iter().map(|&(p, _)| p).collect(),
            )?);
        }
    }
    Ok(segments)
}

fn validate(
    knots: &[f64],
    control_points: &[Point2],
    weights: Option<&[f64]>,
    degree: usize,
) -> Result<()> {
    if degree == 0 {
        return Err(Error::InvalidSpline("degree must be at least 1".into()));
    }
    if control_points.len() < degree + 1 {
        return Err(Error::InvalidSpline(format!(
            "need at least {} control points for degree {degree}",
            degree + 1
        )));
    }
    if knots.len() != control_points.len() + degree + 1 {
        return Err(Error::InvalidSpline(format!(
            "knot count {} != control points {} + degree {} + 1",
            knots.len(),
            control_points.len(),
            degree
        )));
    }
    if knots.windows(2).any(|w| w[1] < w[0]) || knots.iter().any(|k| !k.is_finite()) {
        return Err(Error::InvalidSpline("knot vector must be nondecreasing and finite".into()));
    }
    let first = knots[0];
    let last = knots[knots.len() - 1];
    if knots[..=degree].iter().any(|&k| k != first)
        || knots[knots.len() - degree - 1..].iter().any(|&k| k != last)
    {
        return Err(Error::InvalidSpline("knot vector must be clamped".into()));
    }
    if first == last {
        return Err(Error::InvalidSpline("knot vector spans no parameter range".into()));
    }
    if let Some(w) = weights {
        if w.len() != control_points.len() {
            return Err(Error::InvalidSpline("weight count must match control points".into()));
        }
        if w.iter().any(|&wi| !(wi > 0.0)) {
            return Err(Error::InvalidSpline("weights must be strictly positive".into()));
        }
    }
    Ok(())
}

fn first_underfull_interior_knot(knots: &[f64], degree: usize) -> Option<(f64, usize)> {
    let first = knots[0];
    let last = knots[knots.len() - 1];
    let mut i = 0;
    while i < knots.len() {
        let value = knots[i];
        let mut mult = 0;
        while i < knots.len() && knots[i] == value {
            mult += 1;
            i += 1;
        }
        if value != first && value != last && mult < degree {
            return Some((value, mult));
        }
    }
    None
}

/// One Boehm knot insertion of `value` (current multiplicity `mult`).
fn insert_knot(
    knots: &mut Vec<f64>,
    ctrl: &mut Vec<(Point2, f64)>,
    degree: usize,
    value: f64,
    mult: usize,
) {
    // Span index k: last knot index with knots[k] <= value.
    let k = knots.iter().rposition(|&u| u <= value).unwrap();
    let mut new_ctrl = Vec::with_capacity(ctrl.len() + 1);
    new_ctrl.extend_from_slice(&ctrl[..=k - degree]);
    for i in (k - degree + 1)..=(k - mult) {
        let denom = knots[i + degree] - knots[i];
        let alpha = if denom > 0.0 { (value - knots[i]) / denom } else { 0.0 };
        let (p0, w0) = ctrl[i - 1];
        let (p1, w1) = ctrl[i];
        new_ctrl.push((p0 * (1.0 - alpha) + p1 * alpha, w0 * (1.0 - alpha) + w1 * alpha));
    }
    new_ctrl.extend_from_slice(&ctrl[k - mult..]);
    *ctrl = new_ctrl;
    knots.insert(k + 1, value);
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn pt(u: f64, v: f64) -> Point2 {
        Point2::new(u, v)
    }

    /// Direct Cox-de Boor evaluation, the oracle for decomposition.
    fn bspline_eval(
        knots: &[f64],
        ctrl: &[Point2],
        weights: Option<&[f64]>,
        degree: usize,
        u: f64,
    ) -> Point2 {
        let n = ctrl.len() - 1;
        let homog: Vec<(Point2, f64)> = match weights {
            None => ctrl.iter().map(|&p| (p, 1.0)).collect(),
            Some(w) => ctrl.iter().zip(w).map(|(&p, &wi)| (p * wi, wi)).collect(),
        };
        let mut num = Point2::default();
        let mut den = 0.0;
        for (i, &(p, w)) in homog.iter().enumerate() {
            let b = basis(knots, degree, i, u, n);
            num = num + p * b;
            den += w * b;
        }
        num * (1.0 / den)
    }

    fn basis(knots: &[f64], p: usize, i: usize, u: f64, n: usize) -> f64 {
        if p == 0 {
            let last_span = i == n && u == knots[knots.len() - 1];
            return if (knots[i] <= u && u < knots[i + 1]) || last_span {
                1.0
            } else {
                0.0
            };
        }
        let mut left = 0.0;
        let d1 = knots[i + p] - knots[i];
        if d1 > 0.0 {
            left = (u - knots[i]) / d1 * basis(knots, p - 1, i, u, n);
        }
        let mut right = 0.0;
        let d2 = knots[i + p + 1] - knots[i + 1];
        if d2 > 0.0 {
            right = (knots[i + p + 1] - u) / d2 * basis(knots, p - 1, i + 1, u, n);
        }
        left + right
    }

    #[test]
    fn single_bezier_span_is_identity() {
        let ctrl = vec![pt(0.0, 0.0), pt(0.2, 0.9), pt(0.8, 0.7), pt(1.0, 0.0)];
        let knots = vec![0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0];
        let segs = decompose_bspline(&knots, &ctrl, None, 3).unwrap();
        assert_eq!(segs.len(), 1);
        assert_eq!(segs[0].control_points(), ctrl.as_slice());
    }

    #[test]
    fn two_span_cubic_junction_matches_spline() {
        let ctrl = vec![
            pt(0.0, 0.0),
            pt(0.1, 0.8),
            pt(0.4, 1.0),
            pt(0.7, 0.4),
            pt(1.0, 0.0),
        ];
        let knots = vec![0.0, 0.0, 0.0, 0.0, 0.5, 1.0, 1.0, 1.0, 1.0];
        let segs = decompose_bspline(&knots, &ctrl, None, 3).unwrap();
        assert_eq!(segs.len(), 2);
        let junction = segs[0].last_point();
        assert_eq!(junction, segs[1].first_point());
        let oracle = bspline_eval(&knots, &ctrl, None, 3, 0.5);
        assert_abs_diff_eq!(junction.u, oracle.u, epsilon = 1e-12);
        assert_abs_diff_eq!(junction.v, oracle.v, epsilon = 1e-12);
    }

    #[test]
    fn decomposition_agrees_with_direct_evaluation() {
        let ctrl = vec![
            pt(0.0, 0.2),
            pt(0.15, 0.9),
            pt(0.35, 0.1),
            pt(0.55, 0.8),
            pt(0.75, 0.3),
            pt(1.0, 0.6),
        ];
        let weights = vec![1.0, 1.4, 0.7, 2.0, 0.9, 1.1];
        let knots = vec![0.0, 0.0, 0.0, 0.0, 0.3, 0.7, 1.0, 1.0, 1.0, 1.0];
        let degree = 3;
        let segs = decompose_bspline(&knots, &ctrl, Some(&weights), degree).unwrap();
        assert_eq!(segs.len(), 3);
        let breaks = [0.0, 0.3, 0.7, 1.0];
        let mut rng = crate::rng::SplitMix64::new(31);
        for _ in 0..100 {
            let u = rng.next_f64();
            let s = breaks.windows(2).position(|w| u >= w[0] && u < w[1]).unwrap_or(2);
            let local = (u - breaks[s]) / (breaks[s + 1] - breaks[s]);
            let got = segs[s].evaluate(local).unwrap();
            let want = bspline_eval(&knots, &ctrl, Some(&weights), degree, u);
            assert_abs_diff_eq!(got.u, want.u, epsilon = 1e-10);
            assert_abs_diff_eq!(got.v, want.v, epsilon = 1e-10);
        }
    }

    #[test]
    fn rejects_unclamped_knots() {
        let ctrl = vec![pt(0.0, 0.0), pt(0.5, 1.0), pt(1.0, 0.0)];
        let knots = vec![0.0, 0.0, 0.5, 1.0, 1.0, 1.0];
        assert!(matches!(
            decompose_bspline(&knots, &ctrl, None, 2),
            Err(Error::InvalidSpline(_))
        ));
    }
}
