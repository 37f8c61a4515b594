//! trimwind: winding-number containment queries for boundaries made of
//! (rational) Bezier segments, on plain, cylinder-like and torus-like
//! parameter domains.
//!
//! The library is organized in layers:
//!
//! * [`geom`] - curve kernel: rational Bezier evaluation, derivative
//!   bounds, ellipse bounds.
//! * [`winding`] - the recursive winding-number algorithm with ellipse
//!   pruning, path hierarchies, the control-polygon baseline and the
//!   polyline oracles.
//! * [`periodic`] - covering-space machinery: homology classification,
//!   periodically extended curves, loop pairing, uni-/bi-periodic winding.
//! * [`containment`] - user-facing inside/outside/on-boundary verdicts.
//! * [`ingest`] - SVG path-data and JSON loop-set loading, unit-square
//!   normalization, covering-coordinate unwrapping.
//! * [`raster`] - winding-field and verdict rasters plus their CSV/PGM
//!   encodings.
//! * [`synth`] - seeded synthetic shapes and datasets for benchmarks and
//!   tests.
//!
//! All query paths are pure functions over immutable data and safe to call
//! from any number of threads.

pub mod bspline;
pub mod error;
pub mod geom;
pub mod metrics;
pub mod rng;
pub mod winding;

pub use error::{Error, Result, ValidityError};
pub use geom::{ellipse_bound, ellipse_contains, CurveSpan, EllipseBound, Point2, RationalBezierSegment};
pub use winding::{
    build_hierarchy, compute_winding, control_polygon_winding_baseline, crossing_count,
    path_winding, path_winding_flat, polyline_winding_oracle, segment_winding, BezierPath,
    BoundaryHit, PathHierarchy, RayCrossings, WindingOutcome,
};
