//! Thread-local instrumentation counters.
//!
//! The engine bumps these counters on every curve evaluation, bound test
//! and subdivision. They exist for the benchmark suites and the scaling
//! tests; queries never read them. Counters are per-thread, so benchmark
//! measurement must run on a single thread to get totals.

use std::cell::Cell;

thread_local! {
    static CURVE_EVALS: Cell<u64> = const { Cell::new(0) };
    static ARITH_OPS: Cell<u64> = const { Cell::new(0) };
    static ELLIPSE_TESTS: Cell<u64> = const { Cell::new(0) };
    static HULL_TESTS: Cell<u64> = const { Cell::new(0) };
    static SUBDIVISIONS: Cell<u64> = const { Cell::new(0) };
    static MAX_DEPTH: Cell<u32> = const { Cell::new(0) };
}

/// Snapshot of the per-thread counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counters {
    /// Number of curve evaluations.
    pub curve_evals: u64,
    /// Arithmetic work in lerp-equivalent point operations. A degree-n
    /// evaluation counts n+1, a de Casteljau split counts n(n+1)/2, a
    /// bound test counts its distance/orientation evaluations.
    pub arith_ops: u64,
    /// Ellipse in-bound tests.
    pub ellipse_tests: u64,
    /// Convex-hull in-bound tests (control-polygon baseline).
    pub hull_tests: u64,
    /// Curve or span subdivisions (both recursion flavors).
    pub subdivisions: u64,
    /// Deepest recursion level reached since the last reset.
    pub max_depth: u32,
}

/// Reset all counters of the current thread to zero.
pub fn reset() {
    CURVE_EVALS.with(|c| c.set(0));
    ARITH_OPS.with(|c| c.set(0));
    ELLIPSE_TESTS.with(|c| c.set(0));
    HULL_TESTS.with(|c| c.set(0));
    SUBDIVISIONS.with(|c| c.set(0));
    MAX_DEPTH.with(|c| c.set(0));
}

/// Read the current thread's counters.
pub fn snapshot() -> Counters {
    Counters {
        curve_evals: CURVE_EVALS.with(Cell::get),
        arith_ops: ARITH_OPS.with(Cell::get),
        ellipse_tests: ELLIPSE_TESTS.with(Cell::get),
        hull_tests: HULL_TESTS.with(Cell::get),
        subdivisions: SUBDIVISIONS.with(Cell::get),
        max_depth: MAX_DEPTH.with(Cell::get),
    }
}

#[inline]
pub(crate) fn count_curve_eval(ops: u64) {
    CURVE_EVALS.with(|c| c.set(c.get() + 1));
    ARITH_OPS.with(|c| c.set(c.get() + ops));
}

#[inline]
pub(crate) fn count_ellipse_test() {
    ELLIPSE_TESTS.with(|c| c.set(c.get() + 1));
    ARITH_OPS.with(|c| c.set(c.get() + 2));
}

#[inline]
pub(crate) fn count_hull_test(ops: u64) {
    HULL_TESTS.with(|c| c.set(c.get() + 1));
    ARITH_OPS.with(|c| c.set(c.get() + ops));
}

#[inline]
pub(crate) fn count_subdivision(ops: u64) {
    SUBDIVISIONS.with(|c| c.set(c.get() + 1));
    ARITH_OPS.with(|c| c.set(c.get() + ops));
}

#[inline]
pub(crate) fn note_depth(depth: u32) {
    MAX_DEPTH.with(|c| {
        if depth > c.get() {
            c.set(depth);
        }
    });
}
