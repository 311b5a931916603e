//! Validity decision for linear hexahedra and quadrangles.
//!
//! A hexahedron is valid when its Jacobian determinant is strictly positive
//! on the whole reference cube. The check samples the determinant at the 8
//! corners and 12 edge midpoints, converts the samples to Bezier
//! coefficients, and subdivides adaptively until every subdomain is either
//! certified positive (all coefficients positive) or a non-positive exact
//! value is found (a corner coefficient).
//!
//! "Positive" means strictly greater than `CheckConfig::zero_tol`. Behaviour
//! for elements whose minimum lies within a few ulps of the tolerance is
//! decided by floating-point rounding; such elements typically end up
//! `Undetermined` once the depth cap is reached.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::bezier::{bezier_from_samples20, min_of, subdivide_octants, BezierCoeffs27};
use crate::error::{Error, Result};
use crate::geometry::{quad_corner_jacobians, HexNodes, QuadNodes, CORNER_REF};
use crate::sampling::{sample_corners, sample_edges, RefPoint, SampleVector20, REF_NODES_27};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckConfig {
    /// Values `<= zero_tol` count as non-positive.
    pub zero_tol: f64,
    /// Maximum subdivision depth. Depth `d` subdomains have edge `2^-d`.
    pub max_depth: u32,
    /// Relative gap target of [`min_jacobian_bounds`].
    pub bound_tol: f64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            zero_tol: 0.0,
            max_depth: 20,
            bound_tol: 1e-3,
        }
    }
}

impl CheckConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.zero_tol >= 0.0 && self.zero_tol.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "zero_tol must be >= 0, got {}",
                self.zero_tol
            )));
        }
        if !(self.bound_tol > 0.0 && self.bound_tol.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "bound_tol must be > 0, got {}",
                self.bound_tol
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Valid,
    Invalid,
    Undetermined,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Valid => "valid",
            Status::Invalid => "invalid",
            Status::Undetermined => "undetermined",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An exact Jacobian value at a reference point, certifying invalidity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub point: RefPoint,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidityVerdict {
    pub status: Status,
    /// Set for `Invalid`.
    pub witness: Option<Witness>,
    /// Certified lower bound of the Jacobian determinant, set for `Valid`.
    pub lower_bound: Option<f64>,
    /// Number of subdivision steps performed.
    pub subdivisions: u64,
    /// Deepest subdivision level reached.
    pub depth: u32,
}

impl ValidityVerdict {
    fn valid(lower: f64) -> Self {
        Self {
            status: Status::Valid,
            witness: None,
            lower_bound: Some(lower),
            subdivisions: 0,
            depth: 0,
        }
    }

    fn invalid(point: RefPoint, value: f64) -> Self {
        Self {
            status: Status::Invalid,
            witness: Some(Witness { point, value }),
            lower_bound: None,
            subdivisions: 0,
            depth: 0,
        }
    }

    fn undetermined() -> Self {
        Self {
            status: Status::Undetermined,
            witness: None,
            lower_bound: None,
            subdivisions: 0,
            depth: 0,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.status == Status::Valid
    }
}

#[inline(always)]
fn ref_node(k: usize) -> RefPoint {
    let [x, y, z] = REF_NODES_27[k];
    RefPoint::new_unchecked(x, y, z)
}

/// Decides the validity of a linear hexahedron.
pub fn check_hex(h: &HexNodes, cfg: &CheckConfig) -> ValidityVerdict {
    let tol = cfg.zero_tol;
    let mut values = [0.0; 20];

    // corners first: most invalid elements already fail here
    let (corners, edges) = values.split_at_mut(8);
    let corners: &mut [f64; 8] = corners.try_into().unwrap();
    sample_corners(h, corners);
    if let Some(k) = corners.iter().position(|&v| v <= tol) {
        return ValidityVerdict::invalid(ref_node(k), corners[k]);
    }
    let edges: &mut [f64; 12] = edges.try_into().unwrap();
    sample_edges(h, edges);
    if let Some(k) = edges.iter().position(|&v| v <= tol) {
        return ValidityVerdict::invalid(ref_node(8 + k), edges[k]);
    }

    let b = bezier_from_samples20(&SampleVector20 { values });
    if b.interior().iter().all(|&v| v > tol) {
        return ValidityVerdict::valid(b.min());
    }
    recursive_subdivision(&b, cfg, 0)
}

/// Decides positivity of the polynomial with coefficients `b` (considered
/// to sit at subdivision level `depth`) by splitting it into octants.
/// Witness points are expressed in the reference frame of `b`.
pub fn recursive_subdivision(b: &BezierCoeffs27, cfg: &CheckConfig, depth: u32) -> ValidityVerdict {
    if depth >= cfg.max_depth {
        let mut v = ValidityVerdict::undetermined();
        v.depth = depth;
        return v;
    }
    let mut stats = Stats { subdivisions: 0, depth };
    let outcome = subdivide(b, [0.0; 3], 1.0, depth, cfg, &mut stats);
    let mut v = match outcome {
        Outcome::Valid(lower) => ValidityVerdict::valid(lower),
        Outcome::Invalid(w) => ValidityVerdict::invalid(w.point, w.value),
        Outcome::Undetermined => ValidityVerdict::undetermined(),
    };
    v.subdivisions = stats.subdivisions;
    v.depth = stats.depth;
    v
}

struct Stats {
    subdivisions: u64,
    depth: u32,
}

enum Outcome {
    Valid(f64),
    Invalid(Witness),
    Undetermined,
}

fn subdivide(
    b: &BezierCoeffs27,
    origin: [f64; 3],
    size: f64,
    depth: u32,
    cfg: &CheckConfig,
    stats: &mut Stats,
) -> Outcome {
    let tol = cfg.zero_tol;
    stats.subdivisions += 1;
    let child_depth = depth + 1;
    stats.depth = stats.depth.max(child_depth);
    let half = 0.5 * size;

    let mut lower = f64::INFINITY;
    let mut undetermined = false;
    for (o, child) in subdivide_octants(b).iter().enumerate() {
        let child_origin = [0, 1, 2].map(|a| origin[a] + half * CORNER_REF[o][a]);
        if let Some(k) = child.corners().iter().position(|&v| v <= tol) {
            let p = [0, 1, 2].map(|a| child_origin[a] + half * CORNER_REF[k][a]);
            return Outcome::Invalid(Witness {
                point: RefPoint::new_unchecked(p[0], p[1], p[2]),
                value: child.b[k],
            });
        }
        if child.interior().iter().all(|&v| v > tol) {
            lower = lower.min(child.min());
            continue;
        }
        if child_depth >= cfg.max_depth {
            undetermined = true;
            continue;
        }
        match subdivide(child, child_origin, half, child_depth, cfg, stats) {
            Outcome::Valid(l) => lower = lower.min(l),
            Outcome::Invalid(w) => return Outcome::Invalid(w),
            Outcome::Undetermined => undetermined = true,
        }
    }
    if undetermined {
        Outcome::Undetermined
    } else {
        Outcome::Valid(lower)
    }
}

/// Validity of a linear quadrangle: its bilinear Jacobian determinant attains
/// its minimum at a corner. The witness point has `zeta = 0`.
pub fn check_quad(q: &QuadNodes, cfg: &CheckConfig) -> ValidityVerdict {
    const CORNERS: [(f64, f64); 4] = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
    let j = quad_corner_jacobians(q);
    match j.iter().position(|&v| v <= cfg.zero_tol) {
        Some(k) => {
            let (x, y) = CORNERS[k];
            ValidityVerdict::invalid(RefPoint::new_unchecked(x, y, 0.0), j[k])
        }
        None => ValidityVerdict::valid(min_of(&j)),
    }
}

struct Cell {
    b: BezierCoeffs27,
    min: f64,
    depth: u32,
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Cell {}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cell {
    // max-heap on the negated key: smallest coefficient minimum first
    fn cmp(&self, other: &Self) -> Ordering {
        other.min.total_cmp(&self.min)
    }
}

/// Best-first refinement of bounds on the minimum of the Jacobian
/// determinant.
///
/// `lower` is the smallest coefficient over all live subdomains and `upper`
/// the smallest corner coefficient seen so far; the true minimum always lies
/// in `[lower, upper]`. Each [`step`](Self::step) splits the subdomain with
/// the smallest coefficient.
pub struct MinJacobianSearch {
    heap: BinaryHeap<Cell>,
    lower: f64,
    upper: f64,
    scale: f64,
    cfg: CheckConfig,
    steps: u64,
}

impl MinJacobianSearch {
    pub fn new(h: &HexNodes, cfg: &CheckConfig) -> Self {
        let samples = crate::sampling::sample_20(h);
        let b = bezier_from_samples20(&samples);
        Self::from_coeffs(b, h.scale(), cfg)
    }

    /// Starts from arbitrary coefficients. `scale` is the magnitude the
    /// relative tolerance refers to when the minimum is near zero.
    pub fn from_coeffs(b: BezierCoeffs27, scale: f64, cfg: &CheckConfig) -> Self {
        let upper = min_of(b.corners());
        let min = b.min();
        let mut heap = BinaryHeap::new();
        heap.push(Cell { b, min, depth: 0 });
        Self {
            heap,
            lower: min.min(upper),
            upper,
            scale,
            cfg: *cfg,
            steps: 0,
        }
    }

    pub fn bounds(&self) -> (f64, f64) {
        (self.lower, self.upper)
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn converged(&self) -> bool {
        self.upper - self.lower <= self.cfg.bound_tol * self.upper.abs().max(self.scale)
    }

    /// Refines once. Returns `false` when nothing more can be refined (the
    /// best subdomain is at the depth cap).
    pub fn step(&mut self) -> bool {
        let Some(cell) = self.heap.peek() else {
            return false;
        };
        if cell.depth >= self.cfg.max_depth {
            return false;
        }
        let cell = self.heap.pop().expect("peeked");
        self.steps += 1;
        for child in subdivide_octants(&cell.b) {
            self.upper = self.upper.min(min_of(child.corners()));
            let min = child.min();
            if min < self.upper {
                self.heap.push(Cell {
                    b: child,
                    min,
                    depth: cell.depth + 1,
                });
            }
        }
        // children are convex combinations of the parent: never below it
        let next = self.heap.peek().map_or(self.upper, |c| c.min.min(self.upper));
        self.lower = self.lower.max(next);
        true
    }

    pub fn run(&mut self) -> (f64, f64) {
        while !self.converged() && self.step() {}
        self.bounds()
    }
}

/// Certified bounds `(lower, upper)` on the minimum of the Jacobian
/// determinant over the reference cube.
pub fn min_jacobian_bounds(h: &HexNodes, cfg: &CheckConfig) -> (f64, f64) {
    MinJacobianSearch::new(h, cfg).run()
}
