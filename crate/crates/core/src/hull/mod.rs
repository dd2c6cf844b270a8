//! Certified convex hulls.
//!
//! Three entry points share one gift-wrapping engine and differ in how a
//! single orientation question ("is `c` strictly left of `a -> b`?") is
//! answered:
//!
//! * [`convex_hull_constructive`] resolves it at a band derived from a
//!   [`SeparationWitness`](crate::geometry::SeparationWitness), so every answer is backed by a positive margin.
//! * [`convex_hull_oracle`] in [`ConvexityMode::Strict`] asks the Markov search
//!   for a bound on the cross product; the bounds become the margins.
//! * [`convex_hull_oracle`] in [`ConvexityMode::AlmostStrict`] asks the
//!   disjunctive search, which yields the side and nothing more.
//!
//! The oracle modes only have the promise that no decision scalar is zero, so
//! a collinear input makes some search run until the fuel is gone.

mod brute;
mod gadgets;
mod verify;
mod wrap;

use std::fmt;

use thiserror::Error;

use crate::geometry::{GeometryError, Point2};
use crate::principles::PrincipleError;
use crate::real_kernel::Rat;

pub use brute::brute_force_hull;
pub use gadgets::{mp_gadget, mpvee_gadget, reduction_gadget_mp, reduction_gadget_mpvee};
pub use verify::{verify_certificate, InvalidReason, Verdict};
pub use wrap::{convex_hull_constructive, convex_hull_oracle, HullParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HullError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("separation witness too weak: an orientation test fell inside its band")]
    WitnessTooWeak,
    #[error("fuel exhausted after {spent} refinements")]
    FuelExhausted { spent: u64 },
    #[error("promise violated: {0}")]
    Promise(PrincipleError),
    #[error("no supporting edge leaves point {vertex}")]
    NoSupportingEdge { vertex: usize },
    #[error("wrap did not close after {steps} steps")]
    PigeonholeViolated { steps: usize },
    #[error("gadget hull has {count} vertices")]
    UnexpectedVertexCount { count: usize },
}

impl From<PrincipleError> for HullError {
    fn from(e: PrincipleError) -> Self {
        match e {
            PrincipleError::FuelExhausted { spent } => HullError::FuelExhausted { spent },
            other => HullError::Promise(other),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConvexityMode {
    /// Every internal angle is certified below a straight angle.
    Strict,
    /// No internal angle is certified to reach a straight angle.
    AlmostStrict,
}

impl fmt::Display for ConvexityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConvexityMode::Strict => "strict",
            ConvexityMode::AlmostStrict => "almost-strict",
        })
    }
}

/// A closed vertex cycle in counter-clockwise order. The first vertex is not
/// repeated at the end.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polygon<T = Rat> {
    vertices: Vec<Point2<T>>,
}

impl<T> Polygon<T> {
    pub fn new(vertices: Vec<Point2<T>>) -> Self {
        Polygon { vertices }
    }

    pub fn vertices(&self) -> &[Point2<T>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges as `(start, end)`, the last one closing the cycle.
    pub fn edges(&self) -> impl Iterator<Item = (&Point2<T>, &Point2<T>)> {
        let k = self.vertices.len();
        (0..k).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % k]))
    }

    pub fn into_vertices(self) -> Vec<Point2<T>> {
        self.vertices
    }
}

impl Polygon<Rat> {
    /// Position of the lexicographically smallest vertex.
    pub fn canonical_offset(&self) -> usize {
        self.vertices
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.cmp(b.1))
            .map_or(0, |(i, _)| i)
    }

    /// Same cycle, rotated to start at the lexicographically smallest vertex.
    pub fn canonical(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.rotate_left(self.canonical_offset());
        Polygon { vertices }
    }
}

/// Machine-checkable evidence for a hull.
///
/// Edge `i` runs from vertex `i` to vertex `i + 1`. An edge margin
/// `(j, m)` claims `cross(edge start, edge end, S[j]) >= m > 0`; an angle
/// margin `m` at vertex `i` claims `cross(x[i-1], x[i], x[i+1]) >= m > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullCertificate {
    pub mode: ConvexityMode,
    /// The separation bound the construction relied on, if any.
    pub eps_sq_used: Option<Rat>,
    /// Input index of each vertex, in cycle order.
    pub vertex_indices: Vec<usize>,
    /// Per edge, a margin for every input point other than its endpoints.
    pub edge_margins: Option<Vec<Vec<(usize, Rat)>>>,
    /// Per vertex.
    pub angle_margins: Option<Vec<Rat>>,
    /// Every input point satisfies every closed edge constraint.
    pub containment: bool,
    pub fuel_spent: u64,
}

impl HullCertificate {
    /// Re-indexes the certificate for the cycle rotated left by `k`.
    pub fn rotate_left(&mut self, k: usize) {
        if self.vertex_indices.is_empty() {
            return;
        }
        let k = k % self.vertex_indices.len();
        self.vertex_indices.rotate_left(k);
        if let Some(edges) = &mut self.edge_margins {
            edges.rotate_left(k);
        }
        if let Some(angles) = &mut self.angle_margins {
            angles.rotate_left(k);
        }
    }
}

/// Rotates a rational hull and its certificate to canonical form.
pub fn canonicalize(polygon: Polygon, mut cert: HullCertificate) -> (Polygon, HullCertificate) {
    let k = polygon.canonical_offset();
    cert.rotate_left(k);
    (polygon.canonical(), cert)
}
