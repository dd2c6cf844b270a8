use std::fmt;

use crate::geometry::{cross, Point2};
use crate::real_kernel::Rat;

use super::{ConvexityMode, HullCertificate, Polygon};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvalidReason {
    /// Fewer than three vertices, or a vertex that is not an input point.
    Structure(String),
    /// Input point `point` lies on the wrong side of edge `edge` (or on the
    /// edge without being a vertex).
    Containment { edge: usize, point: usize },
    /// The turn at `vertex` is not strictly convex.
    Convexity { vertex: usize },
    /// The open edges `first` and `second` meet.
    NotSimple { first: usize, second: usize },
    /// The certificate does not describe this polygon.
    Mismatch(String),
    /// A recorded margin is missing, non-positive, or larger than the truth.
    Margin(String),
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidReason::Structure(s) => write!(f, "structure: {s}"),
            InvalidReason::Containment { edge, point } => {
                write!(f, "containment: point {point} is not inside edge {edge}")
            }
            InvalidReason::Convexity { vertex } => write!(f, "convexity: vertex {vertex}"),
            InvalidReason::NotSimple { first, second } => {
                write!(f, "simplicity: edges {first} and {second} intersect")
            }
            InvalidReason::Mismatch(s) => write!(f, "mismatch: {s}"),
            InvalidReason::Margin(s) => write!(f, "margin: {s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(InvalidReason),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

fn check_margin(claimed: &Rat, truth: &Rat, what: impl FnOnce() -> String) -> Result<(), InvalidReason> {
    if !claimed.is_positive() {
        return Err(InvalidReason::Margin(format!("{} is not positive", what())));
    }
    if claimed > truth {
        return Err(InvalidReason::Margin(format!(
            "{} claims {claimed} but the cross product is {truth}",
            what()
        )));
    }
    Ok(())
}

/// Do the open segments `p1 p2` and `q1 q2` share a point?
fn open_segments_meet(p1: &Point2, p2: &Point2, q1: &Point2, q2: &Point2) -> bool {
    let d1 = cross(p1, p2, q1).signum();
    let d2 = cross(p1, p2, q2).signum();
    let d3 = cross(q1, q2, p1).signum();
    let d4 = cross(q1, q2, p2).signum();
    if d1 == 0 && d2 == 0 {
        // Collinear: the open spans overlap on the dominant axis.
        let use_x = p1.x != p2.x;
        let key = |p: &Point2| if use_x { p.x.clone() } else { p.y.clone() };
        let (a0, a1) = (key(p1).min(key(p2)), key(p1).max(key(p2)));
        let (b0, b1) = (key(q1).min(key(q2)), key(q1).max(key(q2)));
        return a0.max(b0) < a1.min(b1);
    }
    d1 * d2 < 0 && d3 * d4 < 0
}

fn check(
    points: &[Point2],
    polygon: &Polygon,
    cert: &HullCertificate,
    mode: ConvexityMode,
) -> Result<(), InvalidReason> {
    let vertices = polygon.vertices();
    let k = vertices.len();
    if k < 3 {
        return Err(InvalidReason::Structure(format!("{k} vertices")));
    }
    let mut on_polygon = vec![false; points.len()];
    for (i, v) in vertices.iter().enumerate() {
        let j = points
            .iter()
            .position(|s| s == v)
            .ok_or_else(|| InvalidReason::Structure(format!("vertex {i} is not an input point")))?;
        on_polygon[j] = true;
    }

    let edge_turns: Vec<Vec<Rat>> = polygon
        .edges()
        .map(|(a, b)| points.iter().map(|s| cross(a, b, s)).collect())
        .collect();
    for (e, turns) in edge_turns.iter().enumerate() {
        for (j, t) in turns.iter().enumerate() {
            let inside = if on_polygon[j] {
                !t.is_negative()
            } else {
                t.is_positive()
            };
            if !inside {
                return Err(InvalidReason::Containment { edge: e, point: j });
            }
        }
    }

    let angle_turns: Vec<Rat> = (0..k)
        .map(|i| cross(&vertices[(i + k - 1) % k], &vertices[i], &vertices[(i + 1) % k]))
        .collect();
    if let Some(vertex) = angle_turns.iter().position(|t| !t.is_positive()) {
        return Err(InvalidReason::Convexity { vertex });
    }

    let edges: Vec<_> = polygon.edges().collect();
    for i in 0..k {
        for j in i + 1..k {
            let ((a, b), (c, d)) = (edges[i], edges[j]);
            if open_segments_meet(a, b, c, d) {
                return Err(InvalidReason::NotSimple { first: i, second: j });
            }
        }
    }

    if !cert.containment {
        return Err(InvalidReason::Mismatch("certificate does not claim containment".into()));
    }
    if mode == ConvexityMode::Strict && cert.mode != ConvexityMode::Strict {
        return Err(InvalidReason::Mismatch(format!(
            "a {} certificate cannot certify strict convexity",
            cert.mode
        )));
    }
    if cert.vertex_indices.len() != k {
        return Err(InvalidReason::Mismatch(format!(
            "certificate lists {} vertices, polygon has {k}",
            cert.vertex_indices.len()
        )));
    }
    for (i, (&idx, v)) in cert.vertex_indices.iter().zip(vertices).enumerate() {
        if points.get(idx) != Some(v) {
            return Err(InvalidReason::Mismatch(format!("vertex {i} is not input point {idx}")));
        }
    }

    match &cert.edge_margins {
        Some(edges) => {
            if edges.len() != k {
                return Err(InvalidReason::Margin(format!(
                    "{} edge entries for {k} edges",
                    edges.len()
                )));
            }
            for (e, margins) in edges.iter().enumerate() {
                let (from, to) = (cert.vertex_indices[e], cert.vertex_indices[(e + 1) % k]);
                for (j, m) in margins {
                    if *j >= points.len() || *j == from || *j == to {
                        return Err(InvalidReason::Margin(format!("edge {e} lists point {j}")));
                    }
                    check_margin(m, &edge_turns[e][*j], || format!("edge {e} at point {j}"))?;
                }
                let missing = (0..points.len()).find(|&j| !on_polygon[j] && !margins.iter().any(|(i, _)| *i == j));
                if let Some(j) = missing {
                    return Err(InvalidReason::Margin(format!("edge {e} has no margin for point {j}")));
                }
            }
        }
        None if mode == ConvexityMode::Strict => {
            return Err(InvalidReason::Margin("strict mode requires edge margins".into()));
        }
        None => {}
    }

    match &cert.angle_margins {
        Some(angles) => {
            if angles.len() != k {
                return Err(InvalidReason::Margin(format!(
                    "{} angle entries for {k} vertices",
                    angles.len()
                )));
            }
            for (i, m) in angles.iter().enumerate() {
                check_margin(m, &angle_turns[i], || format!("angle at vertex {i}"))?;
            }
        }
        None if mode == ConvexityMode::Strict => {
            return Err(InvalidReason::Margin("strict mode requires angle margins".into()));
        }
        None => {}
    }
    Ok(())
}

/// Recomputes every claim of `cert` exactly.
///
/// Checks, in order: vertices are input points; every input point is inside
/// or on every edge (strictly inside unless it is a vertex); every turn is
/// strictly convex; no two open edges meet; the certificate describes this
/// polygon; and every recorded margin is positive and no larger than the
/// cross product it bounds. In strict mode margins are mandatory.
pub fn verify_certificate(
    points: &[Point2],
    polygon: &Polygon,
    cert: &HullCertificate,
    mode: ConvexityMode,
) -> Verdict {
    match check(points, polygon, cert, mode) {
        Ok(()) => Verdict::Valid,
        Err(reason) => Verdict::Invalid(reason),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::noncollinearity_witness;
    use crate::hull::convex_hull_constructive;

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    fn square() -> (Vec<Point2>, Polygon, HullCertificate) {
        let s = vec![p(0, 0), p(4, 0), p(4, 4), p(0, 4), p(1, 2)];
        let w = noncollinearity_witness(&s).unwrap();
        let (poly, cert) = convex_hull_constructive(&s, &w).unwrap();
        (s, poly, cert)
    }

    #[test]
    fn honest_certificate_is_valid() {
        let (s, poly, cert) = square();
        assert_eq!(
            verify_certificate(&s, &poly, &cert, ConvexityMode::Strict),
            Verdict::Valid
        );
        assert_eq!(
            verify_certificate(&s, &poly, &cert, ConvexityMode::AlmostStrict),
            Verdict::Valid
        );
    }

    #[test]
    fn inflated_margin_is_caught() {
        let (s, poly, mut cert) = square();
        let edges = cert.edge_margins.as_mut().unwrap();
        edges[1][0].1 = &edges[1][0].1 * Rat::from_integer(10);
        assert!(matches!(
            verify_certificate(&s, &poly, &cert, ConvexityMode::Strict),
            Verdict::Invalid(InvalidReason::Margin(_))
        ));
    }

    #[test]
    fn inflated_angle_margin_is_caught() {
        let (s, poly, mut cert) = square();
        let angles = cert.angle_margins.as_mut().unwrap();
        angles[2] = &angles[2] * Rat::from_integer(10);
        assert!(matches!(
            verify_certificate(&s, &poly, &cert, ConvexityMode::Strict),
            Verdict::Invalid(InvalidReason::Margin(_))
        ));
    }

    #[test]
    fn point_outside_is_caught() {
        let gadget = vec![
            p(-1, -1),
            p(-1, 1),
            p(1, 1),
            p(1, -1),
            Point2::new(Rat::new(3, 2), Rat::zero()),
        ];
        let w = noncollinearity_witness(&gadget).unwrap();
        let (_, cert) = convex_hull_constructive(&gadget, &w).unwrap();
        let square = Polygon::new(vec![p(-1, -1), p(1, -1), p(1, 1), p(-1, 1)]);
        assert_eq!(
            verify_certificate(&gadget, &square, &cert, ConvexityMode::Strict),
            Verdict::Invalid(InvalidReason::Containment { edge: 1, point: 4 })
        );
    }

    #[test]
    fn reversed_orientation_is_caught() {
        let (s, poly, cert) = square();
        let mut vertices = poly.into_vertices();
        vertices.reverse();
        assert!(matches!(
            verify_certificate(&s, &Polygon::new(vertices), &cert, ConvexityMode::Strict),
            Verdict::Invalid(InvalidReason::Containment { .. })
        ));
    }

    #[test]
    fn strict_mode_needs_margins() {
        let (s, poly, mut cert) = square();
        cert.angle_margins = None;
        assert!(matches!(
            verify_certificate(&s, &poly, &cert, ConvexityMode::Strict),
            Verdict::Invalid(InvalidReason::Margin(_))
        ));
        cert.edge_margins = None;
        cert.mode = ConvexityMode::AlmostStrict;
        assert_eq!(
            verify_certificate(&s, &poly, &cert, ConvexityMode::AlmostStrict),
            Verdict::Valid
        );
    }

    #[test]
    fn open_segment_intersection() {
        assert!(open_segments_meet(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)));
        assert!(!open_segments_meet(&p(0, 0), &p(1, 0), &p(1, 0), &p(1, 1)));
        assert!(open_segments_meet(&p(0, 0), &p(2, 0), &p(1, 0), &p(3, 0)));
        assert!(!open_segments_meet(&p(0, 0), &p(1, 0), &p(1, 0), &p(2, 0)));
        // Touching at an endpoint of one segment only.
        assert!(!open_segments_meet(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 3)));
    }

    #[test]
    fn self_intersecting_cycle_is_not_simple() {
        // A bow-tie passes containment on its own vertex set only if convexity
        // is skipped, so check simplicity directly.
        let bow = Polygon::new(vec![p(0, 0), p(2, 2), p(2, 0), p(0, 2)]);
        let edges: Vec<_> = bow.edges().collect();
        assert!(open_segments_meet(edges[0].0, edges[0].1, edges[2].0, edges[2].1));
    }
}
