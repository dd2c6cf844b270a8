use crate::geometry::{cross, GeometryError, Point2, SeparationWitness};
use crate::principles::{sign_mp_metered, sign_mpvee_metered, Sign, SignDisjunct};
use crate::real_kernel::{cmp_resolve, CReal, Fuel, FuelMeter, Rat, Resolved, Scalar, SignResolution};

use super::{ConvexityMode, HullCertificate, HullError, Polygon};

/// Answer to "is `c` strictly left of `a -> b`?".
enum Side {
    /// Left, with a lower bound on the cross product when one was certified.
    Left(Option<Rat>),
    Right,
}

trait Decider<T> {
    fn side(&mut self, a: &Point2<T>, b: &Point2<T>, c: &Point2<T>) -> Result<Side, HullError>;
}

/// Orientation at a fixed band. With a valid witness `|cross| >= eps_sq` for
/// every triple of input points, so a band of `eps_sq / 2` always resolves.
struct WitnessDecider {
    band: Rat,
}

impl<T: Scalar> Decider<T> for WitnessDecider {
    fn side(&mut self, a: &Point2<T>, b: &Point2<T>, c: &Point2<T>) -> Result<Side, HullError> {
        match cross(a, b, c).resolve_sign(&self.band) {
            SignResolution::Positive(m) => Ok(Side::Left(Some(m))),
            SignResolution::Negative(_) => Ok(Side::Right),
            SignResolution::Within => Err(HullError::WitnessTooWeak),
        }
    }
}

struct OracleDecider {
    mode: ConvexityMode,
    meter: FuelMeter,
}

impl Decider<CReal> for OracleDecider {
    fn side(&mut self, a: &Point2<CReal>, b: &Point2<CReal>, c: &Point2<CReal>) -> Result<Side, HullError> {
        let turn = cross(a, b, c);
        Ok(match self.mode {
            ConvexityMode::Strict => {
                let apart = sign_mp_metered(&turn, &mut self.meter)?;
                match apart.sign {
                    Sign::Positive => Side::Left(Some(apart.bound)),
                    Sign::Negative => Side::Right,
                }
            }
            ConvexityMode::AlmostStrict => match sign_mpvee_metered(&turn, &mut self.meter)? {
                SignDisjunct::NonNegative => Side::Left(None),
                SignDisjunct::NonPositive => Side::Right,
            },
        })
    }
}

/// One wrap step: the edge leaving `from` and what was learned about every
/// other point along the way.
struct Step {
    from: usize,
    to: usize,
    margins: Vec<(usize, Option<Rat>)>,
}

/// Finds the candidate `p` such that every other point is strictly left of
/// `from -> p`. Candidates are tried in input order; for each one all points
/// are decided, without stopping at the first point on the wrong side.
fn supporting_edge<T, D: Decider<T>>(
    points: &[Point2<T>],
    from: usize,
    decider: &mut D,
) -> Result<Option<Step>, HullError> {
    for to in (0..points.len()).filter(|&p| p != from) {
        let mut all_left = true;
        let mut margins = Vec::with_capacity(points.len() - 2);
        for c in (0..points.len()).filter(|&c| c != from && c != to) {
            match decider.side(&points[from], &points[to], &points[c])? {
                Side::Left(m) => margins.push((c, m)),
                Side::Right => all_left = false,
            }
        }
        if all_left {
            return Ok(Some(Step { from, to, margins }));
        }
    }
    Ok(None)
}

/// Follows supporting edges from `first` until the cycle closes. A cycle
/// that has not closed after `points.len()` steps is reported, never looped on.
fn wrap<T, D: Decider<T>>(points: &[Point2<T>], first: Step, decider: &mut D) -> Result<Vec<Step>, HullError> {
    let start = first.from;
    let mut steps = vec![first];
    loop {
        let current = steps.last().map_or(start, |s| s.to);
        if current == start {
            return Ok(steps);
        }
        if steps.len() >= points.len() || steps.iter().any(|s| s.from == current) {
            return Err(HullError::PigeonholeViolated { steps: steps.len() });
        }
        let step = supporting_edge(points, current, decider)?.ok_or(HullError::NoSupportingEdge { vertex: current })?;
        steps.push(step);
    }
}

fn assemble<T: Clone>(
    points: &[Point2<T>],
    steps: Vec<Step>,
    mode: ConvexityMode,
    eps_sq_used: Option<Rat>,
    fuel_spent: u64,
) -> (Polygon<T>, HullCertificate) {
    let k = steps.len();
    let vertex_indices: Vec<usize> = steps.iter().map(|s| s.from).collect();
    let polygon = Polygon::new(vertex_indices.iter().map(|&i| points[i].clone()).collect());

    let edge_margins: Option<Vec<Vec<(usize, Rat)>>> = steps
        .iter()
        .map(|s| {
            s.margins
                .iter()
                .map(|(j, m)| m.clone().map(|m| (*j, m)))
                .collect::<Option<Vec<_>>>()
        })
        .collect();
    // The turn at vertex i is the margin of edge i-1 at vertex i+1.
    let angle_margins = edge_margins.as_ref().map(|edges| {
        (0..k)
            .map(|i| {
                let next = vertex_indices[(i + 1) % k];
                edges[(i + k - 1) % k]
                    .iter()
                    .find(|(j, _)| *j == next)
                    .map(|(_, m)| m.clone())
                    .expect("every edge carries a margin for the vertex after it")
            })
            .collect()
    });
    let certificate = HullCertificate {
        mode,
        eps_sq_used,
        vertex_indices,
        edge_margins,
        angle_margins,
        containment: true,
        fuel_spent,
    };
    (polygon, certificate)
}

/// Bounds derived from a witness for choosing the first hull vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullParams {
    /// Every translated point has norm below this.
    pub radius_bound: Rat,
    pub eps_sq: Rat,
    /// Rational lower bound on `N - sqrt(N^2 - eps^2)`, namely `eps^2 / 2N`.
    pub delta: Rat,
}

impl HullParams {
    fn derive<T: Scalar>(translated: &[Point2<T>], witness: &SeparationWitness) -> Self {
        let eps_sq = witness.eps_sq().clone();
        // |x| + |y| bounds the norm; window 0 bounds each coordinate.
        let radius_bound = translated
            .iter()
            .map(|p| p.x.to_creal().window(0).magnitude() + p.y.to_creal().window(0).magnitude())
            .max()
            .unwrap_or_default()
            + Rat::one();
        let delta = &eps_sq / (Rat::from_integer(2) * &radius_bound);
        HullParams {
            radius_bound,
            eps_sq,
            delta,
        }
    }

    /// Tolerance on squared norms when picking the start vertex.
    ///
    /// A non-vertex lies at least `eps` inside every edge line, so the largest
    /// squared norm exceeds its own by at least `eps^2`. Any point within
    /// `eps^2 / 2` of the maximum is therefore a vertex.
    pub fn start_tolerance(&self) -> Rat {
        &self.eps_sq / Rat::from_integer(2)
    }
}

/// Index of a point whose squared norm is within `tolerance` of the largest.
///
/// The incumbent only changes on a certified increase, so its norm never
/// decreases and no error accumulates across comparisons.
fn near_extremal<T: Scalar>(translated: &[Point2<T>], tolerance: &Rat) -> usize {
    let norms: Vec<T> = translated
        .iter()
        .map(|p| p.x.clone() * p.x.clone() + p.y.clone() * p.y.clone())
        .collect();
    let mut best = 0;
    for i in 1..norms.len() {
        if cmp_resolve(&norms[i], &norms[best], tolerance) == Resolved::Greater {
            best = i;
        }
    }
    best
}

/// Strictly convex hull of a positively non-collinear point set.
///
/// The input is translated so the centroid of its first three points is the
/// origin, the wrap starts at a point of (nearly) maximal norm, and each
/// subsequent vertex is the point every other point lies strictly left of.
/// All orientation tests are resolved at the witness band; one that falls
/// inside it means the witness overstated the separation.
pub fn convex_hull_constructive<T: Scalar>(
    points: &[Point2<T>],
    witness: &SeparationWitness,
) -> Result<(Polygon<T>, HullCertificate), HullError> {
    let n = points.len();
    if n < 3 {
        return Err(GeometryError::TooFewPoints { len: n }.into());
    }
    let third = T::from_rat(Rat::new(1, 3));
    let cx = third.clone() * (points[0].x.clone() + points[1].x.clone() + points[2].x.clone());
    let cy = third * (points[0].y.clone() + points[1].y.clone() + points[2].y.clone());
    let translated: Vec<Point2<T>> = points
        .iter()
        .map(|p| Point2::new(p.x.clone() - cx.clone(), p.y.clone() - cy.clone()))
        .collect();

    let params = HullParams::derive(&translated, witness);
    let start = near_extremal(&translated, &params.start_tolerance());

    let mut decider = WitnessDecider {
        band: witness.eps_sq() / Rat::from_integer(2),
    };
    let first = supporting_edge(&translated, start, &mut decider)?.ok_or(HullError::WitnessTooWeak)?;
    let steps = wrap(&translated, first, &mut decider)?;
    Ok(assemble(
        points,
        steps,
        ConvexityMode::Strict,
        Some(witness.eps_sq().clone()),
        0,
    ))
}

/// Hull of a point set promised only to have no collinear triple.
///
/// Every orientation test goes through a Markov search sharing one fuel
/// budget: the disjunctive search in `AlmostStrict` mode (no margins in the
/// certificate), the full search in `Strict` mode (margins from the bounds).
/// The first vertex is the first point, in input order, that has a supporting
/// edge; no comparison other than an orientation test is ever made, so equal
/// norms or coordinates never stall the search.
pub fn convex_hull_oracle<T: Scalar>(
    points: &[Point2<T>],
    mode: ConvexityMode,
    fuel: Fuel,
) -> Result<(Polygon<T>, HullCertificate), HullError> {
    let n = points.len();
    if n < 3 {
        return Err(GeometryError::TooFewPoints { len: n }.into());
    }
    let reals: Vec<Point2<CReal>> = points
        .iter()
        .map(|p| Point2::new(p.x.to_creal(), p.y.to_creal()))
        .collect();
    let mut decider = OracleDecider {
        mode,
        meter: fuel.meter(),
    };
    let mut first = None;
    for candidate in 0..n {
        if let Some(step) = supporting_edge(&reals, candidate, &mut decider)? {
            first = Some(step);
            break;
        }
    }
    let first = first.ok_or(HullError::NoSupportingEdge { vertex: n - 1 })?;
    let steps = wrap(&reals, first, &mut decider)?;
    Ok(assemble(points, steps, mode, None, decider.meter.spent()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::noncollinearity_witness;
    use crate::hull::{brute_force_hull, canonicalize};

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    fn fuel(n: u64) -> Fuel {
        Fuel::new(n).unwrap()
    }

    fn constructive(points: &[Point2]) -> (Polygon, HullCertificate) {
        let w = noncollinearity_witness(points).unwrap();
        let (poly, cert) = convex_hull_constructive(points, &w).unwrap();
        canonicalize(poly, cert)
    }

    #[test]
    fn square() {
        let s = [p(0, 0), p(4, 0), p(4, 4), p(0, 4)];
        let (poly, cert) = constructive(&s);
        assert_eq!(poly, brute_force_hull(&s).unwrap());
        assert_eq!(poly.vertices(), &s);
        assert_eq!(cert.vertex_indices, vec![0, 1, 2, 3]);
        assert_eq!(cert.angle_margins.as_ref().unwrap(), &vec![Rat::from_integer(16); 4]);
    }

    #[test]
    fn square_with_interior_point() {
        let s = [p(0, 0), p(4, 0), p(4, 4), p(0, 4), p(1, 2)];
        let (poly, cert) = constructive(&s);
        assert_eq!(poly, brute_force_hull(&s).unwrap());
        assert_eq!(poly.len(), 4);
        // Margins of (1, 2) against each edge: exact crosses 8, 12, 8, 4.
        let interior: Vec<Rat> = cert
            .edge_margins
            .unwrap()
            .iter()
            .map(|e| e.iter().find(|(j, _)| *j == 4).unwrap().1.clone())
            .collect();
        let expected: Vec<Rat> = [8, 12, 8, 4].into_iter().map(Rat::from_integer).collect();
        assert_eq!(interior, expected);
    }

    #[test]
    fn half_gadget_is_a_pentagon() {
        let half = Rat::new(1, 2);
        let mut s = vec![p(-1, -1), p(-1, 1), p(1, 1), p(1, -1)];
        s.push(Point2::new(Rat::one() + half, Rat::zero()));
        let (poly, _) = constructive(&s);
        assert_eq!(poly.len(), 5);
        assert_eq!(poly, brute_force_hull(&s).unwrap());
    }

    #[test]
    fn overstated_witness_is_reported() {
        let s = [p(0, 0), p(4, 0), p(4, 4), p(0, 4), p(1, 2)];
        let w = SeparationWitness::new(Rat::from_integer(1000)).unwrap();
        assert_eq!(convex_hull_constructive(&s, &w), Err(HullError::WitnessTooWeak));
    }

    #[test]
    fn too_few_points() {
        let w = SeparationWitness::new(Rat::one()).unwrap();
        assert!(matches!(
            convex_hull_constructive(&[p(0, 0), p(1, 0)], &w),
            Err(HullError::Geometry(GeometryError::TooFewPoints { len: 2 }))
        ));
    }

    #[test]
    fn oracle_modes_match_constructive() {
        let s = [p(3, -2), p(0, 0), p(4, 0), p(1, 5), p(4, 4), p(0, 4), p(2, 1)];
        let (expected, _) = constructive(&s);
        for mode in [ConvexityMode::Strict, ConvexityMode::AlmostStrict] {
            let (poly, cert) = convex_hull_oracle(&s, mode, fuel(100_000)).unwrap();
            let (poly, cert) = canonicalize(poly, cert);
            assert_eq!(poly, expected);
            assert_eq!(cert.mode, mode);
            assert!(cert.fuel_spent > 0);
            assert_eq!(cert.angle_margins.is_some(), mode == ConvexityMode::Strict);
        }
    }

    #[test]
    fn oracle_stalls_on_collinear_triple() {
        let s = [p(0, 0), p(4, 0), p(4, 4), p(0, 4), p(2, 2)];
        for mode in [ConvexityMode::Strict, ConvexityMode::AlmostStrict] {
            assert!(matches!(
                convex_hull_oracle(&s, mode, fuel(1000)),
                Err(HullError::FuelExhausted { spent: 1000 })
            ));
        }
    }

    #[test]
    fn constructive_over_computable_reals() {
        let s = [p(0, 0), p(4, 0), p(4, 4), p(0, 4), p(1, 2)];
        let w = noncollinearity_witness(&s).unwrap();
        let reals: Vec<Point2<CReal>> = s.iter().map(|q| q.lift()).collect();
        let (_, cert) = convex_hull_constructive(&reals, &w).unwrap();
        let (_, exact) = convex_hull_constructive(&s, &w).unwrap();
        assert_eq!(cert.vertex_indices, exact.vertex_indices);
        // Window lower bounds never exceed the exact margins.
        for (approx, truth) in cert.angle_margins.unwrap().iter().zip(exact.angle_margins.unwrap()) {
            assert!(approx.is_positive() && *approx <= truth);
        }
    }

    #[test]
    fn start_vertex_is_on_the_hull() {
        // All four corners tie for the largest norm about the centroid of the first three.
        let s = [p(-1, -1), p(1, -1), p(1, 1), p(-1, 1)];
        let w = noncollinearity_witness(&s).unwrap();
        let (_, cert) = convex_hull_constructive(&s, &w).unwrap();
        assert_eq!(cert.vertex_indices.len(), 4);
    }
}
