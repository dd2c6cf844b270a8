//! Planar primitives over exact scalars.
//!
//! Every side and angle question reduces to the sign of [`cross`]; every
//! distance is squared, so nothing leaves rational arithmetic.

use std::fmt;
use std::ops::{Add, Sub};

use thiserror::Error;

use crate::principles::{sign_mpvee_metered, PrincipleError, SignDisjunct};
use crate::real_kernel::{Fuel, FuelMeter, Rat, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("need at least 3 points, got {len}")]
    TooFewPoints { len: usize },
    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },
    #[error("points {0}, {1} and {2} are collinear")]
    CollinearTriple(usize, usize, usize),
    #[error("a line needs two distinct points")]
    DegenerateLine,
    #[error("the origin lies on the line")]
    OriginOnLine,
    #[error(transparent)]
    Principle(#[from] PrincipleError),
}

/// A point in the plane. Both coordinates share one scalar kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2<T = Rat> {
    pub x: T,
    pub y: T,
}

impl<T> Point2<T> {
    pub fn new(x: T, y: T) -> Self {
        Point2 { x, y }
    }
}

impl Point2<Rat> {
    pub fn origin() -> Self {
        Point2::new(Rat::zero(), Rat::zero())
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(Rat::from_integer(x), Rat::from_integer(y))
    }

    pub fn norm_sq(&self) -> Rat {
        &self.x * &self.x + &self.y * &self.y
    }

    pub fn distance_sq(&self, other: &Self) -> Rat {
        (self - other).norm_sq()
    }

    /// Lifts to any scalar kind.
    pub fn lift<T: Scalar>(&self) -> Point2<T> {
        Point2::new(T::from_rat(self.x.clone()), T::from_rat(self.y.clone()))
    }
}

impl fmt::Display for Point2<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl<'a> Sub<&'a Point2<Rat>> for &'a Point2<Rat> {
    type Output = Point2<Rat>;
    fn sub(self, rhs: &'a Point2<Rat>) -> Point2<Rat> {
        Point2::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl<'a> Add<&'a Point2<Rat>> for &'a Point2<Rat> {
    type Output = Point2<Rat>;
    fn add(self, rhs: &'a Point2<Rat>) -> Point2<Rat> {
        Point2::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

/// `(b - a) x (c - a)`: twice the signed area of `abc`, positive iff `c` is
/// strictly left of the directed line `a -> b`.
pub fn cross<T: Scalar>(a: &Point2<T>, b: &Point2<T>, c: &Point2<T>) -> T {
    let (ux, uy) = (b.x.clone() - a.x.clone(), b.y.clone() - a.y.clone());
    let (vx, vy) = (c.x.clone() - a.x.clone(), c.y.clone() - a.y.clone());
    ux * vy - uy * vx
}

/// Which side of a line the origin is on, with a certified gap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OriginApartness {
    /// Lower bound on the squared distance from the origin to the line.
    pub gap_sq: Rat,
    /// Sign of `cross(a, b, origin)`.
    pub positive: bool,
}

/// The oriented line through `a` and `b` (direction `a -> b`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocatedLine {
    a: Point2,
    b: Point2,
    apart_sq: Rat,
    origin: Option<OriginApartness>,
}

impl LocatedLine {
    pub fn new(a: Point2, b: Point2) -> Result<Self, GeometryError> {
        let apart_sq = a.distance_sq(&b);
        if apart_sq.is_zero() {
            return Err(GeometryError::DegenerateLine);
        }
        let c0 = cross(&a, &b, &Point2::origin());
        let origin = (!c0.is_zero()).then(|| OriginApartness {
            gap_sq: &c0 * &c0 / &apart_sq,
            positive: c0.is_positive(),
        });
        Ok(LocatedLine { a, b, apart_sq, origin })
    }

    pub fn a(&self) -> &Point2 {
        &self.a
    }

    pub fn b(&self) -> &Point2 {
        &self.b
    }

    /// Squared distance between the defining points.
    pub fn apart_sq(&self) -> &Rat {
        &self.apart_sq
    }

    /// Present iff the origin is bounded away from the line.
    pub fn origin_apartness(&self) -> Option<&OriginApartness> {
        self.origin.as_ref()
    }
}

/// `cross(a, b, p)^2 / |b - a|^2`.
pub fn line_distance_sq(line: &LocatedLine, p: &Point2) -> Rat {
    let c = cross(&line.a, &line.b, p);
    &c * &c / &line.apart_sq
}

/// Open half-planes of a line bounded away from the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HalfSpaceSide {
    /// Strictly on the origin's side.
    Plus,
    /// Strictly on the other side.
    Minus,
    /// Within `sqrt(eps_sq)` of the line.
    Near,
}

/// Places `p` in the origin's open half-plane, the other one, or the band of
/// squared width `eps_sq` around the line.
pub fn halfspace_classify(line: &LocatedLine, p: &Point2, eps_sq: &Rat) -> Result<HalfSpaceSide, GeometryError> {
    assert!(eps_sq.is_positive(), "eps_sq must be positive");
    let origin = line.origin.as_ref().ok_or(GeometryError::OriginOnLine)?;
    if line_distance_sq(line, p) <= *eps_sq {
        return Ok(HalfSpaceSide::Near);
    }
    let c = cross(&line.a, &line.b, p);
    Ok(if c.is_positive() == origin.positive {
        HalfSpaceSide::Plus
    } else {
        HalfSpaceSide::Minus
    })
}

/// Closed half-planes; together they cover the plane only with a sign oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedSide {
    ClosedPlus,
    ClosedMinus,
}

/// Decides which closed half-plane contains `p`.
///
/// Writing `p = y + r u` with `y` on the line and `u` the unit normal pointing
/// to the origin's side, the sign of `r` is the sign of `cross(a, b, p)`
/// flipped to the origin's orientation. That sign is found by the disjunctive
/// Markov search, which diverges when `p` is exactly on the line.
pub fn closed_side_oracle<T: Scalar>(
    line: &LocatedLine,
    p: &Point2<T>,
    fuel: Fuel,
) -> Result<ClosedSide, GeometryError> {
    closed_side_oracle_metered(line, p, &mut fuel.meter())
}

pub fn closed_side_oracle_metered<T: Scalar>(
    line: &LocatedLine,
    p: &Point2<T>,
    meter: &mut FuelMeter,
) -> Result<ClosedSide, GeometryError> {
    let origin = line.origin.as_ref().ok_or(GeometryError::OriginOnLine)?;
    let offset = cross(&line.a.lift::<T>(), &line.b.lift::<T>(), p).to_creal();
    let r = if origin.positive { offset } else { -offset };
    Ok(match sign_mpvee_metered(&r, meter)? {
        SignDisjunct::NonNegative => ClosedSide::ClosedPlus,
        SignDisjunct::NonPositive => ClosedSide::ClosedMinus,
    })
}

/// Positive non-collinearity bound for a rational point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationWitness {
    eps_sq: Rat,
}

impl SeparationWitness {
    /// Accepts any positive bound without checking it against a point set;
    /// hull construction reports a bound that is too large.
    pub fn new(eps_sq: Rat) -> Option<Self> {
        eps_sq.is_positive().then_some(SeparationWitness { eps_sq })
    }

    pub fn eps_sq(&self) -> &Rat {
        &self.eps_sq
    }
}

/// The least squared distance from a point of `points` to a line through two
/// others, or between two points, whichever is smaller.
pub fn noncollinearity_witness(points: &[Point2]) -> Result<SeparationWitness, GeometryError> {
    let n = points.len();
    if n < 3 {
        return Err(GeometryError::TooFewPoints { len: n });
    }
    let mut best: Option<Rat> = None;
    let mut consider = |v: Rat| {
        if best.as_ref().is_none_or(|b| v < *b) {
            best = Some(v);
        }
    };
    for i in 0..n {
        for j in i + 1..n {
            let d = points[i].distance_sq(&points[j]);
            if d.is_zero() {
                return Err(GeometryError::DuplicatePoint { first: i, second: j });
            }
            consider(d);
        }
    }
    // Each unordered line {j, k} once; the distance does not depend on direction.
    for j in 0..n {
        for k in j + 1..n {
            let line = LocatedLine::new(points[j].clone(), points[k].clone())?;
            for (i, p) in points.iter().enumerate() {
                if i == j || i == k {
                    continue;
                }
                let d = line_distance_sq(&line, p);
                if d.is_zero() {
                    let mut t = [i, j, k];
                    t.sort_unstable();
                    return Err(GeometryError::CollinearTriple(t[0], t[1], t[2]));
                }
                consider(d);
            }
        }
    }
    Ok(SeparationWitness {
        eps_sq: best.expect("at least one pair"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real_kernel::CReal;

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    fn pr(x: Rat, y: Rat) -> Point2 {
        Point2::new(x, y)
    }

    fn fuel(n: u64) -> Fuel {
        Fuel::new(n).unwrap()
    }

    #[test]
    fn cross_examples() {
        assert_eq!(cross(&p(0, 0), &p(1, 0), &p(0, 1)), Rat::one());
        assert_eq!(cross(&p(0, 0), &p(1, 0), &p(2, 0)), Rat::zero());
        assert_eq!(cross(&p(0, 0), &p(0, 1), &p(1, 0)), -Rat::one());
    }

    #[test]
    fn line_distance_examples() {
        let x_axis = LocatedLine::new(p(0, 0), p(1, 0)).unwrap();
        assert_eq!(line_distance_sq(&x_axis, &p(0, 1)), Rat::one());
        assert_eq!(line_distance_sq(&x_axis, &p(5, -2)), Rat::from_integer(4));
        let diagonal = LocatedLine::new(p(0, 0), p(1, 1)).unwrap();
        assert_eq!(line_distance_sq(&diagonal, &p(1, 0)), Rat::new(1, 2));
    }

    #[test]
    fn degenerate_line_is_rejected() {
        assert_eq!(LocatedLine::new(p(2, 3), p(2, 3)), Err(GeometryError::DegenerateLine));
    }

    #[test]
    fn halfspace_examples() {
        let y1 = LocatedLine::new(p(0, 1), p(1, 1)).unwrap();
        let eps = Rat::new(1, 100);
        assert_eq!(halfspace_classify(&y1, &p(0, 0), &eps), Ok(HalfSpaceSide::Plus));
        assert_eq!(halfspace_classify(&y1, &p(0, 2), &eps), Ok(HalfSpaceSide::Minus));
        assert_eq!(
            halfspace_classify(&y1, &pr(Rat::zero(), Rat::new(101, 100)), &eps),
            Ok(HalfSpaceSide::Near)
        );
    }

    #[test]
    fn halfspace_needs_origin_off_the_line() {
        let through_origin = LocatedLine::new(p(-1, -1), p(1, 1)).unwrap();
        assert!(through_origin.origin_apartness().is_none());
        assert_eq!(
            halfspace_classify(&through_origin, &p(3, 0), &Rat::one()),
            Err(GeometryError::OriginOnLine)
        );
    }

    #[test]
    fn plus_is_origin_side_for_either_orientation() {
        let forward = LocatedLine::new(p(0, 1), p(1, 1)).unwrap();
        let backward = LocatedLine::new(p(1, 1), p(0, 1)).unwrap();
        let eps = Rat::new(1, 100);
        for line in [&forward, &backward] {
            assert_eq!(halfspace_classify(line, &p(7, -3), &eps), Ok(HalfSpaceSide::Plus));
            assert_eq!(halfspace_classify(line, &p(-7, 3), &eps), Ok(HalfSpaceSide::Minus));
        }
    }

    #[test]
    fn closed_side_examples() {
        let y1 = LocatedLine::new(p(0, 1), p(1, 1)).unwrap();
        assert_eq!(closed_side_oracle(&y1, &p(3, 0), fuel(100)), Ok(ClosedSide::ClosedPlus));
        assert_eq!(
            closed_side_oracle(&y1, &p(3, 7), fuel(100)),
            Ok(ClosedSide::ClosedMinus)
        );
        assert!(matches!(
            closed_side_oracle(&y1, &p(3, 1), fuel(1000)),
            Err(GeometryError::Principle(PrincipleError::FuelExhausted { .. }))
        ));
    }

    #[test]
    fn closed_side_accepts_computable_points() {
        let y1 = LocatedLine::new(p(0, 1), p(1, 1)).unwrap();
        let just_above = Point2::new(CReal::embed(Rat::zero()), CReal::embed(Rat::one() + Rat::pow2_neg(30)));
        assert_eq!(
            closed_side_oracle(&y1, &just_above, fuel(100)),
            Ok(ClosedSide::ClosedMinus)
        );
    }

    // Brute force over every ordered triple and pair, straight from the definition.
    fn witness_oracle(points: &[Point2]) -> Rat {
        let mut values = Vec::new();
        for (i, x) in points.iter().enumerate() {
            for (j, y) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                values.push(x.distance_sq(y));
                for (k, z) in points.iter().enumerate() {
                    if k == i || k == j {
                        continue;
                    }
                    let c = cross(y, z, x);
                    values.push(&c * &c / y.distance_sq(z));
                }
            }
        }
        values.into_iter().min().unwrap()
    }

    #[test]
    fn witness_examples() {
        let square = [p(0, 0), p(1, 0), p(1, 1), p(0, 1)];
        assert_eq!(witness_oracle(&square), Rat::new(1, 2));
        assert_eq!(noncollinearity_witness(&square).unwrap().eps_sq(), &Rat::new(1, 2));

        // The apex (1, 1) sits at distance 1 from the base line y = 0.
        let triangle = [p(0, 0), p(2, 0), p(1, 1)];
        assert_eq!(witness_oracle(&triangle), Rat::one());
        assert_eq!(noncollinearity_witness(&triangle).unwrap().eps_sq(), &Rat::one());

        assert_eq!(
            noncollinearity_witness(&[p(0, 0), p(1, 0), p(2, 0)]),
            Err(GeometryError::CollinearTriple(0, 1, 2))
        );
    }

    #[test]
    fn witness_errors() {
        assert_eq!(
            noncollinearity_witness(&[p(0, 0), p(1, 0)]),
            Err(GeometryError::TooFewPoints { len: 2 })
        );
        assert_eq!(
            noncollinearity_witness(&[p(0, 0), p(1, 0), p(0, 0)]),
            Err(GeometryError::DuplicatePoint { first: 0, second: 2 })
        );
    }
}
