//! Point sets whose hull encodes the sign of a real `a`.
//!
//! The square `(±1, ±1)` plus `(1 + a, 0)` has five hull vertices when
//! `a > 0` and four when `a < 0`. Adding `(-1 + a, 0)` makes exactly one of
//! the two extra points a vertex, and the turn there is `2|a|`, so a strict
//! margin at that vertex bounds `|a|` from below.

use crate::geometry::Point2;
use crate::principles::{Apartness, Sign, SignDisjunct};
use crate::real_kernel::{CReal, Fuel, Rat};

use super::{convex_hull_oracle, ConvexityMode, HullError};

fn corner(x: i64, y: i64) -> Point2<CReal> {
    Point2::from_ints(x, y).lift()
}

/// `{(-1,-1), (-1,1), (1,1), (1,-1), (1+a, 0)}`.
pub fn mpvee_gadget(a: &CReal) -> Vec<Point2<CReal>> {
    vec![
        corner(-1, -1),
        corner(-1, 1),
        corner(1, 1),
        corner(1, -1),
        Point2::new(CReal::embed(Rat::one()) + a.clone(), CReal::embed(Rat::zero())),
    ]
}

/// [`mpvee_gadget`] plus `(-1+a, 0)`.
pub fn mp_gadget(a: &CReal) -> Vec<Point2<CReal>> {
    let mut points = mpvee_gadget(a);
    points.push(Point2::new(
        CReal::embed(-Rat::one()) + a.clone(),
        CReal::embed(Rat::zero()),
    ));
    points
}

/// Decides `a >= 0` or `a <= 0` by counting hull vertices of the five-point
/// gadget, computed in almost-strict mode.
pub fn reduction_gadget_mpvee(a: &CReal, fuel: Fuel) -> Result<SignDisjunct, HullError> {
    let (polygon, _) = convex_hull_oracle(&mpvee_gadget(a), ConvexityMode::AlmostStrict, fuel)?;
    match polygon.len() {
        5 => Ok(SignDisjunct::NonNegative),
        4 => Ok(SignDisjunct::NonPositive),
        count => Err(HullError::UnexpectedVertexCount { count }),
    }
}

/// Bounds `a` away from zero using the strict hull of the six-point gadget:
/// half the angle margin at whichever of `(1+a, 0)`, `(-1+a, 0)` is a vertex.
pub fn reduction_gadget_mp(a: &CReal, fuel: Fuel) -> Result<Apartness, HullError> {
    const RIGHT: usize = 4;
    const LEFT: usize = 5;
    let (polygon, cert) = convex_hull_oracle(&mp_gadget(a), ConvexityMode::Strict, fuel)?;
    let margins = cert.angle_margins.as_ref().expect("strict mode records angle margins");
    let (position, sign) = cert
        .vertex_indices
        .iter()
        .enumerate()
        .find_map(|(pos, &idx)| match idx {
            RIGHT => Some((pos, Sign::Positive)),
            LEFT => Some((pos, Sign::Negative)),
            _ => None,
        })
        .ok_or(HullError::UnexpectedVertexCount { count: polygon.len() })?;
    Ok(Apartness {
        bound: &margins[position] / Rat::from_integer(2),
        sign,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point2;
    use crate::hull::brute_force_hull;

    fn fuel(n: u64) -> Fuel {
        Fuel::new(n).unwrap()
    }

    fn exact_gadget(a: &Rat) -> Vec<Point2> {
        let mut s: Vec<Point2> = [(-1, -1), (-1, 1), (1, 1), (1, -1)]
            .into_iter()
            .map(|(x, y)| Point2::from_ints(x, y))
            .collect();
        s.push(Point2::new(Rat::one() + a, Rat::zero()));
        s
    }

    #[test]
    fn mpvee_gadget_signs() {
        let e = |q| CReal::embed(q);
        assert_eq!(
            reduction_gadget_mpvee(&e(Rat::new(1, 2)), fuel(1000)),
            Ok(SignDisjunct::NonNegative)
        );
        assert_eq!(
            reduction_gadget_mpvee(&e(Rat::new(-1, 2)), fuel(1000)),
            Ok(SignDisjunct::NonPositive)
        );
        let tiny = Rat::pow2_neg(10);
        assert_eq!(brute_force_hull(&exact_gadget(&tiny)).unwrap().len(), 5);
        assert_eq!(
            reduction_gadget_mpvee(&e(tiny), fuel(10_000)),
            Ok(SignDisjunct::NonNegative)
        );
    }

    #[test]
    fn mp_gadget_bounds() {
        for (a, sign) in [(Rat::new(1, 2), Sign::Positive), (Rat::new(-1, 10), Sign::Negative)] {
            let apart = reduction_gadget_mp(&CReal::embed(a.clone()), fuel(10_000)).unwrap();
            assert_eq!(apart.sign, sign);
            assert!(apart.bound.is_positive());
            assert!(apart.bound <= a.abs());
        }
    }

    #[test]
    fn zero_gadgets_exhaust() {
        let zero = CReal::embed(Rat::zero());
        assert!(matches!(
            reduction_gadget_mpvee(&zero, fuel(1000)),
            Err(HullError::FuelExhausted { .. })
        ));
        assert!(matches!(
            reduction_gadget_mp(&zero, fuel(1000)),
            Err(HullError::FuelExhausted { .. })
        ));
    }
}
