use crate::geometry::{GeometryError, Point2};
use crate::real_kernel::Rat;

use super::Polygon;

// Kept separate from `geometry::cross` so the oracle shares no code with the
// path it checks.
fn turn(a: &Point2, b: &Point2, c: &Point2) -> Rat {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// Reference hull by exhaustive edge testing, `O(n^3)` exact orientation tests.
///
/// `(p, q)` is an edge iff every other point is strictly left of `p -> q`.
/// The result starts at the lexicographically smallest vertex.
pub fn brute_force_hull(points: &[Point2]) -> Result<Polygon, GeometryError> {
    let n = points.len();
    if n < 3 {
        return Err(GeometryError::TooFewPoints { len: n });
    }
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return Err(GeometryError::DuplicatePoint { first: i, second: j });
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if turn(&points[i], &points[j], &points[k]).is_zero() {
                    return Err(GeometryError::CollinearTriple(i, j, k));
                }
            }
        }
    }

    let mut successor = vec![None; n];
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let is_edge = points
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i && k != j)
                .all(|(_, s)| turn(p, q, s).is_positive());
            if is_edge {
                successor[i] = Some(j);
            }
        }
    }

    let start = (0..n).min_by(|&a, &b| points[a].cmp(&points[b])).expect("non-empty");
    let mut cycle = vec![start];
    let mut current = start;
    loop {
        let next = successor[current].expect("every hull vertex has an outgoing edge");
        if next == start {
            break;
        }
        assert!(cycle.len() < n, "edge successors do not form a cycle");
        cycle.push(next);
        current = next;
    }
    Ok(Polygon::new(cycle.into_iter().map(|i| points[i].clone()).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    #[test]
    fn triangle_is_its_own_hull() {
        let s = [p(0, 1), p(0, 0), p(1, 0)];
        assert_eq!(brute_force_hull(&s).unwrap().vertices(), &[p(0, 0), p(1, 0), p(0, 1)]);
    }

    #[test]
    fn interior_point_is_dropped() {
        let s = [p(0, 0), p(4, 0), p(4, 4), p(0, 4), p(1, 2)];
        assert_eq!(brute_force_hull(&s).unwrap().vertices(), &s[..4]);
    }

    #[test]
    fn half_gadget_is_a_pentagon() {
        let s = [
            p(-1, -1),
            p(-1, 1),
            p(1, 1),
            p(1, -1),
            Point2::new(Rat::new(3, 2), Rat::zero()),
        ];
        let hull = brute_force_hull(&s).unwrap();
        assert_eq!(hull.len(), 5);
        assert_eq!(
            hull.vertices(),
            &[
                p(-1, -1),
                p(1, -1),
                Point2::new(Rat::new(3, 2), Rat::zero()),
                p(1, 1),
                p(-1, 1)
            ]
        );
    }

    #[test]
    fn collinear_input_is_rejected() {
        let s = [p(0, 0), p(1, 1), p(5, 0), p(2, 2)];
        assert_eq!(brute_force_hull(&s), Err(GeometryError::CollinearTriple(0, 1, 3)));
    }
}
