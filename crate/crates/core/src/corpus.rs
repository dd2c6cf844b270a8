//! Seeded random inputs for tests and benchmarks.

use std::ops::RangeInclusive;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geometry::Point2;
use crate::real_kernel::Rat;

/// Coordinate magnitude bound.
pub const COORD_BOUND: i64 = 100;

/// A rational in `[-COORD_BOUND, COORD_BOUND]` with denominator 1 to 4.
pub fn coordinate<R: Rng>(rng: &mut R) -> Rat {
    let den = rng.gen_range(1..=4);
    Rat::new(rng.gen_range(-COORD_BOUND * den..=COORD_BOUND * den), den)
}

fn turn(a: &Point2, b: &Point2, c: &Point2) -> Rat {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// `size` distinct points, no three collinear, by rejection sampling.
pub fn point_set<R: Rng>(rng: &mut R, size: usize) -> Vec<Point2> {
    let mut points: Vec<Point2> = Vec::with_capacity(size);
    while points.len() < size {
        let candidate = Point2::new(coordinate(rng), coordinate(rng));
        let clashes = points.contains(&candidate)
            || points
                .iter()
                .enumerate()
                .any(|(i, a)| points[i + 1..].iter().any(|b| turn(a, b, &candidate).is_zero()));
        if !clashes {
            points.push(candidate);
        }
    }
    points
}

/// `count` point sets with sizes drawn uniformly from `sizes`.
pub fn point_sets(seed: u64, count: usize, sizes: RangeInclusive<usize>) -> Vec<Vec<Point2>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let size = rng.gen_range(sizes.clone());
            point_set(&mut rng, size)
        })
        .collect()
}
