//! Batch evaluation over many independent inputs.
//!
//! With the `parallel` feature (on by default) [`map`] fans out over rayon's
//! global pool; without it, it is a plain sequential loop. Both variants
//! return results in input order, so output is identical either way.

use crate::geometry::{noncollinearity_witness, Point2};
use crate::hull::{
    brute_force_hull, canonicalize, convex_hull_constructive, convex_hull_oracle, ConvexityMode, HullCertificate,
    HullError, Polygon,
};
use crate::real_kernel::Fuel;

pub fn map_sequential<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_parallel<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    map_parallel(items, f)
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    map_sequential(items, f)
}

pub type CertifiedHull = (Polygon, HullCertificate);

/// Witness plus constructive hull, canonically rotated.
pub fn constructive_hull(points: &[Point2]) -> Result<CertifiedHull, HullError> {
    let witness = noncollinearity_witness(points)?;
    let (polygon, cert) = convex_hull_constructive(points, &witness)?;
    Ok(canonicalize(polygon, cert))
}

/// Oracle hull, canonically rotated.
pub fn oracle_hull(points: &[Point2], mode: ConvexityMode, fuel: Fuel) -> Result<CertifiedHull, HullError> {
    let (polygon, cert) = convex_hull_oracle(points, mode, fuel)?;
    Ok(canonicalize(polygon, cert))
}

pub fn constructive_hulls(sets: &[Vec<Point2>]) -> Vec<Result<CertifiedHull, HullError>> {
    map(sets, |s| constructive_hull(s))
}

pub fn oracle_hulls(sets: &[Vec<Point2>], mode: ConvexityMode, fuel: Fuel) -> Vec<Result<CertifiedHull, HullError>> {
    map(sets, |s| oracle_hull(s, mode, fuel))
}

pub fn brute_force_hulls(sets: &[Vec<Point2>]) -> Vec<Result<Polygon, HullError>> {
    map(sets, |s| brute_force_hull(s).map_err(HullError::from))
}
