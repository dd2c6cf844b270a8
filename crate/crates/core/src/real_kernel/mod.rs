//! Exact rationals and computable reals.
//!
//! [`Rat`] is the exact scalar. [`CReal`] represents a real by nested rational
//! windows whose width at precision `n` is at most `2^(-n)`; comparisons read
//! directly off those windows. There are no square roots here: every geometric
//! quantity downstream is a polynomial in the coordinates.

mod creal;
mod rat;

use std::fmt;

pub use creal::{cmp_resolve, Approximant, CReal, Interval, Resolved, Scalar, SignResolution};
pub use rat::{ParseRatError, Rat};

/// Refinement budget for promise-based searches. Always at least one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fuel(u64);

impl Fuel {
    pub fn new(max_refinements: u64) -> Option<Self> {
        (max_refinements >= 1).then_some(Fuel(max_refinements))
    }

    pub fn max_refinements(self) -> u64 {
        self.0
    }

    pub fn meter(self) -> FuelMeter {
        FuelMeter {
            limit: self.0,
            spent: 0,
        }
    }
}

impl fmt::Display for Fuel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Running account of a [`Fuel`] budget, shared across every refinement of
/// one computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuelMeter {
    limit: u64,
    spent: u64,
}

/// The budget ran out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OutOfFuel {
    pub spent: u64,
}

impl FuelMeter {
    /// Spends one unit.
    pub fn charge(&mut self) -> Result<(), OutOfFuel> {
        if self.spent >= self.limit {
            return Err(OutOfFuel { spent: self.spent });
        }
        self.spent += 1;
        Ok(())
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }

    pub fn remaining(&self) -> u64 {
        self.limit - self.spent
    }
}
