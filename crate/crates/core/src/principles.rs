//! Markov-principle realizers as fuel-bounded searches.
//!
//! Each search is only justified by a promise on its input (a sequence that
//! is not all zero, a real that is not zero). The promise cannot be checked,
//! so every search runs against a [`FuelMeter`] and reports exhaustion as a
//! distinct outcome. Exhaustion cannot tell a false promise from a small
//! budget.
//!
//! [`sign_mp`] and [`sign_mpvee`] run the same refinement loop. They differ
//! only in what they return: `sign_mp` hands back a positive rational bound,
//! `sign_mpvee` only the side, so downstream code relying on the weaker
//! disjunction cannot quietly use a bound it was never given.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::real_kernel::{CReal, Fuel, FuelMeter, OutOfFuel, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrincipleError {
    #[error("fuel exhausted after {spent} refinements")]
    FuelExhausted { spent: u64 },
    #[error("promise violated: terms {first} and {second} are both 1")]
    PromiseViolation { first: u64, second: u64 },
    #[error("search requires the sequence's promise flags to be set")]
    PromiseNotAsserted,
}

impl From<OutOfFuel> for PrincipleError {
    fn from(e: OutOfFuel) -> Self {
        PrincipleError::FuelExhausted { spent: e.spent }
    }
}

/// A binary sequence together with the promises a caller asserts about it.
#[derive(Clone)]
pub struct BinarySeq {
    term: Arc<dyn Fn(u64) -> bool + Send + Sync>,
    pub promise_at_most_one: bool,
    pub promise_not_all_zero: bool,
}

impl BinarySeq {
    /// A sequence with no promises asserted.
    pub fn new<F>(term: F) -> Self
    where
        F: Fn(u64) -> bool + Send + Sync + 'static,
    {
        BinarySeq {
            term: Arc::new(term),
            promise_at_most_one: false,
            promise_not_all_zero: false,
        }
    }

    /// The indicator of index `k`, with both promises set (truthfully).
    pub fn indicator(k: u64) -> Self {
        Self::new(move |n| n == k).with_promises()
    }

    /// Sets both promises, whether or not they hold.
    pub fn with_promises(mut self) -> Self {
        self.promise_at_most_one = true;
        self.promise_not_all_zero = true;
        self
    }

    pub fn term(&self, n: u64) -> bool {
        (self.term)(n)
    }
}

impl fmt::Debug for BinarySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinarySeq")
            .field("promise_at_most_one", &self.promise_at_most_one)
            .field("promise_not_all_zero", &self.promise_not_all_zero)
            .finish_non_exhaustive()
    }
}

/// Parity of the index carrying the sequence's single 1.
///
/// `Odd` certifies that all even terms are zero; `Even` that all odd terms are.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityOutcome {
    pub parity: Parity,
    /// Index of the 1 that was found.
    pub index: u64,
    /// Terms inspected, including the promise check after the hit.
    pub inspected: u64,
}

/// Disjunctive Markov search over a binary sequence.
///
/// Scans indices 0, 1, 2, ... charging one unit of fuel per term. On a hit at
/// `k`, terms `k+1 ..= 2k+1` are inspected uncharged to look for a second 1,
/// so the total inspection count is at most `2k + 2` and the outcome does not
/// depend on the budget once it covers `k`.
pub fn mpvee_binary(alpha: &BinarySeq, fuel: Fuel) -> Result<ParityOutcome, PrincipleError> {
    if !(alpha.promise_at_most_one && alpha.promise_not_all_zero) {
        return Err(PrincipleError::PromiseNotAsserted);
    }
    let mut meter = fuel.meter();
    let mut n = 0u64;
    loop {
        meter.charge()?;
        if alpha.term(n) {
            break;
        }
        n += 1;
    }
    let k = n;
    for m in k + 1..=2 * k + 1 {
        if alpha.term(m) {
            return Err(PrincipleError::PromiseViolation { first: k, second: m });
        }
    }
    Ok(ParityOutcome {
        parity: if k.is_multiple_of(2) { Parity::Even } else { Parity::Odd },
        index: k,
        inspected: 2 * k + 2,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

/// `sign * x > bound > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Apartness {
    pub bound: Rat,
    pub sign: Sign,
}

/// `x >= 0` or `x <= 0`, without a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignDisjunct {
    NonNegative,
    NonPositive,
}

impl From<Sign> for SignDisjunct {
    fn from(sign: Sign) -> Self {
        match sign {
            Sign::Positive => SignDisjunct::NonNegative,
            Sign::Negative => SignDisjunct::NonPositive,
        }
    }
}

/// Refines `x` at n = 1, 2, ... until a window excludes zero, one unit of
/// fuel per window.
fn separate_from_zero(x: &CReal, meter: &mut FuelMeter) -> Result<Apartness, PrincipleError> {
    let mut n = 1u32;
    loop {
        meter.charge()?;
        let w = x.window(n);
        if w.lo().is_positive() {
            return Ok(Apartness {
                bound: w.lo() / Rat::from_integer(2),
                sign: Sign::Positive,
            });
        }
        if w.hi().is_negative() {
            return Ok(Apartness {
                bound: -w.hi() / Rat::from_integer(2),
                sign: Sign::Negative,
            });
        }
        n = n.checked_add(1).expect("precision index overflow");
    }
}

/// Markov's principle for reals: from the promise that `x` is not zero,
/// find a rational bound on `|x|`.
pub fn sign_mp(x: &CReal, fuel: Fuel) -> Result<Apartness, PrincipleError> {
    sign_mp_metered(x, &mut fuel.meter())
}

pub fn sign_mp_metered(x: &CReal, meter: &mut FuelMeter) -> Result<Apartness, PrincipleError> {
    separate_from_zero(x, meter)
}

/// Disjunctive Markov's principle for reals: from the promise that `x` is not
/// zero, decide `x >= 0` or `x <= 0`.
pub fn sign_mpvee(x: &CReal, fuel: Fuel) -> Result<SignDisjunct, PrincipleError> {
    sign_mpvee_metered(x, &mut fuel.meter())
}

pub fn sign_mpvee_metered(x: &CReal, meter: &mut FuelMeter) -> Result<SignDisjunct, PrincipleError> {
    separate_from_zero(x, meter).map(|a| a.sign.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fuel(n: u64) -> Fuel {
        Fuel::new(n).unwrap()
    }

    #[test]
    fn mpvee_binary_examples() {
        let odd = mpvee_binary(&BinarySeq::indicator(3), fuel(100)).unwrap();
        assert_eq!(odd.parity, Parity::Odd);
        let even = mpvee_binary(&BinarySeq::indicator(4), fuel(100)).unwrap();
        assert_eq!(even.parity, Parity::Even);
        let zeros = BinarySeq::new(|_| false).with_promises();
        assert_eq!(
            mpvee_binary(&zeros, fuel(100)),
            Err(PrincipleError::FuelExhausted { spent: 100 })
        );
    }

    #[test]
    fn mpvee_binary_reports_second_one() {
        let two = BinarySeq::new(|n| n == 2 || n == 5).with_promises();
        assert_eq!(
            mpvee_binary(&two, fuel(100)),
            Err(PrincipleError::PromiseViolation { first: 2, second: 5 })
        );
    }

    #[test]
    fn mpvee_binary_requires_promises() {
        let bare = BinarySeq::new(|n| n == 1);
        assert_eq!(mpvee_binary(&bare, fuel(10)), Err(PrincipleError::PromiseNotAsserted));
    }

    #[test]
    fn sign_mp_examples() {
        let quarter = Rat::new(1, 4);
        let a = sign_mp(&CReal::embed(quarter.clone()), fuel(100)).unwrap();
        assert_eq!(a.sign, Sign::Positive);
        assert!(a.bound.is_positive() && a.bound < quarter);

        let tiny = Rat::new(-1, 1024);
        let a = sign_mp(&CReal::embed(tiny.clone()), fuel(100)).unwrap();
        assert_eq!(a.sign, Sign::Negative);
        assert!(a.bound.is_positive() && a.bound < tiny.abs());

        assert_eq!(
            sign_mp(&CReal::embed(Rat::zero()), fuel(1000)),
            Err(PrincipleError::FuelExhausted { spent: 1000 })
        );
    }

    #[test]
    fn sign_mpvee_examples() {
        assert_eq!(
            sign_mpvee(&CReal::embed(Rat::new(1, 2)), fuel(100)),
            Ok(SignDisjunct::NonNegative)
        );
        assert_eq!(
            sign_mpvee(&CReal::embed(Rat::new(-1, 3)), fuel(100)),
            Ok(SignDisjunct::NonPositive)
        );
        assert!(matches!(
            sign_mpvee(&CReal::embed(Rat::zero()), fuel(1000)),
            Err(PrincipleError::FuelExhausted { .. })
        ));
    }

    #[test]
    fn small_budget_exhausts_before_resolution() {
        // 2^-20 needs about 20 refinements.
        let x = CReal::embed(Rat::pow2_neg(20));
        assert!(sign_mp(&x, fuel(5)).is_err());
        assert!(sign_mp(&x, fuel(64)).is_ok());
    }
}
