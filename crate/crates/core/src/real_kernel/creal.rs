use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rat;

/// Closed rational interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Interval {
    lo: Rat,
    hi: Rat,
}

impl Interval {
    /// Returns `None` when `lo > hi`.
    pub fn new(lo: Rat, hi: Rat) -> Option<Self> {
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn point(q: Rat) -> Self {
        Interval { lo: q.clone(), hi: q }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// Largest absolute value in the interval.
    pub fn magnitude(&self) -> Rat {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn contains(&self, q: &Rat) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn excludes_zero(&self) -> bool {
        self.lo.is_positive() || self.hi.is_negative()
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        Interval::new(
            self.lo.clone().max(other.lo.clone()),
            self.hi.clone().min(other.hi.clone()),
        )
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Raw approximation function for user-supplied reals.
pub type Approximant = dyn Fn(u32) -> Interval + Send + Sync;

/// `[lo, hi] / 2^exp`: the internal form of every window.
#[derive(Clone, Debug)]
struct Grid {
    lo: BigInt,
    hi: BigInt,
    exp: u32,
}

fn shl(x: &BigInt, bits: u32) -> BigInt {
    if bits == 0 {
        x.clone()
    } else {
        x << bits
    }
}

fn floor_shr(x: &BigInt, bits: u32) -> BigInt {
    // Shifts on negative BigInt round toward negative infinity.
    x >> bits
}

fn ceil_shr(x: &BigInt, bits: u32) -> BigInt {
    -((-x) >> bits)
}

impl Grid {
    fn point_rounded(q: &Rat, exp: u32) -> Grid {
        let scaled = q.numer() << exp;
        let (lo, hi) = if q.denom().is_one() {
            (scaled.clone(), scaled)
        } else {
            (scaled.div_floor(q.denom()), scaled.div_ceil(q.denom()))
        };
        Grid { lo, hi, exp }
    }

    fn from_interval(w: &Interval, exp: u32) -> Grid {
        Grid {
            lo: Grid::point_rounded(&w.lo, exp).lo,
            hi: Grid::point_rounded(&w.hi, exp).hi,
            exp,
        }
    }

    /// Rewrites the endpoints over `2^exp`, rounding outward if that is coarser.
    fn rescale(&self, exp: u32) -> Grid {
        if exp >= self.exp {
            let d = exp - self.exp;
            Grid {
                lo: shl(&self.lo, d),
                hi: shl(&self.hi, d),
                exp,
            }
        } else {
            let d = self.exp - exp;
            Grid {
                lo: floor_shr(&self.lo, d),
                hi: ceil_shr(&self.hi, d),
                exp,
            }
        }
    }

    fn aligned(a: &Grid, b: &Grid) -> (Grid, Grid) {
        let exp = a.exp.max(b.exp);
        (a.rescale(exp), b.rescale(exp))
    }

    fn add(&self, other: &Grid) -> Grid {
        let (a, b) = Grid::aligned(self, other);
        Grid {
            lo: a.lo + b.lo,
            hi: a.hi + b.hi,
            exp: a.exp,
        }
    }

    fn sub(&self, other: &Grid) -> Grid {
        let (a, b) = Grid::aligned(self, other);
        Grid {
            lo: a.lo - b.hi,
            hi: a.hi - b.lo,
            exp: a.exp,
        }
    }

    fn mul(&self, other: &Grid) -> Grid {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().cloned().unwrap_or_default();
        let hi = products.iter().max().cloned().unwrap_or_default();
        Grid {
            lo,
            hi,
            exp: self.exp + other.exp,
        }
    }

    fn neg(&self) -> Grid {
        Grid {
            lo: -&self.hi,
            hi: -&self.lo,
            exp: self.exp,
        }
    }

    fn abs(&self) -> Grid {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            Grid {
                lo: BigInt::zero(),
                hi: self.magnitude(),
                exp: self.exp,
            }
        }
    }

    fn magnitude(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }

    fn intersect(&self, other: &Grid) -> Option<Grid> {
        let (a, b) = Grid::aligned(self, other);
        let lo = a.lo.max(b.lo);
        let hi = a.hi.min(b.hi);
        (lo <= hi).then_some(Grid { lo, hi, exp: a.exp })
    }

    /// `width <= 2^(-n)`.
    fn narrower_than(&self, n: u32) -> bool {
        let width = &self.hi - &self.lo;
        if self.exp >= n {
            width <= BigInt::one() << (self.exp - n)
        } else {
            width << (n - self.exp) <= BigInt::one()
        }
    }

    fn to_interval(&self) -> Interval {
        Interval {
            lo: Rat::from_dyadic(self.lo.clone(), self.exp),
            hi: Rat::from_dyadic(self.hi.clone(), self.exp),
        }
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_interval().fmt(f)
    }
}

/// `ceil(log2(|x| + |y|))` for window magnitudes, floored at 0.
fn magnitude_bits(x: &Grid, y: &Grid) -> u32 {
    let (x, y) = Grid::aligned(x, y);
    let sum = x.magnitude() + y.magnitude();
    if sum <= BigInt::one() {
        return 0;
    }
    let bits = (sum - BigInt::one()).bits() as u32;
    bits.saturating_sub(x.exp)
}

enum Kind {
    Exact(Rat),
    Add(CReal, CReal),
    Sub(CReal, CReal),
    Mul(CReal, CReal),
    Neg(CReal),
    Abs(CReal),
    Func(Arc<Approximant>),
}

struct Node {
    kind: Kind,
    // Normalized windows 0..len, each intersected with its predecessor.
    windows: Mutex<Vec<Grid>>,
}

/// Computable real: a nested sequence of rational windows, the window at
/// precision `n` having width at most `2^(-n)`.
///
/// Windows are computed on demand and memoized, so repeated queries are cheap
/// and always return the same interval. Cloning shares the underlying node.
#[derive(Clone)]
pub struct CReal(Arc<Node>);

impl CReal {
    fn from_kind(kind: Kind) -> Self {
        CReal(Arc::new(Node {
            kind,
            windows: Mutex::new(Vec::new()),
        }))
    }

    /// Embeds a rational; window `n` is `q` rounded outward to the grid `2^(-n)`.
    pub fn embed(q: Rat) -> Self {
        Self::from_kind(Kind::Exact(q))
    }

    /// Wraps an approximation function. `f(n)` must contain the represented
    /// value and have width at most `2^(-n)`; nesting is enforced here.
    pub fn from_fn<F>(f: F) -> Self
    where
        F: Fn(u32) -> Interval + Send + Sync + 'static,
    {
        Self::from_kind(Kind::Func(Arc::new(f)))
    }

    pub fn abs(&self) -> Self {
        Self::from_kind(Kind::Abs(self.clone()))
    }

    /// The rational this real was embedded from, if it is a bare embedding.
    pub fn as_exact(&self) -> Option<&Rat> {
        match &self.0.kind {
            Kind::Exact(q) => Some(q),
            _ => None,
        }
    }

    /// Normalized window at precision `n`.
    pub fn window(&self, n: u32) -> Interval {
        self.grid(n).to_interval()
    }

    fn grid(&self, n: u32) -> Grid {
        let mut windows = self.0.windows.lock().unwrap_or_else(|e| e.into_inner());
        while windows.len() <= n as usize {
            let k = windows.len() as u32;
            let raw = self.raw_window(k);
            let next = match windows.last() {
                None => raw,
                Some(prev) => raw.intersect(prev).unwrap_or_else(|| {
                    panic!("approximant at precision {k} ({raw}) is disjoint from its predecessor ({prev})")
                }),
            };
            debug_assert!(next.narrower_than(k), "window {k} too wide: {next}");
            windows.push(next);
        }
        windows[n as usize].clone()
    }

    fn raw_window(&self, n: u32) -> Grid {
        match &self.0.kind {
            Kind::Exact(q) => Grid::point_rounded(q, n),
            // Operands at n + 2 give width <= 2^-(n+1); rounding to the
            // 2^-(n+2) grid adds at most 2^-(n+1) more.
            Kind::Add(x, y) => x.grid(n + 2).add(&y.grid(n + 2)).rescale(n + 2),
            Kind::Sub(x, y) => x.grid(n + 2).sub(&y.grid(n + 2)).rescale(n + 2),
            Kind::Mul(x, y) => {
                // width(XY) <= |X| w(Y) + |Y| w(X), with |X|, |Y| bounded by window 0.
                let k = n + 1 + magnitude_bits(&x.grid(0), &y.grid(0));
                x.grid(k).mul(&y.grid(k)).rescale(n + 2)
            }
            Kind::Neg(x) => x.grid(n).neg(),
            Kind::Abs(x) => x.grid(n).abs(),
            // Width 2^-(n+1) plus outward rounding to 2^-(n+2) on each side.
            Kind::Func(f) => Grid::from_interval(&f(n + 1), n + 2),
        }
    }

    /// Resolves the sign of `self` at band `eps`: a certified strict side with
    /// a rational bound, or `Within` meaning `|self| <= eps`.
    ///
    /// Queries at most `ceil(log2(1/eps)) + 1` windows.
    pub fn resolve_sign(&self, eps: &Rat) -> SignResolution {
        assert!(eps.is_positive(), "resolution band must be positive");
        let last = eps.recip().ceil_log2();
        for n in 0..=last {
            let w = self.grid(n);
            if w.lo.is_positive() {
                return SignResolution::Positive(Rat::from_dyadic(w.lo, w.exp));
            }
            if w.hi.is_negative() {
                return SignResolution::Negative(Rat::from_dyadic(-w.hi, w.exp));
            }
            if Rat::from_dyadic(w.magnitude(), w.exp) <= *eps {
                return SignResolution::Within;
            }
        }
        // Window `last` straddles zero and has width <= eps.
        unreachable!("window at precision {last} neither resolved nor within the band")
    }
}

impl fmt::Debug for CReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            Kind::Exact(q) => write!(f, "CReal({q})"),
            _ => {
                let windows = self.0.windows.lock().unwrap_or_else(|e| e.into_inner());
                match windows.last().map(Grid::to_interval) {
                    Some(w) => write!(f, "CReal({w} @ {})", windows.len() - 1),
                    None => write!(f, "CReal(<unevaluated>)"),
                }
            }
        }
    }
}

impl From<Rat> for CReal {
    fn from(q: Rat) -> Self {
        CReal::embed(q)
    }
}

impl Add for CReal {
    type Output = CReal;
    fn add(self, rhs: CReal) -> CReal {
        CReal::from_kind(Kind::Add(self, rhs))
    }
}

impl Sub for CReal {
    type Output = CReal;
    fn sub(self, rhs: CReal) -> CReal {
        CReal::from_kind(Kind::Sub(self, rhs))
    }
}

impl Mul for CReal {
    type Output = CReal;
    fn mul(self, rhs: CReal) -> CReal {
        CReal::from_kind(Kind::Mul(self, rhs))
    }
}

impl Neg for CReal {
    type Output = CReal;
    fn neg(self) -> CReal {
        CReal::from_kind(Kind::Neg(self))
    }
}

/// Outcome of resolving a sign at a finite band.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignResolution {
    /// The value is `>= bound > 0`.
    Positive(Rat),
    /// The value is `<= -bound < 0`.
    Negative(Rat),
    /// The value lies within the band.
    Within,
}

/// Three-way comparison at a tolerance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Resolved {
    Less,
    Greater,
    Within,
}

/// Scalars usable as point coordinates: exact rationals or computable reals.
pub trait Scalar:
    Clone + fmt::Debug + Send + Sync + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn from_rat(q: Rat) -> Self;

    fn to_creal(&self) -> CReal;

    fn resolve_sign(&self, eps: &Rat) -> SignResolution;
}

impl Scalar for Rat {
    fn from_rat(q: Rat) -> Self {
        q
    }

    fn to_creal(&self) -> CReal {
        CReal::embed(self.clone())
    }

    /// Exact, but still reports `Within` for `|self| <= eps` so callers see
    /// the same band semantics for both scalar kinds.
    fn resolve_sign(&self, eps: &Rat) -> SignResolution {
        assert!(eps.is_positive(), "resolution band must be positive");
        if self.abs() <= *eps {
            SignResolution::Within
        } else if self.is_positive() {
            SignResolution::Positive(self.clone())
        } else {
            SignResolution::Negative(self.abs())
        }
    }
}

impl Scalar for CReal {
    fn from_rat(q: Rat) -> Self {
        CReal::embed(q)
    }

    fn to_creal(&self) -> CReal {
        self.clone()
    }

    fn resolve_sign(&self, eps: &Rat) -> SignResolution {
        CReal::resolve_sign(self, eps)
    }
}

/// Compares `x` and `y`: `Less`/`Greater` are exact, `Within` means
/// `|x - y| <= eps`. Total for `eps > 0`.
pub fn cmp_resolve<T: Scalar>(x: &T, y: &T, eps: &Rat) -> Resolved {
    match (x.clone() - y.clone()).resolve_sign(eps) {
        SignResolution::Positive(_) => Resolved::Greater,
        SignResolution::Negative(_) => Resolved::Less,
        SignResolution::Within => Resolved::Within,
    }
}
