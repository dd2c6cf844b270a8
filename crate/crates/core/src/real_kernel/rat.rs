use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign as BigSign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact rational number in canonical form (lowest terms, positive denominator).
///
/// Canonical form means the derived structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRatError {
    #[error("empty scalar")]
    Empty,
    #[error("malformed scalar `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`; panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Rat(BigRational::new(num, den)))
        }
    }

    /// `2^(-n)`.
    pub fn pow2_neg(n: u32) -> Self {
        Rat(BigRational::new(BigInt::one(), BigInt::one() << n as usize))
    }

    /// `m / 2^exp`.
    pub fn from_dyadic(m: BigInt, exp: u32) -> Self {
        if m.is_zero() {
            return Rat::zero();
        }
        let shift = (m.trailing_zeros().unwrap_or(0) as u32).min(exp);
        Rat(BigRational::new_raw(m >> shift, BigInt::one() << (exp - shift)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn signum(&self) -> i8 {
        match self.0.numer().sign() {
            BigSign::Minus => -1,
            BigSign::NoSign => 0,
            BigSign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn floor(&self) -> BigInt {
        self.0.numer().div_floor(self.0.denom())
    }

    pub fn ceil(&self) -> BigInt {
        self.0.numer().div_ceil(self.0.denom())
    }

    pub fn recip(&self) -> Self {
        Rat(self.0.recip())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn min(self, other: Self) -> Self {
        std::cmp::min(self, other)
    }

    pub fn max(self, other: Self) -> Self {
        std::cmp::max(self, other)
    }

    /// True when the denominator is `2^k` with `k <= bits`.
    fn on_dyadic_grid(&self, bits: u32) -> bool {
        let den = self.0.denom();
        let twos = den.trailing_zeros().unwrap_or(0);
        den.bits() == twos + 1 && twos <= u64::from(bits)
    }

    /// Largest multiple of `2^(-bits)` that is `<= self`.
    pub fn floor_dyadic(&self, bits: u32) -> Self {
        if self.on_dyadic_grid(bits) {
            return self.clone();
        }
        let scale = BigInt::one() << bits as usize;
        let scaled = &self.0 * BigRational::from_integer(scale.clone());
        Rat(BigRational::new(scaled.floor().to_integer(), scale))
    }

    /// Smallest multiple of `2^(-bits)` that is `>= self`.
    pub fn ceil_dyadic(&self, bits: u32) -> Self {
        if self.on_dyadic_grid(bits) {
            return self.clone();
        }
        let scale = BigInt::one() << bits as usize;
        let scaled = &self.0 * BigRational::from_integer(scale.clone());
        Rat(BigRational::new(scaled.ceil().to_integer(), scale))
    }

    /// Smallest `k` with `2^k >= self`, for `self >= 1`; zero otherwise.
    pub fn ceil_log2(&self) -> u32 {
        if self.0 <= BigRational::one() {
            return 0;
        }
        let c = self.ceil();
        let bits = c.bits() as u32;
        // `c` is a power of two exactly when c - 1 has fewer bits.
        if (&c - BigInt::one()).bits() as u32 == bits - 1 {
            bits - 1
        } else {
            bits
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_integer(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

/// Accepts `p/q` and decimal literals (`-2.5`, `.75`, `3e-2`). Decimals are
/// converted exactly. Both ASCII `-` and U+2212 are read as a minus sign.
impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let malformed = || ParseRatError::Malformed(text.to_owned());
        if text.is_empty() {
            return Err(ParseRatError::Empty);
        }
        let (negative, body) = if let Some(rest) = text.strip_prefix('-') {
            (true, rest)
        } else if let Some(rest) = text.strip_prefix('\u{2212}') {
            (true, rest)
        } else if let Some(rest) = text.strip_prefix('+') {
            (false, rest)
        } else {
            (false, text)
        };

        let value = if let Some((num, den)) = body.split_once('/') {
            let num = parse_digits(num).ok_or_else(malformed)?;
            let den = parse_digits(den).ok_or_else(malformed)?;
            if den.is_zero() {
                return Err(ParseRatError::ZeroDenominator(text.to_owned()));
            }
            BigRational::new(num, den)
        } else {
            let (mantissa, exponent) = match body.find(['e', 'E']) {
                Some(pos) => {
                    let exp = &body[pos + 1..];
                    let (exp_neg, digits) = match exp.strip_prefix('-') {
                        Some(d) => (true, d),
                        None => (false, exp.strip_prefix('+').unwrap_or(exp)),
                    };
                    let magnitude: i64 = parse_digits(digits)
                        .and_then(|d| d.to_i64())
                        .filter(|m| *m <= 100_000)
                        .ok_or_else(malformed)?;
                    (&body[..pos], if exp_neg { -magnitude } else { magnitude })
                }
                None => (body, 0),
            };
            let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
            if int_part.is_empty() && frac_part.is_empty() {
                return Err(malformed());
            }
            let digits = format!("{int_part}{frac_part}");
            let mantissa = parse_digits(&digits).ok_or_else(malformed)?;
            let scale = exponent - frac_part.len() as i64;
            let ten = BigInt::from(10u32);
            if scale >= 0 {
                BigRational::from_integer(mantissa * num_traits::pow(ten, scale as usize))
            } else {
                BigRational::new(mantissa, num_traits::pow(ten, (-scale) as usize))
            }
        };
        Ok(Rat(if negative { -value } else { value }))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl PartialEq<i64> for Rat {
    fn eq(&self, other: &i64) -> bool {
        self.0.denom().is_one() && *self.0.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer(BigInt::from(*other))))
    }
}
