//! Arbitrary-precision rational numbers with the input grammar used
//! throughout the crate: `p` or `p/q` with integer `p`, positive integer `q`.
//!
//! Values live inline as reduced i128 fractions while they fit and spill into
//! a [`num_rational::BigRational`] only beyond that, which keeps the hot
//! geometric predicates allocation-free. The representation is canonical —
//! a value is boxed exactly when it does not fit inline — so derived equality
//! and hashing stay structural. The wrapper also pins the text grammar:
//! decimals are rejected on parse so no float ever sneaks into an exact path.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced, denominator positive, neither component `i128::MIN`.
    Small(i128, i128),
    /// Reduced, denominator positive; does not fit `Small`.
    Big(Box<BigRational>),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

/// Shorthand constructor used pervasively in tests and fixtures.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    /// Builds `num/den`. Panics if `den == 0`; parsed input can never reach
    /// that because the grammar requires a positive denominator.
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        Rational::from_i128(num as i128, den as i128)
    }

    pub fn from_int(n: i64) -> Rational {
        Rational(Repr::Small(n as i128, 1))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Rational {
        assert!(!num_traits::Zero::is_zero(&den), "zero denominator");
        if let (Ok(n), Ok(d)) = (i128::try_from(&num), i128::try_from(&den)) {
            if n != i128::MIN && d != i128::MIN {
                return Rational::from_i128(n, d);
            }
        }
        Rational::from_bigrat(BigRational::new(num, den))
    }

    pub fn zero() -> Rational {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Rational {
        Rational(Repr::Small(1, 1))
    }

    fn from_i128(n: i128, d: i128) -> Rational {
        debug_assert!(d != 0);
        if n == i128::MIN || d == i128::MIN {
            return Rational::from_bigrat(BigRational::new(BigInt::from(n), BigInt::from(d)));
        }
        let negative = (n < 0) != (d < 0);
        let (un, ud) = (n.unsigned_abs(), d.unsigned_abs());
        let g = gcd_u128(un, ud);
        let (un, ud) = if un == 0 { (0, 1) } else { (un / g, ud / g) };
        let n = if negative { -(un as i128) } else { un as i128 };
        Rational(Repr::Small(n, ud as i128))
    }

    fn from_bigrat(r: BigRational) -> Rational {
        match (i128::try_from(r.numer()), i128::try_from(r.denom())) {
            (Ok(n), Ok(d)) if n != i128::MIN => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(r))),
        }
    }

    fn to_bigrat(&self) -> BigRational {
        match &self.0 {
            // Already in lowest terms with a positive denominator.
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn signum(&self) -> i8 {
        match &self.0 {
            Repr::Small(n, _) => match n.cmp(&0) {
                Ordering::Less => -1,
                Ordering::Equal => 0,
                Ordering::Greater => 1,
            },
            // Big values are never zero: zero fits inline.
            Repr::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(n.abs(), *d)),
            Repr::Big(b) => Rational(Repr::Big(Box::new(b.abs()))),
        }
    }

    pub fn recip(&self) -> Rational {
        assert!(!self.is_zero(), "reciprocal of zero");
        match &self.0 {
            Repr::Small(n, d) => Rational::from_i128(*d, *n),
            Repr::Big(b) => Rational::from_bigrat(b.recip()),
        }
    }

    /// Lossy conversion for display layers (SVG coordinates, confidence
    /// intervals). Never used in exact logic.
    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(b) => approx_bigint(b.numer()) / approx_bigint(b.denom()),
        }
    }
}

fn approx_bigint(n: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    n.to_f64().unwrap_or(f64::NAN)
}

impl Default for Rational {
    fn default() -> Rational {
        Rational::zero()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parse error for the rational grammar.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty rational")]
    Empty,
    #[error("decimal notation is not accepted; write the exact fraction (e.g. 1/2 instead of 0.5)")]
    DecimalRejected,
    #[error("invalid rational `{0}`: expected `p` or `p/q` with positive q")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() {
            return Err(ParseRationalError::Empty);
        }
        if t.contains('.') {
            return Err(ParseRationalError::DecimalRejected);
        }
        let malformed = || ParseRationalError::Malformed(s.to_string());
        match t.split_once('/') {
            None => {
                let num: BigInt = t.parse().map_err(|_| malformed())?;
                Ok(Rational::from_big(num, BigInt::from(1)))
            }
            Some((p, q)) => {
                let num: BigInt = p.trim().parse().map_err(|_| malformed())?;
                let qt = q.trim();
                // The grammar says q is a positive integer: no sign at all.
                if qt.starts_with('+') || qt.starts_with('-') {
                    return Err(malformed());
                }
                let den: BigInt = qt.parse().map_err(|_| malformed())?;
                if num_traits::Zero::is_zero(&den) {
                    return Err(ParseRationalError::ZeroDenominator(s.to_string()));
                }
                Ok(Rational::from_big(num, den))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(DeError::custom)
    }
}

fn add_impl(a: &Rational, b: &Rational) -> Rational {
    if let (Repr::Small(n1, d1), Repr::Small(n2, d2)) = (&a.0, &b.0) {
        let exact = || -> Option<Rational> {
            let x = n1.checked_mul(*d2)?;
            let y = n2.checked_mul(*d1)?;
            Some(Rational::from_i128(
                x.checked_add(y)?,
                d1.checked_mul(*d2)?,
            ))
        };
        if let Some(r) = exact() {
            return r;
        }
    }
    Rational::from_bigrat(a.to_bigrat() + b.to_bigrat())
}

fn sub_impl(a: &Rational, b: &Rational) -> Rational {
    if let (Repr::Small(n1, d1), Repr::Small(n2, d2)) = (&a.0, &b.0) {
        let exact = || -> Option<Rational> {
            let x = n1.checked_mul(*d2)?;
            let y = n2.checked_mul(*d1)?;
            Some(Rational::from_i128(
                x.checked_sub(y)?,
                d1.checked_mul(*d2)?,
            ))
        };
        if let Some(r) = exact() {
            return r;
        }
    }
    Rational::from_bigrat(a.to_bigrat() - b.to_bigrat())
}

fn mul_impl(a: &Rational, b: &Rational) -> Rational {
    if let (Repr::Small(n1, d1), Repr::Small(n2, d2)) = (&a.0, &b.0) {
        let exact = || -> Option<Rational> {
            Some(Rational::from_i128(
                n1.checked_mul(*n2)?,
                d1.checked_mul(*d2)?,
            ))
        };
        if let Some(r) = exact() {
            return r;
        }
    }
    Rational::from_bigrat(a.to_bigrat() * b.to_bigrat())
}

fn div_impl(a: &Rational, b: &Rational) -> Rational {
    assert!(!b.is_zero(), "division by zero");
    if let (Repr::Small(n1, d1), Repr::Small(n2, d2)) = (&a.0, &b.0) {
        let exact = || -> Option<Rational> {
            Some(Rational::from_i128(
                n1.checked_mul(*d2)?,
                d1.checked_mul(*n2)?,
            ))
        };
        if let Some(r) = exact() {
            return r;
        }
    }
    Rational::from_bigrat(a.to_bigrat() / b.to_bigrat())
}

macro_rules! binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $impl_fn(&self, &rhs)
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $impl_fn(self, rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $impl_fn(&self, rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $impl_fn(self, &rhs)
            }
        }
    };
}

binop!(Add, add, add_impl);
binop!(Sub, sub, sub_impl);
binop!(Mul, mul, mul_impl);
binop!(Div, div, div_impl);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(-n, *d)),
            Repr::Big(b) => Rational(Repr::Big(Box::new(-(**b).clone()))),
        }
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = add_impl(self, rhs);
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = sub_impl(self, rhs);
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Rational) -> Ordering {
        if let (Repr::Small(n1, d1), Repr::Small(n2, d2)) = (&self.0, &other.0) {
            if let (Some(x), Some(y)) = (n1.checked_mul(*d2), n2.checked_mul(*d1)) {
                return x.cmp(&y);
            }
        }
        self.to_bigrat().cmp(&other.to_bigrat())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Rational {
        Rational::from_int(n)
    }
}
