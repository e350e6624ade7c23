//! Undirected directions in the plane.
//!
//! A direction is an equivalence class `(dx, dy) ~ (-dx, -dy)`, i.e. a point
//! of the half-turn circle `[0, pi)`. The canonical representative is the
//! primitive integer vector with `dy > 0`, or `dy == 0 && dx > 0`; equality
//! is therefore structural and ordering is decided by exact cross-product
//! signs. No angle is ever computed.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::point::Point2;
use super::GeomError;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Direction {
    dx: BigInt,
    dy: BigInt,
}

impl Direction {
    /// Canonicalizes an arbitrary rational displacement into a direction.
    pub fn new(dx: &Rational, dy: &Rational) -> Result<Direction, GeomError> {
        if dx.is_zero() && dy.is_zero() {
            return Err(GeomError::DegenerateDirection);
        }
        // Clear denominators, then reduce to a primitive vector.
        let nx = dx.numer() * dy.denom();
        let ny = dy.numer() * dx.denom();
        Ok(Direction::from_ints(nx, ny))
    }

    pub fn from_ints(dx: impl Into<BigInt>, dy: impl Into<BigInt>) -> Direction {
        let (mut dx, mut dy) = (dx.into(), dy.into());
        assert!(
            !(dx.is_zero() && dy.is_zero()),
            "zero vector is not a direction"
        );
        let g = dx.gcd(&dy);
        dx /= &g;
        dy /= &g;
        if dy.is_negative() || (dy.is_zero() && dx.is_negative()) {
            dx = -dx;
            dy = -dy;
        }
        Direction { dx, dy }
    }

    pub fn dx(&self) -> &BigInt {
        &self.dx
    }

    pub fn dy(&self) -> &BigInt {
        &self.dy
    }

    /// The direction of angle `0`: the minimum of the cyclic order.
    pub fn horizontal() -> Direction {
        Direction {
            dx: BigInt::from(1),
            dy: BigInt::from(0),
        }
    }

    pub fn is_horizontal(&self) -> bool {
        self.dy.is_zero()
    }

    /// Cross product of the canonical representatives.
    pub fn cross(&self, other: &Direction) -> BigInt {
        &self.dx * &other.dy - &self.dy * &other.dx
    }

    /// A direction strictly inside the counter-clockwise arc from `a` to `b`
    /// (the arc traversed from `a` with increasing angle mod pi until `b`).
    /// `a` and `b` must be distinct.
    pub fn between_ccw(a: &Direction, b: &Direction) -> Direction {
        assert_ne!(a, b, "arc endpoints must be distinct");
        // Lift b to the directed representative that is counter-clockwise
        // from a by less than a half turn, then bisect by vector sum.
        let (bx, by) = if a < b {
            (b.dx.clone(), b.dy.clone())
        } else {
            (-&b.dx, -&b.dy)
        };
        Direction::from_ints(&a.dx + bx, &a.dy + by)
    }
}

/// Total order on the half-turn circle starting at the horizontal direction,
/// increasing counter-clockwise. This is the cyclic order used everywhere.
impl Ord for Direction {
    fn cmp(&self, other: &Direction) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        if self.dy.is_zero() {
            return Ordering::Less;
        }
        if other.dy.is_zero() {
            return Ordering::Greater;
        }
        // Both strictly in the open upper half plane; the cross-product sign
        // is the sign of the angle difference.
        match self.cross(other).sign() {
            num_bigint::Sign::Plus => Ordering::Less,
            num_bigint::Sign::Minus => Ordering::Greater,
            num_bigint::Sign::NoSign => unreachable!("distinct canonical directions with zero cross"),
        }
    }
}

impl PartialOrd for Direction {
    fn partial_cmp(&self, other: &Direction) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.dx, self.dy)
    }
}

impl fmt::Debug for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dir({},{})", self.dx, self.dy)
    }
}

impl FromStr for Direction {
    type Err = GeomError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let p: Point2 = s.parse().map_err(|_| GeomError::DegenerateDirection)?;
        Direction::new(&p.x, &p.y)
    }
}

impl Serialize for Direction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Direction {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The undirected direction from `a` to `b`. Errors when `a == b`.
pub fn direction_between(a: &Point2, b: &Point2) -> Result<Direction, GeomError> {
    Direction::new(&(&b.x - &a.x), &(&b.y - &a.y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn dir(dx: i64, dy: i64) -> Direction {
        Direction::from_ints(dx, dy)
    }

    #[test]
    fn canonical_form() {
        assert_eq!(dir(2, 4), dir(1, 2));
        assert_eq!(dir(-1, -2), dir(1, 2));
        assert_eq!(dir(3, 0), dir(-5, 0));
        assert_eq!(dir(3, 0), Direction::horizontal());
        assert_eq!(dir(0, -7), dir(0, 1));
        assert_eq!(dir(-2, 2), dir(-1, 1));
        assert!(dir(-1, 1).dy() > &BigInt::from(0));
    }

    #[test]
    fn rational_components_canonicalize() {
        let d = Direction::new(&rat(-1, 2), &rat(1, 4)).unwrap();
        assert_eq!(d, dir(-2, 1));
        assert!(Direction::new(&rat(0, 1), &rat(0, 1)).is_err());
    }

    #[test]
    fn cyclic_order_from_horizontal() {
        // Angles: 0, 45, 63.4, 90, 116.6, 135 degrees.
        let seq = [
            dir(1, 0),
            dir(1, 1),
            dir(1, 2),
            dir(0, 1),
            dir(-1, 2),
            dir(-1, 1),
        ];
        for w in seq.windows(2) {
            assert!(w[0] < w[1], "{:?} should precede {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn direction_between_works_and_identifies_opposites() {
        let a = Point2::new(rat(1, 2), rat(0, 1));
        let c = Point2::new(rat(1, 1), rat(1, 1));
        assert_eq!(direction_between(&a, &c).unwrap(), dir(1, 2));
        assert_eq!(direction_between(&c, &a).unwrap(), dir(1, 2));
        assert!(direction_between(&a, &a).is_err());
    }

    #[test]
    fn between_ccw_lands_strictly_inside() {
        // Non-wrapping arc.
        let w = Direction::between_ccw(&dir(1, 0), &dir(0, 1));
        assert_eq!(w, dir(1, 1));
        // Wrapping arc from 135 degrees down through the seam to 0 degrees.
        let w2 = Direction::between_ccw(&dir(-1, 1), &dir(1, 0));
        assert_eq!(w2, dir(-2, 1));
        // Wrap that lands exactly on the seam direction.
        let w3 = Direction::between_ccw(&dir(-1, 2), &dir(1, 2));
        assert_eq!(w3, dir(1, 0));
    }

    #[test]
    fn display_round_trips() {
        for d in [dir(1, 0), dir(-3, 7), dir(0, 1)] {
            assert_eq!(d.to_string().parse::<Direction>().unwrap(), d);
        }
    }
}
