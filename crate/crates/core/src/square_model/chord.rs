//! Chords: the lines of the square model.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{in_closed_square, SquareError};
use crate::exact_geom::{segments_intersect, Direction, ParsePointError, Point2, Segment};
use crate::rational::Rational;

/// The four sides of the square.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Bottom,
    Right,
    Top,
    Left,
}

impl Side {
    pub fn all() -> [Side; 4] {
        [Side::Bottom, Side::Right, Side::Top, Side::Left]
    }

    pub fn opposite(self) -> Side {
        match self {
            Side::Bottom => Side::Top,
            Side::Top => Side::Bottom,
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    /// Whether `p` lies on this (closed) side. Corners lie on two sides.
    pub fn contains(self, p: &Point2) -> bool {
        if !in_closed_square(p) {
            return false;
        }
        match self {
            Side::Bottom => p.y.is_zero(),
            Side::Top => p.y == Rational::one(),
            Side::Left => p.x.is_zero(),
            Side::Right => p.x == Rational::one(),
        }
    }

    /// The side's endpoints, counter-clockwise around the square.
    pub fn endpoints(self) -> (Point2, Point2) {
        match self {
            Side::Bottom => (super::corner_a(), super::corner_b()),
            Side::Right => (super::corner_b(), super::corner_c()),
            Side::Top => (super::corner_c(), super::corner_d()),
            Side::Left => (super::corner_d(), super::corner_a()),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Side::Bottom => "bottom",
            Side::Right => "right",
            Side::Top => "top",
            Side::Left => "left",
        };
        f.write_str(name)
    }
}

/// The sides containing `p`: empty off the boundary, one for a side interior
/// point, two for a corner.
pub fn sides_of(p: &Point2) -> Vec<Side> {
    Side::all().into_iter().filter(|s| s.contains(p)).collect()
}

/// A line of the model: a maximal-by-construction segment whose endpoints
/// admit an assignment to two opposite sides.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Chord {
    q1: Point2,
    q2: Point2,
    seg: Segment,
}

impl Chord {
    pub fn q1(&self) -> &Point2 {
        &self.q1
    }

    pub fn q2(&self) -> &Point2 {
        &self.q2
    }

    pub fn segment(&self) -> &Segment {
        &self.seg
    }

    /// Whether the closed chord contains `p`.
    pub fn contains(&self, p: &Point2) -> bool {
        self.seg.contains(p)
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.q1, self.q2)
    }
}

impl fmt::Debug for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chord({}:{})", self.q1, self.q2)
    }
}

/// Grammar: `x1,y1:x2,y2`.
impl FromStr for Chord {
    type Err = ParseChordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once(':')
            .ok_or_else(|| ParseChordError::Malformed(s.to_string()))?;
        if b.contains(':') {
            return Err(ParseChordError::Malformed(s.to_string()));
        }
        Ok(chord_validate(a.parse()?, b.parse()?)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseChordError {
    #[error("invalid chord `{0}`: expected `x1,y1:x2,y2`")]
    Malformed(String),
    #[error(transparent)]
    Endpoint(#[from] ParsePointError),
    #[error(transparent)]
    Invalid(#[from] SquareError),
}

impl Serialize for Chord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Chord {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Validates the chord invariant: distinct boundary endpoints with at least
/// one opposite-side assignment (corner endpoints may use either incident
/// side).
pub fn chord_validate(q1: Point2, q2: Point2) -> Result<Chord, SquareError> {
    if q1 == q2 {
        return Err(SquareError::DegenerateChord(q1));
    }
    let s1 = sides_of(&q1);
    if s1.is_empty() {
        return Err(SquareError::NotOnBoundary(q1));
    }
    let s2 = sides_of(&q2);
    if s2.is_empty() {
        return Err(SquareError::NotOnBoundary(q2));
    }
    let opposite_assignable = s1
        .iter()
        .any(|a| s2.iter().any(|b| *b == a.opposite()));
    if !opposite_assignable {
        return Err(SquareError::AdjacentSidesOnly(q1, q2));
    }
    let seg = Segment::new(q1.clone(), q2.clone()).expect("endpoints are distinct");
    Ok(Chord { q1, q2, seg })
}

/// Two lines are parallel when they do not intersect; segments are closed, so
/// touching endpoints intersect, and a line is never parallel to itself.
pub fn is_parallel(l1: &Chord, l2: &Chord) -> bool {
    !segments_intersect(l1.segment(), l2.segment())
}

/// The line through `p` with direction `d`, clipped to the square: the
/// maximal such segment, returned iff it is a valid chord. `None` when the
/// clip is a single point or joins adjacent sides only.
pub fn chord_through(p: &Point2, d: &Direction) -> Option<Chord> {
    debug_assert!(in_closed_square(p));
    // Clip { p + t·d : t } to 0 ≤ x(t) ≤ 1, 0 ≤ y(t) ≤ 1. Both coordinate
    // constraints are linear in t and each is either vacuous (zero component)
    // or an interval; t = 0 is always feasible because p is in the square.
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    let mut apply = |value: &Rational, slope: &BigInt| {
        if slope.is_zero() {
            return;
        }
        let rate = Rational::from_big(slope.clone(), BigInt::from(1));
        let to_zero = (Rational::zero() - value.clone()) / rate.clone();
        let to_one = (Rational::one() - value.clone()) / rate;
        let (a, b) = if slope.is_positive() {
            (to_zero, to_one)
        } else {
            (to_one, to_zero)
        };
        lo = Some(match lo.take() {
            Some(cur) => cur.max(a),
            None => a,
        });
        hi = Some(match hi.take() {
            Some(cur) => cur.min(b),
            None => b,
        });
    };
    apply(&p.x, d.dx());
    apply(&p.y, d.dy());
    let (lo, hi) = (lo.expect("direction is nonzero"), hi.expect("direction is nonzero"));
    if lo == hi {
        return None;
    }
    debug_assert!(lo < hi, "t = 0 is always in the clip interval");
    let at = |t: &Rational| {
        Point2::new(
            &p.x + &(t.clone() * Rational::from_big(d.dx().clone(), BigInt::from(1))),
            &p.y + &(t.clone() * Rational::from_big(d.dy().clone(), BigInt::from(1))),
        )
    };
    chord_validate(at(&lo), at(&hi)).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn pt(x: Rational, y: Rational) -> Point2 {
        Point2::new(x, y)
    }

    fn chord(s: &str) -> Chord {
        s.parse().unwrap()
    }

    #[test]
    fn corner_to_opposite_side_is_valid() {
        // C is on both Right and Top; Right pairs with Left.
        let c = chord_validate(pt(rat(1, 1), rat(1, 1)), pt(rat(0, 1), rat(1, 2))).unwrap();
        assert_eq!(c.to_string(), "1,1:0,1/2");
    }

    #[test]
    fn full_side_is_valid() {
        // A is on Left (and Bottom), B is on Right (and Bottom).
        assert!(chord_validate(pt(rat(0, 1), rat(0, 1)), pt(rat(1, 1), rat(0, 1))).is_ok());
    }

    #[test]
    fn adjacent_sides_rejected() {
        let err = chord_validate(pt(rat(1, 2), rat(0, 1)), pt(rat(1, 1), rat(1, 2))).unwrap_err();
        assert!(matches!(err, SquareError::AdjacentSidesOnly(_, _)));
    }

    #[test]
    fn interior_endpoint_rejected() {
        let err = chord_validate(pt(rat(1, 2), rat(1, 2)), pt(rat(1, 1), rat(1, 2))).unwrap_err();
        assert!(matches!(err, SquareError::NotOnBoundary(_)));
    }

    #[test]
    fn degenerate_chord_rejected() {
        let p = pt(rat(1, 2), rat(0, 1));
        assert!(matches!(
            chord_validate(p.clone(), p).unwrap_err(),
            SquareError::DegenerateChord(_)
        ));
    }

    #[test]
    fn ab_is_parallel_to_ce() {
        let ab = chord("0,0:1,0");
        let ce = chord("1,1:0,1/2");
        assert!(is_parallel(&ab, &ce));
        assert!(is_parallel(&ce, &ab));
    }

    #[test]
    fn cd_meets_ce_at_their_shared_corner() {
        let cd = chord("1,1:0,1");
        let ce = chord("1,1:0,1/2");
        assert!(!is_parallel(&cd, &ce));
    }

    #[test]
    fn nothing_is_parallel_to_itself() {
        let ce = chord("1,1:0,1/2");
        assert!(!is_parallel(&ce, &ce));
    }

    #[test]
    fn horizontal_chord_through_a_bottom_point_is_the_whole_side() {
        let m = pt(rat(1, 2), rat(0, 1));
        let c = chord_through(&m, &Direction::from_ints(1, 0)).unwrap();
        assert_eq!(c.to_string(), "0,0:1,0");
    }

    #[test]
    fn clip_exiting_an_adjacent_side_is_not_a_chord() {
        let m = pt(rat(1, 2), rat(0, 1));
        assert!(chord_through(&m, &Direction::from_ints(1, 1)).is_none());
    }

    #[test]
    fn clip_exiting_at_an_opposite_assignable_corner_is_a_chord() {
        let m = pt(rat(1, 2), rat(0, 1));
        let c = chord_through(&m, &Direction::from_ints(1, 2)).unwrap();
        assert_eq!(c.to_string(), "1/2,0:1,1");
    }

    #[test]
    fn vertical_chord_through_the_center() {
        let center = pt(rat(1, 2), rat(1, 2));
        let c = chord_through(&center, &Direction::from_ints(0, 1)).unwrap();
        assert_eq!(c.to_string(), "1/2,0:1/2,1");
    }

    #[test]
    fn tangent_direction_at_a_corner_degenerates() {
        let a = pt(rat(0, 1), rat(0, 1));
        assert!(chord_through(&a, &Direction::from_ints(-1, 1)).is_none());
    }

    #[test]
    fn chord_through_contains_the_pivot() {
        let n = pt(rat(1, 2), rat(1, 4));
        let c = chord_through(&n, &Direction::from_ints(1, 0)).unwrap();
        assert!(c.contains(&n));
        assert_eq!(c.to_string(), "0,1/4:1,1/4");
    }

    #[test]
    fn chord_grammar_round_trips() {
        let ce = chord("1,1:0,1/2");
        assert_eq!(ce.to_string().parse::<Chord>().unwrap(), ce);
        assert!("1,1:0,0.5".parse::<Chord>().is_err());
        assert!("1,1".parse::<Chord>().is_err());
        assert!("1/2,1/2:0,1".parse::<Chord>().is_err());
    }
}
