//! Points, segments, and the two intersection predicates the rest of the
//! crate is built on. Segments are closed sets: touching at a single
//! endpoint counts as intersecting.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::GeomError;
use crate::rational::{ParseRationalError, Rational};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Serialize for Point2 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Point2 {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Point2 {
        Point2 { x, y }
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Grammar: `x,y` where each coordinate is `p` or `p/q`.
impl FromStr for Point2 {
    type Err = ParsePointError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (xs, ys) = s
            .split_once(',')
            .ok_or_else(|| ParsePointError::Malformed(s.to_string()))?;
        if ys.contains(',') {
            return Err(ParsePointError::Malformed(s.to_string()));
        }
        Ok(Point2::new(xs.parse()?, ys.parse()?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParsePointError {
    #[error("invalid point `{0}`: expected `x,y`")]
    Malformed(String),
    #[error(transparent)]
    Coordinate(#[from] ParseRationalError),
}

/// A closed segment with distinct endpoints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    p: Point2,
    q: Point2,
}

impl Segment {
    pub fn new(p: Point2, q: Point2) -> Result<Segment, GeomError> {
        if p == q {
            return Err(GeomError::DegenerateSegment);
        }
        Ok(Segment { p, q })
    }

    pub fn p(&self) -> &Point2 {
        &self.p
    }

    pub fn q(&self) -> &Point2 {
        &self.q
    }

    /// Midpoint; always strictly inside the segment.
    pub fn midpoint(&self) -> Point2 {
        let two = Rational::from_int(2);
        Point2::new(
            (&self.p.x + &self.q.x) / two.clone(),
            (&self.p.y + &self.q.y) / two,
        )
    }

    /// Whether the closed segment contains `r`.
    pub fn contains(&self, r: &Point2) -> bool {
        if orient(&self.p, &self.q, r) != 0 {
            return false;
        }
        within(&self.p.x, &r.x, &self.q.x) && within(&self.p.y, &r.y, &self.q.y)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.p, self.q)
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}-{:?}]", self.p, self.q)
    }
}

fn within(a: &Rational, m: &Rational, b: &Rational) -> bool {
    (a <= m && m <= b) || (b <= m && m <= a)
}

/// Sign of the signed area of triangle `(a, b, c)`:
/// `+1` if counter-clockwise, `-1` if clockwise, `0` if collinear.
pub fn orient(a: &Point2, b: &Point2, c: &Point2) -> i8 {
    let lhs = (&b.x - &a.x) * (&c.y - &a.y);
    let rhs = (&b.y - &a.y) * (&c.x - &a.x);
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => 1,
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
    }
}

/// Closed-set intersection test: shared endpoints and endpoint-on-interior
/// touches count.
pub fn segments_intersect(s1: &Segment, s2: &Segment) -> bool {
    let (a, b, c, d) = (s1.p(), s1.q(), s2.p(), s2.q());
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);

    // Proper crossing: endpoints strictly on opposite sides both ways.
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    // Every remaining intersection involves an endpoint on the other segment.
    (o1 == 0 && s1.contains(c))
        || (o2 == 0 && s1.contains(d))
        || (o3 == 0 && s2.contains(a))
        || (o4 == 0 && s2.contains(b))
}

/// Result of intersecting two closed segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentIntersection {
    Disjoint,
    /// The segments meet in exactly one point.
    Point(Point2),
    /// The segments are collinear and share more than one point.
    Overlap,
}

/// Exact intersection of two closed segments.
pub fn segment_intersection_point(s1: &Segment, s2: &Segment) -> SegmentIntersection {
    if !segments_intersect(s1, s2) {
        return SegmentIntersection::Disjoint;
    }
    let (a, b, c, d) = (s1.p(), s1.q(), s2.p(), s2.q());
    let collinear = orient(a, b, c) == 0 && orient(a, b, d) == 0;
    if collinear {
        // Both segments lie on one line; the intersection is a point only
        // when they touch end to end.
        let mut shared: Vec<&Point2> = Vec::new();
        for e in [c, d] {
            if s1.contains(e) && !shared.contains(&e) {
                shared.push(e);
            }
        }
        for e in [a, b] {
            if s2.contains(e) && !shared.contains(&e) {
                shared.push(e);
            }
        }
        return match shared.len() {
            1 => SegmentIntersection::Point(shared[0].clone()),
            _ => SegmentIntersection::Overlap,
        };
    }
    // Proper (non-parallel) case: solve a + t(b-a) = c + u(d-c) for t.
    let r = (&b.x - &a.x, &b.y - &a.y);
    let s = (&d.x - &c.x, &d.y - &c.y);
    let denom = &r.0 * &s.1 - &r.1 * &s.0;
    debug_assert!(!denom.is_zero());
    let qp = (&c.x - &a.x, &c.y - &a.y);
    let t = (&qp.0 * &s.1 - &qp.1 * &s.0) / denom;
    let x = &a.x + &(&r.0 * &t);
    let y = &a.y + &(&r.1 * &t);
    SegmentIntersection::Point(Point2::new(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn pt(x: (i64, i64), y: (i64, i64)) -> Point2 {
        Point2::new(rat(x.0, x.1), rat(y.0, y.1))
    }

    fn seg(px: (i64, i64), py: (i64, i64), qx: (i64, i64), qy: (i64, i64)) -> Segment {
        Segment::new(pt(px, py), pt(qx, qy)).unwrap()
    }

    /// Independent oracle: intersect the two supporting lines by solving the
    /// 2x2 rational linear system directly, then check membership in both
    /// closed segments coordinate-wise.
    fn oracle_point_intersection(s1: &Segment, s2: &Segment) -> Option<Point2> {
        // Line through (p, q): (qy - py) x - (qx - px) y = (qy - py) px - (qx - px) py
        let coeffs = |s: &Segment| {
            let a = &s.q().y - &s.p().y;
            let b = -(&s.q().x - &s.p().x);
            let c = &a * &s.p().x + &b * &s.p().y;
            (a, b, c)
        };
        let (a1, b1, c1) = coeffs(s1);
        let (a2, b2, c2) = coeffs(s2);
        let det = &a1 * &b2 - &a2 * &b1;
        if det.is_zero() {
            return None;
        }
        let x = (&c1 * &b2 - &c2 * &b1) / det.clone();
        let y = (&a1 * &c2 - &a2 * &c1) / det;
        let p = Point2::new(x, y);
        (s1.contains(&p) && s2.contains(&p)).then_some(p)
    }

    #[test]
    fn orient_basic() {
        let a = pt((0, 1), (0, 1));
        let b = pt((1, 1), (0, 1));
        let c = pt((0, 1), (1, 1));
        assert_eq!(orient(&a, &b, &c), 1);
        assert_eq!(orient(&a, &c, &b), -1);
        assert_eq!(orient(&a, &b, &pt((2, 1), (0, 1))), 0);
    }

    #[test]
    fn orient_never_drifts_on_tiny_rationals() {
        // A needle case that double arithmetic gets wrong.
        let a = pt((0, 1), (0, 1));
        let b = pt((1000000000, 1), (1, 1));
        let c = pt((2000000000, 1), (2, 1));
        assert_eq!(orient(&a, &b, &c), 0);
        let c_up = pt((2000000000, 1), (2000000001, 1000000000));
        assert_eq!(orient(&a, &b, &c_up), 1);
    }

    #[test]
    fn degenerate_segment_rejected() {
        assert_eq!(
            Segment::new(pt((1, 2), (1, 2)), pt((1, 2), (1, 2))).unwrap_err(),
            GeomError::DegenerateSegment
        );
    }

    #[test]
    fn crossing_segments_meet_at_interior_point() {
        // Meets at (1/5, 3/5); frozen from the 2x2 linear-solve oracle below.
        let s1 = seg((1, 2), (0, 1), (0, 1), (1, 1));
        let s2 = seg((0, 1), (1, 2), (1, 1), (1, 1));
        assert!(segments_intersect(&s1, &s2));
        let expected = pt((1, 5), (3, 5));
        assert_eq!(oracle_point_intersection(&s1, &s2), Some(expected.clone()));
        assert_eq!(
            segment_intersection_point(&s1, &s2),
            SegmentIntersection::Point(expected)
        );
    }

    #[test]
    fn endpoint_touch_counts_as_intersection() {
        let s1 = seg((0, 1), (0, 1), (1, 1), (0, 1));
        let s2 = seg((1, 1), (0, 1), (1, 1), (1, 1));
        assert!(segments_intersect(&s1, &s2));
        assert_eq!(
            segment_intersection_point(&s1, &s2),
            SegmentIntersection::Point(pt((1, 1), (0, 1)))
        );
        // Touch of an endpoint against an interior point likewise.
        let s3 = seg((1, 2), (0, 1), (1, 2), (1, 1));
        assert!(segments_intersect(&s1, &s3));
        assert_eq!(
            segment_intersection_point(&s1, &s3),
            SegmentIntersection::Point(pt((1, 2), (0, 1)))
        );
    }

    #[test]
    fn collinear_cases() {
        let base = seg((0, 1), (0, 1), (2, 1), (0, 1));
        // Overlapping collinear segments.
        let over = seg((1, 1), (0, 1), (3, 1), (0, 1));
        assert!(segments_intersect(&base, &over));
        assert_eq!(
            segment_intersection_point(&base, &over),
            SegmentIntersection::Overlap
        );
        // Collinear, touching end to end: a single shared point.
        let touch = seg((2, 1), (0, 1), (3, 1), (0, 1));
        assert_eq!(
            segment_intersection_point(&base, &touch),
            SegmentIntersection::Point(pt((2, 1), (0, 1)))
        );
        // Collinear, disjoint.
        let gap = seg((5, 2), (0, 1), (3, 1), (0, 1));
        assert!(!segments_intersect(&base, &gap));
        assert_eq!(
            segment_intersection_point(&base, &gap),
            SegmentIntersection::Disjoint
        );
        // Containment is an overlap.
        let inner = seg((1, 2), (0, 1), (1, 1), (0, 1));
        assert_eq!(
            segment_intersection_point(&base, &inner),
            SegmentIntersection::Overlap
        );
    }

    #[test]
    fn parallel_disjoint_segments() {
        let s1 = seg((0, 1), (0, 1), (1, 1), (0, 1));
        let s2 = seg((0, 1), (1, 1), (1, 1), (1, 1));
        assert!(!segments_intersect(&s1, &s2));
        assert_eq!(
            segment_intersection_point(&s1, &s2),
            SegmentIntersection::Disjoint
        );
    }

    #[test]
    fn point_grammar() {
        assert_eq!("1/2,3/4".parse::<Point2>().unwrap(), pt((1, 2), (3, 4)));
        assert_eq!("-1,0".parse::<Point2>().unwrap(), pt((-1, 1), (0, 1)));
        assert!("1;2".parse::<Point2>().is_err());
        assert!("1,2,3".parse::<Point2>().is_err());
        assert!("0.5,1".parse::<Point2>().is_err());
        let p = pt((1, 2), (3, 4));
        assert_eq!(p.to_string().parse::<Point2>().unwrap(), p);
    }
}
