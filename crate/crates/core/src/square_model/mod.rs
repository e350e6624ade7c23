//! A Smarandache geometry on the closed unit square.
//!
//! Points are the points of the closed square with corners A=(0,0), B=(1,0),
//! C=(1,1), D=(0,1). A *line* is a chord: a segment whose endpoints lie on two
//! opposite sides (corner endpoints may count for either incident side). Two
//! lines are parallel when the closed segments are disjoint.
//!
//! Under these rules the parallel postulate holds at some points, fails with
//! an excess of parallels at others, and fails with none at others still; this
//! module classifies every point exactly and measures the zones where each
//! behaviour holds.

mod chord;
mod classify;
mod explore;
mod mc;
mod zones;

pub use chord::{chord_through, chord_validate, is_parallel, Chord, ParseChordError, Side};
pub use classify::{
    blocked_directions, classify, classify_kind, valid_directions, witnesses, Classification,
    WitnessBundle,
};
pub use explore::{
    explore_finite, random_chord, random_instance, random_point, ExploreHit, ExploreReport,
};
pub use mc::{zone_measures_mc, KindInterval, ZoneMeasuresMc};
pub use zones::{
    degree_of_negation, exact_zone_map, BoundaryLabel, BoundaryPiece, DegreeOfNegation,
    SideDecomposition, ZoneCell, ZoneMap,
};

use crate::exact_geom::Point2;
use crate::rational::Rational;

/// Errors of the square model.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SquareError {
    #[error("point {0:?} is not on the square's boundary")]
    NotOnBoundary(Point2),
    #[error("endpoints {0:?} and {1:?} admit no opposite-side assignment")]
    AdjacentSidesOnly(Point2, Point2),
    #[error("degenerate chord: endpoints coincide at {0:?}")]
    DegenerateChord(Point2),
    #[error("point {0:?} lies outside the closed square")]
    PointOutsideSpace(Point2),
    #[error("point {0:?} lies on the line; classification requires an exterior point")]
    PointOnLine(Point2),
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// Corner A = (0,0).
pub fn corner_a() -> Point2 {
    Point2::new(rat(0, 1), rat(0, 1))
}

/// Corner B = (1,0).
pub fn corner_b() -> Point2 {
    Point2::new(rat(1, 1), rat(0, 1))
}

/// Corner C = (1,1).
pub fn corner_c() -> Point2 {
    Point2::new(rat(1, 1), rat(1, 1))
}

/// Corner D = (0,1).
pub fn corner_d() -> Point2 {
    Point2::new(rat(0, 1), rat(1, 1))
}

/// The four corners in the order A, B, C, D.
pub fn corners() -> [Point2; 4] {
    [corner_a(), corner_b(), corner_c(), corner_d()]
}

/// Whether `p` lies in the closed unit square.
pub fn in_closed_square(p: &Point2) -> bool {
    let zero = Rational::zero();
    let one = Rational::one();
    p.x >= zero && p.x <= one && p.y >= zero && p.y <= one
}
