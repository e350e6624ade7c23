//! Exact planar primitives: rational points and segments, orientation and
//! closed-set intersection predicates, undirected directions, and sets of
//! directions on the half-turn circle.
//!
//! Every predicate here is decided by integer sign computations on
//! arbitrary-precision rationals. There are no epsilons anywhere.

mod direction;
mod dirset;
mod point;

pub use direction::{direction_between, Direction};
pub use dirset::{dirset_classify, dirset_subtract, DirArc, DirectionSet};
pub use point::{
    orient, segment_intersection_point, segments_intersect, ParsePointError, Point2, Segment,
    SegmentIntersection,
};

/// Errors from constructing degenerate primitives.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("zero vector does not define a direction")]
    DegenerateDirection,
    #[error("segment endpoints coincide")]
    DegenerateSegment,
}
