//! Exact computational geometry for mixed parallel-postulate models.
//!
//! The crate answers one question in several model geometries: given a point
//! `p` and a line `l` with `p` not on `l`, how many lines through `p` are
//! parallel to `l`? The answer is one of five kinds (none, exactly one,
//! finitely many, countably infinitely many, or a continuum), and a single
//! space may realize several kinds at once. Everything on the logic path is
//! computed over arbitrary-precision rationals; floating point appears only
//! in reported Monte Carlo confidence intervals and in SVG coordinates.
//!
//! Modules:
//!
//! * [`exact_geom`] - rational points, segments, undirected directions, and
//!   exact sets of directions on the half-turn circle.
//! * [`square_model`] - chords of the closed unit square, the pointwise
//!   classifier, exact zone maps and their measures.
//! * [`sphere_plane`] - a plane-plus-sphere space in which one line carries
//!   two representations.
//! * [`axiom`] - the "denied axiom" framework: models, sampled behaviours,
//!   denial verdicts.
//! * [`verify`] - machine-checked re-derivations of the headline claims.
//! * [`oracle`] - slow direction-sweep cross-checks used by the test suite.

pub mod axiom;
pub mod exact_geom;
pub mod kind;
pub mod oracle;
pub mod rational;
pub mod sphere_plane;
pub mod square_model;
pub mod verify;

pub use axiom::{
    denial_verdict, multispace_denied, smarandachely_denied, DenialVerdict, GeometryModel,
    Instance, MultiSpace, PlaneModel, SphereModel, SquareModel, REGISTRY,
};
pub use exact_geom::{
    direction_between, dirset_classify, dirset_subtract, orient, segment_intersection_point,
    segments_intersect, DirArc, Direction, DirectionSet, GeomError, Point2, Segment,
    SegmentIntersection,
};
pub use kind::ParallelKind;
pub use rational::Rational;
pub use verify::{line_through_ce, run_verify, ClaimResult, InvalidE, VerifyReport};
