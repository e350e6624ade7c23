//! Pointwise classification of the parallel postulate in the square model.
//!
//! For a point p and a line l, the parallels through p are exactly the valid
//! chord directions at p minus the directions whose line through p meets l.
//! Both sets are exact subsets of the half-turn circle, so the classification
//! is a finite computation with no sampling and no tolerance.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::chord::{chord_through, Chord};
use super::{corners, in_closed_square, SquareError};
use crate::exact_geom::{
    direction_between, dirset_classify, dirset_subtract, segment_intersection_point, DirArc,
    Direction, DirectionSet, Point2, SegmentIntersection,
};
use crate::kind::ParallelKind;
use crate::rational::Rational;

/// The full classification result at one point.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Classification {
    pub kind: ParallelKind,
    /// For `FiniteMany(k)` the count travels alongside the collapsed label.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u64>,
    pub parallels: DirectionSet,
    pub witnesses: WitnessBundle,
}

/// Evidence backing a classification; exactly the fields matching the kind
/// are populated.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct WitnessBundle {
    /// Euclidean: the one parallel chord.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub unique_parallel: Option<Chord>,
    /// Hyperbolic: the extremal chords (u, v) bounding the parallel pencil.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bounding_pencil: Option<(Chord, Chord)>,
    /// Elliptic: sampled valid directions with their intersection points on l.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub blocking_samples: Vec<(Direction, Point2)>,
}

/// The set of directions d for which `chord_through(p, d)` exists.
///
/// Within the open gap between two consecutive corner directions at p, every
/// ray from p exits through one fixed pair of sides, so chord validity is
/// constant there; one witness direction per gap decides the whole gap, and
/// the corner directions themselves are tested individually.
pub fn valid_directions(p: &Point2) -> Result<DirectionSet, SquareError> {
    if !in_closed_square(p) {
        return Err(SquareError::PointOutsideSpace(p.clone()));
    }
    let mut boundary_dirs: Vec<Direction> = Vec::with_capacity(4);
    for corner in corners() {
        if corner == *p {
            continue;
        }
        let d = direction_between(p, &corner).expect("corner differs from p");
        if !boundary_dirs.contains(&d) {
            boundary_dirs.push(d);
        }
    }
    boundary_dirs.sort();

    let mut arcs = Vec::new();
    let mut isolated = Vec::new();
    let n = boundary_dirs.len();
    debug_assert!(n >= 2, "no point sees all corners in one direction");
    for (i, d) in boundary_dirs.iter().enumerate() {
        if chord_through(p, d).is_some() {
            isolated.push(d.clone());
        }
        let next = &boundary_dirs[(i + 1) % n];
        let witness = Direction::between_ccw(d, next);
        if chord_through(p, &witness).is_some() {
            arcs.push(DirArc::new(d.clone(), next.clone(), false, false));
        }
    }
    Ok(DirectionSet::from_parts(arcs, isolated))
}

/// The closed arc of directions at p subtended by the segment l: exactly the
/// directions whose full line through p meets l. Degenerates to one isolated
/// direction when p is collinear with l's supporting line.
pub fn blocked_directions(p: &Point2, l: &Chord) -> Result<DirectionSet, SquareError> {
    if l.contains(p) {
        return Err(SquareError::PointOnLine(p.clone()));
    }
    let d1 = direction_between(p, l.q1()).expect("p is not on l");
    let d2 = direction_between(p, l.q2()).expect("p is not on l");
    if d1 == d2 {
        return Ok(DirectionSet::point(d1));
    }
    let witness = Direction::between_ccw(&d1, &d2);
    let arc = if line_meets_segment(p, &witness, l) {
        DirArc::closed(d1, d2)
    } else {
        DirArc::closed(d2, d1)
    };
    Ok(DirectionSet::arc(arc))
}

/// Whether the full line through `p` with direction `w` meets the closed
/// segment of `l`: its endpoints must not lie strictly on one side.
fn line_meets_segment(p: &Point2, w: &Direction, l: &Chord) -> bool {
    let side = |q: &Point2| -> i8 {
        let vx = &q.x - &p.x;
        let vy = &q.y - &p.y;
        let cross = vy * &int(w.dx()) - vx * &int(w.dy());
        cross.signum()
    };
    side(l.q1()) * side(l.q2()) <= 0
}

fn int(k: &BigInt) -> Rational {
    Rational::from_big(k.clone(), BigInt::from(1))
}

/// Classification kind only — the fast path for bulk scans.
pub fn classify_kind(p: &Point2, l: &Chord) -> Result<ParallelKind, SquareError> {
    let valid = valid_directions(p)?;
    let blocked = blocked_directions(p, l)?;
    Ok(dirset_classify(&dirset_subtract(&valid, &blocked)))
}

/// Full classification with witnesses.
pub fn classify(p: &Point2, l: &Chord) -> Result<Classification, SquareError> {
    let valid = valid_directions(p)?;
    let blocked = blocked_directions(p, l)?;
    let parallels = dirset_subtract(&valid, &blocked);
    let kind = dirset_classify(&parallels);
    let witnesses = witnesses(p, l, &parallels);
    Ok(Classification {
        kind: kind.clone(),
        k: kind.finite_count(),
        parallels,
        witnesses,
    })
}

/// Builds the evidence bundle for an already-computed parallel set.
pub fn witnesses(p: &Point2, l: &Chord, parallels: &DirectionSet) -> WitnessBundle {
    match dirset_classify(parallels) {
        ParallelKind::Euclidean => {
            let d = &parallels.isolated()[0];
            WitnessBundle {
                unique_parallel: Some(
                    chord_through(p, d).expect("the parallel direction is a valid chord"),
                ),
                ..WitnessBundle::default()
            }
        }
        ParallelKind::Hyperbolic => WitnessBundle {
            bounding_pencil: Some(bounding_pencil(p, l, parallels)),
            ..WitnessBundle::default()
        },
        ParallelKind::Elliptic => WitnessBundle {
            blocking_samples: blocking_samples(p, l),
            ..WitnessBundle::default()
        },
        ParallelKind::FiniteMany(_) | ParallelKind::CountablyInfinite => WitnessBundle::default(),
    }
}

/// The paper's (u), (v): the chords through p toward the endpoints of l when
/// both exist, otherwise the chords at the extremal directions of the first
/// parallels arc. u points toward l's far endpoint q2, v toward q1.
fn bounding_pencil(p: &Point2, l: &Chord, parallels: &DirectionSet) -> (Chord, Chord) {
    let du = direction_between(p, l.q2()).expect("p is not on l");
    let dv = direction_between(p, l.q1()).expect("p is not on l");
    if let (Some(u), Some(v)) = (chord_through(p, &du), chord_through(p, &dv)) {
        return (u, v);
    }
    let arc = &parallels.arcs()[0];
    let u = chord_through(p, &arc.start).expect("arc endpoints carry chords");
    let v = chord_through(p, &arc.end).expect("arc endpoints carry chords");
    (u, v)
}

/// For an elliptic point every valid chord meets l; sample at least eight
/// valid directions and record each exact intersection point.
fn blocking_samples(p: &Point2, l: &Chord) -> Vec<(Direction, Point2)> {
    let valid = valid_directions(p).expect("classified points are in the square");
    let dirs = sample_directions(&valid, 8);
    let mut out = Vec::with_capacity(dirs.len());
    for d in dirs {
        let chord = chord_through(p, &d).expect("sampled from the valid set");
        if let SegmentIntersection::Point(q) =
            segment_intersection_point(chord.segment(), l.segment())
        {
            out.push((d, q));
        }
    }
    out
}

/// Deterministically samples at least `want` members of a nonempty set:
/// isolated directions, closed arc endpoints, then repeated angular bisection
/// of every arc.
fn sample_directions(set: &DirectionSet, want: usize) -> Vec<Direction> {
    let mut out: Vec<Direction> = Vec::new();
    let push = |d: Direction, out: &mut Vec<Direction>| {
        if !out.contains(&d) {
            out.push(d);
        }
    };
    if set.is_full() {
        for (dx, dy) in [(1, 0), (4, 1), (2, 1), (1, 1), (1, 2), (1, 4), (0, 1), (-1, 4)] {
            push(Direction::from_ints(dx, dy), &mut out);
        }
        return out;
    }
    for d in set.isolated() {
        push(d.clone(), &mut out);
    }
    for arc in set.arcs() {
        if arc.start_closed {
            push(arc.start.clone(), &mut out);
        }
        if arc.end_closed {
            push(arc.end.clone(), &mut out);
        }
    }
    // Breadth-first bisection: each sub-arc splits at an exact interior
    // direction, so samples spread across every arc.
    let mut queue: std::collections::VecDeque<(Direction, Direction)> = set
        .arcs()
        .iter()
        .filter(|a| a.start != a.end)
        .map(|a| (a.start.clone(), a.end.clone()))
        .collect();
    if queue.is_empty() {
        // Only a circle-minus-point arc can reach here among arc-bearing
        // sets; every other direction is interior, so any distinct probe
        // splits it into two ordinary sub-arcs.
        for arc in set.arcs() {
            let probe = if arc.start.is_horizontal() {
                Direction::from_ints(0, 1)
            } else {
                Direction::horizontal()
            };
            queue.push_back((arc.start.clone(), probe.clone()));
            queue.push_back((probe, arc.start.clone()));
        }
    }
    while out.len() < want {
        let Some((a, b)) = queue.pop_front() else {
            break;
        };
        let mid = Direction::between_ccw(&a, &b);
        push(mid.clone(), &mut out);
        queue.push_back((a, mid.clone()));
        queue.push_back((mid, b));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, Rational};

    fn pt(x: Rational, y: Rational) -> Point2 {
        Point2::new(x, y)
    }

    fn dir(dx: i64, dy: i64) -> Direction {
        Direction::from_ints(dx, dy)
    }

    fn ce() -> Chord {
        "1,1:0,1/2".parse().unwrap()
    }

    #[test]
    fn center_sees_every_direction() {
        let v = valid_directions(&pt(rat(1, 2), rat(1, 2))).unwrap();
        assert!(v.is_full());
    }

    #[test]
    fn bottom_interior_valid_set_is_an_arc_plus_the_horizontal() {
        let v = valid_directions(&pt(rat(1, 2), rat(0, 1))).unwrap();
        assert_eq!(
            v,
            DirectionSet::from_parts(
                vec![DirArc::closed(dir(1, 2), dir(-1, 2))],
                vec![dir(1, 0)]
            )
        );
    }

    #[test]
    fn corner_a_valid_set_is_the_closed_quarter_turn() {
        let v = valid_directions(&pt(rat(0, 1), rat(0, 1))).unwrap();
        assert_eq!(
            v,
            DirectionSet::arc(DirArc::closed(dir(1, 0), dir(0, 1)))
        );
    }

    #[test]
    fn outside_point_is_rejected() {
        assert!(matches!(
            valid_directions(&pt(rat(2, 1), rat(0, 1))),
            Err(SquareError::PointOutsideSpace(_))
        ));
    }

    #[test]
    fn blocked_at_bottom_interior_matches_the_subtended_arc() {
        let b = blocked_directions(&pt(rat(1, 2), rat(0, 1)), &ce()).unwrap();
        assert_eq!(
            b,
            DirectionSet::arc(DirArc::closed(dir(1, 2), dir(-1, 1)))
        );
    }

    #[test]
    fn blocked_at_n_matches_the_subtended_arc() {
        let b = blocked_directions(&pt(rat(1, 2), rat(1, 4)), &ce()).unwrap();
        assert_eq!(
            b,
            DirectionSet::arc(DirArc::closed(dir(2, 3), dir(-2, 1)))
        );
    }

    #[test]
    fn collinear_point_beyond_an_endpoint_blocks_one_direction() {
        // A chord is the maximal clip of its supporting line, so a point of
        // the square collinear with l already lies on l; the degenerate
        // single-direction arc therefore only arises for points beyond the
        // square, which blocked_directions still answers exactly.
        let l: Chord = "1/4,0:1/4,1".parse().unwrap();
        let p = pt(rat(1, 4), rat(2, 1));
        let b = blocked_directions(&p, &l).unwrap();
        assert_eq!(b, DirectionSet::point(dir(0, 1)));
    }

    #[test]
    fn point_on_line_is_rejected() {
        let p = pt(rat(1, 5), rat(3, 5));
        assert!(matches!(
            blocked_directions(&p, &ce()),
            Err(SquareError::PointOnLine(_))
        ));
        assert!(matches!(
            classify(&p, &ce()),
            Err(SquareError::PointOnLine(_))
        ));
    }

    #[test]
    fn n_is_hyperbolic_with_the_papers_pencil() {
        let n = pt(rat(1, 2), rat(1, 4));
        let c = classify(&n, &ce()).unwrap();
        assert_eq!(c.kind, ParallelKind::Hyperbolic);
        let (u, v) = c.witnesses.bounding_pencil.unwrap();
        // u passes through N and E, v through N and C.
        assert!(u.contains(&n) && u.contains(&pt(rat(0, 1), rat(1, 2))));
        assert!(v.contains(&n) && v.contains(&pt(rat(1, 1), rat(1, 1))));
        assert_eq!(u.to_string(), "1,0:0,1/2");
        assert_eq!(v.to_string(), "1/3,0:1,1");
    }

    #[test]
    fn m_is_euclidean_with_unique_parallel_ab() {
        let m = pt(rat(1, 2), rat(0, 1));
        let c = classify(&m, &ce()).unwrap();
        assert_eq!(c.kind, ParallelKind::Euclidean);
        assert_eq!(
            c.witnesses.unique_parallel.unwrap().to_string(),
            "0,0:1,0"
        );
    }

    #[test]
    fn d_is_elliptic_with_verified_blocking_samples() {
        let d = pt(rat(0, 1), rat(1, 1));
        let c = classify(&d, &ce()).unwrap();
        assert_eq!(c.kind, ParallelKind::Elliptic);
        assert!(c.parallels.is_empty());
        let samples = &c.witnesses.blocking_samples;
        assert!(samples.len() >= 8);
        for (dir, hit) in samples {
            let chord = chord_through(&d, dir).unwrap();
            assert!(chord.contains(hit));
            assert!(ce().contains(hit));
        }
    }

    #[test]
    fn corner_a_is_hyperbolic_with_a_half_open_pencil() {
        let a = pt(rat(0, 1), rat(0, 1));
        let c = classify(&a, &ce()).unwrap();
        assert_eq!(c.kind, ParallelKind::Hyperbolic);
        assert_eq!(
            c.parallels,
            DirectionSet::arc(DirArc::new(dir(1, 0), dir(1, 1), true, false))
        );
        let (u, v) = c.witnesses.bounding_pencil.unwrap();
        assert_eq!(u.to_string(), "0,0:0,1");
        assert_eq!(v.to_string(), "0,0:1,1");
    }

    #[test]
    fn classify_kind_agrees_with_classify() {
        for (x, y) in [(1i64, 2i64), (1, 4), (3, 4), (0, 1), (1, 1)] {
            let p = pt(rat(x, 4), rat(y, 4));
            if ce().contains(&p) {
                continue;
            }
            assert_eq!(
                classify_kind(&p, &ce()).unwrap(),
                classify(&p, &ce()).unwrap().kind
            );
        }
    }
}
