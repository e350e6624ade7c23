//! Exact subsets of the half-turn circle.
//!
//! A `DirectionSet` is a finite union of arcs (with individually open or
//! closed endpoints) and isolated directions. Sets are kept in a normal
//! form: arcs pairwise disjoint and maximal, isolated directions not covered
//! by any arc, everything ordered counter-clockwise from the horizontal
//! direction. Set algebra is decided entirely by the exact cyclic order on
//! [`Direction`]; endpoint bookkeeping is explicit so that open/closed
//! distinctions survive every operation.
//!
//! Internally operations lift the circle to the linear order starting at the
//! horizontal direction (an arc crossing the seam splits in two), run
//! ordinary interval algebra, and re-join at the seam on the way out.

use serde::{Deserialize, Serialize};

use super::direction::Direction;
use crate::kind::ParallelKind;

/// A counter-clockwise arc from `start` to `end` on the half-turn circle.
///
/// `start == end` encodes one special set, the full circle minus the single
/// direction `start`; both flags are open in that case. Arcs wrap through the
/// horizontal seam whenever `end <= start` in the linear order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DirArc {
    pub start: Direction,
    pub end: Direction,
    pub start_closed: bool,
    pub end_closed: bool,
}

impl DirArc {
    pub fn new(start: Direction, end: Direction, start_closed: bool, end_closed: bool) -> DirArc {
        assert!(
            start != end || (!start_closed && !end_closed),
            "an arc with equal endpoints must be fully open (circle minus a point)"
        );
        DirArc {
            start,
            end,
            start_closed,
            end_closed,
        }
    }

    pub fn closed(start: Direction, end: Direction) -> DirArc {
        DirArc::new(start, end, true, true)
    }

    pub fn contains(&self, d: &Direction) -> bool {
        let after_start = d > &self.start || (d == &self.start && self.start_closed);
        let before_end = d < &self.end || (d == &self.end && self.end_closed);
        if self.start == self.end {
            d != &self.start
        } else if self.start < self.end {
            after_start && before_end
        } else {
            after_start || before_end
        }
    }
}

/// A normalized subset of the half-turn circle.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DirectionSet {
    full: bool,
    arcs: Vec<DirArc>,
    isolated: Vec<Direction>,
}

// ---------------------------------------------------------------------------
// Linear lift: intervals over the order starting at the horizontal direction.

/// Upper endpoint of a linear interval; `Top` is the unattained angle pi.
#[derive(Clone, PartialEq, Eq, Debug)]
enum Hi {
    At(Direction),
    Top,
}

#[derive(Clone, Debug)]
struct Span {
    lo: Direction,
    lo_closed: bool,
    hi: Hi,
    hi_closed: bool,
}

impl Span {
    fn point(d: Direction) -> Span {
        Span {
            lo: d.clone(),
            lo_closed: true,
            hi: Hi::At(d),
            hi_closed: true,
        }
    }

    fn is_empty(&self) -> bool {
        match &self.hi {
            Hi::Top => false,
            Hi::At(h) => match self.lo.cmp(h) {
                std::cmp::Ordering::Less => false,
                std::cmp::Ordering::Equal => !(self.lo_closed && self.hi_closed),
                std::cmp::Ordering::Greater => true,
            },
        }
    }

    fn is_point(&self) -> bool {
        matches!(&self.hi, Hi::At(h) if *h == self.lo)
    }

    /// `self` minus `other`, as zero, one or two spans.
    fn subtract(&self, other: &Span) -> Vec<Span> {
        let mut out = Vec::new();
        // Piece of self before other: upper bound is the smaller of self.hi
        // and "just below other.lo".
        let before_other = (Hi::At(other.lo.clone()), !other.lo_closed);
        let (hi, hi_closed) = min_hi(
            (self.hi.clone(), self.hi_closed),
            before_other,
        );
        let left = Span {
            lo: self.lo.clone(),
            lo_closed: self.lo_closed,
            hi,
            hi_closed,
        };
        if !left.is_empty() {
            out.push(left);
        }
        // Piece of self after other.
        if let Hi::At(oh) = &other.hi {
            let after_other = (oh.clone(), !other.hi_closed);
            let (lo, lo_closed) = max_lo((self.lo.clone(), self.lo_closed), after_other);
            let right = Span {
                lo,
                lo_closed,
                hi: self.hi.clone(),
                hi_closed: self.hi_closed,
            };
            if !right.is_empty() {
                out.push(right);
            }
        }
        out
    }
}

/// Smaller upper bound; at equal positions the open bound is smaller.
fn min_hi(a: (Hi, bool), b: (Hi, bool)) -> (Hi, bool) {
    match (&a.0, &b.0) {
        (Hi::Top, _) => b,
        (_, Hi::Top) => a,
        (Hi::At(x), Hi::At(y)) => match x.cmp(y) {
            std::cmp::Ordering::Less => a,
            std::cmp::Ordering::Greater => b,
            std::cmp::Ordering::Equal => {
                let closed = a.1 && b.1;
                (a.0, closed)
            }
        },
    }
}

/// Larger lower bound; at equal positions the open bound is larger.
fn max_lo(a: (Direction, bool), b: (Direction, bool)) -> (Direction, bool) {
    match a.0.cmp(&b.0) {
        std::cmp::Ordering::Greater => a,
        std::cmp::Ordering::Less => b,
        std::cmp::Ordering::Equal => {
            let closed = a.1 && b.1;
            (a.0, closed)
        }
    }
}

fn lift_arc(arc: &DirArc, out: &mut Vec<Span>) {
    let seam = Direction::horizontal();
    if arc.start < arc.end {
        out.push(Span {
            lo: arc.start.clone(),
            lo_closed: arc.start_closed,
            hi: Hi::At(arc.end.clone()),
            hi_closed: arc.end_closed,
        });
    } else {
        // Wraps through the seam (this includes the circle-minus-a-point
        // arc, where start == end).
        out.push(Span {
            lo: arc.start.clone(),
            lo_closed: arc.start_closed,
            hi: Hi::Top,
            hi_closed: false,
        });
        out.push(Span {
            lo: seam,
            lo_closed: true,
            hi: Hi::At(arc.end.clone()),
            hi_closed: arc.end_closed,
        });
    }
}

impl DirectionSet {
    fn lift(&self) -> Vec<Span> {
        let mut out = Vec::new();
        if self.full {
            out.push(Span {
                lo: Direction::horizontal(),
                lo_closed: true,
                hi: Hi::Top,
                hi_closed: false,
            });
            return out;
        }
        for arc in &self.arcs {
            lift_arc(arc, &mut out);
        }
        for d in &self.isolated {
            out.push(Span::point(d.clone()));
        }
        out
    }

    /// Rebuilds the normal form from a soup of linear spans: sort, merge
    /// overlapping and touching spans, re-join across the seam, split out
    /// degenerate spans as isolated directions.
    fn normalize(mut spans: Vec<Span>) -> DirectionSet {
        spans.retain(|s| !s.is_empty());
        if spans.is_empty() {
            return DirectionSet::empty();
        }
        spans.sort_by(|a, b| {
            a.lo
                .cmp(&b.lo)
                .then_with(|| b.lo_closed.cmp(&a.lo_closed))
        });

        let mut merged: Vec<Span> = Vec::new();
        for next in spans {
            let Some(cur) = merged.last_mut() else {
                merged.push(next);
                continue;
            };
            let joins = match &cur.hi {
                Hi::Top => true,
                Hi::At(h) => match next.lo.cmp(h) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Equal => cur.hi_closed || next.lo_closed,
                    std::cmp::Ordering::Greater => false,
                },
            };
            if joins {
                let (hi, hi_closed) = max_hi(
                    (cur.hi.clone(), cur.hi_closed),
                    (next.hi, next.hi_closed),
                );
                cur.hi = hi;
                cur.hi_closed = hi_closed;
            } else {
                merged.push(next);
            }
        }

        // Re-join across the seam: a span reaching Top is cyclically adjacent
        // to a span starting closed at the horizontal direction.
        let seam = Direction::horizontal();
        let last_reaches_top = matches!(merged.last().map(|s| &s.hi), Some(Hi::Top));
        let first_starts_at_seam = merged
            .first()
            .map(|s| s.lo == seam && s.lo_closed)
            .unwrap_or(false);

        // The re-joined piece is cyclic, so it is kept out of the linear
        // span-to-arc conversion (its start and end may coincide: the
        // circle-minus-a-point arc).
        let mut wrap_arc: Option<DirArc> = None;
        if last_reaches_top && first_starts_at_seam {
            if merged.len() == 1 {
                return DirectionSet {
                    full: true,
                    arcs: Vec::new(),
                    isolated: Vec::new(),
                };
            }
            let first = merged.remove(0);
            let last = merged.pop().expect("len >= 2");
            let Hi::At(end) = first.hi else {
                unreachable!("only the last span can reach Top")
            };
            wrap_arc = Some(DirArc::new(
                last.lo,
                end,
                last.lo_closed,
                first.hi_closed,
            ));
        }

        let mut arcs = Vec::new();
        let mut isolated = Vec::new();
        for s in merged {
            if s.is_point() {
                isolated.push(s.lo);
            } else {
                let (end, end_closed) = match s.hi {
                    Hi::At(d) => (d, s.hi_closed),
                    Hi::Top => (seam.clone(), false),
                };
                arcs.push(DirArc {
                    start: s.lo,
                    end,
                    start_closed: s.lo_closed,
                    end_closed,
                });
            }
        }
        arcs.extend(wrap_arc);
        DirectionSet {
            full: false,
            arcs,
            isolated,
        }
    }
}

/// Larger upper bound; at equal positions the closed bound is larger.
fn max_hi(a: (Hi, bool), b: (Hi, bool)) -> (Hi, bool) {
    match (&a.0, &b.0) {
        (Hi::Top, _) => (Hi::Top, false),
        (_, Hi::Top) => (Hi::Top, false),
        (Hi::At(x), Hi::At(y)) => match x.cmp(y) {
            std::cmp::Ordering::Greater => a,
            std::cmp::Ordering::Less => b,
            std::cmp::Ordering::Equal => {
                let closed = a.1 || b.1;
                (a.0, closed)
            }
        },
    }
}

// ---------------------------------------------------------------------------
// Public interface.

impl DirectionSet {
    pub fn empty() -> DirectionSet {
        DirectionSet {
            full: false,
            arcs: Vec::new(),
            isolated: Vec::new(),
        }
    }

    /// The entire half-turn circle.
    pub fn full() -> DirectionSet {
        DirectionSet {
            full: true,
            arcs: Vec::new(),
            isolated: Vec::new(),
        }
    }

    pub fn point(d: Direction) -> DirectionSet {
        DirectionSet {
            full: false,
            arcs: Vec::new(),
            isolated: vec![d],
        }
    }

    pub fn arc(arc: DirArc) -> DirectionSet {
        DirectionSet::from_parts(vec![arc], Vec::new())
    }

    /// Union of arbitrary arcs and directions, normalized.
    pub fn from_parts(arcs: Vec<DirArc>, isolated: Vec<Direction>) -> DirectionSet {
        let raw = DirectionSet {
            full: false,
            arcs,
            isolated,
        };
        DirectionSet::normalize(raw.lift())
    }

    pub fn union(&self, other: &DirectionSet) -> DirectionSet {
        if self.full || other.full {
            return DirectionSet::full();
        }
        let mut spans = self.lift();
        spans.extend(other.lift());
        DirectionSet::normalize(spans)
    }

    /// Exact set difference.
    pub fn subtract(&self, other: &DirectionSet) -> DirectionSet {
        if other.full {
            return DirectionSet::empty();
        }
        let mut spans = self.lift();
        for t in other.lift() {
            spans = spans.iter().flat_map(|s| s.subtract(&t)).collect();
        }
        DirectionSet::normalize(spans)
    }

    pub fn contains(&self, d: &Direction) -> bool {
        if self.full {
            return true;
        }
        self.isolated.iter().any(|i| i == d) || self.arcs.iter().any(|a| a.contains(d))
    }

    pub fn is_empty(&self) -> bool {
        !self.full && self.arcs.is_empty() && self.isolated.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn arcs(&self) -> &[DirArc] {
        &self.arcs
    }

    pub fn isolated(&self) -> &[Direction] {
        &self.isolated
    }

    /// Classifies by "how many directions are in the set": none, one,
    /// finitely many, or a continuum. A countable infinity is not
    /// representable as a finite union of arcs and points, so
    /// `CountablyInfinite` can never be returned.
    pub fn classify(&self) -> ParallelKind {
        if self.full || !self.arcs.is_empty() {
            return ParallelKind::Hyperbolic;
        }
        match self.isolated.len() {
            0 => ParallelKind::Elliptic,
            1 => ParallelKind::Euclidean,
            k => ParallelKind::FiniteMany(k as u64),
        }
    }
}

/// Free-function aliases matching the operation vocabulary used across the
/// crate.
pub fn dirset_subtract(a: &DirectionSet, b: &DirectionSet) -> DirectionSet {
    a.subtract(b)
}

pub fn dirset_classify(s: &DirectionSet) -> ParallelKind {
    s.classify()
}
