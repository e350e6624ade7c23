//! Exact zone partition of the square and the degree of negation.
//!
//! The classification kind is constant on each cell of the arrangement of
//! finitely many critical lines: the lines joining each corner to each
//! endpoint of l, the supporting line of l, and the four side lines. Kind
//! transitions happen only where the direction from the moving point to a
//! corner aligns with the direction to an endpoint of l (or the point hits
//! the supporting line or the boundary), and each such alignment locus is one
//! of these lines. The zone map is therefore computed exactly: split the
//! square by every critical line, classify one interior point per cell, and
//! merge same-kind neighbours where the union stays convex.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::chord::{Chord, Side};
use super::classify::classify_kind;
use super::{corners, SquareError};
use crate::exact_geom::Point2;
use crate::kind::ParallelKind;
use crate::rational::Rational;

// ---------------------------------------------------------------------------
// Exact lines a·x + b·y + c = 0.

/// A line with canonical integer coefficients: gcd 1, first nonzero
/// coefficient positive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct LineEq {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    /// The same triple when it fits machine words; used by the bulk
    /// point-location fast path.
    small: Option<(i64, i64, i64)>,
}

impl LineEq {
    pub(crate) fn new(a: BigInt, b: BigInt, c: BigInt) -> LineEq {
        assert!(!a.is_zero() || !b.is_zero(), "degenerate line");
        let mut g = a.gcd(&b).gcd(&c);
        if g.is_zero() {
            g = BigInt::from(1);
        }
        let (mut a, mut b, mut c) = (&a / &g, &b / &g, &c / &g);
        let lead_negative = if a.is_zero() {
            b.is_negative()
        } else {
            a.is_negative()
        };
        if lead_negative {
            a = -a;
            b = -b;
            c = -c;
        }
        let small = match (i64::try_from(&a), i64::try_from(&b), i64::try_from(&c)) {
            (Ok(a), Ok(b), Ok(c)) => Some((a, b, c)),
            _ => None,
        };
        LineEq { a, b, c, small }
    }

    /// The line through two distinct points.
    pub(crate) fn through(p: &Point2, q: &Point2) -> LineEq {
        assert!(p != q, "two coincident points do not span a line");
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = Rational::zero() - (a.clone() * p.x.clone() + b.clone() * p.y.clone());
        // Clear denominators exactly.
        let common = a.denom() * b.denom() * c.denom();
        let na = a.numer() * (&common / a.denom());
        let nb = b.numer() * (&common / b.denom());
        let nc = c.numer() * (&common / c.denom());
        LineEq::new(na, nb, nc)
    }

    pub(crate) fn eval(&self, p: &Point2) -> Rational {
        let a = Rational::from_big(self.a.clone(), BigInt::from(1));
        let b = Rational::from_big(self.b.clone(), BigInt::from(1));
        let c = Rational::from_big(self.c.clone(), BigInt::from(1));
        a * p.x.clone() + b * p.y.clone() + c
    }

    pub(crate) fn sign_at(&self, p: &Point2) -> i8 {
        self.eval(p).signum()
    }

    /// Sign at the dyadic point (k1/2^32, k2/2^32) without constructing
    /// rationals. The i128 computation cannot overflow when the coefficients
    /// fit in i64: |a·k1 + b·k2 + c·2^32| < 2^97.
    pub(crate) fn sign_at_dyadic(&self, k1: u64, k2: u64) -> i8 {
        match self.small {
            Some((a, b, c)) => {
                let v = a as i128 * k1 as i128 + b as i128 * k2 as i128
                    + c as i128 * (1i128 << 32);
                match v.cmp(&0) {
                    std::cmp::Ordering::Less => -1,
                    std::cmp::Ordering::Equal => 0,
                    std::cmp::Ordering::Greater => 1,
                }
            }
            None => {
                let v: BigInt = &self.a * BigInt::from(k1)
                    + &self.b * BigInt::from(k2)
                    + &self.c * (BigInt::from(1) << 32u8);
                match v.sign() {
                    num_bigint::Sign::Minus => -1,
                    num_bigint::Sign::NoSign => 0,
                    num_bigint::Sign::Plus => 1,
                }
            }
        }
    }
}

/// The critical lines of l, deduplicated; the supporting line comes first.
pub(crate) fn critical_lines(l: &Chord) -> Vec<LineEq> {
    let mut lines = vec![LineEq::through(l.q1(), l.q2())];
    let push = |line: LineEq, lines: &mut Vec<LineEq>| {
        if !lines.contains(&line) {
            lines.push(line);
        }
    };
    for corner in corners() {
        for endpoint in [l.q1(), l.q2()] {
            if corner != *endpoint {
                push(LineEq::through(&corner, endpoint), &mut lines);
            }
        }
    }
    let one = BigInt::from(1);
    let zero = BigInt::from(0);
    push(LineEq::new(one.clone(), zero.clone(), zero.clone()), &mut lines); // x = 0
    push(LineEq::new(one.clone(), zero.clone(), -one.clone()), &mut lines); // x = 1
    push(LineEq::new(zero.clone(), one.clone(), zero.clone()), &mut lines); // y = 0
    push(LineEq::new(zero, one.clone(), -one), &mut lines); // y = 1
    lines
}

// ---------------------------------------------------------------------------
// Convex polygons with rational vertices.

/// Twice the signed area (positive for counter-clockwise orientation).
pub(crate) fn poly_area2(poly: &[Point2]) -> Rational {
    let mut sum = Rational::zero();
    for i in 0..poly.len() {
        let p = &poly[i];
        let q = &poly[(i + 1) % poly.len()];
        sum += &(p.x.clone() * q.y.clone() - q.x.clone() * p.y.clone());
    }
    sum
}

/// Vertex average; strictly interior for a convex polygon of positive area.
pub(crate) fn centroid(poly: &[Point2]) -> Point2 {
    let mut x = Rational::zero();
    let mut y = Rational::zero();
    for p in poly {
        x += &p.x;
        y += &p.y;
    }
    let n = Rational::from_int(poly.len() as i64);
    Point2::new(x / n.clone(), y / n)
}

/// Splits a convex polygon by a line into its (f ≤ 0, f ≥ 0) parts. Degenerate
/// parts come back as `None`. Collinear vertices are preserved: they carry the
/// exact adjacency structure the cell-merging step matches on.
fn split_convex(poly: &[Point2], line: &LineEq) -> (Option<Vec<Point2>>, Option<Vec<Point2>>) {
    let values: Vec<Rational> = poly.iter().map(|p| line.eval(p)).collect();
    let signs: Vec<i8> = values.iter().map(|v| v.signum()).collect();
    if signs.iter().all(|s| *s <= 0) {
        return (Some(poly.to_vec()), None);
    }
    if signs.iter().all(|s| *s >= 0) {
        return (None, Some(poly.to_vec()));
    }
    let mut neg: Vec<Point2> = Vec::with_capacity(poly.len() + 2);
    let mut pos: Vec<Point2> = Vec::with_capacity(poly.len() + 2);
    for i in 0..poly.len() {
        let j = (i + 1) % poly.len();
        if signs[i] <= 0 {
            neg.push(poly[i].clone());
        }
        if signs[i] >= 0 {
            pos.push(poly[i].clone());
        }
        if signs[i] * signs[j] < 0 {
            let t = values[i].clone() / (values[i].clone() - values[j].clone());
            let w = Point2::new(
                &poly[i].x + &((&poly[j].x - &poly[i].x) * t.clone()),
                &poly[i].y + &((&poly[j].y - &poly[i].y) * t),
            );
            neg.push(w.clone());
            pos.push(w);
        }
    }
    let clean = |mut v: Vec<Point2>| -> Option<Vec<Point2>> {
        v.dedup();
        if v.len() > 1 && v.first() == v.last() {
            v.pop();
        }
        if v.len() >= 3 && poly_area2(&v).is_positive() {
            Some(v)
        } else {
            None
        }
    };
    (clean(neg), clean(pos))
}

fn cross_sign(o: &Point2, a: &Point2, b: &Point2) -> i8 {
    crate::exact_geom::orient(o, a, b)
}

fn is_convex_ccw(poly: &[Point2]) -> bool {
    let n = poly.len();
    (0..n).all(|i| cross_sign(&poly[i], &poly[(i + 1) % n], &poly[(i + 2) % n]) >= 0)
}

/// Removes vertices that are collinear with their neighbours.
fn strip_collinear(poly: &[Point2]) -> Vec<Point2> {
    let n = poly.len();
    let kept: Vec<Point2> = (0..n)
        .filter(|&i| cross_sign(&poly[(i + n - 1) % n], &poly[i], &poly[(i + 1) % n]) != 0)
        .map(|i| poly[i].clone())
        .collect();
    if kept.len() >= 3 {
        kept
    } else {
        poly.to_vec()
    }
}

/// Whether two cells of the arrangement share a boundary edge. Adjacent cells
/// carry their shared facet with identical endpoints (collinear vertices are
/// preserved by the splitter), so exact vertex-pair matching suffices.
fn share_edge(a: &[Point2], b: &[Point2]) -> bool {
    let (n, m) = (a.len(), b.len());
    (0..n).any(|i| {
        (0..m).any(|j| a[i] == b[(j + 1) % m] && a[(i + 1) % n] == b[j])
    })
}

/// The union of an edge-connected group of cells, provided it is one simple
/// convex polygon; `None` otherwise (holes, pinches, reflex corners).
///
/// Interior edges appear twice with opposite orientation and cancel; the
/// remaining directed edges must stitch into a single convex cycle.
fn region_union(cells: &[&Vec<Point2>]) -> Option<Vec<Point2>> {
    use std::collections::{HashMap, HashSet};
    let mut directed: HashSet<(&Point2, &Point2)> = HashSet::new();
    for poly in cells {
        for i in 0..poly.len() {
            directed.insert((&poly[i], &poly[(i + 1) % poly.len()]));
        }
    }
    let mut next: HashMap<&Point2, &Point2> = HashMap::new();
    let mut boundary_edges = 0usize;
    for (u, v) in &directed {
        if directed.contains(&(*v, *u)) {
            continue;
        }
        boundary_edges += 1;
        if next.insert(*u, *v).is_some() {
            return None;
        }
    }
    if boundary_edges < 3 {
        return None;
    }
    let start = *next.keys().min()?;
    let mut cycle: Vec<Point2> = vec![start.clone()];
    let mut cursor = next.get(start)?;
    while *cursor != start {
        if cycle.len() > boundary_edges {
            return None;
        }
        cycle.push((*cursor).clone());
        cursor = next.get(cursor)?;
    }
    if cycle.len() != boundary_edges {
        return None;
    }
    if is_convex_ccw(&cycle) && poly_area2(&cycle).is_positive() {
        Some(cycle)
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// The arrangement.

pub(crate) struct RawCell {
    pub(crate) polygon: Vec<Point2>,
    pub(crate) kind: ParallelKind,
    /// Sign of every critical line at the cell's interior; never zero.
    pub(crate) signs: Vec<i8>,
}

pub(crate) struct Arrangement {
    pub(crate) lines: Vec<LineEq>,
    pub(crate) cells: Vec<RawCell>,
}

pub(crate) fn build_arrangement(l: &Chord) -> Arrangement {
    let lines = critical_lines(l);
    let square: Vec<Point2> = corners().to_vec();
    let mut polys = vec![square];
    for line in &lines {
        let mut next = Vec::with_capacity(polys.len() + 4);
        for poly in polys {
            let (lo, hi) = split_convex(&poly, line);
            next.extend(lo);
            next.extend(hi);
        }
        polys = next;
    }
    let cells = polys
        .into_iter()
        .map(|polygon| {
            let sample = centroid(&polygon);
            let kind = classify_kind(&sample, l)
                .expect("cell interiors avoid l: its supporting line is a splitting line");
            let signs: Vec<i8> = lines.iter().map(|ln| ln.sign_at(&sample)).collect();
            debug_assert!(signs.iter().all(|s| *s != 0), "centroid off every line");
            RawCell {
                polygon,
                kind,
                signs,
            }
        })
        .collect();
    Arrangement { lines, cells }
}

// ---------------------------------------------------------------------------
// Public zone map types.

/// Label of a boundary piece or corner: a classification kind, or on the
/// line l itself (where classification is undefined).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BoundaryLabel {
    Kind(ParallelKind),
    OnLine,
}

impl BoundaryLabel {
    pub fn label(&self) -> &'static str {
        match self {
            BoundaryLabel::Kind(k) => k.label(),
            BoundaryLabel::OnLine => "on_line",
        }
    }
}

impl Serialize for BoundaryLabel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for BoundaryLabel {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        if s == "on_line" {
            return Ok(BoundaryLabel::OnLine);
        }
        let kind = serde_json::from_value(serde_json::Value::String(s))
            .map_err(serde::de::Error::custom)?;
        Ok(BoundaryLabel::Kind(kind))
    }
}

/// One reported convex cell with its constant kind.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ZoneCell {
    pub polygon: Vec<Point2>,
    pub kind: ParallelKind,
}

/// A sub-segment (or single breakpoint, when `start == end`) of a side.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoundaryPiece {
    pub start: Point2,
    pub end: Point2,
    pub kind: BoundaryLabel,
}

/// The ordered decomposition of one side.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SideDecomposition {
    pub side: Side,
    pub pieces: Vec<BoundaryPiece>,
}

/// The exact partition of the square by classification kind.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ZoneMap {
    pub cells: Vec<ZoneCell>,
    pub boundary: Vec<SideDecomposition>,
    pub corners: BTreeMap<String, BoundaryLabel>,
}

/// Exact measure fractions of each kind, per dimension.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DegreeOfNegation {
    /// 2D: fraction of the square's area per kind; the keys are kind labels.
    pub area: BTreeMap<String, Rational>,
    /// 1D: fraction of the total side length 4 per label, including
    /// `on_line` when l runs along a side.
    pub boundary: BTreeMap<String, Rational>,
    /// 0D: the four corners.
    pub corners: BTreeMap<String, BoundaryLabel>,
    /// 1 − area fraction of the Euclidean zone.
    pub negation_degree_area: Rational,
}

fn boundary_label(p: &Point2, l: &Chord) -> BoundaryLabel {
    if l.contains(p) {
        BoundaryLabel::OnLine
    } else {
        match classify_kind(p, l) {
            Ok(kind) => BoundaryLabel::Kind(kind),
            Err(SquareError::PointOnLine(_)) => BoundaryLabel::OnLine,
            Err(e) => panic!("boundary point must classify: {e}"),
        }
    }
}

fn side_decomposition(side: Side, lines: &[LineEq], l: &Chord) -> SideDecomposition {
    let (p0, p1) = side.endpoints();
    let mut ts: Vec<Rational> = vec![Rational::zero(), Rational::one()];
    for line in lines {
        let f0 = line.eval(&p0);
        let f1 = line.eval(&p1);
        if f0.is_zero() && f1.is_zero() {
            continue;
        }
        if f0.signum() != f1.signum() {
            let t = f0.clone() / (f0 - f1);
            if t.is_positive() && t < Rational::one() && !ts.contains(&t) {
                ts.push(t);
            }
        }
    }
    ts.sort();
    let at = |t: &Rational| {
        Point2::new(
            &p0.x + &((&p1.x - &p0.x) * t.clone()),
            &p0.y + &((&p1.y - &p0.y) * t.clone()),
        )
    };
    let mut pieces = Vec::with_capacity(2 * ts.len() - 1);
    for (i, t) in ts.iter().enumerate() {
        let p = at(t);
        pieces.push(BoundaryPiece {
            kind: boundary_label(&p, l),
            start: p.clone(),
            end: p,
        });
        if i + 1 < ts.len() {
            let mid = (t.clone() + ts[i + 1].clone()) / Rational::from_int(2);
            let m = at(&mid);
            pieces.push(BoundaryPiece {
                kind: boundary_label(&m, l),
                start: at(t),
                end: at(&ts[i + 1]),
            });
        }
    }
    SideDecomposition { side, pieces }
}

/// Builds the exact zone map of l.
pub fn exact_zone_map(l: &Chord) -> ZoneMap {
    let arr = build_arrangement(l);
    // Group same-kind edge-connected cells; a group collapses to one polygon
    // exactly when its union is convex. All-or-nothing keeps the output
    // canonical (partial pairwise merging would depend on merge order).
    let n = arr.cells.len();
    let mut group: Vec<usize> = (0..n).collect();
    fn find(group: &mut Vec<usize>, i: usize) -> usize {
        if group[i] != i {
            let root = find(group, group[i]);
            group[i] = root;
        }
        group[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if arr.cells[i].kind == arr.cells[j].kind
                && share_edge(&arr.cells[i].polygon, &arr.cells[j].polygon)
            {
                let (ri, rj) = (find(&mut group, i), find(&mut group, j));
                group[rj.max(ri)] = rj.min(ri);
            }
        }
    }
    let mut regions: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let root = find(&mut group, i);
        regions.entry(root).or_default().push(i);
    }
    let mut cells: Vec<ZoneCell> = Vec::new();
    for members in regions.values() {
        let polys: Vec<&Vec<Point2>> = members.iter().map(|&i| &arr.cells[i].polygon).collect();
        let merged = if polys.len() > 1 { region_union(&polys) } else { None };
        match merged {
            Some(u) => cells.push(ZoneCell {
                polygon: strip_collinear(&u),
                kind: arr.cells[members[0]].kind.clone(),
            }),
            None => cells.extend(members.iter().map(|&i| ZoneCell {
                polygon: strip_collinear(&arr.cells[i].polygon),
                kind: arr.cells[i].kind.clone(),
            })),
        }
    }
    let boundary = Side::all()
        .into_iter()
        .map(|side| side_decomposition(side, &arr.lines, l))
        .collect();
    let corner_names = ["A", "B", "C", "D"];
    let corners_map = corner_names
        .iter()
        .zip(corners())
        .map(|(name, p)| (name.to_string(), boundary_label(&p, l)))
        .collect();
    ZoneMap {
        cells,
        boundary,
        corners: corners_map,
    }
}

/// Exact per-kind measures and the headline degree of negation.
pub fn degree_of_negation(l: &Chord) -> DegreeOfNegation {
    let map = exact_zone_map(l);
    let two = Rational::from_int(2);
    let mut area: BTreeMap<String, Rational> = BTreeMap::new();
    let mut total = Rational::zero();
    for cell in &map.cells {
        let a = poly_area2(&cell.polygon) / two.clone();
        assert!(a.is_positive(), "cells have positive area");
        total += &a;
        *area
            .entry(cell.kind.label().to_string())
            .or_insert_with(Rational::zero) += &a;
    }
    assert_eq!(total, Rational::one(), "cells tile the unit square");

    let mut boundary: BTreeMap<String, Rational> = BTreeMap::new();
    let perimeter = Rational::from_int(4);
    for side in &map.boundary {
        for piece in &side.pieces {
            if piece.start == piece.end {
                continue;
            }
            let len = (&piece.end.x - &piece.start.x).abs() + (&piece.end.y - &piece.start.y).abs();
            *boundary
                .entry(piece.kind.label().to_string())
                .or_insert_with(Rational::zero) += &(len / perimeter.clone());
        }
    }

    let euclidean_area = area
        .get(ParallelKind::Euclidean.label())
        .cloned()
        .unwrap_or_else(Rational::zero);
    DegreeOfNegation {
        area,
        boundary,
        corners: map.corners,
        negation_degree_area: Rational::one() - euclidean_area,
    }
}
