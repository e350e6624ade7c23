//! The plane-plus-sphere space: a Euclidean plane α = {z = 0} cutting the
//! unit sphere S along its equator C.
//!
//! C carries two representations at once. As a great circle of S it is a line
//! of the spherical geometry; as a point set of α it is a circle, not a line.
//! Points and normals are exact rational rays — never normalized to unit
//! length, since that would introduce irrationals — and every predicate here
//! (incidence, antipodality, parallelism of normals) is a scale-invariant
//! sign or zero test on integer triples.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact_geom::{orient, Point2};
use crate::kind::ParallelKind;
use crate::rational::Rational;

// ---------------------------------------------------------------------------
// Canonical integer triples.

/// Parse error for the `x,y,z` triple grammar.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseTripleError {
    #[error("expected `x,y,z` with three rational components, got `{0}`")]
    Malformed(String),
    #[error("invalid component in `{0}`: {1}")]
    Component(String, crate::rational::ParseRationalError),
    #[error("the zero triple does not denote a {0}")]
    Zero(&'static str),
}

/// Clears denominators and divides through by the gcd. The result is the
/// unique primitive integer triple with the same ratios and the same signs.
fn primitive_triple(x: &Rational, y: &Rational, z: &Rational) -> Option<[BigInt; 3]> {
    let common = x.denom() * y.denom() * z.denom();
    let nx = x.numer() * (&common / x.denom());
    let ny = y.numer() * (&common / y.denom());
    let nz = z.numer() * (&common / z.denom());
    let g = nx.gcd(&ny).gcd(&nz);
    if g.is_zero() {
        return None;
    }
    Some([nx / &g, ny / &g, nz / &g])
}

fn first_nonzero_negative(t: &[BigInt; 3]) -> bool {
    for c in t {
        if !c.is_zero() {
            return c.is_negative();
        }
    }
    false
}

fn parse_triple(s: &str, what: &'static str) -> Result<[BigInt; 3], ParseTripleError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(ParseTripleError::Malformed(s.to_string()));
    }
    let mut vals = Vec::with_capacity(3);
    for part in parts {
        let r: Rational = part
            .parse()
            .map_err(|e| ParseTripleError::Component(s.to_string(), e))?;
        vals.push(r);
    }
    primitive_triple(&vals[0], &vals[1], &vals[2]).ok_or(ParseTripleError::Zero(what))
}

fn fmt_triple(t: &[BigInt; 3], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{},{},{}", t[0], t[1], t[2])
}

fn cross(a: &[BigInt; 3], b: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot(a: &[BigInt; 3], b: &[BigInt; 3]) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

// ---------------------------------------------------------------------------
// Types.

/// A great circle of the unit sphere: the points orthogonal to `normal`.
/// n and λn (λ ≠ 0) denote the same circle, so the normal is kept primitive
/// with its first nonzero component positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GreatCircle {
    normal: [BigInt; 3],
}

impl GreatCircle {
    pub fn new(x: &Rational, y: &Rational, z: &Rational) -> Option<GreatCircle> {
        let mut normal = primitive_triple(x, y, z)?;
        if first_nonzero_negative(&normal) {
            for c in &mut normal {
                *c = -std::mem::take(c);
            }
        }
        Some(GreatCircle { normal })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> GreatCircle {
        GreatCircle::new(&Rational::from_int(x), &Rational::from_int(y), &Rational::from_int(z))
            .expect("nonzero normal")
    }

    pub fn normal(&self) -> &[BigInt; 3] {
        &self.normal
    }

    /// Whether the sphere point lies on the circle.
    pub fn contains(&self, p: &SpherePoint) -> bool {
        dot(&self.normal, &p.ray).is_zero()
    }
}

impl fmt::Display for GreatCircle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_triple(&self.normal, f)
    }
}

impl FromStr for GreatCircle {
    type Err = ParseTripleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut normal = parse_triple(s, "great circle")?;
        if first_nonzero_negative(&normal) {
            for c in &mut normal {
                *c = -std::mem::take(c);
            }
        }
        Ok(GreatCircle { normal })
    }
}

/// A point of the unit sphere, held as the exact rational ray toward it.
/// Sign is significant: `r` and `−r` are antipodal, distinct points.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SpherePoint {
    ray: [BigInt; 3],
}

impl SpherePoint {
    pub fn new(x: &Rational, y: &Rational, z: &Rational) -> Option<SpherePoint> {
        primitive_triple(x, y, z).map(|ray| SpherePoint { ray })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> SpherePoint {
        SpherePoint::new(&Rational::from_int(x), &Rational::from_int(y), &Rational::from_int(z))
            .expect("nonzero ray")
    }

    pub fn ray(&self) -> &[BigInt; 3] {
        &self.ray
    }

    pub fn antipode(&self) -> SpherePoint {
        let ray = [-&self.ray[0], -&self.ray[1], -&self.ray[2]];
        SpherePoint { ray }
    }

    pub fn is_antipode_of(&self, other: &SpherePoint) -> bool {
        *self == other.antipode()
    }

    fn from_raw(ray: [BigInt; 3]) -> Option<SpherePoint> {
        let g = ray[0].gcd(&ray[1]).gcd(&ray[2]);
        if g.is_zero() {
            return None;
        }
        Some(SpherePoint {
            ray: [&ray[0] / &g, &ray[1] / &g, &ray[2] / &g],
        })
    }

    /// The exact planar coordinates of this point when it lies on the
    /// equator and its unit scaling is rational (the ray's norm² is a perfect
    /// square); `None` otherwise.
    fn unit_planar(&self) -> Option<Point2> {
        if !self.ray[2].is_zero() {
            return None;
        }
        let n = &self.ray[0] * &self.ray[0] + &self.ray[1] * &self.ray[1];
        let s = n.sqrt();
        if &s * &s != n {
            return None;
        }
        Some(Point2::new(
            Rational::from_big(self.ray[0].clone(), s.clone()),
            Rational::from_big(self.ray[1].clone(), s),
        ))
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_triple(&self.ray, f)
    }
}

impl FromStr for SpherePoint {
    type Err = ParseTripleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_triple(s, "sphere point").map(|ray| SpherePoint { ray })
    }
}

/// A line ax + by + c = 0 of the plane α, in primitive integer form with the
/// first nonzero coefficient of (a, b) positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PlanarLine {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl PlanarLine {
    pub fn new(a: &Rational, b: &Rational, c: &Rational) -> Option<PlanarLine> {
        if a.is_zero() && b.is_zero() {
            return None;
        }
        let mut t = primitive_triple(a, b, c)?;
        if first_nonzero_negative(&t) {
            for coeff in &mut t {
                *coeff = -std::mem::take(coeff);
            }
        }
        let [a, b, c] = t;
        Some(PlanarLine { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> PlanarLine {
        PlanarLine::new(&Rational::from_int(a), &Rational::from_int(b), &Rational::from_int(c))
            .expect("(a, b) must not both be zero")
    }

    pub fn coefficients(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c)
    }

    pub fn eval(&self, p: &Point2) -> Rational {
        Rational::from_big(self.a.clone(), BigInt::from(1)) * p.x.clone()
            + Rational::from_big(self.b.clone(), BigInt::from(1)) * p.y.clone()
            + Rational::from_big(self.c.clone(), BigInt::from(1))
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.eval(p).is_zero()
    }
}

impl fmt::Display for PlanarLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_triple(&[self.a.clone(), self.b.clone(), self.c.clone()], f)
    }
}

impl FromStr for PlanarLine {
    type Err = ParseTripleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut t = parse_triple(s, "planar line")?;
        if t[0].is_zero() && t[1].is_zero() {
            return Err(ParseTripleError::Zero("planar line"));
        }
        if first_nonzero_negative(&t) {
            for coeff in &mut t {
                *coeff = -std::mem::take(coeff);
            }
        }
        let [a, b, c] = t;
        Ok(PlanarLine { a, b, c })
    }
}

macro_rules! string_serde {
    ($ty:ident) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.serialize_str(&self.to_string())
            }
        }
        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                let s = String::deserialize(deserializer)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

string_serde!(GreatCircle);
string_serde!(SpherePoint);
string_serde!(PlanarLine);

/// The fixed space: α = {z = 0}, S the unit sphere, C their intersection.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ModelM;

impl ModelM {
    /// The equatorial circle C.
    pub fn circle(&self) -> GreatCircle {
        GreatCircle::from_ints(0, 0, 1)
    }
}

// ---------------------------------------------------------------------------
// Errors and operations.

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SphereError {
    #[error("point {0} lies on the great circle")]
    PointOnCircle(SpherePoint),
    #[error("point {0} lies on the planar line")]
    PointOnPlanarLine(Point2),
    #[error("{0} and {1} are antipodal: the great circle through them is not unique")]
    AntipodalPair(SpherePoint, SpherePoint),
    #[error("the two points coincide at {0}")]
    CoincidentPoints(SpherePoint),
    #[error("point {0} is not on C: its ray leaves the plane z = 0")]
    NotOnC(SpherePoint),
    #[error("point {0} has no rational planar coordinates (its norm² is not a perfect square)")]
    IrrationalUnitPoint(SpherePoint),
}

/// How two great circles meet.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CircleIntersection {
    Identical,
    /// Two exactly antipodal points, the ± cross product of the normals;
    /// the listed point is the one whose first nonzero component is positive.
    TwoPoints(SpherePoint, SpherePoint),
}

pub fn great_circles_meet(c1: &GreatCircle, c2: &GreatCircle) -> CircleIntersection {
    let raw = cross(c1.normal(), c2.normal());
    match SpherePoint::from_raw(raw) {
        None => CircleIntersection::Identical,
        Some(p) => {
            let p = if first_nonzero_negative(&p.ray) {
                p.antipode()
            } else {
                p
            };
            let antipode = p.antipode();
            CircleIntersection::TwoPoints(p, antipode)
        }
    }
}

/// On the sphere no line through p misses l: always Elliptic.
pub fn classify_sphere(p: &SpherePoint, l: &GreatCircle) -> Result<ParallelKind, SphereError> {
    if l.contains(p) {
        return Err(SphereError::PointOnCircle(p.clone()));
    }
    Ok(ParallelKind::Elliptic)
}

/// In the plane there is exactly one parallel: Euclidean, with the witness
/// line ax + by + c' = 0 through p.
pub fn classify_plane(
    p: &Point2,
    l: &PlanarLine,
) -> Result<(ParallelKind, PlanarLine), SphereError> {
    if l.contains(p) {
        return Err(SphereError::PointOnPlanarLine(p.clone()));
    }
    let a = Rational::from_big(l.a.clone(), BigInt::from(1));
    let b = Rational::from_big(l.b.clone(), BigInt::from(1));
    let c = -(a.clone() * p.x.clone() + b.clone() * p.y.clone());
    let parallel = PlanarLine::new(&a, &b, &c).expect("(a, b) inherited from a valid line");
    Ok((ParallelKind::Euclidean, parallel))
}

/// C's status in each carrier space, with the planar witness points showing
/// it is not a line of α.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DualStatus {
    pub is_line_on_sphere: bool,
    pub is_line_in_plane: bool,
    /// Three points of C in α's coordinates; non-collinear, so no PlanarLine
    /// holds all of C.
    pub witness: [Point2; 3],
}

pub fn dual_status_of_c(_m: &ModelM) -> DualStatus {
    let witness = [
        Point2::new(Rational::one(), Rational::zero()),
        Point2::new(Rational::zero(), Rational::one()),
        Point2::new(-Rational::one(), Rational::zero()),
    ];
    let collinear = orient(&witness[0], &witness[1], &witness[2]) == 0;
    DualStatus {
        // C is a great circle of S by construction, hence a spherical line.
        is_line_on_sphere: true,
        is_line_in_plane: collinear,
        witness,
    }
}

/// The two simultaneous representations of the segment/arc AB on C.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DualRepresentation {
    pub planar: PlanarLine,
    pub spherical: GreatCircle,
    pub shared_points: (SpherePoint, SpherePoint),
}

/// The line of α and the great circle of S through two points of C.
///
/// The planar coordinates of a point of C are rational exactly when its
/// ray's norm² is a perfect square (e.g. (3,4,0) → (3/5, 4/5)); other rays
/// are rejected so the computation stays exact.
pub fn dual_representation_of_ab(
    a: &SpherePoint,
    b: &SpherePoint,
) -> Result<DualRepresentation, SphereError> {
    if !a.ray[2].is_zero() {
        return Err(SphereError::NotOnC(a.clone()));
    }
    if !b.ray[2].is_zero() {
        return Err(SphereError::NotOnC(b.clone()));
    }
    if a == b {
        return Err(SphereError::CoincidentPoints(a.clone()));
    }
    if a.is_antipode_of(b) {
        return Err(SphereError::AntipodalPair(a.clone(), b.clone()));
    }
    let pa = a
        .unit_planar()
        .ok_or_else(|| SphereError::IrrationalUnitPoint(a.clone()))?;
    let pb = b
        .unit_planar()
        .ok_or_else(|| SphereError::IrrationalUnitPoint(b.clone()))?;
    let la = &pb.y - &pa.y;
    let lb = &pa.x - &pb.x;
    let lc = -(la.clone() * pa.x.clone() + lb.clone() * pa.y.clone());
    let planar = PlanarLine::new(&la, &lb, &lc).expect("distinct points span a line");
    let normal = cross(&a.ray, &b.ray);
    let spherical = GreatCircle::new(
        &Rational::from_big(normal[0].clone(), BigInt::from(1)),
        &Rational::from_big(normal[1].clone(), BigInt::from(1)),
        &Rational::from_big(normal[2].clone(), BigInt::from(1)),
    )
    .expect("non-antipodal distinct rays have a nonzero cross product");
    Ok(DualRepresentation {
        planar,
        spherical,
        shared_points: (a.clone(), b.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn sp(s: &str) -> SpherePoint {
        s.parse().unwrap()
    }

    fn gc(s: &str) -> GreatCircle {
        s.parse().unwrap()
    }

    #[test]
    fn axes_circles_meet_on_the_x_axis() {
        let m = great_circles_meet(&gc("0,0,1"), &gc("0,1,0"));
        assert_eq!(
            m,
            CircleIntersection::TwoPoints(sp("1,0,0"), sp("-1,0,0"))
        );
    }

    #[test]
    fn parallel_normals_are_the_same_circle() {
        assert_eq!(
            great_circles_meet(&gc("0,0,1"), &"0,0,-3".parse().unwrap()),
            CircleIntersection::Identical
        );
        assert_eq!(gc("0,0,-3"), gc("0,0,1"));
    }

    #[test]
    fn diagonal_circles_meet_at_the_poles() {
        let m = great_circles_meet(&gc("1,1,0"), &gc("1,-1,0"));
        assert_eq!(
            m,
            CircleIntersection::TwoPoints(sp("0,0,1"), sp("0,0,-1"))
        );
    }

    #[test]
    fn intersection_points_lie_on_both_circles() {
        let (c1, c2) = (gc("2,3,5"), gc("1,0,-1"));
        match great_circles_meet(&c1, &c2) {
            CircleIntersection::TwoPoints(p, q) => {
                assert!(c1.contains(&p) && c2.contains(&p));
                assert!(c1.contains(&q) && c2.contains(&q));
                assert!(p.is_antipode_of(&q));
            }
            CircleIntersection::Identical => panic!("distinct circles"),
        }
    }

    #[test]
    fn sphere_classification_is_elliptic_everywhere() {
        assert_eq!(
            classify_sphere(&sp("0,0,1"), &ModelM.circle()).unwrap(),
            ParallelKind::Elliptic
        );
        assert_eq!(
            classify_sphere(&sp("1,1,1"), &gc("1,0,0")).unwrap(),
            ParallelKind::Elliptic
        );
        // The dot product is 1, not 0: this point is off the circle.
        assert_eq!(
            classify_sphere(&sp("1,0,0"), &gc("1,0,0")).unwrap(),
            ParallelKind::Elliptic
        );
    }

    #[test]
    fn on_circle_point_is_rejected() {
        assert_eq!(
            classify_sphere(&sp("0,1,0"), &gc("1,0,0")),
            Err(SphereError::PointOnCircle(sp("0,1,0")))
        );
    }

    #[test]
    fn plane_classification_is_euclidean_with_the_unique_parallel() {
        let p = Point2::new(rat(0, 1), rat(0, 1));
        let (kind, parallel) = classify_plane(&p, &PlanarLine::from_ints(1, 0, -1)).unwrap();
        assert_eq!(kind, ParallelKind::Euclidean);
        assert_eq!(parallel, PlanarLine::from_ints(1, 0, 0));

        let p = Point2::new(rat(1, 1), rat(2, 1));
        let (_, parallel) = classify_plane(&p, &PlanarLine::from_ints(0, 1, 0)).unwrap();
        assert_eq!(parallel, PlanarLine::from_ints(0, 1, -2));

        let p = Point2::new(rat(1, 2), rat(1, 3));
        let (_, parallel) = classify_plane(&p, &PlanarLine::from_ints(2, 3, -6)).unwrap();
        assert_eq!(parallel, PlanarLine::from_ints(2, 3, -2));
    }

    #[test]
    fn on_line_planar_point_is_rejected() {
        let p = Point2::new(rat(3, 1), rat(0, 1));
        assert_eq!(
            classify_plane(&p, &PlanarLine::from_ints(0, 1, 0)),
            Err(SphereError::PointOnPlanarLine(p))
        );
    }

    #[test]
    fn c_is_a_line_on_the_sphere_but_not_in_the_plane() {
        let status = dual_status_of_c(&ModelM);
        assert!(status.is_line_on_sphere);
        assert!(!status.is_line_in_plane);
        assert_ne!(orient(&status.witness[0], &status.witness[1], &status.witness[2]), 0);
        for w in &status.witness {
            assert_eq!(&w.x * &w.x + &w.y * &w.y, Rational::one());
        }
    }

    #[test]
    fn ab_has_both_representations() {
        let rep = dual_representation_of_ab(&sp("1,0,0"), &sp("0,1,0")).unwrap();
        assert_eq!(rep.planar, PlanarLine::from_ints(1, 1, -1));
        assert_eq!(rep.spherical, ModelM.circle());
        assert_eq!(rep.shared_points, (sp("1,0,0"), sp("0,1,0")));
    }

    #[test]
    fn pythagorean_rays_get_exact_planar_coordinates() {
        let rep = dual_representation_of_ab(&sp("3,4,0"), &sp("0,1,0")).unwrap();
        assert_eq!(rep.planar, PlanarLine::from_ints(1, 3, -3));
        assert_eq!(rep.spherical, ModelM.circle());
    }

    #[test]
    fn chord_and_circle_share_exactly_the_two_points() {
        // Substitute the chord into x² + y² = 1: the quadratic in the segment
        // parameter t must have exactly the roots t = 0 and t = 1.
        for (a, b) in [
            (sp("1,0,0"), sp("0,1,0")),
            (sp("3,4,0"), sp("0,1,0")),
            (sp("3,4,0"), sp("-5,12,0")),
        ] {
            let pa = a.unit_planar().unwrap();
            let pb = b.unit_planar().unwrap();
            let dx = &pb.x - &pa.x;
            let dy = &pb.y - &pa.y;
            // |pa + t·d|² − 1 = (d·d) t² + 2(pa·d) t + (|pa|² − 1).
            let qa = &dx * &dx + &dy * &dy;
            let qb = (&pa.x * &dx + &pa.y * &dy) * rat(2, 1);
            let qc = &pa.x * &pa.x + &pa.y * &pa.y - Rational::one();
            assert!(qc.is_zero(), "t = 0 is a root");
            assert_eq!(qa.clone() + qb, Rational::zero(), "t = 1 is the other root");
            assert!(!qa.is_zero());
        }
    }

    #[test]
    fn degenerate_pairs_are_rejected() {
        assert_eq!(
            dual_representation_of_ab(&sp("1,0,0"), &sp("-1,0,0")),
            Err(SphereError::AntipodalPair(sp("1,0,0"), sp("-1,0,0")))
        );
        assert_eq!(
            dual_representation_of_ab(&sp("1,0,0"), &sp("2,0,0")),
            Err(SphereError::CoincidentPoints(sp("1,0,0")))
        );
        assert_eq!(
            dual_representation_of_ab(&sp("0,0,1"), &sp("0,1,0")),
            Err(SphereError::NotOnC(sp("0,0,1")))
        );
        assert_eq!(
            dual_representation_of_ab(&sp("1,1,0"), &sp("0,1,0")),
            Err(SphereError::IrrationalUnitPoint(sp("1,1,0")))
        );
    }

    #[test]
    fn triple_grammar_round_trips() {
        for s in ["1,0,0", "-1,2,3", "0,0,1"] {
            assert_eq!(s.parse::<SpherePoint>().unwrap().to_string(), s);
        }
        // Rational components reduce to the primitive integer ray.
        assert_eq!(sp("1/2,1/3,0").to_string(), "3,2,0");
        // Circles forget the normal's sign, points keep it.
        assert_eq!(gc("-1,2,3").to_string(), "1,-2,-3");
        assert_eq!(sp("-2,4,6").to_string(), "-1,2,3");
        assert!("1,2".parse::<SpherePoint>().is_err());
        assert!("0,0,0".parse::<SpherePoint>().is_err());
        assert!("0,0,5".parse::<PlanarLine>().is_err());
        assert!("1,0.5,0".parse::<SpherePoint>().is_err());
    }
}
