//! The pinned verification suite.
//!
//! Six claims, each checked from scratch at run time against a line CE with
//! E = (0, e) strictly interior to side DA (default e = 1/2):
//!
//! 1. N = (1/2, 1/4) is Hyperbolic, with the bounding pencil (u, v).
//! 2. Every sampled interior point of side AB is Euclidean with AB itself as
//!    the unique parallel (100 positions).
//! 3. D = (0, 1) is Elliptic, with at least eight verified blocking samples.
//! 4. Random great-circle pairs on the sphere always meet, in exactly two
//!    antipodal points unless identical (10^3 pairs).
//! 5. The cutting circle C is a line of the sphere but not of the plane.
//! 6. The registered models receive their expected denial verdicts.
//!
//! Failures name the claim; the suite never stops early, so one run reports
//! every broken claim at once.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::axiom::denial_verdict;
use crate::exact_geom::Point2;
use crate::kind::ParallelKind;
use crate::rational::Rational;
use crate::sphere_plane::{
    dual_status_of_c, great_circles_meet, CircleIntersection, GreatCircle, ModelM,
};
use crate::square_model::{chord_validate, classify, corner_c, corner_d, Chord};

/// One row of the verification table.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClaimResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl ClaimResult {
    fn new(name: &str, pass: bool, detail: String) -> ClaimResult {
        ClaimResult {
            name: name.to_string(),
            pass,
            detail,
        }
    }
}

/// The whole table plus the verdict.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub line: Chord,
    pub seed: u64,
    pub claims: Vec<ClaimResult>,
    pub passed: bool,
}

/// E must lie strictly between D and A on side DA.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("E = (0, {0}) is not strictly interior to side DA; need 0 < e < 1")]
pub struct InvalidE(pub Rational);

/// The line CE for E = (0, e), e strictly interior to DA.
pub fn line_through_ce(e: &Rational) -> Result<Chord, InvalidE> {
    if *e <= Rational::zero() || *e >= Rational::one() {
        return Err(InvalidE(e.clone()));
    }
    let ce = chord_validate(corner_c(), Point2::new(Rational::zero(), e.clone()))
        .expect("C and interior E lie on opposite sides");
    Ok(ce)
}

/// Runs the six claims against CE and returns the table.
pub fn run_verify(e: &Rational, seed: u64) -> Result<VerifyReport, InvalidE> {
    let l = line_through_ce(e)?;
    let claims = vec![
        claim_n_hyperbolic(&l),
        claim_ab_euclidean(&l),
        claim_d_elliptic(&l),
        claim_circles_meet(seed),
        claim_dual_status(),
        claim_denials(seed),
    ];
    let passed = claims.iter().all(|c| c.pass);
    Ok(VerifyReport {
        line: l,
        seed,
        claims,
        passed,
    })
}

fn claim_n_hyperbolic(l: &Chord) -> ClaimResult {
    let name = "N=(1/2,1/4) hyperbolic with pencil (u,v)";
    let n = Point2::new(Rational::new(1, 2), Rational::new(1, 4));
    let c = match classify(&n, l) {
        Ok(c) => c,
        Err(e) => return ClaimResult::new(name, false, format!("classification failed: {e}")),
    };
    if c.kind != ParallelKind::Hyperbolic {
        return ClaimResult::new(name, false, format!("kind is {}", c.kind.label()));
    }
    match c.witnesses.bounding_pencil {
        Some((u, v)) => ClaimResult::new(name, true, format!("u = {u}, v = {v}")),
        None => ClaimResult::new(name, false, "no bounding pencil produced".to_string()),
    }
}

fn claim_ab_euclidean(l: &Chord) -> ClaimResult {
    let name = "interior of AB euclidean with unique parallel AB";
    let ab = chord_validate(
        Point2::new(Rational::zero(), Rational::zero()),
        Point2::new(Rational::one(), Rational::zero()),
    )
    .expect("AB is a chord");
    let positions = 100;
    for i in 1..=positions {
        let m = Point2::new(Rational::new(i, positions + 1), Rational::zero());
        let c = match classify(&m, l) {
            Ok(c) => c,
            Err(e) => {
                return ClaimResult::new(name, false, format!("at {m}: classification failed: {e}"))
            }
        };
        if c.kind != ParallelKind::Euclidean {
            return ClaimResult::new(name, false, format!("at {m}: kind is {}", c.kind.label()));
        }
        match c.witnesses.unique_parallel {
            Some(p) if p == ab => {}
            Some(p) => {
                return ClaimResult::new(name, false, format!("at {m}: parallel is {p}, not AB"))
            }
            None => return ClaimResult::new(name, false, format!("at {m}: no parallel witness")),
        }
    }
    ClaimResult::new(name, true, format!("{positions} positions, all parallel to {ab}"))
}

fn claim_d_elliptic(l: &Chord) -> ClaimResult {
    let name = "D=(0,1) elliptic with 8 blocking samples";
    let d = corner_d();
    let c = match classify(&d, l) {
        Ok(c) => c,
        Err(e) => return ClaimResult::new(name, false, format!("classification failed: {e}")),
    };
    if c.kind != ParallelKind::Elliptic {
        return ClaimResult::new(name, false, format!("kind is {}", c.kind.label()));
    }
    let samples = &c.witnesses.blocking_samples;
    if samples.len() < 8 {
        return ClaimResult::new(name, false, format!("only {} blocking samples", samples.len()));
    }
    for (dir, q) in samples {
        let chord = match crate::square_model::chord_through(&d, dir) {
            Some(chord) => chord,
            None => {
                return ClaimResult::new(name, false, format!("direction {dir} carries no chord"))
            }
        };
        if !chord.contains(q) || !l.contains(q) {
            return ClaimResult::new(
                name,
                false,
                format!("intersection {q} not on both chords for direction {dir}"),
            );
        }
    }
    ClaimResult::new(name, true, format!("{} samples, each meets l exactly", samples.len()))
}

fn claim_circles_meet(seed: u64) -> ClaimResult {
    let name = "10^3 great-circle pairs all meet antipodally";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_circle = || loop {
        let x = rng.gen_range(-9i64..=9);
        let y = rng.gen_range(-9i64..=9);
        let z = rng.gen_range(-9i64..=9);
        if (x, y, z) != (0, 0, 0) {
            return GreatCircle::from_ints(x, y, z);
        }
    };
    let mut identical = 0u32;
    for i in 0..1000 {
        let c1 = random_circle();
        let c2 = random_circle();
        match great_circles_meet(&c1, &c2) {
            CircleIntersection::Identical => {
                if c1 != c2 {
                    return ClaimResult::new(
                        name,
                        false,
                        format!("pair {i}: distinct circles {c1}, {c2} reported identical"),
                    );
                }
                identical += 1;
            }
            CircleIntersection::TwoPoints(p, q) => {
                if q != p.antipode() {
                    return ClaimResult::new(name, false, format!("pair {i}: {q} is not -({p})"));
                }
                if !(c1.contains(&p) && c2.contains(&p)) {
                    return ClaimResult::new(
                        name,
                        false,
                        format!("pair {i}: {p} is not on both circles"),
                    );
                }
            }
        }
    }
    ClaimResult::new(name, true, format!("1000 pairs ({identical} identical)"))
}

fn claim_dual_status() -> ClaimResult {
    let name = "C is a line of the sphere but not of the plane";
    let status = dual_status_of_c(&ModelM);
    if !status.is_line_on_sphere || status.is_line_in_plane {
        return ClaimResult::new(
            name,
            false,
            format!(
                "status is ({}, {})",
                status.is_line_on_sphere, status.is_line_in_plane
            ),
        );
    }
    let [a, b, c] = &status.witness;
    let cross = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    if cross == Rational::zero() {
        return ClaimResult::new(name, false, "witness points are collinear".to_string());
    }
    ClaimResult::new(name, true, format!("witnesses {a}; {b}; {c} are not collinear"))
}

fn claim_denials(seed: u64) -> ClaimResult {
    let name = "denial verdicts for all four registered models";
    let budget = 60;
    let square = denial_verdict("square", budget, seed).expect("registered");
    let sphere = denial_verdict("sphere", budget, seed).expect("registered");
    let plane = denial_verdict("euclidean-plane", budget, seed).expect("registered");
    let both = denial_verdict("sphere-plane", budget, seed).expect("registered");
    let mut failures = Vec::new();
    if !square.denied || square.behaviors.len() < 3 {
        failures.push(format!(
            "square: denied={} with {} behaviors",
            square.denied,
            square.behaviors.len()
        ));
    }
    if sphere.denied {
        failures.push("sphere: denied".to_string());
    }
    if plane.denied {
        failures.push("euclidean-plane: denied".to_string());
    }
    let expected: Vec<&str> = vec!["elliptic", "euclidean"];
    let got: Vec<&str> = both.behaviors.iter().map(|s| s.as_str()).collect();
    if !both.denied || got != expected {
        failures.push(format!("sphere-plane: denied={} behaviors={got:?}", both.denied));
    }
    if failures.is_empty() {
        ClaimResult::new(
            name,
            true,
            format!(
                "square denied ({} behaviors); sphere-plane denied (euclidean+elliptic); plane and sphere not denied",
                square.behaviors.len()
            ),
        )
    } else {
        ClaimResult::new(name, false, failures.join("; "))
    }
}
