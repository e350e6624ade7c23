//! End-to-end acceptance suite: one test per release criterion, each
//! printing a single PASS line with its measured evidence. Budgets are
//! enforced in wall-clock time on a single core.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use postulatum::oracle::{sweep_directions, sweep_disagreements};
use postulatum::sphere_plane::{classify_sphere, great_circles_meet, CircleIntersection, GreatCircle, SpherePoint};
use postulatum::square_model::{
    classify, classify_kind, degree_of_negation, exact_zone_map, explore_finite, random_instance,
    zone_measures_mc, Chord,
};
use postulatum::{denial_verdict, run_verify, ParallelKind, Point2, Rational};

fn ce() -> Chord {
    "1,1:0,1/2".parse().unwrap()
}

#[test]
fn criterion_1_paper_claim_suite() {
    let started = Instant::now();
    let report = run_verify(&Rational::new(1, 2), 0).unwrap();
    for claim in &report.claims {
        assert!(claim.pass, "claim failed: {} — {}", claim.name, claim.detail);
    }
    assert!(report.passed);
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "verify took {elapsed:?}, budget 1 s");
    println!(
        "criterion 1 PASS: all {} verify claims hold in {elapsed:?}",
        report.claims.len()
    );
}

#[test]
fn criterion_2_oracle_equivalence() {
    let started = Instant::now();
    let dirs = sweep_directions(10_000);
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE);
    let instances = 1_000;
    for i in 0..instances {
        let (p, l) = random_instance(&mut rng, 12);
        let cls = classify(&p, &l).expect("instance avoids the line");
        let bad = sweep_disagreements(&p, &l, &cls.parallels, &dirs);
        assert!(
            bad.is_empty(),
            "instance {i}: p={p} l={l} disagrees with the sweep oracle at {:?}",
            &bad[..bad.len().min(5)]
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "sweep took {elapsed:?}, budget 60 s");
    println!(
        "criterion 2 PASS: {instances} instances against a {}-direction sweep, zero disagreements, {elapsed:?}",
        dirs.len()
    );
}

#[test]
fn criterion_3_exact_vs_monte_carlo() {
    let started = Instant::now();
    let line = ce();
    let exact = degree_of_negation(&line);
    let reps = 100;
    let samples = 100_000;
    let mut hits = 0;
    for seed in 0..reps {
        let mc = zone_measures_mc(&line, samples, seed);
        let mut rep_ok = true;
        for (label, fraction) in &exact.area {
            let expected = fraction.to_f64();
            let (low, high) = match mc.kinds.get(label) {
                Some(interval) => (interval.wilson_low, interval.wilson_high),
                None => (0.0, 0.0),
            };
            if expected < low || expected > high {
                rep_ok = false;
            }
        }
        if rep_ok {
            hits += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(
        hits >= 95,
        "only {hits}/{reps} repetitions covered the exact areas at Wilson 99%"
    );
    assert!(elapsed.as_secs_f64() < 30.0, "MC took {elapsed:?}, budget 30 s");
    println!(
        "criterion 3 PASS: {hits}/{reps} repetitions of {samples} samples cover the exact areas, {elapsed:?}"
    );
}

#[test]
fn criterion_4_cell_constancy() {
    let line = ce();
    let map = exact_zone_map(&line);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut checked = 0;
    for cell in &map.cells {
        for _ in 0..100 {
            let p = random_interior_point(&mut rng, &cell.polygon);
            let kind = classify_kind(&p, &line).expect("interior points avoid the line");
            assert_eq!(
                kind,
                cell.kind,
                "interior point {p} of a {} cell classified {}",
                cell.kind.label(),
                kind.label()
            );
            checked += 1;
        }
    }
    println!(
        "criterion 4 PASS: {checked} interior samples across {} cells, zero violations",
        map.cells.len()
    );
}

/// A strictly interior point of a convex polygon: a random rational convex
/// combination of the vertices with strictly positive weights.
fn random_interior_point(rng: &mut ChaCha8Rng, polygon: &[Point2]) -> Point2 {
    let weights: Vec<i64> = polygon.iter().map(|_| rng.gen_range(1..=10)).collect();
    let total: i64 = weights.iter().sum();
    let mut x = Rational::zero();
    let mut y = Rational::zero();
    for (v, w) in polygon.iter().zip(&weights) {
        x = x + v.x.clone() * Rational::new(*w, total);
        y = y + v.y.clone() * Rational::new(*w, total);
    }
    Point2::new(x, y)
}

#[test]
fn criterion_5_sphere_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut random_triple = |what: &str| -> [i64; 3] {
        loop {
            let t = [
                rng.gen_range(-20i64..=20),
                rng.gen_range(-20i64..=20),
                rng.gen_range(-20i64..=20),
            ];
            if t != [0, 0, 0] {
                return t;
            }
            let _ = what;
        }
    };

    let pairs = 10_000;
    let mut identical = 0;
    for _ in 0..pairs {
        let [a, b, c] = random_triple("circle");
        let [d, e, f] = random_triple("circle");
        let c1 = GreatCircle::from_ints(a, b, c);
        let c2 = GreatCircle::from_ints(d, e, f);
        match great_circles_meet(&c1, &c2) {
            CircleIntersection::Identical => {
                assert_eq!(c1, c2, "distinct circles reported identical");
                identical += 1;
            }
            CircleIntersection::TwoPoints(p, q) => {
                assert_eq!(q, p.antipode(), "intersection points are not antipodal");
                assert!(c1.contains(&p) && c2.contains(&p), "point off its circles");
                assert!(c1.contains(&q) && c2.contains(&q), "antipode off its circles");
            }
        }
    }

    let points = 10_000;
    let mut classified = 0;
    while classified < points {
        let [a, b, c] = random_triple("circle");
        let [x, y, z] = random_triple("point");
        let l = GreatCircle::from_ints(a, b, c);
        let p = SpherePoint::from_ints(x, y, z);
        match classify_sphere(&p, &l) {
            Ok(kind) => {
                assert_eq!(kind, ParallelKind::Elliptic);
                classified += 1;
            }
            Err(_) => continue, // landed on the circle; not an off-circle sample
        }
    }
    println!(
        "criterion 5 PASS: {pairs} circle pairs ({identical} identical) meet antipodally; {points} off-circle points all elliptic"
    );
}

#[test]
fn criterion_6_denial_verdicts() {
    let budget = 100;
    let seed = 6;

    let square = denial_verdict("square", budget, seed).unwrap();
    assert!(square.denied, "square must be denied");
    assert!(
        square.behaviors.len() >= 3,
        "square shows only {:?}",
        square.behaviors
    );

    let both = denial_verdict("sphere-plane", budget, seed).unwrap();
    assert!(both.denied, "sphere-plane must be denied");
    let expected: BTreeSet<String> =
        ["elliptic".to_string(), "euclidean".to_string()].into_iter().collect();
    assert_eq!(both.behaviors, expected, "sphere-plane behaviors");

    let plane = denial_verdict("euclidean-plane", budget, seed).unwrap();
    assert!(!plane.denied, "the plane alone is not denied");

    let sphere = denial_verdict("sphere", budget, seed).unwrap();
    assert!(!sphere.denied, "the sphere alone is not denied");

    println!(
        "criterion 6 PASS: square denied with {:?}; sphere-plane denied with {:?}; plane and sphere not denied",
        square.behaviors, both.behaviors
    );
}

#[test]
fn criterion_7_measure_partition() {
    let degree = degree_of_negation(&ce());
    let one = Rational::one();
    let zero = Rational::zero();

    let area_sum: Rational = degree.area.values().cloned().fold(zero.clone(), |a, b| a + b);
    assert_eq!(area_sum, one, "area fractions must sum to 1");
    let boundary_sum: Rational =
        degree.boundary.values().cloned().fold(zero.clone(), |a, b| a + b);
    assert_eq!(boundary_sum, one, "boundary fractions must sum to 1");

    let euclid_area = degree.area.get("euclidean").cloned().unwrap_or_else(Rational::zero);
    assert_eq!(euclid_area, zero, "the Euclidean area fraction must be 0");
    let euclid_boundary = degree
        .boundary
        .get("euclidean")
        .cloned()
        .unwrap_or_else(Rational::zero);
    assert!(euclid_boundary > zero, "the Euclidean boundary fraction must be positive");

    assert_eq!(degree.negation_degree_area, one, "negation degree must be exactly 1");
    println!(
        "criterion 7 PASS: maps sum to 1; euclidean area 0, boundary {euclid_boundary}; negation degree {}",
        degree.negation_degree_area
    );
}

#[test]
fn criterion_8_countably_infinite_unreachable() {
    let report = explore_finite(100_000, 8);
    assert!(
        !report.kind_counts.contains_key("countably_infinite"),
        "CountablyInfinite appeared: {:?}",
        report.hits
    );
    println!(
        "criterion 8 PASS: {} instances, kind counts {:?}, no countably_infinite",
        report.instances, report.kind_counts
    );
}
