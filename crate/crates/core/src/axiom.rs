//! The denied-axiom framework.
//!
//! An axiom is Smarandachely denied in a space when it behaves in at least
//! two distinct ways there — validated and invalidated, or invalidated in
//! several distinct ways. The axiom under test is fixed: the parallel
//! postulate, whose behavior at an instance is a [`ParallelKind`]. Models
//! plug in as samplers plus a pointwise behavior function; verdicts carry
//! one witness instance per observed behavior.
//!
//! Sampling-based denial is sound, not complete: a verdict of `denied =
//! false` after `budget` instances is evidence, not proof, except for the
//! reference models whose behavior is analytically constant (`analytic`).

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::exact_geom::Point2;
use crate::kind::ParallelKind;
use crate::rational::Rational;
use crate::sphere_plane::{classify_plane, classify_sphere, GreatCircle, PlanarLine, SpherePoint};
use crate::square_model::{classify_kind, random_point, Chord};

/// One examined (point, line) instance, in the owning model's text grammar.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Instance {
    pub model: String,
    pub point: String,
    pub line: String,
}

impl Instance {
    fn new(model: &str, point: impl ToString, line: impl ToString) -> Instance {
        Instance {
            model: model.to_string(),
            point: point.to_string(),
            line: line.to_string(),
        }
    }
}

/// A pluggable geometry model: deterministic instance sampling plus the
/// parallel-postulate behavior at each instance.
pub trait GeometryModel {
    fn name(&self) -> &str;

    /// Instances examined before any sampling, whatever the budget.
    fn critical_instances(&self) -> Vec<Instance>;

    /// `count` pseudo-random valid instances; deterministic per seed, and
    /// prefix-stable (a smaller count yields a prefix of a larger one).
    fn sample_instances(&self, count: u64, seed: u64) -> Vec<Instance>;

    /// The behavior at an instance produced by this model.
    fn behavior(&self, instance: &Instance) -> ParallelKind;

    /// True when one behavior holds everywhere by theorem, making sampled
    /// non-denial exact rather than probabilistic.
    fn analytic(&self) -> bool {
        false
    }
}

/// The verdict: denied iff at least two behaviors were observed.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DenialVerdict {
    pub model: String,
    pub denied: bool,
    /// Kind labels, sorted.
    pub behaviors: BTreeSet<String>,
    /// One witness instance per observed behavior.
    pub witnesses: BTreeMap<String, Instance>,
    pub instances_examined: u64,
    /// Whether non-denial is analytic (see [`GeometryModel::analytic`]).
    pub analytic: bool,
}

impl DenialVerdict {
    fn finish(
        model: String,
        behaviors: BTreeSet<String>,
        witnesses: BTreeMap<String, Instance>,
        instances_examined: u64,
        analytic: bool,
    ) -> DenialVerdict {
        let denied = behaviors.len() >= 2;
        debug_assert_eq!(
            behaviors,
            witnesses.keys().cloned().collect::<BTreeSet<_>>(),
            "every behavior carries a witness"
        );
        DenialVerdict {
            model,
            denied,
            behaviors,
            witnesses,
            instances_examined,
            analytic,
        }
    }
}

/// Examines the model's critical instances, then up to `budget` sampled
/// ones, stopping early once two behaviors are witnessed.
pub fn smarandachely_denied(
    model: &dyn GeometryModel,
    budget: u64,
    seed: u64,
) -> DenialVerdict {
    assert!(budget >= 1, "budget must be at least 1");
    let mut behaviors: BTreeSet<String> = BTreeSet::new();
    let mut witnesses: BTreeMap<String, Instance> = BTreeMap::new();
    let mut examined = 0u64;
    let consider = |inst: Instance,
                        behaviors: &mut BTreeSet<String>,
                        witnesses: &mut BTreeMap<String, Instance>| {
        let label = model.behavior(&inst).label().to_string();
        if behaviors.insert(label.clone()) {
            witnesses.insert(label, inst);
        }
    };
    for inst in model.critical_instances() {
        examined += 1;
        consider(inst, &mut behaviors, &mut witnesses);
    }
    if behaviors.len() < 2 {
        for inst in model.sample_instances(budget, seed) {
            examined += 1;
            consider(inst, &mut behaviors, &mut witnesses);
            if behaviors.len() >= 2 {
                break;
            }
        }
    }
    DenialVerdict::finish(
        model.name().to_string(),
        behaviors,
        witnesses,
        examined,
        model.analytic(),
    )
}

/// An ordered collection of models evaluated as one heterogeneous space.
pub struct MultiSpace {
    name: String,
    models: Vec<Box<dyn GeometryModel>>,
}

impl MultiSpace {
    pub fn new(name: impl ToString, models: Vec<Box<dyn GeometryModel>>) -> MultiSpace {
        assert!(!models.is_empty(), "a multi-space joins at least one model");
        MultiSpace {
            name: name.to_string(),
            models,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

/// Splits the budget evenly and unions the per-model behaviors.
pub fn multispace_denied(ms: &MultiSpace, budget: u64, seed: u64) -> DenialVerdict {
    assert!(budget >= 1, "budget must be at least 1");
    let per_model = (budget / ms.models.len() as u64).max(1);
    let mut behaviors: BTreeSet<String> = BTreeSet::new();
    let mut witnesses: BTreeMap<String, Instance> = BTreeMap::new();
    let mut examined = 0u64;
    let mut analytic = true;
    for model in &ms.models {
        let verdict = smarandachely_denied(model.as_ref(), per_model, seed);
        examined += verdict.instances_examined;
        analytic &= verdict.analytic;
        for (label, witness) in verdict.witnesses {
            if behaviors.insert(label.clone()) {
                witnesses.insert(label, witness);
            }
        }
    }
    DenialVerdict::finish(ms.name.clone(), behaviors, witnesses, examined, analytic)
}

// ---------------------------------------------------------------------------
// The registered models.

fn random_rational(rng: &mut ChaCha8Rng, max_den: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(0..=den);
    Rational::new(num, den)
}

/// The square-chord model over a fixed line.
pub struct SquareModel {
    line: Chord,
}

impl SquareModel {
    pub fn new(line: Chord) -> SquareModel {
        SquareModel { line }
    }

    /// The default line CE.
    pub fn default_line() -> Chord {
        "1,1:0,1/2".parse().expect("CE is a valid chord")
    }
}

impl Default for SquareModel {
    fn default() -> SquareModel {
        SquareModel::new(SquareModel::default_line())
    }
}

impl GeometryModel for SquareModel {
    fn name(&self) -> &str {
        "square"
    }

    fn critical_instances(&self) -> Vec<Instance> {
        // N, M, the four corners; anything on the line is skipped.
        let candidates = [
            Point2::new(Rational::new(1, 2), Rational::new(1, 4)),
            Point2::new(Rational::new(1, 2), Rational::zero()),
            Point2::new(Rational::zero(), Rational::zero()),
            Point2::new(Rational::one(), Rational::zero()),
            Point2::new(Rational::one(), Rational::one()),
            Point2::new(Rational::zero(), Rational::one()),
        ];
        candidates
            .into_iter()
            .filter(|p| classify_kind(p, &self.line).is_ok())
            .map(|p| Instance::new(self.name(), p, &self.line))
            .collect()
    }

    fn sample_instances(&self, count: u64, seed: u64) -> Vec<Instance> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count as usize);
        while (out.len() as u64) < count {
            let p = random_point(&mut rng, 12);
            if classify_kind(&p, &self.line).is_ok() {
                out.push(Instance::new(self.name(), p, &self.line));
            }
        }
        out
    }

    fn behavior(&self, instance: &Instance) -> ParallelKind {
        let p: Point2 = instance.point.parse().expect("instance point parses");
        let l: Chord = instance.line.parse().expect("instance line parses");
        classify_kind(&p, &l).expect("instances avoid the line")
    }
}

/// The sphere alone: elliptic everywhere, analytically.
#[derive(Default)]
pub struct SphereModel;

impl GeometryModel for SphereModel {
    fn name(&self) -> &str {
        "sphere"
    }

    fn critical_instances(&self) -> Vec<Instance> {
        vec![Instance::new(self.name(), "0,0,1", "0,0,1")]
    }

    fn sample_instances(&self, count: u64, seed: u64) -> Vec<Instance> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count as usize);
        while (out.len() as u64) < count {
            let coords: Vec<i64> = (0..6).map(|_| rng.gen_range(-9..=9)).collect();
            let Some(l) = GreatCircle::new(
                &Rational::from_int(coords[0]),
                &Rational::from_int(coords[1]),
                &Rational::from_int(coords[2]),
            ) else {
                continue;
            };
            let Some(p) = SpherePoint::new(
                &Rational::from_int(coords[3]),
                &Rational::from_int(coords[4]),
                &Rational::from_int(coords[5]),
            ) else {
                continue;
            };
            if classify_sphere(&p, &l).is_ok() {
                out.push(Instance::new(self.name(), p, l));
            }
        }
        out
    }

    fn behavior(&self, instance: &Instance) -> ParallelKind {
        let p: SpherePoint = instance.point.parse().expect("instance point parses");
        let l: GreatCircle = instance.line.parse().expect("instance line parses");
        classify_sphere(&p, &l).expect("instances avoid the circle")
    }

    fn analytic(&self) -> bool {
        true
    }
}

/// The Euclidean plane alone: exactly one parallel everywhere, analytically.
#[derive(Default)]
pub struct PlaneModel;

impl GeometryModel for PlaneModel {
    fn name(&self) -> &str {
        "euclidean-plane"
    }

    fn critical_instances(&self) -> Vec<Instance> {
        vec![Instance::new(self.name(), "0,0", "1,0,-1")]
    }

    fn sample_instances(&self, count: u64, seed: u64) -> Vec<Instance> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count as usize);
        while (out.len() as u64) < count {
            let a = rng.gen_range(-9i64..=9);
            let b = rng.gen_range(-9i64..=9);
            let c = rng.gen_range(-9i64..=9);
            if a == 0 && b == 0 {
                continue;
            }
            let l = PlanarLine::from_ints(a, b, c);
            let p = Point2::new(random_rational(&mut rng, 12), random_rational(&mut rng, 12));
            if classify_plane(&p, &l).is_ok() {
                out.push(Instance::new(self.name(), p, l));
            }
        }
        out
    }

    fn behavior(&self, instance: &Instance) -> ParallelKind {
        let p: Point2 = instance.point.parse().expect("instance point parses");
        let l: PlanarLine = instance.line.parse().expect("instance line parses");
        classify_plane(&p, &l).expect("instances avoid the line").0
    }

    fn analytic(&self) -> bool {
        true
    }
}

/// The registered model names, as accepted by [`denial_verdict`].
pub const REGISTRY: [&str; 4] = ["square", "sphere", "euclidean-plane", "sphere-plane"];

/// Evaluates a registered model by name. `None` for unknown names.
/// `sphere-plane` is the §-style two-space join of the plane and the sphere.
pub fn denial_verdict(name: &str, budget: u64, seed: u64) -> Option<DenialVerdict> {
    match name {
        "square" => Some(smarandachely_denied(&SquareModel::default(), budget, seed)),
        "sphere" => Some(smarandachely_denied(&SphereModel, budget, seed)),
        "euclidean-plane" => Some(smarandachely_denied(&PlaneModel, budget, seed)),
        "sphere-plane" => {
            let ms = MultiSpace::new(
                "sphere-plane",
                vec![Box::new(PlaneModel), Box::new(SphereModel)],
            );
            Some(multispace_denied(&ms, budget, seed))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(v: &DenialVerdict) -> Vec<&str> {
        v.behaviors.iter().map(|s| s.as_str()).collect()
    }

    #[test]
    fn square_is_denied_with_three_behaviors() {
        let v = denial_verdict("square", 50, 0).unwrap();
        assert!(v.denied);
        for kind in ["elliptic", "euclidean", "hyperbolic"] {
            assert!(v.behaviors.contains(kind), "missing {kind}");
        }
        assert!(!v.analytic);
    }

    #[test]
    fn plane_and_sphere_alone_are_not_denied() {
        let plane = denial_verdict("euclidean-plane", 50, 0).unwrap();
        assert!(!plane.denied);
        assert_eq!(labels(&plane), ["euclidean"]);
        assert!(plane.analytic);

        let sphere = denial_verdict("sphere", 50, 0).unwrap();
        assert!(!sphere.denied);
        assert_eq!(labels(&sphere), ["elliptic"]);
        assert!(sphere.analytic);
    }

    #[test]
    fn sphere_plane_multispace_is_denied_in_exactly_two_ways() {
        let v = denial_verdict("sphere-plane", 50, 0).unwrap();
        assert!(v.denied);
        assert_eq!(labels(&v), ["elliptic", "euclidean"]);
    }

    #[test]
    fn degenerate_multispaces_are_not_denied() {
        let solo = MultiSpace::new("plane-alone", vec![Box::new(PlaneModel) as Box<_>]);
        assert!(!multispace_denied(&solo, 10, 0).denied);

        let twin = MultiSpace::new(
            "sphere-twice",
            vec![Box::new(SphereModel) as Box<_>, Box::new(SphereModel)],
        );
        let v = multispace_denied(&twin, 10, 0);
        assert!(!v.denied);
        assert_eq!(labels(&v), ["elliptic"]);
    }

    #[test]
    fn unknown_model_is_rejected() {
        assert!(denial_verdict("torus", 10, 0).is_none());
        for name in REGISTRY {
            assert!(denial_verdict(name, 10, 0).is_some());
        }
    }

    #[test]
    fn every_behavior_has_a_witness_exhibiting_it() {
        for name in REGISTRY {
            let v = denial_verdict(name, 25, 3).unwrap();
            let witnessed: BTreeSet<String> = v.witnesses.keys().cloned().collect();
            assert_eq!(witnessed, v.behaviors);
            assert!(v.instances_examined >= v.behaviors.len() as u64);
        }
    }

    #[test]
    fn verdicts_are_deterministic_per_seed() {
        let a = denial_verdict("square", 40, 9).unwrap();
        let b = denial_verdict("square", 40, 9).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn behaviors_grow_monotonically_with_budget() {
        for (b1, b2) in [(1, 10), (10, 200)] {
            let small = denial_verdict("square", b1, 5).unwrap();
            let large = denial_verdict("square", b2, 5).unwrap();
            assert!(small.behaviors.is_subset(&large.behaviors));
        }
    }

    #[test]
    fn verdict_json_schema_is_stable() {
        let v = denial_verdict("sphere", 5, 0).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        let keys: Vec<&str> = json.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        assert_eq!(
            keys,
            ["analytic", "behaviors", "denied", "instances_examined", "model", "witnesses"]
        );
    }

    #[test]
    fn square_critical_instances_skip_points_on_the_line() {
        let model = SquareModel::default();
        let crits = model.critical_instances();
        // C = (1,1) lies on CE, so five of the six candidates remain.
        assert_eq!(crits.len(), 5);
        for inst in &crits {
            assert_eq!(inst.line, "1,1:0,1/2");
        }
    }
}
