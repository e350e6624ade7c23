//! Monte Carlo estimation of the kind-zone measures.
//!
//! This is a cross-check of the exact areas, not a substitute for them: points
//! are sampled on the dyadic grid k/2^32 and located exactly, so the only
//! approximation is statistical. Each batch draws from its own seeded stream,
//! which makes the result a pure function of (l, samples, seed).

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::chord::Chord;
use super::classify::classify_kind;
use super::zones::build_arrangement;
use crate::exact_geom::Point2;
use crate::rational::Rational;

const BATCH: u64 = 4096;
/// 99% two-sided normal quantile.
const Z99: f64 = 2.575_829_303_548_900_4;

/// Sample count and 99% Wilson score interval for one kind.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct KindInterval {
    pub count: u64,
    pub frequency: f64,
    pub wilson_low: f64,
    pub wilson_high: f64,
}

/// Monte Carlo zone measures; `kinds` is keyed by kind label.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ZoneMeasuresMc {
    pub samples: u64,
    pub seed: u64,
    pub kinds: BTreeMap<String, KindInterval>,
}

fn dyadic(k: u64) -> Rational {
    Rational::from_big(BigInt::from(k), BigInt::from(1u64 << 32))
}

/// Estimates the area fraction of every kind from `samples` uniform interior
/// points.
pub fn zone_measures_mc(l: &Chord, samples: u64, seed: u64) -> ZoneMeasuresMc {
    assert!(samples > 0, "sample count must be positive");
    let arr = build_arrangement(l);
    let lookup: HashMap<&[i8], &'static str> = arr
        .cells
        .iter()
        .map(|cell| (cell.signs.as_slice(), cell.kind.label()))
        .collect();

    let mut counts: BTreeMap<&'static str, u64> = BTreeMap::new();
    let mut signs: Vec<i8> = Vec::with_capacity(arr.lines.len());
    let batches = samples.div_ceil(BATCH);
    for b in 0..batches {
        let todo = (samples - b * BATCH).min(BATCH);
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ (b + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let mut done = 0;
        while done < todo {
            let k1 = rng.gen_range(1..(1u64 << 32));
            let k2 = rng.gen_range(1..(1u64 << 32));
            signs.clear();
            signs.extend(arr.lines.iter().map(|ln| ln.sign_at_dyadic(k1, k2)));
            if signs[0] == 0 {
                // On l itself, where the classification is undefined: resample.
                continue;
            }
            let label = match lookup.get(signs.as_slice()) {
                Some(label) => label,
                None => {
                    // On some other critical line; fall back to the exact
                    // pointwise classification.
                    let p = Point2::new(dyadic(k1), dyadic(k2));
                    classify_kind(&p, l)
                        .expect("interior point off l classifies")
                        .label()
                }
            };
            *counts.entry(label).or_insert(0) += 1;
            done += 1;
        }
    }

    let kinds = counts
        .into_iter()
        .map(|(label, count)| (label.to_string(), wilson(count, samples)))
        .collect();
    ZoneMeasuresMc {
        samples,
        seed,
        kinds,
    }
}

fn wilson(count: u64, n: u64) -> KindInterval {
    let n = n as f64;
    let p = count as f64 / n;
    let z2 = Z99 * Z99;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = (Z99 / denom) * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    KindInterval {
        count,
        frequency: p,
        wilson_low: (center - half).max(0.0),
        wilson_high: (center + half).min(1.0),
    }
}
