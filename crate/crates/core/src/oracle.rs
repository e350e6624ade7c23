//! Independent sweep oracle for the parallel classification.
//!
//! The oracle knows nothing about direction-set algebra. It probes a fixed
//! fan of rational directions one at a time — build the chord through p in
//! that direction, if any, and test it against l with `is_parallel` — and
//! compares each probe with membership in the classifier's parallel set.
//! Agreement is membership-level over the sampled fan, in both directions.

use crate::exact_geom::{Direction, DirectionSet, Point2};
use crate::square_model::{chord_through, is_parallel, Chord};

/// `n` distinct directions evenly indexed by the rational half-angle map
/// u ↦ (1 − u², 2u) with u = −1 + 2i/n, i = 0..n. Clearing denominators
/// gives (n² − m², 2mn) for m = 2i − n, which covers the undirected range
/// once without trigonometry.
pub fn sweep_directions(n: u64) -> Vec<Direction> {
    assert!(n >= 1, "empty sweep");
    let n = i64::try_from(n).expect("sweep size fits i64");
    assert!(n <= 30_000, "n² must stay comfortably inside i64");
    (0..n)
        .map(|i| {
            let m = 2 * i - n;
            Direction::from_ints(n * n - m * m, 2 * m * n)
        })
        .collect()
}

/// Sampled directions on which a direct probe disagrees with membership in
/// `parallels`. Empty means the oracle confirms the set on this fan.
pub fn sweep_disagreements(
    p: &Point2,
    l: &Chord,
    parallels: &DirectionSet,
    dirs: &[Direction],
) -> Vec<Direction> {
    dirs.iter()
        .filter(|d| {
            let probed = chord_through(p, d).is_some_and(|c| is_parallel(&c, l));
            probed != parallels.contains(d)
        })
        .cloned()
        .collect()
}
