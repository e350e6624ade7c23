//! The five possible answers to "how many parallels to `l` pass through `p`?".

use std::fmt;

use serde::{Deserialize, Serialize};

/// Classification of a point with respect to a line, by the number of
/// parallels through the point.
///
/// * `Elliptic` - no parallel at all.
/// * `Euclidean` - exactly one parallel.
/// * `FiniteMany(k)` - exactly `k >= 2` parallels.
/// * `CountablyInfinite` - infinitely many but countable. No operation in
///   this crate can produce it (parallel sets here are finite unions of arcs
///   and isolated directions), but the taxonomy keeps a slot for it and the
///   search tooling looks for it honestly.
/// * `Hyperbolic` - a continuum of parallels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParallelKind {
    Elliptic,
    Euclidean,
    FiniteMany(u64),
    CountablyInfinite,
    Hyperbolic,
}

impl ParallelKind {
    /// Stable lower-case label, used as a JSON map key. `FiniteMany(k)`
    /// collapses to `"finite_many"`; the multiplicity travels in a separate
    /// `k` field where it matters.
    pub fn label(&self) -> &'static str {
        match self {
            ParallelKind::Elliptic => "elliptic",
            ParallelKind::Euclidean => "euclidean",
            ParallelKind::FiniteMany(_) => "finite_many",
            ParallelKind::CountablyInfinite => "countably_infinite",
            ParallelKind::Hyperbolic => "hyperbolic",
        }
    }

    pub fn finite_count(&self) -> Option<u64> {
        match self {
            ParallelKind::FiniteMany(k) => Some(*k),
            _ => None,
        }
    }

    /// All labels in a fixed order, for reports that want stable schemas.
    pub const LABELS: [&'static str; 5] = [
        "elliptic",
        "euclidean",
        "finite_many",
        "countably_infinite",
        "hyperbolic",
    ];
}

impl fmt::Display for ParallelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParallelKind::FiniteMany(k) => write!(f, "finite_many({k})"),
            other => f.write_str(other.label()),
        }
    }
}

impl Serialize for ParallelKind {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for ParallelKind {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        match s.as_str() {
            "elliptic" => Ok(ParallelKind::Elliptic),
            "euclidean" => Ok(ParallelKind::Euclidean),
            "finite_many" => Ok(ParallelKind::FiniteMany(2)),
            "countably_infinite" => Ok(ParallelKind::CountablyInfinite),
            "hyperbolic" => Ok(ParallelKind::Hyperbolic),
            other => Err(serde::de::Error::custom(format!(
                "unknown parallel kind `{other}`"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_are_stable() {
        assert_eq!(ParallelKind::Elliptic.label(), "elliptic");
        assert_eq!(ParallelKind::FiniteMany(3).label(), "finite_many");
        assert_eq!(ParallelKind::FiniteMany(3).to_string(), "finite_many(3)");
        assert_eq!(ParallelKind::Hyperbolic.to_string(), "hyperbolic");
    }

    #[test]
    fn ordering_is_by_parallel_count() {
        use ParallelKind::*;
        let mut kinds = vec![Hyperbolic, Elliptic, FiniteMany(2), Euclidean];
        kinds.sort();
        assert_eq!(kinds, vec![Elliptic, Euclidean, FiniteMany(2), Hyperbolic]);
    }
}
