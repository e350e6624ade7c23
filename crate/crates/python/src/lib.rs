//! Python bindings: the text grammars at the boundary, structured results as
//! plain dicts/lists/strings, exact rationals travelling as strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList, PyString};
use serde::Serialize;
use serde_json::Value;

use postulatum::sphere_plane as sp;
use postulatum::square_model as sq;
use postulatum::{ParallelKind, Point2, Rational};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else if let Some(u) = n.as_u64() {
                u.into_pyobject(py)?.into_any()
            } else {
                n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any()
            }
        }
        Value::String(s) => PyString::new(py, s).into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (key, val) in map {
                dict.set_item(key, json_to_py(py, val)?)?;
            }
            dict.into_any()
        }
    })
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(value).map_err(value_err)?;
    json_to_py(py, &v)
}

fn parse_point(s: &str) -> PyResult<Point2> {
    s.parse().map_err(value_err)
}

/// A line of the square model: a segment joining two opposite sides.
#[pyclass(frozen, name = "Chord", module = "postulatum_py")]
struct PyChord {
    inner: sq::Chord,
}

#[pymethods]
impl PyChord {
    /// Parse `x1,y1:x2,y2` with exact rational components.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        spec.parse().map(|inner| PyChord { inner }).map_err(value_err)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Chord('{}')", self.inner)
    }

    fn __eq__(&self, other: &PyChord) -> bool {
        self.inner == other.inner
    }

    /// Whether the point `x,y` lies on the chord.
    fn contains(&self, point: &str) -> PyResult<bool> {
        Ok(self.inner.contains(&parse_point(point)?))
    }

    /// Whether the two closed chords are disjoint.
    fn is_parallel(&self, other: &PyChord) -> bool {
        sq::is_parallel(&self.inner, &other.inner)
    }

    /// Full classification of the parallels through `point`, as a dict.
    fn classify<'py>(&self, py: Python<'py>, point: &str) -> PyResult<Bound<'py, PyAny>> {
        let p = parse_point(point)?;
        let c = sq::classify(&p, &self.inner).map_err(value_err)?;
        to_py(py, &c)
    }

    /// The kind label alone: elliptic, euclidean, finite_many,
    /// countably_infinite, or hyperbolic.
    fn classify_kind(&self, point: &str) -> PyResult<&'static str> {
        let p = parse_point(point)?;
        let kind = sq::classify_kind(&p, &self.inner).map_err(value_err)?;
        Ok(kind.label())
    }

    /// The exact zone map induced by this line.
    fn zone_map<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &sq::exact_zone_map(&self.inner))
    }

    /// Exact measure fractions per kind; rationals as strings.
    fn degree_of_negation<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &sq::degree_of_negation(&self.inner))
    }

    /// Monte Carlo zone measures with Wilson 99% intervals.
    #[pyo3(signature = (samples = 100_000, seed = 0))]
    fn zone_measures_mc<'py>(
        &self,
        py: Python<'py>,
        samples: u64,
        seed: u64,
    ) -> PyResult<Bound<'py, PyAny>> {
        if samples == 0 {
            return Err(value_err("samples must be at least 1"));
        }
        to_py(py, &sq::zone_measures_mc(&self.inner, samples, seed))
    }
}

/// A point of the unit sphere, as the exact rational ray toward it.
#[pyclass(frozen, name = "SpherePoint", module = "postulatum_py")]
struct PySpherePoint {
    inner: sp::SpherePoint,
}

#[pymethods]
impl PySpherePoint {
    /// Parse `x,y,z`, not all zero; sign matters (antipodes differ).
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        spec.parse()
            .map(|inner| PySpherePoint { inner })
            .map_err(value_err)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SpherePoint('{}')", self.inner)
    }

    fn __eq__(&self, other: &PySpherePoint) -> bool {
        self.inner == other.inner
    }

    fn antipode(&self) -> PySpherePoint {
        PySpherePoint {
            inner: self.inner.antipode(),
        }
    }
}

/// A great circle of the unit sphere, by its normal direction.
#[pyclass(frozen, name = "GreatCircle", module = "postulatum_py")]
struct PyGreatCircle {
    inner: sp::GreatCircle,
}

#[pymethods]
impl PyGreatCircle {
    /// Parse the normal `x,y,z`, not all zero; scale and sign irrelevant.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        spec.parse()
            .map(|inner| PyGreatCircle { inner })
            .map_err(value_err)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GreatCircle('{}')", self.inner)
    }

    fn __eq__(&self, other: &PyGreatCircle) -> bool {
        self.inner == other.inner
    }

    fn contains(&self, point: &PySpherePoint) -> bool {
        self.inner.contains(&point.inner)
    }

    /// None when the circles are identical, else the two antipodal
    /// intersection points.
    fn meet(&self, other: &PyGreatCircle) -> Option<(PySpherePoint, PySpherePoint)> {
        match sp::great_circles_meet(&self.inner, &other.inner) {
            sp::CircleIntersection::Identical => None,
            sp::CircleIntersection::TwoPoints(p, q) => Some((
                PySpherePoint { inner: p },
                PySpherePoint { inner: q },
            )),
        }
    }

    /// The kind at `point` (always elliptic); ValueError if the point is on
    /// the circle.
    fn classify(&self, point: &PySpherePoint) -> PyResult<&'static str> {
        let kind = sp::classify_sphere(&point.inner, &self.inner).map_err(value_err)?;
        Ok(kind.label())
    }
}

/// A line ax + by + c = 0 of the Euclidean plane.
#[pyclass(frozen, name = "PlanarLine", module = "postulatum_py")]
struct PyPlanarLine {
    inner: sp::PlanarLine,
}

#[pymethods]
impl PyPlanarLine {
    /// Parse `a,b,c` with (a, b) not both zero.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        spec.parse()
            .map(|inner| PyPlanarLine { inner })
            .map_err(value_err)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PlanarLine('{}')", self.inner)
    }

    fn __eq__(&self, other: &PyPlanarLine) -> bool {
        self.inner == other.inner
    }

    fn contains(&self, point: &str) -> PyResult<bool> {
        Ok(self.inner.contains(&parse_point(point)?))
    }

    /// `(kind, parallel)`: always euclidean, with the unique parallel
    /// through the point.
    fn classify(&self, point: &str) -> PyResult<(&'static str, PyPlanarLine)> {
        let p = parse_point(point)?;
        let (kind, parallel) = sp::classify_plane(&p, &self.inner).map_err(value_err)?;
        debug_assert_eq!(kind, ParallelKind::Euclidean);
        Ok((kind.label(), PyPlanarLine { inner: parallel }))
    }
}

/// Run the pinned verification suite; dict report.
#[pyfunction]
#[pyo3(signature = (e = "1/2", seed = 0))]
fn verify<'py>(py: Python<'py>, e: &str, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let e: Rational = e.parse().map_err(value_err)?;
    let report = postulatum::run_verify(&e, seed).map_err(value_err)?;
    to_py(py, &report)
}

/// Smarandachely-denied verdict for a registered model name.
#[pyfunction]
#[pyo3(signature = (model, budget = 100, seed = 0))]
fn sdenied<'py>(py: Python<'py>, model: &str, budget: u64, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let verdict = postulatum::denial_verdict(model, budget, seed)
        .ok_or_else(|| value_err(format!("unknown model `{model}`")))?;
    to_py(py, &verdict)
}

/// The registered model names.
#[pyfunction]
fn registry() -> Vec<&'static str> {
    postulatum::REGISTRY.to_vec()
}

/// Search the square model for FiniteMany/CountablyInfinite instances.
#[pyfunction]
#[pyo3(signature = (instances = 10_000, seed = 0))]
fn explore_finite<'py>(py: Python<'py>, instances: u64, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    if instances == 0 {
        return Err(value_err("instances must be at least 1"));
    }
    to_py(py, &sq::explore_finite(instances, seed))
}

/// C's status in each carrier space.
#[pyfunction]
fn dual_status_of_c<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &sp::dual_status_of_c(&sp::ModelM))
}

/// The planar and spherical representations of AB through two points of C.
#[pyfunction]
fn dual_representation_of_ab<'py>(
    py: Python<'py>,
    a: &PySpherePoint,
    b: &PySpherePoint,
) -> PyResult<Bound<'py, PyAny>> {
    let rep = sp::dual_representation_of_ab(&a.inner, &b.inner).map_err(value_err)?;
    to_py(py, &rep)
}

#[pymodule]
fn postulatum_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyChord>()?;
    m.add_class::<PySpherePoint>()?;
    m.add_class::<PyGreatCircle>()?;
    m.add_class::<PyPlanarLine>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(sdenied, m)?)?;
    m.add_function(wrap_pyfunction!(registry, m)?)?;
    m.add_function(wrap_pyfunction!(explore_finite, m)?)?;
    m.add_function(wrap_pyfunction!(dual_status_of_c, m)?)?;
    m.add_function(wrap_pyfunction!(dual_representation_of_ab, m)?)?;
    m.add("DEFAULT_LINE", "1,1:0,1/2")?;
    Ok(())
}
