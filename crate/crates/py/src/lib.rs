//! Python bindings. The compiled module is named `extbundle` (copy or link
//! the built `libextbundle_py.so` as `extbundle.so` on the Python path) and
//! exposes the grading-group elements, extension bundles, orbit counting and
//! tilting objects, plus the cross-checking selftest.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use extbundle::selftest::{run_selftest, SelftestConfig};
use extbundle::stable::{self, TiltingKind};
use extbundle::{bundles, k0, orbits, Error, ExtensionBundle, LElement, WeightTriple};

fn to_py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn check_same_weights(a: WeightTriple, b: WeightTriple) -> PyResult<()> {
    if a != b {
        return Err(PyValueError::new_err(format!(
            "weight mismatch: ({},{},{}) vs ({},{},{})",
            a.weight(0),
            a.weight(1),
            a.weight(2),
            b.weight(0),
            b.weight(1),
            b.weight(2)
        )));
    }
    Ok(())
}

fn check_axis(axis: usize) -> PyResult<()> {
    if axis >= 3 {
        return Err(PyValueError::new_err("axis must be 0, 1 or 2"));
    }
    Ok(())
}

/// A weight triple (p1, p2, p3) with its grading group.
#[pyclass(frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Weights {
    inner: WeightTriple,
}

#[pymethods]
impl Weights {
    #[new]
    fn new(p1: i64, p2: i64, p3: i64) -> PyResult<Self> {
        Ok(Weights {
            inner: WeightTriple::new(p1, p2, p3).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn weights(&self) -> (i64, i64, i64) {
        let [p1, p2, p3] = self.inner.weights();
        (p1, p2, p3)
    }

    #[getter]
    fn lcm(&self) -> i64 {
        self.inner.lcm()
    }

    /// "domestic", "tubular" or "wild".
    #[getter]
    fn weight_class(&self) -> String {
        self.inner.classify().to_string()
    }

    #[getter]
    fn delta_omega(&self) -> i64 {
        self.inner.delta_omega()
    }

    #[getter]
    fn k0_rank(&self) -> usize {
        k0::K0Basis::new(self.inner).size()
    }

    #[getter]
    fn k0_basis(&self) -> Vec<String> {
        k0::K0Basis::new(self.inner).labels()
    }

    fn zero(&self) -> Element {
        Element {
            inner: self.inner.zero(),
        }
    }

    fn omega(&self) -> Element {
        Element {
            inner: self.inner.omega(),
        }
    }

    fn canonical(&self) -> Element {
        Element {
            inner: self.inner.canonical(),
        }
    }

    /// The generator x_{axis+1}.
    fn gen(&self, axis: usize) -> PyResult<Element> {
        check_axis(axis)?;
        Ok(Element {
            inner: self.inner.generator(axis),
        })
    }

    /// omega + x_{axis+1}.
    fn xbar(&self, axis: usize) -> PyResult<Element> {
        check_axis(axis)?;
        Ok(Element {
            inner: self.inner.xbar(axis),
        })
    }

    /// Parse an element from the shared text grammar.
    fn parse(&self, text: &str) -> PyResult<Element> {
        Ok(Element {
            inner: self.inner.parse(text).map_err(to_py_err)?,
        })
    }

    /// All interior points in lexicographic order.
    fn interiors(&self) -> Vec<Element> {
        orbits::interiors(&self.inner)
            .into_iter()
            .map(|inner| Element { inner })
            .collect()
    }

    /// The index [L : Z*omega]; raises for tubular weights.
    fn index_mod_omega(&self) -> PyResult<i64> {
        self.inner.index_mod_omega().map_err(to_py_err)
    }

    /// Klein-orbit count by the closed formula.
    fn orbit_count(&self) -> i64 {
        orbits::pic_orbit_count_formula(&self.inner)
    }

    fn orbit_count_burnside(&self) -> i64 {
        orbits::pic_orbit_count_burnside(&self.inner)
    }

    fn orbit_blocks(&self) -> Vec<Vec<Element>> {
        let items = orbits::interiors(&self.inner);
        orbits::pic_orbit_partition(&self.inner)
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&i| Element {
                        inner: items[i].clone(),
                    })
                    .collect()
            })
            .collect()
    }

    fn fixed_points(&self) -> (i64, i64, i64) {
        let [a, b, c] = orbits::fixed_point_counts(&self.inner);
        (a, b, c)
    }

    fn is_transitive(&self) -> bool {
        orbits::is_transitive(&self.inner)
    }

    /// Orbit count up to twist and translate; raises for tubular weights.
    fn tau_orbit_count(&self) -> PyResult<i64> {
        orbits::tau_orbit_count_formula(&self.inner).map_err(to_py_err)
    }

    fn tau_orbit_count_brute(&self) -> PyResult<i64> {
        orbits::tau_orbit_count_brute(&self.inner).map_err(to_py_err)
    }

    fn __str__(&self) -> String {
        let [p1, p2, p3] = self.inner.weights();
        format!("({p1},{p2},{p3})")
    }

    fn __repr__(&self) -> String {
        let [p1, p2, p3] = self.inner.weights();
        format!("Weights({p1}, {p2}, {p3})")
    }
}

/// An element of the grading group in normal form.
#[pyclass(frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Element {
    inner: LElement,
}

#[pymethods]
impl Element {
    #[getter]
    fn weights(&self) -> Weights {
        Weights {
            inner: self.inner.weights(),
        }
    }

    #[getter]
    fn coords(&self) -> (i64, i64, i64) {
        let [l1, l2, l3] = self.inner.coords();
        (l1, l2, l3)
    }

    #[getter]
    fn c(&self) -> i64 {
        self.inner.c_coeff()
    }

    #[getter]
    fn delta(&self) -> i64 {
        self.inner.delta()
    }

    #[getter]
    fn nonneg(&self) -> bool {
        self.inner.is_nonneg()
    }

    /// n with self = n * omega, or None; raises for tubular weights.
    fn in_z_omega(&self) -> PyResult<Option<i64>> {
        self.inner.in_z_omega().map_err(to_py_err)
    }

    fn scaled(&self, n: i64) -> Element {
        Element {
            inner: self.inner.scaled(n),
        }
    }

    fn __add__(&self, other: &Element) -> PyResult<Element> {
        check_same_weights(self.inner.weights(), other.inner.weights())?;
        Ok(Element {
            inner: &self.inner + &other.inner,
        })
    }

    fn __sub__(&self, other: &Element) -> PyResult<Element> {
        check_same_weights(self.inner.weights(), other.inner.weights())?;
        Ok(Element {
            inner: &self.inner - &other.inner,
        })
    }

    fn __neg__(&self) -> Element {
        Element {
            inner: -&self.inner,
        }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element('{}')", self.inner)
    }
}

/// An extension bundle E<interior>(twist).
#[pyclass(frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct Bundle {
    inner: ExtensionBundle,
}

#[pymethods]
impl Bundle {
    #[new]
    #[pyo3(signature = (interior, twist = None))]
    fn new(interior: &Element, twist: Option<&Element>) -> PyResult<Self> {
        let t = match twist {
            Some(t) => {
                check_same_weights(interior.inner.weights(), t.inner.weights())?;
                t.inner.clone()
            }
            None => interior.inner.weights().zero(),
        };
        Ok(Bundle {
            inner: ExtensionBundle::new(t, interior.inner.clone()).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn interior(&self) -> Element {
        Element {
            inner: self.inner.interior().clone(),
        }
    }

    #[getter]
    fn twist(&self) -> Element {
        Element {
            inner: self.inner.twist(),
        }
    }

    fn is_auslander(&self) -> bool {
        self.inner.is_auslander()
    }

    fn canonical_interior(&self) -> Element {
        Element {
            inner: self.inner.canonical_rep(),
        }
    }

    /// Slope as an exact fraction string.
    fn slope(&self) -> String {
        self.inner.slope().to_string()
    }

    /// "stable", "semistable-not-stable" or "not-semistable".
    fn stability(&self) -> String {
        self.inner.stability().to_string()
    }

    fn cover(&self) -> Vec<Element> {
        self.inner
            .projective_cover()
            .elements()
            .iter()
            .map(|x| Element { inner: x.clone() })
            .collect()
    }

    fn hull(&self) -> Vec<Element> {
        self.inner
            .injective_hull()
            .elements()
            .iter()
            .map(|x| Element { inner: x.clone() })
            .collect()
    }

    fn k0_coeffs(&self) -> Vec<i64> {
        self.inner.k0_class().coeffs().to_vec()
    }

    fn rank(&self) -> i64 {
        self.inner.k0_class().rank()
    }

    fn degree(&self) -> i64 {
        self.inner.k0_class().degree()
    }

    fn isomorphic_to(&self, other: &Bundle) -> PyResult<bool> {
        check_same_weights(self.inner.weights(), other.inner.weights())?;
        Ok(bundles::iso_test_general(&self.inner, &other.inner))
    }

    fn twisted(&self, z: &Element) -> PyResult<Bundle> {
        check_same_weights(self.inner.weights(), z.inner.weights())?;
        Ok(Bundle {
            inner: self.inner.twisted(&z.inner),
        })
    }

    /// Suspension in the stable category, computed along one axis.
    fn suspend(&self, axis: usize) -> PyResult<Bundle> {
        check_axis(axis)?;
        Ok(Bundle {
            inner: stable::suspend(&self.inner, axis),
        })
    }

    /// The full report as a JSON string (same schema as the CLI).
    fn report_json(&self) -> String {
        serde_json::to_string_pretty(&self.inner.report()).unwrap()
    }

    fn __str__(&self) -> String {
        format!("E<{}>({})", self.inner.interior(), self.inner.twist())
    }

    fn __repr__(&self) -> String {
        self.__str__()
    }
}

/// A tilting object ("cub", "t1" or "t2"); the ladders carry a quiver.
#[pyclass(frozen)]
struct Tilting {
    obj: stable::TiltingObject,
    quiver: Option<stable::Quiver>,
    end_dim: Option<i64>,
    extension_free: Option<bool>,
}

#[pymethods]
impl Tilting {
    #[new]
    fn new(weights: &Weights, kind: &str) -> PyResult<Self> {
        let kind = match kind {
            "cub" => TiltingKind::Cub,
            "t1" => TiltingKind::T1,
            "t2" => TiltingKind::T2,
            other => {
                return Err(PyValueError::new_err(format!(
                    "unknown tilting kind {other:?}; expected cub, t1 or t2"
                )))
            }
        };
        let obj = stable::build_tilting(&weights.inner, kind).map_err(to_py_err)?;
        let (quiver, end_dim, extension_free) = if kind == TiltingKind::Cub {
            (None, None, None)
        } else {
            let free = stable::check_extension_free(&obj).map_err(to_py_err)?.is_empty();
            let quiver = stable::build_quiver(&obj).map_err(to_py_err)?;
            let dim = stable::end_dimension(&obj).map_err(to_py_err)?;
            (Some(quiver), Some(dim), Some(free))
        };
        Ok(Tilting {
            obj,
            quiver,
            end_dim,
            extension_free,
        })
    }

    #[getter]
    fn kind(&self) -> String {
        self.obj.kind().to_string()
    }

    #[getter]
    fn summands(&self) -> Vec<String> {
        self.obj.summand_labels()
    }

    fn pairwise_nonisomorphic(&self) -> bool {
        self.obj.pairwise_nonisomorphic()
    }

    #[getter]
    fn extension_free(&self) -> Option<bool> {
        self.extension_free
    }

    #[getter]
    fn end_dim(&self) -> Option<i64> {
        self.end_dim
    }

    /// (x, y, z) arrow counts of the quiver; None for the cuboid.
    fn arrow_counts(&self) -> Option<(usize, usize, usize)> {
        self.quiver
            .as_ref()
            .map(|q| (q.arrow_count('x'), q.arrow_count('y'), q.arrow_count('z')))
    }

    fn relations(&self) -> Option<Vec<String>> {
        self.quiver.as_ref().map(|q| q.relation_strings())
    }

    fn to_dot(&self) -> PyResult<String> {
        self.quiver
            .as_ref()
            .map(|q| q.to_dot())
            .ok_or_else(|| to_py_err(Error::CubNotSupported))
    }

    fn __repr__(&self) -> String {
        format!(
            "Tilting(kind='{}', summands={})",
            self.obj.kind(),
            self.obj.summands().len()
        )
    }
}

/// Run the cross-checking suites; returns (passed, [(name, checks,
/// failures), ...]).
#[pyfunction]
#[pyo3(signature = (max_weight = 4))]
fn selftest(max_weight: i64) -> PyResult<(bool, Vec<(String, u64, u64)>)> {
    if max_weight < 2 {
        return Err(PyValueError::new_err("max_weight must be at least 2"));
    }
    let reports = run_selftest(&SelftestConfig {
        max_weight,
        corrupt_sigma: false,
    });
    let passed = reports.iter().all(|r| r.passed());
    let rows = reports
        .into_iter()
        .map(|r| (r.name.to_string(), r.checks, r.failure_count))
        .collect();
    Ok((passed, rows))
}

#[pymodule]
#[pyo3(name = "extbundle")]
fn extbundle_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Weights>()?;
    m.add_class::<Element>()?;
    m.add_class::<Bundle>()?;
    m.add_class::<Tilting>()?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}
