//! Python bindings: set types, generators, finders and the check reports.
//!
//! Reports come back as `dict`s decoded from the same JSON the command line
//! tool prints.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyAny;

use squarelab::constructions as cons;
use squarelab::dimension::{self, RatioBound, RatioFamily};
use squarelab::finders;
use squarelab::report::{self, Construction, Coverage, Family};
use squarelab::{Budget, IntSet1D, PointSet2D, Rational};

fn err(e: squarelab::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn budget() -> PyResult<Budget> {
    Budget::from_env().map_err(err)
}

fn from_json<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// Sorted set of distinct integers.
#[pyclass(name = "IntSet1D", module = "squarelab_py", frozen, skip_from_py_object)]
struct PyIntSet(IntSet1D);

#[pymethods]
impl PyIntSet {
    #[new]
    fn new(values: Vec<i64>) -> PyResult<Self> {
        IntSet1D::new(values).map(PyIntSet).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __contains__(&self, v: i64) -> bool {
        self.0.contains(v)
    }

    fn __repr__(&self) -> String {
        format!("IntSet1D(len={})", self.0.len())
    }

    fn to_list(&self) -> Vec<i64> {
        self.0.elems().to_vec()
    }

    fn min(&self) -> Option<i64> {
        self.0.min()
    }

    fn max(&self) -> Option<i64> {
        self.0.max()
    }
}

/// Finite set of lattice points, sorted by `(x, y)`.
#[pyclass(name = "PointSet2D", module = "squarelab_py", frozen, skip_from_py_object)]
struct PyPointSet(PointSet2D);

#[pymethods]
impl PyPointSet {
    #[new]
    fn new(points: Vec<(i64, i64)>) -> PyResult<Self> {
        PointSet2D::new(points).map(PyPointSet).map_err(err)
    }

    #[staticmethod]
    fn product(xs: &PyIntSet, ys: &PyIntSet) -> Self {
        PyPointSet(PointSet2D::product(&xs.0, &ys.0))
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __contains__(&self, p: (i64, i64)) -> bool {
        self.0.contains(p.0, p.1)
    }

    fn __repr__(&self) -> String {
        format!("PointSet2D(len={})", self.0.len())
    }

    fn to_list(&self) -> Vec<(i64, i64)> {
        self.0.points().to_vec()
    }

    /// `(min_x, max_x, min_y, max_y)`, or `None` when empty.
    fn bounding_box(&self) -> Option<(i64, i64, i64, i64)> {
        self.0.bounding_box().map(|b| (b.min_x, b.max_x, b.min_y, b.max_y))
    }
}

#[pyfunction]
fn gen_dk(k: i64) -> PyResult<PyIntSet> {
    cons::gen_dk(k, &budget()?).map(PyIntSet).map_err(err)
}

#[pyfunction]
fn gen_an(p: u32) -> PyResult<PyIntSet> {
    cons::gen_an(p, &budget()?).map(PyIntSet).map_err(err)
}

/// `(B, S)` of the vertex example.
#[pyfunction]
fn gen_vertex_example(k: i64) -> PyResult<(PyPointSet, PyPointSet)> {
    let (b, s) = cons::gen_vertex_example(k, &budget()?).map_err(err)?;
    Ok((PyPointSet(b), PyPointSet(s)))
}

#[pyfunction]
fn gen_boundary_example(k: i64) -> PyResult<(PyPointSet, PyPointSet)> {
    let (b, s) = cons::gen_boundary_example(k, &budget()?).map_err(err)?;
    Ok((PyPointSet(b), PyPointSet(s)))
}

/// `(scale, A, T)` of the exact truncation; `s` is a `"num/den"` string.
#[pyfunction]
fn gen_cantor_truncation(s: &str, p: u32) -> PyResult<(i64, PyIntSet, PyIntSet)> {
    let s: Rational = s.parse().map_err(err)?;
    let t = cons::gen_cantor_truncation(s, p, cons::CantorMode::Exact, &budget()?).map_err(err)?;
    match t.sets {
        cons::CantorSets::Exact { scale, a, t, .. } => Ok((scale, PyIntSet(a), PyIntSet(t))),
        cons::CantorSets::Float { .. } => unreachable!("exact mode requested"),
    }
}

#[pyfunction]
fn witness_r(x: i64, y: i64, k: i64) -> PyResult<i64> {
    cons::witness_r(x, y, k).map_err(err)
}

/// Doubled centers `(X, Y)`.
#[pyfunction]
fn find_centers_1d(a: &PyIntSet) -> PyResult<Vec<(i64, i64)>> {
    let s = finders::find_centers_1d(&a.0, &budget()?).map_err(err)?;
    Ok(s.into_iter().map(|c| (c.x2, c.y2)).collect())
}

/// `(X, Y, 2r)` with the smallest radius per center.
#[pyfunction]
fn find_vertex_centers_2d(b: &PyPointSet) -> PyResult<Vec<(i64, i64, i64)>> {
    let s = finders::find_vertex_centers_2d(&b.0, &budget()?).map_err(err)?;
    Ok(s.into_iter().map(|w| (w.center.x2, w.center.y2, w.radius2)).collect())
}

/// Every `(X, Y, 2r)` with `r <= r_max`.
#[pyfunction]
fn find_boundary_centers_2d(b: &PyPointSet, r_max: i64) -> PyResult<Vec<(i64, i64, i64)>> {
    let s = finders::find_boundary_centers_2d(&b.0, r_max, &budget()?).map_err(err)?;
    Ok(s.into_iter().map(|w| (w.center.x2, w.center.y2, w.radius2)).collect())
}

#[pyfunction]
fn covering_count_1d(a: &PyIntSet, length: i64) -> PyResult<u64> {
    dimension::covering_count_1d(&a.0, length).map(|r| r.count).map_err(err)
}

#[pyfunction]
fn dyadic_box_count_2d(p: &PyPointSet, frame_bits: u32, m: i32) -> PyResult<u64> {
    dimension::dyadic_box_count_2d(&p.0, frame_bits, m).map_err(err)
}

/// `(j, ratio, target)` for `j = 2..=j_max`.
#[pyfunction]
#[pyo3(signature = (s, j_max, which = "upper", family = "t"))]
fn falconer_ratios(s: &str, j_max: u32, which: &str, family: &str) -> PyResult<Vec<(u32, f64, f64)>> {
    let s: Rational = s.parse().map_err(err)?;
    let which = match which {
        "upper" => RatioBound::Upper,
        "lower" => RatioBound::Lower,
        other => return Err(PyValueError::new_err(format!("which must be upper or lower, got {other:?}"))),
    };
    let family = match family {
        "t" | "T" => RatioFamily::T,
        "a" | "A" => RatioFamily::A,
        other => return Err(PyValueError::new_err(format!("family must be t or a, got {other:?}"))),
    };
    let pts = dimension::falconer_ratios(s, j_max, which, family).map_err(err)?;
    Ok(pts.into_iter().map(|p| (p.j, p.value, p.target)).collect())
}

#[pyfunction]
fn main_lemma_2d(b: &PyPointSet) -> PyResult<bool> {
    report::check_main_lemma_2d(&b.0, &budget()?).map(|c| c.ok).map_err(err)
}

#[pyfunction]
fn main_lemma_1d(a: &PyIntSet) -> PyResult<bool> {
    report::check_main_lemma_1d(&a.0, &budget()?).map(|c| c.ok).map_err(err)
}

/// Exponent report as a `dict` with `rows`, `slopes` and `target`.
#[pyfunction]
fn family_scan<'py>(py: Python<'py>, family: &str, kmin: i64, kmax: i64) -> PyResult<Bound<'py, PyAny>> {
    let family: Family = family.parse().map_err(err)?;
    let r = report::family_scan(family, kmin, kmax, &budget()?).map_err(err)?;
    from_json(py, &serde_json::to_string(&r).expect("serializable"))
}

/// Checks for `"dk"`, `"an"`, `"boundary"` or `"countable"`, as a list of `dict`s.
#[pyfunction]
#[pyo3(signature = (construction, k = None, p = None, alpha = None, blocks = None, samples = None, seed = report::DEFAULT_SEED))]
#[allow(clippy::too_many_arguments)]
fn verify<'py>(
    py: Python<'py>,
    construction: &str,
    k: Option<i64>,
    p: Option<u32>,
    alpha: Option<u32>,
    blocks: Option<u32>,
    samples: Option<u64>,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let need = |name: &str| PyValueError::new_err(format!("{construction} needs {name}"));
    let which = match construction {
        "dk" => Construction::Dk { k: k.ok_or_else(|| need("k"))? },
        "an" => Construction::An { p: p.ok_or_else(|| need("p"))? },
        "boundary" => Construction::Boundary { k: k.ok_or_else(|| need("k"))? },
        "countable" => Construction::Countable {
            alpha: alpha.ok_or_else(|| need("alpha"))?,
            blocks: blocks.ok_or_else(|| need("blocks"))?,
        },
        other => return Err(PyValueError::new_err(format!("unknown construction {other:?}"))),
    };
    let coverage = samples.map_or(Coverage::Auto, Coverage::Sampled);
    let checks = report::verify_construction(which, coverage, seed, &budget()?).map_err(err)?;
    from_json(py, &serde_json::to_string(&checks).expect("serializable"))
}

#[pymodule]
fn squarelab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyIntSet>()?;
    m.add_class::<PyPointSet>()?;
    m.add_function(wrap_pyfunction!(gen_dk, m)?)?;
    m.add_function(wrap_pyfunction!(gen_an, m)?)?;
    m.add_function(wrap_pyfunction!(gen_vertex_example, m)?)?;
    m.add_function(wrap_pyfunction!(gen_boundary_example, m)?)?;
    m.add_function(wrap_pyfunction!(gen_cantor_truncation, m)?)?;
    m.add_function(wrap_pyfunction!(witness_r, m)?)?;
    m.add_function(wrap_pyfunction!(find_centers_1d, m)?)?;
    m.add_function(wrap_pyfunction!(find_vertex_centers_2d, m)?)?;
    m.add_function(wrap_pyfunction!(find_boundary_centers_2d, m)?)?;
    m.add_function(wrap_pyfunction!(covering_count_1d, m)?)?;
    m.add_function(wrap_pyfunction!(dyadic_box_count_2d, m)?)?;
    m.add_function(wrap_pyfunction!(falconer_ratios, m)?)?;
    m.add_function(wrap_pyfunction!(main_lemma_2d, m)?)?;
    m.add_function(wrap_pyfunction!(main_lemma_1d, m)?)?;
    m.add_function(wrap_pyfunction!(family_scan, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
