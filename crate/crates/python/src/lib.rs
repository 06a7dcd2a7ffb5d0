//! Python bindings: walk counts, Chebyshev moments, Green function
//! evaluation and subdominant fits.

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use lgf_core::greens::{builtin_for_order, default_fit_range, tail_exponent};
use lgf_core::{
    build_walk_table, builtin_singular_model, count_closed_walks, fit_subdominant, subtract_singularities,
    Displacement, Family, LgfError as CoreError, TransformKind, TransformPair, Window,
};

type PointRow = (f64, Option<Complex64>, Option<f64>, Option<String>);

create_exception!(
    lgf,
    LgfError,
    PyException,
    "Raised for invalid input or numerical failure."
);

fn py_err(e: CoreError) -> PyErr {
    LgfError::new_err(e.to_string())
}

fn target(lattice: &str, displacement: Option<Vec<i64>>) -> PyResult<(Family, Displacement)> {
    let family: Family = lattice.parse().map_err(py_err)?;
    let r = match displacement {
        Some(c) => Displacement::new(family, c).map_err(py_err)?,
        None => Displacement::origin(family),
    };
    Ok((family, r))
}

/// Names of the supported lattices.
#[pyfunction]
fn lattices() -> Vec<&'static str> {
    Family::ALL.iter().map(|f| f.name()).collect()
}

/// Coordination number z of a lattice.
#[pyfunction]
fn coordination(lattice: &str) -> PyResult<u32> {
    Ok(lattice.parse::<Family>().map_err(py_err)?.coordination())
}

/// Closed walks of length `n` at the origin.
#[pyfunction]
fn closed_walks(lattice: &str, n: usize) -> PyResult<BigUint> {
    let family: Family = lattice.parse().map_err(py_err)?;
    Ok(count_closed_walks(family.spec(), n))
}

/// Walk counts W_0..W_n from the origin to `displacement`.
#[pyfunction]
#[pyo3(signature = (lattice, n, displacement=None))]
fn walks(lattice: &str, n: usize, displacement: Option<Vec<i64>>) -> PyResult<Vec<BigUint>> {
    let (family, r) = target(lattice, displacement)?;
    Ok(build_walk_table(family.spec(), &r, n).map_err(py_err)?.counts)
}

/// Exact scaled moments z^n g_n with their correctly rounded floats.
#[pyclass(name = "MomentTable", module = "lgf", frozen)]
struct PyMomentTable {
    inner: lgf_core::MomentTable,
}

#[pymethods]
impl PyMomentTable {
    #[new]
    #[pyo3(signature = (lattice, n, displacement=None))]
    fn new(lattice: &str, n: usize, displacement: Option<Vec<i64>>) -> PyResult<Self> {
        let (family, r) = target(lattice, displacement)?;
        let inner = lgf_core::MomentTable::compute(family, &r, n).map_err(py_err)?;
        Ok(PyMomentTable { inner })
    }

    #[getter]
    fn lattice(&self) -> &'static str {
        self.inner.lattice.family.name()
    }

    #[getter]
    fn displacement(&self) -> Vec<i64> {
        self.inner.displacement.coords().to_vec()
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    /// z^n g_n as Python integers.
    #[getter]
    fn scaled(&self) -> Vec<BigInt> {
        self.inner.scaled.clone()
    }

    /// g_n as floats.
    #[getter]
    fn g(&self) -> Vec<f64> {
        self.inner.floats.clone()
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __len__(&self) -> usize {
        self.inner.scaled.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "MomentTable({}, {}, order={})",
            self.lattice(),
            self.inner.displacement,
            self.order()
        )
    }
}

/// Green function built from `terms` exact moments.
///
/// With `subtract=True` the built-in singular model is removed from the
/// series and added back analytically; `window` is an optional Kaiser beta.
#[pyclass(name = "GreenFunction", module = "lgf", frozen)]
struct PyGreenFunction {
    inner: lgf_core::GreenFunction,
}

#[pymethods]
impl PyGreenFunction {
    #[new]
    #[pyo3(signature = (lattice, terms=1000, displacement=None, subtract=false, window=None, edge_eps=None))]
    fn new(
        lattice: &str,
        terms: usize,
        displacement: Option<Vec<i64>>,
        subtract: bool,
        window: Option<f64>,
        edge_eps: Option<f64>,
    ) -> PyResult<Self> {
        let (family, r) = target(lattice, displacement)?;
        let moments = lgf_core::MomentTable::compute(family, &r, terms).map_err(py_err)?;
        let window = Window::from_beta(window);
        let mut inner = if subtract {
            let model = builtin_for_order(family, &r, terms).map_err(py_err)?;
            lgf_core::GreenFunction::subtracted(moments, &model, window).map_err(py_err)?
        } else {
            lgf_core::GreenFunction::raw(moments, window)
        };
        if let Some(eps) = edge_eps {
            inner = inner.with_edge_eps(eps);
        }
        Ok(PyGreenFunction { inner })
    }

    /// Spectral function g(omega); zero outside the band.
    fn spectral(&self, omega: f64) -> PyResult<f64> {
        self.inner.spectral(omega).map_err(py_err)
    }

    /// G(omega + i0).
    fn green(&self, omega: f64) -> PyResult<Complex64> {
        self.inner.green(omega).map_err(py_err)
    }

    /// G at a complex frequency off the cut.
    fn green_complex(&self, w: Complex64) -> PyResult<Complex64> {
        self.inner.green_complex(w).map_err(py_err)
    }

    /// `(omega, G or None, g or None, error or None)` for each point.
    fn evaluate(&self, py: Python<'_>, omegas: Vec<f64>) -> Vec<PointRow> {
        let result = py.detach(|| self.inner.evaluate_grid(&omegas));
        result
            .points
            .into_iter()
            .map(|p| (p.omega, p.green, p.spectral, p.error))
            .collect()
    }

    /// CSV with header `omega,re_g,im_g,spectral`.
    #[pyo3(signature = (omegas, digits=17))]
    fn to_csv(&self, py: Python<'_>, omegas: Vec<f64>, digits: usize) -> String {
        py.detach(|| self.inner.evaluate_grid(&omegas).to_csv_digits(digits))
    }

    /// Run metadata as a JSON string.
    fn meta_json(&self) -> String {
        serde_json::to_string(&self.inner.meta()).expect("plain JSON")
    }

    #[getter]
    fn residual(&self) -> Vec<f64> {
        self.inner.residual().to_vec()
    }

    #[getter]
    fn residual_tail(&self) -> f64 {
        self.inner.residual_tail()
    }

    #[getter]
    fn model(&self) -> Option<String> {
        self.inner.model().map(|m| m.to_string())
    }

    #[getter]
    fn singular_points(&self) -> Vec<f64> {
        self.inner.singular_points()
    }

    fn __repr__(&self) -> String {
        let m = self.inner.moments();
        format!(
            "GreenFunction({}, {}, terms={}, model={})",
            m.lattice.family,
            m.displacement,
            m.order(),
            self.model().unwrap_or_else(|| "none".into())
        )
    }
}

/// Fit of the subdominant log term after dominant subtraction.
///
/// Returns a dict with the coefficient, residual norms over the fit range
/// and tail exponents of g, g_A and g_B.
#[pyfunction]
#[pyo3(signature = (lattice, displacement=None, terms=1000, fit_range=None, tail_range=None))]
fn fit<'py>(
    py: Python<'py>,
    lattice: &str,
    displacement: Option<Vec<i64>>,
    terms: usize,
    fit_range: Option<(usize, usize)>,
    tail_range: Option<(usize, usize)>,
) -> PyResult<Bound<'py, pyo3::types::PyDict>> {
    let (family, r) = target(lattice, displacement)?;
    let range = fit_range.unwrap_or_else(|| default_fit_range(terms));
    let tails = tail_range.unwrap_or(((terms / 10).max(2), terms));
    let moments = lgf_core::MomentTable::compute(family, &r, terms).map_err(py_err)?;
    let dominant = builtin_singular_model(family, &r).map_err(py_err)?;
    let form = TransformPair::unit(TransformKind::Log);
    let g_a = subtract_singularities(&moments, &dominant).coeffs;
    let result = fit_subdominant(&g_a, form, range).map_err(py_err)?;
    let phi = form.coefficients(terms);
    let g_b: Vec<f64> = g_a.iter().zip(&phi).map(|(h, p)| h - result.coefficient * p).collect();

    let out = pyo3::types::PyDict::new(py);
    out.set_item("coefficient", result.coefficient)?;
    out.set_item("norm_before", result.norm_before)?;
    out.set_item("norm_after", result.norm_after)?;
    out.set_item("fit_range", range)?;
    out.set_item("dominant_model", dominant.to_string())?;
    for (name, seq) in [("g", &moments.floats), ("g_A", &g_a), ("g_B", &g_b)] {
        out.set_item(
            format!("{name}_exponent"),
            (tail_exponent(seq, tails, false), tail_exponent(seq, tails, true)),
        )?;
    }
    Ok(out)
}

#[pymodule]
fn lgf(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("LgfError", m.py().get_type::<LgfError>())?;
    m.add_class::<PyMomentTable>()?;
    m.add_class::<PyGreenFunction>()?;
    m.add_function(wrap_pyfunction!(lattices, m)?)?;
    m.add_function(wrap_pyfunction!(coordination, m)?)?;
    m.add_function(wrap_pyfunction!(closed_walks, m)?)?;
    m.add_function(wrap_pyfunction!(walks, m)?)?;
    m.add_function(wrap_pyfunction!(fit, m)?)?;
    Ok(())
}
