//! Python bindings: exact polynomials, the CR solvers, the sphere transfer
//! and the numerical checks.

use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use crtangent::algebra::{parse_poly, Form, PointC2, Polynomial, Var};
use crtangent::cli::{realize as run_realize, verify_stats, RealizeOptions};
use crtangent::cr::{self, CrOperator};
use crtangent::numgeom::{self, SurfaceKind, SurfaceSpec, TraceOptions};
use crtangent::transfer::{self, PuncturedRational};

create_exception!(crtangent_py, CrtangentError, PyException);

fn err(e: impl std::fmt::Display) -> PyErr {
    CrtangentError::new_err(e.to_string())
}

fn surface(name: &str) -> PyResult<SurfaceKind> {
    name.parse().map_err(err)
}

fn form(name: &str) -> PyResult<Form> {
    match name {
        "ambient" => Ok(Form::Ambient),
        "h" | "hcoord" => Ok(Form::HCoord),
        other => Err(err(format!("unknown form `{other}` (expected ambient or hcoord)"))),
    }
}

fn var(name: &str) -> PyResult<Var> {
    match name {
        "z" => Ok(Var::Z),
        "zb" => Ok(Var::Zb),
        "w" => Ok(Var::W),
        "wb" => Ok(Var::Wb),
        "u" => Ok(Var::U),
        other => Err(err(format!("unknown variable `{other}`"))),
    }
}

/// Exact polynomial with Gaussian-rational coefficients.
#[pyclass(name = "Polynomial", module = "crtangent_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPolynomial(Polynomial);

#[pymethods]
impl PyPolynomial {
    #[new]
    #[pyo3(signature = (text, form = "ambient"))]
    fn new(text: &str, form: &str) -> PyResult<Self> {
        Ok(Self(parse_poly(text, self::form(form)?).map_err(err)?))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.0)
    }

    fn __add__(&self, o: &Self) -> PyResult<Self> {
        Ok(Self(self.0.checked_add(&o.0).map_err(err)?))
    }

    fn __sub__(&self, o: &Self) -> PyResult<Self> {
        Ok(Self(self.0.checked_sub(&o.0).map_err(err)?))
    }

    fn __mul__(&self, o: &Self) -> PyResult<Self> {
        Ok(Self(self.0.checked_mul(&o.0).map_err(err)?))
    }

    fn conjugate(&self) -> Self {
        Self(self.0.conjugate())
    }

    /// Wirtinger derivative with respect to `z`, `zb`, `w`, `wb` or `u`.
    fn derivative(&self, v: &str) -> PyResult<Self> {
        Ok(Self(self.0.wirtinger(var(v)?).map_err(err)?))
    }

    fn evaluate(&self, z: Complex64, w: Complex64) -> Complex64 {
        self.0.evaluate(&PointC2::new(z, w))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_holomorphic(&self) -> bool {
        self.0.is_holomorphic()
    }

    fn total_degree(&self) -> Option<u32> {
        self.0.total_degree()
    }

    fn to_h_coords(&self) -> PyResult<Self> {
        Ok(Self(self.0.to_h_coords().map_err(err)?))
    }

    fn to_ambient(&self) -> PyResult<Self> {
        Ok(Self(self.0.to_ambient().map_err(err)?))
    }
}

/// `numerator · (1−w)^alpha · (1−w̄)^beta`.
#[pyclass(name = "PuncturedRational", module = "crtangent_py", frozen)]
struct PyPunctured(PuncturedRational);

#[pymethods]
impl PyPunctured {
    #[getter]
    fn numerator(&self) -> PyPolynomial {
        PyPolynomial(self.0.numerator().clone())
    }

    #[getter]
    fn alpha(&self) -> i64 {
        self.0.alpha()
    }

    #[getter]
    fn beta(&self) -> i64 {
        self.0.beta()
    }

    fn evaluate(&self, z: Complex64, w: Complex64) -> Complex64 {
        self.0.evaluate(&PointC2::new(z, w))
    }

    /// Sphere CR operator applied to this function.
    fn apply_cr(&self) -> PyResult<Self> {
        Ok(Self(transfer::apply_cr_punctured(&self.0).map_err(err)?))
    }

    fn __repr__(&self) -> String {
        format!("PuncturedRational('{}', alpha={}, beta={})", self.0.numerator(), self.0.alpha(), self.0.beta())
    }
}

#[pyfunction]
fn solve_heisenberg(g: &PyPolynomial) -> PyResult<PyPolynomial> {
    Ok(PyPolynomial(cr::solve_heisenberg(&g.0).map_err(err)?))
}

#[pyfunction]
fn solve_sphere_holomorphic(h: &PyPolynomial) -> PyResult<PyPolynomial> {
    Ok(PyPolynomial(cr::solve_sphere_holomorphic(&h.0).map_err(err)?))
}

#[pyfunction]
#[pyo3(signature = (f, surface = "heisenberg"))]
fn apply_cr(f: &PyPolynomial, surface: &str) -> PyResult<PyPolynomial> {
    let op = match self::surface(surface)? {
        SurfaceKind::Sphere => CrOperator::sphere(),
        SurfaceKind::Heisenberg => CrOperator::heisenberg(),
    };
    Ok(PyPolynomial(op.apply(&f.0).map_err(err)?))
}

#[pyfunction]
fn torus_knot_source(p: i64, q: i64) -> PyResult<PyPolynomial> {
    Ok(PyPolynomial(cr::torus_knot_source(p, q).map_err(err)?))
}

/// Returns `(numerator, M, N)`.
#[pyfunction]
fn pullback_numerator(p: &PyPolynomial) -> PyResult<(PyPolynomial, u32, u32)> {
    let pb = transfer::pullback_numerator(&p.0).map_err(err)?;
    Ok((PyPolynomial(pb.numerator), pb.m, pb.n))
}

#[pyfunction]
#[pyo3(signature = (f, r = 2))]
fn transfer_to_sphere(f: &PyPolynomial, r: u32) -> PyResult<PyPunctured> {
    Ok(PyPunctured(transfer::transfer_to_sphere(&f.0, r).map_err(err)?))
}

/// Components of `{g = 0}` on the surface as `[(closed, points), ...]`.
#[pyfunction]
#[pyo3(signature = (g, surface = "sphere", step = 0.01, seeds = 64, seed = 0))]
fn trace_curve(g: &PyPolynomial, surface: &str, step: f64, seeds: usize, seed: u64) -> PyResult<Vec<(bool, Vec<[f64; 4]>)>> {
    let s = SurfaceSpec::new(self::surface(surface)?);
    let opts = TraceOptions { step, seeds, seed, ..TraceOptions::default() };
    let c = numgeom::trace_curve(&s, &g.0, opts).map_err(err)?;
    Ok(c.components.into_iter().map(|k| (k.closed, k.points)).collect())
}

/// Tangency defect of the graph of `f` at a point of the surface.
#[pyfunction]
#[pyo3(signature = (f, z, w, surface = "sphere"))]
fn tangency_defect(f: &PyPolynomial, z: Complex64, w: Complex64, surface: &str) -> PyResult<f64> {
    let s = SurfaceSpec::new(self::surface(surface)?);
    let field = crtangent::algebra::NumericPoly::new(&f.0);
    let fr = numgeom::tangent_frame(&s, &field, &PointC2::new(z, w)).map_err(err)?;
    numgeom::tangency_defect(&fr).map_err(err)
}

#[pyfunction]
fn linking_number(c1: Vec<[f64; 3]>, c2: Vec<[f64; 3]>) -> PyResult<f64> {
    numgeom::linking_number(&numgeom::Polyline::closed(c1), &numgeom::Polyline::closed(c2)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (f, surface = "sphere", samples = 1000, seed = 0))]
fn verify<'py>(py: Python<'py>, f: &PyPolynomial, surface: &str, samples: usize, seed: u64) -> PyResult<Bound<'py, PyDict>> {
    let st = verify_stats(&f.0, self::surface(surface)?, samples, seed).map_err(|e| err(e.message))?;
    let d = PyDict::new(py);
    d.set_item("cr_image", st.cr_image.to_string())?;
    d.set_item("variety_points", st.variety_points)?;
    d.set_item("max_defect_on_variety", st.max_defect_on)?;
    d.set_item("off_variety_samples", st.off_samples)?;
    d.set_item("min_defect_off_variety", st.min_defect_off)?;
    d.set_item("passed", st.on_pass() && st.off_pass())?;
    Ok(d)
}

/// Runs the realization pipeline and returns its report as a dict of strings.
#[pyfunction]
#[pyo3(signature = (g, r = 2, seed = 0))]
fn realize<'py>(py: Python<'py>, g: &str, r: u32, seed: u64) -> PyResult<Bound<'py, PyDict>> {
    let res = run_realize(g, &RealizeOptions { r, seed, ..RealizeOptions::default() });
    if let Some(e) = res.error {
        return Err(err(e));
    }
    let d = PyDict::new(py);
    for (k, v) in res.report.entries() {
        d.set_item(k, v)?;
    }
    Ok(d)
}

#[pymodule]
fn crtangent_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CrtangentError", m.py().get_type::<CrtangentError>())?;
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyPunctured>()?;
    m.add_function(wrap_pyfunction!(solve_heisenberg, m)?)?;
    m.add_function(wrap_pyfunction!(solve_sphere_holomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(apply_cr, m)?)?;
    m.add_function(wrap_pyfunction!(torus_knot_source, m)?)?;
    m.add_function(wrap_pyfunction!(pullback_numerator, m)?)?;
    m.add_function(wrap_pyfunction!(transfer_to_sphere, m)?)?;
    m.add_function(wrap_pyfunction!(trace_curve, m)?)?;
    m.add_function(wrap_pyfunction!(tangency_defect, m)?)?;
    m.add_function(wrap_pyfunction!(linking_number, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(realize, m)?)?;
    Ok(())
}
