//! Python bindings. Modules are `(i, j)` tuples and the zero module is
//! `None`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use nakayama::oracle::{self, KupischAlgebra, NctSearcher, SearchOptions};
use nakayama::{ar_quiver, cluster_tilting, Error, ModCoord, ModSet};

type Coord = (usize, usize);

fn err(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn coord((i, j): Coord) -> ModCoord {
    ModCoord::new(i, j)
}

fn out(x: ModCoord) -> Option<Coord> {
    x.coords()
}

fn coords(set: &ModSet) -> Vec<Coord> {
    set.iter().filter_map(out).collect()
}

fn kupisch(series: Vec<usize>) -> PyResult<KupischAlgebra> {
    KupischAlgebra::new(series).map_err(err)
}

/// The homogeneous algebra `KQ_m / rad^l`.
#[pyclass(name = "Algebra", frozen)]
struct PyAlgebra {
    inner: nakayama::Algebra,
}

#[pymethods]
impl PyAlgebra {
    #[new]
    fn new(m: usize, l: usize) -> PyResult<Self> {
        Ok(PyAlgebra {
            inner: nakayama::Algebra::new(m, l).map_err(err)?,
        })
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn l(&self) -> usize {
        self.inner.l()
    }

    fn indecomposables(&self) -> Vec<Coord> {
        self.inner.indecomposables().into_iter().filter_map(out).collect()
    }

    fn projective(&self, k: usize) -> PyResult<Option<Coord>> {
        self.inner.projective(k).map(out).map_err(err)
    }

    fn injective(&self, k: usize) -> PyResult<Option<Coord>> {
        self.inner.injective(k).map(out).map_err(err)
    }

    /// `(is_projective, is_injective)`.
    fn classify(&self, x: Coord) -> PyResult<(bool, bool)> {
        let k = self.inner.classify(coord(x)).map_err(err)?;
        Ok((k.is_projective, k.is_injective))
    }

    fn syzygy(&self, x: Coord) -> PyResult<Option<Coord>> {
        self.inner.syzygy(coord(x)).map(out).map_err(err)
    }

    fn cosyzygy(&self, x: Coord) -> PyResult<Option<Coord>> {
        self.inner.cosyzygy(coord(x)).map(out).map_err(err)
    }

    fn syzygy_iter(&self, x: Coord, k: i64) -> PyResult<Option<Coord>> {
        self.inner.syzygy_iter(coord(x), k).map(out).map_err(err)
    }

    fn tau(&self, x: Coord) -> PyResult<Option<Coord>> {
        self.inner.tau(coord(x)).map(out).map_err(err)
    }

    fn tau_inv(&self, x: Coord) -> PyResult<Option<Coord>> {
        self.inner.tau_inv(coord(x)).map(out).map_err(err)
    }

    fn tau_n(&self, x: Coord, n: usize) -> PyResult<Option<Coord>> {
        self.inner.tau_n(coord(x), n).map(out).map_err(err)
    }

    fn tau_n_inv(&self, x: Coord, n: usize) -> PyResult<Option<Coord>> {
        self.inner.tau_n_inv(coord(x), n).map(out).map_err(err)
    }

    /// `(left, middle, right)` of the almost split sequence ending in `right`.
    fn ar_sequence(&self, right: Coord) -> PyResult<(Option<Coord>, Vec<Coord>, Option<Coord>)> {
        let s = self.inner.ar_sequence(coord(right)).map_err(err)?;
        Ok((out(s.left), s.middle.into_iter().filter_map(out).collect(), out(s.right)))
    }

    fn proj_dim(&self, x: Coord) -> PyResult<usize> {
        self.inner.proj_dim(coord(x)).map_err(err)
    }

    fn global_dim(&self) -> usize {
        self.inner.global_dim()
    }

    fn build_nct(&self, n: usize) -> PyResult<Vec<Coord>> {
        cluster_tilting::build_nct(&self.inner, n).map(|s| coords(&s)).map_err(err)
    }

    /// Whether every characterizing condition holds for `build_nct(n)`.
    fn conditions_hold(&self, n: usize) -> PyResult<bool> {
        let c = cluster_tilting::build_nct(&self.inner, n).map_err(err)?;
        let a = cluster_tilting::check_conditions_a(&self.inner, n, &c).map_err(err)?;
        let b = cluster_tilting::check_conditions_b(&self.inner, n, &c).map_err(err)?;
        Ok(a.passes() && b.passes())
    }

    #[pyo3(signature = (highlight_n=None))]
    fn quiver_dot(&self, highlight_n: Option<usize>) -> PyResult<String> {
        Ok(ar_quiver::export_dot(&self.quiver(highlight_n)?))
    }

    #[pyo3(signature = (highlight_n=None))]
    fn quiver_json(&self, highlight_n: Option<usize>) -> PyResult<String> {
        Ok(ar_quiver::export_json(&self.quiver(highlight_n)?))
    }

    /// The Kupisch series `min(k, l)`.
    fn kupisch_series(&self) -> Vec<usize> {
        KupischAlgebra::from(self.inner).series().to_vec()
    }

    fn __repr__(&self) -> String {
        format!("Algebra(m={}, l={})", self.inner.m(), self.inner.l())
    }
}

impl PyAlgebra {
    fn quiver(&self, highlight_n: Option<usize>) -> PyResult<ar_quiver::QuiverGraph> {
        let g = ar_quiver::build(&self.inner);
        match highlight_n {
            None => Ok(g),
            Some(n) => {
                let c = cluster_tilting::build_nct(&self.inner, n).map_err(err)?;
                g.with_highlights(c).map_err(err)
            }
        }
    }
}

#[pyfunction]
fn admits_nct(m: usize, l: usize, n: usize) -> PyResult<bool> {
    cluster_tilting::admits_nct(m, l, n).map_err(err)
}

#[pyfunction]
fn d_rep_finite(m: usize, l: usize) -> PyResult<Option<usize>> {
    cluster_tilting::d_rep_finite(m, l).map_err(err)
}

/// `dim Ext^i(X, Y)` over the algebra with the given Kupisch series.
#[pyfunction]
fn ext_dim(series: Vec<usize>, x: Coord, y: Coord, i: usize) -> PyResult<usize> {
    oracle::ext_dim(&kupisch(series)?, coord(x), coord(y), i).map_err(err)
}

/// Global dimension from minimal projective resolutions.
#[pyfunction]
fn oracle_global_dim(series: Vec<usize>) -> PyResult<usize> {
    Ok(oracle::resolution::global_dim(&kupisch(series)?))
}

#[pyfunction]
fn is_nct(series: Vec<usize>, modules: Vec<Coord>, n: usize) -> PyResult<bool> {
    let alg = kupisch(series)?;
    let c = ModSet::validated(modules.into_iter().map(coord), |x| alg.contains(x)).map_err(err)?;
    oracle::is_nct(&alg, &c, n).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (series, n, budget=oracle::DEFAULT_BUDGET))]
fn exhaustive_nct_search(series: Vec<usize>, n: usize, budget: u64) -> PyResult<Vec<Vec<Coord>>> {
    let opts = SearchOptions {
        budget,
        ..SearchOptions::default()
    };
    let found = NctSearcher::new(&kupisch(series)?).search(n, opts).map_err(err)?.found;
    Ok(found.iter().map(coords).collect())
}

#[pymodule]
fn nakayama_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(admits_nct, m)?)?;
    m.add_function(wrap_pyfunction!(d_rep_finite, m)?)?;
    m.add_function(wrap_pyfunction!(ext_dim, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_global_dim, m)?)?;
    m.add_function(wrap_pyfunction!(is_nct, m)?)?;
    m.add_function(wrap_pyfunction!(exhaustive_nct_search, m)?)?;
    Ok(())
}
