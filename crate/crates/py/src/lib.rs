use pyo3::prelude::*;

#[pymodule]
fn hh3py(_m: &Bound<PyModule>) -> PyResult<()> { Ok(()) }
