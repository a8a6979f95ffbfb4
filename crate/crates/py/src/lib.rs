use pyo3::prelude::*;

#[pymodule]
fn hankel_fcc_py(_py: Python<'_>, _m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
