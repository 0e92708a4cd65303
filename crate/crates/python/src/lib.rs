//! Python bindings: groups, extensions, embeddings, presentation words,
//! Lie straightening and the verification suite.

use std::sync::Arc;

use kkwreath::extensions::{is_split, sections, Extension as CoreExtension, Section};
use kkwreath::free_product::{l_of_extension, FpWord, PresWord};
use kkwreath::group::{FiniteGroup, GroupRef};
use kkwreath::io::{ExtensionDoc, GroupDoc, LieDoc, LieExtensionDoc, SectionDoc};
use kkwreath::kk_embed::{kk_embed, verify_embedding, MorphismRef};
use kkwreath::wreath::wreath_product;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, value: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (value.to_string(),))
}

#[pyclass(name = "Group", frozen)]
struct PyGroup {
    inner: GroupRef,
}

#[pymethods]
impl PyGroup {
    #[staticmethod]
    fn from_table(name: &str, rows: Vec<Vec<usize>>) -> PyResult<Self> {
        let g = FiniteGroup::from_table(name, rows).map_err(err)?;
        Ok(Self { inner: Arc::new(g) })
    }

    #[staticmethod]
    fn from_permutations(name: &str, perms: Vec<Vec<usize>>) -> PyResult<Self> {
        let g = FiniteGroup::from_permutations(name, &perms).map_err(err)?;
        Ok(Self { inner: Arc::new(g) })
    }

    #[staticmethod]
    fn cyclic(n: usize) -> Self {
        Self {
            inner: Arc::new(FiniteGroup::cyclic(n)),
        }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc: GroupDoc = serde_json::from_str(text).map_err(err)?;
        Ok(Self {
            inner: doc.build().map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        kkwreath::io::group_to_json(&self.inner)
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        self.inner.mul(x, y)
    }

    fn inv(&self, x: usize) -> usize {
        self.inner.inv(x)
    }

    fn table(&self) -> Vec<Vec<usize>> {
        self.inner.rows()
    }

    fn is_abelian(&self) -> bool {
        self.inner.is_abelian()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Group({:?}, order={})", self.inner.name(), self.inner.order())
    }
}

/// Order of the wreath product `A wr B`.
#[pyfunction]
fn wreath_order(a: &PyGroup, b: &PyGroup) -> PyResult<usize> {
    Ok(wreath_product(&a.inner, &b.inner).map_err(err)?.order())
}

#[pyclass(name = "Extension", frozen)]
struct PyExtension {
    inner: CoreExtension,
    section: Option<Section>,
}

impl PyExtension {
    fn section_from(&self, section: Option<Vec<usize>>) -> PyResult<Section> {
        match (section, &self.section) {
            (Some(map), _) => Section::new(&self.inner, map).map_err(err),
            (None, Some(s)) => Ok(s.clone()),
            (None, None) => Ok(sections(&self.inner).swap_remove(0)),
        }
    }
}

#[pymethods]
impl PyExtension {
    #[new]
    fn new(a: &PyGroup, g: &PyGroup, b: &PyGroup, k: Vec<usize>, f: Vec<usize>) -> PyResult<Self> {
        let inner = kkwreath::extensions::make_extension(&a.inner, &g.inner, &b.inner, k, f).map_err(err)?;
        Ok(Self { inner, section: None })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc: ExtensionDoc = serde_json::from_str(text).map_err(err)?;
        let (inner, section) = doc.build().map_err(err)?;
        Ok(Self { inner, section })
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&ExtensionDoc::from_extension(&self.inner, self.section.as_ref())).map_err(err)
    }

    #[getter]
    fn a(&self) -> PyGroup {
        PyGroup {
            inner: self.inner.a().clone(),
        }
    }

    #[getter]
    fn g(&self) -> PyGroup {
        PyGroup {
            inner: self.inner.g().clone(),
        }
    }

    #[getter]
    fn b(&self) -> PyGroup {
        PyGroup {
            inner: self.inner.b().clone(),
        }
    }

    /// Every set-theoretic section, as lists `s[b]`.
    fn sections(&self) -> Vec<Vec<usize>> {
        sections(&self.inner).iter().map(|s| s.map().to_vec()).collect()
    }

    /// A homomorphic section, if the extension splits.
    fn splitting(&self) -> Option<Vec<usize>> {
        is_split(&self.inner).map(|s| s.map().to_vec())
    }

    /// The classical embedding for `section`, with its verification.
    #[pyo3(signature = (section=None))]
    fn kk_embed<'py>(&self, py: Python<'py>, section: Option<Vec<usize>>) -> PyResult<Bound<'py, PyAny>> {
        let s = self.section_from(section)?;
        let kk = kk_embed(&self.inner, &s).map_err(err)?;
        let report = verify_embedding(MorphismRef::Plain(&kk.morphism));
        let images: Vec<_> = self
            .inner
            .g()
            .elements()
            .map(|g| {
                let x = kk.element(g);
                serde_json::json!({"h": x.h, "b": x.b})
            })
            .collect();
        let value = serde_json::json!({
            "section": s.map(),
            "wreath_order": kk.wreath.order(),
            "image_order": kk.image_order(),
            "injective": report.injective_a && report.injective_g,
            "diagram_ok": report.diagram_ok,
            "phi_g": kk.morphism.phi_g().map(),
            "images": images,
        });
        to_py(py, &value)
    }

    /// Normal form of a presentation word such as `"(1,0) (1,1)"`.
    fn pres_normal_form(&self, word: &str) -> PyResult<String> {
        let p: PresWord = word.parse().map_err(err)?;
        Ok(l_of_extension(&self.inner).normal_form(&p).to_string())
    }

    /// The free-product word represented by a presentation word.
    fn pres_to_word(&self, word: &str) -> PyResult<String> {
        let p: PresWord = word.parse().map_err(err)?;
        Ok(l_of_extension(&self.inner).pres_to_word(&p).to_string())
    }

    /// The presentation word of a kernel word such as `"g:1 b:1"`.
    fn word_to_pres(&self, word: &str) -> PyResult<String> {
        let w: FpWord = word.parse().map_err(err)?;
        Ok(l_of_extension(&self.inner).word_to_pres(&w).map_err(err)?.to_string())
    }

    /// Reduced kernel words of length at most `maxlen`.
    fn kernel_words(&self, maxlen: usize) -> PyResult<Vec<String>> {
        let words = l_of_extension(&self.inner).kernel_words(maxlen).map_err(err)?;
        Ok(words.iter().map(ToString::to_string).collect())
    }

    fn __repr__(&self) -> String {
        format!(
            "Extension({} -> {} -> {})",
            self.inner.a().name(),
            self.inner.g().name(),
            self.inner.b().name()
        )
    }
}

/// Straightens a word in the basis of a Lie algebra given as JSON, dropping
/// monomials above degree `d`. Returns `(monomial, coefficient)` pairs.
#[pyfunction]
fn pbw_straighten(lie_json: &str, word: Vec<usize>, d: usize) -> PyResult<Vec<(Vec<usize>, String)>> {
    let doc: LieDoc = serde_json::from_str(lie_json).map_err(err)?;
    let b = doc.build().map_err(err)?;
    if word.iter().any(|&i| i >= b.dim()) {
        return Err(PyValueError::new_err("basis index out of range"));
    }
    let u = kkwreath::lie::pbw_straighten(&b, &word, d);
    Ok(u.terms.iter().map(|(m, c)| (m.clone(), c.to_string())).collect())
}

/// Verification entries of the Lie embedding, truncated at degree `d`.
#[pyfunction]
#[pyo3(signature = (extension_json, degree, section_json=None))]
fn lie_embed<'py>(
    py: Python<'py>,
    extension_json: &str,
    degree: usize,
    section_json: Option<&str>,
) -> PyResult<Bound<'py, PyAny>> {
    let doc: LieExtensionDoc = serde_json::from_str(extension_json).map_err(err)?;
    let (e, given) = doc.build().map_err(err)?;
    let s = match section_json {
        Some(text) => serde_json::from_str::<SectionDoc>(text)
            .map_err(err)?
            .build(&e)
            .map_err(err)?,
        None => given.ok_or_else(|| PyValueError::new_err("no section given"))?,
    };
    let checks = kkwreath::lie::verify_lie_embedding(&e, &s, degree).map_err(err)?;
    to_py(py, &serde_json::to_value(checks).map_err(err)?)
}

/// Runs the built-in suite; returns the exit status and the report.
#[pyfunction]
fn run_suite<'py>(py: Python<'py>) -> PyResult<(i32, Bound<'py, PyAny>)> {
    let report = kkwreath::suite::run_suite();
    let value = serde_json::to_value(&report).map_err(err)?;
    Ok((report.exit_code(), to_py(py, &value)?))
}

#[pymodule]
fn pykkwreath(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroup>()?;
    m.add_class::<PyExtension>()?;
    m.add_function(wrap_pyfunction!(wreath_order, m)?)?;
    m.add_function(wrap_pyfunction!(pbw_straighten, m)?)?;
    m.add_function(wrap_pyfunction!(lie_embed, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
