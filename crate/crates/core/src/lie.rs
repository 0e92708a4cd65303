//! Lie algebras over the rationals by structure constants, PBW straightening
//! in a degree-truncated enveloping algebra, the embedding of a Lie algebra
//! extension into `Vect(U(B), A) x B`, and the coinduced module.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, ExactnessFailure, Result};
use crate::linalg::{
    add, add_scaled, cols, column, identity, is_zero, mat_mul, mat_sub, mat_vec, q, rank, scale, solve, solve_any, sub,
    unit_vector, zero_matrix, zeros, Matrix, Solution, Q,
};
use crate::report::{CheckEntry, Status};

/// A PBW monomial: non-decreasing basis indices of `B`.
pub type Monomial = Vec<usize>;

pub(crate) fn qs(v: &[Q]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn monomial_label(m: &[usize]) -> String {
    if m.is_empty() {
        "1".into()
    } else {
        m.iter().map(|i| format!("x{i}")).collect::<Vec<_>>().join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    /// `c[i][j]` is the coordinate vector of `[e_i, e_j]`.
    c: Vec<Vec<Vec<Q>>>,
}

impl LieAlgebra {
    /// Validates antisymmetry and the Jacobi identity on basis triples.
    pub fn new(name: &str, dim: usize, c: Vec<Vec<Vec<Q>>>) -> Result<Self> {
        if c.len() != dim
            || c.iter()
                .any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim))
        {
            return Err(Error::BadShape(format!(
                "structure constants must be {dim} x {dim} x {dim}"
            )));
        }
        for i in 0..dim {
            for j in i..dim {
                if c[i][j] != scale(&q(-1), &c[j][i]) {
                    return Err(Error::AntisymmetryFailure(i, j));
                }
            }
        }
        let alg = Self {
            name: name.into(),
            dim,
            c,
        };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let (ei, ej, ek) = (unit_vector(dim, i), unit_vector(dim, j), unit_vector(dim, k));
                    let t1 = alg.bracket(&ei, &alg.bracket(&ej, &ek));
                    let t2 = alg.bracket(&ej, &alg.bracket(&ek, &ei));
                    let t3 = alg.bracket(&ek, &alg.bracket(&ei, &ej));
                    if !is_zero(&add(&add(&t1, &t2), &t3)) {
                        return Err(Error::JacobiFailure(i, j, k));
                    }
                }
            }
        }
        Ok(alg)
    }

    /// Builds the constants from a list of brackets `[e_i, e_j] = v`.
    /// A pair given in one order only is completed by antisymmetry.
    pub fn from_brackets(name: &str, dim: usize, brackets: &[(usize, usize, Vec<Q>)]) -> Result<Self> {
        let mut explicit: BTreeMap<(usize, usize), Vec<Q>> = BTreeMap::new();
        for (i, j, v) in brackets {
            if *i >= dim || *j >= dim || v.len() != dim {
                return Err(Error::BadShape(format!(
                    "bracket ({i}, {j}) out of range for dimension {dim}"
                )));
            }
            if let Some(prev) = explicit.insert((*i, *j), v.clone()) {
                if prev != *v {
                    return Err(Error::AntisymmetryFailure(*i, *j));
                }
            }
        }
        let mut c = vec![vec![zeros(dim); dim]; dim];
        for (&(i, j), v) in &explicit {
            if let Some(w) = explicit.get(&(j, i)) {
                if *w != scale(&q(-1), v) {
                    return Err(Error::AntisymmetryFailure(i.min(j), i.max(j)));
                }
            }
            c[i][j] = v.clone();
            c[j][i] = scale(&q(-1), v);
        }
        Self::new(name, dim, c)
    }

    pub fn abelian(name: &str, dim: usize) -> Self {
        Self {
            name: name.into(),
            dim,
            c: vec![vec![zeros(dim); dim]; dim],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure(&self, i: usize, j: usize) -> &[Q] {
        &self.c[i][j]
    }

    pub fn bracket(&self, u: &[Q], v: &[Q]) -> Vec<Q> {
        let mut out = zeros(self.dim);
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                add_scaled(&mut out, &(ui * vj), &self.c[i][j]);
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().flatten().all(|v| is_zero(v))
    }

    /// Non-zero brackets `[e_i, e_j]` with `i < j`.
    pub fn brackets(&self) -> Vec<(usize, usize, Vec<Q>)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if !is_zero(&self.c[i][j]) {
                    out.push((i, j, self.c[i][j].clone()));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "dim": self.dim,
            "brackets": self.brackets().into_iter().map(|(i, j, v)| json!([i, j, qs(&v)])).collect::<Vec<_>>(),
        })
    }
}

pub fn make_lie(name: &str, dim: usize, c: Vec<Vec<Vec<Q>>>) -> Result<LieAlgebra> {
    LieAlgebra::new(name, dim, c)
}

fn check_bracket_preserved(domain: &LieAlgebra, codomain: &LieAlgebra, matrix: &Matrix) -> Result<()> {
    for i in 0..domain.dim() {
        for j in i + 1..domain.dim() {
            let lhs = mat_vec(matrix, domain.structure(i, j));
            let rhs = codomain.bracket(&column(matrix, i), &column(matrix, j));
            if lhs != rhs {
                return Err(Error::NotALieHom(i, j));
            }
        }
    }
    Ok(())
}

fn check_shape(matrix: &Matrix, rows: usize, columns: usize) -> Result<()> {
    if matrix.len() != rows || matrix.iter().any(|r| r.len() != columns) {
        return Err(Error::BadShape(format!("expected a {rows} x {columns} matrix")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieHom {
    domain: LieAlgebra,
    codomain: LieAlgebra,
    /// `codomain.dim` rows, `domain.dim` columns.
    matrix: Matrix,
}

impl LieHom {
    pub fn new(domain: &LieAlgebra, codomain: &LieAlgebra, matrix: Matrix) -> Result<Self> {
        check_shape(&matrix, codomain.dim(), domain.dim())?;
        check_bracket_preserved(domain, codomain, &matrix)?;
        Ok(Self {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix,
        })
    }

    pub fn domain(&self) -> &LieAlgebra {
        &self.domain
    }

    pub fn codomain(&self) -> &LieAlgebra {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        mat_vec(&self.matrix, v)
    }
}

pub fn lie_hom_check(domain: &LieAlgebra, codomain: &LieAlgebra, matrix: Matrix) -> Result<LieHom> {
    LieHom::new(domain, codomain, matrix)
}

/// A short exact sequence `0 -> A -> G -> B -> 0` of Lie algebras.
#[derive(Debug, Clone)]
pub struct LieExtension {
    k: LieHom,
    f: LieHom,
}

impl LieExtension {
    pub fn new(k: LieHom, f: LieHom) -> Result<Self> {
        if k.codomain() != f.domain() {
            return Err(Error::BadShape("k and f do not compose".into()));
        }
        let (na, ng, nb) = (k.domain().dim(), k.codomain().dim(), f.codomain().dim());
        if rank(k.matrix(), na) != na {
            return Err(Error::NotExact {
                which: ExactnessFailure::KernelMapNotInjective,
                witness: 0,
            });
        }
        if rank(f.matrix(), ng) != nb {
            return Err(Error::NotExact {
                which: ExactnessFailure::QuotientMapNotSurjective,
                witness: 0,
            });
        }
        let fk = mat_mul(f.matrix(), k.matrix());
        if let Some(j) = (0..na).find(|&j| !is_zero(&column(&fk, j))) {
            return Err(Error::NotExact {
                which: ExactnessFailure::ImageDiffersFromKernel,
                witness: j,
            });
        }
        if na + nb != ng {
            return Err(Error::NotExact {
                which: ExactnessFailure::ImageDiffersFromKernel,
                witness: ng,
            });
        }
        Ok(Self { k, f })
    }

    pub fn a(&self) -> &LieAlgebra {
        self.k.domain()
    }

    pub fn g(&self) -> &LieAlgebra {
        self.k.codomain()
    }

    pub fn b(&self) -> &LieAlgebra {
        self.f.codomain()
    }

    pub fn k(&self) -> &LieHom {
        &self.k
    }

    pub fn f(&self) -> &LieHom {
        &self.f
    }

    /// The unique `a` with `k(a) = v`, if any.
    pub fn k_inv(&self, v: &[Q]) -> Option<Vec<Q>> {
        solve_any(self.k.matrix(), self.a().dim(), v)
    }
}

pub fn make_lie_extension(k: LieHom, f: LieHom) -> Result<LieExtension> {
    LieExtension::new(k, f)
}

/// A linear right inverse of `f`; no bracket condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSection {
    matrix: Matrix,
}

impl LinearSection {
    pub fn new(e: &LieExtension, matrix: Matrix) -> Result<Self> {
        check_shape(&matrix, e.g().dim(), e.b().dim())?;
        if mat_mul(e.f().matrix(), &matrix) != identity(e.b().dim()) {
            return Err(Error::NotALinearSection);
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, b: &[Q]) -> Vec<Q> {
        mat_vec(&self.matrix, b)
    }

    pub fn is_lie_hom(&self, e: &LieExtension) -> bool {
        check_bracket_preserved(e.b(), e.g(), &self.matrix).is_ok()
    }
}

pub fn make_section(e: &LieExtension, matrix: Matrix) -> Result<LinearSection> {
    LinearSection::new(e, matrix)
}

/// `A x| B` on the basis `A` then `B`, with `[b, a] = rho(b) a`, together
/// with the inclusion of `B` as a homomorphic section.
pub fn semidirect_lie(
    name: &str,
    a: &LieAlgebra,
    b: &LieAlgebra,
    rho: &[Matrix],
) -> Result<(LieExtension, LinearSection)> {
    let (na, nb) = (a.dim(), b.dim());
    if rho.len() != nb {
        return Err(Error::BadShape(format!(
            "{} action matrices for dim B = {nb}",
            rho.len()
        )));
    }
    for r in rho {
        check_shape(r, na, na)?;
    }
    let n = na + nb;
    let lift_a = |v: &[Q]| {
        let mut out = v.to_vec();
        out.extend(zeros(nb));
        out
    };
    let lift_b = |v: &[Q]| {
        let mut out = zeros(na);
        out.extend_from_slice(v);
        out
    };
    let mut c = vec![vec![zeros(n); n]; n];
    for i in 0..na {
        for j in 0..na {
            c[i][j] = lift_a(a.structure(i, j));
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            c[na + i][na + j] = lift_b(b.structure(i, j));
        }
        for j in 0..na {
            let v = lift_a(&column(&rho[i], j));
            c[j][na + i] = scale(&q(-1), &v);
            c[na + i][j] = v;
        }
    }
    let g = LieAlgebra::new(name, n, c)?;
    let mut k = zero_matrix(n, na);
    for (i, row) in k.iter_mut().enumerate().take(na) {
        row[i] = Q::one();
    }
    let mut f = zero_matrix(nb, n);
    let mut s = zero_matrix(n, nb);
    for i in 0..nb {
        f[i][na + i] = Q::one();
        s[na + i][i] = Q::one();
    }
    let e = LieExtension::new(LieHom::new(a, &g, k)?, LieHom::new(&g, b, f)?)?;
    let s = LinearSection::new(&e, s)?;
    Ok((e, s))
}

/// An element of the enveloping algebra `U(B)` truncated at degree `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UEnvElement {
    pub terms: BTreeMap<Monomial, Q>,
    pub degree_bound: usize,
}

impl UEnvElement {
    pub fn coefficient(&self, m: &[usize]) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for UEnvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({c}) {}", monomial_label(m)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Which out-of-order pair a straightening step rewrites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteOrder {
    FirstDescent,
    LastDescent,
}

pub fn pbw_straighten(b: &LieAlgebra, word: &[usize], d: usize) -> UEnvElement {
    pbw_straighten_with(b, word, d, RewriteOrder::FirstDescent)
}

/// Rewrites `x_j x_i = x_i x_j + [x_j, x_i]` for `j > i` until every
/// monomial is sorted, dropping monomials of degree above `d`.
pub fn pbw_straighten_with(b: &LieAlgebra, word: &[usize], d: usize, order: RewriteOrder) -> UEnvElement {
    let mut out: BTreeMap<Monomial, Q> = BTreeMap::new();
    let mut stack: Vec<(Vec<usize>, Q)> = vec![(word.to_vec(), Q::one())];
    while let Some((w, c)) = stack.pop() {
        if c.is_zero() || w.len() > d {
            continue;
        }
        let mut descents = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]);
        let pos = match order {
            RewriteOrder::FirstDescent => descents.next(),
            RewriteOrder::LastDescent => descents.next_back(),
        };
        match pos {
            None => *out.entry(w).or_insert_with(Q::zero) += c,
            Some(i) => {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                for (k, ck) in b.structure(w[i], w[i + 1]).iter().enumerate() {
                    if ck.is_zero() {
                        continue;
                    }
                    let mut shorter = w[..i].to_vec();
                    shorter.push(k);
                    shorter.extend_from_slice(&w[i + 2..]);
                    stack.push((shorter, &c * ck));
                }
                stack.push((swapped, c));
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    UEnvElement {
        terms: out,
        degree_bound: d,
    }
}

/// Ordered splits of `m` into a subsequence and its complement, with
/// multiplicities. Both parts of a sorted monomial are sorted.
pub fn coproduct_split(m: &[usize]) -> Vec<(Monomial, Monomial, usize)> {
    let mut counts: BTreeMap<(Monomial, Monomial), usize> = BTreeMap::new();
    for mask in 0u64..(1u64 << m.len()) {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (pos, &x) in m.iter().enumerate() {
            if mask & (1 << pos) != 0 {
                left.push(x);
            } else {
                right.push(x);
            }
        }
        *counts.entry((left, right)).or_insert(0) += 1;
    }
    counts.into_iter().map(|((l, r), n)| (l, r, n)).collect()
}

/// Sorted monomials in `dim` letters of degree at most `d`, by degree.
pub fn monomials(dim: usize, d: usize) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Monomial> = vec![Vec::new()];
    for _ in 0..d {
        let mut next = Vec::new();
        for m in &layer {
            let start = m.last().copied().unwrap_or(0);
            for i in start..dim {
                let mut n = m.clone();
                n.push(i);
                next.push(n);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// An `A`-valued function on the PBW monomials of degree at most `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTable {
    dim_b: usize,
    dim_a: usize,
    degree: usize,
    values: BTreeMap<Monomial, Vec<Q>>,
}

impl DualTable {
    pub fn zero(dim_b: usize, dim_a: usize, degree: usize) -> Self {
        Self::from_fn(dim_b, dim_a, degree, |_| zeros(dim_a))
    }

    pub fn from_fn(dim_b: usize, dim_a: usize, degree: usize, mut value: impl FnMut(&[usize]) -> Vec<Q>) -> Self {
        let values = monomials(dim_b, degree)
            .into_iter()
            .map(|m| {
                let v = value(&m);
                (m, v)
            })
            .collect();
        Self {
            dim_b,
            dim_a,
            degree,
            values,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn get(&self, m: &[usize]) -> Result<&[Q]> {
        if m.len() > self.degree {
            return Err(Error::DegreeOverflow {
                requested: m.len(),
                bound: self.degree,
            });
        }
        self.values
            .get(m)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::BadShape(format!("monomial {m:?} is not sorted")))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Monomial, &Vec<Q>)> {
        self.values.iter()
    }

    /// Extends linearly over an enveloping-algebra element.
    pub fn eval(&self, u: &UEnvElement) -> Result<Vec<Q>> {
        let mut out = zeros(self.dim_a);
        for (m, c) in &u.terms {
            add_scaled(&mut out, c, self.get(m)?);
        }
        Ok(out)
    }

    pub fn truncate(&self, degree: usize) -> DualTable {
        let degree = degree.min(self.degree);
        Self {
            dim_b: self.dim_b,
            dim_a: self.dim_a,
            degree,
            values: self
                .values
                .iter()
                .filter(|(m, _)| m.len() <= degree)
                .map(|(m, v)| (m.clone(), v.clone()))
                .collect(),
        }
    }

    fn zip_with(&self, other: &DualTable, op: impl Fn(&[Q], &[Q]) -> Vec<Q>) -> DualTable {
        let degree = self.degree.min(other.degree);
        Self::from_fn(self.dim_b, self.dim_a, degree, |m| {
            op(&self.values[m], &other.values[m])
        })
    }

    pub fn add(&self, other: &DualTable) -> DualTable {
        self.zip_with(other, add)
    }

    pub fn sub(&self, other: &DualTable) -> DualTable {
        self.zip_with(other, sub)
    }

    pub fn scale(&self, c: &Q) -> DualTable {
        Self::from_fn(self.dim_b, self.dim_a, self.degree, |m| scale(c, &self.values[m]))
    }

    /// First monomial of degree at most `degree` where the tables differ.
    pub fn first_difference(&self, other: &DualTable, degree: usize) -> Option<Monomial> {
        self.values
            .iter()
            .filter(|(m, _)| m.len() <= degree)
            .find(|(m, v)| other.values.get(*m) != Some(v))
            .map(|(m, _)| m.clone())
    }

    /// All values, monomial by monomial, as one coordinate vector.
    pub fn flatten(&self) -> Vec<Q> {
        self.values.values().flatten().cloned().collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.values
                .iter()
                .map(|(m, v)| json!({"monomial": monomial_label(m), "value": qs(v)}))
                .collect(),
        )
    }
}

/// An element `(h, b)` of `Vect(U(B), A) x B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieWreathElement {
    pub h: DualTable,
    pub b: Vec<Q>,
}

impl LieWreathElement {
    pub fn add(&self, other: &Self) -> Self {
        Self {
            h: self.h.add(&other.h),
            b: add(&self.b, &other.b),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self {
            h: self.h.scale(c),
            b: scale(c, &self.b),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"h": self.h.to_json(), "b": qs(&self.b)})
    }
}

/// Sign and side choices for the bracket on `Vect(U(B), A) x B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BracketConvention {
    /// `(b . h)(m) = h(m b)` when true, `h(b m)` otherwise.
    pub right_action: bool,
    pub action_sign: i8,
    pub convolution_sign: i8,
}

impl Default for BracketConvention {
    fn default() -> Self {
        Self {
            right_action: true,
            action_sign: 1,
            convolution_sign: 1,
        }
    }
}

impl BracketConvention {
    pub fn all() -> Vec<BracketConvention> {
        let mut out = Vec::new();
        for right_action in [true, false] {
            for action_sign in [1, -1] {
                for convolution_sign in [1, -1] {
                    out.push(Self {
                        right_action,
                        action_sign,
                        convolution_sign,
                    });
                }
            }
        }
        out
    }
}

/// Bracket arithmetic on `Vect(U(B), A) x B`.
#[derive(Debug, Clone)]
pub struct LieWreath {
    a: LieAlgebra,
    b: LieAlgebra,
    convention: BracketConvention,
}

impl LieWreath {
    pub fn new(a: &LieAlgebra, b: &LieAlgebra) -> Self {
        Self::with_convention(a, b, BracketConvention::default())
    }

    pub fn with_convention(a: &LieAlgebra, b: &LieAlgebra, convention: BracketConvention) -> Self {
        Self {
            a: a.clone(),
            b: b.clone(),
            convention,
        }
    }

    /// `(b . h)(m) = h(straighten(m b))`; valid one degree below `h`.
    pub fn act(&self, bvec: &[Q], h: &DualTable) -> Result<DualTable> {
        let degree = h.degree().saturating_sub(1);
        let mut err = None;
        let table = DualTable::from_fn(self.b.dim(), self.a.dim(), degree, |m| {
            let mut out = zeros(self.a.dim());
            for (k, ck) in bvec.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let mut word = m.to_vec();
                if self.convention.right_action {
                    word.push(k);
                } else {
                    word.insert(0, k);
                }
                match h.eval(&pbw_straighten(&self.b, &word, h.degree())) {
                    Ok(v) => add_scaled(&mut out, ck, &v),
                    Err(e) => err = Some(e),
                }
            }
            out
        });
        err.map_or(Ok(table), Err)
    }

    /// `conv(h1, h2)(m) = sum over splits (l, r) of [h1(l), h2(r)]`.
    pub fn convolution(&self, h1: &DualTable, h2: &DualTable) -> DualTable {
        let degree = h1.degree().min(h2.degree());
        DualTable::from_fn(self.b.dim(), self.a.dim(), degree, |m| {
            let mut out = zeros(self.a.dim());
            for (l, r, n) in coproduct_split(m) {
                let v = self.a.bracket(&h1.values[&l], &h2.values[&r]);
                add_scaled(&mut out, &q(n as i64), &v);
            }
            out
        })
    }

    /// `[(h1, b1), (h2, b2)] = (conv(h1, h2) + b1 . h2 - b2 . h1, [b1, b2])`.
    pub fn bracket(&self, u: &LieWreathElement, v: &LieWreathElement) -> Result<LieWreathElement> {
        let c = self.convention;
        let action = self.act(&u.b, &v.h)?.sub(&self.act(&v.b, &u.h)?);
        let conv = self.convolution(&u.h, &v.h);
        let h = conv
            .scale(&q(c.convolution_sign as i64))
            .add(&action.scale(&q(c.action_sign as i64)));
        Ok(LieWreathElement {
            h,
            b: self.b.bracket(&u.b, &v.b),
        })
    }
}

pub fn wreath_bracket(e: &LieExtension, u: &LieWreathElement, v: &LieWreathElement) -> Result<LieWreathElement> {
    LieWreath::new(e.a(), e.b()).bracket(u, v)
}

/// `h'_a(x_{i1} ... x_{ir}) = k^{-1}[s(x_{i1}), [ ..., [s(x_{ir}), k(a)] ... ]]`.
pub fn h_prime(e: &LieExtension, s: &LinearSection, a: &[Q], d: usize) -> Result<DualTable> {
    let g = e.g();
    let nb = e.b().dim();
    let s_cols: Vec<Vec<Q>> = (0..nb).map(|i| column(s.matrix(), i)).collect();
    let ka = e.k().apply(a);
    let mut err = None;
    let table = DualTable::from_fn(nb, e.a().dim(), d, |m| {
        let mut v = ka.clone();
        for &i in m.iter().rev() {
            v = g.bracket(&s_cols[i], &v);
        }
        e.k_inv(&v).unwrap_or_else(|| {
            err = Some(Error::BracketOutsideKernel(monomial_label(m)));
            zeros(e.a().dim())
        })
    });
    err.map_or(Ok(table), Err)
}

/// `g -> (h'_{g - s f(g)}, f(g))`.
pub fn lie_kk_embed(e: &LieExtension, s: &LinearSection, g: &[Q], d: usize) -> Result<LieWreathElement> {
    let fg = e.f().apply(g);
    let rest = sub(g, &s.apply(&fg));
    let a = e
        .k_inv(&rest)
        .ok_or_else(|| Error::BracketOutsideKernel("g - s f(g)".into()))?;
    Ok(LieWreathElement {
        h: h_prime(e, s, &a, d)?,
        b: fg,
    })
}

/// Where the homomorphism law fails for a pair of basis vectors of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomDefect {
    pub pair: (usize, usize),
    /// `None` when the `B` parts differ.
    pub monomial: Option<Monomial>,
    pub lhs: Vec<Q>,
    pub rhs: Vec<Q>,
}

impl HomDefect {
    fn to_json(&self) -> Value {
        json!({
            "pair": [self.pair.0, self.pair.1],
            "monomial": self.monomial.as_ref().map(|m| monomial_label(m)),
            "bracket_of_images": qs(&self.lhs),
            "image_of_bracket": qs(&self.rhs),
        })
    }
}

/// Compares `[phi(e_i), phi(e_j)]` with `phi([e_i, e_j])` on monomials of
/// degree at most `d - 1`, for all basis pairs `i < j`.
pub fn homomorphism_defects(
    e: &LieExtension,
    s: &LinearSection,
    d: usize,
    convention: BracketConvention,
) -> Result<Vec<HomDefect>> {
    let g = e.g();
    let w = LieWreath::with_convention(e.a(), e.b(), convention);
    let phi: Vec<LieWreathElement> = (0..g.dim())
        .map(|i| lie_kk_embed(e, s, &unit_vector(g.dim(), i), d))
        .collect::<Result<_>>()?;
    let mut defects = Vec::new();
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let lhs = w.bracket(&phi[i], &phi[j])?;
            let rhs = lie_kk_embed(e, s, g.structure(i, j), d)?;
            if lhs.b != rhs.b {
                defects.push(HomDefect {
                    pair: (i, j),
                    monomial: None,
                    lhs: lhs.b,
                    rhs: rhs.b,
                });
            } else if let Some(m) = lhs.h.first_difference(&rhs.h, d.saturating_sub(1)) {
                defects.push(HomDefect {
                    pair: (i, j),
                    lhs: lhs.h.get(&m)?.to_vec(),
                    rhs: rhs.h.get(&m)?.to_vec(),
                    monomial: Some(m),
                });
            }
        }
    }
    Ok(defects)
}

/// Which bracket conventions satisfy the homomorphism law on a fixture.
pub fn probe_conventions(e: &LieExtension, s: &LinearSection, d: usize) -> Result<Vec<(BracketConvention, bool)>> {
    BracketConvention::all()
        .into_iter()
        .map(|c| Ok((c, homomorphism_defects(e, s, d, c)?.is_empty())))
        .collect()
}

/// Checks linearity, injectivity, compatibility with `f`, the restriction to
/// `A`, and the homomorphism law. The law is asserted only when `s` is a Lie
/// homomorphism; otherwise its outcome is informational.
pub fn verify_lie_embedding(e: &LieExtension, s: &LinearSection, d: usize) -> Result<Vec<CheckEntry>> {
    let (ng, na) = (e.g().dim(), e.a().dim());
    let basis: Vec<Vec<Q>> = (0..ng).map(|i| unit_vector(ng, i)).collect();
    let phi: Vec<LieWreathElement> = basis.iter().map(|g| lie_kk_embed(e, s, g, d)).collect::<Result<_>>()?;
    let mut checks = Vec::new();

    let mut linear_failures = Vec::new();
    for i in 0..ng {
        for j in i..ng {
            let sum = lie_kk_embed(e, s, &add(&basis[i], &basis[j]), d)?;
            if sum != phi[i].add(&phi[j]) {
                linear_failures.push(json!([i, j]));
            }
        }
    }
    let coeffs: Vec<Q> = (0..ng)
        .map(|i| Q::new((i as i64 + 1).into(), (i as i64 + 2).into()))
        .collect();
    let combo = lie_kk_embed(e, s, &coeffs, d)?;
    let expected = phi.iter().zip(&coeffs).fold(
        LieWreathElement {
            h: DualTable::zero(e.b().dim(), na, d),
            b: zeros(e.b().dim()),
        },
        |acc, (p, c)| acc.add(&p.scale(c)),
    );
    if combo != expected {
        linear_failures.push(json!("rational combination"));
    }
    checks.push(CheckEntry::check(
        "lie.linearity",
        "the embedding is linear",
        linear_failures.is_empty(),
        json!(linear_failures),
    ));

    let columns: Vec<Vec<Q>> = phi
        .iter()
        .map(|p| {
            let mut v = p.h.flatten();
            v.extend(p.b.iter().cloned());
            v
        })
        .collect();
    let rows = crate::linalg::transpose(&columns, columns.first().map_or(0, Vec::len));
    let r = rank(&rows, ng);
    checks.push(CheckEntry::check(
        "lie.injectivity",
        "the embedding is injective",
        r == ng,
        json!({"rank": r, "dim": ng}),
    ));

    let pi_failures: Vec<usize> = (0..ng).filter(|&i| phi[i].b != e.f().apply(&basis[i])).collect();
    checks.push(CheckEntry::check(
        "lie.pi_compatibility",
        "the B part of the image of g is f(g)",
        pi_failures.is_empty(),
        json!(pi_failures),
    ));

    let mut restriction_failures = Vec::new();
    for i in 0..na {
        let a = unit_vector(na, i);
        let img = lie_kk_embed(e, s, &e.k().apply(&a), d)?;
        if img.h != h_prime(e, s, &a, d)? || !is_zero(&img.b) {
            restriction_failures.push(i);
        }
    }
    checks.push(CheckEntry::check(
        "lie.kernel_restriction",
        "restricted to A the embedding is a -> (h'_a, 0)",
        restriction_failures.is_empty(),
        json!(restriction_failures),
    ));

    let defects = homomorphism_defects(e, s, d, BracketConvention::default())?;
    let split = s.is_lie_hom(e);
    let status = if split {
        Status::from_bool(defects.is_empty())
    } else {
        Status::Informational
    };
    checks.push(CheckEntry::new(
        "lie.homomorphism_law",
        format!(
            "the embedding preserves brackets up to degree {}{}",
            d.saturating_sub(1),
            if split {
                ""
            } else {
                " (section is not a homomorphism; not asserted)"
            }
        ),
        status,
        json!({
            "section_is_homomorphism": split,
            "defects": defects.iter().map(HomDefect::to_json).collect::<Vec<_>>(),
        }),
    ));
    Ok(checks)
}

/// A representation `rho: B -> gl(M)` on `M = Q^dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieModule {
    b: LieAlgebra,
    dim: usize,
    rho: Vec<Matrix>,
}

impl LieModule {
    pub fn new(b: &LieAlgebra, dim: usize, rho: Vec<Matrix>) -> Result<Self> {
        if rho.len() != b.dim() {
            return Err(Error::BadShape(format!(
                "{} matrices for dim B = {}",
                rho.len(),
                b.dim()
            )));
        }
        for r in &rho {
            check_shape(r, dim, dim)?;
        }
        for i in 0..b.dim() {
            for j in i + 1..b.dim() {
                let mut lhs = zero_matrix(dim, dim);
                for (k, c) in b.structure(i, j).iter().enumerate() {
                    for (row, rrow) in lhs.iter_mut().zip(&rho[k]) {
                        add_scaled(row, c, rrow);
                    }
                }
                let rhs = mat_sub(&mat_mul(&rho[i], &rho[j]), &mat_mul(&rho[j], &rho[i]));
                if lhs != rhs {
                    return Err(Error::NotAModule(i, j));
                }
            }
        }
        Ok(Self { b: b.clone(), dim, rho })
    }

    pub fn trivial(b: &LieAlgebra, dim: usize) -> Self {
        Self {
            b: b.clone(),
            dim,
            rho: vec![zero_matrix(dim, dim); b.dim()],
        }
    }

    pub fn base(&self) -> &LieAlgebra {
        &self.b
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    /// `x_{i1} ... x_{ir} . v = rho_{i1}( ... rho_{ir}(v))`.
    pub fn act_word(&self, word: &[usize], v: &[Q]) -> Vec<Q> {
        word.iter()
            .rev()
            .fold(v.to_vec(), |acc, &i| mat_vec(&self.rho[i], &acc))
    }
}

/// The coinduced module `Vect(U(B), A)` truncated at degree `d`.
#[derive(Debug, Clone)]
pub struct Coinduced {
    b: LieAlgebra,
    dim_a: usize,
    d: usize,
}

pub fn lie_coinduced(b: &LieAlgebra, dim_a: usize, d: usize) -> Coinduced {
    Coinduced { b: b.clone(), dim_a, d }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalityCertificate {
    pub evaluation_ok: bool,
    pub equivariant_ok: bool,
    pub unique: bool,
    pub matches_lift: bool,
    pub unknowns: usize,
}

impl UniversalityCertificate {
    pub fn all_ok(&self) -> bool {
        self.evaluation_ok && self.equivariant_ok && self.unique && self.matches_lift
    }
}

impl Coinduced {
    pub fn degree(&self) -> usize {
        self.d
    }

    /// `(x_i . h)(m) = h(straighten(m x_i))`.
    pub fn act(&self, i: usize, h: &DualTable) -> Result<DualTable> {
        let a = LieAlgebra::abelian("A", self.dim_a);
        LieWreath::new(&a, &self.b).act(&unit_vector(self.b.dim(), i), h)
    }

    /// `u -> gamma(u . m)`.
    pub fn lift(&self, module: &LieModule, gamma: &Matrix, m: &[Q]) -> DualTable {
        DualTable::from_fn(self.b.dim(), self.dim_a, self.d, |u| {
            mat_vec(gamma, &module.act_word(u, m))
        })
    }

    /// `a -> (u -> u . a)`.
    pub fn unit(&self, module: &LieModule, a: &[Q]) -> Result<DualTable> {
        if module.dim() != self.dim_a {
            return Err(Error::BadShape(
                "module dimension differs from the coinduced target".into(),
            ));
        }
        Ok(self.lift(module, &identity(self.dim_a), a))
    }

    /// Injectivity of the unit (rank) and equivariance below degree `d`.
    pub fn unit_checks(&self, module: &LieModule) -> Result<(bool, bool)> {
        let n = self.dim_a;
        let images: Vec<DualTable> = (0..n)
            .map(|i| self.unit(module, &unit_vector(n, i)))
            .collect::<Result<_>>()?;
        let columns: Vec<Vec<Q>> = images.iter().map(DualTable::flatten).collect();
        let injective = rank(&crate::linalg::transpose(&columns, cols(&columns)), n) == n;
        let mut equivariant = true;
        for i in 0..self.b.dim() {
            for (j, img) in images.iter().enumerate() {
                let moved = self.unit(module, &mat_vec(&module.rho()[i], &unit_vector(n, j)))?;
                let acted = self.act(i, img)?;
                equivariant &= moved.first_difference(&acted, self.d.saturating_sub(1)).is_none();
            }
        }
        Ok((injective, equivariant))
    }

    /// Certifies that `lift` is the unique equivariant map whose evaluation
    /// at the empty monomial is `gamma`, by solving for all such maps.
    pub fn certify(&self, module: &LieModule, gamma: &Matrix) -> Result<UniversalityCertificate> {
        check_shape(gamma, self.dim_a, module.dim())?;
        let (nm, na, nb) = (module.dim(), self.dim_a, self.b.dim());
        let monos = monomials(nb, self.d);
        let index: BTreeMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let nmon = monos.len();
        let var = |j: usize, mi: usize, t: usize| (j * nmon + mi) * na + t;
        let unknowns = nm * nmon * na;

        let mut rows: Matrix = Vec::new();
        let mut rhs: Vec<Q> = Vec::new();
        for j in 0..nm {
            for t in 0..na {
                let mut row = zeros(unknowns);
                row[var(j, 0, t)] = Q::one();
                rows.push(row);
                rhs.push(gamma[t][j].clone());
            }
        }
        for i in 0..nb {
            for j in 0..nm {
                for (ui, u) in monos.iter().enumerate().filter(|(_, u)| u.len() < self.d) {
                    let mut word = u.clone();
                    word.push(i);
                    let straight = pbw_straighten(&self.b, &word, self.d);
                    for t in 0..na {
                        let mut row = zeros(unknowns);
                        for l in 0..nm {
                            row[var(l, ui, t)] += &module.rho()[i][l][j];
                        }
                        for (m, c) in &straight.terms {
                            row[var(j, index[m], t)] -= c;
                        }
                        rows.push(row);
                        rhs.push(Q::zero());
                    }
                }
            }
        }

        let lifts: Vec<DualTable> = (0..nm).map(|j| self.lift(module, gamma, &unit_vector(nm, j))).collect();
        let evaluation_ok = (0..nm).all(|j| lifts[j].values[&Vec::new()] == column(gamma, j));
        let mut equivariant_ok = true;
        for i in 0..nb {
            for j in 0..nm {
                let moved = mat_vec(&module.rho()[i], &unit_vector(nm, j));
                let lhs = self.lift(module, gamma, &moved);
                let rhs_table = self.act(i, &lifts[j])?;
                equivariant_ok &= lhs.first_difference(&rhs_table, self.d.saturating_sub(1)).is_none();
            }
        }
        let (unique, matches_lift) = match solve(&rows, unknowns, &rhs) {
            Solution::Unique(x) => {
                let matches = (0..nm).all(|j| {
                    monos
                        .iter()
                        .enumerate()
                        .all(|(mi, m)| (0..na).all(|t| x[var(j, mi, t)] == lifts[j].values[m][t]))
                });
                (true, matches)
            }
            _ => (false, false),
        };
        Ok(UniversalityCertificate {
            evaluation_ok,
            equivariant_ok,
            unique,
            matches_lift,
            unknowns,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{from_ints, q_frac};

    fn v(xs: &[i64]) -> Vec<Q> {
        xs.iter().map(|&x| q(x)).collect()
    }

    fn k1() -> LieAlgebra {
        LieAlgebra::abelian("K", 1)
    }

    fn aff1() -> (LieExtension, LinearSection) {
        semidirect_lie("aff1", &k1(), &k1(), &[from_ints(&[&[1]])]).unwrap()
    }

    fn solvable() -> LieAlgebra {
        LieAlgebra::from_brackets("solvable", 2, &[(0, 1, v(&[0, 1]))]).unwrap()
    }

    fn h3() -> (LieExtension, LinearSection) {
        let g = LieAlgebra::from_brackets("h3", 3, &[(0, 1, v(&[0, 0, 1]))]).unwrap();
        let (a, b) = (k1(), LieAlgebra::abelian("K2", 2));
        let k = LieHom::new(&a, &g, from_ints(&[&[0], &[0], &[1]])).unwrap();
        let f = LieHom::new(&g, &b, from_ints(&[&[1, 0, 0], &[0, 1, 0]])).unwrap();
        let e = LieExtension::new(k, f).unwrap();
        let s = LinearSection::new(&e, from_ints(&[&[1, 0], &[0, 1], &[0, 0]])).unwrap();
        (e, s)
    }

    fn mono(terms: &[(&[usize], Q)]) -> BTreeMap<Monomial, Q> {
        terms.iter().map(|(m, c)| (m.to_vec(), c.clone())).collect()
    }

    #[test]
    fn validation() {
        assert!(h3().0.g().dim() == 3);
        assert!(LieAlgebra::abelian("K2", 2).is_abelian());
        let bad = LieAlgebra::from_brackets("bad", 3, &[(0, 1, v(&[0, 0, 1])), (1, 0, v(&[0, 0, 1]))]);
        assert_eq!(bad.unwrap_err(), Error::AntisymmetryFailure(0, 1));
        // [e0,e1]=e1, [e1,e2]=e0, [e0,e2]=0 breaks Jacobi
        let jac = LieAlgebra::from_brackets("nj", 3, &[(0, 1, v(&[0, 1, 0])), (1, 2, v(&[1, 0, 0]))]);
        assert!(matches!(jac, Err(Error::JacobiFailure(..))));
    }

    #[test]
    fn straightening_examples() {
        let b = solvable();
        assert_eq!(
            pbw_straighten(&b, &[1, 0], 3).terms,
            mono(&[(&[0, 1], q(1)), (&[1], q(-1))])
        );
        assert_eq!(
            pbw_straighten(&b, &[1, 1, 0], 3).terms,
            mono(&[(&[0, 1, 1], q(1)), (&[1, 1], q(-2))])
        );
        let ab = LieAlgebra::abelian("K2", 2);
        assert_eq!(pbw_straighten(&ab, &[1, 0, 1], 3).terms, mono(&[(&[0, 1, 1], q(1))]));
        assert!(pbw_straighten(&b, &[1, 0], 1).terms.is_empty());
    }

    #[test]
    fn straightening_is_confluent() {
        let b = solvable();
        for len in 0..=4 {
            for code in 0..(1usize << len) {
                let word: Vec<usize> = (0..len).map(|i| (code >> i) & 1).collect();
                assert_eq!(
                    pbw_straighten_with(&b, &word, 4, RewriteOrder::FirstDescent),
                    pbw_straighten_with(&b, &word, 4, RewriteOrder::LastDescent)
                );
            }
        }
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(coproduct_split(&[]), vec![(vec![], vec![], 1)]);
        assert_eq!(coproduct_split(&[0]), vec![(vec![], vec![0], 1), (vec![0], vec![], 1)]);
        let splits = coproduct_split(&[0, 1]);
        assert_eq!(splits.len(), 4);
        assert!(splits.iter().all(|(l, r, n)| *n == 1 && l.len() + r.len() == 2));
        let doubled = coproduct_split(&[0, 0]);
        assert_eq!(
            doubled,
            vec![(vec![], vec![0, 0], 1), (vec![0], vec![0], 2), (vec![0, 0], vec![], 1)]
        );
    }

    #[test]
    fn h_prime_examples() {
        let (e, s) = h3();
        let hz = h_prime(&e, &s, &v(&[1]), 3).unwrap();
        for (m, val) in hz.entries() {
            assert_eq!(*val, if m.is_empty() { v(&[1]) } else { v(&[0]) });
        }
        let (e, s) = aff1();
        let ha = h_prime(&e, &s, &v(&[1]), 3).unwrap();
        assert!(ha.entries().all(|(_, val)| *val == v(&[1])));
        assert_eq!(h_prime(&e, &s, &v(&[0]), 3).unwrap(), DualTable::zero(1, 1, 3));
    }

    #[test]
    fn h_prime_is_linear() {
        let (e, s) = semidirect_lie(
            "n",
            &LieAlgebra::abelian("K2", 2),
            &k1(),
            &[from_ints(&[&[1, 1], &[0, 1]])],
        )
        .unwrap();
        let (x, y) = (v(&[1, 0]), v(&[0, 1]));
        let c = q_frac(3, 7);
        let combo = add(&x, &scale(&c, &y));
        let lhs = h_prime(&e, &s, &combo, 3).unwrap();
        let rhs = h_prime(&e, &s, &x, 3)
            .unwrap()
            .add(&h_prime(&e, &s, &y, 3).unwrap().scale(&c));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn embedding_examples() {
        let (e, s) = h3();
        let z = lie_kk_embed(&e, &s, &v(&[0, 0, 1]), 3).unwrap();
        assert_eq!(z.b, v(&[0, 0]));
        assert_eq!(z.h, h_prime(&e, &s, &v(&[1]), 3).unwrap());
        let x = lie_kk_embed(&e, &s, &v(&[1, 0, 0]), 3).unwrap();
        assert_eq!(x.h, DualTable::zero(2, 1, 3));
        assert_eq!(x.b, v(&[1, 0]));
    }

    #[test]
    fn aff1_bracket_by_hand() {
        let (e, s) = aff1();
        let w = LieWreath::new(e.a(), e.b());
        let phi_a = lie_kk_embed(&e, &s, &v(&[1, 0]), 3).unwrap();
        let phi_b = lie_kk_embed(&e, &s, &v(&[0, 1]), 3).unwrap();
        let br = w.bracket(&phi_b, &phi_a).unwrap();
        assert_eq!(br.b, v(&[0]));
        assert!(br.h.entries().all(|(_, val)| *val == v(&[1])));
        assert_eq!(br.h.degree(), 2);
    }

    #[test]
    fn split_tier_passes() {
        let b2 = solvable();
        let n = from_ints(&[&[1, 1], &[0, 1]]);
        let aff = LieAlgebra::from_brackets("aff1", 2, &[(1, 0, v(&[1, 0]))]).unwrap();
        // ad(p) on aff(1): p -> 0, q -> [p, q] = -p
        let ad_p = from_ints(&[&[0, -1], &[0, 0]]);
        let fixtures = vec![
            aff1(),
            semidirect_lie("ab", &k1(), &k1(), &[from_ints(&[&[0]])]).unwrap(),
            semidirect_lie("s3a", &k1(), &b2, &[from_ints(&[&[1]]), from_ints(&[&[0]])]).unwrap(),
            semidirect_lie("s3b", &LieAlgebra::abelian("K2", 2), &k1(), &[n]).unwrap(),
            semidirect_lie("s3c", &aff, &k1(), &[ad_p]).unwrap(),
        ];
        for (e, s) in fixtures {
            assert!(s.is_lie_hom(&e));
            let checks = verify_lie_embedding(&e, &s, 3).unwrap();
            for c in &checks {
                assert_eq!(c.status, Status::Pass, "{} on {}", c.id, e.g().name());
            }
        }
    }

    #[test]
    fn heisenberg_defect_is_informational() {
        let (e, s) = h3();
        assert!(!s.is_lie_hom(&e));
        let checks = verify_lie_embedding(&e, &s, 3).unwrap();
        for c in &checks[..4] {
            assert_eq!(c.status, Status::Pass, "{}", c.id);
        }
        assert_eq!(checks[4].status, Status::Informational);
        let defects = homomorphism_defects(&e, &s, 3, BracketConvention::default()).unwrap();
        assert_eq!(defects[0].pair, (0, 1));
        assert_eq!(defects[0].monomial, Some(vec![]));
        assert_eq!(defects[0].lhs, v(&[0]));
        assert_eq!(defects[0].rhs, v(&[1]));
    }

    #[test]
    fn pinned_convention_is_among_passing() {
        let (e, s) = aff1();
        let probe = probe_conventions(&e, &s, 3).unwrap();
        assert!(probe.contains(&(BracketConvention::default(), true)));
        assert!(probe.iter().any(|(_, ok)| !ok));
    }

    #[test]
    fn bracket_is_antisymmetric() {
        let (e, s) = semidirect_lie(
            "s3c",
            &LieAlgebra::from_brackets("aff1", 2, &[(1, 0, v(&[1, 0]))]).unwrap(),
            &k1(),
            &[from_ints(&[&[0, -1], &[0, 0]])],
        )
        .unwrap();
        let w = LieWreath::new(e.a(), e.b());
        let x = lie_kk_embed(&e, &s, &[q_frac(1, 2), q(-3), q_frac(2, 5)], 3).unwrap();
        let y = lie_kk_embed(&e, &s, &[q(4), q_frac(-1, 3), q(1)], 3).unwrap();
        let xy = w.bracket(&x, &y).unwrap();
        let yx = w.bracket(&y, &x).unwrap();
        assert_eq!(xy, yx.scale(&q(-1)));
    }

    #[test]
    fn coinduced_unit_examples() {
        let c = lie_coinduced(&k1(), 1, 3);
        let scalar = LieModule::new(&k1(), 1, vec![from_ints(&[&[1]])]).unwrap();
        assert!(c
            .unit(&scalar, &v(&[2]))
            .unwrap()
            .entries()
            .all(|(_, val)| *val == v(&[2])));
        let trivial = LieModule::trivial(&k1(), 1);
        for (m, val) in c.unit(&trivial, &v(&[2])).unwrap().entries() {
            assert_eq!(*val, if m.is_empty() { v(&[2]) } else { v(&[0]) });
        }
        assert_eq!(c.unit_checks(&scalar).unwrap(), (true, true));
    }

    #[test]
    fn coinduced_universality() {
        let b = solvable();
        // [rho(b1), rho(b2)] = rho(b2)
        let m = LieModule::new(
            &b,
            2,
            vec![from_ints(&[&[1, 0], &[0, 0]]), from_ints(&[&[0, 1], &[0, 0]])],
        )
        .unwrap();
        let c = lie_coinduced(&b, 1, 3);
        let cert = c.certify(&m, &from_ints(&[&[2, -1]])).unwrap();
        assert!(cert.all_ok(), "{cert:?}");
        let h3_beck = LieModule::trivial(&LieAlgebra::abelian("K2", 2), 1);
        let c = lie_coinduced(&LieAlgebra::abelian("K2", 2), 1, 3);
        assert!(c.certify(&h3_beck, &identity(1)).unwrap().all_ok());
        let unit = c.unit(&h3_beck, &v(&[5])).unwrap();
        assert_eq!(unit.get(&[]).unwrap(), v(&[5]).as_slice());
    }

    #[test]
    fn module_validation() {
        let b = solvable();
        let bad = LieModule::new(&b, 1, vec![from_ints(&[&[1]]), from_ints(&[&[1]])]);
        assert_eq!(bad.unwrap_err(), Error::NotAModule(0, 1));
    }

    #[test]
    fn coinduced_action_matches_translation_identity() {
        let c = lie_coinduced(&k1(), 1, 3);
        let h = DualTable::from_fn(1, 1, 3, |m| v(&[m.len() as i64 * 10 + 1]));
        let moved = c.act(0, &h).unwrap();
        for (m, val) in moved.entries() {
            let mut longer = m.clone();
            longer.push(0);
            assert_eq!(val.as_slice(), h.get(&longer).unwrap());
        }
    }

    #[test]
    fn section_validation() {
        let (e, _) = h3();
        assert_eq!(
            LinearSection::new(&e, from_ints(&[&[1, 0], &[0, 0], &[0, 0]])).unwrap_err(),
            Error::NotALinearSection
        );
        let other = LinearSection::new(&e, from_ints(&[&[1, 0], &[0, 1], &[3, -2]])).unwrap();
        assert!(lie_kk_embed(&e, &other, &v(&[0, 0, 1]), 2).is_ok());
    }
}
