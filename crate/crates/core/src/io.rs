//! JSON documents for groups, extensions, modules and Lie data.

use std::path::Path;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::beck::BeckModule;
use crate::error::Error;
use crate::extensions::{make_extension, Extension, Section};
use crate::group::{make_group, FiniteGroup, GroupRef, GroupSpec};
use crate::lie::{LieAlgebra, LieExtension, LieHom, LinearSection};
use crate::linalg::{parse_q, Matrix, Q};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("schema error: {0}")]
    Schema(#[from] serde_json::Error),
    #[error("invalid input: {0}")]
    Invalid(#[from] Error),
}

pub type InputResult<T> = std::result::Result<T, InputError>;

pub fn read_doc<T: DeserializeOwned>(path: &Path) -> InputResult<T> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

/// A group given by a Cayley table or by generating permutations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutations: Option<Vec<Vec<usize>>>,
}

impl GroupDoc {
    pub fn from_group(g: &FiniteGroup) -> Self {
        Self {
            name: Some(g.name().to_string()),
            table: Some(g.rows()),
            permutations: None,
        }
    }

    pub fn build(&self) -> InputResult<GroupRef> {
        let name = self.name.clone().unwrap_or_else(|| "G".into());
        let spec = match (&self.table, &self.permutations) {
            (Some(t), None) => GroupSpec::Table(t.clone()),
            (None, Some(p)) => GroupSpec::Permutations(p.clone()),
            (None, None) => return Err(Error::EmptySpec.into()),
            (Some(_), Some(_)) => {
                return Err(Error::BadShape("give either `table` or `permutations`, not both".into()).into())
            }
        };
        Ok(Arc::new(make_group(name, spec)?))
    }
}

pub fn parse_group(text: &str) -> InputResult<GroupRef> {
    serde_json::from_str::<GroupDoc>(text)?.build()
}

/// Canonical table form of a group.
pub fn group_to_json(g: &FiniteGroup) -> String {
    serde_json::to_string(&GroupDoc::from_group(g)).expect("group documents serialize")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub version: Option<u32>,
    #[serde(rename = "A")]
    pub a: GroupDoc,
    #[serde(rename = "G")]
    pub g: GroupDoc,
    #[serde(rename = "B")]
    pub b: GroupDoc,
    pub k: Vec<usize>,
    pub f: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<usize>>,
}

impl ExtensionDoc {
    pub fn from_extension(e: &Extension, s: Option<&Section>) -> Self {
        Self {
            version: None,
            a: GroupDoc::from_group(e.a()),
            g: GroupDoc::from_group(e.g()),
            b: GroupDoc::from_group(e.b()),
            k: e.k().map().to_vec(),
            f: e.f().map().to_vec(),
            s: s.map(|s| s.map().to_vec()),
        }
    }

    pub fn build(&self) -> InputResult<(Extension, Option<Section>)> {
        let e = make_extension(
            &self.a.build()?,
            &self.g.build()?,
            &self.b.build()?,
            self.k.clone(),
            self.f.clone(),
        )?;
        let s = self.s.as_ref().map(|s| Section::new(&e, s.clone())).transpose()?;
        Ok((e, s))
    }
}

pub fn parse_extension(text: &str) -> InputResult<(Extension, Option<Section>)> {
    serde_json::from_str::<ExtensionDoc>(text)?.build()
}

/// `rho[b][m]` is the image of `m` under `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BeckDoc {
    #[serde(rename = "B")]
    pub b: GroupDoc,
    #[serde(rename = "M")]
    pub m: GroupDoc,
    pub rho: Vec<Vec<usize>>,
}

impl BeckDoc {
    pub fn from_module(module: &BeckModule) -> Self {
        Self {
            b: GroupDoc::from_group(module.base()),
            m: GroupDoc::from_group(module.carrier()),
            rho: module.rho().to_vec(),
        }
    }

    pub fn build(&self) -> InputResult<BeckModule> {
        Ok(BeckModule::new(&self.b.build()?, &self.m.build()?, self.rho.clone())?)
    }
}

pub fn parse_module(text: &str) -> InputResult<BeckModule> {
    serde_json::from_str::<BeckDoc>(text)?.build()
}

/// A rational written as an integer or a string such as `"-3/2"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Rational {
    Int(i64),
    Text(String),
}

impl Rational {
    pub fn value(&self) -> InputResult<Q> {
        match self {
            Rational::Int(n) => Ok(crate::linalg::q(*n)),
            Rational::Text(s) => parse_q(s).ok_or_else(|| Error::Parse(format!("not a rational: {s:?}")).into()),
        }
    }
}

impl From<&Q> for Rational {
    fn from(x: &Q) -> Self {
        Rational::Text(x.to_string())
    }
}

fn vector(v: &[Rational]) -> InputResult<Vec<Q>> {
    v.iter().map(Rational::value).collect()
}

fn matrix(m: &[Vec<Rational>]) -> InputResult<Matrix> {
    m.iter().map(|row| vector(row)).collect()
}

fn matrix_doc(m: &Matrix) -> Vec<Vec<Rational>> {
    m.iter().map(|row| row.iter().map(Rational::from).collect()).collect()
}

/// Brackets `[e_i, e_j] = v` as `[i, j, v]` triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<(usize, usize, Vec<Rational>)>,
}

impl LieDoc {
    pub fn from_algebra(l: &LieAlgebra) -> Self {
        Self {
            name: Some(l.name().to_string()),
            dim: l.dim(),
            brackets: l
                .brackets()
                .into_iter()
                .map(|(i, j, v)| (i, j, v.iter().map(Rational::from).collect()))
                .collect(),
        }
    }

    pub fn build(&self) -> InputResult<LieAlgebra> {
        let brackets = self
            .brackets
            .iter()
            .map(|(i, j, v)| Ok((*i, *j, vector(v)?)))
            .collect::<InputResult<Vec<_>>>()?;
        let name = self.name.as_deref().unwrap_or("L");
        Ok(LieAlgebra::from_brackets(name, self.dim, &brackets)?)
    }
}

/// Matrices act on column vectors; `k` is `dim G x dim A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieExtensionDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub version: Option<u32>,
    #[serde(rename = "A")]
    pub a: LieDoc,
    #[serde(rename = "G")]
    pub g: LieDoc,
    #[serde(rename = "B")]
    pub b: LieDoc,
    pub k: Vec<Vec<Rational>>,
    pub f: Vec<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<Vec<Rational>>>,
}

impl LieExtensionDoc {
    pub fn from_extension(e: &LieExtension, s: Option<&LinearSection>) -> Self {
        Self {
            version: None,
            a: LieDoc::from_algebra(e.a()),
            g: LieDoc::from_algebra(e.g()),
            b: LieDoc::from_algebra(e.b()),
            k: matrix_doc(e.k().matrix()),
            f: matrix_doc(e.f().matrix()),
            s: s.map(|s| matrix_doc(s.matrix())),
        }
    }

    pub fn build(&self) -> InputResult<(LieExtension, Option<LinearSection>)> {
        let (a, g, b) = (self.a.build()?, self.g.build()?, self.b.build()?);
        let k = LieHom::new(&a, &g, matrix(&self.k)?)?;
        let f = LieHom::new(&g, &b, matrix(&self.f)?)?;
        let e = LieExtension::new(k, f)?;
        let s = match &self.s {
            Some(m) => Some(LinearSection::new(&e, matrix(m)?)?),
            None => None,
        };
        Ok((e, s))
    }
}

/// A linear section, either as a bare matrix or as `{"s": matrix}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SectionDoc {
    Matrix(Vec<Vec<Rational>>),
    Wrapped { s: Vec<Vec<Rational>> },
}

impl SectionDoc {
    pub fn build(&self, e: &LieExtension) -> InputResult<LinearSection> {
        let m = match self {
            SectionDoc::Matrix(m) | SectionDoc::Wrapped { s: m } => m,
        };
        Ok(LinearSection::new(e, matrix(m)?)?)
    }
}
