//! The wreath product `Set(B, A) x| B` and its canonical split extension
//! `(kappa, pi, sigma)`.
//!
//! Functions `h: B -> A` are encoded as base-`|A|` numerals with `h(0)` as
//! the most significant digit, so the constant-identity function is index 0.
//! The pair `(h, b)` has index `code(h) * |B| + b`.
//!
//! Conventions: `B` acts by right translation, `(h . b')(b) = h(b b')`, and
//! the product is `(h1, b1)(h2, b2) = (b -> h1(b) h2(b b1), b1 b2)`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extensions::{check_split_morphism, Extension, SplitExtMorphism, SplitExtension};
use crate::group::{FiniteGroup, GroupHom, GroupRef};

/// Largest group (function space or wreath product) materialized as a table.
pub const DEFAULT_TABLE_BUDGET: u128 = 2048;

/// Tables up to this order get the full cubic associativity check.
const ASSOCIATIVITY_CHECK_LIMIT: usize = 128;

/// A total function `B -> A` given by its values.
pub type FunctionElement = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WreathElement {
    pub h: FunctionElement,
    pub b: usize,
}

pub fn encode_function(a_order: usize, values: &[usize]) -> usize {
    values.iter().fold(0, |acc, &v| acc * a_order + v)
}

pub fn decode_function(a_order: usize, b_order: usize, mut code: usize) -> FunctionElement {
    let mut values = vec![0; b_order];
    for slot in values.iter_mut().rev() {
        *slot = code % a_order;
        code /= a_order;
    }
    values
}

/// `translate(h, b')(b) = h(b b')`.
pub fn translate(b_group: &FiniteGroup, h: &[usize], by: usize) -> FunctionElement {
    b_group.elements().map(|b| h[b_group.mul(b, by)]).collect()
}

fn power_within(base: usize, exp: usize, times: usize, budget: u128, what: &'static str) -> Result<usize> {
    let needed = (base as u128)
        .checked_pow(exp as u32)
        .and_then(|p| p.checked_mul(times as u128))
        .unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { what, needed, budget });
    }
    Ok(needed as usize)
}

fn build_group(name: String, n: usize, table: Vec<usize>) -> Result<FiniteGroup> {
    if n <= ASSOCIATIVITY_CHECK_LIMIT {
        let rows = table.chunks(n).map(<[usize]>::to_vec).collect();
        FiniteGroup::from_table(name, rows)
    } else {
        FiniteGroup::from_flat_unchecked(name, n, table)
    }
}

/// The pointwise group `Set(B, A)`.
pub fn function_space(b: &GroupRef, a: &GroupRef) -> Result<GroupRef> {
    function_space_with_budget(b, a, DEFAULT_TABLE_BUDGET)
}

pub fn function_space_with_budget(b: &GroupRef, a: &GroupRef, budget: u128) -> Result<GroupRef> {
    let n = power_within(a.order(), b.order(), 1, budget, "function space order")?;
    let decoded: Vec<FunctionElement> = (0..n).map(|c| decode_function(a.order(), b.order(), c)).collect();
    let mut table = vec![0; n * n];
    for (x, hx) in decoded.iter().enumerate() {
        for (y, hy) in decoded.iter().enumerate() {
            table[x * n + y] = hx.iter().zip(hy).fold(0, |acc, (&u, &v)| acc * a.order() + a.mul(u, v));
        }
    }
    Ok(Arc::new(build_group(
        format!("Set({},{})", b.name(), a.name()),
        n,
        table,
    )?))
}

/// Materialized wreath product with its split extension.
#[derive(Debug, Clone)]
pub struct WreathStructure {
    a: GroupRef,
    b: GroupRef,
    funcs: GroupRef,
    split: SplitExtension,
}

pub fn wreath_product(a: &GroupRef, b: &GroupRef) -> Result<WreathStructure> {
    wreath_product_with_budget(a, b, DEFAULT_TABLE_BUDGET)
}

pub fn wreath_product_with_budget(a: &GroupRef, b: &GroupRef, budget: u128) -> Result<WreathStructure> {
    power_within(a.order(), b.order(), b.order(), budget, "wreath product order")?;
    let funcs = function_space_with_budget(b, a, budget)?;
    let (nf, nb) = (funcs.order(), b.order());
    let n = nf * nb;
    let decoded: Vec<FunctionElement> = (0..nf).map(|c| decode_function(a.order(), nb, c)).collect();
    let mut table = vec![0; n * n];
    for x in 0..n {
        let (h1, b1) = (&decoded[x / nb], x % nb);
        for y in 0..n {
            let (h2, b2) = (&decoded[y / nb], y % nb);
            let code = b
                .elements()
                .fold(0, |acc, p| acc * a.order() + a.mul(h1[p], h2[b.mul(p, b1)]));
            table[x * n + y] = code * nb + b.mul(b1, b2);
        }
    }
    let w = Arc::new(build_group(format!("{}wr{}", a.name(), b.name()), n, table)?);
    let kappa = GroupHom::new_unchecked(funcs.clone(), w.clone(), (0..nf).map(|c| c * nb).collect());
    let pi = GroupHom::new_unchecked(w.clone(), b.clone(), (0..n).map(|x| x % nb).collect());
    let sigma = GroupHom::new_unchecked(b.clone(), w.clone(), (0..nb).collect());
    let split = SplitExtension::new(Extension::new(kappa, pi)?, sigma)?;
    Ok(WreathStructure {
        a: a.clone(),
        b: b.clone(),
        funcs,
        split,
    })
}

impl WreathStructure {
    pub fn a(&self) -> &GroupRef {
        &self.a
    }

    pub fn b(&self) -> &GroupRef {
        &self.b
    }

    /// The kernel `Set(B, A)`.
    pub fn function_group(&self) -> &GroupRef {
        &self.funcs
    }

    pub fn group(&self) -> &GroupRef {
        self.split.ext().g()
    }

    pub fn order(&self) -> usize {
        self.group().order()
    }

    pub fn kappa(&self) -> &GroupHom {
        self.split.ext().k()
    }

    pub fn pi(&self) -> &GroupHom {
        self.split.ext().f()
    }

    pub fn sigma(&self) -> &GroupHom {
        self.split.s()
    }

    pub fn split(&self) -> &SplitExtension {
        &self.split
    }

    /// The wreath extension with `sigma` forgotten.
    pub fn extension(&self) -> &Extension {
        self.split.ext()
    }

    pub fn encode_function(&self, h: &[usize]) -> usize {
        encode_function(self.a.order(), h)
    }

    pub fn decode_function(&self, code: usize) -> FunctionElement {
        decode_function(self.a.order(), self.b.order(), code)
    }

    pub fn encode(&self, e: &WreathElement) -> usize {
        self.encode_function(&e.h) * self.b.order() + e.b
    }

    pub fn decode(&self, x: usize) -> WreathElement {
        let nb = self.b.order();
        WreathElement {
            h: self.decode_function(x / nb),
            b: x % nb,
        }
    }

    pub fn translate(&self, h: &[usize], by: usize) -> FunctionElement {
        translate(&self.b, h, by)
    }
}

/// Element-wise product without a table, for wreaths too large to materialize.
pub fn wreath_mul(a: &FiniteGroup, b: &FiniteGroup, x: &WreathElement, y: &WreathElement) -> WreathElement {
    WreathElement {
        h: b.elements().map(|p| a.mul(x.h[p], y.h[b.mul(p, x.b)])).collect(),
        b: b.mul(x.b, y.b),
    }
}

pub fn wreath_inv(a: &FiniteGroup, b: &FiniteGroup, x: &WreathElement) -> WreathElement {
    let bi = b.inv(x.b);
    WreathElement {
        h: b.elements().map(|p| a.inv(x.h[b.mul(p, bi)])).collect(),
        b: bi,
    }
}

/// `gamma wr B: (h, b) -> (gamma . h, b)`, as a morphism `R(A) -> R(C)`.
pub fn r_on_morphism(wa: &WreathStructure, wc: &WreathStructure, gamma: &GroupHom) -> Result<SplitExtMorphism> {
    if !wa.b.same_table(&wc.b) {
        return Err(Error::MismatchedBase);
    }
    if !gamma.domain().same_table(&wa.a) || !gamma.codomain().same_table(&wc.a) {
        return Err(Error::BadShape("gamma does not map A to C".into()));
    }
    let push = |code: usize| -> usize {
        let h = wa.decode_function(code);
        let gh: Vec<usize> = h.iter().map(|&v| gamma.apply(v)).collect();
        wc.encode_function(&gh)
    };
    let nb = wa.b.order();
    let phi_a: Vec<usize> = wa.funcs.elements().map(push).collect();
    let phi_g: Vec<usize> = wa.group().elements().map(|x| phi_a[x / nb] * nb + x % nb).collect();
    check_split_morphism(&wa.split, &wc.split, phi_a, phi_g)
}
