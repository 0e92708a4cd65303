//! The crude embedding `upsilon_E: E -> W K L(E)`, the map
//! `chi: K L(E) -> A` induced by a section, and recovery of the classical
//! embedding as `W(chi) . upsilon_E`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extensions::{check_morphism, ExtMorphism, Extension, Section};
use crate::free_product::{l_of_extension, LExtension, PresWord};
use crate::kk_embed::kk_embed;
use crate::wreath::{WreathElement, WreathStructure};

/// An element of `K L(E) wr B`: a function `B -> K L(E)` and a point of `B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CrudeElement {
    pub table: Vec<PresWord>,
    pub b: usize,
}

/// Arithmetic in `K L(E) wr B`, with tables kept in normal form.
#[derive(Debug, Clone)]
pub struct CrudeWreath {
    l: LExtension,
}

impl CrudeWreath {
    pub fn new(e: &Extension) -> Self {
        Self { l: l_of_extension(e) }
    }

    pub fn extension(&self) -> &Extension {
        self.l.extension()
    }

    pub fn l(&self) -> &LExtension {
        &self.l
    }

    pub fn identity(&self) -> CrudeElement {
        CrudeElement {
            table: vec![PresWord::empty(); self.extension().b().order()],
            b: 0,
        }
    }

    /// `(t1, b1)(t2, b2) = (p -> t1(p) t2(p b1), b1 b2)`.
    pub fn mul(&self, x: &CrudeElement, y: &CrudeElement) -> CrudeElement {
        let b = self.extension().b();
        CrudeElement {
            table: b
                .elements()
                .map(|p| self.l.kernel_mul(&x.table[p], &y.table[b.mul(p, x.b)]))
                .collect(),
            b: b.mul(x.b, y.b),
        }
    }

    /// `g -> (b -> (g, b), f(g))`.
    pub fn upsilon(&self, g: usize) -> CrudeElement {
        let e = self.extension();
        CrudeElement {
            table: e
                .b()
                .elements()
                .map(|b| self.l.normal_form(&PresWord::new(vec![(g, b)])))
                .collect(),
            b: e.f().apply(g),
        }
    }

    /// Checks that `upsilon` is an injective homomorphism, exhaustively over
    /// `G x G`. Returns the number of pairs checked.
    pub fn verify_upsilon(&self) -> Result<usize> {
        let g = self.extension().g();
        let images: Vec<CrudeElement> = g.elements().map(|x| self.upsilon(x)).collect();
        if images[0] != self.identity() {
            return Err(Error::IdentityNotPreserved);
        }
        let mut pairs = 0;
        for x in g.elements() {
            for y in g.elements() {
                if x != y && images[x] == images[y] {
                    return Err(Error::BadShape(format!("upsilon identifies {x} and {y}")));
                }
                if self.mul(&images[x], &images[y]) != images[g.mul(x, y)] {
                    return Err(Error::NotAHom { x, y });
                }
                pairs += 1;
            }
        }
        Ok(pairs)
    }
}

pub fn upsilon(e: &Extension) -> Vec<CrudeElement> {
    let cw = CrudeWreath::new(e);
    e.g().elements().map(|g| cw.upsilon(g)).collect()
}

/// `chi(g, b) = k^{-1}(s(b) g s(b f(g))^{-1})`, tabulated and certified.
#[derive(Debug, Clone)]
pub struct Chi {
    e: Extension,
    values: Vec<usize>,
    relations_checked: usize,
}

pub fn chi(e: &Extension, s: &Section) -> Result<Chi> {
    let (g, b, f) = (e.g(), e.b(), e.f());
    let nb = b.order();
    let mut values = Vec::with_capacity(g.order() * nb);
    for x in g.elements() {
        for p in b.elements() {
            let value = g.mul(g.mul(s.apply(p), x), g.inv(s.apply(b.mul(p, f.apply(x)))));
            values.push(
                e.pull_back(value)
                    .ok_or(Error::ValueOutsideKernel { point: p, value })?,
            );
        }
    }
    let at = |x: usize, p: usize| values[x * nb + p];
    let a = e.a();
    let mut relations_checked = 0;
    for p in b.elements() {
        if at(0, p) != 0 {
            return Err(Error::WellDefinednessFailure {
                g: 0,
                b: p,
                g2: 0,
                b2: p,
            });
        }
        for x in g.elements() {
            let q = b.mul(p, f.apply(x));
            for y in g.elements() {
                if a.mul(at(x, p), at(y, q)) != at(g.mul(x, y), p) {
                    return Err(Error::WellDefinednessFailure {
                        g: x,
                        b: p,
                        g2: y,
                        b2: q,
                    });
                }
                relations_checked += 1;
            }
        }
    }
    Ok(Chi {
        e: e.clone(),
        values,
        relations_checked,
    })
}

impl Chi {
    pub fn generator(&self, g: usize, b: usize) -> usize {
        self.values[g * self.e.b().order() + b]
    }

    pub fn eval(&self, p: &PresWord) -> usize {
        let a = self.e.a();
        p.gens.iter().fold(0, |acc, &(g, b)| a.mul(acc, self.generator(g, b)))
    }

    /// Number of instances of `(g, b)(g', b f(g)) = (g g', b)` verified.
    pub fn relations_checked(&self) -> usize {
        self.relations_checked
    }
}

/// `W(chi) . upsilon_E` next to the classical embedding for the same section.
#[derive(Debug, Clone)]
pub struct Recovery {
    pub wreath: WreathStructure,
    pub composite: ExtMorphism,
    pub classical: ExtMorphism,
}

impl Recovery {
    pub fn element(&self, g: usize) -> WreathElement {
        self.wreath.decode(self.composite.phi_g().apply(g))
    }
}

/// Builds `W(chi) . upsilon_E` and compares it with `kk_embed(E, s)` on all of `G`.
pub fn compose_recover(e: &Extension, s: &Section) -> Result<Recovery> {
    let chi = chi(e, s)?;
    let cw = CrudeWreath::new(e);
    let classical = kk_embed(e, s)?;
    let w = classical.wreath;
    let push = |c: &CrudeElement| WreathElement {
        h: c.table.iter().map(|p| chi.eval(p)).collect(),
        b: c.b,
    };
    let phi_g: Vec<usize> = e.g().elements().map(|g| w.encode(&push(&cw.upsilon(g)))).collect();
    let phi_a: Vec<usize> = e
        .a()
        .elements()
        .map(|a| w.encode_function(&push(&cw.upsilon(e.k().apply(a))).h))
        .collect();
    if let Some(g) = e
        .g()
        .elements()
        .find(|&g| phi_g[g] != classical.morphism.phi_g().apply(g))
    {
        return Err(Error::MismatchWithClassical(g));
    }
    let composite = check_morphism(e, w.extension(), phi_a, phi_g)?;
    Ok(Recovery {
        wreath: w,
        composite,
        classical: classical.morphism,
    })
}
