//! The Kaluzhnin-Krasner embedding of an extension into the wreath product,
//! the split-case unit `eta_S`, and the universal factorization through it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extensions::{
    check_morphism, check_split_morphism, ExtMorphism, Extension, Section, SplitExtMorphism, SplitExtension,
};
use crate::group::{enumerate_homs, hom_check, GroupHom};
use crate::wreath::{r_on_morphism, wreath_product, FunctionElement, WreathElement, WreathStructure};

/// An embedding together with the wreath product it lands in.
#[derive(Debug, Clone)]
pub struct KkEmbedding {
    pub wreath: WreathStructure,
    pub morphism: ExtMorphism,
}

impl KkEmbedding {
    pub fn image_order(&self) -> usize {
        self.morphism.phi_g().image().order()
    }

    pub fn element(&self, g: usize) -> WreathElement {
        self.wreath.decode(self.morphism.phi_g().apply(g))
    }
}

/// `h_g(b) = k^{-1}(s(b) g s(b f(g))^{-1})`.
pub fn h_of(e: &Extension, s: &Section, g: usize) -> Result<FunctionElement> {
    let (grp, b_grp) = (e.g(), e.b());
    let fg = e.f().apply(g);
    b_grp
        .elements()
        .map(|b| {
            let value = grp.mul(grp.mul(s.apply(b), g), grp.inv(s.apply(b_grp.mul(b, fg))));
            e.pull_back(value).ok_or(Error::ValueOutsideKernel { point: b, value })
        })
        .collect()
}

pub fn kk_embed(e: &Extension, s: &Section) -> Result<KkEmbedding> {
    let wreath = wreath_product(e.a(), e.b())?;
    let morphism = kk_embed_into(e, s, &wreath)?;
    Ok(KkEmbedding { wreath, morphism })
}

/// `g -> (h_g, f(g))`, validated as a morphism into the wreath extension.
pub fn kk_embed_into(e: &Extension, s: &Section, w: &WreathStructure) -> Result<ExtMorphism> {
    if !w.a().same_table(e.a()) || !w.b().same_table(e.b()) {
        return Err(Error::MismatchedBase);
    }
    let phi_g = e
        .g()
        .elements()
        .map(|g| {
            Ok(w.encode(&WreathElement {
                h: h_of(e, s, g)?,
                b: e.f().apply(g),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    let phi_a = e
        .a()
        .elements()
        .map(|a| Ok(w.encode_function(&h_of(e, s, e.k().apply(a))?)))
        .collect::<Result<Vec<_>>>()?;
    check_morphism(e, w.extension(), phi_a, phi_g)
}

pub fn eta_split(s: &SplitExtension) -> Result<(WreathStructure, SplitExtMorphism)> {
    let w = wreath_product(s.ext().a(), s.ext().b())?;
    let eta = eta_split_into(s, &w)?;
    Ok((w, eta))
}

/// The embedding with the homomorphic section, checked against `sigma`.
pub fn eta_split_into(s: &SplitExtension, w: &WreathStructure) -> Result<SplitExtMorphism> {
    let m = kk_embed_into(s.ext(), &s.section(), w)?;
    check_split_morphism(s, w.split(), m.phi_a().map().to_vec(), m.phi_g().map().to_vec())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: &'static str,
    pub elements: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub injective_a: bool,
    pub injective_g: bool,
    pub diagram_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equivariant: Option<bool>,
    pub witnesses: Vec<Witness>,
}

impl EmbeddingReport {
    pub fn all_ok(&self) -> bool {
        self.injective_a && self.injective_g && self.diagram_ok && self.equivariant.unwrap_or(true)
    }
}

#[derive(Debug, Clone, Copy)]
pub enum MorphismRef<'a> {
    Plain(&'a ExtMorphism),
    Split(&'a SplitExtMorphism),
}

fn first_collision(h: &GroupHom) -> Option<Vec<usize>> {
    let mut seen = vec![None; h.codomain().order()];
    for x in h.domain().elements() {
        if let Some(y) = seen[h.apply(x)].replace(x) {
            return Some(vec![y, x]);
        }
    }
    None
}

/// Re-checks injectivity and both squares from scratch; for split sources
/// also checks `phi_A(a^b) = phi_A(a)^b` with both actions read off by
/// conjugation with the sections.
pub fn verify_embedding(m: MorphismRef<'_>) -> EmbeddingReport {
    let plain = match m {
        MorphismRef::Plain(p) => p,
        MorphismRef::Split(s) => s.forget(),
    };
    let (src, tgt) = (plain.source(), plain.target());
    let mut witnesses = Vec::new();

    let col_a = first_collision(plain.phi_a());
    if let Some(pair) = &col_a {
        witnesses.push(Witness {
            check: "injective_a",
            elements: pair.clone(),
        });
    }
    let col_g = first_collision(plain.phi_g());
    if let Some(pair) = &col_g {
        witnesses.push(Witness {
            check: "injective_g",
            elements: pair.clone(),
        });
    }

    let mut diagram_ok = true;
    for a in src.a().elements() {
        if plain.phi_g().apply(src.k().apply(a)) != tgt.k().apply(plain.phi_a().apply(a)) {
            diagram_ok = false;
            witnesses.push(Witness {
                check: "left_square",
                elements: vec![a],
            });
        }
    }
    for x in src.g().elements() {
        if tgt.f().apply(plain.phi_g().apply(x)) != src.f().apply(x) {
            diagram_ok = false;
            witnesses.push(Witness {
                check: "right_square",
                elements: vec![x],
            });
        }
    }

    let equivariant = match m {
        MorphismRef::Plain(_) => None,
        MorphismRef::Split(sm) => {
            let mut ok = true;
            for b in src.b().elements() {
                if plain.phi_g().apply(sm.source().s().apply(b)) != sm.target().s().apply(b) {
                    ok = false;
                    witnesses.push(Witness {
                        check: "section",
                        elements: vec![b],
                    });
                }
                for a in src.a().elements() {
                    let lhs = plain.phi_a().apply(sm.source().act(b, a));
                    let rhs = sm.target().act(b, plain.phi_a().apply(a));
                    if lhs != rhs {
                        ok = false;
                        witnesses.push(Witness {
                            check: "equivariance",
                            elements: vec![a, b],
                        });
                    }
                }
            }
            Some(ok)
        }
    };

    EmbeddingReport {
        injective_a: col_a.is_none(),
        injective_g: col_g.is_none(),
        diagram_ok,
        equivariant,
        witnesses,
    }
}

/// Pairs `(a, b)` where `translate(phi_A(a), b) != phi_A(a^b)` for a unit
/// into a wreath product. Empty on success.
pub fn translation_equivariance_failures(eta: &SplitExtMorphism, w: &WreathStructure) -> Vec<(usize, usize)> {
    let s = eta.source();
    let mut out = Vec::new();
    for a in s.ext().a().elements() {
        let h = w.decode_function(eta.phi_a().apply(a));
        for b in s.ext().b().elements() {
            let lhs = w.translate(&h, b);
            let rhs = w.decode_function(eta.phi_a().apply(s.act(b, a)));
            if lhs != rhs {
                out.push((a, b));
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct Factorization {
    pub alpha_bar: GroupHom,
    /// Number of homomorphisms `gamma: A -> C` with `R(gamma) . eta_S = alpha`.
    pub satisfiers: usize,
}

/// Recovers `alpha_bar(a) = K(alpha)(a)(1)` for a morphism `alpha: S -> R(C)`,
/// checks `R(alpha_bar) . eta_S = alpha`, and certifies uniqueness by
/// enumerating every homomorphism `A -> C`.
pub fn universal_factorization(
    s: &SplitExtension,
    alpha: &SplitExtMorphism,
    wc: &WreathStructure,
) -> Result<Factorization> {
    if !alpha.target().ext().g().same_table(wc.group()) {
        return Err(Error::BadShape(
            "alpha does not land in the given wreath product".into(),
        ));
    }
    let a = s.ext().a();
    let map: Vec<usize> = a
        .elements()
        .map(|x| wc.decode_function(alpha.phi_a().apply(x))[0])
        .collect();
    let alpha_bar = hom_check(a, wc.a(), map)
        .map_err(|e| Error::FactorizationFailure(format!("evaluation at 1 is not a homomorphism: {e}")))?;

    let wa = wreath_product(a, s.ext().b())?;
    let eta = eta_split_into(s, &wa)?;
    let through = |gamma: &GroupHom| -> Result<bool> {
        let composite = r_on_morphism(&wa, wc, gamma)?.after(&eta)?;
        Ok(composite.phi_g() == alpha.phi_g() && composite.phi_a() == alpha.phi_a())
    };
    if !through(&alpha_bar)? {
        return Err(Error::FactorizationFailure("R(alpha_bar) . eta_S != alpha".into()));
    }
    let mut satisfiers = 0;
    for gamma in enumerate_homs(a, wc.a())? {
        if through(&gamma)? {
            satisfiers += 1;
        }
    }
    if satisfiers != 1 {
        return Err(Error::UniquenessFailure { count: satisfiers });
    }
    Ok(Factorization { alpha_bar, satisfiers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::{make_extension, sections, semidirect_from_action};
    use crate::group::{FiniteGroup, GroupRef};
    use std::sync::Arc;

    fn z(n: usize) -> GroupRef {
        Arc::new(FiniteGroup::cyclic(n))
    }

    fn z4_over_z2() -> Extension {
        make_extension(&z(2), &z(4), &z(2), vec![0, 2], vec![0, 1, 0, 1]).unwrap()
    }

    fn s3_split() -> SplitExtension {
        semidirect_from_action(&z(2), &z(3), &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap()
    }

    #[test]
    fn z4_fixture_values() {
        let e = z4_over_z2();
        let s = Section::new(&e, vec![0, 1]).unwrap();
        let emb = kk_embed(&e, &s).unwrap();
        assert_eq!(emb.element(1), WreathElement { h: vec![0, 1], b: 1 });
        assert_eq!(emb.element(2), WreathElement { h: vec![1, 1], b: 0 });
        // conjugation is trivial in Z4, so phi_A(a) is the constant function a
        let w = &emb.wreath;
        let consts: Vec<usize> = (0..2).map(|a| w.encode_function(&[a, a])).collect();
        assert_eq!(emb.morphism.phi_a().map(), &consts[..]);
    }

    #[test]
    fn every_section_embeds() {
        let e = z4_over_z2();
        for s in sections(&e) {
            let emb = kk_embed(&e, &s).unwrap();
            let report = verify_embedding(MorphismRef::Plain(&emb.morphism));
            assert!(report.all_ok(), "{report:?}");
            assert_eq!(report.equivariant, None);
            assert_eq!(emb.image_order(), 4);
        }
    }

    #[test]
    fn eta_on_s3() {
        let s = s3_split();
        let (w, eta) = eta_split(&s).unwrap();
        assert_eq!(w.order(), 18);
        assert_eq!(eta.phi_g().image().order(), 6);
        let report = verify_embedding(MorphismRef::Split(&eta));
        assert_eq!(report.equivariant, Some(true));
        assert!(report.witnesses.is_empty());
        assert!(translation_equivariance_failures(&eta, &w).is_empty());
    }

    #[test]
    fn eta_on_direct_product_is_constant() {
        let s = semidirect_from_action(&z(2), &z(3), &[vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        let (w, eta) = eta_split(&s).unwrap();
        for x in s.ext().g().elements() {
            let e = w.decode(eta.phi_g().apply(x));
            let a_part = x / 2;
            assert_eq!(e.h, vec![a_part, a_part]);
        }
    }

    #[test]
    fn eta_on_trivial_kernel_hits_sigma() {
        let e = Extension::trivial_over(&z(3));
        let s = SplitExtension::new(e, GroupHom::identity(&z(3))).unwrap();
        let (w, eta) = eta_split(&s).unwrap();
        assert_eq!(eta.phi_g().map(), w.sigma().map());
    }

    #[test]
    fn identity_verifies() {
        let e = z4_over_z2();
        let report = verify_embedding(MorphismRef::Plain(&ExtMorphism::identity(&e)));
        assert!(report.all_ok() && report.witnesses.is_empty());
    }

    #[test]
    fn non_injective_reported() {
        // S3 split -> trivial-kernel extension over Z2, collapsing the kernel.
        let s = s3_split();
        let t = SplitExtension::new(Extension::trivial_over(&z(2)), GroupHom::identity(&z(2))).unwrap();
        let m = check_split_morphism(&s, &t, vec![0; 3], s.ext().f().map().to_vec()).unwrap();
        let report = verify_embedding(MorphismRef::Split(&m));
        assert!(!report.injective_a && !report.injective_g);
        assert_eq!(report.equivariant, Some(true));
        assert!(!report.all_ok());
    }

    #[test]
    fn factorization_of_eta_is_identity() {
        let s = s3_split();
        let (w, eta) = eta_split(&s).unwrap();
        let fac = universal_factorization(&s, &eta, &w).unwrap();
        assert_eq!(fac.alpha_bar, GroupHom::identity(s.ext().a()));
        assert_eq!(fac.satisfiers, 1);
    }

    #[test]
    fn factorization_round_trips() {
        let s = s3_split();
        let (wa, eta) = eta_split(&s).unwrap();
        let c = z(3);
        let wc = wreath_product(&c, &z(2)).unwrap();
        for gamma in enumerate_homs(s.ext().a(), &c).unwrap() {
            let alpha = r_on_morphism(&wa, &wc, &gamma).unwrap().after(&eta).unwrap();
            let fac = universal_factorization(&s, &alpha, &wc).unwrap();
            assert_eq!(fac.alpha_bar, gamma);
        }
    }

    #[test]
    fn eta_is_natural() {
        // mu: S3 split -> trivial-kernel split extension, kernel map zero.
        let s = s3_split();
        let t = SplitExtension::new(Extension::trivial_over(&z(2)), GroupHom::identity(&z(2))).unwrap();
        let mu = check_split_morphism(&s, &t, vec![0; 3], s.ext().f().map().to_vec()).unwrap();
        let (ws, eta_s) = eta_split(&s).unwrap();
        let (wt, eta_t) = eta_split(&t).unwrap();
        let lhs = r_on_morphism(&ws, &wt, mu.phi_a()).unwrap().after(&eta_s).unwrap();
        let rhs = eta_t.after(&mu).unwrap();
        assert_eq!(lhs.phi_g(), rhs.phi_g());

        // an automorphism of S3 over Z2 moving the section
        let g = s.ext().g();
        let r = s.ext().k().apply(1);
        let conj: Vec<usize> = g.elements().map(|x| g.conjugate(r, x)).collect();
        let t_map: Vec<usize> = s.s().map().iter().map(|&x| conj[x]).collect();
        let t2 = SplitExtension::new(s.ext().clone(), GroupHom::new_unchecked(z(2), g.clone(), t_map)).unwrap();
        let a_map: Vec<usize> = s
            .ext()
            .a()
            .elements()
            .map(|a| s.ext().pull_back(conj[s.ext().k().apply(a)]).unwrap())
            .collect();
        let mu2 = check_split_morphism(&s, &t2, a_map, conj).unwrap();
        let (w2, eta_t2) = eta_split(&t2).unwrap();
        let lhs = r_on_morphism(&ws, &w2, mu2.phi_a()).unwrap().after(&eta_s).unwrap();
        let rhs = eta_t2.after(&mu2).unwrap();
        assert_eq!(lhs.phi_g(), rhs.phi_g());
    }
}
