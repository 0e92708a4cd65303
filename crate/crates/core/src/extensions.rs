//! Extensions `0 -> A -> G -> B -> 0`, their set-theoretic sections, split
//! extensions and morphisms of (split) extensions over a fixed base `B`.

use std::sync::Arc;

use crate::error::{Error, ExactnessFailure, Result, Square};
use crate::group::{enumerate_homs, hom_check, FiniteGroup, GroupHom, GroupRef, Subgroup};

#[derive(Debug, Clone)]
pub struct Extension {
    k: GroupHom,
    f: GroupHom,
    k_inv: Vec<Option<usize>>,
}

pub fn make_extension(a: &GroupRef, g: &GroupRef, b: &GroupRef, k: Vec<usize>, f: Vec<usize>) -> Result<Extension> {
    Extension::new(hom_check(a, g, k)?, hom_check(g, b, f)?)
}

impl Extension {
    /// Checks exactness exhaustively: `k` injective, `f` surjective and
    /// `image(k) = kernel(f)`.
    pub fn new(k: GroupHom, f: GroupHom) -> Result<Self> {
        if !k.codomain().same_table(f.domain()) {
            return Err(Error::BadShape("codomain of k differs from domain of f".into()));
        }
        let k_inv = k.inverse_image_table();
        let mut hits = vec![0usize; k.codomain().order()];
        for &v in k.map() {
            hits[v] += 1;
        }
        if let Some(x) = hits.iter().position(|&c| c > 1) {
            return Err(Error::NotExact {
                which: ExactnessFailure::KernelMapNotInjective,
                witness: x,
            });
        }
        let mut covered = vec![false; f.codomain().order()];
        for &v in f.map() {
            covered[v] = true;
        }
        if let Some(b) = covered.iter().position(|&c| !c) {
            return Err(Error::NotExact {
                which: ExactnessFailure::QuotientMapNotSurjective,
                witness: b,
            });
        }
        for x in f.domain().elements() {
            if (f.apply(x) == 0) != k_inv[x].is_some() {
                return Err(Error::NotExact {
                    which: ExactnessFailure::ImageDiffersFromKernel,
                    witness: x,
                });
            }
        }
        Ok(Self { k, f, k_inv })
    }

    /// The extension `N -> G -> G/N` for a normal subgroup `N`.
    pub fn from_normal_subgroup(g: &GroupRef, normal: &Subgroup, a_name: &str, b_name: &str) -> Result<Self> {
        let (_, k) = normal.as_group(a_name);
        let (_, f) = normal.quotient(b_name)?;
        debug_assert!(Arc::ptr_eq(k.codomain(), g));
        Self::new(k, f)
    }

    /// `1 -> B -> B`, the extension with trivial kernel.
    pub fn trivial_over(b: &GroupRef) -> Self {
        let one = Arc::new(FiniteGroup::trivial());
        Self::new(GroupHom::zero(&one, b), GroupHom::identity(b)).expect("trivial extension is exact")
    }

    pub fn a(&self) -> &GroupRef {
        self.k.domain()
    }

    pub fn g(&self) -> &GroupRef {
        self.k.codomain()
    }

    pub fn b(&self) -> &GroupRef {
        self.f.codomain()
    }

    pub fn k(&self) -> &GroupHom {
        &self.k
    }

    pub fn f(&self) -> &GroupHom {
        &self.f
    }

    /// `k^{-1}(x)` when `x` lies in the kernel of `f`.
    pub fn pull_back(&self, x: usize) -> Option<usize> {
        self.k_inv[x]
    }

    pub fn same_base(&self, other: &Extension) -> bool {
        self.b().same_table(other.b())
    }
}

/// A set-theoretic right inverse of `f`. No homomorphism condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    map: Vec<usize>,
}

impl Section {
    pub fn new(ext: &Extension, map: Vec<usize>) -> Result<Self> {
        if map.len() != ext.b().order() {
            return Err(Error::BadShape(format!(
                "section has length {}, B has order {}",
                map.len(),
                ext.b().order()
            )));
        }
        for (b, &x) in map.iter().enumerate() {
            if x >= ext.g().order() || ext.f().apply(x) != b {
                return Err(Error::NotASection(b));
            }
        }
        Ok(Self { map })
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, b: usize) -> usize {
        self.map[b]
    }

    pub fn as_hom(&self, ext: &Extension) -> Option<GroupHom> {
        hom_check(ext.b(), ext.g(), self.map.clone()).ok()
    }
}

/// Every section of `ext`, enumerated fiber by fiber. The fiber over `b = 0`
/// varies slowest, so indices are stable across runs.
pub fn sections(ext: &Extension) -> Vec<Section> {
    let mut fibers = vec![Vec::new(); ext.b().order()];
    for x in ext.g().elements() {
        fibers[ext.f().apply(x)].push(x);
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; fibers.len()];
    loop {
        out.push(Section {
            map: choice.iter().zip(&fibers).map(|(&i, fib)| fib[i]).collect(),
        });
        let mut pos = fibers.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < fibers[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// A homomorphic section of `ext`, if any exists.
pub fn is_split(ext: &Extension) -> Option<GroupHom> {
    enumerate_homs(ext.b(), ext.g())
        .ok()?
        .into_iter()
        .find(|s| ext.b().elements().all(|b| ext.f().apply(s.apply(b)) == b))
}

#[derive(Debug, Clone)]
pub struct SplitExtension {
    ext: Extension,
    s: GroupHom,
}

impl SplitExtension {
    pub fn new(ext: Extension, s: GroupHom) -> Result<Self> {
        if !s.domain().same_table(ext.b()) || !s.codomain().same_table(ext.g()) {
            return Err(Error::BadShape("section has the wrong domain or codomain".into()));
        }
        Section::new(&ext, s.map().to_vec())?;
        Ok(Self { ext, s })
    }

    pub fn ext(&self) -> &Extension {
        &self.ext
    }

    pub fn s(&self) -> &GroupHom {
        &self.s
    }

    pub fn section(&self) -> Section {
        Section {
            map: self.s.map().to_vec(),
        }
    }

    /// The induced action `a^b = k^{-1}(s(b) k(a) s(b)^{-1})`.
    pub fn act(&self, b: usize, a: usize) -> usize {
        let g = self.ext.g();
        let conj = g.conjugate(self.s.apply(b), self.ext.k().apply(a));
        self.ext.pull_back(conj).expect("kernel is normal")
    }
}

#[derive(Debug, Clone)]
pub struct ExtMorphism {
    source: Extension,
    target: Extension,
    phi_a: GroupHom,
    phi_g: GroupHom,
    mono: bool,
}

#[derive(Debug, Clone)]
pub struct SplitExtMorphism {
    source: SplitExtension,
    target: SplitExtension,
    inner: ExtMorphism,
}

/// Validates `phi_G . k = l . phi_A` and `g . phi_G = f` over every element.
pub fn check_morphism(
    source: &Extension,
    target: &Extension,
    phi_a: Vec<usize>,
    phi_g: Vec<usize>,
) -> Result<ExtMorphism> {
    if !source.same_base(target) {
        return Err(Error::MismatchedBase);
    }
    let phi_a = hom_check(source.a(), target.a(), phi_a)?;
    let phi_g = hom_check(source.g(), target.g(), phi_g)?;
    for a in source.a().elements() {
        if phi_g.apply(source.k().apply(a)) != target.k().apply(phi_a.apply(a)) {
            return Err(Error::DiagramFailure {
                square: Square::Left,
                witness: a,
            });
        }
    }
    for x in source.g().elements() {
        if target.f().apply(phi_g.apply(x)) != source.f().apply(x) {
            return Err(Error::DiagramFailure {
                square: Square::Right,
                witness: x,
            });
        }
    }
    let mono = phi_a.is_injective() && phi_g.is_injective();
    Ok(ExtMorphism {
        source: source.clone(),
        target: target.clone(),
        phi_a,
        phi_g,
        mono,
    })
}

/// As [`check_morphism`], additionally requiring `phi_G . s = t`.
pub fn check_split_morphism(
    source: &SplitExtension,
    target: &SplitExtension,
    phi_a: Vec<usize>,
    phi_g: Vec<usize>,
) -> Result<SplitExtMorphism> {
    let inner = check_morphism(&source.ext, &target.ext, phi_a, phi_g)?;
    for b in source.ext.b().elements() {
        if inner.phi_g.apply(source.s.apply(b)) != target.s.apply(b) {
            return Err(Error::DiagramFailure {
                square: Square::Section,
                witness: b,
            });
        }
    }
    Ok(SplitExtMorphism {
        source: source.clone(),
        target: target.clone(),
        inner,
    })
}

impl ExtMorphism {
    pub fn identity(e: &Extension) -> Self {
        check_morphism(e, e, e.a().elements().collect(), e.g().elements().collect()).expect("identity is a morphism")
    }

    pub fn source(&self) -> &Extension {
        &self.source
    }

    pub fn target(&self) -> &Extension {
        &self.target
    }

    pub fn phi_a(&self) -> &GroupHom {
        &self.phi_a
    }

    pub fn phi_g(&self) -> &GroupHom {
        &self.phi_g
    }

    pub fn is_mono(&self) -> bool {
        self.mono
    }

    /// `self . first`.
    pub fn after(&self, first: &ExtMorphism) -> Result<ExtMorphism> {
        check_morphism(
            &first.source,
            &self.target,
            self.phi_a.after(&first.phi_a)?.map().to_vec(),
            self.phi_g.after(&first.phi_g)?.map().to_vec(),
        )
    }

    /// Same component maps between the same groups.
    pub fn same_maps(&self, other: &ExtMorphism) -> bool {
        self.phi_a == other.phi_a && self.phi_g == other.phi_g
    }
}

impl SplitExtMorphism {
    pub fn identity(s: &SplitExtension) -> Self {
        check_split_morphism(s, s, s.ext.a().elements().collect(), s.ext.g().elements().collect())
            .expect("identity is a split morphism")
    }

    pub fn source(&self) -> &SplitExtension {
        &self.source
    }

    pub fn target(&self) -> &SplitExtension {
        &self.target
    }

    /// The underlying morphism of extensions (the section forgotten).
    pub fn forget(&self) -> &ExtMorphism {
        &self.inner
    }

    pub fn phi_a(&self) -> &GroupHom {
        &self.inner.phi_a
    }

    pub fn phi_g(&self) -> &GroupHom {
        &self.inner.phi_g
    }

    pub fn after(&self, first: &SplitExtMorphism) -> Result<SplitExtMorphism> {
        check_split_morphism(
            &first.source,
            &self.target,
            self.phi_a().after(first.phi_a())?.map().to_vec(),
            self.phi_g().after(first.phi_g())?.map().to_vec(),
        )
    }
}

/// The split extension `A -> A x_rho B -> B` of an action `rho` of `B` on
/// `A` by automorphisms. `rho[b]` is the permutation of `A` induced by `b`,
/// with `rho[b1 b2] = rho[b1] . rho[b2]`. The pair `(a, b)` has index
/// `a * |B| + b` and `(a, b)(a', b') = (a rho_b(a'), b b')`.
pub fn semidirect_from_action(b: &GroupRef, a: &GroupRef, rho: &[Vec<usize>]) -> Result<SplitExtension> {
    validate_action(b, a, rho)?;
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut rows = vec![vec![0; n]; n];
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            rows[x][y] = a.mul(xa, rho[xb][ya]) * nb + b.mul(xb, yb);
        }
    }
    let g = Arc::new(FiniteGroup::from_table(format!("{}x|{}", a.name(), b.name()), rows)?);
    let k = GroupHom::new_unchecked(a.clone(), g.clone(), (0..na).map(|x| x * nb).collect());
    let f = GroupHom::new_unchecked(g.clone(), b.clone(), (0..n).map(|x| x % nb).collect());
    let s = GroupHom::new_unchecked(b.clone(), g.clone(), (0..nb).collect());
    SplitExtension::new(Extension::new(k, f)?, s)
}

/// Checks that `rho` is a left action of `b` on `a` by automorphisms.
pub fn validate_action(b: &GroupRef, a: &GroupRef, rho: &[Vec<usize>]) -> Result<()> {
    if rho.len() != b.order() {
        return Err(Error::NotAnAction(format!(
            "{} permutations for |B| = {}",
            rho.len(),
            b.order()
        )));
    }
    for (x, perm) in rho.iter().enumerate() {
        let hom = hom_check(a, a, perm.clone())
            .map_err(|e| Error::NotAnAction(format!("rho[{x}] is not an endomorphism: {e}")))?;
        if !hom.is_injective() {
            return Err(Error::NotAnAction(format!("rho[{x}] is not bijective")));
        }
    }
    if rho[0].iter().enumerate().any(|(i, &v)| i != v) {
        return Err(Error::NotAnAction("rho[0] is not the identity".into()));
    }
    for x in b.elements() {
        for y in b.elements() {
            let xy = b.mul(x, y);
            if a.elements().any(|m| rho[xy][m] != rho[x][rho[y][m]]) {
                return Err(Error::NotAnAction(format!("rho[{x}*{y}] != rho[{x}] . rho[{y}]")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_isomorphic;

    fn z(n: usize) -> GroupRef {
        Arc::new(FiniteGroup::cyclic(n))
    }

    fn z4_over_z2() -> Extension {
        make_extension(&z(2), &z(4), &z(2), vec![0, 2], vec![0, 1, 0, 1]).unwrap()
    }

    fn s3() -> GroupRef {
        Arc::new(FiniteGroup::from_permutations("S3", &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap())
    }

    fn s3_over_z2() -> Extension {
        let g = s3();
        let r = (0..6).find(|&x| g.element_order(x) == 3).unwrap();
        let rot = Subgroup::new(&g, g.closure(&[r])).unwrap();
        Extension::from_normal_subgroup(&g, &rot, "Z3", "Z2").unwrap()
    }

    #[test]
    fn exactness() {
        let e = z4_over_z2();
        assert_eq!(e.g().order(), e.a().order() * e.b().order());
        let err = make_extension(&z(2), &z(4), &z(2), vec![0, 2], vec![0; 4]).unwrap_err();
        assert!(matches!(
            err,
            Error::NotExact {
                which: ExactnessFailure::QuotientMapNotSurjective,
                ..
            }
        ));
        let e = s3_over_z2();
        assert_eq!((e.a().order(), e.g().order(), e.b().order()), (3, 6, 2));
    }

    #[test]
    fn image_must_equal_kernel() {
        // Z2 -> Z2 x Z2 -> Z2 with k hitting the second factor but f projecting onto it.
        let klein = Arc::new(FiniteGroup::direct_product(&z(2), &z(2)));
        let err = make_extension(&z(2), &klein, &z(2), vec![0, 1], vec![0, 1, 0, 1]).unwrap_err();
        assert!(matches!(
            err,
            Error::NotExact {
                which: ExactnessFailure::ImageDiffersFromKernel,
                ..
            }
        ));
    }

    #[test]
    fn section_enumeration() {
        let got: Vec<Vec<usize>> = sections(&z4_over_z2()).iter().map(|s| s.map().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1], vec![0, 3], vec![2, 1], vec![2, 3]]);
        assert_eq!(sections(&s3_over_z2()).len(), 9);
        assert_eq!(sections(&Extension::trivial_over(&z(3))).len(), 1);
    }

    #[test]
    fn split_detection() {
        assert!(is_split(&z4_over_z2()).is_none());
        let e = s3_over_z2();
        let s = is_split(&e).unwrap();
        assert_eq!(e.g().element_order(s.apply(1)), 2);
        assert_eq!(is_split(&Extension::trivial_over(&z(3))).unwrap().map(), &[0, 1, 2]);
        // the homomorphic section is one of the enumerated sections
        assert!(sections(&e).iter().any(|sec| sec.map() == s.map()));
    }

    #[test]
    fn klein_morphisms_share_kernel_component() {
        let klein = Arc::new(FiniteGroup::direct_product(&z(2), &z(2)));
        // (m, n) has index 2m + n; k(m) = (m, 0), f = second projection.
        let e = make_extension(&z(2), &klein, &z(2), vec![0, 2], vec![0, 1, 0, 1]).unwrap();
        let beta: Vec<usize> = (0..4).map(|x| ((x / 2 + x % 2) % 2) * 2 + x % 2).collect();
        let id = check_morphism(&e, &e, vec![0, 1], vec![0, 1, 2, 3]).unwrap();
        let b = check_morphism(&e, &e, vec![0, 1], beta).unwrap();
        assert_eq!(id.phi_a(), b.phi_a());
        assert_ne!(id.phi_g(), b.phi_g());
        assert!(id.is_mono() && b.is_mono());
        let err = check_morphism(&e, &e, vec![0, 0], vec![0, 1, 2, 3]).unwrap_err();
        assert!(matches!(
            err,
            Error::DiagramFailure {
                square: Square::Left,
                ..
            }
        ));
    }

    #[test]
    fn semidirect_products() {
        let inversion = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let s = semidirect_from_action(&z(2), &z(3), &inversion).unwrap();
        assert!(is_isomorphic(s.ext().g(), &s3()).unwrap().is_some());
        let trivial = vec![vec![0, 1, 2], vec![0, 1, 2]];
        let d = semidirect_from_action(&z(2), &z(3), &trivial).unwrap();
        assert_eq!(**d.ext().g(), FiniteGroup::direct_product(&z(3), &z(2)));
        let klein = semidirect_from_action(&z(2), &z(2), &[vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(klein.ext().g().order_profile(), vec![1, 2, 2, 2]);
        // action recovered by conjugation
        assert_eq!(s.act(1, 1), 2);
    }

    #[test]
    fn invalid_actions() {
        let not_hom = vec![vec![0, 1, 2], vec![0, 0, 0]];
        assert!(matches!(
            semidirect_from_action(&z(2), &z(3), &not_hom),
            Err(Error::NotAnAction(_))
        ));
        // order-3 rotation of Z2 x Z2 assigned to an element of order 2
        let klein = Arc::new(FiniteGroup::direct_product(&z(2), &z(2)));
        let rot = vec![vec![0, 1, 2, 3], vec![0, 2, 3, 1]];
        assert!(matches!(
            semidirect_from_action(&z(2), &klein, &rot),
            Err(Error::NotAnAction(_))
        ));
    }

    #[test]
    fn split_morphism_forgets_soundly() {
        let s = semidirect_from_action(&z(2), &z(3), &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let id = SplitExtMorphism::identity(&s);
        let plain = id.forget();
        assert!(check_morphism(
            s.ext(),
            s.ext(),
            plain.phi_a().map().to_vec(),
            plain.phi_g().map().to_vec()
        )
        .is_ok());
    }
}
