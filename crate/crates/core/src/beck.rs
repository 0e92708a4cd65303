//! Beck modules over a finite group `B`: abelian groups with a `B`-action.
//! The coinduced module `Set(B, A)` with right translation is the kernel of
//! the abelian wreath product, and every module embeds into it through the
//! unit `m -> (x -> rho_x(m))`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::extensions::{semidirect_from_action, validate_action, SplitExtension};
use crate::group::{enumerate_homs, hom_check, FiniteGroup, GroupHom, GroupRef};
use crate::wreath::{decode_function, encode_function, function_space, translate};

#[derive(Debug, Clone)]
pub struct BeckModule {
    b: GroupRef,
    m: GroupRef,
    rho: Vec<Vec<usize>>,
}

impl BeckModule {
    /// `rho[b]` is the permutation of `M` induced by `b`; it must be a left
    /// action by automorphisms, `rho[b1 b2] = rho[b1] . rho[b2]`.
    pub fn new(b: &GroupRef, m: &GroupRef, rho: Vec<Vec<usize>>) -> Result<Self> {
        if let Some((x, y)) = m.commutativity_witness() {
            return Err(Error::NotAbelian { x, y });
        }
        validate_action(b, m, &rho)?;
        Ok(Self {
            b: b.clone(),
            m: m.clone(),
            rho,
        })
    }

    pub fn trivial_action(b: &GroupRef, m: &GroupRef) -> Result<Self> {
        Self::new(b, m, vec![m.elements().collect(); b.order()])
    }

    pub fn base(&self) -> &GroupRef {
        &self.b
    }

    pub fn carrier(&self) -> &GroupRef {
        &self.m
    }

    pub fn rho(&self) -> &[Vec<usize>] {
        &self.rho
    }

    #[inline]
    pub fn act(&self, b: usize, m: usize) -> usize {
        self.rho[b][m]
    }

    /// The corresponding split extension `M -> M x| B -> B`.
    pub fn as_split_extension(&self) -> Result<SplitExtension> {
        semidirect_from_action(&self.b, &self.m, &self.rho)
    }
}

#[derive(Debug, Clone)]
pub struct BeckMorphism {
    source: BeckModule,
    target: BeckModule,
    map: GroupHom,
}

impl BeckMorphism {
    pub fn new(source: &BeckModule, target: &BeckModule, map: Vec<usize>) -> Result<Self> {
        if !source.b.same_table(&target.b) {
            return Err(Error::MismatchedBase);
        }
        let map = hom_check(&source.m, &target.m, map)?;
        if let Some((m, b)) = equivariance_failure(source, target, map.map()) {
            return Err(Error::NotEquivariant { m, b });
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn source(&self) -> &BeckModule {
        &self.source
    }

    pub fn target(&self) -> &BeckModule {
        &self.target
    }

    pub fn map(&self) -> &GroupHom {
        &self.map
    }
}

fn equivariance_failure(source: &BeckModule, target: &BeckModule, map: &[usize]) -> Option<(usize, usize)> {
    for b in source.b.elements() {
        for m in source.m.elements() {
            if map[source.act(b, m)] != target.act(b, map[m]) {
                return Some((m, b));
            }
        }
    }
    None
}

/// `Set(B, A)` with `(b . h)(x) = h(x b)`.
pub fn coinduced(b: &GroupRef, a: &GroupRef) -> Result<BeckModule> {
    if let Some((x, y)) = a.commutativity_witness() {
        return Err(Error::NotAbelian { x, y });
    }
    let funcs = function_space(b, a)?;
    let rho = b
        .elements()
        .map(|x| {
            funcs
                .elements()
                .map(|code| {
                    let h = decode_function(a.order(), b.order(), code);
                    encode_function(a.order(), &translate(b, &h, x))
                })
                .collect()
        })
        .collect();
    BeckModule::new(b, &funcs, rho)
}

/// Evaluation at the identity of `B`, `Set(B, A) -> A`.
pub fn evaluate_at_identity(a: &FiniteGroup, b: &FiniteGroup, code: usize) -> usize {
    decode_function(a.order(), b.order(), code)[0]
}

/// The unit `m -> (x -> rho_x(m))` into the module coinduced from `M`.
pub fn beck_unit(module: &BeckModule) -> Result<BeckMorphism> {
    let co = coinduced(&module.b, &module.m)?;
    let map = module
        .m
        .elements()
        .map(|m| {
            let h: Vec<usize> = module.b.elements().map(|x| module.act(x, m)).collect();
            encode_function(module.m.order(), &h)
        })
        .collect();
    BeckMorphism::new(module, &co, map)
}

/// Every equivariant homomorphism between two modules over the same base.
pub fn equivariant_maps(source: &BeckModule, target: &BeckModule) -> Result<Vec<BeckMorphism>> {
    if !source.b.same_table(&target.b) {
        return Err(Error::MismatchedBase);
    }
    Ok(enumerate_homs(&source.m, &target.m)?
        .into_iter()
        .filter(|h| equivariance_failure(source, target, h.map()).is_none())
        .map(|h| BeckMorphism {
            source: source.clone(),
            target: target.clone(),
            map: h,
        })
        .collect())
}

#[derive(Debug, Clone)]
pub struct BeckLift {
    pub lift: BeckMorphism,
    /// Number of equivariant `beta` with `ev_1 . beta = gamma`.
    pub satisfiers: usize,
}

fn lift_through(module: &BeckModule, co: &BeckModule, gamma: &GroupHom) -> Result<BeckMorphism> {
    let a = gamma.codomain();
    let map = module
        .m
        .elements()
        .map(|m| {
            let h: Vec<usize> = module.b.elements().map(|x| gamma.apply(module.act(x, m))).collect();
            encode_function(a.order(), &h)
        })
        .collect();
    let lift = BeckMorphism::new(module, co, map)?;
    if !recovers(module, a, &lift.map, gamma) {
        return Err(Error::FactorizationFailure("ev_1 . lift != gamma".into()));
    }
    Ok(lift)
}

fn recovers(module: &BeckModule, a: &FiniteGroup, beta: &GroupHom, gamma: &GroupHom) -> bool {
    module
        .m
        .elements()
        .all(|m| evaluate_at_identity(a, &module.b, beta.apply(m)) == gamma.apply(m))
}

fn certify(
    module: &BeckModule,
    equivariant: &[BeckMorphism],
    gamma: &GroupHom,
    lift: BeckMorphism,
) -> Result<BeckLift> {
    let satisfiers = equivariant
        .iter()
        .filter(|beta| recovers(module, gamma.codomain(), &beta.map, gamma))
        .count();
    if satisfiers != 1 {
        return Err(Error::UniquenessFailure { count: satisfiers });
    }
    Ok(BeckLift { lift, satisfiers })
}

/// Lifts `gamma: M -> A` to `m -> (x -> gamma(rho_x(m)))`, checks that
/// evaluation at 1 recovers `gamma`, and counts every equivariant map into
/// the coinduced module with the same property.
pub fn beck_universal(module: &BeckModule, gamma: &GroupHom) -> Result<BeckLift> {
    if !gamma.domain().same_table(&module.m) {
        return Err(Error::BadShape("gamma is not defined on the module".into()));
    }
    let co = coinduced(&module.b, gamma.codomain())?;
    let lift = lift_through(module, &co, gamma)?;
    certify(module, &equivariant_maps(module, &co)?, gamma, lift)
}

/// `beck_universal` for every `gamma: M -> A`, enumerating the equivariant
/// maps into the coinduced module once.
pub fn beck_universal_all(module: &BeckModule, a: &GroupRef) -> Result<Vec<(GroupHom, BeckLift)>> {
    let co = coinduced(&module.b, a)?;
    let equivariant = equivariant_maps(module, &co)?;
    enumerate_homs(&module.m, a)?
        .into_iter()
        .map(|gamma| {
            let lift = lift_through(module, &co, &gamma)?;
            let certified = certify(module, &equivariant, &gamma, lift)?;
            Ok((gamma, certified))
        })
        .collect()
}

/// The coinduction functor on a module map: post-composition.
pub fn coinduced_on_morphism(mu: &BeckMorphism) -> Result<BeckMorphism> {
    let (b, src, tgt) = (&mu.source.b, &mu.source.m, &mu.target.m);
    let co_src = coinduced(b, src)?;
    let co_tgt = coinduced(b, tgt)?;
    let map = co_src
        .m
        .elements()
        .map(|code| {
            let h = decode_function(src.order(), b.order(), code);
            let pushed: Vec<usize> = h.iter().map(|&v| mu.map.apply(v)).collect();
            encode_function(tgt.order(), &pushed)
        })
        .collect();
    BeckMorphism::new(&co_src, &co_tgt, map)
}

/// The automorphism group of `m`, elements as permutations, identity first,
/// with product `x * y = x . y` (apply `y` first).
pub fn automorphism_group(m: &GroupRef) -> Result<(GroupRef, Vec<Vec<usize>>)> {
    let mut autos: Vec<Vec<usize>> = enumerate_homs(m, m)?
        .into_iter()
        .filter(GroupHom::is_injective)
        .map(|h| h.map().to_vec())
        .collect();
    let id: Vec<usize> = m.elements().collect();
    let pos = autos
        .iter()
        .position(|p| *p == id)
        .expect("identity is an automorphism");
    autos.swap(0, pos);
    let n = autos.len();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let comp: Vec<usize> = autos[j].iter().map(|&v| autos[i][v]).collect();
                    autos.iter().position(|p| *p == comp).expect("closed under composition")
                })
                .collect()
        })
        .collect();
    let aut = Arc::new(FiniteGroup::from_table(format!("Aut({})", m.name()), rows)?);
    Ok((aut, autos))
}

/// Every action of `b` on the abelian group `m`, one per homomorphism
/// `b -> Aut(m)`.
pub fn all_modules(b: &GroupRef, m: &GroupRef) -> Result<Vec<BeckModule>> {
    let (aut, perms) = automorphism_group(m)?;
    enumerate_homs(b, &aut)?
        .into_iter()
        .map(|h| {
            let rho = b.elements().map(|x| perms[h.apply(x)].clone()).collect();
            BeckModule::new(b, m, rho)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> GroupRef {
        Arc::new(FiniteGroup::cyclic(n))
    }

    fn z3_inversion() -> BeckModule {
        BeckModule::new(&z(2), &z(3), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap()
    }

    #[test]
    fn coinduced_z3_over_z2_swaps() {
        let co = coinduced(&z(2), &z(3)).unwrap();
        assert_eq!(co.carrier().order(), 9);
        for code in 0..9 {
            let h = decode_function(3, 2, code);
            let swapped = decode_function(3, 2, co.act(1, code));
            assert_eq!(swapped, vec![h[1], h[0]]);
        }
    }

    #[test]
    fn coinduced_over_trivial_base() {
        let one = Arc::new(FiniteGroup::trivial());
        let co = coinduced(&one, &z(4)).unwrap();
        assert_eq!(**co.carrier(), FiniteGroup::cyclic(4));
        assert_eq!(co.rho(), &[vec![0, 1, 2, 3]]);
    }

    #[test]
    fn coinduced_action_axiom() {
        // validated by BeckModule::new; exercised on Z3 acting on Set(Z3, Z2)
        let co = coinduced(&z(3), &z(2)).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                for h in 0..8 {
                    assert_eq!(co.act((x + y) % 3, h), co.act(x, co.act(y, h)));
                }
            }
        }
    }

    #[test]
    fn coinduced_needs_abelian() {
        let s3 = Arc::new(FiniteGroup::from_permutations("S3", &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap());
        assert!(matches!(coinduced(&z(2), &s3), Err(Error::NotAbelian { .. })));
    }

    #[test]
    fn unit_on_inversion_module() {
        let unit = beck_unit(&z3_inversion()).unwrap();
        assert_eq!(decode_function(3, 2, unit.map().apply(1)), vec![1, 2]);
        assert!(unit.map().is_injective());
    }

    #[test]
    fn unit_on_trivial_action_is_constant() {
        let module = BeckModule::trivial_action(&z(3), &z(2)).unwrap();
        let unit = beck_unit(&module).unwrap();
        for m in 0..2 {
            assert_eq!(decode_function(2, 3, unit.map().apply(m)), vec![m; 3]);
        }
    }

    #[test]
    fn universal_lifts() {
        let module = z3_inversion();
        let unit = beck_unit(&module).unwrap();
        let lift = beck_universal(&module, &GroupHom::identity(&z(3))).unwrap();
        assert_eq!(lift.lift.map(), unit.map());
        let zero = beck_universal(&module, &GroupHom::zero(&z(3), &z(3))).unwrap();
        assert!(zero.lift.map().map().iter().all(|&c| c == 0));
        for gamma in enumerate_homs(&z(3), &z(3)).unwrap() {
            assert_eq!(beck_universal(&module, &gamma).unwrap().satisfiers, 1);
        }
    }

    #[test]
    fn adjunction_bijection_counts() {
        let module = z3_inversion();
        for a in [z(2), z(3)] {
            let co = coinduced(module.base(), &a).unwrap();
            let lhs = equivariant_maps(&module, &co).unwrap().len();
            let rhs = enumerate_homs(module.carrier(), &a).unwrap().len();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn unit_is_natural() {
        // mu: trivial Z2-module Z4 -> trivial Z2-module Z2, reduction mod 2
        let src = BeckModule::trivial_action(&z(2), &z(4)).unwrap();
        let tgt = BeckModule::trivial_action(&z(2), &z(2)).unwrap();
        let mu = BeckMorphism::new(&src, &tgt, vec![0, 1, 0, 1]).unwrap();
        let co_mu = coinduced_on_morphism(&mu).unwrap();
        let lhs = co_mu.map().after(beck_unit(&src).unwrap().map()).unwrap();
        let rhs = beck_unit(&tgt).unwrap().map().after(mu.map()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn matches_semidirect_orientation() {
        let split = z3_inversion().as_split_extension().unwrap();
        for b in 0..2 {
            for m in 0..3 {
                assert_eq!(split.act(b, m), z3_inversion().act(b, m));
            }
        }
    }

    #[test]
    fn automorphisms_of_klein() {
        let klein = Arc::new(FiniteGroup::direct_product(
            &FiniteGroup::cyclic(2),
            &FiniteGroup::cyclic(2),
        ));
        let (aut, _) = automorphism_group(&klein).unwrap();
        assert_eq!(aut.order(), 6);
        assert!(!aut.is_abelian());
        assert_eq!(all_modules(&z(2), &klein).unwrap().len(), 4);
        assert_eq!(all_modules(&z(3), &klein).unwrap().len(), 3);
    }

    #[test]
    fn non_equivariant_rejected() {
        let module = z3_inversion();
        let trivial = BeckModule::trivial_action(&z(2), &z(3)).unwrap();
        assert!(matches!(
            BeckMorphism::new(&module, &trivial, vec![0, 1, 2]),
            Err(Error::NotEquivariant { .. })
        ));
    }

    #[test]
    fn batch_lifts_agree_with_single_lifts() {
        let m = BeckModule::new(&z(2), &z(3), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let all = beck_universal_all(&m, &z(3)).unwrap();
        assert_eq!(all.len(), 3);
        for (gamma, lift) in all {
            let single = beck_universal(&m, &gamma).unwrap();
            assert_eq!(single.lift.map(), lift.lift.map());
            assert_eq!(lift.satisfiers, 1);
        }
    }
}
