//! Built-in groups, extensions, modules and Lie algebra fixtures.

use std::sync::Arc;

use crate::beck::BeckModule;
use crate::error::Result;
use crate::extensions::{
    check_morphism, make_extension, semidirect_from_action, ExtMorphism, Extension, SplitExtension,
};
use crate::group::{FiniteGroup, GroupRef, Subgroup};
use crate::lie::{semidirect_lie, LieAlgebra, LieExtension, LieHom, LieModule, LinearSection};
use crate::linalg::{from_ints, q, Q};

pub fn cyclic(n: usize) -> GroupRef {
    Arc::new(FiniteGroup::cyclic(n))
}

/// `Z2 x Z2`, element `(x, y)` at index `2x + y`.
pub fn klein() -> GroupRef {
    Arc::new(FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)).renamed("V4"))
}

pub fn s3() -> GroupRef {
    Arc::new(FiniteGroup::from_permutations("S3", &[vec![1, 2, 0], vec![1, 0, 2]]).expect("S3 permutations"))
}

/// Symmetries of a square, generated by a rotation and a reflection.
pub fn d4() -> GroupRef {
    Arc::new(FiniteGroup::from_permutations("D4", &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]).expect("D4 permutations"))
}

/// Quaternions; `1, i, j, k` are units `0..4` and `u` with sign `s` sits
/// at index `2u + s`.
pub fn q8() -> GroupRef {
    // (unit, sign) of u * v
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let rows = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (w, s) = UNITS[x / 2][y / 2];
                    2 * w + (s + x % 2 + y % 2) % 2
                })
                .collect()
        })
        .collect();
    Arc::new(FiniteGroup::from_table("Q8", rows).expect("quaternion table"))
}

/// Groups of order at most 4, up to isomorphism.
pub fn small_groups() -> Vec<GroupRef> {
    vec![
        Arc::new(FiniteGroup::trivial()),
        cyclic(2),
        cyclic(3),
        cyclic(4),
        klein(),
    ]
}

fn center(g: &GroupRef) -> Subgroup {
    let elements = g
        .elements()
        .filter(|&x| g.elements().all(|y| g.mul(x, y) == g.mul(y, x)))
        .collect();
    Subgroup::new(g, elements).expect("the center is a subgroup")
}

fn quotient_by(g: &GroupRef, elements: Vec<usize>, a: &str, b: &str) -> Extension {
    let n = Subgroup::new(g, elements).expect("fixture subgroup");
    Extension::from_normal_subgroup(g, &n, a, b).expect("fixture normal subgroup")
}

/// `Z2 -> Z4 -> Z2`.
pub fn z4_over_z2() -> Extension {
    make_extension(&cyclic(2), &cyclic(4), &cyclic(2), vec![0, 2], vec![0, 1, 0, 1]).expect("Z4 fixture")
}

/// `Z2 -> Z2 x Z2 -> Z2`, kernel the first factor.
pub fn klein_over_z2() -> Extension {
    make_extension(&cyclic(2), &klein(), &cyclic(2), vec![0, 2], vec![0, 1, 0, 1]).expect("Klein fixture")
}

/// The identity of `Klein` and the automorphism swapping `(0,1)` and
/// `(1,1)`: two morphisms with the same kernel component.
pub fn klein_morphisms() -> (ExtMorphism, ExtMorphism) {
    let e = klein_over_z2();
    let beta: Vec<usize> = (0..4).map(|x| ((x / 2 + x % 2) % 2) * 2 + x % 2).collect();
    (
        check_morphism(&e, &e, vec![0, 1], (0..4).collect()).expect("identity"),
        check_morphism(&e, &e, vec![0, 1], beta).expect("beta"),
    )
}

fn inversion_action(n: usize) -> Vec<Vec<usize>> {
    vec![(0..n).collect(), (0..n).map(|x| (n - x) % n).collect()]
}

/// `Z3 x| Z2` with `Z2` acting by inversion.
pub fn s3_split() -> SplitExtension {
    semidirect_from_action(&cyclic(2), &cyclic(3), &inversion_action(3)).expect("S3 fixture")
}

/// `A3 -> S3 -> Z2` with `S3` given by permutations.
pub fn s3_over_z2() -> Extension {
    let g = s3();
    let a3: Vec<usize> = g.elements().filter(|&x| g.element_order(x) != 2).collect();
    quotient_by(&g, a3, "A3", "Z2")
}

/// `Z4 x| Z2` with `Z2` acting by inversion.
pub fn d4_split() -> SplitExtension {
    semidirect_from_action(&cyclic(2), &cyclic(4), &inversion_action(4)).expect("D4 fixture")
}

/// `Z(D4) -> D4 -> V4`.
pub fn d4_over_klein() -> Extension {
    let g = d4();
    let z = center(&g).elements().to_vec();
    quotient_by(&g, z, "Z2", "V4")
}

/// `<i> -> Q8 -> Z2`.
pub fn q8_over_z2() -> Extension {
    quotient_by(&q8(), vec![0, 1, 2, 3], "Z4", "Z2")
}

/// `{1, -1} -> Q8 -> V4`.
pub fn q8_over_klein() -> Extension {
    quotient_by(&q8(), vec![0, 1], "Z2", "V4")
}

pub fn z8_over_z4() -> Extension {
    quotient_by(&cyclic(8), vec![0, 4], "Z2", "Z4")
}

pub fn z8_over_z2() -> Extension {
    quotient_by(&cyclic(8), vec![0, 2, 4, 6], "Z4", "Z2")
}

/// `G = B = Z2`, `f` the identity.
pub fn z2_identity() -> Extension {
    Extension::trivial_over(&cyclic(2))
}

/// Every extension fixture, with a label.
pub fn extension_fixtures() -> Vec<(&'static str, Extension)> {
    vec![
        ("z4_over_z2", z4_over_z2()),
        ("klein_over_z2", klein_over_z2()),
        ("s3_split", s3_split().ext().clone()),
        ("s3_over_z2", s3_over_z2()),
        ("d4_split", d4_split().ext().clone()),
        ("d4_over_klein", d4_over_klein()),
        ("z2_identity", z2_identity()),
        ("q8_over_z2", q8_over_z2()),
        ("q8_over_klein", q8_over_klein()),
        ("z8_over_z4", z8_over_z4()),
        ("z8_over_z2", z8_over_z2()),
    ]
}

/// `Z3` with `Z2` acting by inversion.
pub fn z3_inversion_module() -> BeckModule {
    BeckModule::new(&cyclic(2), &cyclic(3), inversion_action(3)).expect("Z3 inversion module")
}

fn qv(xs: &[i64]) -> Vec<Q> {
    xs.iter().map(|&x| q(x)).collect()
}

pub fn lie_line() -> LieAlgebra {
    LieAlgebra::abelian("K", 1)
}

/// Basis `b1, b2` with `[b1, b2] = b2`.
pub fn lie_solvable() -> LieAlgebra {
    LieAlgebra::from_brackets("solvable2", 2, &[(0, 1, qv(&[0, 1]))]).expect("solvable fixture")
}

/// `aff(1)` on basis `a, b` with `[b, a] = a`, over `B = span b`.
pub fn lie_aff1() -> (LieExtension, LinearSection) {
    semidirect_lie("aff1", &lie_line(), &lie_line(), &[from_ints(&[&[1]])]).expect("aff(1) fixture")
}

/// Heisenberg `[x, y] = z` over `K^2` with `s(x) = x`, `s(y) = y`.
pub fn lie_heisenberg() -> (LieExtension, LinearSection) {
    let g = LieAlgebra::from_brackets("h3", 3, &[(0, 1, qv(&[0, 0, 1]))]).expect("h3");
    let (a, b) = (lie_line(), LieAlgebra::abelian("K2", 2));
    let k = LieHom::new(&a, &g, from_ints(&[&[0], &[0], &[1]])).expect("k");
    let f = LieHom::new(&g, &b, from_ints(&[&[1, 0, 0], &[0, 1, 0]])).expect("f");
    let e = LieExtension::new(k, f).expect("h3 extension");
    let s = LinearSection::new(&e, from_ints(&[&[1, 0], &[0, 1], &[0, 0]])).expect("h3 section");
    (e, s)
}

/// Split Lie extensions with homomorphic sections.
pub fn lie_split_fixtures() -> Result<Vec<(LieExtension, LinearSection)>> {
    let aff_a = LieAlgebra::from_brackets("aff1", 2, &[(1, 0, qv(&[1, 0]))])?;
    Ok(vec![
        lie_aff1(),
        semidirect_lie("abelian2", &lie_line(), &lie_line(), &[from_ints(&[&[0]])])?,
        semidirect_lie(
            "solvable_on_line",
            &lie_line(),
            &lie_solvable(),
            &[from_ints(&[&[1]]), from_ints(&[&[0]])],
        )?,
        semidirect_lie(
            "jordan",
            &LieAlgebra::abelian("K2", 2),
            &lie_line(),
            &[from_ints(&[&[1, 1], &[0, 1]])],
        )?,
        // the line acting on aff(1) by ad(a): a -> 0, b -> -a
        semidirect_lie("aff1_inner", &aff_a, &lie_line(), &[from_ints(&[&[0, -1], &[0, 0]])])?,
    ])
}

/// Lie modules paired with a linear map out of them, for universality checks.
pub fn lie_module_fixtures() -> Result<Vec<(&'static str, LieModule, crate::linalg::Matrix)>> {
    let k2 = LieAlgebra::abelian("K2", 2);
    let b2 = lie_solvable();
    Ok(vec![
        (
            "line_scalar",
            LieModule::new(&lie_line(), 1, vec![from_ints(&[&[1]])])?,
            from_ints(&[&[1]]),
        ),
        ("line_trivial", LieModule::trivial(&lie_line(), 1), from_ints(&[&[3]])),
        ("heisenberg_center", LieModule::trivial(&k2, 1), from_ints(&[&[1]])),
        (
            "solvable_on_plane",
            LieModule::new(
                &b2,
                2,
                vec![from_ints(&[&[1, 0], &[0, 0]]), from_ints(&[&[0, 1], &[0, 0]])],
            )?,
            from_ints(&[&[2, -1]]),
        ),
        (
            "jordan_block",
            LieModule::new(&lie_line(), 2, vec![from_ints(&[&[1, 1], &[0, 1]])])?,
            from_ints(&[&[1, 0], &[0, 1]]),
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_isomorphic;

    #[test]
    fn quaternion_relations() {
        let g = q8();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        // i^2 = j^2 = k^2 = ijk = -1
        let minus_one = 1;
        for u in [2, 4, 6] {
            assert_eq!(g.mul(u, u), minus_one);
        }
        assert_eq!(g.product([2, 4, 6]), minus_one);
        assert_eq!(g.order_profile().iter().filter(|&&o| o == 2).count(), 1);
    }

    #[test]
    fn extension_shapes() {
        for (name, e) in extension_fixtures() {
            assert!(e.g().order() <= 8, "{name}");
            assert_eq!(e.a().order() * e.b().order(), e.g().order(), "{name}");
        }
        assert!(is_isomorphic(d4_over_klein().b(), &klein()).unwrap().is_some());
        assert!(is_isomorphic(q8_over_klein().b(), &klein()).unwrap().is_some());
        assert!(is_isomorphic(s3_split().ext().g(), &s3()).unwrap().is_some());
    }

    #[test]
    fn klein_morphisms_differ_only_in_the_middle() {
        let (id, beta) = klein_morphisms();
        assert_eq!(id.phi_a(), beta.phi_a());
        assert_ne!(id.phi_g(), beta.phi_g());
        assert_eq!(beta.phi_g().map(), &[0, 3, 2, 1]);
    }

    #[test]
    fn lie_fixtures_build() {
        assert_eq!(lie_split_fixtures().unwrap().len(), 5);
        assert_eq!(lie_module_fixtures().unwrap().len(), 5);
        assert_eq!(lie_heisenberg().0.g().dim(), 3);
    }
}
