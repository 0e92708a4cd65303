//! Finite groups given by multiplication tables.
//!
//! Elements are dense indices `0..order` and the identity is always index 0.
//! Homomorphisms, subgroups and the brute-force enumeration used by the
//! uniqueness checks elsewhere in the crate live here as well.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::ControlFlow;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default cap on candidate generator assignments in [`enumerate_homs`].
pub const DEFAULT_HOM_BUDGET: u128 = 1_000_000;

pub type GroupRef = Arc<FiniteGroup>;

/// A finite group stored as a full multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
}

/// Input accepted by [`make_group`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Table(Vec<Vec<usize>>),
    /// Permutations of `0..n`; the group is their closure under composition.
    Permutations(Vec<Vec<usize>>),
}

pub fn make_group(name: impl Into<String>, spec: GroupSpec) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Table(rows) => FiniteGroup::from_table(name, rows),
        GroupSpec::Permutations(perms) => FiniteGroup::from_permutations(name, &perms),
    }
}

impl FiniteGroup {
    /// Validates identity at 0, the Latin square property and associativity.
    pub fn from_table(name: impl Into<String>, rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptySpec);
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {i} has length {} != {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::NotAGroup(format!("entry {bad} in row {i} out of range")));
            }
            table.extend_from_slice(row);
        }
        let group = Self::from_flat_unchecked(name.into(), n, table)?;
        group.check_associative()?;
        Ok(group)
    }

    /// Builds the closure of `perms` under composition. The product `x * y`
    /// applies `x` first and then `y`. Elements are ordered identity first,
    /// then breadth-first over right multiplication by the generators.
    pub fn from_permutations(name: impl Into<String>, perms: &[Vec<usize>]) -> Result<Self> {
        let Some(first) = perms.first() else {
            return Err(Error::EmptySpec);
        };
        let degree = first.len();
        for p in perms {
            if p.len() != degree {
                return Err(Error::NotAGroup("permutations of unequal length".into()));
            }
            let mut seen = vec![false; degree];
            for &x in p {
                if x >= degree || seen[x] {
                    return Err(Error::NotAGroup(format!("{p:?} is not a permutation")));
                }
                seen[x] = true;
            }
        }
        let compose = |x: &[usize], y: &[usize]| -> Vec<usize> { x.iter().map(|&pt| y[pt]).collect() };

        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for gen in perms {
                let prod = compose(&elements[i], gen);
                if !index.contains_key(&prod) {
                    index.insert(prod.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(prod);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = index[&compose(&elements[i], &elements[j])];
            }
        }
        Self::from_flat_unchecked(name.into(), n, table)
    }

    /// Checks identity and the Latin square property but not associativity.
    pub(crate) fn from_flat_unchecked(name: String, n: usize, table: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySpec);
        }
        debug_assert_eq!(table.len(), n * n);
        for x in 0..n {
            if table[x] != x || table[x * n] != x {
                return Err(Error::NotAGroup(format!("0 is not a two-sided identity at {x}")));
            }
        }
        let mut inverses = vec![usize::MAX; n];
        let mut seen = vec![0u32; n];
        for i in 0..n {
            let stamp = i as u32 + 1;
            for j in 0..n {
                let v = table[i * n + j];
                if seen[v] == stamp {
                    return Err(Error::NotAGroup(format!("row {i} is not a permutation")));
                }
                seen[v] = stamp;
                if v == 0 {
                    inverses[i] = j;
                }
            }
        }
        let mut seen = vec![0u32; n];
        for j in 0..n {
            let stamp = j as u32 + 1;
            for i in 0..n {
                let v = table[i * n + j];
                if seen[v] == stamp {
                    return Err(Error::NotAGroup(format!("column {j} is not a permutation")));
                }
                seen[v] = stamp;
            }
        }
        Ok(Self {
            name,
            order: n,
            table,
            inverses,
        })
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Err(Error::NotAGroup(format!("associativity fails at ({x}, {y}, {z})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::from_flat_unchecked(format!("Z{n}"), n, table).expect("cyclic table is a group")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).renamed("1")
    }

    /// Componentwise product; `(g, h)` has index `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (m, k) = (g.order, h.order);
        let n = m * k;
        let mut table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (xg, xh) = (x / k, x % k);
                let (yg, yh) = (y / k, y % k);
                table[x * n + y] = g.mul(xg, yg) * k + h.mul(xh, yh);
            }
        }
        Self::from_flat_unchecked(format!("{}x{}", g.name, h.name), n, table).expect("direct product is a group")
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverses[x]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(0, |acc, x| self.mul(acc, x))
    }

    pub fn conjugate(&self, by: usize, x: usize) -> usize {
        self.mul(self.mul(by, x), self.inv(by))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        for x in 0..self.order {
            for y in (x + 1)..self.order {
                if self.mul(x, y) != self.mul(y, x) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Sorted element-order multiset, a cheap isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|x| self.element_order(x)).collect();
        v.sort_unstable();
        v
    }

    /// Sorted list of the elements of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&x| inside[x]).collect()
    }

    /// Greedy generating set: candidates by decreasing element order, each
    /// kept only if it enlarges the current closure.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut candidates: Vec<usize> = (1..self.order).collect();
        candidates.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        let mut gens = Vec::new();
        let mut span = vec![0usize];
        for x in candidates {
            if span.len() == self.order {
                break;
            }
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = self.closure(&gens);
            }
        }
        gens
    }

    /// Same multiplication table (names are ignored).
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_table(other)
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

/// A validated homomorphism between finite groups.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupHom {
    domain: GroupRef,
    codomain: GroupRef,
    map: Vec<usize>,
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupHom({} -> {}: {:?})",
            self.domain.name, self.codomain.name, self.map
        )
    }
}

pub fn hom_check(domain: &GroupRef, codomain: &GroupRef, map: Vec<usize>) -> Result<GroupHom> {
    if map.len() != domain.order() {
        return Err(Error::BadShape(format!(
            "map has length {}, domain has order {}",
            map.len(),
            domain.order()
        )));
    }
    if let Some(&bad) = map.iter().find(|&&v| v >= codomain.order()) {
        return Err(Error::BadShape(format!("image {bad} out of range")));
    }
    if map[0] != 0 {
        return Err(Error::IdentityNotPreserved);
    }
    for x in domain.elements() {
        for y in domain.elements() {
            if map[domain.mul(x, y)] != codomain.mul(map[x], map[y]) {
                return Err(Error::NotAHom { x, y });
            }
        }
    }
    Ok(GroupHom {
        domain: domain.clone(),
        codomain: codomain.clone(),
        map,
    })
}

impl GroupHom {
    pub(crate) fn new_unchecked(domain: GroupRef, codomain: GroupRef, map: Vec<usize>) -> Self {
        debug_assert_eq!(map.len(), domain.order());
        Self { domain, codomain, map }
    }

    pub fn identity(g: &GroupRef) -> Self {
        Self::new_unchecked(g.clone(), g.clone(), g.elements().collect())
    }

    pub fn zero(domain: &GroupRef, codomain: &GroupRef) -> Self {
        Self::new_unchecked(domain.clone(), codomain.clone(), vec![0; domain.order()])
    }

    pub fn domain(&self) -> &GroupRef {
        &self.domain
    }

    pub fn codomain(&self) -> &GroupRef {
        &self.codomain
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self . first`: apply `first`, then `self`.
    pub fn after(&self, first: &GroupHom) -> Result<GroupHom> {
        if !first.codomain.same_table(&self.domain) {
            return Err(Error::BadShape("composition of non-composable homomorphisms".into()));
        }
        Ok(Self::new_unchecked(
            first.domain.clone(),
            self.codomain.clone(),
            first.map.iter().map(|&x| self.map[x]).collect(),
        ))
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().elements().len() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().elements().len() == self.codomain.order()
    }

    pub fn kernel(&self) -> Subgroup {
        kernel(self)
    }

    pub fn image(&self) -> Subgroup {
        image(self)
    }

    /// Preimage table: `v -> Some(x)` when `self(x) = v` (for injective maps).
    pub fn inverse_image_table(&self) -> Vec<Option<usize>> {
        let mut t = vec![None; self.codomain.order()];
        for (x, &v) in self.map.iter().enumerate() {
            t[v].get_or_insert(x);
        }
        t
    }
}

/// A subgroup, stored as a sorted set of parent indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: GroupRef,
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn new(parent: &GroupRef, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return Err(Error::NotAGroup("subset does not contain the identity".into()));
        }
        for &x in &elements {
            if elements.binary_search(&parent.inv(x)).is_err() {
                return Err(Error::NotAGroup(format!("not closed under inverse at {x}")));
            }
            for &y in &elements {
                if elements.binary_search(&parent.mul(x, y)).is_err() {
                    return Err(Error::NotAGroup(format!("not closed at ({x}, {y})")));
                }
            }
        }
        Ok(Self {
            parent: parent.clone(),
            elements,
        })
    }

    pub fn parent(&self) -> &GroupRef {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_normal(&self) -> bool {
        self.parent.elements().all(|g| {
            self.elements
                .iter()
                .all(|&n| self.contains(self.parent.conjugate(g, n)))
        })
    }

    /// The subgroup as a group in its own right, with its inclusion.
    pub fn as_group(&self, name: impl Into<String>) -> (GroupRef, GroupHom) {
        let pos: HashMap<usize, usize> = self.elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let n = self.elements.len();
        let mut table = vec![0; n * n];
        for (i, &x) in self.elements.iter().enumerate() {
            for (j, &y) in self.elements.iter().enumerate() {
                table[i * n + j] = pos[&self.parent.mul(x, y)];
            }
        }
        let group =
            Arc::new(FiniteGroup::from_flat_unchecked(name.into(), n, table).expect("subgroup table is a group"));
        let inclusion = GroupHom::new_unchecked(group.clone(), self.parent.clone(), self.elements.clone());
        (group, inclusion)
    }

    /// Quotient by a normal subgroup. Cosets are ordered by their least element.
    pub fn quotient(&self, name: impl Into<String>) -> Result<(GroupRef, GroupHom)> {
        if !self.is_normal() {
            return Err(Error::NotAGroup("quotient by a non-normal subgroup".into()));
        }
        let g = &self.parent;
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        for x in g.elements() {
            if coset_of[x] == usize::MAX {
                for &n in &self.elements {
                    coset_of[g.mul(x, n)] = reps.len();
                }
                reps.push(x);
            }
        }
        let m = reps.len();
        let mut table = vec![0; m * m];
        for (i, &x) in reps.iter().enumerate() {
            for (j, &y) in reps.iter().enumerate() {
                table[i * m + j] = coset_of[g.mul(x, y)];
            }
        }
        let q = Arc::new(FiniteGroup::from_flat_unchecked(name.into(), m, table)?);
        let proj = GroupHom::new_unchecked(g.clone(), q.clone(), coset_of);
        Ok((q, proj))
    }
}

pub fn kernel(h: &GroupHom) -> Subgroup {
    Subgroup {
        parent: h.domain.clone(),
        elements: h.domain.elements().filter(|&x| h.map[x] == 0).collect(),
    }
}

pub fn image(h: &GroupHom) -> Subgroup {
    let mut elements = h.map.clone();
    elements.sort_unstable();
    elements.dedup();
    Subgroup {
        parent: h.codomain.clone(),
        elements,
    }
}

/// Visits every homomorphism `g -> h` as a raw map. Images are assigned to a
/// greedy generating set of `g` and propagated along right multiplication by
/// generators; inconsistent assignments are discarded.
pub fn for_each_hom<F>(g: &FiniteGroup, h: &FiniteGroup, budget: u128, mut visit: F) -> Result<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let gens = g.generating_set();
    let needed = (h.order() as u128).checked_pow(gens.len() as u32).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded {
            what: "homomorphism candidates",
            needed,
            budget,
        });
    }
    // Spanning tree: each non-identity element is reached as parent * gen.
    let mut tree: Vec<(usize, usize, usize)> = Vec::with_capacity(g.order());
    let mut reached = vec![false; g.order()];
    reached[0] = true;
    let mut queue = VecDeque::from([0usize]);
    let mut edges = Vec::new();
    while let Some(x) = queue.pop_front() {
        for (gi, &gen) in gens.iter().enumerate() {
            let y = g.mul(x, gen);
            if reached[y] {
                edges.push((x, gi, y));
            } else {
                reached[y] = true;
                tree.push((x, gi, y));
                queue.push_back(y);
            }
        }
    }

    let mut images = vec![0usize; gens.len()];
    let mut map = vec![0usize; g.order()];
    loop {
        for &(x, gi, y) in &tree {
            map[y] = h.mul(map[x], images[gi]);
        }
        let consistent = edges.iter().all(|&(x, gi, y)| map[y] == h.mul(map[x], images[gi]));
        if consistent && visit(&map).is_break() {
            return Ok(());
        }
        // odometer
        let mut i = 0;
        loop {
            if i == images.len() {
                return Ok(());
            }
            images[i] += 1;
            if images[i] < h.order() {
                break;
            }
            images[i] = 0;
            i += 1;
        }
    }
}

pub fn enumerate_homs(g: &GroupRef, h: &GroupRef) -> Result<Vec<GroupHom>> {
    enumerate_homs_with_budget(g, h, DEFAULT_HOM_BUDGET)
}

pub fn enumerate_homs_with_budget(g: &GroupRef, h: &GroupRef, budget: u128) -> Result<Vec<GroupHom>> {
    let mut out = Vec::new();
    for_each_hom(g, h, budget, |map| {
        out.push(GroupHom::new_unchecked(g.clone(), h.clone(), map.to_vec()));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// An isomorphism `g -> h` if one exists.
pub fn is_isomorphic(g: &GroupRef, h: &GroupRef) -> Result<Option<GroupHom>> {
    is_isomorphic_with_budget(g, h, DEFAULT_HOM_BUDGET)
}

pub fn is_isomorphic_with_budget(g: &GroupRef, h: &GroupRef, budget: u128) -> Result<Option<GroupHom>> {
    if g.order() != h.order() || g.is_abelian() != h.is_abelian() || g.order_profile() != h.order_profile() {
        return Ok(None);
    }
    let mut found = None;
    for_each_hom(g, h, budget, |map| {
        let mut hit = vec![false; h.order()];
        if map.iter().all(|&v| !std::mem::replace(&mut hit[v], true)) {
            found = Some(map.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found.map(|map| GroupHom::new_unchecked(g.clone(), h.clone(), map)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> GroupRef {
        Arc::new(FiniteGroup::cyclic(n))
    }

    fn s3() -> GroupRef {
        Arc::new(FiniteGroup::from_permutations("S3", &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap())
    }

    #[test]
    fn z4_from_table() {
        let rows = (0..4).map(|i| (0..4).map(|j| (i + j) % 4).collect()).collect();
        let g = make_group("Z4", GroupSpec::Table(rows)).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g, FiniteGroup::cyclic(4));
    }

    #[test]
    fn s3_by_closure() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.order_profile(), vec![1, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn rejects_non_latin_table() {
        let err = make_group("bad", GroupSpec::Table(vec![vec![0, 1], vec![1, 1]])).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
    }

    #[test]
    fn rejects_non_associative_loop() {
        // A Latin square with identity 0 that is not associative (order 5 loop).
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table("loop", rows).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(ref m) if m.contains("associativity")));
    }

    #[test]
    fn empty_specs() {
        assert_eq!(make_group("e", GroupSpec::Table(vec![])).unwrap_err(), Error::EmptySpec);
        assert_eq!(
            make_group("e", GroupSpec::Permutations(vec![])).unwrap_err(),
            Error::EmptySpec
        );
    }

    #[test]
    fn hom_check_examples() {
        let quotient = hom_check(&z(4), &z(2), vec![0, 1, 0, 1]).unwrap();
        assert_eq!(kernel(&quotient).elements(), &[0, 2]);
        assert_eq!(
            hom_check(&z(4), &z(4), vec![1, 2, 3, 0]).unwrap_err(),
            Error::IdentityNotPreserved
        );
        let incl = hom_check(&z(2), &z(4), vec![0, 2]).unwrap();
        assert_eq!(image(&incl).elements(), &[0, 2]);
        assert!(incl.is_injective());
        let id = GroupHom::identity(&s3());
        assert_eq!(kernel(&id).elements(), &[0]);
    }

    #[test]
    fn not_a_hom_reports_pair() {
        let err = hom_check(&z(3), &z(3), vec![0, 1, 1]).unwrap_err();
        assert!(matches!(err, Error::NotAHom { .. }));
    }

    #[test]
    fn hom_counts() {
        assert_eq!(enumerate_homs(&z(3), &z(3)).unwrap().len(), 3);
        assert_eq!(enumerate_homs(&z(2), &z(3)).unwrap().len(), 1);
        assert_eq!(enumerate_homs(&z(2), &z(2)).unwrap().len(), 2);
    }

    #[test]
    fn budget_is_enforced() {
        let err = enumerate_homs_with_budget(&z(4), &z(4), 3).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { needed: 4, .. }));
    }

    #[test]
    fn isomorphism_probes() {
        let klein = Arc::new(FiniteGroup::direct_product(&z(2), &z(2)));
        assert!(is_isomorphic(&z(4), &klein).unwrap().is_none());
        assert!(is_isomorphic(&s3(), &z(6)).unwrap().is_none());
        let iso = is_isomorphic(&z(6), &Arc::new(FiniteGroup::direct_product(&z(2), &z(3))))
            .unwrap()
            .unwrap();
        assert!(iso.is_injective() && iso.is_surjective());
    }

    #[test]
    fn fixture_builders() {
        assert_eq!(FiniteGroup::cyclic(1).order(), 1);
        let klein = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert_eq!(klein.order_profile(), vec![1, 2, 2, 2]);
    }

    #[test]
    fn greedy_generators() {
        assert_eq!(FiniteGroup::cyclic(6).generating_set().len(), 1);
        assert_eq!(s3().generating_set().len(), 2);
        assert!(FiniteGroup::trivial().generating_set().is_empty());
    }

    #[test]
    fn quotient_and_subgroup_group() {
        let g = s3();
        let rotations = Subgroup::new(&g, g.closure(&[g.generating_set()[0]])).unwrap();
        assert_eq!(rotations.order(), 3);
        let (q, proj) = rotations.quotient("Z2").unwrap();
        assert_eq!(q.order(), 2);
        assert!(hom_check(&g, &q, proj.map().to_vec()).is_ok());
        let (a, incl) = rotations.as_group("Z3");
        assert!(hom_check(&a, &g, incl.map().to_vec()).is_ok());
        assert!(is_isomorphic(&a, &z(3)).unwrap().is_some());
    }
}
