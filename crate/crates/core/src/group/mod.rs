//! Finite groups stored as full multiplication tables, together with the
//! subgroup, morphism and automorphism machinery the rings are built on.
//!
//! Elements are indices `0..order` and `0` is always the identity.

mod automorphism;
mod context;
mod lattice;
mod morphism;
pub mod perm;
pub mod spec;

pub use automorphism::OuterAutomorphismGroup;
pub use context::GroupContext;
pub use lattice::{SubgroupClass, SubgroupLattice};
pub use morphism::{isomorphisms, Morphism};
pub use spec::{build_group, parse_group_spec, GroupSpec};

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    element_orders: Vec<usize>,
    provenance: Option<String>,
}

impl FiniteGroup {
    /// Builds a group from a row-major multiplication table.
    ///
    /// Element `0` must be the identity. Associativity and the existence of
    /// inverses are checked exhaustively.
    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGroup("empty group".into()));
        }
        if table.len() != order * order || table.iter().any(|&x| x >= order) {
            return Err(Error::InvalidGroup("malformed multiplication table".into()));
        }
        for x in 0..order {
            if table[x] != x || table[x * order] != x {
                return Err(Error::InvalidGroup("element 0 is not the identity".into()));
            }
        }
        let mut inverses = vec![usize::MAX; order];
        for x in 0..order {
            match (0..order).find(|&y| table[x * order + y] == 0) {
                Some(y) if table[y * order + x] == 0 => inverses[x] = y,
                _ => return Err(Error::InvalidGroup(format!("element {x} has no inverse"))),
            }
        }
        let mut group = FiniteGroup {
            order,
            table,
            inverses,
            element_orders: Vec::new(),
            provenance: None,
        };
        if !group.is_associative() {
            return Err(Error::InvalidGroup("multiplication is not associative".into()));
        }
        group.element_orders = (0..order).map(|x| group.compute_order(x)).collect();
        Ok(group)
    }

    /// Closes `generators` under `mul` and returns the resulting group along
    /// with the concrete element behind each index.
    ///
    /// Indices are assigned in breadth-first discovery order (right
    /// multiplication by the generators, in the order given), so the
    /// numbering is a deterministic function of the inputs.
    pub fn from_generators<T, F>(generators: &[T], identity: T, mul: F, cap: usize) -> Result<(Self, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = mul(&elements[x], g);
                if !index.contains_key(&y) {
                    if elements.len() == cap {
                        return Err(Error::AboveCap { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                let c = mul(a, b);
                let k = *index
                    .get(&c)
                    .ok_or_else(|| Error::InvalidGroup("generators do not close under multiplication".into()))?;
                table.push(k);
            }
        }
        Ok((FiniteGroup::from_table(n, table)?, elements))
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = Some(provenance.into());
        self
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `x g x^{-1}`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(x, g), self.inverses[x])
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a]
    }

    fn compute_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.mul(a, b);
                (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }

    /// Exhaustive check of the group axioms on the stored table.
    pub fn verify_axioms(&self) -> bool {
        self.is_associative()
            && (0..self.order).all(|x| {
                self.mul(0, x) == x
                    && self.mul(x, 0) == x
                    && self.mul(x, self.inv(x)) == 0
                    && self.mul(self.inv(x), x) == 0
            })
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.element_orders.contains(&self.order)
    }

    /// Nilpotency via the upper central series.
    pub fn is_nilpotent(&self) -> bool {
        let mut current = vec![false; self.order];
        current[0] = true;
        loop {
            let next: Vec<bool> = (0..self.order)
                .map(|g| {
                    (0..self.order).all(|x| {
                        let comm = self.mul(self.mul(g, x), self.mul(self.inv(g), self.inv(x)));
                        current[comm]
                    })
                })
                .collect();
            if next.iter().all(|&b| b) {
                return true;
            }
            if next == current {
                return false;
            }
            current = next;
        }
    }

    /// Subgroup generated by `generators`.
    pub fn generate(&self, generators: &[usize]) -> Subgroup {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut members = vec![0];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in generators {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        Subgroup::from_members(self.order, members)
    }

    /// Validates that `members` is a subgroup.
    pub fn subgroup(&self, members: Vec<usize>) -> Result<Subgroup> {
        if members.iter().any(|&x| x >= self.order) {
            return Err(Error::NotSubgroup(members));
        }
        let s = Subgroup::from_members(self.order, members);
        let closed = s.contains(0)
            && s.iter().all(|x| s.contains(self.inv(x)))
            && s.iter().all(|x| s.iter().all(|y| s.contains(self.mul(x, y))));
        if closed && self.order.is_multiple_of(s.order()) {
            Ok(s)
        } else {
            Err(Error::NotSubgroup(s.members))
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_members(self.order, (0..self.order).collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_members(self.order, vec![0])
    }

    pub fn centralizer(&self, s: &Subgroup) -> Subgroup {
        let members = (0..self.order)
            .filter(|&g| s.iter().all(|x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        Subgroup::from_members(self.order, members)
    }

    pub fn normalizer(&self, s: &Subgroup) -> Subgroup {
        let members = (0..self.order)
            .filter(|&g| s.iter().all(|x| s.contains(self.conj(g, x))))
            .collect();
        Subgroup::from_members(self.order, members)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.whole())
    }

    /// `x S x^{-1}`.
    pub fn conjugate_subgroup(&self, x: usize, s: &Subgroup) -> Subgroup {
        Subgroup::from_members(self.order, s.iter().map(|g| self.conj(x, g)).collect())
    }

    /// A small generating set of `s`: elements are taken greedily by
    /// decreasing element order, skipping anything already generated.
    pub fn generators_of(&self, s: &Subgroup) -> Vec<usize> {
        let mut candidates: Vec<usize> = s.iter().filter(|&x| x != 0).collect();
        candidates.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        let mut gens = Vec::new();
        let mut current = self.trivial_subgroup();
        for x in candidates {
            if current.order() == s.order() {
                break;
            }
            if !current.contains(x) {
                gens.push(x);
                current = self.generate(&gens);
            }
        }
        gens
    }
}

/// Direct product `G × H` with its two projections. The pair `(g, h)` is
/// stored as index `g * |H| + h`.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: FiniteGroup,
    left_order: usize,
    right_order: usize,
}

impl DirectProduct {
    pub fn pair(&self, g: usize, h: usize) -> usize {
        g * self.right_order + h
    }

    pub fn p1(&self, x: usize) -> usize {
        x / self.right_order
    }

    pub fn p2(&self, x: usize) -> usize {
        x % self.right_order
    }

    pub fn embed_left(&self, g: usize) -> usize {
        self.pair(g, 0)
    }

    pub fn embed_right(&self, h: usize) -> usize {
        self.pair(0, h)
    }

    pub fn left_order(&self) -> usize {
        self.left_order
    }
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<DirectProduct> {
    let n = g.order() * h.order();
    if n > cap {
        return Err(Error::OrderCap { order: n, cap });
    }
    let m = h.order();
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            table.push(g.mul(x / m, y / m) * m + h.mul(x % m, y % m));
        }
    }
    let mut group = FiniteGroup::from_table(n, table)?;
    if let (Some(a), Some(b)) = (g.provenance(), h.provenance()) {
        group = group.with_provenance(format!("{a}x{b}"));
    }
    Ok(DirectProduct {
        group,
        left_order: g.order(),
        right_order: m,
    })
}

/// A subgroup, stored as its sorted member list plus a membership bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: Vec<u64>,
}

impl Subgroup {
    pub(crate) fn from_members(parent_order: usize, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        let mut mask = vec![0u64; parent_order.div_ceil(64)];
        for &x in &members {
            mask[x / 64] |= 1 << (x % 64);
        }
        Subgroup { members, mask }
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x / 64).is_some_and(|w| w & (1 << (x % 64)) != 0)
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.len() <= other.members.len() && self.mask.iter().zip(&other.mask).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mask: Vec<u64> = self.mask.iter().zip(&other.mask).map(|(a, b)| a & b).collect();
        let members = self.iter().filter(|&x| other.contains(x)).collect();
        Subgroup { members, mask }
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    /// Ascending order, then lexicographic on the sorted member lists.
    pub fn canonical_cmp(&self, other: &Subgroup) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.members.cmp(&other.members))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteGroup {
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        FiniteGroup::from_table(n, table).unwrap()
    }

    #[test]
    fn cyclic_group_basics() {
        let g = cyclic(6);
        assert!(g.verify_axioms());
        assert!(g.is_abelian() && g.is_cyclic() && g.is_nilpotent());
        assert_eq!(g.element_order(1), 6);
        assert_eq!(g.element_order(3), 2);
        assert_eq!(g.generate(&[2]).members(), &[0, 2, 4]);
        assert_eq!(g.center().order(), 6);
    }

    #[test]
    fn rejects_non_group_tables() {
        // identity not at 0
        assert!(FiniteGroup::from_table(2, vec![1, 0, 0, 1]).is_err());
        // not associative: a latin square that is not a group table
        let bad = vec![
            0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0,
        ];
        assert!(FiniteGroup::from_table(5, bad).is_err());
    }

    #[test]
    fn subgroup_validation() {
        let g = cyclic(4);
        assert!(g.subgroup(vec![0, 2]).is_ok());
        assert!(g.subgroup(vec![0, 1]).is_err());
        assert!(g.subgroup(vec![1, 3]).is_err());
    }

    #[test]
    fn direct_product_projections() {
        let c2 = cyclic(2);
        let c3 = cyclic(3);
        let p = direct_product(&c2, &c3, 48).unwrap();
        assert_eq!(p.group.order(), 6);
        assert!(p.group.is_abelian() && p.group.is_cyclic());
        for g in c2.elements() {
            assert_eq!(p.p1(p.embed_left(g)), g);
            assert_eq!(p.p2(p.embed_left(g)), 0);
        }
        for x in p.group.elements() {
            for y in p.group.elements() {
                let xy = p.group.mul(x, y);
                assert_eq!(p.p1(xy), c2.mul(p.p1(x), p.p1(y)));
                assert_eq!(p.p2(xy), c3.mul(p.p2(x), p.p2(y)));
            }
        }
        let trivial = cyclic(1);
        assert_eq!(direct_product(&trivial, &trivial, 48).unwrap().group.order(), 1);
        assert!(matches!(
            direct_product(&cyclic(7), &cyclic(7), 48),
            Err(Error::OrderCap { order: 49, cap: 48 })
        ));
    }

    #[test]
    fn generator_closure_respects_cap() {
        let r = |a: &usize, b: &usize| (a + b) % 10;
        assert!(matches!(
            FiniteGroup::from_generators(&[1usize], 0, r, 8),
            Err(Error::AboveCap { cap: 8 })
        ));
        let (g, elems) = FiniteGroup::from_generators(&[1usize], 0, r, 10).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(elems[0], 0);
    }
}
