//! Finite groups given by generators.
//!
//! Groups are enumerated by breadth-first closure and stored with their
//! elements sorted by normal form, so every index-based output is stable
//! across runs.

mod cosets;
mod element;
mod hom;
mod orbit;
mod perm;

use std::collections::VecDeque;

use rustc_hash::FxHashMap;

pub use cosets::CosetSpace;
pub use element::{Element, Family};
pub use hom::GroupHom;
pub use orbit::{orbit, Orbit};
pub use perm::{Injection, Perm};

use crate::error::{Error, Result};

/// An enumerated finite group.
#[derive(Clone)]
pub struct FiniteGroup {
    identity: Element,
    generators: Vec<Element>,
    elements: Vec<Element>,
    index: FxHashMap<Element, u32>,
}

impl FiniteGroup {
    /// Breadth-first closure of `generators` under multiplication.
    ///
    /// `identity` fixes the normal-form family when `generators` is empty.
    pub fn closure(identity: Element, generators: Vec<Element>, cap: usize) -> Result<Self> {
        if !identity.is_identity() {
            return Err(Error::NotASubgroup(format!("{identity:?} is not an identity")));
        }
        for g in &generators {
            if g.family() != identity.family() || g.rank() != identity.rank() {
                return Err(Error::MixedFamilies);
            }
        }
        let mut seen: FxHashMap<Element, u32> = FxHashMap::default();
        seen.insert(identity.clone(), 0);
        let mut found = vec![identity.clone()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in &generators {
                let h = found[i].mul(s);
                if !seen.contains_key(&h) {
                    if found.len() >= cap {
                        return Err(Error::cap("group order", cap));
                    }
                    seen.insert(h.clone(), found.len() as u32);
                    queue.push_back(found.len());
                    found.push(h);
                }
            }
        }
        Ok(Self::from_sorted(identity, generators, found))
    }

    fn from_sorted(identity: Element, generators: Vec<Element>, mut elements: Vec<Element>) -> Self {
        elements.sort_unstable();
        let index = elements.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
        FiniteGroup { identity, generators, elements, index }
    }

    /// The symmetric group on `0..n` as plain permutations.
    pub fn symmetric(n: usize) -> Result<Self> {
        let gens = Perm::symmetric_generators(n).into_iter().map(Element::Sym).collect();
        FiniteGroup::closure(Element::Sym(Perm::identity(n)), gens, Self::default_cap())
    }

    pub(crate) fn default_cap() -> usize {
        crate::Limits::current().max_group
    }

    /// The subgroup formed by `members`, which must be closed under
    /// multiplication. A small generating set is chosen greedily in
    /// normal-form order.
    pub fn subgroup(&self, members: impl IntoIterator<Item = Element>) -> Result<FiniteGroup> {
        let mut members: Vec<Element> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        for m in &members {
            if !self.contains(m) {
                return Err(Error::NotASubgroup(format!("{m:?} is not in the group")));
            }
        }
        let mut generators = Vec::new();
        let mut span = FiniteGroup::closure(self.identity.clone(), Vec::new(), usize::MAX)?;
        for m in &members {
            if !span.contains(m) {
                generators.push(m.clone());
                span = FiniteGroup::closure(self.identity.clone(), generators.clone(), members.len() + 1)
                    .map_err(|_| Error::NotASubgroup("element set is not closed".into()))?;
            }
        }
        if span.order() != members.len() {
            return Err(Error::NotASubgroup("element set is not closed under multiplication".into()));
        }
        Ok(span)
    }

    /// Subgroup of elements satisfying `pred`.
    pub fn filter(&self, pred: impl Fn(&Element) -> bool) -> Result<FiniteGroup> {
        self.subgroup(self.elements.iter().filter(|g| pred(g)).cloned())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> &Element {
        &self.identity
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// Elements in normal-form order.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn index_of(&self, g: &Element) -> Option<usize> {
        self.index.get(g).map(|&i| i as usize)
    }

    pub fn contains(&self, g: &Element) -> bool {
        self.index.contains_key(g)
    }

    pub fn is_subgroup_of(&self, other: &FiniteGroup) -> bool {
        self.elements.iter().all(|g| other.contains(g))
    }

    /// Elements common to both groups, in order.
    pub fn intersection(&self, other: &FiniteGroup) -> Vec<Element> {
        self.elements.iter().filter(|g| other.contains(g)).cloned().collect()
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// `gh = hg`.
pub fn centralizes(g: &Element, h: &Element) -> bool {
    g.commutes_with(h)
}

/// A left action of group elements on `0..degree`.
pub trait Action {
    fn degree(&self) -> usize;
    fn act(&self, g: &Element, x: usize) -> Result<usize>;
}

/// Elements acting on their own carrier (`n` points or `n × n` pairs).
#[derive(Clone, Copy, Debug)]
pub struct NaturalAction {
    pub degree: usize,
}

impl Action for NaturalAction {
    fn degree(&self) -> usize {
        self.degree
    }

    fn act(&self, g: &Element, x: usize) -> Result<usize> {
        if g.natural_degree() != self.degree || x >= self.degree {
            return Err(Error::ActionUndefined(format!("{g:?} on point {x} of {}", self.degree)));
        }
        Ok(g.apply(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph_generators(n: usize) -> Vec<Element> {
        let id = Perm::identity(n);
        let mut gens = Vec::new();
        for s in Perm::symmetric_generators(n) {
            gens.push(Element::Pair(s.clone(), id.clone()));
            gens.push(Element::Pair(id.clone(), s));
        }
        gens
    }

    fn grid_generators(n: usize) -> Vec<Element> {
        let id = Perm::identity(n);
        let mut gens: Vec<Element> = graph_generators(n)
            .into_iter()
            .map(|g| match g {
                Element::Pair(a, b) => Element::Grid(a, b, false),
                _ => unreachable!(),
            })
            .collect();
        gens.push(Element::Grid(id.clone(), id, true));
        gens
    }

    #[test]
    fn single_involution_has_order_two() {
        let g = FiniteGroup::closure(
            Element::Sym(Perm::identity(2)),
            vec![Element::Sym(Perm::transposition(2, 0, 1))],
            10,
        )
        .unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn extension_group_orders() {
        let id = Perm::identity(3);
        let graph = FiniteGroup::closure(Element::Pair(id.clone(), id.clone()), graph_generators(3), 1000).unwrap();
        assert_eq!(graph.order(), 36);
        let grid = FiniteGroup::closure(Element::Grid(id.clone(), id, false), grid_generators(3), 1000).unwrap();
        assert_eq!(grid.order(), 72);
    }

    #[test]
    fn closure_reports_cap() {
        let id = Perm::identity(3);
        let err = FiniteGroup::closure(Element::Grid(id.clone(), id, false), grid_generators(3), 50).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }

    #[test]
    fn mixed_families_are_rejected() {
        let err = FiniteGroup::closure(
            Element::Sym(Perm::identity(2)),
            vec![Element::Pair(Perm::identity(2), Perm::identity(2))],
            10,
        )
        .unwrap_err();
        assert_eq!(err, Error::MixedFamilies);
    }

    #[test]
    fn closure_is_a_group() {
        let id = Perm::identity(3);
        let grid = FiniteGroup::closure(Element::Grid(id.clone(), id, false), grid_generators(3), 1000).unwrap();
        assert!(grid.elements().windows(2).all(|w| w[0] < w[1]));
        for g in grid.elements() {
            assert!(grid.contains(&g.inverse()));
            assert!(g.inverse().mul(g).is_identity());
        }
        for g in grid.elements().iter().step_by(3) {
            for h in grid.elements().iter().step_by(5) {
                assert!(grid.contains(&g.mul(h)));
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        let n = 3;
        let id = Perm::identity(n);
        let s = Perm::transposition(n, 0, 1);
        let e = Element::Pair(id.clone(), id.clone());
        let left = Element::Pair(s.clone(), id.clone());
        let right = Element::Pair(id.clone(), s.clone());
        assert!(centralizes(&e, &left));
        assert!(centralizes(&left, &right));
        let t = Element::Grid(id.clone(), id.clone(), true);
        let g = Element::Grid(s.clone(), id.clone(), false);
        assert!(!centralizes(&t, &g));
        assert_eq!(t.mul(&g).mul(&t), Element::Grid(id, s, false));
    }

    #[test]
    fn subgroup_from_members() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let stab = s3.filter(|g| g.apply(0) == 0).unwrap();
        assert_eq!(stab.order(), 2);
        let bad = s3.subgroup([Element::Sym(Perm::cycle(3))]);
        assert!(bad.is_err());
    }
}
