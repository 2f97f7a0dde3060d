use std::sync::Arc;

use super::{Action, Element, FiniteGroup};
use crate::error::{Error, Result};

/// Left cosets `gK` of a subgroup, with the group acting by left multiplication.
///
/// Each coset is represented by its least element in normal-form order, and
/// cosets are numbered in the order of their representatives.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    group: Arc<FiniteGroup>,
    subgroup: Arc<FiniteGroup>,
    reps: Vec<Element>,
    coset_of: Vec<u32>,
    generator_table: Vec<Vec<u32>>,
}

impl CosetSpace {
    pub fn new(group: Arc<FiniteGroup>, subgroup: Arc<FiniteGroup>) -> Result<Self> {
        if !subgroup.is_subgroup_of(&group) {
            return Err(Error::NotASubgroup("coset subgroup is not contained in the group".into()));
        }
        let unassigned = u32::MAX;
        let mut coset_of = vec![unassigned; group.order()];
        let mut reps = Vec::new();
        for (i, g) in group.elements().iter().enumerate() {
            if coset_of[i] != unassigned {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(g.clone());
            for k in subgroup.elements() {
                let j = group.index_of(&g.mul(k)).expect("subgroup is contained in the group");
                coset_of[j] = c;
            }
        }
        let mut space = CosetSpace {
            group,
            subgroup,
            reps,
            coset_of,
            generator_table: Vec::new(),
        };
        space.generator_table = space
            .group
            .generators()
            .iter()
            .map(|s| (0..space.len()).map(|p| space.act(s, p).unwrap() as u32).collect())
            .collect();
        Ok(space)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn subgroup(&self) -> &Arc<FiniteGroup> {
        &self.subgroup
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn representatives(&self) -> &[Element] {
        &self.reps
    }

    /// Index of the coset `gK`.
    pub fn coset_of(&self, g: &Element) -> Option<usize> {
        self.group.index_of(g).map(|i| self.coset_of[i] as usize)
    }

    /// Action of the `i`-th group generator as a point table.
    pub fn generator_table(&self) -> &[Vec<u32>] {
        &self.generator_table
    }

    /// Members of coset `p`, in order.
    pub fn members(&self, p: usize) -> Vec<Element> {
        self.group
            .elements()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.coset_of[*i] as usize == p)
            .map(|(_, g)| g.clone())
            .collect()
    }
}

impl Action for CosetSpace {
    fn degree(&self) -> usize {
        self.len()
    }

    fn act(&self, g: &Element, p: usize) -> Result<usize> {
        let rep = self
            .reps
            .get(p)
            .ok_or_else(|| Error::ActionUndefined(format!("no coset {p}")))?;
        let moved = g
            .checked_mul(rep)
            .ok_or_else(|| Error::ActionUndefined(format!("{g:?} is from another family")))?;
        self.coset_of(&moved)
            .ok_or_else(|| Error::ActionUndefined(format!("{g:?} is not in the group")))
    }
}
