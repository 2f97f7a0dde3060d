use super::{Events, TestSpace};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A set-valued outcome map `X → 𝓔(target)`, extended to events by union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    target_size: usize,
    images: Vec<BitSet>,
}

/// Which morphism condition failed, on which events.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismViolation {
    /// `φ(A)` is not an event.
    NotAnEvent { a: BitSet },
    /// `A ⊥ B` but `φ(A) ⊥ φ(B)` fails.
    Orthogonality { a: BitSet, b: BitSet },
    /// `A ∼ B` but `φ(A) ∼ φ(B)` fails.
    Perspectivity { a: BitSet, b: BitSet },
}

impl MorphismViolation {
    pub fn condition(&self) -> u8 {
        match self {
            MorphismViolation::NotAnEvent { .. } => 1,
            MorphismViolation::Orthogonality { .. } => 2,
            MorphismViolation::Perspectivity { .. } => 3,
        }
    }
}

impl Morphism {
    pub fn new(target_size: usize, images: Vec<BitSet>) -> Self {
        Morphism { target_size, images }
    }

    /// The point map `x ↦ {f(x)}`.
    pub fn from_fn(target_size: usize, map: &[usize]) -> Self {
        let images = map.iter().map(|&y| BitSet::from_indices(target_size, [y])).collect();
        Morphism { target_size, images }
    }

    pub fn identity(n: usize) -> Self {
        Morphism::from_fn(n, &(0..n).collect::<Vec<_>>())
    }

    pub fn source_size(&self) -> usize {
        self.images.len()
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    pub fn images(&self) -> &[BitSet] {
        &self.images
    }

    /// The underlying function when every image is a singleton.
    pub fn point_form(&self) -> Option<Vec<usize>> {
        self.images
            .iter()
            .map(|s| (s.len() == 1).then(|| s.iter().next().expect("non-empty")))
            .collect()
    }

    pub fn image(&self, a: &BitSet) -> BitSet {
        a.iter().fold(BitSet::new(self.target_size), |acc, x| acc.union(&self.images[x]))
    }

    /// `self ∘ first`: `x ↦ ⋃_{y ∈ first(x)} self(y)`.
    pub fn after(&self, first: &Morphism) -> Result<Morphism> {
        if first.target_size != self.source_size() {
            return Err(Error::MorphismMismatch(format!(
                "inner map lands in {} outcomes, outer map starts from {}",
                first.target_size,
                self.source_size()
            )));
        }
        Ok(Morphism {
            target_size: self.target_size,
            images: first.images.iter().map(|s| self.image(s)).collect(),
        })
    }

    /// First violation of the three morphism conditions, scanning events in
    /// canonical order.
    pub fn check(&self, source: &TestSpace, target: &TestSpace) -> Result<Option<MorphismViolation>> {
        let (sev, tev) = (source.events()?, target.events()?);
        self.check_with(source, target, &sev, &tev)
    }

    pub fn check_with(
        &self,
        source: &TestSpace,
        target: &TestSpace,
        sev: &Events,
        tev: &Events,
    ) -> Result<Option<MorphismViolation>> {
        if self.source_size() != source.outcome_count() || self.target_size != target.outcome_count() {
            return Err(Error::MorphismMismatch("outcome counts differ from the spaces".into()));
        }
        let images: Vec<BitSet> = sev.sets().iter().map(|a| self.image(a)).collect();
        let target_index: Vec<Option<usize>> = images.iter().map(|s| tev.index_of(s)).collect();
        if let Some(i) = target_index.iter().position(|t| t.is_none()) {
            return Ok(Some(MorphismViolation::NotAnEvent { a: sev.get(i).clone() }));
        }
        for u in sev.sets() {
            for a in u.subsets() {
                let b = u.difference(&a);
                let ia = sev.index_of(&a).expect("event");
                let ib = sev.index_of(&b).expect("event");
                if !tev.orthogonal(&images[ia], &images[ib]) {
                    return Ok(Some(MorphismViolation::Orthogonality { a, b }));
                }
            }
        }
        for c in 0..sev.len() {
            let members = sev.complements(c);
            for (k, &a) in members.iter().enumerate() {
                for &b in &members[k + 1..] {
                    let (ta, tb) = (target_index[a as usize].unwrap(), target_index[b as usize].unwrap());
                    if !tev.perspective(ta, tb) {
                        return Ok(Some(MorphismViolation::Perspectivity {
                            a: sev.get(a as usize).clone(),
                            b: sev.get(b as usize).clone(),
                        }));
                    }
                }
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testspace::{classical, grid, letters};

    #[test]
    fn identity_passes() {
        let g = grid(&letters(3)).unwrap();
        assert_eq!(Morphism::identity(9).check(&g, &g).unwrap(), None);
    }

    #[test]
    fn set_valued_refinement_passes() {
        let a = classical(&letters(2)).unwrap();
        let b = classical(&["u".into(), "v".into(), "w".into()]).unwrap();
        let m = Morphism::new(3, vec![b.set_of([0]), b.set_of([1, 2])]);
        assert_eq!(m.check(&a, &b).unwrap(), None);
        assert_eq!(m.point_form(), None);
        let id = Morphism::identity(3);
        assert_eq!(id.after(&m).unwrap(), m);
        assert_eq!(id.after(&m).unwrap().check(&a, &b).unwrap(), None);
    }

    #[test]
    fn collapsing_a_row_breaks_orthogonality() {
        let g = grid(&letters(2)).unwrap();
        // each row collapses to its first outcome, so columns land on column a
        let m = Morphism::from_fn(4, &[0, 0, 2, 2]);
        let v = m.check(&g, &g).unwrap().unwrap();
        assert_eq!(v.condition(), 2);
        let MorphismViolation::Orthogonality { a, b } = v else { unreachable!() };
        assert!(!m.image(&a).is_disjoint(&m.image(&b)));
    }

    #[test]
    fn point_maps_compose_as_functions() {
        let f = Morphism::from_fn(3, &[2, 0, 1]);
        let g = Morphism::from_fn(3, &[1, 1, 0]);
        assert_eq!(g.after(&f).unwrap().point_form(), Some(vec![0, 1, 1]));
        assert!(g.after(&Morphism::identity(2)).is_err());
    }
}
