use std::collections::VecDeque;
use std::sync::Arc;

use super::{Element, FiniteGroup};
use crate::error::{Error, Result};

/// A homomorphism determined by the images of the domain's generators.
#[derive(Clone, Debug)]
pub struct GroupHom {
    domain: Arc<FiniteGroup>,
    codomain: Arc<FiniteGroup>,
    images: Vec<Element>,
    injective: bool,
}

impl GroupHom {
    /// Extend generator images multiplicatively over the whole domain.
    ///
    /// The extension walks the Cayley graph of the domain; if two words for
    /// the same element produce different images the map is rejected with
    /// [`Error::NotWellDefined`].
    pub fn extend(
        domain: Arc<FiniteGroup>,
        codomain: Arc<FiniteGroup>,
        generator_images: &[Element],
    ) -> Result<Self> {
        if generator_images.len() != domain.generators().len() {
            return Err(Error::DimensionMismatch {
                expected: domain.generators().len(),
                found: generator_images.len(),
            });
        }
        for img in generator_images {
            if !codomain.contains(img) {
                return Err(Error::NotWellDefined(format!("generator image {img:?} is outside the codomain")));
            }
        }
        let mut images: Vec<Option<Element>> = vec![None; domain.order()];
        let root = domain.index_of(domain.identity()).expect("identity is an element");
        images[root] = Some(codomain.identity().clone());
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let g = &domain.elements()[i];
            let gi = images[i].clone().expect("visited");
            for (s, si) in domain.generators().iter().zip(generator_images) {
                let j = domain.index_of(&g.mul(s)).expect("closed");
                let candidate = gi.mul(si);
                match &images[j] {
                    Some(existing) if *existing != candidate => {
                        return Err(Error::NotWellDefined(format!(
                            "{:?} maps to both {existing:?} and {candidate:?}",
                            domain.elements()[j]
                        )));
                    }
                    Some(_) => {}
                    None => {
                        images[j] = Some(candidate);
                        queue.push_back(j);
                    }
                }
            }
        }
        let images: Vec<Element> = images.into_iter().map(|x| x.expect("generators reach every element")).collect();
        let identity = codomain.identity();
        let trivial_kernel = images.iter().filter(|x| *x == identity).count() == 1;
        Ok(GroupHom {
            domain,
            codomain,
            images,
            injective: trivial_kernel,
        })
    }

    /// The hom given elementwise by `f`, verified to be multiplicative on
    /// generators and single-valued via [`GroupHom::extend`].
    pub fn from_fn(
        domain: Arc<FiniteGroup>,
        codomain: Arc<FiniteGroup>,
        f: impl Fn(&Element) -> Element,
    ) -> Result<Self> {
        let gens: Vec<Element> = domain.generators().iter().map(&f).collect();
        GroupHom::extend(domain, codomain, &gens)
    }

    pub fn domain(&self) -> &Arc<FiniteGroup> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteGroup> {
        &self.codomain
    }

    pub fn is_injective(&self) -> bool {
        self.injective
    }

    pub fn require_injective(self) -> Result<Self> {
        if self.injective {
            Ok(self)
        } else {
            Err(Error::NotInjective(format!("kernel of a map from a group of order {} is nontrivial", self.domain.order())))
        }
    }

    pub fn apply(&self, g: &Element) -> Option<&Element> {
        self.domain.index_of(g).map(|i| &self.images[i])
    }

    /// Images of the domain elements, in domain order.
    pub fn images(&self) -> &[Element] {
        &self.images
    }

    /// The image subgroup.
    pub fn image(&self) -> Result<FiniteGroup> {
        self.codomain.subgroup(self.images.iter().cloned())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Perm;

    #[test]
    fn identity_is_injective() {
        let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let gens = s3.generators().to_vec();
        let id = GroupHom::extend(s3.clone(), s3.clone(), &gens).unwrap();
        assert!(id.is_injective());
        for g in s3.elements() {
            assert_eq!(id.apply(g), Some(g));
        }
    }

    #[test]
    fn trivial_map_is_not_injective() {
        let s2 = Arc::new(FiniteGroup::symmetric(2).unwrap());
        let e = s2.identity().clone();
        let hom = GroupHom::extend(s2.clone(), s2.clone(), &[e]).unwrap();
        assert!(!hom.is_injective());
        assert!(matches!(hom.require_injective(), Err(Error::NotInjective(_))));
    }

    #[test]
    fn diagonal_embedding_is_injective() {
        let s2 = Arc::new(FiniteGroup::symmetric(2).unwrap());
        let id = Perm::identity(2);
        let s = Perm::transposition(2, 0, 1);
        let pairs = Arc::new(
            FiniteGroup::closure(
                Element::Pair(id.clone(), id.clone()),
                vec![Element::Pair(s.clone(), id.clone()), Element::Pair(id.clone(), s.clone())],
                10,
            )
            .unwrap(),
        );
        let hom = GroupHom::extend(s2, pairs, &[Element::Pair(s.clone(), s)]).unwrap();
        assert!(hom.is_injective());
    }

    #[test]
    fn relation_breaking_map_is_rejected() {
        // S3 -> S3 sending the transposition to the 3-cycle violates s² = 1.
        let s3 = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let c = Element::Sym(Perm::cycle(3));
        let err = GroupHom::extend(s3.clone(), s3, &[c.clone(), c]).unwrap_err();
        assert!(matches!(err, Error::NotWellDefined(_)));
    }
}
