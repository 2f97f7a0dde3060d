use std::sync::Arc;

use rustc_hash::FxHashMap;
use serde::Serialize;

use super::{ExtSpace, ExtensionSpec};
use crate::error::{Error, Result};
use crate::group::{Element, Injection, Perm};
use crate::testspace::{Morphism, MorphismViolation};

pub const FULL_DECOMPOSITION_ORDER: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapKind {
    /// `X(f)(g a) = G(f)(g) f(a)`.
    Induced,
    /// `h X(h⁻¹ ∘ f ∘ g) g⁻¹` for a bijection `f` between tests.
    Transported,
    /// The action of one group element.
    Symmetry,
}

/// An outcome map `X(a) → X(b)` between induced spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedMap {
    pub kind: MapKind,
    pub source: usize,
    pub target: usize,
    pub map: Vec<usize>,
    /// Decompositions or witness pairs that all produced `map`.
    pub agreeing_choices: usize,
}

impl InducedMap {
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.map.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.map.len()
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &InducedMap) -> Result<InducedMap> {
        if first.target != self.source {
            return Err(Error::MorphismMismatch(format!("X({}) then X({})", first.target, self.source)));
        }
        Ok(InducedMap {
            kind: MapKind::Transported,
            source: first.source,
            target: self.target,
            map: first.map.iter().map(|&x| self.map[x]).collect(),
            agreeing_choices: 1,
        })
    }

    pub fn as_morphism(&self, target_outcomes: usize) -> Morphism {
        Morphism::from_fn(target_outcomes, &self.map)
    }
}

/// Pointwise checks of the transported maps on one induced space.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TransportChecks {
    pub size: usize,
    pub maps_built: usize,
    pub identity_failure: Option<String>,
    /// A symmetry `g` whose transported restriction differs from `g`.
    pub symmetry_failure: Option<String>,
    /// A pair `f₁, f₂` whose transported composite differs from the
    /// composite of transports.
    pub composition_failure: Option<String>,
    pub ill_defined: Option<String>,
}

impl TransportChecks {
    pub fn passed(&self) -> bool {
        self.identity_failure.is_none()
            && self.symmetry_failure.is_none()
            && self.composition_failure.is_none()
            && self.ill_defined.is_none()
    }
}

impl ExtensionSpec {
    /// `X(f)`, checked single-valued over decompositions `x = g φ(a)`.
    ///
    /// Every `g ∈ G(A)` and `a ∈ A` is tried when `G(A)` has at most
    /// [`FULL_DECOMPOSITION_ORDER`] elements; past that, each outcome is
    /// decomposed once through every `a ∈ A`.
    pub fn outcome_map(&self, f: &Injection) -> Result<Arc<InducedMap>> {
        if let Some(m) = self.outcome_maps.lock().unwrap().get(f) {
            return Ok(m.clone());
        }
        let (src, dst) = (self.space(f.domain())?, self.space(f.codomain())?);
        let mut map: Vec<Option<usize>> = vec![None; src.space().outcome_count()];
        let mut choices = 0;
        let mut record = |g: &Element, a: usize| -> Result<()> {
            let x = src.act(g, src.phi(a))?;
            let y = dst.act(&self.induce(f, g), dst.phi(f.apply(a)))?;
            choices += 1;
            match map[x] {
                Some(old) if old != y => Err(Error::IllDefined(format!(
                    "X({:?}) sends outcome {x} to both {old} and {y} (via {g:?} and base {a})",
                    f.images()
                ))),
                _ => {
                    map[x] = Some(y);
                    Ok(())
                }
            }
        };
        if src.group().order() <= FULL_DECOMPOSITION_ORDER {
            for g in src.group().elements() {
                for a in 0..f.domain() {
                    record(g, a)?;
                }
            }
        } else {
            let base = src.base_point();
            for a in 0..f.domain() {
                let mut swap: Vec<usize> = (0..f.domain()).collect();
                swap.swap(base, a);
                let tau = self.extension().embed(&Perm::from_images(&swap)?).inverse();
                for r in src.construction().cosets.representatives() {
                    record(&r.mul(&tau), a)?;
                }
            }
        }
        let map: Vec<usize> = map
            .into_iter()
            .enumerate()
            .map(|(x, y)| y.ok_or_else(|| Error::IllDefined(format!("outcome {x} is not reached from the base test"))))
            .collect::<Result<_>>()?;
        let m = Arc::new(InducedMap { kind: MapKind::Induced, source: f.domain(), target: f.codomain(), map, agreeing_choices: choices });
        self.outcome_maps.lock().unwrap().insert(f.clone(), m.clone());
        Ok(m)
    }

    /// Morphism conditions for `X(f)`.
    pub fn outcome_map_violation(&self, f: &Injection) -> Result<Option<MorphismViolation>> {
        let m = self.outcome_map(f)?;
        let (src, dst) = (self.space(f.domain())?, self.space(f.codomain())?);
        m.as_morphism(dst.space().outcome_count()).check(src.space(), dst.space())
    }

    pub fn symmetry_map(&self, n: usize, g: &Element) -> Result<InducedMap> {
        let space = self.space(n)?;
        let map = (0..space.space().outcome_count()).map(|x| space.act(g, x)).collect::<Result<_>>()?;
        Ok(InducedMap { kind: MapKind::Symmetry, source: n, target: n, map, agreeing_choices: 1 })
    }

    fn transport_with(&self, src: &ExtSpace, dst: &ExtSpace, f: &FxHashMap<usize, usize>, g: &Element, h: &Element) -> Result<Vec<usize>> {
        let n = src.size();
        let h_inv = h.inverse();
        let mut k = Vec::with_capacity(n);
        for x in 0..n {
            let q = src.act(g, src.phi(x))?;
            let r = *f.get(&q).ok_or_else(|| Error::WitnessNotFound(format!("carrier does not reach outcome {q}")))?;
            let s = dst.act(&h_inv, r)?;
            k.push(dst.phi_inverse(s).ok_or_else(|| Error::WitnessNotFound(format!("outcome {s} is off the base test")))?);
        }
        let inner = self.outcome_map(&Injection::new(dst.size(), k)?)?;
        let g_inv = g.inverse();
        (0..src.space().outcome_count())
            .map(|x| dst.act(h, inner.apply(src.act(&g_inv, x)?)))
            .collect()
    }

    /// The transported map `h X(h⁻¹ ∘ f ∘ g) g⁻¹` for a bijection `f`
    /// between a test of `𝔊(n)` and a test of `𝔊(n)`, given as pairs.
    ///
    /// The result is recomputed with alternative carriers `g s`, `h t`
    /// (`s`, `t` fixing the base test) and rejected unless all agree.
    pub fn transport(&self, n: usize, f: &[(usize, usize)]) -> Result<InducedMap> {
        if !self.is_regular_at(n)? {
            return Err(Error::NotRegular(format!("{} at size {n}", self.name())));
        }
        let space = self.space(n)?;
        let lookup: FxHashMap<usize, usize> = f.iter().copied().collect();
        let mut from: Vec<usize> = f.iter().map(|p| p.0).collect();
        let mut to: Vec<usize> = f.iter().map(|p| p.1).collect();
        from.sort_unstable();
        to.sort_unstable();
        if lookup.len() != f.len() || to.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::IllDefined("transported map is not a bijection".into()));
        }
        let g = space.carrier_of(&from).ok_or_else(|| Error::WitnessNotFound(format!("{from:?} is not a test")))?;
        let h = space.carrier_of(&to).ok_or_else(|| Error::WitnessNotFound(format!("{to:?} is not a test")))?;
        let map = self.transport_with(&space, &space, &lookup, g, h)?;
        let stab = space.setwise_stabilizer();
        let alternates: Vec<&Element> = stab.iter().filter(|s| !s.is_identity()).take(2).collect();
        let mut gs = vec![g.clone()];
        let mut hs = vec![h.clone()];
        for s in &alternates {
            gs.push(g.mul(s));
            hs.push(h.mul(s));
        }
        let mut agreeing = 0;
        for g2 in &gs {
            for h2 in &hs {
                if self.transport_with(&space, &space, &lookup, g2, h2)? != map {
                    return Err(Error::IllDefined(format!("carriers {g2:?}, {h2:?} give a different map")));
                }
                agreeing += 1;
            }
        }
        Ok(InducedMap { kind: MapKind::Transported, source: n, target: n, map, agreeing_choices: agreeing })
    }

    /// Identity, symmetry compatibility and composition of transported maps
    /// over all tests and bijections of `𝔊(n)`.
    pub fn transport_checks(&self, n: usize) -> Result<TransportChecks> {
        let space = self.space(n)?;
        let tests = space.space().tests().to_vec();
        let perms = Perm::all(n);
        let mut out = TransportChecks { size: n, ..Default::default() };
        let pairs = |a: &[usize], b: &[usize], p: &Perm| -> Vec<(usize, usize)> { (0..n).map(|i| (a[i], b[p.apply(i)])).collect() };

        let base = space.base_test();
        let id = self.transport(n, &pairs(&base, &base, &Perm::identity(n)))?;
        out.maps_built += 1;
        if id.map.iter().enumerate().any(|(x, &y)| x != y) {
            out.identity_failure = Some(format!("{:?}", id.map));
        }

        for g in space.group().elements() {
            let action = self.symmetry_map(n, g)?;
            for t in &tests {
                let f: Vec<(usize, usize)> = t.iter().map(|&x| (x, action.apply(x))).collect();
                match self.transport(n, &f) {
                    Ok(m) => {
                        out.maps_built += 1;
                        if m.map != action.map && out.symmetry_failure.is_none() {
                            out.symmetry_failure = Some(format!("{g:?} on test {t:?}"));
                        }
                    }
                    Err(e) if out.ill_defined.is_none() => out.ill_defined = Some(e.to_string()),
                    Err(_) => {}
                }
            }
        }

        let mut built: FxHashMap<(usize, usize, usize), InducedMap> = FxHashMap::default();
        for (i, a) in tests.iter().enumerate() {
            for (j, b) in tests.iter().enumerate() {
                for (p, perm) in perms.iter().enumerate() {
                    built.insert((i, j, p), self.transport(n, &pairs(a, b, perm))?);
                    out.maps_built += 1;
                }
            }
        }
        'outer: for i in 0..tests.len() {
            for j in 0..tests.len() {
                for (p, first) in perms.iter().enumerate() {
                    for k in 0..tests.len() {
                        for (q, second) in perms.iter().enumerate() {
                            let f1 = &built[&(i, j, p)];
                            let f2 = &built[&(j, k, q)];
                            let composite = second.compose(first);
                            let r = perms.iter().position(|x| *x == composite).expect("closed");
                            if f2.after(f1)?.map != built[&(i, k, r)].map {
                                out.composition_failure = Some(format!("tests {i} → {j} → {k} with {first:?}, {second:?}"));
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_inclusions() {
        let spec = ExtensionSpec::graph();
        let id = spec.outcome_map(&Injection::identity(2)).unwrap();
        assert_eq!(id.map, vec![0, 1, 2, 3]);
        let inc = spec.outcome_map(&Injection::inclusion(&[0, 1], 3).unwrap()).unwrap();
        assert_eq!(inc.target, 3);
        assert!(inc.is_injective());
        assert_eq!(spec.outcome_map_violation(&Injection::inclusion(&[0, 1], 3).unwrap()).unwrap(), None);
        let t = ExtensionSpec::trivial();
        let f = Injection::new(3, vec![2, 0]).unwrap();
        assert_eq!(t.outcome_map(&f).unwrap().map, vec![2, 0]);
    }

    #[test]
    fn transported_swap_is_a_symmetry() {
        let spec = ExtensionSpec::graph();
        let space = spec.space(2).unwrap();
        let base = space.base_test();
        let other = space.space().tests().iter().find(|t| **t != base).unwrap().clone();
        let m = spec.transport(2, &[(base[0], other[0]), (base[1], other[1])]).unwrap();
        assert!(m.agreeing_choices >= 2);
        let g = space.group().elements().iter().find(|g| spec.symmetry_map(2, g).unwrap().map == m.map);
        assert!(g.is_some());
    }

    #[test]
    fn transport_laws() {
        for spec in [ExtensionSpec::graph(), ExtensionSpec::trivial()] {
            for n in 1..=3 {
                let c = spec.transport_checks(n).unwrap();
                assert!(c.passed(), "{c:?}");
            }
        }
        assert!(matches!(ExtensionSpec::grid().transport(2, &[(0, 0), (1, 1)]), Err(Error::NotRegular(_))));
    }
}
