//! Extensions `A ↦ G(A)` of the symmetric-group functor on finite sets and
//! injections, and the fully symmetric test spaces they induce.
//!
//! Finite sets are `0..n`; an injection `f: 0..a → 0..b` induces
//! `G(f): G(a) → G(b)`, and the embedding `j_n: S(n) → G(n)` places the
//! symmetric group inside.

mod laws;
mod maps;
mod pathology;
mod tensor;

use std::sync::{Arc, Mutex, OnceLock};

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::group::{Action, Element, FiniteGroup, GroupHom, Injection, Perm};
use crate::limits::Limits;
use crate::symmetry::{basic_construction, find_isomorphism, Construction};
use crate::testspace::{letters, TestSpace};

pub use laws::{EXHAUSTIVE_REGULARITY_ORDER, LawCheck, LawReport, Orientation, Reasonableness, Regularity};
pub use maps::{InducedMap, MapKind, TransportChecks};
pub use pathology::{pathology_witnesses, Pathologies};
pub use tensor::{Bifunctoriality, LambdaCheck, StructureItem, TensorSpace};

/// A functor `G` extending `S`, given structurally.
pub trait Extension: Send + Sync {
    fn name(&self) -> &'static str;
    fn identity(&self, n: usize) -> Element;
    fn generators(&self, n: usize) -> Vec<Element>;
    /// `j_n(σ)`.
    fn embed(&self, sigma: &Perm) -> Element;
    /// `G(f)(g)`.
    fn induce(&self, f: &Injection, g: &Element) -> Element;
    /// Point of a natural carrier reached from the base point by `g`.
    fn natural_point(&self, _n: usize, _base: usize, _g: &Element) -> Option<usize> {
        None
    }
    fn natural_label(&self, _labels: &[String], point: usize) -> String {
        format!("c{point}")
    }
}

/// `G = S`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Trivial;

/// `G(A) = (S(A) × S(A)) ⋊ ⟨T⟩` on `A × A`, `j(σ) = (σ, id)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct GridExtension;

/// `G(A) = S(A) × S(A)`, `j(σ) = (σ, σ)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct GraphExtension;

fn sym_perm(g: &Element) -> &Perm {
    match g {
        Element::Sym(p) => p,
        other => panic!("{other:?} is not a plain permutation"),
    }
}

fn pair_label(labels: &[String], point: usize) -> String {
    let n = labels.len();
    format!("({},{})", labels[point / n], labels[point % n])
}

impl Extension for Trivial {
    fn name(&self) -> &'static str {
        "trivial"
    }

    fn identity(&self, n: usize) -> Element {
        Element::Sym(Perm::identity(n))
    }

    fn generators(&self, n: usize) -> Vec<Element> {
        Perm::symmetric_generators(n).into_iter().map(Element::Sym).collect()
    }

    fn embed(&self, sigma: &Perm) -> Element {
        Element::Sym(sigma.clone())
    }

    fn induce(&self, f: &Injection, g: &Element) -> Element {
        Element::Sym(f.lift(sym_perm(g)))
    }

    fn natural_point(&self, _n: usize, base: usize, g: &Element) -> Option<usize> {
        Some(g.apply(base))
    }

    fn natural_label(&self, labels: &[String], point: usize) -> String {
        labels[point].clone()
    }
}

impl Extension for GridExtension {
    fn name(&self) -> &'static str {
        "grid"
    }

    fn identity(&self, n: usize) -> Element {
        Element::Grid(Perm::identity(n), Perm::identity(n), false)
    }

    fn generators(&self, n: usize) -> Vec<Element> {
        let id = Perm::identity(n);
        let mut gens = Vec::new();
        for s in Perm::symmetric_generators(n) {
            gens.push(Element::Grid(s.clone(), id.clone(), false));
            gens.push(Element::Grid(id.clone(), s, false));
        }
        gens.push(Element::Grid(id.clone(), id, true));
        gens
    }

    fn embed(&self, sigma: &Perm) -> Element {
        Element::Grid(sigma.clone(), Perm::identity(sigma.degree()), false)
    }

    fn induce(&self, f: &Injection, g: &Element) -> Element {
        match g {
            Element::Grid(a, b, k) => Element::Grid(f.lift(a), f.lift(b), *k),
            other => panic!("{other:?} is not a grid element"),
        }
    }

    fn natural_point(&self, n: usize, base: usize, g: &Element) -> Option<usize> {
        Some(g.apply(base * n + base))
    }

    fn natural_label(&self, labels: &[String], point: usize) -> String {
        pair_label(labels, point)
    }
}

impl Extension for GraphExtension {
    fn name(&self) -> &'static str {
        "graph"
    }

    fn identity(&self, n: usize) -> Element {
        Element::Pair(Perm::identity(n), Perm::identity(n))
    }

    fn generators(&self, n: usize) -> Vec<Element> {
        let id = Perm::identity(n);
        let mut gens = Vec::new();
        for s in Perm::symmetric_generators(n) {
            gens.push(Element::Pair(s.clone(), id.clone()));
            gens.push(Element::Pair(id.clone(), s));
        }
        gens
    }

    fn embed(&self, sigma: &Perm) -> Element {
        Element::Pair(sigma.clone(), sigma.clone())
    }

    fn induce(&self, f: &Injection, g: &Element) -> Element {
        match g {
            Element::Pair(a, b) => Element::Pair(f.lift(a), f.lift(b)),
            other => panic!("{other:?} is not a pair element"),
        }
    }

    fn natural_point(&self, n: usize, base: usize, g: &Element) -> Option<usize> {
        Some(g.apply(base * n + base))
    }

    fn natural_label(&self, labels: &[String], point: usize) -> String {
        pair_label(labels, point)
    }
}

/// The space `𝔊(n)` built on `X(n) = G(n)/G(n ∖ base)`.
#[derive(Debug)]
pub struct ExtSpace {
    n: usize,
    construction: Construction,
    phi_inverse: FxHashMap<usize, usize>,
    natural: Option<Vec<usize>>,
    stabilizer: OnceLock<Vec<Element>>,
}

impl ExtSpace {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn space(&self) -> &TestSpace {
        &self.construction.space
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.construction.group()
    }

    pub fn base_point(&self) -> usize {
        self.construction.base_point
    }

    /// `φ(x)` for `x ∈ 0..n`.
    pub fn phi(&self, x: usize) -> usize {
        self.construction.phi[x]
    }

    pub fn phi_inverse(&self, p: usize) -> Option<usize> {
        self.phi_inverse.get(&p).copied()
    }

    pub fn base_test(&self) -> Vec<usize> {
        self.construction.base_test()
    }

    pub fn act(&self, g: &Element, p: usize) -> Result<usize> {
        self.construction.cosets.act(g, p)
    }

    pub fn act_on_set(&self, g: &Element, set: &[usize]) -> Result<Vec<usize>> {
        crate::symmetry::act_on_set(&self.construction.cosets, g, set)
    }

    /// An element carrying the base test onto `test` (sorted points).
    pub fn carrier_of(&self, test: &[usize]) -> Option<&Element> {
        self.construction.witness_of(test)
    }

    /// Natural-carrier point of each outcome, when the extension has one.
    pub fn natural_points(&self) -> Option<&[usize]> {
        self.natural.as_deref()
    }

    pub fn outcome_of_natural(&self, point: usize) -> Option<usize> {
        self.natural.as_ref()?.iter().position(|&q| q == point)
    }

    /// Elements fixing the base test setwise.
    pub fn setwise_stabilizer(&self) -> &[Element] {
        self.stabilizer.get_or_init(|| {
            let base = self.base_test();
            self.group()
                .elements()
                .iter()
                .filter(|g| self.act_on_set(g, &base).map(|s| s == base).unwrap_or(false))
                .cloned()
                .collect()
        })
    }

    /// The permutation `x ↦ φ⁻¹(σ φ(x))` of `0..n` for `σ` fixing the base test.
    pub fn restriction_to_base(&self, sigma: &Element) -> Result<Option<Perm>> {
        let mut images = Vec::with_capacity(self.n);
        for x in 0..self.n {
            match self.phi_inverse(self.act(sigma, self.phi(x))?) {
                Some(y) => images.push(y),
                None => return Ok(None),
            }
        }
        Perm::from_images(&images).map(Some)
    }
}

/// An extension with cached groups, spaces and induced outcome maps.
pub struct ExtensionSpec {
    ext: Box<dyn Extension>,
    groups: Mutex<FxHashMap<usize, Arc<FiniteGroup>>>,
    spaces: Mutex<FxHashMap<usize, Arc<ExtSpace>>>,
    outcome_maps: Mutex<FxHashMap<Injection, Arc<InducedMap>>>,
    regular: Mutex<FxHashMap<usize, bool>>,
}

impl std::fmt::Debug for ExtensionSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ExtensionSpec({})", self.ext.name())
    }
}

impl ExtensionSpec {
    pub fn new(ext: impl Extension + 'static) -> Self {
        ExtensionSpec {
            ext: Box::new(ext),
            groups: Mutex::default(),
            spaces: Mutex::default(),
            outcome_maps: Mutex::default(),
            regular: Mutex::default(),
        }
    }

    pub fn trivial() -> Self {
        ExtensionSpec::new(Trivial)
    }

    pub fn grid() -> Self {
        ExtensionSpec::new(GridExtension)
    }

    pub fn graph() -> Self {
        ExtensionSpec::new(GraphExtension)
    }

    /// `trivial`, `grid` or `graph`.
    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "trivial" => Ok(ExtensionSpec::trivial()),
            "grid" => Ok(ExtensionSpec::grid()),
            "graph" => Ok(ExtensionSpec::graph()),
            other => Err(Error::Parse(format!("unknown extension '{other}'"))),
        }
    }

    pub fn name(&self) -> &'static str {
        self.ext.name()
    }

    pub fn extension(&self) -> &dyn Extension {
        self.ext.as_ref()
    }

    pub fn induce(&self, f: &Injection, g: &Element) -> Element {
        self.ext.induce(f, g)
    }

    pub fn group(&self, n: usize) -> Result<Arc<FiniteGroup>> {
        if let Some(g) = self.groups.lock().unwrap().get(&n) {
            return Ok(g.clone());
        }
        let g = Arc::new(FiniteGroup::closure(self.ext.identity(n), self.ext.generators(n), Limits::current().max_group)?);
        self.groups.lock().unwrap().insert(n, g.clone());
        Ok(g)
    }

    pub fn symmetric(&self, n: usize) -> Result<Arc<FiniteGroup>> {
        Ok(Arc::new(FiniteGroup::symmetric(n)?))
    }

    /// `j_n` as a verified homomorphism.
    pub fn embedding(&self, n: usize) -> Result<GroupHom> {
        let sym = self.symmetric(n)?;
        let images: Vec<Element> = sym.generators().iter().map(|s| self.ext.embed(sym_perm(s))).collect();
        GroupHom::extend(sym, self.group(n)?, &images)
    }

    /// `G(f)` as a verified homomorphism.
    pub fn induced_hom(&self, f: &Injection) -> Result<GroupHom> {
        let domain = self.group(f.domain())?;
        let images: Vec<Element> = domain.generators().iter().map(|g| self.ext.induce(f, g)).collect();
        GroupHom::extend(domain, self.group(f.codomain())?, &images)
    }

    /// `K(n, base) = G(f)(G(n ∖ base))` for the inclusion `f`.
    pub fn base_stabilizer(&self, n: usize, base: usize) -> Result<Arc<FiniteGroup>> {
        let members: Vec<usize> = (0..n).filter(|&x| x != base).collect();
        let f = Injection::inclusion(&members, n)?;
        let gens: Vec<Element> = self.ext.generators(n - 1).iter().map(|g| self.ext.induce(&f, g)).collect();
        let k = FiniteGroup::closure(self.ext.identity(n), gens, Limits::current().max_group)?;
        if !k.is_subgroup_of(&*self.group(n)?) {
            return Err(Error::NotASubgroup(format!("G({}) does not land in G({n})", n - 1)));
        }
        Ok(Arc::new(k))
    }

    /// The construction `(G(n), j(S(n)), K(n, base))` with coset labels.
    pub fn construction(&self, n: usize, base: usize) -> Result<Construction> {
        if n == 0 {
            return Err(Error::EmptySet);
        }
        if base >= n {
            return Err(Error::InvalidSpace(format!("base point {base} is outside 0..{n}")));
        }
        basic_construction(self.embedding(n)?, self.base_stabilizer(n, base)?, base, &letters(n))
    }

    fn build(&self, n: usize, base: usize) -> Result<ExtSpace> {
        let labels = letters(n);
        let mut construction = self.construction(n, base)?;
        let natural: Option<Vec<usize>> = construction
            .cosets
            .representatives()
            .iter()
            .map(|g| self.ext.natural_point(n, base, g))
            .collect();
        let natural = natural.filter(|pts| {
            let mut sorted = pts.clone();
            sorted.sort_unstable();
            sorted.dedup();
            sorted.len() == pts.len()
        });
        if let Some(pts) = &natural {
            let names = pts.iter().map(|&q| self.ext.natural_label(&labels, q)).collect();
            let identity: Vec<usize> = (0..pts.len()).collect();
            construction.space = construction.space.relabeled(&identity, names)?;
        }
        construction.space = construction.space.with_name(format!("{}({n})", self.name()));
        let phi_inverse = construction.phi.iter().enumerate().map(|(x, &p)| (p, x)).collect();
        Ok(ExtSpace { n, construction, phi_inverse, natural, stabilizer: OnceLock::new() })
    }

    /// `𝔊(n)` with base point `0`, cached.
    pub fn space(&self, n: usize) -> Result<Arc<ExtSpace>> {
        if let Some(s) = self.spaces.lock().unwrap().get(&n) {
            return Ok(s.clone());
        }
        let s = Arc::new(self.build(n, 0)?);
        self.spaces.lock().unwrap().insert(n, s.clone());
        Ok(s)
    }

    /// `𝔊(n)` built at `base`, together with an outcome isomorphism onto the
    /// space built at another base point (none when `n = 1`).
    pub fn space_of(&self, n: usize, base: usize) -> Result<(ExtSpace, Option<Vec<usize>>)> {
        let built = self.build(n, base)?;
        if n < 2 {
            return Ok((built, None));
        }
        let other = self.build(n, (base + 1) % n)?;
        let iso = find_isomorphism(built.space(), other.space())
            .ok_or_else(|| Error::IllDefined(format!("spaces at base points {base} and {} differ", (base + 1) % n)))?;
        Ok((built, Some(iso)))
    }

    /// The natural comparison space: classical, grid or graph.
    pub fn expected_space(&self, n: usize) -> Result<Option<TestSpace>> {
        let labels = letters(n);
        Ok(match self.name() {
            "trivial" => Some(crate::testspace::classical(&labels)?),
            "grid" => Some(crate::testspace::grid(&labels)?),
            "graph" => Some(crate::testspace::graph(&labels)?),
            _ => None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::check_full_symmetry;

    #[test]
    fn group_orders() {
        let grid = ExtensionSpec::grid();
        let graph = ExtensionSpec::graph();
        assert_eq!(grid.group(1).unwrap().order(), 2);
        assert_eq!(grid.group(2).unwrap().order(), 8);
        assert_eq!(grid.group(3).unwrap().order(), 72);
        assert_eq!(graph.group(3).unwrap().order(), 36);
        assert_eq!(grid.base_stabilizer(2, 0).unwrap().order(), 2);
        assert_eq!(graph.base_stabilizer(2, 0).unwrap().order(), 1);
        assert!(graph.embedding(2).unwrap().is_injective());
    }

    #[test]
    fn small_spaces() {
        let t = ExtensionSpec::trivial().space(3).unwrap();
        assert_eq!(t.space().tests(), &[vec![0, 1, 2]]);
        let g = ExtensionSpec::graph().space(2).unwrap();
        assert_eq!((g.space().outcome_count(), g.space().test_count()), (4, 2));
        let r = ExtensionSpec::grid().space(2).unwrap();
        assert_eq!((r.space().outcome_count(), r.space().test_count()), (4, 4));
        for spec in [ExtensionSpec::grid(), ExtensionSpec::graph()] {
            let s = spec.space(3).unwrap();
            assert_eq!((s.space().outcome_count(), s.space().test_count()), (9, 6));
            let expected = spec.expected_space(3).unwrap().unwrap();
            assert!(find_isomorphism(s.space(), &expected).is_some());
            assert!(check_full_symmetry(s.space(), s.group(), &s.construction().cosets).unwrap().is_none());
        }
    }

    #[test]
    fn natural_labels() {
        let g = ExtensionSpec::graph().space(2).unwrap();
        let mut labels = g.space().labels().to_vec();
        labels.sort();
        assert_eq!(labels, ["(a,a)", "(a,b)", "(b,a)", "(b,b)"]);
        let base: Vec<&str> = g.base_test().iter().map(|&p| g.space().labels()[p].as_str()).collect();
        assert_eq!(base, ["(a,a)", "(b,b)"]);
    }

    #[test]
    fn base_point_independence() {
        for spec in [ExtensionSpec::trivial(), ExtensionSpec::grid(), ExtensionSpec::graph()] {
            let (_, iso) = spec.space_of(3, 0).unwrap();
            assert!(iso.is_some());
        }
    }
}
