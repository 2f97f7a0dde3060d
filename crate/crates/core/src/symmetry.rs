//! Group actions on test spaces: the coset construction of a fully
//! symmetric space, symmetry checks, strongification, orbit models and the
//! averaged inner product.

use std::sync::Arc;

use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{orbit, Action, CosetSpace, Element, FiniteGroup, GroupHom, Perm};
use crate::limits::Limits;
use crate::rational::{format_q, Q};
use crate::states::{self, linalg, Weight};
use crate::testspace::TestSpace;

/// Images of a set of points, sorted.
pub fn act_on_set(action: &dyn Action, g: &Element, set: &[usize]) -> Result<Vec<usize>> {
    let mut out: Vec<usize> = set.iter().map(|&x| action.act(g, x)).collect::<Result<_>>()?;
    out.sort_unstable();
    Ok(out)
}

/// `(g·α)(x) = α(g⁻¹x)`.
pub fn act_on_weight(action: &dyn Action, g: &Element, alpha: &[Q]) -> Result<Weight> {
    let mut out = vec![Q::default(); alpha.len()];
    for (x, a) in alpha.iter().enumerate() {
        out[action.act(g, x)?] = a.clone();
    }
    Ok(out)
}

/// Why a space fails to be fully symmetric.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SymmetryFailure {
    UnequalTests { first: usize, second: usize },
    /// Some element maps a test outside the space.
    NotASymmetry { test: usize },
    /// The listed bijection `E → F` (pairs `(x, f(x))`) has no implementer.
    Unimplemented { from: usize, to: usize, bijection: Vec<(usize, usize)> },
}

/// Exhaustively check that every bijection between tests is the restriction
/// of some group element.
pub fn check_full_symmetry(space: &TestSpace, group: &FiniteGroup, action: &dyn Action) -> Result<Option<SymmetryFailure>> {
    let tests = space.tests();
    if let Some(i) = (1..tests.len()).find(|&i| tests[i].len() != tests[0].len()) {
        return Ok(Some(SymmetryFailure::UnequalTests { first: 0, second: i }));
    }
    let n = tests[0].len();
    let limits = Limits::current();
    let per_pair = (1..=n).try_fold(1usize, |a, k| a.checked_mul(k)).unwrap_or(usize::MAX);
    let total = tests.len().saturating_mul(tests.len()).saturating_mul(per_pair);
    if total > limits.max_bijections {
        return Err(Error::cap("test-pair bijections", limits.max_bijections));
    }
    if group.order().saturating_mul(tests.len()) > limits.max_event_pairs {
        return Err(Error::cap("element-test pairs", limits.max_event_pairs));
    }
    let index: FxHashMap<&[usize], usize> = tests.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut seen: FxHashMap<(usize, usize), FxHashSet<Vec<usize>>> = FxHashMap::default();
    for g in group.elements() {
        let image: Vec<usize> = (0..space.outcome_count()).map(|x| action.act(g, x)).collect::<Result<_>>()?;
        for (i, t) in tests.iter().enumerate() {
            let restricted: Vec<usize> = t.iter().map(|&x| image[x]).collect();
            let mut sorted = restricted.clone();
            sorted.sort_unstable();
            let Some(&j) = index.get(sorted.as_slice()) else {
                return Ok(Some(SymmetryFailure::NotASymmetry { test: i }));
            };
            seen.entry((i, j)).or_default().insert(restricted);
        }
    }
    for i in 0..tests.len() {
        for j in 0..tests.len() {
            let got = seen.get(&(i, j));
            if got.map_or(0, |s| s.len()) == per_pair {
                continue;
            }
            for p in Perm::all(n) {
                let f: Vec<usize> = (0..n).map(|k| tests[j][p.apply(k)]).collect();
                if !got.is_some_and(|s| s.contains(&f)) {
                    let bijection = tests[i].iter().copied().zip(f).collect();
                    return Ok(Some(SymmetryFailure::Unimplemented { from: i, to: j, bijection }));
                }
            }
        }
    }
    Ok(None)
}

/// A non-identity element fixing a test pointwise, when one exists.
///
/// Given full symmetry, implementers are unique exactly when every
/// pointwise test stabilizer is trivial.
pub fn strong_symmetry_violation(space: &TestSpace, group: &FiniteGroup, action: &dyn Action) -> Result<Option<(usize, Element)>> {
    for (i, t) in space.tests().iter().enumerate() {
        for g in group.elements() {
            if g.is_identity() {
                continue;
            }
            if t.iter().map(|&x| action.act(g, x).map(|y| y == x)).collect::<Result<Vec<_>>>()?.into_iter().all(|b| b) {
                return Ok(Some((i, g.clone())));
            }
        }
    }
    Ok(None)
}

/// Output of the coset construction from `(G, j: S(E) → G, K, x₀)`.
#[derive(Clone, Debug)]
pub struct Construction {
    pub embedding: GroupHom,
    pub cosets: CosetSpace,
    pub base_point: usize,
    /// `φ(x)` for each `x ∈ E`.
    pub phi: Vec<usize>,
    pub space: TestSpace,
    /// `witnesses[i]` carries `φ(E)` onto test `i` of `space`.
    pub witnesses: Vec<Element>,
    /// Number of distinct permutations `H` induces on `φ(E)`; equal to
    /// `|E|!` this certifies full symmetry, since `G` is transitive on tests.
    pub base_test_permutations: usize,
}

impl Construction {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.cosets.group()
    }

    pub fn stabilizer(&self) -> &Arc<FiniteGroup> {
        self.cosets.subgroup()
    }

    pub fn base_test(&self) -> Vec<usize> {
        let mut e = self.phi.clone();
        e.sort_unstable();
        e
    }

    pub fn base_test_index(&self) -> usize {
        let e = self.base_test();
        self.space.tests().iter().position(|t| *t == e).expect("base test is a test")
    }

    pub fn is_certified_fully_symmetric(&self) -> bool {
        let n = self.phi.len();
        self.base_test_permutations == (1..=n).product::<usize>()
    }

    /// The test witness for a test given as a sorted point list.
    pub fn witness_of(&self, test: &[usize]) -> Option<&Element> {
        self.space.tests().iter().position(|t| t == test).map(|i| &self.witnesses[i])
    }
}

/// `X = G/K`, `φ(σx₀) = j(σ)K`, and tests the `G`-orbit of `φ(E)`.
///
/// `labels` name the points of `E`; other cosets are named `c<index>`.
pub fn basic_construction(embedding: GroupHom, k: Arc<FiniteGroup>, base_point: usize, labels: &[String]) -> Result<Construction> {
    let sym = embedding.domain().clone();
    let g = embedding.codomain().clone();
    let n = labels.len();
    let factorial: usize = (1..=n).product();
    if sym.order() != factorial || sym.elements().iter().any(|s| s.family() != crate::group::Family::Sym || s.rank() != n) {
        return Err(Error::NotAnEmbedding(format!("domain is not the symmetric group on {n} points")));
    }
    if base_point >= n {
        return Err(Error::InvalidSpace(format!("base point {base_point} outside a set of {n}")));
    }
    let embedding = embedding.require_injective().map_err(|e| Error::NotAnEmbedding(e.to_string()))?;
    if !k.is_subgroup_of(&g) {
        return Err(Error::NotASubgroup("K is not contained in G".into()));
    }
    let h: FxHashSet<&Element> = embedding.images().iter().collect();
    let mut k_cap_h: Vec<Element> = k.elements().iter().filter(|x| h.contains(x)).cloned().collect();
    let mut stab: Vec<Element> = sym
        .elements()
        .iter()
        .filter(|s| s.apply(base_point) == base_point)
        .map(|s| embedding.apply(s).expect("domain element").clone())
        .collect();
    k_cap_h.sort_unstable();
    stab.sort_unstable();
    if k_cap_h != stab {
        return Err(Error::Condition1Violated(format!(
            "|K ∩ H| = {} but the base-point stabilizer has {} elements",
            k_cap_h.len(),
            stab.len()
        )));
    }
    if n * k_cap_h.len() != factorial {
        return Err(Error::Condition1Violated("|E| differs from |H| / |H ∩ K|".into()));
    }
    let cosets = CosetSpace::new(g.clone(), k)?;

    let mut carry = vec![None; n];
    for s in sym.elements() {
        let x = s.apply(base_point);
        if carry[x].is_none() {
            carry[x] = Some(s.clone());
        }
    }
    let phi: Vec<usize> = carry
        .iter()
        .map(|s| cosets.coset_of(embedding.apply(s.as_ref().expect("S(E) is transitive")).expect("in domain")).expect("in G"))
        .collect();
    let distinct: FxHashSet<usize> = phi.iter().copied().collect();
    if distinct.len() != n {
        return Err(Error::Condition1Violated("φ is not injective".into()));
    }
    for s in sym.elements() {
        let js = embedding.apply(s).expect("in domain");
        for x in 0..n {
            if cosets.act(js, phi[x])? != phi[s.apply(x)] {
                return Err(Error::Condition1Violated(format!("φ is not equivariant at point {x}")));
            }
        }
    }
    let mut base: Vec<usize> = phi.clone();
    base.sort_unstable();
    let limits = Limits::current();
    let tests_orbit = orbit(&g, base, |e, t| {
        act_on_set(&cosets, e, t)
    })?;
    if tests_orbit.len() > limits.max_assignments {
        return Err(Error::cap("construction test count", limits.max_assignments));
    }
    let restricted: FxHashSet<Vec<usize>> = sym
        .elements()
        .iter()
        .map(|s| {
            let js = embedding.apply(s).expect("in domain");
            phi.iter().map(|&p| cosets.act(js, p).expect("defined")).collect()
        })
        .collect();
    let mut point_labels: Vec<String> = (0..cosets.len()).map(|p| format!("c{p}")).collect();
    for (x, &p) in phi.iter().enumerate() {
        point_labels[p] = labels[x].clone();
    }
    let space = TestSpace::new(format!("construction({n})"), point_labels, tests_orbit.members.clone())?;
    debug_assert_eq!(space.tests(), tests_orbit.members.as_slice());
    Ok(Construction {
        embedding,
        cosets,
        base_point,
        phi,
        space,
        witnesses: tests_orbit.witnesses,
        base_test_permutations: restricted.len(),
    })
}

/// Quotient by the pointwise stabilizer `F` of the base test, realized on
/// the cosets of `F` in its normalizer, and the construction rebuilt from
/// `(N/F, H F/F, (N ∩ K)/F)`.
pub fn strongify(c: &Construction, labels: &[String]) -> Result<Construction> {
    let g = c.group();
    let base = c.base_test();
    let fixer: Vec<Element> = g
        .elements()
        .iter()
        .filter(|e| base.iter().all(|&p| c.cosets.act(e, p).expect("defined") == p))
        .cloned()
        .collect();
    let f = Arc::new(g.subgroup(fixer)?);
    let n_group = Arc::new(g.filter(|e| {
        let inv = e.inverse();
        f.elements().iter().all(|x| f.contains(&e.mul(x).mul(&inv)))
    })?);
    let quotient = CosetSpace::new(n_group.clone(), f.clone())?;
    let degree = quotient.len();
    if degree > u8::MAX as usize {
        return Err(Error::cap("quotient degree", u8::MAX as usize));
    }
    let as_perm = |e: &Element| -> Result<Element> {
        let images: Vec<usize> = (0..degree).map(|p| quotient.act(e, p)).collect::<Result<_>>()?;
        Ok(Element::Sym(Perm::from_images(&images)?))
    };
    let gens: Vec<Element> = n_group.generators().iter().map(&as_perm).collect::<Result<_>>()?;
    let g2 = Arc::new(FiniteGroup::closure(Element::Sym(Perm::identity(degree)), gens, FiniteGroup::default_cap())?);
    let sym = c.embedding.domain().clone();
    let h_gens: Vec<Element> = sym
        .generators()
        .iter()
        .map(|s| as_perm(c.embedding.apply(s).expect("in domain")))
        .collect::<Result<_>>()?;
    let j2 = GroupHom::extend(sym, g2.clone(), &h_gens)?;
    let k_images: Vec<Element> = n_group
        .elements()
        .iter()
        .filter(|e| c.stabilizer().contains(e))
        .map(&as_perm)
        .collect::<Result<_>>()?;
    let k2 = Arc::new(g2.subgroup(k_images)?);
    basic_construction(j2, k2, c.base_point, labels)
}

/// The convex hull of a `G`-orbit of one state.
#[derive(Clone, Debug)]
pub struct OrbitModel {
    /// Extreme points, sorted.
    pub vertices: Vec<Weight>,
    pub witnesses: Vec<Element>,
}

pub fn orbit_model(space: &TestSpace, group: &FiniteGroup, action: &dyn Action, seed: &[Q]) -> Result<OrbitModel> {
    states::validate_weight(space, seed).map_err(|e| Error::SeedNotAState(e.to_string()))?;
    let o = orbit(group, seed.to_vec(), |g, w| act_on_weight(action, g, w))?;
    Ok(OrbitModel { vertices: o.members, witnesses: o.witnesses })
}

impl OrbitModel {
    /// `g·Γ = Γ` for every generator.
    pub fn is_invariant(&self, group: &FiniteGroup, action: &dyn Action) -> Result<bool> {
        for g in group.generators() {
            let mut moved: Vec<Weight> = self.vertices.iter().map(|v| act_on_weight(action, g, v)).collect::<Result<_>>()?;
            moved.sort();
            if moved != self.vertices {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `⟨α, β⟩ = Σ_{g∈G} α(g x₀) β(g x₀)`.
pub fn averaged_inner_product(group: &FiniteGroup, action: &dyn Action, base: usize, alpha: &[Q], beta: &[Q]) -> Result<Q> {
    let mut acc = Q::default();
    for g in group.elements() {
        let y = action.act(g, base)?;
        acc += &alpha[y] * &beta[y];
    }
    Ok(acc)
}

/// Gram matrix of the averaged inner product on a basis of the span of
/// `vertices`, with the basis indices.
pub fn gram_matrix(group: &FiniteGroup, action: &dyn Action, base: usize, vertices: &[Weight]) -> Result<(Vec<usize>, Vec<Vec<Q>>)> {
    let limits = Limits::current();
    if group.order().saturating_mul(vertices.len().pow(2)) > limits.max_event_pairs {
        return Err(Error::cap("inner-product evaluations", limits.max_event_pairs));
    }
    let basis = linalg::independent_subset(vertices);
    let gram = basis
        .iter()
        .map(|&i| {
            basis
                .iter()
                .map(|&j| averaged_inner_product(group, action, base, &vertices[i], &vertices[j]))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok((basis, gram))
}

/// Summary of positivity and invariance of the averaged inner product on
/// all pairs of listed vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InnerProductCheck {
    pub negative_pair: Option<(usize, usize, String)>,
    pub non_invariant: Option<(usize, usize, usize)>,
}

pub fn check_inner_product(group: &FiniteGroup, action: &dyn Action, base: usize, vertices: &[Weight]) -> Result<InnerProductCheck> {
    let mut out = InnerProductCheck { negative_pair: None, non_invariant: None };
    for (i, a) in vertices.iter().enumerate() {
        for (j, b) in vertices.iter().enumerate() {
            let v = averaged_inner_product(group, action, base, a, b)?;
            if v < Q::default() && out.negative_pair.is_none() {
                out.negative_pair = Some((i, j, format_q(&v)));
            }
            for (s, g) in group.generators().iter().enumerate() {
                let (ga, gb) = (act_on_weight(action, g, a)?, act_on_weight(action, g, b)?);
                if out.non_invariant.is_none() && averaged_inner_product(group, action, base, &ga, &gb)? != v {
                    out.non_invariant = Some((i, j, s));
                }
            }
        }
    }
    Ok(out)
}

/// An outcome bijection `π` with `π(tests(a)) = tests(b)`, by backtracking
/// over outcomes with degree and co-occurrence pruning.
pub fn find_isomorphism(a: &TestSpace, b: &TestSpace) -> Option<Vec<usize>> {
    let n = a.outcome_count();
    if n != b.outcome_count() || a.test_count() != b.test_count() {
        return None;
    }
    let mut sizes_a: Vec<usize> = a.tests().iter().map(|t| t.len()).collect();
    let mut sizes_b: Vec<usize> = b.tests().iter().map(|t| t.len()).collect();
    sizes_a.sort_unstable();
    sizes_b.sort_unstable();
    if sizes_a != sizes_b {
        return None;
    }
    let co = |s: &TestSpace| {
        let mut m = vec![vec![0u32; n]; n];
        for t in s.tests() {
            for &x in t {
                for &y in t {
                    m[x][y] += 1;
                }
            }
        }
        m
    };
    let (ca, cb) = (co(a), co(b));
    let profile = |m: &Vec<Vec<u32>>, x: usize| {
        let mut row = m[x].clone();
        row.sort_unstable();
        row
    };
    let pa: Vec<Vec<u32>> = (0..n).map(|x| profile(&ca, x)).collect();
    let pb: Vec<Vec<u32>> = (0..n).map(|x| profile(&cb, x)).collect();
    let target: FxHashSet<&[usize]> = b.test_set_lookup();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        x: usize,
        n: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ca: &[Vec<u32>],
        cb: &[Vec<u32>],
        pa: &[Vec<u32>],
        pb: &[Vec<u32>],
        check: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if x == n {
            return check(map);
        }
        for y in 0..n {
            if used[y] || pa[x] != pb[y] || ca[x][x] != cb[y][y] {
                continue;
            }
            if (0..x).any(|w| ca[x][w] != cb[y][map[w]]) {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if go(x + 1, n, map, used, ca, cb, pa, pb, check) {
                return true;
            }
            used[y] = false;
        }
        map[x] = usize::MAX;
        false
    }
    let check = |m: &[usize]| {
        a.tests().iter().all(|t| {
            let mut img: Vec<usize> = t.iter().map(|&x| m[x]).collect();
            img.sort_unstable();
            target.contains(img.as_slice())
        })
    };
    go(0, n, &mut map, &mut used, &ca, &cb, &pa, &pb, &check).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::NaturalAction;
    use crate::rational::{q, qi};
    use crate::testspace::{classical, graph, grid, letters, triangle};

    fn s(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(n).unwrap())
    }

    fn pair_group(n: usize, transpose: bool) -> Arc<FiniteGroup> {
        let id = Perm::identity(n);
        let mut gens = Vec::new();
        for p in Perm::symmetric_generators(n) {
            gens.push(Element::Grid(p.clone(), id.clone(), false));
            gens.push(Element::Grid(id.clone(), p, false));
        }
        if transpose {
            gens.push(Element::Grid(id.clone(), id.clone(), true));
        }
        Arc::new(FiniteGroup::closure(Element::Grid(id.clone(), id, false), gens, 10_000).unwrap())
    }

    #[test]
    fn classical_construction() {
        let g = s(3);
        let j = GroupHom::extend(g.clone(), g.clone(), g.generators()).unwrap();
        let k = Arc::new(g.filter(|e| e.apply(0) == 0).unwrap());
        let c = basic_construction(j, k, 0, &letters(3)).unwrap();
        assert_eq!(c.space.tests(), &[vec![0, 1, 2]]);
        assert!(c.is_certified_fully_symmetric());
    }

    #[test]
    fn condition_one_is_enforced() {
        let g = s(3);
        let j = GroupHom::extend(g.clone(), g.clone(), g.generators()).unwrap();
        let trivial = Arc::new(g.filter(|e| e.is_identity()).unwrap());
        assert!(matches!(basic_construction(j, trivial, 0, &letters(3)), Err(Error::Condition1Violated(_))));
    }

    #[test]
    fn symmetry_checks_on_standard_spaces() {
        let t = triangle();
        let g = s(3);
        let act = NaturalAction { degree: 3 };
        assert_eq!(check_full_symmetry(&t, &g, &act).unwrap(), None);
        assert_eq!(strong_symmetry_violation(&t, &g, &act).unwrap(), None);
        let c = classical(&letters(3)).unwrap();
        assert_eq!(check_full_symmetry(&c, &g, &act).unwrap(), None);
        assert_eq!(strong_symmetry_violation(&c, &g, &act).unwrap(), None);

        let gr = grid(&letters(2)).unwrap();
        let shifts = pair_group(2, false);
        let r = check_full_symmetry(&gr, &shifts, &NaturalAction { degree: 4 }).unwrap();
        assert!(matches!(r, Some(SymmetryFailure::Unimplemented { .. })));
        let full = pair_group(2, true);
        assert_eq!(check_full_symmetry(&gr, &full, &NaturalAction { degree: 4 }).unwrap(), None);
    }

    #[test]
    fn grid_three_is_not_strong_until_strongified() {
        let g = pair_group(3, true);
        let sym = s(3);
        let gens: Vec<Element> = sym
            .generators()
            .iter()
            .map(|e| match e {
                Element::Sym(p) => Element::Grid(p.clone(), Perm::identity(3), false),
                _ => unreachable!(),
            })
            .collect();
        let j = GroupHom::extend(sym, g.clone(), &gens).unwrap();
        // stabilizer of the point (a, a)
        let k = Arc::new(g.filter(|e| e.apply(0) == 0).unwrap());
        let c = basic_construction(j, k, 0, &letters(3)).unwrap();
        assert_eq!((c.space.outcome_count(), c.space.test_count()), (9, 6));
        assert_eq!(check_full_symmetry(&c.space, g.as_ref(), &c.cosets).unwrap(), None);
        assert!(strong_symmetry_violation(&c.space, g.as_ref(), &c.cosets).unwrap().is_some());
        let strong = strongify(&c, &letters(3)).unwrap();
        assert!(strong_symmetry_violation(&strong.space, strong.group(), &strong.cosets).unwrap().is_none());
        assert_eq!(check_full_symmetry(&strong.space, strong.group(), &strong.cosets).unwrap(), None);
    }

    #[test]
    fn orbit_models() {
        let c = classical(&letters(3)).unwrap();
        let g = s(3);
        let act = NaturalAction { degree: 3 };
        let m = orbit_model(&c, &g, &act, &[qi(1), qi(0), qi(0)]).unwrap();
        assert_eq!(m.vertices.len(), 3);
        assert!(m.is_invariant(&g, &act).unwrap());
        let bary = orbit_model(&c, &g, &act, &[q(1, 3), q(1, 3), q(1, 3)]).unwrap();
        assert_eq!(bary.vertices.len(), 1);
        assert!(matches!(orbit_model(&c, &g, &act, &[qi(1), qi(1), qi(0)]), Err(Error::SeedNotAState(_))));
        let gr = grid(&letters(2)).unwrap();
        let full = pair_group(2, true);
        let id = vec![qi(1), qi(0), qi(0), qi(1)];
        assert_eq!(orbit_model(&gr, &full, &NaturalAction { degree: 4 }, &id).unwrap().vertices.len(), 2);
    }

    #[test]
    fn inner_product_of_point_masses() {
        let g = s(3);
        let act = NaturalAction { degree: 3 };
        let delta = vec![qi(1), qi(0), qi(0)];
        assert_eq!(averaged_inner_product(&g, &act, 0, &delta, &delta).unwrap(), qi(2));
        let verts = vec![vec![qi(0), qi(0), qi(1)], vec![qi(0), qi(1), qi(0)], delta];
        let check = check_inner_product(&g, &act, 0, &verts).unwrap();
        assert_eq!(check, InnerProductCheck { negative_pair: None, non_invariant: None });
        let (basis, gram) = gram_matrix(&g, &act, 0, &verts).unwrap();
        assert_eq!(basis.len(), 3);
        assert_eq!(gram[0][1], qi(0));
    }

    #[test]
    fn isomorphism_search() {
        let g = graph(&letters(2)).unwrap();
        let relabeled = g.relabeled(&[3, 2, 1, 0], letters(4)).unwrap();
        let pi = find_isomorphism(&g, &relabeled).unwrap();
        assert_eq!(pi.len(), 4);
        assert!(find_isomorphism(&grid(&letters(2)).unwrap(), &g).is_none());
    }
}
