use rustc_hash::FxHashMap;

use super::TestSpace;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// All events of a test space in canonical order, with their complements.
///
/// `comp(A)` is the set of events `C` for which `A ∪ C` is a test and
/// `A ∩ C = ∅`, i.e. `{E ∖ A : E ⊇ A}`.
#[derive(Clone, Debug)]
pub struct Events {
    universe: usize,
    sets: Vec<BitSet>,
    index: FxHashMap<BitSet, u32>,
    comp: Vec<Vec<u32>>,
    tests: Vec<u32>,
}

/// Which of the basic relations hold between two events.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Relation {
    pub orthogonal: bool,
    pub complementary: bool,
    /// Least common complement in canonical order.
    pub axis: Option<BitSet>,
}

impl Relation {
    pub fn perspective(&self) -> bool {
        self.axis.is_some()
    }
}

/// `A ∼ B` yet `C` is complementary to `A` and not to `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonAlgebraicWitness {
    pub a: BitSet,
    pub b: BitSet,
    pub c: BitSet,
}

impl Events {
    pub(crate) fn new(space: &TestSpace, limits: &Limits) -> Result<Self> {
        let mut budget = 0usize;
        for t in space.tests() {
            let size = 1usize.checked_shl(t.len() as u32).unwrap_or(usize::MAX);
            budget = budget.saturating_add(size);
            if budget > limits.max_events.saturating_mul(2) || t.len() >= 63 {
                return Err(Error::cap("event count", limits.max_events));
            }
        }
        let mut sets: Vec<BitSet> = Vec::new();
        for t in space.test_sets() {
            sets.extend(t.subsets());
        }
        sets.sort_unstable();
        sets.dedup();
        if sets.len() > limits.max_events {
            return Err(Error::cap("event count", limits.max_events));
        }
        let index: FxHashMap<BitSet, u32> = sets.iter().enumerate().map(|(i, s)| (s.clone(), i as u32)).collect();
        let mut comp = vec![Vec::new(); sets.len()];
        let mut tests = Vec::with_capacity(space.test_count());
        for t in space.test_sets() {
            let ti = index[t];
            tests.push(ti);
            for a in t.subsets() {
                comp[index[&a] as usize].push(index[&t.difference(&a)]);
            }
        }
        for c in &mut comp {
            c.sort_unstable();
            c.dedup();
        }
        tests.sort_unstable();
        Ok(Events {
            universe: space.outcome_count(),
            sets,
            index,
            comp,
            tests,
        })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[BitSet] {
        &self.sets
    }

    pub fn get(&self, i: usize) -> &BitSet {
        &self.sets[i]
    }

    pub fn index_of(&self, s: &BitSet) -> Option<usize> {
        self.index.get(s).map(|&i| i as usize)
    }

    pub fn contains(&self, s: &BitSet) -> bool {
        self.index.contains_key(s)
    }

    /// Event indices of the tests.
    pub fn tests(&self) -> &[u32] {
        &self.tests
    }

    pub fn is_test_index(&self, i: usize) -> bool {
        self.tests.binary_search(&(i as u32)).is_ok()
    }

    /// Complementary events of event `i`, as sorted indices.
    pub fn complements(&self, i: usize) -> &[u32] {
        &self.comp[i]
    }

    pub fn orthogonal(&self, a: &BitSet, b: &BitSet) -> bool {
        a.is_disjoint(b) && self.contains(&a.union(b))
    }

    pub fn complementary(&self, a: &BitSet, b: &BitSet) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.comp[i].binary_search(&(j as u32)).is_ok(),
            _ => false,
        }
    }

    /// Least common complement of two events, if any.
    pub fn axis(&self, i: usize, j: usize) -> Option<usize> {
        let (a, b) = (&self.comp[i], &self.comp[j]);
        let (mut p, mut q) = (0, 0);
        while p < a.len() && q < b.len() {
            match a[p].cmp(&b[q]) {
                std::cmp::Ordering::Less => p += 1,
                std::cmp::Ordering::Greater => q += 1,
                std::cmp::Ordering::Equal => return Some(a[p] as usize),
            }
        }
        None
    }

    pub fn perspective(&self, i: usize, j: usize) -> bool {
        self.axis(i, j).is_some()
    }

    /// Relation flags for two subsets; non-events relate to nothing.
    pub fn relation(&self, a: &BitSet, b: &BitSet) -> Relation {
        let (Some(i), Some(j)) = (self.index_of(a), self.index_of(b)) else {
            return Relation::default();
        };
        Relation {
            orthogonal: self.orthogonal(a, b),
            complementary: self.comp[i].binary_search(&(j as u32)).is_ok(),
            axis: self.axis(i, j).map(|c| self.sets[c].clone()),
        }
    }

    /// Indices of all events perspective to event `i`, in order.
    pub fn perspectivity_class(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.comp[i]
            .iter()
            .flat_map(|&c| self.comp[c as usize].iter().map(|&b| b as usize))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The first failure of algebraicity, scanning axes in canonical order.
    ///
    /// Every perspective pair shares some axis `C`, and the events with axis
    /// `C` are exactly `comp(C)`, so it is enough to compare complement sets
    /// within each `comp(C)`.
    pub fn algebraic_violation(&self) -> Option<NonAlgebraicWitness> {
        for c in 0..self.len() {
            let members = &self.comp[c];
            let Some(&first) = members.first() else { continue };
            for &other in &members[1..] {
                let (a, b) = (&self.comp[first as usize], &self.comp[other as usize]);
                if a == b {
                    continue;
                }
                let witness = |x: u32, y: u32, d: u32| NonAlgebraicWitness {
                    a: self.sets[x as usize].clone(),
                    b: self.sets[y as usize].clone(),
                    c: self.sets[d as usize].clone(),
                };
                return Some(match a.iter().find(|d| b.binary_search(d).is_err()) {
                    Some(&d) => witness(first, other, d),
                    None => {
                        let &d = b.iter().find(|d| a.binary_search(d).is_err()).expect("sets differ");
                        witness(other, first, d)
                    }
                });
            }
        }
        None
    }

    pub fn is_algebraic(&self) -> bool {
        self.algebraic_violation().is_none()
    }

    /// `A ∼ B`, `C ∈ comp(A)`, `C ∉ comp(B)`.
    pub fn is_non_algebraic_witness(&self, w: &NonAlgebraicWitness) -> bool {
        let (Some(a), Some(b)) = (self.index_of(&w.a), self.index_of(&w.b)) else {
            return false;
        };
        self.perspective(a, b) && self.complementary(&w.a, &w.c) && !self.complementary(&w.b, &w.c)
    }

    pub fn probability(&self, weights: &[crate::Q], i: usize) -> crate::Q {
        crate::rational::sum(self.sets[i].iter().map(|x| &weights[x]))
    }
}

impl TestSpace {
    pub fn is_algebraic(&self) -> Result<Option<NonAlgebraicWitness>> {
        Ok(self.events()?.algebraic_violation())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testspace::{classical, graph, grid, letters, triangle};

    #[test]
    fn event_counts() {
        assert_eq!(classical(&letters(2)).unwrap().events().unwrap().len(), 4);
        // ∅, three singletons, three pairs
        assert_eq!(triangle().events().unwrap().len(), 7);
        // ∅, four singletons, four tests
        assert_eq!(grid(&letters(2)).unwrap().events().unwrap().len(), 9);
    }

    #[test]
    fn event_order_is_canonical() {
        let ev = triangle().events().unwrap();
        let listed: Vec<Vec<usize>> = ev.sets().iter().map(|s| s.to_vec()).collect();
        assert_eq!(listed, vec![vec![], vec![0], vec![1], vec![2], vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn relations_on_the_triangle() {
        let t = triangle();
        let ev = t.events().unwrap();
        let r = ev.relation(&t.set_of([0]), &t.set_of([1]));
        assert!(r.orthogonal && r.complementary);
        let r = ev.relation(&t.set_of([0]), &t.set_of([2]));
        assert_eq!(r.axis, Some(t.set_of([1])));
        let r = ev.relation(&t.set_of([0, 1]), &t.set_of([1, 2]));
        assert_eq!(r.axis, Some(t.empty_set()));
        assert!(!r.orthogonal);
    }

    #[test]
    fn distinct_tests_have_empty_axis() {
        let g = grid(&letters(3)).unwrap();
        let ev = g.events().unwrap();
        for &a in ev.tests() {
            for &b in ev.tests() {
                assert_eq!(ev.axis(a as usize, b as usize), Some(0));
            }
        }
    }

    #[test]
    fn algebraicity() {
        assert!(classical(&letters(3)).unwrap().is_algebraic().unwrap().is_none());
        assert!(graph(&letters(2)).unwrap().is_algebraic().unwrap().is_none());
        let t = triangle();
        let ev = t.events().unwrap();
        let w = ev.algebraic_violation().unwrap();
        assert!(ev.is_non_algebraic_witness(&w));
        let listed = NonAlgebraicWitness { a: t.set_of([0]), b: t.set_of([2]), c: t.set_of([2]) };
        assert!(ev.is_non_algebraic_witness(&listed));
    }

    #[test]
    fn perspectivity_classes() {
        let t = triangle();
        let ev = t.events().unwrap();
        let a = ev.index_of(&t.set_of([0])).unwrap();
        let class: Vec<Vec<usize>> = ev.perspectivity_class(a).iter().map(|&i| ev.get(i).to_vec()).collect();
        // {a} ∼ {b} via {c} and {a} ∼ {c} via {b}
        assert_eq!(class, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(ev.perspectivity_class(0), vec![0]);
        let g = grid(&letters(2)).unwrap();
        let ev = g.events().unwrap();
        let e = ev.tests()[0] as usize;
        let class: Vec<u32> = ev.perspectivity_class(e).into_iter().map(|i| i as u32).collect();
        assert_eq!(class, ev.tests());
    }

    #[test]
    fn event_cap_is_enforced() {
        let limits = Limits { max_events: 5, ..Limits::default() };
        let err = grid(&letters(3)).unwrap().events_capped(&limits).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }
}
