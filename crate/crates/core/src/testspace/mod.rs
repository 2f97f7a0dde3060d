//! Finite test spaces and their event structure.

mod events;
mod logic;
mod morphism;

use rustc_hash::FxHashSet;

pub use events::{Events, NonAlgebraicWitness, Relation};
pub use logic::Orthoalgebra;
pub use morphism::{Morphism, MorphismViolation};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::Perm;
use crate::limits::Limits;

/// A finite set of outcomes together with a family of tests covering it.
///
/// Tests are stored as sorted index lists, deduplicated and sorted
/// lexicographically, so two spaces with the same tests compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestSpace {
    name: String,
    labels: Vec<String>,
    tests: Vec<Vec<usize>>,
    test_sets: Vec<BitSet>,
}

impl TestSpace {
    pub fn new(name: impl Into<String>, labels: Vec<String>, tests: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptySet);
        }
        let mut covered = vec![false; n];
        let mut canonical = Vec::with_capacity(tests.len());
        for (i, mut t) in tests.into_iter().enumerate() {
            if t.is_empty() {
                return Err(Error::InvalidSpace(format!("test {i} is empty")));
            }
            t.sort_unstable();
            if t.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidSpace(format!("test {i} repeats an outcome")));
            }
            if let Some(&bad) = t.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidSpace(format!("test {i} names outcome {bad} of {n}")));
            }
            for &x in &t {
                covered[x] = true;
            }
            canonical.push(t);
        }
        if let Some(x) = covered.iter().position(|c| !c) {
            return Err(Error::InvalidSpace(format!("outcome {x} ({}) lies in no test", labels[x])));
        }
        canonical.sort_unstable();
        canonical.dedup();
        let test_sets = canonical.iter().map(|t| BitSet::from_indices(n, t.iter().copied())).collect();
        Ok(TestSpace {
            name: name.into(),
            labels,
            tests: canonical,
            test_sets,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn outcome_count(&self) -> usize {
        self.labels.len()
    }

    pub fn tests(&self) -> &[Vec<usize>] {
        &self.tests
    }

    pub fn test_sets(&self) -> &[BitSet] {
        &self.test_sets
    }

    pub fn test_count(&self) -> usize {
        self.tests.len()
    }

    pub fn outcome_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn empty_set(&self) -> BitSet {
        BitSet::new(self.outcome_count())
    }

    pub fn set_of(&self, outcomes: impl IntoIterator<Item = usize>) -> BitSet {
        BitSet::from_indices(self.outcome_count(), outcomes)
    }

    pub fn is_test(&self, s: &BitSet) -> bool {
        self.test_sets.binary_search_by(|t| self.cmp_vec(t, s)).is_ok()
    }

    fn cmp_vec(&self, a: &BitSet, b: &BitSet) -> std::cmp::Ordering {
        a.iter().cmp(b.iter())
    }

    /// Tests as a set, for containment checks across spaces.
    pub fn test_set_lookup(&self) -> FxHashSet<&[usize]> {
        self.tests.iter().map(|t| t.as_slice()).collect()
    }

    /// `A ⊆ E` for some test `E`.
    pub fn is_event(&self, s: &BitSet) -> bool {
        self.test_sets.iter().any(|t| s.is_subset(t))
    }

    pub fn all_tests_equicardinal(&self) -> bool {
        self.tests.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Same tests after relabeling outcomes through `map` (old index → new index).
    pub fn relabeled(&self, map: &[usize], labels: Vec<String>) -> Result<TestSpace> {
        let tests = self.tests.iter().map(|t| t.iter().map(|&x| map[x]).collect()).collect();
        TestSpace::new(self.name.clone(), labels, tests)
    }

    pub fn events(&self) -> Result<Events> {
        Events::new(self, &Limits::current())
    }

    pub fn events_capped(&self, limits: &Limits) -> Result<Events> {
        Events::new(self, limits)
    }
}

/// Default labels `a, b, c, …`; past `z` they continue as `x26, x27, …`.
pub fn letters(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| if i < 26 { ((b'a' + i as u8) as char).to_string() } else { format!("x{i}") })
        .collect()
}

fn pair_labels(labels: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(labels.len() * labels.len());
    for x in labels {
        for y in labels {
            out.push(format!("({x},{y})"));
        }
    }
    out
}

/// A single test `E`.
pub fn classical(labels: &[String]) -> Result<TestSpace> {
    if labels.is_empty() {
        return Err(Error::EmptySet);
    }
    TestSpace::new(format!("classical({})", labels.len()), labels.to_vec(), vec![(0..labels.len()).collect()])
}

/// Rows and columns of `E × E`; outcome `(x, y)` has index `x·n + y`.
pub fn grid(labels: &[String]) -> Result<TestSpace> {
    let n = labels.len();
    if n == 0 {
        return Err(Error::EmptySet);
    }
    let mut tests = Vec::with_capacity(2 * n);
    for x in 0..n {
        tests.push((0..n).map(|y| x * n + y).collect());
    }
    for y in 0..n {
        tests.push((0..n).map(|x| x * n + y).collect());
    }
    TestSpace::new(format!("grid({n})"), pair_labels(labels), tests)
}

/// Graphs `{(x, f(x))}` of all bijections `f` of `E`.
pub fn graph(labels: &[String]) -> Result<TestSpace> {
    let n = labels.len();
    if n == 0 {
        return Err(Error::EmptySet);
    }
    let limits = Limits::current();
    let count = (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k));
    if count.is_none_or(|c| c > limits.max_bijections) {
        return Err(Error::cap("number of bijections", limits.max_bijections));
    }
    let tests = Perm::all(n)
        .into_iter()
        .map(|f| (0..n).map(|x| x * n + f.apply(x)).collect())
        .collect();
    TestSpace::new(format!("graph({n})"), pair_labels(labels), tests)
}

/// Three outcomes, three two-outcome tests arranged in a cycle.
pub fn triangle() -> TestSpace {
    TestSpace::new("triangle", letters(3), vec![vec![0, 1], vec![1, 2], vec![0, 2]]).expect("valid")
}

/// Two disjoint binary tests `{a0, a1}` and `{b0, b1}`.
pub fn binary_pair() -> TestSpace {
    let labels = ["a0", "a1", "b0", "b1"].map(String::from).to_vec();
    TestSpace::new("bits", labels, vec![vec![0, 1], vec![2, 3]]).expect("valid")
}

/// Outcomes `X ⊔ Y`; tests `E ∪ F`. Outcomes of `b` are shifted by `|X|`.
///
/// Clashing labels are tagged `L:`/`R:` on both sides.
pub fn direct_sum(a: &TestSpace, b: &TestSpace) -> Result<TestSpace> {
    let m = a.outcome_count();
    let left: FxHashSet<&String> = a.labels.iter().collect();
    let clash = b.labels.iter().any(|l| left.contains(l));
    let labels: Vec<String> = if clash {
        a.labels.iter().map(|l| format!("L:{l}")).chain(b.labels.iter().map(|l| format!("R:{l}"))).collect()
    } else {
        a.labels.iter().chain(&b.labels).cloned().collect()
    };
    let count = a.test_count().saturating_mul(b.test_count());
    let limits = Limits::current();
    if count > limits.max_assignments {
        return Err(Error::cap("direct-sum test count", limits.max_assignments));
    }
    let mut tests = Vec::with_capacity(count);
    for e in &a.tests {
        for f in &b.tests {
            tests.push(e.iter().copied().chain(f.iter().map(|y| y + m)).collect());
        }
    }
    TestSpace::new(format!("{}+{}", a.name, b.name), labels, tests)
}
