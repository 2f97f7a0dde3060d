//! Products of test spaces and bipartite states.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rational::{format_q, Q};
use crate::states::{self, membership, Feasibility, Membership, Polytope, StatePolytope, Weight};
use crate::testspace::TestSpace;

fn pair_labels(a: &TestSpace, b: &TestSpace) -> Vec<String> {
    let mut out = Vec::with_capacity(a.outcome_count() * b.outcome_count());
    for x in a.labels() {
        for y in b.labels() {
            out.push(format!("({x},{y})"));
        }
    }
    out
}

/// Index of `(x, y)` in `X × Y`.
pub fn pair_index(b: &TestSpace, x: usize, y: usize) -> usize {
    x * b.outcome_count() + y
}

/// Product tests `E × F` on `X × Y`.
pub fn cartesian_product(a: &TestSpace, b: &TestSpace) -> Result<TestSpace> {
    let limits = Limits::current();
    let count = a.test_count().saturating_mul(b.test_count());
    if count > limits.max_assignments {
        return Err(Error::cap("product test count", limits.max_assignments));
    }
    let mut tests = Vec::with_capacity(count);
    for e in a.tests() {
        for f in b.tests() {
            tests.push(product_test(b, e, f));
        }
    }
    TestSpace::new(format!("{}x{}", a.name(), b.name()), pair_labels(a, b), tests)
}

fn product_test(b: &TestSpace, e: &[usize], f: &[usize]) -> Vec<usize> {
    e.iter().flat_map(|&x| f.iter().map(move |&y| pair_index(b, x, y))).collect()
}

/// Two-stage tests in both orders: `⋃_{x∈E} {x} × F_x` and `⋃_{y∈F} E_y × {y}`.
pub fn fr_product(a: &TestSpace, b: &TestSpace) -> Result<TestSpace> {
    let limits = Limits::current();
    let mut budget = 0usize;
    let mut count = |first: &TestSpace, second: &TestSpace| {
        for e in first.tests() {
            let c = (second.test_count() as u128).saturating_pow(e.len() as u32);
            budget = budget.saturating_add(usize::try_from(c).unwrap_or(usize::MAX));
        }
    };
    count(a, b);
    count(b, a);
    if budget > limits.max_assignments {
        return Err(Error::cap("two-stage assignment count", limits.max_assignments));
    }
    let mut tests = Vec::with_capacity(budget);
    for e in a.tests() {
        for_each_assignment(e.len(), b.test_count(), |choice| {
            tests.push(e.iter().zip(choice).flat_map(|(&x, &f)| b.tests()[f].iter().map(move |&y| pair_index(b, x, y))).collect());
        });
    }
    for f in b.tests() {
        for_each_assignment(f.len(), a.test_count(), |choice| {
            tests.push(f.iter().zip(choice).flat_map(|(&y, &e)| a.tests()[e].iter().map(move |&x| pair_index(b, x, y))).collect());
        });
    }
    TestSpace::new(format!("{}{}", a.name(), b.name()), pair_labels(a, b), tests)
}

fn for_each_assignment(slots: usize, choices: usize, mut f: impl FnMut(&[usize])) {
    let mut c = vec![0usize; slots];
    loop {
        f(&c);
        let mut i = slots;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            c[i] += 1;
            if c[i] < choices {
                break;
            }
            c[i] = 0;
        }
    }
}

/// `(α ⊗ β)(x, y) = α(x) β(y)`.
pub fn product_state(alpha: &[Q], beta: &[Q]) -> Weight {
    alpha.iter().flat_map(|a| beta.iter().map(move |b| a * b)).collect()
}

/// A weight on `X × Y` read against two factor spaces.
#[derive(Clone, Debug)]
pub struct BipartiteState<'a> {
    pub a: &'a TestSpace,
    pub b: &'a TestSpace,
    pub joint: Weight,
}

/// Marginal of one outcome differs between two conditioning tests.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignalingWitness {
    /// 1 when the first factor's marginal depends on the second factor's test.
    pub side: u8,
    pub outcome: usize,
    pub tests: (usize, usize),
    pub values: (String, String),
}

impl<'a> BipartiteState<'a> {
    pub fn new(a: &'a TestSpace, b: &'a TestSpace, joint: Weight) -> Result<Self> {
        let n = a.outcome_count() * b.outcome_count();
        if joint.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: joint.len() });
        }
        Ok(BipartiteState { a, b, joint })
    }

    pub fn product(a: &'a TestSpace, b: &'a TestSpace, alpha: &[Q], beta: &[Q], target: Option<&TestSpace>) -> Result<Self> {
        states::validate_weight(a, alpha)?;
        states::validate_weight(b, beta)?;
        let joint = product_state(alpha, beta);
        if let Some(t) = target {
            states::validate_weight(t, &joint)?;
        }
        Self::new(a, b, joint)
    }

    pub fn weight(&self, x: usize, y: usize) -> &Q {
        &self.joint[pair_index(self.b, x, y)]
    }

    /// `ω₁(x | F) = Σ_{y∈F} ω(x, y)`.
    pub fn first_marginal(&self, x: usize, f: usize) -> Q {
        self.b.tests()[f].iter().fold(Q::zero(), |acc, &y| acc + self.weight(x, y))
    }

    /// `ω₂(y | E) = Σ_{x∈E} ω(x, y)`.
    pub fn second_marginal(&self, y: usize, e: usize) -> Q {
        self.a.tests()[e].iter().fold(Q::zero(), |acc, &x| acc + self.weight(x, y))
    }

    pub fn signaling_witness(&self) -> Option<SignalingWitness> {
        for x in 0..self.a.outcome_count() {
            let base = self.first_marginal(x, 0);
            for f in 1..self.b.test_count() {
                let v = self.first_marginal(x, f);
                if v != base {
                    return Some(SignalingWitness { side: 1, outcome: x, tests: (0, f), values: (format_q(&base), format_q(&v)) });
                }
            }
        }
        for y in 0..self.b.outcome_count() {
            let base = self.second_marginal(y, 0);
            for e in 1..self.a.test_count() {
                let v = self.second_marginal(y, e);
                if v != base {
                    return Some(SignalingWitness { side: 2, outcome: y, tests: (0, e), values: (format_q(&base), format_q(&v)) });
                }
            }
        }
        None
    }

    pub fn is_non_signaling(&self) -> bool {
        self.signaling_witness().is_none()
    }

    /// The two marginal states; meaningful when non-signaling.
    pub fn marginals(&self) -> (Weight, Weight) {
        let first = (0..self.a.outcome_count()).map(|x| self.first_marginal(x, 0)).collect();
        let second = (0..self.b.outcome_count()).map(|y| self.second_marginal(y, 0)).collect();
        (first, second)
    }

    /// Convex decomposition over products of factor vertices, or a
    /// separating functional.
    pub fn separability(&self, va: &[Weight], vb: &[Weight]) -> Result<Separability> {
        let limits = Limits::current();
        if va.len().saturating_mul(vb.len()) > limits.max_assignments {
            return Err(Error::cap("product vertex pairs", limits.max_assignments));
        }
        let pairs: Vec<(usize, usize)> = (0..va.len()).flat_map(|i| (0..vb.len()).map(move |j| (i, j))).collect();
        let gens: Vec<Weight> = pairs.iter().map(|&(i, j)| product_state(&va[i], &vb[j])).collect();
        Ok(match membership(&self.joint, &gens)? {
            Membership::Inside(l) => Separability::Separable(
                pairs.into_iter().zip(l).filter(|(_, c)| !c.is_zero()).map(|((i, j), c)| (i, j, c)).collect(),
            ),
            Membership::Outside { normal, offset } => Separability::Entangled { normal, offset },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separability {
    /// `(vertex of A, vertex of B, coefficient)`, coefficients positive.
    Separable(Vec<(usize, usize, Q)>),
    Entangled { normal: Vec<Q>, offset: Q },
}

impl Separability {
    pub fn is_separable(&self) -> bool {
        matches!(self, Separability::Separable(_))
    }
}

/// Non-signaling states on `𝔄 × 𝔅`: product-test sums plus marginal
/// equalities across conditioning tests.
pub fn non_signaling_polytope(a: &TestSpace, b: &TestSpace) -> Result<StatePolytope> {
    let limits = Limits::current();
    let prod = cartesian_product(a, b)?;
    let (mut rows, mut rhs) = states::test_constraints(&prod);
    let n = prod.outcome_count();
    let marginal_row = |cells: Vec<usize>, minus: Vec<usize>| {
        let mut r = vec![Q::zero(); n];
        for c in cells {
            r[c] += Q::one();
        }
        for c in minus {
            r[c] -= Q::one();
        }
        r
    };
    for x in 0..a.outcome_count() {
        for f in 1..b.test_count() {
            let lhs = b.tests()[0].iter().map(|&y| pair_index(b, x, y)).collect();
            let rh = b.tests()[f].iter().map(|&y| pair_index(b, x, y)).collect();
            rows.push(marginal_row(lhs, rh));
            rhs.push(Q::zero());
        }
    }
    for y in 0..b.outcome_count() {
        for e in 1..a.test_count() {
            let lhs = a.tests()[0].iter().map(|&x| pair_index(b, x, y)).collect();
            let rh = a.tests()[e].iter().map(|&x| pair_index(b, x, y)).collect();
            rows.push(marginal_row(lhs, rh));
            rhs.push(Q::zero());
        }
    }
    Ok(StatePolytope::from_polytope(Polytope::new(n, rows, rhs, &limits)?))
}

/// Outcome of the two tensor-product clauses for a container.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorAxioms {
    /// First container vertex whose restriction fails, with the reason.
    pub restriction_failure: Option<(usize, String)>,
    /// First pair of factor vertices whose product has no extension.
    pub product_failure: Option<(usize, usize)>,
}

impl TensorAxioms {
    pub fn holds(&self) -> bool {
        self.restriction_failure.is_none() && self.product_failure.is_none()
    }
}

/// Check that restrictions of container states to `X × Y` are
/// non-signaling states, and that each product of factor vertices extends
/// to a container state. `embed[x·|Y| + y]` is the container outcome of
/// `(x, y)`.
pub fn check_tensor_axioms(a: &TestSpace, b: &TestSpace, container: &TestSpace, embed: &[usize]) -> Result<TensorAxioms> {
    let n = a.outcome_count() * b.outcome_count();
    if embed.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: embed.len() });
    }
    let mut seen = vec![false; container.outcome_count()];
    for &e in embed {
        if e >= seen.len() || std::mem::replace(&mut seen[e], true) {
            return Err(Error::MorphismMismatch("embedding is not injective".into()));
        }
    }
    let prod = cartesian_product(a, b)?;
    let cstates = StatePolytope::of(container)?;
    let mut restriction_failure = None;
    for (k, w) in cstates.vertices().iter().enumerate() {
        let r: Weight = embed.iter().map(|&e| w[e].clone()).collect();
        if let Err(e) = states::validate_weight(&prod, &r) {
            restriction_failure = Some((k, e.to_string()));
            break;
        }
        if let Some(s) = BipartiteState::new(a, b, r)?.signaling_witness() {
            restriction_failure = Some((k, format!("signals: {s:?}")));
            break;
        }
    }
    let (va, vb) = (StatePolytope::of(a)?, StatePolytope::of(b)?);
    let mut product_failure = None;
    'outer: for (i, alpha) in va.vertices().iter().enumerate() {
        for (j, beta) in vb.vertices().iter().enumerate() {
            if !extends_to_state(container, embed, &product_state(alpha, beta))? {
                product_failure = Some((i, j));
                break 'outer;
            }
        }
    }
    Ok(TensorAxioms { restriction_failure, product_failure })
}

/// Whether weights fixed on the embedded outcomes extend to a state.
pub fn extends_to_state(space: &TestSpace, embed: &[usize], values: &[Q]) -> Result<bool> {
    let mut fixed: Vec<Option<&Q>> = vec![None; space.outcome_count()];
    for (&e, v) in embed.iter().zip(values) {
        fixed[e] = Some(v);
    }
    let free: Vec<usize> = (0..space.outcome_count()).filter(|&x| fixed[x].is_none()).collect();
    let mut col = vec![usize::MAX; space.outcome_count()];
    for (k, &x) in free.iter().enumerate() {
        col[x] = k;
    }
    let mut rows = Vec::with_capacity(space.test_count());
    let mut rhs = Vec::with_capacity(space.test_count());
    for t in space.tests() {
        let mut row = vec![Q::zero(); free.len()];
        let mut r = Q::one();
        for &x in t {
            match fixed[x] {
                Some(v) => r -= v,
                None => row[col[x]] = Q::one(),
            }
        }
        rows.push(row);
        rhs.push(r);
    }
    if free.is_empty() {
        return Ok(rhs.iter().all(|r| r.is_zero()) && values.iter().all(|v| *v >= Q::zero()));
    }
    Ok(matches!(states::nonneg_feasibility(&rows, &rhs, free.len())?, Feasibility::Feasible(_)))
}
