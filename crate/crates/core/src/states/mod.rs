//! Probability weights and the state polytope of a test space.

pub mod linalg;
pub mod lp;
pub mod polytope;

use num_traits::{One, Signed, Zero};

pub use lp::{membership, nonneg_feasibility, Feasibility, Membership};
pub use polytope::{enumerate_vertices, Polytope};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rational::{format_q, Q};
use crate::testspace::TestSpace;

/// Weights indexed like the outcomes of a space.
pub type Weight = Vec<Q>;

/// One 0/1 row per test, right-hand side 1.
pub fn test_constraints(space: &TestSpace) -> (Vec<Vec<Q>>, Vec<Q>) {
    let n = space.outcome_count();
    let rows = space
        .tests()
        .iter()
        .map(|t| {
            let mut r = vec![Q::zero(); n];
            for &x in t {
                r[x] = Q::one();
            }
            r
        })
        .collect();
    (rows, vec![Q::one(); space.test_count()])
}

/// `Ω(𝔄)` with its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatePolytope {
    polytope: Polytope,
}

impl StatePolytope {
    pub fn of(space: &TestSpace) -> Result<Self> {
        Self::with_limits(space, &Limits::current())
    }

    pub fn with_limits(space: &TestSpace, limits: &Limits) -> Result<Self> {
        let (rows, rhs) = test_constraints(space);
        Ok(StatePolytope { polytope: Polytope::new(space.outcome_count(), rows, rhs, limits)? })
    }

    /// Wrap an already enumerated polytope on the outcomes of some space.
    pub fn from_polytope(polytope: Polytope) -> Self {
        StatePolytope { polytope }
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn vertices(&self) -> &[Weight] {
        &self.polytope.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.polytope.is_empty()
    }

    pub fn affine_dim(&self) -> Option<usize> {
        self.polytope.affine_dim()
    }

    /// `|X|` minus the rank of the test equalities.
    pub fn equality_codimension(&self) -> usize {
        self.polytope.dim - self.polytope.equality_rank()
    }

    pub fn contains(&self, w: &[Q]) -> bool {
        self.polytope.contains(w)
    }
}

/// Sum of `weights` over the outcomes of `event`.
pub fn probability(weights: &[Q], event: impl IntoIterator<Item = usize>) -> Q {
    event.into_iter().fold(Q::zero(), |acc, x| acc + &weights[x])
}

/// Check that `weights` is a probability weight on `space`.
pub fn validate_weight(space: &TestSpace, weights: &[Q]) -> Result<()> {
    if weights.len() != space.outcome_count() {
        return Err(Error::DimensionMismatch { expected: space.outcome_count(), found: weights.len() });
    }
    for (x, w) in weights.iter().enumerate() {
        if w.is_negative() || *w > Q::one() {
            return Err(Error::RangeViolated { outcome: x, value: format_q(w) });
        }
    }
    for (i, t) in space.tests().iter().enumerate() {
        let s = probability(weights, t.iter().copied());
        if !s.is_one() {
            return Err(Error::TestSumViolated { test: i, sum: format_q(&s) });
        }
    }
    Ok(())
}

/// All 0/1-valued states, in lexicographic order.
pub fn dispersion_free_states(space: &TestSpace) -> Result<Vec<Weight>> {
    let limits = Limits::current();
    let n = space.outcome_count();
    let mut tests_of = vec![Vec::new(); n];
    for (i, t) in space.tests().iter().enumerate() {
        for &x in t {
            tests_of[x].push(i);
        }
    }
    let mut ones = vec![0usize; space.test_count()];
    let mut open: Vec<usize> = space.tests().iter().map(|t| t.len()).collect();
    let mut chosen = vec![false; n];
    let mut out = Vec::new();
    struct Ctx<'a> {
        tests_of: &'a [Vec<usize>],
        cap: usize,
    }
    fn go(
        x: usize,
        ctx: &Ctx,
        ones: &mut [usize],
        open: &mut [usize],
        chosen: &mut [bool],
        out: &mut Vec<Weight>,
    ) -> Result<()> {
        if x == chosen.len() {
            if out.len() >= ctx.cap {
                return Err(Error::cap("dispersion-free state count", ctx.cap));
            }
            out.push(chosen.iter().map(|&c| if c { Q::one() } else { Q::zero() }).collect());
            return Ok(());
        }
        for value in [false, true] {
            let ts = &ctx.tests_of[x];
            let ok = if value {
                ts.iter().all(|&t| ones[t] == 0)
            } else {
                ts.iter().all(|&t| ones[t] == 1 || open[t] > 1)
            };
            if !ok {
                continue;
            }
            for &t in ts {
                open[t] -= 1;
                if value {
                    ones[t] += 1;
                }
            }
            chosen[x] = value;
            go(x + 1, ctx, ones, open, chosen, out)?;
            for &t in ts {
                open[t] += 1;
                if value {
                    ones[t] -= 1;
                }
            }
        }
        chosen[x] = false;
        Ok(())
    }
    let ctx = Ctx { tests_of: &tests_of, cap: limits.max_assignments };
    go(0, &ctx, &mut ones, &mut open, &mut chosen, &mut out)?;
    Ok(out)
}

/// `V = span(Ω)` with the order unit and outcome effects in coordinates of a
/// basis of linearly independent vertices.
///
/// A functional is stored by its values on the basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSpan {
    pub basis: Vec<Weight>,
    pub order_unit: Vec<Q>,
    /// `effects[x][k] = f_x(basis[k])`.
    pub effects: Vec<Vec<Q>>,
}

impl LinearSpan {
    pub fn of(states: &StatePolytope) -> Result<Self> {
        if states.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        let idx = linalg::independent_subset(states.vertices());
        let basis: Vec<Weight> = idx.iter().map(|&i| states.vertices()[i].clone()).collect();
        let n = basis[0].len();
        // every basis vector is a state, so u is 1 on each of them
        let order_unit = vec![Q::one(); basis.len()];
        let effects = (0..n).map(|x| basis.iter().map(|b| b[x].clone()).collect()).collect();
        Ok(LinearSpan { basis, order_unit, effects })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ_{x∈E} f_x = u` on the span, for every test `E`.
    pub fn order_unit_identity_holds(&self, space: &TestSpace) -> bool {
        space.tests().iter().all(|t| {
            (0..self.dim()).all(|k| {
                let s = t.iter().fold(Q::zero(), |acc, &x| acc + &self.effects[x][k]);
                s == self.order_unit[k]
            })
        })
    }
}

/// First outcome whose face `{α : α(x) = 1}` is not a single state, with
/// the number of vertices on that face.
pub fn sharpness_violation(space: &TestSpace, states: &StatePolytope) -> Option<(usize, usize)> {
    (0..space.outcome_count()).find_map(|x| {
        let count = states.vertices().iter().filter(|v| v[x].is_one()).count();
        (count != 1).then_some((x, count))
    })
}

/// First pair of outcomes on which every state agrees.
pub fn indistinguishable_pair(space: &TestSpace, states: &StatePolytope) -> Option<(usize, usize)> {
    let n = space.outcome_count();
    for x in 0..n {
        for y in x + 1..n {
            if states.vertices().iter().all(|v| v[x] == v[y]) {
                return Some((x, y));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};
    use crate::testspace::{classical, graph, grid, letters, triangle};

    #[test]
    fn triangle_has_one_half_state() {
        let s = StatePolytope::of(&triangle()).unwrap();
        assert_eq!(s.vertices(), &[vec![q(1, 2); 3]]);
        assert_eq!(s.affine_dim(), Some(0));
        assert!(dispersion_free_states(&triangle()).unwrap().is_empty());
        assert_eq!(sharpness_violation(&triangle(), &s), Some((0, 0)));
        assert_eq!(indistinguishable_pair(&triangle(), &s), Some((0, 1)));
    }

    #[test]
    fn classical_simplex() {
        let c = classical(&letters(3)).unwrap();
        let s = StatePolytope::of(&c).unwrap();
        assert_eq!(s.vertices().len(), 3);
        assert_eq!(s.affine_dim(), Some(2));
        assert_eq!(dispersion_free_states(&c).unwrap().len(), 3);
        assert_eq!(sharpness_violation(&c, &s), None);
        let span = LinearSpan::of(&StatePolytope::of(&classical(&letters(2)).unwrap()).unwrap()).unwrap();
        assert_eq!(span.dim(), 2);
    }

    #[test]
    fn small_grid_and_graph() {
        let g3 = grid(&letters(3)).unwrap();
        let s = StatePolytope::of(&g3).unwrap();
        assert_eq!(s.vertices().len(), 6);
        assert_eq!(s.affine_dim(), Some(4));
        let g2 = grid(&letters(2)).unwrap();
        let s2 = StatePolytope::of(&g2).unwrap();
        assert_eq!(LinearSpan::of(&s2).unwrap().dim(), 2);
        assert_eq!(sharpness_violation(&g2, &s2), None);
        let h2 = graph(&letters(2)).unwrap();
        let t2 = StatePolytope::of(&h2).unwrap();
        let span = LinearSpan::of(&t2).unwrap();
        assert_eq!(span.dim(), 3);
        assert!(span.order_unit_identity_holds(&h2));
        assert_eq!(dispersion_free_states(&h2).unwrap().len(), 4);
        assert_eq!(indistinguishable_pair(&h2, &t2), None);
    }

    #[test]
    fn weight_validation() {
        let c = classical(&letters(2)).unwrap();
        assert!(validate_weight(&c, &[q(1, 2), q(1, 2)]).is_ok());
        let g = grid(&letters(2)).unwrap();
        assert!(validate_weight(&g, &[q(1, 3), q(2, 3), q(2, 3), q(1, 3)]).is_ok());
        let err = validate_weight(&g, &[qi(1), qi(1), qi(0), qi(0)]).unwrap_err();
        assert!(matches!(err, Error::TestSumViolated { .. }));
        let err = validate_weight(&c, &[qi(2), qi(-1)]).unwrap_err();
        assert!(matches!(err, Error::RangeViolated { outcome: 0, .. }));
    }
}
