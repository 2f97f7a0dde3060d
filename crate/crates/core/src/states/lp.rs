//! Exact phase-one simplex with Bland's rule.

use num_traits::{Signed, Zero};

use super::linalg::dot;
use crate::error::{Error, Result};
use crate::rational::Q;

/// Outcome of `M x = b, x ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<Q>),
    /// Farkas certificate `y` with `yᵀM ≤ 0` and `yᵀb > 0`.
    Infeasible(Vec<Q>),
}

/// Decide `M x = b, x ≥ 0` (with `M` given row-wise over `k` columns).
/// Either answer is verified exactly before it is returned.
pub fn nonneg_feasibility(m: &[Vec<Q>], b: &[Q], k: usize) -> Result<Feasibility> {
    let r = m.len();
    if b.len() != r || m.iter().any(|row| row.len() != k) {
        return Err(Error::DimensionMismatch { expected: r, found: b.len() });
    }
    let sign: Vec<bool> = b.iter().map(|x| x.is_negative()).collect();
    let width = k + r;
    // tableau rows: [M' | I | b']
    let mut t: Vec<Vec<Q>> = (0..r)
        .map(|i| {
            let flip = |x: &Q| if sign[i] { -x.clone() } else { x.clone() };
            let mut row: Vec<Q> = m[i].iter().map(flip).collect();
            row.extend((0..r).map(|j| if i == j { Q::from_integer(1.into()) } else { Q::zero() }));
            row.push(flip(&b[i]));
            row
        })
        .collect();
    let mut basis: Vec<usize> = (k..width).collect();
    // reduced costs of the phase-one objective Σ artificials, plus −value
    let mut cost = vec![Q::zero(); width + 1];
    for row in &t {
        for j in 0..k {
            cost[j] -= &row[j];
        }
        cost[width] -= &row[width];
    }
    loop {
        let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) else { break };
        let mut leave: Option<usize> = None;
        for i in 0..r {
            if !t[i][enter].is_positive() {
                continue;
            }
            let better = match leave {
                None => true,
                Some(l) => {
                    let lhs = &t[i][width] * &t[l][enter];
                    let rhs = &t[l][width] * &t[i][enter];
                    lhs < rhs || (lhs == rhs && basis[i] < basis[l])
                }
            };
            if better {
                leave = Some(i);
            }
        }
        let l = leave.expect("phase-one objective is bounded below");
        let inv = t[l][enter].recip();
        for x in t[l].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = t[l].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != l && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let f = cost[enter].clone();
        for (x, y) in cost.iter_mut().zip(&pivot) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
        basis[l] = enter;
    }
    if cost[width].is_zero() {
        let mut x = vec![Q::zero(); k];
        for (i, &v) in basis.iter().enumerate() {
            if v < k {
                x[v] = t[i][width].clone();
            }
        }
        let ok = m.iter().zip(b).all(|(row, bi)| dot(row, &x) == *bi) && x.iter().all(|v| !v.is_negative());
        if !ok {
            return Err(Error::WitnessNotFound("simplex solution failed verification".into()));
        }
        return Ok(Feasibility::Feasible(x));
    }
    // y' = 1 − (reduced cost of each artificial); undo the row flips
    let y: Vec<Q> = (0..r)
        .map(|i| {
            let yi = Q::from_integer(1.into()) - &cost[k + i];
            if sign[i] {
                -yi
            } else {
                yi
            }
        })
        .collect();
    let column_ok = (0..k).all(|j| {
        let col: Vec<Q> = m.iter().map(|row| row[j].clone()).collect();
        !dot(&y, &col).is_positive()
    });
    if !column_ok || !dot(&y, b).is_positive() {
        return Err(Error::WitnessNotFound("Farkas certificate failed verification".into()));
    }
    Ok(Feasibility::Infeasible(y))
}

/// Whether a point lies in the convex hull of some generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// Convex coefficients, one per generator.
    Inside(Vec<Q>),
    /// `normal·p + offset > 0 ≥ normal·g + offset` for every generator `g`.
    Outside { normal: Vec<Q>, offset: Q },
}

impl Membership {
    pub fn is_inside(&self) -> bool {
        matches!(self, Membership::Inside(_))
    }
}

pub fn membership(point: &[Q], generators: &[Vec<Q>]) -> Result<Membership> {
    let d = point.len();
    if let Some(g) = generators.iter().find(|g| g.len() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: g.len() });
    }
    let k = generators.len();
    let mut m: Vec<Vec<Q>> = (0..d).map(|i| generators.iter().map(|g| g[i].clone()).collect()).collect();
    m.push(vec![Q::from_integer(1.into()); k]);
    let mut b = point.to_vec();
    b.push(Q::from_integer(1.into()));
    Ok(match nonneg_feasibility(&m, &b, k)? {
        Feasibility::Feasible(lambda) => Membership::Inside(lambda),
        Feasibility::Infeasible(mut y) => {
            let offset = y.pop().expect("ones row");
            Membership::Outside { normal: y, offset }
        }
    })
}
