//! Vertex enumeration for `{x : A x = b, x ≥ 0}` by the double description
//! method in exact integer arithmetic.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::{self, int_dot, normalize, primitive, Matrix};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::rational::Q;

/// A polytope in H-representation together with its enumerated vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    pub dim: usize,
    pub equalities: Matrix,
    pub rhs: Vec<Q>,
    /// Sorted lexicographically.
    pub vertices: Vec<Vec<Q>>,
}

impl Polytope {
    pub fn new(dim: usize, equalities: Matrix, rhs: Vec<Q>, limits: &Limits) -> Result<Self> {
        let vertices = enumerate_vertices(dim, &equalities, &rhs, limits)?;
        Ok(Polytope { dim, equalities, rhs, vertices })
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Dimension of the affine hull of the vertices; `None` when empty.
    pub fn affine_dim(&self) -> Option<usize> {
        linalg::affine_dimension(&self.vertices)
    }

    pub fn equality_rank(&self) -> usize {
        linalg::rank(&self.equalities)
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        x.len() == self.dim
            && x.iter().all(|v| !v.is_negative())
            && self.equalities.iter().zip(&self.rhs).all(|(row, b)| linalg::dot(row, x) == *b)
    }

    /// Each vertex satisfies the constraints and its tight nonnegativity
    /// constraints, together with the equalities, pin it down uniquely.
    pub fn vertices_are_extreme(&self) -> bool {
        self.vertices.iter().all(|v| {
            if !self.contains(v) {
                return false;
            }
            let mut rows = self.equalities.clone();
            for (i, x) in v.iter().enumerate() {
                if x.is_zero() {
                    let mut e = vec![Q::zero(); self.dim];
                    e[i] = Q::from_integer(1.into());
                    rows.push(e);
                }
            }
            linalg::rank(&rows) == self.dim
        })
    }
}

struct Ray {
    v: Vec<BigInt>,
    zeros: BitSet,
}

/// Vertices of `{x ∈ ℚⁿ : A x = b, x ≥ 0}`, sorted lexicographically.
///
/// The equalities are solved as `x = p + N t`; the inequalities `p + N t ≥ 0`
/// are homogenized with a leading coordinate `t₀ ≥ 0`, and the extreme rays
/// of the resulting pointed cone with `t₀ > 0` are the vertices. The
/// polytope must be bounded, which holds whenever every coordinate appears
/// with positive coefficient in some equality with positive right-hand side.
pub fn enumerate_vertices(n: usize, a: &[Vec<Q>], b: &[Q], limits: &Limits) -> Result<Vec<Vec<Q>>> {
    if n > limits.max_vertex_dim {
        return Err(Error::cap("vertex-enumeration dimension", limits.max_vertex_dim));
    }
    if a.len() != b.len() || a.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: a.first().map_or(0, |r| r.len()) });
    }
    let Some((p, basis)) = linalg::solve_affine(a, b, n) else {
        return Ok(Vec::new());
    };
    let d = basis.len();
    let width = d + 1;

    // row 0 is t₀ ≥ 0, row i + 1 is x_i ≥ 0
    let mut rational_rows: Matrix = Vec::with_capacity(n + 1);
    let mut unit = vec![Q::zero(); width];
    unit[0] = Q::from_integer(1.into());
    rational_rows.push(unit);
    for i in 0..n {
        let mut row = Vec::with_capacity(width);
        row.push(p[i].clone());
        row.extend(basis.iter().map(|col| col[i].clone()));
        rational_rows.push(row);
    }
    let rows: Vec<Vec<BigInt>> = rational_rows.iter().map(|r| primitive(r)).collect();
    let m = rows.len();

    let mut initial = Vec::with_capacity(width);
    let mut chosen: Matrix = Vec::new();
    for (k, r) in rational_rows.iter().enumerate() {
        if r.iter().all(|x| x.is_zero()) {
            continue;
        }
        let mut trial = chosen.clone();
        trial.push(r.clone());
        if linalg::rank(&trial) > chosen.len() {
            chosen = trial;
            initial.push(k);
            if initial.len() == width {
                break;
            }
        }
    }
    if initial.len() < width {
        return Err(Error::InvalidSpace("constraint cone has a lineality space".into()));
    }
    let inv = linalg::inverse(&chosen).expect("rows are independent");
    let mut rays: Vec<Ray> = (0..width)
        .map(|j| {
            let col: Vec<Q> = inv.iter().map(|row| row[j].clone()).collect();
            let v = primitive(&col);
            let zeros = tight_set(&rows, &v, m);
            Ray { v, zeros }
        })
        .collect();

    let mut processed = BitSet::from_indices(m, initial.iter().copied());
    for k in 0..m {
        if processed.contains(k) {
            continue;
        }
        processed.insert(k);
        let values: Vec<BigInt> = rays.iter().map(|r| int_dot(&rows[k], &r.v)).collect();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for (i, s) in values.iter().enumerate() {
            if s.is_positive() {
                pos.push(i);
            } else if s.is_negative() {
                neg.push(i);
            }
        }
        if neg.is_empty() {
            continue;
        }
        let mut fresh = Vec::new();
        for &i in &pos {
            for &j in &neg {
                let common = rays[i].zeros.intersection(&rays[j].zeros).intersection(&processed);
                if common.len() + 2 < width {
                    continue;
                }
                let dominated = rays.iter().enumerate().any(|(l, r)| {
                    l != i && l != j && common.is_subset(&r.zeros)
                });
                if dominated {
                    continue;
                }
                let (si, sj) = (&values[i], &values[j]);
                let v: Vec<BigInt> = rays[i].v.iter().zip(&rays[j].v).map(|(x, y)| si * y - sj * x).collect();
                let v = normalize(v);
                let zeros = tight_set(&rows, &v, m);
                fresh.push(Ray { v, zeros });
            }
        }
        let mut keep: Vec<Ray> = rays
            .into_iter()
            .zip(&values)
            .filter(|(_, s)| !s.is_negative())
            .map(|(r, _)| r)
            .collect();
        keep.extend(fresh);
        rays = keep;
    }

    let mut vertices: Vec<Vec<Q>> = rays
        .iter()
        .filter(|r| r.v[0].is_positive())
        .map(|r| {
            let t0 = Q::from_integer(r.v[0].clone());
            let t: Vec<Q> = r.v[1..].iter().map(|x| Q::from_integer(x.clone()) / &t0).collect();
            (0..n)
                .map(|i| &p[i] + basis.iter().zip(&t).fold(Q::zero(), |acc, (col, tj)| acc + &col[i] * tj))
                .collect()
        })
        .collect();
    vertices.sort();
    vertices.dedup();
    Ok(vertices)
}

fn tight_set(rows: &[Vec<BigInt>], v: &[BigInt], m: usize) -> BitSet {
    BitSet::from_indices(m, rows.iter().enumerate().filter(|(_, r)| int_dot(r, v).is_zero()).map(|(k, _)| k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    #[test]
    fn simplex_vertices() {
        let v = enumerate_vertices(3, &[vec![qi(1), qi(1), qi(1)]], &[qi(1)], &Limits::default()).unwrap();
        assert_eq!(v, vec![
            vec![qi(0), qi(0), qi(1)],
            vec![qi(0), qi(1), qi(0)],
            vec![qi(1), qi(0), qi(0)],
        ]);
    }

    #[test]
    fn point_and_empty_cases() {
        // x + y = 1, y + z = 1, x + z = 1
        let a = vec![vec![qi(1), qi(1), qi(0)], vec![qi(0), qi(1), qi(1)], vec![qi(1), qi(0), qi(1)]];
        let v = enumerate_vertices(3, &a, &[qi(1), qi(1), qi(1)], &Limits::default()).unwrap();
        assert_eq!(v, vec![vec![q(1, 2), q(1, 2), q(1, 2)]]);
        // x = 1, x + y = 0 has no nonnegative solution
        let a = vec![vec![qi(1), qi(0)], vec![qi(1), qi(1)]];
        assert!(enumerate_vertices(2, &a, &[qi(1), qi(0)], &Limits::default()).unwrap().is_empty());
        // inconsistent system
        let a = vec![vec![qi(1)], vec![qi(1)]];
        assert!(enumerate_vertices(1, &a, &[qi(1), qi(0)], &Limits::default()).unwrap().is_empty());
    }

    #[test]
    fn square_from_two_tests() {
        // x0 + x1 = 1, x2 + x3 = 1: a square with 4 vertices
        let a = vec![vec![qi(1), qi(1), qi(0), qi(0)], vec![qi(0), qi(0), qi(1), qi(1)]];
        let p = Polytope::new(4, a, vec![qi(1), qi(1)], &Limits::default()).unwrap();
        assert_eq!(p.vertices.len(), 4);
        assert_eq!(p.affine_dim(), Some(2));
        assert!(p.vertices_are_extreme());
    }

    #[test]
    fn dimension_cap() {
        let limits = Limits { max_vertex_dim: 2, ..Limits::default() };
        let err = enumerate_vertices(3, &[vec![qi(1), qi(1), qi(1)]], &[qi(1)], &limits).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }
}
