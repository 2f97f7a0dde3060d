//! Dense exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Q;

pub type Matrix = Vec<Vec<Q>>;

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Solutions of `A x = b` as `p + N t`, or `None` when inconsistent.
/// `N` is returned column-wise: each entry is one nullspace basis vector.
pub fn solve_affine(a: &[Vec<Q>], b: &[Q], n: usize) -> Option<(Vec<Q>, Vec<Vec<Q>>)> {
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| row.iter().cloned().chain(std::iter::once(rhs.clone())).collect())
        .collect();
    let pivots = rref(&mut m);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut p = vec![Q::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        p[c] = m[r][n].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); n];
            v[f] = Q::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m[r][f].clone();
            }
            v
        })
        .collect();
    Some((p, basis))
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(a: &[Vec<Q>]) -> Option<Matrix> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Indices of a maximal linearly independent subfamily, chosen greedily.
pub fn independent_subset(vectors: &[Vec<Q>]) -> Vec<usize> {
    let mut chosen = Vec::new();
    let mut basis: Matrix = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if rank(&trial) > basis.len() {
            basis = trial;
            chosen.push(i);
        }
    }
    chosen
}

/// Dimension of the affine hull of a point set (`-1` encoded as `None`).
pub fn affine_dimension(points: &[Vec<Q>]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Matrix = rest
        .iter()
        .map(|p| p.iter().zip(first).map(|(x, y)| x - y).collect())
        .collect();
    Some(rank(&diffs))
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// Positive rescaling of a rational vector to a primitive integer vector.
pub fn primitive(v: &[Q]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(lcm.clone())).to_integer()).collect();
    normalize(ints)
}

/// Divide an integer vector by the gcd of its entries.
pub fn normalize(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

pub fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| if x.is_zero() || y.is_zero() { acc } else { acc + x * y })
}

pub fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    #[test]
    fn affine_solution_and_nullspace() {
        // x + y = 1, y + z = 1
        let a = vec![vec![qi(1), qi(1), qi(0)], vec![qi(0), qi(1), qi(1)]];
        let (p, n) = solve_affine(&a, &[qi(1), qi(1)], 3).unwrap();
        assert_eq!(n.len(), 1);
        for row in &a {
            assert_eq!(dot(row, &p), qi(1));
            assert_eq!(dot(row, &n[0]), qi(0));
        }
        assert!(solve_affine(&[vec![qi(1)], vec![qi(1)]], &[qi(1), qi(2)], 1).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let a = vec![vec![qi(2), qi(1)], vec![qi(1), qi(1)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(inv, vec![vec![qi(1), qi(-1)], vec![qi(-1), qi(2)]]);
        assert!(inverse(&[vec![qi(1), qi(2)], vec![qi(2), qi(4)]]).is_none());
    }

    #[test]
    fn primitive_vectors() {
        let v = primitive(&[q(1, 2), q(-3, 4), qi(0)]);
        assert_eq!(v, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }

    #[test]
    fn ranks_and_dimensions() {
        let pts = vec![vec![qi(1), qi(0)], vec![qi(0), qi(1)], vec![q(1, 2), q(1, 2)]];
        assert_eq!(affine_dimension(&pts), Some(1));
        assert_eq!(independent_subset(&pts), vec![0, 1]);
        assert_eq!(affine_dimension(&[]), None);
    }
}
