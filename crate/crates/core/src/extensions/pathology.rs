//! Concrete failures of the grid and graph tensors at small sizes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::products::{BipartiteState, SignalingWitness};
use crate::rational::{format_q, one, zero, Q};
use crate::states::{probability, validate_weight};
use crate::testspace::{graph, grid, letters, TestSpace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignalingArtifact {
    /// The permutation of `A × B` defining the dispersion-free state.
    pub permutation: Vec<(String, String)>,
    pub outcome: String,
    /// Marginal of `outcome` given the two rows of the second factor.
    pub marginals: (String, String),
    pub witness: Option<SignalingWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockArtifact {
    pub row: Vec<String>,
    pub column: Vec<String>,
    pub image: Vec<String>,
    pub is_test: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductStateArtifact {
    pub row_state: Vec<String>,
    pub column_state: Vec<String>,
    pub test: Vec<String>,
    pub sum: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pathologies {
    pub signaling: SignalingArtifact,
    pub block_subgrid: BlockArtifact,
    pub product_state: ProductStateArtifact,
}

impl Pathologies {
    /// Each artifact exhibits the failure it is meant to.
    pub fn all_confirmed(&self) -> bool {
        self.signaling.marginals.0 != self.signaling.marginals.1
            && self.signaling.witness.is_some()
            && !self.block_subgrid.is_test
            && self.product_state.sum != "1/1"
    }
}

struct Carriers {
    na: usize,
    nb: usize,
    a: Vec<String>,
    b: Vec<String>,
    ab: Vec<String>,
}

impl Carriers {
    fn new(na: usize, nb: usize) -> Self {
        let a = letters(na);
        let b: Vec<String> = (1..=nb).map(|i| format!("u{i}")).collect();
        let ab = a.iter().flat_map(|x| b.iter().map(move |y| format!("{x}{y}"))).collect();
        Carriers { na, nb, a, b, ab }
    }

    fn m(&self) -> usize {
        self.na * self.nb
    }

    /// `((x₁, x₂), (y₁, y₂)) ↦ ((x₁, y₁), (x₂, y₂))`.
    fn iota(&self, x: usize, y: usize) -> usize {
        let (x1, x2) = (x / self.na, x % self.na);
        let (y1, y2) = (y / self.nb, y % self.nb);
        (x1 * self.nb + y1) * self.m() + (x2 * self.nb + y2)
    }

    fn pulled_back(&self, w: &[Q]) -> Vec<Q> {
        let mut out = Vec::with_capacity(w.len());
        for x in 0..self.na * self.na {
            for y in 0..self.nb * self.nb {
                out.push(w[self.iota(x, y)].clone());
            }
        }
        out
    }

    fn joint_label(&self, p: usize) -> String {
        let m = self.m();
        format!("({},{})", self.ab[p / m], self.ab[p % m])
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// The three artifacts for `|A| = na`, `|B| = nb` (both at least 2).
pub fn pathology_witnesses(na: usize, nb: usize) -> Result<Pathologies> {
    if na < 2 || nb < 2 {
        return Err(Error::InvalidSpace("pathologies need |A|, |B| ≥ 2".into()));
    }
    let c = Carriers::new(na, nb);
    let m = c.m();
    let (ga, gb, gab) = (grid(&c.a)?, grid(&c.b)?, grid(&c.ab)?);

    // swap a and b over u₂, fix everything else
    let pi: Vec<usize> = (0..m)
        .map(|p| {
            let (x, y) = (p / nb, p % nb);
            let x = if y == 1 && x < 2 { 1 - x } else { x };
            x * nb + y
        })
        .collect();
    let mut omega = vec![zero(); m * m];
    for (p, &q) in pi.iter().enumerate() {
        omega[p * m + q] = one();
    }
    validate_weight(&gab, &omega)?;
    let state = BipartiteState::new(&ga, &gb, c.pulled_back(&omega))?;
    let row = |y: usize| -> usize {
        let test: Vec<usize> = (0..nb).map(|v| y * nb + v).collect();
        gb.tests().iter().position(|t| *t == test).expect("row of the grid")
    };
    let aa = 0;
    let signaling = SignalingArtifact {
        permutation: pi.iter().enumerate().map(|(p, &q)| (c.ab[p].clone(), c.ab[q].clone())).collect(),
        outcome: ga.labels()[aa].clone(),
        marginals: (format_q(&state.first_marginal(aa, row(0))), format_q(&state.first_marginal(aa, row(1)))),
        witness: state.signaling_witness(),
    };

    let row_a: Vec<usize> = (0..na).collect();
    let column_u1: Vec<usize> = (0..nb).map(|x| x * nb).collect();
    let image = sorted(row_a.iter().flat_map(|&x| column_u1.iter().map(|&y| c.iota(x, y)).collect::<Vec<_>>()).collect());
    let block_subgrid = BlockArtifact {
        row: row_a.iter().map(|&x| ga.labels()[x].clone()).collect(),
        column: column_u1.iter().map(|&y| gb.labels()[y].clone()).collect(),
        is_test: gab.test_set_lookup().contains(image.as_slice()),
        image: image.iter().map(|&p| c.joint_label(p)).collect(),
    };

    let (sa, sb, sab) = (graph(&c.a)?, graph(&c.b)?, graph(&c.ab)?);
    let alpha: Vec<Q> = (0..na * na).map(|x| if x / na == 0 { one() } else { zero() }).collect();
    let beta: Vec<Q> = (0..nb * nb).map(|y| if y % nb == 0 { one() } else { zero() }).collect();
    validate_weight(&sa, &alpha)?;
    validate_weight(&sb, &beta)?;
    let mut product = vec![zero(); m * m];
    for (x, a) in alpha.iter().enumerate() {
        for (y, b) in beta.iter().enumerate() {
            product[c.iota(x, y)] = a * b;
        }
    }
    let product_state = worst_test(&sab, &product)
        .map(|(t, sum)| ProductStateArtifact {
            row_state: labels_where(&sa, &alpha),
            column_state: labels_where(&sb, &beta),
            test: t.iter().map(|&p| c.joint_label(p)).collect(),
            sum: format_q(&sum),
        })
        .ok_or_else(|| Error::WitnessNotFound("row ⊗ column weight satisfies every test".into()))?;

    Ok(Pathologies { signaling, block_subgrid, product_state })
}

fn labels_where(space: &TestSpace, w: &[Q]) -> Vec<String> {
    w.iter().enumerate().filter(|(_, v)| **v == one()).map(|(x, _)| space.labels()[x].clone()).collect()
}

/// The test whose sum is farthest above 1, if any sum differs from 1.
fn worst_test<'a>(space: &'a TestSpace, w: &[Q]) -> Option<(&'a Vec<usize>, Q)> {
    let mut best: Option<(&Vec<usize>, Q)> = None;
    for t in space.tests() {
        let s = probability(w, t.iter().copied());
        if s != one() && best.as_ref().is_none_or(|(_, b)| s > *b) {
            best = Some((t, s));
        }
    }
    best
}
