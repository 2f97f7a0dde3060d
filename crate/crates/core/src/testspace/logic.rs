use std::fmt::Write as _;

use rustc_hash::FxHashMap;

use super::{Events, TestSpace};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// The logic of an algebraic test space: perspectivity classes of events
/// with the partial sum `p(A) ⊕ p(B) = p(A ∪ B)` for `A ⊥ B`.
///
/// Classes are numbered by their least event in canonical order, so class
/// `0` is `p(∅)`.
#[derive(Clone, Debug)]
pub struct Orthoalgebra {
    labels: Vec<String>,
    reps: Vec<BitSet>,
    class_of: Vec<u32>,
    sum: FxHashMap<(u32, u32), u32>,
    complement: Vec<u32>,
    unit: usize,
    below: Vec<Vec<u32>>,
}

impl Orthoalgebra {
    pub fn build(space: &TestSpace) -> Result<Self> {
        let events = space.events()?;
        Self::from_events(space, &events, &Limits::current())
    }

    pub fn from_events(space: &TestSpace, events: &Events, limits: &Limits) -> Result<Self> {
        if !events.is_algebraic() {
            return Err(Error::NotAlgebraic);
        }
        let mut by_comp: FxHashMap<&[u32], u32> = FxHashMap::default();
        let mut reps = Vec::new();
        let mut class_of = Vec::with_capacity(events.len());
        for i in 0..events.len() {
            let next = reps.len() as u32;
            let c = *by_comp.entry(events.complements(i)).or_insert(next);
            if c == next {
                reps.push(events.get(i).clone());
            }
            class_of.push(c);
        }
        let work: usize = events.sets().iter().map(|s| 1usize << s.len()).sum();
        if work > limits.max_event_pairs {
            return Err(Error::cap("orthogonal event pairs", limits.max_event_pairs));
        }
        let mut sum: FxHashMap<(u32, u32), u32> = FxHashMap::default();
        for (u, set) in events.sets().iter().enumerate() {
            let cu = class_of[u];
            for a in set.subsets() {
                let b = set.difference(&a);
                let ca = class_of[events.index_of(&a).expect("subset of an event")];
                let cb = class_of[events.index_of(&b).expect("subset of an event")];
                if let Some(&prev) = sum.get(&(ca, cb)) {
                    if prev != cu {
                        return Err(Error::InvalidSpace(format!(
                            "partial sum of classes {ca} and {cb} is not well defined"
                        )));
                    }
                } else {
                    sum.insert((ca, cb), cu);
                }
            }
        }
        let complement = reps
            .iter()
            .map(|r| {
                let i = events.index_of(r).expect("representative is an event");
                class_of[events.complements(i)[0] as usize]
            })
            .collect();
        let unit = class_of[events.tests()[0] as usize] as usize;
        let mut below = vec![Vec::new(); reps.len()];
        for (&(a, _), &s) in &sum {
            below[s as usize].push(a);
        }
        for b in &mut below {
            b.sort_unstable();
            b.dedup();
        }
        Ok(Orthoalgebra {
            labels: space.labels().to_vec(),
            reps,
            class_of,
            sum,
            complement,
            unit,
            below,
        })
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    /// Least event of class `c`.
    pub fn representative(&self, c: usize) -> &BitSet {
        &self.reps[c]
    }

    /// Class of the event with index `i` in the event table.
    pub fn class_of_event(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        self.sum.get(&(a as u32, b as u32)).map(|&c| c as usize)
    }

    pub fn complement(&self, a: usize) -> usize {
        self.complement[a] as usize
    }

    /// `a ≤ b` iff `b = a ⊕ c` for some `c`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].binary_search(&(a as u32)).is_ok()
    }

    pub fn atoms(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| a != self.zero() && self.below[a].iter().all(|&b| b as usize == a || b == 0))
            .collect()
    }

    /// Pairs `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for b in 0..self.len() {
            for &a in &self.below[b] {
                let a = a as usize;
                if a == b {
                    continue;
                }
                let between = self.below[b]
                    .iter()
                    .any(|&c| c as usize != a && c as usize != b && self.leq(a, c as usize));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The first failed orthoalgebra or partial-order axiom, if any.
    pub fn axiom_violation(&self) -> Option<String> {
        let n = self.len();
        let mut defined: Vec<(usize, usize, usize)> =
            self.sum.iter().map(|(&(a, b), &c)| (a as usize, b as usize, c as usize)).collect();
        defined.sort_unstable();
        for &(a, b, c) in &defined {
            if self.sum(b, a) != Some(c) {
                return Some(format!("sum of {a} and {b} is not commutative"));
            }
            if a == b && a != self.zero() {
                return Some(format!("{a} ⊕ {a} is defined but {a} is not zero"));
            }
            for d in 0..n {
                let Some(abd) = self.sum(c, d) else { continue };
                let Some(bd) = self.sum(b, d) else {
                    return Some(format!("({a} ⊕ {b}) ⊕ {d} defined but {b} ⊕ {d} is not"));
                };
                if self.sum(a, bd) != Some(abd) {
                    return Some(format!("sum of {a}, {b}, {d} is not associative"));
                }
            }
        }
        for a in 0..n {
            let comps: Vec<usize> = (0..n).filter(|&b| self.sum(a, b) == Some(self.unit)).collect();
            if comps != [self.complement(a)] {
                return Some(format!("class {a} has orthocomplements {comps:?}"));
            }
            if self.sum(a, self.zero()) != Some(a) {
                return Some(format!("{a} ⊕ 0 ≠ {a}"));
            }
            if !self.leq(self.zero(), a) || !self.leq(a, self.unit) {
                return Some(format!("class {a} is not between zero and unit"));
            }
            for &b in &self.below[a] {
                let b = b as usize;
                if b != a && self.leq(a, b) {
                    return Some(format!("{a} ≤ {b} ≤ {a} with {a} ≠ {b}"));
                }
                for &c in &self.below[b] {
                    if !self.leq(c as usize, a) {
                        return Some(format!("order is not transitive at {c} ≤ {b} ≤ {a}"));
                    }
                }
            }
        }
        None
    }

    /// Whether this is the Boolean algebra of subsets of its atoms, with
    /// `⊕` as disjoint union.
    pub fn is_boolean(&self) -> bool {
        let atoms = self.atoms();
        if atoms.len() >= 32 || self.len() != 1 << atoms.len() {
            return false;
        }
        let mask = |c: usize| -> u32 {
            atoms.iter().enumerate().filter(|&(_, &a)| self.leq(a, c)).fold(0, |m, (k, _)| m | (1 << k))
        };
        let masks: Vec<u32> = (0..self.len()).map(mask).collect();
        let mut sorted = masks.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.len() {
            return false;
        }
        for a in 0..self.len() {
            for b in 0..self.len() {
                let expect = (masks[a] & masks[b] == 0).then_some(masks[a] | masks[b]);
                if self.sum(a, b).map(|c| masks[c]) != expect {
                    return false;
                }
            }
        }
        true
    }

    fn class_label(&self, c: usize) -> String {
        let names: Vec<&str> = self.reps[c].iter().map(|x| self.labels[x].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Hasse diagram in DOT, classes labeled by their least event.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph logic {\n  rankdir=BT;\n");
        for c in 0..self.len() {
            let _ = writeln!(out, "  n{c} [label=\"{}\"];", self.class_label(c).replace('"', "\\\""));
        }
        for (a, b) in self.covers() {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testspace::{classical, graph, letters, triangle};

    #[test]
    fn classical_logic_is_boolean() {
        for n in 1..=4 {
            let l = Orthoalgebra::build(&classical(&letters(n)).unwrap()).unwrap();
            assert_eq!(l.len(), 1 << n);
            assert_eq!(l.atoms().len(), n);
            assert!(l.is_boolean());
            assert_eq!(l.axiom_violation(), None);
        }
    }

    #[test]
    fn graph_two_logic_has_two_complementary_atom_pairs() {
        let l = Orthoalgebra::build(&graph(&letters(2)).unwrap()).unwrap();
        assert_eq!(l.len(), 6);
        assert_eq!(l.axiom_violation(), None);
        let atoms = l.atoms();
        assert_eq!(atoms.len(), 4);
        for &a in &atoms {
            let c = l.complement(a);
            assert!(atoms.contains(&c) && c != a);
            assert_eq!(l.complement(c), a);
        }
        assert!(!l.is_boolean());
        assert_eq!(l.covers().len(), 8);
    }

    #[test]
    fn triangle_has_no_logic() {
        assert_eq!(Orthoalgebra::build(&triangle()).unwrap_err(), Error::NotAlgebraic);
    }

    #[test]
    fn dot_lists_every_class() {
        let l = Orthoalgebra::build(&classical(&letters(2)).unwrap()).unwrap();
        let dot = l.to_dot();
        assert!(dot.contains("label=\"{}\""));
        assert!(dot.contains("label=\"{a,b}\""));
        assert_eq!(dot.matches("->").count(), 4);
    }
}
