use std::collections::VecDeque;
use std::hash::Hash;

use rustc_hash::FxHashMap;

use super::{Element, FiniteGroup};
use crate::error::Result;

/// An orbit under a group, sorted, with one carrying element per member.
#[derive(Clone, Debug)]
pub struct Orbit<T> {
    pub members: Vec<T>,
    /// `witnesses[i]` maps the seed to `members[i]`.
    pub witnesses: Vec<Element>,
}

impl<T: Ord + Clone + Hash + Eq> Orbit<T> {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, m: &T) -> Option<usize> {
        self.members.binary_search(m).ok()
    }

    pub fn witness(&self, m: &T) -> Option<&Element> {
        self.position(m).map(|i| &self.witnesses[i])
    }
}

/// Orbit of `seed` under the generators of `group`, where `act` applies one
/// element to a point (or point set) and may fail.
///
/// Breadth-first, so each witness is a shortest generator word; output is
/// sorted by `T`'s order.
pub fn orbit<T, F>(group: &FiniteGroup, seed: T, act: F) -> Result<Orbit<T>>
where
    T: Ord + Clone + Hash + Eq,
    F: Fn(&Element, &T) -> Result<T>,
{
    let mut seen: FxHashMap<T, Element> = FxHashMap::default();
    seen.insert(seed.clone(), group.identity().clone());
    let mut queue = VecDeque::from([seed]);
    while let Some(m) = queue.pop_front() {
        let w = seen[&m].clone();
        for s in group.generators() {
            let next = act(s, &m)?;
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), s.mul(&w));
                queue.push_back(next);
            }
        }
    }
    let mut pairs: Vec<(T, Element)> = seen.into_iter().collect();
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    let (members, witnesses) = pairs.into_iter().unzip();
    Ok(Orbit { members, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Action, NaturalAction, Perm};

    fn act_on_set(g: &Element, s: &Vec<usize>, degree: usize) -> Result<Vec<usize>> {
        let a = NaturalAction { degree };
        let mut out: Vec<usize> = s.iter().map(|&x| a.act(g, x)).collect::<Result<_>>()?;
        out.sort_unstable();
        Ok(out)
    }

    fn grid2() -> FiniteGroup {
        let id = Perm::identity(2);
        let s = Perm::transposition(2, 0, 1);
        FiniteGroup::closure(
            Element::Grid(id.clone(), id.clone(), false),
            vec![
                Element::Grid(s.clone(), id.clone(), false),
                Element::Grid(id.clone(), s, false),
                Element::Grid(id.clone(), id, true),
            ],
            100,
        )
        .unwrap()
    }

    #[test]
    fn natural_action_is_transitive() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let o = orbit(&s3, 0usize, |g, &x| NaturalAction { degree: 3 }.act(g, x)).unwrap();
        assert_eq!(o.members, vec![0, 1, 2]);
        for (m, w) in o.members.iter().zip(&o.witnesses) {
            assert_eq!(w.apply(0), *m);
        }
    }

    #[test]
    fn grid_row_orbit_is_rows_and_columns() {
        let g = grid2();
        assert_eq!(g.order(), 8);
        // pair (i, j) is encoded as 2i + j; row of a = {(a,a),(a,b)}
        let o = orbit(&g, vec![0, 1], |e, s| act_on_set(e, s, 4)).unwrap();
        assert_eq!(o.members, vec![vec![0, 1], vec![0, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn graph_diagonal_orbit() {
        let id = Perm::identity(2);
        let s = Perm::transposition(2, 0, 1);
        let g = FiniteGroup::closure(
            Element::Pair(id.clone(), id.clone()),
            vec![Element::Pair(s.clone(), id.clone()), Element::Pair(id, s)],
            100,
        )
        .unwrap();
        let o = orbit(&g, vec![0, 3], |e, s| act_on_set(e, s, 4)).unwrap();
        assert_eq!(o.members, vec![vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn undefined_action_propagates() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(orbit(&s3, 0usize, |g, &x| NaturalAction { degree: 4 }.act(g, x)).is_err());
    }

    #[test]
    fn orbit_stabilizer_for_small_groups() {
        let g = grid2();
        for x in 0..4 {
            let o = orbit(&g, x, |e, &p| NaturalAction { degree: 4 }.act(e, p)).unwrap();
            let stab = g.elements().iter().filter(|e| e.apply(x) == x).count();
            assert_eq!(o.len() * stab, g.order());
        }
    }
}
