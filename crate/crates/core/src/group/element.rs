use std::fmt;

use super::perm::Perm;

/// Normal-form family of a group element. Elements of different families
/// never multiply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Sym,
    Pair,
    Grid,
}

/// A group element in structural normal form.
///
/// * `Sym(σ)`: a plain permutation of `0..n`.
/// * `Pair(σ, τ)`: an element of `S(n) × S(n)`, acting on `n × n` by
///   `(x, y) ↦ (σx, τy)`.
/// * `Grid(σ, τ, k)`: the element `(σ, τ) ∘ Tᵏ` of `(S(n) × S(n)) ⋊ ⟨T⟩`,
///   where `T` is the transpose `(x, y) ↦ (y, x)`.
///
/// The grid form keeps the transpose bit even when the carrier is too small
/// for `T` to act nontrivially, so equality is structural, never by action.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Sym(Perm),
    Pair(Perm, Perm),
    Grid(Perm, Perm, bool),
}

impl Element {
    pub fn family(&self) -> Family {
        match self {
            Element::Sym(_) => Family::Sym,
            Element::Pair(..) => Family::Pair,
            Element::Grid(..) => Family::Grid,
        }
    }

    /// Degree of the underlying permutations.
    pub fn rank(&self) -> usize {
        match self {
            Element::Sym(p) | Element::Pair(p, _) | Element::Grid(p, _, _) => p.degree(),
        }
    }

    /// Size of the carrier this element naturally acts on.
    pub fn natural_degree(&self) -> usize {
        match self {
            Element::Sym(p) => p.degree(),
            Element::Pair(p, _) | Element::Grid(p, _, _) => p.degree() * p.degree(),
        }
    }

    pub fn identity_like(&self) -> Element {
        let n = self.rank();
        match self.family() {
            Family::Sym => Element::Sym(Perm::identity(n)),
            Family::Pair => Element::Pair(Perm::identity(n), Perm::identity(n)),
            Family::Grid => Element::Grid(Perm::identity(n), Perm::identity(n), false),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Element::Sym(p) => p.is_identity(),
            Element::Pair(a, b) => a.is_identity() && b.is_identity(),
            Element::Grid(a, b, k) => !k && a.is_identity() && b.is_identity(),
        }
    }

    /// `self · other`, i.e. `other` acts first. `None` across families or degrees.
    pub fn checked_mul(&self, other: &Element) -> Option<Element> {
        if self.rank() != other.rank() {
            return None;
        }
        Some(match (self, other) {
            (Element::Sym(a), Element::Sym(b)) => Element::Sym(a.compose(b)),
            (Element::Pair(a1, a2), Element::Pair(b1, b2)) => Element::Pair(a1.compose(b1), a2.compose(b2)),
            (Element::Grid(a1, a2, false), Element::Grid(b1, b2, l)) => {
                Element::Grid(a1.compose(b1), a2.compose(b2), *l)
            }
            // T (b1, b2) = (b2, b1) T
            (Element::Grid(a1, a2, true), Element::Grid(b1, b2, l)) => {
                Element::Grid(a1.compose(b2), a2.compose(b1), !*l)
            }
            _ => return None,
        })
    }

    pub fn mul(&self, other: &Element) -> Element {
        self.checked_mul(other)
            .unwrap_or_else(|| panic!("cannot multiply {self:?} by {other:?}"))
    }

    pub fn inverse(&self) -> Element {
        match self {
            Element::Sym(a) => Element::Sym(a.inverse()),
            Element::Pair(a, b) => Element::Pair(a.inverse(), b.inverse()),
            Element::Grid(a, b, false) => Element::Grid(a.inverse(), b.inverse(), false),
            Element::Grid(a, b, true) => Element::Grid(b.inverse(), a.inverse(), true),
        }
    }

    pub fn commutes_with(&self, other: &Element) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Image of `x` under the natural action (pairs encoded as `x * n + y`).
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        match self {
            Element::Sym(p) => p.apply(x),
            Element::Pair(a, b) => {
                let n = a.degree();
                a.apply(x / n) * n + b.apply(x % n)
            }
            Element::Grid(a, b, k) => {
                let n = a.degree();
                let (mut i, mut j) = (x / n, x % n);
                if *k {
                    std::mem::swap(&mut i, &mut j);
                }
                a.apply(i) * n + b.apply(j)
            }
        }
    }

    /// Canonical byte encoding; equality and order of elements agree with it
    /// within a family and degree.
    pub fn normal_form(&self) -> Vec<u8> {
        let mut out = vec![self.family() as u8, self.rank() as u8];
        match self {
            Element::Sym(p) => out.extend_from_slice(p.as_bytes()),
            Element::Pair(a, b) => {
                out.extend_from_slice(a.as_bytes());
                out.extend_from_slice(b.as_bytes());
            }
            Element::Grid(a, b, k) => {
                out.extend_from_slice(a.as_bytes());
                out.extend_from_slice(b.as_bytes());
                out.push(*k as u8);
            }
        }
        out
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Sym(p) => write!(f, "{p:?}"),
            Element::Pair(a, b) => write!(f, "({a:?}, {b:?})"),
            Element::Grid(a, b, k) => write!(f, "({a:?}, {b:?}, {})", *k as u8),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(a: &[usize], b: &[usize], k: bool) -> Element {
        Element::Grid(Perm::from_images(a).unwrap(), Perm::from_images(b).unwrap(), k)
    }

    #[test]
    fn grid_product_matches_action() {
        let n = 3;
        let perms = Perm::all(n);
        let mut elements = Vec::new();
        for a in &perms {
            for b in &perms {
                for k in [false, true] {
                    elements.push(Element::Grid(a.clone(), b.clone(), k));
                }
            }
        }
        for g in elements.iter().step_by(5) {
            for h in elements.iter().step_by(7) {
                let gh = g.mul(h);
                for x in 0..n * n {
                    assert_eq!(gh.apply(x), g.apply(h.apply(x)));
                }
                assert!(g.mul(&g.inverse()).is_identity());
            }
        }
    }

    #[test]
    fn transpose_survives_on_a_single_point() {
        let t = grid(&[0], &[0], true);
        assert_eq!(t.apply(0), 0);
        assert!(!t.is_identity());
        assert!(t.mul(&t).is_identity());
    }

    #[test]
    fn normal_form_order_agrees_with_element_order() {
        let a = grid(&[0, 1], &[1, 0], false);
        let b = grid(&[1, 0], &[0, 1], false);
        let c = grid(&[0, 1], &[1, 0], true);
        assert_eq!(a.cmp(&b), a.normal_form().cmp(&b.normal_form()));
        assert_eq!(a.cmp(&c), a.normal_form().cmp(&c.normal_form()));
    }
}
