use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A permutation of `0..n` in one-line notation: `self.apply(i)` is the image of `i`.
///
/// The derived order is lexicographic on the image array, so it agrees with
/// the byte order of the normal form for permutations of the same degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(SmallVec<[u8; 16]>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize + 1, "carrier too large for a byte permutation");
        Perm((0..n).map(|i| i as u8).collect())
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize + 1 {
            return Err(Error::Parse(format!("permutation degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || seen[x] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm(images.iter().map(|&x| x as u8).collect()))
    }

    /// The transposition swapping `i` and `j` on `0..n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Perm::identity(n);
        p.0.swap(i, j);
        p
    }

    /// The cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn cycle(n: usize) -> Self {
        Perm((0..n).map(|i| ((i + 1) % n) as u8).collect())
    }

    /// Standard generators of the symmetric group on `0..n`: the transposition
    /// `(0 1)` and the long cycle (omitted when it coincides or is trivial).
    pub fn symmetric_generators(n: usize) -> Vec<Perm> {
        match n {
            0 | 1 => Vec::new(),
            2 => vec![Perm::transposition(2, 0, 1)],
            _ => vec![Perm::transposition(n, 0, 1), Perm::cycle(n)],
        }
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm(current.iter().map(|&x| x as u8).collect()));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv: SmallVec<[u8; 16]> = SmallVec::from_elem(0, self.degree());
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}

/// An injective map `0..domain -> 0..codomain`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Injection {
    codomain: usize,
    map: Vec<usize>,
}

impl Injection {
    pub fn new(codomain: usize, map: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; codomain];
        for &b in &map {
            if b >= codomain || seen[b] {
                return Err(Error::Parse(format!("{map:?} is not an injection into {codomain}")));
            }
            seen[b] = true;
        }
        Ok(Injection { codomain, map })
    }

    pub fn identity(n: usize) -> Self {
        Injection { codomain: n, map: (0..n).collect() }
    }

    /// The inclusion of the sorted subset `members` into `0..codomain`.
    pub fn inclusion(members: &[usize], codomain: usize) -> Result<Self> {
        Injection::new(codomain, members.to_vec())
    }

    pub fn from_perm(p: &Perm) -> Self {
        Injection { codomain: p.degree(), map: p.images() }
    }

    /// Every injection `0..a -> 0..b`, in lexicographic order of image arrays.
    pub fn all(a: usize, b: usize) -> Vec<Injection> {
        fn rec(a: usize, b: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Injection>) {
            if current.len() == a {
                out.push(Injection { codomain: b, map: current.clone() });
                return;
            }
            for y in 0..b {
                if !used[y] {
                    used[y] = true;
                    current.push(y);
                    rec(a, b, current, used, out);
                    current.pop();
                    used[y] = false;
                }
            }
        }
        let mut out = Vec::new();
        if a <= b {
            rec(a, b, &mut Vec::new(), &mut vec![false; b], &mut out);
        }
        out
    }

    pub fn domain(&self) -> usize {
        self.map.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Injection) -> Injection {
        assert_eq!(first.codomain, self.domain(), "injections do not compose");
        Injection {
            codomain: self.codomain,
            map: first.map.iter().map(|&b| self.map[b]).collect(),
        }
    }

    pub fn is_bijection(&self) -> bool {
        self.domain() == self.codomain
    }

    pub fn to_perm(&self) -> Option<Perm> {
        self.is_bijection().then(|| Perm::from_images(&self.map).expect("bijection"))
    }

    /// The transported permutation: `f σ f⁻¹` on the range of `f`, identity elsewhere.
    pub fn lift(&self, sigma: &Perm) -> Perm {
        assert_eq!(sigma.degree(), self.domain());
        let mut images: Vec<usize> = (0..self.codomain).collect();
        for a in 0..self.domain() {
            images[self.map[a]] = self.map[sigma.apply(a)];
        }
        Perm::from_images(&images).expect("lift of a permutation is a permutation")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_applies_right_first() {
        let s = Perm::from_images(&[1, 0, 2]).unwrap();
        let c = Perm::cycle(3);
        assert_eq!(s.compose(&c).images(), vec![0, 2, 1]);
        assert!(c.compose(&c.inverse()).is_identity());
    }

    #[test]
    fn all_permutations_are_sorted_and_complete() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Perm::all(0).len(), 1);
    }

    #[test]
    fn lift_is_a_homomorphism() {
        let f = Injection::new(5, vec![4, 1, 2]).unwrap();
        for s in Perm::all(3) {
            for t in Perm::all(3) {
                assert_eq!(f.lift(&s.compose(&t)), f.lift(&s).compose(&f.lift(&t)));
            }
        }
        assert_eq!(Injection::all(2, 4).len(), 12);
    }
}
