use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use super::{sym_perm, ExtensionSpec};
use crate::error::Result;
use crate::group::{Element, Injection, Perm};

/// `regularity` probes every element of `G(n)` up to this order and only the
/// generators beyond it; both sides of the identity are homomorphisms in `g`.
pub const EXHAUSTIVE_REGULARITY_ORDER: usize = 5_000;

/// Outcome of one law over all instances visited.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub law: &'static str,
    pub instances: usize,
    pub witness: Option<String>,
}

impl LawCheck {
    fn new(law: &'static str) -> Self {
        LawCheck { law, instances: 0, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub extension: &'static str,
    pub max_size: usize,
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(LawCheck::passed)
    }

    pub fn get(&self, law: &str) -> Option<&LawCheck> {
        self.checks.iter().find(|c| c.law == law)
    }
}

/// Which conjugation identity is tested for elements fixing the base test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    /// `G(σ|)(g) = σ g σ⁻¹`.
    Conjugation,
    /// `G(σ|)(g) = σ⁻¹ g σ`.
    InverseConjugation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityWitness {
    pub size: usize,
    pub sigma: String,
    pub restriction: Vec<usize>,
    pub g: String,
    pub induced: String,
    pub conjugate: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Regularity {
    pub max_size: usize,
    pub instances: usize,
    pub conjugation: Option<RegularityWitness>,
    pub inverse_conjugation: Option<RegularityWitness>,
}

impl Regularity {
    /// Regular in the defining orientation `σ g σ⁻¹`.
    pub fn is_regular(&self) -> bool {
        self.conjugation.is_none()
    }

    pub fn holding(&self) -> Vec<Orientation> {
        let mut out = Vec::new();
        if self.conjugation.is_none() {
            out.push(Orientation::Conjugation);
        }
        if self.inverse_conjugation.is_none() {
            out.push(Orientation::InverseConjugation);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutatorWitness {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub from_a: String,
    pub from_b: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reasonableness {
    pub max_size: usize,
    pub splits: usize,
    pub witness: Option<CommutatorWitness>,
}

impl Reasonableness {
    pub fn is_reasonable(&self) -> bool {
        self.witness.is_none()
    }
}

impl ExtensionSpec {
    /// Functoriality, multiplicativity, naturality, injectivity, the
    /// pullback property and `G(f)(G(A)) ∩ j_B(S(B)) = j_B(S(f)(S(A)))`,
    /// over all injections between sets of size at most `max_size`.
    pub fn check_laws(&self, max_size: usize) -> Result<LawReport> {
        let mut functoriality = LawCheck::new("functoriality");
        let mut homomorphism = LawCheck::new("homomorphism");
        let mut naturality = LawCheck::new("naturality");
        let mut injectivity = LawCheck::new("injectivity");
        let mut pullback = LawCheck::new("pullback");
        let mut intersection = LawCheck::new("intersection");

        let injections: Vec<Vec<Vec<Injection>>> =
            (0..=max_size).map(|a| (0..=max_size).map(|b| Injection::all(a, b)).collect()).collect();

        for n in 0..=max_size {
            let id = Injection::identity(n);
            for g in self.ext.generators(n) {
                let image = self.induce(&id, &g);
                functoriality.record(image == g, || format!("G(id_{n})({g:?}) = {image:?}"));
            }
        }
        for a in 0..=max_size {
            let gens = self.ext.generators(a);
            for b in a..=max_size {
                for c in b..=max_size {
                    for f in &injections[a][b] {
                        for h in &injections[b][c] {
                            let hf = h.after(f);
                            for g in &gens {
                                let direct = self.induce(&hf, g);
                                let stepwise = self.induce(h, &self.induce(f, g));
                                functoriality.record(direct == stepwise, || {
                                    format!("G({:?} after {:?}) and G({:?}) G({:?}) differ on {g:?}", h.images(), f.images(), h.images(), f.images())
                                });
                            }
                        }
                    }
                }
            }
        }

        for b in 0..=max_size {
            let sym_b = self.symmetric(b)?;
            let j_b: FxHashMap<Element, Perm> =
                sym_b.elements().iter().map(|s| (self.ext.embed(sym_perm(s)), sym_perm(s).clone())).collect();
            for a in 0..=b {
                let group_a = self.group(a)?;
                let sym_a = self.symmetric(a)?;
                let j_a: FxHashMap<Element, Perm> =
                    sym_a.elements().iter().map(|s| (self.ext.embed(sym_perm(s)), sym_perm(s).clone())).collect();
                for f in &injections[a][b] {
                    let hom = self.induced_hom(f)?;
                    let mut preimage: FxHashMap<&Element, &Element> = FxHashMap::default();
                    for (g, img) in group_a.elements().iter().zip(hom.images()) {
                        let direct = self.induce(f, g);
                        homomorphism.record(direct == *img, || format!("G({:?}) is not multiplicative at {g:?}", f.images()));
                        preimage.insert(img, g);
                    }
                    injectivity.record(hom.is_injective(), || format!("G({:?}) has a nontrivial kernel", f.images()));

                    for s in sym_a.elements() {
                        let sigma = sym_perm(s);
                        let left = self.induce(f, &self.ext.embed(sigma));
                        let right = self.ext.embed(&f.lift(sigma));
                        naturality.record(left == right, || format!("square fails for f = {:?} at {sigma:?}", f.images()));
                    }

                    let mut meet: Vec<&Element> = Vec::new();
                    for (img, sigma) in &j_b {
                        let Some(g) = preimage.get(img) else { continue };
                        meet.push(img);
                        let ok = j_a.get(*g).is_some_and(|s| f.lift(s) == *sigma);
                        pullback.record(ok, || format!("j({sigma:?}) = G({:?})({g:?}) without a common preimage", f.images()));
                    }
                    let mut expected: Vec<Element> = sym_a.elements().iter().map(|s| self.ext.embed(&f.lift(sym_perm(s)))).collect();
                    expected.sort_unstable();
                    let mut meet: Vec<Element> = meet.into_iter().cloned().collect();
                    meet.sort_unstable();
                    intersection.record(meet == expected, || {
                        format!("for f = {:?} the intersection has {} elements, expected {}", f.images(), meet.len(), expected.len())
                    });
                }
            }
        }
        Ok(LawReport {
            extension: self.name(),
            max_size,
            checks: vec![functoriality, homomorphism, naturality, injectivity, pullback, intersection],
        })
    }

    /// Both conjugation identities for every element fixing the base test,
    /// for `1 ≤ n ≤ max_size`.
    pub fn regularity(&self, max_size: usize) -> Result<Regularity> {
        let mut out = Regularity { max_size, instances: 0, conjugation: None, inverse_conjugation: None };
        for n in 1..=max_size {
            let space = self.space(n)?;
            for sigma in space.setwise_stabilizer() {
                let r = space.restriction_to_base(sigma)?.expect("stabilizer preserves the base test");
                let f = Injection::from_perm(&r);
                let inv = sigma.inverse();
                let group = space.group();
                let probes = if group.order() <= EXHAUSTIVE_REGULARITY_ORDER { group.elements() } else { group.generators() };
                for g in probes {
                    out.instances += 1;
                    let induced = self.induce(&f, g);
                    let witness = |conjugate: &Element| RegularityWitness {
                        size: n,
                        sigma: format!("{sigma:?}"),
                        restriction: r.images(),
                        g: format!("{g:?}"),
                        induced: format!("{induced:?}"),
                        conjugate: format!("{conjugate:?}"),
                    };
                    let conj = sigma.mul(g).mul(&inv);
                    if out.conjugation.is_none() && induced != conj {
                        out.conjugation = Some(witness(&conj));
                    }
                    let conj = inv.mul(g).mul(sigma);
                    if out.inverse_conjugation.is_none() && induced != conj {
                        out.inverse_conjugation = Some(witness(&conj));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Commutation of the images of `G(A)` and `G(B)` in `G(A ⊔ B)` for every
    /// split of `0..m` into two non-empty parts, `2 ≤ m ≤ max_size`.
    pub fn reasonableness(&self, max_size: usize) -> Result<Reasonableness> {
        let mut out = Reasonableness { max_size, splits: 0, witness: None };
        for m in 2..=max_size {
            for mask in 1..(1u32 << m) - 1 {
                let a: Vec<usize> = (0..m).filter(|&x| mask >> x & 1 == 1).collect();
                let b: Vec<usize> = (0..m).filter(|&x| mask >> x & 1 == 0).collect();
                let fa = Injection::inclusion(&a, m)?;
                let fb = Injection::inclusion(&b, m)?;
                let ga: Vec<Element> = self.ext.generators(a.len()).iter().map(|g| self.induce(&fa, g)).collect();
                let gb: Vec<Element> = self.ext.generators(b.len()).iter().map(|g| self.induce(&fb, g)).collect();
                out.splits += 1;
                let distinct: FxHashSet<&Element> = ga.iter().collect();
                for x in distinct {
                    if let Some(y) = gb.iter().find(|y| !x.commutes_with(y)) {
                        out.witness = Some(CommutatorWitness {
                            a: a.clone(),
                            b: b.clone(),
                            from_a: format!("{x:?}"),
                            from_b: format!("{y:?}"),
                        });
                        return Ok(out);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The defining conjugation identity at one size, on generators.
    pub(crate) fn is_regular_at(&self, n: usize) -> Result<bool> {
        if let Some(&r) = self.regular.lock().unwrap().get(&n) {
            return Ok(r);
        }
        let r = self.regular_on_generators(n)?;
        self.regular.lock().unwrap().insert(n, r);
        Ok(r)
    }

    fn regular_on_generators(&self, n: usize) -> Result<bool> {
        let space = self.space(n)?;
        for sigma in space.setwise_stabilizer() {
            let r = space.restriction_to_base(sigma)?.expect("stabilizer preserves the base test");
            let f = Injection::from_perm(&r);
            let inv = sigma.inverse();
            if space.group().generators().iter().any(|g| self.induce(&f, g) != sigma.mul(g).mul(&inv)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
