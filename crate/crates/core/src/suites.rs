//! The verification suites behind `tsl verify`.
//!
//! Each suite runs a fixed list of checks and returns a [`Report`] with one
//! item per claim. Items are independent, so they run on scoped threads.

use std::thread;

use serde_json::json;

use crate::error::{Error, Result};
use crate::extensions::{pathology_witnesses, ExtensionSpec};
use crate::group::Injection;
use crate::products::{cartesian_product, check_tensor_axioms, fr_product, non_signaling_polytope, product_state, BipartiteState, Separability};
use crate::rational::format_q;
use crate::report::{verdict, Claim, Report, Status};
use crate::states::{linalg::dot, validate_weight, StatePolytope};
use crate::symmetry::{check_full_symmetry, find_isomorphism};
use crate::testspace::{binary_pair, classical, graph, grid, letters, triangle, TestSpace};

pub const SUITES: [&str; 3] = ["claims", "extension-laws", "products"];

/// Largest carrier for per-size sweeps in the claims suite.
const SWEEP_CAP: usize = 4;

type Job<'a> = Box<dyn FnOnce() -> Vec<Claim> + Send + 'a>;

fn run_parallel(jobs: Vec<Job<'_>>) -> Vec<Claim> {
    thread::scope(|s| {
        let handles: Vec<_> = jobs.into_iter().map(|j| s.spawn(j)).collect();
        handles.into_iter().flat_map(|h| h.join().expect("suite item panicked")).collect()
    })
}

fn one<'a>(f: impl FnOnce() -> Claim + Send + 'a) -> Job<'a> {
    Box::new(move || vec![f()])
}

/// Run a suite by name; `paper` is accepted for `claims`.
pub fn run(suite: &str, ext: &str, max_n: usize) -> Result<Report> {
    if max_n < 2 {
        return Err(Error::Parse(format!("--max-n must be at least 2, got {max_n}")));
    }
    let config = json!({ "ext": ext, "max_n": max_n });
    match suite {
        "claims" | "paper" => {
            let spec = ExtensionSpec::builtin(ext)?;
            Ok(Report::new("claims", claims(&spec, max_n), config))
        }
        "extension-laws" => {
            let spec = ExtensionSpec::builtin(ext)?;
            Ok(Report::new("extension-laws", extension_laws(&spec, max_n), config))
        }
        "products" => Ok(Report::new("products", products(max_n), json!({ "max_n": max_n }))),
        other => Err(Error::Parse(format!("unknown suite '{other}'; expected one of {SUITES:?}"))),
    }
}

/// Each law as its own item, plus the regularity and reasonableness splits.
pub fn extension_laws(spec: &ExtensionSpec, max_n: usize) -> Vec<Claim> {
    let mut out = match spec.check_laws(max_n) {
        Ok(report) => report
            .checks
            .iter()
            .map(|c| {
                Claim::run(c.law, law_statement(c.law), || {
                    Ok(verdict(c.passed(), json!({ "instances": c.instances }), json!({ "witness": c.witness })))
                })
            })
            .collect(),
        Err(e) => ["functoriality", "homomorphism", "naturality", "injectivity", "pullback", "intersection"]
            .iter()
            .map(|l| Claim::skipped(l, law_statement(l), e.to_string()))
            .collect::<Vec<_>>(),
    };
    out.push(regularity_item(spec, max_n));
    out.push(reasonableness_item(spec, max_n));
    out
}

fn law_statement(law: &str) -> &'static str {
    match law {
        "functoriality" => "G(id) = id and G(g ∘ f) = G(g) ∘ G(f) on generators",
        "homomorphism" => "every G(f) extends to a group homomorphism",
        "naturality" => "G(f) ∘ j_A = j_B ∘ S(f)",
        "injectivity" => "every G(f) is injective",
        "pullback" => "j_B(σ) = G(f)(g) forces a unique σ′ ∈ S(A) mapping to both",
        "intersection" => "G(A) ∩ S(B) = S(A) inside G(B)",
        _ => "extension law",
    }
}

fn regularity_item(spec: &ExtensionSpec, max_n: usize) -> Claim {
    let n = max_n.min(3);
    Claim::run("regularity", "elements fixing the base test act on G(A) by conjugation σgσ⁻¹", || {
        let r = spec.regularity(n)?;
        let holding = serde_json::to_value(r.holding()).expect("serializable");
        Ok(verdict(
            r.is_regular(),
            json!({ "max_size": n, "instances": r.instances, "orientations_holding": holding }),
            json!({ "max_size": n, "orientations_holding": holding, "conjugation": r.conjugation, "inverse_conjugation": r.inverse_conjugation }),
        ))
    })
}

fn reasonableness_item(spec: &ExtensionSpec, max_n: usize) -> Claim {
    let claim = Claim::run("reasonableness", "images of G(A) and G(B) commute in G(A ⊔ B) for disjoint A, B", || {
        let r = spec.reasonableness(max_n)?;
        Ok(verdict(r.is_reasonable(), json!({ "max_size": max_n, "splits": r.splits }), json!({ "commutator": r.witness })))
    });
    if spec.name() == "grid" {
        claim.unasserted()
    } else {
        claim
    }
}

pub fn claims(spec: &ExtensionSpec, max_n: usize) -> Vec<Claim> {
    let sweep = max_n.min(SWEEP_CAP);
    let small = max_n.min(3);
    let mut jobs: Vec<Job<'_>> = vec![
        one(move || space_recovery(spec, small)),
        one(move || full_symmetry(spec, sweep)),
        one(move || base_point_independence(spec, small)),
        one(move || {
            Claim::run("extension-laws", "functoriality, naturality, injectivity, pullback and intersection laws", || {
                let r = spec.check_laws(sweep)?;
                let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed()).map(|c| c.law).collect();
                Ok(verdict(r.all_pass(), json!({ "max_size": sweep, "laws": r.checks.len() }), json!({ "failed": failed, "checks": r.checks })))
            })
        }),
        one(move || regularity_item(spec, max_n)),
        one(move || reasonableness_item(spec, max_n)),
        one(move || induced_maps(spec, small)),
        one(move || transport_laws(spec, small)),
    ];
    let mut sizes = vec![(2, 2)];
    if max_n >= 3 {
        sizes.push((2, 3));
        if spec.name() == "trivial" {
            sizes.push((3, 3));
        }
    }
    for (na, nb) in sizes {
        jobs.push(Box::new(move || {
            spec.structure_claims(na, nb)
                .into_iter()
                .map(|mut c| {
                    c.claim_id = format!("{}-{na}x{nb}", c.claim_id);
                    c
                })
                .collect()
        }));
    }
    jobs.push(Box::new(move || pathology_items(spec.name())));
    run_parallel(jobs)
}

fn space_recovery(spec: &ExtensionSpec, max_n: usize) -> Claim {
    Claim::run("space-recovery", "the induced space G(n) is isomorphic to the expected concrete space", || {
        let mut checked = Vec::new();
        for n in 2..=max_n {
            let Some(expected) = spec.expected_space(n)? else {
                return Ok((Status::Skipped, json!({ "reason": "no concrete model for this extension" })));
            };
            let built = spec.space(n)?;
            match find_isomorphism(built.space(), &expected) {
                Some(iso) => checked.push(json!({ "n": n, "outcomes": expected.outcome_count(), "tests": expected.test_count(), "map": iso })),
                None => return Ok((Status::Refuted, json!({ "n": n, "built_tests": built.space().tests(), "expected": expected.name() }))),
            }
        }
        Ok((Status::Verified, json!({ "sizes": checked })))
    })
}

fn full_symmetry(spec: &ExtensionSpec, max_n: usize) -> Claim {
    Claim::run("full-symmetry", "every bijection between tests of G(n) is implemented by an element of G(n)", || {
        let mut modes = Vec::new();
        for n in 1..=max_n {
            let s = spec.space(n)?;
            if !s.construction().is_certified_fully_symmetric() {
                return Ok((Status::Refuted, json!({ "n": n, "base_test_permutations": s.construction().base_test_permutations })));
            }
            if n <= 3 {
                if let Some(f) = check_full_symmetry(s.space(), s.group(), &s.construction().cosets)? {
                    return Ok((Status::Refuted, json!({ "n": n, "failure": f })));
                }
                modes.push(json!({ "n": n, "mode": "exhaustive" }));
            } else {
                modes.push(json!({ "n": n, "mode": "certificate" }));
            }
        }
        Ok((Status::Verified, json!({ "sizes": modes })))
    })
}

fn base_point_independence(spec: &ExtensionSpec, max_n: usize) -> Claim {
    Claim::run("base-point-independence", "G(n) built at different base points gives isomorphic spaces", || {
        let mut pairs = 0;
        for n in 2..=max_n {
            for base in 0..n {
                let (_, iso) = spec.space_of(n, base)?;
                if iso.is_none() {
                    return Ok((Status::Refuted, json!({ "n": n, "base": base, "other": (base + 1) % n })));
                }
                pairs += 1;
            }
        }
        Ok((Status::Verified, json!({ "pairs": pairs })))
    })
}

fn induced_maps(spec: &ExtensionSpec, max_n: usize) -> Claim {
    let reasonable = spec.reasonableness(max_n).map(|r| r.is_reasonable()).unwrap_or(false);
    Claim::run("induced-maps", "X(f) is well defined for every injection f, and a morphism when the extension is reasonable", || {
        let (mut maps, mut morphisms, mut non_morphisms) = (0, 0, Vec::new());
        for a in 1..=max_n {
            for b in a..=max_n {
                for f in Injection::all(a, b) {
                    if let Err(Error::IllDefined(reason)) = spec.outcome_map(&f) {
                        return Ok((Status::Refuted, json!({ "f": f.images(), "ill_defined": reason })));
                    }
                    maps += 1;
                    match spec.outcome_map_violation(&f)? {
                        None => morphisms += 1,
                        Some(v) if non_morphisms.len() < 3 => non_morphisms.push(json!({ "f": f.images(), "condition": v.condition() })),
                        Some(_) => {}
                    }
                }
            }
        }
        let detail = json!({ "maps": maps, "morphisms": morphisms, "reasonable": reasonable, "non_morphisms": non_morphisms });
        Ok(verdict(!reasonable || non_morphisms.is_empty(), detail.clone(), detail))
    })
}

fn transport_laws(spec: &ExtensionSpec, max_n: usize) -> Claim {
    Claim::run("transport-laws", "transported maps are choice-free, respect identities, symmetries and composition", || {
        let mut sizes = Vec::new();
        for n in 1..=max_n {
            let r = spec.transport_checks(n)?;
            if !r.passed() {
                return Ok((Status::Refuted, serde_json::to_value(&r).expect("serializable")));
            }
            sizes.push(json!({ "n": n, "maps": r.maps_built }));
        }
        Ok((Status::Verified, json!({ "sizes": sizes })))
    })
}

fn pathology_items(ext: &str) -> Vec<Claim> {
    let p = pathology_witnesses(2, 2);
    let mut out = Vec::new();
    match (&p, ext) {
        (Err(e), "grid" | "graph") => out.push(Claim::skipped("pathologies", "concrete failures of the grid and graph tensors", e.to_string())),
        (Ok(p), "grid") => {
            let s = p.signaling.clone();
            out.push(Claim::run("grid-signaling", "a dispersion-free state of the grid tensor has a marginal depending on the other side", || {
                let ok = s.marginals.0 != s.marginals.1 && s.witness.is_some();
                Ok(verdict(ok, serde_json::to_value(&s).expect("serializable"), json!({ "marginals": s.marginals })))
            }));
            let b = p.block_subgrid.clone();
            out.push(Claim::run("grid-block-subgrid", "the image of a row times a column is no test of the grid tensor", || {
                Ok(verdict(!b.is_test, serde_json::to_value(&b).expect("serializable"), json!({ "image": b.image })))
            }));
        }
        (Ok(p), "graph") => {
            let w = p.product_state.clone();
            out.push(Claim::run("graph-product-state", "row state times column state fails a test sum on the graph tensor", || {
                Ok(verdict(w.sum != "1/1", serde_json::to_value(&w).expect("serializable"), json!({ "sum": w.sum })))
            }));
        }
        _ => {}
    }
    out
}

fn named(space: TestSpace, name: &str) -> TestSpace {
    space.with_name(name)
}

/// Factor spaces for product sweeps whose pair products stay within 36 outcomes.
fn product_factors(max_n: usize) -> Result<Vec<TestSpace>> {
    let mut out = vec![binary_pair(), triangle()];
    for n in 2..=max_n.min(3) {
        out.push(classical(&letters(n))?);
    }
    out.push(named(grid(&letters(2))?, "grid(2)"));
    out.push(named(graph(&letters(2))?, "graph(2)"));
    Ok(out)
}

pub fn products(max_n: usize) -> Vec<Claim> {
    let jobs: Vec<Job<'_>> = vec![
        one(move || fr_equals_nonsignaling(max_n)),
        one(binary_census),
        one(move || fr_contains_products(max_n)),
        one(move || marginals_are_states(max_n)),
        one(product_states_nonsignaling),
        one(fr_is_tensor_product),
        one(grid_tensor_signals),
        one(graph_tensor_lacks_products),
    ];
    run_parallel(jobs)
}

fn pairs_within(factors: &[TestSpace], cap: usize) -> Vec<(&TestSpace, &TestSpace)> {
    let mut out = Vec::new();
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i..] {
            if a.outcome_count() * b.outcome_count() <= cap {
                out.push((a, b));
            }
        }
    }
    out
}

fn fr_equals_nonsignaling(max_n: usize) -> Claim {
    Claim::run("fr-equals-nonsignaling", "states of the two-stage product are exactly the non-signaling states", || {
        let factors = product_factors(max_n)?;
        let mut checked = Vec::new();
        for (a, b) in pairs_within(&factors, 16) {
            let fr = StatePolytope::of(&fr_product(a, b)?)?;
            let ns = non_signaling_polytope(a, b)?;
            if fr.vertices() != ns.vertices() {
                return Ok((Status::Refuted, json!({ "a": a.name(), "b": b.name(), "fr_vertices": fr.vertices().len(), "ns_vertices": ns.vertices().len() })));
            }
            checked.push(json!({ "a": a.name(), "b": b.name(), "vertices": ns.vertices().len() }));
        }
        Ok((Status::Verified, json!({ "pairs": checked })))
    })
}

/// Vertices of the binary-pair non-signaling polytope, split into
/// dispersion-free and entangled ones, with a separating functional for each
/// entangled vertex.
pub fn binary_census() -> Claim {
    Claim::run("binary-vertex-census", "the binary-pair non-signaling polytope has 24 vertices: 16 dispersion-free and 8 entangled", || {
        let s = binary_pair();
        let ns = non_signaling_polytope(&s, &s)?;
        let factor = StatePolytope::of(&s)?;
        let gens: Vec<Vec<_>> = factor
            .vertices()
            .iter()
            .flat_map(|a| factor.vertices().iter().map(move |b| product_state(a, b)))
            .collect();
        let (mut deterministic, mut entangled, mut certificates) = (0, 0, Vec::new());
        for v in ns.vertices() {
            if v.iter().all(|w| w.is_integer()) {
                deterministic += 1;
                continue;
            }
            let st = BipartiteState::new(&s, &s, v.clone())?;
            match st.separability(factor.vertices(), factor.vertices())? {
                Separability::Separable(_) => return Ok((Status::Refuted, json!({ "separable_non_deterministic": v.iter().map(format_q).collect::<Vec<_>>() }))),
                Separability::Entangled { normal, offset } => {
                    let certified = dot(&normal, v) + &offset > num_traits::Zero::zero()
                        && gens.iter().all(|g| dot(&normal, g) + &offset <= num_traits::Zero::zero());
                    if !certified {
                        return Ok((Status::Refuted, json!({ "uncertified": v.iter().map(format_q).collect::<Vec<_>>() })));
                    }
                    entangled += 1;
                    certificates.push(json!({
                        "vertex": v.iter().map(format_q).collect::<Vec<_>>(),
                        "normal": normal.iter().map(format_q).collect::<Vec<_>>(),
                        "offset": format_q(&offset),
                    }));
                }
            }
        }
        let counts = json!({ "vertices": ns.vertices().len(), "dispersion_free": deterministic, "entangled": entangled });
        let ok = ns.vertices().len() == 24 && deterministic == 16 && entangled == 8;
        Ok(verdict(ok, json!({ "counts": counts, "certificates": certificates }), counts))
    })
}

fn fr_contains_products(max_n: usize) -> Claim {
    Claim::run("fr-contains-product-tests", "every product test E × F is a two-stage test", || {
        let factors = product_factors(max_n)?;
        let mut pairs = 0;
        for (a, b) in pairs_within(&factors, 36) {
            let fr = fr_product(a, b)?;
            let lookup = fr.test_set_lookup();
            if let Some(t) = cartesian_product(a, b)?.tests().iter().find(|t| !lookup.contains(t.as_slice())) {
                return Ok((Status::Refuted, json!({ "a": a.name(), "b": b.name(), "test": t })));
            }
            pairs += 1;
        }
        Ok((Status::Verified, json!({ "pairs": pairs })))
    })
}

fn marginals_are_states(max_n: usize) -> Claim {
    Claim::run("fr-marginals-are-states", "both marginals of every two-stage product state are states", || {
        let factors = product_factors(max_n)?;
        let mut vertices = 0;
        for (a, b) in pairs_within(&factors, 16) {
            for v in StatePolytope::of(&fr_product(a, b)?)?.vertices() {
                let (m1, m2) = BipartiteState::new(a, b, v.clone())?.marginals();
                if validate_weight(a, &m1).is_err() || validate_weight(b, &m2).is_err() {
                    return Ok((Status::Refuted, json!({ "a": a.name(), "b": b.name(), "vertex": v.iter().map(format_q).collect::<Vec<_>>() })));
                }
                vertices += 1;
            }
        }
        Ok((Status::Verified, json!({ "vertices": vertices })))
    })
}

fn product_states_nonsignaling() -> Claim {
    Claim::run("product-states-nonsignaling", "products of factor states are non-signaling", || {
        let spaces = [binary_pair(), triangle(), grid(&letters(2))?, graph(&letters(2))?];
        let mut checked = 0;
        for a in &spaces {
            for b in &spaces {
                let (va, vb) = (StatePolytope::of(a)?, StatePolytope::of(b)?);
                for alpha in va.vertices() {
                    for beta in vb.vertices() {
                        let st = BipartiteState::product(a, b, alpha, beta, None)?;
                        if let Some(w) = st.signaling_witness() {
                            return Ok((Status::Refuted, json!({ "a": a.name(), "b": b.name(), "witness": w })));
                        }
                        checked += 1;
                    }
                }
            }
        }
        Ok((Status::Verified, json!({ "products": checked })))
    })
}

fn fr_is_tensor_product() -> Claim {
    Claim::run("fr-tensor-axioms", "the two-stage product satisfies both tensor-product clauses", || {
        let s = binary_pair();
        let fr = fr_product(&s, &s)?;
        let id: Vec<usize> = (0..fr.outcome_count()).collect();
        let r = check_tensor_axioms(&s, &s, &fr, &id)?;
        let w = serde_json::to_value(&r).expect("serializable");
        Ok(verdict(r.holds(), w.clone(), w))
    })
}

/// `((x1, x2), (y1, y2)) ↦ ((x1, y1), (x2, y2))` from `(E × E) × (F × F)`
/// into `(E × F) × (E × F)`, with `|E| = |F| = n`.
fn interleave_pairs(n: usize) -> Vec<usize> {
    let (side, m) = (n * n, n * n);
    (0..side * side)
        .map(|p| {
            let (x, y) = (p / side, p % side);
            let (x1, x2, y1, y2) = (x / n, x % n, y / n, y % n);
            (x1 * n + y1) * m + (x2 * n + y2)
        })
        .collect()
}

fn grid_tensor_signals() -> Claim {
    Claim::run("grid-tensor-signals", "restrictions of grid-tensor states to product outcomes can signal", || {
        let g = grid(&letters(2))?;
        let joint = grid(&letters(4))?;
        let embed = interleave_pairs(2);
        let r = check_tensor_axioms(&g, &g, &joint, &embed)?;
        let w = serde_json::to_value(&r).expect("serializable");
        Ok(verdict(r.restriction_failure.is_some(), w.clone(), w))
    })
}

fn graph_tensor_lacks_products() -> Claim {
    Claim::run("graph-tensor-product-states", "some product of graph states has no extension to the graph tensor", || {
        let g = graph(&letters(2))?;
        let joint = graph(&letters(4))?;
        let embed = interleave_pairs(2);
        let r = check_tensor_axioms(&g, &g, &joint, &embed)?;
        let w = serde_json::to_value(&r).expect("serializable");
        Ok(verdict(r.product_failure.is_some(), w.clone(), w))
    })
}
