use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use serde::Deserialize;
use serde_json::{json, Value};

use tsl_core::bitset::BitSet;
use tsl_core::extensions::ExtensionSpec;
use tsl_core::products::{cartesian_product, fr_product, BipartiteState, Separability};
use tsl_core::rational::format_q;
use tsl_core::report::{Report, Status};
use tsl_core::states::{dispersion_free_states, sharpness_violation, StatePolytope};
use tsl_core::suites;
use tsl_core::symmetry::strongify;
use tsl_core::testspace::{binary_pair, classical, direct_sum, graph, grid, letters, triangle, Orthoalgebra, TestSpace};
use tsl_core::Q;

use crate::format::{canonical, emit, read_json, read_space, read_state, weights_csv, MapFile, SpaceFile, StateFile};
use crate::{BuildArgs, BuildKind, CheckArgs, ExtArgs, LogicArgs, ProductArgs, StatesArgs, VerifyArgs};

pub enum Outcome {
    Success,
    Refuted,
}

impl Outcome {
    fn of(ok: bool) -> Outcome {
        if ok {
            Outcome::Success
        } else {
            Outcome::Refuted
        }
    }
}

const SHIPPED_EXPECTATIONS: &str = include_str!("../expectations.json");

fn carrier(a: &BuildArgs) -> Result<Vec<String>> {
    match (&a.labels, a.n) {
        (Some(l), _) => Ok(l.clone()),
        (None, Some(n)) => Ok(letters(n)),
        (None, None) => bail!("{:?} needs --n or --labels", a.kind),
    }
}

fn size(a: &BuildArgs) -> Result<usize> {
    Ok(carrier(a)?.len())
}

pub fn build_space(a: &BuildArgs) -> Result<TestSpace> {
    Ok(match a.kind {
        BuildKind::Classical => classical(&carrier(a)?)?,
        BuildKind::Grid => grid(&carrier(a)?)?,
        BuildKind::Graph => graph(&carrier(a)?)?,
        BuildKind::Triangle => triangle(),
        BuildKind::Bits => binary_pair(),
        BuildKind::Construction => {
            let spec = ExtensionSpec::builtin(&a.ext)?;
            let n = size(a)?;
            let c = spec.construction(n, a.base)?;
            let c = if a.strongify { strongify(&c, &letters(n))? } else { c };
            let suffix = if a.strongify { "*" } else { "" };
            c.space.with_name(format!("construction({}, {n}){suffix}", a.ext))
        }
        BuildKind::ExtSpace => {
            let spec = ExtensionSpec::builtin(&a.ext)?;
            let n = size(a)?;
            if a.base == 0 {
                spec.space(n)?.space().clone()
            } else {
                spec.space_of(n, a.base)?.0.space().clone()
            }
        }
    })
}

pub fn build(a: &BuildArgs) -> Result<Outcome> {
    let space = build_space(a)?;
    emit(&canonical(&SpaceFile::of(&space))?, a.output.as_deref())?;
    Ok(Outcome::Success)
}

fn weight_strings(w: &[Q]) -> Vec<String> {
    w.iter().map(format_q).collect()
}

fn weight_list(space: &TestSpace, rows: &[Vec<Q>], csv: bool) -> Result<String> {
    if csv {
        return weights_csv(space.labels(), rows);
    }
    let states: Vec<StateFile> = rows.iter().map(|w| StateFile::of(space.name(), w)).collect();
    canonical(&json!({ "space": space.name(), "count": rows.len(), "states": states }))
}

pub fn states(a: &StatesArgs) -> Result<Outcome> {
    let space = read_space(&a.space)?;
    let text = if a.dispersion_free {
        weight_list(&space, &dispersion_free_states(&space)?, a.csv)?
    } else if a.dim {
        let p = StatePolytope::of(&space)?;
        canonical(&json!({
            "space": space.name(),
            "outcomes": space.outcome_count(),
            "affine_dim": p.affine_dim(),
            "equality_codimension": p.equality_codimension(),
            "vertices": p.vertices().len(),
        }))?
    } else if a.sharp {
        let p = StatePolytope::of(&space)?;
        let v = sharpness_violation(&space, &p);
        canonical(&json!({
            "space": space.name(),
            "sharp": v.is_none(),
            "witness": v.map(|(x, count)| json!({ "outcome": space.labels()[x], "states_at_one": count })),
        }))?
    } else {
        weight_list(&space, StatePolytope::of(&space)?.vertices(), a.csv)?
    };
    emit(&text, a.output.as_deref())?;
    Ok(Outcome::Success)
}

fn two_spaces(files: &[std::path::PathBuf]) -> Result<(TestSpace, TestSpace)> {
    match files {
        [x, y] => Ok((read_space(x)?, read_space(y)?)),
        _ => bail!("expected two space files, got {}", files.len()),
    }
}

pub fn product(a: &ProductArgs) -> Result<Outcome> {
    let space = if a.ext_tensor {
        if !a.spaces.is_empty() {
            bail!("--ext-tensor builds from --ext, --na and --nb; drop the file arguments");
        }
        let spec = ExtensionSpec::builtin(&a.ext)?;
        let t = spec.tensor_space(a.na, a.nb)?;
        t.joint.space().clone().with_name(format!("{}({})⊗{}({})", a.ext, a.na, a.ext, a.nb))
    } else {
        let (x, y) = two_spaces(&a.spaces)?;
        if a.fr {
            fr_product(&x, &y)?
        } else if a.sum {
            direct_sum(&x, &y)?
        } else {
            cartesian_product(&x, &y)?
        }
    };
    emit(&canonical(&SpaceFile::of(&space))?, a.output.as_deref())?;
    Ok(Outcome::Success)
}

fn labels_of(space: &TestSpace, set: &BitSet) -> Vec<String> {
    set.iter().map(|x| space.labels()[x].clone()).collect()
}

fn check_report(claim: &str, ok: bool, witness: Value) -> Result<(String, Outcome)> {
    let status = if ok { Status::Verified } else { Status::Refuted };
    Ok((canonical(&json!({ "claim": claim, "status": status, "witness": witness }))?, Outcome::of(ok)))
}

fn single(files: &[std::path::PathBuf]) -> Result<TestSpace> {
    match files {
        [x] => read_space(x),
        _ => bail!("expected one space file, got {}", files.len()),
    }
}

fn bipartite(files: &[std::path::PathBuf]) -> Result<(TestSpace, TestSpace, Vec<Q>)> {
    let [x, y, s] = files else {
        bail!("expected A B STATE, got {} files", files.len());
    };
    let (a, b) = (read_space(x)?, read_space(y)?);
    let prod = cartesian_product(&a, &b)?;
    let w = read_state(s, &prod)?;
    Ok((a, b, w))
}

pub fn check(a: &CheckArgs) -> Result<Outcome> {
    let (text, outcome) = if a.algebraic {
        let space = single(&a.files)?;
        match space.is_algebraic()? {
            None => check_report("algebraic", true, Value::Null)?,
            Some(w) => check_report(
                "algebraic",
                false,
                json!({ "a": labels_of(&space, &w.a), "b": labels_of(&space, &w.b), "c": labels_of(&space, &w.c) }),
            )?,
        }
    } else if a.sharp {
        let space = single(&a.files)?;
        let v = sharpness_violation(&space, &StatePolytope::of(&space)?);
        check_report("sharp", v.is_none(), json!(v.map(|(x, count)| json!({ "outcome": space.labels()[x], "states_at_one": count }))))?
    } else if a.nonsignaling {
        let (x, y, w) = bipartite(&a.files)?;
        let st = BipartiteState::new(&x, &y, w)?;
        let wit = st.signaling_witness();
        check_report("nonsignaling", wit.is_none(), serde_json::to_value(wit)?)?
    } else if a.separable {
        let (x, y, w) = bipartite(&a.files)?;
        let (vx, vy) = (StatePolytope::of(&x)?, StatePolytope::of(&y)?);
        let st = BipartiteState::new(&x, &y, w)?;
        match st.separability(vx.vertices(), vy.vertices())? {
            Separability::Separable(terms) => {
                let terms: Vec<Value> = terms
                    .iter()
                    .map(|(i, j, c)| json!({ "a": weight_strings(&vx.vertices()[*i]), "b": weight_strings(&vy.vertices()[*j]), "coefficient": format_q(c) }))
                    .collect();
                check_report("separable", true, json!({ "decomposition": terms }))?
            }
            Separability::Entangled { normal, offset } => {
                check_report("separable", false, json!({ "normal": weight_strings(&normal), "offset": format_q(&offset) }))?
            }
        }
    } else if a.morphism {
        let [s, t, m] = a.files.as_slice() else {
            bail!("expected SOURCE TARGET MAP, got {} files", a.files.len());
        };
        let (source, target) = (read_space(s)?, read_space(t)?);
        let map: MapFile = read_json(m)?;
        let v = map.morphism(&target)?.check(&source, &target)?;
        let witness = v.as_ref().map(|v| json!({ "condition": v.condition(), "detail": format!("{v:?}") }));
        check_report("morphism", v.is_none(), json!(witness))?
    } else {
        bail!("choose one of --nonsignaling, --separable, --algebraic, --sharp, --morphism");
    };
    emit(&text, a.output.as_deref())?;
    Ok(outcome)
}

pub fn logic(a: &LogicArgs) -> Result<Outcome> {
    let space = read_space(&a.space)?;
    if let Some(w) = space.is_algebraic()? {
        let witness = json!({ "a": labels_of(&space, &w.a), "b": labels_of(&space, &w.b), "c": labels_of(&space, &w.c) });
        let (text, outcome) = check_report("algebraic", false, witness)?;
        emit(&text, a.output.as_deref())?;
        return Ok(outcome);
    }
    let logic = Orthoalgebra::build(&space)?;
    let text = if a.dot {
        logic.to_dot()
    } else {
        let atoms: Vec<Vec<String>> = logic.atoms().iter().map(|&c| labels_of(&space, logic.representative(c))).collect();
        canonical(&json!({
            "space": space.name(),
            "elements": logic.len(),
            "atoms": atoms,
            "boolean": logic.is_boolean(),
            "axiom_violation": logic.axiom_violation(),
        }))?
    };
    emit(&text, a.output.as_deref())?;
    Ok(Outcome::Success)
}

pub fn ext(a: &ExtArgs) -> Result<Outcome> {
    let spec = ExtensionSpec::builtin(&a.ext)?;
    let (value, ok) = if a.regular {
        let r = spec.regularity(a.max_n)?;
        (json!({ "extension": spec.name(), "regular": r.is_regular(), "orientations_holding": r.holding(), "detail": r }), r.is_regular())
    } else if a.reasonable {
        let r = spec.reasonableness(a.max_n)?;
        (json!({ "extension": spec.name(), "reasonable": r.is_reasonable(), "detail": r }), r.is_reasonable())
    } else {
        let r = spec.check_laws(a.max_n)?;
        (serde_json::to_value(&r)?, r.all_pass())
    };
    emit(&canonical(&value)?, a.output.as_deref())?;
    Ok(Outcome::of(ok))
}

/// suite → extension → claim_id → expected status.
#[derive(Debug, Default, Deserialize)]
#[serde(transparent)]
pub struct Expectations(BTreeMap<String, BTreeMap<String, BTreeMap<String, Status>>>);

impl Expectations {
    fn expected(&self, suite: &str, ext: &str, claim: &str) -> Option<Status> {
        self.0.get(suite)?.get(ext)?.get(claim).copied()
    }
}

/// Items whose status contradicts the expectations: an unexpected
/// refutation, or a marked refutation that no longer happens.
pub fn unexpected(report: &Report, ext: &str, exp: &Expectations) -> Vec<String> {
    report
        .items
        .iter()
        .filter_map(|c| {
            let expected = exp.expected(&report.suite, ext, &c.claim_id);
            let bad = match (c.status, expected) {
                (Status::Refuted, Some(Status::Refuted)) => false,
                (Status::Refuted, _) => true,
                (s, Some(Status::Refuted)) => s == Status::Verified,
                _ => false,
            };
            bad.then(|| format!("{} is {:?}, expected {:?}", c.claim_id, c.status, expected.unwrap_or(Status::Verified)))
        })
        .collect()
}

pub fn verify(a: &VerifyArgs) -> Result<Outcome> {
    let exp: Expectations = match &a.expectations {
        Some(p) => read_json(p)?,
        None => serde_json::from_str(SHIPPED_EXPECTATIONS).context("shipped expectations are malformed")?,
    };
    let report = suites::run(&a.suite, &a.ext, a.max_n)?;
    emit(&canonical(&report)?, a.report.as_deref())?;
    let count = |s: Status| report.items.iter().filter(|c| c.status == s).count();
    let bad = unexpected(&report, &a.ext, &exp);
    eprintln!(
        "{}: {} verified, {} refuted, {} skipped, {} unexpected",
        report.suite,
        count(Status::Verified),
        count(Status::Refuted),
        count(Status::Skipped),
        bad.len()
    );
    for b in &bad {
        eprintln!("  {b}");
    }
    Ok(Outcome::of(bad.is_empty()))
}
