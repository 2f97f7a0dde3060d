//! File formats. Outcomes are referred to by index everywhere; rationals are
//! `"p/q"` strings in lowest terms.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use tsl_core::bitset::BitSet;
use tsl_core::rational::{format_q, parse_q};
use tsl_core::testspace::{Morphism, TestSpace};
use tsl_core::Q;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub name: String,
    pub outcomes: Vec<String>,
    pub tests: Vec<Vec<usize>>,
}

impl SpaceFile {
    pub fn of(space: &TestSpace) -> Self {
        SpaceFile { name: space.name().to_string(), outcomes: space.labels().to_vec(), tests: space.tests().to_vec() }
    }

    pub fn into_space(self) -> Result<TestSpace> {
        Ok(TestSpace::new(self.name, self.outcomes, self.tests)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub space: String,
    pub weights: Vec<String>,
}

impl StateFile {
    pub fn of(space: &str, weights: &[Q]) -> Self {
        StateFile { space: space.to_string(), weights: weights.iter().map(format_q).collect() }
    }

    pub fn weights(&self) -> Result<Vec<Q>> {
        self.weights.iter().map(|w| parse_q(w).with_context(|| format!("bad weight '{w}'"))).collect()
    }
}

/// A set-valued outcome map: `images[x]` lists target outcomes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub images: Vec<Vec<usize>>,
}

impl MapFile {
    pub fn morphism(&self, target: &TestSpace) -> Result<Morphism> {
        let n = target.outcome_count();
        if let Some(&bad) = self.images.iter().flatten().find(|&&y| y >= n) {
            bail!("map names outcome {bad} but the target has {n}");
        }
        Ok(Morphism::new(n, self.images.iter().map(|s| BitSet::from_indices(n, s.iter().copied())).collect()))
    }
}

/// Sorted keys, two-space indent, trailing newline.
pub fn canonical(value: &impl Serialize) -> Result<String> {
    let v: Value = serde_json::to_value(value)?;
    let mut out = serde_json::to_string_pretty(&v)?;
    out.push('\n');
    Ok(out)
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{} is not valid", path.display()))
}

pub fn read_space(path: &Path) -> Result<TestSpace> {
    read_json::<SpaceFile>(path)?.into_space().with_context(|| format!("{} is not a valid test space", path.display()))
}

pub fn read_state(path: &Path, space: &TestSpace) -> Result<Vec<Q>> {
    let file: StateFile = read_json(path)?;
    let w = file.weights()?;
    if w.len() != space.outcome_count() {
        bail!("{} has {} weights but {} has {} outcomes", path.display(), w.len(), space.name(), space.outcome_count());
    }
    Ok(w)
}

/// Write to `path`, or stdout when absent.
pub fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// One row per weight vector, outcome labels as the header.
pub fn weights_csv(labels: &[String], rows: &[Vec<Q>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(labels)?;
    for r in rows {
        w.write_record(r.iter().map(format_q))?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tsl_core::testspace::{grid, letters};

    #[test]
    fn space_round_trip_is_byte_identical() {
        let g = grid(&letters(3)).unwrap();
        let text = canonical(&SpaceFile::of(&g)).unwrap();
        let back: SpaceFile = serde_json::from_str(&text).unwrap();
        assert_eq!(canonical(&SpaceFile::of(&back.into_space().unwrap())).unwrap(), text);
        assert!(text.find("\"name\"").unwrap() < text.find("\"outcomes\"").unwrap());
    }

    #[test]
    fn weights_are_reduced() {
        let f = StateFile { space: "s".into(), weights: vec!["2/4".into(), "1".into()] };
        let w = f.weights().unwrap();
        assert_eq!(StateFile::of("s", &w).weights, vec!["1/2", "1/1"]);
        assert!(StateFile { space: "s".into(), weights: vec!["x".into()] }.weights().is_err());
    }

    #[test]
    fn csv_has_a_header() {
        let text = weights_csv(&letters(2), &[vec![Q::from_integer(1.into()), Q::from_integer(0.into())]]).unwrap();
        assert_eq!(text, "a,b\n1/1,0/1\n");
    }
}
