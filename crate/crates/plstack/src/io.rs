//! JSON file formats: complexes, schedules, presentations, and permutation
//! tables, plus helpers for emitting exact integers as JSON numbers.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Number, Value};

use crate::cobordism::{ScheduleStep, SubdivisionSchedule};
use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::perm::PermutationGroupTable;
use crate::presentation::GroupPresentation;
use crate::Int;

#[derive(Debug, Serialize, Deserialize)]
struct ComplexFile {
    name: String,
    facets: Vec<Vec<u32>>,
}

/// A complex together with its file name tag.
#[derive(Debug, Clone)]
pub struct NamedComplex {
    pub name: String,
    pub complex: SimplicialComplex,
}

pub fn parse_complex(json: &str) -> Result<NamedComplex> {
    let file: ComplexFile =
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    let mut seen = BTreeSet::new();
    let mut faces = Vec::with_capacity(file.facets.len());
    for raw in &file.facets {
        let face = Face::new(raw.iter().copied())
            .map_err(|e| Error::Parse(e.to_string()))?;
        if !seen.insert(face.clone()) {
            return Err(Error::Parse(format!("duplicate facet {face}")));
        }
        faces.push(face);
    }
    Ok(NamedComplex {
        name: file.name,
        complex: SimplicialComplex::from_facets(faces),
    })
}

pub fn read_complex(path: &Path) -> Result<NamedComplex> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_complex(&text)
}

pub fn complex_to_value(name: &str, x: &SimplicialComplex) -> Value {
    serde_json::json!({
        "name": name,
        "facets": faces_value(x.facets().iter()),
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct ScheduleFile {
    floor_dim: i64,
    steps: Vec<ScheduleStepFile>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ScheduleStepFile {
    face: Vec<u32>,
    apex: Option<u32>,
}

pub fn parse_schedule(json: &str) -> Result<SubdivisionSchedule> {
    let file: ScheduleFile =
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    let steps = file
        .steps
        .into_iter()
        .map(|s| {
            Ok(ScheduleStep {
                face: Face::new(s.face.iter().copied())
                    .map_err(|e| Error::Parse(e.to_string()))?,
                apex: s.apex.map(Vertex),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SubdivisionSchedule {
        floor_dim: file.floor_dim,
        steps,
    })
}

pub fn read_schedule(path: &Path) -> Result<SubdivisionSchedule> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_schedule(&text)
}

#[derive(Debug, Serialize, Deserialize)]
struct PresentationFile {
    generators: Vec<String>,
    relators: Vec<String>,
}

pub fn parse_presentation(json: &str) -> Result<GroupPresentation> {
    let file: PresentationFile =
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    let gens: Vec<&str> = file.generators.iter().map(String::as_str).collect();
    let rels: Vec<&str> = file.relators.iter().map(String::as_str).collect();
    GroupPresentation::parse(&gens, &rels)
}

pub fn read_presentation(path: &Path) -> Result<GroupPresentation> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_presentation(&text)
}

pub fn presentation_to_value(p: &GroupPresentation) -> Value {
    serde_json::json!({
        "generators": p.generators(),
        "relators": p.relators().iter().map(|r| p.relator_string(r)).collect::<Vec<_>>(),
    })
}

#[derive(Debug, Serialize, Deserialize)]
struct TableFile {
    degree: usize,
    elements: Vec<Vec<usize>>,
}

pub fn parse_table(json: &str) -> Result<PermutationGroupTable> {
    let file: TableFile =
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    PermutationGroupTable::from_elements(file.degree, file.elements)
}

pub fn read_table(path: &Path) -> Result<PermutationGroupTable> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_table(&text)
}

/// Emit an exact integer as a JSON number of arbitrary size.
pub fn int_value(n: &Int) -> Value {
    let num: Number = n
        .to_string()
        .parse()
        .expect("decimal integer literal is a JSON number");
    Value::Number(num)
}

pub fn ints_value(ns: &[Int]) -> Value {
    Value::Array(ns.iter().map(int_value).collect())
}

pub fn face_value(f: &Face) -> Value {
    Value::Array(f.ids().into_iter().map(Value::from).collect())
}

pub fn faces_value<'a>(faces: impl Iterator<Item = &'a Face>) -> Value {
    Value::Array(faces.map(face_value).collect())
}
