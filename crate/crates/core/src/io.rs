//! Text and JSON formats for complexes, maps, chains, and results.
//!
//! Text: one facet per line, labels separated by whitespace, `#` starts a
//! comment line. JSON: `{"facets": [["a","b"], ...]}`. Parsers auto-detect
//! the format from the first non-blank character.

use std::collections::BTreeMap;
use std::io::Read;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::category::CatResult;
use crate::collapse::Core;
use crate::complex::Complex;
use crate::contiguity::Decision;
use crate::error::{Error, Result};
use crate::maps::{ContiguityChain, VertexMap};

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    facets: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct MapJson {
    source: Value,
    target: Value,
    assignment: BTreeMap<String, String>,
}

/// Parses a complex in either format.
pub fn parse_complex(input: &str) -> Result<Complex> {
    if input.trim_start().starts_with('{') {
        parse_complex_json(input)
    } else {
        parse_complex_text(input)
    }
}

pub fn parse_complex_text(input: &str) -> Result<Complex> {
    let facets: Vec<Vec<&str>> = input
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().collect())
        .collect();
    if facets.is_empty() {
        return Err(Error::Parse("no facets".into()));
    }
    Complex::from_facets(facets)
}

pub fn parse_complex_json(input: &str) -> Result<Complex> {
    let parsed: ComplexJson = serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
    complex_from_json(parsed)
}

fn complex_from_json(parsed: ComplexJson) -> Result<Complex> {
    if parsed.facets.iter().any(Vec::is_empty) {
        return Err(Error::Parse("empty facet".into()));
    }
    Complex::from_facets(parsed.facets)
}

fn complex_from_value(v: Value) -> Result<Complex> {
    match v {
        Value::String(s) => parse_complex(&s),
        other => {
            let parsed: ComplexJson = serde_json::from_value(other).map_err(|e| Error::Parse(e.to_string()))?;
            complex_from_json(parsed)
        }
    }
}

/// Canonical text form.
pub fn complex_to_text(k: &Complex) -> String {
    k.to_string()
}

pub fn complex_to_json(k: &Complex) -> Value {
    json!({ "facets": k.facet_labels() })
}

/// Reads a file, or standard input for `-`.
pub fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
    }
}

pub fn read_complex(path: &str) -> Result<Complex> {
    parse_complex(&read_input(path)?)
}

/// Parses `{"source": ..., "target": ..., "assignment": {...}}`; source
/// and target are complexes in JSON form or strings in either format.
pub fn parse_map(input: &str) -> Result<VertexMap> {
    let parsed: MapJson = serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
    let source = Arc::new(complex_from_value(parsed.source)?);
    let target = Arc::new(complex_from_value(parsed.target)?);
    VertexMap::from_labels(source, target, parsed.assignment)
}

fn assignment_json(m: &VertexMap) -> Value {
    let pairs: BTreeMap<String, String> = m.label_pairs().into_iter().collect();
    json!(pairs)
}

pub fn map_to_json(m: &VertexMap) -> Value {
    json!({
        "source": complex_to_json(m.source()),
        "target": complex_to_json(m.target()),
        "assignment": assignment_json(m),
    })
}

/// Shared endpoints once, then one assignment per map.
pub fn chain_to_json(c: &ContiguityChain) -> Value {
    json!({
        "source": complex_to_json(c.first().source()),
        "target": complex_to_json(c.first().target()),
        "maps": c.maps().iter().map(assignment_json).collect::<Vec<_>>(),
    })
}

/// Inverse of [`chain_to_json`]; the result is revalidated.
pub fn parse_chain(input: &str) -> Result<ContiguityChain> {
    let v: Value = serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
    let field = |name: &str| v.get(name).cloned().ok_or_else(|| Error::Parse(format!("missing {name}")));
    let source = Arc::new(complex_from_value(field("source")?)?);
    let target = Arc::new(complex_from_value(field("target")?)?);
    let maps: Vec<BTreeMap<String, String>> =
        serde_json::from_value(field("maps")?).map_err(|e| Error::Parse(e.to_string()))?;
    let maps = maps
        .into_iter()
        .map(|a| VertexMap::from_labels(source.clone(), target.clone(), a))
        .collect::<Result<Vec<_>>>()?;
    ContiguityChain::new(maps)
}

pub fn cat_result_to_json(k: &Complex, r: &CatResult) -> Value {
    let mut out = json!({
        "lower": r.lower,
        "upper": r.upper,
        "exact": r.exact,
        "witness": {
            "blocks": r.witness.blocks,
            "block_facets": r.witness.block_labels(k),
        },
    });
    if !r.chains.is_empty() {
        out["chains"] = json!(r.chains.iter().map(chain_to_json).collect::<Vec<_>>());
    }
    out
}

pub fn core_to_json(c: &Core) -> Value {
    json!({
        "core": complex_to_json(&c.complex),
        "steps": c.steps,
    })
}

/// `{"decision": "yes"|"no"|"unknown", ...}` with the witness under
/// `"witness"` or the search counts for `unknown`.
pub fn decision_to_json<W>(d: &Decision<W>, witness: impl FnOnce(&W) -> Value) -> Value {
    match d {
        Decision::Yes(w) => json!({ "decision": "yes", "witness": witness(w) }),
        Decision::No => json!({ "decision": "no" }),
        Decision::Unknown { visited, budget } => {
            json!({ "decision": "unknown", "visited": visited, "budget": budget })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_round_trip() {
        let text = "# hollow triangle\na b\n\nb c\nc a\n";
        let k = parse_complex(text).unwrap();
        assert_eq!(k.num_facets(), 3);
        assert_eq!(parse_complex(&complex_to_text(&k)).unwrap(), k);
        let j = complex_to_json(&k).to_string();
        assert_eq!(parse_complex(&j).unwrap(), k);
    }

    #[test]
    fn malformed_inputs_are_parse_errors() {
        assert!(matches!(parse_complex("# only comments\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_complex("{\"facets\": 3}"), Err(Error::Parse(_))));
        assert!(matches!(parse_complex("{\"facets\": [[]]}"), Err(Error::Parse(_))));
    }

    #[test]
    fn maps_and_chains_round_trip() {
        let input = r#"{"source": {"facets": [["a","b"]]}, "target": "x y\n",
            "assignment": {"a": "x", "b": "y"}}"#;
        let m = parse_map(input).unwrap();
        assert!(m.is_simplicial());
        assert_eq!(parse_map(&map_to_json(&m).to_string()).unwrap(), m);
        let c = VertexMap::constant(m.source().clone(), m.target().clone(), m.apply(crate::VertexId::new(0)))
            .unwrap();
        let chain = ContiguityChain::new(vec![m, c]).unwrap();
        let back = parse_chain(&chain_to_json(&chain).to_string()).unwrap();
        assert_eq!(back.maps(), chain.maps());
    }
}
