//! Complex file formats.
//!
//! JSON: `{"m": 5, "maximal_faces": [[1,2],[2,3],...]}` with 1-based labels.
//!
//! Text: a header line `m=5`, then one face per line as space-separated
//! labels. Blank lines and anything after `#` are ignored.
//!
//! Output is canonical: maximal faces only, each sorted, listed in
//! ascending bitmask order.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};

/// The wire form of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexBlock {
    pub m: u32,
    pub maximal_faces: Vec<Vec<u32>>,
}

impl From<&SimplicialComplex> for ComplexBlock {
    fn from(k: &SimplicialComplex) -> Self {
        ComplexBlock { m: k.m(), maximal_faces: k.facets().iter().map(|f| f.to_vec()).collect() }
    }
}

impl ComplexBlock {
    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        let faces = self.maximal_faces.iter().map(|f| VertexSet::from_labels(f.iter().copied())).collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_maximal_faces(self.m, faces)
    }
}

pub fn parse_json(s: &str) -> Result<SimplicialComplex> {
    let block: ComplexBlock = serde_json::from_str(s).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    block.to_complex()
}

/// Labels on one line with their 1-based columns.
fn parse_labels(line: &str, lineno: usize) -> Result<Vec<(u32, usize)>> {
    let mut out = Vec::new();
    let mut col = 1;
    for token in line.split(' ') {
        let trimmed = token.trim();
        if !trimmed.is_empty() {
            let column = col + token.find(trimmed).unwrap_or(0);
            let v: u32 = trimmed.parse().map_err(|_| Error::Parse {
                line: lineno,
                column,
                message: format!("expected a vertex label, found {trimmed:?}"),
            })?;
            out.push((v, column));
        }
        col += token.chars().count() + 1;
    }
    Ok(out)
}

pub fn parse_text(s: &str) -> Result<SimplicialComplex> {
    let mut m: Option<u32> = None;
    let mut faces = Vec::new();
    for (idx, raw) in s.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let Some(m) = m else {
            let body = line.trim();
            let value = body.strip_prefix("m=").or_else(|| body.strip_prefix("m =")).ok_or_else(|| Error::Parse {
                line: lineno,
                column: raw.find(|c: char| !c.is_whitespace()).unwrap_or(0) + 1,
                message: "expected header `m=<number of vertices>`".into(),
            })?;
            m = Some(value.trim().parse().map_err(|_| Error::Parse {
                line: lineno,
                column: raw.find('=').unwrap_or(0) + 2,
                message: format!("bad vertex count {:?}", value.trim()),
            })?);
            continue;
        };
        let labels = parse_labels(line, lineno)?;
        if let Some(&(bad, column)) = labels.iter().find(|&&(v, _)| v == 0 || v > m) {
            return Err(Error::Parse { line: lineno, column, message: format!("vertex {bad} is outside 1..={m}") });
        }
        faces.push(VertexSet::from_labels(labels.into_iter().map(|(v, _)| v))?);
    }
    let m = m.ok_or_else(|| Error::Parse { line: 1, column: 1, message: "missing header `m=<n>`".into() })?;
    SimplicialComplex::from_maximal_faces(m, faces)
}

/// Detects the format from the first non-blank character.
pub fn parse_complex(s: &str) -> Result<SimplicialComplex> {
    if s.trim_start().starts_with('{') {
        parse_json(s)
    } else {
        parse_text(s)
    }
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    let s = fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_complex(&s)
}

pub fn to_json(k: &SimplicialComplex) -> String {
    serde_json::to_string(&ComplexBlock::from(k)).expect("plain data serializes")
}

pub fn to_text(k: &SimplicialComplex) -> String {
    let mut out = format!("m={}\n", k.m());
    for f in k.facets() {
        let labels: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn json_round_trip() {
        let k = corpus::pentagon();
        let s = to_json(&k);
        assert_eq!(s, r#"{"m":5,"maximal_faces":[[1,2],[2,3],[3,4],[1,5],[4,5]]}"#);
        assert_eq!(parse_complex(&s).unwrap(), k);
    }

    #[test]
    fn text_round_trip() {
        let k = corpus::rp2();
        assert_eq!(parse_complex(&to_text(&k)).unwrap(), k);
        let src = "# three points\nm=3\n\n";
        assert_eq!(parse_text(src).unwrap(), SimplicialComplex::disjoint_points(3).unwrap());
        let src = "m=4\n1 2 3 # a triangle\n1 2\n3\n";
        assert_eq!(parse_text(src).unwrap().facets().len(), 2);
    }

    #[test]
    fn diagnostics() {
        match parse_json("{\"m\": 3,\n \"maximal_faces\": [[1,2],}") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            parse_text("m=3\n1 x\n"),
            Err(Error::Parse { line: 2, column: 3, message: "expected a vertex label, found \"x\"".into() })
        );
        assert!(matches!(parse_text("m=3\n1 4\n"), Err(Error::Parse { line: 2, column: 3, .. })));
        assert!(matches!(parse_text("1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_text(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_json(r#"{"m":0,"maximal_faces":[]}"#), Err(Error::NoVertices)));
        assert!(matches!(parse_json(r#"{"m":2,"maximal_faces":[[3]]}"#), Err(Error::VertexOutOfRange { .. })));
    }
}
