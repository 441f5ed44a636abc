//! Text graph files, DOT export and JSON conversion.
//!
//! ```text
//! # golden mean shift
//! alphabet: 0 1
//! vertices: g0 g1
//! initial: g0
//! edge: g0 0 g0
//! edge: g0 1 g1
//! edge: g1 0 g0
//! ```
//!
//! Names are arbitrary whitespace-free tokens; declaration order fixes the
//! alphabet order. The empty path set is written with no vertices and a
//! blank `initial:` line.

use std::collections::HashSet;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::presentation::{Presentation, RawPresentation};

/// A parsed but not yet validated graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub raw: RawPresentation,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<GraphFile> {
        let mut alphabet = None;
        let mut vertices = None;
        let mut initial = None;
        let mut edges = Vec::new();
        let mut seen_edges = HashSet::new();
        for (i, line) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, rest)) = line.split_once(':') else {
                return Err(parse_error(lineno, "expected `key: value`"));
            };
            let tokens: Vec<String> = rest.split_whitespace().map(String::from).collect();
            let once = |slot: &mut Option<Vec<String>>, what: &str| {
                if slot.is_some() {
                    return Err(parse_error(lineno, format!("duplicate `{what}` line")));
                }
                *slot = Some(tokens.clone());
                Ok(())
            };
            match key.trim() {
                "alphabet" => once(&mut alphabet, "alphabet")?,
                "vertices" => once(&mut vertices, "vertices")?,
                "initial" => {
                    if tokens.len() > 1 {
                        return Err(parse_error(lineno, "`initial` takes at most one vertex"));
                    }
                    once(&mut initial, "initial")?;
                }
                "edge" => {
                    let [src, sym, dst] = <[String; 3]>::try_from(tokens)
                        .map_err(|_| parse_error(lineno, "`edge` takes SRC SYMBOL DST"))?;
                    if !seen_edges.insert((src.clone(), sym.clone(), dst.clone())) {
                        return Err(parse_error(lineno, format!("duplicate edge {src} {sym} {dst}")));
                    }
                    edges.push((src, sym, dst));
                }
                other => return Err(parse_error(lineno, format!("unknown key `{other}`"))),
            }
        }
        let missing = |what: &str| parse_error(0, format!("missing `{what}` line"));
        Ok(GraphFile {
            raw: RawPresentation {
                alphabet: alphabet.ok_or_else(|| missing("alphabet"))?,
                vertices: vertices.ok_or_else(|| missing("vertices"))?,
                initial: initial.ok_or_else(|| missing("initial"))?.pop(),
                edges,
            },
        })
    }

    pub fn from_presentation(p: &Presentation) -> GraphFile {
        GraphFile {
            raw: RawPresentation {
                alphabet: p.alphabet().names().to_vec(),
                vertices: p.vertices().to_vec(),
                initial: p.initial().map(|v| p.vertex_name(v).to_string()),
                edges: p
                    .edges()
                    .iter()
                    .map(|e| {
                        (
                            p.vertex_name(e.source).to_string(),
                            p.alphabet().name(e.symbol).to_string(),
                            p.vertex_name(e.target).to_string(),
                        )
                    })
                    .collect(),
            },
        }
    }

    pub fn to_presentation(&self) -> Result<Presentation> {
        self.raw.validate()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "alphabet": self.raw.alphabet,
            "vertices": self.raw.vertices,
            "initial": self.raw.initial,
            "edges": self.raw.edges.iter().map(|(s, a, t)| json!([s, a, t])).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for GraphFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |f: &mut fmt::Formatter<'_>, key: &str, items: &[String]| {
            if items.is_empty() {
                writeln!(f, "{key}:")
            } else {
                writeln!(f, "{key}: {}", items.join(" "))
            }
        };
        line(f, "alphabet", &self.raw.alphabet)?;
        line(f, "vertices", &self.raw.vertices)?;
        line(f, "initial", self.raw.initial.as_slice())?;
        for (s, a, t) in &self.raw.edges {
            writeln!(f, "edge: {s} {a} {t}")?;
        }
        Ok(())
    }
}

/// Parses and validates a graph file.
pub fn read(text: &str) -> Result<Presentation> {
    GraphFile::parse(text)?.to_presentation()
}

pub fn write(p: &Presentation) -> String {
    GraphFile::from_presentation(p).to_string()
}

pub fn to_json(p: &Presentation) -> Value {
    GraphFile::from_presentation(p).to_json()
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz description with the initial vertex double-circled.
pub fn to_dot(p: &Presentation) -> String {
    let mut s = String::from("digraph pathset {\n    rankdir=LR;\n");
    for (v, name) in p.vertices().iter().enumerate() {
        let shape = if p.initial() == Some(v) { "doublecircle" } else { "circle" };
        s.push_str(&format!("    {} [shape={shape}];\n", quote(name)));
    }
    for e in p.edges() {
        s.push_str(&format!(
            "    {} -> {} [label={}];\n",
            quote(p.vertex_name(e.source)),
            quote(p.vertex_name(e.target)),
            quote(p.alphabet().name(e.symbol)),
        ));
    }
    s.push_str("}\n");
    s
}
