//! Line-oriented text formats for graphs and colouring certificates.
//!
//! Graphs: `p <n> <m>` followed by `m` lines `e <u> <v>` (1-based). Lines
//! starting with `c` are comments. Certificates: `s COLORING a=<a> b=<b>`
//! followed by one `v <vertex> d1|d2 <class>` line per vertex.
//! Gadgets: a graph file carrying `c gadget <property> <port names>` and
//! `c port <name> <vertex>` lines, so every gadget file is also a graph file.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{Color, MixedColoring, Params};
use crate::gadget::{GadgetProperty, GadgetSpec};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header line")]
    MissingHeader,
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, FormatError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| syntax(line, format!("bad {what} `{tok}`")))
}

fn is_skippable(line: &str) -> bool {
    line.is_empty() || line.starts_with('c')
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if is_skippable(line) {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(syntax(line_no, "duplicate header"));
                }
                let n = parse_num(toks.next(), line_no, "vertex count")?;
                let m = parse_num(toks.next(), line_no, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or(FormatError::MissingHeader)?;
                let u = parse_num(toks.next(), line_no, "endpoint")?;
                let v = parse_num(toks.next(), line_no, "endpoint")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(syntax(line_no, format!("endpoint out of range 1..={n}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(syntax(line_no, format!("unknown line type `{other}`"))),
            None => {}
        }
        if toks.next().is_some() {
            return Err(syntax(line_no, "trailing tokens"));
        }
    }
    let (n, m) = header.ok_or(FormatError::MissingHeader)?;
    if edges.len() != m {
        return Err(FormatError::EdgeCount { declared: m, found: edges.len() });
    }
    Ok(Graph::build(n, &edges)?)
}

/// Canonical writer: edges in lexicographic order, comments first.
pub fn write_graph(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "c {c}");
    }
    let _ = writeln!(out, "p {} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Writes a canonicalised certificate for a total colouring.
pub fn write_certificate(p: Params, c: &MixedColoring) -> String {
    let c = c.canonicalize();
    let mut out = format!("s COLORING a={} b={}\n", p.a, p.b);
    for (v, col) in c.to_vec().into_iter().enumerate() {
        let _ = writeln!(out, "v {} {}", v + 1, col);
    }
    out
}

pub fn parse_certificate(text: &str) -> Result<(Params, MixedColoring), FormatError> {
    let mut params = None;
    let mut assigned: Vec<Option<Color>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if is_skippable(line) {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("s") => {
                if toks.next() != Some("COLORING") {
                    return Err(syntax(line_no, "expected `s COLORING`"));
                }
                let a = toks.next().and_then(|t| t.strip_prefix("a="));
                let b = toks.next().and_then(|t| t.strip_prefix("b="));
                params = Some(Params::new(
                    parse_num(a, line_no, "a=")?,
                    parse_num(b, line_no, "b=")?,
                ));
            }
            Some("v") => {
                if params.is_none() {
                    return Err(FormatError::MissingHeader);
                }
                let v = parse_num(toks.next(), line_no, "vertex")?;
                if v == 0 {
                    return Err(syntax(line_no, "vertices are 1-based"));
                }
                let tag = toks.next();
                let idx = parse_num(toks.next(), line_no, "class")?;
                let col = match tag {
                    Some("d1") => Color::D1(idx),
                    Some("d2") => Color::D2(idx),
                    _ => return Err(syntax(line_no, "expected d1 or d2")),
                };
                if assigned.len() < v {
                    assigned.resize(v, None);
                }
                if assigned[v - 1].replace(col).is_some() {
                    return Err(syntax(line_no, format!("vertex {v} coloured twice")));
                }
            }
            Some(other) => return Err(syntax(line_no, format!("unknown line type `{other}`"))),
            None => {}
        }
        if toks.next().is_some() {
            return Err(syntax(line_no, "trailing tokens"));
        }
    }
    let p = params.ok_or(FormatError::MissingHeader)?;
    Ok((p, MixedColoring::from_partial(assigned)))
}

fn property_name(p: &GadgetProperty) -> &'static str {
    match p {
        GadgetProperty::ForcedD2(_) => "forced-d2",
        GadgetProperty::ForcedD1(_) => "forced-d1",
        GadgetProperty::IffD1D2(..) => "iff-d1-d2",
        GadgetProperty::AtLeastOneD2(_) => "at-least-one-d2",
        GadgetProperty::CornerPattern(_) => "corner",
    }
}

pub fn parse_gadget(text: &str) -> Result<GadgetSpec, FormatError> {
    let g = parse_graph(text)?;
    let mut ports: Vec<(String, usize)> = Vec::new();
    let mut decl: Option<(usize, String, Vec<String>)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let mut toks = raw.split_whitespace();
        if toks.next() != Some("c") {
            continue;
        }
        match toks.next() {
            Some("port") => {
                let name = toks.next().ok_or_else(|| syntax(line_no, "missing port name"))?;
                let v = parse_num(toks.next(), line_no, "port vertex")?;
                if v == 0 || v > g.n() {
                    return Err(syntax(line_no, format!("port vertex out of range 1..={}", g.n())));
                }
                if ports.iter().any(|(n, _)| n == name) {
                    return Err(syntax(line_no, format!("port {name} declared twice")));
                }
                ports.push((name.to_string(), v - 1));
            }
            Some("gadget") => {
                if decl.is_some() {
                    return Err(syntax(line_no, "duplicate gadget line"));
                }
                let kind = toks.next().ok_or_else(|| syntax(line_no, "missing property"))?;
                decl = Some((line_no, kind.to_string(), toks.map(str::to_string).collect()));
            }
            _ => {}
        }
    }
    let (line_no, kind, names) = decl.ok_or_else(|| syntax(1, "missing `c gadget` line"))?;
    let mut at = Vec::with_capacity(names.len());
    for name in &names {
        let v = ports.iter().find(|(n, _)| n == name).map(|&(_, v)| v);
        at.push(v.ok_or_else(|| syntax(line_no, format!("undeclared port {name}")))?);
    }
    let arity = |want: usize| {
        if at.len() == want { Ok(()) } else { Err(syntax(line_no, format!("{kind} takes {want} port(s)"))) }
    };
    let property = match kind.as_str() {
        "forced-d2" => arity(1).map(|_| GadgetProperty::ForcedD2(at[0]))?,
        "forced-d1" => arity(1).map(|_| GadgetProperty::ForcedD1(at[0]))?,
        "iff-d1-d2" => arity(2).map(|_| GadgetProperty::IffD1D2(at[0], at[1]))?,
        "at-least-one-d2" if !at.is_empty() => GadgetProperty::AtLeastOneD2(at),
        "corner" if !at.is_empty() => GadgetProperty::CornerPattern(at),
        _ => return Err(syntax(line_no, format!("unknown property `{kind}`"))),
    };
    let spec = GadgetSpec { gadget: g, ports, property };
    spec.validate().map_err(|m| syntax(line_no, m))?;
    Ok(spec)
}

pub fn write_gadget(spec: &GadgetSpec, comments: &[String]) -> String {
    let name_of = |v: usize| spec.ports.iter().find(|&&(_, p)| p == v).map(|(n, _)| n.clone());
    let mut lines: Vec<String> = comments.to_vec();
    let mut decl = vec!["gadget".to_string(), property_name(&spec.property).to_string()];
    let mut extra = Vec::new();
    for v in spec.property.ports() {
        let name = name_of(v).unwrap_or_else(|| {
            let n = format!("p{}", v + 1);
            extra.push((n.clone(), v));
            n
        });
        decl.push(name);
    }
    lines.push(decl.join(" "));
    for (name, v) in spec.ports.iter().chain(&extra) {
        lines.push(format!("port {name} {}", v + 1));
    }
    write_graph(&spec.gadget, &lines)
}
