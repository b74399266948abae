//! Line-oriented instance files.
//!
//! ```text
//! c comment lines and blank lines are ignored
//! p <cdpe|cdbe|dpe|dbe> <ea|ea+ed> <n> <m> [k]
//! e <u> <v>        m of these for graphs (a <u> <v> for digraphs)
//! d <v> <value>    target for v; vertices without a line get 0
//! ```
//!
//! Vertices are `0..n`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use degedit::{BalanceInstance, Digraph, Graph, OperationSet, ParityInstance};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Cdpe,
    Cdbe,
    Dpe,
    Dbe,
}

impl Kind {
    pub fn directed(self) -> bool {
        matches!(self, Kind::Cdbe | Kind::Dbe)
    }

    pub fn connected(self) -> bool {
        matches!(self, Kind::Cdpe | Kind::Cdbe)
    }

    /// The same problem without the connectivity requirement.
    pub fn without_connectivity(self) -> Kind {
        match self {
            Kind::Cdpe | Kind::Dpe => Kind::Dpe,
            Kind::Cdbe | Kind::Dbe => Kind::Dbe,
        }
    }

    fn edge_tag(self) -> &'static str {
        if self.directed() {
            "a"
        } else {
            "e"
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Cdpe => "cdpe",
            Kind::Cdbe => "cdbe",
            Kind::Dpe => "dpe",
            Kind::Dbe => "dbe",
        })
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cdpe" => Ok(Kind::Cdpe),
            "cdbe" => Ok(Kind::Cdbe),
            "dpe" => Ok(Kind::Dpe),
            "dbe" => Ok(Kind::Dbe),
            _ => Err(format!("unknown problem kind `{s}` (expected cdpe, cdbe, dpe or dbe)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Parity(ParityInstance),
    Balance(BalanceInstance),
}

impl Instance {
    pub fn n(&self) -> usize {
        match self {
            Instance::Parity(i) => i.graph().n(),
            Instance::Balance(i) => i.digraph().n(),
        }
    }

    pub fn budget(&self) -> Option<usize> {
        match self {
            Instance::Parity(i) => i.budget(),
            Instance::Balance(i) => i.budget(),
        }
    }
}

/// A parsed file: what to solve, under which operations, on which instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub kind: Kind,
    pub opset: OperationSet,
    pub instance: Instance,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: loop at vertex {vertex} rejected")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error("header declares {declared} edge lines but the file has {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("missing `p` header line")]
    MissingHeader,
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn number<T: FromStr>(line: usize, field: Option<&str>, what: &str) -> Result<T, ParseError> {
    let raw = field.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    raw.parse()
        .map_err(|_| syntax(line, format!("invalid {what} `{raw}`")))
}

struct Header {
    kind: Kind,
    opset: OperationSet,
    n: usize,
    m: usize,
    k: Option<usize>,
}

fn header(line: usize, mut fields: std::str::SplitWhitespace<'_>) -> Result<Header, ParseError> {
    let kind = fields
        .next()
        .ok_or_else(|| syntax(line, "missing problem kind"))?
        .parse()
        .map_err(|e: String| syntax(line, e))?;
    let opset = fields
        .next()
        .ok_or_else(|| syntax(line, "missing operation set"))?
        .parse()
        .map_err(|e: degedit::Error| syntax(line, e.to_string()))?;
    let n: usize = number(line, fields.next(), "vertex count")?;
    if n == 0 {
        return Err(syntax(line, "instance needs at least one vertex"));
    }
    let m = number(line, fields.next(), "edge count")?;
    let k = fields.next().map(|f| number(line, Some(f), "budget")).transpose()?;
    if fields.next().is_some() {
        return Err(syntax(line, "trailing fields after header"));
    }
    Ok(Header { kind, opset, n, m, k })
}

pub fn parse(text: &str) -> Result<InstanceFile, ParseError> {
    let mut head: Option<Header> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut delta: Vec<i64> = Vec::new();
    let mut delta_set: Vec<bool> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        if tag == "c" {
            continue;
        }
        if tag == "p" {
            if head.is_some() {
                return Err(syntax(line, "second `p` header"));
            }
            let h = header(line, fields)?;
            delta = vec![0; h.n];
            delta_set = vec![false; h.n];
            head = Some(h);
            continue;
        }
        let h = head.as_ref().ok_or_else(|| syntax(line, "content before `p` header"))?;
        let vertex = |field: Option<&str>, what: &str| -> Result<usize, ParseError> {
            let v: usize = number(line, field, what)?;
            if v >= h.n {
                return Err(ParseError::OutOfRange { line, vertex: v, n: h.n });
            }
            Ok(v)
        };
        match tag {
            "e" | "a" => {
                if tag != h.kind.edge_tag() {
                    return Err(syntax(line, format!("`{tag}` line in a {} instance", h.kind)));
                }
                let u = vertex(fields.next(), "endpoint")?;
                let v = vertex(fields.next(), "endpoint")?;
                if u == v {
                    return Err(ParseError::Loop { line, vertex: u });
                }
                let key = if h.kind.directed() { (u, v) } else { (u.min(v), u.max(v)) };
                if !seen.insert(key) {
                    return Err(ParseError::Duplicate { line, u, v });
                }
                pairs.push((u, v));
            }
            "d" => {
                let v = vertex(fields.next(), "vertex")?;
                let value: i64 = number(line, fields.next(), "target value")?;
                if !h.kind.directed() && !(0..=1).contains(&value) {
                    return Err(syntax(line, format!("parity target must be 0 or 1, got {value}")));
                }
                if std::mem::replace(&mut delta_set[v], true) {
                    return Err(syntax(line, format!("second target for vertex {v}")));
                }
                delta[v] = value;
            }
            _ => return Err(syntax(line, format!("unknown line type `{tag}`"))),
        }
        if fields.next().is_some() {
            return Err(syntax(line, "trailing fields"));
        }
    }

    let h = head.ok_or(ParseError::MissingHeader)?;
    if pairs.len() != h.m {
        return Err(ParseError::EdgeCount {
            declared: h.m,
            found: pairs.len(),
        });
    }
    // every structural check already happened above, so construction succeeds
    let instance = if h.kind.directed() {
        let d = Digraph::from_arcs(h.n, pairs).expect("arcs validated while parsing");
        Instance::Balance(BalanceInstance::new(d, delta).expect("n >= 1").with_budget(h.k))
    } else {
        let g = Graph::from_edges(h.n, pairs).expect("edges validated while parsing");
        let delta = delta.into_iter().map(|d| d as u8).collect();
        Instance::Parity(ParityInstance::new(g, delta).expect("n >= 1").with_budget(h.k))
    };
    Ok(InstanceFile {
        kind: h.kind,
        opset: h.opset,
        instance,
    })
}

/// Canonical text form; `parse(&print(f)) == f`.
pub fn print(file: &InstanceFile) -> String {
    let mut out = String::new();
    let n = file.instance.n();
    let (pairs, delta): (Vec<(usize, usize)>, Vec<i64>) = match &file.instance {
        Instance::Parity(i) => (i.graph().edges().collect(), i.delta().iter().map(|&d| d as i64).collect()),
        Instance::Balance(i) => (i.digraph().arcs().collect(), i.delta().to_vec()),
    };
    write!(out, "p {} {} {} {}", file.kind, file.opset, n, pairs.len()).unwrap();
    if let Some(k) = file.instance.budget() {
        write!(out, " {k}").unwrap();
    }
    out.push('\n');
    let tag = file.kind.edge_tag();
    for (u, v) in pairs {
        writeln!(out, "{tag} {u} {v}").unwrap();
    }
    for (v, d) in delta.into_iter().enumerate() {
        if d != 0 {
            writeln!(out, "d {v} {d}").unwrap();
        }
    }
    out
}
