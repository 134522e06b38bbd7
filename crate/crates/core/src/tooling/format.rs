use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{Graph, SandwichInstance};
use crate::hardness::{ReductionOutput, Target};

pub const FORMAT_VERSION: &str = "sandwich/1";

/// Serialized sandwich instance. Edge lists are canonical: `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceDocument {
    pub version: String,
    pub n: usize,
    pub mandatory: Vec<(usize, usize)>,
    pub optional: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub meta: BTreeMap<String, Value>,
}

impl InstanceDocument {
    pub fn new(inst: &SandwichInstance) -> Self {
        InstanceDocument {
            version: FORMAT_VERSION.to_string(),
            n: inst.n(),
            mandatory: inst.mandatory_edges(),
            optional: inst.optional_edges(),
            meta: BTreeMap::new(),
        }
    }

    /// Document for a generated reduction; the target lands in `meta.family`.
    pub fn from_reduction(out: &ReductionOutput) -> Self {
        let mut doc = InstanceDocument::new(&out.instance);
        doc.meta = out.meta.clone();
        doc.meta.insert("family".into(), json!(target_spec(&out.family)));
        doc
    }

    pub fn instance(&self) -> Result<SandwichInstance> {
        if self.version != FORMAT_VERSION {
            return Err(Error::Parse {
                line: 0,
                message: format!("unsupported version `{}`, expected `{FORMAT_VERSION}`", self.version),
            });
        }
        SandwichInstance::new(self.n, &self.mandatory, &self.optional)
    }

    /// Same instance with sorted `u < v` edge lists.
    pub fn canonical(&self) -> Result<Self> {
        let mut doc = InstanceDocument::new(&self.instance()?);
        doc.meta = self.meta.clone();
        Ok(doc)
    }

    /// Family recorded in the metadata, as a `name,name` string.
    pub fn family_hint(&self) -> Option<&str> {
        self.meta.get("family").and_then(Value::as_str)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: InstanceDocument = serde_json::from_str(text)?;
        doc.instance()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    /// Line format: `p sandwich <n>`, then `m u v` (mandatory) and `o u v`
    /// (optional) lines. Blank lines and lines starting with `c` or `#` are
    /// ignored.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut n = None;
        let (mut mandatory, mut optional) = (Vec::new(), Vec::new());
        let mut seen: BTreeMap<(usize, usize), (char, usize)> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |message: String| Error::Parse { line: line_no, message };
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens[0] {
                "p" => {
                    if n.is_some() {
                        return Err(err("duplicate header".into()));
                    }
                    if tokens.len() != 3 || tokens[1] != "sandwich" {
                        return Err(err("expected `p sandwich <n>`".into()));
                    }
                    n = Some(tokens[2].parse::<usize>().map_err(|_| err(format!("bad order `{}`", tokens[2])))?);
                }
                kind @ ("m" | "o") => {
                    let order = n.ok_or_else(|| err("edge before header".into()))?;
                    if tokens.len() != 3 {
                        return Err(err(format!("expected `{kind} u v`")));
                    }
                    let mut ends = [0usize; 2];
                    for (slot, t) in ends.iter_mut().zip(&tokens[1..]) {
                        *slot = t.parse().map_err(|_| err(format!("bad vertex `{t}`")))?;
                        if *slot >= order {
                            return Err(err(format!("vertex {slot} out of range for order {order}")));
                        }
                    }
                    let (u, v) = (ends[0].min(ends[1]), ends[0].max(ends[1]));
                    if u == v {
                        return Err(err(format!("self-loop at vertex {u}")));
                    }
                    let kind = kind.chars().next().unwrap();
                    if let Some(&(prev, at)) = seen.get(&(u, v)) {
                        if prev != kind {
                            return Err(err(format!("pair {u}-{v} is also listed on line {at}")));
                        }
                        continue;
                    }
                    seen.insert((u, v), (kind, line_no));
                    if kind == 'm' {
                        mandatory.push((u, v));
                    } else {
                        optional.push((u, v));
                    }
                }
                other => return Err(err(format!("unknown line type `{other}`"))),
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 0,
            message: "missing `p sandwich <n>` header".into(),
        })?;
        let inst = SandwichInstance::new(n, &mandatory, &optional)?;
        Ok(InstanceDocument::new(&inst))
    }

    /// Line format; metadata is not carried.
    pub fn to_text(&self) -> String {
        let mut s = format!("p sandwich {}\n", self.n);
        for &(u, v) in &self.mandatory {
            writeln!(s, "m {u} {v}").unwrap();
        }
        for &(u, v) in &self.optional {
            writeln!(s, "o {u} {v}").unwrap();
        }
        s
    }

    pub fn parse(text: &str, format: Option<Format>) -> Result<Self> {
        match format.unwrap_or_else(|| Format::detect(text)) {
            Format::Json => InstanceDocument::from_json(text),
            Format::Text => InstanceDocument::from_text(text),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}

/// `paw,co-C4` style name for a target.
pub fn target_spec(target: &Target) -> String {
    match target {
        Target::Family(f) => f.members().iter().map(|q| q.name()).collect::<Vec<_>>().join(","),
        Target::CoMatchedBipartite => target.to_string(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl Format {
    /// JSON when the first non-blank character opens an object.
    pub fn detect(text: &str) -> Format {
        if text.trim_start().starts_with('{') {
            Format::Json
        } else {
            Format::Text
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// A graph as a full edge list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphDocument {
    pub fn new(g: &Graph) -> Self {
        GraphDocument {
            n: g.n(),
            edges: g.edge_vec(),
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, &self.edges)
    }

    /// Reads a graph document, or the `witness` field of a run report.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)?;
        let inner = match value.get("witness") {
            Some(Value::Null) => {
                return Err(Error::Parse {
                    line: 0,
                    message: "report carries no witness".into(),
                })
            }
            Some(w) => w.clone(),
            None => value,
        };
        Ok(serde_json::from_value(inner)?)
    }
}
