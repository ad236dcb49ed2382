//! Edge and vertex colorings plus their JSON / CSV file formats.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::Graph;
use crate::report::SCHEMA_VERSION;

#[derive(Debug, Error)]
pub enum ColoringFileError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema {0:?}")]
    Schema(Value),
    #[error("missing field {0:?}")]
    Missing(&'static str),
    #[error("edge key {0:?} is not an edge of the graph")]
    UnknownEdge(String),
    #[error("vertex key {0:?} is not a vertex of the graph")]
    UnknownVertex(String),
    #[error("value for {0:?} is not a color index")]
    BadColor(String),
    #[error("edge {0:?} has no color")]
    Uncolored(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Spanning-tree edge with a color of its own.
    Tree,
    Extension,
    Repair,
    /// Produced by exhaustive search.
    Search,
}

/// Per-edge colors indexed by [`Graph::edges`] position; `None` while partial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<Option<usize>>,
    provenance: Vec<Option<Provenance>>,
}

impl EdgeColoring {
    pub fn uncolored(g: &Graph) -> Self {
        EdgeColoring { colors: vec![None; g.m()], provenance: vec![None; g.m()] }
    }

    pub fn from_colors(colors: Vec<usize>, provenance: Provenance) -> Self {
        let provenance = vec![Some(provenance); colors.len()];
        EdgeColoring { colors: colors.into_iter().map(Some).collect(), provenance }
    }

    pub fn set(&mut self, edge: usize, color: usize, provenance: Provenance) {
        self.colors[edge] = Some(color);
        self.provenance[edge] = Some(provenance);
    }

    pub fn color(&self, edge: usize) -> Option<usize> {
        self.colors[edge]
    }

    pub fn color_between(&self, g: &Graph, u: usize, v: usize) -> Option<usize> {
        self.colors[g.edge_index(u, v)?]
    }

    pub fn provenance(&self, edge: usize) -> Option<Provenance> {
        self.provenance[edge]
    }

    pub fn colors(&self) -> &[Option<usize>] {
        &self.colors
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// Number of distinct colors in use.
    pub fn palette_size(&self) -> usize {
        let mut used: Vec<usize> = self.colors.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        used.len()
    }

    /// Tree-provenance edges carry pairwise distinct colors.
    pub fn tree_colors_distinct(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.colors
            .iter()
            .zip(&self.provenance)
            .filter(|(_, p)| **p == Some(Provenance::Tree))
            .all(|(c, _)| seen.insert(*c))
    }

    /// Largest color index plus one.
    pub fn color_bound(&self) -> usize {
        self.colors.iter().flatten().map(|c| c + 1).max().unwrap_or(0)
    }

    /// Renumbers used colors densely, preserving their relative order.
    pub fn compact(&mut self) {
        let mut used: Vec<usize> = self.colors.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        for c in self.colors.iter_mut().flatten() {
            *c = used.binary_search(c).unwrap();
        }
    }

    pub fn to_json_value(&self, g: &Graph) -> Value {
        let mut colors = BTreeMap::new();
        let mut provenance = BTreeMap::new();
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            let key = format!("{u}-{v}");
            colors.insert(key.clone(), json!(self.colors[i]));
            if let Some(p) = self.provenance[i] {
                provenance.insert(key, json!(p));
            }
        }
        json!({
            "schema": SCHEMA_VERSION,
            "palette_size": self.palette_size(),
            "colors": colors,
            "provenance": provenance,
        })
    }

    pub fn to_csv(&self, g: &Graph) -> String {
        let mut out = String::from("u,v,color\n");
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            match self.colors[i] {
                Some(c) => out.push_str(&format!("{u},{v},{c}\n")),
                None => out.push_str(&format!("{u},{v},\n")),
            }
        }
        out
    }

    pub fn from_json(g: &Graph, text: &str) -> Result<Self, ColoringFileError> {
        let doc: Value = serde_json::from_str(text)?;
        check_schema(&doc)?;
        let map = doc.get("colors").and_then(Value::as_object).ok_or(ColoringFileError::Missing("colors"))?;
        let mut coloring = EdgeColoring::uncolored(g);
        for (key, value) in map {
            let edge = parse_edge_key(g, key).ok_or_else(|| ColoringFileError::UnknownEdge(key.clone()))?;
            let c = value.as_u64().ok_or_else(|| ColoringFileError::BadColor(key.clone()))?;
            let prov = doc
                .get("provenance")
                .and_then(|p| p.get(key))
                .and_then(|p| serde_json::from_value(p.clone()).ok())
                .unwrap_or(Provenance::Extension);
            coloring.set(edge, c as usize, prov);
        }
        if let Some(i) = coloring.colors.iter().position(Option::is_none) {
            let (u, v) = g.edges()[i];
            return Err(ColoringFileError::Uncolored(format!("{u}-{v}")));
        }
        Ok(coloring)
    }
}

fn parse_edge_key(g: &Graph, key: &str) -> Option<usize> {
    let (u, v) = key.split_once('-')?;
    g.edge_index(u.parse().ok()?, v.parse().ok()?)
}

fn check_schema(doc: &Value) -> Result<(), ColoringFileError> {
    match doc.get("schema") {
        Some(v) if v.as_u64() == Some(SCHEMA_VERSION) => Ok(()),
        Some(v) => Err(ColoringFileError::Schema(v.clone())),
        None => Err(ColoringFileError::Missing("schema")),
    }
}

/// Vertex colors; `None` marks a vertex that is never used as an internal
/// vertex of a witness path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColoring {
    pub colors: Vec<Option<usize>>,
    /// Colors given to exactly one vertex each.
    pub distinct: usize,
    /// Size of the shared random palette (0 or 9).
    pub random: usize,
    /// Distinct colors handed out when resampling gave up.
    pub promoted: usize,
    pub seed: Option<u64>,
}

impl VertexColoring {
    pub fn from_colors(colors: Vec<Option<usize>>) -> Self {
        let mut used: Vec<usize> = colors.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        VertexColoring { colors, distinct: used.len(), random: 0, promoted: 0, seed: None }
    }

    pub fn color(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }

    pub fn palette_size(&self) -> usize {
        self.distinct + self.random + self.promoted
    }

    pub fn to_json_value(&self) -> Value {
        let colors: BTreeMap<String, Value> =
            self.colors.iter().enumerate().map(|(v, c)| (v.to_string(), json!(c))).collect();
        json!({
            "schema": SCHEMA_VERSION,
            "colors": colors,
            "palette": {
                "distinct": self.distinct,
                "random": self.random,
                "promoted": self.promoted,
                "size": self.palette_size(),
            },
            "seed": self.seed,
        })
    }

    pub fn from_json(g: &Graph, text: &str) -> Result<Self, ColoringFileError> {
        let doc: Value = serde_json::from_str(text)?;
        check_schema(&doc)?;
        let map = doc.get("colors").and_then(Value::as_object).ok_or(ColoringFileError::Missing("colors"))?;
        let mut colors = vec![None; g.n()];
        for (key, value) in map {
            let v: usize = key
                .parse()
                .ok()
                .filter(|&v| v < g.n())
                .ok_or_else(|| ColoringFileError::UnknownVertex(key.clone()))?;
            colors[v] = match value {
                Value::Null => None,
                other => Some(other.as_u64().ok_or_else(|| ColoringFileError::BadColor(key.clone()))? as usize),
            };
        }
        let mut out = VertexColoring::from_colors(colors);
        let palette = doc.get("palette");
        let field = |name: &str| palette.and_then(|p| p.get(name)).and_then(Value::as_u64).map(|x| x as usize);
        if let (Some(d), Some(r), Some(p)) = (field("distinct"), field("random"), field("promoted")) {
            out.distinct = d;
            out.random = r;
            out.promoted = p;
        }
        out.seed = doc.get("seed").and_then(Value::as_u64);
        Ok(out)
    }
}
