//! Weight assignments, the induced colors φ and offsets ρ, and properness.

use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Edge weights from {1,2,3}; no vertex weights.
    Edge3,
    /// Edge and vertex weights from {1,2}.
    Total2,
}

impl Mode {
    pub fn max_weight(self) -> u8 {
        match self {
            Mode::Edge3 => 3,
            Mode::Total2 => 2,
        }
    }

    pub fn weights_vertices(self) -> bool {
        self == Mode::Total2
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Edge3 => "123",
            Mode::Total2 => "12",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("weight {weight} outside 1..={max}")]
    OutOfRange { weight: u8, max: u8 },
    #[error("vertex weights are not used in 3-weighting mode")]
    VertexWeightInEdgeMode,
    #[error("vertex {0} has an unassigned incident item")]
    PartialAtVertex(VertexId),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(VertexId, VertexId),
    #[error("weighting is incomplete")]
    Incomplete,
}

/// A possibly partial weighting. Edge weights are indexed by edge id, so one
/// weighting can be read against a host graph and any graph derived from it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weighting {
    mode: Mode,
    // 0 means unassigned.
    edges: Vec<u8>,
    vertices: Vec<u8>,
}

impl Weighting {
    pub fn empty(mode: Mode, g: &Graph) -> Self {
        let vertices = if mode.weights_vertices() { vec![0; g.n()] } else { Vec::new() };
        Weighting { mode, edges: vec![0; g.edge_slots()], vertices }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn edge(&self, e: EdgeId) -> Option<u8> {
        match self.edges.get(e) {
            Some(&w) if w > 0 => Some(w),
            _ => None,
        }
    }

    pub fn vertex(&self, v: VertexId) -> Option<u8> {
        match self.vertices.get(v) {
            Some(&w) if w > 0 => Some(w),
            _ => None,
        }
    }

    fn check(&self, weight: u8) -> Result<(), WeightError> {
        let max = self.mode.max_weight();
        if weight == 0 || weight > max {
            return Err(WeightError::OutOfRange { weight, max });
        }
        Ok(())
    }

    pub fn set_edge(&mut self, e: EdgeId, weight: u8) -> Result<(), WeightError> {
        self.check(weight)?;
        if e >= self.edges.len() {
            self.edges.resize(e + 1, 0);
        }
        self.edges[e] = weight;
        Ok(())
    }

    pub fn set_vertex(&mut self, v: VertexId, weight: u8) -> Result<(), WeightError> {
        if !self.mode.weights_vertices() {
            return Err(WeightError::VertexWeightInEdgeMode);
        }
        self.check(weight)?;
        if v >= self.vertices.len() {
            self.vertices.resize(v + 1, 0);
        }
        self.vertices[v] = weight;
        Ok(())
    }

    pub fn clear_edge(&mut self, e: EdgeId) {
        if let Some(w) = self.edges.get_mut(e) {
            *w = 0;
        }
    }

    pub fn clear_vertex(&mut self, v: VertexId) {
        if let Some(w) = self.vertices.get_mut(v) {
            *w = 0;
        }
    }

    /// Every live edge, and in Total2 every vertex, has a weight.
    pub fn is_complete(&self, g: &Graph) -> bool {
        g.edge_ids().all(|e| self.edge(e).is_some())
            && (!self.mode.weights_vertices() || (0..g.n()).all(|v| self.vertex(v).is_some()))
    }

    /// Weights of live edges of `g`, in edge-id order.
    pub fn assigned_edges<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = (EdgeId, u8)> + 'a {
        g.edge_ids().filter_map(|e| self.edge(e).map(|w| (e, w)))
    }

    /// Writes `edge u v w` lines, then `vertex v w` lines in Total2 mode.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut s = String::new();
        for (e, u, v) in g.edges() {
            if let Some(w) = self.edge(e) {
                let _ = writeln!(s, "edge {u} {v} {w}");
            }
        }
        if self.mode.weights_vertices() {
            for v in 0..g.n() {
                if let Some(w) = self.vertex(v) {
                    let _ = writeln!(s, "vertex {v} {w}");
                }
            }
        }
        s
    }
}

/// φ(v): incident edge weights plus, in Total2, the weight on v.
pub fn phi(g: &Graph, w: &Weighting, v: VertexId) -> Result<u32, WeightError> {
    let mut total = 0u32;
    for &(_, e) in g.neighbors(v) {
        total += w.edge(e).ok_or(WeightError::PartialAtVertex(v))? as u32;
    }
    if w.mode.weights_vertices() {
        total += w.vertex(v).ok_or(WeightError::PartialAtVertex(v))? as u32;
    }
    Ok(total)
}

/// ρ(x, y) = φ(x) − w(xy).
pub fn rho(g: &Graph, w: &Weighting, x: VertexId, y: VertexId) -> Result<u32, WeightError> {
    let e = g.edge_between(x, y).ok_or(WeightError::NotAnEdge(x, y))?;
    let total = phi(g, w, x)?;
    Ok(total - w.edge(e).ok_or(WeightError::PartialAtVertex(x))? as u32)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub edge: EdgeId,
    pub phi_u: u32,
    pub phi_v: u32,
}

/// The unsatisfied edges of a complete weighting, in edge-id order.
pub fn violations(g: &Graph, w: &Weighting) -> Result<Vec<Violation>, WeightError> {
    if !w.is_complete(g) {
        return Err(WeightError::Incomplete);
    }
    let colors: Vec<u32> = (0..g.n()).map(|v| phi(g, w, v)).collect::<Result<_, _>>()?;
    Ok(g.edges()
        .filter(|&(_, u, v)| colors[u] == colors[v])
        .map(|(edge, u, v)| Violation { edge, phi_u: colors[u], phi_v: colors[v] })
        .collect())
}

pub fn is_proper(g: &Graph, w: &Weighting) -> bool {
    matches!(violations(g, w), Ok(v) if v.is_empty())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightParseError {
    #[error("line {line}: malformed line {text:?}")]
    MalformedLine { line: usize, text: String },
    #[error("line {line}: {u}-{v} is not an edge of the graph")]
    NotAnEdge { line: usize, u: VertexId, v: VertexId },
    #[error("line {line}: vertex {v} out of range")]
    VertexOutOfRange { line: usize, v: VertexId },
    #[error("line {line}: {source}")]
    Weight { line: usize, source: WeightError },
}

/// Parses `edge u v w` / `vertex v w` lines against `g`. Order-insensitive;
/// `#` comments and blank lines are skipped.
pub fn parse_weighting(text: &str, g: &Graph, mode: Mode) -> Result<Weighting, WeightParseError> {
    let mut w = Weighting::empty(mode, g);
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let malformed = || WeightParseError::MalformedLine { line, text: raw.to_string() };
        let toks: Vec<&str> = t.split_whitespace().collect();
        let int = |s: &str| s.parse::<usize>().map_err(|_| malformed());
        let weight = |s: &str| s.parse::<u8>().map_err(|_| malformed());
        match toks.as_slice() {
            ["edge", a, b, x] => {
                let (u, v, x) = (int(a)?, int(b)?, weight(x)?);
                let e = g.edge_between(u, v).ok_or(WeightParseError::NotAnEdge { line, u, v })?;
                w.set_edge(e, x).map_err(|source| WeightParseError::Weight { line, source })?;
            }
            ["vertex", a, x] => {
                let (v, x) = (int(a)?, weight(x)?);
                if v >= g.n() {
                    return Err(WeightParseError::VertexOutOfRange { line, v });
                }
                w.set_vertex(v, x).map_err(|source| WeightParseError::Weight { line, source })?;
            }
            _ => return Err(malformed()),
        }
    }
    Ok(w)
}
