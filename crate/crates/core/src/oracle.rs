//! Brute-force ground truth for small instances.
//!
//! Deliberately independent of the reducer: a fixed static variable order,
//! and a vertex is checked against its already-complete neighbors the moment
//! its last incident item is assigned.

use thiserror::Error;

use crate::graph::{EdgeId, Graph, VertexId};
use crate::reducer::MutableSet;
use crate::weighting::{Mode, Weighting};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Search nodes (single weight assignments) before giving up.
    pub max_assignments: u64,
    /// Largest mutable set [`count_extensions`] will enumerate exhaustively.
    pub max_edges: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_assignments: 100_000_000, max_edges: 16 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle budget exceeded")]
    BudgetExceeded,
}

#[derive(Clone, Copy, Debug)]
enum Var {
    Edge(EdgeId),
    Vertex(VertexId),
}

struct Enumerator<'a> {
    g: &'a Graph,
    mode: Mode,
    vars: Vec<Var>,
    // Fixed contribution to each vertex color from non-variable items.
    fixed: Vec<u32>,
    // Variables touching each vertex.
    at: Vec<Vec<usize>>,
    // Vertices whose last variable sits at each position.
    closes: Vec<Vec<VertexId>>,
    // Position after which a vertex is complete; None = complete from the start.
    last: Vec<Option<usize>>,
    value: Vec<u8>,
    nodes: u64,
    budget: u64,
}

impl<'a> Enumerator<'a> {
    fn new(g: &'a Graph, mode: Mode, vars: Vec<Var>, base: Option<&Weighting>, budget: u64) -> Option<Self> {
        let n = g.n();
        let mut at = vec![Vec::new(); n];
        let mut is_var_edge = vec![false; g.edge_slots()];
        let mut is_var_vertex = vec![false; n];
        for (i, v) in vars.iter().enumerate() {
            match *v {
                Var::Edge(e) => {
                    let (a, b) = g.ends(e);
                    at[a].push(i);
                    at[b].push(i);
                    is_var_edge[e] = true;
                }
                Var::Vertex(x) => {
                    at[x].push(i);
                    is_var_vertex[x] = true;
                }
            }
        }
        let mut fixed = vec![0u32; n];
        for x in 0..n {
            for &(_, e) in g.neighbors(x) {
                if !is_var_edge[e] {
                    fixed[x] += base?.edge(e)? as u32;
                }
            }
            if mode.weights_vertices() && !is_var_vertex[x] {
                fixed[x] += base?.vertex(x)? as u32;
            }
        }
        let last: Vec<Option<usize>> = at.iter().map(|l| l.iter().copied().max()).collect();
        let mut closes = vec![Vec::new(); vars.len()];
        for (x, l) in last.iter().enumerate() {
            if let Some(i) = l {
                closes[*i].push(x);
            }
        }
        Some(Enumerator { g, mode, value: vec![0; vars.len()], vars, fixed, at, closes, last, nodes: 0, budget })
    }

    fn color(&self, x: VertexId) -> u32 {
        self.fixed[x] + self.at[x].iter().map(|&i| self.value[i] as u32).sum::<u32>()
    }

    fn complete_by(&self, x: VertexId, pos: Option<usize>) -> bool {
        match (self.last[x], pos) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(l), Some(p)) => l <= p,
        }
    }

    /// Edges between vertices that never change; checked once.
    fn static_ok(&self) -> bool {
        self.g.edges().all(|(_, a, b)| {
            !(self.last[a].is_none() && self.last[b].is_none()) || self.color(a) != self.color(b)
        })
    }

    fn closes_ok(&self, pos: usize) -> bool {
        self.closes[pos].iter().all(|&x| {
            let c = self.color(x);
            self.g.neighbor_ids(x).all(|y| !self.complete_by(y, Some(pos)) || self.color(y) != c)
        })
    }

    /// Depth-first over assignments; `visit` returns false to stop early.
    fn walk(&mut self, pos: usize, visit: &mut dyn FnMut(&Self) -> bool) -> Result<bool, OracleError> {
        if pos == self.vars.len() {
            return Ok(visit(self));
        }
        for x in 1..=self.mode.max_weight() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(OracleError::BudgetExceeded);
            }
            self.value[pos] = x;
            if self.closes_ok(pos) && !self.walk(pos + 1, visit)? {
                self.value[pos] = 0;
                return Ok(false);
            }
        }
        self.value[pos] = 0;
        Ok(true)
    }

    fn weighting(&self, base: Option<&Weighting>) -> Weighting {
        let mut w = base.cloned().unwrap_or_else(|| Weighting::empty(self.mode, self.g));
        for (i, v) in self.vars.iter().enumerate() {
            match *v {
                Var::Edge(e) => w.set_edge(e, self.value[i]).expect("in range"),
                Var::Vertex(x) => w.set_vertex(x, self.value[i]).expect("in range"),
            }
        }
        w
    }
}

/// Vertices heaviest-first; each vertex contributes its not-yet-listed
/// edges and then (in Total2) its own weight, so it closes immediately.
fn full_order(g: &Graph, mode: Mode) -> Vec<Var> {
    let mut order: Vec<VertexId> = (0..g.n()).collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(g.degree(x)), x));
    let mut listed = vec![false; g.edge_slots()];
    let mut vars = Vec::new();
    for x in order {
        for &(_, e) in g.neighbors(x) {
            if !listed[e] {
                listed[e] = true;
                vars.push(Var::Edge(e));
            }
        }
        if mode.weights_vertices() {
            vars.push(Var::Vertex(x));
        }
    }
    vars
}

pub fn exists_proper(g: &Graph, mode: Mode) -> Result<bool, OracleError> {
    exists_proper_with(g, mode, OracleBudget::default())
}

pub fn exists_proper_with(g: &Graph, mode: Mode, budget: OracleBudget) -> Result<bool, OracleError> {
    Ok(!enumerate_proper_with(g, mode, 1, budget)?.is_empty())
}

/// Up to `limit` distinct proper complete weightings, in search order.
pub fn enumerate_proper(g: &Graph, mode: Mode, limit: usize) -> Result<Vec<Weighting>, OracleError> {
    enumerate_proper_with(g, mode, limit, OracleBudget::default())
}

pub fn enumerate_proper_with(
    g: &Graph,
    mode: Mode,
    limit: usize,
    budget: OracleBudget,
) -> Result<Vec<Weighting>, OracleError> {
    if limit == 0 {
        return Ok(Vec::new());
    }
    let mut en = Enumerator::new(g, mode, full_order(g, mode), None, budget.max_assignments).expect("no base needed");
    let mut out = Vec::new();
    if !en.static_ok() {
        return Ok(out);
    }
    en.walk(0, &mut |e| {
        out.push(e.weighting(None));
        out.len() < limit
    })?;
    Ok(out)
}

/// Number of assignments to the mutable set that, together with `base`
/// elsewhere, make `g` proper. Counting is exhaustive.
pub fn count_extensions(g: &Graph, base: &Weighting, ms: &MutableSet, mode: Mode) -> Result<u64, OracleError> {
    count_extensions_with(g, base, ms, mode, OracleBudget::default())
}

pub fn count_extensions_with(
    g: &Graph,
    base: &Weighting,
    ms: &MutableSet,
    mode: Mode,
    budget: OracleBudget,
) -> Result<u64, OracleError> {
    let mut vars: Vec<Var> = ms.edges.iter().map(|&e| Var::Edge(e)).collect();
    if mode.weights_vertices() {
        vars.extend(ms.vertices.iter().map(|&x| Var::Vertex(x)));
    }
    if vars.len() > budget.max_edges {
        return Err(OracleError::BudgetExceeded);
    }
    // A base missing weights outside the mutable set admits no extension.
    let Some(mut en) = Enumerator::new(g, mode, vars, Some(base), budget.max_assignments) else {
        return Ok(0);
    };
    if !en.static_ok() {
        return Ok(0);
    }
    let mut count = 0u64;
    en.walk(0, &mut |_| {
        count += 1;
        true
    })?;
    Ok(count)
}
