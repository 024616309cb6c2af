//! Extension of a proper weighting of a derived graph back to its host.
//!
//! Rather than replaying each reducibility argument step by step, the
//! extension is a backtracking search over the items the argument is allowed
//! to touch (the mutable set). The arguments guarantee a solution exists
//! there, so a failed search on a catalog kind is reported as an internal
//! inconsistency rather than silently tolerated.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::configs::{Catalog, ConfigurationInstance, Tag};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::weighting::{is_proper, Mode, Weighting};

/// Node budget for one extension search.
pub const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MutableSet {
    pub edges: BTreeSet<EdgeId>,
    /// Vertex weights that may be (re)assigned; Total2 only.
    pub vertices: BTreeSet<VertexId>,
}

impl MutableSet {
    /// Vertices whose color can change: endpoints of mutable edges plus
    /// mutable vertices.
    pub fn touched(&self, g: &Graph) -> BTreeSet<VertexId> {
        let mut t: BTreeSet<VertexId> = self.vertices.clone();
        for &e in &self.edges {
            let (a, b) = g.ends(e);
            t.insert(a);
            t.insert(b);
        }
        t
    }

    pub fn len(&self) -> usize {
        self.edges.len() + self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Grows the set by every edge meeting a touched vertex, and in Total2
    /// by the far endpoints of those edges.
    pub fn expanded(&self, g: &Graph, mode: Mode) -> MutableSet {
        let mut out = self.clone();
        for e in affected_edges(g, self) {
            out.edges.insert(e);
            if mode.weights_vertices() {
                let (a, b) = g.ends(e);
                out.vertices.insert(a);
                out.vertices.insert(b);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("no extension exists over the mutable set")]
    ExtensionImpossible,
    #[error("extension search exceeded its node budget")]
    BudgetExceeded,
    #[error("{kind} failed to extend: {detail}")]
    InternalInconsistency { kind: String, detail: String },
    #[error("base weighting is not proper and complete on the derived graph")]
    InvalidBase,
}

/// Edges whose satisfaction can change when the mutable set is reassigned.
pub fn affected_edges(g: &Graph, ms: &MutableSet) -> BTreeSet<EdgeId> {
    let mut out = BTreeSet::new();
    for t in ms.touched(g) {
        out.extend(g.neighbors(t).iter().map(|&(_, e)| e));
    }
    out
}

pub fn mutable_set(inst: &ConfigurationInstance, g: &Graph, mode: Mode) -> MutableSet {
    let mut ms = MutableSet { edges: inst.deleted(), vertices: BTreeSet::new() };
    if !mode.weights_vertices() {
        return ms;
    }
    for &e in &inst.core {
        let (a, b) = g.ends(e);
        ms.vertices.insert(a);
        ms.vertices.insert(b);
    }
    let add = |ms: &mut MutableSet, a: VertexId, b: VertexId| {
        if let Some(e) = g.edge_between(a, b) {
            ms.edges.insert(e);
            ms.vertices.insert(b);
        }
    };
    let other = |z: VertexId, not: VertexId| g.neighbor_ids(z).find(|&w| w != not);
    let catalog = inst.kind.catalog;
    let two_weighting = matches!(catalog, Catalog::W2_52 | Catalog::W2_83);
    match inst.kind.tag {
        // The 2-neighbors' far edges may trade weight with their far ends.
        Tag::B if two_weighting => {
            let v = inst.role("v").expect("center");
            for z in [inst.role("z"), inst.role("z'")].into_iter().flatten() {
                if g.degree(z) == 2 {
                    if let Some(y) = other(z, v) {
                        add(&mut ms, z, y);
                    }
                }
            }
        }
        Tag::D if catalog == Catalog::W2_83 => {
            for (b, z) in [("v", "z"), ("v'", "z'")] {
                let (b, z) = (inst.role(b).expect("β"), inst.role(z).expect("2-neighbor"));
                if let Some(y) = other(z, b) {
                    add(&mut ms, z, y);
                    if g.degree(y) == 2 {
                        if let Some(u) = other(y, z) {
                            add(&mut ms, y, u);
                        }
                    }
                }
            }
        }
        Tag::E if catalog == Catalog::W2_83 => {
            let (v, z) = (inst.role("v").expect("β"), inst.role("z").expect("2-neighbor"));
            if let Some(y) = other(z, v) {
                add(&mut ms, z, y);
            }
        }
        Tag::G if catalog == Catalog::W2_83 => {
            let v = inst.role("v").expect("center");
            if let Some(x) = inst.role("x") {
                add(&mut ms, v, x);
            }
            for z in g.neighbor_ids(v).filter(|&z| g.degree(z) == 3) {
                for y in g.neighbor_ids(z).filter(|&y| g.degree(y) == 2) {
                    for y2 in g.neighbor_ids(y).filter(|&y2| y2 != z) {
                        add(&mut ms, y, y2);
                    }
                }
            }
        }
        _ => {}
    }
    ms
}

/// Extends `w_prime` (proper and complete on the derived graph of `inst`)
/// to a proper weighting of `g`.
pub fn extend(
    g: &Graph,
    inst: &ConfigurationInstance,
    w_prime: &Weighting,
    mode: Mode,
) -> Result<Weighting, ReduceError> {
    let derived = inst.derived_graph(g);
    if w_prime.mode() != mode || !is_proper(&derived, w_prime) {
        return Err(ReduceError::InvalidBase);
    }
    extend_unchecked(g, inst, w_prime, mode)
}

pub(crate) fn extend_unchecked(
    g: &Graph,
    inst: &ConfigurationInstance,
    w_prime: &Weighting,
    mode: Mode,
) -> Result<Weighting, ReduceError> {
    let ms = mutable_set(inst, g, mode);
    let first = search(g, &ms, w_prime, mode, DEFAULT_NODE_BUDGET);
    if let Search::Found(w) = first {
        return Ok(w);
    }
    if inst.kind.catalog == Catalog::NONRED {
        return Err(match first {
            Search::Budget => ReduceError::BudgetExceeded,
            _ => ReduceError::ExtensionImpossible,
        });
    }
    let wider = ms.expanded(g, mode);
    match search(g, &wider, w_prime, mode, DEFAULT_NODE_BUDGET) {
        Search::Found(w) => Ok(w),
        other => Err(ReduceError::InternalInconsistency {
            kind: inst.kind.to_string(),
            detail: format!(
                "{} at {} ({})",
                match other {
                    Search::Budget => "budget exhausted",
                    _ => "search space exhausted",
                },
                inst.describe(g),
                match first {
                    Search::Budget => "first pass over budget",
                    _ => "first pass exhausted",
                }
            ),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(Weighting),
    Exhausted,
    Budget,
}

#[derive(Clone, Copy)]
enum Item {
    Edge(EdgeId, VertexId, VertexId),
    Vertex(VertexId),
}

struct Solver {
    items: Vec<Item>,
    max: u8,
    // Indexed by vertex id; only meaningful on touched vertices.
    sum: Vec<u32>,
    remaining: Vec<usize>,
    // Neighbors across affected edges, with the fixed color of untouched ones.
    watch: Vec<Vec<(VertexId, Option<u32>)>>,
    value: Vec<u8>,
    nodes: u64,
    budget: u64,
}

/// Vertex `t` is fully assigned; does it clash with a settled neighbor?
fn settled_ok(watch: &[(VertexId, Option<u32>)], sum: &[u32], remaining: &[usize], t: VertexId) -> bool {
    watch.iter().all(|&(s, fixed)| match fixed {
        Some(c) => c != sum[t],
        None => remaining[s] != 0 || sum[s] != sum[t],
    })
}

impl Solver {
    fn ends(&self, i: usize) -> (VertexId, Option<VertexId>) {
        match self.items[i] {
            Item::Edge(_, a, b) => (a, Some(b)),
            Item::Vertex(v) => (v, None),
        }
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for i in 0..self.items.len() {
            if self.value[i] != 0 {
                continue;
            }
            let (a, b) = self.ends(i);
            let score = b.map_or(self.remaining[a], |b| self.remaining[a].min(self.remaining[b]));
            if best.is_none_or(|(s, _)| score < s) {
                best = Some((score, i));
            }
        }
        best.map(|(_, i)| i)
    }

    fn apply(&mut self, i: usize, x: u8, sign: bool) -> bool {
        let (a, b) = self.ends(i);
        let mut ok = true;
        for t in [Some(a), b].into_iter().flatten() {
            if sign {
                self.sum[t] += x as u32;
                self.remaining[t] -= 1;
            } else {
                self.sum[t] -= x as u32;
                self.remaining[t] += 1;
            }
        }
        if sign {
            for t in [Some(a), b].into_iter().flatten() {
                if self.remaining[t] == 0 && !settled_ok(&self.watch[t], &self.sum, &self.remaining, t) {
                    ok = false;
                }
            }
        }
        ok
    }

    fn run(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let Some(i) = self.pick() else { return Some(true) };
        for x in 1..=self.max {
            self.value[i] = x;
            let ok = self.apply(i, x, true);
            if ok {
                match self.run() {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
            }
            self.apply(i, x, false);
        }
        self.value[i] = 0;
        Some(false)
    }
}

/// Searches assignments of the mutable set that make every affected edge
/// satisfied, keeping everything else as in `base`.
pub fn search(g: &Graph, ms: &MutableSet, base: &Weighting, mode: Mode, budget: u64) -> Search {
    let n = g.n();
    let mut items: Vec<Item> = ms
        .edges
        .iter()
        .map(|&e| {
            let (a, b) = g.ends(e);
            Item::Edge(e, a, b)
        })
        .collect();
    if mode.weights_vertices() {
        items.extend(ms.vertices.iter().map(|&v| Item::Vertex(v)));
    }
    let touched_set = ms.touched(g);
    let mut touched = vec![false; n];
    for &t in &touched_set {
        touched[t] = true;
    }
    let mut items_at = vec![Vec::new(); n];
    for (i, it) in items.iter().enumerate() {
        match *it {
            Item::Edge(_, a, b) => {
                items_at[a].push(i);
                items_at[b].push(i);
            }
            Item::Vertex(v) => items_at[v].push(i),
        }
    }
    // Color contributions that stay fixed.
    let fixed_color = |t: VertexId| -> Option<u32> {
        let mut s = 0u32;
        for &(_, e) in g.neighbors(t) {
            if !ms.edges.contains(&e) {
                s += base.edge(e)? as u32;
            }
        }
        if mode.weights_vertices() && !ms.vertices.contains(&t) {
            s += base.vertex(t)? as u32;
        }
        Some(s)
    };
    let mut sum = vec![0u32; n];
    let mut remaining = vec![0usize; n];
    let mut watch = vec![Vec::new(); n];
    for &t in &touched_set {
        let Some(s) = fixed_color(t) else { return Search::Exhausted };
        sum[t] = s;
        remaining[t] = items_at[t].len();
        for &(s, _) in g.neighbors(t) {
            let fixed = if touched[s] {
                None
            } else {
                match fixed_color(s) {
                    Some(c) => Some(c),
                    None => return Search::Exhausted,
                }
            };
            watch[t].push((s, fixed));
        }
    }
    // Touched vertices without mutable items are settled from the start.
    if touched_set.iter().any(|&t| remaining[t] == 0 && !settled_ok(&watch[t], &sum, &remaining, t)) {
        return Search::Exhausted;
    }
    let mut solver = Solver {
        value: vec![0; items.len()],
        items,
        max: mode.max_weight(),
        sum,
        remaining,
        watch,
        nodes: 0,
        budget,
    };
    match solver.run() {
        None => Search::Budget,
        Some(false) => Search::Exhausted,
        Some(true) => {
            let mut w = base.clone();
            for (i, it) in solver.items.iter().enumerate() {
                let x = solver.value[i];
                match *it {
                    Item::Edge(e, _, _) => w.set_edge(e, x).expect("weight in range"),
                    Item::Vertex(v) => w.set_vertex(v, x).expect("weight in range"),
                }
            }
            Search::Found(w)
        }
    }
}
