//! Simple undirected graphs with tombstoned edge ids, plus the degree-based
//! vertex classes the configuration catalogs are phrased in.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(VertexId),
    #[error("unknown or deleted edge id {0}")]
    UnknownEdgeId(EdgeId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: VertexId, v: VertexId },
    #[error("line {line}: loop at vertex {v}")]
    Loop { line: usize, v: VertexId },
    #[error("line {line}: malformed line {text:?}")]
    MalformedLine { line: usize, text: String },
}

/// Simple graph on vertices `0..n`.
///
/// Edge ids index a slot table that only grows; deleting an edge kills its
/// slot but never renumbers the others, so ids recorded against a host graph
/// stay meaningful in every graph derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    ends: Vec<(VertexId, VertexId)>,
    live: Vec<bool>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    live_count: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { ends: Vec::new(), live: Vec::new(), adj: vec![Vec::new(); n], live_count: 0 }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds a new edge slot. Only meant for construction; derived graphs are
    /// produced by [`Graph::delete_edges`].
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        let n = self.n();
        if u >= n {
            return Err(GraphError::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(GraphError::VertexOutOfRange(v));
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.edge_between(u, v).is_some() {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let id = self.ends.len();
        self.ends.push((u.min(v), u.max(v)));
        self.live.push(true);
        insert_sorted(&mut self.adj[u], (v, id));
        insert_sorted(&mut self.adj[v], (u, id));
        self.live_count += 1;
        Ok(id)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of live edges.
    pub fn edge_count(&self) -> usize {
        self.live_count
    }

    /// Size of the edge-id space, dead slots included.
    pub fn edge_slots(&self) -> usize {
        self.ends.len()
    }

    pub fn is_live(&self, e: EdgeId) -> bool {
        self.live.get(e).copied().unwrap_or(false)
    }

    /// Endpoints `(min, max)` of a slot, live or not.
    pub fn ends(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.ends[e]
    }

    pub fn other_end(&self, e: EdgeId, x: VertexId) -> VertexId {
        let (a, b) = self.ends[e];
        if a == x {
            b
        } else {
            a
        }
    }

    /// Live edges as `(id, u, v)` with `u < v`, in id order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.ends
            .iter()
            .enumerate()
            .filter(move |(e, _)| self.live[*e])
            .map(|(e, &(u, v))| (e, u, v))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.ends.len()).filter(move |&e| self.live[e])
    }

    /// Neighbors of `v` with the connecting edge id, sorted by neighbor.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbor_ids(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let list = self.adj.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Copy of the graph with the given live edges removed.
    pub fn delete_edges<I>(&self, es: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = EdgeId>,
    {
        let mut g = self.clone();
        for e in es {
            if !g.is_live(e) {
                return Err(GraphError::UnknownEdgeId(e));
            }
            g.kill(e);
        }
        Ok(g)
    }

    /// Brings a dead slot back. Used to unwind a sequence of deletions
    /// without keeping every intermediate graph.
    pub(crate) fn revive(&mut self, e: EdgeId) {
        debug_assert!(!self.live[e]);
        let (u, v) = self.ends[e];
        self.live[e] = true;
        insert_sorted(&mut self.adj[u], (v, e));
        insert_sorted(&mut self.adj[v], (u, e));
        self.live_count += 1;
    }

    pub(crate) fn kill(&mut self, e: EdgeId) {
        let (u, v) = self.ends[e];
        self.live[e] = false;
        self.adj[u].retain(|&(_, f)| f != e);
        self.adj[v].retain(|&(_, f)| f != e);
        self.live_count -= 1;
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &(y, _) in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Live edges forming a component that is a single edge.
    pub fn isolated_edges(&self) -> Vec<EdgeId> {
        self.edges()
            .filter(|&(_, u, v)| self.degree(u) == 1 && self.degree(v) == 1)
            .map(|(e, _, _)| e)
            .collect()
    }

    pub fn has_isolated_edge(&self) -> bool {
        self.edges().any(|(_, u, v)| self.degree(u) == 1 && self.degree(v) == 1)
    }

    /// Subgraph induced by `vs`, relabelled to `0..vs.len()` in the given
    /// order. Returns the subgraph and, for each of its edge ids, the host id.
    pub fn induced(&self, vs: &[VertexId]) -> (Graph, Vec<EdgeId>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vs.iter().enumerate() {
            index[v] = i;
        }
        let mut sub = Graph::new(vs.len());
        let mut back = Vec::new();
        for (e, u, v) in self.edges() {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                sub.add_edge(index[u], index[v]).expect("induced subgraph of a simple graph");
                back.push(e);
            }
        }
        (sub, back)
    }

    /// Number of live edges with both ends in `vs`.
    pub fn edges_within(&self, vs: &BTreeSet<VertexId>) -> usize {
        self.edges().filter(|(_, u, v)| vs.contains(u) && vs.contains(v)).count()
    }

    /// The edge-list document for this graph. Isolated vertices are declared
    /// so that the vertex count round-trips.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        let mut declared_max = false;
        for v in 0..self.n() {
            if self.degree(v) == 0 {
                let _ = writeln!(s, "v {v}");
                declared_max |= v + 1 == self.n();
            }
        }
        for (_, u, v) in self.edges() {
            let _ = writeln!(s, "e {u} {v}");
            declared_max |= v + 1 == self.n();
        }
        if !declared_max && self.n() > 0 {
            let _ = writeln!(s, "v {}", self.n() - 1);
        }
        s
    }

    pub fn classify(&self, v: VertexId) -> VertexClass {
        classify(self, v)
    }

    pub fn classify_all(&self) -> Vec<VertexClass> {
        (0..self.n()).map(|v| classify(self, v)).collect()
    }
}

fn insert_sorted(list: &mut Vec<(VertexId, EdgeId)>, item: (VertexId, EdgeId)) {
    let pos = list.partition_point(|&(w, _)| w < item.0);
    list.insert(pos, item);
}

/// Parses the edge-list format: `# comment`, `v <id>`, `e <u> <v>`.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut max_id: Option<usize> = None;
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let malformed = || ParseError::MalformedLine { line, text: raw.to_string() };
        let toks: Vec<&str> = t.split_whitespace().collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| malformed());
        match toks.as_slice() {
            ["v", a] => {
                let a = num(a)?;
                max_id = Some(max_id.map_or(a, |m| m.max(a)));
            }
            ["e", a, b] => {
                let (a, b) = (num(a)?, num(b)?);
                if a == b {
                    return Err(ParseError::Loop { line, v: a });
                }
                max_id = Some(max_id.map_or(a.max(b), |m| m.max(a).max(b)));
                pairs.push((line, a, b));
            }
            _ => return Err(malformed()),
        }
    }
    let mut g = Graph::new(max_id.map_or(0, |m| m + 1));
    for (line, a, b) in pairs {
        match g.add_edge(a, b) {
            Ok(_) => {}
            Err(GraphError::DuplicateEdge(u, v)) => return Err(ParseError::DuplicateEdge { line, u, v }),
            Err(e) => unreachable!("validated while scanning: {e}"),
        }
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GammaKind {
    /// 4-vertex with a 1-neighbor.
    Four,
    /// 3-vertex with an α-neighbor.
    ThreeAlpha,
    /// 3-vertex with two 2-neighbors and no α-neighbor.
    ThreeTwo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexClass {
    pub degree: usize,
    /// 2-vertex with a 2-neighbor.
    pub is_alpha: bool,
    /// 3-vertex with exactly one 2-neighbor and no 1-neighbor (2-weighting flavor).
    pub is_beta12: bool,
    /// 3-vertex with a 2-neighbor (3-weighting flavor).
    pub is_beta123: bool,
    /// 2k-vertex, k >= 2, with exactly k-1 1-neighbors and no 2-neighbor.
    pub is_beta_prime: bool,
    pub gamma: Option<GammaKind>,
}

impl VertexClass {
    pub fn is_gamma(&self) -> bool {
        self.gamma.is_some()
    }
}

pub fn is_alpha(g: &Graph, v: VertexId) -> bool {
    g.degree(v) == 2 && g.neighbor_ids(v).any(|w| g.degree(w) == 2)
}

pub fn classify(g: &Graph, v: VertexId) -> VertexClass {
    let d = g.degree(v);
    let ones = g.neighbor_ids(v).filter(|&w| g.degree(w) == 1).count();
    let twos = g.neighbor_ids(v).filter(|&w| g.degree(w) == 2).count();
    let alpha_nbrs = g.neighbor_ids(v).filter(|&w| is_alpha(g, w)).count();
    let is_beta_prime = d >= 4 && d.is_multiple_of(2) && ones == d / 2 - 1 && twos == 0;
    let gamma = if d == 4 && ones >= 1 {
        Some(GammaKind::Four)
    } else if d == 3 && alpha_nbrs >= 1 {
        Some(GammaKind::ThreeAlpha)
    } else if d == 3 && twos >= 2 {
        Some(GammaKind::ThreeTwo)
    } else {
        None
    };
    VertexClass {
        degree: d,
        is_alpha: d == 2 && twos >= 1,
        is_beta12: d == 3 && twos == 1 && ones == 0,
        is_beta123: d == 3 && twos >= 1,
        is_beta_prime,
        gamma,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let es: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &es).unwrap()
    }

    #[test]
    fn parse_path_and_isolated() {
        let g = parse_graph("e 0 1\ne 1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        let g = parse_graph("# nothing\nv 5\n").unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_errors_name_the_line() {
        assert_eq!(
            parse_graph("e 0 1\ne 0 1").unwrap_err(),
            ParseError::DuplicateEdge { line: 2, u: 0, v: 1 }
        );
        assert_eq!(parse_graph("e 1 0\ne 0 1").unwrap_err(), ParseError::DuplicateEdge { line: 2, u: 0, v: 1 });
        assert_eq!(parse_graph("e 3 3").unwrap_err(), ParseError::Loop { line: 1, v: 3 });
        assert!(matches!(parse_graph("x 1").unwrap_err(), ParseError::MalformedLine { line: 1, .. }));
        assert!(matches!(parse_graph("e 1").unwrap_err(), ParseError::MalformedLine { .. }));
        assert!(matches!(parse_graph("e 1 -2").unwrap_err(), ParseError::MalformedLine { .. }));
    }

    #[test]
    fn edge_list_round_trip() {
        let mut g = path(4);
        g.add_vertex();
        let h = parse_graph(&g.to_edge_list()).unwrap();
        assert_eq!(h.n(), 5);
        assert_eq!(h.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn delete_edges_tombstones() {
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let p3 = c3.delete_edges([2]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.edge_between(0, 1), Some(0));
        assert_eq!(p3.edge_between(1, 2), Some(1));
        assert_eq!(c3.edge_count(), 3);
        let empty = p3.delete_edges([0, 1]).unwrap();
        assert_eq!(empty.edge_count(), 0);
        assert_eq!(empty.n(), 3);
        assert_eq!(p3.delete_edges([2]).unwrap_err(), GraphError::UnknownEdgeId(2));
    }

    #[test]
    fn classify_examples() {
        let p4 = path(4);
        assert!(p4.classify(1).is_alpha);
        assert!(!p4.classify(0).is_alpha);

        let mut k4p = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        k4p.add_edge(0, 4).unwrap();
        let c = k4p.classify(0);
        assert_eq!(c.degree, 4);
        assert!(c.is_beta_prime);
        assert_eq!(c.gamma, Some(GammaKind::Four));

        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.classify(0).gamma, Some(GammaKind::Four));
        assert!(!star.classify(0).is_beta_prime);
    }

    #[test]
    fn gamma_overlap_reports_alpha_kind() {
        // 0 has 2-neighbors 1 and 2; 1 continues into another 2-vertex 3.
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 4), (1, 3), (3, 5), (2, 6), (4, 5), (4, 6)]).unwrap();
        let c = g.classify(0);
        assert_eq!(c.gamma, Some(GammaKind::ThreeAlpha));
        assert!(c.is_beta123);
        assert!(!c.is_beta12);
    }

    #[test]
    fn components_and_isolated_edges() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3, 4], vec![5]]);
        assert_eq!(g.isolated_edges(), vec![0]);
        let (sub, back) = g.induced(&[4, 3, 2]);
        assert_eq!(sub.edge_count(), 2);
        assert_eq!(back, vec![1, 2]);
        assert!(sub.has_edge(0, 1) && sub.has_edge(1, 2));
    }
}
