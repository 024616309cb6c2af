//! Exact maximum average degree.
//!
//! Mad(G) is twice the maximum edge density |E(S)|/|S| over vertex sets S.
//! For a test density p/q, a min cut in Goldberg's network finds the set
//! maximizing q|E(S)| - p|S|; iterating on the density of that set climbs to
//! the optimum in a handful of cuts and every intermediate value is the exact
//! density of an explicit witness, so no rounding step is needed.

use std::collections::BTreeSet;

use num_traits::Zero;
use thiserror::Error;

use crate::flow::FlowNetwork;
use crate::graph::{Graph, VertexId};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MadError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("brute force refuses {0} vertices (limit 20)")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MadResult {
    pub value: Rational,
    /// Sorted vertex set whose induced subgraph attains `value`.
    pub witness: Vec<VertexId>,
}

pub fn average_degree(g: &Graph) -> Result<Rational, MadError> {
    if g.n() == 0 {
        return Err(MadError::EmptyGraph);
    }
    Ok(Rational::new(2 * g.edge_count() as i64, g.n() as i64))
}

fn density_of(g: &Graph, set: &[VertexId]) -> Rational {
    let members: BTreeSet<VertexId> = set.iter().copied().collect();
    Rational::new(g.edges_within(&members) as i64, set.len() as i64)
}

/// Vertex set S maximizing q|E(S)| - p|S|, if that maximum is positive.
fn improving_set(g: &Graph, p: i64, q: i64) -> Option<Vec<VertexId>> {
    let n = g.n();
    let m = g.edge_count() as i64;
    let (s, t) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    for v in 0..n {
        let d = g.degree(v) as i64;
        net.add(s, v, q * m, 0);
        net.add(v, t, q * m + 2 * p - q * d, 0);
    }
    for (_, u, v) in g.edges() {
        net.add(u, v, q, q);
    }
    let cut = net.max_flow(s, t);
    if cut >= q * m * n as i64 {
        return None;
    }
    let side = net.source_side(s);
    let set: Vec<VertexId> = (0..n).filter(|&v| side[v]).collect();
    debug_assert!(!set.is_empty());
    Some(set)
}

pub fn mad_exact(g: &Graph) -> MadResult {
    if g.edge_count() == 0 {
        let witness = if g.n() > 0 { vec![0] } else { Vec::new() };
        return MadResult { value: Rational::zero(), witness };
    }
    let mut witness: Vec<VertexId> = (0..g.n()).collect();
    let mut density = density_of(g, &witness);
    while let Some(better) = improving_set(g, *density.numer(), *density.denom()) {
        let d = density_of(g, &better);
        debug_assert!(d > density);
        density = d;
        witness = better;
    }
    MadResult { value: density * 2, witness }
}

pub fn mad_less_than(g: &Graph, bound: Rational) -> bool {
    mad_exact(g).value < bound
}

/// Subset enumeration; the reference the flow method is tested against.
pub fn brute_force(g: &Graph) -> Result<MadResult, MadError> {
    let n = g.n();
    if n > 20 {
        return Err(MadError::TooLarge(n));
    }
    let masks: Vec<(usize, usize)> = g.edges().map(|(_, u, v)| (u, v)).collect();
    let mut best = MadResult { value: Rational::zero(), witness: if n > 0 { vec![0] } else { Vec::new() } };
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones() as i64;
        let inside = masks.iter().filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1).count() as i64;
        let value = Rational::new(2 * inside, size);
        if value > best.value {
            best = MadResult { value, witness: (0..n).filter(|&v| mask >> v & 1 == 1).collect() };
        }
    }
    Ok(best)
}
