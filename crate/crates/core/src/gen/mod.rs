//! Seeded generators for test corpora, the non-reducible gadgets, and host
//! graphs for every configuration kind.

mod gadget;
mod hosts;

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::mad::mad_less_than;
use crate::Rational;

pub use gadget::{gadget_base_weighting, nonred_gadget, perturbed_gadget, Gadget, Side};
pub use hosts::{config_host, host_variants, Host};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("base graph is not 3-regular")]
    NotCubic,
}

/// Everything `generate` can build. Identical specs give identical graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenSpec {
    Cycle { n: usize },
    Path { n: usize },
    Tree { n: usize, seed: u64 },
    RandomMad { n: usize, bound: Rational, seed: u64 },
    CubicPlusPendants { base: Graph },
    NonredGadget { side: Side },
    ConfigHost { kind: crate::configs::ConfigKind, variant: usize },
}

pub fn generate(spec: &GenSpec) -> Result<Graph, GenError> {
    match spec {
        GenSpec::Cycle { n } => cycle(*n),
        GenSpec::Path { n } => path(*n),
        GenSpec::Tree { n, seed } => tree(*n, *seed),
        GenSpec::RandomMad { n, bound, seed } => random_mad(*n, *bound, *seed),
        GenSpec::CubicPlusPendants { base } => cubic_plus_pendants(base),
        GenSpec::NonredGadget { side } => Ok(nonred_gadget(*side).graph),
        GenSpec::ConfigHost { kind, variant } => config_host(*kind, *variant).map(|h| h.graph),
    }
}

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::InvalidParams(format!("cycle needs n >= 3, got {n}")));
    }
    let es: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &es).expect("simple"))
}

pub fn path(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::InvalidParams("path needs n >= 1".into()));
    }
    let es: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges(n, &es).expect("simple"))
}

/// Random recursive tree: vertex i attaches to a uniform earlier vertex.
pub fn tree(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(GenError::InvalidParams("tree needs n >= 1".into()));
    }
    let mut r = rng(seed);
    let es: Vec<_> = (1..n).map(|i| (r.gen_range(0..i), i)).collect();
    Ok(Graph::from_edges(n, &es).expect("simple"))
}

/// Random graph on `n` vertices with maximum average degree below `bound`.
///
/// Candidate edges arrive in a seeded random order and are accepted in
/// batches while the exact density check passes; a failing batch is retried
/// edge by edge. The edge target is itself random, so the corpus mixes
/// sparse graphs with ones packed up against the bound.
pub fn random_mad(n: usize, bound: Rational, seed: u64) -> Result<Graph, GenError> {
    if n < 1 || bound <= Rational::from(0) {
        return Err(GenError::InvalidParams(format!("random_mad needs n >= 1 and a positive bound, got n={n}")));
    }
    let mut r = rng(seed);
    let mut pairs: Vec<(VertexId, VertexId)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(&mut r);
    // Largest edge count the bound permits on the whole vertex set.
    let cap = (bound * Rational::from(n as i64) / 2).ceil().to_integer().max(0) as usize;
    let target = r.gen_range(n / 2..=cap.max(n / 2));
    let mut g = Graph::new(n);
    let mut misses = 0;
    const BATCH: usize = 8;
    let mut i = 0;
    while i < pairs.len() && g.edge_count() < target && misses < 4 * n {
        let end = (i + BATCH).min(pairs.len());
        let mut trial = g.clone();
        for &(u, v) in &pairs[i..end] {
            trial.add_edge(u, v).expect("fresh pair");
        }
        if mad_less_than(&trial, bound) {
            g = trial;
            misses = 0;
        } else {
            for &(u, v) in &pairs[i..end] {
                let mut one = g.clone();
                one.add_edge(u, v).expect("fresh pair");
                if mad_less_than(&one, bound) {
                    g = one;
                } else {
                    misses += 1;
                }
            }
        }
        i = end;
    }
    debug_assert!(g.edge_count() == 0 || mad_less_than(&g, bound));
    Ok(g)
}

/// A 3-regular graph with a pendant edge added at every vertex.
pub fn cubic_plus_pendants(base: &Graph) -> Result<Graph, GenError> {
    let n = base.n();
    if n == 0 || (0..n).any(|v| base.degree(v) != 3) {
        return Err(GenError::NotCubic);
    }
    let mut es: Vec<_> = base.edges().map(|(_, u, v)| (u, v)).collect();
    es.extend((0..n).map(|v| (v, n + v)));
    Ok(Graph::from_edges(2 * n, &es).expect("simple"))
}

/// Generalized Petersen graph: outer n-cycle, spokes, inner step-k cycle.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph, GenError> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(GenError::InvalidParams(format!("generalized Petersen needs n >= 3 and 0 < k < n/2, got ({n}, {k})")));
    }
    let mut es = Vec::new();
    for i in 0..n {
        es.push((i, (i + 1) % n));
        es.push((i, n + i));
        es.push((n + i, n + (i + k) % n));
    }
    Ok(Graph::from_edges(2 * n, &es).expect("simple"))
}

/// Length of a shortest cycle, or `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::from([s]);
        dist[s] = 0;
        while let Some(x) = queue.pop_front() {
            for y in g.neighbor_ids(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Uniform-ish random 3-regular graph of girth at least `min_girth`, by the
/// pairing model with rejection. `None` if `attempts` pairings all fail.
pub fn random_cubic(n: usize, min_girth: usize, seed: u64, attempts: usize) -> Result<Option<Graph>, GenError> {
    if n < 4 || n % 2 == 1 {
        return Err(GenError::InvalidParams(format!("cubic graphs need even n >= 4, got {n}")));
    }
    let mut r = rng(seed);
    let mut points: Vec<VertexId> = (0..n).flat_map(|v| [v, v, v]).collect();
    'attempt: for _ in 0..attempts {
        points.shuffle(&mut r);
        let mut g = Graph::new(n);
        for pair in points.chunks(2) {
            if g.add_edge(pair[0], pair[1]).is_err() {
                continue 'attempt;
            }
        }
        if girth(&g).is_some_and(|l| l >= min_girth) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Applies a seeded random relabelling.
pub fn relabel(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<VertexId> = (0..g.n()).collect();
    perm.shuffle(&mut rng(seed));
    let mut es: Vec<_> = g.edges().map(|(_, u, v)| (perm[u], perm[v])).collect();
    es.sort_unstable();
    Graph::from_edges(g.n(), &es).expect("relabelling keeps the graph simple")
}

/// Connected graphs on `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, GenError> {
    if !(1..=8).contains(&n) {
        return Err(GenError::InvalidParams(format!("graph enumeration supports 1 <= n <= 8, got {n}")));
    }
    let mut layer: Vec<Graph> = vec![Graph::new(1)];
    for k in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &layer {
            for mask in 0u32..(1 << (k - 1)) {
                let mut h = g.clone();
                let x = h.add_vertex();
                for y in 0..k - 1 {
                    if mask >> y & 1 == 1 {
                        h.add_edge(y, x).expect("fresh vertex");
                    }
                }
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        layer = next;
    }
    Ok(layer.into_iter().filter(|g| g.components().len() == 1).map(|g| {
        // Rebuild so edge ids are dense and sorted.
        let es: Vec<_> = g.edges().map(|(_, u, v)| (u, v)).collect();
        Graph::from_edges(g.n(), &es).expect("simple")
    }).collect())
}

/// Canonical adjacency code for tiny graphs: the least upper-triangle bit
/// string over all labellings that order vertices by a refined degree key.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical_code is for tiny graphs");
    let key = |v: VertexId| {
        let mut nd: Vec<usize> = g.neighbor_ids(v).map(|w| g.degree(w)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| key(v));
    // Blocks of equal key; labels are permuted only inside a block.
    let mut blocks: Vec<Vec<VertexId>> = Vec::new();
    for &v in &order {
        match blocks.last_mut() {
            Some(b) if key(b[0]) == key(v) => b.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    let mut pos = vec![0usize; n];
    let mut best = u64::MAX;
    fn rec(g: &Graph, blocks: &mut [Vec<VertexId>], bi: usize, start: usize, pos: &mut Vec<usize>, best: &mut u64) {
        if bi == blocks.len() {
            let n = g.n();
            let mut code = 0u64;
            for (_, u, v) in g.edges() {
                let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
                // Index of (a, b) in row-major upper-triangle order.
                let idx = a * n - a * (a + 1) / 2 + (b - a - 1);
                code |= 1 << idx;
            }
            *best = (*best).min(code);
            return;
        }
        let len = blocks[bi].len();
        permute(g, blocks, bi, 0, len, start, pos, best);
    }
    #[allow(clippy::too_many_arguments)]
    fn permute(g: &Graph, blocks: &mut [Vec<VertexId>], bi: usize, i: usize, len: usize, start: usize, pos: &mut Vec<usize>, best: &mut u64) {
        if i == len {
            for (j, &v) in blocks[bi].iter().enumerate() {
                pos[v] = start + j;
            }
            rec(g, blocks, bi + 1, start + len, pos, best);
            return;
        }
        for j in i..len {
            blocks[bi].swap(i, j);
            permute(g, blocks, bi, i + 1, len, start, pos, best);
            blocks[bi].swap(i, j);
        }
    }
    rec(g, &mut blocks, 0, 0, &mut pos, &mut best);
    best
}
