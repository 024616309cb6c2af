//! The two would-be configurations that the extension method cannot handle,
//! as concrete graphs with a fixed partial total 2-weighting.
//!
//! Each boundary value ρ(s, c) that the argument relies on is produced by a
//! stub vertex s joined to c by a weight-1 edge and carrying weighted leaves,
//! so that w(s) plus the leaf edge weights equals the requested value.

use std::collections::BTreeSet;
use std::fmt;

use crate::configs::{Catalog, ConfigKind, ConfigurationInstance, Stage, Tag};
use crate::graph::{Graph, VertexId};
use crate::weighting::{Mode, Weighting};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Adjacent degree-4 β′-vertices.
    Left,
    /// A β-vertex whose 2-neighbor continues into another 2-vertex.
    Right,
}

impl Side {
    pub fn parse(s: &str) -> Option<Side> {
        match s {
            "left" => Some(Side::Left),
            "right" => Some(Side::Right),
            _ => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub graph: Graph,
    /// Weights on everything outside the instance's mutable part.
    pub base: Weighting,
    pub instance: ConfigurationInstance,
}

struct Builder {
    edges: Vec<(VertexId, VertexId, u8)>,
    vertex_weights: Vec<(VertexId, u8)>,
    n: usize,
}

impl Builder {
    fn vertex(&mut self) -> VertexId {
        self.n += 1;
        self.n - 1
    }

    /// Hangs a stub off `at` whose ρ toward `at` is `rho`.
    fn stub(&mut self, at: VertexId, rho: u8) {
        let s = self.vertex();
        self.edges.push((at, s, 1));
        let k = 2.max((rho as usize).saturating_sub(2).div_ceil(2));
        assert!(k < rho as usize && rho as usize <= 2 * (k + 1), "stub value {rho} out of reach");
        let mut own = 1u8;
        let mut leaf = vec![1u8; k];
        let mut missing = rho as usize - (k + 1);
        if missing > 0 {
            own = 2;
            missing -= 1;
        }
        for w in leaf.iter_mut().take(missing) {
            *w = 2;
        }
        self.vertex_weights.push((s, own));
        for w in leaf {
            let l = self.vertex();
            self.edges.push((s, l, w));
            self.vertex_weights.push((l, 1));
        }
    }
}

fn build(side: Side, stubs: &[(usize, u8)]) -> Gadget {
    let mut b = Builder { edges: Vec::new(), vertex_weights: Vec::new(), n: 0 };
    let (core, roles, tag) = match side {
        Side::Left => {
            let (u, v, v2, u2) = (b.vertex(), b.vertex(), b.vertex(), b.vertex());
            (vec![(u, v), (v, v2), (v2, u2)], vec![("u", u), ("v", v), ("v'", v2), ("u'", u2)], Tag::Left)
        }
        Side::Right => {
            let (v, z, y) = (b.vertex(), b.vertex(), b.vertex());
            (vec![(v, z), (z, y)], vec![("v", v), ("z", z), ("y", y)], Tag::Right)
        }
    };
    for &(at, rho) in stubs {
        b.stub(at, rho);
    }
    let mut g = Graph::new(b.n);
    let core_ids: BTreeSet<_> = core.iter().map(|&(x, y)| g.add_edge(x, y).expect("fresh")).collect();
    let weighted: Vec<_> = b.edges.iter().map(|&(x, y, w)| (g.add_edge(x, y).expect("fresh"), w)).collect();
    let mut base = Weighting::empty(Mode::Total2, &g);
    for (e, w) in weighted {
        base.set_edge(e, w).expect("weight in range");
    }
    for &(v, w) in &b.vertex_weights {
        base.set_vertex(v, w).expect("weight in range");
    }
    let instance = ConfigurationInstance {
        kind: ConfigKind::new(Catalog::NONRED, Stage::Reducible, tag),
        roles,
        core: core_ids,
        extra_deletions: BTreeSet::new(),
    };
    Gadget { graph: g, base, instance }
}

// Boundary values: (vertex index in the core, ρ toward it).
fn stubs(side: Side, perturbed: bool) -> Vec<(usize, u8)> {
    match side {
        // Vertices 1 and 2 are the two β′-vertices.
        Side::Left => vec![(1, 6), (1, 5), (2, if perturbed { 7 } else { 6 }), (2, 5)],
        // Vertex 0 is the β-vertex, vertex 2 is the far 2-vertex.
        Side::Right => vec![(0, 4), (0, 5), (2, if perturbed { 4 } else { 3 })],
    }
}

pub fn nonred_gadget(side: Side) -> Gadget {
    build(side, &stubs(side, false))
}

/// Same graph shape with one boundary value moved so an extension exists.
pub fn perturbed_gadget(side: Side) -> Gadget {
    build(side, &stubs(side, true))
}

pub fn gadget_base_weighting(side: Side) -> Weighting {
    nonred_gadget(side).base
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weighting::rho;

    #[test]
    fn stub_values_are_realized() {
        for side in [Side::Left, Side::Right] {
            for perturbed in [false, true] {
                let spec = stubs(side, perturbed);
                let gad = build(side, &spec);
                let g = &gad.graph;
                let core_size = gad.instance.roles.len();
                for at in 0..core_size {
                    let want: Vec<u32> = spec.iter().filter(|p| p.0 == at).map(|p| p.1 as u32).collect();
                    let got: Vec<u32> = g
                        .neighbor_ids(at)
                        .filter(|&s| s >= core_size)
                        .map(|s| rho(g, &gad.base, s, at).unwrap())
                        .collect();
                    assert_eq!(got, want, "{side} perturbed={perturbed} at {at}");
                }
            }
        }
    }

    #[test]
    fn shapes() {
        let left = nonred_gadget(Side::Left);
        let g = &left.graph;
        assert_eq!((g.degree(0), g.degree(1), g.degree(2), g.degree(3)), (1, 4, 4, 1));
        assert!(g.classify(1).is_beta_prime && g.classify(2).is_beta_prime);
        let right = nonred_gadget(Side::Right);
        let g = &right.graph;
        assert!(g.classify(0).is_beta12);
        assert_eq!((g.degree(1), g.degree(2)), (2, 2));
    }
}
