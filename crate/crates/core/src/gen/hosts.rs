//! Host graphs in which a chosen configuration kind is the first one found.
//!
//! A template names a small pattern and marks where it hangs off the rest of
//! the graph. Those attachment points are joined to vertices of a clique
//! K_t (t = 6, 7, 8), at most two per clique vertex, so every attachment
//! target has degree at least 6 and is inert for every pattern. Variants
//! differ in template, clique size, and a seeded relabelling.

use crate::configs::{Catalog, ConfigKind, Stage, Tag};
use crate::graph::Graph;

use super::{relabel, GenError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Host {
    pub kind: ConfigKind,
    /// Main catalog the host is meant to be scanned with.
    pub catalog: Catalog,
    pub graph: Graph,
}

#[derive(Debug, Clone, Default)]
struct T {
    names: Vec<&'static str>,
    edges: Vec<(usize, usize)>,
    anchors: Vec<usize>,
}

impl T {
    fn id(&mut self, name: &'static str) -> usize {
        match self.names.iter().position(|&n| n == name) {
            Some(i) => i,
            None => {
                self.names.push(name);
                self.names.len() - 1
            }
        }
    }

    fn e(mut self, a: &'static str, b: &'static str) -> Self {
        let (x, y) = (self.id(a), self.id(b));
        self.edges.push((x, y));
        self
    }

    fn p(mut self, walk: &[&'static str]) -> Self {
        for w in walk.windows(2) {
            self = self.e(w[0], w[1]);
        }
        self
    }

    /// `k` edges from `a` into the clique.
    fn a(mut self, a: &'static str, k: usize) -> Self {
        let x = self.id(a);
        self.anchors.extend(std::iter::repeat_n(x, k));
        self
    }

    /// A degree-4 vertex with a pendant and two clique edges, besides `to`.
    fn gamma4(self, x: &'static str, leaf: &'static str) -> Self {
        self.e(x, leaf).a(x, 2)
    }

    fn build(&self, t: usize) -> Graph {
        let k = self.names.len();
        assert!(self.anchors.len() <= 2 * t, "too many attachments for K{t}");
        let mut g = Graph::new(k + t);
        for &(x, y) in &self.edges {
            g.add_edge(x, y).expect("template edges are simple");
        }
        for i in 0..t {
            for j in i + 1..t {
                g.add_edge(k + i, k + j).expect("clique");
            }
        }
        let mut next = 0;
        for &x in &self.anchors {
            while g.has_edge(x, k + next % t) {
                next += 1;
            }
            g.add_edge(x, k + next % t).expect("fresh attachment");
            next += 1;
        }
        g
    }
}

fn t() -> T {
    T::default()
}

// Shared shapes, named by what they exhibit.

fn pendant_on_two() -> T {
    t().e("v", "u").a("v", 1)
}

fn pendant_on_three() -> T {
    t().e("v", "u").a("v", 2)
}

fn three_twos() -> T {
    t().p(&["v", "z1"]).p(&["v", "z2"]).p(&["v", "z3"]).a("z1", 1).a("z2", 1).a("z3", 1)
}

fn alpha_pair() -> T {
    t().p(&["v", "z", "y"]).a("y", 1).e("v", "z'").a("z'", 1).a("v", 1)
}

fn four_pendant_two() -> T {
    t().e("v", "u").e("v", "z").a("z", 1).a("v", 2)
}

fn five_two_pendants() -> T {
    t().e("v", "u1").e("v", "u2").a("v", 3)
}

fn six_three_pendants() -> T {
    t().e("v", "u1").e("v", "u2").e("v", "u3").a("v", 3)
}

fn five_pendant_two() -> T {
    t().e("v", "u").e("v", "z").a("z", 1).a("v", 3)
}

fn three_two_twos() -> T {
    t().e("v", "z").e("v", "z'").a("z", 1).a("z'", 1).a("v", 1)
}

fn four_two_twos() -> T {
    t().e("v", "z").e("v", "z'").a("z", 1).a("z'", 1).a("v", 2)
}

fn five_two_twos() -> T {
    t().e("v", "z").e("v", "z'").a("z", 1).a("z'", 1).a("v", 3)
}

fn seven_three_pendants() -> T {
    t().e("v", "u1").e("v", "u2").e("v", "u3").a("v", 4)
}

fn adjacent_betas() -> T {
    t().e("v", "v'").e("v", "z").a("z", 1).a("v", 1).e("v'", "z'").a("z'", 1).a("v'", 1)
}

fn beta_by_prime() -> T {
    t().e("v", "v'").e("v", "z").a("z", 1).a("v", 1).e("v'", "u").a("v'", 2)
}

fn prime_triple(adjacent: bool) -> T {
    let base = t().e("v", "u").e("v", "z").e("v", "z'").a("v", 1).e("z", "y").e("z'", "y'");
    if adjacent {
        base.e("z", "z'").a("z", 1).a("z'", 1)
    } else {
        base.a("z", 2).a("z'", 2)
    }
}

fn beta_hub_general() -> T {
    t().e("v", "z1")
        .e("v", "z2")
        .e("v", "z3")
        .p(&["z1", "y1"])
        .p(&["z2", "y2"])
        .p(&["z3", "y3"])
        .a("y1", 1)
        .a("y2", 1)
        .a("y3", 1)
        .a("z1", 1)
        .a("z2", 1)
        .a("z3", 1)
}

fn beta_hub_primes() -> T {
    t().e("v", "a")
        .e("v", "b")
        .e("v", "x")
        .e("a", "b")
        .e("a", "ua")
        .e("b", "ub")
        .a("a", 1)
        .a("b", 1)
        .e("x", "y")
        .a("y", 1)
        .a("x", 1)
}

fn beta_hub_shared_tip() -> T {
    t().e("v", "a")
        .e("v", "b")
        .e("v", "x")
        .e("a", "y")
        .e("b", "y")
        .a("a", 1)
        .a("b", 1)
        .e("x", "yx")
        .a("yx", 1)
        .a("x", 1)
}

fn gammas_four_four() -> T {
    t().e("v", "v'").gamma4("v", "u").gamma4("v'", "u'")
}

fn gammas_three_four() -> T {
    t().e("v", "z1").e("v", "z2").a("z1", 1).a("z2", 1).e("v", "v'").gamma4("v'", "u'")
}

fn gammas_alpha_alpha() -> T {
    t().p(&["b", "a", "v", "v'", "a'", "b'"]).a("b", 1).a("b'", 1).a("v", 1).a("v'", 1)
}

fn gamma_pair_fours() -> T {
    t().e("v", "z").e("v", "z'").a("v", 1).gamma4("z", "u").gamma4("z'", "u'")
}

fn gamma_pair_mixed() -> T {
    t().e("v", "z").e("v", "z'").a("v", 1).e("z", "w1").e("z", "w2").a("w1", 1).a("w2", 1).gamma4("z'", "u'")
}

fn gamma_heavy(pendants: usize) -> T {
    let mut g = t().a("v", 1);
    for &u in ["u1", "u2"].iter().take(pendants) {
        g = g.e("v", u);
    }
    for (z, u) in [("z1", "y1"), ("z2", "y2"), ("z3", "y3"), ("z4", "y4")] {
        g = g.e("v", z).gamma4(z, u);
    }
    g
}

fn five_gamma(mixed: bool) -> T {
    let g = t().e("v", "u").a("v", 1).e("v", "z1").gamma4("z1", "y1").e("v", "z2").gamma4("z2", "y2").e("v", "z3");
    if mixed {
        g.e("z3", "w1").e("z3", "w2").a("w1", 1).a("w2", 1)
    } else {
        g.gamma4("z3", "y3")
    }
}

fn two_alphas() -> T {
    t().p(&["v", "z1", "y1"]).p(&["v", "z2", "y2"]).a("y1", 1).a("y2", 1).e("v", "w").a("w", 1).a("v", 1)
}

fn alpha_two_gamma() -> T {
    t().p(&["v", "z", "y"])
        .a("y", 1)
        .e("v", "w")
        .a("w", 1)
        .e("v", "x1")
        .gamma4("x1", "u1")
        .e("v", "x2")
        .gamma4("x2", "u2")
}

fn alpha_three_gammas() -> T {
    t().p(&["v", "z", "y"])
        .a("y", 1)
        .e("v", "x1")
        .gamma4("x1", "u1")
        .e("v", "x2")
        .gamma4("x2", "u2")
        .e("v", "x3")
        .gamma4("x3", "u3")
}

fn beta_side(g: T, s: &'static str, y: &'static str) -> T {
    g.e(s, y).a(y, 1).a(s, 1)
}

fn gamma_on_betas_three_two() -> T {
    beta_side(t().e("v", "z1").e("v", "z2").a("z1", 1).a("z2", 1).e("v", "s"), "s", "y")
}

fn gamma_on_betas_four() -> T {
    let g = t().e("v", "u").e("v", "s1").e("v", "s2").e("v", "s3");
    beta_side(beta_side(beta_side(g, "s1", "y1"), "s2", "y2"), "s3", "y3")
}

fn gamma_on_betas_alpha() -> T {
    let g = t().p(&["v", "a", "b"]).a("b", 1).e("v", "s1").e("v", "s2");
    beta_side(beta_side(g, "s1", "y1"), "s2", "y2")
}

fn tri_one(d: usize) -> T {
    t().p(&["v", "z", "z'", "v"]).a("v", d - 2)
}

fn tri_two_plain() -> T {
    t().p(&["z", "v", "v'", "z"]).a("v", 1).a("v'", 1)
}

fn tri_two_pendant() -> T {
    t().p(&["z", "v", "v'", "z"]).e("v", "u").a("v", 1).a("v'", 1)
}

fn tri_two_flex() -> T {
    t().p(&["z", "v", "v'", "z"]).e("v", "w").a("w", 1).a("v", 1).a("v'", 1)
}

fn cyc_adjacent() -> T {
    t().p(&["z", "y", "y'", "z'", "z"]).a("z", 1).a("z'", 1)
}

fn cyc_shared() -> T {
    t().p(&["z", "y", "z'"]).e("v", "z").e("v", "z'").e("v", "u").a("v", 1).a("z", 1).a("z'", 1)
}

fn cyc_bridged() -> T {
    t().p(&["z", "y", "y'", "z'"]).e("v", "z").e("v", "z'").e("v", "u").a("v", 1).a("z", 1).a("z'", 1)
}

fn templates(kind: ConfigKind) -> Vec<T> {
    use Catalog::*;
    use Stage::*;
    use Tag::*;
    let fifty_two_unavoidable = |tag| match tag {
        A => vec![pendant_on_two(), pendant_on_three()],
        B => vec![three_twos()],
        C => vec![alpha_pair()],
        D => vec![four_pendant_two()],
        E => vec![five_two_pendants(), six_three_pendants()],
        _ => Vec::new(),
    };
    match (kind.catalog, kind.stage, kind.tag) {
        (W3_52, _, tag) => fifty_two_unavoidable(tag),
        (W2_52, Unavoidable, tag) => fifty_two_unavoidable(tag),
        (W2_52, Reducible, A) => vec![pendant_on_two(), pendant_on_three()],
        (W2_52, Reducible, B) => vec![three_twos(), alpha_pair(), four_pendant_two()],
        (W2_52, Reducible, C) => vec![five_two_pendants(), six_three_pendants()],
        (W2_83, _, A) => vec![pendant_on_two(), pendant_on_three()],
        (W2_83, _, B) => vec![three_two_twos(), four_two_twos()],
        (W2_83, _, C) => vec![five_two_twos(), five_two_pendants(), seven_three_pendants()],
        (W2_83, _, D) => vec![adjacent_betas()],
        (W2_83, _, E) => vec![beta_by_prime()],
        (W2_83, _, F) => vec![prime_triple(false), prime_triple(true)],
        (W2_83, _, G) => vec![beta_hub_general(), beta_hub_primes(), beta_hub_shared_tip()],
        (W3_83, _, A) => vec![pendant_on_two(), pendant_on_three()],
        (W3_83, _, B) => vec![three_twos()],
        (W3_83, _, C) => vec![alpha_pair()],
        (W3_83, _, D) => vec![four_pendant_two()],
        (W3_83, _, E) => vec![five_pendant_two(), five_two_pendants()],
        (W3_83, _, F) => vec![gammas_four_four(), gammas_three_four(), gammas_alpha_alpha()],
        (W3_83, _, G) => vec![gamma_pair_fours(), gamma_pair_mixed()],
        (W3_83, _, H) => vec![gamma_heavy(1), gamma_heavy(2)],
        (W3_83, _, I) => vec![five_gamma(false), five_gamma(true)],
        (W3_83, Unavoidable, J) => vec![two_alphas(), alpha_two_gamma(), alpha_three_gammas()],
        (W3_83, Reducible, J1) => vec![two_alphas()],
        (W3_83, Reducible, J2) => vec![alpha_two_gamma()],
        (W3_83, Reducible, J3) => vec![alpha_three_gammas()],
        (W3_83, _, K) => vec![gamma_on_betas_three_two(), gamma_on_betas_four(), gamma_on_betas_alpha()],
        (DEGEN_TRI, _, Tri1) => vec![tri_one(3), tri_one(4), tri_one(2)],
        (DEGEN_TRI, _, Tri2) => vec![tri_two_plain(), tri_two_pendant(), tri_two_flex()],
        (DEGEN_4CYC, _, Cyc1) => vec![cyc_adjacent()],
        (DEGEN_4CYC, _, Cyc2a) => vec![cyc_shared()],
        (DEGEN_4CYC, _, Cyc2b) => vec![cyc_bridged()],
        _ => Vec::new(),
    }
}

/// Number of distinct templates behind `config_host(kind, _)`; zero when
/// the kind has no host.
pub fn host_variants(kind: ConfigKind) -> usize {
    templates(kind).len()
}

/// Host graph number `variant` for `kind`. Every variant is a valid host;
/// they cycle through the templates and clique sizes 6, 7, 8.
pub fn config_host(kind: ConfigKind, variant: usize) -> Result<Host, GenError> {
    let ts = templates(kind);
    if ts.is_empty() {
        return Err(GenError::InvalidParams(format!("no host template for {kind}")));
    }
    let clique = 6 + variant % 3;
    let graph = relabel(&ts[variant % ts.len()].build(clique), variant as u64);
    let catalog = if kind.is_degenerate() { Catalog::W3_83 } else { kind.catalog };
    Ok(Host { kind, catalog, graph })
}
