//! Per-kind pattern matching. Every pattern is anchored at a center vertex
//! and returns role bindings plus core edges as vertex pairs.

use std::collections::{BTreeMap, BTreeSet};

use super::{Catalog, ConfigKind, ConfigurationInstance, Role, Stage, Tag};
use crate::graph::{GammaKind, Graph, VertexClass, VertexId};
use crate::weighting::Mode;

/// Named vertices and core edges of a γ-vertex's absorbing set.
pub type GammaSet = (Vec<(Role, VertexId)>, Vec<(VertexId, VertexId)>);

pub(crate) struct Ctx<'a> {
    pub g: &'a Graph,
    cls: Vec<VertexClass>,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct Found {
    roles: Vec<(Role, VertexId)>,
    core: Vec<(VertexId, VertexId)>,
}

impl Found {
    fn r(mut self, name: Role, v: VertexId) -> Self {
        self.roles.push((name, v));
        self
    }

    fn rs(mut self, name: Role, vs: &[VertexId]) -> Self {
        self.roles.extend(vs.iter().map(|&v| (name, v)));
        self
    }

    fn e(mut self, a: VertexId, b: VertexId) -> Self {
        self.core.push((a, b));
        self
    }

    fn star(mut self, v: VertexId, to: &[VertexId]) -> Self {
        self.core.extend(to.iter().map(|&x| (v, x)));
        self
    }

    fn with(mut self, (roles, edges): GammaSet) -> Self {
        self.roles.extend(roles);
        self.core.extend(edges);
        self
    }
}

/// The edge set that absorbs the constraints at a γ-vertex z, with the
/// vertices it names. `None` when z is not a γ-vertex.
pub fn gamma_set(g: &Graph, z: VertexId) -> Option<GammaSet> {
    let ctx = Ctx::new(g);
    ctx.gamma_set(z)
}

impl<'a> Ctx<'a> {
    pub fn new(g: &'a Graph) -> Self {
        Ctx { g, cls: g.classify_all() }
    }

    fn d(&self, v: VertexId) -> usize {
        self.g.degree(v)
    }

    fn c(&self, v: VertexId) -> &VertexClass {
        &self.cls[v]
    }

    fn nb(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.g.neighbor_ids(v)
    }

    fn nb_where(&self, v: VertexId, f: impl Fn(VertexId) -> bool) -> Vec<VertexId> {
        self.nb(v).filter(|&w| f(w)).collect()
    }

    fn nb_deg(&self, v: VertexId, k: usize) -> Vec<VertexId> {
        self.nb_where(v, |w| self.d(w) == k)
    }

    fn adj(&self, a: VertexId, b: VertexId) -> bool {
        self.g.has_edge(a, b)
    }

    /// For a 2-vertex z, its neighbor other than `not`.
    fn other(&self, z: VertexId, not: VertexId) -> Option<VertexId> {
        self.nb(z).find(|&w| w != not)
    }

    fn gamma_set(&self, z: VertexId) -> Option<GammaSet> {
        match self.c(z).gamma? {
            GammaKind::Four => {
                let u = *self.nb_deg(z, 1).first()?;
                Some((vec![("f", u)], vec![(z, u)]))
            }
            GammaKind::ThreeAlpha => {
                let a = self.nb(z).find(|&w| self.c(w).is_alpha)?;
                let b = self.other(a, z)?;
                Some((vec![("f", a), ("f", b)], vec![(z, a), (a, b)]))
            }
            GammaKind::ThreeTwo => {
                let twos = self.nb_deg(z, 2);
                Some((vec![("f", twos[0]), ("f", twos[1])], vec![(z, twos[0]), (z, twos[1])]))
            }
        }
    }

    pub fn find(&self, kind: ConfigKind) -> Vec<Found> {
        (0..self.g.n()).flat_map(|v| self.find_at(kind, v)).collect()
    }

    /// Instances of `kind` anchored at `v`.
    pub fn find_at(&self, kind: ConfigKind, v: VertexId) -> Vec<Found> {
        use Catalog::*;
        use Stage::*;
        use Tag::*;
        let ConfigKind { catalog, stage, tag } = kind;
        let three_family = matches!(catalog, W3_52 | W3_83);
        let fifty_two_list = matches!(catalog, W3_52 | W2_52) && stage == Unavoidable;
        match (catalog, tag) {
            (DEGEN_TRI, Tri1) => self.tri1(v),
            (DEGEN_TRI, Tri2) => self.tri2(v),
            (DEGEN_4CYC, Cyc1 | Cyc2a | Cyc2b) => self.cyc(v, tag),
            (NONRED, _) => Vec::new(),

            (_, A) if three_family || fifty_two_list => self.pendant(v, 2, 3),
            (_, B) if three_family || fifty_two_list => self.all_twos(v),
            (_, C) if three_family || fifty_two_list => self.alpha_pair(v),
            (_, D) if three_family || fifty_two_list => self.four_pendant(v),
            (_, E) if fifty_two_list => self.heavy(v, |p1, p2, d| 3 * p1 + p2 + 4 >= 2 * d),
            (_, E) if three_family => self.heavy(v, |p1, p2, d| 3 * p1 + 2 * p2 >= d),

            (W2_52 | W2_83, A) => self.pendant(v, 1, 3),
            (W2_52 | W2_83, B) => self.two_small(v),
            (W2_52 | W2_83, C) => self.many_small(v),
            (W2_83, D) => self.adjacent_betas(v),
            (W2_83, E) => self.beta_by_prime(v),
            (W2_83, F) => self.prime_triple(v),
            (W2_83, G) => self.beta_hub(v),

            (W3_83, F) => self.adjacent_gammas(v),
            (W3_83, G) => self.gamma_pair(v),
            (W3_83, H) if stage == Unavoidable => self.gamma_heavy(v, |p1, q, d| (d == 6 || d == 7) && p1 >= 1 && q >= 4),
            (W3_83, H) => self.gamma_heavy(v, |p1, q, d| p1 + 2 * q >= d && p1 + q > 4),
            (W3_83, I) => self.five_gamma(v),
            (W3_83, J) => self.four_mixed(v),
            (W3_83, J1) => self.two_alphas(v),
            (W3_83, J2) => self.alpha_two_gamma(v),
            (W3_83, J3) => self.two_three_gammas(v),
            (W3_83, K) => self.gamma_on_betas(v),
            _ => Vec::new(),
        }
    }

    pub fn finish(&self, kind: ConfigKind, f: Found, mode: Mode) -> ConfigurationInstance {
        let core: BTreeSet<_> = f
            .core
            .iter()
            .map(|&(a, b)| self.g.edge_between(a, b).expect("pattern edges exist"))
            .collect();
        let mut extra_deletions = BTreeSet::new();
        if mode == Mode::Edge3 {
            let mut lost: BTreeMap<VertexId, usize> = BTreeMap::new();
            for &e in &core {
                let (a, b) = self.g.ends(e);
                *lost.entry(a).or_default() += 1;
                *lost.entry(b).or_default() += 1;
            }
            let left = |x: VertexId| self.d(x) - lost.get(&x).copied().unwrap_or(0);
            for &x in lost.keys() {
                for &(y, e) in self.g.neighbors(x) {
                    if !core.contains(&e) && left(x) == 1 && left(y) == 1 {
                        extra_deletions.insert(e);
                    }
                }
            }
        }
        ConfigurationInstance { kind, roles: f.roles, core, extra_deletions }
    }

    // Triangle through two 2-vertices and a 4⁻-vertex v.
    fn tri1(&self, v: VertexId) -> Vec<Found> {
        let d = self.d(v);
        if !(2..=4).contains(&d) {
            return Vec::new();
        }
        let twos = self.nb_deg(v, 2);
        let mut out = Vec::new();
        for (i, &z) in twos.iter().enumerate() {
            for &z2 in &twos[i + 1..] {
                if self.adj(z, z2) && (d > 2 || v < z) {
                    out.push(Found::default().r("v", v).r("z", z).r("z'", z2).e(v, z).e(v, z2).e(z, z2));
                }
            }
        }
        out
    }

    // Triangle z v v' through one 2-vertex z.
    fn tri2(&self, z: VertexId) -> Vec<Found> {
        if self.d(z) != 2 {
            return Vec::new();
        }
        let nb: Vec<_> = self.nb(z).collect();
        let (v, v2) = (nb[0], nb[1]);
        if !self.adj(v, v2) {
            return Vec::new();
        }
        #[derive(PartialEq)]
        enum Side {
            Plain,
            Pendant,
            Flex,
        }
        let side = |x: VertexId| {
            let d = self.d(x);
            let has1 = !self.nb_deg(x, 1).is_empty();
            let other2 = self.nb(x).any(|w| w != z && self.d(w) == 2);
            match d {
                3 => Some(Side::Plain),
                4 | 5 if has1 => Some(Side::Pendant),
                4 if other2 => Some(Side::Flex),
                _ => None,
            }
        };
        let (Some(s1), Some(s2)) = (side(v), side(v2)) else {
            return Vec::new();
        };
        if s1 == Side::Flex && s2 == Side::Flex {
            return Vec::new();
        }
        let mut f = Found::default().r("z", z).r("v", v).r("v'", v2).e(z, v).e(z, v2).e(v, v2);
        for (x, name) in [(v, "u"), (v2, "u'")] {
            if self.d(x) >= 4 {
                let u = self.nb(x).filter(|&w| w != z).min_by_key(|&w| (self.d(w), w)).expect("degree >= 4");
                f = f.r(name, u).e(x, u);
            }
        }
        if s1 == Side::Flex {
            f = f.r("flex_side", v);
        } else if s2 == Side::Flex {
            f = f.r("flex_side", v2);
        }
        vec![f]
    }

    // Two β-vertices z < z' whose 2-neighbors y, y' coincide or are adjacent.
    fn cyc(&self, z: VertexId, tag: Tag) -> Vec<Found> {
        if !self.c(z).is_beta123 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for y in self.nb_deg(z, 2) {
            let Some(t) = self.other(y, z) else { continue };
            let mut pairs = Vec::new();
            if t > z && self.c(t).is_beta123 {
                pairs.push((t, y));
            }
            if self.d(t) == 2 {
                if let Some(z2) = self.other(t, y) {
                    if z2 > z && self.c(z2).is_beta123 {
                        pairs.push((z2, t));
                    }
                }
            }
            for (z2, y2) in pairs {
                let shared = y == y2;
                if self.adj(z, z2) {
                    if tag == Tag::Cyc1 && !shared {
                        out.push(
                            Found::default()
                                .r("z", z)
                                .r("z'", z2)
                                .r("y", y)
                                .r("y'", y2)
                                .e(z, z2)
                                .e(z, y)
                                .e(y, y2)
                                .e(z2, y2),
                        );
                    }
                    continue;
                }
                if (tag == Tag::Cyc2a) != shared || tag == Tag::Cyc1 {
                    continue;
                }
                for v in self.nb(z) {
                    if v == y || !self.adj(v, z2) || !(4..=5).contains(&self.d(v)) {
                        continue;
                    }
                    let Some(&u) = self.nb_deg(v, 1).first() else { continue };
                    let mut f = Found::default().r("z", z).r("z'", z2).r("y", y);
                    if !shared {
                        f = f.r("y'", y2).e(y, y2);
                    }
                    out.push(f.r("v", v).r("u", u).e(v, z).e(v, z2).e(z, y).e(z2, y2).e(v, u));
                }
            }
        }
        out
    }

    fn pendant(&self, v: VertexId, lo: usize, hi: usize) -> Vec<Found> {
        if !(lo..=hi).contains(&self.d(v)) {
            return Vec::new();
        }
        match self.nb_deg(v, 1).first() {
            Some(&u) if self.d(v) > 1 || v < u => vec![Found::default().r("v", v).r("u", u).e(v, u)],
            _ => Vec::new(),
        }
    }

    fn all_twos(&self, v: VertexId) -> Vec<Found> {
        let d = self.d(v);
        if !(1..=4).contains(&d) || self.nb(v).any(|w| self.d(w) != 2) {
            return Vec::new();
        }
        let zs: Vec<_> = self.nb(v).collect();
        vec![Found::default().r("v", v).rs("z", &zs).star(v, &zs)]
    }

    // 3-vertex with two 2-neighbors z, z' where z continues into a 2-vertex y.
    fn alpha_pair(&self, v: VertexId) -> Vec<Found> {
        if self.d(v) != 3 {
            return Vec::new();
        }
        let twos = self.nb_deg(v, 2);
        for &z in &twos {
            let Some(y) = self.nb(z).find(|&y| y != v && self.d(y) == 2) else { continue };
            let Some(&z2) = twos.iter().find(|&&w| w != z) else { continue };
            return vec![Found::default().r("v", v).r("z", z).r("z'", z2).r("y", y).e(v, z).e(v, z2).e(z, y)];
        }
        Vec::new()
    }

    fn four_pendant(&self, v: VertexId) -> Vec<Found> {
        if self.d(v) != 4 {
            return Vec::new();
        }
        let Some(&u) = self.nb_deg(v, 1).first() else { return Vec::new() };
        match self.nb(v).find(|&w| w != u && self.d(w) <= 2) {
            Some(z) => vec![Found::default().r("v", v).r("u", u).r("z", z).e(v, u).e(v, z)],
            None => Vec::new(),
        }
    }

    // 5⁺-vertex with many 1- and 2-neighbors; cond(p1, p2, d).
    fn heavy(&self, v: VertexId, cond: impl Fn(usize, usize, usize) -> bool) -> Vec<Found> {
        let d = self.d(v);
        if d < 5 {
            return Vec::new();
        }
        let ones = self.nb_deg(v, 1);
        let twos = self.nb_deg(v, 2);
        if !cond(ones.len(), twos.len(), d) {
            return Vec::new();
        }
        let mut f = Found::default().r("v", v).rs("u", &ones).rs("z", &twos).star(v, &ones).star(v, &twos);
        for (i, &a) in twos.iter().enumerate() {
            for &b in &twos[i + 1..] {
                if self.adj(a, b) {
                    f = f.e(a, b);
                }
            }
        }
        vec![f]
    }

    // 4⁻-vertex with two 2⁻-neighbors; a non-adjacent pair is preferred.
    fn two_small(&self, v: VertexId) -> Vec<Found> {
        if !(2..=4).contains(&self.d(v)) {
            return Vec::new();
        }
        let small = self.nb_where(v, |w| self.d(w) <= 2);
        let mut pairs = Vec::new();
        for (i, &a) in small.iter().enumerate() {
            for &b in &small[i + 1..] {
                pairs.push((a, b));
            }
        }
        let pick = pairs.iter().find(|&&(a, b)| !self.adj(a, b)).or(pairs.first());
        match pick {
            Some(&(z, z2)) => vec![Found::default().r("v", v).r("z", z).r("z'", z2).e(v, z).e(v, z2)],
            None => Vec::new(),
        }
    }

    // 5⁺-vertex with at least (d-1)/2 2⁻-neighbors.
    fn many_small(&self, v: VertexId) -> Vec<Found> {
        let d = self.d(v);
        if d < 5 {
            return Vec::new();
        }
        let small = self.nb_where(v, |w| self.d(w) <= 2);
        if 2 * small.len() + 1 < d {
            return Vec::new();
        }
        let us = &small[..d / 2];
        vec![Found::default().r("v", v).rs("u", us).star(v, us)]
    }

    fn beta_parts(&self, v: VertexId, skip: VertexId) -> (VertexId, VertexId) {
        let z = self.nb_deg(v, 2)[0];
        let x = self.nb(v).find(|&w| w != z && w != skip).expect("3-vertex");
        (z, x)
    }

    fn adjacent_betas(&self, v: VertexId) -> Vec<Found> {
        if !self.c(v).is_beta12 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for v2 in self.nb_where(v, |w| w > v && self.c(w).is_beta12) {
            let (z, x) = self.beta_parts(v, v2);
            let (z2, x2) = self.beta_parts(v2, v);
            out.push(
                Found::default()
                    .r("v", v)
                    .r("v'", v2)
                    .r("z", z)
                    .r("z'", z2)
                    .r("x", x)
                    .r("x'", x2)
                    .e(z, v)
                    .e(v, v2)
                    .e(v2, z2),
            );
        }
        out
    }

    fn beta_by_prime(&self, v: VertexId) -> Vec<Found> {
        if !self.c(v).is_beta12 {
            return Vec::new();
        }
        let Some(v2) = self.nb(v).find(|&w| self.c(w).is_beta_prime) else { return Vec::new() };
        let (z, x) = self.beta_parts(v, v2);
        let us = self.nb_deg(v2, 1);
        vec![Found::default().r("v", v).r("v'", v2).r("z", z).r("x", x).rs("u", &us).e(v, z).e(v, v2).star(v2, &us)]
    }

    fn is_prime4(&self, v: VertexId) -> bool {
        self.d(v) == 4 && self.c(v).is_beta_prime
    }

    fn prime_triple(&self, v: VertexId) -> Vec<Found> {
        if !self.is_prime4(v) {
            return Vec::new();
        }
        let primes = self.nb_where(v, |w| self.is_prime4(w));
        if primes.len() < 2 {
            return Vec::new();
        }
        let (z, z2) = (primes[0], primes[1]);
        let u = self.nb_deg(v, 1)[0];
        let y = self.nb_deg(z, 1)[0];
        let y2 = self.nb_deg(z2, 1)[0];
        let x = self.nb(v).find(|&w| w != u && w != z && w != z2).expect("4-vertex");
        let f = Found::default().r("v", v).r("z", z).r("z'", z2).r("u", u).r("y", y).r("y'", y2).r("x", x);
        let f = if self.adj(z, z2) {
            f.e(v, z).e(v, z2).e(z, z2).e(v, u).e(z, y).e(z2, y2)
        } else {
            f.e(y, z).e(z, v).e(v, u).e(v, z2).e(z2, y2)
        };
        vec![f]
    }

    // 3-vertex whose neighbors are all β-vertices or degree-4 β'-vertices.
    fn beta_hub(&self, v: VertexId) -> Vec<Found> {
        if self.d(v) != 3 || !self.nb(v).all(|w| self.c(w).is_beta12 || self.is_prime4(w)) {
            return Vec::new();
        }
        let zs: Vec<_> = self.nb(v).collect();
        // The β'-end of z, or the 2-neighbor of a β-vertex z.
        let tip = |z: VertexId| if self.d(z) == 4 { self.nb_deg(z, 1)[0] } else { self.nb_deg(z, 2)[0] };
        for (i, &a) in zs.iter().enumerate() {
            for &b in &zs[i + 1..] {
                if self.is_prime4(a) && self.is_prime4(b) && self.adj(a, b) {
                    let x = zs.iter().copied().find(|&w| w != a && w != b).expect("3 neighbors");
                    let (ya, yb) = (tip(a), tip(b));
                    return vec![Found::default()
                        .r("v", v)
                        .r("z", a)
                        .r("z'", b)
                        .r("y", ya)
                        .r("y'", yb)
                        .r("x", x)
                        .e(v, a)
                        .e(v, b)
                        .e(a, b)
                        .e(a, ya)
                        .e(b, yb)];
                }
            }
        }
        for (i, &a) in zs.iter().enumerate() {
            for &b in &zs[i + 1..] {
                if self.c(a).is_beta12 && self.c(b).is_beta12 && tip(a) == tip(b) {
                    let y = tip(a);
                    return vec![Found::default().r("v", v).r("z", a).r("z'", b).r("y", y).e(v, a).e(v, b).e(a, y).e(b, y)];
                }
            }
        }
        let mut f = Found::default().r("v", v);
        for &z in &zs {
            let y = tip(z);
            f = f.r("z", z).r("y", y).e(v, z).e(z, y);
        }
        vec![f]
    }

    fn adjacent_gammas(&self, v: VertexId) -> Vec<Found> {
        let Some(fv) = self.gamma_set(v) else { return Vec::new() };
        let mut out = Vec::new();
        for v2 in self.nb_where(v, |w| w > v && self.c(w).is_gamma()) {
            let fv2 = self.gamma_set(v2).expect("γ-vertex");
            out.push(Found::default().r("v", v).r("v'", v2).e(v, v2).with(fv.clone()).with(fv2));
        }
        out
    }

    fn gamma_pair(&self, v: VertexId) -> Vec<Found> {
        if self.d(v) != 3 {
            return Vec::new();
        }
        let gs = self.nb_where(v, |w| self.c(w).is_gamma());
        if gs.len() < 2 {
            return Vec::new();
        }
        let (z, z2) = (gs[0], gs[1]);
        let x = self.nb(v).find(|&w| w != z && w != z2).expect("3-vertex");
        vec![Found::default()
            .r("v", v)
            .r("z", z)
            .r("z'", z2)
            .r("x", x)
            .e(v, z)
            .e(v, z2)
            .with(self.gamma_set(z).expect("γ"))
            .with(self.gamma_set(z2).expect("γ"))]
    }

    // Vertex with many 1- and γ-neighbors; cond(p1, q, d).
    fn gamma_heavy(&self, v: VertexId, cond: impl Fn(usize, usize, usize) -> bool) -> Vec<Found> {
        let ones = self.nb_deg(v, 1);
        let gs = self.nb_where(v, |w| self.c(w).is_gamma());
        if !cond(ones.len(), gs.len(), self.d(v)) {
            return Vec::new();
        }
        let mut f = Found::default().r("v", v).rs("u", &ones).rs("z", &gs).star(v, &ones).star(v, &gs);
        for &z in &gs {
            f = f.with(self.gamma_set(z).expect("γ"));
        }
        vec![f]
    }

    fn five_gamma(&self, v: VertexId) -> Vec<Found> {
        if self.d(v) != 5 {
            return Vec::new();
        }
        let Some(&u) = self.nb_deg(v, 1).first() else { return Vec::new() };
        let gs = self.nb_where(v, |w| self.c(w).is_gamma());
        if gs.len() < 3 {
            return Vec::new();
        }
        let mut f = Found::default().r("v", v).r("u", u).e(v, u);
        for &z in &gs[..3] {
            f = f.r("z", z).e(v, z).with(self.gamma_set(z).expect("γ"));
        }
        vec![f]
    }

    fn four_mixed(&self, v: VertexId) -> Vec<Found> {
        if self.d(v) != 4 {
            return Vec::new();
        }
        let p = self.nb_deg(v, 2).len();
        let q = self.nb(v).filter(|&w| self.c(w).is_gamma()).count();
        let r = self.nb(v).filter(|&w| self.c(w).is_alpha).count();
        if p + q + r < 5 {
            return Vec::new();
        }
        let zs: Vec<_> = self.nb(v).collect();
        vec![Found::default().r("v", v).rs("z", &zs).star(v, &zs)]
    }

    fn two_alphas(&self, v: VertexId) -> Vec<Found> {
        if self.d(v) != 4 {
            return Vec::new();
        }
        let al = self.nb_where(v, |w| self.c(w).is_alpha);
        if al.len() < 2 {
            return Vec::new();
        }
        let (z, z2) = (al[0], al[1]);
        let (y, y2) = (self.other(z, v).expect("2-vertex"), self.other(z2, v).expect("2-vertex"));
        vec![Found::default().r("v", v).r("z", z).r("z'", z2).r("y", y).r("y'", y2).e(v, z).e(v, z2).e(z, y).e(z2, y2)]
    }

    fn alpha_two_gamma(&self, v: VertexId) -> Vec<Found> {
        if self.d(v) != 4 {
            return Vec::new();
        }
        let Some(z) = self.nb(v).find(|&w| self.c(w).is_alpha) else { return Vec::new() };
        let Some(u) = self.nb(v).find(|&w| w != z && self.d(w) == 2) else { return Vec::new() };
        let Some(x) = self.nb(v).find(|&w| self.c(w).is_gamma()) else { return Vec::new() };
        let y = self.other(z, v).expect("2-vertex");
        vec![Found::default()
            .r("v", v)
            .r("z", z)
            .r("y", y)
            .r("u", u)
            .r("x", x)
            .e(y, z)
            .e(z, v)
            .e(v, u)
            .e(v, x)
            .with(self.gamma_set(x).expect("γ"))]
    }

    fn two_three_gammas(&self, v: VertexId) -> Vec<Found> {
        if self.d(v) != 4 {
            return Vec::new();
        }
        let Some(z) = self.nb(v).find(|&w| self.d(w) == 2) else { return Vec::new() };
        let gs = self.nb_where(v, |w| self.c(w).is_gamma());
        if gs.len() != 3 {
            return Vec::new();
        }
        let mut f = Found::default().r("v", v).r("z", z).e(v, z);
        for &x in &gs {
            f = f.r("x", x).e(v, x).with(self.gamma_set(x).expect("γ"));
        }
        vec![f]
    }

    fn gamma_on_betas(&self, v: VertexId) -> Vec<Found> {
        let Some(kind) = self.c(v).gamma else { return Vec::new() };
        let big = self.nb_where(v, |w| self.d(w) >= 3);
        if big.is_empty() || !big.iter().all(|&s| self.c(s).is_beta123) {
            return Vec::new();
        }
        let all: Vec<_> = self.nb(v).collect();
        let mut f = Found::default().r("v", v).rs("z", &all).star(v, &all);
        for &s in &big {
            let y = self.nb_deg(s, 2)[0];
            f = f.r("y", y).e(s, y);
        }
        if kind == GammaKind::ThreeAlpha {
            let a = self.nb(v).find(|&w| self.c(w).is_alpha).expect("γ3a");
            let b = self.other(a, v).expect("2-vertex");
            f = f.r("a", a).r("a'", b).e(a, b);
        }
        vec![f]
    }
}
