use std::collections::BTreeSet;

use madweight::configs::{detect_kind, structural_to_reducible, Catalog, ConfigKind, Stage, Tag};
use madweight::discharge::{run, RuleSet};
use madweight::exec::Exec;
use madweight::gen::{canonical_code, random_cubic, random_mad, relabel, tree};
use madweight::graph::Graph;
use madweight::mad::{average_degree, brute_force, mad_exact};
use madweight::oracle::{count_extensions, exists_proper};
use madweight::reducer::MutableSet;
use madweight::solver::{solve, solve_components, Status};
use madweight::weighting::{is_proper, phi, rho, violations, Mode, Weighting};
use madweight::{Level, Rational};
use proptest::prelude::*;

/// Random simple graph on up to `max_n` vertices.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn weighted(max_n: usize) -> impl Strategy<Value = (Graph, Weighting)> {
    (graph(max_n), any::<bool>(), proptest::collection::vec(0u8..6, 64)).prop_map(|(g, total, noise)| {
        let mode = if total { Mode::Total2 } else { Mode::Edge3 };
        let mut w = Weighting::empty(mode, &g);
        let mut it = noise.iter().cycle();
        for e in g.edge_ids().collect::<Vec<_>>() {
            w.set_edge(e, 1 + it.next().unwrap() % mode.max_weight()).unwrap();
        }
        if total {
            for v in 0..g.n() {
                w.set_vertex(v, 1 + it.next().unwrap() % 2).unwrap();
            }
        }
        (g, w)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn satisfied_means_offsets_differ((g, w) in weighted(6)) {
        for (_, u, v) in g.edges() {
            let by_colors = phi(&g, &w, u).unwrap() != phi(&g, &w, v).unwrap();
            let by_offsets = rho(&g, &w, u, v).unwrap() != rho(&g, &w, v, u).unwrap();
            prop_assert_eq!(by_colors, by_offsets);
        }
        prop_assert_eq!(is_proper(&g, &w), violations(&g, &w).unwrap().is_empty());
    }

    #[test]
    fn class_implications(g in graph(9)) {
        for v in 0..g.n() {
            let c = g.classify(v);
            prop_assert!(!c.is_beta12 || c.is_beta123);
            prop_assert!(c.gamma.is_none() || c.degree == 3 || c.degree == 4);
            prop_assert!(!c.is_alpha || c.degree == 2);
            prop_assert!(!c.is_beta_prime || (c.degree >= 4 && c.degree % 2 == 0));
        }
    }

    #[test]
    fn classes_only_see_radius_two(g in graph(9), a in 0usize..9, b in 0usize..9) {
        let n = g.n();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b && !g.has_edge(a, b));
        let dist = |s: usize| {
            let mut d = vec![usize::MAX; n];
            d[s] = 0;
            let mut q = std::collections::VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for y in g.neighbor_ids(x) {
                    if d[y] == usize::MAX {
                        d[y] = d[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            d
        };
        let (da, db) = (dist(a), dist(b));
        let mut h = g.clone();
        h.add_edge(a, b).unwrap();
        for v in 0..n {
            // New edge changes degrees at a and b only, which v sees when
            // they sit within distance 2.
            if da[v] > 2 && db[v] > 2 {
                prop_assert_eq!(g.classify(v), h.classify(v));
            }
        }
    }

    #[test]
    fn mad_matches_subsets_and_bounds_average(g in graph(10)) {
        let fast = mad_exact(&g);
        prop_assert_eq!(fast.value, brute_force(&g).unwrap().value);
        prop_assert!(average_degree(&g).unwrap() <= fast.value);
        let (sub, _) = g.induced(&fast.witness);
        if g.edge_count() > 0 {
            prop_assert_eq!(average_degree(&sub).unwrap(), fast.value);
        }
    }

    #[test]
    fn mad_is_monotone(g in graph(10), a in 0usize..10, b in 0usize..10) {
        let n = g.n();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b && !g.has_edge(a, b));
        let mut h = g.clone();
        h.add_edge(a, b).unwrap();
        prop_assert!(mad_exact(&g).value <= mad_exact(&h).value);
    }

    #[test]
    fn charge_is_conserved(g in graph(12)) {
        for rules in [RuleSet::R52, RuleSet::R83_12, RuleSet::R83_123] {
            let rep = run(&g, rules);
            prop_assert_eq!(rep.total_final(), Rational::from(2 * g.edge_count() as i64));
            let mut charge = rep.initial.clone();
            for t in &rep.transfers {
                charge[t.from] -= t.amount;
                charge[t.to] += t.amount;
            }
            prop_assert_eq!(&charge, &rep.final_charge);
        }
    }

    #[test]
    fn generators_are_deterministic(seed in any::<u64>(), n in 4usize..30) {
        let b = Rational::new(8, 3);
        prop_assert_eq!(random_mad(n, b, seed).unwrap(), random_mad(n, b, seed).unwrap());
        prop_assert_eq!(tree(n, seed).unwrap(), tree(n, seed).unwrap());
        let even = n + n % 2;
        prop_assert_eq!(random_cubic(even, 3, seed, 50).unwrap(), random_cubic(even, 3, seed, 50).unwrap());
    }

    #[test]
    fn canonical_code_ignores_labels(g in graph(7), seed in any::<u64>()) {
        prop_assert_eq!(canonical_code(&g), canonical_code(&relabel(&g, seed)));
    }

    #[test]
    fn solver_is_deterministic_and_component_wise(seed in 0u64..10_000, n in 3usize..25) {
        let g = random_mad(n, Rational::new(8, 3), seed).unwrap();
        let a = solve(&g, Mode::Total2, Level::L83).unwrap();
        let b = solve(&g, Mode::Total2, Level::L83).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.status, Status::Solved);
        for exec in [Exec::Sequential, Exec::Parallel] {
            let c = solve_components(&g, Mode::Total2, Level::L83, exec).unwrap();
            prop_assert_eq!(c.status, Status::Solved);
            prop_assert!(violations(&g, c.weighting.as_ref().unwrap()).unwrap().is_empty());
        }
    }

    #[test]
    fn solved_small_graphs_are_weightable(g in graph(6)) {
        for mode in [Mode::Edge3, Mode::Total2] {
            let out = solve(&g, mode, Level::L83).unwrap();
            if out.status == Status::Solved {
                prop_assert!(exists_proper(&g, mode).unwrap());
            }
        }
    }

    // A sum of k weights from {1..j} takes 1 + (j-1)k values, so any
    // (j-1)k forbidden values leave one free.
    #[test]
    fn choosing_weights_beats_forbidden_sums(j in 2u32..=3, k in 1usize..=5, forbidden in proptest::collection::vec(0u32..20, 0..10)) {
        let mut sums = BTreeSet::new();
        let mut tuple = vec![1u32; k];
        loop {
            sums.insert(tuple.iter().sum::<u32>());
            let mut i = 0;
            while i < k && tuple[i] == j {
                tuple[i] = 1;
                i += 1;
            }
            if i == k {
                break;
            }
            tuple[i] += 1;
        }
        prop_assert_eq!(sums.len(), 1 + (j as usize - 1) * k);
        let cap = (j as usize - 1) * k;
        let forbid: BTreeSet<u32> = forbidden.into_iter().take(cap).collect();
        prop_assert!(sums.iter().any(|s| !forbid.contains(s)));
    }

    #[test]
    fn heavy_vertex_implications(d in 5usize..40, p1 in 0usize..40, p2 in 0usize..40) {
        prop_assume!(p1 + p2 <= d);
        if 3 * p1 + p2 + 4 >= 2 * d {
            prop_assert!(3 * p1 + 2 * p2 >= d);
            prop_assert!(2 * p1 + 2 * p2 + 1 >= d);
        }
    }

    #[test]
    fn heavy_profiles_map_to_reducible_kinds(d in 5usize..9, p1 in 0usize..9, p2 in 0usize..9) {
        prop_assume!(p1 + p2 <= d);
        // v = 0 with p1 pendants, p2 2-neighbors and the rest heavy; all far
        // ends go into a K8.
        let clique: Vec<usize> = (0..8).collect();
        let mut g = Graph::new(8);
        for a in 0..8 {
            for b in a + 1..8 {
                g.add_edge(a, b).unwrap();
            }
        }
        let v = g.add_vertex();
        for _ in 0..p1 {
            let u = g.add_vertex();
            g.add_edge(v, u).unwrap();
        }
        for i in 0..p2 {
            let z = g.add_vertex();
            g.add_edge(v, z).unwrap();
            g.add_edge(z, clique[i % 8]).unwrap();
        }
        for &c in &clique[..d - p1 - p2] {
            g.add_edge(v, c).unwrap();
        }
        for (catalog, mode, target) in [(Catalog::W3_52, Mode::Edge3, Tag::E), (Catalog::W2_52, Mode::Total2, Tag::C)] {
            let uk = ConfigKind::new(catalog, Stage::Unavoidable, Tag::E);
            for inst in detect_kind(&g, uk, mode).into_iter().filter(|i| i.role("v") == Some(v)) {
                let red = structural_to_reducible(&inst, &g).unwrap();
                prop_assert_eq!(red.kind, ConfigKind::new(catalog, Stage::Reducible, target));
            }
        }
    }

    #[test]
    fn extension_counts_match_direct_enumeration(seed in any::<u64>()) {
        // A path a-b-c-d with the two middle-incident edges mutable.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let outer = (seed % 3) as u8 + 1;
        let mut base = Weighting::empty(Mode::Edge3, &g);
        base.set_edge(2, outer).unwrap();
        let ms = MutableSet { edges: [0, 1].into(), vertices: Default::default() };
        let mut expected = 0;
        for a in 1..=3u32 {
            for b in 1..=3u32 {
                let o = outer as u32;
                let colors = [a, a + b, b + o, o];
                if colors[0] != colors[1] && colors[1] != colors[2] && colors[2] != colors[3] {
                    expected += 1;
                }
            }
        }
        prop_assert_eq!(count_extensions(&g, &base, &ms, Mode::Edge3).unwrap(), expected);
    }
}
