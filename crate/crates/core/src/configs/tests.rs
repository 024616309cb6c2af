use super::*;
use crate::gen::{config_host, cubic_plus_pendants, cycle, generalized_petersen, random_mad};
use crate::Rational;

fn kind(catalog: Catalog, stage: Stage, tag: Tag) -> ConfigKind {
    ConfigKind::new(catalog, stage, tag)
}

fn star(k: usize) -> Graph {
    let es: Vec<_> = (1..=k).map(|i| (0, i)).collect();
    Graph::from_edges(k + 1, &es).unwrap()
}

#[test]
fn star_has_one_pendant_instance() {
    let g = star(3);
    let a = detect_kind(&g, kind(Catalog::W3_52, Stage::Unavoidable, Tag::A), Mode::Edge3);
    assert_eq!(a.len(), 1);
    assert_eq!(a[0].role("v"), Some(0));
    assert_eq!(detect_first(&g, Catalog::W3_52).unwrap().kind.tag, Tag::A);
}

#[test]
fn five_cycle_is_all_twos_everywhere() {
    let g = cycle(5).unwrap();
    let b = detect_kind(&g, kind(Catalog::W3_52, Stage::Unavoidable, Tag::B), Mode::Edge3);
    assert_eq!(b.len(), 5);
    assert_eq!(detect_first(&g, Catalog::W3_52).unwrap().kind.tag, Tag::B);
}

#[test]
fn petersen_with_pendants_only_has_prime_triples() {
    let g = cubic_plus_pendants(&generalized_petersen(5, 2).unwrap()).unwrap();
    for tag in [Tag::A, Tag::B, Tag::C, Tag::D, Tag::E] {
        assert!(detect_kind(&g, kind(Catalog::W2_83, Stage::Unavoidable, tag), Mode::Total2).is_empty(), "{tag:?}");
    }
    assert!(!detect_kind(&g, kind(Catalog::W2_83, Stage::Unavoidable, Tag::F), Mode::Total2).is_empty());
    assert_eq!(detect_first(&g, Catalog::W2_83).unwrap().kind.tag, Tag::F);
}

#[test]
fn triangle_case_outranks_main_list() {
    // Triangle 0-1-2 with 1, 2 of degree 2 and 0 of degree 3; separately a
    // 3-vertex 4 with 2-neighbors 5 (continuing to 2-vertex 6) and 7.
    let g = Graph::from_edges(
        11,
        &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 8), (3, 9), (4, 5), (5, 6), (6, 10), (4, 7), (7, 10), (4, 9)],
    )
    .unwrap();
    assert!(!detect_kind(&g, kind(Catalog::W3_52, Stage::Unavoidable, Tag::C), Mode::Edge3).is_empty());
    assert_eq!(detect_first(&g, Catalog::W3_52).unwrap().kind.catalog, Catalog::DEGEN_TRI);
}

#[test]
fn edgeless_has_nothing() {
    for c in Catalog::MAIN {
        assert!(detect_first(&Graph::new(4), c).is_none());
        assert!(detect_all(&Graph::new(4), c).is_empty());
    }
}

#[test]
fn heavy_gamma_maps_to_reducible_heavy() {
    let host = config_host(kind(Catalog::W3_83, Stage::Unavoidable, Tag::H), 0).unwrap();
    let g = &host.graph;
    let first = detect_first(g, Catalog::W3_83).unwrap();
    assert_eq!(first.kind.tag, Tag::H);
    let v = first.role("v").unwrap();
    assert_eq!((g.degree(v), first.roles_named("u").len(), first.roles_named("z").len()), (6, 1, 4));
    let red = structural_to_reducible(&first, g).unwrap();
    assert_eq!(red.kind, kind(Catalog::W3_83, Stage::Reducible, Tag::H));
    assert_eq!(red.role("v"), Some(v));
}

#[test]
fn five_vertex_with_two_pendants_maps_to_reducible_e() {
    // v = 0 of degree 5: pendants 1, 2; other neighbors 3, 4, 5 sit in a K4.
    let mut es = vec![(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)];
    for a in 3..7 {
        for b in a + 1..7 {
            es.push((a, b));
        }
    }
    let g = Graph::from_edges(7, &es).unwrap();
    let first = detect_first(&g, Catalog::W3_52).unwrap();
    assert_eq!(first.kind, kind(Catalog::W3_52, Stage::Unavoidable, Tag::E));
    let red = structural_to_reducible(&first, &g).unwrap();
    assert_eq!(red.kind, kind(Catalog::W3_52, Stage::Reducible, Tag::E));
}

#[test]
fn four_vertex_with_two_alphas_maps_to_first_sub_case() {
    let host = config_host(kind(Catalog::W3_83, Stage::Unavoidable, Tag::J), 0).unwrap();
    let first = detect_first(&host.graph, Catalog::W3_83).unwrap();
    assert_eq!(first.kind.tag, Tag::J);
    assert_eq!(structural_to_reducible(&first, &host.graph).unwrap().kind.tag, Tag::J1);
}

#[test]
fn reducible_instances_pass_through() {
    let g = star(3);
    let inst = detect_kind(&g, kind(Catalog::W2_83, Stage::Reducible, Tag::A), Mode::Total2).remove(0);
    assert_eq!(structural_to_reducible(&inst, &g).unwrap(), inst);
}

#[test]
fn display_distinguishes_stages() {
    assert_eq!(kind(Catalog::W3_83, Stage::Reducible, Tag::J2).to_string(), "W3_83.J2");
    assert_eq!(kind(Catalog::W3_83, Stage::Unavoidable, Tag::J).to_string(), "W3_83.uJ");
    assert_eq!(kind(Catalog::DEGEN_4CYC, Stage::Reducible, Tag::Cyc2a).to_string(), "DEGEN_4CYC.2a");
}

fn corpus() -> Vec<Graph> {
    (0..300).map(|s| random_mad(6 + (s % 30) as usize, Rational::new(8, 3), 77 + s).unwrap()).collect()
}

/// Role bindings name real vertices, core edges run between bound vertices,
/// cleanup edges are live and outside the core.
fn sound(g: &Graph, inst: &ConfigurationInstance) -> Result<(), String> {
    let bound: BTreeSet<VertexId> = inst.roles.iter().map(|&(_, v)| v).collect();
    if inst.role("v").is_none() && inst.role("z").is_none() {
        return Err("no center role".into());
    }
    for &e in &inst.core {
        let (a, b) = g.ends(e);
        if !g.is_live(e) || !bound.contains(&a) || !bound.contains(&b) {
            return Err(format!("core edge {a}-{b} not between bound vertices"));
        }
    }
    for &e in &inst.extra_deletions {
        if !g.is_live(e) || inst.core.contains(&e) {
            return Err("bad cleanup edge".into());
        }
    }
    Ok(())
}

#[test]
fn instances_are_sound_on_random_graphs() {
    for g in corpus() {
        for c in Catalog::MAIN {
            let mode = c.mode().unwrap();
            for inst in detect_all(&g, c) {
                sound(&g, &inst).unwrap_or_else(|e| panic!("{}: {e}", inst.describe(&g)));
                if mode == Mode::Edge3 && !g.has_isolated_edge() {
                    assert!(!inst.derived_graph(&g).has_isolated_edge(), "{}", inst.describe(&g));
                }
            }
            for stage_kind in ConfigKind::priority(c) {
                for inst in detect_kind(&g, stage_kind, mode) {
                    if stage_kind.stage == Stage::Unavoidable {
                        structural_to_reducible(&inst, &g).unwrap_or_else(|e| panic!("{e}"));
                    }
                }
            }
        }
    }
}

/// Role pairs allowed to share a vertex: the two outer neighbors of
/// adjacent β-vertices may coincide, and in K the α-neighbor is also listed
/// among the center's neighbors.
fn may_coincide(kind: ConfigKind, r1: Role, r2: Role) -> bool {
    let pair = |a, b| (r1 == a && r2 == b) || (r1 == b && r2 == a);
    match (kind.catalog, kind.tag) {
        (Catalog::W2_83, Tag::D) => pair("x", "x'"),
        (Catalog::W3_83, Tag::K) => pair("z", "a"),
        _ => false,
    }
}

#[test]
fn bindings_are_distinct_once_earlier_kinds_are_absent() {
    let mut graphs = corpus();
    for k in ConfigKind::all() {
        if k.catalog != Catalog::NONRED {
            graphs.extend((0..3).map(|v| config_host(k, v).unwrap().graph));
        }
    }
    for g in &graphs {
        for c in Catalog::MAIN {
            let mode = c.mode().unwrap();
            let Some(first_kind) = ConfigKind::priority(c).into_iter().find(|&k| !detect_kind(g, k, mode).is_empty()) else {
                continue;
            };
            if first_kind.is_degenerate() {
                continue;
            }
            for inst in detect_kind(g, first_kind, mode) {
                for (i, &(r1, v1)) in inst.roles.iter().enumerate() {
                    for &(r2, v2) in &inst.roles[i + 1..] {
                        assert!(v1 != v2 || may_coincide(inst.kind, r1, r2), "{r1}={r2} in {}", inst.describe(g));
                    }
                }
            }
        }
    }
}

#[test]
fn first_is_none_exactly_when_all_is_empty() {
    for g in corpus() {
        for c in Catalog::MAIN {
            assert_eq!(detect_first(&g, c).is_none(), detect_all(&g, c).is_empty());
        }
    }
}
