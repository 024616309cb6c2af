//! The three charge-moving arguments, run literally with exact rationals.
//!
//! Every vertex starts with its degree; rules move charge along edges. On a
//! graph free of the matching structural configurations every final charge
//! should reach the rule set's bound.

use std::fmt;

use crate::configs::{detect_main, Catalog};
use crate::graph::{Graph, VertexClass, VertexId};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[allow(non_camel_case_types)]
pub enum RuleSet {
    R52,
    R83_12,
    R83_123,
}

impl RuleSet {
    pub fn bound(self) -> Rational {
        match self {
            RuleSet::R52 => Rational::new(5, 2),
            RuleSet::R83_12 | RuleSet::R83_123 => Rational::new(8, 3),
        }
    }

    /// The structural list these rules are checked against.
    pub fn catalog(self) -> Catalog {
        match self {
            RuleSet::R52 => Catalog::W3_52,
            RuleSet::R83_12 => Catalog::W2_83,
            RuleSet::R83_123 => Catalog::W3_83,
        }
    }

    pub fn parse(s: &str) -> Option<RuleSet> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "r52" => Some(RuleSet::R52),
            "r83-12" => Some(RuleSet::R83_12),
            "r83-123" => Some(RuleSet::R83_123),
            _ => None,
        }
    }

    fn name(self) -> &'static str {
        match self {
            RuleSet::R52 => "R52",
            RuleSet::R83_12 => "R83_12",
            RuleSet::R83_123 => "R83_123",
        }
    }
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub from: VertexId,
    pub to: VertexId,
    pub amount: Rational,
    /// 1-based rule number within the rule set.
    pub rule: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DischargeReport {
    pub rules: RuleSet,
    pub initial: Vec<Rational>,
    pub transfers: Vec<Transfer>,
    pub final_charge: Vec<Rational>,
    /// `None` only for the empty graph.
    pub min_final: Option<Rational>,
}

impl DischargeReport {
    pub fn total_final(&self) -> Rational {
        self.final_charge.iter().copied().sum()
    }
}

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

pub fn run(g: &Graph, rules: RuleSet) -> DischargeReport {
    let cls = g.classify_all();
    let mut transfers = Vec::new();
    let mut give = |from: VertexId, to: VertexId, amount: Rational, rule: u8| {
        transfers.push(Transfer { from, to, amount, rule });
    };
    let deg = |v: VertexId| g.degree(v);

    for v in 0..g.n() {
        let nbrs: Vec<VertexId> = g.neighbor_ids(v).collect();
        match rules {
            RuleSet::R52 => {
                if deg(v) >= 4 {
                    for &w in &nbrs {
                        match deg(w) {
                            1 => give(v, w, r(3, 2), 1),
                            2 => give(v, w, r(1, 2), 1),
                            _ => {}
                        }
                    }
                }
                if deg(v) == 3 {
                    let twos: Vec<VertexId> = nbrs.iter().copied().filter(|&w| deg(w) == 2).collect();
                    for &w in &twos {
                        give(v, w, r(1, 2) / Rational::from(twos.len() as i64), 2);
                    }
                }
            }
            RuleSet::R83_12 => {
                match deg(v) {
                    1 => give(nbrs[0], v, r(5, 3), 1),
                    2 => {
                        // Lowest-id giver among the 3+-neighbors.
                        if let Some(&u) = nbrs.iter().find(|&&w| deg(w) >= 3) {
                            give(u, v, r(2, 3), 2);
                        }
                    }
                    3 if nbrs.iter().any(|&w| deg(w) == 2) => {
                        for &w in nbrs.iter().filter(|&&w| deg(w) != 2) {
                            give(w, v, r(1, 6), 3);
                        }
                    }
                    4 if nbrs.iter().any(|&w| deg(w) == 1) => {
                        for &w in nbrs.iter().filter(|&&w| deg(w) != 1 && !cls[w].is_beta_prime) {
                            give(w, v, r(1, 6), 4);
                        }
                    }
                    _ => {}
                }
            }
            RuleSet::R83_123 => {
                let c: &VertexClass = &cls[v];
                if deg(v) == 1 {
                    give(nbrs[0], v, r(5, 3), 1);
                } else if c.is_alpha {
                    if let Some(&u) = nbrs.iter().find(|&&w| deg(w) >= 3) {
                        give(u, v, r(2, 3), 2);
                    }
                } else if deg(v) == 2 {
                    for &w in &nbrs {
                        give(w, v, r(1, 3), 3);
                    }
                }
                if c.is_gamma() {
                    for &w in nbrs.iter().filter(|&&w| deg(w) >= 3 && !cls[w].is_beta123) {
                        give(w, v, r(1, 3), 4);
                    }
                }
            }
        }
    }

    let initial: Vec<Rational> = (0..g.n()).map(|v| Rational::from(deg(v) as i64)).collect();
    let mut final_charge = initial.clone();
    for t in &transfers {
        final_charge[t.from] -= t.amount;
        final_charge[t.to] += t.amount;
    }
    let min_final = final_charge.iter().copied().min();
    DischargeReport { rules, initial, transfers, final_charge, min_final }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// No structural configuration and every charge reaches the bound.
    ConfigFreeAndCharged,
    ConfigPresent,
    /// Configuration-free, yet some charge ends below the bound.
    Counterexample { vertex: VertexId, charge: Rational },
    /// Outside the argument's hypotheses (isolated vertices, or isolated
    /// edges where the structural list does not cover them).
    NotApplicable,
}

/// Checks the argument on one graph against the rule set's own catalog.
pub fn check_unavoidability(g: &Graph, rules: RuleSet) -> Verdict {
    let isolated_vertex = (0..g.n()).any(|v| g.degree(v) == 0);
    let k2_uncovered = rules != RuleSet::R83_12 && g.has_isolated_edge();
    if isolated_vertex || k2_uncovered || g.n() == 0 {
        return Verdict::NotApplicable;
    }
    if !detect_main(g, rules.catalog()).is_empty() {
        return Verdict::ConfigPresent;
    }
    let report = run(g, rules);
    let bound = rules.bound();
    match report.final_charge.iter().enumerate().find(|(_, &c)| c < bound) {
        Some((vertex, &charge)) => Verdict::Counterexample { vertex, charge },
        None => Verdict::ConfigFreeAndCharged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(k: usize) -> Graph {
        let es: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::from_edges(k + 1, &es).unwrap()
    }

    #[test]
    fn star_under_three_weighting_rules() {
        let rep = run(&star(3), RuleSet::R83_123);
        for leaf in 1..=3 {
            assert_eq!(rep.final_charge[leaf], r(8, 3));
        }
        assert_eq!(rep.final_charge[0], Rational::from(-2));
    }

    #[test]
    fn pendant_on_four_vertex() {
        let rep = run(&star(4), RuleSet::R52);
        assert_eq!(rep.final_charge[1], r(5, 2));
    }

    #[test]
    fn five_cycle_moves_nothing_under_alpha_rules() {
        let es: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let c5 = Graph::from_edges(5, &es).unwrap();
        let rep = run(&c5, RuleSet::R83_123);
        assert!(rep.transfers.is_empty());
        assert!(rep.final_charge.iter().all(|&c| c == Rational::from(2)));
        assert_eq!(check_unavoidability(&c5, RuleSet::R83_123), Verdict::ConfigPresent);
    }

    #[test]
    fn r52_split_between_two_twos() {
        // 3-vertex 0 with 2-neighbors 1 and 2, plus a 3-neighbor 3.
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 4), (3, 5)]).unwrap();
        let rep = run(&g, RuleSet::R52);
        let from0: Vec<_> = rep.transfers.iter().filter(|t| t.from == 0).collect();
        assert_eq!(from0.len(), 2);
        assert!(from0.iter().all(|t| t.amount == r(1, 4)));
    }

    #[test]
    fn hypotheses_checked() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(check_unavoidability(&g, RuleSet::R52), Verdict::NotApplicable);
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(check_unavoidability(&k2, RuleSet::R83_123), Verdict::NotApplicable);
        assert_eq!(check_unavoidability(&k2, RuleSet::R83_12), Verdict::ConfigPresent);
    }
}
