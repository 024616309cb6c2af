//! Reduce-and-extend driver: peel configurations off until no edges remain,
//! then rebuild a proper weighting in reverse.

use std::fmt;

use thiserror::Error;

use crate::configs::{detect_first, structural_to_reducible, Catalog, ConfigKind, Level, Role};
use crate::exec::{self, Exec};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::mad::mad_less_than;
use crate::reducer::extend_unchecked;
use crate::weighting::{violations, Mode, Weighting};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Solved,
    /// The graph is outside the mad bound, or no configuration was found.
    NotApplicable,
    /// No proper weighting can exist (an isolated edge in Edge3 mode).
    InputRejected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepKind {
    Config(ConfigKind),
    /// An isolated edge peeled off directly in Total2 mode.
    BaseK2,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepKind::Config(k) => k.fmt(f),
            StepKind::BaseK2 => f.write_str("BASE.K2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub kind: StepKind,
    pub roles: Vec<(Role, VertexId)>,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for (r, v) in &self.roles {
            write!(f, " {r}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: Status,
    pub weighting: Option<Weighting>,
    /// Reductions in the order they were applied.
    pub trace: Vec<TraceStep>,
    pub reason: Option<String>,
}

impl SolveOutcome {
    fn stopped(status: Status, reason: String, trace: Vec<TraceStep>) -> Self {
        SolveOutcome { status, weighting: None, trace, reason: Some(reason) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Refuse graphs whose mad is not below the level bound.
    pub check_mad: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { check_mad: true }
    }
}

enum Undo {
    Reduce { inst: crate::configs::ConfigurationInstance, deleted: Vec<EdgeId> },
    K2(Vec<EdgeId>),
}

pub fn solve(g: &Graph, mode: Mode, level: Level) -> Result<SolveOutcome, SolveError> {
    solve_with(g, mode, level, SolveOptions::default())
}

pub fn solve_with(g: &Graph, mode: Mode, level: Level, opts: SolveOptions) -> Result<SolveOutcome, SolveError> {
    if mode == Mode::Edge3 && g.has_isolated_edge() {
        return Ok(SolveOutcome::stopped(Status::InputRejected, "isolated edge".into(), Vec::new()));
    }
    if opts.check_mad && g.edge_count() > 0 && !mad_below(g, level) {
        return Ok(SolveOutcome::stopped(
            Status::NotApplicable,
            format!("mad is not below {}", crate::fmt_rational(&level.bound())),
            Vec::new(),
        ));
    }
    let catalog = Catalog::for_level(mode, level);
    let mut cur = g.clone();
    let mut stack = Vec::new();
    let mut trace = Vec::new();

    while cur.edge_count() > 0 {
        if mode == Mode::Total2 {
            let k2 = cur.isolated_edges();
            if !k2.is_empty() {
                for &e in &k2 {
                    let (u, v) = cur.ends(e);
                    trace.push(TraceStep { kind: StepKind::BaseK2, roles: vec![("u", u), ("v", v)] });
                    cur.kill(e);
                }
                stack.push(Undo::K2(k2));
                continue;
            }
        }
        let Some(found) = detect_first(&cur, catalog) else {
            return Ok(SolveOutcome::stopped(Status::NotApplicable, "no configuration found".into(), trace));
        };
        let inst = structural_to_reducible(&found, &cur).map_err(|e| SolveError::InternalInconsistency(e.to_string()))?;
        trace.push(TraceStep { kind: StepKind::Config(inst.kind), roles: inst.roles.clone() });
        let deleted: Vec<EdgeId> = inst.deleted().into_iter().collect();
        for &e in &deleted {
            cur.kill(e);
        }
        stack.push(Undo::Reduce { inst, deleted });
    }

    let mut w = Weighting::empty(mode, g);
    if mode.weights_vertices() {
        for v in 0..g.n() {
            w.set_vertex(v, 1).expect("in range");
        }
    }
    while let Some(step) = stack.pop() {
        match step {
            Undo::K2(es) => {
                for e in es {
                    cur.revive(e);
                    let (u, v) = cur.ends(e);
                    w.set_vertex(u, 1).expect("in range");
                    w.set_edge(e, 1).expect("in range");
                    w.set_vertex(v, 2).expect("in range");
                }
            }
            Undo::Reduce { inst, deleted } => {
                for &e in deleted.iter().rev() {
                    cur.revive(e);
                }
                w = extend_unchecked(&cur, &inst, &w, mode).map_err(|e| SolveError::InternalInconsistency(e.to_string()))?;
            }
        }
    }
    match violations(g, &w) {
        Ok(v) if v.is_empty() => {}
        Ok(v) => return Err(SolveError::InternalInconsistency(format!("{} violated edges in final weighting", v.len()))),
        Err(e) => return Err(SolveError::InternalInconsistency(e.to_string())),
    }
    Ok(SolveOutcome { status: Status::Solved, weighting: Some(w), trace, reason: None })
}

fn mad_below(g: &Graph, level: Level) -> bool {
    mad_less_than(g, level.bound())
}

/// Solves each component separately (in parallel under `Exec::Parallel`)
/// and stitches the results back onto `g`'s ids.
pub fn solve_components(g: &Graph, mode: Mode, level: Level, exec: Exec) -> Result<SolveOutcome, SolveError> {
    if mode == Mode::Edge3 && g.has_isolated_edge() {
        return Ok(SolveOutcome::stopped(Status::InputRejected, "isolated edge".into(), Vec::new()));
    }
    if g.edge_count() > 0 && !mad_below(g, level) {
        return Ok(SolveOutcome::stopped(
            Status::NotApplicable,
            format!("mad is not below {}", crate::fmt_rational(&level.bound())),
            Vec::new(),
        ));
    }
    let comps: Vec<Vec<VertexId>> = g.components().into_iter().filter(|c| c.len() > 1).collect();
    let parts = exec::map(exec, &comps, |c| {
        let (sub, back) = g.induced(c);
        solve_with(&sub, mode, level, SolveOptions { check_mad: false }).map(|o| (o, back))
    });

    let mut w = Weighting::empty(mode, g);
    if mode.weights_vertices() {
        for v in 0..g.n() {
            w.set_vertex(v, 1).expect("in range");
        }
    }
    let mut trace = Vec::new();
    for (c, part) in comps.iter().zip(parts) {
        let (out, back) = part?;
        trace.extend(out.trace.into_iter().map(|s| TraceStep {
            kind: s.kind,
            roles: s.roles.into_iter().map(|(r, v)| (r, c[v])).collect(),
        }));
        let Some(sw) = out.weighting else {
            return Ok(SolveOutcome { status: out.status, weighting: None, trace, reason: out.reason });
        };
        for (i, &e) in back.iter().enumerate() {
            w.set_edge(e, sw.edge(i).expect("complete")).expect("in range");
        }
        if mode.weights_vertices() {
            for (i, &v) in c.iter().enumerate() {
                w.set_vertex(v, sw.vertex(i).expect("complete")).expect("in range");
            }
        }
    }
    Ok(SolveOutcome { status: Status::Solved, weighting: Some(w), trace, reason: None })
}

/// Independent solves over many graphs.
pub fn solve_batch(graphs: &[Graph], mode: Mode, level: Level, exec: Exec) -> Vec<Result<SolveOutcome, SolveError>> {
    exec::map(exec, graphs, |g| solve(g, mode, level))
}
