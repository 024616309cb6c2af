//! Configuration catalogs: detection, priority, and the mapping from the
//! unavoidable lists (what discharging guarantees) to the reducible lists
//! (what the extension step knows how to handle).

mod detect;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeId, Graph, VertexId};
use crate::weighting::Mode;

pub use detect::gamma_set;

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Catalog {
    /// 3-weightings below average degree 5/2.
    W3_52,
    /// Total 2-weightings below average degree 5/2.
    W2_52,
    /// Total 2-weightings below 8/3.
    W2_83,
    /// 3-weightings below 8/3.
    W3_83,
    /// Triangles through 2-vertices.
    DEGEN_TRI,
    /// Short cycles through β-vertices (3-weightings only).
    DEGEN_4CYC,
    /// The two deliberately non-reducible gadgets; never detected.
    NONRED,
}

impl Catalog {
    pub const MAIN: [Catalog; 4] = [Catalog::W3_52, Catalog::W2_52, Catalog::W2_83, Catalog::W3_83];

    pub fn name(self) -> &'static str {
        match self {
            Catalog::W3_52 => "W3_52",
            Catalog::W2_52 => "W2_52",
            Catalog::W2_83 => "W2_83",
            Catalog::W3_83 => "W3_83",
            Catalog::DEGEN_TRI => "DEGEN_TRI",
            Catalog::DEGEN_4CYC => "DEGEN_4CYC",
            Catalog::NONRED => "NONRED",
        }
    }

    /// Weighting mode a main catalog serves. Degenerate catalogs serve both
    /// and report `None`.
    pub fn mode(self) -> Option<Mode> {
        match self {
            Catalog::W3_52 | Catalog::W3_83 | Catalog::DEGEN_4CYC => Some(Mode::Edge3),
            Catalog::W2_52 | Catalog::W2_83 | Catalog::NONRED => Some(Mode::Total2),
            Catalog::DEGEN_TRI => None,
        }
    }

    /// The main catalog for a mode and level (52 or 83).
    pub fn for_level(mode: Mode, level: Level) -> Catalog {
        match (mode, level) {
            (Mode::Edge3, Level::L52) => Catalog::W3_52,
            (Mode::Edge3, Level::L83) => Catalog::W3_83,
            (Mode::Total2, Level::L52) => Catalog::W2_52,
            (Mode::Total2, Level::L83) => Catalog::W2_83,
        }
    }

    /// Degenerate catalogs consulted before this main catalog.
    pub fn degenerate(self) -> &'static [Catalog] {
        match self {
            Catalog::W3_83 => &[Catalog::DEGEN_TRI, Catalog::DEGEN_4CYC],
            Catalog::W3_52 | Catalog::W2_52 | Catalog::W2_83 => &[Catalog::DEGEN_TRI],
            _ => &[],
        }
    }

    /// Tags of the catalog at a stage, in priority order.
    pub fn tags(self, stage: Stage) -> &'static [Tag] {
        use Tag::*;
        match (self, stage) {
            (Catalog::W3_52, _) => &[A, B, C, D, E],
            (Catalog::W2_52, Stage::Unavoidable) => &[A, B, C, D, E],
            (Catalog::W2_52, Stage::Reducible) => &[A, B, C],
            (Catalog::W2_83, _) => &[A, B, C, D, E, F, G],
            (Catalog::W3_83, Stage::Unavoidable) => &[A, B, C, D, E, F, G, H, I, J, K],
            (Catalog::W3_83, Stage::Reducible) => &[A, B, C, D, E, F, G, H, I, J1, J2, J3, K],
            (Catalog::DEGEN_TRI, Stage::Reducible) => &[Tri1, Tri2],
            (Catalog::DEGEN_4CYC, Stage::Reducible) => &[Cyc1, Cyc2a, Cyc2b],
            (Catalog::NONRED, Stage::Reducible) => &[Left, Right],
            _ => &[],
        }
    }

    pub fn parse(s: &str) -> Option<Catalog> {
        match s.to_ascii_lowercase().as_str() {
            "3w52" | "w3_52" => Some(Catalog::W3_52),
            "2w52" | "w2_52" => Some(Catalog::W2_52),
            "2w83" | "w2_83" => Some(Catalog::W2_83),
            "3w83" | "w3_83" => Some(Catalog::W3_83),
            _ => None,
        }
    }
}

impl fmt::Display for Catalog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    L52,
    L83,
}

impl Level {
    pub fn bound(self) -> crate::Rational {
        match self {
            Level::L52 => crate::Rational::new(5, 2),
            Level::L83 => crate::Rational::new(8, 3),
        }
    }
}

/// Which list a kind belongs to. Unavoidable entries are what the
/// discharging argument guarantees; reducible entries are what extension handles.
/// Where the two lists agree on a letter, the letter appears in both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Stage {
    Unavoidable,
    Reducible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
    K,
    J1,
    J2,
    J3,
    Tri1,
    Tri2,
    Cyc1,
    Cyc2a,
    Cyc2b,
    Left,
    Right,
}

impl Tag {
    pub fn label(self) -> &'static str {
        use Tag::*;
        match self {
            A => "A",
            B => "B",
            C => "C",
            D => "D",
            E => "E",
            F => "F",
            G => "G",
            H => "H",
            I => "I",
            J => "J",
            K => "K",
            J1 => "J1",
            J2 => "J2",
            J3 => "J3",
            Tri1 | Cyc1 => "1",
            Tri2 => "2",
            Cyc2a => "2a",
            Cyc2b => "2b",
            Left => "left",
            Right => "right",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConfigKind {
    pub catalog: Catalog,
    pub stage: Stage,
    pub tag: Tag,
}

impl ConfigKind {
    pub const fn new(catalog: Catalog, stage: Stage, tag: Tag) -> Self {
        ConfigKind { catalog, stage, tag }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self.catalog, Catalog::DEGEN_TRI | Catalog::DEGEN_4CYC)
    }

    /// Every valid kind, catalog by catalog, stage by stage, in priority order.
    pub fn all() -> Vec<ConfigKind> {
        let cats = [
            Catalog::W3_52,
            Catalog::W2_52,
            Catalog::W2_83,
            Catalog::W3_83,
            Catalog::DEGEN_TRI,
            Catalog::DEGEN_4CYC,
            Catalog::NONRED,
        ];
        let mut out = Vec::new();
        for c in cats {
            for stage in [Stage::Unavoidable, Stage::Reducible] {
                out.extend(c.tags(stage).iter().map(|&t| ConfigKind::new(c, stage, t)));
            }
        }
        out
    }

    /// Priority list consulted by [`detect_first`] for a main catalog.
    pub fn priority(catalog: Catalog) -> Vec<ConfigKind> {
        let mut out = Vec::new();
        for &d in catalog.degenerate() {
            out.extend(d.tags(Stage::Reducible).iter().map(|&t| ConfigKind::new(d, Stage::Reducible, t)));
        }
        let stage = if Catalog::MAIN.contains(&catalog) { Stage::Unavoidable } else { Stage::Reducible };
        out.extend(catalog.tags(stage).iter().map(|&t| ConfigKind::new(catalog, stage, t)));
        out
    }
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.stage {
            Stage::Reducible => write!(f, "{}.{}", self.catalog, self.tag.label()),
            Stage::Unavoidable => write!(f, "{}.u{}", self.catalog, self.tag.label()),
        }
    }
}

pub type Role = &'static str;

/// A located configuration. Set-valued roles (U1, U2, Z, ...) appear as
/// repeated names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConfigurationInstance {
    pub kind: ConfigKind,
    pub roles: Vec<(Role, VertexId)>,
    pub core: BTreeSet<EdgeId>,
    /// Edges left isolated once the core is gone (3-weighting mode only).
    pub extra_deletions: BTreeSet<EdgeId>,
}

impl ConfigurationInstance {
    pub fn role(&self, name: &str) -> Option<VertexId> {
        self.roles.iter().find(|(r, _)| *r == name).map(|&(_, v)| v)
    }

    pub fn roles_named(&self, name: &str) -> Vec<VertexId> {
        self.roles.iter().filter(|(r, _)| *r == name).map(|&(_, v)| v).collect()
    }

    /// Core and cleanup edges together.
    pub fn deleted(&self) -> BTreeSet<EdgeId> {
        self.core.union(&self.extra_deletions).copied().collect()
    }

    pub fn derived_graph(&self, g: &Graph) -> Graph {
        g.delete_edges(self.deleted()).expect("instance edges are live in their host")
    }

    /// The `KIND role=vid ... core=[u-v,...]` line used by the CLI.
    pub fn describe(&self, g: &Graph) -> String {
        let mut s = self.kind.to_string();
        for (r, v) in &self.roles {
            s.push_str(&format!(" {r}={v}"));
        }
        let core: Vec<String> = self
            .core
            .iter()
            .map(|&e| {
                let (u, v) = g.ends(e);
                format!("{u}-{v}")
            })
            .collect();
        s.push_str(&format!(" core=[{}]", core.join(",")));
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("no reducible configuration found for {0} (an implication step failed)")]
    MappingFailed(String),
}

/// Instances of one kind in `g`, sorted by role bindings. `mode` decides
/// whether isolated-edge cleanup is attached.
pub fn detect_kind(g: &Graph, kind: ConfigKind, mode: Mode) -> Vec<ConfigurationInstance> {
    let ctx = detect::Ctx::new(g);
    detect_kind_in(&ctx, kind, mode)
}

fn detect_kind_in(ctx: &detect::Ctx<'_>, kind: ConfigKind, mode: Mode) -> Vec<ConfigurationInstance> {
    let mut found: Vec<_> = ctx.find(kind).into_iter().map(|f| ctx.finish(kind, f, mode)).collect();
    found.sort_by(|a, b| a.roles.cmp(&b.roles));
    found.dedup();
    found
}

fn catalog_mode(catalog: Catalog) -> Mode {
    catalog.mode().unwrap_or(Mode::Edge3)
}

/// Every instance of every kind the catalog consults, degenerate kinds
/// first, then the catalog's own list in priority order.
pub fn detect_all(g: &Graph, catalog: Catalog) -> Vec<ConfigurationInstance> {
    let ctx = detect::Ctx::new(g);
    let mode = catalog_mode(catalog);
    ConfigKind::priority(catalog).into_iter().flat_map(|k| detect_kind_in(&ctx, k, mode)).collect()
}

/// Main-catalog instances only, without the degenerate prefix.
pub fn detect_main(g: &Graph, catalog: Catalog) -> Vec<ConfigurationInstance> {
    let ctx = detect::Ctx::new(g);
    let mode = catalog_mode(catalog);
    catalog
        .tags(Stage::Unavoidable)
        .iter()
        .flat_map(|&t| detect_kind_in(&ctx, ConfigKind::new(catalog, Stage::Unavoidable, t), mode))
        .collect()
}

/// The highest-priority instance, or `None` exactly when [`detect_all`] is empty.
pub fn detect_first(g: &Graph, catalog: Catalog) -> Option<ConfigurationInstance> {
    let ctx = detect::Ctx::new(g);
    let mode = catalog_mode(catalog);
    ConfigKind::priority(catalog).into_iter().find_map(|k| detect_kind_in(&ctx, k, mode).into_iter().next())
}

/// Replaces an unavoidable-list instance by a reducible instance at the same
/// site. Degenerate and already-reducible instances pass through.
pub fn structural_to_reducible(
    inst: &ConfigurationInstance,
    g: &Graph,
) -> Result<ConfigurationInstance, ConfigError> {
    if inst.kind.stage == Stage::Reducible {
        return Ok(inst.clone());
    }
    let ctx = detect::Ctx::new(g);
    let mode = catalog_mode(inst.kind.catalog);
    let failed = || ConfigError::MappingFailed(inst.describe(g));
    let v = inst.role("v").ok_or_else(failed)?;
    let red = |tag| ConfigKind::new(inst.kind.catalog, Stage::Reducible, tag);
    let at = |kind: ConfigKind, center: VertexId| {
        ctx.find_at(kind, center).into_iter().next().map(|f| ctx.finish(kind, f, mode))
    };
    use Tag::*;
    let mapped = match (inst.kind.catalog, inst.kind.tag) {
        (Catalog::W2_52, A) => at(red(A), v),
        (Catalog::W2_52, B) if g.degree(v) == 1 => {
            let z = g.neighbor_ids(v).next().ok_or_else(failed)?;
            at(red(A), z)
        }
        (Catalog::W2_52, B | C | D) => at(red(B), v),
        (Catalog::W2_52, E) => at(red(C), v),
        (Catalog::W3_83, J) => [J1, J2, J3, B].into_iter().find_map(|t| at(red(t), v)),
        (Catalog::W3_83, H) => at(red(H), v),
        (cat, tag) if cat.tags(Stage::Reducible).contains(&tag) => at(red(tag), v),
        _ => None,
    };
    mapped.ok_or_else(failed)
}

#[cfg(test)]
mod tests;
