use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use madweight::configs::{detect_all, ConfigKind};
use madweight::discharge::{check_unavoidability, run, RuleSet, Verdict};
use madweight::gen::{self, Side};
use madweight::mad::mad_exact;
use madweight::oracle::{count_extensions_with, enumerate_proper, OracleBudget};
use madweight::reducer::MutableSet;
use madweight::solver::{solve_with, SolveOptions, Status};
use madweight::weighting::{parse_weighting, violations, WeightError};
use madweight::{fmt_rational, parse_graph, parse_rational, Catalog, Graph, Level, Mode, Rational, Weighting};

const DEFAULT_SEED: u64 = 1;

/// Exit statuses shared by every subcommand.
const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;
const INCONSISTENT: u8 = 3;

#[derive(Parser)]
#[command(name = "madw", version, about = "Proper edge and total weightings of sparse graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// Edge weights from {1,2,3}.
    #[value(name = "123")]
    Edge3,
    /// Edge and vertex weights from {1,2}.
    #[value(name = "12")]
    Total2,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Edge3 => Mode::Edge3,
            ModeArg::Total2 => Mode::Total2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    /// Maximum average degree below 5/2.
    #[value(name = "52")]
    L52,
    /// Maximum average degree below 8/3.
    #[value(name = "83")]
    L83,
}

impl From<LevelArg> for Level {
    fn from(l: LevelArg) -> Level {
        match l {
            LevelArg::L52 => Level::L52,
            LevelArg::L83 => Level::L83,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Cycle,
    Path,
    Tree,
    RandomMad,
    /// Generalized Petersen graph GP(n, 2) with one pendant per vertex.
    CubicPendants,
    Gadget,
    Host,
}

#[derive(Subcommand)]
enum Cmd {
    /// Maximum average degree and a densest vertex set.
    Mad { file: PathBuf },
    /// List configuration instances of a catalog.
    Detect {
        #[arg(long, value_parser = parse_catalog)]
        catalog: Catalog,
        file: PathBuf,
    },
    /// Construct a proper weighting by reduction.
    Solve {
        #[arg(long)]
        mode: ModeArg,
        #[arg(long)]
        level: LevelArg,
        /// Skip the density check and try anyway.
        #[arg(long)]
        force: bool,
        /// Print applied reductions on stderr.
        #[arg(long)]
        trace: bool,
        file: PathBuf,
    },
    /// Check a weighting; exits 0 iff it is proper.
    Verify {
        #[arg(long)]
        mode: ModeArg,
        graph: PathBuf,
        weighting: PathBuf,
    },
    /// Exhaustive search for a proper weighting.
    Oracle {
        #[arg(long)]
        mode: ModeArg,
        /// Count all proper weightings instead of printing one.
        #[arg(long)]
        count: bool,
        file: PathBuf,
    },
    /// Run a discharging rule set and print the charges.
    Discharge {
        #[arg(long, value_parser = parse_rules)]
        rules: RuleSet,
        /// Also check that a configuration is present or all charges reach the bound.
        #[arg(long)]
        check_catalog: bool,
        file: PathBuf,
    },
    /// Write a generated graph in the edge-list format.
    Gen {
        kind: GenKind,
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, value_parser = parse_bound, default_value = "8/3")]
        bound: Rational,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_parser = parse_side, default_value = "left")]
        side: Side,
        /// Configuration kind for `host`, e.g. W3_83.A or DEGEN_TRI.1.
        #[arg(long = "kind", value_parser = parse_kind)]
        host_kind: Option<ConfigKind>,
        #[arg(long, default_value_t = 0)]
        variant: usize,
    },
}

fn parse_catalog(s: &str) -> Result<Catalog, String> {
    Catalog::parse(s).ok_or_else(|| format!("unknown catalog {s:?} (expected 3w52, 2w52, 2w83 or 3w83)"))
}

fn parse_rules(s: &str) -> Result<RuleSet, String> {
    RuleSet::parse(s).ok_or_else(|| format!("unknown rule set {s:?} (expected r52, r83-12 or r83-123)"))
}

fn parse_bound(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("not a fraction: {s:?}"))
}

fn parse_side(s: &str) -> Result<Side, String> {
    Side::parse(s).ok_or_else(|| format!("unknown side {s:?} (expected left or right)"))
}

fn parse_kind(s: &str) -> Result<ConfigKind, String> {
    ConfigKind::all()
        .into_iter()
        .find(|k| k.to_string().eq_ignore_ascii_case(s))
        .ok_or_else(|| format!("unknown configuration kind {s:?}"))
}

/// Input problems; reported on stderr with exit status 2.
struct Fail(String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| Fail(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Fail> {
    parse_graph(&read(path)?).map_err(|e| Fail(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<u8, Fail> {
    match cmd {
        Cmd::Mad { file } => {
            let g = load_graph(&file)?;
            if g.n() == 0 {
                return Err(Fail("graph has no vertices".into()));
            }
            let m = mad_exact(&g);
            let ids: Vec<String> = m.witness.iter().map(|v| v.to_string()).collect();
            println!("{} {}", fmt_rational(&m.value), ids.join(" "));
            Ok(OK)
        }
        Cmd::Detect { catalog, file } => {
            let g = load_graph(&file)?;
            let found = detect_all(&g, catalog);
            for inst in &found {
                println!("{}", inst.describe(&g));
            }
            Ok(if found.is_empty() { NEGATIVE } else { OK })
        }
        Cmd::Solve { mode, level, force, trace, file } => {
            let g = load_graph(&file)?;
            let opts = SolveOptions { check_mad: !force };
            let out = match solve_with(&g, mode.into(), level.into(), opts) {
                Ok(out) => out,
                Err(e) => {
                    eprintln!("{e}");
                    return Ok(INCONSISTENT);
                }
            };
            if trace {
                for step in &out.trace {
                    eprintln!("{step}");
                }
            }
            match (out.status, out.weighting) {
                (Status::Solved, Some(w)) => {
                    print!("{}", w.to_text(&g));
                    Ok(OK)
                }
                (status, _) => {
                    eprintln!("{status:?}: {}", out.reason.unwrap_or_default());
                    Ok(NEGATIVE)
                }
            }
        }
        Cmd::Verify { mode, graph, weighting } => {
            let g = load_graph(&graph)?;
            let w = parse_weighting(&read(&weighting)?, &g, mode.into())
                .map_err(|e| Fail(format!("{}: {e}", weighting.display())))?;
            match violations(&g, &w) {
                Ok(bad) => {
                    for v in &bad {
                        let (a, b) = g.ends(v.edge);
                        println!("violation {a}-{b} sum={}", v.phi_u);
                    }
                    Ok(if bad.is_empty() { OK } else { NEGATIVE })
                }
                Err(WeightError::Incomplete) => {
                    println!("incomplete weighting");
                    Ok(NEGATIVE)
                }
                Err(e) => Err(e.into()),
            }
        }
        Cmd::Oracle { mode, count, file } => {
            let g = load_graph(&file)?;
            let mode: Mode = mode.into();
            if count {
                let ms = MutableSet {
                    edges: g.edge_ids().collect(),
                    vertices: if mode.weights_vertices() { (0..g.n()).collect() } else { Default::default() },
                };
                let budget = OracleBudget { max_edges: usize::MAX, ..OracleBudget::default() };
                let total = count_extensions_with(&g, &Weighting::empty(mode, &g), &ms, mode, budget)?;
                println!("{total}");
                return Ok(if total == 0 { NEGATIVE } else { OK });
            }
            match enumerate_proper(&g, mode, 1)?.pop() {
                Some(w) => {
                    print!("{}", w.to_text(&g));
                    Ok(OK)
                }
                None => {
                    eprintln!("no proper weighting");
                    Ok(NEGATIVE)
                }
            }
        }
        Cmd::Discharge { rules, check_catalog, file } => {
            let g = load_graph(&file)?;
            let rep = run(&g, rules);
            for v in 0..g.n() {
                println!("{v} {} {}", fmt_rational(&rep.initial[v]), fmt_rational(&rep.final_charge[v]));
            }
            match &rep.min_final {
                Some(m) => println!("min {}", fmt_rational(m)),
                None => println!("min none"),
            }
            if !check_catalog {
                return Ok(OK);
            }
            match check_unavoidability(&g, rules) {
                Verdict::ConfigPresent => {
                    println!("verdict config-present");
                    Ok(OK)
                }
                Verdict::ConfigFreeAndCharged => {
                    println!("verdict config-free-and-charged");
                    Ok(OK)
                }
                Verdict::Counterexample { vertex, charge } => {
                    println!("verdict counterexample vertex={vertex} charge={}", fmt_rational(&charge));
                    Ok(INCONSISTENT)
                }
                Verdict::NotApplicable => {
                    println!("verdict not-applicable");
                    Ok(NEGATIVE)
                }
            }
        }
        Cmd::Gen { kind, n, bound, seed, side, host_kind, variant } => {
            let seeded = matches!(kind, GenKind::Tree | GenKind::RandomMad);
            let seed = seed.unwrap_or_else(|| {
                if seeded {
                    eprintln!("seed {DEFAULT_SEED}");
                }
                DEFAULT_SEED
            });
            let g = match kind {
                GenKind::Cycle => gen::cycle(n)?,
                GenKind::Path => gen::path(n)?,
                GenKind::Tree => gen::tree(n, seed)?,
                GenKind::RandomMad => gen::random_mad(n, bound, seed)?,
                GenKind::CubicPendants => gen::cubic_plus_pendants(&gen::generalized_petersen(n, 2)?)?,
                GenKind::Gadget => gen::nonred_gadget(side).graph,
                GenKind::Host => {
                    let k = host_kind.ok_or_else(|| Fail("host needs --kind".into()))?;
                    gen::config_host(k, variant)?.graph
                }
            };
            print!("{}", g.to_edge_list());
            Ok(OK)
        }
    }
}
