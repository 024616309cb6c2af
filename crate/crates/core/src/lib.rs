//! Constructive proper 3-weightings and total 2-weightings for graphs of
//! maximum average degree below 8/3 (and the simpler 5/2 level), with exact
//! density computation, discharging checks, and brute-force oracles.

pub mod configs;
pub mod discharge;
pub mod exec;
mod flow;
pub mod gen;
pub mod graph;
pub mod mad;
pub mod oracle;
pub mod reducer;
pub mod solver;
pub mod weighting;

/// Exact rational used for densities and charges.
pub type Rational = num_rational::Ratio<i64>;

/// Formats a rational as `p/q`, keeping the denominator even when it is 1.
pub fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (p.trim().parse().ok()?, q.trim().parse::<i64>().ok()?);
            (q != 0).then(|| Rational::new(p, q))
        }
        None => s.parse().ok().map(Rational::from_integer),
    }
}

pub use configs::{Catalog, ConfigKind, ConfigurationInstance, Level, Stage, Tag};
pub use graph::{parse_graph, Graph};
pub use weighting::{Mode, Weighting};
