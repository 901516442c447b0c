//! Exact perfect-matching counters.
//!
//! Three engines that share no code path beyond the graph type:
//!
//! * [`count_brute`]: recursive enumeration, the definition-level oracle;
//! * [`count_profile_dp`]: broken-profile dynamic programming, the workhorse;
//! * [`count_fkt`]: Kasteleyn determinant over the Gaussian integers.
//!
//! [`count`] dispatches between them and can cross-check one against another.

mod brute;
mod fkt;
mod gaussian;
mod profile;

use std::fmt;
use std::str::FromStr;

pub use brute::{count_brute, BRUTE_MAX_VERTICES};
pub use fkt::count_fkt;
pub use gaussian::GaussianInt;
pub use profile::{count_profile_dp, PROFILE_MAX_WIDTH};

use crate::graph::EmbeddedGraph;
use crate::{BigNat, Error, Result};

/// Below this size `count` prefers brute force as the cross-check.
pub const CROSSCHECK_BRUTE_BELOW: usize = 24;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum EngineChoice {
    Brute,
    ProfileDp,
    Fkt,
    Auto,
}

impl EngineChoice {
    pub fn name(self) -> &'static str {
        match self {
            EngineChoice::Brute => "brute",
            EngineChoice::ProfileDp => "profile_dp",
            EngineChoice::Fkt => "fkt",
            EngineChoice::Auto => "auto",
        }
    }

    fn resolve(self) -> EngineChoice {
        match self {
            EngineChoice::Auto => EngineChoice::ProfileDp,
            e => e,
        }
    }
}

impl fmt::Display for EngineChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EngineChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(EngineChoice::Brute),
            "profile_dp" | "dp" => Ok(EngineChoice::ProfileDp),
            "fkt" => Ok(EngineChoice::Fkt),
            "auto" => Ok(EngineChoice::Auto),
            other => Err(Error::Malformed(format!("unknown engine {other:?}"))),
        }
    }
}

fn run(g: &EmbeddedGraph, engine: EngineChoice) -> Result<BigNat> {
    match engine.resolve() {
        EngineChoice::Brute => count_brute(g),
        EngineChoice::Fkt => count_fkt(g),
        _ => count_profile_dp(g),
    }
}

/// Whether `engine` accepts `g` without a size or embedding error.
pub fn supports(g: &EmbeddedGraph, engine: EngineChoice) -> bool {
    match engine.resolve() {
        EngineChoice::Brute => g.vertex_count() <= BRUTE_MAX_VERTICES,
        EngineChoice::Fkt => g.bounded_faces_are_unit_squares(),
        _ => profile::sweep_width(g) <= PROFILE_MAX_WIDTH,
    }
}

/// Second engine used to confirm `primary`, if any is applicable.
fn crosscheck_engine(g: &EmbeddedGraph, primary: EngineChoice) -> Option<EngineChoice> {
    let small = g.vertex_count() < CROSSCHECK_BRUTE_BELOW;
    let candidates = [
        (EngineChoice::Brute, small),
        (EngineChoice::Fkt, true),
        (EngineChoice::ProfileDp, true),
        (EngineChoice::Brute, true),
    ];
    candidates
        .into_iter()
        .filter(|&(e, allowed)| allowed && e != primary)
        .map(|(e, _)| e)
        .find(|&e| supports(g, e))
}

/// Counts perfect matchings of `g` with the chosen engine. With `crosscheck`
/// a second applicable engine is run as well and any disagreement is an
/// error.
pub fn count(g: &EmbeddedGraph, engine: EngineChoice, crosscheck: bool) -> Result<BigNat> {
    let primary = engine.resolve();
    let value = run(g, primary)?;
    if crosscheck {
        if let Some(secondary) = crosscheck_engine(g, primary) {
            let other = run(g, secondary)?;
            if other != value {
                return Err(Error::EngineDisagreement {
                    primary: primary.name(),
                    secondary: secondary.name(),
                    a: value.to_string(),
                    b: other.to_string(),
                });
            }
        }
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{dual_graph, Point};
    use crate::regions::{build_aztec_diamond, build_holey_ar, build_quartered, IndexSet, QuarterKind};

    fn four_cycle() -> EmbeddedGraph {
        EmbeddedGraph::induced([(0, 0), (1, 0), (0, 1), (1, 1)].map(|(x, y)| Point::new(x, y)))
    }

    fn dual(n: u32, kind: QuarterKind) -> EmbeddedGraph {
        dual_graph(&build_quartered(n, kind).unwrap())
    }

    #[test]
    fn four_cycle_everywhere() {
        let g = four_cycle();
        for e in [EngineChoice::Brute, EngineChoice::ProfileDp, EngineChoice::Fkt, EngineChoice::Auto] {
            assert_eq!(count(&g, e, true).unwrap(), BigNat::from(2u32), "{e}");
        }
    }

    #[test]
    fn empty_graph_has_one_matching() {
        let g = EmbeddedGraph::default();
        assert_eq!(count_brute(&g).unwrap(), BigNat::from(1u32));
        assert_eq!(count_profile_dp(&g).unwrap(), BigNat::from(1u32));
        assert_eq!(count_fkt(&g).unwrap(), BigNat::from(1u32));
    }

    #[test]
    fn engine_examples() {
        assert_eq!(count_brute(&dual(4, QuarterKind::R)).unwrap(), BigNat::from(2u32));
        assert_eq!(count_brute(&dual(4, QuarterKind::KNonabut)).unwrap(), BigNat::from(6u32));
        let ad4 = dual_graph(&build_aztec_diamond(4).unwrap());
        assert_eq!(count_profile_dp(&ad4).unwrap(), BigNat::from(1024u32));
        assert_eq!(count_profile_dp(&dual(8, QuarterKind::R)).unwrap(), BigNat::from(80u32));
        let fig = build_holey_ar(3, 5, &IndexSet::new(vec![1, 3, 5]).unwrap()).unwrap();
        assert_eq!(count_profile_dp(&fig).unwrap(), BigNat::from(512u32));
        let ad3 = dual_graph(&build_aztec_diamond(3).unwrap());
        assert_eq!(count_fkt(&ad3).unwrap(), BigNat::from(64u32));
        assert_eq!(count_fkt(&dual(7, QuarterKind::R)).unwrap(), BigNat::from(20u32));
    }

    #[test]
    fn crosscheck_catches_nothing_on_consistent_engines() {
        for n in 1..=10 {
            for kind in QuarterKind::ALL {
                count(&dual(n, kind), EngineChoice::Auto, true).unwrap();
            }
        }
    }

    #[test]
    fn brute_guard() {
        let big = dual_graph(&build_aztec_diamond(5).unwrap());
        assert!(matches!(count_brute(&big), Err(Error::TooLarge { .. })));
        assert!(!supports(&big, EngineChoice::Brute));
    }

    #[test]
    fn fkt_rejects_holes() {
        let ring = EmbeddedGraph::induced(
            [(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2)].map(|(x, y)| Point::new(x, y)),
        );
        assert_eq!(count_fkt(&ring), Err(Error::UnsupportedEmbedding));
        // The front door falls back to an engine that handles holes.
        assert_eq!(count(&ring, EngineChoice::Auto, true).unwrap(), BigNat::from(2u32));
    }

    #[test]
    fn parse_engine_names() {
        assert_eq!("dp".parse::<EngineChoice>().unwrap(), EngineChoice::ProfileDp);
        assert_eq!("fkt".parse::<EngineChoice>().unwrap(), EngineChoice::Fkt);
        assert!("nope".parse::<EngineChoice>().is_err());
    }
}
