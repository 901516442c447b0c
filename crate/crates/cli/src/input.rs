//! Family shorthands and JSON inputs shared by `gen`, `count` and `render`.

use std::fs;
use std::io::Read;
use std::path::Path;

use clap::{Args, ValueEnum};
use quartered::graph::dual_graph;
use quartered::regions::{
    build_aztec_diamond, build_aztec_rectangle, build_holey_ar, build_holey_ar_bar, build_quartered, IndexSet,
    QuarterKind, Region,
};
use quartered::EmbeddedGraph;

use crate::CliError;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Aztec diamond of order n
    Ad,
    /// Pinwheel quarter R(n)
    R,
    /// Abutting Klein quarter K_a(n)
    Ka,
    /// Non-abutting Klein quarter K_na(n)
    Kna,
    /// m x n Aztec rectangle graph
    Ar,
    /// Aztec rectangle keeping only the bottom-row positions in --keep
    #[value(name = "ar_holey")]
    ArHoley,
    /// Aztec rectangle without its bottom row, minus the positions in --remove
    #[value(name = "ar_bar")]
    ArBar,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Params {
    /// Order (regions) or number of columns (rectangles)
    #[arg(long)]
    pub n: Option<u32>,
    /// Number of rows (rectangles)
    #[arg(long)]
    pub m: Option<u32>,
    /// Comma-separated 1-based positions to keep (ar_holey)
    #[arg(long, value_delimiter = ',')]
    pub keep: Vec<u32>,
    /// Comma-separated 1-based positions to remove (ar_bar)
    #[arg(long, value_delimiter = ',')]
    pub remove: Vec<u32>,
}

/// A region or a bare graph, as produced by a family or read from JSON.
#[derive(Clone, Debug)]
pub enum Built {
    Region(Region),
    Graph(EmbeddedGraph),
}

impl Built {
    pub fn graph(&self) -> EmbeddedGraph {
        match self {
            Built::Region(r) => dual_graph(r),
            Built::Graph(g) => g.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let s = match self {
            Built::Region(r) => serde_json::to_string(r),
            Built::Graph(g) => serde_json::to_string(g),
        };
        s.expect("serializable")
    }
}

fn need(value: Option<u32>, flag: &str, family: Family) -> Result<u32, CliError> {
    let name = family.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    value.ok_or_else(|| CliError::Invalid(format!("family {name} requires --{flag}")))
}

pub fn build(family: Family, p: &Params) -> Result<Built, CliError> {
    let n = need(p.n, "n", family)?;
    let quarter = |kind| build_quartered(n, kind).map(Built::Region);
    let built = match family {
        Family::Ad => build_aztec_diamond(n).map(Built::Region),
        Family::R => quarter(QuarterKind::R),
        Family::Ka => quarter(QuarterKind::KAbut),
        Family::Kna => quarter(QuarterKind::KNonabut),
        Family::Ar => build_aztec_rectangle(need(p.m, "m", family)?, n).map(Built::Graph),
        Family::ArHoley => {
            let holes = IndexSet::new(p.keep.clone())?;
            build_holey_ar(need(p.m, "m", family)?, n, &holes).map(Built::Graph)
        }
        Family::ArBar => {
            let holes = IndexSet::new(p.remove.clone())?;
            build_holey_ar_bar(need(p.m, "m", family)?, n, &holes).map(Built::Graph)
        }
    };
    Ok(built?)
}

/// Reads a region (`{"name", "cells"}`) or graph (`{"vertices", "edges"}`)
/// from a file, or from stdin when `path` is `-`.
pub fn load(path: &Path) -> Result<Built, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Invalid(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))?
    };
    parse(&text)
}

pub fn parse(text: &str) -> Result<Built, CliError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("malformed JSON: {e}")))?;
    let malformed = |e: serde_json::Error| CliError::Invalid(format!("malformed input: {e}"));
    if value.get("cells").is_some() {
        serde_json::from_value(value).map(Built::Region).map_err(malformed)
    } else if value.get("vertices").is_some() {
        serde_json::from_value(value).map(Built::Graph).map_err(malformed)
    } else {
        Err(CliError::Invalid(
            "input is neither a region (\"cells\") nor a graph (\"vertices\")".into(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_shapes() {
        assert!(matches!(parse(r#"{"name":"x","cells":[[0,0],[1,0]]}"#), Ok(Built::Region(_))));
        assert!(matches!(parse(r#"{"vertices":[[0,0],[0,1]],"edges":[[0,1]]}"#), Ok(Built::Graph(_))));
        assert!(parse(r#"{"foo":1}"#).is_err());
        assert!(parse(r#"{"vertices":[[0,0],[2,0]],"edges":[[0,1]]}"#).is_err());
        assert!(parse("not json").is_err());
    }

    #[test]
    fn family_parameters_are_checked() {
        let p = Params::default();
        assert!(build(Family::Ad, &p).is_err());
        let p = Params { n: Some(5), ..Params::default() };
        assert!(build(Family::Ar, &p).is_err());
        let p = Params { n: Some(5), m: Some(3), keep: vec![1, 3, 5], ..Params::default() };
        assert_eq!(build(Family::ArHoley, &p).unwrap().graph().vertex_count(), 36);
    }
}
