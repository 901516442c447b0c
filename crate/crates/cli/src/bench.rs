//! `bench`: engine timings as CSV, aborting on any disagreement.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use clap::{Args, ValueEnum};
use quartered::engines::{count, supports, EngineChoice};
use quartered::formulas::{aztec_diamond_value, theorem1_value};
use quartered::graph::dual_graph;
use quartered::regions::{build_aztec_diamond, build_quartered, QuarterKind};
use quartered::verify::random_grid_subgraphs;
use quartered::{BigNat, EmbeddedGraph};

use crate::{parse_engine, CliError};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum InstanceSet {
    /// R, K_a and K_na for orders --min-order..=--max-order
    Quartered,
    /// Aztec diamonds of orders 1..=8
    Aztec,
    /// Random induced subgraphs of the 6x6 grid
    Grid,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long = "set", value_enum, value_delimiter = ',', default_value = "quartered")]
    sets: Vec<InstanceSet>,
    /// Comma-separated engines; engines that cannot take an instance skip it
    #[arg(long, value_delimiter = ',', default_value = "profile_dp", value_parser = parse_engine)]
    engines: Vec<EngineChoice>,
    #[arg(long, default_value_t = 3)]
    reps: u32,
    #[arg(long, default_value_t = 4)]
    min_order: u32,
    #[arg(long, default_value_t = 20)]
    max_order: u32,
    #[arg(long, default_value_t = 20)]
    samples: usize,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
}

struct Instance {
    name: String,
    graph: EmbeddedGraph,
    expected: Option<BigNat>,
}

fn instances(args: &BenchArgs) -> Result<Vec<Instance>, CliError> {
    let mut out = Vec::new();
    for set in &args.sets {
        match set {
            InstanceSet::Quartered => {
                for order in args.min_order..=args.max_order {
                    for kind in QuarterKind::ALL {
                        out.push(Instance {
                            name: format!("{kind}({order})"),
                            graph: dual_graph(&build_quartered(order, kind)?),
                            expected: Some(theorem1_value(kind, order)?),
                        });
                    }
                }
            }
            InstanceSet::Aztec => {
                for n in 1..=8 {
                    out.push(Instance {
                        name: format!("AD({n})"),
                        graph: dual_graph(&build_aztec_diamond(n)?),
                        expected: Some(aztec_diamond_value(n)?),
                    });
                }
            }
            InstanceSet::Grid => {
                for (k, graph) in random_grid_subgraphs(6, args.samples, args.seed).into_iter().enumerate() {
                    out.push(Instance {
                        name: format!("grid6#{k}"),
                        graph,
                        expected: None,
                    });
                }
            }
        }
    }
    Ok(out)
}

pub fn run(args: &BenchArgs) -> Result<String, (String, CliError)> {
    let mut csv = String::from("instance,engine,vertices,ms,result_digits\n");
    let list = instances(args).map_err(|e| (String::new(), e))?;
    for inst in &list {
        let mut agreed: Option<(EngineChoice, BigNat)> = None;
        for &engine in &args.engines {
            if !supports(&inst.graph, engine) {
                continue;
            }
            let mut best = Duration::MAX;
            let mut value = BigNat::default();
            for _ in 0..args.reps.max(1) {
                let start = Instant::now();
                value = count(&inst.graph, engine, false).map_err(|e| (csv.clone(), e.into()))?;
                best = best.min(start.elapsed());
            }
            let _ = writeln!(
                csv,
                "{},{},{},{:.3},{}",
                inst.name,
                engine,
                inst.graph.vertex_count(),
                best.as_secs_f64() * 1e3,
                value.to_string().len()
            );
            if let Some(expected) = &inst.expected {
                if &value != expected {
                    let msg = format!("{}: {engine} gave {value}, formula gives {expected}", inst.name);
                    return Err((csv, CliError::Failed(msg)));
                }
            }
            match &agreed {
                Some((first, v)) if *v != value => {
                    let msg = format!("{}: {first} gave {v}, {engine} gave {value}", inst.name);
                    return Err((csv, CliError::Failed(msg)));
                }
                Some(_) => {}
                None => agreed = Some((engine, value)),
            }
        }
    }
    Ok(csv)
}
