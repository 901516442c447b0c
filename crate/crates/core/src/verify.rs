//! Reproducible identity-checking suites.
//!
//! Each suite expands into a list of cases that are evaluated in parallel and
//! reported in a fixed order, so the serialized report of a run depends only
//! on its options. Wall-clock time is recorded but never serialized.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::engines::{count, count_brute, count_fkt, count_profile_dp, EngineChoice};
use crate::factorize::{apply_factorization, find_diagonal_axis, verify_factorization};
use crate::formulas::{
    aztec_diamond_value, lemma1_sides, lemma4_value, lemma5_value, lemma6_lhs, lemma6_rhs, theorem1_value,
    Recurrence,
};
use crate::graph::{dual_graph, isomorphic_embedded, reduce_forced, EmbeddedGraph, Point};
use crate::regions::{
    build_aztec_diamond, build_holey_ar, build_holey_ar_bar, build_quartered, set_a, set_b, IndexSet, QuarterKind,
};
use crate::{BigNat, BigRat, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

impl CaseResult {
    fn compare(id: String, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let ok = expected == actual;
        CaseResult { id, expected, actual, ok }
    }

    fn failed(id: String, expected: impl ToString, err: Error) -> Self {
        CaseResult {
            id,
            expected: expected.to_string(),
            actual: format!("error: {err}"),
            ok: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySuiteReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub ok: bool,
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Aztec,
    Theorem1,
    Lemma1,
    Lemma2,
    Lemma3,
    Lemma4,
    Lemma5,
    Lemma6,
    Factorization,
    Engines,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Aztec,
        Suite::Theorem1,
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::Lemma3,
        Suite::Lemma4,
        Suite::Lemma5,
        Suite::Lemma6,
        Suite::Factorization,
        Suite::Engines,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Aztec => "aztec",
            Suite::Theorem1 => "theorem1",
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Lemma3 => "lemma3",
            Suite::Lemma4 => "lemma4",
            Suite::Lemma5 => "lemma5",
            Suite::Lemma6 => "lemma6",
            Suite::Factorization => "factorization",
            Suite::Engines => "engines",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown suite {s:?}")))
    }
}

/// Bounds for the suites. `None` selects each suite's default.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Largest region order (aztec: 8, theorem1: 16).
    pub max_order: Option<u32>,
    /// Largest parameter `n` (lemma1/2/3 and factorization: 2, lemma6: 50).
    pub max_n: Option<u32>,
    /// Random instances (engines: 300, lemma4/lemma5: 20 per shape).
    pub samples: Option<usize>,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_order: None,
            max_n: None,
            samples: None,
            seed: 0x5eed,
        }
    }
}

type Case = Box<dyn Fn() -> CaseResult + Send + Sync>;

fn case(f: impl Fn() -> CaseResult + Send + Sync + 'static) -> Case {
    Box::new(f)
}

fn tilings(kind: QuarterKind, order: u32) -> Result<BigNat> {
    count(&quarter_dual(kind, order)?, EngineChoice::Auto, false)
}

fn quarter_dual(kind: QuarterKind, order: u32) -> Result<EmbeddedGraph> {
    Ok(dual_graph(&build_quartered(order, kind)?))
}

fn pow2(e: usize) -> BigNat {
    BigNat::one() << e
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> VerifySuiteReport {
    let start = Instant::now();
    let cases = match suite {
        Suite::Aztec => aztec_cases(opts.max_order.unwrap_or(8)),
        Suite::Theorem1 => theorem1_cases(opts.max_order.unwrap_or(16)),
        Suite::Lemma1 => lemma1_cases(opts.max_n.unwrap_or(2)),
        Suite::Lemma2 => lemma2_cases(opts.max_n.unwrap_or(2)),
        Suite::Lemma3 => lemma3_cases(opts.max_n.unwrap_or(2)),
        Suite::Lemma4 => rectangle_cases(false, opts.samples.unwrap_or(20), opts.seed),
        Suite::Lemma5 => rectangle_cases(true, opts.samples.unwrap_or(20), opts.seed),
        Suite::Lemma6 => lemma6_cases(opts.max_n.unwrap_or(50)),
        Suite::Factorization => factorization_cases(opts.max_n.unwrap_or(2)),
        Suite::Engines => engine_cases(opts.samples.unwrap_or(300), opts.seed),
    };
    let results: Vec<CaseResult> = cases.par_iter().map(|c| c()).collect();
    VerifySuiteReport {
        suite: suite.name().to_string(),
        ok: results.iter().all(|r| r.ok),
        cases: results,
        wall_time: start.elapsed(),
    }
}

pub fn run_all(opts: &SuiteOptions) -> Vec<VerifySuiteReport> {
    Suite::ALL.iter().map(|&s| run_suite(s, opts)).collect()
}

fn aztec_cases(max_order: u32) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 1..=max_order {
        let engines: &[(EngineChoice, fn(&EmbeddedGraph) -> Result<BigNat>)] = &[
            (EngineChoice::ProfileDp, count_profile_dp),
            (EngineChoice::Brute, count_brute),
            (EngineChoice::Fkt, count_fkt),
        ];
        for &(engine, counter) in engines {
            let applies = match engine {
                EngineChoice::Brute => n <= 3,
                EngineChoice::Fkt => n <= 6,
                _ => true,
            };
            if applies {
                cases.push(case(move || {
                    let id = format!("AD({n}) {engine}");
                    let expected = aztec_diamond_value(n).expect("n >= 1");
                    match build_aztec_diamond(n).and_then(|r| counter(&dual_graph(&r))) {
                        Ok(actual) => CaseResult::compare(id, expected, actual),
                        Err(e) => CaseResult::failed(id, expected, e),
                    }
                }));
            }
        }
    }
    cases
}

fn theorem1_cases(max_order: u32) -> Vec<Case> {
    let mut cases = Vec::new();
    for order in 1..=max_order {
        for kind in QuarterKind::ALL {
            cases.push(case(move || {
                let id = format!("T({kind}({order}))");
                let expected = match theorem1_value(kind, order) {
                    Ok(v) => v,
                    Err(e) => return CaseResult::failed(id, "formula", e),
                };
                match tilings(kind, order) {
                    Ok(actual) => CaseResult::compare(id, expected, actual),
                    Err(e) => CaseResult::failed(id, expected, e),
                }
            }));
        }
    }
    cases
}

fn lemma1_cases(max_n: u32) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 1..=max_n {
        for which in Recurrence::ALL {
            cases.push(case(move || {
                let ((bk, bo), (sk, so)) = which.sides(n);
                let id = format!("T({bk}({bo})) = 2^{n} T({sk}({so}))");
                match lemma1_sides(which, n) {
                    Ok((lhs, rhs)) => CaseResult::compare(id, rhs, lhs),
                    Err(e) => CaseResult::failed(id, "2^n T(smaller)", e),
                }
            }));
        }
    }
    cases
}

/// `(larger, smaller)` pairs related by removing forced edges.
fn forced_pairs(n: u32) -> [((QuarterKind, u32), (QuarterKind, u32)); 4] {
    use QuarterKind::*;
    [
        ((KAbut, 4 * n), (KAbut, 4 * n - 2)),
        ((KAbut, 4 * n + 1), (KAbut, 4 * n - 1)),
        ((KNonabut, 4 * n + 2), (KNonabut, 4 * n)),
        ((KNonabut, 4 * n + 3), (KNonabut, 4 * n + 1)),
    ]
}

fn lemma2_cases(max_n: u32) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 1..=max_n {
        for ((bk, bo), (sk, so)) in forced_pairs(n) {
            cases.push(case(move || {
                let id = format!("reduce_forced({bk}({bo})) ~ {sk}({so})");
                let outcome = quarter_dual(bk, bo).and_then(|big| {
                    let small = quarter_dual(sk, so)?;
                    let report = reduce_forced(&big);
                    Ok(if report.infeasible {
                        "infeasible"
                    } else if isomorphic_embedded(&report.reduced, &small) {
                        "isomorphic"
                    } else {
                        "not isomorphic"
                    })
                });
                match outcome {
                    Ok(actual) => CaseResult::compare(id, "isomorphic", actual),
                    Err(e) => CaseResult::failed(id, "isomorphic", e),
                }
            }));
            cases.push(case(move || {
                let id = format!("T({bk}({bo})) = T({sk}({so}))");
                match (tilings(sk, so), tilings(bk, bo)) {
                    (Ok(expected), Ok(actual)) => CaseResult::compare(id, expected, actual),
                    (Err(e), _) | (_, Err(e)) => CaseResult::failed(id, "equal counts", e),
                }
            }));
        }
    }
    cases
}

/// A symmetric holey Aztec rectangle and the quartered regions its upper and
/// lower factors are congruent to.
#[derive(Clone, Debug)]
pub struct FactorInstance {
    pub label: String,
    pub graph: EmbeddedGraph,
    pub plus: (QuarterKind, u32),
    pub minus: (QuarterKind, u32),
    pub pinwheel: (QuarterKind, u32),
    pub klein: (QuarterKind, u32),
}

/// The four holey rectangles that factor into a pinwheel quarter and a Klein
/// quarter.
pub fn factor_instances(n: u32) -> Result<Vec<FactorInstance>> {
    use QuarterKind::*;
    let (m, wide, narrow) = (2 * n, 4 * n, 4 * n - 1);
    let make = |label: String, graph: EmbeddedGraph, plus: (QuarterKind, u32), minus: (QuarterKind, u32)| {
        let (pinwheel, klein) = if plus.0 == R { (plus, minus) } else { (minus, plus) };
        FactorInstance {
            label,
            graph,
            plus,
            minus,
            pinwheel,
            klein,
        }
    };
    Ok(vec![
        make(
            format!("AR_{{{m},{wide}}}(B_{n})"),
            build_holey_ar(m, wide, &set_b(n))?,
            (KAbut, wide),
            (R, wide),
        ),
        make(
            format!("AR_{{{m},{wide}}}(A_{n})"),
            build_holey_ar(m, wide, &set_a(n))?,
            (R, wide),
            (KNonabut, wide),
        ),
        make(
            format!("ARbar_{{{m},{narrow}}}(A_{n})"),
            build_holey_ar_bar(m, narrow, &set_a(n))?,
            (KAbut, narrow),
            (R, narrow),
        ),
        make(
            format!("ARbar_{{{m},{narrow}}}(B_{n})"),
            build_holey_ar_bar(m, narrow, &set_b(n))?,
            (R, narrow),
            (KNonabut, narrow),
        ),
    ])
}

fn lemma3_cases(max_n: u32) -> Vec<Case> {
    let mut cases = Vec::new();
    for n in 1..=max_n {
        let instances = match factor_instances(n) {
            Ok(v) => v,
            Err(e) => {
                cases.push(case(move || CaseResult::failed(format!("instances n={n}"), "built", e.clone())));
                continue;
            }
        };
        for inst in instances {
            let inst = std::sync::Arc::new(inst);
            let i = inst.clone();
            cases.push(case(move || {
                let id = format!("{} axis", i.label);
                let actual = match find_diagonal_axis(&i.graph) {
                    Some(axis) => format!("w={}", axis.w()),
                    None => "none".to_string(),
                };
                CaseResult::compare(id, format!("w={n}"), actual)
            }));
            for upper in [true, false] {
                let i = inst.clone();
                cases.push(case(move || {
                    let (sign, (kind, order)) = if upper { ("+", i.plus) } else { ("-", i.minus) };
                    let id = format!("{} G{sign} ~ {kind}({order})", i.label);
                    let outcome = find_diagonal_axis(&i.graph)
                        .ok_or_else(|| Error::InvalidAxis("no axis".into()))
                        .and_then(|axis| apply_factorization(&i.graph, &axis))
                        .and_then(|parts| {
                            let part = if upper { parts.g_plus } else { parts.g_minus };
                            Ok(isomorphic_embedded(&part, &quarter_dual(kind, order)?))
                        });
                    match outcome {
                        Ok(iso) => CaseResult::compare(id, "isomorphic", if iso { "isomorphic" } else { "not isomorphic" }),
                        Err(e) => CaseResult::failed(id, "isomorphic", e),
                    }
                }));
            }
            let i = inst.clone();
            cases.push(case(move || {
                let ((pk, po), (kk, ko)) = (i.pinwheel, i.klein);
                let id = format!("M({}) = 2^{n} T({pk}({po})) T({kk}({ko}))", i.label);
                let outcome = (|| -> Result<(BigNat, BigNat)> {
                    let expected = pow2(n as usize) * tilings(pk, po)? * tilings(kk, ko)?;
                    Ok((expected, count(&i.graph, EngineChoice::Auto, false)?))
                })();
                match outcome {
                    Ok((expected, actual)) => CaseResult::compare(id, expected, actual),
                    Err(e) => CaseResult::failed(id, "product", e),
                }
            }));
        }
        // Ratios of rectangle counts against the difference-product ratio.
        for (label, build) in [
            ("AR", build_holey_ar as fn(u32, u32, &IndexSet) -> Result<EmbeddedGraph>),
            ("ARbar", build_holey_ar_bar),
        ] {
            cases.push(case(move || {
                let width = if label == "AR" { 4 * n } else { 4 * n - 1 };
                let id = format!("M({label}(A_{n}))/M({label}(B_{n})) = delta(A_{n})/delta(B_{n})");
                let outcome = (|| -> Result<BigRat> {
                    let a = count(&build(2 * n, width, &set_a(n))?, EngineChoice::Auto, false)?;
                    let b = count(&build(2 * n, width, &set_b(n))?, EngineChoice::Auto, false)?;
                    Ok(BigRat::new(BigInt::from(a), BigInt::from(b)))
                })();
                match outcome {
                    Ok(actual) => CaseResult::compare(id, lemma6_lhs(n), actual),
                    Err(e) => CaseResult::failed(id, lemma6_lhs(n), e),
                }
            }));
        }
    }
    cases
}

const RECTANGLE_SHAPES: [(u32, u32); 4] = [(2, 4), (2, 5), (3, 5), (3, 6)];

fn random_index_set(rng: &mut ChaCha8Rng, size: u32, width: u32) -> IndexSet {
    let mut v: Vec<u32> = sample(rng, width as usize, size as usize)
        .into_iter()
        .map(|k| k as u32 + 1)
        .collect();
    v.sort_unstable();
    IndexSet::new(v).expect("distinct sorted positions")
}

fn rectangle_cases(removed: bool, samples: usize, seed: u64) -> Vec<Case> {
    let reference = if removed {
        (3, 5, IndexSet::new(vec![3, 4, 6]).expect("valid"))
    } else {
        (3, 5, IndexSet::new(vec![1, 3, 5]).expect("valid"))
    };
    let mut instances = vec![reference];
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(removed));
    for (m, n) in RECTANGLE_SHAPES {
        let width = if removed { n + 1 } else { n };
        for _ in 0..samples {
            instances.push((m, n, random_index_set(&mut rng, m, width)));
        }
    }
    instances
        .into_iter()
        .map(|(m, n, holes)| {
            case(move || {
                let (label, formula, build): (_, fn(u32, u32, &IndexSet) -> Result<BigNat>, fn(u32, u32, &IndexSet) -> Result<EmbeddedGraph>) =
                    if removed {
                        ("ARbar", lemma5_value, build_holey_ar_bar)
                    } else {
                        ("AR", lemma4_value, build_holey_ar)
                    };
                let id = format!("M({label}_{{{m},{n}}}({holes}))");
                let outcome = formula(m, n, &holes)
                    .and_then(|f| Ok((f, count(&build(m, n, &holes)?, EngineChoice::Auto, false)?)));
                match outcome {
                    Ok((expected, actual)) => CaseResult::compare(id, expected, actual),
                    Err(e) => CaseResult::failed(id, "formula", e),
                }
            })
        })
        .collect()
}

fn lemma6_cases(max_n: u32) -> Vec<Case> {
    (1..=max_n)
        .map(|n| {
            case(move || {
                CaseResult::compare(
                    format!("delta(A_{n})/delta(B_{n}) = double product"),
                    lemma6_rhs(n),
                    lemma6_lhs(n),
                )
            })
        })
        .collect()
}

fn factorization_cases(max_n: u32) -> Vec<Case> {
    let square = EmbeddedGraph::induced([(0, 0), (1, 0), (0, 1), (1, 1)].map(|(x, y)| Point::new(x, y)));
    let mut graphs = vec![("4-cycle".to_string(), square)];
    for n in 1..=max_n {
        match factor_instances(n) {
            Ok(v) => graphs.extend(v.into_iter().map(|i| (i.label, i.graph))),
            Err(e) => {
                return vec![case(move || CaseResult::failed(format!("instances n={n}"), "built", e.clone()))]
            }
        }
    }
    graphs
        .into_iter()
        .map(|(label, g)| {
            case(move || {
                let id = format!("M({label}) = 2^w M(G+) M(G-)");
                match verify_factorization(&g, EngineChoice::Auto) {
                    Ok(report) => CaseResult::compare(id, report.product(), &report.m_g),
                    Err(e) => CaseResult::failed(id, "product", e),
                }
            })
        })
        .collect()
}

/// Random induced subgraphs of the `side x side` grid.
pub fn random_grid_subgraphs(side: i64, samples: usize, seed: u64) -> Vec<EmbeddedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let density: f64 = rng.gen_range(0.5..=1.0);
            let points: Vec<Point> = (0..side)
                .flat_map(|x| (0..side).map(move |y| Point::new(x, y)))
                .filter(|_| rng.gen_bool(density))
                .collect();
            EmbeddedGraph::induced(points)
        })
        .collect()
}

fn engine_cases(samples: usize, seed: u64) -> Vec<Case> {
    let mut cases = Vec::new();
    for (k, g) in random_grid_subgraphs(6, samples, seed).into_iter().enumerate() {
        let g = std::sync::Arc::new(g);
        let h = g.clone();
        cases.push(case(move || {
            let id = format!("grid6 #{k} brute vs profile_dp");
            match (count_brute(&h), count_profile_dp(&h)) {
                (Ok(expected), Ok(actual)) => CaseResult::compare(id, expected, actual),
                (Err(e), _) | (_, Err(e)) => CaseResult::failed(id, "count", e),
            }
        }));
        if g.bounded_faces_are_unit_squares() {
            cases.push(case(move || {
                let id = format!("grid6 #{k} brute vs fkt");
                match (count_brute(&g), count_fkt(&g)) {
                    (Ok(expected), Ok(actual)) => CaseResult::compare(id, expected, actual),
                    (Err(e), _) | (_, Err(e)) => CaseResult::failed(id, "count", e),
                }
            }));
        }
    }
    cases
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("lemma9".parse::<Suite>().is_err());
    }

    #[test]
    fn theorem_suite_case_count() {
        let opts = SuiteOptions {
            max_order: Some(6),
            ..SuiteOptions::default()
        };
        let report = run_suite(Suite::Theorem1, &opts);
        assert_eq!(report.cases.len(), 18);
        assert!(report.ok, "{:?}", report.cases.iter().find(|c| !c.ok));
    }

    #[test]
    fn small_suites_pass() {
        let opts = SuiteOptions {
            max_n: Some(1),
            samples: Some(3),
            ..SuiteOptions::default()
        };
        for suite in [Suite::Lemma1, Suite::Lemma2, Suite::Lemma3, Suite::Lemma4, Suite::Lemma5, Suite::Factorization] {
            let report = run_suite(suite, &opts);
            assert!(report.ok, "{suite}: {:?}", report.cases.iter().find(|c| !c.ok));
        }
    }

    #[test]
    fn report_serializes_without_time() {
        let opts = SuiteOptions {
            max_n: Some(2),
            ..SuiteOptions::default()
        };
        let report = run_suite(Suite::Lemma6, &opts);
        let json = serde_json::to_string(&report).unwrap();
        assert!(!json.contains("wall"));
        assert!(json.contains(r#""expected":"35/3""#));
    }

    #[test]
    fn random_subgraphs_are_seeded() {
        assert_eq!(random_grid_subgraphs(6, 5, 1), random_grid_subgraphs(6, 5, 1));
        assert_ne!(random_grid_subgraphs(6, 5, 1), random_grid_subgraphs(6, 5, 2));
    }
}
