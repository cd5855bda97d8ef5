//! Counting how often small graphs that pass the clique test are still
//! obstructed.
//!
//! Each graph is evaluated with every obstruction test. The summary only
//! counts graphs whose clique number is at most `ξ`. Among those it counts
//! how many the remaining tests obstruct, with a per-test breakdown.

use std::collections::BTreeMap;

use num_rational::Ratio;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators;
use crate::graph::Graph;
use crate::obstruction::{obstruct, ObstructConfig, TestName, TestStatus, SCHEMA_VERSION};
use crate::surface::{ratio_string, SurfaceParams};

pub const EXHAUSTIVE_MAX_N: usize = 6;
pub const SAMPLED_MAX_N: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExperimentMode {
    /// Every labelled graph on `n` vertices.
    Exhaustive,
    /// `samples` seeded random graphs.
    Sampled {
        samples: usize,
        seed: u64,
        edge_probability: Ratio<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub n: usize,
    pub surface: SurfaceParams,
    pub mode: ExperimentMode,
    /// Worker threads; 0 picks the rayon default. Results do not depend on it.
    pub workers: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentSummary {
    pub schema_version: u32,
    pub n: usize,
    pub genus: u32,
    pub punctures: u32,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", with = "optional_ratio")]
    pub edge_probability: Option<Ratio<u64>>,
    pub total: u64,
    pub passed_clique: u64,
    pub obstructed_among_passed: u64,
    /// `obstructed_among_passed / passed_clique`; absent when nothing passed.
    #[serde(with = "optional_ratio")]
    pub fraction: Option<Ratio<u64>>,
    /// `fraction` rounded to six decimal places.
    pub fraction_decimal: Option<String>,
    /// For each test other than the clique test, how many passing graphs it
    /// fires on.
    pub per_test: BTreeMap<TestName, u64>,
}

mod optional_ratio {
    use num_rational::Ratio;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(value: &Option<Ratio<u64>>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(r) => super::ratio_string::serialize(r, s),
            None => s.serialize_none(),
        }
    }
}

/// Outcome for one graph: `None` if it fails the clique test, else which of
/// the other tests fired.
type GraphOutcome = Option<Vec<TestName>>;

pub fn run_enumeration_experiment(config: &ExperimentConfig) -> Result<ExperimentSummary> {
    let n = config.n;
    let pairs = n * n.saturating_sub(1) / 2;
    let graphs: Box<dyn Fn(usize) -> Result<Graph> + Sync> = match config.mode {
        ExperimentMode::Exhaustive => {
            if n > EXHAUSTIVE_MAX_N {
                return Err(Error::TooLarge {
                    what: "exhaustive enumeration",
                    vertex_count: n,
                    cap: EXHAUSTIVE_MAX_N,
                });
            }
            Box::new(move |index| {
                let mut bit = 0;
                Ok(Graph::from_fn(n, |_, _| {
                    let present = index >> bit & 1 == 1;
                    bit += 1;
                    present
                }))
            })
        }
        ExperimentMode::Sampled {
            samples,
            seed,
            edge_probability,
        } => {
            if n > SAMPLED_MAX_N {
                return Err(Error::TooLarge {
                    what: "sampled experiment",
                    vertex_count: n,
                    cap: SAMPLED_MAX_N,
                });
            }
            let mut master = ChaCha8Rng::seed_from_u64(seed);
            let seeds: Vec<u64> = (0..samples).map(|_| master.next_u64()).collect();
            Box::new(move |index| generators::random(n, edge_probability, seeds[index]))
        }
    };
    let total = match config.mode {
        ExperimentMode::Exhaustive => 1usize << pairs,
        ExperimentMode::Sampled { samples, .. } => samples,
    };

    let surface = config.surface;
    let evaluate = |index: usize| -> Result<GraphOutcome> { evaluate_graph(&graphs(index)?, &surface) };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let outcomes: Vec<Result<GraphOutcome>> = pool.install(|| (0..total).into_par_iter().map(evaluate).collect());

    let mut passed = 0u64;
    let mut obstructed = 0u64;
    let mut per_test: BTreeMap<TestName, u64> = TestName::ORDER[1..].iter().map(|&t| (t, 0)).collect();
    for outcome in outcomes {
        let Some(fired) = outcome? else { continue };
        passed += 1;
        if !fired.is_empty() {
            obstructed += 1;
        }
        for name in fired {
            *per_test.get_mut(&name).expect("non-clique test") += 1;
        }
    }
    let fraction = (passed > 0).then(|| Ratio::new(obstructed, passed));

    let (mode, seed, edge_probability) = match config.mode {
        ExperimentMode::Exhaustive => ("exhaustive", None, None),
        ExperimentMode::Sampled {
            seed, edge_probability, ..
        } => ("sampled", Some(seed), Some(edge_probability)),
    };
    Ok(ExperimentSummary {
        schema_version: SCHEMA_VERSION,
        n,
        genus: surface.genus,
        punctures: surface.punctures,
        mode,
        seed,
        edge_probability,
        total: total as u64,
        passed_clique: passed,
        obstructed_among_passed: obstructed,
        fraction,
        fraction_decimal: fraction.map(|f| decimal(f, 6)),
        per_test,
    })
}

fn evaluate_graph(graph: &Graph, surface: &SurfaceParams) -> Result<GraphOutcome> {
    let config = ObstructConfig {
        all_tests: true,
        ..Default::default()
    };
    let report = obstruct(graph, surface, &config)?;
    let clique_fired = report
        .tests
        .iter()
        .any(|t| t.test_name == TestName::Clique && t.status == TestStatus::Fired);
    if clique_fired {
        return Ok(None);
    }
    Ok(Some(report.fired_tests.iter().map(|t| t.test_name).collect()))
}

/// Round-half-up decimal rendering of a fraction in `[0, 1]`.
fn decimal(value: Ratio<u64>, places: u32) -> String {
    let scale = 10u128.pow(places);
    let (num, den) = (u128::from(*value.numer()), u128::from(*value.denom()));
    let scaled = (num * scale * 2 + den) / (2 * den);
    format!("{}.{:0width$}", scaled / scale, scaled % scale, width = places as usize)
}
