//! Certified verdicts on whether a finite graph can be an induced subgraph of
//! the curve graph of a surface.
//!
//! Tests run cheapest first:
//!
//! | test                   | fires when                                    |
//! |------------------------|-----------------------------------------------|
//! | `clique`               | clique number `> ξ`                           |
//! | `induced_multipartite` | induced `K_{ℓ+1}(2)` exists                   |
//! | `bipartite_half_graph` | induced `H_n` with `n >= 2g + p`              |
//! | `half_graph`           | induced half-graph of height `> 6g - 6 + 2p`  |
//! | `ncl`                  | `NCL > 6g - 6 + 2p`                           |
//!
//! The NCL test dominates the two half-graph tests, since NCL is monotone on
//! induced subgraphs, but it is the most expensive one and its certificate is
//! the hardest to read. The cheaper tests go first so that most verdicts
//! carry a small certificate.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{chromatic_number, density, half_graph_height, induced_multipartite, maximum_clique};
use crate::ncl::{certificate_violation, ncl_exact_with_cap, NestedComplexitySequence};
use crate::surface::SurfaceParams;
use crate::witness::{validate_clique, HalfGraphWitness, MultipartiteWitness};
use crate::SearchLimits;

pub const SCHEMA_VERSION: u32 = 1;

pub const DISCLAIMERS: [&str; 3] = [
    "An obstructed verdict is a proof: the graph is not an induced subgraph of the curve graph of this surface.",
    "no_obstruction_found is not a proof of membership; this tool does not decide membership.",
    "The chromatic number is informational only and never fires a test.",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Obstructed,
    NoObstructionFound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TestName {
    Clique,
    InducedMultipartite,
    BipartiteHalfGraph,
    HalfGraph,
    Ncl,
}

impl TestName {
    pub const ORDER: [TestName; 5] = [
        TestName::Clique,
        TestName::InducedMultipartite,
        TestName::BipartiteHalfGraph,
        TestName::HalfGraph,
        TestName::Ncl,
    ];
}

/// How the measured value is compared with the threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Comparison {
    #[serde(rename = ">")]
    Greater,
    #[serde(rename = ">=")]
    AtLeast,
}

impl Comparison {
    fn fires(self, measured: u64, threshold: u64) -> bool {
        match self {
            Comparison::Greater => measured > threshold,
            Comparison::AtLeast => measured >= threshold,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Clique {
        vertices: Vec<usize>,
    },
    Multipartite(MultipartiteWitness),
    HalfGraph {
        bipartite: bool,
        #[serde(flatten)]
        witness: HalfGraphWitness,
    },
    NestedComplexity(NestedComplexitySequence),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiredTest {
    pub test_name: TestName,
    pub comparison: Comparison,
    pub threshold: u64,
    pub measured_value: u64,
    pub certificate: Certificate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TestStatus {
    Fired,
    Passed,
    Skipped,
    NotRun,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TestOutcome {
    pub test_name: TestName,
    pub status: TestStatus,
    pub comparison: Comparison,
    pub threshold: u64,
    pub measured_value: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Informational {
    pub clique_number: Option<usize>,
    pub chromatic_number: Option<usize>,
    pub density: Option<String>,
    pub ncl_value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ncl_skipped_reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub schema_version: u32,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub surface: SurfaceParams,
    pub verdict: Verdict,
    pub fired_tests: Vec<FiredTest>,
    pub tests: Vec<TestOutcome>,
    pub informational: Informational,
    pub warnings: Vec<String>,
    pub disclaimers: Vec<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ObstructConfig {
    /// Keep running after the first fired test.
    pub all_tests: bool,
    pub limits: SearchLimits,
}

struct Measurement {
    value: u64,
    certificate: Option<Certificate>,
}

/// Runs the obstruction tests in order and assembles a report.
///
/// Tests over the configured vertex caps are recorded as skipped. Every
/// certificate in the report is re-checked by an independent validator
/// before the report is returned.
pub fn obstruct(graph: &Graph, surface: &SurfaceParams, config: &ObstructConfig) -> Result<ObstructionReport> {
    let detectors = config.limits.detectors_allow(graph);
    let ncl_ok = config.limits.ncl_allows(graph);
    let mut tests = Vec::new();
    let mut fired_tests = Vec::new();
    let mut informational = Informational::default();
    let mut stopped = false;

    for name in TestName::ORDER {
        let (comparison, threshold) = threshold_for(name, surface);
        let allowed = if name == TestName::Ncl { ncl_ok } else { detectors };
        let mut outcome = TestOutcome {
            test_name: name,
            status: TestStatus::NotRun,
            comparison,
            threshold,
            measured_value: None,
            note: None,
        };
        if stopped {
            outcome.note = Some("short-circuited after an earlier test fired".into());
            tests.push(outcome);
            continue;
        }
        if !allowed {
            outcome.status = TestStatus::Skipped;
            outcome.note = Some(format!(
                "graph has {} vertices, above the cap of {}",
                graph.vertex_count(),
                if name == TestName::Ncl {
                    config.limits.ncl_cap
                } else {
                    config.limits.detector_cap
                }
            ));
            tests.push(outcome);
            continue;
        }
        let measurement = measure(name, graph, surface, config)?;
        outcome.measured_value = Some(measurement.value);
        match name {
            TestName::Clique => informational.clique_number = Some(measurement.value as usize),
            TestName::Ncl => informational.ncl_value = Some(measurement.value as usize),
            _ => {}
        }
        if comparison.fires(measurement.value, threshold) {
            outcome.status = TestStatus::Fired;
            fired_tests.push(FiredTest {
                test_name: name,
                comparison,
                threshold,
                measured_value: measurement.value,
                certificate: measurement.certificate.expect("fired tests carry a certificate"),
            });
            stopped = !config.all_tests;
        } else {
            outcome.status = TestStatus::Passed;
        }
        tests.push(outcome);
    }

    if informational.ncl_value.is_none() {
        let ncl_outcome = tests.last().expect("five tests");
        informational.ncl_skipped_reason = ncl_outcome.note.clone();
    }
    if detectors {
        if informational.clique_number.is_none() {
            informational.clique_number = Some(maximum_clique(graph)?.len());
        }
        informational.chromatic_number = Some(chromatic_number(graph)?);
    }
    informational.density = density(graph).ok().map(|d| d.to_string());

    let mut warnings = Vec::new();
    if tests.iter().all(|t| t.status == TestStatus::Skipped) {
        warnings.push("every test exceeded its size cap; nothing was checked".to_string());
    }
    if surface.exceptional {
        warnings.push(format!(
            "(g, p) = ({}, {}) is exceptional: upper density 0 and ℓ = 1",
            surface.genus, surface.punctures
        ));
    }

    let report = ObstructionReport {
        schema_version: SCHEMA_VERSION,
        vertex_count: graph.vertex_count(),
        edge_count: graph.edge_count(),
        surface: *surface,
        verdict: if fired_tests.is_empty() {
            Verdict::NoObstructionFound
        } else {
            Verdict::Obstructed
        },
        fired_tests,
        tests,
        informational,
        warnings,
        disclaimers: DISCLAIMERS.iter().map(|s| s.to_string()).collect(),
    };
    report
        .revalidate(graph)
        .map_err(|e| Error::InvalidParameter(format!("internal error: certificate failed revalidation: {e}")))?;
    Ok(report)
}

fn threshold_for(name: TestName, s: &SurfaceParams) -> (Comparison, u64) {
    match name {
        TestName::Clique => (Comparison::Greater, s.xi),
        TestName::InducedMultipartite => (Comparison::Greater, s.multipartite_bound),
        TestName::BipartiteHalfGraph => (Comparison::AtLeast, s.bipartite_half_graph_bound),
        TestName::HalfGraph => (Comparison::Greater, s.ncl_bound),
        TestName::Ncl => (Comparison::Greater, s.ncl_bound),
    }
}

fn measure(name: TestName, graph: &Graph, s: &SurfaceParams, config: &ObstructConfig) -> Result<Measurement> {
    Ok(match name {
        TestName::Clique => {
            let clique = maximum_clique(graph)?;
            Measurement {
                value: clique.len() as u64,
                certificate: Some(Certificate::Clique { vertices: clique }),
            }
        }
        TestName::InducedMultipartite => {
            // Largest r <= ℓ + 1 with an induced K_r(2); the family is
            // hereditary in r, so search upwards.
            let mut value = 0;
            let mut witness = None;
            for r in 1..=s.multipartite_bound + 1 {
                match induced_multipartite(graph, r as usize, 2)? {
                    Some(w) => {
                        value = r;
                        witness = Some(w);
                    }
                    None => break,
                }
            }
            Measurement {
                value,
                certificate: witness.map(Certificate::Multipartite),
            }
        }
        TestName::BipartiteHalfGraph | TestName::HalfGraph => {
            let bipartite = name == TestName::BipartiteHalfGraph;
            let cap = if bipartite {
                s.bipartite_half_graph_bound
            } else {
                s.ncl_bound + 1
            };
            let (height, witness) = half_graph_height(graph, bipartite, Some(cap as usize))?;
            Measurement {
                value: height as u64,
                certificate: witness.map(|witness| Certificate::HalfGraph { bipartite, witness }),
            }
        }
        TestName::Ncl => {
            let outcome = ncl_exact_with_cap(graph, true, config.limits.ncl_cap)?;
            Measurement {
                value: outcome.value as u64,
                certificate: outcome.certificate.map(Certificate::NestedComplexity),
            }
        }
    })
}

impl Certificate {
    /// Re-checks the certificate against the graph and the value it claims.
    pub fn validate(&self, graph: &Graph, measured: u64) -> std::result::Result<(), String> {
        match self {
            Certificate::Clique { vertices } => {
                validate_clique(graph, vertices)?;
                check_size(vertices.len(), measured)
            }
            Certificate::Multipartite(w) => w.validate(graph, measured as usize, 2),
            Certificate::HalfGraph { bipartite, witness } => {
                witness.validate(graph, *bipartite)?;
                check_size(witness.height, measured)
            }
            Certificate::NestedComplexity(seq) => {
                match certificate_violation(graph, seq).map_err(|e| e.to_string())? {
                    Some(reason) => Err(reason),
                    None => check_size(seq.len(), measured),
                }
            }
        }
    }
}

fn check_size(actual: usize, claimed: u64) -> std::result::Result<(), String> {
    if actual as u64 == claimed {
        Ok(())
    } else {
        Err(format!("certificate has size {actual} but the report claims {claimed}"))
    }
}

impl ObstructionReport {
    /// Checks the report's internal consistency and every certificate.
    pub fn revalidate(&self, graph: &Graph) -> std::result::Result<(), String> {
        if (self.verdict == Verdict::Obstructed) == self.fired_tests.is_empty() {
            return Err("verdict disagrees with the fired tests".into());
        }
        for fired in &self.fired_tests {
            if !fired.comparison.fires(fired.measured_value, fired.threshold) {
                return Err(format!("{:?} does not cross its threshold", fired.test_name));
            }
            fired
                .certificate
                .validate(graph, fired.measured_value)
                .map_err(|e| format!("{:?}: {e}", fired.test_name))?;
        }
        Ok(())
    }
}

/// Whether `K_r(t)` with `t >= 2` is an induced subgraph of the curve graph:
/// exactly when `r <= ℓ`.
pub fn krt_membership(r: u64, t: u64, surface: &SurfaceParams) -> Result<bool> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    if t < 2 {
        return Err(Error::InvalidParameter(format!(
            "membership of K_r(t) is only decided for t >= 2, got t={t}"
        )));
    }
    Ok(r <= surface.multipartite_bound)
}
