//! Command-line front end.
//!
//! [`run`] takes the argument vector and explicit I/O handles so that every
//! command can be driven in-process by tests. Exit codes: 0 success (or no
//! obstruction found), 1 obstructed or invalid certificate, 2 usage or input
//! error.

use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use curvegraph::experiment::{run_enumeration_experiment, ExperimentConfig, ExperimentMode};
use curvegraph::generators::{EtaAdjacency, GraphFamily};
use curvegraph::invariants::{chromatic_number, clique_number, density, half_graph_height};
use curvegraph::ncl::{self, certificate_violation, ncl_exact_with_cap, ncl_naive, NestedComplexitySequence};
use curvegraph::obstruction::{obstruct, ObstructConfig, TestStatus, Verdict, SCHEMA_VERSION};
use curvegraph::surface::{ratio_string, SurfaceParams};
use curvegraph::{edgelist, graph6, Graph, SearchLimits};

/// Overrides the exact-NCL vertex cap.
pub const NCL_CAP_ENV: &str = "CURVEGRAPH_NCL_CAP";
/// Overrides the vertex cap of the other exponential detectors.
pub const DETECTOR_CAP_ENV: &str = "CURVEGRAPH_DETECTOR_CAP";

const MEMO_NOTE_ABOVE: usize = 20;

#[derive(Parser, Debug)]
#[command(
    name = "curvegraph",
    version,
    about = "Nested complexity length and curve-graph obstructions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph from a named family.
    Gen(GenArgs),
    /// Exact nested complexity length of a graph.
    Ncl {
        /// Graph file (edge list or graph6), `-` for stdin.
        file: String,
        /// Also print an optimal sequence with witnesses.
        #[arg(long)]
        certificate: bool,
        /// Use the direct enumeration (at most 8 vertices).
        #[arg(long)]
        naive: bool,
        #[arg(long)]
        json: bool,
    },
    /// Classical invariants and pattern heights.
    Invariants {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Look for an obstruction to being an induced subgraph of the curve graph.
    Obstruct {
        file: String,
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Run every test instead of stopping at the first that fires.
        #[arg(long)]
        all_tests: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the constants attached to a surface.
    Surface {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check a nested complexity certificate against a graph.
    Verify { graph_file: String, cert_file: String },
    /// Batch experiments.
    Experiment {
        #[command(subcommand)]
        kind: ExperimentKind,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct SurfaceArgs {
    #[arg(long)]
    genus: u32,
    #[arg(long)]
    punctures: u32,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(subcommand)]
    family: FamilyCommand,
    /// Output file, `-` for stdout.
    #[arg(short = 'o', long = "output", global = true, default_value = "-")]
    output: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Subcommand, Debug)]
enum FamilyCommand {
    /// Half-graph of height N (a-side complete, b-side independent).
    #[command(alias = "half_graph")]
    HalfGraph {
        n: usize,
    },
    /// Bipartite half-graph H_N.
    #[command(alias = "bipartite_half_graph")]
    BipartiteHalfGraph {
        n: usize,
    },
    /// Complete R-partite graph with parts of size T.
    Multipartite {
        r: usize,
        t: usize,
    },
    /// Multicurve-plus-transversals model for genus G with P punctures.
    Marking {
        g: u32,
        p: u32,
        #[arg(long, value_enum, default_value_t = EtaArg::All)]
        eta: EtaArg,
    },
    Complete {
        n: usize,
    },
    Edgeless {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// Seeded random graph; PROBABILITY as `a/b` or a decimal.
    Random {
        n: usize,
        probability: String,
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EtaArg {
    None,
    All,
    Path,
}

#[derive(Subcommand, Debug)]
enum ExperimentKind {
    /// Count obstructed graphs among those passing the clique test.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Sample this many random graphs instead of enumerating all.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "1/2")]
        edge_probability: String,
        /// Worker threads (0 = one per core). Output does not depend on it.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Runs one command. `args[0]` is the program name.
pub fn run(args: &[String], stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(stderr, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Context { stdin, stdout, stderr };
    match ctx.dispatch(cli.command) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(ctx.stderr, "error: {message}");
            2
        }
    }
}

struct Context<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

type CmdResult = Result<i32, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

impl Context<'_> {
    fn dispatch(&mut self, command: Command) -> CmdResult {
        match command {
            Command::Gen(args) => self.gen(args),
            Command::Ncl {
                file,
                certificate,
                naive,
                json,
            } => self.ncl(&file, certificate, naive, json),
            Command::Invariants { file, json } => self.invariants(&file, json),
            Command::Obstruct {
                file,
                surface,
                all_tests,
                json,
            } => self.obstruct(&file, surface, all_tests, json),
            Command::Surface { surface, json } => self.surface(surface, json),
            Command::Verify { graph_file, cert_file } => self.verify(&graph_file, &cert_file),
            Command::Experiment {
                kind:
                    ExperimentKind::Enumerate {
                        n,
                        surface,
                        samples,
                        seed,
                        edge_probability,
                        workers,
                        json,
                    },
            } => {
                let surface = surface_params(surface)?;
                let mode = match samples {
                    None => ExperimentMode::Exhaustive,
                    Some(samples) => ExperimentMode::Sampled {
                        samples,
                        seed,
                        edge_probability: ratio_string::parse(&edge_probability)?,
                    },
                };
                let summary = run_enumeration_experiment(&ExperimentConfig {
                    n,
                    surface,
                    mode,
                    workers,
                })
                .map_err(err)?;
                if json {
                    self.print_json(&summary)?;
                } else {
                    let mut rows = vec![
                        ("mode", summary.mode.to_string()),
                        ("n", summary.n.to_string()),
                        ("surface", format!("g={} p={}", summary.genus, summary.punctures)),
                    ];
                    if let (Some(seed), Some(p)) = (summary.seed, summary.edge_probability) {
                        rows.push(("seed", seed.to_string()));
                        rows.push(("edge_probability", p.to_string()));
                    }
                    rows.push(("total", summary.total.to_string()));
                    rows.push(("passed_clique", summary.passed_clique.to_string()));
                    rows.push(("obstructed_among_passed", summary.obstructed_among_passed.to_string()));
                    rows.push((
                        "fraction",
                        match (&summary.fraction, &summary.fraction_decimal) {
                            (Some(f), Some(d)) => format!("{f} ({d})"),
                            _ => "undefined (no graph passed the clique test)".into(),
                        },
                    ));
                    let per_test: Vec<(String, String)> = summary
                        .per_test
                        .iter()
                        .map(|(name, count)| (format!("fired: {}", test_label(*name)), count.to_string()))
                        .collect();
                    let mut all: Vec<(String, String)> = rows.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
                    all.extend(per_test);
                    self.print_table(&all)?;
                }
                Ok(0)
            }
        }
    }

    fn gen(&mut self, args: GenArgs) -> CmdResult {
        let family = match args.family {
            FamilyCommand::HalfGraph { n } => GraphFamily::HalfGraph { n },
            FamilyCommand::BipartiteHalfGraph { n } => GraphFamily::BipartiteHalfGraph { n },
            FamilyCommand::Multipartite { r, t } => GraphFamily::Multipartite { r, t },
            FamilyCommand::Marking { g, p, eta } => GraphFamily::Marking {
                g,
                p,
                eta: match eta {
                    EtaArg::None => EtaAdjacency::None,
                    EtaArg::All => EtaAdjacency::All,
                    EtaArg::Path => EtaAdjacency::Path,
                },
            },
            FamilyCommand::Complete { n } => GraphFamily::Complete { n },
            FamilyCommand::Edgeless { n } => GraphFamily::Edgeless { n },
            FamilyCommand::Cycle { n } => GraphFamily::Cycle { n },
            FamilyCommand::Random { n, probability, seed } => GraphFamily::Random {
                n,
                edge_probability: ratio_string::parse(&probability)?,
                seed,
            },
        };
        let graph = family.build().map_err(err)?;
        let text = match args.format {
            Format::Edgelist => edgelist::write(&graph),
            Format::Graph6 => format!("{}\n", graph6::encode(&graph)),
        };
        if args.output == "-" {
            self.stdout.write_all(text.as_bytes()).map_err(err)?;
        } else {
            fs::write(&args.output, text).map_err(|e| format!("{}: {e}", args.output))?;
        }
        Ok(0)
    }

    fn ncl(&mut self, file: &str, want_certificate: bool, naive: bool, json: bool) -> CmdResult {
        let graph = self.read_graph(file)?;
        let n = graph.vertex_count();
        if n == 0 {
            writeln!(
                self.stderr,
                "note: the empty graph has no nested complexity sequence; NCL reported as 0"
            )
            .map_err(err)?;
        }
        let (value, certificate) = if naive {
            (ncl_naive(&graph).map_err(err)?, None)
        } else {
            let cap = env_cap(NCL_CAP_ENV, ncl::DEFAULT_VERTEX_CAP)?;
            if n > MEMO_NOTE_ABOVE && n <= cap {
                writeln!(
                    self.stderr,
                    "note: {n} vertices, memo table of {} MiB",
                    ncl::memo_bytes(n) >> 20
                )
                .map_err(err)?;
            }
            let outcome = ncl_exact_with_cap(&graph, want_certificate, cap).map_err(err)?;
            (outcome.value, outcome.certificate)
        };
        if json {
            #[derive(Serialize)]
            struct Out<'a> {
                schema_version: u32,
                ncl: usize,
                method: &'a str,
                certificate: Option<NestedComplexitySequence>,
            }
            self.print_json(&Out {
                schema_version: SCHEMA_VERSION,
                ncl: value,
                method: if naive { "naive" } else { "exact" },
                certificate,
            })?;
        } else {
            writeln!(self.stdout, "{value}").map_err(err)?;
            if let Some(cert) = certificate {
                writeln!(self.stdout, "{}", serde_json::to_string(&cert).map_err(err)?).map_err(err)?;
            }
        }
        Ok(0)
    }

    fn invariants(&mut self, file: &str, json: bool) -> CmdResult {
        let graph = self.read_graph(file)?;
        let limits = limits()?;
        if !limits.detectors_allow(&graph) {
            return Err(format!(
                "graph has {} vertices, above the detector cap of {}",
                graph.vertex_count(),
                limits.detector_cap
            ));
        }
        #[derive(Serialize)]
        struct Out {
            schema_version: u32,
            vertex_count: usize,
            edge_count: usize,
            clique_number: usize,
            chromatic_number: usize,
            density: Option<String>,
            half_graph_height: usize,
            bipartite_half_graph_height: usize,
            ncl: Option<usize>,
        }
        let ncl = if limits.ncl_allows(&graph) {
            Some(ncl_exact_with_cap(&graph, false, limits.ncl_cap).map_err(err)?.value)
        } else {
            None
        };
        let out = Out {
            schema_version: SCHEMA_VERSION,
            vertex_count: graph.vertex_count(),
            edge_count: graph.edge_count(),
            clique_number: clique_number(&graph).map_err(err)?,
            chromatic_number: chromatic_number(&graph).map_err(err)?,
            density: density(&graph).ok().map(|d| d.to_string()),
            half_graph_height: half_graph_height(&graph, false, None).map_err(err)?.0,
            bipartite_half_graph_height: half_graph_height(&graph, true, None).map_err(err)?.0,
            ncl,
        };
        if json {
            self.print_json(&out)?;
        } else {
            let opt = |v: &Option<String>| v.clone().unwrap_or_else(|| "n/a".into());
            self.print_table(&[
                ("vertex_count".into(), out.vertex_count.to_string()),
                ("edge_count".into(), out.edge_count.to_string()),
                ("clique_number".into(), out.clique_number.to_string()),
                ("chromatic_number".into(), out.chromatic_number.to_string()),
                ("density".into(), opt(&out.density)),
                ("half_graph_height".into(), out.half_graph_height.to_string()),
                (
                    "bipartite_half_graph_height".into(),
                    out.bipartite_half_graph_height.to_string(),
                ),
                ("ncl".into(), opt(&out.ncl.map(|v| v.to_string()))),
            ])?;
        }
        Ok(0)
    }

    fn obstruct(&mut self, file: &str, surface: SurfaceArgs, all_tests: bool, json: bool) -> CmdResult {
        let graph = self.read_graph(file)?;
        let surface = surface_params(surface)?;
        let config = ObstructConfig {
            all_tests,
            limits: limits()?,
        };
        let report = obstruct(&graph, &surface, &config).map_err(err)?;
        if json {
            self.print_json(&report)?;
        } else {
            let verdict = match report.verdict {
                Verdict::Obstructed => "obstructed",
                Verdict::NoObstructionFound => "no_obstruction_found",
            };
            writeln!(self.stdout, "verdict: {verdict}").map_err(err)?;
            writeln!(
                self.stdout,
                "surface: g={} p={} (xi={}, ncl_bound={}, multipartite_bound={})",
                surface.genus, surface.punctures, surface.xi, surface.ncl_bound, surface.multipartite_bound
            )
            .map_err(err)?;
            for test in &report.tests {
                let cmp = serde_json::to_value(test.comparison).map_err(err)?;
                let status = match test.status {
                    TestStatus::Fired => "FIRED",
                    TestStatus::Passed => "passed",
                    TestStatus::Skipped => "skipped",
                    TestStatus::NotRun => "not run",
                };
                let measured = test.measured_value.map_or("-".to_string(), |v| v.to_string());
                writeln!(
                    self.stdout,
                    "  {:<22} {:<8} measured {:>3}  fires if {} {}",
                    test_label(test.test_name),
                    status,
                    measured,
                    cmp.as_str().unwrap_or("?"),
                    test.threshold
                )
                .map_err(err)?;
                if let (TestStatus::Skipped, Some(note)) = (test.status, &test.note) {
                    writeln!(self.stdout, "    ({note})").map_err(err)?;
                }
            }
            for fired in &report.fired_tests {
                writeln!(
                    self.stdout,
                    "certificate ({}): {}",
                    test_label(fired.test_name),
                    serde_json::to_string(&fired.certificate).map_err(err)?
                )
                .map_err(err)?;
            }
            let info = &report.informational;
            let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
            writeln!(
                self.stdout,
                "informational: clique_number={} chromatic_number={} density={} ncl={}",
                show(info.clique_number),
                show(info.chromatic_number),
                info.density.as_deref().unwrap_or("-"),
                show(info.ncl_value)
            )
            .map_err(err)?;
            for warning in &report.warnings {
                writeln!(self.stdout, "warning: {warning}").map_err(err)?;
            }
            for line in &report.disclaimers {
                writeln!(self.stdout, "note: {line}").map_err(err)?;
            }
        }
        Ok(match report.verdict {
            Verdict::Obstructed => 1,
            Verdict::NoObstructionFound => 0,
        })
    }

    fn surface(&mut self, surface: SurfaceArgs, json: bool) -> CmdResult {
        let s = surface_params(surface)?;
        if json {
            self.print_json(&SurfaceOut {
                schema_version: SCHEMA_VERSION,
                surface: s,
            })?;
        } else {
            self.print_table(&[
                ("genus".into(), s.genus.to_string()),
                ("punctures".into(), s.punctures.to_string()),
                ("xi".into(), s.xi.to_string()),
                ("ncl_bound".into(), s.ncl_bound.to_string()),
                ("multipartite_bound".into(), s.multipartite_bound.to_string()),
                ("stability_k".into(), s.stability_k.to_string()),
                (
                    "bipartite_half_graph_bound".into(),
                    s.bipartite_half_graph_bound.to_string(),
                ),
                ("upper_density".into(), s.upper_density.to_string()),
                ("exceptional".into(), s.exceptional.to_string()),
            ])?;
        }
        Ok(0)
    }

    fn verify(&mut self, graph_file: &str, cert_file: &str) -> CmdResult {
        let graph = self.read_graph(graph_file)?;
        let text = self.read_text(cert_file)?;
        let cert: NestedComplexitySequence = serde_json::from_str(&text).map_err(|e| format!("{cert_file}: {e}"))?;
        match certificate_violation(&graph, &cert).map_err(err)? {
            None => {
                writeln!(
                    self.stdout,
                    "valid: nested complexity sequence of length {}",
                    cert.len()
                )
                .map_err(err)?;
                Ok(0)
            }
            Some(reason) => {
                writeln!(self.stdout, "invalid: {reason}").map_err(err)?;
                Ok(1)
            }
        }
    }

    fn read_text(&mut self, path: &str) -> Result<String, String> {
        if path == "-" {
            let mut text = String::new();
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(text)
        } else {
            fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
        }
    }

    fn read_graph(&mut self, path: &str) -> Result<Graph, String> {
        let text = self.read_text(path)?;
        parse_graph(&text).map_err(|e| format!("{path}: {e}"))
    }

    fn print_json<T: Serialize>(&mut self, value: &T) -> Result<(), String> {
        let text = serde_json::to_string_pretty(value).map_err(err)?;
        writeln!(self.stdout, "{text}").map_err(err)
    }

    fn print_table(&mut self, rows: &[(String, String)]) -> Result<(), String> {
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (key, value) in rows {
            writeln!(self.stdout, "{key:<width$}  {value}").map_err(err)?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct SurfaceOut {
    schema_version: u32,
    #[serde(flatten)]
    surface: SurfaceParams,
}

fn test_label(name: curvegraph::obstruction::TestName) -> String {
    serde_json::to_value(name)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn surface_params(args: SurfaceArgs) -> Result<SurfaceParams, String> {
    SurfaceParams::new(args.genus, args.punctures).map_err(err)
}

fn env_cap(var: &str, default: usize) -> Result<usize, String> {
    match std::env::var(var) {
        Ok(value) => value.trim().parse().map_err(|e| format!("{var}={value:?}: {e}")),
        Err(_) => Ok(default),
    }
}

fn limits() -> Result<SearchLimits, String> {
    let defaults = SearchLimits::default();
    Ok(SearchLimits {
        detector_cap: env_cap(DETECTOR_CAP_ENV, defaults.detector_cap)?,
        ncl_cap: env_cap(NCL_CAP_ENV, defaults.ncl_cap)?,
    })
}

/// Reads an edge list or a single graph6 line. An edge list is recognised
/// by its `n m` header; anything else is treated as graph6 (optionally with
/// the `>>graph6<<` prefix).
pub fn parse_graph(text: &str) -> curvegraph::Result<Graph> {
    let content: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    let looks_like_edgelist = content
        .first()
        .is_some_and(|l| l.split_whitespace().all(|t| t.bytes().all(|b| b.is_ascii_digit())));
    if looks_like_edgelist {
        return edgelist::parse(text);
    }
    match content.as_slice() {
        [line] => graph6::decode(line.strip_prefix(">>graph6<<").unwrap_or(line).as_bytes()),
        [] => Err(curvegraph::Error::Graph6("empty input".into())),
        _ => Err(curvegraph::Error::Graph6("expected exactly one graph6 line".into())),
    }
}
