//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 usage or input error. A JSON-lines step log goes to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::certificate::{
    build_certificate, forest_decomposition, nonempty_eulerian_witness, AtCertificate,
    DEFAULT_EULERIAN_CAP,
};
use crate::error::Error;
use crate::export::{
    drawing_svg, orientation_from_records, orientation_records, realizer_dot, EdgeRecord,
    RealizerDoc,
};
use crate::planar::{triangulate, validate, GraphData, PlaneGraph, PlaneTriangulation};
use crate::poly::{
    alpha, augmented_polynomial, certify_monomial, coefficient_via_orientations,
    graph_polynomial, Monomial, DEFAULT_EXPANSION_CAP,
};
use crate::schnyder::{
    canonicalize_ccw, orient_triangulation, realizer_from_orientation, schnyder_drawing,
};
use crate::testkit::{stacked_triangulation, GeneratorConfig};

#[derive(Debug, Parser)]
#[command(name = "schnyder-at", version, about = "Schnyder woods and Alon-Tarsi certificates")]
pub struct Cli {
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Largest edge count for Eulerian-structure enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_EULERIAN_CAP)]
    pub cap_eulerian: usize,
    /// Largest edge count for polynomial expansion.
    #[arg(long, global = true, default_value_t = DEFAULT_EXPANSION_CAP)]
    pub cap_expand: usize,
    /// Seed for `gen`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RealizerFormat {
    Json,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum DrawFormat {
    Svg,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a graph JSON file; prints the validation report.
    Validate { input: PathBuf },
    /// Add chords until every face is a triangle.
    Triangulate { input: PathBuf },
    /// Realizer from the chordal procedure.
    Realizer {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = RealizerFormat::Json)]
        format: RealizerFormat,
    },
    /// Counterclockwise internal 3-orientation, by flipping clockwise triangles.
    Canonical {
        input: PathBuf,
        /// Start from this orientation (edge-record JSON) instead of the procedure's.
        #[arg(long)]
        orientation: Option<PathBuf>,
    },
    /// Build and check an Alon-Tarsi certificate.
    Certify { input: PathBuf },
    /// Count Eulerian structures of the certificate orientation.
    EulerianCount { input: PathBuf },
    /// Expand the graph polynomial (or the augmented one of the certificate).
    Polynomial {
        input: PathBuf,
        #[arg(long)]
        augmented: bool,
        /// Print only this coefficient, e.g. `x0^2*x1`.
        #[arg(long)]
        monomial: Option<String>,
    },
    /// Exact Alon-Tarsi number by expansion.
    AtExact { input: PathBuf },
    /// Forest plus acyclic orientation with in-degree at most 2.
    Decompose { input: PathBuf },
    /// Schnyder drawing.
    Draw {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = DrawFormat::Svg)]
        format: DrawFormat,
    },
    /// Random stacked triangulation.
    Gen {
        #[arg(long)]
        n: usize,
    },
}

enum Failure {
    Verification(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(m) => Failure::Verification(format!("internal consistency failure: {m}")),
            other => Failure::Input(other.to_string()),
        }
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn log(&mut self, step: &str, status: &str, detail: Value) {
        let mut entry = json!({ "step": step, "status": status });
        if let (Value::Object(map), Value::Object(extra)) = (&mut entry, detail) {
            map.extend(extra);
        }
        let _ = writeln!(self.stderr, "{entry}");
    }

    fn emit(&mut self, text: &str) -> std::result::Result<(), Failure> {
        let mut text = text.to_string();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &self.cli.out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
            None => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Input(format!("cannot write output: {e}"))),
        }
    }

    fn read_graph(&mut self, path: &Path) -> std::result::Result<PlaneGraph, Failure> {
        let data = read_graph_data(path)?;
        let report = validate(&data);
        if !report.is_valid() {
            let msgs: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
            self.log("validate", "failed", json!({ "violations": msgs }));
            return Err(Failure::Input(format!("invalid graph: {}", msgs.join("; "))));
        }
        self.log(
            "validate",
            "ok",
            json!({ "n": report.vertex_count, "edges": report.edge_count }),
        );
        Ok(PlaneGraph::new(data)?)
    }

    fn read_triangulation(&mut self, path: &Path) -> std::result::Result<PlaneTriangulation, Failure> {
        let g = self.read_graph(path)?;
        if let Ok(t) = PlaneTriangulation::try_from(g.clone()) {
            return Ok(t);
        }
        let (t, added) = triangulate(&g)?;
        self.log("triangulate", "ok", json!({ "added": added }));
        Ok(t)
    }
}

fn read_text(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn read_graph_data(path: &Path) -> std::result::Result<GraphData, Failure> {
    Ok(GraphData::from_json(&read_text(path)?)?)
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

/// Parse `args` (including the program name) and run. Never panics on bad input.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    2
                }
            };
        }
    };
    let mut ctx = Ctx {
        cli: &cli,
        stdout,
        stderr,
    };
    match execute(&mut ctx) {
        Ok(()) => 0,
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(ctx.stderr, "verification failed: {msg}");
            1
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(ctx.stderr, "error: {msg}");
            2
        }
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}

fn execute(ctx: &mut Ctx<'_>) -> std::result::Result<(), Failure> {
    let cli = ctx.cli;
    match &cli.command {
        Command::Validate { input } => {
            let data = read_graph_data(input)?;
            let report = validate(&data);
            ctx.emit(&pretty(&report))?;
            if report.is_valid() {
                ctx.log("validate", "ok", json!({ "triangulation": report.is_triangulation() }));
                Ok(())
            } else {
                ctx.log("validate", "failed", json!({}));
                Err(Failure::Verification(format!(
                    "{} violation(s)",
                    report.violations.len()
                )))
            }
        }
        Command::Triangulate { input } => {
            let g = ctx.read_graph(input)?;
            let (t, added) = triangulate(&g)?;
            ctx.log("triangulate", "ok", json!({ "added": added }));
            ctx.emit(&pretty(&t.to_data()))
        }
        Command::Realizer { input, format } => {
            let t = ctx.read_triangulation(input)?;
            let out = orient_triangulation(&t)?;
            ctx.log("procedure", "ok", json!({ "steps": out.trace.steps.len() }));
            let r = realizer_from_orientation(&out.internal_orientation(&t)?)?;
            check_list(ctx, "realizer", r.violations())?;
            match format {
                RealizerFormat::Json => ctx.emit(&pretty(&RealizerDoc::new(&r))),
                RealizerFormat::Dot => ctx.emit(&realizer_dot(&r)),
            }
        }
        Command::Canonical { input, orientation } => {
            let t = ctx.read_triangulation(input)?;
            let start = match orientation {
                Some(path) => {
                    let records: Vec<EdgeRecord> =
                        serde_json::from_str(&read_text(path)?).map_err(Error::from)?;
                    orientation_from_records(&t, &records)?
                }
                None => orient_triangulation(&t)?.internal_orientation(&t)?,
            };
            let canon = canonicalize_ccw(&start)?;
            let changed = canon
                .heads()
                .iter()
                .zip(start.heads())
                .filter(|(a, b)| a != b)
                .count();
            ctx.log("canonicalize", "ok", json!({ "reversed_edges": changed }));
            ctx.emit(&pretty(&orientation_records(&canon)))
        }
        Command::Certify { input } => {
            let t = ctx.read_triangulation(input)?;
            let cert = build_certificate(&t, cli.cap_eulerian)?;
            ctx.log(
                "certificate",
                "ok",
                json!({
                    "max_aug_indegree": cert.max_aug_indegree,
                    "claimed_bound": cert.claimed_bound,
                }),
            );
            report_eulerian(ctx, &cert)?;
            check_list(ctx, "certificate", cert.violations())?;
            if t.edge_count() <= cli.cap_expand {
                let report = certify_monomial(&cert, cli.cap_expand)?;
                let status = if report.passed() { "ok" } else { "failed" };
                ctx.log("monomial", status, serde_json::to_value(&report).expect("report"));
                if !report.passed() {
                    return Err(Failure::Verification(report.failures.join("; ")));
                }
            } else {
                ctx.log(
                    "monomial",
                    "skipped",
                    json!({ "edges": t.edge_count(), "cap": cli.cap_expand }),
                );
            }
            ctx.emit(&cert.to_json())
        }
        Command::EulerianCount { input } => {
            let t = ctx.read_triangulation(input)?;
            if t.edge_count() > cli.cap_eulerian {
                return Err(Error::CapExceeded {
                    what: "Eulerian enumeration",
                    size: t.edge_count(),
                    cap: cli.cap_eulerian,
                }
                .into());
            }
            let cert = build_certificate(&t, cli.cap_eulerian)?;
            ctx.emit(&pretty(&cert.eulerian))?;
            report_eulerian(ctx, &cert)
        }
        Command::Polynomial {
            input,
            augmented,
            monomial,
        } => {
            let g = ctx.read_graph(input)?;
            let simple = g.to_simple();
            let (p, strengths) = if *augmented {
                let t = PlaneTriangulation::try_from(g)?;
                let cert = build_certificate(&t, 0)?;
                let p = augmented_polynomial(&cert.augmented, cli.cap_expand)?;
                (p, cert.augmented.strengths().to_vec())
            } else {
                (graph_polynomial(&simple, cli.cap_expand)?, vec![1; simple.edge_count()])
            };
            ctx.log("expand", "ok", json!({ "terms": p.term_count() }));
            match monomial {
                Some(text) => {
                    let m = Monomial::parse(text, simple.n())?;
                    let c = p.coefficient(&m);
                    let check = coefficient_via_orientations(&simple, &strengths, &m, cli.cap_expand)?;
                    if c != check {
                        return Err(Failure::Verification(format!(
                            "coefficient of {m}: expansion {c}, orientation sum {check}"
                        )));
                    }
                    ctx.emit(&c.to_string())
                }
                None => ctx.emit(&p.to_text()),
            }
        }
        Command::AtExact { input } => {
            let g = ctx.read_graph(input)?;
            let p = graph_polynomial(&g.to_simple(), cli.cap_expand)?;
            let at = alpha(&p)? + 1;
            ctx.log("expand", "ok", json!({ "terms": p.term_count(), "at": at }));
            ctx.emit(&at.to_string())
        }
        Command::Decompose { input } => {
            let t = ctx.read_triangulation(input)?;
            let d = forest_decomposition(&t)?;
            check_list(ctx, "decompose", d.violations(&t))?;
            ctx.emit(&pretty(&d))
        }
        Command::Draw { input, format } => {
            let t = ctx.read_triangulation(input)?;
            let r = realizer_from_orientation(&orient_triangulation(&t)?.internal_orientation(&t)?)?;
            match format {
                DrawFormat::Svg => {
                    let coords = schnyder_drawing(&r)?;
                    ctx.emit(&drawing_svg(&r, &coords))
                }
                DrawFormat::Dot => ctx.emit(&realizer_dot(&r)),
            }
        }
        Command::Gen { n } => {
            if *n < 3 {
                return Err(Failure::Input(format!("--n must be at least 3, got {n}")));
            }
            let t = stacked_triangulation(GeneratorConfig::stacked(*n, cli.seed));
            ctx.log("gen", "ok", json!({ "n": n, "seed": cli.seed }));
            ctx.emit(&pretty(&t.to_data()))
        }
    }
}

fn check_list(ctx: &mut Ctx<'_>, step: &str, violations: Vec<String>) -> std::result::Result<(), Failure> {
    if violations.is_empty() {
        ctx.log(step, "ok", json!({}));
        Ok(())
    } else {
        ctx.log(step, "failed", json!({ "violations": violations }));
        Err(Failure::Verification(violations.join("; ")))
    }
}

fn report_eulerian(ctx: &mut Ctx<'_>, cert: &AtCertificate) -> std::result::Result<(), Failure> {
    match cert.eulerian {
        None => {
            ctx.log(
                "eulerian",
                "skipped",
                json!({ "edges": cert.graph.edge_count(), "cap": ctx.cli.cap_eulerian }),
            );
            Ok(())
        }
        Some(count) if count.nonempty() == 0 => {
            ctx.log("eulerian", "ok", serde_json::to_value(count).expect("count"));
            Ok(())
        }
        Some(count) => {
            let witness = nonempty_eulerian_witness(&cert.augmented, ctx.cli.cap_eulerian)?
                .unwrap_or_default();
            let arcs: Vec<[usize; 2]> = witness
                .iter()
                .map(|&e| [cert.augmented.tail(e), cert.augmented.head(e)])
                .collect();
            ctx.log(
                "eulerian",
                "failed",
                json!({ "count": count, "witness": arcs }),
            );
            Err(Failure::Verification(format!(
                "nonempty Eulerian structure with arcs {arcs:?}"
            )))
        }
    }
}
