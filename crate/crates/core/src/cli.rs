//! Command-line driver. Exit status: 0 success, 1 counterexample or
//! disagreement, 2 input error (one diagnostic line on stderr).

use crate::error::{Error, Result};
use crate::lab::{self, SearchQuery, SweepOptions, Tag, TheoremId, TheoremReport};
use crate::maps::{FiniteMap, MapDoc};
use crate::profile::SpaceProfile;
use crate::separation::classify_space;
use crate::space::{Space, SpaceDoc};
use crate::tags::{GenClassTag, KernelClassTag, MapPropertyTag};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(name = "topolab", version, about = "Finite topological spaces: classify, enumerate, verify")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Worker threads for sweeps (output does not depend on this).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Include wall-clock seconds in sweep reports.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a space (or map) document.
    Validate { file: PathBuf },
    /// Membership of one subset in the derived set classes.
    ClassifySet {
        file: PathBuf,
        /// Comma-separated point labels; "" is the empty set.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long)]
        class: Option<String>,
    },
    /// Every separation axiom and characterization of a space.
    ClassifySpace { file: PathBuf },
    /// Properties of a map document.
    CheckMap {
        file: PathBuf,
        #[arg(long)]
        property: Option<String>,
    },
    /// All topologies on n labeled points.
    Enumerate {
        #[arg(long)]
        points: usize,
        #[arg(long)]
        up_to_homeo: bool,
        #[arg(long)]
        count_only: bool,
    },
    /// Search for a counterexample to "hypotheses ⇒ conclusion".
    Implication {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        points: usize,
    },
    /// Sweep a registered statement (or `all`).
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        points: Option<usize>,
    },
    /// Compare fixture claims with engine output.
    PaperReport,
    /// Re-check a counterexample witness document.
    Replay { file: PathBuf },
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let text = e.to_string();
            let line = text.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| {
        Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }
        .to_string()
    })
}

fn load_space(path: &Path) -> std::result::Result<Space, String> {
    let text = read(path)?;
    let doc: SpaceDoc = serde_json::from_str(&text).map_err(|e| Error::Document(e.to_string()).to_string())?;
    Space::from_doc(&doc).map_err(|e| e.render(&doc.points))
}

fn load_map(path: &Path) -> std::result::Result<FiniteMap, String> {
    let text = read(path)?;
    let doc: MapDoc = serde_json::from_str(&text).map_err(|e| Error::Document(e.to_string()).to_string())?;
    FiniteMap::from_doc(&doc, path.parent()).map_err(|e| e.to_string())
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn emit(out: &mut dyn Write, text: &str) -> std::result::Result<(), String> {
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())
}

fn json_line(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("output values serialize");
    s.push('\n');
    s
}

fn execute(cli: &Cli, out: &mut dyn Write) -> std::result::Result<i32, String> {
    let opts = SweepOptions {
        workers: cli.workers,
        timings: cli.timings,
    };
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Validate { file } => {
            let text = read(file)?;
            let value: Value = serde_json::from_str(&text).map_err(|e| Error::Document(e.to_string()).to_string())?;
            if value.get("map").is_some() {
                let f = load_map(file)?;
                let body = if json {
                    json_line(&json!({"valid": true, "kind": "map", "domain_points": f.domain().n(), "codomain_points": f.codomain().n()}))
                } else {
                    format!("valid map: {} → {} points\n", f.domain().n(), f.codomain().n())
                };
                emit(out, &body)?;
            } else {
                let s = load_space(file)?;
                let body = if json {
                    json_line(&json!({"valid": true, "kind": "space", "points": s.n(), "opens": s.opens().len()}))
                } else {
                    format!("valid space: {} points, {} open sets\n", s.n(), s.opens().len())
                };
                emit(out, &body)?;
            }
            Ok(0)
        }
        Command::ClassifySet { file, set, class } => {
            let s = load_space(file)?;
            let a = lift(s.parse_set(set))?;
            let p = SpaceProfile::new(&s);
            let tags: Vec<Tag> = match class {
                Some(c) => {
                    let t: Tag = lift(c.parse())?;
                    if !matches!(t, Tag::Open | Tag::Closed | Tag::Kernel(_) | Tag::Gen(_)) {
                        return Err(Error::UnknownTag(format!("{c} is not a set class")).to_string());
                    }
                    vec![t]
                }
                None => [Tag::Open, Tag::Closed]
                    .into_iter()
                    .chain(KernelClassTag::ALL.iter().map(|t| Tag::Kernel(*t)))
                    .chain(GenClassTag::ALL.iter().map(|t| Tag::Gen(*t)))
                    .collect(),
            };
            let value = |t: Tag| match t {
                Tag::Open => p.is_open(a),
                Tag::Closed => p.is_closed(a),
                Tag::Kernel(k) => p.kernel_class(a, k),
                Tag::Gen(g) => p.gen_class(a, g),
                _ => unreachable!("set classes only"),
            };
            let body = if json {
                let map: Map<String, Value> = tags.iter().map(|t| (t.name().to_string(), Value::Bool(value(*t)))).collect();
                json_line(&map)
            } else if class.is_some() {
                format!("{}\n", value(tags[0]))
            } else {
                tags.iter().map(|t| format!("{:<16} {}\n", t.name(), value(*t))).collect()
            };
            emit(out, &body)?;
            Ok(0)
        }
        Command::ClassifySpace { file } => {
            let s = load_space(file)?;
            let v = classify_space(&SpaceProfile::new(&s));
            let body = if json {
                json_line(&v)
            } else {
                v.entries().iter().map(|(k, b)| format!("{k:<24} {b}\n")).collect()
            };
            emit(out, &body)?;
            Ok(0)
        }
        Command::CheckMap { file, property } => {
            let f = load_map(file)?;
            let body = match property {
                Some(p) => {
                    let tag: MapPropertyTag = lift(p.parse())?;
                    let b = f.property(tag);
                    if json {
                        json_line(&json!({ tag.name(): b }))
                    } else {
                        format!("{b}\n")
                    }
                }
                None => {
                    let v = f.classify();
                    if json {
                        json_line(&v)
                    } else {
                        v.entries().iter().map(|(t, b)| format!("{:<26} {b}\n", t.name())).collect()
                    }
                }
            };
            emit(out, &body)?;
            Ok(0)
        }
        Command::Enumerate {
            points,
            up_to_homeo,
            count_only,
        } => {
            let spaces = opts.run(|| lab::enumerate_topologies(*points, *up_to_homeo)).and_then(|r| r);
            let spaces = lift(spaces)?;
            let body = if *count_only {
                if json {
                    json_line(&json!({"points": points, "up_to_homeo": up_to_homeo, "count": spaces.len()}))
                } else {
                    format!("{}\n", spaces.len())
                }
            } else if json {
                spaces.iter().map(|s| json_line(&s.to_doc(""))).collect()
            } else {
                spaces
                    .iter()
                    .map(|s| {
                        let opens: Vec<String> = s.opens().iter().map(|u| s.show(*u)).collect();
                        format!("{}\n", opens.join(" "))
                    })
                    .collect()
            };
            emit(out, &body)?;
            Ok(0)
        }
        Command::Implication { from, to, points } => {
            let q = lift(SearchQuery::parse(from, to, *points))?;
            let report = lift(lab::check_implication(&q, &opts))?;
            emit(out, &render_reports(std::slice::from_ref(&report), json))?;
            Ok(if report.is_verified() { 0 } else { 1 })
        }
        Command::Verify { theorem, points } => {
            let reports = if theorem == "all" {
                lift(lab::verify_all(*points, &opts))?
            } else {
                let id: TheoremId = lift(theorem.parse())?;
                vec![lift(lab::verify_theorem(id, *points, &opts))?]
            };
            emit(out, &render_reports(&reports, json))?;
            Ok(if reports.iter().all(|r| r.is_verified()) { 0 } else { 1 })
        }
        Command::PaperReport => {
            let report = lift(lab::paper_report(&opts))?;
            let body = if json {
                report.to_json_lines()
            } else {
                render_paper_report(&report)
            };
            emit(out, &body)?;
            Ok(if report.disagreements() == 0 { 0 } else { 1 })
        }
        Command::Replay { file } => {
            let text = read(file)?;
            let w: lab::Witness = serde_json::from_str(&text).map_err(|e| Error::Document(e.to_string()).to_string())?;
            let outcome = lift(lab::replay(&w))?;
            let (name, detail, code) = match &outcome {
                lab::sweep::Outcome::Fails(d) => ("counterexample", d.as_str(), 1),
                lab::sweep::Outcome::Holds => ("holds", "", 0),
                lab::sweep::Outcome::Vacuous => ("vacuous", "", 0),
            };
            let body = if json {
                json_line(&json!({"theorem": w.theorem, "clause": w.clause, "outcome": name, "detail": detail}))
            } else if detail.is_empty() {
                format!("{} {}: {name}\n", w.theorem, w.clause)
            } else {
                format!("{} {}: {name}: {detail}\n", w.theorem, w.clause)
            };
            emit(out, &body)?;
            Ok(code)
        }
    }
}

fn render_reports(reports: &[TheoremReport], json: bool) -> String {
    if json {
        return reports.iter().map(json_line).collect();
    }
    let mut s = String::new();
    for r in reports {
        s.push_str(&format!(
            "{:<8} bound {}  {:<14} instances {}",
            r.id,
            r.bound,
            r.verdict.name(),
            r.instances
        ));
        if let Some(t) = r.seconds {
            s.push_str(&format!("  {t:.2}s"));
        }
        s.push('\n');
        for c in &r.clauses {
            s.push_str(&format!(
                "    {:<52} {:<14} applicable {}\n",
                c.clause,
                c.verdict.name(),
                c.applicable
            ));
            if let Some(w) = &c.counterexample {
                s.push_str(&format!("        witness: {}\n", w.detail));
                s.push_str(&format!(
                    "        instance: {}\n",
                    serde_json::to_string(&w.instance).expect("instances serialize")
                ));
            }
        }
        for f in &r.formalization {
            s.push_str(&format!("    reading: {f}\n"));
        }
    }
    s
}

fn render_paper_report(r: &lab::DiscrepancyReport) -> String {
    let mut s = String::from("formalizations:\n");
    for f in &r.formalizations {
        s.push_str(&format!("  {f}\n"));
    }
    s.push('\n');
    for row in &r.rows {
        s.push_str(&format!(
            "{:<9} {:<34} {:<46} expected {} | engine {}\n",
            row.status.name(),
            row.fixture,
            row.claim,
            row.expected,
            row.engine
        ));
        if let Some(w) = &row.witness {
            s.push_str(&format!("          witness: {w}\n"));
        }
    }
    s.push_str("\noperator observations:\n");
    for o in &r.observations {
        s.push_str(&format!(
            "  {:<11} {:<11} n ≤ {}  violations {}\n",
            o.operator, o.property, o.max_points, o.violations
        ));
        if let Some(w) = &o.witness {
            s.push_str(&format!("      first: {w}\n"));
        }
    }
    s.push_str(&format!("\n{} disagreement(s)\n", r.disagreements()));
    s
}
