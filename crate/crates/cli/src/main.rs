use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use vknot::report::{compat_report, genus_report, invariants_report, labels_json, polynomial_json, trace_report};
use vknot::*;

#[derive(Parser, Debug)]
#[command(name = "vknot", version, about = "Invariants and cobordisms of virtual knots given as signed Gauss codes")]
struct Cli {
    #[command(flatten)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Format {
    /// Print JSON (the default)
    #[arg(long, global = true, conflicts_with = "plain")]
    json: bool,
    /// Print `key: value` lines instead of JSON
    #[arg(long, global = true)]
    plain: bool,
}

#[derive(Args, Debug, Clone)]
struct Pin {
    /// Pin the base label of each component, e.g. `--pin=0,-3`
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pin: Option<Vec<i64>>,
}

impl Pin {
    fn mode(&self) -> LabelingMode {
        match &self.pin {
            Some(b) => LabelingMode::Pinned(b.clone()),
            None => LabelingMode::Symbolic,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a Gauss code and print it in canonical form
    Parse { code: String },
    /// Affine index polynomial, writhes, weights and genus data
    Invariants {
        code: String,
        #[command(flatten)]
        pin: Pin,
    },
    /// Whether a link admits an affine labeling (exit status 1 if not)
    Compat { code: String },
    /// Reverse, mirror or switch a diagram
    Transform {
        #[arg(value_enum)]
        kind: TransformKind,
        code: String,
        /// Crossing to switch (for `switch`; all crossings when omitted)
        #[arg(long)]
        crossing: Option<u32>,
    },
    /// Connected sum of two knots, cut at the arcs after the given positions
    ConnectSum {
        first: String,
        second: String,
        #[arg(long, default_value_t = 0)]
        arc1: usize,
        #[arg(long, default_value_t = 0)]
        arc2: usize,
    },
    /// Oriented smoothing of one or more crossings
    Smooth {
        code: String,
        #[arg(long = "crossing", required = true)]
        crossings: Vec<u32>,
    },
    /// Smooth every crossing of weight zero under a pinned labeling
    Reduce {
        code: String,
        /// Base labels (zero for every component when omitted)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        pin: Option<Vec<i64>>,
    },
    /// Seifert genus and four-ball genus bounds of a knot
    Genus { code: String },
    /// Apply random Reidemeister moves and print the trace
    Scramble {
        code: String,
        #[arg(long, default_value_t = 10)]
        moves: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Cobordism traces
    Trace {
        #[command(subcommand)]
        action: TraceAction,
    },
    /// Invariants for every line of the given files (`-` reads stdin)
    Batch {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        /// Worker threads; 1 runs serially
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum TraceAction {
    /// Replay a trace file and report its genus and the polynomial at each level
    Verify {
        path: PathBuf,
        /// Starting diagram, when the file holds only the event list
        #[arg(long)]
        start: Option<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TransformKind {
    Reverse,
    MirrorFlat,
    MirrorVertical,
    Switch,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TraceFile {
    Full { start: String, events: Vec<CobordismEvent> },
    Events(Vec<CobordismEvent>),
}

enum Failure {
    /// Valid request, but the answer is negative (an incompatible link).
    Negative(Value),
    Domain(Value),
    Input(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let v = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
        if e.is_input_error() { Failure::Input(v) } else { Failure::Domain(v) }
    }
}

fn input_failure(kind: &str, message: impl std::fmt::Display) -> Failure {
    Failure::Input(json!({ "error": { "kind": kind, "message": message.to_string() } }))
}

fn read_path(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| input_failure("io", e))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| input_failure("io", format!("{}: {e}", path.display())))
    }
}

fn batch_line(file: &str, line: usize, code: &str) -> Value {
    match parse(code).and_then(|d| invariants_report(&d, &LabelingMode::Symbolic)) {
        Ok(report) => json!({ "file": file, "line": line, "code": code, "report": report }),
        Err(e) => json!({
            "file": file,
            "line": line,
            "code": code,
            "error": { "kind": e.kind(), "message": e.to_string() },
        }),
    }
}

fn batch(paths: &[PathBuf], jobs: Option<usize>) -> Result<Value, Failure> {
    let mut lines = Vec::new();
    for path in paths {
        let text = read_path(path)?;
        let name = path.display().to_string();
        for (i, line) in text.lines().enumerate() {
            let code = line.trim();
            if code.is_empty() || code.starts_with('#') {
                continue;
            }
            lines.push((name.clone(), i + 1, code.to_string()));
        }
    }
    let run = |(file, line, code): &(String, usize, String)| batch_line(file, *line, code);
    let reports: Vec<Value> = match jobs {
        Some(1) => lines.iter().map(run).collect(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| input_failure("threads", e))?
            .install(|| lines.par_iter().map(run).collect()),
        None => lines.par_iter().map(run).collect(),
    };
    Ok(Value::Array(reports))
}

fn run(command: Command) -> Result<Value, Failure> {
    Ok(match command {
        Command::Parse { code } => {
            let d = parse(&code)?;
            json!({
                "diagram": d.to_string(),
                "canonical": serialize(&d),
                "components": d.num_components(),
                "crossings": d.crossing_count(),
            })
        }
        Command::Invariants { code, pin } => invariants_report(&parse(&code)?, &pin.mode())?,
        Command::Compat { code } => {
            let report = compat_report(&parse(&code)?);
            if report["compatible"] == json!(false) {
                return Err(Failure::Negative(report));
            }
            report
        }
        Command::Transform { kind, code, crossing } => {
            let d = parse(&code)?;
            let out = match (kind, crossing) {
                (TransformKind::Reverse, _) => reverse(&d),
                (TransformKind::MirrorFlat, _) | (TransformKind::Switch, None) => switch_all(&d),
                (TransformKind::MirrorVertical, _) => vertical_mirror(&d),
                (TransformKind::Switch, Some(id)) => switch_crossing(&d, id)?,
            };
            json!({ "diagram": out.to_string(), "canonical": serialize(&out) })
        }
        Command::ConnectSum { first, second, arc1, arc2 } => {
            let (k1, k2) = (parse(&first)?, parse(&second)?);
            let out = connected_sum(&k1, ArcRef::new(0, arc1), &k2, ArcRef::new(0, arc2))?;
            let p = affine_index_polynomial(&out, &LabelingMode::Symbolic)?;
            json!({ "diagram": out.to_string(), "polynomial": p.to_string(), "polynomial_terms": polynomial_json(&p) })
        }
        Command::Smooth { code, crossings } => {
            let out = smooth_crossings(&parse(&code)?, &crossings)?;
            json!({ "diagram": out.to_string(), "components": out.num_components() })
        }
        Command::Reduce { code, pin } => {
            let d = parse(&code)?;
            let mode = match pin {
                Some(b) => LabelingMode::Pinned(b),
                None => LabelingMode::zeros(&d),
            };
            let l = compute_labeling(&d, &mode)?;
            let (out, ol) = null_weight_reduction(&d, &l)?;
            let smoothed: Vec<u32> =
                d.crossing_ids().into_iter().filter(|c| !out.crossing_ids().contains(c)).collect();
            let p = affine_index_polynomial(&out, &LabelingMode::Pinned(ol.pinned_bases().unwrap_or_default()))?;
            json!({
                "diagram": out.to_string(),
                "components": out.num_components(),
                "smoothed": smoothed,
                "labels": labels_json(&ol),
                "polynomial": p.to_string(),
            })
        }
        Command::Genus { code } => genus_report(&parse(&code)?)?,
        Command::Scramble { code, moves, seed } => {
            let (out, trace) = scramble(&parse(&code)?, moves, seed);
            json!({ "diagram": out.to_string(), "trace": trace })
        }
        Command::Trace { action: TraceAction::Verify { path, start } } => {
            let text = read_path(&path)?;
            let file: TraceFile = serde_json::from_str(&text).map_err(|e| input_failure("trace_format", e))?;
            let (start, events) = match (file, start) {
                (TraceFile::Full { start, events }, None) => (start, events),
                (TraceFile::Full { events, .. }, Some(s)) | (TraceFile::Events(events), Some(s)) => (s, events),
                (TraceFile::Events(_), None) => {
                    return Err(input_failure("trace_format", "event list without a starting diagram; pass --start"))
                }
            };
            let trace = CobordismTrace { start: parse(&start)?, events };
            trace_report(&replay(&trace)?)
        }
        Command::Batch { paths, jobs } => batch(&paths, jobs)?,
    })
}

fn plain(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}\n"),
                other => format!("{k}: {other}\n"),
            })
            .collect(),
        Value::Array(items) => items.iter().map(|i| format!("{}\n", plain(i).trim_end())).collect::<Vec<_>>().join("\n"),
        other => format!("{other}\n"),
    }
}

fn render(v: &Value, as_plain: bool) -> String {
    if as_plain {
        plain(v)
    } else {
        format!("{}\n", serde_json::to_string_pretty(v).expect("values serialize"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_plain = cli.format.plain;
    match run(cli.command) {
        Ok(v) => {
            print!("{}", render(&v, as_plain));
            ExitCode::SUCCESS
        }
        Err(Failure::Negative(v)) => {
            print!("{}", render(&v, as_plain));
            ExitCode::from(1)
        }
        Err(Failure::Domain(v)) => {
            eprint!("{}", render(&v, false));
            ExitCode::from(1)
        }
        Err(Failure::Input(v)) => {
            eprint!("{}", render(&v, false));
            ExitCode::from(2)
        }
    }
}
