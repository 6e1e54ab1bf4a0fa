//! Batch command-line front end used by the `preproj` binary.
//!
//! Text output prints one `key=value` record per line (a few commands print
//! a bare verdict such as `finite`). `--json` prints one JSON object per
//! result with the keys `command`, `inputs`, `result`, `diagnostics`.
//!
//! Exit codes: 0 success, 2 parse error, 3 domain error, 4 numerical
//! failure, 5 search bound exceeded.

mod system_file;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

pub use system_file::{parse_system, render_system, ParseError, SystemFile};

use crate::admissible::{is_admissible, principal_word, AdmissibleError, AdmissibleWord};
use crate::coxgraph::{preset, CoxeterGraph, CoxeterMatrix, GraphError, Orientation};
use crate::preproj::{finite_type_oracle, CoxeterContext, PreprojError, PreprojectiveRecord};
use crate::rootsys::{RootError, RootVec, EPS};
use crate::tracemon::{normal_form, TraceWord};
use crate::weakorder::{self, Classification, WeakOrderError};

const WORD_HELP: &str = "Words are written leftmost letter first, with 1-based vertex \
indices separated by spaces (\"1 2 1\"); the rightmost letter is applied first. \
\"()\" is the empty word. Roots are coordinate vectors in the simple-root basis (\"2 1\").";

#[derive(Parser, Debug)]
#[command(name = "preproj", version, about = "Preprojective roots of Coxeter groups", after_help = WORD_HELP)]
pub struct Cli {
    /// System file: `n N`, `m i j value|inf` lines and an `order` line.
    #[arg(long, global = true)]
    pub system: Option<PathBuf>,
    /// Print JSON lines instead of key=value text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the system file and describe the system.
    Validate,
    /// Foata normal form of a word.
    Nf { word: String },
    /// Test whether a word is admissible for the orientation of c.
    Admissible { word: String },
    /// Meet of two admissible words.
    Meet { w1: String, w2: String },
    /// Join of two admissible words.
    Join { w1: String, w2: String },
    /// The principal word W(r, x).
    Principal { r: usize, x: usize },
    /// The projective roots, one per generator.
    Projective,
    /// Preprojective roots of size at most --rmax.
    Preproj {
        #[arg(long)]
        rmax: Option<usize>,
    },
    /// The least admissible word negating a root.
    Walpha {
        root: String,
        #[arg(long)]
        rmax: Option<usize>,
    },
    /// The least admissible word negating every given root (separate roots with ';').
    Wpsi {
        roots: Vec<String>,
        #[arg(long)]
        rmax: Option<usize>,
        /// Longest admissible word the search may visit.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Whether a word is reduced.
    Reduced { word: String },
    /// Whether rho(w1) <=_L rho(w2) in the left weak order.
    WeakLeq { w1: String, w2: String },
    /// Whether every simple root is preprojective within --rmax.
    Finite {
        #[arg(long)]
        rmax: Option<usize>,
    },
    /// Print a standard system (A n, B n, D n, E6, F4, H3, I2 m, affine-A n, ...) as a system file.
    Catalog { name: String, params: Vec<String> },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Input(String),
    #[error("{context}: {message}")]
    Io { context: String, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Admissible(#[from] AdmissibleError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Preproj(#[from] PreprojError),
    #[error(transparent)]
    WeakOrder(#[from] WeakOrderError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Input(_) | CliError::Io { .. } => 2,
            CliError::Preproj(e) => preproj_code(e),
            CliError::WeakOrder(WeakOrderError::Preproj(e)) => preproj_code(e),
            CliError::WeakOrder(
                WeakOrderError::NumericalAmbiguity(_) | WeakOrderError::NoDescent { .. },
            ) => 4,
            _ => 3,
        }
    }
}

fn preproj_code(e: &PreprojError) -> u8 {
    match e {
        PreprojError::NumericalAmbiguity(_) => 4,
        PreprojError::NotPreprojectiveWithinBound { .. }
        | PreprojError::SearchBoundExceeded { .. } => 5,
        _ => 3,
    }
}

/// One output record.
#[derive(Serialize)]
struct Record {
    command: String,
    inputs: Value,
    result: Value,
    diagnostics: Vec<String>,
}

struct Emitter<'a> {
    json: bool,
    out: &'a mut dyn Write,
}

impl Emitter<'_> {
    /// Emits `text` lines in text mode, or one JSON record.
    fn emit(
        &mut self,
        command: &str,
        inputs: Value,
        text: &[String],
        result: Value,
        diagnostics: Vec<String>,
    ) -> Result<(), CliError> {
        let io = |e: std::io::Error| CliError::Io {
            context: "cannot write to stdout".into(),
            message: e.to_string(),
        };
        if self.json {
            let rec = Record {
                command: command.into(),
                inputs,
                result,
                diagnostics,
            };
            writeln!(
                self.out,
                "{}",
                serde_json::to_string(&rec).expect("serializable")
            )
            .map_err(io)?;
        } else {
            for line in text {
                writeln!(self.out, "{line}").map_err(io)?;
            }
        }
        Ok(())
    }
}

/// Parses a word literal over `n` vertices.
pub fn parse_word(text: &str, n: usize) -> Result<TraceWord, CliError> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "()" {
        return Ok(TraceWord::empty());
    }
    let letters = trimmed
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
            _ => Err(CliError::Input(format!(
                "word `{text}`: `{t}` is not a vertex in 1..={n}"
            ))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TraceWord::from_written(letters))
}

/// Parses a root literal with exactly `n` coordinates.
pub fn parse_root(text: &str, n: usize) -> Result<RootVec, CliError> {
    let coords = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| CliError::Input(format!("root `{text}`: `{t}` is not a number")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coords.len() != n {
        return Err(CliError::Input(format!(
            "root `{text}` has {} coordinates, expected {n}",
            coords.len()
        )));
    }
    Ok(RootVec::new(coords))
}

fn root_json(v: &RootVec) -> Value {
    Value::Array(
        v.coords()
            .iter()
            .map(|&c| {
                if (c - c.round()).abs() <= EPS {
                    json!(c.round() as i64)
                } else {
                    json!(c)
                }
            })
            .collect(),
    )
}

fn record_json(rec: &PreprojectiveRecord) -> Value {
    json!({
        "root": root_json(&rec.root),
        "size": rec.size,
        "apex": rec.apex + 1,
        "word": rec.principal.word().to_string(),
    })
}

fn record_text(rec: &PreprojectiveRecord) -> String {
    format!(
        "size={} apex={} root={} word={}",
        rec.size,
        rec.apex + 1,
        rec.root,
        rec.principal.word()
    )
}

fn vertex_list(set: crate::coxgraph::VertexSet) -> String {
    set.iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn load_system(path: &Option<PathBuf>) -> Result<SystemFile, CliError> {
    let path = path
        .as_ref()
        .ok_or_else(|| CliError::Input("this command needs --system FILE".into()))?;
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        context: format!("cannot read {}", path.display()),
        message: e.to_string(),
    })?;
    Ok(parse_system(&text)?)
}

fn context(sys: &SystemFile) -> Result<CoxeterContext, CliError> {
    let order = sys.order.clone().ok_or_else(|| {
        CliError::Input("the system file needs an `order` line for this command".into())
    })?;
    Ok(CoxeterContext::from_matrix(sys.matrix.clone(), order)?)
}

fn admissible_word(text: &str, ctx: &CoxeterContext) -> Result<AdmissibleWord, CliError> {
    let word = parse_word(text, ctx.rank())?;
    Ok(AdmissibleWord::new(word, ctx.orientation())?)
}

/// Runs one parsed command, writing results to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let mut o = Emitter {
        json: cli.json,
        out,
    };

    match &cli.command {
        Command::Catalog { name, params } => {
            let params: Vec<&str> = params.iter().map(String::as_str).collect();
            let matrix: CoxeterMatrix = preset(name, &params)?;
            let text = render_system(&matrix, None);
            let lines: Vec<String> = text.lines().map(str::to_owned).collect();
            o.emit(
                "catalog",
                json!({ "name": name, "params": params }),
                &lines,
                json!({ "system": text }),
                vec![],
            )
        }
        Command::Validate => {
            let sys = load_system(&cli.system)?;
            let graph = CoxeterGraph::new(sys.matrix.clone());
            let kind = finite_type_oracle(&sys.matrix);
            let mut text = vec![
                "valid".to_owned(),
                format!("rank={}", graph.rank()),
                format!("type={kind}"),
            ];
            let mut result =
                json!({ "valid": true, "rank": graph.rank(), "type": kind.to_string() });
            if let Some(order) = &sys.order {
                let orientation = Orientation::from_order(&graph, order);
                let arrows: Vec<String> = orientation
                    .arrows()
                    .map(|(a, b)| format!("{}->{}", a + 1, b + 1))
                    .collect();
                text.push(format!("arrows={}", arrows.join(" ")));
                result["arrows"] = json!(arrows);
            }
            o.emit("validate", json!({}), &text, result, vec![])
        }
        Command::Nf { word } => {
            let sys = load_system(&cli.system)?;
            let graph = CoxeterGraph::new(sys.matrix);
            let w = parse_word(word, graph.rank())?;
            let nf = normal_form(&graph, &w);
            let blocks: Vec<String> = nf.blocks().iter().map(|b| vertex_list(*b)).collect();
            let canonical = nf.to_word().to_string();
            o.emit(
                "nf",
                json!({ "word": word }),
                &[
                    format!("word={canonical}"),
                    format!("blocks={}", blocks.join(" | ")),
                ],
                json!({ "word": canonical, "blocks": blocks }),
                vec!["blocks listed first-applied first".into()],
            )
        }
        Command::Admissible { word } => {
            let sys = load_system(&cli.system)?;
            let ctx = context(&sys)?;
            let w = parse_word(word, ctx.rank())?;
            let ok = is_admissible(&w, ctx.orientation());
            let mut text = vec![if ok { "admissible" } else { "not-admissible" }.to_owned()];
            let mut result = json!({ "admissible": ok });
            match AdmissibleWord::new(w, ctx.orientation()) {
                Ok(a) => {
                    let m: Vec<String> = a.multiplicity().iter().map(|x| x.to_string()).collect();
                    text.push(format!("multiplicity={}", m.join(" ")));
                    result["multiplicity"] = json!(a.multiplicity());
                }
                Err(AdmissibleError::NotAdmissible { position, .. }) => {
                    text.push(format!("position={}", position + 1));
                    result["position"] = json!(position + 1);
                }
                Err(e) => return Err(e.into()),
            }
            o.emit("admissible", json!({ "word": word }), &text, result, vec![])
        }
        Command::Meet { w1, w2 } | Command::Join { w1, w2 } => {
            let sys = load_system(&cli.system)?;
            let ctx = context(&sys)?;
            let (a, b) = (admissible_word(w1, &ctx)?, admissible_word(w2, &ctx)?);
            let (name, r) = match &cli.command {
                Command::Meet { .. } => ("meet", a.meet(&b)?),
                _ => ("join", a.join(&b)?),
            };
            o.emit(
                name,
                json!({ "w1": w1, "w2": w2 }),
                &[format!("{name}={r}")],
                json!({ "word": r.to_string(), "multiplicity": r.multiplicity() }),
                vec![],
            )
        }
        Command::Principal { r, x } => {
            let sys = load_system(&cli.system)?;
            let ctx = context(&sys)?;
            if *x == 0 || *x > ctx.rank() {
                return Err(CliError::Input(format!(
                    "vertex {x} is not in 1..={}",
                    ctx.rank()
                )));
            }
            let p = principal_word(*r, x - 1, ctx.orientation())?;
            let blocks: Vec<String> = p.canonical_form().iter().map(|b| b.to_string()).collect();
            let root = ctx.principal_root(&p);
            let record = ctx.principal_record(*r, x - 1)?;
            let text = vec![
                format!("word={}", p.word()),
                format!("blocks={}", blocks.join(" | ")),
                format!("root={root}"),
                format!("preprojective={}", record.is_some()),
            ];
            o.emit(
                "principal",
                json!({ "r": r, "x": x }),
                &text,
                json!({
                    "word": p.word().to_string(),
                    "blocks": blocks,
                    "root": root_json(&root),
                    "preprojective": record.is_some(),
                }),
                vec!["blocks listed X_r first".into()],
            )
        }
        Command::Projective => {
            let sys = load_system(&cli.system)?;
            let ctx = context(&sys)?;
            let roots = ctx.projective_roots()?;
            let images = ctx.minus_c_image()?;
            for (s, root) in roots.iter().enumerate() {
                o.emit("projective", json!({}), 
                    &[format!("s{}: {root}", s + 1)],
                    json!({ "generator": s + 1, "root": root_json(root), "inverse_projective": root_json(&images[s]) }),
                    vec!["transpose and path-sum formulas agree".into()],
                )?;
            }
            Ok(())
        }
        Command::Preproj { rmax } => {
            let sys = load_system(&cli.system)?;
            let ctx = context(&sys)?;
            let r_max = rmax.unwrap_or_else(|| ctx.default_r_max());
            for recs in ctx.enumerate_preprojective(r_max)?.values() {
                for rec in recs {
                    o.emit(
                        "preproj",
                        json!({ "rmax": r_max }),
                        &[record_text(rec)],
                        record_json(rec),
                        vec![],
                    )?;
                }
            }
            Ok(())
        }
        Command::Walpha { root, rmax } => {
            let sys = load_system(&cli.system)?;
            let ctx = context(&sys)?;
            let r_max = rmax.unwrap_or_else(|| ctx.default_r_max());
            let alpha = parse_root(root, ctx.rank())?;
            let rec = ctx.w_alpha(&alpha, r_max)?;
            o.emit(
                "walpha",
                json!({ "root": root, "rmax": r_max }),
                &[
                    format!("size={}", rec.size),
                    format!("apex={}", rec.apex + 1),
                    format!("word={}", rec.principal.word()),
                ],
                record_json(&rec),
                vec![],
            )
        }
        Command::Wpsi { roots, rmax, bound } => {
            let sys = load_system(&cli.system)?;
            let ctx = context(&sys)?;
            let r_max = rmax.unwrap_or_else(|| ctx.default_r_max());
            let theta = roots
                .iter()
                .flat_map(|r| r.split(';'))
                .filter(|r| !r.trim().is_empty())
                .map(|r| parse_root(r, ctx.rank()))
                .collect::<Result<Vec<_>, _>>()?;
            let psi = ctx.w_psi(&theta, r_max, *bound)?;
            let approx = weakorder::approximate(&ctx, &theta, r_max)?;
            let members: Vec<String> = approx.roots.iter().map(|r| r.root.to_string()).collect();
            o.emit(
                "wpsi",
                json!({ "roots": roots, "rmax": r_max }),
                &[
                    format!("word={}", psi.w_psi),
                    format!("independent={}", psi.independent),
                    format!("independent-set={}", members.join("; ")),
                ],
                json!({
                    "word": psi.w_psi.to_string(),
                    "independent": psi.independent,
                    "independent_set": approx.roots.iter().map(record_json).collect::<Vec<_>>(),
                }),
                vec![],
            )
        }
        Command::Reduced { word } => {
            let sys = load_system(&cli.system)?;
            let ctx = context(&sys)?;
            let w = parse_word(word, ctx.rank())?;
            let reduced = weakorder::is_reduced(ctx.system(), &w)?;
            let mut text = vec![if reduced { "reduced" } else { "not-reduced" }.to_owned()];
            let mut result = json!({ "reduced": reduced });
            let mut diagnostics = vec![];
            if let Ok(a) = AdmissibleWord::new(w, ctx.orientation()) {
                if let Classification::Reduced(psi) = weakorder::classify_admissible(&ctx, &a)? {
                    let members: Vec<String> =
                        psi.roots.iter().map(|r| r.root.to_string()).collect();
                    text.push(format!("independent-set={}", members.join("; ")));
                    result["independent_set"] =
                        json!(psi.roots.iter().map(record_json).collect::<Vec<_>>());
                }
            } else {
                diagnostics.push("word is not admissible; no independent set reported".into());
            }
            o.emit(
                "reduced",
                json!({ "word": word }),
                &text,
                result,
                diagnostics,
            )
        }
        Command::WeakLeq { w1, w2 } => {
            let sys = load_system(&cli.system)?;
            let ctx = context(&sys)?;
            let (a, b) = (parse_word(w1, ctx.rank())?, parse_word(w2, ctx.rank())?);
            let rs = ctx.system();
            let leq = weakorder::leq_left(rs, &rs.element_of_word(&a), &rs.element_of_word(&b))?;
            o.emit(
                "weak-leq",
                json!({ "w1": w1, "w2": w2 }),
                &[leq.to_string()],
                json!({ "leq": leq }),
                vec![],
            )
        }
        Command::Finite { rmax } => {
            let sys = load_system(&cli.system)?;
            let ctx = context(&sys)?;
            let r_max = rmax.unwrap_or_else(|| ctx.default_r_max());
            let verdict = ctx.finiteness_probe(r_max)?;
            o.emit(
                "finite",
                json!({ "rmax": r_max }),
                &[verdict.to_string()],
                json!({ "verdict": verdict.to_string() }),
                vec![format!(
                    "semi-decision: every simple root checked up to size {r_max}"
                )],
            )
        }
    }
}

/// Entry point of the binary: parses `std::env::args`, runs, and maps
/// errors to exit codes.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
