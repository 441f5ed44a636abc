//! Command-line front end over the library.
//!
//! Exit status is 0 on success, 1 when a predicate subcommand answers
//! `false`, and 2 on usage, parse or validation errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::decimation::{decimate, full_decimation_set, kernel, shift, DecimationIndex};
use crate::error::{Error, Result};
use crate::factorization::{
    complete_factorization, factor_set, factorization_exponent, is_leveled, leveled_envelope,
    missing_configuration, self_loop_criterion, FactorizationExponent, FactorizationTree,
    NodeStatus,
};
use crate::graphfile;
use crate::interleaving::{interleave, interleaving_closure, interleaving_factors, is_n_factorizable};
use crate::pathset::{equals, minimize, PathSet};
use crate::presentation::Presentation;

#[derive(Debug, Parser)]
#[command(name = "pathset", version, about = "Path sets of pointed labeled graphs")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Canonical minimal right-resolving presentation.
    Minimize { file: PathBuf },
    /// Language equality of two graph files.
    Eq { left: PathBuf, right: PathBuf },
    /// Initial blocks up to a depth, shortlex order.
    Blocks {
        file: PathBuf,
        #[arg(short = 'L', default_value_t = 4)]
        depth: usize,
    },
    /// The shifted path set S^j.
    Shift {
        file: PathBuf,
        #[arg(short = 'j', short_alias = 'k', default_value_t = 1)]
        amount: usize,
    },
    /// The decimation psi_{j,n}.
    Decimate {
        file: PathBuf,
        #[arg(short = 'j', default_value_t = 0)]
        offset: usize,
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
        step: u32,
    },
    /// Every decimation of the path set, with witnesses.
    Decset { file: PathBuf },
    /// The n-kernel.
    Kernel {
        file: PathBuf,
        #[arg(short = 'n', default_value_t = 2)]
        base: usize,
    },
    /// Interleaving of the given components, in order.
    Interleave {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// The n-fold interleaving closure.
    Closure {
        file: PathBuf,
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
        level: u32,
    },
    /// Whether the path set equals its n-fold closure.
    Factorizable {
        file: PathBuf,
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
        level: u32,
    },
    /// The n-fold factors, or the whole factor set without -n.
    Factors {
        file: PathBuf,
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
        level: Option<u32>,
    },
    /// Factorization exponent: "infinite" or the integer f.
    Exponent { file: PathBuf },
    /// Smallest leveled path set containing the input.
    Envelope { file: PathBuf },
    /// Whether the minimal presentation is leveled.
    Leveled { file: PathBuf },
    /// Least missing configuration, or "none".
    Missing { file: PathBuf },
    /// Complete factorization tree.
    Tree { file: PathBuf },
    /// Whether the initial vertex of the minimal presentation has a self-loop.
    Selfloop { file: PathBuf },
    /// Graphviz rendering of the file as given.
    Dot { file: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Minimize { .. } => "minimize",
            Command::Eq { .. } => "eq",
            Command::Blocks { .. } => "blocks",
            Command::Shift { .. } => "shift",
            Command::Decimate { .. } => "decimate",
            Command::Decset { .. } => "decset",
            Command::Kernel { .. } => "kernel",
            Command::Interleave { .. } => "interleave",
            Command::Closure { .. } => "closure",
            Command::Factorizable { .. } => "factorizable",
            Command::Factors { .. } => "factors",
            Command::Exponent { .. } => "exponent",
            Command::Envelope { .. } => "envelope",
            Command::Leveled { .. } => "leveled",
            Command::Missing { .. } => "missing",
            Command::Tree { .. } => "tree",
            Command::Selfloop { .. } => "selfloop",
            Command::Dot { .. } => "dot",
        }
    }
}

/// A command result, renderable as text or JSON.
enum Output {
    Graph(Presentation),
    Bool(bool),
    Lines(Vec<String>),
    Graphs(Vec<(String, Presentation)>),
    Text(String, Value),
}

fn load(path: &Path) -> std::result::Result<Presentation, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    graphfile::read(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_set(path: &Path) -> std::result::Result<PathSet, String> {
    load(path).map(|p| minimize(&p))
}

fn lib<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e: Error| e.to_string())
}

fn numbered(sets: impl IntoIterator<Item = PathSet>) -> Output {
    Output::Graphs(
        sets.into_iter()
            .enumerate()
            .map(|(i, s)| (format!("{i}"), s.presentation().clone()))
            .collect(),
    )
}

fn tree_json(t: &FactorizationTree) -> Value {
    let alphabet = t.value().alphabet();
    let mut node = json!({
        "vertices": t.value().num_vertices(),
        "graph": graphfile::to_json(t.value().presentation()),
    });
    match t.status() {
        NodeStatus::FrozenLeveled(profile) => {
            node["status"] = json!("leveled");
            node["profile"] = json!(profile.display(alphabet).to_string());
        }
        NodeStatus::Indecomposable => node["status"] = json!("indecomposable"),
        NodeStatus::Factored { n, children } => {
            node["status"] = json!("factored");
            node["n"] = json!(n);
            node["children"] = Value::Array(children.iter().map(tree_json).collect());
        }
    }
    node
}

fn execute(command: &Command) -> std::result::Result<Output, String> {
    Ok(match command {
        Command::Minimize { file } => Output::Graph(load_set(file)?.presentation().clone()),
        Command::Eq { left, right } => Output::Bool(equals(&load_set(left)?, &load_set(right)?)),
        Command::Blocks { file, depth } => {
            let p = load(file)?;
            let lines = crate::pathset::initial_blocks(&p, *depth)
                .iter()
                .map(|w| w.display(p.alphabet()).to_string())
                .collect();
            Output::Lines(lines)
        }
        Command::Shift { file, amount } => Output::Graph(shift(&load_set(file)?, *amount).presentation().clone()),
        Command::Decimate { file, offset, step } => {
            let idx = lib(DecimationIndex::new(*offset, *step as usize))?;
            Output::Graph(decimate(&load_set(file)?, idx).presentation().clone())
        }
        Command::Decset { file } => {
            let set = lib(full_decimation_set(&load_set(file)?))?;
            Output::Graphs(
                set.members()
                    .iter()
                    .enumerate()
                    .map(|(i, (s, idx))| {
                        (
                            format!("{i} j={} n={}", idx.offset(), idx.step()),
                            s.presentation().clone(),
                        )
                    })
                    .collect(),
            )
        }
        Command::Kernel { file, base } => numbered(lib(kernel(&load_set(file)?, *base))?),
        Command::Interleave { files } => {
            let sets = files.iter().map(|f| load_set(f)).collect::<std::result::Result<Vec<_>, _>>()?;
            Output::Graph(interleave(&sets).presentation().clone())
        }
        Command::Closure { file, level } => {
            Output::Graph(interleaving_closure(&load_set(file)?, *level as usize).presentation().clone())
        }
        Command::Factorizable { file, level } => Output::Bool(is_n_factorizable(&load_set(file)?, *level as usize)),
        Command::Factors { file, level } => {
            let p = load_set(file)?;
            match level {
                Some(n) => numbered(lib(interleaving_factors(&p, *n as usize))?),
                None => numbered(lib(factor_set(&p))?),
            }
        }
        Command::Exponent { file } => {
            let f = lib(factorization_exponent(&load_set(file)?))?;
            let value = match f {
                FactorizationExponent::Infinite => json!("infinite"),
                FactorizationExponent::Finite(n) => json!(n),
            };
            Output::Text(f.to_string(), value)
        }
        Command::Envelope { file } => Output::Graph(lib(leveled_envelope(&load_set(file)?))?.presentation().clone()),
        Command::Leveled { file } => Output::Bool(lib(is_leveled(&load_set(file)?))?.is_some()),
        Command::Missing { file } => {
            let p = load_set(file)?;
            match lib(missing_configuration(&p))? {
                None => Output::Text("none".into(), Value::Null),
                Some(m) => Output::Text(
                    m.display(p.alphabet()),
                    json!({
                        "k": m.k,
                        "l": m.l,
                        "block": m.block.display(p.alphabet()).to_string(),
                    }),
                ),
            }
        }
        Command::Tree { file } => {
            let tree = lib(complete_factorization(&load_set(file)?))?;
            let text = tree.render();
            Output::Text(text.trim_end().to_string(), tree_json(&tree))
        }
        Command::Selfloop { file } => Output::Bool(lib(self_loop_criterion(&load_set(file)?))?),
        Command::Dot { file } => {
            let dot = graphfile::to_dot(&load(file)?);
            Output::Text(dot.trim_end().to_string(), json!(dot))
        }
    })
}

fn render(output: &Output, json_mode: bool, op: &str) -> (String, i32) {
    let status = match output {
        Output::Bool(false) => 1,
        _ => 0,
    };
    if json_mode {
        let result = match output {
            Output::Graph(p) => graphfile::to_json(p),
            Output::Bool(b) => json!(b),
            Output::Lines(lines) => json!(lines),
            Output::Graphs(list) => Value::Array(
                list.iter()
                    .map(|(label, p)| json!({ "label": label, "graph": graphfile::to_json(p) }))
                    .collect(),
            ),
            Output::Text(_, value) => value.clone(),
        };
        let doc = json!({ "op": op, "result": result });
        return (format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()), status);
    }
    let text = match output {
        Output::Graph(p) => graphfile::write(p),
        Output::Bool(b) => format!("{b}\n"),
        Output::Lines(lines) => lines.iter().map(|l| format!("{l}\n")).collect(),
        Output::Graphs(list) => list
            .iter()
            .map(|(label, p)| format!("# {label}\n{}", graphfile::write(p)))
            .collect::<Vec<_>>()
            .join("---\n"),
        Output::Text(text, _) => format!("{text}\n"),
    };
    (text, status)
}

/// Runs one command line (program name first) and returns its exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            if informational {
                let _ = write!(out, "{rendered}");
                return 0;
            }
            let _ = write!(err, "{rendered}");
            return 2;
        }
    };
    match execute(&cli.command) {
        Ok(output) => {
            let (text, status) = render(&output, cli.json, cli.command.name());
            let _ = out.write_all(text.as_bytes());
            status
        }
        Err(message) => {
            let _ = writeln!(err, "pathset {}: {message}", cli.command.name());
            2
        }
    }
}
