//! Command-line interface to the term engine: checking polygraph files,
//! typing, normalizing and comparing cells, bounded enumeration, string
//! diagram rendering, and checking of equational theories and their finite
//! models.
//!
//! Exit codes: 0 success (or "equal"), 1 not equal, 2 type error, 3 parse
//! error, 4 unsupported dimension. Verdicts go to stdout, diagnostics to
//! stderr.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use polycat::eat;
use polycat::freecat::{
    self, cell_to_term, decide_equal, infer_type, normalize, parse_term, Cell, EnumOptions,
};
use polycat::polygraph::{parse_polygraph, Polygraph};
use polycat::Error;

mod render;

#[derive(Parser)]
#[command(name = "polycat", version, about = "cells of free categories on polygraphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and validate a polygraph file.
    Check { file: PathBuf },
    /// Infer the dimension and boundaries of a term.
    Type { file: PathBuf, term: String },
    /// Print the normal form of a cell.
    Normalize {
        file: PathBuf,
        term: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two terms denote the same cell.
    Equal {
        file: PathBuf,
        left: String,
        right: String,
        #[arg(long)]
        json: bool,
    },
    /// List the cells of a dimension up to a size bound.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        max: usize,
    },
    /// Render a 2-cell as an SVG string diagram.
    Render {
        file: PathBuf,
        term: String,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Operations on equational theories.
    Eat {
        #[command(subcommand)]
        cmd: EatCmd,
    },
}

#[derive(Subcommand)]
enum EatCmd {
    /// Check a theory file, and optionally a finite model against it.
    Check {
        #[arg(long)]
        theory: PathBuf,
        #[arg(long)]
        model: Option<PathBuf>,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 3,
        Error::UnsupportedDimension(_) => 4,
        _ => 2,
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Polygraph, Error> {
    parse_polygraph(&read(path)?)
}

fn boundary_json(sig: &Polygraph, c: &Option<Cell>) -> Result<serde_json::Value, Error> {
    Ok(match c {
        None => serde_json::Value::Null,
        Some(c) => serde_json::Value::String(cell_to_term(sig, c)?.to_string()),
    })
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Check { file } => {
            let sig = load(&file)?;
            sig.validate()?;
            println!("ok: polygraph \"{}\" is well formed", sig.name);
            Ok(0)
        }
        Cmd::Type { file, term } => {
            let sig = load(&file)?;
            sig.validate()?;
            let t = parse_term(&term)?;
            let ty = infer_type(&sig, &t)?;
            match (&ty.src, &ty.tgt) {
                (Some(s), Some(tt)) => println!(
                    "{}-cell : {} -> {}",
                    ty.dim,
                    cell_to_term(&sig, s)?,
                    cell_to_term(&sig, tt)?
                ),
                _ => println!("{}-cell", ty.dim),
            }
            Ok(0)
        }
        Cmd::Normalize { file, term, json } => {
            let sig = load(&file)?;
            sig.validate()?;
            let t = parse_term(&term)?;
            let c = normalize(&sig, &t)?;
            let ty = infer_type(&sig, &t)?;
            let printed = cell_to_term(&sig, &c)?.to_string();
            if json {
                let out = serde_json::json!({
                    "verdict": "ok",
                    "normal_form": printed,
                    "boundaries": {
                        "src": boundary_json(&sig, &ty.src)?,
                        "tgt": boundary_json(&sig, &ty.tgt)?,
                    },
                });
                println!("{out}");
            } else {
                println!("{printed}");
            }
            Ok(0)
        }
        Cmd::Equal { file, left, right, json } => {
            let sig = load(&file)?;
            sig.validate()?;
            let l = parse_term(&left)?;
            let r = parse_term(&right)?;
            let equal = decide_equal(&sig, &l, &r)?;
            let verdict = if equal { "equal" } else { "not equal" };
            if json {
                let c = normalize(&sig, &l)?;
                let ty = infer_type(&sig, &l)?;
                let out = serde_json::json!({
                    "verdict": verdict,
                    "normal_form": cell_to_term(&sig, &c)?.to_string(),
                    "boundaries": {
                        "src": boundary_json(&sig, &ty.src)?,
                        "tgt": boundary_json(&sig, &ty.tgt)?,
                    },
                });
                println!("{out}");
            } else {
                println!("{verdict}");
            }
            Ok(if equal { 0 } else { 1 })
        }
        Cmd::Enumerate { file, dim, max } => {
            let sig = load(&file)?;
            sig.validate()?;
            let cells = freecat::enumerate(&sig, dim, EnumOptions { max })?;
            for c in &cells {
                println!("{}", cell_to_term(&sig, c)?);
            }
            eprintln!("{} cells of dimension {dim}", cells.len());
            Ok(0)
        }
        Cmd::Render { file, term, output } => {
            let sig = load(&file)?;
            sig.validate()?;
            let t = parse_term(&term)?;
            let svg = render::render_svg(&sig, &t)?;
            match output {
                Some(path) => std::fs::write(&path, svg)
                    .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{svg}"),
            }
            Ok(0)
        }
        Cmd::Eat { cmd } => match cmd {
            EatCmd::Check { theory, model } => {
                let t = eat::parse_theory(&read(&theory)?)?;
                t.check()?;
                println!("ok: theory \"{}\" is well formed", t.name);
                if let Some(mpath) = model {
                    let m = eat::parse_model(&read(&mpath)?)?;
                    let report = eat::check_model(&t, &m)?;
                    for s in &report.structural {
                        eprintln!("structural: {s}");
                    }
                    for v in &report.violations {
                        eprintln!("violation: {v}");
                    }
                    if report.ok() {
                        println!("ok: model \"{}\" satisfies \"{}\"", m.name, t.name);
                    } else {
                        println!("model \"{}\" does not satisfy \"{}\"", m.name, t.name);
                        return Ok(1);
                    }
                }
                Ok(0)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
