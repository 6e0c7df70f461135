//! `fa`: validate, classify and compute with finite effect algebras and
//! relational Frobenius algebras from the command line.

mod commands;
mod input;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fa_core::Error;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use commands::Outcome;
use input::{load, Input, SeedOrder};

#[derive(Parser)]
#[command(name = "fa", version, about = "Finite effect algebras, Frobenius algebras in Rel and their nerves")]
struct Cli {
    /// Print the structured report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Element order used when loading structures.
    #[arg(long, global = true, value_enum, default_value = "declared")]
    seed_order: SeedOrder,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a structure.
    Validate {
        /// A structure file, or catalog:NAME.
        file: String,
        /// rel-monoid, frobenius, effect-algebra, pseudo-effect-algebra or nerve.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Effect algebra, orthoalgebra and orthomodular flags via ⊡.
    Classify { file: String },
    /// Build the nerve.
    Nerve {
        file: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// First homology of the nerve; the universal group for effect algebras.
    Homology { file: String },
    /// Hom object and mapping complex between two algebras.
    Hom { e: String, f: String },
    /// Unique lifting for the evaluation map of the mapping complex.
    Kan { e: String, f: String },
    /// Lifting check of a shape inclusion against a nerve or complex.
    Lift {
        /// e.g. horn3_1, ehorn2_0, boundary3, faces(2;02,1), box(horn2_0,boundary1).
        shape: String,
        file: String,
        /// Require every lift to be unique.
        #[arg(long)]
        unique: bool,
    },
    /// All structures of a given size up to isomorphism.
    Enumerate {
        #[arg(long)]
        size: usize,
        /// effect-algebra, pseudo-effect-algebra, frobenius or frobenius-candidates.
        #[arg(long)]
        kind: String,
        /// Write one structure file per result into this directory.
        #[arg(long)]
        emit: Option<String>,
    },
    /// Built-in structures.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show {
        name: String,
    },
    Export {
        name: String,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Serialize)]
struct Report {
    command: Vec<String>,
    version: &'static str,
    input_digest: String,
    status: &'static str,
    exit_code: u8,
    results: Value,
    certificates: Vec<Value>,
}

fn digest(inputs: &[&Input]) -> String {
    let mut h = Sha256::new();
    for i in inputs {
        h.update((i.bytes.len() as u64).to_le_bytes());
        h.update(&i.bytes);
    }
    hex::encode(h.finalize())
}

fn catalog_input(name: &str, order: SeedOrder) -> Result<Input, Error> {
    load(&format!("catalog:{name}"), order)
}

fn run(cli: &Cli) -> Result<(Outcome, String), Error> {
    let order = cli.seed_order;
    let one = |f: &str| load(f, order);
    Ok(match &cli.command {
        Command::Validate { file, kind } => {
            let i = one(file)?;
            (commands::validate_cmd(&i, kind.as_deref())?, digest(&[&i]))
        }
        Command::Classify { file } => {
            let i = one(file)?;
            (commands::classify(&i)?, digest(&[&i]))
        }
        Command::Nerve { file, out } => {
            let i = one(file)?;
            (commands::nerve_cmd(&i, out.as_deref())?, digest(&[&i]))
        }
        Command::Homology { file } => {
            let i = one(file)?;
            (commands::homology(&i)?, digest(&[&i]))
        }
        Command::Hom { e, f } => {
            let (a, b) = (one(e)?, one(f)?);
            (commands::hom(&a, &b)?, digest(&[&a, &b]))
        }
        Command::Kan { e, f } => {
            let (a, b) = (one(e)?, one(f)?);
            (commands::kan(&a, &b)?, digest(&[&a, &b]))
        }
        Command::Lift { shape, file, unique } => {
            let i = one(file)?;
            (commands::lift(shape, &i, *unique)?, digest(&[&i]))
        }
        Command::Enumerate { size, kind, emit } => (commands::enumerate(*size, kind, emit.as_deref())?, digest(&[])),
        Command::Catalog { action } => match action {
            CatalogAction::List => (commands::catalog_list()?, digest(&[])),
            CatalogAction::Show { name } => {
                let i = catalog_input(name, order)?;
                (commands::catalog_show(&i)?, digest(&[&i]))
            }
            CatalogAction::Export { name, out } => {
                let i = catalog_input(name, order)?;
                (commands::catalog_export(&i, out.as_deref())?, digest(&[&i]))
            }
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().skip(1).collect();
    let (status, code, results, certificates, text) = match run(&cli) {
        Ok((o, d)) => {
            let (status, code) = if o.pass { ("pass", 0) } else { ("fail", 1) };
            (status, code, o.results, o.certificates, (o.text, d))
        }
        Err(Error::Contract(msg)) => {
            let text = format!("check failed: {msg}\n");
            ("fail", 1, json!({ "error": msg }), vec![json!({ "contract": msg })], (text, digest(&[])))
        }
        Err(e) => {
            eprintln!("fa: {e}");
            ("input-error", 2, json!({ "error": e.to_string() }), Vec::new(), (String::new(), digest(&[])))
        }
    };
    let (text, input_digest) = text;
    let mut out = io::stdout().lock();
    if cli.json {
        let report = Report {
            command,
            version: env!("CARGO_PKG_VERSION"),
            input_digest,
            status,
            exit_code: code,
            results,
            certificates,
        };
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
    } else {
        let _ = write!(out, "{text}");
    }
    ExitCode::from(code)
}
