mod pipelines;
mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pipelines::{Pipeline, Settings};
use report::Report;

#[derive(Parser, Debug)]
#[command(name = "cactus", version, about = "Verification pipelines for cactus groups in degrees 3 and 4")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Also write the JSON report here.
    #[arg(long, global = true)]
    report: Option<PathBuf>,

    /// Tolerance for floating point checks.
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Ball radius; for `enumerate`, the displacement bound.
    #[arg(long, global = true)]
    radius: Option<u32>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a word is trivial, or whether two words are equal.
    Wp {
        #[arg(long, default_value = "j4-23")]
        group: String,
        #[arg(num_args = 1..=2, required = true)]
        words: Vec<String>,
    },
    /// Image of a word in the symmetric group.
    Pi {
        word: String,
        #[arg(long, default_value_t = 4)]
        degree: u8,
    },
    /// Build a ball of the Cayley complex.
    Ball {
        #[arg(long, default_value = "j4-23")]
        group: String,
    },
    /// Knuth-Bendix completion; prints the rules.
    Kb {
        #[arg(long, default_value = "j4-23")]
        group: String,
        #[arg(long, default_value_t = 4096)]
        cap: usize,
    },
    /// Pure elements of small displacement.
    Enumerate,
    /// Check both presentations of the pure group.
    VerifyPresentation,
    /// Fundamental polygon, side pairings and vertex cycles.
    Dirichlet {
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Combinatorial depth of the drawn tessellation.
        #[arg(long, default_value_t = 3)]
        depth: u32,
    },
    /// The quotient surface.
    Quotient,
    /// The dual complex of the five-point configuration space.
    X5 {
        #[arg(long)]
        verify_phi: bool,
    },
    /// The dual complex of the four-point configuration space.
    X4 {
        #[arg(long)]
        check_pj3: bool,
    },
    /// Sphere sizes and a rational growth series.
    Growth {
        #[arg(long, default_value = "j4-23")]
        group: String,
    },
    /// Every pipeline with its defaults.
    All,
}

fn pipeline(c: Command) -> Option<Box<dyn Pipeline>> {
    use pipelines::*;
    Some(match c {
        Command::Wp { group, words } => Box::new(Wp { group, words }),
        Command::Pi { word, degree } => Box::new(Pi { word, degree }),
        Command::Ball { group } => Box::new(Ball { group }),
        Command::Kb { group, cap } => Box::new(Kb { group, cap }),
        Command::Enumerate => Box::new(Enumerate),
        Command::VerifyPresentation => Box::new(VerifyPresentation),
        Command::Dirichlet { svg, depth } => Box::new(Dirichlet { svg, depth }),
        Command::Quotient => Box::new(Quotient),
        Command::X5 { verify_phi } => Box::new(X5 { verify_phi }),
        Command::X4 { check_pj3 } => Box::new(X4 { check_pj3 }),
        Command::Growth { group } => Box::new(Growth { group }),
        Command::All => return None,
    })
}

fn timed(p: &dyn Pipeline, s: &Settings) -> Result<Report> {
    let start = Instant::now();
    let mut r = p.run(s).with_context(|| format!("pipeline {}", p.name()))?;
    r.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(r)
}

struct Outcome {
    json: Value,
    text: String,
    failures: Vec<String>,
}

fn run_all(s: &Settings) -> Result<Outcome> {
    let mut reports = serde_json::Map::new();
    let mut text = String::new();
    let mut failures = Vec::new();
    for p in pipelines::registry() {
        let local = Settings {
            radius: if p.takes_j4_radius() { s.radius } else { None },
            tol: s.tol,
        };
        let r = timed(p.as_ref(), &local)?;
        // two runs of the same ball group would collide
        let mut key = r.command.clone();
        if let Some(Value::String(g)) = r.params.get("group") {
            key = format!("{key} {g}");
        }
        text.push_str(&r.to_text());
        failures.extend(r.failures());
        reports.insert(key, r.to_json(true));
    }
    let passed = failures.is_empty();
    text.push_str(if passed { "all checks passed\n" } else { "some checks failed\n" });
    Ok(Outcome {
        json: json!({
            "command": "all",
            "passed": passed,
            "reports": reports,
            "version": env!("CARGO_PKG_VERSION"),
        }),
        text,
        failures,
    })
}

fn execute(cli: Cli) -> Result<Outcome> {
    let settings = Settings {
        radius: cli.radius,
        tol: cli.tol,
    };
    match pipeline(cli.command) {
        None => run_all(&settings),
        Some(p) => {
            let r = timed(p.as_ref(), &settings)?;
            Ok(Outcome {
                json: r.to_json(true),
                text: r.to_text(),
                failures: r.failures(),
            })
        }
    }
}

fn is_usage_error(e: &anyhow::Error) -> bool {
    use cactus_core::Error as E;
    e.chain().any(|c| {
        matches!(
            c.downcast_ref::<E>(),
            Some(
                E::Syntax { .. }
                    | E::InvalidGenerator { .. }
                    | E::IndexOutOfRange { .. }
                    | E::UnsupportedDegree(_)
                    | E::Unknown { .. }
                    | E::UnsupportedPresentation(_)
                    | E::ForeignGenerator(_)
            )
        )
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let out = cli.out.clone();
    let report_path = cli.report.clone();
    let outcome = match execute(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(if is_usage_error(&e) { 2 } else { 1 });
        }
    };
    let json_text = serde_json::to_string_pretty(&outcome.json).expect("serializable") + "\n";
    let body = match format {
        Format::Json => json_text.clone(),
        Format::Text => outcome.text.clone(),
    };
    let written = match &out {
        Some(path) => fs::write(path, &body).with_context(|| format!("writing {}", path.display())),
        None => std::io::stdout().write_all(body.as_bytes()).context("writing stdout"),
    };
    let written = written.and_then(|_| match &report_path {
        Some(path) => fs::write(path, &json_text).with_context(|| format!("writing {}", path.display())),
        None => Ok(()),
    });
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    for f in &outcome.failures {
        eprintln!("check failed: {f}");
    }
    if outcome.failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
