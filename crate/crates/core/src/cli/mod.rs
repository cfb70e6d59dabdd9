//! The `polymon` command line.
//!
//! Exit status is 0 on success, 1 for domain errors (unknown letters, zero
//! arguments, infinite alphabets where a finite one is needed) and 2 for
//! syntax and usage errors.

pub mod expr;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Value};

use crate::collapse::{collapse_witness, CollapseOutcome};
use crate::element::{Alphabet, AlphabetSize, Element};
use crate::error::Error;
use crate::green::{act, ball, cayley_dot, rclass_key, solve_axb};
use crate::rewriting::mul_oracle;
use crate::sample::random_element;
use crate::topology::{certify_translation, joint_discontinuity_family, CofiniteNbhd};

pub use expr::{evaluate, parse, parse_element, Expression, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "polymon",
    version,
    about = "Exact computation in polycyclic monoids"
)]
pub struct Cli {
    /// Number of generators, or `inf`.
    #[arg(long, global = true, default_value = "2")]
    pub lambda: AlphabetSize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression to normal form.
    Eval { expr: String },
    /// All non-zero x with a·x·b = c.
    Solve { a: String, b: String, c: String },
    /// Prefixes of the normal-form string.
    Downset { expr: String },
    /// The R-class of an element, printed as its representative u⁻¹.
    Rclass { expr: String },
    /// All elements of length at most N.
    Ball { radius: usize },
    /// Apply an element to a stack word (top on the right).
    Act { expr: String, word: String },
    /// Certify continuity of translation by A at zero.
    Continuity {
        a: String,
        /// Points left out of the neighborhood of zero.
        #[arg(long, value_delimiter = ',')]
        exclude: Vec<String>,
        /// Radius of the verification ball.
        #[arg(long, default_value_t = 4)]
        radius: usize,
    },
    /// Pairs multiplying to C (default 1) that escape every neighborhood: `witness [C] K`.
    Witness {
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
    },
    /// Search for a derivation of 0 ∼ 1 from A ∼ B.
    Collapse {
        a: String,
        b: String,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Write the right Cayley graph of ball(N) as Graphviz DOT.
    ExportDot { radius: usize, file: PathBuf },
    /// Randomized associativity, oracle and inverse-law checks.
    Check {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("`{0}` is not a positive word")]
    NotPositive(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(e) if e.is_syntax() => 2,
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// A command result in both output formats.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub text: String,
    pub json: Value,
}

fn list_text(xs: &[Element]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn element_report(x: &Element) -> Report {
    Report {
        text: x.to_string(),
        json: json!(x),
    }
}

fn list_report(xs: &[Element]) -> Report {
    Report {
        text: list_text(xs),
        json: json!(xs),
    }
}

/// Executes one parsed command.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let alphabet = Alphabet::new(cli.lambda)?;
    let el = |s: &str| parse_element(s, &alphabet);

    let report = match &cli.command {
        Command::Eval { expr } => element_report(&el(expr)?),
        Command::Solve { a, b, c } => {
            list_report(&solve_axb(&alphabet, &el(a)?, &el(b)?, &el(c)?)?)
        }
        Command::Downset { expr } => list_report(&el(expr)?.downset()?),
        Command::Rclass { expr } => element_report(&rclass_key(&el(expr)?).representative()),
        Command::Ball { radius } => list_report(ball(&alphabet, *radius)?.elements()),
        Command::Act { expr, word } => {
            let x = el(expr)?;
            let w = match el(word)?.parts() {
                Some((u, v)) if u.is_empty() => v.clone(),
                _ => return Err(CliError::NotPositive(word.clone())),
            };
            match act(&x, &w) {
                Some(out) => Report {
                    text: out.to_string(),
                    json: json!(Element::positive(out)),
                },
                None => Report {
                    text: "undefined".into(),
                    json: Value::Null,
                },
            }
        }
        Command::Continuity { a, exclude, radius } => {
            let excluded = exclude
                .iter()
                .filter(|s| !s.trim().is_empty())
                .map(|s| el(s))
                .collect::<Result<Vec<_>, _>>()?;
            let nbhd = CofiniteNbhd::new(excluded)?;
            let report = certify_translation(&alphabet, &el(a)?, &nbhd, *radius)?;
            let set_text = |s: &BTreeSet<Element>| {
                if s.is_empty() {
                    "none".to_string()
                } else {
                    list_text(&s.iter().cloned().collect::<Vec<_>>())
                }
            };
            let text = format!(
                "translation: {}\ninput excluded: {}\noutput excluded: {}\nverified radius: {} ({} points)\ncounterexamples: {}",
                report.translation,
                set_text(report.input.excluded()),
                set_text(report.output.excluded()),
                report.verified_radius,
                report.checked,
                if report.passed() { "none".to_string() } else { list_text(&report.counterexamples) },
            );
            Report {
                text,
                json: json!(report),
            }
        }
        Command::Witness { args } => {
            let (target, count) = match args.as_slice() {
                [k] => (Element::one(), k),
                [c, k] => (el(c)?, k),
                _ => unreachable!("clap enforces 1..=2 arguments"),
            };
            let count: usize = count
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid count `{count}`")))?;
            let family = joint_discontinuity_family(&alphabet, &target, count)?;
            let text = family
                .pairs
                .iter()
                .map(|(x, y)| format!("{x} * {y} = {}", family.target))
                .collect::<Vec<_>>()
                .join("\n");
            Report {
                text,
                json: json!(family),
            }
        }
        Command::Collapse { a, b, depth } => {
            let outcome = collapse_witness(&alphabet, &el(a)?, &el(b)?, *depth)?;
            let text = match &outcome {
                CollapseOutcome::Found(d) => d.to_string().trim_end().to_string(),
                CollapseOutcome::NotFound { max_depth } => {
                    format!("not found within depth {max_depth}")
                }
            };
            Report {
                text,
                json: json!(outcome),
            }
        }
        Command::ExportDot { radius, file } => {
            let dot = cayley_dot(&alphabet, *radius)?;
            std::fs::write(file, &dot)?;
            let nodes = ball(&alphabet, *radius)?.len();
            Report {
                text: format!("wrote {nodes} nodes to {}", file.display()),
                json: json!({ "file": file, "nodes": nodes }),
            }
        }
        Command::Check { samples, max_len } => run_check(&alphabet, cli.seed, *samples, *max_len)?,
    };
    Ok(report)
}

fn run_check(
    alphabet: &Alphabet,
    seed: u64,
    samples: usize,
    max_len: usize,
) -> Result<Report, CliError> {
    let letters = alphabet.finite_size().unwrap_or(8).min(u32::MAX as usize) as u32;
    let mut rng = StdRng::seed_from_u64(seed);
    let (mut assoc, mut oracle, mut regular) = (0usize, 0usize, 0usize);
    for _ in 0..samples {
        let x = random_element(&mut rng, letters, max_len);
        let y = random_element(&mut rng, letters, max_len);
        let z = random_element(&mut rng, letters, max_len);
        if x.product(&y).product(&z) != x.product(&y.product(&z)) {
            assoc += 1;
        }
        if x.product(&y) != mul_oracle(alphabet, &x, &y)? {
            oracle += 1;
        }
        if x.product(&x.inverse()).product(&x) != x {
            regular += 1;
        }
    }
    let status = |n: usize| {
        if n == 0 {
            "ok".to_string()
        } else {
            format!("{n} failures")
        }
    };
    let text = format!(
        "seed {seed}, {samples} samples\nassociativity: {}\noracle agreement: {}\nx x' x = x: {}",
        status(assoc),
        status(oracle),
        status(regular)
    );
    let json = json!({
        "seed": seed,
        "samples": samples,
        "associativity_failures": assoc,
        "oracle_failures": oracle,
        "regularity_failures": regular,
    });
    Ok(Report { text, json })
}

/// Parses `args` (including the program name), runs the command and writes
/// the result. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let body = match cli.format {
                Format::Text => report.text,
                Format::Json => report.json.to_string(),
            };
            match writeln!(out, "{body}") {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
