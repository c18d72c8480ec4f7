//! Command-line surface: `expand` family tables, `verify` the identity
//! suite. Exit codes: 0 success, 1 verification failures, 2 usage errors
//! (diagnostics go to stderr as a single line).
//!
//! The env var `SHEFFERLAB_ORDER` overrides the working truncation order
//! (default n_max + 2); values below a computation's natural requirement
//! are raised to it, so exactness never degrades.

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::families::{family_numbers_at, family_polynomials_at, FamilyId, FamilyParams};
use crate::identities::{verify_suite, SuiteGrid, TheoremId, ALL_THEOREMS};
use crate::output::{self, numbers_csv, polynomials_csv, to_json, ExpandDoc, ParamsDoc, VerifyDoc};
use crate::rat::{parse_rat, Rat};

#[derive(Parser, Debug)]
#[command(
    name = "shefferlab",
    about = "Exact tables and identity verification for Daehee-type polynomial families",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a family's polynomials (or numbers) up to degree n.
    Expand(ExpandArgs),
    /// Check theorem identities over a parameter grid and report results.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    /// Family tag, e.g. daehee_first_barnes or bernoulli_number.
    #[arg(long)]
    pub family: String,
    /// Highest index n to expand.
    #[arg(long)]
    pub n: usize,
    /// Barnes parameters as comma-separated rationals, e.g. 1/2,3.
    #[arg(long)]
    pub a: Option<String>,
    /// Frobenius-Euler lambda as a rational, e.g. -1 or 1/2.
    #[arg(long)]
    pub lambda: Option<String>,
    /// Order s for the higher-order families.
    #[arg(long)]
    pub s: Option<u32>,
    /// Order r for the order-r Daehee families.
    #[arg(long)]
    pub r: Option<u32>,
    /// Evaluate each polynomial at this rational instead of printing
    /// coefficients.
    #[arg(long = "x-eval")]
    pub x_eval: Option<String>,
    /// Output format: json or csv.
    #[arg(long, default_value = "json")]
    pub format: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// "all" or a comma-separated list of theorem tags.
    #[arg(long)]
    pub theorems: String,
    /// Highest index n in the grid.
    #[arg(long = "n-max")]
    pub n_max: usize,
    /// Parameter preset: default or minimal.
    #[arg(long, default_value = "default")]
    pub preset: String,
    /// Output format (json only).
    #[arg(long, default_value = "json")]
    pub format: String,
    /// Write the document to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Entry point used by the binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Expand(args) => cmd_expand(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match outcome {
        Ok(code) => code,
        Err(diagnostic) => {
            eprintln!("error: {diagnostic}");
            2
        }
    }
}

fn order_floor_env() -> Result<Option<usize>, String> {
    match std::env::var("SHEFFERLAB_ORDER") {
        Ok(text) => text
            .trim()
            .parse::<usize>()
            .map(Some)
            .map_err(|_| format!("SHEFFERLAB_ORDER is not a nonnegative integer: {text:?}")),
        Err(_) => Ok(None),
    }
}

fn parse_rat_list(text: &str) -> Result<Vec<Rat>, String> {
    text.split(',')
        .map(|piece| parse_rat(piece).map_err(|e| e.to_string()))
        .collect()
}

fn cmd_expand(args: &ExpandArgs) -> Result<i32, String> {
    let family = FamilyId::from_str(&args.family).map_err(|e| e.to_string())?;
    if !matches!(args.format.as_str(), "json" | "csv") {
        return Err(format!(
            "unknown format {:?} (expected json or csv)",
            args.format
        ));
    }
    let a = match &args.a {
        Some(text) => parse_rat_list(text)?,
        None => Vec::new(),
    };
    let lambda = args
        .lambda
        .as_deref()
        .map(parse_rat)
        .transpose()
        .map_err(|e| e.to_string())?;
    let params = FamilyParams {
        a,
        lambda,
        s: args.s,
        r: args.r,
    };
    let x_eval = args
        .x_eval
        .as_deref()
        .map(parse_rat)
        .transpose()
        .map_err(|e| e.to_string())?;

    let n = args.n;
    let working = order_floor_env()?.unwrap_or(n + 2);

    let mut doc = ExpandDoc {
        schema_version: output::SCHEMA_VERSION.to_string(),
        family: family.tag().to_string(),
        params: ParamsDoc {
            a: output::rat_strings(&params.a),
            lambda: params.lambda.as_ref().map(Rat::to_string),
            s: params.s,
            r: params.r,
        },
        n_max: n,
        x_eval: x_eval.as_ref().map(Rat::to_string),
        polynomials: None,
        numbers: None,
    };

    let text = if family.is_number_family() {
        if x_eval.is_some() {
            return Err("--x-eval applies only to polynomial families".into());
        }
        let numbers = family_numbers_at(family, &params, n, working).map_err(|e| e.to_string())?;
        match args.format.as_str() {
            "csv" => numbers_csv(&numbers),
            _ => {
                doc.numbers = Some(output::rat_strings(&numbers));
                to_json(&doc)
            }
        }
    } else {
        let polys =
            family_polynomials_at(family, &params, n, working).map_err(|e| e.to_string())?;
        match x_eval {
            Some(point) => {
                let values: Vec<Rat> = polys.iter().map(|p| p.eval(&point)).collect();
                match args.format.as_str() {
                    "csv" => numbers_csv(&values),
                    _ => {
                        doc.numbers = Some(output::rat_strings(&values));
                        to_json(&doc)
                    }
                }
            }
            None => match args.format.as_str() {
                "csv" => polynomials_csv(&polys),
                _ => {
                    doc.polynomials = Some(polys.iter().map(output::poly_strings).collect());
                    to_json(&doc)
                }
            },
        }
    };
    print!("{text}");
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32, String> {
    if args.format != "json" {
        return Err(format!(
            "unknown format {:?} (verify emits json)",
            args.format
        ));
    }
    let theorems: Vec<TheoremId> = if args.theorems == "all" {
        ALL_THEOREMS.to_vec()
    } else {
        args.theorems
            .split(',')
            .map(|tag| TheoremId::from_str(tag.trim()).map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?
    };
    let mut grid = match args.preset.as_str() {
        "default" => SuiteGrid::default_grid(theorems, args.n_max),
        "minimal" => SuiteGrid::minimal_grid(theorems, args.n_max),
        other => return Err(format!("unknown preset {other:?} (default or minimal)")),
    };
    grid.order_floor = Some(order_floor_env()?.unwrap_or(args.n_max + 2));

    let (reports, summary) = verify_suite(&grid).map_err(|e| e.to_string())?;
    let doc = VerifyDoc::new(
        grid.theorems.iter().map(|t| t.tag().to_string()).collect(),
        args.n_max,
        args.preset.clone(),
        &reports,
        summary,
    );
    let text = to_json(&doc);
    match &args.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {path:?}: {e}"))?,
        None => print!("{text}"),
    }
    Ok(if summary.failed == 0 { 0 } else { 1 })
}
