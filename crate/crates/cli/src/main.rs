use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use knotsurgery::pipeline::{geography_sweep, parse_sweep, rows_to_csv, rows_to_json, run_pipeline, RunConfig};
use knotsurgery::{Error, KnotSource};
use knotsurgery_core::manifold::Base;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BaseArg {
    #[value(name = "K3")]
    K3,
    #[value(name = "E2n")]
    E2n,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

/// Build Z_K from a knot, enumerate its basic classes and report.
#[derive(Debug, Parser)]
#[command(name = "knotsurgery", version)]
struct Args {
    /// table:NAME, "braid n: w1 w2 ...", or seifert:PATH
    #[arg(long, required_unless_present = "sweep")]
    knot: Option<String>,
    /// Knot genus; defaults to the degree of the Alexander polynomial
    #[arg(long)]
    genus: Option<u64>,
    #[arg(long, value_enum, ignore_case = true, default_value = "K3")]
    base: BaseArg,
    /// n for the E(2n) base
    #[arg(long, default_value_t = 1)]
    n: u64,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Geography sweep over g1..g2,n1..n2
    #[arg(long, conflicts_with = "knot")]
    sweep: Option<String>,
    /// Cross-check against the Burau route and the brute-force enumerator
    #[arg(long)]
    verify: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Knot table to use instead of the bundled one
    #[arg(long)]
    table: Option<PathBuf>,
}

fn render(args: &Args) -> Result<String, Error> {
    if let Some(sweep) = &args.sweep {
        let (g, n) = parse_sweep(sweep)?;
        let rows = geography_sweep(g, n)?;
        return Ok(match args.format {
            Format::Csv | Format::Text => rows_to_csv(&rows),
            Format::Json => pretty(&rows_to_json(&rows)),
        });
    }
    let knot: KnotSource = args.knot.as_deref().unwrap_or_default().parse()?;
    let base = match args.base {
        BaseArg::K3 => Base::K3,
        BaseArg::E2n if args.n >= 1 => Base::E2n(args.n),
        BaseArg::E2n => return Err(Error::Input("--n must be at least 1".to_string())),
    };
    let cfg = RunConfig { knot, genus: args.genus, base, table: args.table.clone(), verify: args.verify };
    let run = run_pipeline(&cfg)?;
    Ok(match args.format {
        Format::Json => pretty(&run.to_json()),
        Format::Text => run.to_text(),
        Format::Csv => run.to_csv(),
    })
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = render(&args).and_then(|text| match &args.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|source| Error::Io { path: path.display().to_string(), source })
        }
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
