use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use l2mcg::verify::{self, Budget, DimsRow, Report, DEFAULT_SEED, MAX_GENUS};
use l2mcg::{parse_expr, Error, Status, Suite, Tau1Engine};
use serde::Serialize;

mod genus;
mod output;

use genus::GenusRange;

#[derive(Parser)]
#[command(
    name = "l2mcg",
    version,
    about = "Mod 2 Johnson homomorphism and rank checks for level 2 mapping class groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites over a range of genera.
    Verify {
        /// `N` or `A..B` (inclusive), within 2..64.
        #[arg(short, long)]
        genus: GenusRange,
        /// Comma-separated suite names, or `all`.
        #[arg(short, long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Include wall-clock times (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Evaluate tau_1 on a mapping class expression.
    Tau1 {
        #[arg(short, long)]
        genus: usize,
        /// e.g. "Y(1,2)^-1 * Y(2,1)" or "push(g1 g2^-1)".
        expr: String,
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Dimension table: formula and computed values side by side.
    Dims {
        #[arg(short, long)]
        genus: GenusRange,
        #[arg(short, long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn sink(out: &Option<PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn verify_cmd(
    genus: GenusRange,
    suite: &str,
    seed: u64,
    format: Format,
    out: &Option<PathBuf>,
    timing: bool,
) -> anyhow::Result<bool> {
    let suites = Suite::parse_list(suite)?;
    let genera: Vec<usize> = genus.iter().collect();
    let mut reports: Vec<Report> = verify::run_many(&genera, &suites, seed, &Budget::default())?;
    if !timing {
        for r in &mut reports {
            r.wall_ms = None;
        }
    }
    let mut w = sink(out)?;
    match format {
        Format::Text => output::reports_text(&mut w, &reports)?,
        Format::Json => output::reports_json(&mut w, seed, &reports)?,
        Format::Csv => output::reports_csv(&mut w, &reports)?,
    }
    w.flush()?;
    Ok(reports.iter().all(|r| r.status() != Status::Fail))
}

#[derive(Serialize)]
struct Tau1Json {
    genus: usize,
    expr: String,
    /// Monomials `[i, j, k]` (1-based) with coefficient 1, lexicographic.
    support: Vec<Vec<usize>>,
    /// 0-based flat coordinates `(i-1) g^2 + (j-1) g + (k-1)` of the support.
    coordinates: Vec<usize>,
    derived_closed_form: bool,
}

fn tau1_cmd(genus: usize, text: &str, format: Format) -> anyhow::Result<()> {
    if !(2..=MAX_GENUS).contains(&genus) {
        bail!("genus must be within 2..={MAX_GENUS}");
    }
    let x = parse_expr(genus, text).map_err(|e| {
        if let Error::Parse { pos, .. } = e {
            eprintln!("  {text}\n  {}^", " ".repeat(pos));
        }
        e
    })?;
    let t = Tau1Engine::new(genus)?.tau1(&x)?;
    if t.uses_derived_closed_form {
        eprintln!("note: uses the derived closed form for T2(i,j,k,l)");
    }
    let mut w = io::stdout().lock();
    match format {
        Format::Text => writeln!(w, "{}", t.value)?,
        Format::Json => {
            let payload = Tau1Json {
                genus,
                expr: x.to_string(),
                support: t.value.monomials(),
                coordinates: t.value.coords().ones().collect(),
                derived_closed_form: t.uses_derived_closed_form,
            };
            serde_json::to_writer_pretty(&mut w, &payload)?;
            writeln!(w)?;
        }
        Format::Csv => {
            writeln!(w, "i,j,k")?;
            for m in t.value.monomials() {
                writeln!(w, "{},{},{}", m[0], m[1], m[2])?;
            }
        }
    }
    Ok(())
}

fn dims_cmd(genus: GenusRange, format: Format, out: &Option<PathBuf>) -> anyhow::Result<bool> {
    if genus.start() < 3 {
        bail!("the dimension table needs genus >= 3");
    }
    let genera: Vec<usize> = genus.iter().collect();
    let rows: Vec<DimsRow> = verify::dims_table(&genera)?;
    let mut w = sink(out)?;
    match format {
        Format::Text => output::dims_text(&mut w, &rows)?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &rows)?;
            writeln!(w)?;
        }
        Format::Csv => output::dims_csv(&mut w, &rows)?,
    }
    w.flush()?;
    Ok(rows.iter().all(|r| !r.has_mismatch()))
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        let kind = c
            .downcast_ref::<io::Error>()
            .map(io::Error::kind)
            .or_else(|| c.downcast_ref::<serde_json::Error>()?.io_error_kind());
        kind == Some(io::ErrorKind::BrokenPipe)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            genus,
            suite,
            seed,
            format,
            out,
            timing,
        } => verify_cmd(genus, &suite, seed, format, &out, timing),
        Command::Tau1 {
            genus,
            expr,
            format,
        } => tau1_cmd(genus, &expr, format).map(|()| true),
        Command::Dims { genus, format, out } => dims_cmd(genus, format, &out),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
