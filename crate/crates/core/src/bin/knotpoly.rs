//! Command-line front end.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use knotpoly::conway::{enumerate_rational, parse, FamilySpec, Parity};
use knotpoly::harness::{
    collide, compute_records, factor_scan, family_scan, parse_kinds, rational_population, read_population, CountMode,
    Entry, InvariantRecord, LineError,
};

/// Knot and link polynomials from Conway symbols or PD codes.
///
/// Conventions: Alexander in x, normalized to a positive constant term;
/// Jones in t with the right-handed trefoil t + t^3 - t^4; HOMFLY-PT in
/// (v, z) with v^-1 P(L+) - v P(L-) = z P(L0); Kauffman F in (a, z) with
/// F = a^-w L and L(D+) + L(D-) = z (L(D0) + L(Dinf)); Tutte of the
/// checkerboard graph in (x, y); Khovanov as sum of rank t^i q^j plus a torsion key.
#[derive(Parser)]
#[command(name = "knotpoly", version, about, long_about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse each input line and print diagram statistics.
    Parse(InputArgs),
    /// Compute invariants, one JSON record per (link, invariant).
    Invariant(BatchArgs),
    /// Group links with equal invariant values.
    Collide(CollideArgs),
    /// Check that members of a family have distinct values.
    FamilyScan(FamilyArgs),
    /// Report which invariant values factor.
    FactorScan(BatchArgs),
    /// List rational links by crossing number.
    EnumerateRational(EnumerateArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input file, one symbol or PD code per line; `-` or absent reads stdin.
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Population {
    File,
    Rational,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Any,
    Even,
}

#[derive(Args)]
struct BatchArgs {
    input: Option<PathBuf>,
    /// Comma-separated: alexander, jones, homfly, kauffman, tutte, khovanov.
    #[arg(long, default_value = "alexander,jones")]
    kinds: String,
    #[arg(long, value_enum, default_value = "file")]
    population: Population,
    /// Largest crossing number of the rational population.
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct CollideArgs {
    #[command(flatten)]
    batch: BatchArgs,
    /// Count pairs in each group instead of members.
    #[arg(long)]
    pairs: bool,
}

#[derive(Args)]
struct FamilyArgs {
    /// Base Conway symbol.
    symbol: String,
    /// Comma-separated entry positions to enlarge; default is every entry of size at least 2.
    #[arg(long)]
    positions: Option<String>,
    #[arg(long, default_value_t = 4)]
    k_max: u32,
    #[arg(long, value_enum, default_value = "any")]
    parity: ParityArg,
    #[arg(long, default_value = "jones")]
    kinds: String,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        }
        _ => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

fn population(args: &BatchArgs) -> Result<(Vec<Entry>, Vec<LineError>)> {
    Ok(match args.population {
        Population::Rational => (rational_population(args.max_n), Vec::new()),
        Population::File => read_population(&read_input(&args.input)?),
    })
}

fn json_line<T: Serialize>(out: &mut impl Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct ErrorLine<'a> {
    line: usize,
    source: &'a str,
    error: &'a str,
}

fn report_errors(out: &mut impl Write, errors: &[LineError]) -> Result<()> {
    for e in errors {
        json_line(out, &ErrorLine { line: e.line, source: &e.source, error: &e.error })?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ParsedLine {
    source: String,
    n: usize,
    components: usize,
    alternating: bool,
    writhe: i64,
    pd: String,
}

fn run(cli: Cli) -> Result<bool> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut clean = true;
    match cli.command {
        Command::Parse(args) => {
            let (entries, errors) = read_population(&read_input(&args.input)?);
            for e in &entries {
                let d = &e.diagram;
                json_line(
                    &mut out,
                    &ParsedLine {
                        source: e.source.clone(),
                        n: d.crossing_count(),
                        components: d.component_count(),
                        alternating: d.is_alternating(),
                        writhe: d.writhe(),
                        pd: d.to_pd_string(),
                    },
                )?;
            }
            report_errors(&mut out, &errors)?;
            clean = errors.is_empty();
        }
        Command::Invariant(args) => {
            let kinds = parse_kinds(&args.kinds)?;
            let (entries, errors) = population(&args)?;
            let records = compute_records(&entries, &kinds);
            clean = errors.is_empty() && records.iter().all(|r| r.error.is_none());
            match args.format {
                Format::Json => {
                    for r in &records {
                        json_line(&mut out, r)?;
                    }
                    report_errors(&mut out, &errors)?;
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut out);
                    w.write_record(["source", "n", "components", "alternating", "kind", "value", "torsion", "error"])?;
                    for r in &records {
                        w.write_record([
                            r.source.as_str(),
                            &r.n.to_string(),
                            &r.components.to_string(),
                            &r.alternating.to_string(),
                            r.kind.name(),
                            r.value.as_deref().unwrap_or(""),
                            r.torsion.as_deref().unwrap_or(""),
                            r.error.as_deref().unwrap_or(""),
                        ])?;
                    }
                    w.flush()?;
                    for e in &errors {
                        eprintln!("line {}: {}: {}", e.line, e.source, e.error);
                    }
                }
            }
        }
        Command::Collide(args) => {
            let text = match args.batch.population {
                Population::File => Some(read_input(&args.batch.input)?),
                Population::Rational => None,
            };
            // a file of JSON records is grouped as is; anything else is computed first
            let records: Vec<InvariantRecord> = match &text {
                Some(t) if t.trim_start().starts_with('{') => t
                    .lines()
                    .filter(|l| !l.trim().is_empty())
                    .map(serde_json::from_str)
                    .collect::<Result<_, _>>()
                    .context("reading invariant records")?,
                _ => {
                    let kinds = parse_kinds(&args.batch.kinds)?;
                    let (entries, errors) = match &text {
                        Some(t) => read_population(t),
                        None => (rational_population(args.batch.max_n), Vec::new()),
                    };
                    for e in &errors {
                        eprintln!("line {}: {}: {}", e.line, e.source, e.error);
                    }
                    clean = errors.is_empty();
                    compute_records(&entries, &kinds)
                }
            };
            let mode = if args.pairs { CountMode::Pairs } else { CountMode::Members };
            let report = collide(&records, mode);
            match args.batch.format {
                Format::Json => json_line(&mut out, &report)?,
                Format::Csv => write!(out, "{}", report.to_csv())?,
            }
        }
        Command::FamilyScan(args) => {
            let base = parse(&args.symbol)?;
            let spec = match &args.positions {
                Some(p) => {
                    let positions = p
                        .split(',')
                        .map(|s| s.trim().parse::<usize>())
                        .collect::<Result<Vec<_>, _>>()
                        .context("positions")?;
                    FamilySpec::new(base, positions)
                }
                None => FamilySpec::all_selectable(base),
            };
            let parity = match args.parity {
                ParityArg::Any => Parity::Any,
                ParityArg::Even => Parity::Even,
            };
            let report = family_scan(&spec, args.k_max, parity, &parse_kinds(&args.kinds)?)?;
            json_line(&mut out, &report)?;
        }
        Command::FactorScan(args) => {
            let kinds = parse_kinds(&args.kinds)?;
            let (entries, errors) = population(&args)?;
            clean = errors.is_empty();
            for kind in kinds {
                let report = factor_scan(&entries, kind);
                match args.format {
                    Format::Json => json_line(&mut out, &report)?,
                    Format::Csv => {
                        let mut w = csv::Writer::from_writer(&mut out);
                        for l in &report.lines {
                            w.write_record([l.source.as_str(), l.kind.name(), l.status.as_str(), l.content.as_str()])?;
                        }
                        w.flush()?;
                    }
                }
            }
            report_errors(&mut io::stderr(), &errors)?;
        }
        Command::EnumerateRational(args) => {
            #[derive(Serialize)]
            struct Line {
                symbol: String,
                p: u64,
                q: u64,
                n: usize,
                components: usize,
                chiral: bool,
            }
            let mut w = csv::Writer::from_writer(Vec::new());
            for n in 1..=args.max_n {
                for c in enumerate_rational(n) {
                    let line = Line {
                        symbol: c.symbol.to_string(),
                        p: c.p,
                        q: c.q,
                        n,
                        components: c.components(),
                        chiral: c.chiral,
                    };
                    match args.format {
                        Format::Json => json_line(&mut out, &line)?,
                        Format::Csv => w.serialize(&line)?,
                    }
                }
            }
            if args.format == Format::Csv {
                out.write_all(&w.into_inner()?)?;
            }
        }
    }
    out.flush()?;
    Ok(clean)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
