//! `canstrat`: canonical stratification of simplicial complexes.

mod bench;
mod report;

use std::fs;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use canstrat_core::generators::{maximal_simplices, Family};
use canstrat_core::{
    canonical_stratification, format_simplices, parse_input, verify_with_oracle,
    SimplicialComplex,
};

#[derive(Parser)]
#[command(
    name = "canstrat",
    version,
    about = "Canonical stratification of finite simplicial complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Stratify a complex read from FILE
    Run {
        /// Input file: one simplex per line, whitespace-separated vertex
        /// ids, `#` comments
        file: PathBuf,
        /// Output format
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Include the strata poset relations (json only)
        #[arg(long)]
        poset: bool,
        /// Include hom-set component counts per poset relation (json only)
        #[arg(long)]
        hom: bool,
        /// Drop the link-connectivity requirement from the
        /// codimension-2/3 membership tests
        #[arg(long)]
        no_strict: bool,
        /// Replay the result against the direct homology-sphere oracle;
        /// exit 2 on the first divergence
        #[arg(long)]
        oracle: bool,
        /// Write the report here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a generated complex in the input format
    Gen {
        /// Family name, e.g. sphere2, ball3, two-circles
        family: String,
        /// Subdivision level or simplex dimension
        #[arg(short = 'k', long = "level", default_value_t = 0)]
        level: usize,
        /// Write here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time stratification across generator levels
    Bench {
        /// Family name
        family: String,
        /// Inclusive level range, e.g. 2..6
        #[arg(long)]
        levels: String,
        /// Timed runs per level
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Farm trials out to worker threads
        #[arg(long)]
        parallel: bool,
        /// Also write the JSON report here
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match dispatch(Cli::parse().command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Run { file, format, poset, hom, no_strict, oracle, output } => {
            run(file, format, poset, hom, !no_strict, oracle, output)
        }
        Command::Gen { family, level, output } => gen(&family, level, output),
        Command::Bench { family, levels, trials, parallel, output } => {
            run_bench_command(&family, &levels, trials, parallel, output)
        }
    }
}

fn write_out(output: Option<PathBuf>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => fs::write(&path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run(
    file: PathBuf,
    format: Format,
    poset: bool,
    hom: bool,
    strict: bool,
    oracle: bool,
    output: Option<PathBuf>,
) -> Result<ExitCode, String> {
    let started = Instant::now();
    let text =
        fs::read_to_string(&file).map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    let tuples = parse_input(&text).map_err(|e| e.to_string())?;
    let parse_ms = started.elapsed().as_secs_f64() * 1e3;

    let build_started = Instant::now();
    let complex = SimplicialComplex::build(&tuples).map_err(|e| e.to_string())?;
    let build_ms = build_started.elapsed().as_secs_f64() * 1e3;

    let stratify_started = Instant::now();
    let s = canonical_stratification(complex, strict);
    let stratify_ms = stratify_started.elapsed().as_secs_f64() * 1e3;

    if oracle {
        if let Err(divergence) = verify_with_oracle(&s) {
            eprintln!("{divergence}");
            return Ok(ExitCode::from(2));
        }
    }

    let rendered = match format {
        Format::Tsv => report::render_tsv(&s),
        Format::Json => {
            let timings = report::Timings {
                parse_ms,
                build_ms,
                stratify_ms,
                total_ms: started.elapsed().as_secs_f64() * 1e3,
            };
            let run_report = report::build_run_report(&s, poset, hom, timings);
            let mut json = serde_json::to_string_pretty(&run_report)
                .map_err(|e| format!("cannot serialize report: {e}"))?;
            json.push('\n');
            json
        }
    };
    write_out(output, &rendered)?;
    Ok(ExitCode::SUCCESS)
}

fn lookup_family(name: &str) -> Result<Family, String> {
    Family::from_name(name).ok_or_else(|| {
        let known: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("unknown family {name:?}; known families: {}", known.join(", "))
    })
}

fn gen(family: &str, level: usize, output: Option<PathBuf>) -> Result<ExitCode, String> {
    let family = lookup_family(family)?;
    let maximal = maximal_simplices(family, level).map_err(|e| e.to_string())?;
    let mut text = format!("# {} level {level}\n", family.name());
    text.push_str(&format_simplices(&maximal));
    write_out(output, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn parse_levels(range: &str) -> Result<RangeInclusive<usize>, String> {
    let err = || format!("levels must look like A..B, got {range:?}");
    let (a, b) = range.split_once("..").ok_or_else(err)?;
    let a: usize = a.trim().parse().map_err(|_| err())?;
    let b: usize = b.trim().parse().map_err(|_| err())?;
    if a > b {
        return Err(format!("empty level range {range:?}"));
    }
    Ok(a..=b)
}

fn run_bench_command(
    family: &str,
    levels: &str,
    trials: usize,
    parallel: bool,
    output: Option<PathBuf>,
) -> Result<ExitCode, String> {
    let family = lookup_family(family)?;
    let levels = parse_levels(levels)?;
    if trials == 0 {
        return Err("at least one trial is required".into());
    }
    let bench_report =
        bench::run_bench(family, levels, trials, parallel).map_err(|e| e.to_string())?;
    print!("{}", report::render_bench_table(&bench_report));
    let mut json = serde_json::to_string_pretty(&bench_report)
        .map_err(|e| format!("cannot serialize report: {e}"))?;
    json.push('\n');
    match output {
        Some(path) => write_out(Some(path), &json)?,
        None => print!("{json}"),
    }
    Ok(ExitCode::SUCCESS)
}
