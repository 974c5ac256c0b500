use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use semica_cli::spec::parse_range;
use semica_cli::{emit_report, example, examples_catalog, parse_spec_in, run_job, CliError, Format, JobSpec, Overrides};

/// Cellular automata over semigroups: Garden-of-Eden audits, entropy traces,
/// boundary regions and tilings on finite windows.
#[derive(Parser)]
#[command(name = "semica", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Maximum number of assignments one search may enumerate.
    #[arg(long, global = true)]
    budget: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Restrict the job to windows n1..n2 (inclusive).
    #[arg(long, global = true, value_name = "N1..N2", value_parser = window_range)]
    windows: Option<(usize, usize)>,

    /// Background symbol for erasable-pair searches.
    #[arg(long, global = true)]
    background: Option<u8>,

    /// Worker threads for enumeration; results do not depend on this.
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a job spec file.
    Run { spec: PathBuf },
    /// Run a built-in example.
    Example { name: String },
    /// List the built-in examples.
    ListExamples,
}

fn window_range(s: &str) -> Result<(usize, usize), String> {
    parse_range(s).ok_or_else(|| format!("`{s}` is not a range n1..n2"))
}

fn load(cli: &Cli) -> Result<Option<JobSpec>, CliError> {
    Ok(match &cli.command {
        Command::Run { spec } => {
            let text = std::fs::read_to_string(spec).map_err(|source| CliError::Io {
                path: spec.clone(),
                source,
            })?;
            let base = spec.parent().unwrap_or(Path::new("."));
            Some(parse_spec_in(&text, base)?)
        }
        Command::Example { name } => Some(example(name).ok_or_else(|| CliError::UnknownExample(name.clone()))?.spec()),
        Command::ListExamples => None,
    })
}

fn execute(cli: &Cli) -> Result<bool, CliError> {
    let Some(mut spec) = load(cli)? else {
        for e in examples_catalog() {
            println!("{:<26} {}", e.name, e.summary);
        }
        return Ok(true);
    };
    spec.apply(&Overrides {
        budget: cli.budget,
        windows: cli.windows,
        background: cli.background,
        workers: cli.workers,
    })?;
    let outcome = run_job(&spec)?;
    let report = emit_report(&spec, &outcome, cli.format);
    match &spec.output {
        Some(path) => std::fs::write(path, &report).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?,
        None => print!("{report}"),
    }
    Ok(outcome.partial.is_none())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("semica: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
