use std::path::PathBuf;
use std::process::ExitCode;

use amalgam_cli::{evaluate, explain::explain, generate_catalog, output, parse, render_script};
use amalgam_core::{with_size_guard, DEFAULT_SIZE_GUARD};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "amalgam", version, about = "Checks statements about amalgamations of finite rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every check in a script and print a report table.
    Check {
        file: PathBuf,
        /// Also write the reports as JSON to this file.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Largest ring order any construction may build.
        #[arg(long, default_value_t = DEFAULT_SIZE_GUARD)]
        guard: usize,
        /// Accepted for symmetry with `catalog`; evaluation is deterministic.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the generated instance catalog as a script.
    Catalog {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest amalgam order to include.
        #[arg(long, default_value_t = 256)]
        budget: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the statement a check verifies.
    Explain { check: String },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Command::Check { file, json, guard, seed: _ } => check(&file, json.as_deref(), guard),
        Command::Catalog { seed, budget, out } => {
            let script = generate_catalog(seed, budget);
            if script.is_empty() {
                eprintln!("warning: budget {budget} is below the smallest instance; the catalog is empty");
            }
            match std::fs::write(&out, render_script(&script)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", out.display());
                    ExitCode::from(2)
                }
            }
        }
        Command::Explain { check } => match explain(&check) {
            Some(text) => {
                println!("{check}: {text}");
                ExitCode::SUCCESS
            }
            None => {
                eprintln!("error: unknown check `{check}`");
                ExitCode::from(2)
            }
        },
    }
}

fn check(file: &std::path::Path, json: Option<&std::path::Path>, guard: usize) -> ExitCode {
    let src = match std::fs::read_to_string(file) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    let script = match parse(&src) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}:{e}", file.display());
            return ExitCode::from(2);
        }
    };
    let reports = match with_size_guard(guard, || evaluate(&script)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{}:{e}", file.display());
            return ExitCode::from(2);
        }
    };
    print!("{}", output::render_table(&reports));
    if let Some(path) = json {
        if let Err(e) = std::fs::write(path, output::to_json(&reports)) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if output::any_failed(&reports) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
