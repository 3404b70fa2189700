mod commands;
mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::Scope;
use config::{Config, OutputFormat, Overrides};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] altext::Error),
}

#[derive(Parser)]
#[command(name = "altext", version, about = "Exact checks for U+_q and its alternating central extension")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Largest generator index in relation checks and centrality checks.
    #[arg(long, global = true)]
    max_index: Option<u32>,
    /// Largest total degree; sum relations are checked for n up to half of it.
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    /// Truncation degree of operator series, in each variable.
    #[arg(long, global = true)]
    truncation: Option<usize>,
    #[arg(long, global = true, value_enum)]
    output_format: Option<OutputFormat>,
    /// TOML file with the same settings; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check relation residuals.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        scope: Scope,
    },
    /// Print the graded dimension matrix of the central extension.
    Dims {
        #[arg(long, default_value_t = 6)]
        max: u32,
    },
    /// Rewrite an expression into ordered monomials.
    NormalForm { expr: String },
    /// Show the central element Zvee_n and check that it commutes with the generators.
    Central { n: u32 },
    /// Dump the reduction rule table as JSON.
    Rules {
        #[arg(long = "table-index", default_value_t = commands::RULE_INDEX)]
        table_index: u32,
    },
}

fn config(g: &GlobalArgs) -> Result<Config, CliError> {
    let file = g.config.as_deref().map(Overrides::from_file).transpose()?;
    let flags = Overrides {
        max_index: g.max_index,
        max_degree_sum: g.max_degree,
        truncation: g.truncation,
        output_format: g.output_format,
    };
    config::resolve(file.as_ref(), &flags)
}

fn run(cli: &Cli) -> Result<commands::Outcome, CliError> {
    let c = config(&cli.global)?;
    let f = c.output_format;
    Ok(match &cli.command {
        Command::Verify { scope } => {
            let r = commands::verify(*scope, &c)?;
            commands::Outcome { output: commands::render_verify(&r, f), pass: r.pass }
        }
        Command::Dims { max } => {
            commands::Outcome { output: commands::render_dims(&commands::dims(*max), f), pass: true }
        }
        Command::NormalForm { expr } => {
            let r = commands::normal_form_cmd(expr)?;
            commands::Outcome { output: commands::render_normal_form(&r, f), pass: true }
        }
        Command::Central { n } => {
            let r = commands::central(*n, &c)?;
            commands::Outcome { output: commands::render_central(&r, f), pass: r.pass }
        }
        Command::Rules { table_index } => commands::Outcome { output: commands::rules_json(*table_index)?, pass: true },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not an identity failure.
            let _ = stdout.write_all(out.output.as_bytes());
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
