use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use dgn_cli::workspace::Overrides;
use dgn_cli::{
    cmd_compare, cmd_cube, cmd_dk_roundtrip, cmd_fill_horn, cmd_self_test, cmd_stable, cmd_validate, parse_document,
    parse_field, CliError, Format, Report, Workspace, WorkspaceDoc, EXIT_INPUT,
};
use dgn_core::Field;
use dgn_doldkan::SignMode;

/// Exact checks for A∞-categories, their nerves and pretriangulated dg-categories.
#[derive(Parser, Debug)]
#[command(name = "dgn", version)]
struct Cli {
    /// Workspace document (JSON)
    #[arg(long, global = true)]
    doc: Option<PathBuf>,
    /// Seed for every generated instance; overrides the document
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Dold-Kan level cap
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// rational or fp:P
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    /// Alexander-Whitney sign: paper or classical
    #[arg(long = "sign-mode", global = true)]
    sign_mode: Option<SignMode>,
    /// json or text
    #[arg(long, global = true, default_value = "json")]
    format: Format,
    /// Add wall-clock time to the report (makes the output nondeterministic)
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every validator on the declared entities
    Validate,
    /// Fill the inner horn Λⁿ_p of a declared simplex
    FillHorn {
        #[arg(long)]
        simplex: String,
        #[arg(long)]
        p: usize,
    },
    /// Map a declared big-nerve simplex to the small nerve
    Compare {
        #[arg(long)]
        simplex: String,
    },
    /// Decompose the cube [0,1]^{m−1} into simplices
    Cube {
        #[arg(long)]
        m: usize,
    },
    /// Dold-Kan round trip on a declared chain complex
    DkRoundtrip {
        #[arg(long)]
        complex: String,
    },
    /// Stability checks on random maps of a declared chain category
    Stable {
        #[arg(long)]
        category: String,
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
    /// Probe every library operation
    SelfTest,
}

fn load(path: Option<&PathBuf>) -> Result<WorkspaceDoc, CliError> {
    let Some(path) = path else {
        return Ok(WorkspaceDoc::default());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_document(&text)
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let doc = load(cli.doc.as_ref())?;
    let overrides = Overrides { seed: cli.seed, cap: cli.cap, field: cli.field, sign_mode: cli.sign_mode };
    let ws = Workspace::build(&doc, &overrides)?;
    match &cli.command {
        Command::Validate => Ok(cmd_validate(&ws)),
        Command::FillHorn { simplex, p } => cmd_fill_horn(&ws, simplex, *p),
        Command::Compare { simplex } => cmd_compare(&ws, simplex),
        Command::Cube { m } => cmd_cube(&ws, *m),
        Command::DkRoundtrip { complex } => cmd_dk_roundtrip(&ws, complex),
        Command::Stable { category, trials } => cmd_stable(&ws, category, *trials),
        Command::SelfTest => Ok(cmd_self_test(&ws)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_millis());
            }
            print!("{}", report.render(cli.format));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
