use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use phialg_cli::{parse_spec, parse_subspace, run_command, run_report, CliError, Command, ModuleChoice, Report, ReportOptions};
use phialg_core::Side;

#[derive(Parser, Debug)]
#[command(name = "phialg", version, about = "Exact verification reports for phi-algebras")]
struct Cli {
    /// Spec file: {"dim": n, "phi": [["re","im"], ...], "name": ..., "norm_check": ...}
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Refuse specs above this dimension.
    #[arg(long, global = true, default_value_t = phialg_cli::DEFAULT_MAX_DIM)]
    max_dim: usize,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run every check and emit the full claim report.
    Report,
    /// dim H¹(A, A^(K)).
    H1 {
        #[arg(long)]
        dual: usize,
    },
    /// Bases of Z¹ and B¹ for the regular module or the K-th dual.
    Derivations {
        #[arg(long, value_parser = clap::value_parser!(ModuleChoice), default_value = "regular")]
        module: ModuleChoice,
    },
    /// Arens products and the bidual tower.
    Arens {
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Jacobson radical via the trace form.
    Radical,
    Multipliers {
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Classify a subspace given as {"basis": [[["re","im"], ...], ...]}.
    Ideals {
        #[arg(long)]
        subspace: PathBuf,
    },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let path = cli.input.as_ref().ok_or_else(|| CliError::Domain("--input <path> is required".into()))?;
    let spec = parse_spec(&read(path)?)?;
    let options = ReportOptions { max_dim: cli.max_dim, ..Default::default() };
    let command = match &cli.command {
        Cmd::Report => return run_report(&spec, &options),
        Cmd::H1 { dual } => Command::H1 { dual: *dual },
        Cmd::Derivations { module } => Command::Derivations { module: *module },
        Cmd::Arens { depth } => Command::Arens { depth: *depth },
        Cmd::Radical => Command::Radical,
        Cmd::Multipliers { side } => Command::Multipliers {
            side: match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            },
        },
        Cmd::Ideals { subspace } => {
            if spec.dim > cli.max_dim {
                return Err(CliError::ResourceCap(format!("dim {} exceeds --max-dim {}", spec.dim, cli.max_dim)));
            }
            Command::Ideals { subspace: parse_subspace(&read(subspace)?, spec.dim)? }
        }
    };
    run_command(&spec, &command, &options)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => print!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("phialg: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
