use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tdamarket::config::{parse_max_scale, DEFAULT_WINDOW};
use tdamarket::{pipeline, OutputFormat, PipelineError, RunConfig};
use tdamarket_core::norms::MaxScale;

#[derive(Parser, Debug)]
#[command(
    name = "tdamarket",
    version,
    about = "Topological stability indicators (L0, L1, C1) for price series"
)]
struct Cli {
    /// Log verbosity: error, warn, info, debug or trace
    #[arg(long, global = true, default_value = "warn")]
    log_level: log::LevelFilter,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the L0, L1 and C1 series over sliding windows
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output path, `-` for stdout
        #[arg(long, default_value = "-")]
        out: PathBuf,
        /// Also write per-asset min-max normalized prices here
        #[arg(long)]
        normalized_out: Option<PathBuf>,
    },
    /// Dump the dimension 0 and 1 persistence diagrams of every window
    Diagram {
        #[command(flatten)]
        input: InputArgs,
        /// Output path, `-` for stdout
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Price CSVs: timestamp in the first column, one asset per further column
    #[arg(long, required = true, num_args = 1..)]
    input: Vec<PathBuf>,
    /// Window length in return steps
    #[arg(long, default_value_t = DEFAULT_WINDOW)]
    window: usize,
    /// Asset columns to use (default: all)
    #[arg(long, num_args = 1..)]
    assets: Option<Vec<String>>,
    /// Largest Rips scale, or `auto` for each window's diameter
    #[arg(long, default_value = "auto", value_parser = parse_max_scale)]
    max_scale: MaxScale,
    /// Worker threads (default: one per core)
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl InputArgs {
    fn config(self) -> RunConfig {
        RunConfig {
            inputs: self.input,
            window: self.window,
            assets: self.assets,
            max_scale: self.max_scale,
            threads: self.threads,
            ..RunConfig::default()
        }
    }
}

fn execute(command: Command) -> Result<(), PipelineError> {
    match command {
        Command::Analyze {
            input,
            format,
            out,
            normalized_out,
        } => {
            let config = RunConfig {
                format: match format {
                    Format::Csv => OutputFormat::Csv,
                    Format::Json => OutputFormat::Json,
                },
                out,
                normalized_out,
                ..input.config()
            };
            pipeline::run(&config)?;
            Ok(())
        }
        Command::Diagram { input, out } => {
            let bytes = pipeline::diagrams(&input.config())?;
            tdamarket::emit::write_atomic(&out, &bytes)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    env_logger::Builder::new()
        .filter_level(cli.log_level)
        .format_timestamp(None)
        .init();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
