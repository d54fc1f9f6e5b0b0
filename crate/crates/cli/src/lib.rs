//! Command-line front end: reads JSON configs, runs one operation and writes
//! its results into an output directory.

mod commands;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::Value;
use thiserror::Error;

pub use commands::{ApqConfig, DiniConfig, EvalConfig, NormConfig};

/// Environment variable capping the worker thread count.
pub const THREADS_VAR: &str = "MORREYLAB_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "morreylab",
    version,
    about = "Fractional integrals, A(p,q) weights and Morrey/BMO norms on grids"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply an operator to a sampled function; writes values.csv and meta.json.
    Eval {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate an Lp, weak Lp, Morrey, BMO or weighted sup norm.
    Norm {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// A(p,q) constant of a weight over a ball family.
    Apq {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Modulus of continuity and Dini integral of a kernel.
    Dini {
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a registered study; the config is merged over its defaults.
    Verify {
        study: String,
        #[arg(long)]
        config: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long)]
    pub out: PathBuf,
    /// Overrides the grid resolution of the config.
    #[arg(long)]
    pub resolution: Option<usize>,
    /// Format of the summary printed on stdout.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{key}: {message}")]
    Config { key: String, message: String },
    #[error(transparent)]
    Domain(#[from] morreylab::Error),
    #[error("{key}: {}: {source}", path.display())]
    Io {
        key: &'static str,
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("tolerance: failed checks {0}")]
    Tolerance(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config { .. } | CliError::Io { .. } => 2,
            CliError::Domain(_) => 3,
            CliError::Tolerance(_) => 4,
        }
    }

    /// The config key (or flag) the error refers to.
    pub fn key(&self) -> String {
        match self {
            CliError::Config { key, .. } => key.clone(),
            CliError::Domain(e) => e.key().to_string(),
            CliError::Io { key, .. } => key.to_string(),
            CliError::Tolerance(_) => "tolerance".into(),
        }
    }

    pub(crate) fn config(key: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Config {
            key: key.into(),
            message: message.into(),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Runs one parsed command and returns the summary printed on stdout. Files
/// are written even when the result is a tolerance failure.
pub fn execute(cli: &Cli) -> CliResult<Value> {
    match &cli.command {
        Command::Eval { config, output } => commands::eval(read_json(config)?, output),
        Command::Norm { config, output } => commands::norm(read_json(config)?, output),
        Command::Apq { config, output } => commands::apq(read_json(config)?, output),
        Command::Dini { config, output } => commands::dini(read_json(config)?, output),
        Command::Verify {
            study,
            config,
            output,
        } => {
            let patch = config.as_deref().map(read_json).transpose()?;
            commands::verify(study, patch, output)
        }
    }
}

/// Sizes the global rayon pool from [`THREADS_VAR`] when it is set.
pub fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::config(
            THREADS_VAR,
            format!("expected a positive integer, got {raw:?}"),
        )
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::config(THREADS_VAR, e.to_string()))
}

/// Renders a flat summary object for stdout.
pub fn render(summary: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(summary).unwrap_or_default(),
        Format::Csv => {
            let Some(map) = summary.as_object() else {
                return summary.to_string();
            };
            let keys: Vec<&str> = map.keys().map(String::as_str).collect();
            let values: Vec<String> = map
                .values()
                .map(|v| match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect();
            format!("{}\n{}", keys.join(","), values.join(","))
        }
    }
}

fn read_json(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        key: "config",
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::config("config", format!("{}: {e}", path.display())))
}

/// Deserializes with the path of the offending field as the error key.
pub(crate) fn from_value<T: DeserializeOwned>(value: Value) -> CliResult<T> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        let key = if path == "." {
            "config".to_string()
        } else {
            path
        };
        CliError::config(key, e.into_inner().to_string())
    })
}

pub(crate) fn write_file(dir: &Path, name: &str, contents: &str) -> CliResult<()> {
    let io = |source| CliError::Io {
        key: "out",
        path: dir.join(name),
        source,
    };
    fs::create_dir_all(dir).map_err(io)?;
    fs::write(dir.join(name), contents).map_err(io)
}
