use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Records,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "ubdkit", version, about = "Exact expansions and unbounded-denominator checks for level 11")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Clone, Debug, Args)]
pub struct GlobalArgs {
    /// Output layout. Rationals are always printed as p/q.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
    /// Series cache directory (default: ~/.cache/ubdkit).
    #[arg(long, global = true, env = "UBDKIT_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Neither read nor write the series cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Expand an eta quotient such as "1:2,13:-2" in w = q^(1/width).
    Eta {
        quotient: String,
        #[arg(long, default_value_t = 1)]
        width: u32,
        #[arg(long, default_value_t = 20)]
        terms: usize,
    },
    /// Cusp expansions of x and y on X0(11).
    ExpandXy {
        #[arg(long, default_value_t = 20)]
        terms: usize,
    },
    /// Character groups of index 2 or 5 and their generator functions.
    Catalog {
        #[arg(long)]
        index: u32,
        /// Series coefficients shown per entry.
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Run the p-th root criterion on a named entry or a series file.
    Detect {
        #[arg(long, conflicts_with = "series_file", required_unless_present = "series_file")]
        entry: Option<String>,
        #[arg(long)]
        series_file: Option<PathBuf>,
        /// Defaults to the root degree.
        #[arg(long)]
        prime: Option<u64>,
        /// Defaults to the entry's natural root degree.
        #[arg(long)]
        root: Option<u32>,
        #[arg(long, default_value_t = 300)]
        terms: usize,
    },
    /// Count sublattice triples of index below X.
    Census {
        #[arg(long)]
        xmax: u64,
        /// Fixed lattice (s,u,v) for the join experiment.
        #[arg(long)]
        b: Option<String>,
    },
    /// Detector verdicts for the index-2 and index-5 catalogs.
    Report {
        /// Restrict to one index.
        #[arg(long)]
        index: Option<u32>,
        #[arg(long, default_value_t = 300)]
        terms: usize,
    },
}

/// A validated invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub cache_dir: Option<PathBuf>,
    pub output_format: OutputFormat,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, String> {
        match &cli.command {
            Command::Eta { width: 0, .. } => return Err("--width must be positive".into()),
            Command::Catalog { index, .. } | Command::Report { index: Some(index), .. } if ![2, 5].contains(index) => {
                return Err(format!("--index must be 2 or 5, got {index}"));
            }
            Command::Detect { series_file: Some(_), root: None, .. } => {
                return Err("--series-file needs --root".into());
            }
            Command::Detect { root: Some(0), .. } => return Err("--root must be positive".into()),
            Command::Census { xmax, .. } if *xmax < 2 => return Err("--xmax must be at least 2".into()),
            Command::Census { xmax, b: Some(_) } if *xmax < 4 => {
                return Err("--xmax must be at least 4 with --b".into());
            }
            _ => {}
        }
        let cache_dir = if cli.global.no_cache {
            None
        } else {
            cli.global.cache_dir.clone().or_else(|| {
                std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("ubdkit"))
            })
        };
        Ok(RunConfig { command: cli.command, cache_dir, output_format: cli.global.format })
    }
}
