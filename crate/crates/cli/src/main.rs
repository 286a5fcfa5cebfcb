use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use walsh::enumerate::{
    crown_table, projective_planar_table, toroidal_core_table, toroidal_table, CountTable,
    PlanarNetworkData, VertexCountTable,
};
use walsh::verify::{self, Suite};
use walsh::Error;

const CORES_LIMIT: u32 = 64;

/// Unlabelled enumeration of K3,3-free toroidal and projective-planar graphs.
#[derive(Parser)]
#[command(name = "walsh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Oracle,
    Gf,
    Tables,
}

#[derive(Subcommand)]
enum Command {
    /// Toroidal cores by number of vertices.
    Cores {
        #[arg(long, default_value_t = CORES_LIMIT, value_parser = clap::value_parser!(u32).range(1..=CORES_LIMIT as i64))]
        max_n: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Toroidal crowns by vertices and edges.
    Crowns {
        #[arg(long, default_value_t = CORES_LIMIT, value_parser = clap::value_parser!(u32).range(1..=CORES_LIMIT as i64))]
        max_n: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// 2-connected K3,3-free non-planar projective-planar graphs.
    Projective {
        /// Defaults to the largest order the network data supports.
        #[arg(long)]
        max_n: Option<u32>,
        /// Network series file (`network-series v1`) replacing the bundled data.
        #[arg(long)]
        networks: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// 2-connected K3,3-free toroidal graphs that are not projective-planar.
    Toroidal {
        /// Defaults to the largest order the network data supports.
        #[arg(long)]
        max_n: Option<u32>,
        /// Network series file (`network-series v1`) replacing the bundled data.
        #[arg(long)]
        networks: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run a self-check suite.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OutOfRange { .. } | Error::Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn load_networks(path: Option<&PathBuf>) -> Result<PlanarNetworkData, Failure> {
    match path {
        None => Ok(PlanarNetworkData::embedded()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display())))?;
            PlanarNetworkData::parse(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
        }
    }
}

fn render_counts(table: &CountTable, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Plain => {
            out.push_str("n m count\n");
            for r in &table.rows {
                out.push_str(&format!("{} {} {}\n", r.n, r.m, r.count));
            }
        }
        Format::Csv => {
            out.push_str("n,m,count\n");
            for r in &table.rows {
                out.push_str(&format!("{},{},{}\n", r.n, r.m, r.count));
            }
        }
        Format::Json => {
            out.push_str(&serde_json::to_string_pretty(&table.rows).expect("rows serialize"));
            out.push('\n');
        }
    }
    out
}

fn render_vertex_counts(table: &VertexCountTable, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Plain => {
            out.push_str("n count\n");
            for r in &table.rows {
                out.push_str(&format!("{} {}\n", r.n, r.count));
            }
        }
        Format::Csv => {
            out.push_str("n,count\n");
            for r in &table.rows {
                out.push_str(&format!("{},{}\n", r.n, r.count));
            }
        }
        Format::Json => {
            out.push_str(&serde_json::to_string_pretty(&table.rows).expect("rows serialize"));
            out.push('\n');
        }
    }
    out
}

fn run_verify(suite: SuiteArg) -> ExitCode {
    let suite = match suite {
        SuiteArg::Oracle => Suite::Oracle,
        SuiteArg::Gf => Suite::Gf,
        SuiteArg::Tables => Suite::Tables,
    };
    let checks = verify::run(suite);
    let mut all = true;
    for c in &checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        if c.detail.is_empty() || c.passed {
            println!("{status} {}", c.name);
        } else {
            println!("{status} {}: {}", c.name, c.detail);
        }
        all &= c.passed;
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    println!("{passed}/{} checks passed", checks.len());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Cores { max_n, format } => {
            Ok(render_vertex_counts(&toroidal_core_table(max_n)?, format))
        }
        Command::Crowns { max_n, format } => Ok(render_counts(&crown_table(max_n)?, format)),
        Command::Projective {
            max_n,
            networks,
            format,
        } => {
            let data = load_networks(networks.as_ref())?;
            let max_n = max_n.unwrap_or(5 + data.extent());
            Ok(render_counts(
                &projective_planar_table(max_n, &data)?,
                format,
            ))
        }
        Command::Toroidal {
            max_n,
            networks,
            format,
        } => {
            let data = load_networks(networks.as_ref())?;
            let max_n = max_n.unwrap_or(8 + data.extent());
            Ok(render_counts(&toroidal_table(max_n, &data)?, format))
        }
        Command::Verify { .. } => unreachable!("handled in main"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Verify { suite } = cli.command {
        return run_verify(suite);
    }
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
